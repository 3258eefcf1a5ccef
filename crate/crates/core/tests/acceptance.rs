//! Acceptance suite: one test per published claim group. Each test prints
//! a PASS line with the quantities it verified; expensive sweeps are
//! shared between tests through lazy statics.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::LazyLock;
use strengthlab::{
    arrows_fk, bounds, canonical_form, contains_subgraph, enumerate_graphs, enumerate_partitioned,
    graph6_encode, ramsey, ramsey_fk, strength, strength_bruteforce, verify, Graph, PatternQuery,
    RamseyResult,
};

/// Exhaustively settled Ramsey pairs within the fast budget (orders <= 9).
static SMALL_PAIRS: LazyLock<Vec<RamseyResult>> = LazyLock::new(|| {
    [
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 3),
        (3, 4),
        (3, 5),
        (4, 4),
        (4, 5),
    ]
    .iter()
    .map(|&(s, t)| ramsey_fk(s, t, 10).expect("within budget"))
    .collect()
});

struct HeavyOrderTen {
    /// classes of order 10 (every one checked to contain F_5 or have F_5
    /// in its complement)
    classes: u64,
    /// violations of the (5,5) arrowing property (must stay empty)
    arrows_5_5_violations: u64,
    /// a counterexample to (4,6) arrowing at order 10
    counterexample_4_6: Graph,
    /// non-arrowing verdict for (5,5) one order below
    at_9: strengthlab::ArrowsOutcome,
}

/// One fused pass over the 12,005,168 classes of order 10 evaluating the
/// (5,5) and (4,6) arrowing predicates together, split over parallel
/// shards of the public partitioned enumeration.
static HEAVY: LazyLock<HeavyOrderTen> = LazyLock::new(|| {
    use rayon::prelude::*;
    const SHARDS: usize = 16;
    let per_shard: Vec<(u64, u64, Option<Graph>)> = (0..SHARDS)
        .into_par_iter()
        .map(|shard| {
            let f4 = PatternQuery::new(&Graph::fk(4).unwrap());
            let f5 = PatternQuery::new(&Graph::fk(5).unwrap());
            let f6 = PatternQuery::new(&Graph::fk(6).unwrap());
            let mut classes = 0u64;
            let mut violations = 0u64;
            let mut counterexample = None;
            enumerate_partitioned(10, shard, SHARDS, |g| {
                classes += 1;
                let comp = g.complement();
                if !(f5.matches(g) || f5.matches(&comp)) {
                    violations += 1;
                }
                if counterexample.is_none() && !f4.matches(g) && !f6.matches(&comp) {
                    counterexample = Some(g.clone());
                }
                ControlFlow::Continue(())
            })
            .expect("order 10 within range");
            (classes, violations, counterexample)
        })
        .collect();
    let classes = per_shard.iter().map(|r| r.0).sum();
    let arrows_5_5_violations = per_shard.iter().map(|r| r.1).sum();
    let counterexample_4_6 = per_shard
        .iter()
        .find_map(|r| r.2.clone())
        .expect("K_{5,5} is a counterexample, so one exists");
    let at_9 = arrows_fk(9, 5, 5).expect("within budget");
    HeavyOrderTen {
        classes,
        arrows_5_5_violations,
        counterexample_4_6,
        at_9,
    }
});

/// f(n) sweeps for n = 3..=9.
static FMAX: LazyLock<Vec<bounds::FMaxResult>> = LazyLock::new(|| {
    (3..=9)
        .map(|n| bounds::f_max(n).expect("within budget"))
        .collect()
});

fn check_non_arrowing_witness(w: &Graph, s: u32, t: u32, order: usize) {
    assert_eq!(w.order(), order, "witness order for ({s},{t})");
    assert!(
        !contains_subgraph(w, &Graph::fk(s as usize).unwrap()),
        "witness for ({s},{t}) contains F_{s}"
    );
    assert!(
        !contains_subgraph(&w.complement(), &Graph::fk(t as usize).unwrap()),
        "witness complement for ({s},{t}) contains F_{t}"
    );
}

/// Criterion 1: the characterization equals brute force on every
/// nonempty class of order 2 through 7, exactly.
#[test]
fn criterion_1_strength_oracle_equivalence() {
    let expected_nonempty = [1u64, 3, 10, 33, 155, 1043];
    let mut total = 0u64;
    for (n, &expect) in (2..=7).zip(&expected_nonempty) {
        let mut nonempty = 0u64;
        enumerate_graphs(n, |g| {
            if !g.is_edgeless() {
                nonempty += 1;
                let a = strength(g).expect("nonempty");
                let b = strength_bruteforce(g).expect("nonempty");
                assert_eq!(a.value, b.value, "mismatch on {g:?}");
                assert_eq!(
                    a.witness.strength_value(),
                    Some(a.value),
                    "invalid witness on {g:?}"
                );
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(nonempty, expect, "nonempty classes at n={n}");
        total += nonempty;
    }
    assert_eq!(total, 1245);
    println!("[PASS] criterion 1: characterization = brute force on all {total} nonempty classes of orders 2..=7");
}

/// Criterion 2: the published closed-form strength values, exact.
#[test]
fn criterion_2_formula_regressions() {
    let str_of = |g: &Graph| strength(g).unwrap().value;
    assert_eq!(str_of(&Graph::complete_bipartite(1, 2).unwrap()), 4);
    assert_eq!(str_of(&Graph::from_edges(3, &[(1, 2)]).unwrap()), 3);
    let mut checked = 2;
    for s in 2..=5usize {
        for t in s..=5 {
            let g = Graph::complete(s)
                .unwrap()
                .disjoint_union(&Graph::complete(t).unwrap())
                .unwrap();
            assert_eq!(str_of(&g), 2 * (s + t) as u32 - 3, "K_{s} + K_{t}");
            checked += 1;
        }
    }
    for s in 1..=5usize {
        for t in s..=5 {
            let g = Graph::complete_bipartite(s, t).unwrap();
            assert_eq!(str_of(&g), 2 * s as u32 + t as u32, "K_{{{s},{t}}}");
            checked += 1;
        }
    }
    for n in 2..=8usize {
        let g = Graph::complete(n).unwrap();
        assert_eq!(str_of(&g), 2 * n as u32 - 1, "K_{n}");
        // the direct route agrees
        assert_eq!(strength_bruteforce(&g).unwrap().value, 2 * n as u32 - 1);
        checked += 1;
    }
    println!("[PASS] criterion 2: {checked} closed-form strength values reproduced exactly");
}

/// Criterion 3: the small Ramsey table by exhaustive search with
/// non-arrowing witnesses, r(F_5,F_5) = 10 in full, the order-10
/// non-arrowing step of r(F_4,F_6) = 11, and the lower-bound witness for
/// r(F_4,F_7) = 13.
#[test]
fn criterion_3_ramsey_table_reproduction() {
    let expected = [
        (2, 2, 2),
        (2, 3, 3),
        (2, 4, 4),
        (3, 3, 3),
        (3, 4, 5),
        (3, 5, 5),
        (4, 4, 7),
        (4, 5, 9),
    ];
    for (r, &(s, t, v)) in SMALL_PAIRS.iter().zip(&expected) {
        assert_eq!((r.s, r.t), (s, t));
        assert_eq!(r.value, Some(v), "r(F_{s},F_{t})");
        let w = r.witness.as_ref().expect("witness at value-1");
        check_non_arrowing_witness(w, s, t, v as usize - 1);
    }

    // r(F_5, F_5) = 10: non-arrowing at 9, arrowing over every class at 10
    let heavy = &*HEAVY;
    assert!(!heavy.at_9.arrows, "order 9 must not arrow (5,5)");
    check_non_arrowing_witness(heavy.at_9.counterexample.as_ref().unwrap(), 5, 5, 9);
    assert_eq!(heavy.classes, 12_005_168, "order-10 class count");
    assert_eq!(
        heavy.arrows_5_5_violations, 0,
        "every order-10 class arrows (5,5)"
    );

    // r(F_4, F_6) = 11: the formula upper bound plus exhaustive
    // non-arrowing at order 10
    assert_eq!(ramsey::r_f4_formula(6).unwrap(), 11);
    check_non_arrowing_witness(&heavy.counterexample_4_6, 4, 6, 10);

    // r(F_4, F_7) = 13: lower-bound witness only; order-12 enumeration is
    // out of desk scale by design
    let r47 = ramsey_fk(4, 7, 10).unwrap();
    assert_eq!(r47.status, ramsey::RamseyStatus::Bounded);
    assert_eq!((r47.lower, r47.upper), (13, Some(13)));
    assert_eq!(r47.known_value, Some(13));
    let w = r47.witness.as_ref().unwrap();
    check_non_arrowing_witness(w, 4, 7, 12);
    assert_eq!(
        canonical_form(w).unwrap(),
        canonical_form(&Graph::complete_bipartite(6, 6).unwrap()).unwrap(),
        "the construction witness is K_{{6,6}}"
    );

    println!(
        "[PASS] criterion 3: 8 exhaustive values with witnesses; r(F_5,F_5)=10 over {} classes; \
         order-10 non-arrowing for (4,6); r(F_4,F_7)=13 lower-bound witness",
        heavy.classes
    );
}

/// Criterion 4: f(n) for n = 3..=9 by full enumeration and the Ramsey
/// route for n = 4..=12.
#[test]
fn criterion_4_f_table_reproduction() {
    let expected = [7u32, 11, 14, 18, 21, 25, 28];
    for ((n, fm), &expect) in (3..=9).zip(FMAX.iter()).zip(&expected) {
        assert_eq!(fm.value, expect, "f({n}) by enumeration");
        assert_eq!(
            fm.classes_examined,
            strengthlab::CLASS_COUNTS[n - 1],
            "full sweep at n={n}"
        );
        // the witness pair really attains the value
        let (g, comp) = &fm.witness;
        assert_eq!(&g.complement(), comp);
        let sum = strength(g).unwrap().value + strength(comp).unwrap().value;
        assert_eq!(sum, expect, "witness sum at n={n}");
    }
    for (n, &(_, expect)) in (4..=12u32).zip(verify::TABLE2_F[1..].iter()) {
        assert_eq!(
            bounds::f_via_ramsey(n).unwrap().exact_value(),
            Some(expect),
            "f({n}) via Ramsey data"
        );
    }
    // agreement of the two routes where both are exact
    for (n, fm) in (3..=9).zip(FMAX.iter()).skip(1) {
        assert_eq!(
            Some(fm.value),
            bounds::f_via_ramsey(n as u32).unwrap().exact_value(),
            "routes disagree at n={n}"
        );
    }
    println!(
        "[PASS] criterion 4: f(3..=9) by enumeration = {expected:?}; Ramsey route matches for n=4..=12"
    );
}

/// Criterion 5: sigma over [3, 35] matches the published ranges, from the
/// nine classical values plus r(2,t) = t alone.
#[test]
fn criterion_5_sigma_ranges() {
    let mut rows = 0;
    for &(lo, hi, expect) in &verify::TABLE3_SIGMA_RANGES {
        for n in lo..=hi {
            assert_eq!(bounds::sigma(n).unwrap(), expect, "sigma({n})");
            rows += 1;
        }
    }
    assert_eq!(rows, 33);
    assert!(bounds::sigma(2).is_err());
    assert!(bounds::sigma(36).is_err());
    println!("[PASS] criterion 5: sigma_n matches the six published ranges over all 33 orders");
}

/// Criterion 6: every published bounds row, including the perfect-square
/// orders in rho'.
#[test]
fn criterion_6_bounds_table() {
    let rows = bounds::bounds_table(3, 35).unwrap();
    assert_eq!(rows.len(), 33);
    for (row, &(n, rho, rho_prime, upper)) in rows.iter().zip(&verify::TABLE4_BOUNDS) {
        assert_eq!(row.n, n);
        assert_eq!(
            (row.rho, row.rho_prime, row.upper),
            (rho, rho_prime, upper),
            "row n={n}"
        );
    }
    // the rho/rho' crossover exactly as published
    let eq_orders: HashSet<u32> = [21, 22, 25, 26, 30].into_iter().collect();
    for &(n, rho, rho_prime, _) in &verify::TABLE4_BOUNDS {
        if eq_orders.contains(&n) {
            assert_eq!(rho, rho_prime, "expected equality at n={n}");
        } else if n <= 20 || n == 23 || n == 24 {
            assert!(rho > rho_prime, "expected rho > rho' at n={n}");
        } else {
            assert!(rho < rho_prime, "expected rho < rho' at n={n}");
        }
    }
    println!("[PASS] criterion 6: all 33 bounds rows match, perfect squares included");
}

/// Criterion 7: the theorem property suites at order <= 6, the closed
/// forms against computed values, and the f(n) consistency law.
#[test]
fn criterion_7_theorem_suites() {
    let checks = verify::theorem_suite(6).unwrap();
    for c in &checks {
        assert!(c.pass, "{}: {}", c.name, c.details);
    }

    // the star/clique lower bound against every settled pair
    for r in SMALL_PAIRS.iter() {
        let v = r.value.unwrap();
        assert!(
            ramsey::chvatal_fk_lower(r.s, r.t).unwrap() <= v,
            "bound exceeds r(F_{},F_{})",
            r.s,
            r.t
        );
    }
    // ... including r(F_5,F_5) = 10 from the heavy sweep
    assert!(ramsey::chvatal_fk_lower(5, 5).unwrap() <= 10);

    // non-arrowing facts force f(n) lower bounds: for every (a, b)
    // profile of a valid pair, order n fails to arrow
    // (F_{a+1}, F_{b+1}), so f(n) >= 4n - (a+b) - 2 + 2 must hold
    for (n, fm) in (3..=9).zip(FMAX.iter()) {
        for &(a, b) in &fm.fk_pairs {
            let (s, t) = (a + 1, b + 1);
            if s >= 2 && t >= 2 && (s as usize) < n && (t as usize) < n {
                assert!(
                    fm.value >= 4 * n as u32 - (s + t) + 2,
                    "f({n}) misses the non-arrowing bound at ({s},{t})"
                );
            }
        }
    }
    println!(
        "[PASS] criterion 7: theorem suites at order <= 6 ({} checks), bound laws on settled pairs, f-consistency at n <= 9",
        checks.len()
    );
}

/// Criterion 8: enumeration self-check against the labeled dedup oracle
/// plus complement closure.
#[test]
fn criterion_8_enumeration_self_check() {
    let checks = verify::enumeration_suite(7).unwrap();
    for c in &checks {
        assert!(c.pass, "{}: {}", c.name, c.details);
    }
    let counts: Vec<u64> = strengthlab::CLASS_COUNTS[..7].to_vec();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
    println!(
        "[PASS] criterion 8: class counts {counts:?} against the dedup oracle, element-wise to order 6, complement closure to order 7"
    );
}

/// Sandwich and formula-agreement laws on every pair the budget settles:
/// the star/clique bound from below, the classical value from above, and
/// the closed forms for the third-family rows.
#[test]
fn ramsey_sandwich_and_formula_agreement() {
    for r in SMALL_PAIRS.iter() {
        let v = r.value.unwrap();
        assert!(ramsey::chvatal_fk_lower(r.s, r.t).unwrap() <= v);
        if let Some(classical) = ramsey::known_classical(r.s, r.t) {
            assert!(
                v <= classical,
                "r(F_{},F_{}) = {v} exceeds r({},{}) = {classical}",
                r.s,
                r.t,
                r.s,
                r.t
            );
        }
    }
    // exhaustive search matches the r(F_3, F_t) closed form through t = 8
    for t in 6..=8u32 {
        let r = ramsey_fk(3, t, 10).unwrap();
        assert_eq!(
            r.value,
            Some(ramsey::r_f3_formula(t).unwrap()),
            "r(F_3,F_{t})"
        );
        assert!(ramsey::chvatal_fk_lower(3, t).unwrap() <= r.value.unwrap());
        if let Some(classical) = ramsey::known_classical(3, t) {
            assert!(r.value.unwrap() <= classical);
        }
    }
    // ... and the r(F_4, F_t) form where the budget reaches (t <= 5 in
    // full, the non-arrowing half of t = 6 in criterion 3)
    for (r, t) in [(6, 4u32), (7, 5)] {
        assert_eq!(SMALL_PAIRS[r].value, Some(ramsey::r_f4_formula(t).unwrap()));
    }
    println!("[PASS] sandwich and closed-form agreement on every settled pair (t <= 8)");
}

/// The published table emitters stay in lockstep with the raw values.
#[test]
fn table_suite_regression() {
    let checks = verify::table_suite().unwrap();
    for c in &checks {
        assert!(c.pass, "{}: {}", c.name, c.details);
    }
    println!("[PASS] table regressions: {} suites green", checks.len());
}

/// Determinism: the heavy counterexample and small witnesses are stable
/// across repeated runs (different schedules).
#[test]
fn witnesses_are_deterministic() {
    let a = ramsey_fk(4, 4, 10).unwrap();
    let b = ramsey_fk(4, 4, 10).unwrap();
    assert_eq!(
        a.witness.map(|g| graph6_encode(&g)),
        b.witness.map(|g| graph6_encode(&g))
    );
    let fa = bounds::f_max(6).unwrap();
    let fb = bounds::f_max(6).unwrap();
    assert_eq!(graph6_encode(&fa.witness.0), graph6_encode(&fb.witness.0));
    println!("[PASS] witness determinism across repeated runs");
}
