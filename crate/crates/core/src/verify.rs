//! Re-derivation suites: every theorem-shaped claim the crate relies on,
//! checked exhaustively at desk scale, plus regressions against the
//! published tables. The CLI `verify` subcommand prints these; the
//! acceptance tests assert them.

use crate::bounds::{f_via_ramsey, rho, rho_prime, sigma};
use crate::canon::canonical_form;
use crate::enumerate::{enumerate_graphs, enumerate_partitioned, CLASS_COUNTS};
use crate::error::Result;
use crate::graph::Graph;
use crate::ramsey::{chvatal_fk_lower, r_f3_formula, ramsey_fk, ramsey_p3};
use crate::strength::{
    strength, strength_bruteforce, strength_isolated_invariance_check, strength_lower_bound,
    strength_upper_bound_beta,
};
use crate::subgraph::PatternQuery;
use rayon::prelude::*;
use std::collections::HashSet;
use std::ops::ControlFlow;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl Check {
    fn ok(name: &str, details: String) -> Self {
        Check {
            name: name.to_string(),
            pass: true,
            details,
        }
    }

    fn fail(name: &str, details: String) -> Self {
        Check {
            name: name.to_string(),
            pass: false,
            details,
        }
    }

    fn from_violations(name: &str, checked: u64, violations: &[String]) -> Self {
        if violations.is_empty() {
            Check::ok(name, format!("{checked} cases checked"))
        } else {
            Check::fail(
                name,
                format!(
                    "{} violations in {checked} cases; first: {}",
                    violations.len(),
                    violations[0]
                ),
            )
        }
    }
}

pub fn failures(checks: &[Check]) -> usize {
    checks.iter().filter(|c| !c.pass).count()
}

// ---------------------------------------------------------------------------
// published table rows
// ---------------------------------------------------------------------------

/// Small `r(F_s, F_t)` values: `(s, t, r)`.
pub const TABLE1_RFSFT: [(u32, u32, u32); 10] = [
    (2, 2, 2),
    (2, 3, 3),
    (2, 4, 4),
    (3, 3, 3),
    (3, 4, 5),
    (3, 5, 5),
    (4, 4, 7),
    (4, 5, 9),
    (4, 6, 11),
    (4, 7, 13),
];

/// Known `f(n)` values for `n` in `[3, 12]`.
pub const TABLE2_F: [(u32, u32); 10] = [
    (3, 7),
    (4, 11),
    (5, 14),
    (6, 18),
    (7, 21),
    (8, 25),
    (9, 28),
    (10, 32),
    (11, 35),
    (12, 39),
];

/// `sigma_n` over `[3, 35]` as six constant ranges: `(lo, hi, sigma)`.
pub const TABLE3_SIGMA_RANGES: [(u32, u32, u32); 6] = [
    (3, 5, 4),
    (6, 8, 5),
    (9, 17, 6),
    (18, 24, 7),
    (25, 27, 9),
    (28, 35, 10),
];

/// `(n, rho_n, rho'_n, 4n - sigma_n)` for `n` in `[3, 35]`.
pub const TABLE4_BOUNDS: [(u32, u32, u32, u32); 33] = [
    (3, 7, 6, 8),
    (4, 11, 10, 12),
    (5, 14, 12, 16),
    (6, 18, 16, 19),
    (7, 21, 20, 23),
    (8, 25, 22, 27),
    (9, 28, 26, 30),
    (10, 32, 30, 34),
    (11, 35, 34, 38),
    (12, 39, 36, 42),
    (13, 42, 40, 46),
    (14, 46, 44, 50),
    (15, 49, 48, 54),
    (16, 53, 52, 58),
    (17, 56, 54, 62),
    (18, 60, 58, 65),
    (19, 63, 62, 69),
    (20, 67, 66, 73),
    (21, 70, 70, 77),
    (22, 74, 74, 81),
    (23, 77, 76, 85),
    (24, 81, 80, 89),
    (25, 84, 84, 91),
    (26, 88, 88, 95),
    (27, 91, 92, 99),
    (28, 95, 96, 102),
    (29, 98, 100, 106),
    (30, 102, 102, 110),
    (31, 105, 106, 114),
    (32, 109, 110, 118),
    (33, 112, 114, 122),
    (34, 116, 118, 126),
    (35, 119, 122, 130),
];

// ---------------------------------------------------------------------------
// strength suite
// ---------------------------------------------------------------------------

/// Oracle equivalence and the strength range/bracket laws over every
/// class of order 2 through `max_order`.
pub fn strength_suite(max_order: usize) -> Result<Vec<Check>> {
    let mut equiv_violations = Vec::new();
    let mut range_violations = Vec::new();
    let mut bracket_violations = Vec::new();
    let mut empty_violations = Vec::new();
    let mut checked = 0u64;
    let mut per_order = Vec::new();

    for n in 2..=max_order {
        let mut order_count = 0u64;
        enumerate_graphs(n, |g| {
            order_count += 1;
            checked += 1;
            if g.is_edgeless() {
                // both routes must reject, not return a sentinel
                if strength(g).is_ok() || strength_bruteforce(g).is_ok() {
                    empty_violations.push(format!("empty graph accepted at n={n}"));
                }
                return ControlFlow::Continue(());
            }
            let chr = strength(g).expect("nonempty");
            let bf = strength_bruteforce(g).expect("nonempty");
            if chr.value != bf.value {
                equiv_violations.push(format!(
                    "{g:?}: characterization {} vs brute force {}",
                    chr.value, bf.value
                ));
            }
            let s = bf.value;
            if !(3..=2 * n as u32 - 1).contains(&s) {
                range_violations.push(format!("{g:?}: str {s} outside [3, 2n-1]"));
            }
            if g.min_degree().unwrap() >= 1 {
                let lo = strength_lower_bound(g).unwrap();
                let hi = strength_upper_bound_beta(g).unwrap();
                if !(lo <= s && s <= hi) {
                    bracket_violations.push(format!("{g:?}: {lo} <= {s} <= {hi} fails"));
                }
            } else {
                // the beta upper bound needs no degree assumption
                let hi = strength_upper_bound_beta(g).unwrap();
                if s > hi {
                    bracket_violations.push(format!("{g:?}: str {s} > 2n - beta {hi}"));
                }
            }
            ControlFlow::Continue(())
        })?;
        per_order.push(format!("{order_count} at n={n}"));
    }

    let mut checks = vec![
        Check::from_violations("strength-oracle-equivalence", checked, &equiv_violations),
        Check::from_violations("strength-range", checked, &range_violations),
        Check::from_violations("strength-degree-beta-bracket", checked, &bracket_violations),
        Check::from_violations("strength-empty-rejection", checked, &empty_violations),
    ];
    checks[0].details = format!("classes checked: {}", per_order.join(" + "));

    // existence: every (n, k) with k in [1, n-1] is realized by a graph
    // with min degree k and strength n + k
    let cap = max_order.min(8);
    let mut missing = Vec::new();
    for n in 2..=cap {
        let mut seen = vec![false; n];
        enumerate_graphs(n, |g| {
            if !g.is_edgeless() {
                let d = g.min_degree().unwrap();
                if d >= 1 && strength(g).unwrap().value == (n + d) as u32 {
                    seen[d] = true;
                }
            }
            ControlFlow::Continue(())
        })?;
        for (k, &hit) in seen.iter().enumerate().skip(1) {
            if !hit {
                missing.push(format!("no graph with delta={k}, str={} at n={n}", n + k));
            }
        }
    }
    checks.push(Check::from_violations(
        "strength-extremal-existence",
        cap as u64,
        &missing,
    ));
    Ok(checks)
}

// ---------------------------------------------------------------------------
// theorem suite
// ---------------------------------------------------------------------------

/// The biconditional, bound and invariance laws over every nonempty class
/// of order up to `max_order` (6 keeps it interactive), plus the closed
/// forms against computed Ramsey values.
pub fn theorem_suite(max_order: usize) -> Result<Vec<Check>> {
    let mut cond_violations = Vec::new(); // str <= 2n-k  iff  F_k in complement
    let mut delta_violations = Vec::new(); // str = 2n-k at delta = n-k iff F_k in complement
    let mut lower_violations = Vec::new(); // str >= n + delta
    let mut beta_violations = Vec::new(); // str <= 2n - beta
    let mut isolated_violations = Vec::new();
    let mut checked = 0u64;

    for n in 2..=max_order {
        let fks: Vec<PatternQuery> = (1..=n)
            .map(|k| Ok(PatternQuery::new(&Graph::fk(k)?)))
            .collect::<Result<_>>()?;
        enumerate_graphs(n, |g| {
            if g.is_edgeless() {
                return ControlFlow::Continue(());
            }
            checked += 1;
            let s = strength_bruteforce(g).unwrap().value;
            let comp = g.complement();
            for (k, q) in fks.iter().enumerate().map(|(i, q)| (i + 1, q)) {
                let contains = q.matches(&comp);
                let le = s <= (2 * n - k) as u32;
                if le != contains {
                    cond_violations.push(format!(
                        "{g:?}: k={k}: str {s} <= {} is {le} but containment is {contains}",
                        2 * n - k
                    ));
                }
                // contrapositive: str >= 2n-k+1 iff no F_k in complement
                let ge = s >= (2 * n - k + 1) as u32;
                if ge != !contains {
                    cond_violations.push(format!("{g:?}: k={k}: contrapositive fails"));
                }
            }
            let delta = g.min_degree().unwrap();
            if delta >= 1 {
                let k = n - delta;
                if (1..=n).contains(&k) {
                    let eq = s == (2 * n - k) as u32;
                    let contains = fks[k - 1].matches(&comp);
                    if eq != contains {
                        delta_violations.push(format!("{g:?}: delta-form fails at k={k}"));
                    }
                }
                if s < (n + delta) as u32 {
                    lower_violations.push(format!("{g:?}: str {s} < n + delta"));
                }
            }
            let beta = crate::independence::independence_number(g).unwrap() as u32;
            if s > 2 * n as u32 - beta {
                beta_violations.push(format!("{g:?}: str {s} > 2n - beta"));
            }
            ControlFlow::Continue(())
        })?;
    }

    // isolated-vertex invariance on the no-isolated-vertex classes
    let iso_cap = max_order.min(6);
    let mut iso_checked = 0u64;
    for n in 2..=iso_cap {
        enumerate_graphs(n, |g| {
            if !g.is_edgeless() && g.min_degree().unwrap() >= 1 {
                for m in 1..=3usize.min(10 - n) {
                    iso_checked += 1;
                    if !strength_isolated_invariance_check(g, m).unwrap() {
                        isolated_violations.push(format!("{g:?}: changes with {m} isolates"));
                    }
                }
            }
            ControlFlow::Continue(())
        })?;
    }

    // r(P_3, F_t) closed form against the complement matching formula
    let mut p3_violations = Vec::new();
    for t in 2..=8u32 {
        let via_matching = ramsey_p3(&Graph::fk(t as usize)?)?;
        let formula = r_f3_formula(t)?;
        if via_matching != formula {
            p3_violations.push(format!("t={t}: {via_matching} vs {formula}"));
        }
    }

    // the star/clique lower bound against exhaustively settled values
    let mut bound_violations = Vec::new();
    let mut pairs_checked = 0u64;
    for (s, t) in [
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 3),
        (3, 4),
        (3, 5),
        (4, 4),
    ] {
        let r = ramsey_fk(s, t, 10)?;
        let v = r.value.expect("within budget");
        pairs_checked += 1;
        if chvatal_fk_lower(s, t)? > v {
            bound_violations.push(format!("({s},{t}): bound exceeds value {v}"));
        }
    }

    Ok(vec![
        Check::from_violations("containment-biconditional", checked, &cond_violations),
        Check::from_violations("degree-containment-form", checked, &delta_violations),
        Check::from_violations("min-degree-lower-bound", checked, &lower_violations),
        Check::from_violations("independence-upper-bound", checked, &beta_violations),
        Check::from_violations("isolated-invariance", iso_checked, &isolated_violations),
        Check::from_violations("p3-ramsey-formula", 7, &p3_violations),
        Check::from_violations("ramsey-lower-bound", pairs_checked, &bound_violations),
    ])
}

// ---------------------------------------------------------------------------
// table suite
// ---------------------------------------------------------------------------

/// Regenerates the published rows from the engine and diffs them.
pub fn table_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut v1 = Vec::new();
    for &(s, t, r) in &TABLE1_RFSFT {
        let got = match crate::ramsey::fk_ramsey_knowledge(s, t)? {
            crate::ramsey::FkKnowledge::Exact(v) => Some(v),
            _ => None,
        };
        if got != Some(r) {
            v1.push(format!("r(F_{s},F_{t}): {got:?} vs {r}"));
        }
    }
    checks.push(Check::from_violations(
        "table1-small-ramsey",
        TABLE1_RFSFT.len() as u64,
        &v1,
    ));

    let mut v2 = Vec::new();
    for &(n, f) in &TABLE2_F {
        let got = if n == 3 {
            Some(crate::bounds::f_max(3)?.value)
        } else {
            f_via_ramsey(n)?.exact_value()
        };
        if got != Some(f) {
            v2.push(format!("f({n}): {got:?} vs {f}"));
        }
    }
    checks.push(Check::from_violations(
        "table2-f-values",
        TABLE2_F.len() as u64,
        &v2,
    ));

    let mut v3 = Vec::new();
    let mut rows = 0;
    for &(lo, hi, expect) in &TABLE3_SIGMA_RANGES {
        for n in lo..=hi {
            rows += 1;
            let got = sigma(n)?;
            if got != expect {
                v3.push(format!("sigma({n}) = {got}, published {expect}"));
            }
        }
    }
    checks.push(Check::from_violations("table3-sigma", rows, &v3));

    let mut v4 = Vec::new();
    for &(n, r, rp, up) in &TABLE4_BOUNDS {
        let got = (rho(n)?, rho_prime(n)?, 4 * n - sigma(n)?);
        if got != (r, rp, up) {
            v4.push(format!("n={n}: {got:?} vs ({r},{rp},{up})"));
        }
    }
    checks.push(Check::from_violations(
        "table4-bounds",
        TABLE4_BOUNDS.len() as u64,
        &v4,
    ));
    Ok(checks)
}

// ---------------------------------------------------------------------------
// enumeration suite
// ---------------------------------------------------------------------------

/// Canonical forms of every labeled graph of order `n`: the dedup oracle
/// the enumerator is measured against.
pub fn labeled_dedup_oracle(n: usize) -> HashSet<u128> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len())
        .into_par_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            canonical_form(&Graph::from_edges(n, &edges).unwrap())
                .unwrap()
                .bits()
        })
        .collect()
}

/// Counts against the labeled dedup oracle (element-wise up to order 6),
/// complement closure, and shard-partition identity.
pub fn enumeration_suite(max_order: usize) -> Result<Vec<Check>> {
    let cap = max_order.min(7);
    let mut count_violations = Vec::new();
    let mut element_violations = Vec::new();
    for n in 1..=cap {
        let mut visited = HashSet::new();
        let visited_count = enumerate_graphs(n, |g| {
            visited.insert(crate::canon::string_bits(n, g.rows()));
            ControlFlow::Continue(())
        })?;
        if visited_count != CLASS_COUNTS[n - 1] || visited.len() as u64 != visited_count {
            count_violations.push(format!(
                "n={n}: visited {visited_count} ({} distinct), expected {}",
                visited.len(),
                CLASS_COUNTS[n - 1]
            ));
        }
        let oracle = labeled_dedup_oracle(n);
        if oracle.len() as u64 != CLASS_COUNTS[n - 1] {
            count_violations.push(format!(
                "n={n}: oracle found {} classes, expected {}",
                oracle.len(),
                CLASS_COUNTS[n - 1]
            ));
        }
        if n <= 6 && visited != oracle {
            element_violations.push(format!(
                "n={n}: enumerator and oracle sets differ by {}",
                visited.symmetric_difference(&oracle).count()
            ));
        }
    }

    // complementation permutes the visited classes
    let mut closure_violations = Vec::new();
    for n in 1..=cap {
        let mut forms = HashSet::new();
        let mut complements = HashSet::new();
        enumerate_graphs(n, |g| {
            forms.insert(canonical_form(g).unwrap().bits());
            complements.insert(canonical_form(&g.complement()).unwrap().bits());
            ControlFlow::Continue(())
        })?;
        if forms != complements {
            closure_violations.push(format!("n={n}: complement closure fails"));
        }
    }

    // shard unions reproduce the full enumeration for several counts
    let mut shard_violations = Vec::new();
    let n = cap.min(6);
    let mut full = HashSet::new();
    enumerate_graphs(n, |g| {
        full.insert(crate::canon::string_bits(n, g.rows()));
        ControlFlow::Continue(())
    })?;
    for shard_count in [1usize, 2, 3, 5] {
        let mut union = HashSet::new();
        let mut total = 0u64;
        for shard in 0..shard_count {
            total += enumerate_partitioned(n, shard, shard_count, |g| {
                if !union.insert(crate::canon::string_bits(n, g.rows())) {
                    shard_violations
                        .push(format!("duplicate across shards at count {shard_count}"));
                }
                ControlFlow::Continue(())
            })?;
        }
        if union != full || total != full.len() as u64 {
            shard_violations.push(format!(
                "shard union mismatch at count {shard_count}: {total} visited"
            ));
        }
    }

    Ok(vec![
        Check::from_violations("class-counts-vs-oracle", cap as u64, &count_violations),
        Check::from_violations(
            "element-wise-oracle-match",
            cap.min(6) as u64,
            &element_violations,
        ),
        Check::from_violations("complement-closure", cap as u64, &closure_violations),
        Check::from_violations("shard-partition", 4, &shard_violations),
    ])
}

/// Every suite at its default scale.
pub fn all_suites(max_order: usize) -> Result<Vec<Check>> {
    let mut checks = strength_suite(max_order)?;
    checks.extend(theorem_suite(max_order.min(6))?);
    checks.extend(table_suite()?);
    checks.extend(enumeration_suite(max_order)?);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_suite_is_green() {
        let checks = table_suite().unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn small_suites_are_green() {
        let checks = strength_suite(5).unwrap();
        assert_eq!(failures(&checks), 0, "{checks:?}");
        let checks = theorem_suite(5).unwrap();
        assert_eq!(failures(&checks), 0, "{checks:?}");
        let checks = enumeration_suite(5).unwrap();
        assert_eq!(failures(&checks), 0, "{checks:?}");
    }
}
