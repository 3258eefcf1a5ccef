//! Exact strength computation by two independent routes.
//!
//! `str(G)` is the minimum over all numberings of the maximum edge label.
//! The direct route is branch-and-bound over numberings. The structural
//! route discards isolated vertices (they never change the strength) and
//! then uses the characterization `str = 2m - k*` on the order-`m` core,
//! where `k*` is the largest `k` with `F_k` contained in the core's
//! complement; that turns a factorial search into a handful of subgraph
//! queries and is the route everything large runs on.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::independence::independence_number;
use crate::numbering::Numbering;
use crate::subgraph::{find_subgraph, PatternQuery};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrengthMethod {
    BruteForce,
    FkCharacterization,
}

/// How the reported witness numbering was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessSource {
    /// lexicographically smallest optimal label array, from search
    BruteForce,
    /// constructed from the maximal `F_k` embedding in the complement;
    /// optimal but not tie-broken (orders above the brute-force budget)
    CharacterizationDerived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthResult {
    pub value: u32,
    pub witness: Numbering,
    pub method: StrengthMethod,
    pub witness_source: WitnessSource,
    /// `k*`, present for the characterization route
    pub max_fk_in_complement: Option<usize>,
}

/// Orders above which [`strength`] stops producing brute-force witnesses.
pub const BRUTEFORCE_WITNESS_MAX_ORDER: usize = 10;

fn require_edges(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::NoVertices);
    }
    if g.is_edgeless() {
        return Err(Error::EdgelessGraph);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// brute force
// ---------------------------------------------------------------------------

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    /// candidate order: ascending degree, so the large labels land on
    /// low-degree vertices first and bound violations surface early
    try_order: Vec<usize>,
    labels: Vec<u32>,
    best: u32,
}

impl Search<'_> {
    fn run(&mut self) {
        self.place(self.n as u32, 0, 0);
    }

    fn place(&mut self, next_label: u32, placed: u64, cur_max: u32) {
        if next_label == 0 {
            self.best = cur_max;
            return;
        }
        for idx in 0..self.n {
            let v = self.try_order[idx];
            if placed & bit(v) != 0 {
                continue;
            }
            let mut new_max = cur_max;
            let mut nbrs = self.rows[v] & placed;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                new_max = new_max.max(self.labels[u] + next_label);
            }
            if new_max >= self.best {
                continue;
            }
            self.labels[v] = next_label;
            self.place(next_label - 1, placed | bit(v), new_max);
            // labels[v] is overwritten on the next try; no cleanup needed
        }
    }
}

fn optimal_value(g: &Graph) -> u32 {
    let n = g.order();
    let mut try_order: Vec<usize> = (0..n).collect();
    try_order.sort_by_key(|&v| g.neighbors(v).count_ones());
    let mut search = Search {
        rows: g.rows(),
        n,
        try_order,
        labels: vec![0; n],
        best: 2 * n as u32, // any numbering stays below 2n
    };
    search.run();
    search.best
}

/// First (hence lexicographically smallest) label array with every edge
/// sum at most `value`; feasibility of `value` is the caller's problem.
fn lexmin_witness(g: &Graph, value: u32) -> Option<Vec<u32>> {
    let n = g.order();
    let mut labels = vec![0u32; n];

    fn assign(g: &Graph, value: u32, v: usize, used: u64, labels: &mut Vec<u32>) -> bool {
        let n = g.order();
        if v == n {
            return true;
        }
        for l in 1..=n as u32 {
            if used & bit(l as usize - 1) != 0 {
                continue;
            }
            let mut ok = true;
            let mut nbrs = g.neighbors(v) & crate::graph::low_bits(v);
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if labels[u] + l > value {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            labels[v] = l;
            if assign(g, value, v + 1, used | bit(l as usize - 1), labels) {
                return true;
            }
        }
        false
    }

    assign(g, value, 0, 0, &mut labels).then_some(labels)
}

/// Exact strength by branch-and-bound over all numberings, assigning
/// labels `n, n-1, ...` and pruning as soon as a placed edge sum reaches
/// the incumbent. Ties among optimal numberings resolve to the
/// lexicographically smallest label array.
pub fn strength_bruteforce(g: &Graph) -> Result<StrengthResult> {
    require_edges(g)?;
    let value = optimal_value(g);
    let labels = lexmin_witness(g, value).expect("optimal value is achievable");
    let witness = Numbering::new(g, labels)?;
    debug_assert_eq!(witness.strength_value(), Some(value));
    Ok(StrengthResult {
        value,
        witness,
        method: StrengthMethod::BruteForce,
        witness_source: WitnessSource::BruteForce,
        max_fk_in_complement: None,
    })
}

// ---------------------------------------------------------------------------
// F_k characterization
// ---------------------------------------------------------------------------

/// The largest `k` in `[1, order]` with `F_k` a subgraph of `h`. The
/// family is nested (`F_k` inside `F_{k+1}`), so containment is monotone
/// in `k` and binary search applies. `F_1 = K_1` always fits.
pub fn max_fk_subgraph(h: &Graph) -> Result<usize> {
    let n = h.order();
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let mut lo = 1usize;
    let mut hi = n;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if PatternQuery::new(&Graph::fk(mid)?).matches(h) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// `str(G)` and `k*` by the characterization. Isolated vertices are
/// discarded first: the strength ignores them, and only without them is
/// `k*` guaranteed below the order, which is what pins the value to
/// exactly `2m - k*` (at `k* = m` the containment laws cap the strength
/// without determining it).
pub(crate) fn strength_value(g: &Graph) -> Result<(u32, usize)> {
    require_edges(g)?;
    let core = g.induced_subgraph(g.covered_vertices());
    let m = core.order();
    let kstar = max_fk_subgraph(&core.complement())?;
    debug_assert!(kstar < m, "a complement F_m needs an isolated vertex");
    Ok((2 * m as u32 - kstar as u32, kstar))
}

/// Numbering achieving the exact strength from an embedding of `F_k*` in
/// the complement of the isolate-free core: the embedded vertices take
/// the core's top labels in family order, the other core vertices fill
/// upward from 1, and isolated vertices absorb the largest labels, where
/// they touch no edge.
fn witness_from_embedding(g: &Graph) -> Result<Numbering> {
    let n = g.order();
    let covered = g.covered_vertices();
    let core = g.induced_subgraph(covered);
    let m = core.order();
    let kstar = max_fk_subgraph(&core.complement())?;
    let phi = find_subgraph(&core.complement(), &Graph::fk(kstar)?)
        .expect("kstar comes from max_fk_subgraph");
    let mut core_labels = vec![0u32; m];
    for (i, &host) in phi.iter().enumerate() {
        core_labels[host] = (m - i) as u32;
    }
    let mut next = 1u32;
    for l in core_labels.iter_mut() {
        if *l == 0 {
            *l = next;
            next += 1;
        }
    }
    let mut labels = vec![0u32; n];
    let mut core_idx = 0;
    let mut iso_label = m as u32 + 1;
    for (v, l) in labels.iter_mut().enumerate() {
        if covered & crate::graph::bit(v) != 0 {
            *l = core_labels[core_idx];
            core_idx += 1;
        } else {
            *l = iso_label;
            iso_label += 1;
        }
    }
    Numbering::new(g, labels)
}

/// Exact strength via the containment characterization (applied to the
/// isolate-free core). For orders within the brute-force budget the
/// witness is additionally tie-broken by that search; above it the
/// witness comes from the embedding construction.
pub fn strength(g: &Graph) -> Result<StrengthResult> {
    let (value, kstar) = strength_value(g)?;
    let (witness, witness_source) = if g.order() <= BRUTEFORCE_WITNESS_MAX_ORDER {
        let labels = lexmin_witness(g, value)
            .unwrap_or_else(|| panic!("characterization value {value} infeasible for {g:?}"));
        (Numbering::new(g, labels)?, WitnessSource::BruteForce)
    } else {
        (
            witness_from_embedding(g)?,
            WitnessSource::CharacterizationDerived,
        )
    };
    debug_assert_eq!(witness.strength_value(), Some(value));
    Ok(StrengthResult {
        value,
        witness,
        method: StrengthMethod::FkCharacterization,
        witness_source,
        max_fk_in_complement: Some(kstar),
    })
}

// ---------------------------------------------------------------------------
// bounds and invariance
// ---------------------------------------------------------------------------

/// `str(G) >= n + min_degree(G)`, valid when there is no isolated vertex.
pub fn strength_lower_bound(g: &Graph) -> Result<u32> {
    let delta = g.min_degree()?;
    if delta == 0 {
        return Err(Error::IsolatedVertex);
    }
    Ok((g.order() + delta) as u32)
}

/// `str(G) <= 2n - beta(G)` via the independence number.
pub fn strength_upper_bound_beta(g: &Graph) -> Result<u32> {
    require_edges(g)?;
    Ok(2 * g.order() as u32 - independence_number(g)? as u32)
}

/// Checks by brute force that appending `m` isolated vertices leaves the
/// strength unchanged. Requires no isolated vertices in `g` and
/// `order + m` within the brute-force budget.
pub fn strength_isolated_invariance_check(g: &Graph, m: usize) -> Result<bool> {
    let delta = g.min_degree()?;
    if delta == 0 {
        return Err(Error::IsolatedVertex);
    }
    if g.order() + m > BRUTEFORCE_WITNESS_MAX_ORDER {
        return Err(Error::Domain(format!(
            "order {} + {m} isolated vertices exceeds the brute-force budget",
            g.order()
        )));
    }
    let padded = g.disjoint_union(&Graph::empty(m)?)?;
    Ok(strength_bruteforce(&padded)?.value == strength_bruteforce(g)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain minimum over every permutation; the independent oracle the
    /// branch-and-bound is checked against.
    pub(crate) fn strength_oracle(g: &Graph) -> Option<u32> {
        if g.is_edgeless() {
            return None;
        }
        let n = g.order();
        let edges = g.edges();
        let mut labels: Vec<u32> = (1..=n as u32).collect();
        let mut best = u32::MAX;
        fn perms(labels: &mut Vec<u32>, k: usize, edges: &[(usize, usize)], best: &mut u32) {
            if k == labels.len() {
                let m = edges
                    .iter()
                    .map(|&(u, v)| labels[u] + labels[v])
                    .max()
                    .unwrap();
                *best = (*best).min(m);
                return;
            }
            for i in k..labels.len() {
                labels.swap(k, i);
                perms(labels, k + 1, edges, best);
                labels.swap(k, i);
            }
        }
        perms(&mut labels, 0, &edges, &mut best);
        Some(best)
    }

    #[test]
    fn published_strength_values() {
        let str_of = |g: &Graph| strength_bruteforce(g).unwrap().value;
        assert_eq!(str_of(&Graph::complete_bipartite(1, 2).unwrap()), 4);
        let k1k2 = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(str_of(&k1k2), 3);
        let k2k3 = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(str_of(&k2k3), 7); // 2(s+t)-3 at s=2, t=3
    }

    #[test]
    fn bruteforce_matches_permutation_oracle_up_to_6() {
        use std::ops::ControlFlow;
        for n in 2..=6 {
            crate::enumerate::enumerate_graphs(n, |g| {
                if !g.is_edgeless() {
                    let bb = strength_bruteforce(g).unwrap();
                    assert_eq!(Some(bb.value), strength_oracle(g), "{g:?}");
                    assert_eq!(bb.witness.strength_value(), Some(bb.value));
                }
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // K_3 has six optimal numberings; the label array [1,2,3] is first
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            strength_bruteforce(&k3).unwrap().witness.labels(),
            &[1, 2, 3]
        );
        // P_3: center must get label 1 for the optimum
        let p3 = Graph::star(3).unwrap();
        assert_eq!(
            strength_bruteforce(&p3).unwrap().witness.labels(),
            &[1, 2, 3]
        );
        let p3_center_last = Graph::from_edges(3, &[(2, 0), (2, 1)]).unwrap();
        assert_eq!(
            strength_bruteforce(&p3_center_last)
                .unwrap()
                .witness
                .labels(),
            &[2, 3, 1]
        );
    }

    #[test]
    fn max_fk_values() {
        assert_eq!(max_fk_subgraph(&Graph::empty(4).unwrap()).unwrap(), 1);
        for n in 1..=8 {
            assert_eq!(max_fk_subgraph(&Graph::complete(n).unwrap()).unwrap(), n);
        }
        // complement of K_{1,2} is K_1 + K_2: holds F_2 but not F_3
        let h = Graph::complete_bipartite(1, 2).unwrap().complement();
        assert_eq!(max_fk_subgraph(&h).unwrap(), 2);
    }

    #[test]
    fn characterization_agrees_with_bruteforce_on_small_orders() {
        use std::ops::ControlFlow;
        for n in 2..=6 {
            crate::enumerate::enumerate_graphs(n, |g| {
                if !g.is_edgeless() {
                    let a = strength(g).unwrap();
                    let b = strength_bruteforce(g).unwrap();
                    assert_eq!(a.value, b.value, "{g:?}");
                    assert_eq!(a.witness.labels(), b.witness.labels());
                }
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }

    #[test]
    fn strength_of_families() {
        for n in 2..=8 {
            assert_eq!(
                strength(&Graph::complete(n).unwrap()).unwrap().value,
                2 * n as u32 - 1
            );
        }
        assert_eq!(
            strength(&Graph::complete_bipartite(2, 3).unwrap())
                .unwrap()
                .value,
            7
        );
        let k3k3 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(strength(&k3k3).unwrap().value, 9);
    }

    #[test]
    fn embedding_witness_above_bruteforce_budget() {
        // K_{5,6} has order 11: witness must come from the embedding
        let g = Graph::complete_bipartite(5, 6).unwrap();
        let r = strength(&g).unwrap();
        assert_eq!(r.value, 2 * 5 + 6); // str(K_{s,t}) = 2s + t
        assert_eq!(r.witness_source, WitnessSource::CharacterizationDerived);
        assert_eq!(r.witness.strength_value(), Some(r.value));
        assert_eq!(r.max_fk_in_complement, Some(6));
    }

    #[test]
    fn empty_graphs_are_rejected() {
        let e = Graph::empty(3).unwrap();
        assert_eq!(strength(&e), Err(Error::EdgelessGraph));
        assert_eq!(strength_bruteforce(&e), Err(Error::EdgelessGraph));
        assert_eq!(strength_upper_bound_beta(&e), Err(Error::EdgelessGraph));
        assert!(strength(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn degree_bound_values() {
        assert_eq!(
            strength_lower_bound(&Graph::complete(4).unwrap()).unwrap(),
            7
        );
        assert_eq!(strength_lower_bound(&Graph::path(4).unwrap()).unwrap(), 5);
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(strength_lower_bound(&k33).unwrap(), 9);
        assert_eq!(strength(&k33).unwrap().value, 9); // tight here
        let iso = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(strength_lower_bound(&iso), Err(Error::IsolatedVertex));
    }

    #[test]
    fn beta_bound_values() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(strength_upper_bound_beta(&k4).unwrap(), 7);
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(strength_upper_bound_beta(&k23).unwrap(), 7);
    }

    #[test]
    fn isolated_vertices_do_not_change_strength() {
        assert!(strength_isolated_invariance_check(&Graph::complete(2).unwrap(), 3).unwrap());
        assert!(strength_isolated_invariance_check(&Graph::path(4).unwrap(), 2).unwrap());
        let k3k2 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert!(strength_isolated_invariance_check(&k3k2, 1).unwrap());
        assert!(strength_isolated_invariance_check(&Graph::complete(8).unwrap(), 50).is_err());
    }
}
