//! Subgraph embedding by backtracking over bitset adjacency rows.

use crate::graph::{bit, Graph};

/// A pattern graph preprocessed for repeated containment queries against
/// many hosts: vertex order, per-slot degree requirements and the set of
/// earlier slots each slot must attach to.
pub struct PatternQuery {
    np: usize,
    /// slot -> pattern vertex, descending pattern degree (ties by index)
    order: Vec<usize>,
    /// slot -> required host degree (pattern degree of the slot's vertex)
    need_deg: Vec<u32>,
    /// slot -> mask over earlier slots adjacent in the pattern
    earlier: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl PatternQuery {
    pub fn new(pattern: &Graph) -> Self {
        let np = pattern.order();
        let mut order: Vec<usize> = (0..np).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pattern.neighbors(v).count_ones()));
        let need_deg = order
            .iter()
            .map(|&p| pattern.neighbors(p).count_ones())
            .collect();
        let earlier = order
            .iter()
            .enumerate()
            .map(|(slot, &p)| {
                let mut mask = 0u64;
                for (es, &q) in order.iter().enumerate().take(slot) {
                    if pattern.has_edge(p, q) {
                        mask |= bit(es);
                    }
                }
                mask
            })
            .collect();
        PatternQuery {
            np,
            order,
            need_deg,
            earlier,
            edges: pattern.edges(),
        }
    }

    /// Embedding search; returns the map indexed by pattern vertex, or
    /// `None`. Host candidates are tried in ascending index, so the result
    /// is the lexicographically first witness under the fixed slot order.
    pub fn find(&self, host: &Graph) -> Option<Vec<usize>> {
        self.search(host).map(|assign| {
            let mut phi = vec![0usize; self.np];
            for (s, &p) in self.order.iter().enumerate() {
                phi[p] = assign[s];
            }
            phi
        })
    }

    pub fn matches(&self, host: &Graph) -> bool {
        self.search(host).is_some()
    }

    fn search(&self, host: &Graph) -> Option<[usize; 64]> {
        let np = self.np;
        let nh = host.order();
        if np > nh {
            return None;
        }
        if np == 0 {
            return Some([usize::MAX; 64]);
        }

        // host vertices that satisfy each distinct degree requirement
        let mut deg_mask = [0u64; 64];
        for (slot, &need) in self.need_deg.iter().enumerate() {
            let mut mask = 0u64;
            for h in 0..nh {
                if host.neighbors(h).count_ones() >= need {
                    mask |= bit(h);
                }
            }
            deg_mask[slot] = mask;
        }

        let mut assign = [usize::MAX; 64];
        let mut remaining = [0u64; 64];
        let mut used = 0u64;
        let mut slot = 0usize;
        remaining[0] = deg_mask[0];
        loop {
            if remaining[slot] == 0 {
                if slot == 0 {
                    return None;
                }
                slot -= 1;
                used &= !bit(assign[slot]);
                continue;
            }
            let h = remaining[slot].trailing_zeros() as usize;
            remaining[slot] &= remaining[slot] - 1;
            assign[slot] = h;
            if slot + 1 == np {
                return Some(assign);
            }
            used |= bit(h);
            slot += 1;
            // unused, degree-feasible, adjacent to all placed pattern
            // neighbors of this slot
            let mut cand = deg_mask[slot] & !used;
            let mut req = self.earlier[slot];
            while req != 0 && cand != 0 {
                let es = req.trailing_zeros() as usize;
                req &= req - 1;
                cand &= host.neighbors(assign[es]);
            }
            remaining[slot] = cand;
        }
    }

    pub fn pattern_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// One-shot embedding search; see [`PatternQuery::find`].
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    PatternQuery::new(pattern).find(host)
}

/// One-shot containment test.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    PatternQuery::new(pattern).matches(host)
}

/// Checks that `phi` really is a subgraph embedding (witness validation).
pub fn is_embedding(host: &Graph, pattern: &Graph, phi: &[usize]) -> bool {
    if phi.len() != pattern.order() {
        return false;
    }
    let mut seen = 0u64;
    for &h in phi {
        if h >= host.order() || seen & bit(h) != 0 {
            return false;
        }
        seen |= bit(h);
    }
    pattern
        .edges()
        .iter()
        .all(|&(u, v)| host.has_edge(phi[u], phi[v]))
}
