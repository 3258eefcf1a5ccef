//! Canonical labeling for small graphs.
//!
//! The canonical form of a graph is the lexicographically greatest value of
//! its upper-triangle adjacency bit string `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...` over all vertex relabelings (the same column-major order
//! graph6 uses). Two graphs are isomorphic exactly when their canonical
//! forms agree.
//!
//! The column-major order gives the string a prefix property the
//! enumerator relies on: deleting the last vertex of a canonically
//! labeled graph deletes a suffix of the string, so the leading subgraph
//! of a canonical graph is itself canonical.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Canonicalization budget. Enumeration stays well below this.
pub const MAX_CANON_ORDER: usize = 16;

/// A permutation-invariant fingerprint: the order plus the maximal
/// upper-triangle bit string packed into a `u128` (string position `p`
/// at bit `127 - p`, so integer order equals string order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonically labeled representative graph.
    pub fn to_graph(&self) -> Graph {
        let mut rows = vec![0u64; self.order];
        let mut pos = 0;
        for j in 1..self.order {
            for i in 0..j {
                if self.bits >> (127 - pos) & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                pos += 1;
            }
        }
        Graph::from_rows(self.order, &rows)
    }
}

/// Packs the identity labeling's upper-triangle string.
pub(crate) fn string_bits(n: usize, rows: &[u64]) -> u128 {
    let mut bits = 0u128;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if rows[i] & bit(j) != 0 {
                bits |= 1u128 << (127 - pos);
            }
            pos += 1;
        }
    }
    bits
}

/// Vertex classes whose members are exchangeable by a transposition
/// automorphism: either equal open neighborhoods (nonadjacent twins) or
/// equal closed neighborhoods (adjacent twins). Exploring one member per
/// class is enough anywhere a labeling search branches.
#[derive(Clone, Copy)]
pub(crate) struct TwinClasses {
    /// member mask per class, indexed by class id
    masks: [u64; MAX_CANON_ORDER],
    class_of: [u8; MAX_CANON_ORDER],
}

impl TwinClasses {
    pub(crate) fn new(n: usize, rows: &[u64]) -> Self {
        let mut masks = [0u64; MAX_CANON_ORDER];
        let mut class_of = [u8::MAX; MAX_CANON_ORDER];
        let mut len = 0;
        for v in 0..n {
            if class_of[v] != u8::MAX {
                continue;
            }
            let id = len as u8;
            len += 1;
            class_of[v] = id;
            masks[id as usize] = bit(v);
            for u in v + 1..n {
                if class_of[u] != u8::MAX {
                    continue;
                }
                let open = rows[u] == rows[v];
                let closed = rows[u] | bit(u) == rows[v] | bit(v);
                if open || closed {
                    class_of[u] = id;
                    masks[id as usize] |= bit(u);
                }
            }
        }
        TwinClasses { masks, class_of }
    }

    /// Whether `v` is the lowest unused member of its class.
    #[inline(always)]
    fn is_representative(&self, v: usize, used: u64) -> bool {
        let unused = self.masks[self.class_of[v] as usize] & !used;
        unused.trailing_zeros() as usize == v
    }

    #[cfg(test)]
    pub(crate) fn class_count(&self) -> usize {
        let distinct: std::collections::HashSet<u8> = self
            .class_of
            .iter()
            .copied()
            .filter(|&c| c != u8::MAX)
            .collect();
        distinct.len()
    }
}

/// Decides whether the identity labeling is already the canonical one,
/// i.e. no relabeling produces a lexicographically greater string. This is
/// the enumerator's acceptance test, so it is tuned to refute quickly.
pub(crate) fn is_canonical(n: usize, rows: &[u64]) -> bool {
    debug_assert!(n <= MAX_CANON_ORDER);
    if n <= 1 {
        return true;
    }
    // target columns, column j packed with bit i at position j-1-i
    let mut tcol = [0u64; MAX_CANON_ORDER];
    for (j, t) in tcol.iter_mut().enumerate().take(n).skip(1) {
        for i in 0..j {
            *t |= u64::from(rows[i] & bit(j) != 0) << (j - 1 - i);
        }
    }
    let twins = TwinClasses::new(n, rows);
    let mut perm = [0u8; MAX_CANON_ORDER];
    !beats_target(n, rows, &tcol, &twins, &mut perm, 0, 0)
}

/// DFS over labelings whose columns tie the target so far; true when some
/// completion strictly beats the target.
fn beats_target(
    n: usize,
    rows: &[u64],
    tcol: &[u64; MAX_CANON_ORDER],
    twins: &TwinClasses,
    perm: &mut [u8; MAX_CANON_ORDER],
    depth: usize,
    used: u64,
) -> bool {
    if depth == n {
        return false; // a tie is an automorphism, not an improvement
    }
    let mut ties = [0u8; MAX_CANON_ORDER];
    let mut tie_count = 0;
    for v in 0..n {
        if used & bit(v) != 0 || !twins.is_representative(v, used) {
            continue;
        }
        let mut col = 0u64;
        for i in 0..depth {
            col |= u64::from(rows[v] & bit(perm[i] as usize) != 0) << (depth - 1 - i);
        }
        if col > tcol[depth] {
            return true;
        }
        if col == tcol[depth] {
            ties[tie_count] = v as u8;
            tie_count += 1;
        }
    }
    for &v in &ties[..tie_count] {
        perm[depth] = v;
        if beats_target(
            n,
            rows,
            tcol,
            twins,
            perm,
            depth + 1,
            used | bit(v as usize),
        ) {
            return true;
        }
    }
    false
}

/// Computes the canonical form of `g`. Budgeted to order 16.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::CanonicalOrder {
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    if n <= 1 {
        return Ok(CanonicalForm { order: n, bits: 0 });
    }
    let rows = g.rows();
    let twins = TwinClasses::new(n, rows);

    // level-synchronous search: keep every partial labeling that attains
    // the greatest column prefix, maximizing one column at a time
    let mut frontier: Vec<([u8; MAX_CANON_ORDER], u64)> = Vec::new();
    for v in 0..n {
        if twins.is_representative(v, 0) {
            let mut perm = [0u8; MAX_CANON_ORDER];
            perm[0] = v as u8;
            frontier.push((perm, bit(v)));
        }
    }
    let mut bits = 0u128;
    let mut pos = 0usize;
    for depth in 1..n {
        let mut best_col = 0u64;
        let mut next: Vec<([u8; MAX_CANON_ORDER], u64)> = Vec::new();
        for &(perm, used) in &frontier {
            for v in 0..n {
                if used & bit(v) != 0 || !twins.is_representative(v, used) {
                    continue;
                }
                let mut col = 0u64;
                for i in 0..depth {
                    col |= u64::from(rows[v] & bit(perm[i] as usize) != 0) << (depth - 1 - i);
                }
                if col < best_col {
                    continue;
                }
                if col > best_col {
                    best_col = col;
                    next.clear();
                }
                let mut nperm = perm;
                nperm[depth] = v as u8;
                next.push((nperm, used | bit(v)));
            }
        }
        for k in 0..depth {
            if best_col >> (depth - 1 - k) & 1 == 1 {
                bits |= 1u128 << (127 - (pos + k));
            }
        }
        pos += depth;
        frontier = next;
    }
    Ok(CanonicalForm { order: n, bits })
}

/// True when `g`'s own labeling is canonical, i.e. its string equals its
/// canonical form's bits. Graphs produced by the enumerator satisfy this.
pub fn is_canonically_labeled(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::CanonicalOrder {
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    Ok(is_canonical(n, g.rows()))
}
