//! Edge independence number by exhaustive search. A blossom algorithm
//! would be overkill at the orders this crate works with; the recursion
//! below is exact and memoized on the set of available vertices.

use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph};
use std::collections::HashMap;

/// The matching number `beta_1(G)`: the size of a maximum matching.
pub fn matching_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::NoVertices);
    }
    let mut memo = HashMap::new();
    Ok(rec(g.rows(), low_bits(g.order()), &mut memo))
}

fn rec(rows: &[u64], avail: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if avail == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&avail) {
        return v;
    }
    let v = avail.trailing_zeros() as usize;
    let rest = avail & !bit(v);
    // leave v unmatched, or match it with each available neighbor
    let mut best = rec(rows, rest, memo);
    let mut nbrs = rows[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + rec(rows, rest & !bit(u), memo));
    }
    memo.insert(avail, best);
    best
}

/// Whether the graph has a 1-factor: even order and a perfect matching.
pub fn has_one_factor(g: &Graph) -> Result<bool> {
    let n = g.order();
    Ok(n.is_multiple_of(2) && matching_number(g)? == n / 2)
}
