//! Maximum independent set size by branch and bound on bitsets.

use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph};

/// The independence number `beta(G)`: exact, by include/exclude branching
/// on a highest-degree pivot with a popcount bound. Exact for every order
/// this crate accepts; intended workloads have order <= 32.
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::NoVertices);
    }
    let mut best = 0usize;
    branch(g.rows(), low_bits(g.order()), 0, &mut best);
    Ok(best)
}

fn branch(rows: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        *best = size;
        return;
    }
    // pivot on the vertex with the most candidate neighbors
    let mut pivot = usize::MAX;
    let mut pivot_deg = 0;
    let mut scan = candidates;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let d = (rows[v] & candidates).count_ones();
        if pivot == usize::MAX || d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }
    // include the pivot, then exclude it
    branch(
        rows,
        candidates & !rows[pivot] & !bit(pivot),
        size + 1,
        best,
    );
    branch(rows, candidates & !bit(pivot), size, best);
}
