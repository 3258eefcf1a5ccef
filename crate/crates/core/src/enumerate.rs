//! Isomorph-free exhaustive generation of small graphs.
//!
//! Graphs are grown one vertex at a time: a child of an order-m graph
//! attaches a new vertex `m` to some subset of the old vertices, and a
//! child is kept exactly when its own labeling is canonical (see
//! [`crate::canon`]). The column-major string's prefix property makes the
//! parent of every canonical graph canonical, so the tree below `K_1`
//! visits each isomorphism class of each order exactly once, in a fixed
//! depth-first order (subsets ascending). No dedup storage is needed,
//! which is what lets order 10 (12,005,168 classes) run in memory.

use crate::canon::is_canonical;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;

/// Hard ceiling for enumeration order. Order 11 already has about 1e9
/// classes; 12 has about 1.65e11 and exists for lower-bound probing only.
pub const MAX_ENUM_ORDER: usize = 12;

/// Subtree roots for work distribution live at this order (or at `n` when
/// enumerating below it).
const SPLIT_ORDER: usize = 8;

pub const CURSOR_VERSION: u32 = 1;

/// Known class counts for n = 1..=12, used for progress and work
/// estimates before a run starts.
pub const CLASS_COUNTS: [u64; MAX_ENUM_ORDER] = [
    1,
    2,
    4,
    11,
    34,
    156,
    1044,
    12_346,
    274_668,
    12_005_168,
    1_018_997_864,
    165_091_172_592,
];

/// Fixed-capacity graph used inside the generation loops.
#[derive(Clone, Copy)]
pub(crate) struct Partial {
    n: usize,
    rows: [u64; MAX_ENUM_ORDER],
}

impl Partial {
    fn k1() -> Self {
        Partial {
            n: 1,
            rows: [0; MAX_ENUM_ORDER],
        }
    }

    /// Extends by a new last vertex adjacent to `subset`.
    fn child(&self, subset: u64) -> Self {
        let m = self.n;
        debug_assert!(m < MAX_ENUM_ORDER && subset < (1 << m));
        let mut c = *self;
        c.rows[m] = subset;
        let mut s = subset;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            c.rows[v] |= bit(m);
        }
        c.n = m + 1;
        c
    }

    #[inline]
    fn is_canonical(&self) -> bool {
        is_canonical(self.n, &self.rows[..self.n])
    }

    pub(crate) fn to_graph(self) -> Graph {
        Graph::from_rows(self.n, &self.rows[..self.n])
    }
}

fn check_order(n: usize) -> Result<()> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::EnumerationOrder {
            order: n,
            max: MAX_ENUM_ORDER,
        });
    }
    Ok(())
}

/// Resumable position in the generation tree: the construction path (one
/// neighborhood subset per level) of the last node whose subtree has been
/// fully visited, or `None` before anything was visited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumCursor {
    pub version: u32,
    pub order: usize,
    pub position: Option<Vec<u64>>,
    pub visited: u64,
}

impl EnumCursor {
    pub fn start(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(EnumCursor {
            version: CURSOR_VERSION,
            order,
            position: None,
            visited: 0,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cursor serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: EnumCursor =
            serde_json::from_str(s).map_err(|e| Error::CursorCorrupt(e.to_string()))?;
        if c.version != CURSOR_VERSION {
            return Err(Error::CursorVersion(c.version));
        }
        check_order(c.order)?;
        Ok(c)
    }
}

struct Frame {
    g: Partial,
    next_subset: u64,
}

/// Sequential enumerator over the isomorphism classes of a fixed order,
/// yielding canonically labeled representatives in the fixed generation
/// order. Supports saving a cursor after any yielded graph and resuming
/// from one.
pub struct Enumerator {
    target: usize,
    stack: Vec<Frame>,
    /// pending K_1 emission for target 1
    root_pending: bool,
    emitted: u64,
    last_path: Option<Vec<u64>>,
}

impl Enumerator {
    pub fn new(target: usize) -> Result<Self> {
        check_order(target)?;
        Ok(Enumerator {
            target,
            stack: if target == 1 {
                Vec::new()
            } else {
                vec![Frame {
                    g: Partial::k1(),
                    next_subset: 0,
                }]
            },
            root_pending: target == 1,
            emitted: 0,
            last_path: None,
        })
    }

    /// Rebuilds the enumerator state a cursor describes; continues with
    /// everything after the cursor's position.
    pub fn resume(cursor: &EnumCursor) -> Result<Self> {
        if cursor.version != CURSOR_VERSION {
            return Err(Error::CursorVersion(cursor.version));
        }
        check_order(cursor.order)?;
        let Some(path) = &cursor.position else {
            let mut e = Enumerator::new(cursor.order)?;
            e.emitted = cursor.visited;
            return Ok(e);
        };
        if cursor.order == 1 {
            if !path.is_empty() {
                return Err(Error::CursorCorrupt("path too deep for order 1".into()));
            }
            return Ok(Enumerator {
                target: 1,
                stack: Vec::new(),
                root_pending: false,
                emitted: cursor.visited,
                last_path: Some(path.clone()),
            });
        }
        if path.len() > cursor.order - 1 {
            return Err(Error::CursorCorrupt("path too deep".into()));
        }
        let mut stack = Vec::with_capacity(path.len());
        let mut g = Partial::k1();
        for (depth, &subset) in path.iter().enumerate() {
            if subset >= 1 << g.n {
                return Err(Error::CursorCorrupt(format!(
                    "subset {subset} out of range at depth {depth}"
                )));
            }
            let child = g.child(subset);
            if !child.is_canonical() {
                return Err(Error::CursorCorrupt(format!(
                    "path leaves the canonical tree at depth {depth}"
                )));
            }
            stack.push(Frame {
                g,
                next_subset: subset + 1,
            });
            g = child;
        }
        Ok(Enumerator {
            target: cursor.order,
            stack,
            root_pending: false,
            emitted: cursor.visited,
            last_path: Some(path.clone()),
        })
    }

    /// Cursor marking everything yielded so far as visited.
    pub fn cursor(&self) -> EnumCursor {
        EnumCursor {
            version: CURSOR_VERSION,
            order: self.target,
            position: self.last_path.clone(),
            visited: self.emitted,
        }
    }

    pub fn visited(&self) -> u64 {
        self.emitted
    }

    fn record_yield(&mut self) {
        self.emitted += 1;
        self.last_path = Some(
            self.stack
                .iter()
                .map(|f| f.next_subset - 1)
                .collect::<Vec<_>>(),
        );
    }
}

impl Iterator for Enumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.root_pending {
            self.root_pending = false;
            self.record_yield();
            return Some(Partial::k1().to_graph());
        }
        loop {
            let target = self.target;
            let top = self.stack.last_mut()?;
            let m = top.g.n;
            if top.next_subset >= 1 << m {
                self.stack.pop();
                continue;
            }
            let subset = top.next_subset;
            top.next_subset += 1;
            let child = top.g.child(subset);
            if !child.is_canonical() {
                continue;
            }
            if child.n == target {
                // child is a leaf: its construction path is the stack's
                // consumed subsets
                self.record_yield();
                return Some(child.to_graph());
            }
            self.stack.push(Frame {
                g: child,
                next_subset: 0,
            });
        }
    }
}

/// Visits one canonically labeled representative per isomorphism class of
/// order `n`, in the fixed generation order. Returns the number visited.
pub fn enumerate_graphs(
    n: usize,
    mut visitor: impl FnMut(&Graph) -> ControlFlow<()>,
) -> Result<u64> {
    let mut count = 0;
    for g in Enumerator::new(n)? {
        count += 1;
        if visitor(&g).is_break() {
            break;
        }
    }
    Ok(count)
}

/// Continues an interrupted enumeration. Visits exactly the classes the
/// cursor has not covered; returns the count visited by this call and the
/// final cursor.
pub fn cursor_resume(
    cursor: &EnumCursor,
    mut visitor: impl FnMut(&Graph) -> ControlFlow<()>,
) -> Result<(u64, EnumCursor)> {
    let mut e = Enumerator::resume(cursor)?;
    let mut count = 0;
    for g in e.by_ref() {
        count += 1;
        if visitor(&g).is_break() {
            break;
        }
    }
    Ok((count, e.cursor()))
}

// ---------------------------------------------------------------------------
// work units
// ---------------------------------------------------------------------------

/// Order at which subtree roots are cut for `n`.
fn split_order(n: usize) -> usize {
    n.min(SPLIT_ORDER)
}

/// Expands a subtree root to order `n`, visiting every order-`n` leaf
/// below it. Returns the number of leaves delivered (including the one a
/// break happened on).
fn expand_unit(
    root: &Partial,
    n: usize,
    visit: &mut impl FnMut(&Graph) -> ControlFlow<()>,
) -> (u64, bool) {
    if root.n == n {
        let g = root.to_graph();
        return (1, visit(&g).is_break());
    }
    let mut count = 0;
    let mut stopped = false;
    for subset in 0..1u64 << root.n {
        let child = root.child(subset);
        if !child.is_canonical() {
            continue;
        }
        let (c, b) = expand_unit(&child, n, visit);
        count += c;
        if b {
            stopped = true;
            break;
        }
    }
    (count, stopped)
}

/// Sequential source of work units: the canonical graphs at the split
/// order, numbered in generation order.
pub(crate) struct UnitSource {
    inner: Enumerator,
    next_index: u64,
}

pub(crate) struct Unit {
    pub index: u64,
    pub path: Vec<u64>,
    root: Partial,
}

impl Unit {
    /// Visits every order-`n` class in this unit's subtree.
    pub fn expand(&self, n: usize, visit: &mut impl FnMut(&Graph) -> ControlFlow<()>) -> u64 {
        expand_unit(&self.root, n, visit).0
    }
}

impl UnitSource {
    pub fn new(n: usize, skip_units: u64) -> Result<Self> {
        check_order(n)?;
        let mut inner = Enumerator::new(split_order(n))?;
        for _ in 0..skip_units {
            if inner.next().is_none() {
                break;
            }
        }
        Ok(UnitSource {
            inner,
            next_index: skip_units,
        })
    }

    /// Construction path of the last unit walked past (skipped or
    /// yielded); `None` at the very start.
    pub fn last_path(&self) -> Option<Vec<u64>> {
        self.inner.cursor().position
    }

    pub fn next_unit(&mut self) -> Option<Unit> {
        let g = self.inner.next()?;
        let index = self.next_index;
        self.next_index += 1;
        let mut root = Partial {
            n: g.order(),
            rows: [0; MAX_ENUM_ORDER],
        };
        root.rows[..g.order()].copy_from_slice(g.rows());
        Some(Unit {
            index,
            path: self
                .inner
                .cursor()
                .position
                .expect("yielded unit has a path"),
            root,
        })
    }

    pub fn next_block(&mut self, size: usize) -> Vec<Unit> {
        let mut block = Vec::with_capacity(size);
        while block.len() < size {
            match self.next_unit() {
                Some(u) => block.push(u),
                None => break,
            }
        }
        block
    }
}

/// Visits the classes of order `n` whose unit index is `shard` modulo
/// `shard_count`. The shards partition the full enumeration: their visited
/// sets are pairwise disjoint and their union (for any shard count) is
/// exactly the set `enumerate_graphs(n)` visits.
pub fn enumerate_partitioned(
    n: usize,
    shard: usize,
    shard_count: usize,
    mut visitor: impl FnMut(&Graph) -> ControlFlow<()>,
) -> Result<u64> {
    if shard_count == 0 || shard >= shard_count {
        return Err(Error::ShardIndex { shard, shard_count });
    }
    let mut source = UnitSource::new(n, 0)?;
    let mut count = 0;
    while let Some(unit) = source.next_unit() {
        if unit.index % shard_count as u64 != shard as u64 {
            continue;
        }
        let mut stop = false;
        count += unit.expand(n, &mut |g| {
            if visitor(g).is_break() {
                stop = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if stop {
            break;
        }
    }
    Ok(count)
}

// ---------------------------------------------------------------------------
// chunked parallel sweeps
// ---------------------------------------------------------------------------

/// Outcome of one work unit inside a parallel sweep.
pub(crate) struct UnitReport<T> {
    pub path: Vec<u64>,
    pub classes: u64,
    pub value: T,
}

/// Runs `job` over every unit of the order-`n` enumeration, a chunk at a
/// time, in parallel inside each chunk. Chunks run in unit order;
/// `after_chunk` sees the reports of each finished chunk (still in unit
/// order) and decides whether to continue. Starting at `skip_units`
/// supports checkpoint resume. The chunk layout is fixed by unit indices
/// only, so results and any stop decision are independent of thread count
/// and scheduling.
pub(crate) fn sweep_units<T: Send>(
    n: usize,
    skip_units: u64,
    chunk_size: usize,
    job: impl Fn(&Unit) -> UnitReport<T> + Sync,
    mut after_chunk: impl FnMut(Vec<UnitReport<T>>) -> ControlFlow<()>,
) -> Result<()> {
    use rayon::prelude::*;
    let mut source = UnitSource::new(n, skip_units)?;
    loop {
        let block = source.next_block(chunk_size);
        if block.is_empty() {
            return Ok(());
        }
        let reports: Vec<UnitReport<T>> = block.par_iter().map(&job).collect();
        if after_chunk(reports).is_break() {
            return Ok(());
        }
    }
}
