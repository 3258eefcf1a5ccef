use crate::error::{Error, Result};

/// Largest supported order: one adjacency row fits a machine word, so edge
/// tests are constant time. Everything in this crate needs n <= 35.
pub const MAX_ORDER: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph of order at most 64 with value semantics.
///
/// `adj[v]` is the neighborhood of `v` as a bit mask over vertex indices
/// `0..n-1`. Rows are kept symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds the graph with exactly the given edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        debug_assert_eq!(rows.len(), n);
        debug_assert!(rows.iter().enumerate().all(|(v, &r)| r & bit(v) == 0));
        Graph {
            n,
            adj: rows.to_vec(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Complete bipartite graph with parts `{0..s}` and `{s..s+t}`.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self> {
        let n = s
            .checked_add(t)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(Error::CombinedOrderTooLarge(s.saturating_add(t)))?;
        let mut g = Graph::empty(n)?;
        let left = low_bits(s);
        let right = low_bits(n) & !left;
        for v in 0..s {
            g.adj[v] = right;
        }
        for v in s..n {
            g.adj[v] = left;
        }
        Ok(g)
    }

    /// Star `K_{1,k-1}` of order `k` with center vertex 0.
    pub fn star(k: usize) -> Result<Self> {
        if k == 0 {
            return Graph::empty(0);
        }
        Graph::complete_bipartite(1, k - 1)
    }

    /// Path on `n` vertices in index order.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.adj[v - 1] |= bit(v);
            g.adj[v] |= bit(v - 1);
        }
        Ok(g)
    }

    /// The graph `F_k` on vertices `v_1..v_k` (stored 0-indexed: `v_i` is
    /// index `i-1`), where `v_i ~ v_j` exactly for `i` in `[1, k/2]` and
    /// `j` in `[1+i, k+1-i]`. `F_1 = K_1`, `F_2 = K_2`, `F_3 = P_3`,
    /// `F_4 = K_{1,3}+e`; the family is nested: `F_k` is a subgraph of
    /// `F_{k+1}` under the identity map.
    pub fn fk(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain(format!("F_k requires k >= 1, got {k}")));
        }
        let mut g = Graph::empty(k)?;
        for i in 1..=k / 2 {
            for j in (1 + i)..=(k + 1 - i) {
                g.adj[i - 1] |= bit(j - 1);
                g.adj[j - 1] |= bit(i - 1);
            }
        }
        Ok(g)
    }

    #[inline(always)]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// True when the graph has no edges (an "empty graph" in the classical sense).
    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(self
            .adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap())
    }

    pub fn max_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(self
            .adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap())
    }

    /// Complement on the same vertex set; an involution.
    pub fn complement(&self) -> Self {
        let all = low_bits(self.n);
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are re-indexed after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::CombinedOrderTooLarge(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by the vertices in `mask`, re-indexed to
    /// `0..popcount(mask)` in ascending original order.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let kept: Vec<usize> = (0..self.n).filter(|&v| mask & bit(v) != 0).collect();
        let mut g = Graph {
            n: kept.len(),
            adj: vec![0; kept.len()],
        };
        for (i, &v) in kept.iter().enumerate() {
            for (j, &u) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(v, u) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        g
    }

    /// Mask of vertices with at least one neighbor.
    pub fn covered_vertices(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.adj[v] != 0)
            .fold(0, |m, v| m | bit(v))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for v in 0..self.n {
            let mut later = self.adj[v] & !low_bits(v + 1);
            while later != 0 {
                let u = later.trailing_zeros() as usize;
                later &= later - 1;
                out.push((v, u));
            }
        }
        out
    }

    /// Vertex sets of connected components, as bit masks.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut frontier = bit(v);
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Parses the text form `"n; u v; u v; ..."` with 1-based endpoints.
    pub fn from_edge_list_str(s: &str) -> Result<Self> {
        let mut parts = s.split(';').map(str::trim);
        let head = parts
            .next()
            .ok_or_else(|| Error::EdgeList("missing order".into()))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad order {head:?}")))?;
        let mut edges = Vec::new();
        for part in parts {
            if part.is_empty() {
                continue;
            }
            let mut ends = part.split_whitespace();
            let (u, v) = match (ends.next(), ends.next(), ends.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(Error::EdgeList(format!("bad edge {part:?}"))),
            };
            let parse = |tok: &str| -> Result<usize> {
                let x: usize = tok
                    .parse()
                    .map_err(|_| Error::EdgeList(format!("bad vertex {tok:?}")))?;
                if x == 0 || x > n {
                    return Err(Error::EdgeList(format!("vertex {x} outside [1,{n}]")));
                }
                Ok(x - 1)
            };
            edges.push((parse(u)?, parse(v)?));
        }
        Graph::from_edges(n, &edges)
    }

    /// The inverse of [`Graph::from_edge_list_str`], 1-based.
    pub fn to_edge_list_string(&self) -> String {
        let mut s = self.n.to_string();
        for (u, v) in self.edges() {
            s.push_str(&format!("; {} {}", u + 1, v + 1));
        }
        s
    }

    /// A conventional name when the graph is a union of cliques (`2K_3`,
    /// `K_1 + K_2`) or complete multipartite (`K_{3,3}`, `K_{1,2}`),
    /// up to isomorphism. `None` otherwise.
    pub fn family_name(&self) -> Option<String> {
        fn clique_sizes(g: &Graph) -> Option<Vec<usize>> {
            let mut sizes = Vec::new();
            for comp in g.components() {
                let c = comp.count_ones() as usize;
                if g.induced_subgraph(comp).size() != c * (c - 1) / 2 {
                    return None;
                }
                sizes.push(c);
            }
            sizes.sort_unstable();
            Some(sizes)
        }
        if self.n == 0 {
            return None;
        }
        if let Some(sizes) = clique_sizes(self) {
            // group equal sizes: [3,3] -> 2K_3, [2,1] -> K_2 + K_1
            let mut parts: Vec<String> = Vec::new();
            let mut i = 0;
            while i < sizes.len() {
                let j = sizes[i..].iter().take_while(|&&s| s == sizes[i]).count();
                parts.push(if j == 1 {
                    format!("K_{}", sizes[i])
                } else {
                    format!("{j}K_{}", sizes[i])
                });
                i += j;
            }
            return Some(parts.join(" + "));
        }
        if let Some(sizes) = clique_sizes(&self.complement()) {
            if sizes.len() >= 2 {
                let inner = sizes
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                return Some(format!("K_{{{inner}}}"));
            }
        }
        None
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
