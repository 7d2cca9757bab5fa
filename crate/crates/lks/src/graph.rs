//! Undirected simple graphs on at most 64 vertices with bitset adjacency rows.
//!
//! All hosts handled by the harness are small, so a neighbourhood is a single
//! `u64` word and set operations like `N(v) ∩ X` are word operations.

use crate::{LksError, Result};

/// Hard cap on vertex count; adjacency rows are single machine words.
pub const MAX_VERTICES: usize = 64;

/// Default cap for exhaustive labeled-graph enumeration.
pub const DEFAULT_GRAPH_ENUM_CAP: usize = 7;

/// A set of vertices as a bitmask over vertex ids `0..n`.
pub type VertexSet = u64;

/// Single-vertex set.
#[inline(always)]
pub const fn vbit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the members of a vertex set in ascending order.
pub fn set_members(mut s: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

/// Collects a vertex set from vertex ids.
pub fn set_from<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
    it.into_iter().fold(0, |acc, v| acc | vbit(v))
}

/// An undirected simple graph with per-vertex neighbour bitsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(LksError::TooManyVertices(n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(LksError::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(LksError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    /// Inserts edge `uv`; no-op if present. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(LksError::Precondition(format!("loop at vertex {u}")));
        }
        if self.adj[u] & vbit(v) == 0 {
            self.adj[u] |= vbit(v);
            self.adj[v] |= vbit(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    /// Removes edge `uv` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if self.adj[u] & vbit(v) != 0 {
            self.adj[u] &= !vbit(v);
            self.adj[v] &= !vbit(u);
            self.edge_count -= 1;
        }
        Ok(())
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & vbit(v) != 0
    }

    /// Neighbour set `N(v)`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `deg_X(v) = |N(v) ∩ X|`.
    #[inline(always)]
    pub fn degree_into(&self, v: usize, x: VertexSet) -> usize {
        (self.adj[v] & x).count_ones() as usize
    }

    /// `N(X) = ⋃_{v∈X} N(v) ∖ X`.
    pub fn neighborhood_of_set(&self, x: VertexSet) -> VertexSet {
        let mut acc = 0;
        for v in set_members(x & self.vertex_set()) {
            acc |= self.adj[v];
        }
        acc & !x
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in set_members(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of edges between two disjoint vertex sets.
    pub fn edges_between(&self, y: VertexSet, z: VertexSet) -> usize {
        debug_assert_eq!(y & z, 0);
        set_members(y).map(|v| self.degree_into(v, z)).sum()
    }

    /// BFS shortest-path distance; `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        if u == v {
            return Some(0);
        }
        let mut frontier = vbit(u);
        let mut seen = vbit(u);
        let mut dist = 0;
        while frontier != 0 {
            dist += 1;
            let mut next = 0;
            for w in set_members(frontier) {
                next |= self.adj[w];
            }
            next &= !seen;
            if next & vbit(v) != 0 {
                return Some(dist);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// All BFS distances from `u`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, u: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut frontier = vbit(u);
        let mut seen = vbit(u);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in set_members(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in set_members(next) {
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Maximum pairwise distance; `None` for disconnected (or empty) graphs.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        for u in 0..self.n {
            let dist = self.distances_from(u);
            for &d in &dist {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vbit(0);
        loop {
            let next = self.neighborhood_of_set(seen);
            if next == 0 {
                break;
            }
            seen |= next;
        }
        seen == self.vertex_set()
    }

    /// Appends `extra` isolated vertices, leaving existing degrees unchanged.
    pub fn pad_with_isolated(&self, extra: usize) -> Result<Graph> {
        let n = self.n + extra;
        if n > MAX_VERTICES {
            return Err(LksError::TooManyVertices(n, MAX_VERTICES));
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Ok(Graph {
            n,
            adj,
            edge_count: self.edge_count,
        })
    }

    /// Encodes the graph in graph6 format.
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            // 63 <= n <= 258047: '~' then 18 bits, big-endian, 6 bits per byte.
            out.push(126);
            out.push(((self.n >> 12) & 0x3f) as u8 + 63);
            out.push(((self.n >> 6) & 0x3f) as u8 + 63);
            out.push((self.n & 0x3f) as u8 + 63);
        }
        // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
        let mut acc = 0u8;
        let mut nbits = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc <<= 1;
                if self.has_edge(u, v) {
                    acc |= 1;
                }
                nbits += 1;
                if nbits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            acc <<= 6 - nbits;
            out.push(acc + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Decodes a graph6 string.
    pub fn from_graph6(s: &str) -> Result<Graph> {
        let bytes: Vec<u8> = s.trim().bytes().collect();
        if bytes.is_empty() {
            return Err(LksError::Graph6("empty input".into()));
        }
        for &b in &bytes {
            if !(63..=126).contains(&b) {
                return Err(LksError::Graph6(format!("byte {b} out of graph6 range")));
            }
        }
        let (n, mut pos) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(LksError::Graph6("graphs beyond 258047 vertices unsupported".into()));
            }
            if bytes.len() < 4 {
                return Err(LksError::Graph6("truncated long-form order".into()));
            }
            let n = (((bytes[1] - 63) as usize) << 12)
                | (((bytes[2] - 63) as usize) << 6)
                | ((bytes[3] - 63) as usize);
            (n, 4)
        } else {
            ((bytes[0] - 63) as usize, 1)
        };
        if n > MAX_VERTICES {
            return Err(LksError::TooManyVertices(n, MAX_VERTICES));
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let needed = nbits.div_ceil(6);
        if bytes.len() - pos < needed {
            return Err(LksError::Graph6(format!(
                "expected {} data bytes, found {}",
                needed,
                bytes.len() - pos
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut cur = 0u8;
        let mut left = 0;
        for v in 1..n {
            for u in 0..v {
                if left == 0 {
                    cur = bytes[pos] - 63;
                    pos += 1;
                    left = 6;
                }
                if cur & (1 << (left - 1)) != 0 {
                    g.add_edge(u, v)?;
                }
                left -= 1;
            }
        }
        Ok(g)
    }
}

/// Yields every labeled simple graph on `n` vertices exactly once, in
/// edge-mask order (mask bit order matches graph6 column order).
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    enumerate_labeled_graphs_capped(n, DEFAULT_GRAPH_ENUM_CAP)
}

/// As [`enumerate_labeled_graphs`], with an explicit cap.
pub fn enumerate_labeled_graphs_capped(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Graph>> {
    if n > cap {
        return Err(LksError::CapExceeded(format!(
            "labeled graph enumeration requested for n={n}, cap is {cap}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    let total: u64 = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Graph::empty(n).expect("n within cap");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }))
}

/// Builds the graph for a given edge mask, using the same pair order as
/// [`enumerate_labeled_graphs`].
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v)?;
            }
            i += 1;
        }
    }
    Ok(g)
}
