//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bit mask per vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count (one `u64` neighbor mask per vertex).
pub const MAX_VERTICES: usize = 64;

/// An unordered vertex pair, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A subset of `0..n`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(VertexSet::from_slice(&vs))
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Immutable once built: every constructor checks symmetry and the absence of
/// loops, so all queries can assume a well-formed adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let valid = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if row & !valid != 0 {
                let w = (row & !valid).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            for w in VertexSet(row).iter() {
                if adj[w] & bit(v) == 0 {
                    return Err(Error::InvalidParameters(format!(
                        "adjacency not symmetric at ({v}, {w})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Parses the plain edge-list text format: the vertex count on the first
    /// non-empty line, then one `u v` pair per line. `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::EdgeList(format!("expected `u v`, got {line:?}")));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::EdgeList(format!("bad vertex {s:?}")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Sorted (non-increasing) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Minimum degree; 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_mask(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// `G1 ∪ G2`: the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// `G1 ∨ G2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// The graph with the given edges added (endpoints must be in range).
    pub fn with_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// The graph with one edge removed. Removing a non-edge is a no-op.
    pub fn without_edge(&self, (u, v): Edge) -> Graph {
        let mut g = self.clone();
        if u < self.n && v < self.n {
            g.adj[u] &= !bit(v);
            g.adj[v] &= !bit(u);
        }
        g
    }

    /// `G - S`, relabeled order-preservingly. The returned map sends each new
    /// vertex id to its id in `self`.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep = VertexSet(self.vertices().0 & !s.0);
        Ok(self.induced(keep))
    }

    /// The subgraph induced by `keep`, relabeled order-preservingly, plus the
    /// new-to-old vertex map.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut adj = vec![0u64; map.len()];
        for (i, &old_i) in map.iter().enumerate() {
            for (j, &old_j) in map.iter().enumerate() {
                if self.adj[old_i] & bit(old_j) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    /// The graph with vertices renamed by `perm` (old vertex `v` becomes
    /// `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "permutation has length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Vertices reachable from `start` inside `within` (which must contain
    /// `start`).
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, each as a
    /// mask, ordered by smallest vertex.
    pub(crate) fn component_masks(&self, within: u64) -> Vec<u64> {
        let mut rest = within & low_mask(self.n);
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.reach(v, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Number of odd-order components of the subgraph induced by `within`.
    pub(crate) fn odd_components_within(&self, within: u64) -> usize {
        let mut rest = within & low_mask(self.n);
        let mut odd = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.reach(v, rest);
            odd += (c.count_ones() & 1) as usize;
            rest &= !c;
        }
        odd
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, low_mask(self.n)) == low_mask(self.n)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.component_masks(low_mask(self.n))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// `o(G - S)`: the number of odd-order components left after deleting `s`.
    pub fn odd_components(&self, s: VertexSet) -> usize {
        self.odd_components_within(low_mask(self.n) & !s.0)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
