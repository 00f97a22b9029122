//! Dense undirected simple graphs.
//!
//! Adjacency is stored as one bitset row per vertex, rows padded to whole
//! `u64` words and laid out contiguously. A [`Graph`] is immutable once
//! built; the "edit" helpers ([`Graph::with_edge`], [`Graph::without_edge`])
//! return new graphs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            edges: 0,
        }
    }

    /// Builds a graph from an edge sequence.
    ///
    /// Endpoints may be given in either order. Self-loops, out-of-range
    /// endpoints and repeated pairs are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Neighborhood bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    #[inline]
    pub(crate) fn degree_unchecked(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree_unchecked(v)).collect()
    }

    /// Size of `N(u) ∩ N(v)`.
    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().collect(),
        }
    }

    /// Copy of the graph with `(u, v)` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v)?;
        Ok(b.build())
    }

    /// Copy of the graph with `(u, v)` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u.min(v), u.max(v)));
        }
        let mut b = GraphBuilder::from_graph(self);
        b.clear(u, v);
        b.clear(v, u);
        b.edges -= 1;
        Ok(b.build())
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::PreconditionViolated(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut b = GraphBuilder::new(n);
        for (u, v) in self.edges() {
            b.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            b.set_edge(self.n + u, self.n + v);
        }
        b.build()
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.set_edge(i, j);
                }
            }
        }
        b.build()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::OutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edges: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        GraphBuilder {
            n,
            words,
            bits: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            words: g.words,
            bits: g.bits.clone(),
            edges: g.edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `(u, v)`, rejecting loops, duplicates and bad endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set_edge(u, v);
        Ok(())
    }

    /// Adds every edge between `a` and `b`.
    pub fn add_complete_bipartite(&mut self, a: std::ops::Range<usize>, b: std::ops::Range<usize>) -> Result<()> {
        for u in a {
            for v in b.clone() {
                self.add_edge(u, v)?;
            }
        }
        Ok(())
    }

    /// Copies `g` onto vertices `offset..offset + g.n()`.
    pub fn add_graph_at(&mut self, g: &Graph, offset: usize) -> Result<()> {
        for (u, v) in g.edges() {
            self.add_edge(offset + u, offset + v)?;
        }
        Ok(())
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.edges += 1;
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            bits: self.bits,
            edges: self.edges,
        }
    }
}

/// Sorted, duplicate-free list of edges `(u, v)` with `u < v < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    /// Checks the sortedness and bounds invariants.
    pub fn validate(&self) -> Result<()> {
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if v >= self.n {
                return Err(Error::OutOfRange { vertex: v, n: self.n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u > v {
                return Err(Error::PreconditionViolated(format!("edge {u}-{v} is not oriented u < v")));
            }
            if i > 0 && self.edges[i - 1] >= (u, v) {
                if self.edges[i - 1] == (u, v) {
                    return Err(Error::DuplicateEdge(u, v));
                }
                return Err(Error::PreconditionViolated("edges are not sorted".into()));
            }
        }
        Ok(())
    }

    pub fn to_graph(&self) -> Result<Graph> {
        self.validate()?;
        Graph::from_edges(self.n, self.edges.iter().copied())
    }
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        g.to_edge_list()
    }
}
