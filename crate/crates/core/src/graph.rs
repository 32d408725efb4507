//! Simple undirected graphs with bit-packed adjacency, seeded `G(n, p)`
//! sampling and the domination predicates every solver is checked against.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{param, Result};
use crate::scalar;

/// Vertex id, always `< n`.
pub type Vertex = usize;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<BitSet>,
    closed: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return param(format!("edge ({u}, {v}) out of range for n = {n}"));
            }
            if u == v {
                return param(format!("self-loop at vertex {u}"));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    fn from_rows(adj: Vec<BitSet>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(BitSet::count).sum::<usize>() / 2;
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        Graph { n, m, adj, closed }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![BitSet::new(n); n])
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut r = BitSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(adj)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid petersen")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Open neighborhood row of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &BitSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: Vertex) -> &BitSet {
        &self.closed[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BitSet::count).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Returns a copy with the extra edge `{u, v}`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return param(format!("self-loop at vertex {u}"));
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Ok(Self::from_rows(adj))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return param(format!("vertex {v} out of range for n = {}", self.n));
        }
        Ok(())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// `s ∪ N(s)` as a bit mask. Ids must already be in range.
    pub fn closure_bits(&self, s: &VertexSet) -> BitSet {
        let mut acc = BitSet::new(self.n);
        for &v in s.iter() {
            acc.union_with(&self.closed[v]);
        }
        acc
    }

    /// Returns `s ∪ {v : v has a neighbor in s}`.
    pub fn dominated_closure(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(VertexSet::from_bits(&self.closure_bits(s)))
    }

    /// True iff every vertex outside `s` has a neighbor in `s`. Members of `s`
    /// are not required to be dominated themselves.
    pub fn is_dominating(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.closure_bits(s).is_full())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .finish()
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_bits(bits: &BitSet) -> Self {
        VertexSet(bits.iter().collect())
    }

    pub fn to_bits(&self, n: usize) -> BitSet {
        let mut b = BitSet::new(n);
        for &v in &self.0 {
            b.insert(v);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    /// Comma-separated ids, e.g. `0,3,7`.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Parameters of one `G(n, p)` draw.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl GenParams {
    pub fn new(n: usize, p: f64, seed: u64) -> Self {
        GenParams { n, p, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return param("n must be at least 1");
        }
        if !scalar::is_probability(self.p) {
            return param(format!("edge probability {} outside (0, 1)", self.p));
        }
        Ok(())
    }

    pub fn q(&self) -> f64 {
        scalar::q_of(self.p)
    }
}

/// Samples `G(n, p)`.
///
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and each
/// consumes exactly one uniform `f64` from a ChaCha8 stream keyed by `seed`;
/// the edge is present iff the draw is `< p`.
pub fn gen_random_graph(params: GenParams) -> Result<Graph> {
    params.validate()?;
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut adj = vec![BitSet::new(n); n];
    for u in 0..n {
        for v in (u + 1)..n {
            let draw: f64 = rng.gen();
            if draw < params.p {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    Ok(Graph::from_rows(adj))
}
