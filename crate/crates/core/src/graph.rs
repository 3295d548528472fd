//! Ordered graphs, order-preserving vertex maps and interval colourings.
//!
//! Vertices are `0..n` and the total order is the index order, so two ordered
//! graphs on the same number of vertices are isomorphic exactly when their edge
//! sets coincide.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::search::{HomSearch, ValueOrder};

/// An undirected graph whose vertex order is given by the vertex indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl OrderedGraph {
    /// Builds a graph on `n` vertices, normalising each edge to `u < v` and
    /// dropping repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// The ordered path `0 - 1 - ... - (m-1)`.
    pub fn path(m: usize) -> Result<Self> {
        Self::new(m, (1..m).map(|i| (i - 1, i)))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        OrderedGraph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Subgraph induced by `vertices`, re-indexed in order. Also returns the
    /// sorted original indices.
    pub fn induced(&self, vertices: &[usize]) -> Result<(OrderedGraph, Vec<usize>)> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Ok((OrderedGraph::from_sorted(keep.len(), edges), keep))
    }

    /// `v -> max { u < v : uv ∈ E }`, if any.
    fn left_reach(&self) -> Vec<Option<usize>> {
        (0..self.n)
            .map(|v| self.adj[v].iter().copied().take_while(|&u| u < v).last())
            .collect()
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// An order-preserving vertex map, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    image: Vec<usize>,
}

impl MonotoneMap {
    /// Fails with [`Error::NotMonotone`] at the first descent.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        if let Some(i) = (1..image.len()).find(|&i| image[i - 1] > image[i]) {
            return Err(Error::NotMonotone(i));
        }
        Ok(MonotoneMap { image })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            image: (0..n).collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(image.windows(2).all(|w| w[0] <= w[1]));
        MonotoneMap { image }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// Distinct image vertices, sorted.
    pub fn range(&self) -> Vec<usize> {
        let mut r = self.image.clone();
        r.dedup();
        r
    }

    /// Source indices mapped to `t`. Contiguous because the map is monotone.
    pub fn preimage(&self, t: usize) -> Range<usize> {
        let lo = self.image.partition_point(|&x| x < t);
        let hi = self.image.partition_point(|&x| x <= t);
        lo..hi
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MonotoneMap) -> MonotoneMap {
        MonotoneMap {
            image: self.image.iter().map(|&t| other.image[t]).collect(),
        }
    }

    /// `f(0)=a f(1)=b ...`
    pub fn display_line(&self) -> String {
        self.image
            .iter()
            .enumerate()
            .map(|(i, t)| format!("f({i})={t}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A partition of `0..n` into consecutive blocks, given by the start index of
/// every block after the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    n: usize,
    cuts: Vec<usize>,
}

impl IntervalPartition {
    pub fn new(n: usize, cuts: Vec<usize>) -> Result<Self> {
        let mut prev = 0;
        for &c in &cuts {
            if c <= prev || c >= n {
                return Err(Error::ParameterOutOfRange(format!(
                    "cut {c} in partition of {n}"
                )));
            }
            prev = c;
        }
        Ok(IntervalPartition { n, cuts })
    }

    /// Block start positions after the first block.
    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn block_count(&self) -> usize {
        self.cuts.len() + 1
    }

    pub fn blocks(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        let starts = std::iter::once(0).chain(self.cuts.iter().copied());
        let ends = self.cuts.iter().copied().chain(std::iter::once(self.n));
        starts.zip(ends).map(|(a, b)| a..b)
    }

    /// True when every block is an independent set of `g`.
    pub fn is_independent_in(&self, g: &OrderedGraph) -> bool {
        self.n == g.vertex_count()
            && self
                .blocks()
                .all(|b| is_independent_interval(g, b.start, b.end - 1).unwrap_or(false))
    }
}

/// True iff no edge has both endpoints in `lo..=hi`.
pub fn is_independent_interval(g: &OrderedGraph, lo: usize, hi: usize) -> Result<bool> {
    if lo > hi || hi >= g.n {
        return Err(Error::InvalidInterval { lo, hi, n: g.n });
    }
    Ok(!g.edges.iter().any(|&(u, v)| lo <= u && v <= hi))
}

/// Interval chromatic number together with a minimum partition into
/// independent intervals.
///
/// Blocks are grown greedily from the left as far as they stay independent.
/// Independence is inherited by subintervals, so this is optimal.
pub fn interval_chromatic_number(g: &OrderedGraph) -> (usize, IntervalPartition) {
    let reach = g.left_reach();
    let mut cuts = Vec::new();
    let mut start = 0;
    for (v, r) in reach.iter().enumerate().skip(1) {
        if r.is_some_and(|u| u >= start) {
            cuts.push(v);
            start = v;
        }
    }
    let p = IntervalPartition { n: g.n, cuts };
    (p.block_count(), p)
}

/// Checks that `f` is an ordered homomorphism from `g` to `h`.
///
/// Fails if `f` has the wrong length or points outside `h`.
pub fn is_ordered_homomorphism(
    g: &OrderedGraph,
    h: &OrderedGraph,
    f: &MonotoneMap,
) -> Result<bool> {
    if f.len() != g.n {
        return Err(Error::LengthMismatch {
            expected: g.n,
            got: f.len(),
        });
    }
    if let Some(&t) = f.image.iter().find(|&&t| t >= h.n) {
        return Err(Error::VertexOutOfRange { vertex: t, n: h.n });
    }
    Ok(g.edges
        .iter()
        .all(|&(u, v)| h.has_edge(f.image[u], f.image[v])))
}

/// Lexicographically smallest ordered homomorphism `g -> h`, if any.
pub fn find_ordered_homomorphism(g: &OrderedGraph, h: &OrderedGraph) -> Option<MonotoneMap> {
    HomSearch::new(g, h).order(ValueOrder::Ascending).first()
}

/// The image `(f(V), f(E))` of an endomorphism, re-indexed in order, with the
/// original indices of its vertices.
pub fn image_subgraph(g: &OrderedGraph, f: &MonotoneMap) -> Result<(OrderedGraph, Vec<usize>)> {
    if !is_ordered_homomorphism(g, g, f)? {
        return Err(Error::NotAHomomorphism);
    }
    let keep = f.range();
    let mut index = vec![usize::MAX; g.n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let edges = g
        .edges
        .iter()
        .map(|&(u, v)| (index[f.image[u]], index[f.image[v]]));
    Ok((OrderedGraph::new(keep.len(), edges)?, keep))
}
