//! Ordered `k`-uniform hypergraphs and exact homomorphism search on them.
//!
//! A monotone map `f` is a homomorphism `G -> H` when every hyperedge of `G`
//! is sent injectively onto a hyperedge of `H`. Since hyperedges are stored
//! sorted and `f` is monotone, the image of a hyperedge is again sorted, so
//! the search can check images position by position against the set of
//! hyperedge prefixes of `H`.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{MonotoneMap, OrderedGraph};

/// A hypergraph on `0..n` in which every hyperedge has exactly `k` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedHypergraph {
    n: usize,
    k: usize,
    /// Each hyperedge sorted ascending; the list itself sorted and deduplicated.
    edges: Vec<Vec<usize>>,
}

impl OrderedHypergraph {
    pub fn new(n: usize, k: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if k < 2 {
            return Err(Error::ParameterOutOfRange(format!(
                "uniformity must be at least 2, got {k}"
            )));
        }
        let mut list = Vec::new();
        for mut e in edges {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            if e.len() != k || e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadHyperedge(e));
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(OrderedHypergraph { n, k, edges: list })
    }

    /// The 2-uniform hypergraph with the same edges as `g`.
    pub fn from_graph(g: &OrderedGraph) -> Self {
        let edges = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
        OrderedHypergraph {
            n: g.vertex_count(),
            k: 2,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: &[usize]) -> bool {
        self.edges.binary_search_by(|x| x.as_slice().cmp(e)).is_ok()
    }

    /// True iff the vertex-hyperedge incidence graph is connected.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..self.n).all(|v| find(&mut parent, v) == root)
    }

    /// The hyperedges lying entirely inside `keep`, on the same vertex set.
    pub fn restrict_edges(&self, keep: &[bool]) -> OrderedHypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| keep[v]))
            .cloned()
            .collect();
        OrderedHypergraph {
            n: self.n,
            k: self.k,
            edges,
        }
    }
}

/// True iff `f` is monotone and maps every hyperedge of `g` injectively onto
/// a hyperedge of `h`.
pub fn is_ordered_hyperhom(
    g: &OrderedHypergraph,
    h: &OrderedHypergraph,
    f: &MonotoneMap,
) -> Result<bool> {
    if g.k != h.k {
        return Err(Error::UniformityMismatch(g.k, h.k));
    }
    if f.len() != g.n {
        return Err(Error::LengthMismatch {
            expected: g.n,
            got: f.len(),
        });
    }
    if let Some(&t) = f.image().iter().find(|&&t| t >= h.n) {
        return Err(Error::VertexOutOfRange { vertex: t, n: h.n });
    }
    Ok(g.edges.iter().all(|e| {
        let img: Vec<usize> = e.iter().map(|&v| f.apply(v)).collect();
        h.contains_edge(&img)
    }))
}

/// Backtracking search for hypergraph homomorphisms, mirroring
/// [`crate::search::HomSearch`] for graphs.
pub struct HyperSearch<'a> {
    source: &'a OrderedHypergraph,
    target: &'a OrderedHypergraph,
    pinned: Vec<Option<usize>>,
    allowed: Option<Vec<bool>>,
    non_identity: bool,
}

impl<'a> HyperSearch<'a> {
    pub fn new(source: &'a OrderedHypergraph, target: &'a OrderedHypergraph) -> Self {
        HyperSearch {
            source,
            target,
            pinned: vec![None; source.n],
            allowed: None,
            non_identity: false,
        }
    }

    pub fn pin(mut self, v: usize, t: usize) -> Self {
        self.pinned[v] = Some(t);
        self
    }

    pub fn allowed_targets(mut self, allowed: Vec<bool>) -> Self {
        self.allowed = Some(allowed);
        self
    }

    pub fn non_identity(mut self) -> Self {
        self.non_identity = true;
        self
    }

    pub fn first(&self) -> Option<MonotoneMap> {
        let mut found = None;
        self.for_each(|img| {
            found = Some(MonotoneMap::from_vec_unchecked(img.to_vec()));
            ControlFlow::Break(())
        });
        found
    }

    /// Visits homomorphisms in lexicographic order of their images until
    /// `visit` breaks. Returns true if it broke.
    pub fn for_each<F>(&self, mut visit: F) -> bool
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.source.k != self.target.k {
            return false;
        }
        let mut prefixes = HashSet::new();
        for e in &self.target.edges {
            for len in 1..=e.len() {
                prefixes.insert(e[..len].to_vec());
            }
        }
        // For each vertex, the hyperedges it closes a prefix of.
        let mut member: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.source.n];
        for (i, e) in self.source.edges.iter().enumerate() {
            for (pos, &v) in e.iter().enumerate() {
                member[v].push((i, pos));
            }
        }
        let candidates: Vec<Vec<usize>> = (0..self.source.n)
            .map(|v| {
                (0..self.target.n)
                    .filter(|&t| self.pinned[v].is_none_or(|p| p == t))
                    .filter(|&t| self.allowed.as_ref().is_none_or(|a| a[t]))
                    .collect()
            })
            .collect();
        let mut ctx = HyperCtx {
            edges: &self.source.edges,
            member,
            prefixes,
            candidates,
            image: vec![0; self.source.n],
            scratch: Vec::with_capacity(self.source.k),
            non_identity: self.non_identity,
        };
        ctx.dfs(0, 0, false, &mut visit).is_break()
    }
}

struct HyperCtx<'a> {
    edges: &'a [Vec<usize>],
    member: Vec<Vec<(usize, usize)>>,
    prefixes: HashSet<Vec<usize>>,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    scratch: Vec<usize>,
    non_identity: bool,
}

impl HyperCtx<'_> {
    fn dfs<F>(&mut self, v: usize, lo: usize, deviated: bool, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if v == self.image.len() {
            if self.non_identity && !deviated {
                return ControlFlow::Continue(());
            }
            return visit(&self.image);
        }
        let start = self.candidates[v].partition_point(|&t| t < lo);
        for idx in start..self.candidates[v].len() {
            let t = self.candidates[v][idx];
            self.image[v] = t;
            if self.consistent(v) {
                self.dfs(v + 1, t, deviated || t != v, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Every hyperedge through `v` has an image prefix that some target
    /// hyperedge starts with.
    fn consistent(&mut self, v: usize) -> bool {
        for &(e, pos) in &self.member[v] {
            self.scratch.clear();
            self.scratch
                .extend(self.edges[e][..=pos].iter().map(|&u| self.image[u]));
            if !self.prefixes.contains(&self.scratch) {
                return false;
            }
        }
        true
    }
}

/// A non-identity monotone endomorphism of `g`, which for a monotone map is
/// the same as a non-surjective one.
pub fn find_nonsurjective_hyper_endomorphism(g: &OrderedHypergraph) -> Option<MonotoneMap> {
    HyperSearch::new(g, g).non_identity().first()
}

/// A retraction of `g` onto the vertices `keep` and the hyperedges of `g`
/// contained in them, in `g`'s vertex indices.
pub fn decide_hyper_retraction(
    g: &OrderedHypergraph,
    keep: &[usize],
) -> Result<Option<MonotoneMap>> {
    if keep.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut in_keep = vec![false; g.n];
    for &v in keep {
        if v >= g.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n });
        }
        in_keep[v] = true;
    }
    let target = g.restrict_edges(&in_keep);
    let mut search = HyperSearch::new(g, &target);
    for &v in keep {
        search = search.pin(v, v);
    }
    Ok(search.allowed_targets(in_keep).first())
}
