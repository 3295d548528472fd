//! Cores of ordered graphs and the size-constrained retraction problems.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{image_subgraph, interval_chromatic_number, MonotoneMap, OrderedGraph};
use crate::retraction::{encode, Encoding, RetractionEncoding};
use crate::search::{HomSearch, ValueOrder};
use crate::twosat::{Lit, TwoSatInstance};

/// A non-surjective ordered homomorphism `g -> g`, lexicographically smallest.
pub fn find_nonsurjective_endomorphism(g: &OrderedGraph) -> Option<MonotoneMap> {
    find_nonsurjective_endomorphism_with(g, ValueOrder::Ascending)
}

pub fn find_nonsurjective_endomorphism_with(
    g: &OrderedGraph,
    order: ValueOrder,
) -> Option<MonotoneMap> {
    HomSearch::new(g, g).order(order).non_identity().first()
}

pub fn is_core(g: &OrderedGraph) -> bool {
    find_nonsurjective_endomorphism(g).is_none()
}

/// The core of a graph as a subgraph of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    /// The core, re-indexed in order.
    pub graph: OrderedGraph,
    /// Original index of each core vertex.
    pub embedding: Vec<usize>,
    /// A retraction of the input onto the core, in original indices.
    pub retraction: MonotoneMap,
}

pub fn compute_core(g: &OrderedGraph) -> Core {
    compute_core_with(g, ValueOrder::Ascending)
}

/// Repeatedly replaces the graph by the image of a non-surjective
/// endomorphism found with the given search order.
pub fn compute_core_with(g: &OrderedGraph, order: ValueOrder) -> Core {
    let mut current = g.clone();
    let mut embedding: Vec<usize> = (0..g.vertex_count()).collect();
    // Map from the input to `current`, in the indices of `current`.
    let mut to_current = MonotoneMap::identity(g.vertex_count());
    while let Some(f) = find_nonsurjective_endomorphism_with(&current, order) {
        let (img, keep) = image_subgraph(&current, &f).expect("search returns homomorphisms");
        let reindex: Vec<usize> = f
            .image()
            .iter()
            .map(|t| keep.binary_search(t).unwrap())
            .collect();
        to_current = to_current.then(&MonotoneMap::from_vec_unchecked(reindex));
        embedding = keep.iter().map(|&v| embedding[v]).collect();
        current = img;
    }
    let retraction =
        MonotoneMap::from_vec_unchecked(to_current.image().iter().map(|&i| embedding[i]).collect());
    Core {
        graph: current,
        embedding,
        retraction,
    }
}

/// A kept set together with a retraction onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractWitness {
    pub vertices: Vec<usize>,
    pub map: MonotoneMap,
}

/// Decides whether the core of `g` has at most `k` vertices, that is,
/// whether `g` maps into a proper subgraph on `k` vertices.
///
/// Subset sizes are tried from `χ<(G)` up to `k`, and the `j`-subsets of each
/// size in lexicographic order; the first kept set that `g` retracts onto is
/// returned, which is therefore a copy of the core. Any such set `X` has
/// `χ<(G[X]) ≥ χ<(G)`, since `G -> G[X]`; prefixes whose greedy colouring
/// can no longer reach `χ<(G)` are skipped.
pub fn decide_core_with_k_vertices(g: &OrderedGraph, k: usize) -> Result<Option<RetractWitness>> {
    let n = g.vertex_count();
    if k == 0 || k >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "k = {k} must satisfy 1 <= k < {n}"
        )));
    }
    let chi = interval_chromatic_number(g).0;
    let mut found = None;
    for size in chi..=k {
        for_each_colourful_subset(
            g,
            size,
            chi,
            |subset| match crate::retraction::decide_retraction(g, subset) {
                Ok(Some(map)) => {
                    found = Some(RetractWitness {
                        vertices: subset.to_vec(),
                        map,
                    });
                    ControlFlow::Break(())
                }
                _ => ControlFlow::Continue(()),
            },
        );
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

/// Lexicographic enumeration of `k`-subsets whose induced interval chromatic
/// number can still reach `chi`.
fn for_each_colourful_subset<F>(g: &OrderedGraph, k: usize, chi: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    struct State {
        chosen: Vec<usize>,
        /// Greedy interval colouring of `chosen`: block count and start index.
        blocks: usize,
        block_start: usize,
    }

    fn go<F>(
        g: &OrderedGraph,
        k: usize,
        chi: usize,
        next: usize,
        st: &mut State,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = g.vertex_count();
        if st.chosen.len() == k {
            return visit(&st.chosen);
        }
        let remaining = k - st.chosen.len();
        for v in next..=n - remaining {
            let (blocks, start) = (st.blocks, st.block_start);
            let clash = st.chosen[st.block_start..]
                .iter()
                .any(|&u| g.has_edge(u, v));
            if st.chosen.is_empty() {
                st.blocks = 1;
                st.block_start = 0;
            } else if clash {
                st.blocks += 1;
                st.block_start = st.chosen.len();
            }
            st.chosen.push(v);
            if st.blocks + remaining > chi {
                go(g, k, chi, v + 1, st, visit)?;
            }
            st.chosen.pop();
            st.blocks = blocks;
            st.block_start = start;
        }
        ControlFlow::Continue(())
    }

    let mut st = State {
        chosen: Vec::with_capacity(k),
        blocks: 0,
        block_start: 0,
    };
    let _ = go(g, k, chi, 0, &mut st, &mut visit);
}

/// Outcome of the promise problem "core has χ< vertices, or the graph is a
/// core".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreVerdict {
    /// The core has exactly `χ<(G)` vertices; witness retraction onto it.
    CoreHasChiVertices(RetractWitness),
    InstanceIsCore,
    /// Outside the promise: not a core, and the core is larger than `χ<(G)`.
    Neither(MonotoneMap),
}

pub fn decide_core_chi(g: &OrderedGraph) -> CoreVerdict {
    let n = g.vertex_count();
    let chi = interval_chromatic_number(g).0;
    if chi < n {
        if let Ok(Some(w)) = decide_core_with_k_vertices(g, chi) {
            return CoreVerdict::CoreHasChiVertices(w);
        }
    }
    match find_nonsurjective_endomorphism(g) {
        None => CoreVerdict::InstanceIsCore,
        Some(f) => CoreVerdict::Neither(f),
    }
}

/// Target sizes `(g, h)` for the slice problem on a particular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SliceTargets {
    pub vertices: usize,
    pub edges: usize,
}

impl SliceTargets {
    /// Requires `0 < vertices < n` and `edges < m`.
    pub fn new(graph: &OrderedGraph, vertices: usize, edges: usize) -> Result<Self> {
        let (n, m) = (graph.vertex_count(), graph.edge_count());
        if vertices == 0 || vertices >= n {
            return Err(Error::ParameterOutOfRange(format!(
                "g = {vertices} must satisfy 0 < g < {n}"
            )));
        }
        if edges >= m {
            return Err(Error::ParameterOutOfRange(format!(
                "h = {edges} must satisfy h < {m}"
            )));
        }
        Ok(SliceTargets { vertices, edges })
    }
}

/// Vertex and edge deficits for the SUB problem, already evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleTuple {
    pub vertex_deficits: Vec<usize>,
    pub edge_deficits: Vec<usize>,
}

impl DoubleTuple {
    pub fn new(graph: &OrderedGraph, t: Vec<usize>, u: Vec<usize>) -> Result<Self> {
        let (n, m) = (graph.vertex_count(), graph.edge_count());
        if t.is_empty() || u.is_empty() {
            return Err(Error::ParameterOutOfRange(
                "deficit lists must be nonempty".into(),
            ));
        }
        if let Some(&x) = t.iter().find(|&&x| x == 0 || x >= n) {
            return Err(Error::ParameterOutOfRange(format!(
                "t = {x} must satisfy 0 < t < {n}"
            )));
        }
        if let Some(&x) = u.iter().find(|&&x| x == 0 || x >= m) {
            return Err(Error::ParameterOutOfRange(format!(
                "u = {x} must satisfy 0 < u < {m}"
            )));
        }
        Ok(DoubleTuple {
            vertex_deficits: t,
            edge_deficits: u,
        })
    }
}

/// How a slice witness may relate the graph to its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SliceSemantics {
    /// `H` is a retract: the map is the identity on `V(H)`.
    #[default]
    Retraction,
    /// Any ordered homomorphism into `H`.
    Homomorphism,
}

/// A subgraph `H` with the requested sizes and a map `G -> H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub map: MonotoneMap,
}

pub fn solve_slice(g: &OrderedGraph, tgt: SliceTargets) -> Option<SliceWitness> {
    solve_slice_with(g, tgt, SliceSemantics::Retraction)
}

pub fn solve_slice_with(
    g: &OrderedGraph,
    tgt: SliceTargets,
    semantics: SliceSemantics,
) -> Option<SliceWitness> {
    match semantics {
        SliceSemantics::Retraction => slice_by_retraction(g, tgt),
        SliceSemantics::Homomorphism => slice_by_homomorphism(g, tgt),
    }
}

fn image_edges(g: &OrderedGraph, f: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (f[u].min(f[v]), f[u].max(f[v])))
        .collect();
    e.sort_unstable();
    e.dedup();
    e
}

/// `required` plus the first induced edges on `keep` not already present,
/// until there are `count` edges.
fn pad_edges(
    g: &OrderedGraph,
    keep: &[usize],
    required: Vec<(usize, usize)>,
    count: usize,
) -> Vec<(usize, usize)> {
    let mut edges = required;
    for &(u, v) in g.edges() {
        if edges.len() >= count {
            break;
        }
        if keep.binary_search(&u).is_ok()
            && keep.binary_search(&v).is_ok()
            && !edges.contains(&(u, v))
        {
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    edges
}

fn induced_edge_count(g: &OrderedGraph, keep: &[usize]) -> usize {
    g.edges()
        .iter()
        .filter(|(u, v)| keep.binary_search(u).is_ok() && keep.binary_search(v).is_ok())
        .count()
}

fn slice_by_retraction(g: &OrderedGraph, tgt: SliceTargets) -> Option<SliceWitness> {
    let mut found = None;
    for_each_subset(g.vertex_count(), tgt.vertices, |keep| {
        let induced = induced_edge_count(g, keep);
        if induced < tgt.edges {
            return ControlFlow::Continue(());
        }
        let Ok(Encoding::Instance(enc)) = encode(g, keep) else {
            return ControlFlow::Continue(());
        };
        if let Some(map) = sparse_retraction(g, &enc, tgt.edges) {
            let req = image_edges(g, map.image());
            let edges = pad_edges(g, keep, req, tgt.edges);
            found = Some(SliceWitness {
                vertices: keep.to_vec(),
                edges,
                map,
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// A model of `enc` whose retraction has at most `max_edges` image edges.
///
/// Variables are fixed one at a time in vertex order; a branch is kept only
/// while the partially fixed formula stays satisfiable.
fn sparse_retraction(
    g: &OrderedGraph,
    enc: &RetractionEncoding,
    max_edges: usize,
) -> Option<MonotoneMap> {
    fn go(
        g: &OrderedGraph,
        enc: &RetractionEncoding,
        inst: &TwoSatInstance,
        var: usize,
        max_edges: usize,
    ) -> Option<MonotoneMap> {
        let a = inst.solve()?;
        if var == inst.var_count() {
            let map = crate::retraction::decode(enc, &a).ok()?;
            return (image_edges(g, map.image()).len() <= max_edges).then_some(map);
        }
        [false, true].into_iter().find_map(|value| {
            let mut next = inst.clone();
            next.add_unit(if value { Lit::pos(var) } else { Lit::neg(var) })
                .ok()?;
            go(g, enc, &next, var + 1, max_edges)
        })
    }
    go(g, enc, enc.instance(), 0, max_edges)
}

fn slice_by_homomorphism(g: &OrderedGraph, tgt: SliceTargets) -> Option<SliceWitness> {
    let n = g.vertex_count();
    let mut found = None;
    HomSearch::new(g, g).non_identity().for_each(|img| {
        let range = {
            let mut r = img.to_vec();
            r.dedup();
            r
        };
        if range.len() > tgt.vertices {
            return ControlFlow::Continue(());
        }
        let req = image_edges(g, img);
        if req.len() > tgt.edges {
            return ControlFlow::Continue(());
        }
        // Extend the image to `g` vertices keeping at least `h` induced edges.
        let rest: Vec<usize> = (0..n).filter(|v| range.binary_search(v).is_err()).collect();
        let extra = tgt.vertices - range.len();
        let mut hit = None;
        for_each_subset(rest.len(), extra, |pick| {
            let mut keep: Vec<usize> = range
                .iter()
                .copied()
                .chain(pick.iter().map(|&i| rest[i]))
                .collect();
            keep.sort_unstable();
            if induced_edge_count(g, &keep) >= tgt.edges {
                hit = Some(keep);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if let Some(keep) = hit {
            let edges = pad_edges(g, &keep, req, tgt.edges);
            found = Some(SliceWitness {
                vertices: keep,
                edges,
                map: MonotoneMap::from_vec_unchecked(img.to_vec()),
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Lexicographic `k`-subsets of `0..n`.
fn for_each_subset<F>(n: usize, k: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx).is_break() {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Witness for [`solve_sub`], naming the size pair that succeeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubWitness {
    pub targets: SliceTargets,
    pub slice: SliceWitness,
}

/// Tries every `(n - t, m - u)` pair, `t` outermost, in the given order.
pub fn solve_sub(g: &OrderedGraph, dt: &DoubleTuple) -> Option<SubWitness> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    for &t in &dt.vertex_deficits {
        for &u in &dt.edge_deficits {
            let targets = SliceTargets {
                vertices: n - t,
                edges: m - u,
            };
            if let Some(slice) = solve_slice(g, targets) {
                return Some(SubWitness { targets, slice });
            }
        }
    }
    None
}
