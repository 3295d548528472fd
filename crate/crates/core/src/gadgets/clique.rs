use std::collections::HashSet;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{MonotoneMap, OrderedGraph};
use crate::matchings::mc;

/// An edge between vertices given as `(part, index)`.
pub type PartEdge = ((usize, usize), (usize, usize));

/// A graph on `k` independent parts of `l` vertices each. Vertex `(i, j)` is
/// the `j`-th vertex of part `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    k: usize,
    l: usize,
    edges: Vec<PartEdge>,
}

impl PartitionedGraph {
    pub fn new(k: usize, l: usize, edges: impl IntoIterator<Item = PartEdge>) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidPartitionedGraph(format!(
                "need k, l >= 1, got k = {k}, l = {l}"
            )));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for (p, j) in [a, b] {
                if p >= k || j >= l {
                    return Err(Error::InvalidPartitionedGraph(format!(
                        "vertex ({p}, {j}) outside {k} parts of {l}"
                    )));
                }
            }
            if a.0 == b.0 {
                return Err(Error::InvalidPartitionedGraph(format!(
                    "edge {a:?}-{b:?} inside part {}",
                    a.0
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(PartitionedGraph { k, l, edges: list })
    }

    pub fn parts(&self) -> usize {
        self.k
    }

    pub fn part_size(&self) -> usize {
        self.l
    }

    pub fn edges(&self) -> &[PartEdge] {
        &self.edges
    }

    pub fn has_edge(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// True iff `choice[i]` picks one vertex of part `i` and all picks are
    /// pairwise adjacent.
    pub fn is_multicolored_clique(&self, choice: &[usize]) -> bool {
        choice.len() == self.k
            && choice.iter().all(|&j| j < self.l)
            && (0..self.k)
                .all(|a| (a + 1..self.k).all(|b| self.has_edge((a, choice[a]), (b, choice[b]))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliqueEdgeKind {
    /// From a `p` vertex to every vertex of the block it flanks.
    Path,
    /// `w^i_j - w^j_i` between the `B` blocks.
    Complete,
    /// Copies of the edges of the partitioned graph between `C` blocks.
    Original,
    /// The matching `M^C_{l+k-1}` on `D_i` followed by `A_i`.
    Collapsible,
}

/// Vertex blocks of the clique gadget, in the order
/// `p_1 D_1 p_2 .. D_k p_{k+1} A_1 p_{k+2} .. A_k p_{2k+1}` with
/// `A_i = C_i B_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGadgetLayout {
    pub instance: PartitionedGraph,
    pub p: Vec<usize>,
    pub d: Vec<Range<usize>>,
    pub c: Vec<Range<usize>>,
    pub b: Vec<Range<usize>>,
    pub edges: Vec<(CliqueEdgeKind, (usize, usize))>,
}

impl CliqueGadgetLayout {
    pub fn vertex_count(&self) -> usize {
        self.p.last().map_or(0, |&p| p + 1)
    }

    /// `A_i`, the block `C_i` followed by `B_i`.
    pub fn a(&self, i: usize) -> Range<usize> {
        self.c[i].start..self.b[i].end
    }

    /// Position of `w^i_j` (`j != i`) inside the gadget.
    pub fn w(&self, i: usize, j: usize) -> usize {
        self.b[i].start + if j < i { j } else { j - 1 }
    }

    pub fn count(&self, kind: CliqueEdgeKind) -> usize {
        self.edges.iter().filter(|(k, _)| *k == kind).count()
    }
}

/// Builds the ordered graph whose core has `4k + 1` vertices when `f` has a
/// multicolored clique and which is a core otherwise.
pub fn clique_gadget(f: &PartitionedGraph) -> Result<(OrderedGraph, CliqueGadgetLayout)> {
    let (k, l) = (f.k, f.l);
    if l <= 3 {
        return Err(Error::InvalidPartitionedGraph(format!(
            "part size must exceed 3, got {l}"
        )));
    }
    let dl = l + k - 1;
    let mut pos = 0;
    let mut take = |len: usize| {
        let r = pos..pos + len;
        pos += len;
        r
    };
    let mut p = Vec::with_capacity(2 * k + 1);
    let mut d = Vec::with_capacity(k);
    for _ in 0..k {
        p.push(take(1).start);
        d.push(take(dl));
    }
    let mut c = Vec::with_capacity(k);
    let mut b = Vec::with_capacity(k);
    for _ in 0..k {
        p.push(take(1).start);
        c.push(take(l));
        b.push(take(k - 1));
    }
    p.push(take(1).start);
    let n = pos;

    let mut layout = CliqueGadgetLayout {
        instance: f.clone(),
        p,
        d,
        c,
        b,
        edges: Vec::new(),
    };
    let mut edges = Vec::new();
    for i in 0..k {
        for (block, left, right) in [
            (&layout.d[i], layout.p[i], layout.p[i + 1]),
            (&layout.c[i], layout.p[k + i], layout.p[k + i + 1]),
        ] {
            for v in block.clone() {
                edges.push((CliqueEdgeKind::Path, (left, v)));
                edges.push((CliqueEdgeKind::Path, (v, right)));
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            edges.push((CliqueEdgeKind::Complete, (layout.w(i, j), layout.w(j, i))));
        }
    }
    for &((pa, ja), (pb, jb)) in f.edges() {
        edges.push((
            CliqueEdgeKind::Original,
            (layout.c[pa].start + ja, layout.c[pb].start + jb),
        ));
    }
    let matching = mc(dl)?;
    for i in 0..k {
        let place = |t: usize| {
            if t < dl {
                layout.d[i].start + t
            } else {
                layout.c[i].start + (t - dl)
            }
        };
        for &(u, v) in matching.graph().edges() {
            edges.push((CliqueEdgeKind::Collapsible, (place(u), place(v))));
        }
    }
    let graph = OrderedGraph::new(n, edges.iter().map(|&(_, e)| e))?;
    if graph.edge_count() != edges.len() {
        return Err(Error::GadgetViolation("edge families overlap".into()));
    }
    layout.edges = edges;
    Ok((graph, layout))
}

/// Reads a multicolored clique off a non-surjective endomorphism of the
/// gadget, checking on the way that every `p_i` is fixed, that `A_i`
/// collapses onto one vertex of `C_i` and that `D_i` collapses onto its
/// matching partner. Returns the chosen index in each part.
pub fn extract_clique(layout: &CliqueGadgetLayout, map: &MonotoneMap) -> Result<Vec<usize>> {
    let n = layout.vertex_count();
    if map.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: map.len(),
        });
    }
    if let Some(&p) = layout.p.iter().find(|&&p| map.apply(p) != p) {
        return Err(Error::GadgetViolation(format!(
            "p vertex {p} maps to {}",
            map.apply(p)
        )));
    }
    let collapsible: HashSet<(usize, usize)> = layout
        .edges
        .iter()
        .filter(|(k, _)| *k == CliqueEdgeKind::Collapsible)
        .map(|&(_, e)| e)
        .collect();
    let mut choice = Vec::with_capacity(layout.c.len());
    for i in 0..layout.c.len() {
        let a = layout.a(i);
        let target = map.apply(a.start);
        if map.apply(a.end - 1) != target || !layout.c[i].contains(&target) {
            return Err(Error::GadgetViolation(format!(
                "block A_{i} does not collapse onto one vertex of C_{i}"
            )));
        }
        let dt = map.apply(layout.d[i].start);
        if map.apply(layout.d[i].end - 1) != dt || !collapsible.contains(&(dt, target)) {
            return Err(Error::GadgetViolation(format!(
                "block D_{i} does not collapse onto the partner of {target}"
            )));
        }
        choice.push(target - layout.c[i].start);
    }
    if !layout.instance.is_multicolored_clique(&choice) {
        return Err(Error::GadgetViolation(format!(
            "choice {choice:?} is not a clique"
        )));
    }
    Ok(choice)
}

/// Tries all `l^k` choices in lexicographic order.
pub fn brute_force_multicolored_clique(f: &PartitionedGraph) -> Result<Option<Vec<usize>>> {
    let total = (f.l as u128).checked_pow(f.k as u32).unwrap_or(u128::MAX);
    if total > 10_000_000 {
        return Err(Error::ParameterOutOfRange(format!(
            "{total} candidate cliques exceed the brute-force limit"
        )));
    }
    let mut choice = vec![0; f.k];
    loop {
        if f.is_multicolored_clique(&choice) {
            return Ok(Some(choice));
        }
        let mut i = f.k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < f.l {
                break;
            }
            choice[i] = 0;
        }
    }
}
