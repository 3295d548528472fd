//! Polynomial-time ordered retraction through 2-SAT.
//!
//! Fix a kept set `X` with vertices `v_1 < ... < v_h`. Every other vertex lies
//! in a segment `X_k` strictly between `v_{k-1}` and `v_k` (with `X_1` before
//! `v_1` and `X_{h+1}` after `v_h`), and a monotone retraction can only send it
//! to one of the two flanking anchors. One boolean per such vertex records the
//! choice: false for the left anchor, true for the right anchor. The clauses
//! below forbid exactly the choices that break monotonicity or edges.
//!
//! | family | source                                   | clause                       |
//! |--------|------------------------------------------|------------------------------|
//! | 1/2    | `x < y` in one segment                   | `¬s_x ∨ s_y`                 |
//! | 3      | edge between two non-kept vertices       | one per anchor pair off `H`  |
//! | 4      | edge between a non-kept and a kept vertex| unit clause                  |
//! | 5      | vertices of the outer segments           | unit clause                  |

use crate::error::{Error, Result};
use crate::graph::{MonotoneMap, OrderedGraph};
use crate::twosat::{Assignment, Lit, TwoSatInstance};

/// The kept vertices and the runs of other vertices between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentDecomposition {
    n: usize,
    anchors: Vec<usize>,
    segments: Vec<Vec<usize>>,
}

impl SegmentDecomposition {
    /// Kept vertices in order.
    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// `anchors().len() + 1` segments; segment `k` lies between anchors `k-1`
    /// and `k`.
    pub fn segments(&self) -> &[Vec<usize>] {
        &self.segments
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The whole vertex order `X_1, v_1, X_2, ..., v_h, X_{h+1}`.
    pub fn interleaved(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        for (k, seg) in self.segments.iter().enumerate() {
            out.extend_from_slice(seg);
            if let Some(&a) = self.anchors.get(k) {
                out.push(a);
            }
        }
        out
    }

    /// Upper bound on the number of clauses emitted by [`encode`]:
    /// `2 Σ C(|X_k|, 2) + 3 (n-h)^2 + h^2 + |X_1| + |X_{h+1}|`.
    pub fn clause_bound(&self) -> usize {
        let h = self.anchors.len();
        let free = self.n - h;
        let pairs: usize = self
            .segments
            .iter()
            .map(|s| s.len() * s.len().saturating_sub(1) / 2)
            .sum();
        2 * pairs + 3 * free * free + h * h + self.segments[0].len() + self.segments[h].len()
    }
}

/// Splits the vertex order around the kept set `keep`.
pub fn decompose(g: &OrderedGraph, keep: &[usize]) -> Result<SegmentDecomposition> {
    let n = g.vertex_count();
    let mut anchors = keep.to_vec();
    anchors.sort_unstable();
    anchors.dedup();
    if anchors.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(&v) = anchors.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut segments = vec![Vec::new(); anchors.len() + 1];
    let mut k = 0;
    for v in 0..n {
        if k < anchors.len() && anchors[k] == v {
            k += 1;
        } else {
            segments[k].push(v);
        }
    }
    Ok(SegmentDecomposition {
        n,
        anchors,
        segments,
    })
}

/// Which same-segment pairs receive an ordering clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OrderClauses {
    /// Every pair `x < y` of one segment.
    #[default]
    AllPairs,
    /// Only consecutive vertices; equivalent by transitivity.
    AdjacentPairs,
}

/// Clause counts per constraint family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyCounts {
    pub order: usize,
    pub free_free_edges: usize,
    pub free_anchor_edges: usize,
    pub outer: usize,
}

impl FamilyCounts {
    pub fn total(&self) -> usize {
        self.order + self.free_free_edges + self.free_anchor_edges + self.outer
    }
}

/// A 2-SAT instance whose models are the retractions onto `G[X]`.
#[derive(Clone, Debug)]
pub struct RetractionEncoding {
    decomposition: SegmentDecomposition,
    instance: TwoSatInstance,
    /// Variable of each vertex; `None` for kept vertices.
    var_of: Vec<Option<usize>>,
    /// `(left, right)` anchor choices per variable.
    choices: Vec<(Option<usize>, Option<usize>)>,
    counts: FamilyCounts,
}

impl RetractionEncoding {
    pub fn instance(&self) -> &TwoSatInstance {
        &self.instance
    }

    pub fn decomposition(&self) -> &SegmentDecomposition {
        &self.decomposition
    }

    pub fn variable_of(&self, v: usize) -> Option<usize> {
        self.var_of[v]
    }

    pub fn family_counts(&self) -> FamilyCounts {
        self.counts
    }

    /// Anchor that `v` is sent to when its variable has value `value`.
    fn target(&self, var: usize, value: bool) -> Option<usize> {
        let (l, r) = self.choices[var];
        if value {
            r
        } else {
            l
        }
    }
}

/// Result of [`encode`].
#[derive(Clone, Debug)]
pub enum Encoding {
    Instance(RetractionEncoding),
    /// Some edge has no admissible image at all; `edge` is that edge of `G`.
    EarlyUnsat {
        edge: (usize, usize),
    },
}

/// Builds the 2-SAT encoding with ordering clauses on all pairs.
pub fn encode(g: &OrderedGraph, keep: &[usize]) -> Result<Encoding> {
    encode_with(g, keep, OrderClauses::AllPairs)
}

pub fn encode_with(g: &OrderedGraph, keep: &[usize], order: OrderClauses) -> Result<Encoding> {
    let dec = decompose(g, keep)?;
    let n = g.vertex_count();
    let h = dec.anchors.len();

    let mut var_of = vec![None; n];
    let mut choices = Vec::new();
    for (k, seg) in dec.segments.iter().enumerate() {
        let left = k.checked_sub(1).map(|i| dec.anchors[i]);
        let right = dec.anchors.get(k).copied();
        for &x in seg {
            var_of[x] = Some(choices.len());
            choices.push((left, right));
        }
    }

    let mut inst = TwoSatInstance::new(choices.len());
    let mut counts = FamilyCounts::default();
    let lit = |var: usize, value: bool| if value { Lit::pos(var) } else { Lit::neg(var) };

    // Families 1 and 2: no later vertex of a segment goes left of an earlier one.
    for seg in &dec.segments {
        let vars: Vec<usize> = seg.iter().map(|&x| var_of[x].unwrap()).collect();
        match order {
            OrderClauses::AllPairs => {
                for i in 0..vars.len() {
                    for j in i + 1..vars.len() {
                        inst.add_clause(Lit::neg(vars[i]), Lit::pos(vars[j]))?;
                        counts.order += 1;
                    }
                }
            }
            OrderClauses::AdjacentPairs => {
                for pair in vars.windows(2) {
                    inst.add_clause(Lit::neg(pair[0]), Lit::pos(pair[1]))?;
                    counts.order += 1;
                }
            }
        }
    }

    // An anchor choice that does not exist is treated like a missing edge.
    let kept_edge = |a: Option<usize>, b: Option<usize>| match (a, b) {
        (Some(a), Some(b)) => g.has_edge(a, b),
        _ => false,
    };

    for &(u, v) in g.edges() {
        match (var_of[u], var_of[v]) {
            (Some(su), Some(sv)) => {
                // Family 3.
                let mut forbidden = Vec::with_capacity(4);
                for bu in [false, true] {
                    for bv in [false, true] {
                        let (tu, tv) = (choices[su], choices[sv]);
                        let a = if bu { tu.1 } else { tu.0 };
                        let b = if bv { tv.1 } else { tv.0 };
                        if !kept_edge(a, b) {
                            forbidden.push((lit(su, !bu), lit(sv, !bv)));
                        }
                    }
                }
                if forbidden.len() == 4 {
                    return Ok(Encoding::EarlyUnsat { edge: (u, v) });
                }
                for (a, b) in forbidden {
                    inst.add_clause(a, b)?;
                    counts.free_free_edges += 1;
                }
            }
            (Some(s), None) | (None, Some(s)) => {
                // Family 4.
                let anchor = if var_of[u].is_none() { u } else { v };
                let (l, r) = choices[s];
                let bad_left = !kept_edge(l, Some(anchor));
                let bad_right = !kept_edge(r, Some(anchor));
                match (bad_left, bad_right) {
                    (true, true) => return Ok(Encoding::EarlyUnsat { edge: (u, v) }),
                    (true, false) => inst.add_unit(Lit::pos(s))?,
                    (false, true) => inst.add_unit(Lit::neg(s))?,
                    (false, false) => continue,
                }
                counts.free_anchor_edges += 1;
            }
            (None, None) => {}
        }
    }

    // Family 5.
    for &x in &dec.segments[0] {
        inst.add_unit(Lit::pos(var_of[x].unwrap()))?;
        counts.outer += 1;
    }
    for &x in &dec.segments[h] {
        inst.add_unit(Lit::neg(var_of[x].unwrap()))?;
        counts.outer += 1;
    }

    Ok(Encoding::Instance(RetractionEncoding {
        decomposition: dec,
        instance: inst,
        var_of,
        choices,
        counts,
    }))
}

/// Turns a model of the encoding into the retraction it describes.
pub fn decode(enc: &RetractionEncoding, a: &Assignment) -> Result<MonotoneMap> {
    if !enc.instance.check(a)? {
        return Err(Error::UnsatisfiedAssignment);
    }
    let image = (0..enc.decomposition.n)
        .map(|v| match enc.var_of[v] {
            None => Ok(v),
            Some(s) => enc
                .target(s, a.values[s])
                .ok_or(Error::UnsatisfiedAssignment),
        })
        .collect::<Result<Vec<_>>>()?;
    MonotoneMap::new(image)
}

/// A retraction of `g` onto the induced subgraph `G[keep]`, if one exists.
/// The map is expressed in the vertex indices of `g`.
pub fn decide_retraction(g: &OrderedGraph, keep: &[usize]) -> Result<Option<MonotoneMap>> {
    match encode(g, keep)? {
        Encoding::EarlyUnsat { .. } => Ok(None),
        Encoding::Instance(enc) => match enc.instance.solve() {
            None => Ok(None),
            Some(a) => decode(&enc, &a).map(Some),
        },
    }
}
