use crate::core_solver::SliceTargets;
use crate::error::{Error, Result};
use crate::gadgets::X13Formula;
use crate::graph::OrderedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SliceEdgeKind {
    /// `{1,3}`, `{2,4}`, `{3,4}` inside a variable gadget.
    Variable,
    /// Between the middle vertices of two gadgets of one clause.
    Clause,
    /// Along the occurrence cycles of one variable.
    External,
}

/// Start vertex of the `slot`-th variable gadget of clause `clause`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceVariableGadget {
    pub clause: usize,
    pub variable: usize,
    pub first: usize,
}

impl SliceVariableGadget {
    pub fn second(&self) -> usize {
        self.first + 1
    }

    pub fn third(&self) -> usize {
        self.first + 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceGadgetLayout {
    pub clause_count: usize,
    /// Gadget `3j + s` is the `s`-th variable of clause `j`.
    pub gadgets: Vec<SliceVariableGadget>,
    pub edges: Vec<(SliceEdgeKind, (usize, usize))>,
}

impl SliceGadgetLayout {
    pub fn count(&self, kind: SliceEdgeKind) -> usize {
        self.edges.iter().filter(|(k, _)| *k == kind).count()
    }
}

#[derive(Clone, Debug)]
pub struct SliceGadget {
    pub graph: OrderedGraph,
    pub targets: SliceTargets,
    pub layout: SliceGadgetLayout,
}

/// Builds the slice instance for `phi`: `9c + 1` vertices made of `3c`
/// glued four-vertex variable gadgets, with targets `g = n - c` and
/// `h = m - 6c`.
pub fn slice_gadget(phi: &X13Formula) -> Result<SliceGadget> {
    let occ = phi.occurrences();
    if let Some(x) = occ.iter().position(|&o| o < 3) {
        return Err(Error::InvalidFormula(format!(
            "variable {x} occurs in {} clauses, need at least 3",
            occ[x]
        )));
    }
    let c = phi.clauses().len();
    let n = 9 * c + 1;
    let gadgets: Vec<SliceVariableGadget> = phi
        .clauses()
        .iter()
        .enumerate()
        .flat_map(|(j, cl)| {
            cl.iter()
                .enumerate()
                .map(move |(s, &x)| SliceVariableGadget {
                    clause: j,
                    variable: x,
                    first: 3 * (3 * j + s),
                })
        })
        .collect();

    let mut edges = Vec::new();
    for gd in &gadgets {
        let b = gd.first;
        for e in [(b, b + 2), (b + 1, b + 3), (b + 2, b + 3)] {
            edges.push((SliceEdgeKind::Variable, e));
        }
    }
    for j in 0..c {
        for s in 0..3 {
            for t in s + 1..3 {
                let (a, b) = (&gadgets[3 * j + s], &gadgets[3 * j + t]);
                for u in [a.second(), a.third()] {
                    for v in [b.second(), b.third()] {
                        edges.push((SliceEdgeKind::Clause, (u, v)));
                    }
                }
            }
        }
    }
    for x in 0..phi.var_count() {
        let mine: Vec<&SliceVariableGadget> =
            gadgets.iter().filter(|gd| gd.variable == x).collect();
        for i in 0..mine.len() {
            let (a, b) = (mine[i], mine[(i + 1) % mine.len()]);
            edges.push((SliceEdgeKind::External, (a.second(), b.second())));
            edges.push((SliceEdgeKind::External, (a.third(), b.third())));
        }
    }
    let graph = OrderedGraph::new(n, edges.iter().map(|&(_, e)| e))?;
    if graph.edge_count() != edges.len() {
        return Err(Error::GadgetViolation("edge families overlap".into()));
    }
    let m = graph.edge_count();
    let targets = SliceTargets::new(&graph, n - c, m - 6 * c)?;
    Ok(SliceGadget {
        graph,
        targets,
        layout: SliceGadgetLayout {
            clause_count: c,
            gadgets,
            edges,
        },
    })
}

/// Reads an assignment off the kept vertex set of a slice witness: a
/// variable is true when its gadgets lost their second vertex.
pub fn extract_slice_assignment(
    phi: &X13Formula,
    layout: &SliceGadgetLayout,
    kept: &[usize],
) -> Result<Vec<bool>> {
    let mut values: Vec<Option<bool>> = vec![None; phi.var_count()];
    for gd in &layout.gadgets {
        let dropped = kept.binary_search(&gd.second()).is_err();
        match values[gd.variable] {
            Some(v) if v != dropped => {
                return Err(Error::GadgetViolation(format!(
                    "gadgets of variable {} disagree",
                    gd.variable
                )));
            }
            _ => values[gd.variable] = Some(dropped),
        }
    }
    let values: Vec<bool> = values.into_iter().map(|v| v.unwrap_or(false)).collect();
    if !phi.is_satisfied_by(&values) {
        return Err(Error::GadgetViolation(
            "extracted assignment does not satisfy the formula".into(),
        ));
    }
    Ok(values)
}
