use crate::error::{Error, Result};
use crate::gadgets::X13Formula;
use crate::graph::MonotoneMap;
use crate::hypergraph::OrderedHypergraph;

/// Positions of one variable gadget. The block is laid out as
/// `first, padding.., second, third, fourth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableBlock {
    pub first: usize,
    pub padding: Vec<usize>,
    pub second: usize,
    pub third: usize,
    pub fourth: usize,
}

/// Where each part of the hypergraph gadget ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperGadgetLayout {
    pub formula: X13Formula,
    pub uniformity: usize,
    pub variables: Vec<VariableBlock>,
    /// One hyperedge per variable: first, padding, second, fourth.
    pub variable_edges: Vec<Vec<usize>>,
    /// Per clause: the third vertices of its three variables.
    pub dynamic_edges: Vec<Vec<usize>>,
    /// Per clause: entry `t` uses the second vertex of the clause's `t`-th
    /// variable and the fourth vertices of the other two.
    pub static_edges: Vec<[Vec<usize>; 3]>,
}

/// Builds the `k`-uniform hypergraph that has a non-surjective endomorphism
/// iff `phi` is 1-in-3 satisfiable.
///
/// For `k > 3` each variable block receives `k - 3` padding vertices between
/// its first and second vertex. A variable hyperedge is padded with its own
/// block's padding; the hyperedges of a clause are padded with the padding of
/// the clause's smallest variable.
pub fn hypergraph_gadget(
    phi: &X13Formula,
    k: usize,
) -> Result<(OrderedHypergraph, HyperGadgetLayout)> {
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "gadget uniformity must be at least 3, got {k}"
        )));
    }
    if !phi.is_connected() {
        return Err(Error::InvalidFormula("formula is not connected".into()));
    }
    let pad = k - 3;
    let block = k + 1;
    let variables: Vec<VariableBlock> = (0..phi.var_count())
        .map(|x| {
            let b = x * block;
            VariableBlock {
                first: b,
                padding: (b + 1..b + 1 + pad).collect(),
                second: b + 1 + pad,
                third: b + 2 + pad,
                fourth: b + 3 + pad,
            }
        })
        .collect();
    let n = phi.var_count() * block;

    let variable_edges: Vec<Vec<usize>> = variables
        .iter()
        .map(|vb| {
            let mut e = vec![vb.first, vb.second, vb.fourth];
            e.extend(&vb.padding);
            e.sort_unstable();
            e
        })
        .collect();

    let mut dynamic_edges = Vec::new();
    let mut static_edges = Vec::new();
    for c in phi.clauses() {
        let padding = &variables[*c.iter().min().expect("three variables")].padding;
        let finish = |mut e: Vec<usize>| {
            e.extend(padding);
            e.sort_unstable();
            e
        };
        dynamic_edges.push(finish(c.iter().map(|&x| variables[x].third).collect()));
        static_edges.push([0, 1, 2].map(|t| {
            finish(
                c.iter()
                    .enumerate()
                    .map(|(s, &x)| {
                        if s == t {
                            variables[x].second
                        } else {
                            variables[x].fourth
                        }
                    })
                    .collect(),
            )
        }));
    }

    let all = variable_edges
        .iter()
        .chain(&dynamic_edges)
        .chain(static_edges.iter().flatten())
        .cloned()
        .collect::<Vec<_>>();
    let graph = OrderedHypergraph::new(n, k, all)?;
    let layout = HyperGadgetLayout {
        formula: phi.clone(),
        uniformity: k,
        variables,
        variable_edges,
        dynamic_edges,
        static_edges,
    };
    Ok((graph, layout))
}

/// Reads a 1-in-3 assignment off a non-surjective endomorphism of the
/// gadget: a variable is true when its third vertex goes to its second
/// vertex and false when it goes to its fourth.
pub fn extract_assignment(layout: &HyperGadgetLayout, map: &MonotoneMap) -> Result<Vec<bool>> {
    let n = layout.variables.len() * (layout.uniformity + 1);
    if map.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: map.len(),
        });
    }
    if map.is_identity() {
        return Err(Error::GadgetViolation("identity map is surjective".into()));
    }
    let mut values = Vec::with_capacity(layout.variables.len());
    for (x, vb) in layout.variables.iter().enumerate() {
        let t = map.apply(vb.third);
        if t == vb.second {
            values.push(true);
        } else if t == vb.fourth {
            values.push(false);
        } else {
            return Err(Error::GadgetViolation(format!(
                "third vertex {} of variable {x} maps to {t}, neither its second nor fourth vertex",
                vb.third
            )));
        }
    }
    if !layout.formula.is_satisfied_by(&values) {
        return Err(Error::GadgetViolation(
            "extracted assignment does not satisfy the formula".into(),
        ));
    }
    Ok(values)
}
