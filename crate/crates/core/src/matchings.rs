//! Ordered matchings and the edge-collapsible family `M^C_i`.

use std::ops::ControlFlow;

use crate::core_solver::find_nonsurjective_endomorphism;
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::search::HomSearch;

/// An ordered graph in which every vertex has degree exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedMatching(OrderedGraph);

impl OrderedMatching {
    pub fn new(graph: OrderedGraph) -> Result<Self> {
        if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) != 1) {
            return Err(Error::NotAMatching {
                vertex: v,
                degree: graph.degree(v),
            });
        }
        Ok(OrderedMatching(graph))
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.0
    }

    pub fn into_graph(self) -> OrderedGraph {
        self.0
    }

    /// The other endpoint of the edge at `v`.
    pub fn partner(&self, v: usize) -> usize {
        self.0.neighbors(v)[0]
    }
}

/// `M^C_4`: eight vertices, edges `{0,5} {1,7} {2,4} {3,6}`.
pub fn mc4() -> OrderedMatching {
    let g = OrderedGraph::new(8, [(0, 5), (1, 7), (2, 4), (3, 6)]).expect("valid edges");
    OrderedMatching(g)
}

/// `M^C_i` for `i >= 4`, grown from `M^C_4` one edge at a time.
///
/// Step `i` prepends a vertex `v` and inserts a vertex `w`, then joins them.
/// For odd `i`, `w` goes directly after the `(i-1)`-th vertex of `M^C_{i-1}`;
/// for even `i`, after its last vertex.
pub fn mc(i: usize) -> Result<OrderedMatching> {
    if i < 4 {
        return Err(Error::ParameterOutOfRange(format!(
            "M^C_i needs i >= 4, got {i}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = mc4().0.edges().to_vec();
    let mut n = 8;
    for step in 5..=i {
        // 0-based position of `w` among the old vertices.
        let w_old = if step % 2 == 1 { step - 1 } else { n };
        // Prepending shifts everything by one; `w` also shifts what follows it.
        let shift = |x: usize| if x < w_old { x + 1 } else { x + 2 };
        edges = edges
            .into_iter()
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        edges.push((0, w_old + 1));
        n += 2;
    }
    OrderedMatching::new(OrderedGraph::new(n, edges)?)
}

/// Decides whether the only proper subgraph that `g` maps onto is a single
/// edge.
///
/// Every non-surjective endomorphism is enumerated; the first whose image is
/// not exactly one edge refutes the property.
pub fn is_edge_collapsible(g: &OrderedGraph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    if find_nonsurjective_endomorphism(g).is_none() {
        return Ok(false);
    }
    let refuted = HomSearch::new(g, g).non_identity().for_each(|img| {
        let distinct = 1 + img.windows(2).filter(|w| w[0] != w[1]).count();
        if distinct == 2 {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(!refuted)
}
