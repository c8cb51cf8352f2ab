//! Optimal half-integral solutions of the vertex cover LP relaxation
//!
//! ```text
//! minimize   sum_v w(v) x_v
//! subject to x_u + x_v >= 1   for every edge uv
//!            x_v >= 0
//! ```
//!
//! The LP is never solved directly. The graph is doubled into a bipartite
//! graph with copies `u1`, `u2` of every vertex and edges `u1 v2`, `u2 v1`;
//! a minimum weight vertex cover of that bipartite graph is read off a
//! minimum s–t cut, and `x_v = (chi(v1) + chi(v2)) / 2` is an optimal LP
//! solution with every value in `{0, 1/2, 1}`.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::flow::{max_flow, FlowNetwork, MaxFlow};
use crate::graph::{VertexSet, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("infinite-capacity arc {from} -> {to} crosses the cut")]
    InconsistentCut { from: usize, to: usize },
    #[error("solution has {got} values, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
}

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

/// Node id of the left copy `u1` of vertex `u`.
pub fn left_node(u: usize) -> usize {
    2 + u
}

/// Node id of the right copy `u2` of vertex `u` in a graph on `n` vertices.
pub fn right_node(n: usize, u: usize) -> usize {
    2 + n + u
}

/// Capacity standing in for infinity on the middle arcs: one more than any
/// achievable s–t flow.
pub fn infinite_capacity(graph: &WeightedGraph) -> u64 {
    graph.total_weight() + 1
}

/// Builds the s–t network over the doubled bipartite graph.
///
/// Node numbering: `s = 0`, `t = 1`, `u1 = 2 + u`, `u2 = 2 + n + u`. Arcs are
/// added as all `s -> u1`, then `u1 -> v2` and `v1 -> u2` per edge in edge
/// order, then all `u2 -> t`.
pub fn build_bipartite_double(graph: &WeightedGraph) -> FlowNetwork {
    let n = graph.num_vertices();
    let inf = infinite_capacity(graph);
    let mut net = FlowNetwork::new(2 * n + 2, SOURCE, SINK);
    for u in 0..n {
        net.add_arc(SOURCE, left_node(u), graph.weight(u));
    }
    for &(u, v) in graph.edges() {
        net.add_arc(left_node(u), right_node(n, v), inf);
        net.add_arc(left_node(v), right_node(n, u), inf);
    }
    for u in 0..n {
        net.add_arc(right_node(n, u), SINK, graph.weight(u));
    }
    net
}

/// A vertex cover of the doubled bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCover {
    /// `left[u]` iff `u1` is in the cover.
    pub left: Vec<bool>,
    /// `right[u]` iff `u2` is in the cover.
    pub right: Vec<bool>,
    pub weight: u64,
}

impl BipartiteCover {
    /// Whether every arc `u1 v2` / `v1 u2` of the doubled graph is covered.
    pub fn covers(&self, graph: &WeightedGraph) -> bool {
        graph
            .edges()
            .iter()
            .all(|&(u, v)| (self.left[u] || self.right[v]) && (self.left[v] || self.right[u]))
    }
}

/// Extracts the bipartite vertex cover induced by the residual reachability
/// set: left copies outside it and right copies inside it.
pub fn min_cut_cover(
    graph: &WeightedGraph,
    network: &FlowNetwork,
    reachable: &[bool],
) -> Result<BipartiteCover, LpError> {
    let n = graph.num_vertices();
    let inf = infinite_capacity(graph);
    for arc in network.arcs() {
        if arc.capacity >= inf && reachable[arc.from] && !reachable[arc.to] {
            return Err(LpError::InconsistentCut {
                from: arc.from,
                to: arc.to,
            });
        }
    }
    let left: Vec<bool> = (0..n).map(|u| !reachable[left_node(u)]).collect();
    let right: Vec<bool> = (0..n).map(|u| reachable[right_node(n, u)]).collect();
    let weight = (0..n)
        .map(|u| (u64::from(left[u]) + u64::from(right[u])) * graph.weight(u))
        .sum();
    Ok(BipartiteCover {
        left,
        right,
        weight,
    })
}

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger(u64);

impl HalfInteger {
    pub fn from_doubled(doubled: u64) -> Self {
        Self(doubled)
    }

    pub fn from_integer(value: u64) -> Self {
        Self(2 * value)
    }

    pub fn doubled(self) -> u64 {
        self.0
    }

    pub fn to_ratio(self) -> Ratio<u64> {
        Ratio::new(self.0, 2)
    }
}

/// Formats as a reduced fraction `p/q`, always with an explicit denominator.
impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}/1", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Per-vertex LP value in `{0, 1/2, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfValue {
    Zero,
    Half,
    One,
}

impl HalfValue {
    pub fn from_doubled(doubled: u8) -> Option<Self> {
        match doubled {
            0 => Some(Self::Zero),
            1 => Some(Self::Half),
            2 => Some(Self::One),
            _ => None,
        }
    }

    pub fn doubled(self) -> u8 {
        match self {
            Self::Zero => 0,
            Self::Half => 1,
            Self::One => 2,
        }
    }
}

/// An assignment `x` with `x_v` in `{0, 1/2, 1}` and its objective value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    values: Vec<HalfValue>,
    objective: HalfInteger,
}

impl HalfIntegralSolution {
    /// Wraps an arbitrary half-integral assignment for `graph`. Feasibility
    /// is not required; see [`HalfIntegralSolution::is_feasible`].
    pub fn from_values(graph: &WeightedGraph, values: Vec<HalfValue>) -> Result<Self, LpError> {
        let objective = lp_value(&values, graph)?;
        Ok(Self { values, objective })
    }

    pub fn values(&self) -> &[HalfValue] {
        &self.values
    }

    pub fn value(&self, v: usize) -> HalfValue {
        self.values[v]
    }

    pub fn objective(&self) -> HalfInteger {
        self.objective
    }

    /// `x_u + x_v >= 1` on every edge.
    pub fn is_feasible(&self, graph: &WeightedGraph) -> bool {
        self.values.len() == graph.num_vertices()
            && graph
                .edges()
                .iter()
                .all(|&(u, v)| self.values[u].doubled() + self.values[v].doubled() >= 2)
    }
}

/// The full certificate produced by [`solve_lp`]: the LP solution together
/// with the flow and bipartite cover it was read from.
#[derive(Debug, Clone)]
pub struct LpCertificate {
    pub network: FlowNetwork,
    pub flow: MaxFlow,
    pub cover: BipartiteCover,
    pub solution: HalfIntegralSolution,
}

/// Runs the doubling / max-flow / min-cut pipeline and keeps every
/// intermediate.
pub fn solve_lp(graph: &WeightedGraph) -> Result<LpCertificate, LpError> {
    let network = build_bipartite_double(graph);
    let flow = max_flow(&network);
    let cover = min_cut_cover(graph, &network, &flow.reachable)?;
    let values = (0..graph.num_vertices())
        .map(|u| {
            let doubled = u8::from(cover.left[u]) + u8::from(cover.right[u]);
            HalfValue::from_doubled(doubled).expect("at most two copies per vertex")
        })
        .collect();
    let solution = HalfIntegralSolution {
        values,
        objective: HalfInteger::from_doubled(cover.weight),
    };
    debug_assert_eq!(cover.weight, flow.value);
    Ok(LpCertificate {
        network,
        flow,
        cover,
        solution,
    })
}

/// An optimal half-integral solution of the vertex cover LP of `graph`.
pub fn half_integral_solution(graph: &WeightedGraph) -> HalfIntegralSolution {
    solve_lp(graph)
        .expect("max-flow residual never leaves an infinite arc across the cut")
        .solution
}

/// `sum_v w(v) x_v`, exactly.
pub fn lp_value(values: &[HalfValue], graph: &WeightedGraph) -> Result<HalfInteger, LpError> {
    if values.len() != graph.num_vertices() {
        return Err(LpError::DimensionMismatch {
            expected: graph.num_vertices(),
            got: values.len(),
        });
    }
    let doubled = values
        .iter()
        .zip(graph.weights())
        .map(|(x, &w)| u64::from(x.doubled()) * w)
        .sum();
    Ok(HalfInteger::from_doubled(doubled))
}

/// Vertices whose LP value equals `target`.
pub fn level_set(
    graph: &WeightedGraph,
    solution: &HalfIntegralSolution,
    target: HalfValue,
) -> VertexSet {
    let mask: Vec<bool> = solution.values().iter().map(|&x| x == target).collect();
    VertexSet::from_mask(graph, &mask)
}
