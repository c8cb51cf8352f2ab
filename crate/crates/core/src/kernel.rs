//! Crown decomposition and the Nemhauser–Trotter kernel.
//!
//! An optimal half-integral LP solution splits the vertices into `V0`
//! (value 0, the crown), `Vhalf` (value 1/2, the body) and `V1` (value 1,
//! the head). Some minimum weight vertex cover contains all of `V1` and
//! none of `V0`, so it suffices to solve the problem on `G[Vhalf]` and add
//! `V1` back.

use thiserror::Error;

use crate::graph::{GraphError, VertexSet, WeightedGraph};
use crate::lp::{half_integral_solution, level_set, HalfIntegralSolution, HalfValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("edge ({0}, {1}) joins the crown to the crown or body")]
    CrownViolation(usize, usize),
    #[error("LP solution does not match the graph")]
    SolutionMismatch,
    #[error("kernel vertex {0} has no kernel neighbours")]
    IsolatedKernelVertex(usize),
    #[error("kernel solution is not a vertex cover of the kernel graph")]
    NotACover,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The `(V0, Vhalf, V1)` split of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtPartition {
    pub zero: VertexSet,
    pub half: VertexSet,
    pub one: VertexSet,
}

/// Splits the vertices by LP value and checks the crown property: no edge
/// has one endpoint in `V0` and the other in `V0 ∪ Vhalf`.
pub fn partition(
    graph: &WeightedGraph,
    solution: &HalfIntegralSolution,
) -> Result<NtPartition, KernelError> {
    if solution.values().len() != graph.num_vertices() {
        return Err(KernelError::SolutionMismatch);
    }
    for &(u, v) in graph.edges() {
        let (a, b) = (solution.value(u), solution.value(v));
        let crown_edge = (a == HalfValue::Zero && b != HalfValue::One)
            || (b == HalfValue::Zero && a != HalfValue::One);
        if crown_edge {
            return Err(KernelError::CrownViolation(u, v));
        }
    }
    Ok(NtPartition {
        zero: level_set(graph, solution, HalfValue::Zero),
        half: level_set(graph, solution, HalfValue::Half),
        one: level_set(graph, solution, HalfValue::One),
    })
}

/// The reduced instance `G[Vhalf]` together with what is needed to lift a
/// cover of it back to the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub graph: WeightedGraph,
    /// `V1`: belongs to the lifted cover unconditionally.
    pub forced: VertexSet,
    /// `V0`: never needed in the cover.
    pub free: VertexSet,
    /// `Vhalf` in original ids; `back_map` lists the same vertices.
    pub half: VertexSet,
    /// Kernel vertex id -> original vertex id.
    pub back_map: Vec<usize>,
    pub solution: HalfIntegralSolution,
}

impl Kernel {
    pub fn partition(&self) -> NtPartition {
        NtPartition {
            zero: self.free.clone(),
            half: self.half.clone(),
            one: self.forced.clone(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.graph.num_vertices() == 0
    }
}

/// Computes the LP solution, the partition and the induced kernel.
pub fn kernelize(graph: &WeightedGraph) -> Result<Kernel, KernelError> {
    let solution = half_integral_solution(graph);
    kernelize_with(graph, solution)
}

/// Builds the kernel from a given optimal half-integral solution.
pub fn kernelize_with(
    graph: &WeightedGraph,
    solution: HalfIntegralSolution,
) -> Result<Kernel, KernelError> {
    let parts = partition(graph, &solution)?;
    let (kernel_graph, back_map) = graph.induced_subgraph(&parts.half)?;
    if let Some(v) = (0..kernel_graph.num_vertices()).find(|&v| kernel_graph.degree(v) == 0) {
        return Err(KernelError::IsolatedKernelVertex(back_map[v]));
    }
    Ok(Kernel {
        graph: kernel_graph,
        forced: parts.one,
        free: parts.zero,
        half: parts.half,
        back_map,
        solution,
    })
}

/// Maps a vertex cover of the kernel graph back to a vertex cover of the
/// original graph by adding the forced vertices.
pub fn lift(
    original: &WeightedGraph,
    kernel: &Kernel,
    kernel_cover: &VertexSet,
) -> Result<VertexSet, KernelError> {
    kernel_cover.check_for(&kernel.graph)?;
    if !kernel.graph.is_vertex_cover(kernel_cover) {
        return Err(KernelError::NotACover);
    }
    let members = kernel_cover
        .members()
        .iter()
        .map(|&v| kernel.back_map[v])
        .chain(kernel.forced.members().iter().copied());
    Ok(VertexSet::new(original, members)?)
}

/// Whether the LP optimum of the kernel graph is exactly half its weight.
pub fn kernel_density_check(kernel: &Kernel) -> bool {
    let sol = half_integral_solution(&kernel.graph);
    sol.objective().doubled() == kernel.graph.total_weight()
}
