//! Weighted simple graphs, vertex-set certificates and induced subgraphs.

use std::fmt;

use rand::Rng;
use thiserror::Error;

/// Upper bound on the total vertex weight of a graph.
///
/// Flow capacities use `w(G) + 1` as infinity and LP values are stored
/// doubled, so the total has to leave headroom in a `u64`.
pub const MAX_TOTAL_WEIGHT: u64 = u64::MAX / 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, &'static str),
    #[error("invalid weight {weight} for vertex {vertex}")]
    InvalidWeight { vertex: usize, weight: u64 },
    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("total vertex weight exceeds {MAX_TOTAL_WEIGHT}")]
    WeightOverflow,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidSet { vertex: usize, n: usize },
}

/// A simple undirected graph with positive integer vertex weights.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; adjacency lists
/// are sorted as well, so iteration order is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    weights: Vec<u64>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    total_weight: u64,
}

impl WeightedGraph {
    /// Builds a normalized graph. Parallel edges are merged, self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new(
        n: usize,
        weights: Vec<u64>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if weights.len() != n {
            return Err(GraphError::WeightCountMismatch {
                expected: n,
                got: weights.len(),
            });
        }
        let mut total: u64 = 0;
        for (vertex, &weight) in weights.iter().enumerate() {
            if weight == 0 {
                return Err(GraphError::InvalidWeight { vertex, weight });
            }
            total = total
                .checked_add(weight)
                .filter(|&t| t <= MAX_TOTAL_WEIGHT)
                .ok_or(GraphError::WeightOverflow)?;
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::InvalidEdge(u, v, "self-loop"));
            }
            if u >= n || v >= n {
                return Err(GraphError::InvalidEdge(u, v, "endpoint out of range"));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            weights,
            edges: normalized,
            adjacency,
            total_weight: total,
        })
    }

    /// Unit-weight graph.
    pub fn unweighted(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::new(n, vec![1; n], edges)
    }

    pub fn empty() -> Self {
        Self {
            weights: Vec::new(),
            edges: Vec::new(),
            adjacency: Vec::new(),
            total_weight: 0,
        }
    }

    /// Erdős–Rényi `G(n, p)` with weights uniform in `1..=max_weight`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, max_weight: u64, rng: &mut R) -> Self {
        let max_weight = max_weight.max(1);
        let weights = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p.clamp(0.0, 1.0)) {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, weights, edges).expect("generated graph is valid")
    }

    pub fn num_vertices(&self) -> usize {
        self.weights.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `w(G)`, the sum of all vertex weights.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.num_vertices() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_unit_weight(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Sum of the weights of `members`; members must be in range.
    pub fn weight_of(&self, members: &[usize]) -> u64 {
        members.iter().map(|&v| self.weights[v]).sum()
    }

    /// The subgraph induced by `subset`, relabelled densely in the order of
    /// `subset.members()`. Returns the graph and the map from new ids back
    /// to ids of `self`.
    pub fn induced_subgraph(
        &self,
        subset: &VertexSet,
    ) -> Result<(WeightedGraph, Vec<usize>), GraphError> {
        subset.check_for(self)?;
        let back_map = subset.members().to_vec();
        let mut forward = vec![usize::MAX; self.num_vertices()];
        for (new, &old) in back_map.iter().enumerate() {
            forward[old] = new;
        }
        let weights = back_map.iter().map(|&v| self.weights[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| forward[u] != usize::MAX && forward[v] != usize::MAX)
            .map(|&(u, v)| (forward[u], forward[v]));
        let sub = WeightedGraph::new(back_map.len(), weights, edges)?;
        Ok((sub, back_map))
    }

    /// True iff every edge has at least one endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &VertexSet) -> bool {
        let mask = cover.membership(self.num_vertices());
        self.edges.iter().all(|&(u, v)| mask[u] || mask[v])
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_independent_set(&self, set: &VertexSet) -> bool {
        let mask = set.membership(self.num_vertices());
        !self.edges.iter().any(|&(u, v)| mask[u] && mask[v])
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("n", &self.num_vertices())
            .field("weights", &self.weights)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A set of vertices of a particular graph together with its weight.
///
/// Members are sorted and distinct. The weight is always recomputed from the
/// graph on construction, so a `VertexSet` cannot carry a stale weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    members: Vec<usize>,
    weight: u64,
}

impl VertexSet {
    pub fn new(
        graph: &WeightedGraph,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let n = graph.num_vertices();
        if let Some(&vertex) = members.iter().find(|&&v| v >= n) {
            return Err(GraphError::InvalidSet { vertex, n });
        }
        let weight = graph.weight_of(&members);
        Ok(Self { members, weight })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn all(graph: &WeightedGraph) -> Self {
        Self {
            members: (0..graph.num_vertices()).collect(),
            weight: graph.total_weight(),
        }
    }

    /// Vertices of `graph` selected by `mask`.
    pub fn from_mask(graph: &WeightedGraph, mask: &[bool]) -> Self {
        let members: Vec<usize> = (0..graph.num_vertices()).filter(|&v| mask[v]).collect();
        let weight = graph.weight_of(&members);
        Self { members, weight }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// `V(graph) \ self`.
    pub fn complement(&self, graph: &WeightedGraph) -> VertexSet {
        let mut mask = vec![true; graph.num_vertices()];
        for &v in &self.members {
            if v < mask.len() {
                mask[v] = false;
            }
        }
        Self::from_mask(graph, &mask)
    }

    /// Membership vector of length `n`; out-of-range members are ignored.
    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.members {
            if v < n {
                mask[v] = true;
            }
        }
        mask
    }

    /// Checks that every member is a vertex of `graph`.
    pub fn check_for(&self, graph: &WeightedGraph) -> Result<(), GraphError> {
        let n = graph.num_vertices();
        if let Some(&vertex) = self.members.iter().find(|&&v| v >= n) {
            return Err(GraphError::InvalidSet { vertex, n });
        }
        Ok(())
    }

    /// Whether the stored weight matches `graph`.
    pub fn weight_matches(&self, graph: &WeightedGraph) -> bool {
        self.check_for(graph).is_ok() && graph.weight_of(&self.members) == self.weight
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> WeightedGraph {
        WeightedGraph::unweighted(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn build_single_edge() {
        let g = WeightedGraph::new(2, vec![1, 1], [(0, 1)]).unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.total_weight(), 2);
    }

    #[test]
    fn parallel_edges_are_merged() {
        let g = WeightedGraph::new(3, vec![1, 1, 1], [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(matches!(
            WeightedGraph::new(1, vec![5], [(0, 0)]),
            Err(GraphError::InvalidEdge(0, 0, _))
        ));
        assert!(matches!(
            WeightedGraph::new(2, vec![1, 1], [(0, 2)]),
            Err(GraphError::InvalidEdge(..))
        ));
        assert!(matches!(
            WeightedGraph::new(2, vec![1, 0], []),
            Err(GraphError::InvalidWeight { vertex: 1, .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, vec![1], []),
            Err(GraphError::WeightCountMismatch { .. })
        ));
        assert_eq!(
            WeightedGraph::new(2, vec![MAX_TOTAL_WEIGHT, 1], []),
            Err(GraphError::WeightOverflow)
        );
    }

    #[test]
    fn induced_subgraph_cases() {
        let path = WeightedGraph::unweighted(3, [(0, 1), (1, 2)]).unwrap();
        let s = VertexSet::new(&path, [0, 2]).unwrap();
        let (sub, back) = path.induced_subgraph(&s).unwrap();
        assert_eq!(sub.num_vertices(), 2);
        assert_eq!(sub.num_edges(), 0);
        assert_eq!(back, vec![0, 2]);

        let g = WeightedGraph::new(4, vec![3, 1, 4, 1], [(0, 1), (2, 3), (1, 3)]).unwrap();
        let (copy, back) = g.induced_subgraph(&VertexSet::all(&g)).unwrap();
        assert_eq!(copy, g);
        assert_eq!(back, vec![0, 1, 2, 3]);

        let tri = WeightedGraph::unweighted(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (sub, _) = tri
            .induced_subgraph(&VertexSet::new(&tri, [0, 1]).unwrap())
            .unwrap();
        assert_eq!(sub.edges(), &[(0, 1)]);
    }

    #[test]
    fn out_of_range_set_is_rejected() {
        let g = WeightedGraph::unweighted(2, [(0, 1)]).unwrap();
        assert_eq!(
            VertexSet::new(&g, [0, 2]),
            Err(GraphError::InvalidSet { vertex: 2, n: 2 })
        );
        let big = WeightedGraph::unweighted(3, []).unwrap();
        let s = VertexSet::new(&big, [2]).unwrap();
        assert!(g.induced_subgraph(&s).is_err());
    }

    #[test]
    fn cover_and_independence_predicates() {
        let e = WeightedGraph::unweighted(2, [(0, 1)]).unwrap();
        assert!(e.is_vertex_cover(&VertexSet::new(&e, [0]).unwrap()));
        assert!(!e.is_vertex_cover(&VertexSet::empty()));
        assert!(!e.is_independent_set(&VertexSet::all(&e)));

        let edgeless = WeightedGraph::unweighted(4, []).unwrap();
        assert!(edgeless.is_independent_set(&VertexSet::all(&edgeless)));

        let g = c5();
        assert!(g.is_vertex_cover(&VertexSet::new(&g, [0, 2, 4]).unwrap()));
        assert!(g.is_independent_set(&VertexSet::new(&g, [1, 3]).unwrap()));
        assert!(!g.is_vertex_cover(&VertexSet::new(&g, [0, 2]).unwrap()));
    }

    #[test]
    fn vertex_set_weight_is_recomputed() {
        let g = WeightedGraph::new(3, vec![2, 3, 5], []).unwrap();
        let s = VertexSet::new(&g, [2, 0, 2]).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        assert_eq!(s.weight(), 7);
        assert_eq!(s.complement(&g).members(), &[1]);
        assert!(s.weight_matches(&g));
    }
}
