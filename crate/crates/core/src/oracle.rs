//! Independent-set oracles.
//!
//! The approximation wrapper only needs *some* algorithm that returns an
//! independent set of any induced subgraph it is handed. Three are provided:
//! an exact branch-and-bound solver, a greedy baseline and t-swap local
//! search.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{VertexSet, WeightedGraph};

/// Default vertex cap for the exact solver.
pub const DEFAULT_EXACT_CAP: usize = 30;
/// Hard limit of the bitmask representation used by the exact solver.
pub const MAX_EXACT_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, exact solver cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("swap size must be at least 1, got {0}")]
    InvalidSwapSize(usize),
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(f64),
    #[error("swap-size constant must be positive and finite, got {0}")]
    InvalidConstant(f64),
    #[error("unknown oracle `{0}` (expected exact, greedy or local-search)")]
    UnknownOracle(String),
}

/// What an oracle promises about `w(I) / is*(G)`.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleQuality {
    Exact,
    Heuristic,
    /// `(1 - eps)`-approximate on the named graph class.
    Approximate {
        eps: f64,
        class: &'static str,
    },
}

pub trait IndependentSetOracle {
    fn name(&self) -> &'static str;
    fn quality(&self) -> OracleQuality;
    /// Returns an independent set of `graph`.
    fn solve(&self, graph: &WeightedGraph) -> Result<VertexSet, OracleError>;
    /// Swap size, for oracles that have one.
    fn swap_size(&self) -> Option<usize> {
        None
    }
}

/// Oracle selection by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleKind {
    Exact,
    Greedy,
    LocalSearch,
}

impl OracleKind {
    pub const ALL: [OracleKind; 3] = [Self::Exact, Self::Greedy, Self::LocalSearch];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::Greedy => "greedy",
            Self::LocalSearch => "local-search",
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OracleKind {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Self::Exact),
            "greedy" => Ok(Self::Greedy),
            "local-search" => Ok(Self::LocalSearch),
            other => Err(OracleError::UnknownOracle(other.to_string())),
        }
    }
}

/// `t = ceil(c / eps^2)`.
pub fn epsilon_to_swap_size(eps: f64, constant: f64) -> Result<usize, OracleError> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(OracleError::InvalidEpsilon(eps));
    }
    if !(constant > 0.0 && constant.is_finite()) {
        return Err(OracleError::InvalidConstant(constant));
    }
    let raw = constant / (eps * eps);
    // Absorb rounding noise such as 1 / 0.1^2 = 99.99999999999999.
    let t = (raw - 1e-9 * raw.max(1.0)).ceil();
    Ok(t.max(1.0) as usize)
}

// ---------------------------------------------------------------------------
// Exact

#[derive(Debug, Clone)]
pub struct ExactOracle {
    pub cap: usize,
}

impl Default for ExactOracle {
    fn default() -> Self {
        Self {
            cap: DEFAULT_EXACT_CAP,
        }
    }
}

impl IndependentSetOracle for ExactOracle {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn quality(&self) -> OracleQuality {
        OracleQuality::Exact
    }

    fn solve(&self, graph: &WeightedGraph) -> Result<VertexSet, OracleError> {
        exact_is(graph, self.cap)
    }
}

struct BranchAndBound<'a> {
    weights: &'a [u64],
    adjacency: Vec<u64>,
    best_weight: u64,
    best_set: u64,
}

impl BranchAndBound<'_> {
    fn mask_weight(&self, mut mask: u64) -> u64 {
        let mut total = 0;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            total += self.weights[v];
            mask &= mask - 1;
        }
        total
    }

    fn search(&mut self, candidates: u64, chosen: u64, weight: u64) {
        if weight + self.mask_weight(candidates) <= self.best_weight {
            return;
        }
        // Branch on the candidate of maximum degree inside the candidate set.
        let mut pivot = None;
        let mut pivot_degree = 0;
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let degree = (self.adjacency[v] & candidates).count_ones();
            if degree > pivot_degree {
                pivot = Some(v);
                pivot_degree = degree;
            }
        }
        let Some(v) = pivot else {
            // All remaining candidates are isolated: take them all.
            let total = weight + self.mask_weight(candidates);
            if total > self.best_weight {
                self.best_weight = total;
                self.best_set = chosen | candidates;
            }
            return;
        };
        let bit = 1u64 << v;
        self.search(
            candidates & !bit & !self.adjacency[v],
            chosen | bit,
            weight + self.weights[v],
        );
        self.search(candidates & !bit, chosen, weight);
    }
}

/// Maximum-weight independent set by branch and bound.
pub fn exact_is(graph: &WeightedGraph, cap: usize) -> Result<VertexSet, OracleError> {
    let n = graph.num_vertices();
    let cap = cap.min(MAX_EXACT_CAP);
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let adjacency = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let mut bb = BranchAndBound {
        weights: graph.weights(),
        adjacency,
        best_weight: 0,
        best_set: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    bb.search(all, 0, 0);
    let members = (0..n).filter(|&v| bb.best_set >> v & 1 == 1);
    Ok(VertexSet::new(graph, members).expect("members in range"))
}

// ---------------------------------------------------------------------------
// Greedy

#[derive(Debug, Clone, Default)]
pub struct GreedyOracle;

impl IndependentSetOracle for GreedyOracle {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn quality(&self) -> OracleQuality {
        OracleQuality::Heuristic
    }

    fn solve(&self, graph: &WeightedGraph) -> Result<VertexSet, OracleError> {
        Ok(greedy_is(graph))
    }
}

/// Repeatedly takes the remaining vertex maximizing `weight / (deg + 1)`,
/// degree counted among remaining vertices, and deletes its closed
/// neighbourhood. Ties go to the smaller `rank`.
fn greedy_by(graph: &WeightedGraph, weight: impl Fn(usize) -> u64, rank: &[usize]) -> Vec<usize> {
    let n = graph.num_vertices();
    let mut alive = vec![true; n];
    let mut degree: Vec<u64> = (0..n).map(|v| graph.degree(v) as u64).collect();
    let mut chosen = Vec::new();
    loop {
        let mut best: Option<usize> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            best = match best {
                None => Some(v),
                Some(b) => {
                    // w(v) / (d(v)+1) vs w(b) / (d(b)+1), cross-multiplied.
                    let lhs = u128::from(weight(v)) * u128::from(degree[b] + 1);
                    let rhs = u128::from(weight(b)) * u128::from(degree[v] + 1);
                    if lhs > rhs || (lhs == rhs && rank[v] < rank[b]) {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let Some(v) = best else { break };
        chosen.push(v);
        let mut removed = vec![v];
        removed.extend(graph.neighbors(v).iter().copied().filter(|&u| alive[u]));
        for &r in &removed {
            alive[r] = false;
        }
        for &r in &removed {
            for &u in graph.neighbors(r) {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
    }
    chosen
}

/// Greedy maximum-weight independent set; ties broken by smallest id.
pub fn greedy_is(graph: &WeightedGraph) -> VertexSet {
    let rank: Vec<usize> = (0..graph.num_vertices()).collect();
    let chosen = greedy_by(graph, |v| graph.weight(v), &rank);
    VertexSet::new(graph, chosen).expect("members in range")
}

// ---------------------------------------------------------------------------
// Local search

#[derive(Debug, Clone)]
pub struct LocalSearchOracle {
    pub swap_size: usize,
    pub seed: u64,
    /// The epsilon the swap size was derived from, if any.
    pub eps: Option<f64>,
}

impl LocalSearchOracle {
    pub fn new(swap_size: usize, seed: u64) -> Result<Self, OracleError> {
        if swap_size == 0 {
            return Err(OracleError::InvalidSwapSize(swap_size));
        }
        Ok(Self {
            swap_size,
            seed,
            eps: None,
        })
    }

    pub fn from_epsilon(eps: f64, constant: f64, seed: u64) -> Result<Self, OracleError> {
        let swap_size = epsilon_to_swap_size(eps, constant)?;
        Ok(Self {
            swap_size,
            seed,
            eps: Some(eps),
        })
    }
}

impl IndependentSetOracle for LocalSearchOracle {
    fn name(&self) -> &'static str {
        "local-search"
    }

    fn quality(&self) -> OracleQuality {
        match self.eps {
            Some(eps) => OracleQuality::Approximate {
                eps,
                class: "unweighted disk intersection graphs",
            },
            None => OracleQuality::Heuristic,
        }
    }

    fn solve(&self, graph: &WeightedGraph) -> Result<VertexSet, OracleError> {
        local_search_is(graph, self.swap_size, self.seed)
    }

    fn swap_size(&self) -> Option<usize> {
        Some(self.swap_size)
    }
}

/// The initial solution of [`local_search_is`]: the greedy rule on unit
/// weights (minimum remaining degree), ties broken by a permutation of the
/// vertices drawn from `seed`.
pub fn seeded_greedy_init(graph: &WeightedGraph, seed: u64) -> VertexSet {
    let n = graph.num_vertices();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut rank = vec![0; n];
    for (position, &v) in order.iter().enumerate() {
        rank[v] = position;
    }
    let chosen = greedy_by(graph, |_| 1, &rank);
    VertexSet::new(graph, chosen).expect("members in range")
}

struct SwapSearch<'a> {
    graph: &'a WeightedGraph,
    t: usize,
    in_set: Vec<bool>,
    /// For vertices outside the set: number of neighbours inside it.
    conflicts: Vec<usize>,
    /// Multiplicity of each set vertex among the conflicts of the current X.
    evict_count: Vec<usize>,
    evicted: usize,
    tuple: Vec<usize>,
}

impl SwapSearch<'_> {
    fn push(&mut self, x: usize) {
        self.tuple.push(x);
        for &i in self.graph.neighbors(x) {
            if self.in_set[i] {
                if self.evict_count[i] == 0 {
                    self.evicted += 1;
                }
                self.evict_count[i] += 1;
            }
        }
    }

    fn pop(&mut self) {
        let x = self.tuple.pop().expect("non-empty tuple");
        for &i in self.graph.neighbors(x) {
            if self.in_set[i] {
                self.evict_count[i] -= 1;
                if self.evict_count[i] == 0 {
                    self.evicted -= 1;
                }
            }
        }
    }

    /// Candidates that can join a swap anchored at `anchor`: outside the set,
    /// larger than the anchor, and reachable by alternating through at most
    /// `t - 1` set vertices. Components of an improving swap that are not
    /// connected this way improve on their own.
    fn ball(&self, anchor: usize) -> Vec<usize> {
        let n = self.graph.num_vertices();
        let mut seen = vec![false; n];
        seen[anchor] = true;
        let mut frontier = vec![anchor];
        let mut ball = Vec::new();
        for _ in 1..self.t {
            let mut next = Vec::new();
            for &x in &frontier {
                for &i in self.graph.neighbors(x).iter().filter(|&&i| self.in_set[i]) {
                    for &y in self.graph.neighbors(i) {
                        if !self.in_set[y] && !seen[y] {
                            seen[y] = true;
                            next.push(y);
                            if y > anchor && self.conflicts[y] < self.t {
                                ball.push(y);
                            }
                        }
                    }
                }
            }
            frontier = next;
        }
        ball.sort_unstable();
        ball
    }

    /// Depth-first search over sorted tuples in lexicographic order; returns
    /// true with `self.tuple` holding the first improving swap.
    fn extend(&mut self, ball: &[usize], from: usize) -> bool {
        if self.tuple.len() > self.evicted {
            return true;
        }
        if self.tuple.len() == self.t {
            return false;
        }
        for idx in from..ball.len() {
            let y = ball[idx];
            if self.tuple.iter().any(|&x| self.graph.has_edge(x, y)) {
                continue;
            }
            self.push(y);
            if self.evicted < self.t && self.extend(ball, idx + 1) {
                return true;
            }
            self.pop();
        }
        false
    }

    fn find_improvement(&mut self) -> Option<Vec<usize>> {
        for anchor in 0..self.graph.num_vertices() {
            if self.in_set[anchor] || self.conflicts[anchor] >= self.t {
                continue;
            }
            let ball = self.ball(anchor);
            self.push(anchor);
            if self.extend(&ball, 0) {
                let found = self.tuple.clone();
                while !self.tuple.is_empty() {
                    self.pop();
                }
                return Some(found);
            }
            self.pop();
        }
        None
    }

    fn apply(&mut self, swap: &[usize]) {
        let graph = self.graph;
        let mut evict: Vec<usize> = swap
            .iter()
            .flat_map(|&x| graph.neighbors(x).iter().copied())
            .filter(|&i| self.in_set[i])
            .collect();
        evict.sort_unstable();
        evict.dedup();
        for &i in &evict {
            self.in_set[i] = false;
            for &u in graph.neighbors(i) {
                self.conflicts[u] -= 1;
            }
        }
        for &x in swap {
            self.in_set[x] = true;
            for &u in graph.neighbors(x) {
                self.conflicts[u] += 1;
            }
        }
    }
}

/// t-swap local search for maximum-cardinality independent set.
///
/// Starting from [`seeded_greedy_init`], repeatedly applies the first (in
/// lexicographic order of sorted tuples, grouped by smallest element) set
/// `X` of at most `t` pairwise non-adjacent vertices outside `I` whose
/// insertion evicts fewer than `|X|` vertices of `I`. Stops when no such
/// swap exists. Vertex weights are ignored.
pub fn local_search_is(
    graph: &WeightedGraph,
    t: usize,
    seed: u64,
) -> Result<VertexSet, OracleError> {
    if t == 0 {
        return Err(OracleError::InvalidSwapSize(t));
    }
    if !graph.is_unit_weight() {
        log::warn!("local search ignores vertex weights and maximizes cardinality");
    }
    let n = graph.num_vertices();
    let init = seeded_greedy_init(graph, seed);
    let in_set = init.membership(n);
    let conflicts = (0..n)
        .map(|v| graph.neighbors(v).iter().filter(|&&u| in_set[u]).count())
        .collect();
    let mut search = SwapSearch {
        graph,
        t,
        in_set,
        conflicts,
        evict_count: vec![0; n],
        evicted: 0,
        tuple: Vec::new(),
    };
    while let Some(swap) = search.find_improvement() {
        search.apply(&swap);
    }
    Ok(VertexSet::from_mask(graph, &search.in_set))
}
