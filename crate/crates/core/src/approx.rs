//! The approximation pipeline: kernelize, run an independent-set oracle on
//! the kernel, take the complement as the kernel cover and lift it.
//!
//! Every vertex cover of the kernel weighs at least half the kernel, so an
//! independent set within a factor `(1 - eps)` of optimal on the kernel
//! yields a cover within `(1 + eps)` of optimal on the whole graph.

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{VertexSet, WeightedGraph};
use crate::kernel::{kernelize, lift, Kernel, KernelError};
use crate::lp::HalfInteger;
use crate::oracle::{exact_is, IndependentSetOracle, OracleError, OracleQuality};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ApproxError {
    #[error("epsilon must lie in [0, 1), got {0}")]
    InvalidEpsilon(f64),
    #[error("epsilon 0 requires an exact oracle, `{0}` is not")]
    ZeroEpsilonNeedsExact(&'static str),
    #[error("oracle returned a set that is not independent in the kernel")]
    NotIndependent,
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Size and weight of one part of the crown decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartStats {
    pub size: usize,
    pub weight: u64,
}

impl From<&VertexSet> for PartStats {
    fn from(set: &VertexSet) -> Self {
        Self {
            size: set.len(),
            weight: set.weight(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KernelStats {
    pub zero: PartStats,
    pub half: PartStats,
    pub one: PartStats,
}

impl From<&Kernel> for KernelStats {
    fn from(kernel: &Kernel) -> Self {
        Self {
            zero: (&kernel.free).into(),
            half: (&kernel.half).into(),
            one: (&kernel.forced).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxResult {
    pub cover: VertexSet,
    pub lp_lower_bound: HalfInteger,
    pub kernel_stats: KernelStats,
    /// Weight of the independent set the oracle returned on the kernel.
    pub kernel_independent_weight: u64,
    pub oracle_name: String,
    pub eps_requested: f64,
    pub swap_size: Option<usize>,
}

impl ApproxResult {
    pub fn cover_weight(&self) -> u64 {
        self.cover.weight()
    }

    /// `cover_weight / lp_lower_bound`, or `None` when the bound is zero.
    pub fn certified_ratio_bound(&self) -> Option<Ratio<u64>> {
        ratio_bound(self.cover_weight(), self.lp_lower_bound)
    }
}

pub fn ratio_bound(cover_weight: u64, lp_bound: HalfInteger) -> Option<Ratio<u64>> {
    (lp_bound.doubled() > 0).then(|| Ratio::new(2 * cover_weight, lp_bound.doubled()))
}

/// Computes a vertex cover of `graph` through the kernel and `oracle`.
pub fn approx_vc(
    graph: &WeightedGraph,
    oracle: &dyn IndependentSetOracle,
    eps: f64,
) -> Result<ApproxResult, ApproxError> {
    if !(0.0..1.0).contains(&eps) {
        return Err(ApproxError::InvalidEpsilon(eps));
    }
    if eps == 0.0 && oracle.quality() != OracleQuality::Exact {
        return Err(ApproxError::ZeroEpsilonNeedsExact(oracle.name()));
    }
    let kernel = kernelize(graph)?;
    let (kernel_cover, independent_weight) = if kernel.is_empty() {
        (VertexSet::empty(), 0)
    } else {
        let independent = oracle.solve(&kernel.graph)?;
        if !independent.weight_matches(&kernel.graph)
            || !kernel.graph.is_independent_set(&independent)
        {
            return Err(ApproxError::NotIndependent);
        }
        (independent.complement(&kernel.graph), independent.weight())
    };
    let cover = lift(graph, &kernel, &kernel_cover)?;
    Ok(ApproxResult {
        cover,
        lp_lower_bound: kernel.solution.objective(),
        kernel_stats: (&kernel).into(),
        kernel_independent_weight: independent_weight,
        oracle_name: oracle.name().to_string(),
        eps_requested: eps,
        swap_size: oracle.swap_size(),
    })
}

/// Minimum-weight vertex cover as the complement of a maximum-weight
/// independent set.
pub fn exact_vc(graph: &WeightedGraph, cap: usize) -> Result<VertexSet, OracleError> {
    Ok(exact_is(graph, cap)?.complement(graph))
}

/// Both endpoints of a maximal matching built greedily over the sorted edge
/// list.
pub fn matching_2approx_vc(graph: &WeightedGraph) -> VertexSet {
    let mut matched = vec![false; graph.num_vertices()];
    for &(u, v) in graph.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
        }
    }
    VertexSet::from_mask(graph, &matched)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    /// `cover_weight / vc*`, when the instance was small enough to solve.
    pub exact_ratio: Option<Ratio<u64>>,
    pub optimum: Option<u64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }
}

/// What a result claims, independent of how it was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimedResult {
    /// 0-based cover vertices as claimed.
    pub cover: Vec<usize>,
    pub cover_weight: u64,
    pub lp_bound: HalfInteger,
}

impl From<&ApproxResult> for ClaimedResult {
    fn from(res: &ApproxResult) -> Self {
        Self {
            cover: res.cover.members().to_vec(),
            cover_weight: res.cover_weight(),
            lp_bound: res.lp_lower_bound,
        }
    }
}

/// Re-checks a claimed result against the instance: the cover is valid, its
/// weight matches, the LP bound is the true LP optimum and lies below the
/// cover weight. When `graph` has at most `cap` vertices the cover is also
/// compared with an exact optimum.
pub fn verify_result(graph: &WeightedGraph, claim: &ClaimedResult, cap: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = graph.num_vertices();
    let in_range = claim.cover.iter().all(|&v| v < n);
    report.push(
        "cover-in-range",
        in_range,
        format!("{} ids, n = {n}", claim.cover.len()),
    );
    let cover = if in_range {
        VertexSet::new(graph, claim.cover.iter().copied()).expect("checked range")
    } else {
        VertexSet::new(graph, claim.cover.iter().copied().filter(|&v| v < n))
            .expect("filtered range")
    };
    let uncovered = graph
        .edges()
        .iter()
        .find(|&&(u, v)| !cover.contains(u) && !cover.contains(v));
    report.push(
        "cover-validity",
        uncovered.is_none(),
        match uncovered {
            Some(&(u, v)) => format!("edge {}-{} uncovered", u + 1, v + 1),
            None => format!("all {} edges covered", graph.num_edges()),
        },
    );
    report.push(
        "cover-weight",
        cover.weight() == claim.cover_weight,
        format!(
            "claimed {}, recomputed {}",
            claim.cover_weight,
            cover.weight()
        ),
    );
    let lp = crate::lp::half_integral_solution(graph).objective();
    report.push(
        "lp-bound",
        lp == claim.lp_bound,
        format!("claimed {}, recomputed {lp}", claim.lp_bound),
    );
    report.push(
        "lp-below-cover",
        lp.doubled() <= 2 * cover.weight(),
        format!("{lp} <= {}", cover.weight()),
    );
    if let Ok(optimal) = exact_vc(graph, cap) {
        let opt = optimal.weight();
        report.optimum = Some(opt);
        report.exact_ratio = (opt > 0).then(|| Ratio::new(cover.weight(), opt));
        report.push(
            "optimum-below-cover",
            opt <= cover.weight(),
            format!("vc* = {opt}"),
        );
    }
    report
}
