//! Approximate minimum-weight vertex cover through LP kernelization.
//!
//! The pipeline:
//!
//! 1. [`lp::half_integral_solution`] solves the vertex cover LP relaxation
//!    exactly, with values in `{0, 1/2, 1}`, via max-flow on a doubled
//!    bipartite graph.
//! 2. [`kernel::kernelize`] splits the graph into crown, body and head and
//!    keeps only the body `G[V_1/2]`, where every vertex cover weighs at
//!    least half the total weight.
//! 3. [`approx::approx_vc`] runs an independent-set oracle on the kernel,
//!    complements it and lifts the result back, so a `(1 - eps)`-approximate
//!    independent set becomes a `(1 + eps)`-approximate vertex cover.
//!
//! ```
//! use ntcover::{approx::approx_vc, graph::WeightedGraph, oracle::ExactOracle};
//!
//! let c5 = WeightedGraph::unweighted(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
//! let res = approx_vc(&c5, &ExactOracle::default(), 0.0).unwrap();
//! assert_eq!(res.cover_weight(), 3);
//! assert_eq!(res.lp_lower_bound.to_string(), "5/2");
//! ```

pub mod approx;
pub mod decimal;
pub mod flow;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod lp;
pub mod oracle;

pub use approx::{approx_vc, ApproxResult};
pub use graph::{VertexSet, WeightedGraph};
pub use kernel::{kernelize, Kernel};
