//! Small worked instances, each value cross-checked against an enumeration.

mod common;

use ntcover::approx::{approx_vc, matching_2approx_vc, verify_result, ClaimedResult};
use ntcover::flow::max_flow;
use ntcover::graph::{VertexSet, WeightedGraph};
use ntcover::io::{parse_result, write_result};
use ntcover::kernel::{kernel_density_check, kernelize, lift};
use ntcover::lp::{build_bipartite_double, half_integral_solution, solve_lp, HalfValue};
use ntcover::oracle::{
    exact_is, greedy_is, local_search_is, ExactOracle, GreedyOracle, IndependentSetOracle,
};

fn edge() -> WeightedGraph {
    WeightedGraph::unweighted(2, [(0, 1)]).unwrap()
}

fn heavy_edge() -> WeightedGraph {
    WeightedGraph::new(2, vec![3, 1], [(0, 1)]).unwrap()
}

fn star() -> WeightedGraph {
    WeightedGraph::unweighted(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
}

fn triangle() -> WeightedGraph {
    WeightedGraph::unweighted(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
}

fn c5() -> WeightedGraph {
    WeightedGraph::unweighted(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
}

fn set(g: &WeightedGraph, members: &[usize]) -> VertexSet {
    VertexSet::new(g, members.iter().copied()).unwrap()
}

#[test]
fn c5_cover_and_independent_set() {
    let g = c5();
    let cover = set(&g, &[0, 2, 4]);
    let is = set(&g, &[1, 3]);
    assert!(g.is_vertex_cover(&cover));
    assert!(g.is_independent_set(&is));
    let to_mask = |s: &VertexSet| s.members().iter().fold(0u64, |m, &v| m | 1 << v);
    assert!(common::is_cover_mask(&g, to_mask(&cover)));
    assert!(common::is_independent_mask(
        &common::adjacency_masks(&g),
        to_mask(&is)
    ));
}

#[test]
fn doubled_flows_match_brute_force_cuts() {
    for g in [edge(), star()] {
        let net = build_bipartite_double(&g);
        let flow = max_flow(&net);
        assert_eq!(flow.value, 2);
        assert_eq!(common::brute_min_cut(&net), 2);
        assert_eq!(common::brute_doubled_cover(&g), 2);
    }
}

#[test]
fn star_cover_is_both_center_copies() {
    let cert = solve_lp(&star()).unwrap();
    assert_eq!(cert.cover.left, [true, false, false, false]);
    assert_eq!(cert.cover.right, [true, false, false, false]);
    assert_eq!(cert.cover.weight, 2);
}

#[test]
fn lp_examples_match_enumeration() {
    use HalfValue::*;
    let cases = [
        (edge(), vec![Half, Half], 2),
        (star(), vec![One, Zero, Zero, Zero], 2),
        (heavy_edge(), vec![Zero, One], 2),
        (triangle(), vec![Half, Half, Half], 3),
        (c5(), vec![Half; 5], 5),
    ];
    for (g, values, doubled) in cases {
        let sol = half_integral_solution(&g);
        assert_eq!(sol.values(), &values[..]);
        assert_eq!(sol.objective().doubled(), doubled);
        assert_eq!(common::min_half_integral_doubled(&g), doubled);
    }
    assert_eq!(
        half_integral_solution(&triangle()).objective().to_string(),
        "3/2"
    );
}

#[test]
fn kernel_examples() {
    let k = kernelize(&star()).unwrap();
    assert_eq!(k.graph.num_vertices(), 0);
    assert_eq!(k.forced.members(), [0]);
    assert_eq!(k.free.members(), [1, 2, 3]);
    let lifted = lift(&star(), &k, &VertexSet::empty()).unwrap();
    assert_eq!(lifted.members(), [0]);
    assert_eq!(lifted.weight(), common::brute_vc(&star()));

    let k = kernelize(&c5()).unwrap();
    assert_eq!(k.graph, c5());
    assert!(k.forced.is_empty() && k.free.is_empty());
    assert!(kernel_density_check(&k));
    let lifted = lift(&c5(), &k, &set(&k.graph, &[0, 2, 3])).unwrap();
    assert_eq!(lifted.weight(), 3);
    assert_eq!(common::brute_vc(&c5()), 3);

    let k = kernelize(&heavy_edge()).unwrap();
    assert!(k.is_empty());
    assert_eq!(k.forced.members(), [1]);
    assert_eq!(k.free.members(), [0]);

    assert!(kernel_density_check(&kernelize(&triangle()).unwrap()));
}

#[test]
fn independent_set_examples() {
    assert_eq!(exact_is(&c5(), 30).unwrap().weight(), 2);
    assert_eq!(common::brute_is(&c5()), 2);
    assert_eq!(greedy_is(&star()).members(), [1, 2, 3]);
    assert_eq!(greedy_is(&heavy_edge()).members(), [0]);

    let s = local_search_is(&c5(), 1, 0).unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(common::find_improving_swap(&c5(), s.members(), 1), None);
    assert_eq!(local_search_is(&star(), 1, 0).unwrap().members(), [1, 2, 3]);
}

#[test]
fn pipeline_examples() {
    let exact = ExactOracle::default();
    let res = approx_vc(&star(), &exact, 0.0).unwrap();
    assert_eq!(res.cover.members(), [0]);
    let res = approx_vc(&c5(), &exact, 0.0).unwrap();
    assert_eq!(res.cover_weight(), common::brute_vc(&c5()));
    let oracles: [(&dyn IndependentSetOracle, f64); 2] = [(&exact, 0.0), (&GreedyOracle, 0.5)];
    for (oracle, eps) in oracles {
        let res = approx_vc(&heavy_edge(), oracle, eps).unwrap();
        assert_eq!(res.cover.members(), [1]);
        assert_eq!(res.cover_weight(), 1);
    }
    assert_eq!(
        ntcover::approx::exact_vc(&triangle(), 30).unwrap().weight(),
        2
    );
    assert_eq!(
        ntcover::approx::exact_vc(&star(), 30).unwrap().members(),
        [0]
    );
}

#[test]
fn matching_on_a_path() {
    let path = WeightedGraph::unweighted(3, [(0, 1), (1, 2)]).unwrap();
    let c = matching_2approx_vc(&path);
    assert_eq!(c.members(), [0, 1]);
    assert_eq!(common::brute_vc(&path), 1);
}

#[test]
fn result_documents() {
    let star_res = approx_vc(&star(), &ExactOracle::default(), 0.0).unwrap();
    let doc = parse_result(&write_result(&star_res)).unwrap();
    assert_eq!(doc.cover, [1]);
    assert_eq!(doc.cover_weight, 1);
    assert_eq!(doc.lp_bound, "1/1");

    let c5_res = approx_vc(&c5(), &ExactOracle::default(), 0.0).unwrap();
    let doc = parse_result(&write_result(&c5_res)).unwrap();
    assert_eq!(doc.cover.len(), 3);
    assert_eq!(doc.lp_bound, "5/2");
    assert_eq!(doc.ratio_bound.as_deref(), Some("6/5"));

    let report = verify_result(&c5(), &ClaimedResult::from(&c5_res), 30);
    assert!(report.passed());
    assert_eq!(report.optimum, Some(3));
}
