//! Brute-force reference solvers. Nothing here calls into the library's
//! solvers; only the graph type is shared.

#![allow(dead_code)]

use ntcover::flow::FlowNetwork;
use ntcover::graph::WeightedGraph;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize, max_weight: u64) -> WeightedGraph {
    let n = rng.gen_range(0..=max_n);
    let p = rng.gen_range(0.1..0.8);
    WeightedGraph::random_gnp(n, p, max_weight, rng)
}

pub fn adjacency_masks(g: &WeightedGraph) -> Vec<u64> {
    (0..g.num_vertices())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect()
}

pub fn mask_weight(g: &WeightedGraph, mask: u64) -> u64 {
    (0..g.num_vertices())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| g.weight(v))
        .sum()
}

pub fn is_cover_mask(g: &WeightedGraph, mask: u64) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
}

pub fn is_independent_mask(adj: &[u64], mask: u64) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0)
}

/// Minimum vertex cover weight over all `2^n` subsets.
pub fn brute_vc(g: &WeightedGraph) -> u64 {
    let n = g.num_vertices();
    (0u64..1 << n)
        .filter(|&m| is_cover_mask(g, m))
        .map(|m| mask_weight(g, m))
        .min()
        .unwrap_or(0)
}

/// Every minimum-weight vertex cover, as masks.
pub fn all_min_covers(g: &WeightedGraph) -> Vec<u64> {
    let n = g.num_vertices();
    let best = brute_vc(g);
    (0u64..1 << n)
        .filter(|&m| is_cover_mask(g, m) && mask_weight(g, m) == best)
        .collect()
}

/// Maximum independent set weight over all `2^n` subsets.
pub fn brute_is(g: &WeightedGraph) -> u64 {
    let adj = adjacency_masks(g);
    let n = g.num_vertices();
    (0u64..1 << n)
        .filter(|&m| is_independent_mask(&adj, m))
        .map(|m| mask_weight(g, m))
        .max()
        .unwrap_or(0)
}

/// Minimum of `2 * sum w(v) x_v` over all feasible `x` in `{0, 1/2, 1}^n`.
///
/// Exhaustive over the `3^n` assignments; branches that already violate an
/// edge constraint, or already cost at least the best complete assignment,
/// cannot lead to a smaller feasible value and are cut.
pub fn min_half_integral_doubled(g: &WeightedGraph) -> u64 {
    fn go(g: &WeightedGraph, v: usize, x: &mut Vec<u64>, cost: u64, best: &mut u64) {
        if cost >= *best {
            return;
        }
        if v == g.num_vertices() {
            *best = cost;
            return;
        }
        for value in 0..=2u64 {
            let ok = g
                .neighbors(v)
                .iter()
                .filter(|&&u| u < v)
                .all(|&u| x[u] + value >= 2);
            if ok {
                x.push(value);
                go(g, v + 1, x, cost + value * g.weight(v), best);
                x.pop();
            }
        }
    }
    let mut best = 2 * g.total_weight() + 1;
    go(g, 0, &mut Vec::new(), 0, &mut best);
    best
}

/// Minimum s–t cut capacity by enumerating every node subset containing the
/// source and not the sink. Only for tiny networks.
pub fn brute_min_cut(net: &FlowNetwork) -> u64 {
    let others: Vec<usize> = (0..net.node_count())
        .filter(|&v| v != net.source() && v != net.sink())
        .collect();
    assert!(others.len() <= 20);
    let mut best = u64::MAX;
    for mask in 0u64..1 << others.len() {
        let mut side = vec![false; net.node_count()];
        side[net.source()] = true;
        for (i, &v) in others.iter().enumerate() {
            side[v] = mask >> i & 1 == 1;
        }
        let cut: u64 = net
            .arcs()
            .iter()
            .filter(|a| side[a.from] && !side[a.to])
            .map(|a| a.capacity)
            .sum();
        best = best.min(cut);
    }
    best
}

/// Minimum weight vertex cover of the doubled bipartite graph
/// (`u1 v2`, `u2 v1` per edge), enumerating all `4^n` choices.
pub fn brute_doubled_cover(g: &WeightedGraph) -> u64 {
    let n = g.num_vertices();
    assert!(n <= 10);
    let mut best = u64::MAX;
    for mask in 0u64..1 << (2 * n) {
        let left = |u: usize| mask >> u & 1 == 1;
        let right = |u: usize| mask >> (n + u) & 1 == 1;
        let covers = g
            .edges()
            .iter()
            .all(|&(u, v)| (left(u) || right(v)) && (left(v) || right(u)));
        if covers {
            let w = (0..n)
                .map(|u| (u64::from(left(u)) + u64::from(right(u))) * g.weight(u))
                .sum();
            best = best.min(w);
        }
    }
    best
}

/// Searches every `X` outside `set` with `|X| <= t`, `X` independent, for
/// one whose insertion evicts fewer than `|X|` members of `set`.
pub fn find_improving_swap(g: &WeightedGraph, set: &[usize], t: usize) -> Option<Vec<usize>> {
    let n = g.num_vertices();
    let adj = adjacency_masks(g);
    let in_set = set.iter().fold(0u64, |m, &v| m | 1 << v);
    let outside: Vec<usize> = (0..n).filter(|&v| in_set >> v & 1 == 0).collect();
    let k = outside.len();
    for mask in 1u64..1 << k {
        if mask.count_ones() as usize > t {
            continue;
        }
        let x = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0u64, |m, i| m | 1 << outside[i]);
        if !is_independent_mask(&adj, x) {
            continue;
        }
        let evicted = (0..n)
            .filter(|&v| x >> v & 1 == 1)
            .fold(0u64, |m, v| m | adj[v])
            & in_set;
        if evicted.count_ones() < x.count_ones() {
            return Some((0..n).filter(|&v| x >> v & 1 == 1).collect());
        }
    }
    None
}
