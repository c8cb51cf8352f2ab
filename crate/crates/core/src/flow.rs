//! Integer-capacity s–t flow networks and a blocking-flow max-flow solver.

use std::collections::VecDeque;

/// A directed arc with an integer capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

/// A directed network with a distinguished source and sink.
///
/// Arcs are kept in insertion order; that order fixes the search order of
/// the solver and therefore the resulting flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    node_count: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(node_count: usize, source: usize, sink: usize) -> Self {
        assert!(source < node_count && sink < node_count && source != sink);
        Self {
            node_count,
            source,
            sink,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) {
        assert!(from < self.node_count && to < self.node_count);
        self.arcs.push(Arc { from, to, capacity });
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// Result of a max-flow computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: u64,
    /// Flow on each arc of the network, indexed like `FlowNetwork::arcs`.
    pub arc_flow: Vec<u64>,
    /// Nodes reachable from the source in the final residual network; the
    /// source side of the minimum cut closest to the source.
    pub reachable: Vec<bool>,
}

struct ResidualEdge {
    to: usize,
    residual: u64,
    rev: usize,
}

struct Dinic {
    graph: Vec<Vec<ResidualEdge>>,
    level: Vec<i64>,
    cursor: Vec<usize>,
}

impl Dinic {
    fn new(network: &FlowNetwork) -> (Self, Vec<(usize, usize)>) {
        let mut graph: Vec<Vec<ResidualEdge>> =
            (0..network.node_count).map(|_| Vec::new()).collect();
        let mut handles = Vec::with_capacity(network.arcs.len());
        for arc in &network.arcs {
            let fwd = graph[arc.from].len();
            let bwd = graph[arc.to].len() + usize::from(arc.from == arc.to);
            graph[arc.from].push(ResidualEdge {
                to: arc.to,
                residual: arc.capacity,
                rev: bwd,
            });
            graph[arc.to].push(ResidualEdge {
                to: arc.from,
                residual: 0,
                rev: fwd,
            });
            handles.push((arc.from, fwd));
        }
        let n = network.node_count;
        (
            Self {
                graph,
                level: vec![-1; n],
                cursor: vec![0; n],
            },
            handles,
        )
    }

    fn bfs(&mut self, source: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for e in &self.graph[u] {
                if e.residual > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
    }

    fn augment(&mut self, u: usize, sink: usize, limit: u64) -> u64 {
        if u == sink {
            return limit;
        }
        while self.cursor[u] < self.graph[u].len() {
            let i = self.cursor[u];
            let (to, residual) = (self.graph[u][i].to, self.graph[u][i].residual);
            if residual > 0 && self.level[to] == self.level[u] + 1 {
                let pushed = self.augment(to, sink, limit.min(residual));
                if pushed > 0 {
                    let rev = self.graph[u][i].rev;
                    self.graph[u][i].residual -= pushed;
                    self.graph[to][rev].residual += pushed;
                    return pushed;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }
}

/// Computes a maximum s–t flow with Dinic's blocking-flow algorithm.
///
/// Deterministic: the same network (including arc order) always yields the
/// same flow and the same residual reachability set.
pub fn max_flow(network: &FlowNetwork) -> MaxFlow {
    let (source, sink) = (network.source, network.sink);
    let (mut dinic, handles) = Dinic::new(network);
    let mut value: u64 = 0;
    loop {
        dinic.bfs(source);
        if dinic.level[sink] < 0 {
            break;
        }
        dinic.cursor.iter_mut().for_each(|c| *c = 0);
        loop {
            let pushed = dinic.augment(source, sink, u64::MAX);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }
    // The last BFS found no path to the sink; its labels are the residual
    // reachability set.
    let reachable = dinic.level.iter().map(|&l| l >= 0).collect();
    let arc_flow = network
        .arcs
        .iter()
        .zip(&handles)
        .map(|(arc, &(u, i))| arc.capacity - dinic.graph[u][i].residual)
        .collect();
    MaxFlow {
        value,
        arc_flow,
        reachable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn network(n: usize, arcs: &[(usize, usize, u64)]) -> FlowNetwork {
        let mut net = FlowNetwork::new(n, 0, n - 1);
        for &(u, v, c) in arcs {
            net.add_arc(u, v, c);
        }
        net
    }

    #[test]
    fn textbook_network() {
        let net = network(
            6,
            &[
                (0, 1, 10),
                (0, 2, 10),
                (1, 3, 4),
                (1, 4, 8),
                (2, 4, 9),
                (3, 5, 10),
                (4, 3, 6),
                (4, 5, 10),
            ],
        );
        let flow = max_flow(&net);
        assert_eq!(flow.value, 19);
        let cut: u64 = net
            .arcs()
            .iter()
            .filter(|a| flow.reachable[a.from] && !flow.reachable[a.to])
            .map(|a| a.capacity)
            .sum();
        assert_eq!(cut, 19);
    }

    #[test]
    fn disconnected_sink() {
        let net = network(4, &[(0, 1, 10), (2, 3, 5)]);
        let flow = max_flow(&net);
        assert_eq!(flow.value, 0);
        assert_eq!(flow.reachable, vec![true, true, false, false]);
    }

    #[test]
    fn flow_conservation_and_capacity() {
        let net = network(
            7,
            &[
                (0, 1, 10),
                (0, 2, 5),
                (1, 3, 9),
                (1, 4, 3),
                (2, 4, 7),
                (2, 5, 2),
                (3, 6, 10),
                (4, 6, 10),
                (5, 6, 5),
                (4, 1, 2),
            ],
        );
        let flow = max_flow(&net);
        assert_eq!(flow.value, 15);
        let mut balance = [0i64; 7];
        for (arc, &f) in net.arcs().iter().zip(&flow.arc_flow) {
            assert!(f <= arc.capacity);
            balance[arc.from] -= f as i64;
            balance[arc.to] += f as i64;
        }
        assert_eq!(balance[0], -15);
        assert_eq!(balance[6], 15);
        assert!(balance[1..6].iter().all(|&b| b == 0));
    }

    #[test]
    fn parallel_and_antiparallel_arcs() {
        let net = network(3, &[(0, 1, 2), (0, 1, 3), (1, 0, 4), (1, 2, 4)]);
        assert_eq!(max_flow(&net).value, 4);
    }
}
