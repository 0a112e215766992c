//! Plain undirected graphs with dense vertex indices.
//!
//! Everything here is topology-only: adjacency, traversal, components and
//! exact vertex connectivity. Arrangement-specific structure lives in
//! [`crate::arrangement`].

use std::collections::VecDeque;

/// Immutable undirected simple graph over vertices `0..n`.
#[derive(Clone, Debug)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Self-loops are rejected by debug
    /// assertion; duplicate edges are collapsed.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            debug_assert!(u != v, "self-loop {u}");
            debug_assert!(u < vertex_count && v < vertex_count);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(|l| l.len()).sum::<usize>() / 2;
        SimpleGraph { adj, edge_count }
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let edge_count = adj.iter().map(|l| l.len()).sum::<usize>() / 2;
        SimpleGraph { adj, edge_count }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(i, j)` pairs with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n <= 1 || self.edge_count == n * (n - 1) / 2
    }

    /// BFS distances from `src`; unreachable vertices map to `None`.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    /// Maximum pairwise distance. Panics if the graph is disconnected or empty.
    pub fn diameter(&self) -> usize {
        let mut diam = 0;
        for v in 0..self.vertex_count() {
            for d in self.bfs_distances(v) {
                diam = diam.max(d.expect("diameter of a disconnected graph"));
            }
        }
        diam
    }

    /// Connected components of the graph with `removed` vertices deleted.
    /// Each component is sorted ascending; components come out in order of
    /// their smallest vertex.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        assert_eq!(removed.len(), self.vertex_count());
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True iff the graph minus `removed` is connected (the empty survivor
    /// graph counts as connected).
    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        assert_eq!(removed.len(), self.vertex_count());
        let n = self.vertex_count();
        let Some(start) = (0..n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        let mut reached = 1usize;
        let total = removed.iter().filter(|r| !**r).count();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == total
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&vec![false; self.vertex_count()])
    }

    /// Exact vertex connectivity. Returns `n - 1` for complete graphs.
    ///
    /// Uses the standard reduction: fix a minimum-degree vertex `v`, take the
    /// minimum of local connectivity to every non-neighbor of `v` and between
    /// every non-adjacent pair of neighbors of `v`. Local connectivity is unit
    /// max-flow on the vertex-split digraph.
    pub fn connectivity(&self) -> usize {
        let n = self.vertex_count();
        if self.is_complete() {
            return n.saturating_sub(1);
        }
        if !self.is_connected() {
            return 0;
        }
        let v = (0..n).min_by_key(|&v| self.degree(v)).unwrap();
        let mut best = usize::MAX;
        for u in 0..n {
            if u != v && !self.has_edge(u, v) {
                best = best.min(self.local_connectivity(v, u));
            }
        }
        let nbrs = self.neighbors(v);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if !self.has_edge(x, y) {
                    best = best.min(self.local_connectivity(x, y));
                }
            }
        }
        best
    }

    /// Max number of internally vertex-disjoint s-t paths for non-adjacent
    /// `s`, `t` (Menger).
    pub fn local_connectivity(&self, s: usize, t: usize) -> usize {
        assert!(s != t && !self.has_edge(s, t));
        // Vertex split: node v -> in 2v, out 2v+1. Unit capacities everywhere;
        // an augmenting path uses each interior vertex at most once.
        let n = self.vertex_count();
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            if v != s && v != t {
                net.add_edge(2 * v, 2 * v + 1);
            }
        }
        for (u, w) in self.edges() {
            net.add_edge(2 * u + 1, 2 * w);
            net.add_edge(2 * w + 1, 2 * u);
        }
        // s and t are uncapacitated: short their in/out sides.
        net.add_edge(2 * s, 2 * s + 1);
        net.add_edge(2 * t, 2 * t + 1);
        net.set_capacity_between(2 * s, 2 * s + 1, usize::MAX / 2);
        net.set_capacity_between(2 * t, 2 * t + 1, usize::MAX / 2);
        net.max_flow(2 * s, 2 * t + 1)
    }

    // Small generators, mainly for tests and brute-force baselines.

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    /// Erdos-Renyi G(n, p) sample.
    pub fn random_gnp(n: usize, p: f64, rng: &mut impl rand::Rng) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn hypercube(dim: u32) -> Self {
        let n = 1usize << dim;
        let mut edges = Vec::new();
        for v in 0..n {
            for b in 0..dim {
                let w = v ^ (1 << b);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        SimpleGraph::from_edges(n, &edges)
    }
}

/// Minimal unit-capacity max-flow (BFS augmenting paths).
struct FlowNetwork {
    // (to, capacity, index of reverse arc)
    arcs: Vec<Vec<(usize, usize, usize)>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize) {
        let fwd = self.arcs[to].len();
        let rev = self.arcs[from].len();
        self.arcs[from].push((to, 1, fwd));
        self.arcs[to].push((from, 0, rev));
    }

    fn set_capacity_between(&mut self, from: usize, to: usize, cap: usize) {
        for arc in &mut self.arcs[from] {
            if arc.0 == to && arc.1 > 0 {
                arc.1 = cap;
            }
        }
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let n = self.arcs.len();
        let mut flow = 0;
        loop {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for (i, &(to, cap, _)) in self.arcs[u].iter().enumerate() {
                    if cap > 0 && to != s && prev[to].is_none() {
                        prev[to] = Some((u, i));
                        if to == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if !found {
                return flow;
            }
            let mut v = t;
            while v != s {
                let (u, i) = prev[v].unwrap();
                let rev = self.arcs[u][i].2;
                self.arcs[u][i].1 -= 1;
                self.arcs[v][rev].1 += 1;
                v = u;
            }
            flow += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_basics() {
        let g = SimpleGraph::complete(6);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.diameter(), 1);
        assert_eq!(g.connectivity(), 5);
    }

    #[test]
    fn cycle_connectivity_and_distance() {
        let g = SimpleGraph::cycle(6);
        assert_eq!(g.connectivity(), 2);
        assert_eq!(g.distance(0, 3), Some(3));
        assert_eq!(g.diameter(), 3);
    }

    #[test]
    fn hypercube_connectivity() {
        let g = SimpleGraph::hypercube(3);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.connectivity(), 3);
        assert_eq!(g.diameter(), 3);
    }

    #[test]
    fn components_after_removal() {
        let g = SimpleGraph::cycle(6);
        let mut removed = vec![false; 6];
        removed[0] = true;
        removed[3] = true;
        let comps = g.components_without(&removed);
        assert_eq!(comps, vec![vec![1, 2], vec![4, 5]]);
        assert!(!g.is_connected_without(&removed));
    }

    #[test]
    fn local_connectivity_path() {
        // Path 0-1-2: one interior vertex separates the ends.
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(g.local_connectivity(0, 2), 1);
        assert_eq!(g.connectivity(), 1);
    }
}
