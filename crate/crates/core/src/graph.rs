//! Finite simple undirected graphs on vertices `0..n` and their structural
//! primitives: complement, vertex deletion, BFS distances and vertex
//! connectivity.

use std::collections::VecDeque;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A finite simple undirected graph with vertices `0..n`.
///
/// Neighbour lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of how they were built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            name: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) has an endpoint >= n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({u},{})",
                    w[0]
                )));
            }
        }
        Ok(Graph { adj, name: None })
    }

    /// Builds a graph from a symmetric 0/1 adjacency predicate.
    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = self.adj.iter().map(Vec::len);
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let n = self.order();
        let mut a = DMatrix::zeros(n, n);
        for (u, v) in self.edges() {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// `L = D - A`.
    pub fn laplacian_matrix(&self) -> DMatrix<f64> {
        let mut l = -self.adjacency_matrix();
        for u in 0..self.order() {
            l[(u, u)] = self.degree(u) as f64;
        }
        l
    }

    /// Component index of every vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// `Ḡ`: `{u,v}` is an edge iff it is not an edge of `self`.
    pub fn complement(&self) -> Graph {
        let g = Graph::from_fn(self.order(), |u, v| !self.has_edge(u, v));
        match &self.name {
            Some(name) => g.with_name(format!("complement({name})")),
            None => g,
        }
    }

    /// Induced subgraph on `V ∖ removed`, relabelled `0..` in the original
    /// relative order.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut keep = vec![true; n];
        for &u in removed {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            keep[u] = false;
        }
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for u in 0..n {
            if keep[u] {
                relabel[u] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (relabel[u], relabel[v]));
        Graph::from_edges(next, edges)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    /// Vertex connectivity κ(G): the fewest vertices whose removal
    /// disconnects the graph or leaves a single vertex. `κ(K_n) = n - 1`.
    ///
    /// Computed as the minimum, over non-adjacent pairs, of the number of
    /// internally vertex-disjoint paths (max-flow on the split graph).
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        if n <= 1 {
            return 0;
        }
        let mut best = n - 1;
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    best = best.min(self.disjoint_paths(u, v, best));
                    if best == 0 {
                        return 0;
                    }
                }
            }
        }
        best
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, stopping early
    /// once `cap` paths are found. `s` and `t` must be non-adjacent.
    fn disjoint_paths(&self, s: usize, t: usize, cap: usize) -> usize {
        // Node x splits into x_in = 2x and x_out = 2x + 1 with capacity 1
        // between them; edges become x_out -> y_in with unbounded capacity.
        let n = self.order();
        let size = 2 * n;
        let mut cap_m = vec![vec![0i32; size]; size];
        for x in 0..n {
            cap_m[2 * x][2 * x + 1] = if x == s || x == t { i32::MAX / 2 } else { 1 };
            for &y in &self.adj[x] {
                cap_m[2 * x + 1][2 * y] = i32::MAX / 2;
            }
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        while flow < cap {
            let mut prev = vec![usize::MAX; size];
            prev[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 0..size {
                    if prev[y] == usize::MAX && cap_m[x][y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = prev[y];
                cap_m[x][y] -= 1;
                cap_m[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

/// All-pairs shortest-path lengths. `None` marks pairs in different components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<usize>>,
    eccentricities: Vec<Option<usize>>,
    diameter: Option<usize>,
}

impl DistanceMatrix {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![None; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u].unwrap_or(0);
                for &v in g.neighbors(u) {
                    if row[v].is_none() {
                        row[v] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        let eccentricities: Vec<Option<usize>> = (0..n)
            .map(|u| {
                dist[u * n..(u + 1) * n]
                    .iter()
                    .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
            })
            .collect();
        let diameter = dist.iter().flatten().copied().max();
        DistanceMatrix {
            n,
            dist,
            eccentricities,
            diameter,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u * self.n + v]
    }

    /// Largest finite distance (`None` only for the empty graph).
    pub fn diameter(&self) -> Option<usize> {
        self.diameter
    }

    /// `None` when some vertex is unreachable from `u`.
    pub fn eccentricity(&self, u: usize) -> Option<usize> {
        self.eccentricities[u]
    }

    /// Vertices at distance exactly `i` from `u`.
    pub fn sphere(&self, u: usize, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.get(u, v) == Some(i)).collect()
    }

    /// The `i`-distance matrix `A_i`.
    pub fn distance_indicator(&self, i: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |u, v| {
            if self.get(u, v) == Some(i) {
                1.0
            } else {
                0.0
            }
        })
    }
}
