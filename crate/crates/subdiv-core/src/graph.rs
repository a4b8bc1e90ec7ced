//! Immutable simple-graph representation with the neighbourhood and ball
//! operators the constructions are built from.
//!
//! Vertex ids are dense integers `0..n`. Every operation that restricts to a
//! subgraph returns a [`Subgraph`] carrying a translation table back to the
//! parent ids, because the constructions repeatedly shrink the graph while
//! needing to report paths in the original ids.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Exact rational, used for all average/minimum-degree comparisons.
pub type Rational = num_rational::Ratio<i128>;

/// A set of vertex ids. Ordered so that every iteration in the crate is
/// deterministic (ties always break toward the lowest id).
pub type VertexSet = BTreeSet<usize>;

/// A path as its ordered vertex sequence; length = `vertices.len() - 1`.
pub type Path = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
        }
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count(), self.edge_count)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// and out-of-range endpoints; the endpoint order within a pair does not
    /// matter.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge { u, v: w[0] });
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    /// Cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Path graph on `n` vertices (n >= 1).
    pub fn path_graph(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Complete bipartite graph K_{a,b}; the `a` side gets ids `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("bipartite edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.adj.len()
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Average degree 2m/n as an exact rational; 0 for the empty graph.
    pub fn average_degree(&self) -> Rational {
        if self.adj.is_empty() {
            return Rational::from_integer(0);
        }
        Rational::new(2 * self.edge_count as i128, self.adj.len() as i128)
    }

    pub fn average_degree_f64(&self) -> f64 {
        if self.adj.is_empty() {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.adj.len() as f64
        }
    }

    fn check_set(&self, xs: &VertexSet) -> Result<(), GraphError> {
        let n = self.vertex_count();
        match xs.iter().next_back() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// External neighbourhood N(X): vertices outside X with a neighbour in X.
    pub fn external_neighborhood(&self, xs: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(xs)?;
        let mut out = VertexSet::new();
        for &v in xs {
            for &u in &self.adj[v] {
                if !xs.contains(&u) {
                    out.insert(u);
                }
            }
        }
        Ok(out)
    }

    /// The i-fold iterate N(N(...N(X)...)). Note this follows the literal
    /// recursion, which is not the distance-i sphere: the iterate may step
    /// back into earlier layers.
    pub fn iterated_neighborhood(&self, xs: &VertexSet, i: usize) -> Result<VertexSet, GraphError> {
        assert!(i >= 1, "iterated neighbourhood needs i >= 1");
        self.check_set(xs)?;
        let mut cur = self.external_neighborhood(xs)?;
        for _ in 1..i {
            cur = self.external_neighborhood(&cur)?;
        }
        Ok(cur)
    }

    /// Ball of radius r around X, including X itself (the i = 0 term).
    /// Equals the set of vertices at distance <= r from X.
    pub fn ball(&self, xs: &VertexSet, r: usize) -> Result<VertexSet, GraphError> {
        self.check_set(xs)?;
        Ok(self.ball_avoiding(xs, r, &VertexSet::new()))
    }

    /// Ball of radius r around X in the graph minus `blocked`. Vertices of X
    /// that are themselves blocked are not expanded from (and not included).
    pub fn ball_avoiding(&self, xs: &VertexSet, r: usize, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new();
        let mut frontier: Vec<usize> = xs.iter().copied().filter(|v| !blocked.contains(v)).collect();
        seen.extend(frontier.iter().copied());
        for _ in 0..r {
            let mut next = Vec::new();
            for &v in &frontier {
                for &u in &self.adj[v] {
                    if !blocked.contains(&u) && seen.insert(u) {
                        next.push(u);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        seen
    }

    /// BFS distances from a source set, not entering `blocked`. Blocked
    /// sources are ignored.
    pub fn bfs_distances(&self, sources: &VertexSet, blocked: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if !blocked.contains(&s) {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for &u in &self.adj[v] {
                if dist[u].is_none() && !blocked.contains(&u) {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Graph distance between two vertices, None if disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let mut src = VertexSet::new();
        src.insert(u);
        self.bfs_distances(&src, &VertexSet::new())[v]
    }

    /// True iff `p` is a simple path whose consecutive vertices are adjacent.
    /// A single vertex counts as a (trivial) path; an empty sequence does not.
    pub fn is_simple_path(&self, p: &[usize]) -> bool {
        if p.is_empty() || p.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        let distinct: VertexSet = p.iter().copied().collect();
        if distinct.len() != p.len() {
            return false;
        }
        p.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Attempts a proper 2-colouring; returns the colour classes or None if
    /// some component is odd. Classes are chosen so each component's lowest
    /// id lands in the first class.
    pub fn two_coloring(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("queued vertices are coloured");
                for &u in &self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!cv);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        for (v, c) in color.iter().enumerate() {
            if c == &Some(false) {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Spanning bipartite subgraph H with d(H) >= d(G)/2, together with the
    /// bipartition. Bipartite inputs are returned whole; otherwise a
    /// local-search max cut is run until every vertex has at least half its
    /// degree crossing the cut, which forces the degree bound.
    pub fn bipartite_half(&self) -> (Graph, (VertexSet, VertexSet)) {
        if let Some((a, b)) = self.two_coloring() {
            return (self.clone(), (a, b));
        }
        let n = self.vertex_count();
        // Seed with parity of id, then flip any vertex with a strict majority
        // of same-side neighbours. Each flip grows the cut, so this stops.
        let mut side: Vec<bool> = (0..n).map(|v| v % 2 == 1).collect();
        loop {
            let mut changed = false;
            for v in 0..n {
                let same = self.adj[v].iter().filter(|&&u| side[u] == side[v]).count();
                if 2 * same > self.degree(v) {
                    side[v] = !side[v];
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let cut_edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| side[u] != side[v])
            .collect();
        let h = Graph::from_edges(n, &cut_edges).expect("cut edges are a valid subgraph");
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        for (v, &s) in side.iter().enumerate() {
            if s {
                b.insert(v);
            } else {
                a.insert(v);
            }
        }
        (h, (a, b))
    }

    /// Induced subgraph on V minus W, with the id translation table.
    pub fn delete_vertices(&self, w: &VertexSet) -> Result<Subgraph, GraphError> {
        self.check_set(w)?;
        let keep: VertexSet = self.vertices().filter(|v| !w.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `keep`, with the id translation table. Ids are
    /// remapped to 0..|keep| preserving order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Subgraph, GraphError> {
        self.check_set(keep)?;
        let to_parent: Vec<usize> = keep.iter().copied().collect();
        let mut from_parent = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in to_parent.iter().enumerate() {
            from_parent[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in to_parent.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if old_u < old_v && keep.contains(&old_v) {
                    edges.push((new_u, from_parent[old_v]));
                }
            }
        }
        let graph = Graph::from_edges(to_parent.len(), &edges)
            .expect("induced edges are valid by construction");
        Ok(Subgraph { graph, to_parent })
    }
}

/// A graph cut out of a parent graph, with `to_parent[new_id] = parent_id`.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl Subgraph {
    /// Wraps a graph as its own (identity) subgraph.
    pub fn identity(graph: Graph) -> Self {
        let to_parent = (0..graph.vertex_count()).collect();
        Subgraph { graph, to_parent }
    }

    pub fn map_vertex(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    pub fn map_path(&self, p: &[usize]) -> Path {
        p.iter().map(|&v| self.to_parent[v]).collect()
    }

    pub fn map_set(&self, xs: &VertexSet) -> VertexSet {
        xs.iter().map(|&v| self.to_parent[v]).collect()
    }

    /// Composes translation tables: `self` cut from a graph that was itself
    /// cut out by `outer`.
    pub fn compose(outer: &Subgraph, inner: Subgraph) -> Subgraph {
        let to_parent = inner
            .to_parent
            .iter()
            .map(|&mid| outer.to_parent[mid])
            .collect();
        Subgraph {
            graph: inner.graph,
            to_parent,
        }
    }
}
