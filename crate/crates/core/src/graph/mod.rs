//! Undirected simple graphs: the coupling topology of a spin network.
//!
//! Vertices are `0..n`. Edges are stored as ordered pairs `(u, v)` with
//! `u < v`, so set semantics rule out duplicates and self-loops cannot be
//! represented once construction has validated its input.

mod graph6;
mod products;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use graph6::{encode_graph6, parse_graph6, parse_graph6_stream};
pub use products::{cartesian_product, complement, conjunction, join, strong_product, JoinResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

/// Result of a breadth-first distance query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    fn flip(self) -> Self {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A two-colouring attempt. When `valid` is false the colours are the
/// partial BFS assignment at the point the odd cycle was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteColoring {
    pub colors: Vec<Color>,
    pub valid: bool,
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Wire form `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1).expect("cycle edge is in range");
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete edges are in range")
    }

    /// The `d`-dimensional hypercube as the iterated Cartesian product of `K2`.
    pub fn hypercube(d: usize) -> Self {
        (0..d).fold(Graph::empty(1), |acc, _| {
            cartesian_product(&acc, &Graph::complete(2))
        })
    }

    /// Inserts `{u, v}`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Neighbour lists, sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            Some(&d) if deg.iter().all(|&x| x == d) => Some(d),
            Some(_) => None,
            None => Some(0),
        }
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(source)?;
        let adj = self.adjacency_lists();
        let mut dist = vec![Distance::Unreachable; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else {
                unreachable!("queued vertices have finite distance")
            };
            for &w in &adj[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Maximum pairwise distance; `Unreachable` if the graph is disconnected.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.distances_from(u).expect("u < n") {
                match d {
                    Distance::Finite(d) => best = best.max(d),
                    Distance::Unreachable => return Distance::Unreachable,
                }
            }
        }
        Distance::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.diameter() != Distance::Unreachable
    }

    /// BFS two-colouring; vertex 0 of every component is `Red`.
    pub fn bipartite_coloring(&self) -> BipartiteColoring {
        let adj = self.adjacency_lists();
        let mut colors: Vec<Option<Color>> = vec![None; self.n];
        let mut valid = true;
        for root in 0..self.n {
            if colors[root].is_some() {
                continue;
            }
            colors[root] = Some(Color::Red);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colors[u].expect("queued vertices are coloured");
                for &w in &adj[u] {
                    match colors[w] {
                        None => {
                            colors[w] = Some(cu.flip());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => valid = false,
                        Some(_) => {}
                    }
                }
            }
        }
        BipartiteColoring {
            colors: colors
                .into_iter()
                .map(|c| c.expect("every vertex reached"))
                .collect(),
            valid,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite_coloring().valid
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("a permutation keeps indices in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_on_path_and_identity() {
        let p3 = Graph::path(3);
        assert_eq!(p3.distance(0, 2).unwrap(), Distance::Finite(2));
        for v in 0..3 {
            assert_eq!(p3.distance(v, v).unwrap(), Distance::Finite(0));
        }
        assert_eq!(
            p3.distance(0, 3),
            Err(GraphError::IndexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn hypercube_antipodal_distance_matches_hamming_weight() {
        let q3 = Graph::hypercube(3);
        assert_eq!(q3.n(), 8);
        // Row-major product indexing makes vertex labels bit strings.
        for u in 0..8usize {
            for v in 0..8usize {
                let hamming = (u ^ v).count_ones() as usize;
                assert_eq!(q3.distance(u, v).unwrap(), Distance::Finite(hamming));
            }
        }
        assert_eq!(q3.distance(0, 7).unwrap(), Distance::Finite(3));
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::complete(2).diameter(), Distance::Finite(1));
        assert_eq!(Graph::cycle(4).diameter(), Distance::Finite(2));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), Distance::Unreachable);
        assert_eq!(Graph::empty(1).diameter(), Distance::Finite(0));
    }

    #[test]
    fn coloring_examples() {
        let p3 = Graph::path(3).bipartite_coloring();
        assert!(p3.valid);
        assert_eq!(p3.colors, vec![Color::Red, Color::Blue, Color::Red]);
        assert!(!Graph::complete(3).is_bipartite());
        let q3 = Graph::hypercube(3).bipartite_coloring();
        assert!(q3.valid);
        for (v, c) in q3.colors.iter().enumerate() {
            let expected = if v.count_ones() % 2 == 0 { Color::Red } else { Color::Blue };
            assert_eq!(*c, expected);
        }
    }

    #[test]
    fn rejects_self_loops_and_bad_indices() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 5)]),
            Err(GraphError::IndexOutOfRange { vertex: 5, .. })
        ));
        let mut g = Graph::empty(3);
        assert!(g.add_edge(2, 0).unwrap());
        assert!(!g.add_edge(0, 2).unwrap());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn json_wire_format() {
        let g: Graph = serde_json::from_str(r#"{"n": 3, "edges": [[0, 1], [2, 1]]}"#).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"n":3,"edges":[[0,1],[1,2]]}"#
        );
        assert!(serde_json::from_str::<Graph>(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
    }
}
