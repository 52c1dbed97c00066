//! Simple connected unit-edge graphs and exact vertex distances.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

/// Validation failures when building or parsing a graph. Each variant names
/// the offending element.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: u32, n: usize },
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(u32),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("bad edge list: {0}")]
    Parse(String),
}

/// A simple connected graph with unit-length edges, vertices labeled 0..n-1.
/// Immutable after construction; edges are stored sorted with u < v.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds and validates a graph from an edge list. Edges may come in any
    /// order and orientation.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a as usize >= n {
                return Err(GraphError::OutOfRange { vertex: a, n });
            }
            if b as usize >= n {
                return Err(GraphError::OutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges: norm, adj };
        if let Some(unreached) = g.first_unreachable() {
            return Err(GraphError::Disconnected(unreached));
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<u32> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s).map(|v| v as u32)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair with u < v.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// Index of edge (u, v) in the sorted edge list.
    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// All-pairs shortest-path distances in whole edge units (BFS per source).
    pub fn vertex_distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src as u32);
            while let Some(u) = queue.pop_front() {
                let du = row[u as usize];
                for &v in &self.adj[u as usize] {
                    if row[v as usize] == u32::MAX {
                        row[v as usize] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    /// Parses the edge-list format: first line "n m", then m lines "u v"
    /// (0-indexed decimal). Input order is free; validation as in `new`.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("missing header line".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header {header:?}")))?;
        if it.next().is_some() {
            return Err(GraphError::Parse(format!("trailing tokens in header {header:?}")));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line {line:?}")))?;
            let v: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(GraphError::Parse(format!("trailing tokens in edge line {line:?}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse(format!(
                "header says {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }

    /// Edge-list text, edges sorted lexicographically with u < v.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edges.len(),
            self.edges
        )
    }
}

/// Exact vertex-to-vertex distances in whole edge units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// Distance between vertices u and v, in whole edges.
    pub fn get(&self, u: u32, v: u32) -> u32 {
        self.dist[u as usize * self.n + v as usize]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest entry: diameter of the vertex set, in whole edges.
    pub fn max(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}
