//! Dense-indexed simple connected graphs with distances cached at
//! construction.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    Disconnected,
}

/// Errors from the plain-text edge list format.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// All-pairs distances of a connected graph, in hop counts.
#[derive(Clone)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u16>,
    ecc: Vec<u16>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.dist[u * self.order + v]
    }

    /// Distance row from `u` to every vertex.
    pub fn row(&self, u: usize) -> &[u16] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn eccentricity(&self, v: usize) -> u16 {
        self.ecc[v]
    }

    pub fn diameter(&self) -> u16 {
        self.ecc.iter().copied().max().unwrap_or(0)
    }

    pub fn radius(&self) -> u16 {
        self.ecc.iter().copied().min().unwrap_or(0)
    }
}

/// Immutable simple connected graph on vertices `0..order`.
///
/// Construction validates the edge list (range, no self-loops), deduplicates
/// parallel mentions, and runs one BFS per vertex; a vertex unreachable from
/// vertex 0 rejects the graph as disconnected. `K_1` is accepted.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    size: usize,
    adj: Vec<VertexSet>,
    dist: DistanceMatrix,
}

impl Graph {
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if order == 0 {
            return Err(GraphError::Disconnected);
        }
        let mut adj = vec![VertexSet::empty(order); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::OutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let size = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        let dist = all_pairs_bfs(order, &adj)?;
        Ok(Graph { order, size, adj, dist })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn dist(&self, u: usize, v: usize) -> u16 {
        self.dist.get(u, v)
    }

    pub fn diameter(&self) -> u16 {
        self.dist.diameter()
    }

    pub fn radius(&self) -> u16 {
        self.dist.radius()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Parses the plain-text edge list format: a header line `n m`, then `m`
    /// lines `u v` with 0-based endpoints. Blank lines and anything beyond
    /// the declared `m` edges are rejected.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, EdgeListError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| EdgeListError::Syntax { line: 1, message: "missing header".into() })?;
        let mut it = header.split_whitespace();
        let parse = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, EdgeListError> {
            tok.ok_or_else(|| EdgeListError::Syntax {
                line,
                message: format!("expected {what}"),
            })?
            .parse::<usize>()
            .map_err(|_| EdgeListError::Syntax { line, message: format!("bad {what}") })
        };
        let n = parse(it.next(), 1, "vertex count")?;
        let m = parse(it.next(), 1, "edge count")?;
        if it.next().is_some() {
            return Err(EdgeListError::Syntax { line: 1, message: "trailing tokens".into() });
        }
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (i, line) = lines.next().ok_or_else(|| EdgeListError::Syntax {
                line: edges.len() + 2,
                message: format!("expected {m} edges, found {}", edges.len()),
            })?;
            let lineno = i + 1;
            let mut it = line.split_whitespace();
            let u = parse(it.next(), lineno, "endpoint")?;
            let v = parse(it.next(), lineno, "endpoint")?;
            if it.next().is_some() {
                return Err(EdgeListError::Syntax { line: lineno, message: "trailing tokens".into() });
            }
            edges.push((u, v));
        }
        for (i, line) in lines {
            if !line.trim().is_empty() {
                return Err(EdgeListError::Syntax {
                    line: i + 1,
                    message: "junk after edge list".into(),
                });
            }
        }
        Ok(Graph::from_edges(n, &edges)?)
    }

    /// Serializes to the same format, edges `(u, v)` with `u < v` ascending.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.order, self.size);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order, self.size)
    }
}

fn all_pairs_bfs(order: usize, adj: &[VertexSet]) -> Result<DistanceMatrix, GraphError> {
    const UNSEEN: u16 = u16::MAX;
    let mut dist = vec![UNSEEN; order * order];
    let mut queue = VecDeque::with_capacity(order);
    for s in 0..order {
        let row = &mut dist[s * order..(s + 1) * order];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for v in adj[u].iter() {
                if row[v] == UNSEEN {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&UNSEEN) {
            return Err(GraphError::Disconnected);
        }
    }
    let ecc = (0..order)
        .map(|v| dist[v * order..(v + 1) * order].iter().copied().max().unwrap())
        .collect();
    Ok(DistanceMatrix { order, dist, ecc })
}

/// Convenience constructor mirroring `Graph::from_edges`.
pub fn build_graph(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::from_edges(order, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_graphs_build() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let p4 = path(4);
        assert_eq!(p4.diameter(), 3);
        assert_eq!(p4.dist(0, 3), 3);
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.diameter(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, order: 2 })
        ));
        assert!(matches!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(4, &[(0, 1), (2, 3)]),
            Err(GraphError::Disconnected)
        ));
        assert!(matches!(Graph::from_edges(2, &[]), Err(GraphError::Disconnected)));
    }

    #[test]
    fn distances_on_cycles_and_paths() {
        let c6 = cycle(6);
        assert_eq!(c6.dist(0, 3), 3);
        assert_eq!(c6.diameter(), 3);
        assert_eq!(c6.radius(), 3);
        let p4 = path(4);
        let eccs: Vec<u16> = (0..4).map(|v| p4.distances().eccentricity(v)).collect();
        assert_eq!(eccs, vec![3, 2, 2, 3]);
        assert_eq!(p4.radius(), 2);
    }

    #[test]
    fn neighbors_views() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.neighbors(0).to_vec(), vec![1, 2, 3]);
        let p4 = path(4);
        assert_eq!(p4.neighbors(1).to_vec(), vec![0, 2]);
        let c5 = cycle(5);
        assert_eq!(c5.neighbors(0).to_vec(), vec![1, 4]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5);
        let text = g.to_edge_list_text();
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        let h = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn edge_list_rejects_junk() {
        assert!(matches!(
            Graph::from_edge_list_text("3 2\n0 1\n1 2\n0 2\n"),
            Err(EdgeListError::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list_text("3 2 7\n0 1\n1 2\n"),
            Err(EdgeListError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list_text("3 2\n0 1 5\n1 2\n"),
            Err(EdgeListError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list_text("3 3\n0 1\n1 2\n"),
            Err(EdgeListError::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list_text("2 1\n0 x\n"),
            Err(EdgeListError::Syntax { line: 2, .. })
        ));
    }
}
