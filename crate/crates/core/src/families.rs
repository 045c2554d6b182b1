//! Canonical graph families and their known geodetic / hull numbers.
//!
//! Vertex numbering is fixed so that witness sets are comparable across runs:
//! paths and cycles are numbered along the walk, complete bipartite parts are
//! `{0..p-1}` and `{p..p+q-1}`, stars and wheels put the hub at 0 with the
//! wheel rim forming the cycle `1..n-1`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n` vertices, `n >= 3`.
    Cycle(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Complete bipartite graph with part sizes `2 <= p <= q`.
    CompleteBipartite(usize, usize),
    /// Star on `n` vertices: hub 0 plus `n-1` leaves.
    Star(usize),
    /// Wheel on `n` vertices: hub 0 joined to a rim cycle of length `n-1 >= 4`.
    Wheel(usize),
    /// Tree given by its edge list; vertices are `0..=max`.
    Tree(Vec<(usize, usize)>),
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(p, q) => write!(f, "K{p},{q}"),
            FamilySpec::Star(n) => write!(f, "S{n}"),
            FamilySpec::Wheel(n) => write!(f, "W{n}"),
            FamilySpec::Tree(edges) => {
                write!(f, "T:(")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters for {0}")]
    BadParams(String),
    #[error("no closed form covers {0}")]
    Unsupported(String),
}

fn bad(spec: &FamilySpec) -> FamilyError {
    FamilyError::BadParams(spec.to_string())
}

fn validate(spec: &FamilySpec) -> Result<(), FamilyError> {
    match spec {
        FamilySpec::Path(n) | FamilySpec::Complete(n) => {
            if *n == 0 {
                return Err(bad(spec));
            }
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(bad(spec));
            }
        }
        FamilySpec::CompleteBipartite(p, q) => {
            if *p < 2 || p > q {
                return Err(bad(spec));
            }
        }
        FamilySpec::Star(n) => {
            if *n < 2 {
                return Err(bad(spec));
            }
        }
        FamilySpec::Wheel(n) => {
            if *n < 5 {
                return Err(bad(spec));
            }
        }
        FamilySpec::Tree(edges) => {
            if edges.is_empty() {
                return Err(bad(spec));
            }
            let n = tree_order(edges);
            // a connected graph on n vertices with n-1 distinct edges is a tree
            if edges.len() != n - 1 {
                return Err(bad(spec));
            }
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in edges {
                if u == v || !seen.insert((u.min(v), u.max(v))) {
                    return Err(bad(spec));
                }
            }
            if Graph::from_edges(n, edges).is_err() {
                return Err(bad(spec));
            }
        }
    }
    Ok(())
}

fn tree_order(edges: &[(usize, usize)]) -> usize {
    edges.iter().map(|&(u, v)| u.max(v)).max().map_or(0, |m| m + 1)
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    validate(spec)?;
    let build = |n: usize, edges: Vec<(usize, usize)>| {
        Graph::from_edges(n, &edges).map_err(|_| bad(spec))
    };
    match spec {
        FamilySpec::Path(n) => build(*n, (1..*n).map(|i| (i - 1, i)).collect()),
        FamilySpec::Cycle(n) => build(*n, (0..*n).map(|i| (i, (i + 1) % n)).collect()),
        FamilySpec::Complete(n) => {
            build(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))).collect())
        }
        FamilySpec::CompleteBipartite(p, q) => {
            build(p + q, (0..*p).flat_map(|i| (0..*q).map(move |j| (i, p + j))).collect())
        }
        FamilySpec::Star(n) => build(*n, (1..*n).map(|i| (0, i)).collect()),
        FamilySpec::Wheel(n) => {
            let rim = *n - 1;
            let mut edges: Vec<(usize, usize)> = (1..*n).map(|i| (0, i)).collect();
            edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
            build(*n, edges)
        }
        FamilySpec::Tree(edges) => build(tree_order(edges), edges.clone()),
    }
}

/// Known exact `(g, h)` for the family, from the closed forms:
/// paths 2, even cycles 2, odd cycles 3, trees their leaf count, complete
/// graphs n, complete bipartite `(min{4,p}, 2)`, stars `n-1`, wheels
/// `ceil((n-1)/2)`.
///
/// `Path(1)` and `Star(2)` fall outside those forms (they are `K_1` and `K_2`,
/// where the path and star formulas are wrong) and report `Unsupported`.
pub fn reference_g_h(spec: &FamilySpec) -> Result<(usize, usize), FamilyError> {
    validate(spec)?;
    let unsupported = || Err(FamilyError::Unsupported(spec.to_string()));
    match spec {
        FamilySpec::Path(1) => unsupported(),
        FamilySpec::Path(_) => Ok((2, 2)),
        FamilySpec::Cycle(n) => {
            if n % 2 == 0 {
                Ok((2, 2))
            } else {
                Ok((3, 3))
            }
        }
        FamilySpec::Complete(n) => Ok((*n, *n)),
        FamilySpec::CompleteBipartite(p, _) => Ok(((*p).min(4), 2)),
        FamilySpec::Star(2) => unsupported(),
        FamilySpec::Star(n) => Ok((n - 1, n - 1)),
        FamilySpec::Wheel(n) => {
            let v = (n - 1).div_ceil(2);
            Ok((v, v))
        }
        FamilySpec::Tree(edges) => {
            let n = tree_order(edges);
            let mut degree = vec![0usize; n];
            for &(u, v) in edges {
                degree[u] += 1;
                degree[v] += 1;
            }
            let leaves = degree.iter().filter(|&&d| d == 1).count();
            Ok((leaves, leaves))
        }
    }
}
