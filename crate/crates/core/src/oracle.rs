//! Brute-force reference implementations, deliberately written along
//! different lines than the production code so the two can check each other.
//! Distances come from exhaustive simple-path enumeration instead of BFS,
//! intervals from collecting the vertices of every shortest path, minimum
//! sets from enumerating all subsets in ascending cardinality, and hulls
//! from intersecting every convex superset. Strictly for small graphs.

use crate::convexity::IntervalTable;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Shortest `u`-`v` distance by depth-first enumeration of simple paths.
pub fn dfs_distance(g: &Graph, u: usize, v: usize) -> u16 {
    fn go(g: &Graph, at: usize, target: usize, visited: &mut Vec<bool>, depth: u16, best: &mut u16) {
        if depth >= *best {
            return;
        }
        if at == target {
            *best = depth;
            return;
        }
        for w in g.neighbors(at).iter() {
            if !visited[w] {
                visited[w] = true;
                go(g, w, target, visited, depth + 1, best);
                visited[w] = false;
            }
        }
    }
    let mut visited = vec![false; g.order()];
    visited[u] = true;
    let mut best = u16::MAX;
    go(g, u, v, &mut visited, 0, &mut best);
    best
}

/// Vertices lying on at least one shortest `u`-`v` path, found by walking
/// every such path.
pub fn interval_by_paths(g: &Graph, u: usize, v: usize) -> VertexSet {
    let d = dfs_distance(g, u, v);
    let mut out = VertexSet::empty(g.order());
    let mut path = vec![u];
    fn go(
        g: &Graph,
        at: usize,
        target: usize,
        left: u16,
        path: &mut Vec<usize>,
        out: &mut VertexSet,
    ) {
        if at == target {
            for &w in path.iter() {
                out.insert(w);
            }
            return;
        }
        for w in g.neighbors(at).iter() {
            if dfs_distance(g, w, target) + 1 == left {
                path.push(w);
                go(g, w, target, left - 1, path, out);
                path.pop();
            }
        }
    }
    go(g, u, v, d, &mut path, &mut out);
    out
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

pub(crate) fn for_each_subset_of_size(n: usize, k: usize, f: &mut impl FnMut(u64) -> bool) -> bool {
    // ascending combinations in lexicographic order of the member lists
    fn go(n: usize, k: usize, start: usize, acc: u64, f: &mut impl FnMut(u64) -> bool) -> bool {
        if k == 0 {
            return f(acc);
        }
        for v in start..=n - k {
            if go(n, k - 1, v + 1, acc | 1 << v, f) {
                return true;
            }
        }
        false
    }
    go(n, k, 0, 0, f)
}

/// Smallest geodetic set by trying every subset in ascending cardinality.
pub fn geodetic_number_naive(t: &IntervalTable) -> (usize, VertexSet) {
    minimum_by_predicate(t, |t, s| t.is_geodetic(s).unwrap())
}

/// Smallest hull set by trying every subset in ascending cardinality.
pub fn hull_number_naive(t: &IntervalTable) -> (usize, VertexSet) {
    minimum_by_predicate(t, |t, s| t.is_hull(s).unwrap())
}

fn minimum_by_predicate(
    t: &IntervalTable,
    valid: impl Fn(&IntervalTable, &VertexSet) -> bool,
) -> (usize, VertexSet) {
    let n = t.order();
    assert!(n <= 60, "oracle enumeration is for small graphs");
    for k in 1..=n {
        let mut found = None;
        for_each_subset_of_size(n, k, &mut |mask| {
            let s = mask_to_set(n, mask);
            if valid(t, &s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return (k, s);
        }
    }
    unreachable!("the full vertex set is always geodetic");
}

/// Convex hull as the intersection of every convex superset.
pub fn convex_hull_naive(t: &IntervalTable, s: &VertexSet) -> VertexSet {
    let n = t.order();
    assert!(n <= 24, "superset enumeration is exponential");
    let base: u64 = s.iter().fold(0, |m, v| m | 1 << v);
    let mut hull = VertexSet::full(n);
    for mask in 0..1u64 << n {
        if mask & base == base {
            let cand = mask_to_set(n, mask);
            if !cand.is_empty() && t.is_convex(&cand).unwrap() {
                hull.intersect_with(&cand);
            }
        }
    }
    hull
}
