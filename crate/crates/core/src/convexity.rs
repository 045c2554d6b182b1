//! Geodesic convexity: intervals, closures, hulls, and the vertex conditions
//! used when reasoning about geodetic sets of products.
//!
//! The interval `I[u, v]` is computed by the distance-sum criterion
//! `d(u,w) + d(w,v) = d(u,v)`, never by path enumeration; on unweighted
//! graphs the two agree, and the criterion is O(n) per pair. All `n^2`
//! intervals are materialized eagerly as packed bit rows because the solvers
//! evaluate closures millions of times against the same table.

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvexityError {
    #[error("closure of the empty set is undefined")]
    EmptySet,
    #[error("needs at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
}

/// Precomputed shortest-path intervals of one graph, one packed bit row per
/// ordered pair.
pub struct IntervalTable {
    graph: Graph,
    words: usize,
    rows: Vec<u64>,
}

impl IntervalTable {
    pub fn new(graph: &Graph) -> IntervalTable {
        let n = graph.order();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * n * words];
        for u in 0..n {
            let du = graph.distances().row(u);
            for v in 0..n {
                let dv = graph.distances().row(v);
                let duv = du[v];
                let row = &mut rows[(u * n + v) * words..(u * n + v + 1) * words];
                for w in 0..n {
                    if du[w] + dv[w] == duv {
                        row[w / 64] |= 1 << (w % 64);
                    }
                }
            }
        }
        IntervalTable { graph: graph.clone(), words, rows }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    pub(crate) fn row(&self, u: usize, v: usize) -> &[u64] {
        let n = self.graph.order();
        &self.rows[(u * n + v) * self.words..(u * n + v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<(), ConvexityError> {
        if v < self.graph.order() {
            Ok(())
        } else {
            Err(ConvexityError::OutOfRange { vertex: v, order: self.graph.order() })
        }
    }

    /// `I[u, v]`: vertices on some shortest `u`-`v` path, endpoints included.
    pub fn interval(&self, u: usize, v: usize) -> Result<VertexSet, ConvexityError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.graph.order(), self.row(u, v).to_vec()))
    }

    /// Union of `I[u, v]` over all pairs of `s`, the geodetic closure.
    pub fn closure(&self, s: &VertexSet) -> Result<VertexSet, ConvexityError> {
        if s.is_empty() {
            return Err(ConvexityError::EmptySet);
        }
        let mut acc = vec![0u64; self.words];
        self.closure_into(&s.to_vec(), &mut acc);
        Ok(VertexSet::from_words(self.graph.order(), acc))
    }

    /// Closure of `members` (ascending vertex list) accumulated into `acc`.
    pub(crate) fn closure_into(&self, members: &[usize], acc: &mut [u64]) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i..] {
                for (a, b) in acc.iter_mut().zip(self.row(u, v)) {
                    *a |= b;
                }
            }
        }
    }

    /// Iterates the closure to its fixpoint, recording every strictly growing
    /// stage. The last stage is the convex hull of `s`.
    pub fn convex_hull(&self, s: &VertexSet) -> Result<HullTrace, ConvexityError> {
        if s.is_empty() {
            return Err(ConvexityError::EmptySet);
        }
        let mut stages = vec![s.clone()];
        loop {
            let next = self.closure(stages.last().unwrap())?;
            if &next == stages.last().unwrap() {
                return Ok(HullTrace { stages });
            }
            stages.push(next);
        }
    }

    pub fn is_geodetic(&self, s: &VertexSet) -> Result<bool, ConvexityError> {
        Ok(self.closure(s)?.is_full())
    }

    pub fn is_convex(&self, s: &VertexSet) -> Result<bool, ConvexityError> {
        Ok(&self.closure(s)? == s)
    }

    pub fn is_hull(&self, s: &VertexSet) -> Result<bool, ConvexityError> {
        Ok(self.convex_hull(s)?.hull().is_full())
    }

    /// Does every `x` in `s` lie in the interval of two other members?
    ///
    /// False whenever `|s| <= 2`: with `x` removed at most one vertex is left
    /// and no interval between two further members exists.
    pub fn condition_a(&self, s: &VertexSet) -> Result<bool, ConvexityError> {
        let members = s.to_vec();
        for &v in &members {
            self.check_vertex(v)?;
        }
        if members.len() <= 2 {
            return Ok(false);
        }
        'outer: for &x in &members {
            for (i, &y) in members.iter().enumerate() {
                if y == x {
                    continue;
                }
                for &z in &members[i + 1..] {
                    if z == x {
                        continue;
                    }
                    if self.row(y, z)[x / 64] >> (x % 64) & 1 == 1 {
                        continue 'outer;
                    }
                }
            }
            return Ok(false);
        }
        Ok(true)
    }

    /// Do at least two members `x` of `s` satisfy `x` not in `I[s - x]`?
    pub fn condition_b(&self, s: &VertexSet) -> Result<bool, ConvexityError> {
        let members = s.to_vec();
        for &v in &members {
            self.check_vertex(v)?;
        }
        if members.len() < 2 {
            return Err(ConvexityError::TooSmall { need: 2, got: members.len() });
        }
        let mut witnesses = 0;
        for &x in &members {
            let rest: Vec<usize> = members.iter().copied().filter(|&y| y != x).collect();
            let mut acc = vec![0u64; self.words];
            self.closure_into(&rest, &mut acc);
            if acc[x / 64] >> (x % 64) & 1 == 0 {
                witnesses += 1;
                if witnesses == 2 {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Stages `I^0[S] ⊂ I^1[S] ⊂ … ⊂ I^r[S]` of a hull computation; every stage
/// is strictly larger than the previous and the last one is the hull.
#[derive(Debug, Clone)]
pub struct HullTrace {
    stages: Vec<VertexSet>,
}

impl HullTrace {
    pub fn stages(&self) -> &[VertexSet] {
        &self.stages
    }

    pub fn hull(&self) -> &VertexSet {
        self.stages.last().unwrap()
    }

    /// Closure applications needed to reach the fixpoint.
    pub fn iterations(&self) -> usize {
        self.stages.len() - 1
    }
}

/// Vertices whose neighborhood induces a clique. These lie on no shortest
/// path between two other vertices, so every geodetic and every hull set
/// must contain all of them.
pub fn simplicial_vertices(graph: &Graph) -> VertexSet {
    let n = graph.order();
    let mut out = VertexSet::empty(n);
    'vertex: for v in 0..n {
        let nv = graph.neighbors(v);
        for u in nv.iter() {
            let mut rest = nv.clone();
            rest.remove(u);
            if !rest.is_subset_of(graph.neighbors(u)) {
                continue 'vertex;
            }
        }
        out.insert(v);
    }
    out
}

/// True when the simplicial vertices are nonempty and already geodetic.
pub fn is_extreme_geodesic(table: &IntervalTable) -> bool {
    let ext = simplicial_vertices(table.graph());
    if ext.is_empty() {
        return false;
    }
    table.is_geodetic(&ext).expect("nonempty set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};
    use crate::product::strong_product;

    fn table(spec: FamilySpec) -> IntervalTable {
        IntervalTable::new(&make_family(&spec).unwrap())
    }

    fn set(universe: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(universe, members.iter().copied())
    }

    #[test]
    fn intervals_on_paths_and_cycles() {
        let p4 = table(FamilySpec::Path(4));
        assert_eq!(p4.interval(0, 3).unwrap().to_vec(), vec![0, 1, 2, 3]);

        let c4 = table(FamilySpec::Cycle(4));
        assert!(c4.interval(0, 2).unwrap().is_full());

        let c5 = table(FamilySpec::Cycle(5));
        assert_eq!(c5.interval(0, 2).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(c5.interval(1, 1).unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn closures() {
        let c6 = table(FamilySpec::Cycle(6));
        assert!(c6.closure(&set(6, &[0, 3])).unwrap().is_full());

        let c5 = table(FamilySpec::Cycle(5));
        assert_eq!(c5.closure(&set(5, &[0, 2])).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(c5.closure(&VertexSet::full(5)).unwrap().is_full());
        assert_eq!(c5.closure(&VertexSet::empty(5)), Err(ConvexityError::EmptySet));
    }

    #[test]
    fn hull_traces() {
        let c5 = table(FamilySpec::Cycle(5));
        let trace = c5.convex_hull(&set(5, &[0, 2])).unwrap();
        assert_eq!(trace.hull().to_vec(), vec![0, 1, 2]);
        assert_eq!(trace.iterations(), 1);
        assert!(!c5.is_hull(&set(5, &[0, 2])).unwrap());

        // already convex: zero iterations
        let conv = c5.convex_hull(&set(5, &[0, 1])).unwrap();
        assert_eq!(conv.iterations(), 0);
    }

    #[test]
    fn hull_spreads_across_products() {
        let c5 = make_family(&FamilySpec::Cycle(5)).unwrap();
        let c7 = make_family(&FamilySpec::Cycle(7)).unwrap();
        let p = strong_product(&c5, &c7).unwrap();
        let t = IntervalTable::new(p.graph());
        let s = set(35, &[p.encode(0, 0), p.encode(1, 3)]);
        let trace = t.convex_hull(&s).unwrap();
        assert!(trace.hull().is_full());

        let p2 = make_family(&FamilySpec::Path(2)).unwrap();
        let c4 = make_family(&FamilySpec::Cycle(4)).unwrap();
        let q = strong_product(&p2, &c4).unwrap();
        let tq = IntervalTable::new(q.graph());
        assert!(tq.is_hull(&set(8, &[q.encode(0, 0), q.encode(0, 2)])).unwrap());
    }

    #[test]
    fn geodetic_and_convex_predicates() {
        let c7 = table(FamilySpec::Cycle(7));
        let s = set(7, &[0, 1, 3]);
        assert_eq!(c7.closure(&s).unwrap().to_vec(), vec![0, 1, 2, 3]);
        assert!(!c7.is_geodetic(&s).unwrap());
        assert!(c7.is_convex(&set(7, &[1, 2, 3])).unwrap());
        assert!(!c7.is_convex(&set(7, &[1, 3])).unwrap());
        assert!(c7.is_geodetic(&VertexSet::full(7)).unwrap());
    }

    #[test]
    fn simplicial_sets() {
        let p4 = make_family(&FamilySpec::Path(4)).unwrap();
        assert_eq!(simplicial_vertices(&p4).to_vec(), vec![0, 3]);
        for n in 4..8 {
            let cn = make_family(&FamilySpec::Cycle(n)).unwrap();
            assert!(simplicial_vertices(&cn).is_empty());
        }
        let k1 = make_family(&FamilySpec::Complete(1)).unwrap();
        assert!(simplicial_vertices(&k1).is_full());
        let k5 = make_family(&FamilySpec::Complete(5)).unwrap();
        assert!(simplicial_vertices(&k5).is_full());
    }

    #[test]
    fn simplicial_factorizes_over_products() {
        let p3 = make_family(&FamilySpec::Path(3)).unwrap();
        let p4 = make_family(&FamilySpec::Path(4)).unwrap();
        let p = strong_product(&p3, &p4).unwrap();
        let got = simplicial_vertices(p.graph());
        let want = p.pair_set(&simplicial_vertices(&p3), &simplicial_vertices(&p4));
        assert_eq!(got, want);
    }

    #[test]
    fn extreme_geodesic_recognition() {
        let tree = table(FamilySpec::Tree(vec![(0, 1), (0, 2), (0, 3), (3, 4)]));
        assert!(is_extreme_geodesic(&tree));
        assert!(!is_extreme_geodesic(&table(FamilySpec::Cycle(5))));

        let p3 = make_family(&FamilySpec::Path(3)).unwrap();
        let k2 = make_family(&FamilySpec::Complete(2)).unwrap();
        let p = strong_product(&p3, &k2).unwrap();
        assert!(is_extreme_geodesic(&IntervalTable::new(p.graph())));
    }

    #[test]
    fn condition_a_cases() {
        let c8 = table(FamilySpec::Cycle(8));
        assert!(c8.condition_a(&set(8, &[0, 1, 4, 5])).unwrap());
        assert!(!c8.condition_a(&set(8, &[0, 4])).unwrap());
        assert!(!c8.condition_a(&set(8, &[3])).unwrap());
        assert!(!c8.condition_a(&VertexSet::empty(8)).unwrap());

        let c9 = table(FamilySpec::Cycle(9));
        assert!(c9.condition_a(&set(9, &[0, 1, 4, 5, 6])).unwrap());
    }

    #[test]
    fn condition_b_cases() {
        let c8 = table(FamilySpec::Cycle(8));
        // any pair works: each endpoint misses the closure of the other alone
        assert!(c8.condition_b(&set(8, &[2, 6])).unwrap());
        // antipodal-ish spread set: every member is already covered by the rest
        assert!(!c8.condition_b(&set(8, &[0, 1, 4, 5])).unwrap());
        assert_eq!(
            c8.condition_b(&set(8, &[3])),
            Err(ConvexityError::TooSmall { need: 2, got: 1 })
        );

        let c5 = table(FamilySpec::Cycle(5));
        for s in [vec![0, 1], vec![0, 2, 3], vec![0, 1, 2, 3]] {
            assert!(c5.condition_b(&set(5, &s)).unwrap());
        }
    }

    #[test]
    fn out_of_range_vertices_are_rejected() {
        let c5 = table(FamilySpec::Cycle(5));
        assert_eq!(
            c5.interval(0, 9),
            Err(ConvexityError::OutOfRange { vertex: 9, order: 5 })
        );
    }
}
