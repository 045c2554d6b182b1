//! Boundary-type vertex sets: boundary, contour, eccentricity, periphery,
//! and how each factorizes across a strong product.

use thiserror::Error;

use crate::graph::Graph;
use crate::product::ProductGraph;
use crate::vertex_set::VertexSet;

/// Vertices `v` maximal with respect to some `u`: no neighbor of `v` is
/// further from `u` than `v` itself.
pub fn boundary_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut out = VertexSet::empty(n);
    'vertex: for v in 0..n {
        for u in 0..n {
            let du = g.distances().row(u);
            if g.neighbors(v).iter().all(|w| du[w] <= du[v]) {
                out.insert(v);
                continue 'vertex;
            }
        }
    }
    out
}

/// Vertices that are an eccentric vertex of someone: `d(u, v) = ecc(u)` for
/// some `u`.
pub fn eccentric_set(g: &Graph) -> VertexSet {
    eccentric_set_r(g, 0)
}

/// Eccentric vertices realized at eccentricity at least `r`.
pub fn eccentric_set_r(g: &Graph, r: u16) -> VertexSet {
    let n = g.order();
    let mut out = VertexSet::empty(n);
    for u in 0..n {
        let ecc = g.distances().eccentricity(u);
        if ecc < r {
            continue;
        }
        let du = g.distances().row(u);
        for v in 0..n {
            if du[v] == ecc {
                out.insert(v);
            }
        }
    }
    out
}

/// Vertices whose eccentricity is not beaten by any neighbor.
pub fn contour_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut out = VertexSet::empty(n);
    for v in 0..n {
        let ev = g.distances().eccentricity(v);
        if g.neighbors(v).iter().all(|w| g.distances().eccentricity(w) <= ev) {
            out.insert(v);
        }
    }
    out
}

/// Vertices of maximum eccentricity.
pub fn periphery_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let diam = g.diameter();
    let mut out = VertexSet::empty(n);
    for v in 0..n {
        if g.distances().eccentricity(v) == diam {
            out.insert(v);
        }
    }
    out
}

/// The four boundary-type sets of one graph.
#[derive(Debug, Clone)]
pub struct BoundaryReport {
    pub boundary: VertexSet,
    pub eccentric: VertexSet,
    pub contour: VertexSet,
    pub periphery: VertexSet,
}

pub fn boundary_report(g: &Graph) -> BoundaryReport {
    BoundaryReport {
        boundary: boundary_set(g),
        eccentric: eccentric_set(g),
        contour: contour_set(g),
        periphery: periphery_set(g),
    }
}

/// One product identity: the set computed directly on the product next to
/// the set predicted from the factors.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub computed: VertexSet,
    pub predicted: VertexSet,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.computed == self.predicted
    }
}

/// Outcome of checking all four identities under one factor orientation.
#[derive(Debug, Clone)]
pub struct ProductBoundaryReport {
    /// True when the roles were swapped so the first factor has the smaller
    /// diameter and radius.
    pub swapped: bool,
    pub items: Vec<IdentityCheck>,
}

impl ProductBoundaryReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(IdentityCheck::holds)
    }
}

#[derive(Debug, Error)]
pub enum BoundaryError {
    /// Neither factor ordering puts both the diameter and the radius of the
    /// first factor below the second; the decomposition is only claimed under
    /// that orientation, so both best-effort evaluations are reported.
    #[error("no factor orientation orders both diameter and radius; see the attached reports")]
    Orientation { forward: ProductBoundaryReport, backward: ProductBoundaryReport },
}

/// Checks the four factorization identities on a product, orienting factors
/// so the first has the smaller diameter and radius:
///
/// 1. boundary: `∂(G⊠H) = (∂G × V_H) ∪ (V_G × ∂H)`
/// 2. periphery: `Per(G⊠H) = V_G × Per(H)` when diameters differ, the
///    two-sided union when they tie
/// 3. eccentricity: `Ecc(G⊠H) = (Ecc_{r_H}(G) × V_H) ∪ (V_G × Ecc(H))`
/// 4. contour: `Ct(G⊠H)` = pairs where one coordinate is a contour vertex
///    strictly dominating the other's eccentricity, plus `Ct(G) × Ct(H)`
pub fn verify_product_boundary(
    p: &ProductGraph,
) -> Result<ProductBoundaryReport, BoundaryError> {
    let (dg, rg) = (p.left().diameter(), p.left().radius());
    let (dh, rh) = (p.right().diameter(), p.right().radius());
    let forward_ok = dg <= dh && rg <= rh;
    let backward_ok = dh <= dg && rh <= rg;
    if forward_ok {
        Ok(evaluate_identities(p, false))
    } else if backward_ok {
        Ok(evaluate_identities(p, true))
    } else {
        Err(BoundaryError::Orientation {
            forward: evaluate_identities(p, false),
            backward: evaluate_identities(p, true),
        })
    }
}

/// Evaluates the four identities with the factor roles fixed by `swapped`;
/// `swapped` means the right factor plays the small-diameter role.
fn evaluate_identities(p: &ProductGraph, swapped: bool) -> ProductBoundaryReport {
    let prod = p.graph();
    let left = p.left();
    let right = p.right();
    let full_left = VertexSet::full(left.order());
    let full_right = VertexSet::full(right.order());

    // pair_set argument order is always (left part, right part); the
    // orientation only decides which factor supplies which formula role.
    let cross = |first: &VertexSet, second: &VertexSet| -> VertexSet {
        if swapped {
            p.pair_set(second, first)
        } else {
            p.pair_set(first, second)
        }
    };
    let (first, second): (&Graph, &Graph) =
        if swapped { (right, left) } else { (left, right) };
    let (full_first, full_second) =
        if swapped { (&full_right, &full_left) } else { (&full_left, &full_right) };

    let mut items = Vec::with_capacity(4);

    let mut predicted = cross(&boundary_set(first), full_second);
    predicted.union_with(&cross(full_first, &boundary_set(second)));
    items.push(IdentityCheck {
        name: "boundary",
        computed: boundary_set(prod),
        predicted,
    });

    let predicted = if first.diameter() < second.diameter() {
        cross(full_first, &periphery_set(second))
    } else {
        let mut s = cross(&periphery_set(first), full_second);
        s.union_with(&cross(full_first, &periphery_set(second)));
        s
    };
    items.push(IdentityCheck {
        name: "periphery",
        computed: periphery_set(prod),
        predicted,
    });

    let mut predicted = cross(&eccentric_set_r(first, second.radius()), full_second);
    predicted.union_with(&cross(full_first, &eccentric_set(second)));
    items.push(IdentityCheck {
        name: "eccentricity",
        computed: eccentric_set(prod),
        predicted,
    });

    let ct_left = contour_set(left);
    let ct_right = contour_set(right);
    let mut predicted = p.pair_set(&ct_left, &ct_right);
    for g in 0..left.order() {
        let eg = left.distances().eccentricity(g);
        for h in 0..right.order() {
            let eh = right.distances().eccentricity(h);
            if (ct_left.contains(g) && eh < eg) || (ct_right.contains(h) && eg < eh) {
                predicted.insert(p.encode(g, h));
            }
        }
    }
    items.push(IdentityCheck {
        name: "contour",
        computed: contour_set(prod),
        predicted,
    });

    ProductBoundaryReport { swapped, items }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};
    use crate::product::strong_product;

    fn fam(spec: FamilySpec) -> Graph {
        make_family(&spec).unwrap()
    }

    #[test]
    fn boundary_of_paths_cycles_stars() {
        let p5 = fam(FamilySpec::Path(5));
        assert_eq!(boundary_set(&p5).to_vec(), vec![0, 4]);
        let c6 = fam(FamilySpec::Cycle(6));
        assert!(boundary_set(&c6).is_full());
        let star = fam(FamilySpec::Star(4));
        assert_eq!(boundary_set(&star).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn eccentric_sets() {
        let p4 = fam(FamilySpec::Path(4));
        assert_eq!(eccentric_set(&p4).to_vec(), vec![0, 3]);
        assert_eq!(eccentric_set_r(&p4, 1).to_vec(), vec![0, 3]);
        assert_eq!(eccentric_set_r(&p4, 0), eccentric_set(&p4));
        assert_eq!(eccentric_set_r(&p4, 4).len(), 0);
    }

    #[test]
    fn contour_and_periphery() {
        let star = fam(FamilySpec::Star(4));
        assert_eq!(contour_set(&star).to_vec(), vec![1, 2, 3]);
        assert_eq!(periphery_set(&star).to_vec(), vec![1, 2, 3]);
        let p5 = fam(FamilySpec::Path(5));
        assert_eq!(periphery_set(&p5).to_vec(), vec![0, 4]);
        let c7 = fam(FamilySpec::Cycle(7));
        assert!(periphery_set(&c7).is_full());
    }

    #[test]
    fn product_identities_on_grids() {
        let p3 = fam(FamilySpec::Path(3));
        let p = strong_product(&p3, &p3).unwrap();
        let report = verify_product_boundary(&p).unwrap();
        assert!(report.all_hold());
        let bd = &report.items[0].computed;
        assert_eq!(bd.len(), 8);
        assert!(!bd.contains(p.encode(1, 1)));
    }

    #[test]
    fn product_identities_on_mixed_factors() {
        let k2 = fam(FamilySpec::Complete(2));
        let c4 = fam(FamilySpec::Cycle(4));
        let p = strong_product(&k2, &c4).unwrap();
        let report = verify_product_boundary(&p).unwrap();
        assert!(report.all_hold());
        let per = &report.items[1].computed;
        assert!(per.is_full());

        let p3 = fam(FamilySpec::Path(3));
        let c5 = fam(FamilySpec::Cycle(5));
        let q = strong_product(&p3, &c5).unwrap();
        assert!(verify_product_boundary(&q).unwrap().all_hold());
    }

    #[test]
    fn orientation_needs_a_consistent_ordering() {
        // diameter orders one way, radius the other: C9 plus a pendant has
        // (d, r) = (5, 4), P7 has (6, 3)
        let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.push((0, 9));
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!((g.diameter(), g.radius()), (5, 4));
        let p7 = fam(FamilySpec::Path(7));
        assert_eq!((p7.diameter(), p7.radius()), (6, 3));
        let p = strong_product(&g, &p7).unwrap();
        match verify_product_boundary(&p) {
            Err(BoundaryError::Orientation { forward, backward }) => {
                assert!(!forward.swapped);
                assert!(backward.swapped);
                assert_eq!(forward.items.len(), 4);
            }
            Ok(_) => panic!("orientation should be rejected"),
        }
    }
}
