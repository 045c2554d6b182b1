//! Exact computations in metric graph theory, centered on strong product
//! graphs: shortest-path intervals, geodetic closures, convex hulls, geodetic
//! and hull numbers, and boundary-type vertex sets (boundary, contour,
//! eccentricity, periphery).
//!
//! Everything here is exact and deterministic. Graphs are small, dense-indexed
//! and immutable; distances are precomputed at construction. The solvers prove
//! optimality by exhausting all smaller cardinalities and always return the
//! lexicographically smallest optimal witness, so results are reproducible
//! across runs and worker counts.

pub mod boundary;
pub mod checks;
pub mod convexity;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod product;
pub mod random;
pub mod solvers;
pub mod vertex_set;

pub use boundary::{
    boundary_report, boundary_set, contour_set, eccentric_set, eccentric_set_r, periphery_set,
    verify_product_boundary, BoundaryError, BoundaryReport, ProductBoundaryReport,
};
pub use checks::{run_suite, CheckOutcome, Suite, SuiteReport};
pub use convexity::{
    is_extreme_geodesic, simplicial_vertices, ConvexityError, HullTrace, IntervalTable,
};
pub use families::{make_family, reference_g_h, FamilyError, FamilySpec};
pub use graph::{DistanceMatrix, EdgeListError, Graph, GraphError};
pub use product::{
    strong_product, strong_product_with_cap, ProductError, ProductGraph, Side, DEFAULT_VERTEX_CAP,
};
pub use random::{random_connected, random_tree, seeded_rng};
pub use solvers::{
    bounds_report, enumerate_minimum_sets, geodetic_number, greedy_upper_bound, hull_number,
    solve, verify_condition_a_collapse, BoundCheck, BoundsReport, Certificate, CollapseReport,
    SearchStats, SolveError, SolveMode, SolveOptions, SolveResult,
};
pub use vertex_set::VertexSet;
