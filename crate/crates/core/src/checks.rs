//! Mechanical verification suites for the structural facts the rest of the
//! crate relies on: interval and projection identities on strong products,
//! the bound catalogue, the two covering conditions, and the boundary-type
//! set identities.
//!
//! Every check runs over a fixed roster of family instances plus a seeded
//! batch of random connected graphs, so suite output is reproducible for a
//! given seed and trial count. Failures are collected as strings rather
//! than panics; a suite is judged by [`SuiteReport::ok`].

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::boundary::{boundary_report, verify_product_boundary, BoundaryError};
use crate::convexity::{is_extreme_geodesic, simplicial_vertices, IntervalTable};
use crate::families::{make_family, FamilySpec};
use crate::graph::Graph;
use crate::oracle::for_each_subset_of_size;
use crate::product::{project, strong_product, verify_distance_formula, Side};
use crate::random::{random_connected, random_tree, seeded_rng};
use crate::solvers::{
    bounds_report, enumerate_minimum_sets, geodetic_number, hull_number,
    verify_condition_a_collapse, SolveError, SolveMode, SolveOptions,
};
use crate::vertex_set::VertexSet;

/// The named check groups exposed by the library and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Intervals,
    Projections,
    Bounds,
    Conditions,
    Boundary,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Intervals => "intervals",
            Suite::Projections => "projections",
            Suite::Bounds => "bounds",
            Suite::Conditions => "conditions",
            Suite::Boundary => "boundary",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "intervals" => Ok(Suite::Intervals),
            "projections" => Ok(Suite::Projections),
            "bounds" => Ok(Suite::Bounds),
            "conditions" => Ok(Suite::Conditions),
            "boundary" => Ok(Suite::Boundary),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected intervals, projections, bounds, \
                 conditions, boundary or all)"
            )),
        }
    }
}

/// Tally for one named property.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Configurations that satisfied the property.
    pub passes: u64,
    /// Configurations whose hypothesis did not apply.
    pub skips: u64,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> CheckOutcome {
        CheckOutcome { name, passes: 0, skips: 0, failures: Vec::new() }
    }

    fn skip(&mut self) {
        self.skips += 1;
    }

    fn check(&mut self, holds: bool, msg: impl FnOnce() -> String) {
        if holds {
            self.passes += 1;
        } else {
            self.failures.push(msg());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::ok)
    }

    pub fn total_passes(&self) -> u64 {
        self.outcomes.iter().map(|o| o.passes).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.outcomes.iter().flat_map(|o| o.failures.iter().map(String::as_str))
    }
}

type Inst = (String, Graph);

struct Pools {
    rng: ChaCha8Rng,
    singles: Vec<Inst>,
    pairs: Vec<(Inst, Inst)>,
    tree_pairs: Vec<(Inst, Inst)>,
}

fn fam(spec: FamilySpec) -> Inst {
    let g = make_family(&spec).expect("fixture families are valid");
    (spec.to_string(), g)
}

fn build_pools(seed: u64, trials: usize) -> Pools {
    let mut rng = seeded_rng(seed);
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    let mut tree_pairs = Vec::new();
    for i in 0..trials {
        let n = rng.random_range(4..=8);
        let p = rng.random_range(0.3..0.8);
        let g = random_connected(&mut rng, n, p);
        singles.push((format!("rnd{i}(n{n},m{})", g.size()), g));
    }
    for i in 0..trials {
        let (na, nb) = (rng.random_range(2..=6), rng.random_range(2..=6));
        let (pa, pb) = (rng.random_range(0.4..0.9), rng.random_range(0.4..0.9));
        let a = random_connected(&mut rng, na, pa);
        let b = random_connected(&mut rng, nb, pb);
        pairs.push((
            (format!("rndL{i}(n{na},m{})", a.size()), a),
            (format!("rndR{i}(n{nb},m{})", b.size()), b),
        ));
    }
    for i in 0..trials {
        let (na, nb) = (rng.random_range(2..=6), rng.random_range(2..=6));
        let a = random_tree(&mut rng, na);
        let b = random_tree(&mut rng, nb);
        tree_pairs.push((
            (format!("rndT{i}a(n{na})"), a),
            (format!("rndT{i}b(n{nb})"), b),
        ));
    }
    Pools { rng, singles, pairs, tree_pairs }
}

fn fixture_pairs() -> Vec<(Inst, Inst)> {
    vec![
        (fam(FamilySpec::Path(4)), fam(FamilySpec::Cycle(5))),
        (fam(FamilySpec::Complete(3)), fam(FamilySpec::Cycle(4))),
        (fam(FamilySpec::Cycle(5)), fam(FamilySpec::Cycle(6))),
        (fam(FamilySpec::CompleteBipartite(2, 3)), fam(FamilySpec::Complete(3))),
    ]
}

fn base_opts(opts: &SolveOptions) -> SolveOptions {
    SolveOptions { must_include: None, ..opts.clone() }
}

fn subset_sets(n: usize, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_subset_of_size(n, size, &mut |mask| {
        out.push(VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1)));
        false
    });
    out
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> VertexSet {
    let mut s = VertexSet::empty(n);
    while s.len() < size {
        s.insert(rng.random_range(0..n));
    }
    s
}

/// Draws subsets until `want` of them satisfy the validity predicate for
/// `mode`, giving up quietly after a bounded number of attempts.
fn sample_valid_sets(
    t: &IntervalTable,
    mode: SolveMode,
    rng: &mut ChaCha8Rng,
    want: usize,
) -> Vec<VertexSet> {
    let n = t.order();
    let mut out: Vec<VertexSet> = Vec::new();
    for _ in 0..60 {
        if out.len() == want {
            break;
        }
        let size = rng.random_range(2..=n.min(7));
        let s = random_subset(rng, n, size);
        let valid = match mode {
            SolveMode::Geodetic => t.is_geodetic(&s),
            SolveMode::Hull => t.is_hull(&s),
        }
        .expect("sampled sets are nonempty and in range");
        if valid && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn iterated_closure(t: &IntervalTable, s: &VertexSet, r: usize) -> VertexSet {
    let mut cur = s.clone();
    for _ in 0..r {
        cur = t.closure(&cur).expect("iterated sets stay nonempty");
    }
    cur
}

fn check_distance_formula(out: &mut CheckOutcome, pairs: &[(Inst, Inst)]) {
    for ((la, a), (lb, b)) in pairs {
        match strong_product(a, b).and_then(|p| {
            let report = verify_distance_formula(&p)?;
            Ok((p, report))
        }) {
            Ok((p, report)) => {
                let want_diam = a.diameter().max(b.diameter());
                out.check(report.diameter == want_diam, || {
                    format!("{la} x {lb}: product diameter {} but factors give {want_diam}", report.diameter)
                });
                let want_size =
                    a.size() * b.order() + a.order() * b.size() + 2 * a.size() * b.size();
                out.check(p.graph().size() == want_size, || {
                    format!("{la} x {lb}: {} edges, expected {want_size}", p.graph().size())
                });
            }
            Err(e) => out.failures.push(format!("{la} x {lb}: {e}")),
        }
    }
}

fn check_geodesic_projection(out: &mut CheckOutcome, pairs: &[(Inst, Inst)]) {
    for ((la, a), (lb, b)) in pairs {
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let (ta, tb) = (IntervalTable::new(a), IntervalTable::new(b));
        let n = p.graph().order();
        for u in 0..n {
            for v in u..n {
                let (g1, h1) = p.decode(u);
                let (g2, h2) = p.decode(v);
                let dp = p.graph().dist(u, v);
                let interval = tp.interval(u, v).unwrap();
                if dp == a.dist(g1, g2) {
                    let ia = ta.interval(g1, g2).unwrap();
                    let bad = interval.iter().find(|&w| !ia.contains(p.decode(w).0));
                    out.check(bad.is_none(), || {
                        format!("{la} x {lb}: I[{u},{v}] has a vertex projecting outside the left interval")
                    });
                }
                if dp == b.dist(h1, h2) {
                    let ib = tb.interval(h1, h2).unwrap();
                    let bad = interval.iter().find(|&w| !ib.contains(p.decode(w).1));
                    out.check(bad.is_none(), || {
                        format!("{la} x {lb}: I[{u},{v}] has a vertex projecting outside the right interval")
                    });
                }
            }
        }
    }
}

fn check_interval_characterization(out: &mut CheckOutcome, pairs: &[(Inst, Inst)]) {
    for ((la, a), (lb, b)) in pairs {
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let (ta, tb) = (IntervalTable::new(a), IntervalTable::new(b));
        let n = p.graph().order();
        for u in 0..n {
            for v in u..n {
                let (g1, h1) = p.decode(u);
                let (g2, h2) = p.decode(v);
                let dp = p.graph().dist(u, v);
                let interval = tp.interval(u, v).unwrap();
                if dp == a.dist(g1, g2) {
                    let ia = ta.interval(g1, g2).unwrap();
                    let mut predicted = VertexSet::empty(n);
                    for x in ia.iter() {
                        for y in 0..b.order() {
                            if b.dist(h1, y) <= a.dist(g1, x) && b.dist(y, h2) <= a.dist(x, g2) {
                                predicted.insert(p.encode(x, y));
                            }
                        }
                    }
                    out.check(predicted == interval, || {
                        format!("{la} x {lb}: I[{u},{v}] differs from the left-led characterization")
                    });
                }
                if dp == b.dist(h1, h2) {
                    let ib = tb.interval(h1, h2).unwrap();
                    let mut predicted = VertexSet::empty(n);
                    for y in ib.iter() {
                        for x in 0..a.order() {
                            if a.dist(g1, x) <= b.dist(h1, y) && a.dist(x, g2) <= b.dist(y, h2) {
                                predicted.insert(p.encode(x, y));
                            }
                        }
                    }
                    out.check(predicted == interval, || {
                        format!("{la} x {lb}: I[{u},{v}] differs from the right-led characterization")
                    });
                }
            }
        }
    }
}

fn check_slice_exclusions(out: &mut CheckOutcome, pairs: &[(Inst, Inst)]) {
    for ((la, a), (lb, b)) in pairs {
        if a.order() < 2 || b.order() < 3 {
            out.skip();
            continue;
        }
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let tb = IntervalTable::new(b);
        let n = p.graph().order();
        for g1 in 0..a.order() {
            for g2 in 0..a.order() {
                if g1 == g2 {
                    continue;
                }
                for h1 in 0..b.order() {
                    for h2 in 0..b.order() {
                        if h1 == h2 {
                            continue;
                        }
                        let corner = VertexSet::from_members(
                            n,
                            [p.encode(g1, h1), p.encode(g1, h2), p.encode(g2, h1)],
                        );
                        let closure = tp.closure(&corner).unwrap();
                        out.check(!closure.contains(p.encode(g2, h2)), || {
                            format!("{la} x {lb}: ({g2},{h2}) lies in the three-corner closure")
                        });
                        let ihh = tb.interval(h1, h2).unwrap();
                        for h3 in 0..b.order() {
                            if h3 == h1 || h3 == h2 || ihh.contains(h3) {
                                continue;
                            }
                            let column = tp.interval(p.encode(g1, h1), p.encode(g1, h2)).unwrap();
                            out.check(!column.contains(p.encode(g2, h3)), || {
                                format!("{la} x {lb}: ({g2},{h3}) lies in a same-column interval")
                            });
                            let diag = tp.interval(p.encode(g1, h1), p.encode(g2, h2)).unwrap();
                            out.check(!diag.contains(p.encode(g1, h3)), || {
                                format!("{la} x {lb}: ({g1},{h3}) lies in a diagonal interval")
                            });
                        }
                    }
                }
            }
        }
    }
}

fn check_interval_powers(out: &mut CheckOutcome, pairs: &[(Inst, Inst)], rng: &mut ChaCha8Rng) {
    for ((la, a), (lb, b)) in pairs {
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let (ta, tb) = (IntervalTable::new(a), IntervalTable::new(b));
        for _ in 0..5 {
            let (sz1, sz2) = (rng.random_range(1..=a.order()), rng.random_range(1..=b.order()));
            let s1 = random_subset(rng, a.order(), sz1);
            let s2 = random_subset(rng, b.order(), sz2);
            for r in 1..=3 {
                let lhs = p.pair_set(&iterated_closure(&ta, &s1, r), &iterated_closure(&tb, &s2, r));
                let rhs = iterated_closure(&tp, &p.pair_set(&s1, &s2), r);
                out.check(lhs.is_subset_of(&rhs), || {
                    format!("{la} x {lb}: power {r} of {s1:?} x {s2:?} escapes the product closure")
                });
            }
        }
    }
}

fn check_product_of_valid_sets(
    geo: &mut CheckOutcome,
    hull: &mut CheckOutcome,
    pairs: &[(Inst, Inst)],
    rng: &mut ChaCha8Rng,
    opts: &SolveOptions,
) {
    for ((la, a), (lb, b)) in pairs {
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let (ta, tb) = (IntervalTable::new(a), IntervalTable::new(b));
        for mode in [SolveMode::Geodetic, SolveMode::Hull] {
            let mode_opts = SolveOptions { mode, ..base_opts(opts) };
            let mut lefts = vec![crate::solvers::solve(&ta, &mode_opts).witness];
            lefts.extend(sample_valid_sets(&ta, mode, rng, 2));
            let mut rights = vec![crate::solvers::solve(&tb, &mode_opts).witness];
            rights.extend(sample_valid_sets(&tb, mode, rng, 2));
            let out = if mode == SolveMode::Geodetic { &mut *geo } else { &mut *hull };
            for s1 in &lefts {
                for s2 in &rights {
                    let cross = p.pair_set(s1, s2);
                    let valid = match mode {
                        SolveMode::Geodetic => tp.is_geodetic(&cross),
                        SolveMode::Hull => tp.is_hull(&cross),
                    }
                    .unwrap();
                    out.check(valid, || {
                        format!("{la} x {lb}: {s1:?} x {s2:?} is not a covering set of the product")
                    });
                }
            }
        }
    }
}

fn check_geodetic_projection_prop(
    out: &mut CheckOutcome,
    pairs: &[(Inst, Inst)],
    rng: &mut ChaCha8Rng,
    opts: &SolveOptions,
) {
    for ((la, a), (lb, b)) in pairs {
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let (ta, tb) = (IntervalTable::new(a), IntervalTable::new(b));
        let mut sets = vec![geodetic_number(&tp, &base_opts(opts)).witness];
        sets.extend(sample_valid_sets(&tp, SolveMode::Geodetic, rng, 3));
        for s in &sets {
            let left = project(&p, s, Side::Left);
            let right = project(&p, s, Side::Right);
            let ok = ta.is_geodetic(&left).unwrap() || tb.is_geodetic(&right).unwrap();
            out.check(ok, || {
                format!("{la} x {lb}: geodetic {s:?} projects to no geodetic factor set")
            });
        }
    }
}

fn check_hull_slice(out: &mut CheckOutcome, opts: &SolveOptions) {
    let lefts = [fam(FamilySpec::Cycle(5)), fam(FamilySpec::Cycle(7))];
    let rights = [fam(FamilySpec::Path(3)), fam(FamilySpec::Cycle(4)), fam(FamilySpec::Path(4))];
    for (la, a) in &lefts {
        if !simplicial_vertices(a).is_empty() {
            out.skip();
            continue;
        }
        let ta = IntervalTable::new(a);
        let hull_opts = SolveOptions { mode: SolveMode::Hull, ..base_opts(opts) };
        let mut hull_sets: Vec<VertexSet> = enumerate_minimum_sets(&ta, &hull_opts);
        hull_sets.truncate(2);
        let mut widened = hull_sets[0].clone();
        widened.insert((a.order() / 2) % a.order());
        hull_sets.push(widened);
        for (lb, b) in &rights {
            let p = strong_product(a, b).expect("factors fit the cap");
            let tp = IntervalTable::new(p.graph());
            for s in &hull_sets {
                for x in 0..b.order() {
                    let slice = p.pair_set(s, &VertexSet::from_members(b.order(), [x]));
                    out.check(tp.is_hull(&slice).unwrap(), || {
                        format!("{la} x {lb}: slice {s:?} at column {x} is not a hull set")
                    });
                }
            }
        }
    }
}

fn check_bound_catalogue(out: &mut CheckOutcome, pairs: &[(Inst, Inst)], opts: &SolveOptions) {
    for ((la, a), (lb, b)) in pairs {
        match bounds_report(a, b, &base_opts(opts)) {
            Ok(report) => {
                if !report.all_optimal() {
                    out.skip();
                    continue;
                }
                for c in &report.checks {
                    out.check(c.holds(), || {
                        format!("{la} x {lb}: {} ({} vs {})", c.name, c.lhs, c.rhs)
                    });
                }
            }
            Err(e) => out.failures.push(format!("{la} x {lb}: {e}")),
        }
    }
}

fn check_extreme_geodesic_product(
    out: &mut CheckOutcome,
    pairs: &[(Inst, Inst)],
    opts: &SolveOptions,
) {
    for ((la, a), (lb, b)) in pairs {
        let (ta, tb) = (IntervalTable::new(a), IntervalTable::new(b));
        if !is_extreme_geodesic(&ta) || !is_extreme_geodesic(&tb) {
            out.skip();
            continue;
        }
        let expected = simplicial_vertices(a).len() * simplicial_vertices(b).len();
        let p = strong_product(a, b).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let g = geodetic_number(&tp, &base_opts(opts)).value;
        let h = hull_number(&tp, &base_opts(opts)).value;
        out.check(g == expected && h == expected, || {
            format!("{la} x {lb}: expected g = h = {expected}, got g = {g}, h = {h}")
        });
    }
}

fn satisfies_condition_b_everywhere(t: &IntervalTable, max_size: usize) -> bool {
    let n = t.order();
    for size in 2..=max_size.min(n) {
        for s in subset_sets(n, size) {
            if !t.condition_b(&s).expect("sets have at least two members") {
                return false;
            }
        }
    }
    true
}

fn check_odd_cycle_lower_bound(out: &mut CheckOutcome, opts: &SolveOptions) {
    let lefts = [
        fam(FamilySpec::Complete(3)),
        fam(FamilySpec::Path(3)),
        fam(FamilySpec::Path(4)),
        fam(FamilySpec::Cycle(5)),
    ];
    let rights = [fam(FamilySpec::Cycle(5)), fam(FamilySpec::Cycle(7))];
    for (la, a) in &lefts {
        let ta = IntervalTable::new(a);
        out.check(satisfies_condition_b_everywhere(&ta, 4), || {
            format!("{la}: some 2-4 subset misses the two-witness condition")
        });
        for (lb, b) in &rights {
            let p = strong_product(a, b).expect("factors fit the cap");
            let tp = IntervalTable::new(p.graph());
            let g = geodetic_number(&tp, &base_opts(opts)).value;
            out.check(g >= 5, || format!("{la} x {lb}: geodetic number {g} is below 5"));
        }
    }
}

fn check_small_odd_cycle_subsets(out: &mut CheckOutcome) {
    for h in 2..=5 {
        let n = 2 * h + 1;
        let (label, cycle) = fam(FamilySpec::Cycle(n));
        let t = IntervalTable::new(&cycle);
        for size in 2..=4 {
            for s in subset_sets(n, size) {
                out.check(t.condition_b(&s).unwrap(), || {
                    format!("{label}: {s:?} misses the two-witness condition")
                });
            }
        }
    }
}

fn check_geodetic_slice(out: &mut CheckOutcome, singles: &[Inst], opts: &SolveOptions) {
    let k3 = make_family(&FamilySpec::Complete(3)).unwrap();
    for (label, g) in singles {
        if g.order() > 8 {
            out.skip();
            continue;
        }
        let t = IntervalTable::new(g);
        let p = strong_product(g, &k3).expect("factors fit the cap");
        let tp = IntervalTable::new(p.graph());
        let mut qualified = 0u64;
        for size in 3..=g.order().min(5) {
            for s in subset_sets(g.order(), size) {
                if !t.is_geodetic(&s).unwrap() || !t.condition_a(&s).unwrap() {
                    continue;
                }
                qualified += 1;
                for k in 0..3 {
                    let slice = p.pair_set(&s, &VertexSet::from_members(3, [k]));
                    out.check(tp.is_geodetic(&slice).unwrap(), || {
                        format!("{label}: slice of {s:?} at clique vertex {k} is not geodetic")
                    });
                }
            }
        }
        if qualified == 0 {
            out.skip();
        }
    }
    let _ = opts;
}

fn check_clique_collapse(out: &mut CheckOutcome, opts: &SolveOptions) {
    let fixtures: [(FamilySpec, usize, bool); 4] = [
        (FamilySpec::CompleteBipartite(4, 4), 2, true),
        (FamilySpec::CompleteBipartite(4, 4), 3, true),
        (FamilySpec::Cycle(8), 4, false),
        (FamilySpec::Cycle(6), 3, false),
    ];
    for (spec, n, expect_witness) in fixtures {
        let g = make_family(&spec).unwrap();
        match verify_condition_a_collapse(&g, n, &base_opts(opts)) {
            Ok(report) => {
                out.check(expect_witness && report.holds, || {
                    format!(
                        "{spec} with a {n}-clique: collapse report holds={} expected witness={expect_witness}",
                        report.holds
                    )
                });
            }
            Err(SolveError::HypothesisFails { .. }) => {
                out.check(!expect_witness, || {
                    format!("{spec} with a {n}-clique: hypothesis unexpectedly unavailable")
                });
            }
            Err(e) => out.failures.push(format!("{spec} with a {n}-clique: {e}")),
        }
    }
}

fn check_boundary_containments(out: &mut CheckOutcome, singles: &[Inst]) {
    for (label, g) in singles {
        let report = boundary_report(g);
        let ext = simplicial_vertices(g);
        out.check(
            report.periphery.is_subset_of(&report.contour.intersection(&report.eccentric)),
            || format!("{label}: periphery escapes contour and eccentric sets"),
        );
        out.check(
            report.eccentric.union(&report.contour).is_subset_of(&report.boundary),
            || format!("{label}: eccentric or contour vertices escape the boundary"),
        );
        out.check(ext.is_subset_of(&report.contour), || {
            format!("{label}: simplicial vertices escape the contour")
        });
    }
}

fn check_boundary_product_identities(out: &mut CheckOutcome, pairs: &[(Inst, Inst)]) {
    for ((la, a), (lb, b)) in pairs {
        let p = match strong_product(a, b) {
            Ok(p) => p,
            Err(e) => {
                out.failures.push(format!("{la} x {lb}: {e}"));
                continue;
            }
        };
        match verify_product_boundary(&p) {
            Ok(report) => {
                for item in &report.items {
                    out.check(item.holds(), || {
                        format!("{la} x {lb}: {} identity fails", item.name)
                    });
                }
            }
            Err(BoundaryError::Orientation { .. }) => out.skip(),
        }
    }
}

fn check_extreme_product_identity(out: &mut CheckOutcome, pairs: &[(Inst, Inst)]) {
    for ((la, a), (lb, b)) in pairs {
        let p = strong_product(a, b).expect("factors fit the cap");
        let direct = simplicial_vertices(p.graph());
        let factored = p.pair_set(&simplicial_vertices(a), &simplicial_vertices(b));
        out.check(direct == factored, || {
            format!("{la} x {lb}: simplicial set does not factor ({direct:?} vs {factored:?})")
        });
    }
}

fn intervals_outcomes(pools: &mut Pools) -> Vec<CheckOutcome> {
    let mut pairs = fixture_pairs();
    pairs.extend(pools.pairs.iter().cloned());
    let mut distance = CheckOutcome::new("distance-formula");
    check_distance_formula(&mut distance, &pairs);
    let mut projection = CheckOutcome::new("geodesic-projection");
    check_geodesic_projection(&mut projection, &pairs);
    let mut characterization = CheckOutcome::new("interval-characterization");
    check_interval_characterization(&mut characterization, &pairs);
    let mut exclusions = CheckOutcome::new("slice-exclusions");
    check_slice_exclusions(&mut exclusions, &pairs);
    let mut powers = CheckOutcome::new("interval-powers");
    check_interval_powers(&mut powers, &pairs, &mut pools.rng);
    vec![distance, projection, characterization, exclusions, powers]
}

fn projections_outcomes(pools: &mut Pools, opts: &SolveOptions) -> Vec<CheckOutcome> {
    let mut pairs = fixture_pairs();
    pairs.extend(pools.pairs.iter().cloned());
    let mut geo = CheckOutcome::new("product-of-geodetic-sets");
    let mut hull = CheckOutcome::new("product-of-hull-sets");
    check_product_of_valid_sets(&mut geo, &mut hull, &pairs, &mut pools.rng, opts);
    let mut proj = CheckOutcome::new("geodetic-set-projection");
    check_geodetic_projection_prop(&mut proj, &pairs, &mut pools.rng, opts);
    let mut slice = CheckOutcome::new("hull-slice");
    check_hull_slice(&mut slice, opts);
    vec![geo, hull, proj, slice]
}

fn bounds_outcomes(pools: &mut Pools, opts: &SolveOptions) -> Vec<CheckOutcome> {
    let mut pairs = fixture_pairs();
    pairs.push((fam(FamilySpec::Complete(3)), fam(FamilySpec::Complete(4))));
    pairs.push((fam(FamilySpec::Path(2)), fam(FamilySpec::Cycle(4))));
    pairs.extend(pools.pairs.iter().cloned());
    let mut catalogue = CheckOutcome::new("bound-catalogue");
    check_bound_catalogue(&mut catalogue, &pairs, opts);
    let mut extreme_pairs = vec![
        (fam(FamilySpec::Path(4)), fam(FamilySpec::Path(5))),
        (fam(FamilySpec::Complete(3)), fam(FamilySpec::Path(4))),
        (
            fam(FamilySpec::Tree(vec![(0, 1), (0, 2), (0, 3), (3, 4)])),
            fam(FamilySpec::Complete(3)),
        ),
    ];
    extreme_pairs.extend(pools.tree_pairs.iter().cloned());
    let mut extreme = CheckOutcome::new("extreme-geodesic-product");
    check_extreme_geodesic_product(&mut extreme, &extreme_pairs, opts);
    let mut odd = CheckOutcome::new("odd-cycle-lower-bound");
    check_odd_cycle_lower_bound(&mut odd, opts);
    vec![catalogue, extreme, odd]
}

fn conditions_outcomes(pools: &mut Pools, opts: &SolveOptions) -> Vec<CheckOutcome> {
    let mut subsets = CheckOutcome::new("small-odd-cycle-subsets");
    check_small_odd_cycle_subsets(&mut subsets);
    let mut singles = vec![
        fam(FamilySpec::Cycle(6)),
        fam(FamilySpec::CompleteBipartite(4, 4)),
        fam(FamilySpec::Wheel(6)),
    ];
    singles.extend(pools.singles.iter().cloned());
    let mut slice = CheckOutcome::new("geodetic-slice");
    check_geodetic_slice(&mut slice, &singles, opts);
    let mut collapse = CheckOutcome::new("clique-collapse");
    check_clique_collapse(&mut collapse, opts);
    vec![subsets, slice, collapse]
}

fn boundary_outcomes(pools: &mut Pools) -> Vec<CheckOutcome> {
    let mut singles = vec![
        fam(FamilySpec::Path(5)),
        fam(FamilySpec::Cycle(6)),
        fam(FamilySpec::Star(5)),
        fam(FamilySpec::Wheel(6)),
        fam(FamilySpec::CompleteBipartite(2, 3)),
        fam(FamilySpec::Complete(4)),
    ];
    singles.extend(pools.singles.iter().cloned());
    let mut containments = CheckOutcome::new("boundary-containments");
    check_boundary_containments(&mut containments, &singles);
    let mut pairs = vec![
        (fam(FamilySpec::Path(3)), fam(FamilySpec::Path(3))),
        (fam(FamilySpec::Path(3)), fam(FamilySpec::Cycle(5))),
        (fam(FamilySpec::Path(2)), fam(FamilySpec::Cycle(4))),
        (fam(FamilySpec::Cycle(5)), fam(FamilySpec::Path(4))),
    ];
    pairs.extend(pools.pairs.iter().cloned());
    let mut identities = CheckOutcome::new("boundary-product-identities");
    check_boundary_product_identities(&mut identities, &pairs);
    let mut extreme = CheckOutcome::new("extreme-product-identity");
    check_extreme_product_identity(&mut extreme, &pairs);
    vec![containments, identities, extreme]
}

/// Runs one suite (or all of them) over the fixed fixtures plus `trials`
/// random instances drawn from `seed`.
pub fn run_suite(suite: Suite, seed: u64, trials: usize, opts: &SolveOptions) -> SuiteReport {
    let mut pools = build_pools(seed, trials);
    let mut outcomes = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Intervals) {
        outcomes.extend(intervals_outcomes(&mut pools));
    }
    if wants(Suite::Projections) {
        outcomes.extend(projections_outcomes(&mut pools, opts));
    }
    if wants(Suite::Bounds) {
        outcomes.extend(bounds_outcomes(&mut pools, opts));
    }
    if wants(Suite::Conditions) {
        outcomes.extend(conditions_outcomes(&mut pools, opts));
    }
    if wants(Suite::Boundary) {
        outcomes.extend(boundary_outcomes(&mut pools));
    }
    SuiteReport { suite, outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Intervals,
            Suite::Projections,
            Suite::Bounds,
            Suite::Conditions,
            Suite::Boundary,
            Suite::All,
        ] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn intervals_suite_passes_on_fixtures_and_random_graphs() {
        let report = run_suite(Suite::Intervals, 11, 3, &SolveOptions::default());
        assert!(report.ok(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.total_passes() > 0);
    }

    #[test]
    fn projections_suite_passes() {
        let report = run_suite(Suite::Projections, 12, 2, &SolveOptions::default());
        assert!(report.ok(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn bounds_suite_passes() {
        let report = run_suite(Suite::Bounds, 13, 2, &SolveOptions::default());
        assert!(report.ok(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn conditions_suite_passes() {
        let report = run_suite(Suite::Conditions, 14, 2, &SolveOptions::default());
        assert!(report.ok(), "{:?}", report.failures().collect::<Vec<_>>());
        let collapse = report.outcomes.iter().find(|o| o.name == "clique-collapse").unwrap();
        assert_eq!(collapse.passes, 4);
    }

    #[test]
    fn boundary_suite_passes() {
        let report = run_suite(Suite::Boundary, 15, 3, &SolveOptions::default());
        assert!(report.ok(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    // The suites above already exercise the full roster; this smoke test
    // only confirms the aggregate wiring.
    #[test]
    fn all_suite_aggregates_every_group() {
        let report = run_suite(Suite::All, 16, 1, &SolveOptions::default());
        assert!(report.outcomes.len() >= 15);
    }
}
