//! Implementations of the five commands. Each returns the records to print
//! plus two flags the exit code is derived from: whether any computed value
//! missed its reference, and whether any search hit the time budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use geoprod_core::boundary::BoundaryError;
use geoprod_core::{
    boundary_report, make_family, reference_g_h, run_suite, simplicial_vertices, solve,
    strong_product_with_cap, verify_product_boundary, EdgeListError, FamilyError, FamilySpec,
    Graph, IntervalTable, ProductError, ProductGraph, SolveMode, SolveOptions, Suite,
};

use crate::expr::{parse_expression, Atom, Expr, ParseError};
use crate::record::{Answer, CheckCell, Expected, ResultRecord, Status};

pub struct Settings {
    pub time_limit: Duration,
    pub workers: usize,
    pub timing: bool,
    pub vertex_cap: usize,
}

#[derive(Default)]
pub struct RunOutput {
    pub records: Vec<ResultRecord>,
    pub mismatch: bool,
    pub timeout: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Product(#[from] ProductError),
    #[error("{0}")]
    EdgeList(#[from] EdgeListError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("graph order {order} exceeds the vertex cap {cap} (override with GEOPROD_VERTEX_CAP)")]
    TooLarge { order: usize, cap: usize },
    #[error("{0}")]
    Usage(String),
    #[error("witness failed re-verification on {0}; this is a solver bug")]
    BadWitness(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadWitness(_) => 1,
            _ => 2,
        }
    }
}

enum Built {
    Single(Graph),
    Product(ProductGraph),
}

pub struct Instance {
    pub label: String,
    built: Built,
}

impl Instance {
    pub fn graph(&self) -> &Graph {
        match &self.built {
            Built::Single(g) => g,
            Built::Product(p) => p.graph(),
        }
    }
}

fn build_atom(atom: &Atom, cap: usize) -> Result<(String, Graph), CliError> {
    let (label, graph) = match atom {
        Atom::Family(spec) => (spec.to_string(), make_family(spec)?),
        Atom::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            (format!("file:{path}"), Graph::from_edge_list_text(&text)?)
        }
    };
    if graph.order() > cap {
        return Err(CliError::TooLarge {
            order: graph.order(),
            cap,
        });
    }
    Ok((label, graph))
}

pub fn build_expression(text: &str, cap: usize) -> Result<Instance, CliError> {
    match parse_expression(text)? {
        Expr::Single(atom) => {
            let (label, graph) = build_atom(&atom, cap)?;
            Ok(Instance {
                label,
                built: Built::Single(graph),
            })
        }
        Expr::Product(a, b) => {
            let (la, ga) = build_atom(&a, cap)?;
            let (lb, gb) = build_atom(&b, cap)?;
            let product = strong_product_with_cap(&ga, &gb, cap)?;
            Ok(Instance {
                label: format!("{la} x {lb}"),
                built: Built::Product(product),
            })
        }
    }
}

fn solver_options(st: &Settings, mode: SolveMode) -> SolveOptions {
    let mut opts = SolveOptions::default();
    opts.mode = mode;
    opts.time_limit = st.time_limit;
    opts.workers = st.workers;
    opts
}

struct Solved {
    answer: Answer,
    witness: Vec<usize>,
    timed_out: bool,
}

/// Runs one search and re-verifies the witness before anything is emitted.
fn solve_one(
    t: &IntervalTable,
    mode: SolveMode,
    st: &Settings,
    label: &str,
) -> Result<Solved, CliError> {
    let res = solve(t, &solver_options(st, mode));
    let valid = match mode {
        SolveMode::Geodetic => t.is_geodetic(&res.witness),
        SolveMode::Hull => t.is_hull(&res.witness),
    }
    .expect("solver witnesses are nonempty");
    if !valid {
        return Err(CliError::BadWitness(label.to_string()));
    }
    let answer = if res.optimal {
        Answer::Exact(res.value)
    } else {
        Answer::Status(Status::Timeout)
    };
    Ok(Solved {
        answer,
        witness: res.witness.to_vec(),
        timed_out: !res.optimal,
    })
}

fn elapsed_ms(started: Instant) -> u64 {
    started.elapsed().as_millis().min(u128::from(u64::MAX)) as u64
}

fn full_record(label: &str, graph: &Graph, st: &Settings) -> Result<(ResultRecord, bool), CliError> {
    let started = Instant::now();
    let t = IntervalTable::new(graph);
    let geo = solve_one(&t, SolveMode::Geodetic, st, label)?;
    let hull = solve_one(&t, SolveMode::Hull, st, label)?;
    let sets = boundary_report(graph);

    let mut rec = ResultRecord::new(label);
    rec.order = Some(graph.order());
    rec.size = Some(graph.size());
    rec.diameter = Some(graph.diameter());
    rec.radius = Some(graph.radius());
    rec.g = Some(geo.answer);
    rec.h = Some(hull.answer);
    rec.witness_g = Some(geo.witness);
    rec.witness_h = Some(hull.witness);
    rec.ext = Some(simplicial_vertices(graph).to_vec());
    rec.boundary = Some(sets.boundary.to_vec());
    rec.eccentric = Some(sets.eccentric.to_vec());
    rec.contour = Some(sets.contour.to_vec());
    rec.periphery = Some(sets.periphery.to_vec());
    if st.timing {
        rec.ms = Some(elapsed_ms(started));
    }
    Ok((rec, geo.timed_out || hull.timed_out))
}

pub fn cmd_param(expr: &str, st: &Settings) -> Result<RunOutput, CliError> {
    let inst = build_expression(expr, st.vertex_cap)?;
    let (rec, timed_out) = full_record(&inst.label, inst.graph(), st)?;
    Ok(RunOutput {
        records: vec![rec],
        mismatch: false,
        timeout: timed_out,
    })
}

pub fn cmd_solve_raw(file: &str, st: &Settings) -> Result<RunOutput, CliError> {
    let (label, text) = if file == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf).map_err(|source| {
            CliError::Io {
                path: "stdin".to_string(),
                source,
            }
        })?;
        ("stdin".to_string(), buf)
    } else {
        let buf = std::fs::read_to_string(file).map_err(|source| CliError::Io {
            path: file.to_string(),
            source,
        })?;
        (format!("file:{file}"), buf)
    };
    let graph = Graph::from_edge_list_text(&text)?;
    if graph.order() > st.vertex_cap {
        return Err(CliError::TooLarge {
            order: graph.order(),
            cap: st.vertex_cap,
        });
    }
    let (rec, timed_out) = full_record(&label, &graph, st)?;
    Ok(RunOutput {
        records: vec![rec],
        mismatch: false,
        timeout: timed_out,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableName {
    T1,
    T3,
    T5,
    T7,
}

struct TableRow {
    instance: Instance,
    expected_g: Option<Expected>,
    expected_h: Option<Expected>,
    solve_h: bool,
}

fn tree_a() -> FamilySpec {
    FamilySpec::Tree(vec![(0, 1), (0, 2), (0, 3), (3, 4)])
}

fn tree_b() -> FamilySpec {
    FamilySpec::Tree(vec![(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)])
}

fn single_row(spec: &FamilySpec, cap: usize) -> Result<Instance, CliError> {
    let (label, graph) = build_atom(&Atom::Family(spec.clone()), cap)?;
    Ok(Instance {
        label,
        built: Built::Single(graph),
    })
}

fn product_row(a: &FamilySpec, b: &FamilySpec, cap: usize) -> Result<Instance, CliError> {
    let ga = make_family(a)?;
    let gb = make_family(b)?;
    let product = strong_product_with_cap(&ga, &gb, cap)?;
    Ok(Instance {
        label: format!("{a} x {b}"),
        built: Built::Product(product),
    })
}

/// Closed-form families: every row of the reference catalogue with order
/// at most 9, plus the two fixed trees.
fn t1_rows(cap: usize) -> Result<Vec<TableRow>, CliError> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((2..=9).map(FamilySpec::Path));
    specs.extend((3..=9).map(FamilySpec::Cycle));
    specs.extend((2..=9).map(FamilySpec::Complete));
    for p in 2..=4 {
        for q in p..=(9 - p) {
            specs.push(FamilySpec::CompleteBipartite(p, q));
        }
    }
    specs.extend((3..=9).map(FamilySpec::Star));
    specs.extend((5..=9).map(FamilySpec::Wheel));
    specs.push(tree_a());
    specs.push(tree_b());

    specs
        .into_iter()
        .map(|spec| {
            let (want_g, want_h) =
                reference_g_h(&spec).expect("the battery stays inside the catalogue");
            Ok(TableRow {
                instance: single_row(&spec, cap)?,
                expected_g: Some(Expected::Exact(want_g)),
                expected_h: Some(Expected::Exact(want_h)),
                solve_h: true,
            })
        })
        .collect()
}

/// Products of graphs whose every minimum geodetic set is the set of
/// simplicial vertices; both numbers multiply across the product.
fn t3_rows(cap: usize) -> Result<Vec<TableRow>, CliError> {
    let factors: Vec<(FamilySpec, usize)> = vec![
        (FamilySpec::Path(2), 2),
        (FamilySpec::Path(3), 2),
        (FamilySpec::Path(4), 2),
        (FamilySpec::Path(5), 2),
        (tree_a(), 3),
        (tree_b(), 3),
        (FamilySpec::Complete(2), 2),
        (FamilySpec::Complete(3), 3),
        (FamilySpec::Complete(4), 4),
        (FamilySpec::Complete(5), 5),
    ];
    let mut rows = Vec::new();
    for (sa, wa) in &factors {
        for (sb, wb) in &factors {
            let want = Expected::Exact(wa * wb);
            rows.push(TableRow {
                instance: product_row(sa, sb, cap)?,
                expected_g: Some(want),
                expected_h: Some(want),
                solve_h: true,
            });
        }
    }
    Ok(rows)
}

/// Products with a cycle factor: parity of the cycle decides both numbers,
/// up to a known two-value range for the path rows with an odd cycle.
fn t5_rows(cap: usize) -> Result<Vec<TableRow>, CliError> {
    let left: Vec<FamilySpec> = vec![
        FamilySpec::Path(2),
        FamilySpec::Path(3),
        FamilySpec::Path(4),
        FamilySpec::Complete(2),
        FamilySpec::Complete(3),
        FamilySpec::Complete(4),
        FamilySpec::Cycle(4),
    ];
    let mut rows = Vec::new();
    for spec in &left {
        for n in 4..=9usize {
            let even = n % 2 == 0;
            let expected_g = match spec {
                FamilySpec::Path(_) if even => Expected::Exact(4),
                FamilySpec::Path(_) => Expected::Range { min: 5, max: 6 },
                FamilySpec::Complete(_) => Expected::Exact(if even { 4 } else { 5 }),
                FamilySpec::Cycle(_) if even => Expected::Exact(4),
                FamilySpec::Cycle(_) => Expected::Range { min: 4, max: 6 },
                _ => unreachable!("row families are paths, cliques and one cycle"),
            };
            let expected_h = match spec {
                FamilySpec::Path(m) if !even && *m < n / 2 + 2 => Expected::Exact(3),
                FamilySpec::Path(_) => Expected::Exact(2),
                FamilySpec::Complete(_) => Expected::Exact(if even { 2 } else { 3 }),
                FamilySpec::Cycle(_) => Expected::Exact(2),
                _ => unreachable!("row families are paths, cliques and one cycle"),
            };
            rows.push(TableRow {
                instance: product_row(spec, &FamilySpec::Cycle(n), cap)?,
                expected_g: Some(expected_g),
                expected_h: Some(expected_h),
                solve_h: true,
            });
        }
    }
    Ok(rows)
}

/// The five-cycle times growing cycles; the geodetic number jumps around,
/// so the rows pin exact values found by search.
fn t7_rows(cap: usize) -> Result<Vec<TableRow>, CliError> {
    let want = [5usize, 5, 6, 7, 4, 6];
    (4..=9usize)
        .zip(want)
        .map(|(n, w)| {
            Ok(TableRow {
                instance: product_row(&FamilySpec::Cycle(5), &FamilySpec::Cycle(n), cap)?,
                expected_g: Some(Expected::Exact(w)),
                expected_h: None,
                solve_h: false,
            })
        })
        .collect()
}

pub fn cmd_table(name: TableName, st: &Settings) -> Result<RunOutput, CliError> {
    let rows = match name {
        TableName::T1 => t1_rows(st.vertex_cap)?,
        TableName::T3 => t3_rows(st.vertex_cap)?,
        TableName::T5 => t5_rows(st.vertex_cap)?,
        TableName::T7 => t7_rows(st.vertex_cap)?,
    };
    let mut out = RunOutput::default();
    for row in rows {
        let started = Instant::now();
        let t = IntervalTable::new(row.instance.graph());
        let geo = solve_one(&t, SolveMode::Geodetic, st, &row.instance.label)?;

        let mut rec = ResultRecord::new(&row.instance.label);
        rec.g = Some(geo.answer);
        rec.witness_g = Some(geo.witness);
        rec.expected_g = row.expected_g;
        let mut timed_out = geo.timed_out;
        if row.solve_h {
            let hull = solve_one(&t, SolveMode::Hull, st, &row.instance.label)?;
            rec.h = Some(hull.answer);
            rec.witness_h = Some(hull.witness);
            rec.expected_h = row.expected_h;
            timed_out |= hull.timed_out;
        }

        let mut all_ok = true;
        let mut undecided = false;
        for (answer, expected) in [(rec.g, rec.expected_g), (rec.h, rec.expected_h)] {
            let Some(expected) = expected else { continue };
            match answer.and_then(Answer::exact) {
                Some(value) => all_ok &= expected.admits(value),
                None => undecided = true,
            }
        }
        rec.holds = if !all_ok {
            Some(false)
        } else if undecided {
            None
        } else {
            Some(true)
        };
        out.mismatch |= rec.holds == Some(false);
        out.timeout |= timed_out;
        if st.timing {
            rec.ms = Some(elapsed_ms(started));
        }
        out.records.push(rec);
    }
    Ok(out)
}

pub fn cmd_check(
    suite_name: &str,
    seed: u64,
    trials: usize,
    st: &Settings,
) -> Result<RunOutput, CliError> {
    let suite: Suite = suite_name.parse().map_err(CliError::Usage)?;
    let started = Instant::now();
    let report = run_suite(suite, seed, trials, &solver_options(st, SolveMode::Geodetic));

    let mut rec = ResultRecord::new(format!("check:{}", suite.name()));
    rec.holds = Some(report.ok());
    let mut cells = BTreeMap::new();
    for outcome in report.outcomes {
        cells.insert(
            outcome.name.to_string(),
            CheckCell {
                passes: outcome.passes,
                skips: outcome.skips,
                failures: outcome.failures,
            },
        );
    }
    rec.checks = Some(cells);
    if st.timing {
        rec.ms = Some(elapsed_ms(started));
    }
    let mismatch = rec.holds == Some(false);
    Ok(RunOutput {
        records: vec![rec],
        mismatch,
        timeout: false,
    })
}

pub fn cmd_boundary(expr_g: &str, expr_h: &str, st: &Settings) -> Result<RunOutput, CliError> {
    let a = build_expression(expr_g, st.vertex_cap)?;
    let b = build_expression(expr_h, st.vertex_cap)?;
    let label = format!("{} x {}", a.label, b.label);
    let started = Instant::now();
    let product = strong_product_with_cap(a.graph(), b.graph(), st.vertex_cap)?;
    let graph = product.graph();
    let sets = boundary_report(graph);
    let ext = simplicial_vertices(graph);

    let mut cells: BTreeMap<String, CheckCell> = BTreeMap::new();
    let mut ok = true;

    match verify_product_boundary(&product) {
        Ok(report) => {
            for item in report.items {
                let mut cell = CheckCell::default();
                if item.holds() {
                    cell.passes = 1;
                } else {
                    ok = false;
                    cell.failures.push(format!(
                        "computed {:?}, factor decomposition predicts {:?}",
                        item.computed.to_vec(),
                        item.predicted.to_vec()
                    ));
                }
                cells.insert(item.name.to_string(), cell);
            }
        }
        Err(BoundaryError::Orientation { .. }) => {
            ok = false;
            let mut cell = CheckCell::default();
            cell.failures.push(
                "no factor ordering gives the first factor both the smaller diameter \
                 and the smaller radius, so the decomposition does not apply"
                    .to_string(),
            );
            cells.insert("orientation".to_string(), cell);
        }
    }

    let mut chain = CheckCell::default();
    let inner = sets.contour.intersection(&sets.eccentric);
    for (holds, message) in [
        (
            sets.periphery.is_subset_of(&inner),
            "periphery is not inside the intersection of contour and eccentric set",
        ),
        (
            sets.eccentric.union(&sets.contour).is_subset_of(&sets.boundary),
            "contour or eccentric set escapes the boundary",
        ),
        (
            ext.is_subset_of(&sets.contour),
            "a simplicial vertex is missing from the contour",
        ),
    ] {
        if holds {
            chain.passes += 1;
        } else {
            ok = false;
            chain.failures.push(message.to_string());
        }
    }
    cells.insert("containments".to_string(), chain);

    let mut extreme = CheckCell::default();
    let predicted = product.pair_set(
        &simplicial_vertices(a.graph()),
        &simplicial_vertices(b.graph()),
    );
    if ext == predicted {
        extreme.passes = 1;
    } else {
        ok = false;
        extreme.failures.push(format!(
            "simplicial vertices {:?} differ from the factor product {:?}",
            ext.to_vec(),
            predicted.to_vec()
        ));
    }
    cells.insert("extreme_factorization".to_string(), extreme);

    let mut rec = ResultRecord::new(&label);
    rec.order = Some(graph.order());
    rec.size = Some(graph.size());
    rec.diameter = Some(graph.diameter());
    rec.radius = Some(graph.radius());
    rec.ext = Some(ext.to_vec());
    rec.boundary = Some(sets.boundary.to_vec());
    rec.eccentric = Some(sets.eccentric.to_vec());
    rec.contour = Some(sets.contour.to_vec());
    rec.periphery = Some(sets.periphery.to_vec());
    rec.checks = Some(cells);
    rec.holds = Some(ok);
    if st.timing {
        rec.ms = Some(elapsed_ms(started));
    }
    Ok(RunOutput {
        records: vec![rec],
        mismatch: !ok,
        timeout: false,
    })
}
