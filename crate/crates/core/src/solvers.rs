//! Exact solvers for minimum geodetic and hull sets.
//!
//! The search is iterative deepening on the target size `k`: every size is
//! exhausted before the next is tried, so the first size admitting a
//! solution is the optimum. Within one size, candidates extend the forced
//! seed in ascending vertex order, which makes the first solution found the
//! lexicographically smallest witness. Both properties hold for any worker
//! count: parallelism only fans out the independent first-pick branches,
//! every branch below the winning one still runs to completion, and the
//! node counter covers exactly the branches a sequential run would visit.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::thread;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::convexity::{simplicial_vertices, HullTrace, IntervalTable};
use crate::families::{make_family, FamilyError, FamilySpec};
use crate::graph::Graph;
use crate::product::{strong_product, ProductError};
use crate::vertex_set::VertexSet;

/// Which invariant a solve targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Smallest set whose geodetic closure is the whole vertex set.
    Geodetic,
    /// Smallest set whose convex hull is the whole vertex set.
    Hull,
}

/// Knobs for the exact search. The defaults solve for the geodetic number
/// with a five minute budget on a single worker.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub mode: SolveMode,
    /// Wall clock budget. On expiry the search stops and reports its best
    /// known upper bound flagged as non-optimal.
    pub time_limit: Duration,
    /// Worker threads for the branch fan-out. Any value yields the same
    /// value, witness and node count.
    pub workers: usize,
    /// Vertices every candidate set must contain. `None` seeds the search
    /// with the simplicial vertices, which belong to every geodetic set and
    /// every hull set.
    pub must_include: Option<VertexSet>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: SolveMode::Geodetic,
            time_limit: Duration::from_secs(300),
            workers: 1,
            must_include: None,
        }
    }
}

impl SolveOptions {
    pub fn geodetic() -> Self {
        SolveOptions::default()
    }

    pub fn hull() -> Self {
        SolveOptions { mode: SolveMode::Hull, ..SolveOptions::default() }
    }
}

/// Search effort counters. `nodes` counts the partial sets the sequential
/// search order visits up to and including the winning branch, so it is
/// reproducible across worker counts; `elapsed` is wall clock and is not.
#[derive(Clone, Copy, Debug)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
    pub timed_out: bool,
}

/// Replayable evidence that the witness is valid.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// For each vertex `w`, the lexicographically first pair `(u, v)` of
    /// witness members with `w` on a shortest `u`-`v` path.
    Geodetic(Vec<(usize, usize)>),
    /// The strictly growing closure stages from the witness to the full
    /// vertex set.
    Hull(HullTrace),
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    /// Optimal and lexicographically smallest when `optimal` is set,
    /// otherwise the best set found before the time limit.
    pub witness: VertexSet,
    pub optimal: bool,
    pub certificate: Certificate,
    pub stats: SearchStats,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(
        "none of the {minimum_sets} minimum geodetic sets (size {factor_value}) \
         satisfies the pairwise interval condition"
    )]
    HypothesisFails { factor_value: usize, minimum_sets: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Product(#[from] ProductError),
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn bits_to_vec(words: &[u64], out: &mut Vec<usize>) {
    out.clear();
    for (i, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            out.push(i * 64 + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
}

/// Hull of `members` as raw words; `members` may be in any order.
fn hull_words(t: &IntervalTable, members: &[usize], full: &[u64]) -> Vec<u64> {
    let words = t.word_count();
    let mut cur: Vec<usize> = members.to_vec();
    let mut cur_words = vec![0u64; words];
    for &m in members {
        cur_words[m / 64] |= 1 << (m % 64);
    }
    loop {
        let mut next = vec![0u64; words];
        t.closure_into(&cur, &mut next);
        if next == cur_words || next == full {
            return next;
        }
        bits_to_vec(&next, &mut cur);
        cur_words = next;
    }
}

fn hull_is_full(t: &IntervalTable, members: &[usize], full: &[u64]) -> bool {
    hull_words(t, members, full) == full
}

fn coverage_full(t: &IntervalTable, mode: SolveMode, members: &[usize], full: &[u64]) -> bool {
    match mode {
        SolveMode::Geodetic => {
            let mut acc = vec![0u64; t.word_count()];
            t.closure_into(members, &mut acc);
            acc == full
        }
        SolveMode::Hull => hull_is_full(t, members, full),
    }
}

fn greedy_from(t: &IntervalTable, mode: SolveMode, seed: &[usize]) -> Vec<usize> {
    let n = t.order();
    let words = t.word_count();
    let full: Vec<u64> = VertexSet::full(n).words().to_vec();
    let mut chosen: Vec<usize> = seed.to_vec();
    chosen.sort_unstable();
    let mut in_chosen = vec![false; n];
    for &v in &chosen {
        in_chosen[v] = true;
    }
    loop {
        if !chosen.is_empty() && coverage_full(t, mode, &chosen, &full) {
            return chosen;
        }
        debug_assert!(chosen.len() < n, "the full vertex set always covers");
        let mut best_cov = 0usize;
        let mut best_v = usize::MAX;
        match mode {
            SolveMode::Geodetic => {
                let mut base = vec![0u64; words];
                t.closure_into(&chosen, &mut base);
                let mut trial = vec![0u64; words];
                for v in 0..n {
                    if in_chosen[v] {
                        continue;
                    }
                    trial.copy_from_slice(&base);
                    for &u in &chosen {
                        or_into(&mut trial, t.row(u, v));
                    }
                    or_into(&mut trial, t.row(v, v));
                    let cov = popcount(&trial);
                    if cov > best_cov {
                        best_cov = cov;
                        best_v = v;
                    }
                }
            }
            SolveMode::Hull => {
                let mut trial_members = Vec::with_capacity(chosen.len() + 1);
                for v in 0..n {
                    if in_chosen[v] {
                        continue;
                    }
                    trial_members.clear();
                    trial_members.extend_from_slice(&chosen);
                    trial_members.push(v);
                    let cov = popcount(&hull_words(t, &trial_members, &full));
                    if cov > best_cov {
                        best_cov = cov;
                        best_v = v;
                    }
                }
            }
        }
        chosen.push(best_v);
        chosen.sort_unstable();
        in_chosen[best_v] = true;
    }
}

/// Greedy covering set: starts from the simplicial vertices and repeatedly
/// adds the vertex whose addition covers the most (lowest index on ties).
/// Its size is the upper end of the deepening range.
pub fn greedy_upper_bound(t: &IntervalTable, mode: SolveMode) -> VertexSet {
    let seed = simplicial_vertices(t.graph());
    let chosen = greedy_from(t, mode, &seed.to_vec());
    VertexSet::from_members(t.order(), chosen)
}

struct SearchCtx<'a> {
    t: &'a IntervalTable,
    n: usize,
    words: usize,
    full: Vec<u64>,
    mode: SolveMode,
    seed: Vec<usize>,
    in_seed: Vec<bool>,
    /// `suffix_pairs[i]`: union of `I[v, w]` over all `i <= v <= w < n`.
    /// Everything any completion drawn from `i..` can still cover on its
    /// own, used by the infeasibility prune.
    suffix_pairs: Vec<Vec<u64>>,
    /// `nonseed_from[i]`: number of non-seed vertices in `i..n`.
    nonseed_from: Vec<usize>,
    deadline: Instant,
    stop: &'a AtomicBool,
}

struct DfsState<'a> {
    members: Vec<usize>,
    picks: Vec<usize>,
    clo: Vec<Vec<u64>>,
    scratch: Vec<u64>,
    nodes: u64,
    aborted: bool,
    branch_idx: usize,
    found_min: &'a AtomicUsize,
}

/// Visits every extension of the current partial set in ascending index
/// order. `sink` sees each valid completed set; returning `true` stops the
/// whole branch (first-witness mode), `false` keeps enumerating.
fn dfs(
    ctx: &SearchCtx,
    st: &mut DfsState,
    depth: usize,
    next: usize,
    r: usize,
    sink: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    st.nodes += 1;
    if st.nodes & 0xFFF == 0 {
        if ctx.stop.load(Ordering::Relaxed) || Instant::now() >= ctx.deadline {
            ctx.stop.store(true, Ordering::Relaxed);
            st.aborted = true;
            return false;
        }
        if st.found_min.load(Ordering::Relaxed) < st.branch_idx {
            st.aborted = true;
            return false;
        }
    }
    if r == 0 {
        let valid = match ctx.mode {
            SolveMode::Geodetic => st.clo[depth] == ctx.full,
            SolveMode::Hull => hull_is_full(ctx.t, &st.members, &ctx.full),
        };
        return valid && sink(&st.picks);
    }
    match ctx.mode {
        SolveMode::Geodetic => {
            // Even with every remaining candidate added, coverage stays
            // within closure(P) | pairs among the tail | pairs across; if
            // that union misses a vertex, no completion can work.
            st.scratch.copy_from_slice(&st.clo[depth]);
            or_into(&mut st.scratch, &ctx.suffix_pairs[next]);
            if st.scratch != ctx.full {
                'cross: for v in next..ctx.n {
                    if ctx.in_seed[v] {
                        continue;
                    }
                    for &u in &st.members {
                        or_into(&mut st.scratch, ctx.t.row(u, v));
                    }
                    if st.scratch == ctx.full {
                        break 'cross;
                    }
                }
                if st.scratch != ctx.full {
                    return false;
                }
            }
        }
        SolveMode::Hull => {
            let mut pool = st.members.clone();
            for v in next..ctx.n {
                if !ctx.in_seed[v] {
                    pool.push(v);
                }
            }
            if !hull_is_full(ctx.t, &pool, &ctx.full) {
                return false;
            }
        }
    }
    for v in next..ctx.n {
        if ctx.in_seed[v] {
            continue;
        }
        if ctx.nonseed_from[v] < r {
            break;
        }
        if ctx.mode == SolveMode::Geodetic {
            let (head, tail) = st.clo.split_at_mut(depth + 1);
            let child = &mut tail[0];
            child.copy_from_slice(&head[depth]);
            for &u in &st.members {
                or_into(child, ctx.t.row(u, v));
            }
            or_into(child, ctx.t.row(v, v));
        }
        st.members.push(v);
        st.picks.push(v);
        let stop = dfs(ctx, st, depth + 1, v + 1, r - 1, sink);
        st.members.pop();
        st.picks.pop();
        if stop {
            return true;
        }
        if st.aborted {
            return false;
        }
    }
    false
}

#[derive(Clone, Debug)]
struct BranchOut {
    found: Option<Vec<usize>>,
    nodes: u64,
    complete: bool,
}

fn run_branch(
    ctx: &SearchCtx,
    r: usize,
    v0: usize,
    branch_idx: usize,
    found_min: &AtomicUsize,
) -> BranchOut {
    let words = ctx.words;
    let mut st = DfsState {
        members: ctx.seed.clone(),
        picks: Vec::with_capacity(r),
        clo: vec![vec![0u64; words]; r + 1],
        scratch: vec![0u64; words],
        nodes: 0,
        aborted: false,
        branch_idx,
        found_min,
    };
    if ctx.mode == SolveMode::Geodetic {
        let (head, tail) = st.clo.split_at_mut(1);
        ctx.t.closure_into(&ctx.seed, &mut head[0]);
        tail[0].copy_from_slice(&head[0]);
        for &u in &st.members {
            or_into(&mut tail[0], ctx.t.row(u, v0));
        }
        or_into(&mut tail[0], ctx.t.row(v0, v0));
    }
    st.members.push(v0);
    st.picks.push(v0);
    let mut found: Option<Vec<usize>> = None;
    dfs(ctx, &mut st, 1, v0 + 1, r - 1, &mut |picks| {
        found = Some(picks.to_vec());
        true
    });
    BranchOut { found, nodes: st.nodes, complete: !st.aborted }
}

enum LevelOutcome {
    Found { picks: Vec<usize>, nodes: u64 },
    Exhausted { nodes: u64 },
    TimedOut { nodes: u64, best: Option<Vec<usize>> },
}

fn run_level(ctx: &SearchCtx, k: usize, workers: usize) -> LevelOutcome {
    let r = k - ctx.seed.len();
    if r == 0 {
        let ok = coverage_full(ctx.t, ctx.mode, &ctx.seed, &ctx.full);
        return if ok {
            LevelOutcome::Found { picks: Vec::new(), nodes: 1 }
        } else {
            LevelOutcome::Exhausted { nodes: 1 }
        };
    }
    let branches: Vec<usize> =
        (0..ctx.n).filter(|&v| !ctx.in_seed[v] && ctx.nonseed_from[v] >= r).collect();
    if branches.is_empty() {
        return LevelOutcome::Exhausted { nodes: 0 };
    }
    let nb = branches.len();
    let found_min = AtomicUsize::new(usize::MAX);
    let mut outs: Vec<Option<BranchOut>> = vec![None; nb];
    let w = workers.max(1).min(nb);
    if w == 1 {
        for (i, &v0) in branches.iter().enumerate() {
            if ctx.stop.load(Ordering::Relaxed) {
                break;
            }
            let out = run_branch(ctx, r, v0, i, &found_min);
            let hit = out.found.is_some();
            outs[i] = Some(out);
            if hit {
                found_min.fetch_min(i, Ordering::Relaxed);
                break;
            }
        }
    } else {
        let parts: Vec<Vec<(usize, BranchOut)>> = thread::scope(|s| {
            let handles: Vec<_> = (0..w)
                .map(|wi| {
                    let branches = &branches;
                    let found_min = &found_min;
                    s.spawn(move || {
                        let mut local = Vec::new();
                        let mut i = wi;
                        while i < nb {
                            if ctx.stop.load(Ordering::Relaxed) {
                                break;
                            }
                            // Only branches above an already found witness
                            // may be skipped; everything at or below the
                            // eventual winner runs to completion.
                            if found_min.load(Ordering::Relaxed) < i {
                                i += w;
                                continue;
                            }
                            let out = run_branch(ctx, r, branches[i], i, found_min);
                            if out.found.is_some() {
                                found_min.fetch_min(i, Ordering::Relaxed);
                            }
                            local.push((i, out));
                            i += w;
                        }
                        local
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        });
        for part in parts {
            for (i, out) in part {
                outs[i] = Some(out);
            }
        }
    }
    let stopped = ctx.stop.load(Ordering::Relaxed);
    let winner = outs
        .iter()
        .enumerate()
        .find(|(_, o)| o.as_ref().is_some_and(|b| b.found.is_some()))
        .map(|(i, _)| i);
    if stopped {
        let nodes = outs.iter().flatten().map(|b| b.nodes).sum();
        let best = winner.and_then(|i| outs[i].as_ref().and_then(|b| b.found.clone()));
        return LevelOutcome::TimedOut { nodes, best };
    }
    match winner {
        Some(i) => {
            debug_assert!(outs[..i].iter().all(|o| o.as_ref().is_some_and(|b| b.complete)));
            let nodes = outs[..=i].iter().flatten().map(|b| b.nodes).sum();
            let picks = outs[i].take().and_then(|b| b.found).expect("winner carries a witness");
            LevelOutcome::Found { picks, nodes }
        }
        None => {
            debug_assert!(outs.iter().all(|o| o.as_ref().is_some_and(|b| b.complete)));
            LevelOutcome::Exhausted { nodes: outs.iter().flatten().map(|b| b.nodes).sum() }
        }
    }
}

fn build_ctx<'a>(
    t: &'a IntervalTable,
    mode: SolveMode,
    seed: &[usize],
    deadline: Instant,
    stop: &'a AtomicBool,
) -> SearchCtx<'a> {
    let n = t.order();
    let words = t.word_count();
    let mut in_seed = vec![false; n];
    for &v in seed {
        in_seed[v] = true;
    }
    let mut suffix_pairs = vec![vec![0u64; words]; n + 1];
    for i in (0..n).rev() {
        let (head, tail) = suffix_pairs.split_at_mut(i + 1);
        head[i].copy_from_slice(&tail[0]);
        for w in i..n {
            or_into(&mut head[i], t.row(i, w));
        }
    }
    let mut nonseed_from = vec![0usize; n + 1];
    for i in (0..n).rev() {
        nonseed_from[i] = nonseed_from[i + 1] + usize::from(!in_seed[i]);
    }
    SearchCtx {
        t,
        n,
        words,
        full: VertexSet::full(n).words().to_vec(),
        mode,
        seed: seed.to_vec(),
        in_seed,
        suffix_pairs,
        nonseed_from,
        deadline,
        stop,
    }
}

fn covering_pairs(t: &IntervalTable, members: &[usize]) -> Vec<(usize, usize)> {
    let n = t.order();
    (0..n)
        .map(|w| {
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i..] {
                    if t.row(u, v)[w / 64] >> (w % 64) & 1 == 1 {
                        return (u, v);
                    }
                }
            }
            unreachable!("witness sets are validated before certification")
        })
        .collect()
}

/// Exact minimum for `opts.mode` on the graph behind `t`.
///
/// The witness is the lexicographically smallest optimal set whenever
/// `optimal` is set in the result. On timeout the result carries the best
/// known upper bound (a valid but possibly oversized set) and `optimal` is
/// cleared.
pub fn solve(t: &IntervalTable, opts: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    let n = t.order();
    let seed_set = match &opts.must_include {
        Some(s) => {
            assert_eq!(s.universe(), n, "must_include universe does not match the graph order");
            s.clone()
        }
        None => simplicial_vertices(t.graph()),
    };
    let seed = seed_set.to_vec();
    let greedy = greedy_from(t, opts.mode, &seed);
    let upper = greedy.len();
    let k0 = seed.len().max(1);
    let stop = AtomicBool::new(false);
    let ctx = build_ctx(t, opts.mode, &seed, start + opts.time_limit, &stop);

    let mut total_nodes = 0u64;
    let mut outcome: Option<(usize, Vec<usize>, bool)> = None;
    for k in k0..=upper {
        match run_level(&ctx, k, opts.workers) {
            LevelOutcome::Exhausted { nodes } => total_nodes += nodes,
            LevelOutcome::Found { picks, nodes } => {
                total_nodes += nodes;
                outcome = Some((k, picks, true));
                break;
            }
            LevelOutcome::TimedOut { nodes, best } => {
                total_nodes += nodes;
                outcome = best.map(|picks| (k, picks, false));
                break;
            }
        }
    }
    let timed_out = stop.load(Ordering::Relaxed);
    let (value, mut members, optimal) = match outcome {
        Some((k, picks, opt)) => {
            let mut m = seed.clone();
            m.extend(picks);
            (k, m, opt && !timed_out)
        }
        None if timed_out => (upper, greedy, false),
        None => unreachable!("the greedy set solves the last level of the deepening range"),
    };
    members.sort_unstable();
    let witness = VertexSet::from_members(n, members.iter().copied());
    let certificate = match opts.mode {
        SolveMode::Geodetic => Certificate::Geodetic(covering_pairs(t, &members)),
        SolveMode::Hull => {
            Certificate::Hull(t.convex_hull(&witness).expect("witness is never empty"))
        }
    };
    SolveResult {
        value,
        witness,
        optimal,
        certificate,
        stats: SearchStats { nodes: total_nodes, elapsed: start.elapsed(), timed_out },
    }
}

/// Minimum geodetic set; `opts.mode` is overridden.
pub fn geodetic_number(t: &IntervalTable, opts: &SolveOptions) -> SolveResult {
    solve(t, &SolveOptions { mode: SolveMode::Geodetic, ..opts.clone() })
}

/// Minimum hull set; `opts.mode` is overridden.
pub fn hull_number(t: &IntervalTable, opts: &SolveOptions) -> SolveResult {
    solve(t, &SolveOptions { mode: SolveMode::Hull, ..opts.clone() })
}

/// All optimal sets for `opts.mode`, in lexicographic order. Runs the
/// regular solve first to pin the optimum, then sweeps that level again
/// collecting every solution instead of stopping at the first.
pub fn enumerate_minimum_sets(t: &IntervalTable, opts: &SolveOptions) -> Vec<VertexSet> {
    let base = solve(t, opts);
    let n = t.order();
    let seed_set = match &opts.must_include {
        Some(s) => s.clone(),
        None => simplicial_vertices(t.graph()),
    };
    let seed = seed_set.to_vec();
    let r = base.value - seed.len();
    if r == 0 {
        return vec![base.witness];
    }
    let stop = AtomicBool::new(false);
    let ctx = build_ctx(t, opts.mode, &seed, Instant::now() + opts.time_limit, &stop);
    let found_min = AtomicUsize::new(usize::MAX);
    let mut sets = Vec::new();
    let words = ctx.words;
    for v0 in 0..n {
        if ctx.in_seed[v0] || ctx.nonseed_from[v0] < r {
            continue;
        }
        let mut st = DfsState {
            members: seed.clone(),
            picks: Vec::with_capacity(r),
            clo: vec![vec![0u64; words]; r + 1],
            scratch: vec![0u64; words],
            nodes: 0,
            aborted: false,
            branch_idx: 0,
            found_min: &found_min,
        };
        if ctx.mode == SolveMode::Geodetic {
            let (head, tail) = st.clo.split_at_mut(1);
            ctx.t.closure_into(&seed, &mut head[0]);
            tail[0].copy_from_slice(&head[0]);
            for &u in &st.members {
                or_into(&mut tail[0], ctx.t.row(u, v0));
            }
            or_into(&mut tail[0], ctx.t.row(v0, v0));
        }
        st.members.push(v0);
        st.picks.push(v0);
        dfs(&ctx, &mut st, 1, v0 + 1, r - 1, &mut |picks| {
            let mut m = seed.clone();
            m.extend_from_slice(picks);
            sets.push(VertexSet::from_members(n, m));
            false
        });
    }
    sets
}

/// One inequality from the product bound catalogue, stated as
/// `lhs <= rhs`. Bounds whose hypothesis the instance does not meet are
/// carried with `applicable` cleared and count as holding.
#[derive(Clone, Copy, Debug)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: usize,
    pub rhs: usize,
    pub applicable: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        !self.applicable || self.lhs <= self.rhs
    }
}

/// Factor and product invariants side by side with every applicable bound
/// between them evaluated.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub left_g: SolveResult,
    pub left_h: SolveResult,
    pub right_g: SolveResult,
    pub right_h: SolveResult,
    pub product_g: SolveResult,
    pub product_h: SolveResult,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(BoundCheck::holds)
    }

    pub fn all_optimal(&self) -> bool {
        [
            &self.left_g,
            &self.left_h,
            &self.right_g,
            &self.right_h,
            &self.product_g,
            &self.product_h,
        ]
        .iter()
        .all(|r| r.optimal)
    }
}

/// Solves both invariants on both factors and their strong product, then
/// evaluates the bound catalogue: the geodetic number of the product is at
/// least the smaller factor geodetic number (and at least 4 for factors
/// with two or more vertices each), at most the product of the factor
/// geodetic numbers; the hull number of the product is at least 2, at most
/// the product of the factor hull numbers, and collapses to a factor hull
/// number when that factor has no simplicial vertex.
pub fn bounds_report(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundsReport, SolveError> {
    let p = strong_product(g, h)?;
    let tg = IntervalTable::new(g);
    let th = IntervalTable::new(h);
    let tp = IntervalTable::new(p.graph());
    let base = SolveOptions { must_include: None, ..opts.clone() };
    let left_g = geodetic_number(&tg, &base);
    let left_h = hull_number(&tg, &base);
    let right_g = geodetic_number(&th, &base);
    let right_h = hull_number(&th, &base);
    let product_g = geodetic_number(&tp, &base);
    let product_h = hull_number(&tp, &base);
    let nontrivial = g.order() >= 2 && h.order() >= 2;
    let left_no_extreme = simplicial_vertices(g).is_empty();
    let right_no_extreme = simplicial_vertices(h).is_empty();
    let checks = vec![
        BoundCheck {
            name: "smaller factor geodetic number <= product geodetic number",
            lhs: left_g.value.min(right_g.value),
            rhs: product_g.value,
            applicable: true,
        },
        BoundCheck {
            name: "product geodetic number <= product of factor geodetic numbers",
            lhs: product_g.value,
            rhs: left_g.value * right_g.value,
            applicable: true,
        },
        BoundCheck {
            name: "4 <= product geodetic number for nontrivial factors",
            lhs: 4,
            rhs: product_g.value,
            applicable: nontrivial,
        },
        BoundCheck {
            name: "2 <= product hull number for nontrivial factors",
            lhs: 2,
            rhs: product_h.value,
            applicable: nontrivial,
        },
        BoundCheck {
            name: "product hull number <= product of factor hull numbers",
            lhs: product_h.value,
            rhs: left_h.value * right_h.value,
            applicable: true,
        },
        BoundCheck {
            name: "product hull number <= left factor hull number (no simplicial vertex)",
            lhs: product_h.value,
            rhs: left_h.value,
            applicable: left_no_extreme,
        },
        BoundCheck {
            name: "product hull number <= right factor hull number (no simplicial vertex)",
            lhs: product_h.value,
            rhs: right_h.value,
            applicable: right_no_extreme,
        },
    ];
    Ok(BoundsReport { left_g, left_h, right_g, right_h, product_g, product_h, checks })
}

/// Outcome of the collapse verification on `G` and `K_n`.
#[derive(Clone, Debug)]
pub struct CollapseReport {
    /// Geodetic number of the factor.
    pub factor_value: usize,
    /// How many minimum geodetic sets the factor has.
    pub minimum_sets: usize,
    /// Lexicographically first minimum geodetic set satisfying the
    /// pairwise interval condition.
    pub witness: VertexSet,
    /// Geodetic number of the product with the complete graph.
    pub product_value: usize,
    /// Whether the product value collapsed to the factor value.
    pub holds: bool,
}

/// Verifies that a minimum geodetic set in which every member lies on a
/// shortest path between two others forces `g(G boxtimes K_n) = g(G)`.
///
/// Scans all minimum geodetic sets of `g` in lexicographic order for one
/// satisfying the condition; if none does the hypothesis is unavailable
/// and the verification reports [`SolveError::HypothesisFails`].
pub fn verify_condition_a_collapse(
    g: &Graph,
    n: usize,
    opts: &SolveOptions,
) -> Result<CollapseReport, SolveError> {
    let t = IntervalTable::new(g);
    let base =
        SolveOptions { mode: SolveMode::Geodetic, must_include: None, ..opts.clone() };
    let sets = enumerate_minimum_sets(&t, &base);
    let factor_value = sets.first().map_or(0, VertexSet::len);
    let witness = sets
        .iter()
        .find(|s| t.condition_a(s).expect("enumerated sets are in range"))
        .cloned()
        .ok_or(SolveError::HypothesisFails { factor_value, minimum_sets: sets.len() })?;
    let kn = make_family(&FamilySpec::Complete(n))?;
    let p = strong_product(g, &kn)?;
    let tp = IntervalTable::new(p.graph());
    let product = geodetic_number(&tp, &base);
    Ok(CollapseReport {
        factor_value,
        minimum_sets: sets.len(),
        witness,
        product_value: product.value,
        holds: product.value == factor_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};
    use crate::product::strong_product;

    fn table(spec: FamilySpec) -> IntervalTable {
        IntervalTable::new(&make_family(&spec).unwrap())
    }

    fn product_table(a: FamilySpec, b: FamilySpec) -> IntervalTable {
        let g = make_family(&a).unwrap();
        let h = make_family(&b).unwrap();
        IntervalTable::new(strong_product(&g, &h).unwrap().graph())
    }

    #[test]
    fn greedy_covers_paths_and_cliques() {
        let t = table(FamilySpec::Path(6));
        assert_eq!(greedy_upper_bound(&t, SolveMode::Geodetic).to_vec(), vec![0, 5]);
        let t = table(FamilySpec::Complete(5));
        assert_eq!(greedy_upper_bound(&t, SolveMode::Geodetic).len(), 5);
    }

    #[test]
    fn geodetic_even_cycle_picks_antipodal_pair() {
        let t = table(FamilySpec::Cycle(8));
        let r = geodetic_number(&t, &SolveOptions::default());
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 4]);
        assert!(r.optimal);
        let Certificate::Geodetic(pairs) = &r.certificate else {
            panic!("geodetic solve must carry pair certificates")
        };
        assert_eq!(pairs[0], (0, 0));
        assert_eq!(pairs[1], (0, 4));
        let t2 = IntervalTable::new(t.graph());
        for (w, &(u, v)) in pairs.iter().enumerate() {
            assert!(t2.interval(u, v).unwrap().contains(w));
        }
    }

    #[test]
    fn closed_form_families_match() {
        for (spec, g, h) in [
            (FamilySpec::Complete(4), 4, 4),
            (FamilySpec::Star(6), 5, 5),
            (FamilySpec::Cycle(7), 3, 3),
            (FamilySpec::Cycle(6), 2, 2),
            (FamilySpec::Wheel(6), 3, 3),
            (FamilySpec::CompleteBipartite(2, 3), 2, 2),
        ] {
            let t = table(spec.clone());
            assert_eq!(geodetic_number(&t, &SolveOptions::default()).value, g, "{spec}");
            assert_eq!(hull_number(&t, &SolveOptions::hull()).value, h, "{spec}");
        }
    }

    #[test]
    fn hull_on_odd_cycle_needs_three() {
        let t = table(FamilySpec::Cycle(5));
        let r = hull_number(&t, &SolveOptions::hull());
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.to_vec(), vec![0, 1, 3]);
        let Certificate::Hull(trace) = &r.certificate else {
            panic!("hull solve must carry a stage trace")
        };
        assert!(trace.hull().is_full());
    }

    #[test]
    fn forced_vertices_shift_the_witness() {
        let t = table(FamilySpec::Cycle(8));
        let opts = SolveOptions {
            must_include: Some(VertexSet::from_members(8, [2])),
            ..SolveOptions::default()
        };
        let r = geodetic_number(&t, &opts);
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_vec(), vec![2, 6]);
    }

    #[test]
    fn product_values_match_reference() {
        let t = product_table(FamilySpec::Complete(3), FamilySpec::Cycle(4));
        assert_eq!(geodetic_number(&t, &SolveOptions::default()).value, 4);
        assert_eq!(hull_number(&t, &SolveOptions::hull()).value, 2);
        let t = product_table(FamilySpec::Cycle(5), FamilySpec::Cycle(7));
        let r = hull_number(&t, &SolveOptions::hull());
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 10]);
    }

    #[test]
    fn torus_witness_is_lexicographically_first() {
        let t = product_table(FamilySpec::Cycle(5), FamilySpec::Cycle(4));
        let r = geodetic_number(&t, &SolveOptions::default());
        assert_eq!(r.value, 5);
        assert_eq!(r.witness.to_vec(), vec![0, 5, 11, 12, 18]);
    }

    #[test]
    fn worker_count_never_changes_the_answer() {
        let t = product_table(FamilySpec::Cycle(5), FamilySpec::Cycle(6));
        let lone = geodetic_number(&t, &SolveOptions::default());
        let wide = geodetic_number(&t, &SolveOptions { workers: 4, ..SolveOptions::default() });
        assert_eq!(lone.value, wide.value);
        assert_eq!(lone.witness, wide.witness);
        assert_eq!(lone.stats.nodes, wide.stats.nodes);
        assert_eq!(lone.value, 6);
    }

    #[test]
    fn expired_budget_returns_upper_bound() {
        let t = product_table(FamilySpec::Cycle(5), FamilySpec::Cycle(5));
        let opts = SolveOptions { time_limit: Duration::ZERO, ..SolveOptions::default() };
        let r = geodetic_number(&t, &opts);
        assert!(!r.optimal);
        assert!(r.stats.timed_out);
        assert!(t.is_geodetic(&r.witness).unwrap());
        assert!(r.value >= 5);
    }

    #[test]
    fn minimum_sets_of_even_cycle_are_the_antipodal_pairs() {
        let t = table(FamilySpec::Cycle(8));
        let sets = enumerate_minimum_sets(&t, &SolveOptions::default());
        let flat: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
        assert_eq!(flat, vec![vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]);
    }

    #[test]
    fn collapse_holds_when_a_witness_satisfies_the_condition() {
        let g = make_family(&FamilySpec::CompleteBipartite(4, 4)).unwrap();
        let report = verify_condition_a_collapse(&g, 2, &SolveOptions::default()).unwrap();
        assert_eq!(report.factor_value, 4);
        assert_eq!(report.witness.to_vec(), vec![0, 1, 4, 5]);
        assert_eq!(report.product_value, 4);
        assert!(report.holds);
    }

    #[test]
    fn collapse_reports_when_no_witness_qualifies() {
        let g = make_family(&FamilySpec::Cycle(8)).unwrap();
        let err = verify_condition_a_collapse(&g, 4, &SolveOptions::default()).unwrap_err();
        match err {
            SolveError::HypothesisFails { factor_value, minimum_sets } => {
                assert_eq!(factor_value, 2);
                assert_eq!(minimum_sets, 4);
            }
            other => panic!("expected hypothesis failure, got {other}"),
        }
    }

    #[test]
    fn bounds_catalogue_on_a_cycle_path_product() {
        let g = make_family(&FamilySpec::Cycle(5)).unwrap();
        let h = make_family(&FamilySpec::Path(4)).unwrap();
        let report = bounds_report(&g, &h, &SolveOptions::default()).unwrap();
        assert_eq!(report.left_g.value, 3);
        assert_eq!(report.right_g.value, 2);
        assert_eq!(report.product_g.value, 6);
        assert_eq!(report.product_h.value, 2);
        assert!(report.all_hold());
        assert!(report.all_optimal());
        let collapse_left = report
            .checks
            .iter()
            .find(|c| c.name.contains("left factor hull"))
            .unwrap();
        assert!(collapse_left.applicable);
        let collapse_right = report
            .checks
            .iter()
            .find(|c| c.name.contains("right factor hull"))
            .unwrap();
        assert!(!collapse_right.applicable);
    }
}
