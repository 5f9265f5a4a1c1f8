//! Brute-force FAT oracle: enumerate set partitions of the vertex set as
//! restricted-growth strings (RGS), validate each exactly, and report the
//! FAT chromatic number with a canonical witness.
//!
//! The DFS over RGS prefixes prunes on completed vertices: once every
//! neighbor of a non-isolated vertex is assigned, its neighbor counts into
//! the existing classes are final, so they must all agree on one candidate
//! `alpha` shared with every other completed vertex. Classes opened after a
//! vertex completes can never contain its neighbors, which forces
//! `alpha = 0` for the whole branch. Both checks only discard prefixes that
//! cannot extend to a FAT coloring; leaves still go through [`validate_fat`].

use crate::coloring::{validate_fat, Coloring, FatWitness};
use crate::graph::Graph;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};
use serde::Serialize;
use thiserror::Error;

/// Default cap for full partition enumeration (Bell(13) ≈ 27.6M).
pub const DEFAULT_FULL_ENUM_CAP: usize = 13;
/// Cap for class-count-restricted enumeration with small k.
pub const DEFAULT_RESTRICTED_ENUM_CAP: usize = 20;
/// Largest k for which the restricted cap applies.
pub const RESTRICTED_K_LIMIT: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph on {n} vertices exceeds the enumeration cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("search requires a nonempty graph")]
    EmptyGraph,
    #[error("no FAT coloring with exactly {k} classes exists")]
    NoColoringFound { k: usize },
}

/// Outcome of a brute-force search. `witness_coloring` is the
/// lexicographically first RGS among the maximum-k FAT colorings.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub chi_fat: usize,
    pub witness_coloring: Coloring,
    pub witness: FatWitness,
    /// Complete partitions handed to the exact validator (pruned subtrees
    /// are not counted).
    pub partitions_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    /// Equality ignoring `elapsed`, for determinism checks.
    pub fn same_result(&self, other: &SearchReport) -> bool {
        self.chi_fat == other.chi_fat
            && self.witness_coloring == other.witness_coloring
            && self.witness == other.witness
            && self.partitions_examined == other.partitions_examined
    }
}

/// Search knobs; `max_n: None` applies the default caps.
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub max_n: Option<usize>,
    pub workers: usize,
    /// Restrict to partitions with exactly this many classes.
    pub k_filter: Option<usize>,
}

impl SearchOptions {
    fn effective_cap(&self) -> usize {
        self.max_n.unwrap_or(match self.k_filter {
            Some(k) if k <= RESTRICTED_K_LIMIT => DEFAULT_RESTRICTED_ENUM_CAP,
            _ => DEFAULT_FULL_ENUM_CAP,
        })
    }
}

/// Lexicographic stream of all set partitions of `{0..n}` in canonical RGS
/// form, exactly Bell(n) items.
pub fn enumerate_partitions(n: usize) -> Result<RgsIter, SearchError> {
    enumerate_partitions_capped(n, DEFAULT_FULL_ENUM_CAP)
}

pub fn enumerate_partitions_capped(n: usize, cap: usize) -> Result<RgsIter, SearchError> {
    if n == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if n > cap {
        return Err(SearchError::SizeCap { n, cap });
    }
    Ok(RgsIter::new(n))
}

/// Iterator over restricted-growth strings of length n in lexicographic
/// order (Knuth 7.2.1.5, Algorithm H).
pub struct RgsIter {
    a: Vec<usize>,
    b: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgsIter {
    fn new(n: usize) -> Self {
        Self {
            a: vec![0; n],
            b: vec![1; n],
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.a.len();
        for i in (1..n).rev() {
            if self.a[i] < self.b[i] {
                self.a[i] += 1;
                let grow = self.b[i].max(self.a[i] + 1);
                for j in i + 1..n {
                    self.a[j] = 0;
                    self.b[j] = grow;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RgsIter {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Coloring::from_rgs(&self.a))
    }
}

/// Reduced candidate fraction; degrees fit comfortably in u64.
fn reduce(num: u64, den: u64) -> (u64, u64) {
    let g = num_integer::gcd(num, den);
    (num / g, den / g)
}

fn unify(pin: Option<(u64, u64)>, cand: (u64, u64)) -> Option<Option<(u64, u64)>> {
    match pin {
        None => Some(Some(cand)),
        Some(p) if p == cand => Some(pin),
        Some(_) => None,
    }
}

/// Precomputed per-graph tables for the pruned DFS.
struct SearchTables {
    /// completed_after[p] = non-isolated vertices whose last neighbor (and
    /// themselves) sit in positions 0..=p.
    completed_after: Vec<Vec<usize>>,
    degrees: Vec<u64>,
}

impl SearchTables {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut completed_after = vec![Vec::new(); n];
        for v in 0..n {
            if let Some(&last) = g.neighbors(v).last() {
                completed_after[last.max(v)].push(v);
            }
        }
        Self {
            completed_after,
            degrees: (0..n).map(|v| g.degree(v) as u64).collect(),
        }
    }
}

/// Mutable DFS state. `pin` is the only candidate alpha consistent with all
/// completed vertices so far; `completed` counts them.
struct DfsState {
    rgs: Vec<usize>,
    counts: Vec<u64>,
    examined: u64,
}

#[derive(Clone, Copy)]
struct BranchCtx {
    pin: Option<(u64, u64)>,
    completed: usize,
    classes: usize,
}

struct Searcher<'g, F> {
    g: &'g Graph,
    tables: &'g SearchTables,
    k_filter: Option<usize>,
    on_accept: F,
}

impl<'g, F: FnMut(&Coloring, &FatWitness)> Searcher<'g, F> {
    /// Process the consequences of assigning class `class` at position `p`.
    /// Returns the updated context, or None when the branch cannot extend to
    /// any FAT coloring.
    fn apply(&self, st: &mut DfsState, p: usize, class: usize, ctx: BranchCtx) -> Option<BranchCtx> {
        let new_class = class == ctx.classes;
        let mut pin = ctx.pin;
        let mut completed = ctx.completed;
        if new_class && completed > 0 {
            // A class opened now is invisible to already-completed vertices,
            // so alpha must be 0 on this branch.
            pin = unify(pin, (0, 1))?;
        }
        st.rgs[p] = class;
        let classes = ctx.classes + usize::from(new_class);
        for &v in &self.tables.completed_after[p] {
            let counts = &mut st.counts[..classes];
            counts.iter_mut().for_each(|x| *x = 0);
            for &w in self.g.neighbors(v) {
                counts[st.rgs[w]] += 1;
            }
            let own = st.rgs[v];
            let mut common: Option<u64> = None;
            for (c, &cnt) in counts.iter().enumerate() {
                if c == own {
                    continue;
                }
                match common {
                    None => common = Some(cnt),
                    Some(x) if x != cnt => return None,
                    Some(_) => {}
                }
            }
            completed += 1;
            if let Some(a) = common {
                pin = unify(pin, reduce(a, self.tables.degrees[v]))?;
            }
        }
        if let Some((a, d)) = pin {
            // beta >= 0 needs (k-1)*alpha <= 1, and k only grows from here.
            if a > 0 && (classes as u64 - 1) * a > d {
                return None;
            }
        }
        Some(BranchCtx {
            pin,
            completed,
            classes,
        })
    }

    fn leaf(&mut self, st: &mut DfsState) {
        if let Some(kf) = self.k_filter {
            let classes = st.rgs.iter().copied().max().map_or(0, |m| m + 1);
            if classes != kf {
                return;
            }
        }
        st.examined += 1;
        let coloring = Coloring::from_rgs(&st.rgs);
        if let Ok(witness) = validate_fat(self.g, &coloring) {
            (self.on_accept)(&coloring, &witness);
        }
    }

    fn dfs(&mut self, st: &mut DfsState, p: usize, ctx: BranchCtx) {
        if p == st.rgs.len() {
            self.leaf(st);
            return;
        }
        let mut top = ctx.classes;
        if let Some(kf) = self.k_filter {
            top = top.min(kf.saturating_sub(1));
            // Even opening a class at every remaining position cannot reach
            // the requested class count.
            if ctx.classes + (st.rgs.len() - p) < kf {
                return;
            }
        }
        for class in 0..=top {
            if let Some(next) = self.apply(st, p, class, ctx) {
                self.dfs(st, p + 1, next);
            }
        }
    }

    /// Re-run the assignment events for a fixed prefix; None if pruned.
    fn replay(&self, st: &mut DfsState, prefix: &[usize]) -> Option<BranchCtx> {
        let mut ctx = BranchCtx {
            pin: None,
            completed: 0,
            classes: 0,
        };
        for (p, &class) in prefix.iter().enumerate() {
            ctx = self.apply(st, p, class, ctx)?;
        }
        Some(ctx)
    }
}

fn root_ctx() -> BranchCtx {
    BranchCtx {
        pin: None,
        completed: 0,
        classes: 0,
    }
}

fn run_dfs<F: FnMut(&Coloring, &FatWitness)>(
    g: &Graph,
    tables: &SearchTables,
    k_filter: Option<usize>,
    on_accept: F,
) -> u64 {
    let n = g.vertex_count();
    let mut st = DfsState {
        rgs: vec![0; n],
        counts: vec![0; n],
        examined: 0,
    };
    let mut searcher = Searcher {
        g,
        tables,
        k_filter,
        on_accept,
    };
    searcher.dfs(&mut st, 0, root_ctx());
    st.examined
}

#[derive(Clone)]
struct BestSoFar {
    k: usize,
    coloring: Option<Coloring>,
    witness: Option<FatWitness>,
}

impl BestSoFar {
    fn new() -> Self {
        Self {
            k: 0,
            coloring: None,
            witness: None,
        }
    }

    fn offer(&mut self, c: &Coloring, w: &FatWitness) {
        // Strict improvement only: DFS order is lexicographic, so the first
        // maximum-k hit is the lexicographically smallest RGS.
        if w.k > self.k {
            self.k = w.k;
            self.coloring = Some(c.clone());
            self.witness = Some(w.clone());
        }
    }

    fn merge(&mut self, other: BestSoFar) {
        if other.k > self.k {
            *self = other;
        }
    }
}

fn check_cap(g: &Graph, opts: &SearchOptions) -> Result<(), SearchError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SearchError::EmptyGraph);
    }
    let cap = opts.effective_cap();
    if n > cap {
        return Err(SearchError::SizeCap { n, cap });
    }
    Ok(())
}

/// Brute-force FAT chromatic number over all set partitions.
pub fn fat_chromatic_brute(g: &Graph) -> Result<SearchReport, SearchError> {
    search_with(g, &SearchOptions::default())
}

/// Parallel brute force; the report is identical to the sequential one
/// except for `elapsed`.
pub fn search_parallel(g: &Graph, workers: usize) -> Result<SearchReport, SearchError> {
    search_with(
        g,
        &SearchOptions {
            workers,
            ..Default::default()
        },
    )
}

pub fn search_with(g: &Graph, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    check_cap(g, opts)?;
    let start = Instant::now();
    let tables = SearchTables::new(g);
    let (best, examined) = if opts.workers > 1 {
        parallel_best(g, &tables, opts)
    } else {
        let mut best = BestSoFar::new();
        let examined = run_dfs(g, &tables, opts.k_filter, |c, w| best.offer(c, w));
        (best, examined)
    };
    // Without a class-count filter, k = 1 always validates, so the search
    // cannot come back empty.
    let (coloring, witness) = match (best.coloring, best.witness) {
        (Some(c), Some(w)) => (c, w),
        _ => {
            return Err(SearchError::NoColoringFound {
                k: opts.k_filter.unwrap_or(0),
            })
        }
    };
    Ok(SearchReport {
        chi_fat: best.k,
        witness_coloring: coloring,
        witness,
        partitions_examined: examined,
        elapsed: start.elapsed(),
    })
}

/// All FAT colorings of `g` in lexicographic RGS order, optionally only
/// those with exactly `k` classes.
pub fn all_fat_colorings(
    g: &Graph,
    k: Option<usize>,
) -> Result<Vec<(Coloring, FatWitness)>, SearchError> {
    all_fat_colorings_with(
        g,
        &SearchOptions {
            k_filter: k,
            ..Default::default()
        },
    )
}

pub fn all_fat_colorings_with(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<Vec<(Coloring, FatWitness)>, SearchError> {
    check_cap(g, opts)?;
    let tables = SearchTables::new(g);
    let mut catalog = Vec::new();
    run_dfs(g, &tables, opts.k_filter, |c, w| {
        catalog.push((c.clone(), w.clone()));
    });
    Ok(catalog)
}

/// Split work over RGS prefixes. Prefixes are enumerated in lexicographic
/// order and results merged in that same order, so the outcome (including
/// the tie-break) is independent of worker scheduling.
fn parallel_best(g: &Graph, tables: &SearchTables, opts: &SearchOptions) -> (BestSoFar, u64) {
    let n = g.vertex_count();
    let workers = opts.workers.max(1);
    let depth = prefix_depth(n, workers);
    let prefixes = rgs_prefixes(n, depth, opts.k_filter);
    let slots: Mutex<Vec<Option<(BestSoFar, u64)>>> = Mutex::new(vec![None; prefixes.len()]);
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(prefixes.len()) {
            scope.spawn(|| {
                let mut st = DfsState {
                    rgs: vec![0; n],
                    counts: vec![0; n],
                    examined: 0,
                };
                loop {
                    let idx = cursor.fetch_add(1, Ordering::Relaxed);
                    if idx >= prefixes.len() {
                        break;
                    }
                    st.examined = 0;
                    let mut best = BestSoFar::new();
                    let mut searcher = Searcher {
                        g,
                        tables,
                        k_filter: opts.k_filter,
                        on_accept: |c: &Coloring, w: &FatWitness| best.offer(c, w),
                    };
                    if let Some(ctx) = searcher.replay(&mut st, &prefixes[idx]) {
                        searcher.dfs(&mut st, depth, ctx);
                    }
                    slots.lock().unwrap()[idx] = Some((best, st.examined));
                }
            });
        }
    });
    let mut merged = BestSoFar::new();
    let mut total = 0;
    for slot in slots.into_inner().unwrap() {
        let (best, examined) = slot.expect("every prefix slot is filled");
        merged.merge(best);
        total += examined;
    }
    (merged, total)
}

fn prefix_depth(n: usize, workers: usize) -> usize {
    let target = workers * 8;
    let mut depth = 1;
    let mut count = 1usize; // RGS prefixes of length 1: just [0]
    while depth < n && count < target {
        depth += 1;
        // Prefixes of length d are at most Bell(d); growing the depth by one
        // multiplies the count by at most d+1. Exact counting is not needed.
        count = count.saturating_mul(depth);
    }
    depth
}

/// All RGS prefixes of the given length, in lexicographic order.
fn rgs_prefixes(n: usize, depth: usize, k_filter: Option<usize>) -> Vec<Vec<usize>> {
    debug_assert!(depth >= 1 && depth <= n);
    let mut out = Vec::new();
    let mut prefix = vec![0usize; depth];
    fn rec(prefix: &mut Vec<usize>, pos: usize, maxv: usize, k_filter: Option<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == prefix.len() {
            out.push(prefix.clone());
            return;
        }
        let mut top = maxv + 1;
        if let Some(kf) = k_filter {
            top = top.min(kf.saturating_sub(1));
        }
        for c in 0..=top {
            prefix[pos] = c;
            rec(prefix, pos + 1, maxv.max(c), k_filter, out);
        }
    }
    prefix[0] = 0;
    rec(&mut prefix, 1, 0, k_filter, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{turan, Graph};
    use crate::rational::ratio;

    /// Independent oracle: Bell numbers by the Bell-triangle recurrence.
    fn bell(n: usize) -> u64 {
        let mut row = vec![1u64];
        let mut next = Vec::new();
        for _ in 0..n {
            next.clear();
            next.push(*row.last().unwrap());
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            std::mem::swap(&mut row, &mut next);
        }
        row[0]
    }

    #[test]
    fn partition_counts_match_bell_triangle() {
        assert_eq!(enumerate_partitions(3).unwrap().count() as u64, bell(3));
        assert_eq!(bell(3), 5);
        assert_eq!(enumerate_partitions(4).unwrap().count() as u64, bell(4));
        assert_eq!(bell(4), 15);
        for n in 1..=9 {
            assert_eq!(enumerate_partitions(n).unwrap().count() as u64, bell(n));
        }
    }

    #[test]
    fn bell_12_matches_enumeration() {
        assert_eq!(bell(12), 4_213_597);
        assert_eq!(enumerate_partitions(12).unwrap().count() as u64, bell(12));
    }

    #[test]
    fn partitions_are_lexicographic_and_canonical() {
        let got: Vec<Vec<usize>> = enumerate_partitions(3)
            .unwrap()
            .map(|c| c.assignment().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn enumeration_respects_cap() {
        assert!(matches!(
            enumerate_partitions(14),
            Err(SearchError::SizeCap { n: 14, cap: 13 })
        ));
        assert!(matches!(
            enumerate_partitions(0),
            Err(SearchError::EmptyGraph)
        ));
    }

    #[test]
    fn k4_brute_force() {
        let report = fat_chromatic_brute(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(report.chi_fat, 4);
        assert_eq!(report.witness.alpha, ratio(1, 3));
        assert_eq!(report.witness_coloring.assignment(), &[0, 1, 2, 3]);
    }

    #[test]
    fn turan_6_3_brute_force() {
        let report = fat_chromatic_brute(&turan(6, 3).unwrap().graph).unwrap();
        assert_eq!(report.chi_fat, 3);
    }

    #[test]
    fn c6_brute_force_witness() {
        let report = fat_chromatic_brute(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(report.chi_fat, 3);
        assert_eq!(report.witness.alpha, ratio(1, 2));
        assert_eq!(report.witness_coloring.assignment(), &[0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn k4_catalog_is_the_divisor_family() {
        let catalog = all_fat_colorings(&Graph::complete(4).unwrap(), None).unwrap();
        assert_eq!(catalog.len(), 5);
        let mut by_k = [0usize; 5];
        for (c, w) in &catalog {
            by_k[w.k] += 1;
            assert!(c.equal_class_sizes());
        }
        assert_eq!(by_k, [0, 1, 3, 0, 1]);
    }

    #[test]
    fn edgeless_catalog_is_everything() {
        let catalog = all_fat_colorings(&Graph::edgeless(3), None).unwrap();
        assert_eq!(catalog.len(), 5);
    }

    #[test]
    fn k_filter_restricts_catalog() {
        let catalog = all_fat_colorings(&Graph::complete(4).unwrap(), Some(2)).unwrap();
        assert_eq!(catalog.len(), 3);
        assert!(catalog.iter().all(|(c, _)| c.k() == 2));
    }

    #[test]
    fn parallel_matches_sequential() {
        for g in [
            Graph::complete(4).unwrap(),
            Graph::cycle(6).unwrap(),
            turan(8, 2).unwrap().graph,
        ] {
            let seq = fat_chromatic_brute(&g).unwrap();
            for workers in [1, 2, 4] {
                let par = search_parallel(&g, workers).unwrap();
                assert!(seq.same_result(&par), "workers={workers}");
            }
        }
    }

    #[test]
    fn pruning_preserves_catalog() {
        // The pruned DFS must agree with plain enumerate-and-validate.
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::cycle(6).unwrap(),
            turan(6, 3).unwrap().graph,
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
        ] {
            let expected: Vec<_> = enumerate_partitions(g.vertex_count())
                .unwrap()
                .filter_map(|c| validate_fat(&g, &c).ok().map(|w| (c, w)))
                .collect();
            let got = all_fat_colorings(&g, None).unwrap();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn witnesses_revalidate() {
        for n in 2..=6 {
            let g = Graph::complete(n).unwrap();
            let report = fat_chromatic_brute(&g).unwrap();
            assert!(report.chi_fat >= 1);
            let w = validate_fat(&g, &report.witness_coloring).unwrap();
            assert_eq!(w, report.witness);
        }
    }
}
