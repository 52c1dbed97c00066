//! The invariant suite behind `hyp verify` and the acceptance tests: eleven
//! numbered checks covering the Δ_r oracle, the A(n,m) witness constructions,
//! exhaustive small-graph extremality, closed-form landmarks, the gap
//! theorem sweep, block decomposition identity, the sub-1 classification,
//! the clique-removal family, deficit partitions, the random model, and
//! standard/fine refinement stability.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::{
    a_exact, binom2, delta_r_bruteforce, delta_r_closed, exact_n0, gap_report,
    lower_bound_b_detail, m_cap, upper_bound_b_detail,
};
use crate::construct::{
    a_one_witness, cycle_graph, complete_graph, deficit_partition,
    kn_minus_cliques, path_graph, tree_witness, triangle_cactus, CliqueRemovalSpec,
};
use crate::decompose::cut_vertices;
use crate::enumerate::{connected_class_reps, connected_labeled_masks, graph_from_mask, Canonicalizer};
use crate::graph::Graph;
use crate::hyperbolicity::{
    classify_sub_one, delta_exact_with, delta_via_blocks_with, DeltaOptions, Mode, SubOneClass,
};
use crate::length::{EighthLength, Quarter};
use crate::point::diam_graph;
use crate::random::run_experiment;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub details: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:2} {} {} — {} cases, {:.2}s{}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.seconds,
            if self.details.is_empty() { String::new() } else { format!(": {}", self.details) }
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Caps every per-criterion n range (for quick smoke runs). `None` runs
    /// the full suite as specified.
    pub max_n: Option<u64>,
    pub geodesic_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: None, geodesic_cap: crate::hyperbolicity::DEFAULT_GEODESIC_CAP }
    }
}

impl VerifyOptions {
    fn cap(&self, default: u64) -> u64 {
        self.max_n.map_or(default, |m| m.min(default))
    }

    fn delta_opts(&self) -> DeltaOptions {
        DeltaOptions { geodesic_cap: self.geodesic_cap }
    }
}

fn finish(
    id: usize,
    name: &'static str,
    started: Instant,
    cases: usize,
    failures: Vec<String>,
) -> CriterionReport {
    let details = if failures.is_empty() {
        String::new()
    } else {
        let mut shown: Vec<String> = failures.iter().take(4).cloned().collect();
        if failures.len() > 4 {
            shown.push(format!("... {} failures total", failures.len()));
        }
        shown.join("; ")
    };
    CriterionReport {
        id,
        name,
        passed: failures.is_empty(),
        cases,
        details,
        seconds: started.elapsed().as_secs_f64(),
    }
}

fn delta_quarters(g: &Graph, mode: Mode, opts: &VerifyOptions) -> Result<u64, String> {
    let r = delta_exact_with(g, mode, &opts.delta_opts()).map_err(|e| e.to_string())?;
    r.delta
        .as_quarters()
        .map(u64::from)
        .ok_or_else(|| format!("delta {} off the quarter grid", r.delta))
}

/// 1. Δ-oracle equivalence: brute-force minimization equals the closed form
/// for all 4 ≤ n ≤ 16, 2 ≤ r ≤ n/2.
pub fn criterion_1(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 4..=opts.cap(16) {
        for r in 2..=n / 2 {
            cases += 1;
            let brute = delta_r_bruteforce(n, r).unwrap();
            let closed = delta_r_closed(n, r).unwrap();
            if brute != closed {
                failures.push(format!("n={n}, r={r}: brute {brute} != closed {closed}"));
            }
        }
    }
    finish(1, "delta-oracle-equivalence", started, cases, failures)
}

/// The designated minimal-δ witness for each (n, m) cell.
fn designated_witness(n: u64, m: u64) -> Result<Graph, String> {
    let a = a_exact(n, m).map_err(|e| e.to_string())?;
    let g = if a == Quarter::ZERO {
        tree_witness(n as usize)
    } else if a == Quarter::THREE_QUARTERS {
        triangle_cactus(n, m).map_err(|e| e.to_string())?
    } else {
        a_one_witness(n, m).map_err(|e| e.to_string())?
    };
    if (g.vertex_count() as u64, g.edge_count() as u64) != (n, m) {
        return Err(format!(
            "witness for ({n},{m}) has ({}, {})",
            g.vertex_count(),
            g.edge_count()
        ));
    }
    Ok(g)
}

fn witness_cells(max_n: u64) -> Vec<(u64, u64)> {
    let mut cells = Vec::new();
    for n in 3..=max_n {
        for m in n - 1..=binom2(n) {
            cells.push((n, m));
        }
    }
    cells
}

/// 2. A(n,m) witness suite: for every n ∈ [3,10] and valid m the designated
/// constructor lands in 𝒢(n,m) with δ exactly A(n,m).
pub fn criterion_2(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let cells = witness_cells(opts.cap(10));
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|&(n, m)| {
            let check = || -> Result<(), String> {
                let g = designated_witness(n, m)?;
                let a = a_exact(n, m).map_err(|e| e.to_string())?;
                let dq = delta_quarters(&g, Mode::Standard, opts)?;
                if dq != a.quarters() {
                    return Err(format!("delta {dq}/4 != A {a}"));
                }
                Ok(())
            };
            check().err().map(|e| format!("({n},{m}): {e}"))
        })
        .collect();
    finish(2, "a-witness-suite", started, cells.len(), failures)
}

/// Exact δ per isomorphism class over all connected labeled graphs.
fn labeled_extremes(
    n: usize,
    m: usize,
    canon: &Canonicalizer,
    cache: &mut HashMap<u64, u64>,
    opts: &VerifyOptions,
) -> Result<(u64, u64, usize), String> {
    let masks = connected_labeled_masks(n, m);
    let mut classes = Vec::new();
    let mut class_masks = Vec::new();
    for &mask in &masks {
        let c = canon.canonical(mask);
        if !cache.contains_key(&c) {
            cache.insert(c, u64::MAX);
            class_masks.push(c);
        }
        classes.push(c);
    }
    let computed: Vec<(u64, Result<u64, String>)> = class_masks
        .par_iter()
        .map(|&c| (c, delta_quarters(&graph_from_mask(n, c), Mode::Standard, opts)))
        .collect();
    for (c, result) in computed {
        cache.insert(c, result?);
    }
    let mut min_q = u64::MAX;
    let mut max_q = 0;
    for c in classes {
        let q = cache[&c];
        min_q = min_q.min(q);
        max_q = max_q.max(q);
    }
    Ok((min_q, max_q, masks.len()))
}

/// 3. Exhaustive minimality spot check: over all connected labeled graphs for
/// n ∈ [4,6], min δ = A(n,m), b₁ ≤ max δ ≤ b₂.
pub fn criterion_3(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 4..=opts.cap(6) {
        let canon = Canonicalizer::new(n as usize);
        let mut cache = HashMap::new();
        for m in n - 1..=binom2(n) {
            match labeled_extremes(n as usize, m as usize, &canon, &mut cache, opts) {
                Ok((min_q, max_q, labeled)) => {
                    cases += labeled;
                    let a = a_exact(n, m).unwrap().quarters();
                    let b1 = lower_bound_b_detail(n, m).unwrap().0.quarters();
                    let b2 = upper_bound_b_detail(n, m).unwrap().0.quarters();
                    if min_q != a {
                        failures.push(format!("({n},{m}): min delta {min_q}/4 != A {a}/4"));
                    }
                    if max_q > b2 {
                        failures.push(format!("({n},{m}): max delta {max_q}/4 > b2 {b2}/4"));
                    }
                    if max_q < b1 {
                        failures.push(format!("({n},{m}): max delta {max_q}/4 < b1 {b1}/4"));
                    }
                }
                Err(e) => failures.push(format!("({n},{m}): {e}")),
            }
        }
    }
    finish(3, "exhaustive-minimality", started, cases, failures)
}

/// 4. Closed-form landmarks: δ(Pₙ)=0, δ(Cₙ)=n/4, δ(Kₙ)=1.
pub fn criterion_4(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut jobs: Vec<(Graph, u64, String)> = Vec::new();
    for n in 2..=opts.cap(10) {
        jobs.push((path_graph(n as u32), 0, format!("P{n}")));
    }
    for n in 3..=opts.cap(10) {
        jobs.push((cycle_graph(n as u32), n, format!("C{n}")));
    }
    for n in 4..=opts.cap(8) {
        jobs.push((complete_graph(n as u32), 4, format!("K{n}")));
    }
    let cases = jobs.len();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(g, expected, name)| match delta_quarters(g, Mode::Standard, opts) {
            Ok(q) if q == *expected => None,
            Ok(q) => Some(format!("{name}: delta {q}/4 != {expected}/4")),
            Err(e) => Some(format!("{name}: {e}")),
        })
        .collect();
    finish(4, "closed-form-landmarks", started, cases, failures)
}

/// 5. Gap theorem sweep over every valid (n,m) for 3 ≤ n ≤ 500, plus the
/// n₁ − n₀ difference bounds. The sweep recomputes b₁/b₂ with rolling
/// pointers and cross-checks gap_report on a subsample.
pub fn criterion_5(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for n in 3..=opts.cap(500) {
        let caps: Vec<(u64, u64)> = (2..=n / 2).map(|r| (r, m_cap(n, r).unwrap())).collect();
        let mut rstar_idx = caps.len(); // none yet
        let mut n0 = 5u64;
        for m in n - 1..=binom2(n) {
            cases += 1;
            let b2;
            if m + 1 == n {
                b2 = 0;
            } else if m <= n + 3 {
                b2 = n;
            } else {
                while rstar_idx > 0 && m > caps[rstar_idx - 1].1 {
                    rstar_idx -= 1;
                }
                b2 = if rstar_idx < caps.len() && m > caps[rstar_idx].1 {
                    2 * caps[rstar_idx].0
                } else {
                    n
                };
            }
            let b1;
            if m + 1 == n {
                b1 = 0;
            } else if m <= n + 3 {
                b1 = n;
            } else {
                while m > n + binom2(n0 - 1) {
                    n0 += 1;
                }
                b1 = n - n0 + 3;
            }
            if b1 > b2 {
                failures.push(format!("({n},{m}): b1 {b1}/4 > b2 {b2}/4"));
                continue;
            }
            let gap = b2 - b1;
            if gap > 4 && (gap - 4).pow(2) >= 3 * n {
                failures.push(format!("({n},{m}): gap {gap}/4 >= sqrt(3n)/4 + 1"));
            }
            if (n + m) % 997 == 0 {
                match gap_report(n, m) {
                    Ok(r) => {
                        if r.b1.quarters() != b1 || r.b2.quarters() != b2 {
                            failures.push(format!(
                                "({n},{m}): sweep ({b1},{b2}) != gap_report ({},{})",
                                r.b1.quarters(),
                                r.b2.quarters()
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("({n},{m}): {e}")),
                }
            }
        }
        for r in 3..=n / 2 {
            cases += 1;
            let lo = exact_n0(n, r).unwrap();
            let hi = exact_n0(n, r - 1).unwrap();
            let diff = hi.saturating_sub(lo);
            let allowed = if r == 3 || r == 4 || r == n / 2 { 2 } else { 4 };
            if diff > allowed {
                failures.push(format!("n={n}, r={r}: n1-n0 = {diff} > {allowed}"));
            }
        }
    }
    finish(5, "gap-theorem-sweep", started, cases, failures)
}

/// Deterministic corpus of graphs with cut vertices, n ≤ 9.
pub fn block_corpus() -> Vec<Graph> {
    let mut graphs = Vec::new();
    // Triangle cacti: hub is a cut vertex once there are pendants or >= 2
    // triangles.
    for n in 4..=9u64 {
        for m in n..=(3 * n - 3) / 2 {
            graphs.push(triangle_cactus(n, m).unwrap());
        }
    }
    // Cycles with a pendant path.
    for k in 3..=8u32 {
        for tail in 1..=(9 - k).min(3) {
            let mut edges: Vec<(u32, u32)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let mut prev = 0;
            for t in 0..tail {
                edges.push((prev, k + t));
                prev = k + t;
            }
            graphs.push(Graph::new((k + tail) as usize, &edges).unwrap());
        }
    }
    // Two cycles sharing one vertex.
    for a in 3..=6u32 {
        for b in a..=6u32 {
            if a + b - 1 > 9 {
                continue;
            }
            let mut edges: Vec<(u32, u32)> = (0..a).map(|i| (i, (i + 1) % a)).collect();
            let shift = |i: u32| if i == 0 { 0 } else { a - 1 + i };
            for i in 0..b {
                edges.push((shift(i), shift((i + 1) % b)));
            }
            graphs.push(Graph::new((a + b - 1) as usize, &edges).unwrap());
        }
    }
    // Dense blocks with path tails.
    for n in 5..=9u64 {
        for m in n + 1..=binom2(n - 1) + 1 {
            if let Ok(g) = a_one_witness(n, m) {
                if !cut_vertices(&g).is_empty() {
                    graphs.push(g);
                }
            }
        }
    }
    // A few trees.
    graphs.push(path_graph(9));
    graphs.push(Graph::new(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)]).unwrap());
    graphs.retain(|g| !cut_vertices(g).is_empty());
    graphs
}

/// 6. Block identity: δ via the canonical T-decomposition equals the direct
/// computation on ≥ 50 graphs with cut vertices.
pub fn criterion_6(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let corpus = block_corpus();
    let mut failures = Vec::new();
    if corpus.len() < 50 {
        failures.push(format!("corpus has only {} graphs", corpus.len()));
    }
    let mismatches: Vec<String> = corpus
        .par_iter()
        .filter_map(|g| {
            let direct = match delta_exact_with(g, Mode::Standard, &opts.delta_opts()) {
                Ok(r) => r.delta,
                Err(e) => return Some(format!("{g:?}: {e}")),
            };
            let blocked = match delta_via_blocks_with(g, Mode::Standard, &opts.delta_opts()) {
                Ok(r) => r.delta,
                Err(e) => return Some(format!("{g:?}: {e}")),
            };
            (direct != blocked).then(|| format!("{g:?}: direct {direct} != blocks {blocked}"))
        })
        .collect();
    failures.extend(mismatches);
    finish(6, "block-identity", started, corpus.len(), failures)
}

/// 7. Sub-1 classification on the exhaustive n ≤ 7 corpus (one representative
/// per isomorphism class; δ and cycle structure are isomorphism-invariant):
/// δ < 1 ⇔ all cycles have length ≤ 3, and then δ ∈ {0, 3/4}.
pub fn criterion_7(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut reps = Vec::new();
    for n in 1..=opts.cap(7) {
        reps.extend(connected_class_reps(n as usize));
    }
    let cases = reps.len();
    let failures: Vec<String> = reps
        .par_iter()
        .filter_map(|g| {
            let q = match delta_quarters(g, Mode::Standard, opts) {
                Ok(q) => q,
                Err(e) => return Some(format!("{g:?}: {e}")),
            };
            let class = classify_sub_one(g);
            let expected = match class {
                SubOneClass::IsTree => q == 0,
                SubOneClass::DeltaThreeQuarters => q == 3,
                SubOneClass::AtLeastOne => q >= 4,
            };
            if !expected {
                return Some(format!("{g:?}: delta {q}/4 vs class {class:?}"));
            }
            if q < 4 && !(q == 0 || q == 3) {
                return Some(format!("{g:?}: delta {q}/4 below 1 but not in {{0, 3/4}}"));
            }
            None
        })
        .collect();
    finish(7, "sub-one-classification", started, cases, failures)
}

/// All clique-removal specs for a given n: non-increasing part multisets
/// with entries in [2, n-1] summing to at most n.
pub fn all_clique_specs(n: u64) -> Vec<CliqueRemovalSpec> {
    fn extend(n: u64, max_part: u64, remaining: u64, acc: &mut Vec<u64>, out: &mut Vec<CliqueRemovalSpec>) {
        for part in (2..=max_part.min(remaining)).rev() {
            acc.push(part);
            out.push(CliqueRemovalSpec::new(n, acc.clone()).unwrap());
            extend(n, part, remaining - part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 3 {
        let mut acc = Vec::new();
        extend(n, n - 1, n, &mut acc, &mut out);
    }
    out
}

/// 8. K_n^{N₁..N_s} family for n ≤ 8: metric diameter exactly 2 and δ ≤ 1.
pub fn criterion_8(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut specs = Vec::new();
    for n in 3..=opts.cap(8) {
        specs.extend(all_clique_specs(n));
    }
    let cases = specs.len();
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|spec| {
            let g = kn_minus_cliques(spec);
            let d = g.vertex_distances();
            let diam = diam_graph(&g, &d);
            if diam != EighthLength::from_edges(2) {
                return Some(format!("{spec:?}: diam {diam} != 2"));
            }
            match delta_quarters(&g, Mode::Standard, opts) {
                Ok(q) if q <= 4 => None,
                Ok(q) => Some(format!("{spec:?}: delta {q}/4 > 1")),
                Err(e) => Some(format!("{spec:?}: {e}")),
            }
        })
        .collect();
    finish(8, "clique-removal-suite", started, cases, failures)
}

/// 9. Deficit partitions: t_i ≥ 2, Σ t_i ≤ t+2, Σ C(t_i,2) = t for t ≤ 10⁴.
pub fn criterion_9(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let top = opts.max_n.map_or(10_000, |m| (m * 1000).min(10_000));
    let mut failures = Vec::new();
    for t in 1..=top {
        let p = deficit_partition(t).unwrap();
        let sum: u64 = p.parts.iter().sum();
        let c2: u64 = p.parts.iter().map(|&x| binom2(x)).sum();
        if p.parts.iter().any(|&x| x < 2) || sum > t + 2 || c2 != t {
            failures.push(format!("t={t}: parts {:?}", p.parts));
        }
    }
    finish(9, "deficit-partitions", started, top as usize, failures)
}

/// 10. Random-model property suite: zero violations of
/// A(n,m) ≤ δ ≤ min(n/4, b₂, diam/2) and byte-identical reruns.
pub fn criterion_10(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    const SEED: u64 = 20240801;
    let mut cells: Vec<(usize, usize)> =
        vec![(8, 7), (8, 10), (8, 14), (8, 20), (8, 28), (10, 15), (10, 20)];
    if let Some(max_n) = opts.max_n {
        cells.retain(|&(n, _)| n as u64 <= max_n);
    }
    let trials = 100;
    let mut failures = Vec::new();
    let mut cases = 0;
    for &(n, m) in &cells {
        cases += trials as usize;
        match (
            run_experiment(n, m, trials, SEED, None),
            run_experiment(n, m, trials, SEED, None),
        ) {
            (Ok(a), Ok(b)) => {
                if a.violations != 0 {
                    failures.push(format!("({n},{m}): {} bound violations", a.violations));
                }
                if a != b {
                    failures.push(format!("({n},{m}): rerun differs"));
                }
            }
            (Err(e), _) | (_, Err(e)) => failures.push(format!("({n},{m}): {e}")),
        }
    }
    finish(10, "random-model-suite", started, cases, failures)
}

/// Corpus of every graph criteria 2–8 computed δ on.
pub fn refinement_corpus(opts: &VerifyOptions) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Vec::new();
    for (n, m) in witness_cells(opts.cap(10)) {
        if let Ok(g) = designated_witness(n, m) {
            graphs.push(g);
        }
    }
    for n in 1..=opts.cap(7) {
        graphs.extend(connected_class_reps(n as usize));
    }
    for n in 2..=opts.cap(10) {
        graphs.push(path_graph(n as u32));
        if n >= 3 {
            graphs.push(cycle_graph(n as u32));
        }
        if (4..=8).contains(&n) {
            graphs.push(complete_graph(n as u32));
        }
    }
    graphs.extend(block_corpus());
    for n in 3..=opts.cap(8) {
        graphs.extend(all_clique_specs(n).iter().map(kn_minus_cliques));
    }
    graphs
}

/// 11. Refinement stability: standard mode equals fine mode across the
/// corpora of criteria 2–8, and every δ lies on the 1/4 grid.
pub fn criterion_11(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let corpus = refinement_corpus(opts);
    let cases = corpus.len();
    let failures: Vec<String> = corpus
        .par_iter()
        .filter_map(|g| {
            let s = match delta_quarters(g, Mode::Standard, opts) {
                Ok(q) => q,
                Err(e) => return Some(format!("{g:?}: standard {e}")),
            };
            let f = match delta_quarters(g, Mode::Fine, opts) {
                Ok(q) => q,
                Err(e) => return Some(format!("{g:?}: fine {e}")),
            };
            (s != f).then(|| format!("{g:?}: standard {s}/4 != fine {f}/4"))
        })
        .collect();
    finish(11, "refinement-stability", started, cases, failures)
}

/// Runs all eleven criteria in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionReport> {
    vec![
        criterion_1(opts),
        criterion_2(opts),
        criterion_3(opts),
        criterion_4(opts),
        criterion_5(opts),
        criterion_6(opts),
        criterion_7(opts),
        criterion_8(opts),
        criterion_9(opts),
        criterion_10(opts),
        criterion_11(opts),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::diam_vertices;

    #[test]
    fn corpus_is_large_enough() {
        let corpus = block_corpus();
        assert!(corpus.len() >= 50, "only {} graphs", corpus.len());
        assert!(corpus.iter().all(|g| g.vertex_count() <= 9));
        assert!(corpus.iter().all(|g| !cut_vertices(g).is_empty()));
    }

    #[test]
    fn clique_specs_enumeration() {
        let specs = all_clique_specs(5);
        // Partitions with parts in [2,4] summing to <= 5: [2],[3],[4],[2,2],[3,2].
        assert_eq!(specs.len(), 5);
        assert!(all_clique_specs(2).is_empty());
    }

    #[test]
    fn smoke_run_small() {
        let opts = VerifyOptions { max_n: Some(5), ..VerifyOptions::default() };
        for report in [criterion_1(&opts), criterion_4(&opts), criterion_9(&opts)] {
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn effective_diameter_edge_cap() {
        // diameff_v = r implies m <= M(n,r); contrapositive of the theorem.
        use crate::decompose::effective_diameters;
        for g in block_corpus() {
            let n = g.vertex_count() as u64;
            let m = g.edge_count() as u64;
            let r = u64::from(effective_diameters(&g).diameff_v);
            if (2..=n / 2).contains(&r) {
                assert!(m <= m_cap(n, r).unwrap(), "{g:?}: diameff {r}");
            }
            for rr in 2..=n / 2 {
                if m > m_cap(n, rr).unwrap() {
                    assert!(u64::from(effective_diameters(&g).diameff_v) < rr);
                }
            }
        }
    }

    #[test]
    fn landmark_invariants_hold() {
        // δ(G) ≤ diam(G)/2, δ(G) ≤ diameff(G)/2, δ(G) ≤ n/4 on a small corpus.
        use crate::decompose::effective_diameters;
        let opts = VerifyOptions::default();
        for g in [cycle_graph(5), complete_graph(5), path_graph(6), triangle_cactus(7, 9).unwrap()]
        {
            let d = g.vertex_distances();
            let delta = delta_exact_with(&g, Mode::Standard, &opts.delta_opts()).unwrap().delta;
            assert!(2 * delta.units() <= diam_graph(&g, &d).units());
            assert!(2 * delta.units() <= effective_diameters(&g).diameff_g.units());
            // δ ≤ n/4, i.e. units ≤ 2n.
            assert!(delta.units() <= 2 * g.vertex_count() as u32);
            assert!(diam_vertices(&g, &d) <= diam_graph(&g, &d));
        }
    }
}
