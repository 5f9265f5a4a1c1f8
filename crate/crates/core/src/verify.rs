//! Named property suites mirroring the library's math-level invariants,
//! runnable from the CLI (`verify --suite <name>`). Randomized checks draw
//! from a seeded [`SplitMix64`], so a (seed, trials) pair fully determines
//! the run.

use crate::coloring::{validate_fat, Coloring};
use crate::graph::{complete_multipartite, turan, Graph, MultipartiteSpec};
use crate::lift::{
    cartesian_lift, complement_lift, product_spectrum_check, remove_classes,
    restricted_eigenvalue_shift, strong_lift, tensor_lift, ProductKind,
};
use crate::multipartite::{
    fat_chromatic_multipartite, fat_chromatic_turan, multipartite_spectrum_closed,
};
use crate::rational::{self, Rational};
use crate::rng::SplitMix64;
use crate::search::{all_fat_colorings, fat_chromatic_brute, search_parallel};
use crate::spectral::{
    check_fat_spectral, class_indicator, eigen_residual, spectrum, weighted_inner_product,
};
use num_traits::Zero;
use std::collections::BTreeSet;

pub const SUITES: &[&str] = &[
    "turan",
    "multipartite",
    "products",
    "complement",
    "removal",
    "spectral",
];

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

/// Run a suite by name; `None` for an unknown suite.
pub fn run_suite(name: &str, seed: u64, trials: usize) -> Option<SuiteReport> {
    match name {
        "turan" => Some(turan_suite()),
        "multipartite" => Some(multipartite_suite(seed, trials)),
        "products" => Some(products_suite(seed, trials)),
        "complement" => Some(complement_suite(seed, trials)),
        "removal" => Some(removal_suite()),
        "spectral" => Some(spectral_suite(seed, trials)),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// random instance generators
// ---------------------------------------------------------------------------

pub fn random_graph(rng: &mut SplitMix64, n: usize, edge_percent: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(edge_percent, 100) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated edges are valid")
}

pub fn random_connected_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n, 50);
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform-ish random set partition as an RGS.
pub fn random_partition(rng: &mut SplitMix64, n: usize) -> Coloring {
    let mut rgs = vec![0usize; n];
    let mut max = 0;
    for slot in rgs.iter_mut().skip(1) {
        let c = rng.range(0, max + 1);
        *slot = c;
        max = max.max(c);
    }
    Coloring::from_rgs(&rgs)
}

/// Random multipartite spec with at least two distinct sizes and at most
/// `max_total` vertices.
pub fn random_spec(rng: &mut SplitMix64, max_total: usize) -> MultipartiteSpec {
    loop {
        let p = rng.range(2, 3);
        let mut sizes = BTreeSet::new();
        while sizes.len() < p {
            sizes.insert(rng.range(1, 6));
        }
        let mut parts: Vec<(usize, usize)> = sizes
            .into_iter()
            .rev()
            .map(|s| (s, rng.range(1, 3)))
            .collect();
        // Shrink multiplicities until the realized graph fits; resample the
        // sizes when even all-1 multiplicities are too large.
        while parts.iter().map(|&(s, m)| s * m).sum::<usize>() > max_total {
            match parts.iter_mut().filter(|p| p.1 > 1).max_by_key(|p| p.0) {
                Some(part) => part.1 -= 1,
                None => break,
            }
        }
        if parts.iter().map(|&(s, m)| s * m).sum::<usize>() > max_total {
            continue;
        }
        if let Ok(spec) = MultipartiteSpec::new(parts) {
            if spec.distinct_sizes() >= 2 && spec.total_vertices() <= max_total {
                return spec;
            }
        }
    }
}

/// Random circulant graph: always regular, often with connected complement.
pub fn random_circulant(rng: &mut SplitMix64, n: usize) -> Graph {
    loop {
        let mut offsets = Vec::new();
        for d in 1..=n / 2 {
            if rng.chance(1, 2) {
                offsets.push(d);
            }
        }
        if offsets.is_empty() {
            continue;
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for &d in &offsets {
                edges.push((v, (v + d) % n));
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("circulant edges are valid");
        if g.regular_degree().is_some() {
            return g;
        }
    }
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn turan_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("turan");
    for n in 2..=12usize {
        for t in (1..=n).filter(|t| n % t == 0) {
            let g = turan(n, t).expect("t divides n").graph;
            let closed = fat_chromatic_turan(n, t).expect("regular Turán");
            match fat_chromatic_brute(&g) {
                Ok(report) => rep.check(
                    format!("brute-vs-closed T({n},{t})"),
                    report.chi_fat == closed,
                    format!("brute {} closed {}", report.chi_fat, closed),
                ),
                Err(e) => rep.check(format!("brute-vs-closed T({n},{t})"), false, e.to_string()),
            }
        }
    }

    // Every FAT coloring of T(6,3) is balanced or monochromatic.
    let t63 = turan(6, 3).expect("regular");
    let catalog = all_fat_colorings(&t63.graph, None).expect("small graph");
    let mut dichotomy = true;
    for (c, _) in &catalog {
        let balanced = t63.parts.iter().all(|part| {
            let mut per_class = vec![0usize; c.k()];
            for &v in part {
                per_class[c.class_of(v)] += 1;
            }
            per_class.windows(2).all(|w| w[0] == w[1])
        });
        let mono = {
            let part_mono = t63
                .parts
                .iter()
                .all(|part| part.iter().all(|&v| c.class_of(v) == c.class_of(part[0])));
            let mut per_class = vec![0usize; c.k()];
            if part_mono {
                for part in &t63.parts {
                    per_class[c.class_of(part[0])] += 1;
                }
            }
            part_mono && per_class.windows(2).all(|w| w[0] == w[1])
        };
        dichotomy &= balanced || mono;
    }
    rep.check(
        "T(6,3) catalog dichotomy",
        dichotomy,
        format!("{} colorings, all balanced or monochromatic", catalog.len()),
    );

    // Parallel search determinism on one representative graph.
    let g = turan(8, 2).expect("regular").graph;
    let seq = fat_chromatic_brute(&g).expect("n=8 under cap");
    let par = search_parallel(&g, 4).expect("n=8 under cap");
    rep.check(
        "parallel equals sequential on T(8,2)",
        seq.same_result(&par),
        format!("chi {} vs {}", seq.chi_fat, par.chi_fat),
    );
    rep
}

fn multipartite_suite(seed: u64, trials: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("multipartite");
    let mut rng = SplitMix64::new(seed);

    for trial in 0..trials {
        let spec = random_spec(&mut rng, 12);
        let verdict = fat_chromatic_multipartite(&spec);
        let mg = complete_multipartite(&spec);
        let brute = match fat_chromatic_brute(&mg.graph) {
            Ok(r) => r,
            Err(e) => {
                rep.check(format!("closed-vs-brute #{trial}"), false, e.to_string());
                continue;
            }
        };
        rep.check(
            format!("closed-vs-brute #{trial} {:?}", spec.parts()),
            verdict.chi_fat == brute.chi_fat,
            format!("closed {} brute {}", verdict.chi_fat, brute.chi_fat),
        );
        let w = validate_fat(&mg.graph, &verdict.construction);
        rep.check(
            format!("construction validates #{trial}"),
            w.as_ref().map(|w| w.alpha == verdict.predicted_alpha) == Ok(true),
            format!("predicted {}", rational::format_ratio(&verdict.predicted_alpha)),
        );
    }

    for trial in 0..trials {
        let spec = random_spec(&mut rng, 20);
        match multipartite_spectrum_closed(&spec, 1e-8) {
            Ok(ms) => {
                let brackets_ok = ms.x_values.iter().all(|x| {
                    rational::to_f64(&x.lower) < x.value && x.value < rational::to_f64(&x.upper)
                });
                rep.check(
                    format!("spectrum structure #{trial} {:?}", spec.parts()),
                    ms.total_multiplicity() == spec.total_vertices()
                        && ms.max_known_residual <= 1e-8
                        && brackets_ok,
                    format!("max known residual {:.2e}", ms.max_known_residual),
                );
            }
            Err(e) => rep.check(format!("spectrum structure #{trial}"), false, e.to_string()),
        }
    }

    // Eigenspace shape: part indicators at N/(N-n_i), same-part vertex pairs
    // at eigenvalue 1.
    for sizes in [vec![3usize, 2], vec![4, 3, 3], vec![6, 4, 4, 2]] {
        let spec = MultipartiteSpec::from_sizes(&sizes).expect("valid sizes");
        let mg = complete_multipartite(&spec);
        let n = spec.total_vertices() as f64;
        let mut worst = 0.0f64;
        for i in 0..mg.parts.len() {
            for j in 0..mg.parts.len() {
                if i == j || mg.parts[i].len() != mg.parts[j].len() {
                    continue;
                }
                let f = crate::spectral::part_indicator(&mg, i, j).expect("parts in range");
                let lam = n / (n - mg.parts[i].len() as f64);
                worst = worst.max(
                    eigen_residual(&mg.graph, &f.values, lam).expect("indicator is nonzero"),
                );
            }
        }
        for part in &mg.parts {
            for pair in part.windows(2) {
                let f = crate::spectral::vertex_pair_indicator(
                    mg.graph.vertex_count(),
                    pair[0],
                    pair[1],
                )
                .expect("vertices in range");
                worst = worst
                    .max(eigen_residual(&mg.graph, &f.values, 1.0).expect("nonzero indicator"));
            }
        }
        rep.check(
            format!("eigenspace indicators {sizes:?}"),
            worst <= 1e-10,
            format!("worst residual {worst:.2e}"),
        );
    }
    rep
}

fn products_suite(seed: u64, trials: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("products");
    let mut rng = SplitMix64::new(seed);

    // Degree identities on random factor pairs.
    let mut deg_ok = true;
    for _ in 0..trials {
        let n1 = rng.range(2, 5);
        let g1 = random_graph(&mut rng, n1, 60);
        let n2 = rng.range(2, 5);
        let g2 = random_graph(&mut rng, n2, 60);
        let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
        let tensor = g1.tensor_product(&g2);
        let cart = g1.cartesian_product(&g2);
        let strong = g1.strong_product(&g2);
        for v1 in 0..n1 {
            for v2 in 0..n2 {
                let v = v1 * n2 + v2;
                let (d1, d2) = (g1.degree(v1), g2.degree(v2));
                deg_ok &= tensor.degree(v) == d1 * d2;
                deg_ok &= cart.degree(v) == d1 + d2;
                deg_ok &= strong.degree(v) == d1 * d2 + d1 + d2;
            }
        }
    }
    rep.check("product degree identities", deg_ok, format!("{trials} random pairs"));

    let base: Vec<(&str, Graph)> = vec![
        ("K2", Graph::complete(2).expect("small")),
        ("K3", Graph::complete(3).expect("small")),
        ("C4", Graph::cycle(4).expect("small")),
        ("C5", Graph::cycle(5).expect("small")),
        ("C6", Graph::cycle(6).expect("small")),
    ];
    for (name1, g1) in &base {
        for (name2, g2) in &base {
            for kind in [ProductKind::Tensor, ProductKind::Cartesian, ProductKind::Strong] {
                let ok = product_spectrum_check(g1, g2, kind, 1e-8);
                rep.check(
                    format!("{kind:?} spectrum {name1}x{name2}"),
                    ok == Ok(true),
                    format!("{ok:?}"),
                );
            }
        }
    }

    // Lift round trips over full catalogs of two bases and all factors.
    let bases = [Graph::cycle(6).expect("small"), turan(6, 3).expect("regular").graph];
    let factors = [
        Graph::complete(2).expect("small"),
        Graph::complete(3).expect("small"),
        Graph::cycle(4).expect("small"),
    ];
    for g in &bases {
        let catalog = all_fat_colorings(g, None).expect("small graph");
        let mut ok = true;
        let mut count = 0;
        for (c, w) in &catalog {
            for f in &factors {
                for lift in [
                    tensor_lift(g, c, w, f),
                    cartesian_lift(g, c, w, f),
                    strong_lift(g, c, w, f),
                ] {
                    let lift = lift.expect("hypotheses hold for these factors");
                    let revalidated = validate_fat(&lift.graph, &lift.coloring);
                    let exact =
                        revalidated.as_ref().map(|w2| w2.alpha == lift.predicted_alpha);
                    if exact != Ok(true) {
                        ok = false;
                    }
                    count += 1;
                }
            }
        }
        rep.check(
            format!("lift round-trips on {} colorings", catalog.len()),
            ok,
            format!("{count} lifts validated"),
        );
    }
    rep
}

fn complement_suite(seed: u64, trials: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("complement");
    let mut rng = SplitMix64::new(seed);

    let mut involution_ok = true;
    for _ in 0..trials {
        let n = rng.range(1, 8);
        let g = random_graph(&mut rng, n, 50);
        involution_ok &= g.complement().complement() == g;
    }
    rep.check("complement involution", involution_ok, format!("{trials} graphs"));

    // The worked disjoint-cycles example: three C4 components, three equal
    // monochromatic classes, alpha 0 -> 4/9 on the complement.
    let c4 = Graph::cycle(4).expect("small");
    let g = c4.disjoint_union(&c4).disjoint_union(&c4);
    let mut a = vec![0usize; 12];
    a[4..8].fill(1);
    a[8..12].fill(2);
    let c = Coloring::new(3, a).expect("surjective");
    let w = validate_fat(&g, &c).expect("component-monochromatic is FAT");
    let lift = complement_lift(&g, &c, &w).expect("hypotheses hold");
    let expected = rational::ratio(4, 9);
    let revalidated = validate_fat(&lift.graph, &lift.coloring);
    rep.check(
        "three-squares complement lift",
        lift.predicted_alpha == expected
            && revalidated.map(|w2| w2.alpha == expected) == Ok(true),
        "alpha 0 -> 4/9",
    );

    let mut b = vec![0usize; 12];
    b[8..12].fill(1);
    let cb = Coloring::new(2, b).expect("surjective");
    let wb = validate_fat(&g, &cb).expect("alpha = 0 coloring");
    rep.check(
        "unequal classes rejected",
        complement_lift(&g, &cb, &wb).is_err(),
        "UnequalClassesAtAlphaZero",
    );

    // Round trips on catalogs of regular graphs with connected complements,
    // including the double-complement involution on the parameter.
    let mut graphs: Vec<Graph> = vec![Graph::cycle(6).expect("small"), Graph::cycle(5).expect("small")];
    for _ in 0..trials.min(4) {
        let n = rng.range(6, 9);
        graphs.push(random_circulant(&mut rng, n));
    }
    for g in &graphs {
        if !g.complement().is_connected() || g.vertex_count() > 10 {
            continue;
        }
        let catalog = all_fat_colorings(g, None).expect("small graph");
        let mut ok = true;
        let mut back_ok = true;
        for (c, w) in &catalog {
            if w.alpha.is_zero() && w.k > 1 && !c.equal_class_sizes() {
                continue;
            }
            let lift = match complement_lift(g, c, w) {
                Ok(l) => l,
                Err(_) => continue,
            };
            let w2 = validate_fat(&lift.graph, &lift.coloring);
            let Ok(w2) = w2 else {
                ok = false;
                continue;
            };
            if w2.alpha != lift.predicted_alpha {
                ok = false;
            }
            // Double complement returns to the original graph and alpha.
            if lift.graph.complement() == *g && w2.k > 1 {
                if let Ok(back) = complement_lift(&lift.graph, &lift.coloring, &w2) {
                    back_ok &= back.predicted_alpha == w.alpha;
                }
            }
        }
        rep.check(
            format!("complement round-trip n={}", g.vertex_count()),
            ok && back_ok,
            format!("{} colorings", catalog.len()),
        );
    }
    rep
}

fn removal_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("removal");
    let bases = [
        Graph::complete(4).expect("small"),
        Graph::cycle(6).expect("small"),
        turan(6, 3).expect("regular").graph,
    ];
    for g in &bases {
        let catalog = all_fat_colorings(g, None).expect("small graph");
        let mut round_ok = true;
        let mut compose_ok = true;
        let mut shift_ok = true;
        for (c, w) in &catalog {
            let k = w.k;
            if k < 2 {
                continue;
            }
            for i in 0..k {
                let removed: BTreeSet<usize> = [i].into_iter().collect();
                if k < removed.len() + 2 {
                    continue;
                }
                let lift = remove_classes(g, c, w, &removed).expect("|I| <= k-2");
                let w2 = validate_fat(&lift.graph, &lift.coloring);
                round_ok &= w2.as_ref().map(|x| x.alpha == lift.predicted_alpha) == Ok(true);

                // Composing with a second removal equals the batch removal.
                for j in 0..k {
                    if j == i || k < 4 {
                        continue;
                    }
                    let both: BTreeSet<usize> = [i, j].into_iter().collect();
                    let batch = remove_classes(g, c, w, &both).expect("|I| <= k-2");
                    let w_mid = w2.clone().expect("first removal validated");
                    let j_renumbered = if j > i { j - 1 } else { j };
                    let second = remove_classes(
                        &lift.graph,
                        &lift.coloring,
                        &w_mid,
                        &[j_renumbered].into_iter().collect(),
                    )
                    .expect("|I| <= k-2");
                    compose_ok &= second.graph == batch.graph
                        && second.coloring == batch.coloring
                        && second.predicted_alpha == batch.predicted_alpha;
                }

                // Spectral shift of a kept-class indicator.
                let kept: Vec<usize> = (0..k).filter(|x| !removed.contains(x)).collect();
                if kept.len() >= 2 {
                    let f = class_indicator(c, kept[0], kept[1]).expect("classes in range");
                    let lambda = Rational::from_integer((k as i64).into()) * &w.alpha;
                    if let Ok(res) =
                        restricted_eigenvalue_shift(g, c, w, &removed, &f.values, &lambda)
                    {
                        shift_ok &= res <= 1e-8;
                    }
                }
            }
        }
        rep.check(
            format!("removal round-trips n={}", g.vertex_count()),
            round_ok,
            "alpha / (1 - alpha|I|)",
        );
        rep.check(
            format!("removal composition n={}", g.vertex_count()),
            compose_ok,
            "batch equals sequential",
        );
        rep.check(
            format!("removal shift residuals n={}", g.vertex_count()),
            shift_ok,
            "f_ij at shifted eigenvalue",
        );
    }
    rep
}

fn spectral_suite(seed: u64, trials: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("spectral");
    let mut rng = SplitMix64::new(seed);

    let mut adjoint_ok = true;
    let mut trace_ok = true;
    let mut zero_mult_ok = true;
    for _ in 0..trials {
        let n = rng.range(2, 8);
        let g = random_graph(&mut rng, n, 50);
        let f: Vec<f64> = (0..n).map(|_| rng.unit_f64() - 0.5).collect();
        let h: Vec<f64> = (0..n).map(|_| rng.unit_f64() - 0.5).collect();
        let lf = crate::spectral::apply_laplacian(&g, &f);
        let lh = crate::spectral::apply_laplacian(&g, &h);
        let lhs = weighted_inner_product(&g, &lf, &h);
        let rhs = weighted_inner_product(&g, &f, &lh);
        adjoint_ok &= (lhs - rhs).abs() <= 1e-9;

        let dec = spectrum(&g, 1e-10).expect("jacobi converges on small graphs");
        let isolated = (0..n).filter(|&v| g.is_isolated(v)).count();
        // Isolated vertices sit at eigenvalue 1 under the D^{-1} convention,
        // so the trace identity is only meaningful without them.
        if isolated == 0 {
            let sum: f64 = dec.eigenvalues.iter().sum();
            trace_ok &= (sum - n as f64).abs() <= 1e-8;
            zero_mult_ok &= dec.zero_multiplicity() == g.connected_components().len();
        }
    }
    rep.check("self-adjointness", adjoint_ok, format!("{trials} random (g,f,h)"));
    rep.check("eigenvalue sum = trace", trace_ok, format!("{trials} graphs"));
    rep.check("zero multiplicity = components", zero_mult_ok, "isolated-free graphs");

    let mut bipartite_ok = true;
    for n in 3..=9 {
        let g = Graph::cycle(n).expect("n >= 3");
        let dec = spectrum(&g, 1e-10).expect("cycles are easy");
        let top = *dec.eigenvalues.last().expect("nonempty");
        if n % 2 == 0 {
            bipartite_ok &= (top - 2.0).abs() <= 1e-8;
        } else {
            bipartite_ok &= top < 2.0 - 1e-6;
        }
    }
    rep.check("bipartite iff top eigenvalue 2 (cycles)", bipartite_ok, "C3..C9");

    // Theorem: FAT <-> all class indicators share eigenvalue k*alpha.
    let mut forward_ok = true;
    let mut reverse_ok = true;
    let mut agree = 0u64;
    for _ in 0..trials {
        let n = rng.range(3, 7);
        let g = random_connected_graph(&mut rng, n);
        for _ in 0..20 {
            let c = random_partition(&mut rng, n);
            let exact = validate_fat(&g, &c);
            let spectral = check_fat_spectral(&g, &c, 1e-8).expect("connected input");
            match (&exact, &spectral) {
                (Ok(w), Some(alpha)) => {
                    forward_ok &= w.alpha == *alpha;
                    agree += 1;
                }
                (Err(_), None) => agree += 1,
                (Ok(_), None) => forward_ok = false,
                (Err(_), Some(_)) => reverse_ok = false,
            }
        }
    }
    rep.check(
        "FAT <-> spectral certificate",
        forward_ok && reverse_ok,
        format!("{agree} agreeing verdicts"),
    );
    rep
}
