//! Acceptance suite: one test per exit criterion, each printing a pass line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Tolerances are pinned in the assertions.

use fatlas_core::coloring::{validate_fat, Coloring};
use fatlas_core::graph::{complete_multipartite, turan, Graph, MultipartiteSpec};
use fatlas_core::lift::{
    cartesian_lift, complement_lift, product_spectrum_check, remove_classes,
    restricted_eigenvalue_shift, strong_lift, tensor_lift, LiftError, LiftResult, ProductKind,
};
use fatlas_core::multipartite::{
    bipartite_condition, fat_chromatic_multipartite, fat_chromatic_turan,
    multipartite_spectrum_closed, VerdictCase,
};
use fatlas_core::rational::{ratio, to_f64, Rational};
use fatlas_core::rng::SplitMix64;
use fatlas_core::search::{all_fat_colorings, search_with, SearchOptions};
use fatlas_core::spectral::{check_fat_spectral, class_indicator, eigen_residual, spectrum};
use fatlas_core::verify::random_spec;
use num_traits::Zero;
use std::collections::BTreeSet;

fn pass(criterion: usize, detail: &str) {
    println!("[acceptance] criterion {criterion}: PASS ({detail})");
}

fn brute(g: &Graph) -> fatlas_core::SearchReport {
    search_with(
        g,
        &SearchOptions {
            workers: 2,
            ..Default::default()
        },
    )
    .expect("graph under enumeration cap")
}

#[test]
fn criterion_01_complete_graphs() {
    for n in 2..=7usize {
        let g = Graph::complete(n).unwrap();
        let report = brute(&g);
        assert_eq!(report.chi_fat, n, "chi^FAT(K_{n})");
        assert_eq!(
            report.witness.alpha,
            ratio(1, n as i64 - 1),
            "alpha of K_{n}"
        );
    }
    pass(1, "chi^FAT(K_N) = N with alpha = 1/(N-1), N = 2..7");
}

#[test]
fn criterion_02_regular_turan_oracle_equivalence() {
    let mut cases = 0;
    for n in 2..=12usize {
        for t in (1..=n).filter(|t| n % t == 0) {
            let g = turan(n, t).unwrap().graph;
            let closed = fat_chromatic_turan(n, t).unwrap();
            assert_eq!(closed, t.max(n / t));
            let report = brute(&g);
            assert_eq!(report.chi_fat, closed, "T({n},{t})");
            cases += 1;
        }
    }

    // Full catalog of T(6,3): only balanced and monochromatic colorings.
    let t63 = turan(6, 3).unwrap();
    let catalog = all_fat_colorings(&t63.graph, None).unwrap();
    assert!(!catalog.is_empty());
    for (c, _) in &catalog {
        let balanced = t63.parts.iter().all(|part| {
            let mut per_class = vec![0usize; c.k()];
            for &v in part {
                per_class[c.class_of(v)] += 1;
            }
            per_class.windows(2).all(|w| w[0] == w[1])
        });
        let monochromatic = {
            let part_mono = t63
                .parts
                .iter()
                .all(|p| p.iter().all(|&v| c.class_of(v) == c.class_of(p[0])));
            part_mono && {
                let mut per_class = vec![0usize; c.k()];
                for p in &t63.parts {
                    per_class[c.class_of(p[0])] += 1;
                }
                per_class.windows(2).all(|w| w[0] == w[1])
            }
        };
        assert!(
            balanced || monochromatic,
            "unexpected catalog entry {:?}",
            c.assignment()
        );
    }
    pass(
        2,
        &format!("{cases} (N,t) pairs match max{{t, N/t}}; T(6,3) catalog is balanced/monochromatic"),
    );
}

#[test]
fn criterion_03_k6442() {
    let spec = MultipartiteSpec::from_sizes(&[6, 4, 4, 2]).unwrap();
    let verdict = fat_chromatic_multipartite(&spec);
    assert_eq!(verdict.chi_fat, 2);
    assert_eq!(verdict.predicted_alpha, ratio(1, 2));

    let mg = complete_multipartite(&spec);
    // (a) the balanced construction validates exactly at alpha = 1/2
    let witness = validate_fat(&mg.graph, &verdict.construction).unwrap();
    assert_eq!(witness.alpha, ratio(1, 2));
    assert_eq!(witness.k, 2);

    // (b) spectral certificate: f_12 residual <= 1e-8 at k*alpha = 1
    let f = class_indicator(&verdict.construction, 0, 1).unwrap();
    let res = eigen_residual(&mg.graph, &f.values, 1.0).unwrap();
    assert!(res <= 1e-8, "residual {res}");
    let alpha = check_fat_spectral(&mg.graph, &verdict.construction, 1e-8)
        .unwrap()
        .expect("certificate accepts");
    assert_eq!(alpha, ratio(1, 2));
    pass(3, "closed form 2, construction alpha = 1/2, f_12 residual at 1");
}

#[test]
fn criterion_04_k66_singletons() {
    let spec = MultipartiteSpec::new(vec![(6, 2), (1, 9)]).unwrap();
    let mg = complete_multipartite(&spec);
    // Two classes: the two six-parts vs the nine singletons.
    let mut assignment = vec![0usize; 21];
    assignment[12..].fill(1);
    let c = Coloring::new(2, assignment).unwrap();
    let w = validate_fat(&mg.graph, &c).unwrap();
    assert_eq!(w.alpha, ratio(3, 5));

    assert!(bipartite_condition(6, 2, 1, 9));
    let lhs = 2u128 * 1 * 36;
    let rhs = 9u128 * 8 * 1;
    assert_eq!(lhs, 72);
    assert_eq!(rhs, 72);

    let verdict = fat_chromatic_multipartite(&spec);
    assert_eq!(verdict.chi_fat, 2);
    assert_eq!(verdict.case, VerdictCase::BipartiteCondition);
    pass(4, "K_{6,6,1^9} validates at alpha = 3/5; condition 72 = 72");
}

#[test]
fn criterion_05_t13_4_has_no_fat_2_coloring() {
    let spec = MultipartiteSpec::from_sizes(&[4, 3, 3, 3]).unwrap();
    let verdict = fat_chromatic_multipartite(&spec);
    assert_eq!(verdict.chi_fat, 1);

    let g = turan(13, 4).unwrap().graph;
    let catalog = all_fat_colorings(&g, Some(2)).unwrap();
    assert!(
        catalog.is_empty(),
        "found unexpected FAT 2-colorings: {}",
        catalog.len()
    );
    pass(5, "closed form 1; exhaustive bipartition search found none");
}

#[test]
fn criterion_06_closed_spectra() {
    let dec = spectrum(&turan(12, 4).unwrap().graph, 1e-10).unwrap();
    let expected: Vec<f64> = std::iter::once(0.0)
        .chain(std::iter::repeat(1.0).take(8))
        .chain(std::iter::repeat(4.0 / 3.0).take(3))
        .collect();
    for (got, want) in dec.eigenvalues.iter().zip(&expected) {
        assert!((got - want).abs() <= 1e-8, "{got} vs {want}");
    }

    for n in 2..=10usize {
        let dec = spectrum(&Graph::complete(n).unwrap(), 1e-10).unwrap();
        assert!(dec.eigenvalues[0].abs() <= 1e-8);
        let top = n as f64 / (n as f64 - 1.0);
        for &lam in &dec.eigenvalues[1..] {
            assert!((lam - top).abs() <= 1e-8, "K_{n}: {lam} vs {top}");
        }
    }
    pass(6, "T(12,4) = {0, 1^8, (4/3)^3}; K_N = {0, (N/(N-1))^(N-1)} for N <= 10");
}

#[test]
fn criterion_07_sun_das_structure() {
    let mut rng = SplitMix64::new(0xFA7C0106);
    for trial in 0..20 {
        let spec = random_spec(&mut rng, 20);
        assert!(spec.distinct_sizes() >= 2 && spec.total_vertices() <= 20);
        let ms = multipartite_spectrum_closed(&spec, 1e-8)
            .unwrap_or_else(|e| panic!("trial {trial} {:?}: {e}", spec.parts()));
        assert!(
            ms.max_known_residual <= 1e-8,
            "trial {trial}: residual {}",
            ms.max_known_residual
        );
        assert_eq!(ms.total_multiplicity(), spec.total_vertices());
        assert_eq!(ms.x_values.len(), spec.distinct_sizes() - 1);
        for (i, x) in ms.x_values.iter().enumerate() {
            let lo = to_f64(&x.lower);
            let hi = to_f64(&x.upper);
            assert!(
                lo < x.value && x.value < hi,
                "trial {trial}: x_{} = {} outside ({lo}, {hi})",
                i + 1,
                x.value
            );
        }
    }
    pass(7, "20 random specs: known eigenvalues within 1e-8, x_i strictly bracketed");
}

#[test]
fn criterion_08_theorem_bidirectional() {
    let mut graphs_checked = 0u64;
    let mut partitions_checked = 0u64;

    let mut run = |g: &Graph| {
        if !g.is_connected() {
            return;
        }
        graphs_checked += 1;
        let n = g.vertex_count();
        for c in fatlas_core::search::enumerate_partitions(n).unwrap() {
            partitions_checked += 1;
            let exact = validate_fat(g, &c);
            let spectral = check_fat_spectral(g, &c, 1e-8).unwrap();
            match (&exact, &spectral) {
                (Ok(w), Some(alpha)) => {
                    assert_eq!(&w.alpha, alpha, "alpha mismatch on {:?}", c.assignment());
                    // Residual condition at k*alpha for every pair.
                    let lam = w.k as f64 * to_f64(&w.alpha);
                    for i in 0..w.k {
                        for j in i + 1..w.k {
                            let f = class_indicator(&c, i, j).unwrap();
                            let r = eigen_residual(g, &f.values, lam).unwrap();
                            assert!(r <= 1e-8, "residual {r}");
                        }
                    }
                }
                (Err(_), None) => {}
                (a, b) => panic!(
                    "divergence on n={n} coloring {:?}: exact {:?} spectral {:?}",
                    c.assignment(),
                    a.as_ref().map(|w| w.k),
                    b
                ),
            }
        }
    };

    // Exhaustive over all labeled graphs for n <= 5.
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            run(&Graph::from_edge_list(n, &edges).unwrap());
        }
    }

    // Random samples at n = 6, 7.
    let mut rng = SplitMix64::new(0xFA7C0108);
    for n in [6usize, 7] {
        for _ in 0..15 {
            run(&fatlas_core::verify::random_connected_graph(&mut rng, n));
        }
    }
    assert!(graphs_checked > 500);
    pass(
        8,
        &format!("validate_fat <-> spectral on {graphs_checked} graphs / {partitions_checked} partitions"),
    );
}

fn recertify(lift: &LiftResult) {
    let w = validate_fat(&lift.graph, &lift.coloring).expect("lift validates");
    assert_eq!(w.alpha, lift.predicted_alpha, "predicted parameter is exact");
    // Residual re-certification at k' * alpha' on the lifted graph.
    let lam = w.k as f64 * to_f64(&w.alpha);
    for i in 0..w.k {
        for j in i + 1..w.k {
            let f = class_indicator(&lift.coloring, i, j).unwrap();
            let r = eigen_residual(&lift.graph, &f.values, lam).unwrap();
            assert!(r <= 1e-8, "lift residual {r}");
        }
    }
}

fn subsets_up_to(k: usize, max_size: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << k) {
        let set: BTreeSet<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        if set.len() <= max_size {
            out.push(set);
        }
    }
    out
}

#[test]
fn criterion_09_lift_round_trips() {
    let bases = [
        Graph::complete(4).unwrap(),
        Graph::cycle(6).unwrap(),
        turan(6, 3).unwrap().graph,
        turan(8, 2).unwrap().graph,
    ];
    let factors = [
        Graph::complete(2).unwrap(),
        Graph::complete(3).unwrap(),
        Graph::cycle(4).unwrap(),
    ];
    let mut lifts = 0u64;
    for g in &bases {
        let d1 = g.regular_degree().expect("bases are regular") as i64;
        for (c, w) in all_fat_colorings(g, None).unwrap() {
            for f in &factors {
                let d2 = f.regular_degree().expect("factors are regular") as i64;

                let t = tensor_lift(g, &c, &w, f).unwrap();
                assert_eq!(t.predicted_alpha, w.alpha);
                recertify(&t);

                let cart = cartesian_lift(g, &c, &w, f).unwrap();
                assert_eq!(cart.predicted_alpha, &w.alpha * ratio(d1, d1 + d2));
                recertify(&cart);

                let s = strong_lift(g, &c, &w, f).unwrap();
                assert_eq!(
                    s.predicted_alpha,
                    &w.alpha * ratio(d1 + d1 * d2, d1 + d2 + d1 * d2)
                );
                recertify(&s);
                lifts += 3;
            }

            // Removal lifts for every admissible index set.
            if w.k >= 2 {
                for removed in subsets_up_to(w.k, w.k - 2) {
                    let size = removed.len() as i64;
                    let lift = remove_classes(g, &c, &w, &removed).unwrap();
                    let expected =
                        &w.alpha / (Rational::from_integer(1.into()) - ratio(size, 1) * &w.alpha);
                    assert_eq!(lift.predicted_alpha, expected);
                    recertify(&lift);
                    lifts += 1;
                }
            }
        }
    }
    pass(9, &format!("{lifts} lifts validated with exact parameters"));
}

#[test]
fn criterion_10_complement_theorem() {
    let c4 = Graph::cycle(4).unwrap();
    let g = c4.disjoint_union(&c4).disjoint_union(&c4);

    let mut a = vec![0usize; 12];
    a[4..8].fill(1);
    a[8..12].fill(2);
    let c = Coloring::new(3, a).unwrap();
    let w = validate_fat(&g, &c).unwrap();
    assert!(w.alpha.is_zero());
    let lift = complement_lift(&g, &c, &w).unwrap();
    assert_eq!(lift.predicted_alpha, ratio(4, 9));
    let w2 = validate_fat(&lift.graph, &lift.coloring).unwrap();
    assert_eq!(w2.alpha, ratio(4, 9));

    let mut b = vec![0usize; 12];
    b[8..12].fill(1);
    let cb = Coloring::new(2, b).unwrap();
    let wb = validate_fat(&g, &cb).unwrap();
    assert!(matches!(
        complement_lift(&g, &cb, &wb),
        Err(LiftError::UnequalClassesAtAlphaZero)
    ));
    pass(10, "3xC4 lifts to alpha = 4/9; unequal alpha-0 classes rejected");
}

#[test]
fn criterion_11_eigenvalue_shift() {
    let g = Graph::complete(4).unwrap();
    let c = Coloring::new(4, vec![0, 1, 2, 3]).unwrap();
    let w = validate_fat(&g, &c).unwrap();
    let f = class_indicator(&c, 0, 1).unwrap();
    let removed: BTreeSet<usize> = [3].into_iter().collect();
    // lambda = k*alpha = 4/3 shifts to 1 + (1/3)/(2/3) = 3/2 on K_3.
    let res = restricted_eigenvalue_shift(&g, &c, &w, &removed, &f.values, &ratio(4, 3)).unwrap();
    assert!(res <= 1e-8, "residual {res}");

    // Direct cross-check on the induced K_3.
    let keep: fatlas_core::VertexSet = [0, 1, 2].into_iter().collect();
    let k3 = g.induced_subgraph(&keep).unwrap().graph;
    let r = eigen_residual(&k3, &[1.0, -1.0, 0.0], 1.5).unwrap();
    assert!(r <= 1e-8);
    pass(11, "restricted f_01 is an eigenfunction of K_3 at 3/2");
}

#[test]
fn criterion_12_product_spectra() {
    let family = [
        Graph::complete(2).unwrap(),
        Graph::complete(3).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::cycle(6).unwrap(),
    ];
    let mut checks = 0;
    for g1 in &family {
        for g2 in &family {
            for kind in [ProductKind::Tensor, ProductKind::Cartesian, ProductKind::Strong] {
                assert_eq!(
                    product_spectrum_check(g1, g2, kind, 1e-8).unwrap(),
                    true,
                    "{kind:?} on {} x {}",
                    g1.vertex_count(),
                    g2.vertex_count()
                );
                checks += 1;
            }
        }
    }
    pass(12, &format!("{checks} product spectra match the combination formulas"));
}
