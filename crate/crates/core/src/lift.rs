//! Theorem-backed constructors: given a graph with a validated FAT
//! coloring, build a derived graph, the transported coloring, and the
//! exact parameter the relevant theorem predicts for it.
//!
//! The predicted parameters are pure rational functions of the witness:
//!
//! - removing an index set I of classes (|I| <= k-2): alpha / (1 - alpha|I|)
//! - complement of a d-regular graph on N vertices with connected
//!   complement: (N/k - d*alpha) / (N - d - 1); when alpha = 0 the classes
//!   must already be equal-sized
//! - tensor product with any factor without isolated vertices: alpha
//! - Cartesian and strong products of regular factors:
//!   alpha*d1/(d1+d2) and alpha*(d1 + d1*d2)/(d1 + d2 + d1*d2)
//!
//! Every lift result is expected to re-validate exactly at the predicted
//! parameter; the test suites assert that round trip rather than assume it.

use crate::coloring::{validate_fat, Coloring, FatWitness};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::spectral::{self, SpectralError};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LiftError {
    #[error("cannot remove {requested} of {k} classes; at most k-2 may go")]
    TooManyClassesRemoved { requested: usize, k: usize },
    #[error("class index {id} out of range for {k} classes")]
    InvalidClassIndex { id: usize, k: usize },
    #[error("parameter singularity: alpha * |I| reaches 1")]
    ParameterSingularity,
    #[error("graph is not regular")]
    NotRegular,
    #[error("complement is disconnected")]
    ComplementDisconnected,
    #[error("alpha = 0 complement lift requires equal class sizes")]
    UnequalClassesAtAlphaZero,
    #[error("factor graph has an isolated vertex")]
    IsolatedVertexInFactor,
    #[error("eigenfunction support leaks into a removed class (vertex {0})")]
    SupportViolation(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Which theorem produced a lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremTag {
    Removal,
    Complement,
    Tensor,
    Cartesian,
    Strong,
}

/// A derived graph with its transported coloring and the exact parameter
/// the theorem predicts for it.
#[derive(Debug, Clone, Serialize)]
pub struct LiftResult {
    pub graph: Graph,
    pub coloring: Coloring,
    #[serde(with = "rational::ratio_string")]
    pub predicted_alpha: Rational,
    pub theorem_tag: TheoremTag,
}

fn ensure_witness(g: &Graph, c: &Coloring, witness: &FatWitness) {
    debug_assert_eq!(
        validate_fat(g, c).ok().as_ref(),
        Some(witness),
        "lift input must carry the witness of a validated coloring"
    );
}

/// Denominator 1 - alpha * |I| of the removal formula.
fn removal_denominator(alpha: &Rational, removed: usize) -> Result<Rational, LiftError> {
    let den = Rational::one() - rational::ratio(removed as i64, 1) * alpha;
    if den <= Rational::zero() {
        return Err(LiftError::ParameterSingularity);
    }
    Ok(den)
}

/// Induced subgraph on the classes not in `removed`, with the coloring
/// restricted and class ids compacted. Parameter becomes
/// alpha / (1 - alpha |I|). An empty `removed` set is the identity lift.
pub fn remove_classes(
    g: &Graph,
    c: &Coloring,
    witness: &FatWitness,
    removed: &BTreeSet<usize>,
) -> Result<LiftResult, LiftError> {
    ensure_witness(g, c, witness);
    let k = c.k();
    if let Some(&id) = removed.iter().find(|&&i| i >= k) {
        return Err(LiftError::InvalidClassIndex { id, k });
    }
    if removed.is_empty() {
        return Ok(LiftResult {
            graph: g.clone(),
            coloring: c.clone(),
            predicted_alpha: witness.alpha.clone(),
            theorem_tag: TheoremTag::Removal,
        });
    }
    if removed.len() + 2 > k {
        return Err(LiftError::TooManyClassesRemoved {
            requested: removed.len(),
            k,
        });
    }
    let den = removal_denominator(&witness.alpha, removed.len())?;
    let predicted_alpha = &witness.alpha / den;

    let mut new_class = vec![usize::MAX; k];
    let mut next = 0;
    for class in 0..k {
        if !removed.contains(&class) {
            new_class[class] = next;
            next += 1;
        }
    }
    let keep: VertexSet = (0..g.vertex_count())
        .filter(|&v| !removed.contains(&c.class_of(v)))
        .collect();
    let induced = g.induced_subgraph(&keep).expect("kept classes are nonempty");
    let assignment: Vec<usize> = induced
        .new_to_old
        .iter()
        .map(|&old| new_class[c.class_of(old)])
        .collect();
    let coloring = Coloring::new(next, assignment).expect("kept classes stay nonempty");
    Ok(LiftResult {
        graph: induced.graph,
        coloring,
        predicted_alpha,
        theorem_tag: TheoremTag::Removal,
    })
}

/// Residual of `f` (an eigenfunction of `g` at `lambda`, supported on the
/// kept classes) on the induced subgraph, evaluated at the shifted
/// eigenvalue 1 + (lambda - 1)/(1 - |I| alpha).
pub fn restricted_eigenvalue_shift(
    g: &Graph,
    c: &Coloring,
    witness: &FatWitness,
    removed: &BTreeSet<usize>,
    f: &[f64],
    lambda: &Rational,
) -> Result<f64, LiftError> {
    ensure_witness(g, c, witness);
    let k = c.k();
    if let Some(&id) = removed.iter().find(|&&i| i >= k) {
        return Err(LiftError::InvalidClassIndex { id, k });
    }
    if k < removed.len() + 2 {
        return Err(LiftError::TooManyClassesRemoved {
            requested: removed.len(),
            k,
        });
    }
    if let Some(v) = (0..g.vertex_count())
        .find(|&v| f[v] != 0.0 && removed.contains(&c.class_of(v)))
    {
        return Err(LiftError::SupportViolation(v));
    }
    let den = removal_denominator(&witness.alpha, removed.len())?;
    let shifted = Rational::one() + (lambda - Rational::one()) / den;

    let keep: VertexSet = (0..g.vertex_count())
        .filter(|&v| !removed.contains(&c.class_of(v)))
        .collect();
    let induced = g.induced_subgraph(&keep).expect("kept classes are nonempty");
    let restricted: Vec<f64> = induced.new_to_old.iter().map(|&old| f[old]).collect();
    Ok(spectral::eigen_residual(
        &induced.graph,
        &restricted,
        rational::to_f64(&shifted),
    )?)
}

/// Transfer a FAT coloring of a d-regular graph to its complement. For
/// `k = 1` the lift is the trivial coloring with the alpha = 0 convention
/// (the parameter formula is meaningless with no second class).
pub fn complement_lift(
    g: &Graph,
    c: &Coloring,
    witness: &FatWitness,
) -> Result<LiftResult, LiftError> {
    ensure_witness(g, c, witness);
    let d = g.regular_degree().ok_or(LiftError::NotRegular)?;
    let comp = g.complement();
    if !comp.is_connected() {
        return Err(LiftError::ComplementDisconnected);
    }
    if witness.k == 1 {
        return Ok(LiftResult {
            graph: comp,
            coloring: c.clone(),
            predicted_alpha: Rational::zero(),
            theorem_tag: TheoremTag::Complement,
        });
    }
    if witness.alpha.is_zero() && !c.equal_class_sizes() {
        return Err(LiftError::UnequalClassesAtAlphaZero);
    }
    let n = g.vertex_count() as i64;
    let class_size = rational::ratio(n, witness.k as i64);
    let predicted_alpha =
        (class_size - rational::ratio(d as i64, 1) * &witness.alpha)
            / rational::ratio(n - d as i64 - 1, 1);
    Ok(LiftResult {
        graph: comp,
        coloring: c.clone(),
        predicted_alpha,
        theorem_tag: TheoremTag::Complement,
    })
}

/// Class assignment on a product: (v, w) inherits the class of v.
fn lifted_coloring(c1: &Coloring, n2: usize) -> Coloring {
    let mut assignment = Vec::with_capacity(c1.vertex_count() * n2);
    for v in 0..c1.vertex_count() {
        assignment.extend(std::iter::repeat(c1.class_of(v)).take(n2));
    }
    Coloring::new(c1.k(), assignment).expect("classes V_i x V(G2) stay nonempty")
}

/// Lift to the tensor product; the parameter is unchanged. The factor must
/// have no isolated vertices.
pub fn tensor_lift(
    g1: &Graph,
    c1: &Coloring,
    witness1: &FatWitness,
    g2: &Graph,
) -> Result<LiftResult, LiftError> {
    ensure_witness(g1, c1, witness1);
    if g2.vertex_count() == 0 || (0..g2.vertex_count()).any(|v| g2.is_isolated(v)) {
        return Err(LiftError::IsolatedVertexInFactor);
    }
    Ok(LiftResult {
        graph: g1.tensor_product(g2),
        coloring: lifted_coloring(c1, g2.vertex_count()),
        predicted_alpha: witness1.alpha.clone(),
        theorem_tag: TheoremTag::Tensor,
    })
}

fn regular_pair(g1: &Graph, g2: &Graph) -> Result<(i64, i64), LiftError> {
    let d1 = g1.regular_degree().ok_or(LiftError::NotRegular)?;
    let d2 = g2.regular_degree().ok_or(LiftError::NotRegular)?;
    Ok((d1 as i64, d2 as i64))
}

/// Lift to the Cartesian product of regular graphs; the parameter scales to
/// alpha * d1 / (d1 + d2).
pub fn cartesian_lift(
    g1: &Graph,
    c1: &Coloring,
    witness1: &FatWitness,
    g2: &Graph,
) -> Result<LiftResult, LiftError> {
    ensure_witness(g1, c1, witness1);
    let (d1, d2) = regular_pair(g1, g2)?;
    let predicted_alpha = if d1 + d2 == 0 {
        // Both factors edgeless: the product is edgeless and the canonical
        // witness has alpha = 0.
        Rational::zero()
    } else {
        &witness1.alpha * rational::ratio(d1, d1 + d2)
    };
    Ok(LiftResult {
        graph: g1.cartesian_product(g2),
        coloring: lifted_coloring(c1, g2.vertex_count()),
        predicted_alpha,
        theorem_tag: TheoremTag::Cartesian,
    })
}

/// Lift to the strong product of regular graphs; the parameter scales to
/// alpha * (d1 + d1*d2) / (d1 + d2 + d1*d2).
pub fn strong_lift(
    g1: &Graph,
    c1: &Coloring,
    witness1: &FatWitness,
    g2: &Graph,
) -> Result<LiftResult, LiftError> {
    ensure_witness(g1, c1, witness1);
    let (d1, d2) = regular_pair(g1, g2)?;
    let den = d1 + d2 + d1 * d2;
    let predicted_alpha = if den == 0 {
        Rational::zero()
    } else {
        &witness1.alpha * rational::ratio(d1 + d1 * d2, den)
    };
    Ok(LiftResult {
        graph: g1.strong_product(g2),
        coloring: lifted_coloring(c1, g2.vertex_count()),
        predicted_alpha,
        theorem_tag: TheoremTag::Strong,
    })
}

/// Product flavor for spectrum checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductKind {
    Tensor,
    Cartesian,
    Strong,
}

/// Verify that the product spectrum equals its factor-combination formula:
/// tensor `l + t - l*t`, Cartesian `(d1 l + d2 t)/(d1 + d2)`, strong
/// `(d1 d2 (l + t - l t) + d1 l + d2 t)/(d1 d2 + d1 + d2)`. The multisets
/// are compared after sorting, pairwise within `tol`.
pub fn product_spectrum_check(
    g1: &Graph,
    g2: &Graph,
    kind: ProductKind,
    tol: f64,
) -> Result<bool, LiftError> {
    let isolated =
        |g: &Graph| g.vertex_count() == 0 || (0..g.vertex_count()).any(|v| g.is_isolated(v));
    if isolated(g1) || isolated(g2) {
        return Err(LiftError::PreconditionViolated(
            "factors must have no isolated vertices".into(),
        ));
    }
    let combine: Box<dyn Fn(f64, f64) -> f64> = match kind {
        ProductKind::Tensor => Box::new(|l, t| l + t - l * t),
        ProductKind::Cartesian | ProductKind::Strong => {
            let (d1, d2) = regular_pair(g1, g2).map_err(|_| {
                LiftError::PreconditionViolated(
                    "Cartesian/strong spectrum formulas require regular factors".into(),
                )
            })?;
            let (d1, d2) = (d1 as f64, d2 as f64);
            if kind == ProductKind::Cartesian {
                Box::new(move |l, t| (d1 * l + d2 * t) / (d1 + d2))
            } else {
                Box::new(move |l, t| {
                    (d1 * d2 * (l + t - l * t) + d1 * l + d2 * t) / (d1 * d2 + d1 + d2)
                })
            }
        }
    };
    let dec1 = spectral::spectrum(g1, 1e-10)?;
    let dec2 = spectral::spectrum(g2, 1e-10)?;
    let combine = &*combine;
    let mut expected: Vec<f64> = dec1
        .eigenvalues
        .iter()
        .flat_map(|&l| dec2.eigenvalues.iter().map(move |&t| combine(l, t)))
        .collect();
    expected.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

    let product = match kind {
        ProductKind::Tensor => g1.tensor_product(g2),
        ProductKind::Cartesian => g1.cartesian_product(g2),
        ProductKind::Strong => g1.strong_product(g2),
    };
    let direct = spectral::spectrum(&product, 1e-10)?.eigenvalues;
    Ok(expected
        .iter()
        .zip(&direct)
        .all(|(a, b)| (a - b).abs() <= tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan;
    use crate::rational::ratio;
    use crate::spectral::class_indicator;

    fn validated(g: &Graph, k: usize, a: &[usize]) -> (Coloring, FatWitness) {
        let c = Coloring::new(k, a.to_vec()).unwrap();
        let w = validate_fat(g, &c).unwrap();
        (c, w)
    }

    fn classes(ids: &[usize]) -> BTreeSet<usize> {
        ids.iter().copied().collect()
    }

    #[test]
    fn remove_one_class_from_c6() {
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);
        let lift = remove_classes(&g, &c, &w, &classes(&[2])).unwrap();
        assert_eq!(lift.graph.vertex_count(), 4);
        assert_eq!(lift.graph.edge_count(), 2);
        assert_eq!(lift.predicted_alpha, ratio(1, 1));
        let w2 = validate_fat(&lift.graph, &lift.coloring).unwrap();
        assert_eq!(w2.alpha, lift.predicted_alpha);
    }

    #[test]
    fn remove_singleton_from_k4() {
        let g = Graph::complete(4).unwrap();
        let (c, w) = validated(&g, 4, &[0, 1, 2, 3]);
        let lift = remove_classes(&g, &c, &w, &classes(&[3])).unwrap();
        assert_eq!(lift.graph, Graph::complete(3).unwrap());
        assert_eq!(lift.predicted_alpha, ratio(1, 2));
        let w2 = validate_fat(&lift.graph, &lift.coloring).unwrap();
        assert_eq!(w2.alpha, ratio(1, 2));
    }

    #[test]
    fn remove_empty_set_is_identity() {
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 2, &[0, 1, 0, 1, 0, 1]);
        let lift = remove_classes(&g, &c, &w, &BTreeSet::new()).unwrap();
        assert_eq!(lift.graph, g);
        assert_eq!(lift.coloring, c);
        assert_eq!(lift.predicted_alpha, w.alpha);
    }

    #[test]
    fn remove_rejects_too_many() {
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 2, &[0, 1, 0, 1, 0, 1]);
        assert!(matches!(
            remove_classes(&g, &c, &w, &classes(&[0])),
            Err(LiftError::TooManyClassesRemoved { .. })
        ));
        assert!(matches!(
            remove_classes(&g, &c, &w, &classes(&[7])),
            Err(LiftError::InvalidClassIndex { id: 7, .. })
        ));
    }

    #[test]
    fn shift_c6_restriction_is_bipartite_top() {
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);
        let f = class_indicator(&c, 0, 1).unwrap();
        // lambda = k*alpha = 3/2 shifts to 1 + (1/2)/(1/2) = 2.
        let res =
            restricted_eigenvalue_shift(&g, &c, &w, &classes(&[2]), &f.values, &ratio(3, 2))
                .unwrap();
        assert!(res <= 1e-12, "residual {res}");
    }

    #[test]
    fn shift_k4_restriction_hits_k3_eigenvalue() {
        let g = Graph::complete(4).unwrap();
        let (c, w) = validated(&g, 4, &[0, 1, 2, 3]);
        let f = class_indicator(&c, 0, 1).unwrap();
        let res =
            restricted_eigenvalue_shift(&g, &c, &w, &classes(&[3]), &f.values, &ratio(4, 3))
                .unwrap();
        assert!(res <= 1e-12, "residual {res}");
    }

    #[test]
    fn shift_rejects_support_leak() {
        let g = Graph::complete(4).unwrap();
        let (c, w) = validated(&g, 4, &[0, 1, 2, 3]);
        let f = class_indicator(&c, 0, 3).unwrap();
        assert!(matches!(
            restricted_eigenvalue_shift(&g, &c, &w, &classes(&[3]), &f.values, &ratio(4, 3)),
            Err(LiftError::SupportViolation(3))
        ));
    }

    #[test]
    fn complement_of_three_squares() {
        let c4 = Graph::cycle(4).unwrap();
        let g = c4.disjoint_union(&c4).disjoint_union(&c4);
        let mut a = vec![0; 12];
        a[4..8].fill(1);
        a[8..12].fill(2);
        let (c, w) = validated(&g, 3, &a);
        assert_eq!(w.alpha, ratio(0, 1));
        let lift = complement_lift(&g, &c, &w).unwrap();
        assert_eq!(lift.predicted_alpha, ratio(4, 9));
        let w2 = validate_fat(&lift.graph, &lift.coloring).unwrap();
        assert_eq!(w2.alpha, ratio(4, 9));
    }

    #[test]
    fn complement_rejects_unequal_alpha_zero() {
        let c4 = Graph::cycle(4).unwrap();
        let g = c4.disjoint_union(&c4).disjoint_union(&c4);
        let mut a = vec![0; 12];
        a[8..12].fill(1); // classes of sizes 8 and 4
        let (c, w) = validated(&g, 2, &a);
        assert_eq!(w.alpha, ratio(0, 1));
        assert!(matches!(
            complement_lift(&g, &c, &w),
            Err(LiftError::UnequalClassesAtAlphaZero)
        ));
    }

    #[test]
    fn complement_of_c6_coloring() {
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);
        let lift = complement_lift(&g, &c, &w).unwrap();
        assert_eq!(lift.predicted_alpha, ratio(1, 3));
        let w2 = validate_fat(&lift.graph, &lift.coloring).unwrap();
        assert_eq!(w2.alpha, ratio(1, 3));
    }

    #[test]
    fn complement_of_k4_is_disconnected() {
        let g = Graph::complete(4).unwrap();
        let (c, w) = validated(&g, 4, &[0, 1, 2, 3]);
        assert!(matches!(
            complement_lift(&g, &c, &w),
            Err(LiftError::ComplementDisconnected)
        ));
    }

    #[test]
    fn tensor_lift_keeps_alpha() {
        let g = Graph::cycle(6).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);
        let lift = tensor_lift(&g, &c, &w, &k2).unwrap();
        assert_eq!(lift.predicted_alpha, ratio(1, 2));
        let w2 = validate_fat(&lift.graph, &lift.coloring).unwrap();
        assert_eq!(w2.alpha, ratio(1, 2));

        let (c2, w2) = validated(&g, 2, &[0, 1, 0, 1, 0, 1]);
        let lift = tensor_lift(&g, &c2, &w2, &k2).unwrap();
        assert_eq!(lift.predicted_alpha, ratio(1, 1));
        assert!(validate_fat(&lift.graph, &lift.coloring).is_ok());

        let (c3, w3) = validated(&k2, 2, &[0, 1]);
        let lift = tensor_lift(&k2, &c3, &w3, &k2).unwrap();
        assert_eq!(lift.graph.edge_count(), 2);
        let w4 = validate_fat(&lift.graph, &lift.coloring).unwrap();
        assert_eq!(w4.alpha, ratio(1, 1));
    }

    #[test]
    fn tensor_lift_rejects_isolated_factor() {
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 2, &[0, 1, 0, 1, 0, 1]);
        assert!(matches!(
            tensor_lift(&g, &c, &w, &Graph::edgeless(2)),
            Err(LiftError::IsolatedVertexInFactor)
        ));
    }

    #[test]
    fn cartesian_and_strong_lifts() {
        let g = Graph::cycle(6).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);

        let cart = cartesian_lift(&g, &c, &w, &k2).unwrap();
        assert_eq!(cart.predicted_alpha, ratio(1, 3));
        let wc = validate_fat(&cart.graph, &cart.coloring).unwrap();
        assert_eq!(wc.alpha, ratio(1, 3));

        let strong = strong_lift(&g, &c, &w, &k2).unwrap();
        assert_eq!(strong.predicted_alpha, ratio(2, 5));
        let ws = validate_fat(&strong.graph, &strong.coloring).unwrap();
        assert_eq!(ws.alpha, ratio(2, 5));
    }

    #[test]
    fn cartesian_with_k1_is_identity() {
        let g = Graph::cycle(6).unwrap();
        let k1 = Graph::complete(1).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);
        let lift = cartesian_lift(&g, &c, &w, &k1).unwrap();
        assert_eq!(lift.graph, g);
        assert_eq!(lift.predicted_alpha, w.alpha);
    }

    #[test]
    fn cartesian_rejects_irregular() {
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let g = Graph::cycle(6).unwrap();
        let (c, w) = validated(&g, 3, &[0, 1, 2, 0, 1, 2]);
        assert!(matches!(
            cartesian_lift(&g, &c, &w, &path),
            Err(LiftError::NotRegular)
        ));
    }

    #[test]
    fn product_spectra_match_formulas() {
        let c4 = Graph::cycle(4).unwrap();
        let c6 = Graph::cycle(6).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(product_spectrum_check(&c4, &k2, ProductKind::Tensor, 1e-8).unwrap());
        assert!(product_spectrum_check(&c6, &k2, ProductKind::Cartesian, 1e-8).unwrap());
        assert!(product_spectrum_check(&k2, &k2, ProductKind::Strong, 1e-8).unwrap());
    }

    #[test]
    fn strong_k2_k2_is_k4() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.strong_product(&k2), Graph::complete(4).unwrap());
    }

    #[test]
    fn spectrum_check_rejects_isolated() {
        let g = Graph::edgeless(2);
        let k2 = Graph::complete(2).unwrap();
        assert!(matches!(
            product_spectrum_check(&g, &k2, ProductKind::Tensor, 1e-8),
            Err(LiftError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn removal_composes() {
        let g = turan(8, 2).unwrap().graph;
        let (c, w) = validated(&g, 4, &[0, 1, 2, 3, 0, 1, 2, 3]);
        let batch = remove_classes(&g, &c, &w, &classes(&[1, 3])).unwrap();

        let first = remove_classes(&g, &c, &w, &classes(&[1])).unwrap();
        let w1 = validate_fat(&first.graph, &first.coloring).unwrap();
        assert_eq!(w1.alpha, first.predicted_alpha);
        // Class 3 renumbers to 2 after removing class 1.
        let second =
            remove_classes(&first.graph, &first.coloring, &w1, &classes(&[2])).unwrap();
        assert_eq!(second.graph, batch.graph);
        assert_eq!(second.coloring, batch.coloring);
        assert_eq!(second.predicted_alpha, batch.predicted_alpha);
    }
}
