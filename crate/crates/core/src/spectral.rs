//! Normalized Laplacian L = I - D^{-1}A, its spectrum, and the spectral
//! characterization of FAT colorings.
//!
//! Eigenvalues are computed on the symmetric similar form
//! S = I - D^{-1/2} A D^{-1/2} with cyclic Jacobi sweeps; eigenfunctions of
//! L are recovered as f = D^{-1/2} u and normalized in the degree-weighted
//! inner product `<f,g> = sum_v deg(v) f(v) g(v)`, under which L is
//! self-adjoint.
//!
//! Isolated vertices follow the convention D^{-1}_{ii} := 0, so the
//! corresponding rows of both L and S are identity rows and each isolated
//! vertex contributes eigenvalue 1.
//!
//! The FAT connection: on a connected graph, a partition is a FAT coloring
//! with parameter `alpha` exactly when every two-class indicator f_ij is an
//! eigenfunction of L, all with the common eigenvalue `k*alpha`.
//! [`check_fat_spectral`] certifies this numerically while taking the
//! candidate `alpha` from exact neighbor counts, so floating point never
//! decides the parameter.

use crate::coloring::{infer_alpha, Coloring};
use crate::graph::{Graph, MultipartiteGraph, VertexSet};
use crate::rational::{self, Rational};
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
const JACOBI_OFF_TOLERANCE: f64 = 1e-12;
/// Hard cap on Jacobi sweeps.
const JACOBI_SWEEP_CAP: usize = 100;
/// Eigenvalues closer than this are grouped into one multiplicity bucket.
pub const EIGENVALUE_GROUPING_TOL: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("Jacobi sweeps did not converge: off-diagonal norm {off_norm:.3e} after {sweeps} sweeps")]
    NoConvergence { off_norm: f64, sweeps: usize },
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("graph is disconnected; the spectral FAT certificate requires a connected graph")]
    Disconnected,
    #[error("positive and negative supports must be nonempty")]
    EmptySide,
    #[error("positive and negative supports must be disjoint")]
    SidesOverlap,
    #[error("index {id} out of range ({limit} available)")]
    IndexError { id: usize, limit: usize },
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)] * self[(i, j)];
                }
            }
        }
        s.sqrt()
    }

    fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// The normalized Laplacian of a graph in both the random-walk form
/// L = I - D^{-1}A and the symmetric form S = I - D^{-1/2}AD^{-1/2}.
#[derive(Debug, Clone)]
pub struct Laplacian {
    pub l: DenseMatrix,
    pub s: DenseMatrix,
}

pub fn normalized_laplacian(g: &Graph) -> Laplacian {
    let n = g.vertex_count();
    let mut l = DenseMatrix::identity(n);
    let mut s = DenseMatrix::identity(n);
    for v in 0..n {
        let dv = g.degree(v) as f64;
        for &w in g.neighbors(v) {
            let dw = g.degree(w) as f64;
            l[(v, w)] = -1.0 / dv;
            s[(v, w)] = -1.0 / (dv * dw).sqrt();
        }
    }
    Laplacian { l, s }
}

impl Laplacian {
    /// Exact rational entries of L; rows of isolated vertices are identity.
    pub fn rational_entries(&self, g: &Graph) -> Vec<Vec<Rational>> {
        let n = g.vertex_count();
        (0..n)
            .map(|v| {
                (0..n)
                    .map(|w| {
                        if v == w {
                            rational::ratio(1, 1)
                        } else if g.has_edge(v, w) {
                            rational::ratio(-1, g.degree(v) as i64)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Apply L to a vertex function: (Lf)(v) = f(v) - (1/deg v) * sum of f over
/// neighbors; isolated vertices map to f(v).
pub fn apply_laplacian(g: &Graph, f: &[f64]) -> Vec<f64> {
    (0..g.vertex_count())
        .map(|v| {
            let d = g.degree(v);
            if d == 0 {
                f[v]
            } else {
                f[v] - g.neighbors(v).iter().map(|&w| f[w]).sum::<f64>() / d as f64
            }
        })
        .collect()
}

/// Degree-weighted inner product `sum_v deg(v) f(v) g(v)`.
pub fn weighted_inner_product(g: &Graph, f: &[f64], h: &[f64]) -> f64 {
    (0..g.vertex_count())
        .map(|v| g.degree(v) as f64 * f[v] * h[v])
        .sum()
}

pub fn weighted_norm(g: &Graph, f: &[f64]) -> f64 {
    weighted_inner_product(g, f, f).max(0.0).sqrt()
}

/// Relative eigenpair residual `||Lf - lambda f||_w / ||f||_w`.
///
/// For functions supported entirely on isolated vertices both norms are 0
/// and the residual is reported as 0 (the eigenpair equation holds there by
/// the isolated-vertex convention when lambda = 1, and the degree weights
/// see nothing either way).
pub fn eigen_residual(g: &Graph, f: &[f64], lambda: f64) -> Result<f64, SpectralError> {
    if f.iter().all(|&x| x == 0.0) {
        return Err(SpectralError::ZeroFunction);
    }
    let lf = apply_laplacian(g, f);
    let diff: Vec<f64> = lf.iter().zip(f).map(|(a, b)| a - lambda * b).collect();
    let nf = weighted_norm(g, f);
    if nf == 0.0 {
        return Ok(0.0);
    }
    Ok(weighted_norm(g, &diff) / nf)
}

/// Full eigendecomposition of the normalized Laplacian.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    /// Ascending eigenvalues, clamped into [0, 2] when within `tol`.
    pub eigenvalues: Vec<f64>,
    /// Eigenfunctions of L (already back-transformed by D^{-1/2} and
    /// normalized in the degree-weighted norm), one per eigenvalue.
    pub eigenfunctions: Vec<Vec<f64>>,
    pub tol: f64,
}

impl SpectralDecomposition {
    /// Eigenvalues grouped into (representative, multiplicity) buckets;
    /// consecutive values within [`EIGENVALUE_GROUPING_TOL`] share a bucket
    /// and the representative is the bucket mean.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut i = 0;
        while i < self.eigenvalues.len() {
            let mut j = i + 1;
            while j < self.eigenvalues.len()
                && self.eigenvalues[j] - self.eigenvalues[j - 1] <= EIGENVALUE_GROUPING_TOL
            {
                j += 1;
            }
            let mult = j - i;
            let mean = self.eigenvalues[i..j].iter().sum::<f64>() / mult as f64;
            out.push((mean, mult));
            i = j;
        }
        out
    }

    /// Multiplicity of eigenvalue 0 within `tol`.
    pub fn zero_multiplicity(&self) -> usize {
        self.eigenvalues.iter().filter(|&&x| x <= self.tol).count()
    }
}

/// Spectrum JSON payload: eigenvalues rounded to 12 significant digits so
/// the serialized form is byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumJson {
    pub tol: f64,
    pub eigenvalues: Vec<f64>,
    pub multiplicities_grouped: Vec<(f64, usize)>,
}

/// Round to 12 significant decimal digits.
pub fn round_sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted float reparses")
}

impl SpectralDecomposition {
    pub fn to_json_payload(&self) -> SpectrumJson {
        SpectrumJson {
            tol: self.tol,
            eigenvalues: self.eigenvalues.iter().copied().map(round_sig12).collect(),
            multiplicities_grouped: self
                .grouped()
                .into_iter()
                .map(|(v, m)| (round_sig12(v), m))
                .collect(),
        }
    }
}

/// Cyclic Jacobi diagonalization of a symmetric matrix. Returns unsorted
/// (eigenvalues, eigenvector matrix with eigenvectors as columns).
fn jacobi_eigen(mut a: DenseMatrix) -> Result<(Vec<f64>, DenseMatrix), SpectralError> {
    let n = a.size();
    let mut v = DenseMatrix::identity(n);
    if n <= 1 {
        return Ok(((0..n).map(|i| a[(i, i)]).collect(), v));
    }
    for _sweep in 0..JACOBI_SWEEP_CAP {
        let off = a.off_diagonal_norm();
        if off < JACOBI_OFF_TOLERANCE {
            return Ok(((0..n).map(|i| a[(i, i)]).collect(), v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                // Rotation angle choice from Numerical Recipes §11.1: the
                // smaller root of t^2 + 2t*theta - 1 = 0 for stability.
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a[(p, p)];
                let aqq = a[(q, q)];
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let arp = a[(r, p)];
                        let arq = a[(r, q)];
                        a[(r, p)] = arp - s * (arq + tau * arp);
                        a[(r, q)] = arq + s * (arp - tau * arq);
                        a[(p, r)] = a[(r, p)];
                        a[(q, r)] = a[(r, q)];
                    }
                }
                for r in 0..n {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp - s * (vrq + tau * vrp);
                    v[(r, q)] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    let off = a.off_diagonal_norm();
    if off < JACOBI_OFF_TOLERANCE {
        Ok(((0..n).map(|i| a[(i, i)]).collect(), v))
    } else {
        Err(SpectralError::NoConvergence {
            off_norm: off,
            sweeps: JACOBI_SWEEP_CAP,
        })
    }
}

/// Eigendecomposition of the normalized Laplacian. Eigenvalues ascending,
/// clamped into [0, 2] when they overshoot by at most `tol`.
pub fn spectrum(g: &Graph, tol: f64) -> Result<SpectralDecomposition, SpectralError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = g.vertex_count();
    let lap = normalized_laplacian(g);
    let (raw_vals, vecs) = jacobi_eigen(lap.s)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        raw_vals[i]
            .partial_cmp(&raw_vals[j])
            .expect("eigenvalues are finite")
            .then(i.cmp(&j))
    });
    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenfunctions = Vec::with_capacity(n);
    for &idx in &order {
        let mut lam = raw_vals[idx];
        if lam < 0.0 && lam >= -tol {
            lam = 0.0;
        }
        if lam > 2.0 && lam <= 2.0 + tol {
            lam = 2.0;
        }
        eigenvalues.push(lam);
        // Back-transform: f = D^{-1/2} u; isolated coordinates keep u as-is
        // (both L and S act as the identity there).
        let u = vecs.column(idx);
        let mut f: Vec<f64> = (0..n)
            .map(|v| {
                let d = g.degree(v);
                if d == 0 {
                    u[v]
                } else {
                    u[v] / (d as f64).sqrt()
                }
            })
            .collect();
        let norm = weighted_norm(g, &f);
        if norm > 0.0 {
            f.iter_mut().for_each(|x| *x /= norm);
        }
        // Deterministic sign: first coordinate of noticeable magnitude is
        // positive.
        if let Some(&lead) = f.iter().find(|x| x.abs() > 1e-9) {
            if lead < 0.0 {
                f.iter_mut().for_each(|x| *x = -*x);
            }
        }
        eigenfunctions.push(f);
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenfunctions,
        tol,
    })
}

/// A ±1/0 vertex function together with its supports.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorFunction {
    pub values: Vec<f64>,
    pub positive_set: VertexSet,
    pub negative_set: VertexSet,
}

impl IndicatorFunction {
    fn from_sets(n: usize, positive: VertexSet, negative: VertexSet) -> Self {
        let mut values = vec![0.0; n];
        for &v in &positive {
            values[v] = 1.0;
        }
        for &v in &negative {
            values[v] = -1.0;
        }
        Self {
            values,
            positive_set: positive,
            negative_set: negative,
        }
    }
}

/// f_ij: +1 on class i, -1 on class j, 0 elsewhere. Requires i != j.
pub fn class_indicator(c: &Coloring, i: usize, j: usize) -> Result<IndicatorFunction, SpectralError> {
    if i == j || i >= c.k() || j >= c.k() {
        return Err(SpectralError::IndexError {
            id: i.max(j),
            limit: c.k(),
        });
    }
    let pos = c.class_members(i).expect("index checked");
    let neg = c.class_members(j).expect("index checked");
    Ok(IndicatorFunction::from_sets(c.vertex_count(), pos, neg))
}

/// f_{v,w}: +1 at v, -1 at w on a graph with n vertices. Requires v != w.
pub fn vertex_pair_indicator(n: usize, v: usize, w: usize) -> Result<IndicatorFunction, SpectralError> {
    if v == w || v >= n || w >= n {
        return Err(SpectralError::IndexError {
            id: v.max(w),
            limit: n,
        });
    }
    Ok(IndicatorFunction::from_sets(
        n,
        [v].into_iter().collect(),
        [w].into_iter().collect(),
    ))
}

/// g_ij: +1 on Turán part i, -1 on part j of a realized multipartite graph.
pub fn part_indicator(
    mg: &MultipartiteGraph,
    i: usize,
    j: usize,
) -> Result<IndicatorFunction, SpectralError> {
    let limit = mg.parts.len();
    if i == j || i >= limit || j >= limit {
        return Err(SpectralError::IndexError {
            id: i.max(j),
            limit,
        });
    }
    Ok(IndicatorFunction::from_sets(
        mg.graph.vertex_count(),
        mg.parts[i].iter().copied().collect(),
        mg.parts[j].iter().copied().collect(),
    ))
}

/// Spectral FAT certificate for a connected graph: `Some(alpha)` iff every
/// class indicator f_ij is (numerically) an eigenfunction at the common
/// eigenvalue `k*alpha`, with the candidate `alpha` taken from exact
/// neighbor counts. On connected graphs this accepts exactly when
/// [`crate::coloring::validate_fat`] does.
pub fn check_fat_spectral(
    g: &Graph,
    c: &Coloring,
    tol: f64,
) -> Result<Option<Rational>, SpectralError> {
    c.check_compatible(g).expect("coloring incompatible with graph");
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let k = c.k();
    if k <= 1 {
        // Single class: only f_ij pairs are vacuous and the coloring is the
        // trivial FAT coloring at eigenvalue 0.
        return Ok(Some(Rational::zero()));
    }
    let alpha = infer_alpha(g, c).expect("connected graphs have no isolated vertices");
    let lambda = k as f64 * rational::to_f64(&alpha);
    for i in 0..k {
        for j in i + 1..k {
            let f = class_indicator(c, i, j).expect("class indices in range");
            let res = eigen_residual(g, &f.values, lambda)?;
            if res > tol {
                return Ok(None);
            }
        }
    }
    Ok(Some(alpha))
}

/// Diagnostics from [`plus_minus_eigen_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct PlusMinusReport {
    pub passed: bool,
    /// First vertex violating one of the two exact conditions, with the
    /// count pair that failed.
    pub first_violation: Option<(usize, i64, i64)>,
}

/// Exact test that the ±1 indicator of (V+, V-) is an eigenfunction at
/// `lambda`: outside vertices must see V+ and V- equally, and every member
/// must satisfy `lambda - 1 = (e(v, other side) - e(v, own side)) / deg v`.
pub fn plus_minus_eigen_check(
    g: &Graph,
    v_plus: &VertexSet,
    v_minus: &VertexSet,
    lambda: &Rational,
) -> Result<PlusMinusReport, SpectralError> {
    if v_plus.is_empty() || v_minus.is_empty() {
        return Err(SpectralError::EmptySide);
    }
    if v_plus.intersection(v_minus).next().is_some() {
        return Err(SpectralError::SidesOverlap);
    }
    if let Some(&id) = v_plus.union(v_minus).find(|&&v| v >= g.vertex_count()) {
        return Err(SpectralError::IndexError {
            id,
            limit: g.vertex_count(),
        });
    }
    let shifted = lambda - rational::ratio(1, 1);
    for v in 0..g.vertex_count() {
        let ep = g.neighbor_count_in(v, v_plus) as i64;
        let em = g.neighbor_count_in(v, v_minus) as i64;
        if v_plus.contains(&v) || v_minus.contains(&v) {
            // (lambda - 1) * deg v == e(v, other side) - e(v, own side)
            let signed = if v_plus.contains(&v) { em - ep } else { ep - em };
            let lhs = &shifted * rational::ratio(g.degree(v) as i64, 1);
            if lhs != rational::ratio(signed, 1) {
                return Ok(PlusMinusReport {
                    passed: false,
                    first_violation: Some((v, ep, em)),
                });
            }
        } else if ep != em {
            return Ok(PlusMinusReport {
                passed: false,
                first_violation: Some((v, ep, em)),
            });
        }
    }
    Ok(PlusMinusReport {
        passed: true,
        first_violation: None,
    })
}
