//! Vertex colorings and exact FAT validation.
//!
//! A k-coloring is FAT when one global parameter `alpha` makes every
//! non-isolated vertex see exactly `alpha * deg(v)` neighbors in each other
//! class and `beta * deg(v)` in its own, with `beta = 1 - (k-1)*alpha`.
//! Isolated vertices impose no constraint and may carry any color.
//!
//! Since each non-isolated vertex pins `alpha = e(v, V_i) / deg(v)` for any
//! class it does not belong to, there is only one possible candidate: we read
//! it off the first non-isolated vertex ([`infer_alpha`]) and then verify
//! every (vertex, class) pair. All arithmetic is exact; floats never touch
//! validation.

use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("class {missing} of {k} is unused; colorings must be surjective")]
    NotSurjective { missing: usize, k: usize },
    #[error("class id {id} out of range for {k} classes")]
    ClassOutOfRange { id: usize, k: usize },
    #[error("coloring has {len} entries but the graph has {n} vertices")]
    LengthMismatch { len: usize, n: usize },
    #[error("grouping is not a partition of the class ids: {0}")]
    InvalidGrouping(String),
}

/// Surjective assignment of vertices to classes `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    k: usize,
    assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, assignment: Vec<usize>) -> Result<Self, ColoringError> {
        let mut used = vec![false; k];
        for &c in &assignment {
            if c >= k {
                return Err(ColoringError::ClassOutOfRange { id: c, k });
            }
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(ColoringError::NotSurjective { missing, k });
        }
        Ok(Self { k, assignment })
    }

    /// Canonical coloring from a restricted-growth string (class count is
    /// one plus the maximum entry; an RGS is surjective by construction).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        Self {
            k,
            assignment: rgs.to_vec(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_members(&self, class: usize) -> Result<VertexSet, ColoringError> {
        if class >= self.k {
            return Err(ColoringError::ClassOutOfRange { id: class, k: self.k });
        }
        Ok(self
            .assignment
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == class)
            .map(|(v, _)| v)
            .collect())
    }

    /// Sizes of all classes.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn equal_class_sizes(&self) -> bool {
        let sizes = self.class_sizes();
        sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// Merge classes into groups; `grouping` must partition `0..k`. The new
    /// coloring has one class per group, in the order given.
    pub fn merge_classes(&self, grouping: &[Vec<usize>]) -> Result<Coloring, ColoringError> {
        let mut group_of = vec![usize::MAX; self.k];
        let mut seen = 0usize;
        for (gi, group) in grouping.iter().enumerate() {
            for &c in group {
                if c >= self.k {
                    return Err(ColoringError::InvalidGrouping(format!(
                        "class id {c} out of range"
                    )));
                }
                if group_of[c] != usize::MAX {
                    return Err(ColoringError::InvalidGrouping(format!(
                        "class id {c} appears twice"
                    )));
                }
                group_of[c] = gi;
                seen += 1;
            }
        }
        if seen != self.k {
            return Err(ColoringError::InvalidGrouping(format!(
                "covers {seen} of {} class ids",
                self.k
            )));
        }
        Coloring::new(
            grouping.len(),
            self.assignment.iter().map(|&c| group_of[c]).collect(),
        )
    }

    /// Apply a permutation of class ids (`perm[old] = new`).
    pub fn relabel_classes(&self, perm: &[usize]) -> Result<Coloring, ColoringError> {
        if perm.len() != self.k {
            return Err(ColoringError::InvalidGrouping(format!(
                "permutation length {} != k {}",
                perm.len(),
                self.k
            )));
        }
        Coloring::new(
            self.k,
            self.assignment.iter().map(|&c| perm[c]).collect(),
        )
    }

    /// Reindex vertices (`perm[old] = new`), preserving classes.
    pub fn permute_vertices(&self, perm: &[usize]) -> Coloring {
        let mut assignment = vec![0; self.assignment.len()];
        for (old, &new) in perm.iter().enumerate() {
            assignment[new] = self.assignment[old];
        }
        Coloring {
            k: self.k,
            assignment,
        }
    }

    pub fn check_compatible(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.assignment.len() != g.vertex_count() {
            return Err(ColoringError::LengthMismatch {
                len: self.assignment.len(),
                n: g.vertex_count(),
            });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            k: usize,
            assignment: Vec<usize>,
        }
        let raw = Raw::deserialize(de)?;
        Coloring::new(raw.k, raw.assignment).map_err(serde::de::Error::custom)
    }
}

/// Certificate that a coloring is FAT: `beta = 1 - (k-1)*alpha` exactly and
/// both parameters lie in [0, 1].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatWitness {
    pub k: usize,
    #[serde(with = "rational::ratio_string")]
    pub alpha: Rational,
    #[serde(with = "rational::ratio_string")]
    pub beta: Rational,
}

impl FatWitness {
    fn from_alpha(k: usize, alpha: Rational) -> Self {
        let beta = Rational::one() - Rational::from_integer((k as i64 - 1).into()) * &alpha;
        debug_assert!(rational::in_unit_interval(&alpha));
        debug_assert!(rational::in_unit_interval(&beta));
        Self { k, alpha, beta }
    }
}

/// Why a coloring failed FAT validation: the lexicographically smallest
/// (vertex, class) pair whose neighbor count disagrees with the candidate
/// parameter, together with the exact counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub vertex: usize,
    pub class: usize,
    /// Neighbors of `vertex` found in `class`.
    pub found: usize,
    /// Exact count the candidate parameter requires there.
    pub expected: Rational,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} has {} neighbors in class {}, expected {}",
            self.vertex,
            self.found,
            self.class,
            rational::format_ratio(&self.expected)
        )
    }
}

/// Candidate alpha as a reduced machine fraction (num, den), den > 0.
/// Counts and degrees are bounded by the vertex cap, so u64 never overflows.
fn reduce(num: u64, den: u64) -> (u64, u64) {
    debug_assert!(den > 0);
    let g = num_integer::gcd(num, den);
    (num / g, den / g)
}

/// First non-isolated vertex and its neighbor count into the first class it
/// does not belong to: the unique candidate for `alpha`, as (num, den).
fn raw_alpha_candidate(g: &Graph, c: &Coloring) -> Option<(u64, u64)> {
    let v = (0..g.vertex_count()).find(|&v| !g.is_isolated(v))?;
    let own = c.class_of(v);
    let class = if own == 0 { 1 } else { 0 };
    if c.k() < 2 {
        return None;
    }
    let count = g
        .neighbors(v)
        .iter()
        .filter(|&&w| c.class_of(w) == class)
        .count() as u64;
    Some(reduce(count, g.degree(v) as u64))
}

/// Candidate `alpha` read off the first non-isolated vertex and the first
/// class it does not belong to, without any global consistency check.
/// `None` when every vertex is isolated. Requires `c.k() >= 2`.
pub fn infer_alpha(g: &Graph, c: &Coloring) -> Option<Rational> {
    c.check_compatible(g).expect("coloring incompatible with graph");
    assert!(c.k() >= 2, "infer_alpha requires at least two classes");
    raw_alpha_candidate(g, c).map(|(n, d)| rational::ratio(n as i64, d as i64))
}

/// Decide whether `c` is a FAT coloring of `g`, returning the exact witness
/// or the first violated constraint in (vertex, class) order.
///
/// Conventions: `k = 1` always validates, and so do colorings of graphs
/// whose vertices are all isolated; both get the canonical witness
/// `alpha = 0`, `beta = 1`.
pub fn validate_fat(g: &Graph, c: &Coloring) -> Result<FatWitness, Rejection> {
    c.check_compatible(g).expect("coloring incompatible with graph");
    let k = c.k();
    if k <= 1 {
        return Ok(FatWitness::from_alpha(k, Rational::zero()));
    }
    let Some((a_num, a_den)) = raw_alpha_candidate(g, c) else {
        // Every vertex isolated: unconstrained, canonical witness.
        return Ok(FatWitness::from_alpha(k, Rational::zero()));
    };

    // beta = 1 - (k-1) * a_num/a_den = (a_den - (k-1) a_num) / a_den; the
    // own-class condition needs beta >= 0, checked per vertex via counts.
    let k_minus_1 = (k - 1) as u64;
    let mut counts = vec![0u64; k];
    for v in 0..g.vertex_count() {
        if g.is_isolated(v) {
            continue;
        }
        counts.iter_mut().for_each(|x| *x = 0);
        for &w in g.neighbors(v) {
            counts[c.class_of(w)] += 1;
        }
        let deg = g.degree(v) as u64;
        let own = c.class_of(v);
        for class in 0..k {
            let found = counts[class];
            let ok = if class == own {
                // e(v, own) * den == (den - (k-1) num) * deg, guarding the
                // subtraction so beta < 0 reports as a violation here.
                a_den >= k_minus_1 * a_num && found * a_den == (a_den - k_minus_1 * a_num) * deg
            } else {
                found * a_den == a_num * deg
            };
            if !ok {
                let expected = if class == own {
                    let beta = Rational::one()
                        - rational::ratio((k_minus_1 * a_num) as i64, a_den as i64);
                    beta * rational::ratio(deg as i64, 1)
                } else {
                    rational::ratio((a_num * deg) as i64, a_den as i64)
                };
                return Err(Rejection {
                    vertex: v,
                    class,
                    found: found as usize,
                    expected,
                });
            }
        }
    }
    Ok(FatWitness::from_alpha(
        k,
        rational::ratio(a_num as i64, a_den as i64),
    ))
}
