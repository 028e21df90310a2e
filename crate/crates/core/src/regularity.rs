//! Regularity criteria: the spectral-radius sufficient test, its per-slice
//! reduction, and the exact slice-by-slice determinant root search that either
//! certifies every edge slice root-free or returns explicit singular witnesses.

use std::sync::Mutex;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{char_polynomial, det_exact, det_pencil, inverse_exact};
use crate::matrix::Matrix;
use crate::model::{subset_keys, NormalizedMatrix, SubproblemKey, SubsetKey};
use crate::poly::Poly;
use crate::roots::{isolate_roots, max_abs_real_root, Sturm};
use crate::scalar::{Interval, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Regular,
    Singular,
    Unknown,
}

/// A parameter vector at which the matrix is singular.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Slice the witness was found on; `None` for the center `p̌`.
    pub key: Option<SubproblemKey>,
    /// Value of the free parameter in centered coordinates.
    pub t: Interval,
    /// Full parameter vector in original coordinates; every entry is exact
    /// except possibly the free one.
    pub point: Vec<Interval>,
    /// The whole slice is singular (its determinant vanishes identically).
    pub whole_slice: bool,
}

impl Witness {
    pub fn is_exact(&self) -> bool {
        self.point.iter().all(Interval::is_degenerate)
    }

    pub fn exact_point(&self) -> Option<Vec<Rational>> {
        self.is_exact()
            .then(|| self.point.iter().map(|iv| iv.lo().clone()).collect())
    }

    pub(crate) fn center(nm: &NormalizedMatrix) -> Self {
        let point = nm
            .lift(&vec![Rational::zero(); nm.param_count()])
            .into_iter()
            .map(Interval::point)
            .collect();
        Self {
            key: None,
            t: Interval::point(Rational::zero()),
            point,
            whole_slice: false,
        }
    }

    pub(crate) fn on_slice(nm: &NormalizedMatrix, key: &SubproblemKey, t: Interval, whole_slice: bool) -> Self {
        let radii = nm.radii();
        let base = nm.lift(&key.point(&radii, &Rational::zero()));
        let k = nm.original_index(key.k());
        let point = base
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                if i == k {
                    Interval::new(&v + t.lo(), &v + t.hi())
                } else {
                    Interval::point(v)
                }
            })
            .collect();
        Self {
            key: Some(key.clone()),
            t,
            point,
            whole_slice,
        }
    }
}

/// Determinant polynomial of one slice and how many roots it has in the slice interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SliceCertificate {
    pub key: SubproblemKey,
    pub det: Poly,
    /// Distinct roots in the slice interval; `None` when the determinant is identically zero.
    pub roots: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityVerdict {
    pub status: Status,
    pub center_singular: bool,
    pub witnesses: Vec<Witness>,
    /// Examined slices in processing order; for a first-witness stop only the
    /// singular slice is listed.
    pub slices: Vec<SliceCertificate>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    pub tol: Rational,
    /// Collect the witnesses of every singular slice instead of stopping at the first.
    pub exhaustive: bool,
    /// Visit slices by descending `ρ(p̂ₖ|Ǎ⁻¹Aₖ|)` instead of key order.
    pub heuristic_order: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            tol: Rational::new(1.into(), 1_000_000_000.into()),
            exhaustive: false,
            heuristic_order: false,
        }
    }
}

/// Spectral radius of an entrywise nonnegative matrix: its Perron root.
pub fn perron_root(m: &Matrix, tol: &Rational) -> Interval {
    max_abs_real_root(&char_polynomial(m), tol)
        .expect("characteristic polynomial is monic")
        .unwrap_or_else(|| Interval::point(Rational::zero()))
}

/// Exact decision of `ρ(M) < 1` for entrywise nonnegative `M`.
///
/// The Perron root is a real eigenvalue and dominates all others in modulus, so
/// `ρ ≥ 1` exactly when the characteristic polynomial has a real root in `[1, ∞)`.
pub fn perron_below_one(m: &Matrix) -> bool {
    let q = char_polynomial(m);
    if q.degree().unwrap_or(0) == 0 {
        return true;
    }
    let bound = q.root_bound().max(Rational::one());
    Sturm::new(&q).count_closed(&Rational::one(), &bound) == 0
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SufficientResult {
    pub rho: Interval,
    pub holds: bool,
}

/// `M = Σ_{j∈free} p̂ⱼ |center⁻¹ Aⱼ|` for a given center.
fn sufficient_matrix(nm: &NormalizedMatrix, center_inv: &Matrix, free: &[usize]) -> Matrix {
    let n = nm.dim();
    free.iter().fold(Matrix::zeros(n, n), |acc, &j| {
        acc.add_scaled(&nm.radius(j), &center_inv.mul(nm.coeff(j)).abs())
    })
}

/// `ρ(Σₖ p̂ₖ |Ǎ⁻¹Aₖ|) < 1` is sufficient for regularity.
pub fn sufficient_condition_rho(nm: &NormalizedMatrix, tol: &Rational) -> Result<SufficientResult> {
    let inv = inverse_exact(nm.center()).map_err(|_| Error::CenterSingular)?;
    let all: Vec<usize> = (0..nm.param_count()).collect();
    let m = sufficient_matrix(nm, &inv, &all);
    Ok(SufficientResult {
        rho: perron_root(&m, tol),
        holds: perron_below_one(&m),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SliceRho {
    pub key: SubsetKey,
    /// `None` when the slice's own center matrix is singular.
    pub rho: Option<Interval>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReducedResult {
    /// `Regular` or `Unknown`; a sufficient test never proves singularity.
    pub status: Status,
    pub subset_size: usize,
    pub slices: Vec<SliceRho>,
    /// Largest slice value, `None` if some slice center is singular.
    pub max: Option<Interval>,
}

/// The sufficient test applied to every `t`-parameter slice, the other parameters
/// pinned at their interval endpoints.
pub fn check_regularity_reduced_sufficient(
    nm: &NormalizedMatrix,
    t: usize,
    tol: &Rational,
) -> Result<ReducedResult> {
    if det_exact(nm.center()).is_zero() {
        return Err(Error::CenterSingular);
    }
    let keys = subset_keys(nm.dim(), nm.param_count(), t)?;
    let slices: Vec<SliceRho> = keys
        .into_par_iter()
        .map(|key| {
            let center = nm.slice_base_subset(&key);
            match inverse_exact(&center) {
                Ok(inv) => {
                    let m = sufficient_matrix(nm, &inv, key.free());
                    SliceRho {
                        rho: Some(perron_root(&m, tol)),
                        holds: perron_below_one(&m),
                        key,
                    }
                }
                Err(_) => SliceRho {
                    key,
                    rho: None,
                    holds: false,
                },
            }
        })
        .collect();
    let status = if slices.iter().all(|s| s.holds) {
        Status::Regular
    } else {
        Status::Unknown
    };
    let max = slices
        .iter()
        .map(|s| s.rho.clone())
        .collect::<Option<Vec<_>>>()
        .and_then(|v| {
            v.into_iter().reduce(|a, b| {
                Interval::new(a.lo().max(b.lo()).clone(), a.hi().max(b.hi()).clone())
            })
        });
    Ok(ReducedResult {
        status,
        subset_size: t,
        slices,
        max,
    })
}

/// Slice keys, optionally reordered by descending `ρ(p̂ₖ|Ǎ⁻¹Aₖ|)`.
pub fn ordered_keys(nm: &NormalizedMatrix, heuristic: bool, tol: &Rational) -> Vec<SubproblemKey> {
    let keys = nm.keys();
    if !heuristic {
        return keys;
    }
    let Ok(inv) = inverse_exact(nm.center()) else {
        return keys;
    };
    let weights: Vec<Rational> = (0..nm.param_count())
        .map(|k| perron_root(&sufficient_matrix(nm, &inv, &[k]), tol).midpoint())
        .collect();
    let mut keys = keys;
    keys.sort_by(|a, b| weights[b.k()].cmp(&weights[a.k()]));
    keys
}

fn examine_slice(
    nm: &NormalizedMatrix,
    key: &SubproblemKey,
    tol: &Rational,
) -> (SliceCertificate, Vec<Witness>) {
    let (base, dir) = nm.slice_pencil(key);
    let det = det_pencil(&base, &dir);
    let r = nm.radius(key.k());
    let iv = Interval::new(-r.clone(), r);
    match isolate_roots(&det, &iv, tol) {
        Ok(set) => {
            let witnesses = set
                .roots
                .iter()
                .map(|root| Witness::on_slice(nm, key, root.bracket.clone(), false))
                .collect::<Vec<_>>();
            let cert = SliceCertificate {
                key: key.clone(),
                det,
                roots: Some(witnesses.len()),
            };
            (cert, witnesses)
        }
        Err(_) => {
            // determinant identically zero: every point of the slice is singular
            let w = Witness::on_slice(nm, key, Interval::point(Rational::zero()), true);
            let cert = SliceCertificate {
                key: key.clone(),
                det,
                roots: None,
            };
            (cert, vec![w])
        }
    }
}

/// Exact root search on every edge slice `A(p̌) + t·Aₖ + Σ_{i≠k} εᵢp̂ᵢAᵢ`,
/// `t ∈ [−p̂ₖ, p̂ₖ]`.
///
/// A singular center is reported immediately with the witness `p̌`. Otherwise the
/// verdict is `Singular` with the roots of the first (or every) slice whose
/// determinant vanishes in its interval, and `Regular` when none does.
pub fn check_regularity(nm: &NormalizedMatrix, opts: &CheckOptions) -> RegularityVerdict {
    if det_exact(nm.center()).is_zero() {
        return RegularityVerdict {
            status: Status::Singular,
            center_singular: true,
            witnesses: vec![Witness::center(nm)],
            slices: Vec::new(),
        };
    }
    let keys = ordered_keys(nm, opts.heuristic_order, &opts.tol);
    let (slices, witnesses) = if opts.exhaustive {
        let results: Vec<_> = keys
            .par_iter()
            .map(|key| examine_slice(nm, key, &opts.tol))
            .collect();
        let mut slices = Vec::with_capacity(results.len());
        let mut witnesses = Vec::new();
        for (cert, w) in results {
            slices.push(cert);
            witnesses.extend(w);
        }
        (slices, witnesses)
    } else {
        let seen = Mutex::new(Vec::new());
        let first = keys.par_iter().enumerate().find_map_first(|(pos, key)| {
            let (cert, w) = examine_slice(nm, key, &opts.tol);
            if w.is_empty() {
                seen.lock().expect("no panics while held").push((pos, cert));
                None
            } else {
                Some((cert, w))
            }
        });
        match first {
            Some((cert, w)) => (vec![cert], w),
            None => {
                let mut seen = seen.into_inner().expect("no panics while held");
                seen.sort_by_key(|(pos, _)| *pos);
                (seen.into_iter().map(|(_, c)| c).collect(), Vec::new())
            }
        }
    };
    let status = if witnesses.is_empty() {
        Status::Regular
    } else {
        Status::Singular
    };
    RegularityVerdict {
        status,
        center_singular: false,
        witnesses,
        slices,
    }
}
