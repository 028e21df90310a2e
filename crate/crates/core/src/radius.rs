//! Regularity radius: the smallest scaling `r` of the centered parameter box at
//! which the family contains a singular matrix.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exactla::{det_exact, det_pencil};
use crate::matrix::Matrix;
use crate::model::NormalizedMatrix;
use crate::model::SubproblemKey;
use crate::rho0::{max_rho0, Rho0Result};
use crate::roots::isolate_roots;
use crate::scalar::{serialize_rational, serialize_rationals, Interval, Rational};

fn serialize_center<S: serde::Serializer>(
    c: &Option<Vec<Rational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match c {
        Some(v) => serialize_rationals(v, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum RadiusKind {
    /// Enclosure of `r*`, degenerate when exact.
    Finite(Interval),
    Infinite,
    /// The center matrix itself is singular.
    Zero,
}

/// A singular matrix of the family scaled by `r ≈ r*`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusWitness {
    pub key: SubproblemKey,
    /// Free-parameter value in centered coordinates of the unscaled box.
    #[serde(serialize_with = "serialize_rational")]
    pub t: Rational,
    /// Scale at which `det(Ǎ + r·Q)` vanishes, `Q` the slice direction at `t`.
    pub r: Interval,
    /// `p̌ + r·q` in original coordinates.
    pub point: Vec<Interval>,
    /// `A(p̌ + r·q)` at the bracket midpoint; exactly singular when `r` is exact.
    pub matrix: Matrix,
    /// The determinant vanishes at `r` or changes sign across the bracket.
    pub validated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusResult {
    pub kind: RadiusKind,
    pub witness: Option<RadiusWitness>,
    /// The center `p̌` when the radius is zero.
    #[serde(serialize_with = "serialize_center")]
    pub center: Option<Vec<Rational>>,
    pub rho0: Option<Rho0Result>,
    pub certified: bool,
}

impl RadiusResult {
    pub fn value(&self) -> Option<&Interval> {
        match &self.kind {
            RadiusKind::Finite(v) => Some(v),
            _ => None,
        }
    }
}

fn scale_witness(nm: &NormalizedMatrix, rho0: &Rho0Result, tol: &Rational) -> Option<RadiusWitness> {
    let slice = rho0.argmax_slice()?;
    let lambda = slice.lambda.as_ref()?;
    let t = slice.t.as_ref()?.midpoint();
    // λ eigenvalue of C + tD ⇒ Ǎ + r(C' + t'D) is singular at r = 1/|λ| for
    // (C', t') = (−C, −t) when λ > 0 and (C, t) when λ < 0
    let (key, t) = if lambda.midpoint().is_positive() {
        (slice.key.negated(), -t)
    } else {
        (slice.key.clone(), t)
    };
    let radii = nm.radii();
    let q = key.point(&radii, &t);
    let direction = q
        .iter()
        .enumerate()
        .fold(Matrix::zeros(nm.dim(), nm.dim()), |acc, (i, qi)| acc.add_scaled(qi, nm.coeff(i)));
    let det = det_pencil(nm.center(), &direction);
    let estimate = lambda.midpoint().abs().recip();
    let bound = estimate.clone() * Rational::from_integer(4.into()) + Rational::from_integer(1.into());
    let roots = isolate_roots(&det, &Interval::new(Rational::zero(), bound), tol).ok()?;
    let best = roots
        .roots
        .iter()
        .min_by_key(|root| (root.midpoint() - &estimate).abs())?;
    let r = best.bracket.clone();
    let mid = best.midpoint();
    let point = nm
        .lift(&vec![Rational::zero(); nm.param_count()])
        .into_iter()
        .enumerate()
        .map(|(orig, center)| {
            match (0..nm.param_count()).find(|&j| nm.original_index(j) == orig) {
                Some(j) => {
                    let a = &center + r.lo() * &q[j];
                    let b = &center + r.hi() * &q[j];
                    if a <= b {
                        Interval::new(a, b)
                    } else {
                        Interval::new(b, a)
                    }
                }
                None => Interval::point(center),
            }
        })
        .collect();
    let matrix = nm.center().add_scaled(&mid, &direction);
    let validated = match &best.exact {
        Some(_) => det_exact(&matrix).is_zero(),
        None => {
            let lo = det.eval(r.lo());
            let hi = det.eval(r.hi());
            (lo * hi).is_negative()
        }
    };
    Some(RadiusWitness {
        key,
        t,
        r,
        point,
        matrix,
        validated,
    })
}

/// `r* = 1 / max ρ₀` over the edge slices; zero for a singular center and infinite
/// when no slice pencil has a nonzero real eigenvalue.
pub fn regularity_radius(nm: &NormalizedMatrix, tol: &Rational) -> RadiusResult {
    let Ok(rho0) = max_rho0(nm, tol) else {
        return RadiusResult {
            kind: RadiusKind::Zero,
            witness: None,
            center: Some(nm.lift(&vec![Rational::zero(); nm.param_count()])),
            rho0: None,
            certified: true,
        };
    };
    if rho0.max.hi().is_zero() {
        return RadiusResult {
            kind: RadiusKind::Infinite,
            witness: None,
            center: None,
            certified: rho0.certified,
            rho0: Some(rho0),
        };
    }
    let value = Interval::new(rho0.max.hi().recip(), rho0.max.lo().recip());
    let witness = scale_witness(nm, &rho0, tol);
    RadiusResult {
        kind: RadiusKind::Finite(value),
        witness,
        center: None,
        certified: rho0.certified,
        rho0: Some(rho0),
    }
}

/// True iff the center is nonsingular and every slice has `ρ₀ = 0`.
pub fn check_infinite_radius(nm: &NormalizedMatrix, tol: &Rational) -> bool {
    matches!(regularity_radius(nm, tol).kind, RadiusKind::Infinite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ParametricMatrix;
    use crate::scalar::{int, ratio};

    fn tol() -> Rational {
        ratio(1, 1_000_000_000)
    }

    fn one_param(a1: Matrix) -> NormalizedMatrix {
        ParametricMatrix::new(Matrix::identity(2), vec![a1], vec![Interval::symmetric(int(1))])
            .unwrap()
            .normalize()
    }

    #[test]
    fn nilpotent_dependency_is_infinite() {
        let nm = one_param(Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert!(check_infinite_radius(&nm, &tol()));
    }

    #[test]
    fn rank_one_dependency_is_finite() {
        // det(I + r·t·e₁e₁ᵀ) = 1 + rt vanishes at r = 1 for t = -1
        let nm = one_param(Matrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert!(!check_infinite_radius(&nm, &tol()));
        let r = regularity_radius(&nm, &tol());
        assert_eq!(r.kind, RadiusKind::Finite(Interval::point(int(1))));
        let w = r.witness.unwrap();
        assert!(w.validated);
        assert_eq!(w.r, Interval::point(int(1)));
        assert!(det_exact(&w.matrix).is_zero());
    }

    #[test]
    fn singular_center_is_zero() {
        let pm = ParametricMatrix::new(
            Matrix::zeros(1, 1),
            vec![Matrix::identity(1)],
            vec![Interval::new(int(-1), int(1))],
        )
        .unwrap();
        let r = regularity_radius(&pm.normalize(), &tol());
        assert_eq!(r.kind, RadiusKind::Zero);
        assert_eq!(r.center, Some(vec![int(0)]));
    }

    #[test]
    fn scalar_radius() {
        // [2 + p], p ∈ [-1, 1]: singular at p = -2, r* = 2
        let pm = ParametricMatrix::new(
            Matrix::from_i64(&[&[2]]),
            vec![Matrix::identity(1)],
            vec![Interval::symmetric(int(1))],
        )
        .unwrap();
        let r = regularity_radius(&pm.normalize(), &tol());
        assert_eq!(r.kind, RadiusKind::Finite(Interval::point(int(2))));
        assert_eq!(r.witness.unwrap().point, vec![Interval::point(int(-2))]);
    }
}
