//! Interval hull of the united solution set of `A(p)x = b(p)`.
//!
//! Each component of the solution restricted to an edge slice is a rational
//! function of the free parameter (Cramer's rule). The hull is the union of the
//! ranges of these functions over all slices; a slice whose determinant vanishes
//! in its interval instead turns the computation into a singularity report.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::exactla::{det_exact, det_pencil};
use crate::model::{NormalizedSystem, SubproblemKey};
use crate::poly::Poly;
use crate::regularity::Witness;
use crate::roots::{isolate_roots, rational_range, RangeResult};
use crate::scalar::{Interval, Rational};

/// `xᵢ(t) = num(t) / den(t)` on one slice, in lowest terms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CramerCurve {
    pub num: Poly,
    pub den: Poly,
}

impl CramerCurve {
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }
}

/// Where a hull endpoint is attained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Endpoint {
    pub key: SubproblemKey,
    /// Centered free-parameter value (or bracket) attaining the endpoint.
    pub t: Interval,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Attainment {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum HullStatus {
    Hull,
    SingularityReport(Witness),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HullResult {
    pub status: HullStatus,
    /// Componentwise hull; empty for a singularity report.
    pub hull: Vec<Interval>,
    pub attaining: Vec<Attainment>,
    /// Number of rational-range computations performed.
    pub range_calls: usize,
}

fn slice_determinant(sys: &NormalizedSystem, key: &SubproblemKey) -> Poly {
    let (base, dir) = sys.matrix().slice_pencil(key);
    det_pencil(&base, &dir)
}

/// Component `i` of the solution on the slice `key`, reduced by the gcd.
pub fn cramer_curve(sys: &NormalizedSystem, key: &SubproblemKey, i: usize) -> CramerCurve {
    let (base, dir) = sys.matrix().slice_pencil(key);
    let (b_base, b_dir) = sys.slice_rhs(key);
    let den = det_pencil(&base, &dir);
    let num = det_pencil(&base.with_column(i, &b_base), &dir.with_column(i, &b_dir));
    if num.is_zero() || den.is_zero() {
        return CramerCurve { num, den };
    }
    let g = num.gcd(&den);
    CramerCurve {
        num: num.exact_div(&g),
        den: den.exact_div(&g),
    }
}

/// First singular point of a slice, if its determinant vanishes in the slice interval.
fn slice_singularity(sys: &NormalizedSystem, key: &SubproblemKey, tol: &Rational) -> Option<Witness> {
    let nm = sys.matrix();
    let det = slice_determinant(sys, key);
    let iv = Interval::symmetric(nm.radius(key.k()));
    match isolate_roots(&det, &iv, tol) {
        Err(_) => Some(Witness::on_slice(nm, key, Interval::point(Rational::zero()), true)),
        Ok(set) => set
            .roots
            .first()
            .map(|root| Witness::on_slice(nm, key, root.bracket.clone(), false)),
    }
}

fn merge(a: (Interval, Endpoint, Endpoint), b: (Interval, Endpoint, Endpoint)) -> (Interval, Endpoint, Endpoint) {
    let lower = if b.0.lo() < a.0.lo() { b.1 } else { a.1 };
    let upper = if b.0.hi() > a.0.hi() { b.2 } else { a.2 };
    let lo = a.0.lo().min(b.0.lo()).clone();
    let hi = a.0.hi().max(b.0.hi()).clone();
    (Interval::new(lo, hi), lower, upper)
}

/// Exact hull over the whole parameter box, or a singular witness.
pub fn solve_hull(sys: &NormalizedSystem, tol: &Rational) -> HullResult {
    let nm = sys.matrix();
    let singular = |w: Witness| HullResult {
        status: HullStatus::SingularityReport(w),
        hull: Vec::new(),
        attaining: Vec::new(),
        range_calls: 0,
    };
    if det_exact(nm.center()).is_zero() {
        return singular(Witness::center(nm));
    }
    let keys = nm.keys();
    if let Some(w) = keys
        .par_iter()
        .find_map_first(|key| slice_singularity(sys, key, tol))
    {
        return singular(w);
    }
    let n = nm.dim();
    let tasks: Vec<(usize, &SubproblemKey)> = keys
        .iter()
        .flat_map(|key| (0..n).map(move |i| (i, key)))
        .collect();
    let ranges: Vec<(usize, &SubproblemKey, Result<RangeResult, Error>)> = tasks
        .into_par_iter()
        .map(|(i, key)| {
            let curve = cramer_curve(sys, key, i);
            let iv = Interval::symmetric(nm.radius(key.k()));
            (i, key, rational_range(&curve.num, &curve.den, &iv, tol))
        })
        .collect();
    let range_calls = ranges.len();
    let mut per_component: Vec<Option<(Interval, Endpoint, Endpoint)>> = vec![None; n];
    for (i, key, range) in ranges {
        let range = match range {
            Ok(r) => r,
            Err(Error::PoleInInterval { pole }) => {
                // unreachable while the slice determinant is root-free, kept for safety
                return singular(Witness::on_slice(nm, key, *pole, false));
            }
            Err(e) => panic!("range of a Cramer curve failed: {e}"),
        };
        let item = (
            range.range,
            Endpoint {
                key: key.clone(),
                t: range.argmin,
            },
            Endpoint {
                key: key.clone(),
                t: range.argmax,
            },
        );
        per_component[i] = Some(match per_component[i].take() {
            None => item,
            Some(acc) => merge(acc, item),
        });
    }
    let (hull, attaining) = per_component
        .into_iter()
        .map(|c| {
            let (iv, lower, upper) = c.expect("every component has at least one slice");
            (iv, Attainment { lower, upper })
        })
        .unzip();
    HullResult {
        status: HullStatus::Hull,
        hull,
        attaining,
        range_calls,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::model::{ParametricLinearSystem, ParametricMatrix};
    use crate::scalar::{int, ratio};

    fn scalar_system() -> NormalizedSystem {
        let pm = ParametricMatrix::new(
            Matrix::from_i64(&[&[2]]),
            vec![Matrix::identity(1)],
            vec![Interval::symmetric(ratio(1, 2))],
        )
        .unwrap();
        ParametricLinearSystem::with_constant_rhs(pm, vec![int(1)])
            .unwrap()
            .normalize()
    }

    #[test]
    fn scalar_cramer_curve() {
        let sys = scalar_system();
        let key = SubproblemKey::new(0, vec![]);
        let c = cramer_curve(&sys, &key, 0);
        // 1 / (2 + t)
        assert_eq!(c.eval(&int(0)), Some(ratio(1, 2)));
        assert_eq!(c.eval(&ratio(1, 2)), Some(ratio(2, 5)));
        assert_eq!(c.den.degree(), Some(1));
        assert_eq!(c.num.degree(), Some(0));
    }

    #[test]
    fn scalar_hull() {
        let h = solve_hull(&scalar_system(), &ratio(1, 1_000_000_000));
        assert_eq!(h.status, HullStatus::Hull);
        assert_eq!(h.hull, vec![Interval::new(ratio(2, 5), ratio(2, 3))]);
        assert_eq!(h.range_calls, 1);
        assert_eq!(h.attaining[0].lower.t, Interval::point(ratio(1, 2)));
    }

    #[test]
    fn singular_slice_is_reported() {
        let pm = ParametricMatrix::new(
            Matrix::from_i64(&[&[1]]),
            vec![Matrix::identity(1)],
            vec![Interval::symmetric(int(2))],
        )
        .unwrap();
        let sys = ParametricLinearSystem::with_constant_rhs(pm, vec![int(1)])
            .unwrap()
            .normalize();
        match solve_hull(&sys, &ratio(1, 1000)).status {
            HullStatus::SingularityReport(w) => assert_eq!(w.exact_point(), Some(vec![int(-1)])),
            other => panic!("expected a singularity report, got {other:?}"),
        }
    }
}
