//! Brute-force graders for the exact algorithms: a grid scan for singular
//! members, a sampled inner hull, and determinant polynomials by cofactor
//! expansion. All of them use exact arithmetic.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{det_exact, inverse_exact};
use crate::model::{NormalizedMatrix, ParametricLinearSystem, ParametricMatrix, SubproblemKey};
use crate::poly::Poly;
use crate::scalar::{int, ratio, Interval, Rational};

/// Largest dimension accepted by [`det_poly_bruteforce`].
pub const BRUTEFORCE_MAX_DIM: usize = 4;

/// A singular member found by [`grid_scan_singular`], in original coordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridWitness {
    /// Degenerate in every coordinate except possibly the bisected one.
    pub point: Vec<Interval>,
    /// `det A(p) = 0` holds exactly at the (degenerate) point.
    pub exact: bool,
}

fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn grid_axis(iv: &Interval, resolution: usize) -> Vec<Rational> {
    let steps = int(resolution as i64 - 1);
    (0..resolution)
        .map(|i| iv.lo() + iv.width() * int(i as i64) / &steps)
        .collect()
}

/// Bisects `det A(p)` along axis `axis` between `lo` and `hi`, which have opposite signs.
fn bisect_edge(pm: &ParametricMatrix, base: &[Rational], axis: usize, lo: Rational, hi: Rational) -> GridWitness {
    let width = ratio(1, 1_000_000_000);
    let det_at = |x: &Rational| {
        let mut p = base.to_vec();
        p[axis] = x.clone();
        det_exact(&pm.evaluate_unchecked(&p))
    };
    let (mut lo, mut hi) = (lo, hi);
    let slo = sign(&det_at(&lo));
    let point = |iv: Interval| {
        base.iter()
            .enumerate()
            .map(|(j, v)| if j == axis { iv.clone() } else { Interval::point(v.clone()) })
            .collect()
    };
    while (&hi - &lo).abs() > width {
        let mid = (&lo + &hi) / int(2);
        match sign(&det_at(&mid)) {
            0 => {
                return GridWitness {
                    point: point(Interval::point(mid)),
                    exact: true,
                }
            }
            s if s == slo => lo = mid,
            _ => hi = mid,
        }
    }
    let iv = if lo <= hi { Interval::new(lo, hi) } else { Interval::new(hi, lo) };
    GridWitness {
        point: point(iv),
        exact: false,
    }
}

/// Scans `resolution` equispaced points per axis (box vertices included) for an
/// exact zero of `det A(p)` or a sign change along a grid edge.
///
/// Grid points are visited in lexicographic order of their indices, the last
/// parameter varying fastest; exact zeros are reported before sign changes.
/// `None` says nothing about regularity.
pub fn grid_scan_singular(pm: &ParametricMatrix, resolution: usize) -> Option<GridWitness> {
    scan(pm, resolution, false).into_iter().next()
}

/// Every exact grid zero and every grid edge with a sign change, bisected, in
/// the order of [`grid_scan_singular`].
pub fn grid_scan_all(pm: &ParametricMatrix, resolution: usize) -> Vec<GridWitness> {
    scan(pm, resolution, true)
}

fn scan(pm: &ParametricMatrix, resolution: usize, all: bool) -> Vec<GridWitness> {
    assert!(resolution >= 2, "grid resolution must be at least 2");
    let k = pm.param_count();
    let axes: Vec<Vec<Rational>> = pm.params().iter().map(|iv| grid_axis(iv, resolution)).collect();
    let total = resolution.pow(k as u32);
    let index = |mut flat: usize| {
        let mut idx = vec![0; k];
        for j in (0..k).rev() {
            idx[j] = flat % resolution;
            flat /= resolution;
        }
        idx
    };
    let point_of = |idx: &[usize]| -> Vec<Rational> { idx.iter().enumerate().map(|(j, &i)| axes[j][i].clone()).collect() };
    let signs: Vec<i8> = (0..total)
        .into_par_iter()
        .map(|flat| sign(&det_exact(&pm.evaluate_unchecked(&point_of(&index(flat))))))
        .collect();
    let mut out: Vec<GridWitness> = Vec::new();
    for flat in (0..total).filter(|&f| signs[f] == 0) {
        out.push(GridWitness {
            point: point_of(&index(flat)).into_iter().map(Interval::point).collect(),
            exact: true,
        });
        if !all {
            return out;
        }
    }
    for flat in 0..total {
        let idx = index(flat);
        for axis in 0..k {
            if idx[axis] + 1 == resolution {
                continue;
            }
            let stride = resolution.pow((k - 1 - axis) as u32);
            let (a, b) = (signs[flat], signs[flat + stride]);
            if a != 0 && b != 0 && a != b {
                let p = point_of(&idx);
                let hi = axes[axis][idx[axis] + 1].clone();
                out.push(bisect_edge(pm, &p, axis, p[axis].clone(), hi));
                if !all {
                    return out;
                }
            }
        }
    }
    out
}

/// Componentwise hull of exact solutions at `samples` random rational points of
/// the box; singular samples are redrawn. Always inside the true hull.
pub fn sample_hull_inner(sys: &ParametricLinearSystem, samples: usize, seed: u64) -> Vec<Interval> {
    assert!(samples >= 1, "at least one sample is required");
    let pm = sys.matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denominator = 1i64 << 20;
    let mut out: Option<Vec<Interval>> = None;
    let mut taken = 0;
    let mut attempts = 0;
    while taken < samples {
        attempts += 1;
        assert!(
            attempts <= 100 * samples,
            "too many singular samples while sampling the hull"
        );
        let p: Vec<Rational> = pm
            .params()
            .iter()
            .map(|iv| iv.lo() + iv.width() * ratio(rng.gen_range(0..=denominator), denominator))
            .collect();
        let Ok(inv) = inverse_exact(&pm.evaluate_unchecked(&p)) else {
            continue;
        };
        let x = inv.mul_vec(&sys.rhs(&p));
        out = Some(match out {
            None => x.into_iter().map(Interval::point).collect(),
            Some(acc) => acc
                .iter()
                .zip(x)
                .map(|(iv, xi)| iv.hull(&Interval::point(xi)))
                .collect(),
        });
        taken += 1;
    }
    out.expect("at least one sample")
}

fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(Poly::zero(), |acc, j| {
            if m[0][j].is_zero() {
                return acc;
            }
            let minor: Vec<Vec<Poly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        }),
    }
}

/// Slice determinant polynomial by symbolic cofactor expansion (`n ≤ 4`).
pub fn det_poly_bruteforce(nm: &NormalizedMatrix, key: &SubproblemKey) -> Result<Poly> {
    let n = nm.dim();
    if n > BRUTEFORCE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            max: BRUTEFORCE_MAX_DIM,
        });
    }
    let (base, dir) = nm.slice_pencil(key);
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Poly::new(vec![base[(i, j)].clone(), dir[(i, j)].clone()]))
                .collect()
        })
        .collect();
    Ok(cofactor_det(&entries))
}
