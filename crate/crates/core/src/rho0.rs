//! Largest real eigenvalue magnitude over each edge slice.
//!
//! For a slice `(k, ε)` let `Mᵢ = Ǎ⁻¹Aᵢ`, `C = Σ_{i≠k} εᵢp̂ᵢMᵢ` and
//! `d(λ, t) = det(λI − C − tMₖ)`. The real points of `{d = 0, |t| ≤ p̂ₖ}` project
//! onto a finite union of closed λ-intervals whose endpoints are roots of
//! `d(λ, ±p̂ₖ)` or of `Res_t(d, ∂d/∂t)`. Between two consecutive such candidates
//! the projection is all-or-nothing, so one rational sample per gap decides it.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bivariate::{resultant, subresultant, BiPoly};
use crate::error::{Error, Result};
use crate::exactla::{char_polynomial, inverse_exact};
use crate::matrix::Matrix;
use crate::model::{NormalizedMatrix, SubproblemKey};
use crate::poly::{small_integer_nodes, Poly};
use crate::roots::{
    count_real_roots, isolate_roots, max_abs_real_root, real_roots, refine_root, RootInfo, Sturm,
};
use crate::scalar::{int, to_f64, Interval, Rational};

/// Samples per slice in the fallback used when the resultant vanishes identically.
const FALLBACK_SAMPLES: i64 = 512;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SliceRho0 {
    pub key: SubproblemKey,
    /// Enclosure of `max |λ|` over the slice, `[0, 0]` when no real eigenvalue occurs.
    pub rho: Interval,
    /// Signed eigenvalue attaining the maximum.
    pub lambda: Option<Interval>,
    /// Centered free-parameter value where it is attained.
    pub t: Option<Interval>,
    /// False when the value relies on sampling or a floating-point check.
    pub certified: bool,
    /// The exact route degenerated and the slice was sampled instead.
    pub fallback: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rho0Result {
    pub max: Interval,
    /// Index into `per_slice` of the maximizing slice, `None` when `max = 0`.
    pub argmax: Option<usize>,
    pub per_slice: Vec<SliceRho0>,
    pub certified: bool,
    /// Some slice used the sampling fallback.
    pub fallback: bool,
}

impl Rho0Result {
    pub fn argmax_slice(&self) -> Option<&SliceRho0> {
        self.argmax.map(|i| &self.per_slice[i])
    }
}

struct Candidate {
    root: RootInfo,
    boundary_lo: bool,
    boundary_hi: bool,
}

fn has_root_at(p: &Poly, root: &RootInfo) -> bool {
    match &root.exact {
        Some(r) => p.eval(r).is_zero(),
        None => {
            p.degree().unwrap_or(0) > 0
                && Sturm::new(p).count_half_open(root.bracket.lo(), root.bracket.hi()) > 0
        }
    }
}

/// Does `d(λ₀, ·)` vanish somewhere in `iv`?
fn attained_at(d: &BiPoly, lambda: &Rational, iv: &Interval) -> bool {
    let g = d.eval_lambda(lambda);
    g.is_zero() || count_real_roots(&g, iv).map_or(true, |c| c > 0)
}

/// Floating-point test of whether an irrational candidate is an isolated real point:
/// the minimum of `|d(m, t)|` over `iv` at a very close rational `m` must be tiny.
fn numerically_attained(d: &BiPoly, m: &Rational, iv: &Interval, tol: &Rational) -> bool {
    let g = d.eval_lambda(m);
    if g.is_zero() {
        return true;
    }
    let scale = g.coeffs().iter().map(|c| to_f64(&c.abs())).fold(0.0, f64::max);
    let mut points = vec![iv.lo().clone(), iv.hi().clone()];
    if let Ok(set) = isolate_roots(&g.derivative(), iv, tol) {
        points.extend(set.roots.iter().map(RootInfo::midpoint));
    }
    points
        .iter()
        .map(|t| to_f64(&g.eval(t)).abs())
        .fold(f64::INFINITY, f64::min)
        <= 1e-12 * (1.0 + scale)
}

/// An irrational root `λ*` of a square-free polynomial, held as an isolating bracket.
struct AlgebraicPoint<'a> {
    square_free: &'a Poly,
    root: RootInfo,
}

impl AlgebraicPoint<'_> {
    fn vanishes(&self, h: &Poly) -> bool {
        if h.is_zero() {
            return true;
        }
        let g = self.square_free.gcd(h);
        g.degree().unwrap_or(0) > 0
            && Sturm::new(&g).count_half_open(self.root.bracket.lo(), self.root.bracket.hi()) > 0
    }

    fn refine(&mut self) {
        let width = self.root.bracket.width() / int(1 << 16);
        self.root = refine_root(self.square_free, &self.root, &width);
    }

    /// Where `num(λ*)/den(λ*)` lies relative to `[-r, r]`: `Some(true)` strictly
    /// inside, `Some(false)` strictly outside, `None` if refinement does not decide.
    fn ratio_inside(&mut self, num: &Poly, den: &Poly, r: &Rational) -> Option<bool> {
        for _ in 0..MAX_REFINEMENTS {
            if let Some(v) = num.eval_interval(&self.root.bracket).div(&den.eval_interval(&self.root.bracket)) {
                if v.hi() < &-r.clone() || v.lo() > r {
                    return Some(false);
                }
                if v.lo() > &-r.clone() && v.hi() < r {
                    return Some(true);
                }
            }
            self.refine();
        }
        None
    }

    /// Sign of `h(λ*)`, which must be nonzero.
    fn sign_of(&mut self, h: &Poly) -> Option<bool> {
        for _ in 0..MAX_REFINEMENTS {
            let v = h.eval_interval(&self.root.bracket);
            if v.lo().is_positive() {
                return Some(true);
            }
            if v.hi().is_negative() {
                return Some(false);
            }
            self.refine();
        }
        None
    }
}

/// Rounds of 16-bit bracket refinement before an exact decision gives up.
const MAX_REFINEMENTS: usize = 16;

/// Exact test of whether the irrational candidate `λ*` (a root of the resultant)
/// has a real double root `t` of `f(λ*, ·)` in `(-r, r)`, via the first two
/// subresultants of `f` and `∂f/∂t`. `None` in the degenerate cases it does not cover.
fn double_root_inside(f: &BiPoly, square_free: &Poly, root: &RootInfo, r: &Rational) -> Option<bool> {
    let mut at = AlgebraicPoint {
        square_free,
        root: root.clone(),
    };
    let l = f.degree_t()?;
    if at.vanishes(&f.coeff_t(l)) {
        return None;
    }
    let g = f.derivative_t();
    // gcd of degree 1: the double root is real, t = -s10/s11
    let s1 = subresultant(f, &g, 1)?;
    if !at.vanishes(&s1.coeff_t(1)) {
        return at.ratio_inside(&-&s1.coeff_t(0), &s1.coeff_t(1), r);
    }
    // gcd of degree 2: q(t) = s22 t² + s21 t + s20
    let s2 = subresultant(f, &g, 2)?;
    let (a, b, c) = (s2.coeff_t(2), s2.coeff_t(1), s2.coeff_t(0));
    if at.vanishes(&a) {
        return None;
    }
    let disc = &(&b * &b) - &(&a * &c).scale(&int(4));
    let two_a = a.scale(&int(2));
    if at.vanishes(&disc) {
        return at.ratio_inside(&-&b, &two_a, r);
    }
    if !at.sign_of(&disc)? {
        // a complex conjugate pair
        return Some(false);
    }
    // two real roots: one inside iff q changes sign over [-r, r]; two inside iff q
    // has the sign of a at both ends and its vertex lies inside
    let q_at = |x: &Rational| &(&a.scale(&(x * x)) + &b.scale(x)) + &c;
    let lo_pos = at.sign_of(&q_at(&-r.clone()))?;
    let hi_pos = at.sign_of(&q_at(r))?;
    if lo_pos != hi_pos {
        return Some(true);
    }
    let a_pos = at.sign_of(&a)?;
    if lo_pos != a_pos {
        return Some(false);
    }
    at.ratio_inside(&-&b, &two_a, r)
}

/// The free-parameter value at which a validated candidate is reached.
fn locate_t(d: &BiPoly, cand: &Candidate, r: &Rational, tol: &Rational) -> Interval {
    if cand.boundary_lo {
        return Interval::point(-r.clone());
    }
    if cand.boundary_hi {
        return Interval::point(r.clone());
    }
    let iv = Interval::symmetric(r.clone());
    let m = cand.root.midpoint();
    let g = d.eval_lambda(&m);
    if g.is_zero() {
        return Interval::point(Rational::zero());
    }
    if cand.root.is_exact() {
        if let Ok(set) = isolate_roots(&g, &iv, tol) {
            if let Some(root) = set.roots.first() {
                return root.bracket.clone();
            }
        }
    }
    // interior extremum: a critical point of d(m, ·) with the smallest |d|
    let mut best: Option<(f64, Interval)> = None;
    if let Ok(set) = isolate_roots(&g.derivative(), &iv, tol) {
        for root in &set.roots {
            let v = to_f64(&g.eval(&root.midpoint())).abs();
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, root.bracket.clone()));
            }
        }
    }
    best.map_or_else(|| Interval::point(Rational::zero()), |(_, iv)| iv)
}

fn abs_bracket(iv: &Interval) -> Interval {
    if iv.lo().is_negative() && !iv.hi().is_positive() {
        Interval::new(-iv.hi().clone(), -iv.lo().clone())
    } else {
        iv.clone()
    }
}

fn empty_slice(key: &SubproblemKey, certified: bool) -> SliceRho0 {
    SliceRho0 {
        key: key.clone(),
        rho: Interval::point(Rational::zero()),
        lambda: None,
        t: None,
        certified,
        fallback: false,
    }
}

/// Dense sampling of `t` when the exact route degenerates.
fn sampled_slice(
    key: &SubproblemKey,
    c: &Matrix,
    dmat: &Matrix,
    r: &Rational,
    tol: &Rational,
) -> SliceRho0 {
    let mut best = SliceRho0 {
        fallback: true,
        ..empty_slice(key, false)
    };
    for j in 0..=FALLBACK_SAMPLES {
        let t = -r.clone() + r * int(2) * Rational::new(j.into(), FALLBACK_SAMPLES.into());
        let q = char_polynomial(&c.add_scaled(&t, dmat));
        let Some(rho) = max_abs_real_root(&q, tol).expect("monic") else {
            continue;
        };
        if rho.midpoint() > best.rho.midpoint() {
            // recover the sign: λ = +ρ is a root or λ = −ρ is
            let positive = real_roots(&q, tol)
                .map(|set| set.roots.iter().any(|x| x.bracket.overlaps(&rho)))
                .unwrap_or(true);
            let lambda = if positive {
                rho.clone()
            } else {
                Interval::new(-rho.hi().clone(), -rho.lo().clone())
            };
            best = SliceRho0 {
                key: key.clone(),
                rho,
                lambda: Some(lambda),
                t: Some(Interval::point(t)),
                certified: false,
                fallback: true,
            };
        }
    }
    best
}

/// `max |λ|` over the real solutions of `d(λ, t) = 0` with `t ∈ [−p̂ₖ, p̂ₖ]`.
pub fn slice_rho0(nm: &NormalizedMatrix, ms: &[Matrix], key: &SubproblemKey, tol: &Rational) -> SliceRho0 {
    let n = nm.dim();
    let k = key.k();
    let r = nm.radius(k);
    let iv = Interval::symmetric(r.clone());
    let c = key.pinned().fold(Matrix::zeros(n, n), |acc, (i, s)| {
        acc.add_scaled(&(s.value() * nm.radius(i)), &ms[i])
    });
    let dmat = &ms[k];
    let nodes = small_integer_nodes(n + 1);
    let slices: Vec<Poly> = nodes
        .iter()
        .map(|t| char_polynomial(&c.add_scaled(t, dmat)))
        .collect();
    let d = BiPoly::interpolate_t(&nodes, &slices);
    let d_lo = d.eval_t(&-r.clone());
    let d_hi = d.eval_t(&r);

    let crit = if d.degree_t().unwrap_or(0) == 0 {
        Poly::one()
    } else {
        match resultant(&d, &d.derivative_t()) {
            Ok(res) => res,
            Err(Error::SharedFactor) => {
                log::warn!("slice {key}: resultant vanishes identically, sampling instead");
                return sampled_slice(key, &c, dmat, &r, tol);
            }
            Err(e) => panic!("resultant of a nonconstant pencil failed: {e}"),
        }
    };
    let product = &(&d_lo * &d_hi) * &crit;
    let set = real_roots(&product, tol).expect("product of monic factors is nonzero");
    let fine_width = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 40));
    let square_free = set.square_free().clone();
    let primitive = d.primitive_lambda();
    let cands: Vec<Candidate> = set
        .roots
        .into_iter()
        .map(|root| Candidate {
            boundary_lo: has_root_at(&d_lo, &root),
            boundary_hi: has_root_at(&d_hi, &root),
            root,
        })
        .collect();

    let gaps: Vec<bool> = cands
        .windows(2)
        .map(|w| {
            let s = (w[0].root.bracket.hi() + w[1].root.bracket.lo()) / int(2);
            attained_at(&d, &s, &iv)
        })
        .collect();

    let mut certified = true;
    let mut best: Option<(Interval, &Candidate)> = None;
    // visit by descending |λ| so the numeric check only runs where it matters
    let mut order: Vec<usize> = (0..cands.len()).collect();
    order.sort_by(|&a, &b| {
        abs_bracket(&cands[b].root.bracket)
            .midpoint()
            .cmp(&abs_bracket(&cands[a].root.bracket).midpoint())
    });
    for j in order {
        let cand = &cands[j];
        let mag = abs_bracket(&cand.root.bracket);
        if let Some((b, _)) = &best {
            if mag.hi() < b.lo() {
                break;
            }
        }
        let valid = cand.boundary_lo
            || cand.boundary_hi
            || (j > 0 && gaps[j - 1])
            || gaps.get(j).copied().unwrap_or(false)
            || match &cand.root.exact {
                Some(x) => attained_at(&d, x, &iv),
                None => match double_root_inside(&primitive, &square_free, &cand.root, &r) {
                    Some(inside) => inside,
                    None => {
                        certified = false;
                        let m = refine_root(&square_free, &cand.root, &fine_width).midpoint();
                        numerically_attained(&d, &m, &iv, tol)
                    }
                },
            };
        if !valid {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _)| mag.midpoint() > b.midpoint()) {
            best = Some((mag, cand));
        }
    }

    match best {
        None => empty_slice(key, certified),
        Some((mag, _)) if mag.hi().is_zero() => empty_slice(key, certified),
        Some((mag, cand)) => SliceRho0 {
            key: key.clone(),
            rho: mag,
            lambda: Some(cand.root.bracket.clone()),
            t: Some(locate_t(&d, cand, &r, tol)),
            certified,
            fallback: false,
        },
    }
}

/// Largest `ρ₀` over all edge slices, with the slice and parameter value attaining it.
pub fn max_rho0(nm: &NormalizedMatrix, tol: &Rational) -> Result<Rho0Result> {
    let inv = inverse_exact(nm.center()).map_err(|_| Error::CenterSingular)?;
    let ms: Vec<Matrix> = (0..nm.param_count()).map(|i| inv.mul(nm.coeff(i))).collect();
    let per_slice: Vec<SliceRho0> = nm
        .keys()
        .par_iter()
        .map(|key| slice_rho0(nm, &ms, key, tol))
        .collect();
    let mut argmax: Option<usize> = None;
    for (i, s) in per_slice.iter().enumerate() {
        if s.rho.hi().is_zero() {
            continue;
        }
        if argmax.is_none_or(|a| s.rho.midpoint() > per_slice[a].rho.midpoint()) {
            argmax = Some(i);
        }
    }
    let max = per_slice
        .iter()
        .map(|s| s.rho.clone())
        .reduce(|a, b| Interval::new(a.lo().max(b.lo()).clone(), a.hi().max(b.hi()).clone()))
        .unwrap_or_else(|| Interval::point(Rational::zero()));
    let certified = per_slice.iter().all(|s| s.certified);
    let fallback = per_slice.iter().any(|s| s.fallback);
    Ok(Rho0Result {
        max,
        argmax,
        per_slice,
        certified,
        fallback,
    })
}
