//! Real roots of univariate rational polynomials: Sturm counting, isolation with
//! exact detection of rational roots, the largest root magnitude, and the range of
//! a rational function over an interval.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, Poly};
use crate::scalar::{int, max_rat, min_rat, round_down, round_up, Interval, Rational};

fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct Sturm {
    seq: Vec<Poly>,
    ints: Vec<IntPoly>,
}

impl Sturm {
    /// Builds the sequence for the square-free part of `p` (which must be nonzero).
    pub fn new(p: &Poly) -> Self {
        Self::from_square_free(p.square_free())
    }

    pub fn from_square_free(s: Poly) -> Self {
        // positive rescaling keeps every sign and keeps coefficients small
        fn norm(p: Poly) -> Poly {
            let lead = p.leading().expect("nonzero").abs().recip();
            p.scale(&lead)
        }
        let d = s.derivative();
        let mut seq = vec![s];
        if !d.is_zero() {
            seq.push(norm(d));
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(norm(-&r));
            }
        }
        let ints = seq.iter().map(IntPoly::from_poly).collect();
        Self { seq, ints }
    }

    pub fn poly(&self) -> &Poly {
        &self.seq[0]
    }

    fn int_poly(&self) -> &IntPoly {
        &self.ints[0]
    }

    fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut prev = 0i8;
        let mut changes = 0;
        for s in signs.filter(|&s| s != 0) {
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        changes
    }

    pub fn variations(&self, x: &Rational) -> usize {
        Self::count_changes(self.ints.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::count_changes(self.seq.iter().map(|p| {
            let s = sign(p.leading().expect("nonzero"));
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a) - self.variations(b)
    }

    /// Distinct roots in `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        let at_a = usize::from(self.int_poly().sign_at(a) == 0);
        if a > b {
            0
        } else {
            at_a + self.count_half_open(a, b)
        }
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// One isolated real root.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootInfo {
    /// Contains exactly this root; degenerate when the root is exact.
    pub bracket: Interval,
    #[serde(serialize_with = "serialize_opt")]
    pub exact: Option<Rational>,
    pub multiplicity: usize,
}

fn serialize_opt<S: serde::Serializer>(
    x: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl RootInfo {
    fn exact(r: Rational) -> Self {
        Self {
            bracket: Interval::point(r.clone()),
            exact: Some(r),
            multiplicity: 1,
        }
    }

    /// The exact root, or the midpoint of its bracket.
    pub fn midpoint(&self) -> Rational {
        match &self.exact {
            Some(r) => r.clone(),
            None => self.bracket.midpoint(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

/// Isolated real roots in ascending order, with the square-free polynomial
/// they were isolated for (needed to refine them further).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    pub roots: Vec<RootInfo>,
    #[serde(skip)]
    square_free: Poly,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn square_free(&self) -> &Poly {
        &self.square_free
    }

    /// Root `i` with its bracket shrunk to width `≤ width`.
    pub fn refined(&self, i: usize, width: &Rational) -> RootInfo {
        refine_root(&self.square_free, &self.roots[i], width)
    }
}

/// Shrinks a bracket with `s(lo)·s(hi) < 0` to width `≤ width` by sign bisection.
fn bisect_sign(s: &IntPoly, mut lo: Rational, mut hi: Rational, width: &Rational) -> RootInfo {
    let slo = s.sign_at(&lo);
    debug_assert!(slo != 0 && slo == -s.sign_at(&hi));
    while &(&hi - &lo) > width {
        let mid = half(&lo, &hi);
        match s.sign_at(&mid) {
            0 => return RootInfo::exact(mid),
            v if v == slo => lo = mid,
            _ => hi = mid,
        }
    }
    RootInfo {
        bracket: Interval::new(lo, hi),
        exact: None,
        multiplicity: 1,
    }
}

/// Continues refining a root of the square-free `s` isolated by [`isolate_roots`].
pub fn refine_root(s: &Poly, root: &RootInfo, width: &Rational) -> RootInfo {
    if root.is_exact() || &root.bracket.width() <= width {
        return root.clone();
    }
    let mut out = bisect_sign(&IntPoly::from_poly(s), root.bracket.lo().clone(), root.bracket.hi().clone(), width);
    out.multiplicity = root.multiplicity;
    out
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational(&-hi, &-lo);
    }
    // continued-fraction descent on 0 < lo <= hi; (p0 x + p1)/(q0 x + q1) maps the
    // current subinterval back to the original one
    let (mut a, mut b) = (lo.numer().clone(), lo.denom().clone());
    let (mut c, mut d) = (hi.numer().clone(), hi.denom().clone());
    let (mut p0, mut p1, mut q0, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    let value = loop {
        let (fl, rem) = num_integer::Integer::div_rem(&a, &b);
        if rem.is_zero() {
            break fl;
        }
        let next = &fl + BigInt::one();
        if &next * &d <= c {
            break next;
        }
        // recurse on [1/(hi - fl), 1/(lo - fl)]
        let (na, nb) = (d.clone(), &c - &fl * &d);
        let (nc, nd) = (b.clone(), rem);
        (a, b, c, d) = (na, nb, nc, nd);
        let np0 = &p0 * &fl + &p1;
        let nq0 = &q0 * &fl + &q1;
        (p1, q1) = (p0, q0);
        (p0, q0) = (np0, nq0);
    };
    Rational::new(&p0 * &value + p1, &q0 * &value + q1)
}

/// Refines the single root of `s` in `(lo, hi]` and decides whether it is rational.
///
/// A rational root `u/v` of the primitive integer form of `s` has `v | L`, `L` its
/// leading coefficient, and two such fractions differ by at least `1/L²`. Once the
/// bracket is narrower than that, the simplest rational inside is the only possible
/// rational root, so one exact evaluation settles it.
fn finalize_root(sturm: &Sturm, mut lo: Rational, mut hi: Rational, tol: &Rational) -> RootInfo {
    let si = sturm.int_poly();
    if si.sign_at(&hi) == 0 {
        return RootInfo::exact(hi);
    }
    while si.sign_at(&lo) == 0 {
        let mid = half(&lo, &hi);
        if si.sign_at(&mid) == 0 {
            return RootInfo::exact(mid);
        }
        if sturm.count_half_open(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lead = si.coeffs().last().cloned().unwrap_or_else(BigInt::one);
    let lead = Rational::from_integer(lead.abs());
    let separation = (&lead * &lead).recip();
    let detect_width = min_rat(&separation, tol) / int(2);
    let root = bisect_sign(si, lo, hi, &detect_width);
    if root.is_exact() {
        return root;
    }
    let candidate = simplest_rational(root.bracket.lo(), root.bracket.hi());
    if si.sign_at(&candidate) == 0 {
        return RootInfo::exact(candidate);
    }
    root
}

fn isolate_in(sturm: &Sturm, lo: Rational, hi: Rational, count: usize, out: &mut Vec<(Rational, Rational)>) {
    match count {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = half(&lo, &hi);
            let left = sturm.count_half_open(&lo, &mid);
            isolate_in(sturm, lo, mid.clone(), left, out);
            isolate_in(sturm, mid, hi, count - left, out);
        }
    }
}

fn multiplicity_of(factors: &[(Poly, usize)], root: &RootInfo) -> usize {
    if factors.len() == 1 {
        return factors[0].1;
    }
    factors
        .iter()
        .find(|(f, _)| match &root.exact {
            Some(r) => f.eval(r).is_zero(),
            None => {
                Sturm::from_square_free(f.clone())
                    .count_half_open(root.bracket.lo(), root.bracket.hi())
                    > 0
            }
        })
        .map_or(1, |(_, m)| *m)
}

/// Distinct real roots of `q` in the closed interval `iv`.
pub fn count_real_roots(q: &Poly, iv: &Interval) -> Result<usize> {
    if q.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if q.degree() == Some(0) {
        return Ok(0);
    }
    Ok(Sturm::new(q).count_closed(iv.lo(), iv.hi()))
}

/// Isolates every real root of `q` in `iv`; rational roots are returned exactly,
/// the others as brackets of width `≤ tol` with a sign change of the square-free part.
pub fn isolate_roots(q: &Poly, iv: &Interval, tol: &Rational) -> Result<RootSet> {
    if q.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let s = q.square_free();
    if s.degree() == Some(0) {
        return Ok(RootSet {
            roots: Vec::new(),
            square_free: s,
        });
    }
    let factors = q.square_free_factors();
    let sturm = Sturm::from_square_free(s.clone());
    let (a, b) = (iv.lo().clone(), iv.hi().clone());
    let mut roots = Vec::new();
    if s.eval(&a).is_zero() {
        roots.push(RootInfo::exact(a.clone()));
    }
    let mut brackets = Vec::new();
    let count = sturm.count_half_open(&a, &b);
    isolate_in(&sturm, a, b, count, &mut brackets);
    roots.extend(
        brackets
            .into_iter()
            .map(|(lo, hi)| finalize_root(&sturm, lo, hi, tol)),
    );
    for r in roots.iter_mut() {
        r.multiplicity = multiplicity_of(&factors, r);
    }
    Ok(RootSet {
        roots,
        square_free: s,
    })
}

/// All real roots of `q`.
pub fn real_roots(q: &Poly, tol: &Rational) -> Result<RootSet> {
    if q.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let b = q.root_bound();
    isolate_roots(q, &Interval::new(-b.clone(), b), tol)
}

/// Largest root of the square-free `s` in `(0, bound]`.
fn largest_positive_root(s: &Poly, tol: &Rational) -> Option<RootInfo> {
    let sturm = Sturm::from_square_free(s.clone());
    let mut lo = Rational::zero();
    let mut hi = s.root_bound();
    let mut count = sturm.count_half_open(&lo, &hi);
    if count == 0 {
        return None;
    }
    while count > 1 {
        let mid = half(&lo, &hi);
        let right = sturm.count_half_open(&mid, &hi);
        if right > 0 {
            lo = mid;
            count = right;
        } else {
            hi = mid;
            count = sturm.count_half_open(&lo, &hi);
        }
    }
    Some(finalize_root(&sturm, lo, hi, tol))
}

/// Enclosure of `max |r|` over the real roots `r` of `q`, or `None` when `q` has
/// no real root. The result is degenerate when the maximum is known exactly.
pub fn max_abs_real_root(q: &Poly, tol: &Rational) -> Result<Option<Interval>> {
    if q.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let s = q.square_free();
    if s.degree() == Some(0) {
        return Ok(None);
    }
    let mut candidates: Vec<Interval> = Vec::new();
    if s.eval(&Rational::zero()).is_zero() {
        candidates.push(Interval::point(Rational::zero()));
    }
    if let Some(r) = largest_positive_root(&s, tol) {
        candidates.push(r.bracket);
    }
    if let Some(r) = largest_positive_root(&s.reflect(), tol) {
        candidates.push(r.bracket);
    }
    Ok(candidates.into_iter().reduce(|a, b| {
        Interval::new(max_rat(a.lo(), b.lo()), max_rat(a.hi(), b.hi()))
    }))
}

/// Range of a rational function over an interval, with where its extremes occur.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeResult {
    /// Exact where the extremes are attained at rational points, otherwise
    /// rounded outward to a dyadic grid of step `≤ tol`.
    pub range: Interval,
    /// Point (or bracket) where the minimum is attained.
    pub argmin: Interval,
    pub argmax: Interval,
}

/// Value enclosure of `num/den` at a candidate point: exact at rational points,
/// otherwise interval Horner over a bracket refined until its width is `≤ tol`.
fn value_enclosure(
    num: &Poly,
    den: &Poly,
    crit: &Poly,
    root: &RootInfo,
    tol: &Rational,
) -> (Interval, Interval) {
    if let Some(r) = &root.exact {
        return (Interval::point(num.eval(r) / den.eval(r)), Interval::point(r.clone()));
    }
    let mut width = root.bracket.width();
    let mut current = root.clone();
    loop {
        if let Some(v) = num.eval_interval(&current.bracket).div(&den.eval_interval(&current.bracket)) {
            if &v.width() <= tol {
                return (v, current.bracket);
            }
        }
        width /= int(4);
        current = refine_root(crit, &current, &width);
        if let Some(r) = &current.exact {
            return (Interval::point(num.eval(r) / den.eval(r)), Interval::point(r.clone()));
        }
    }
}

/// Range of `num/den` over `iv`.
///
/// The fraction is reduced by its gcd first, so a removable common root is not a pole.
pub fn rational_range(num: &Poly, den: &Poly, iv: &Interval, tol: &Rational) -> Result<RangeResult> {
    if den.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let (num, den) = if num.is_zero() {
        (Poly::zero(), Poly::one())
    } else {
        let g = num.gcd(den);
        (num.exact_div(&g), den.exact_div(&g))
    };
    if den.degree().unwrap_or(0) > 0 {
        let poles = isolate_roots(&den, iv, tol)?;
        if let Some(p) = poles.roots.first() {
            return Err(Error::PoleInInterval {
                pole: Box::new(p.bracket.clone()),
            });
        }
    }
    let crit = &(&num.derivative() * &den) - &(&num * &den.derivative());
    let mut candidates = vec![RootInfo::exact(iv.lo().clone()), RootInfo::exact(iv.hi().clone())];
    let mut crit_sf = Poly::one();
    if !crit.is_zero() && crit.degree().unwrap_or(0) > 0 {
        let interior = Interval::new(iv.lo().clone(), iv.hi().clone());
        let set = isolate_roots(&crit, &interior, tol)?;
        crit_sf = set.square_free().clone();
        candidates.extend(set.roots);
    }
    let values: Vec<(Interval, Interval)> = candidates
        .iter()
        .map(|c| value_enclosure(&num, &den, &crit_sf, c, tol))
        .collect();
    let (min_v, min_at) = values
        .iter()
        .min_by(|a, b| a.0.lo().cmp(b.0.lo()))
        .expect("endpoints are candidates");
    let (max_v, max_at) = values
        .iter()
        .max_by(|a, b| a.0.hi().cmp(b.0.hi()))
        .expect("endpoints are candidates");
    let lo = if min_v.is_degenerate() {
        min_v.lo().clone()
    } else {
        round_down(min_v.lo(), tol)
    };
    let hi = if max_v.is_degenerate() {
        max_v.hi().clone()
    } else {
        round_up(max_v.hi(), tol)
    };
    Ok(RangeResult {
        range: Interval::new(lo, hi),
        argmin: min_at.clone(),
        argmax: max_at.clone(),
    })
}
