//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::scalar::{common_denominator, int, Interval, Rational};

/// Coefficients in ascending degree. The leading coefficient is nonzero,
/// and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in interval arithmetic; encloses the range over `iv`.
    pub fn eval_interval(&self, iv: &Interval) -> Interval {
        self.coeffs
            .iter()
            .rev()
            .fold(Interval::point(Rational::zero()), |acc, c| {
                acc.mul(iv).add(&Interval::point(c.clone()))
            })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        let x_plus_s = Poly::new(vec![s.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &x_plus_s) + &Poly::constant(c.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_form();
        let mut b = other.primitive_form();
        while !b.is_zero() {
            let r = a.rem(&b).primitive_form();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic square-free part `p / gcd(p, p')`.
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's square-free factorization: `p = c · ∏ fᵢ^mᵢ` with monic, pairwise coprime,
    /// square-free `fᵢ`. Constant factors are dropped.
    pub fn square_free_factors(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = self.derivative();
        let a0 = self.gcd(&dp);
        let mut b = self.exact_div(&a0);
        let mut c = dp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Scales to integer coefficients with unit content and positive leading coefficient.
    pub fn primitive_form(&self) -> Poly {
        match self.primitive_integer_coeffs() {
            Some(ints) => Poly::new(ints.into_iter().map(Rational::from_integer).collect()),
            None => Poly::zero(),
        }
    }

    /// Integer coefficients of the primitive form, or `None` for the zero polynomial.
    pub fn primitive_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        let lead = self.leading()?;
        let den = common_denominator(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
        let divisor = content * sign;
        for v in ints.iter_mut() {
            *v = &*v / &divisor;
        }
        Some(ints)
    }

    /// Cauchy bound: every real root `r` satisfies `|r| ≤ bound`.
    pub fn root_bound(&self) -> Rational {
        let Some(lead) = self.leading() else {
            return Rational::one();
        };
        let lead = lead.abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }

    /// Newton-form interpolation through `(nodes[i], values[i])`; nodes must be distinct.
    pub fn interpolate(nodes: &[Rational], values: &[Rational]) -> Poly {
        assert_eq!(nodes.len(), values.len());
        let n = nodes.len();
        let mut dd = values.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            acc = &(&acc * &Poly::linear_root(&nodes[i])) + &Poly::constant(dd[i].clone());
        }
        acc
    }

    /// Renders with the given variable name, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let term = match i {
                0 => mag.to_string(),
                _ => {
                    let pow = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if mag.is_one() {
                        pow
                    } else {
                        format!("{mag}*{pow}")
                    }
                }
            };
            out.push_str(&term);
        }
        out
    }
}

/// A positive integer multiple of a rational polynomial, for fast sign evaluation.
///
/// At `x = a/b` with `b > 0` the homogeneous sum `Σ cᵢ aⁱ bᵈ⁻ⁱ` has the sign of
/// `p(x)` and needs no gcd normalisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_poly(p: &Poly) -> Self {
        if p.is_zero() {
            return Self { coeffs: Vec::new() };
        }
        let den = common_denominator(&p.coeffs);
        let mut coeffs: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = coeffs.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for v in coeffs.iter_mut() {
            *v = &*v / &content;
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Sign of the polynomial at `x`: `-1`, `0` or `1`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let Some((last, rest)) = self.coeffs.split_last() else {
            return 0;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = last.clone();
        let mut bpow = BigInt::one();
        for c in rest.iter().rev() {
            bpow *= b;
            acc *= a;
            if !c.is_zero() {
                acc += c * &bpow;
            }
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

/// Integer nodes `0, 1, -1, 2, -2, …`.
pub fn small_integer_nodes(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|i| {
            let m = (i as i64 + 1) / 2;
            if i % 2 == 1 {
                int(m)
            } else {
                int(-m)
            }
        })
        .collect()
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::scalar::serialize_rationals(&self.coeffs, s)
    }
}
