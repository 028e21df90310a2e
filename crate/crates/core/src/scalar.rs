//! Exact scalars and closed intervals with rational endpoints.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"6/5"`, `"-13/15"`, `"0.2"`, `"-1.25e-3"` or `"7"` exactly.
pub fn parse_scalar(text: &str) -> Option<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{}{}", whole, frac).parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(all);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -value } else { value })
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Renders `x` with `digits` significant digits.
pub fn format_significant(x: &Rational, digits: usize) -> String {
    let v = to_f64(x);
    let digits = digits.max(1);
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", decimals, v)
    } else {
        format!("{:.*e}", digits - 1, v)
    }
}

/// Largest multiple of the dyadic step `2^-s ≤ tol` that is `≤ x`.
pub fn round_down(x: &Rational, tol: &Rational) -> Rational {
    let step = dyadic_step(tol);
    (x / &step).floor() * step
}

/// Smallest multiple of the dyadic step `2^-s ≤ tol` that is `≥ x`.
pub fn round_up(x: &Rational, tol: &Rational) -> Rational {
    let step = dyadic_step(tol);
    (x / &step).ceil() * step
}

fn dyadic_step(tol: &Rational) -> Rational {
    let mut step = Rational::one();
    while &step > tol {
        step /= int(2);
    }
    step
}

pub fn min_rat(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max_rat(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Serializes a rational as its exact `"n/d"` (or `"n"`) string.
pub fn serialize_rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn serialize_rationals<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

/// Closed interval `[lo, hi]` with exact endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Builds `[lo, hi]`; panics if `lo > hi`. Use [`Interval::try_new`] for untrusted input.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn try_new(lo: Rational, hi: Rational) -> Option<Self> {
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    /// `[-r, r]`.
    pub fn symmetric(r: Rational) -> Self {
        let r = r.abs();
        Self { lo: -r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn radius(&self) -> Rational {
        (&self.hi - &self.lo) / int(2)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: min_rat(&self.lo, &other.lo),
            hi: max_rat(&self.hi, &other.hi),
        }
    }

    /// Interval sum.
    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Interval product.
    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap();
        let hi = products.iter().max().cloned().unwrap();
        Interval { lo, hi }
    }

    /// Interval quotient; `None` when the divisor contains zero.
    pub fn div(&self, other: &Interval) -> Option<Interval> {
        if other.contains(&Rational::zero()) {
            return None;
        }
        let inv = Interval {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        Some(self.mul(&inv))
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Outward rounding of both endpoints to a dyadic grid of step `≤ tol`.
    pub fn round_outward(&self, tol: &Rational) -> Interval {
        Interval {
            lo: round_down(&self.lo, tol),
            hi: round_up(&self.hi, tol),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq([self.lo.to_string(), self.hi.to_string()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ratios_and_decimals_exactly() {
        assert_eq!(parse_scalar("6/5"), Some(ratio(6, 5)));
        assert_eq!(parse_scalar("-13/15"), Some(ratio(-13, 15)));
        assert_eq!(parse_scalar("0.2"), Some(ratio(1, 5)));
        assert_eq!(parse_scalar("-1.25"), Some(ratio(-5, 4)));
        assert_eq!(parse_scalar("1e-3"), Some(ratio(1, 1000)));
        assert_eq!(parse_scalar("2.5E2"), Some(int(250)));
        assert_eq!(parse_scalar(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_scalar("42"), Some(int(42)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("abc"), None);
        assert_eq!(parse_scalar(""), None);
        assert_eq!(parse_scalar("1.2.3"), None);
    }

    #[test]
    fn midpoint_and_radius_are_exact() {
        let iv = Interval::new(int(31), int(41));
        assert_eq!(iv.midpoint(), int(36));
        assert_eq!(iv.radius(), int(5));
        let iv = Interval::new(ratio(-3, 4), ratio(1, 3));
        assert_eq!(iv.midpoint(), ratio(-5, 24));
        assert_eq!(iv.radius(), ratio(13, 24));
    }

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(format_significant(&ratio(108209, 100000), 6), "1.08209");
        assert_eq!(format_significant(&ratio(996413, 1000000), 6), "0.996413");
        assert_eq!(format_significant(&int(0), 6), "0");
        assert_eq!(format_significant(&int(1234567), 3), "1.23e6");
    }

    #[test]
    fn outward_rounding_encloses() {
        let tol = ratio(1, 1000);
        let iv = Interval::new(ratio(1, 3), ratio(2, 3));
        let r = iv.round_outward(&tol);
        assert!(r.contains_interval(&iv));
        assert!(r.width() - iv.width() <= ratio(2, 1000));
    }

    #[test]
    fn interval_arithmetic_encloses_products() {
        let a = Interval::new(int(-1), int(2));
        let b = Interval::new(int(-3), int(1));
        assert_eq!(a.mul(&b), Interval::new(int(-6), int(3)));
        assert!(a.div(&b).is_none());
        let c = Interval::new(int(2), int(4));
        assert_eq!(a.div(&c), Some(Interval::new(ratio(-1, 2), int(1))));
    }
}
