//! Bivariate polynomials in `(λ, t)` and the resultant that eliminates `t`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::det_exact;
use crate::matrix::Matrix;
use crate::poly::{small_integer_nodes, Poly};
use crate::scalar::Rational;

/// `Σⱼ cⱼ(λ) tʲ`, coefficients in ascending powers of `t`, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Lifts a polynomial in `λ` alone.
    pub fn from_lambda(p: Poly) -> Self {
        Self::new(vec![p])
    }

    /// Lifts a polynomial in `t` alone.
    pub fn from_t(p: &Poly) -> Self {
        Self::new(p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect())
    }

    /// From the specializations `f(λ, tⱼ)` at distinct nodes `tⱼ`.
    pub fn interpolate_t(nodes: &[Rational], slices: &[Poly]) -> Self {
        assert_eq!(nodes.len(), slices.len());
        let deg_lambda = slices.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let in_t: Vec<Poly> = (0..deg_lambda)
            .map(|i| {
                let values: Vec<Rational> = slices.iter().map(|p| p.coeff(i)).collect();
                Poly::interpolate(nodes, &values)
            })
            .collect();
        let deg_t = in_t.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        Self::new(
            (0..deg_t)
                .map(|j| Poly::new(in_t.iter().map(|p| p.coeff(j)).collect()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `tʲ`, zero beyond the degree.
    pub fn coeff_t(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_lambda(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    /// `f(λ, t₀)` as a polynomial in `λ`.
    pub fn eval_t(&self, t: &Rational) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &acc.scale(t) + c)
    }

    /// `f(λ₀, t)` as a polynomial in `t`.
    pub fn eval_lambda(&self, lambda: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.eval(lambda)).collect())
    }

    pub fn derivative_t(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&Rational::from_integer(j.into())))
                .collect(),
        )
    }

    /// Monic gcd of the `λ`-coefficients.
    pub fn content_lambda(&self) -> Poly {
        self.coeffs
            .iter()
            .fold(Poly::zero(), |acc, c| if acc.is_zero() { c.monic() } else { acc.gcd(c) })
    }

    /// Divides out the `λ`-content.
    pub fn primitive_lambda(&self) -> Self {
        let c = self.content_lambda();
        if c.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|p| p.exact_div(&c)).collect())
    }
}

fn sylvester_at(f: &[Rational], g: &[Rational]) -> Matrix {
    // f, g: formal coefficient lists in ascending powers of t
    let l = f.len() - 1;
    let m = g.len() - 1;
    let size = l + m;
    let mut s = Matrix::zeros(size, size);
    for row in 0..m {
        for (j, c) in f.iter().rev().enumerate() {
            s[(row, row + j)] = c.clone();
        }
    }
    for row in 0..l {
        for (j, c) in g.iter().rev().enumerate() {
            s[(m + row, row + j)] = c.clone();
        }
    }
    s
}

/// Sylvester resultant of two univariate polynomials with their actual degrees.
pub fn resultant_univariate(f: &Poly, g: &Poly) -> Rational {
    if f.is_zero() || g.is_zero() {
        return Rational::zero();
    }
    if f.degree() == Some(0) && g.degree() == Some(0) {
        return num_traits::One::one();
    }
    det_exact(&sylvester_at(f.coeffs(), g.coeffs()))
}

/// `Res_t(f, g)` as a polynomial in `λ`, after removing the `λ`-content of each input.
///
/// The Sylvester matrix uses the formal `t`-degrees, so the determinant is sampled at
/// enough `λ` nodes to cover its degree bound and interpolated. A polynomial of
/// `t`-degree zero gives the power `cᵐ` of its coefficient, as the matrix shows.
pub fn resultant(f: &BiPoly, g: &BiPoly) -> Result<Poly> {
    let f = f.primitive_lambda();
    let g = g.primitive_lambda();
    let (Some(l), Some(m)) = (f.degree_t(), g.degree_t()) else {
        return Err(Error::IdenticallyZero);
    };
    let bound = m * f.degree_lambda().unwrap_or(0) + l * g.degree_lambda().unwrap_or(0);
    let nodes = small_integer_nodes(bound + 1);
    let values: Vec<Rational> = nodes
        .iter()
        .map(|x| {
            let fc: Vec<Rational> = f.coeffs.iter().map(|c| c.eval(x)).collect();
            let gc: Vec<Rational> = g.coeffs.iter().map(|c| c.eval(x)).collect();
            det_exact(&sylvester_at(&fc, &gc))
        })
        .collect();
    let res = Poly::interpolate(&nodes, &values);
    if res.is_zero() {
        return Err(Error::SharedFactor);
    }
    Ok(res)
}

/// Coefficients (ascending in `t`) of the `j`-th subresultant of two polynomials
/// given by formal coefficient lists, `j < deg g ≤ deg f`.
fn subresultant_at(f: &[Rational], g: &[Rational], j: usize) -> Vec<Rational> {
    let l = f.len() - 1;
    let m = g.len() - 1;
    let rows = l + m - 2 * j;
    let cols = l + m - j;
    let mut full = Matrix::zeros(rows, cols);
    for row in 0..m - j {
        for (c, x) in f.iter().rev().enumerate() {
            full[(row, row + c)] = x.clone();
        }
    }
    for row in 0..l - j {
        for (c, x) in g.iter().rev().enumerate() {
            full[(m - j + row, row + c)] = x.clone();
        }
    }
    // column c holds the coefficient of t^(cols - 1 - c)
    (0..=j)
        .map(|i| {
            let mut sub = Matrix::zeros(rows, rows);
            for r in 0..rows {
                for c in 0..rows - 1 {
                    sub[(r, c)] = full[(r, c)].clone();
                }
                sub[(r, rows - 1)] = full[(r, cols - 1 - i)].clone();
            }
            det_exact(&sub)
        })
        .collect()
}

/// The `j`-th subresultant `S_j(λ, t) = Σ_{i≤j} s_{j,i}(λ) tⁱ` of `f` and `g`
/// with respect to `t`, using their formal `t`-degrees; `None` unless
/// `j < deg_t g ≤ deg_t f` or `j = deg_t g < deg_t f`, the latter giving
/// `lc(g)^(deg f − deg g − 1) · g`.
///
/// Wherever the leading `t`-coefficients do not vanish, `gcd_t(f, g)` has degree
/// `j` exactly when `s_{i,i} = 0` for `i < j` and `s_{j,j} ≠ 0`, and is then
/// proportional to `S_j`.
pub fn subresultant(f: &BiPoly, g: &BiPoly, j: usize) -> Option<BiPoly> {
    let l = f.degree_t()?;
    let m = g.degree_t()?;
    if j == m && m < l {
        let lc = g.coeff_t(m);
        let factor = (0..l - m - 1).fold(Poly::one(), |acc, _| &acc * &lc);
        return Some(BiPoly::new(g.coeffs.iter().map(|c| c * &factor).collect()));
    }
    if j >= m || m > l {
        return None;
    }
    let bound = (m - j) * f.degree_lambda().unwrap_or(0) + (l - j) * g.degree_lambda().unwrap_or(0);
    let nodes = small_integer_nodes(bound + 1);
    let values: Vec<Vec<Rational>> = nodes
        .iter()
        .map(|x| {
            let fc: Vec<Rational> = f.coeffs.iter().map(|c| c.eval(x)).collect();
            let gc: Vec<Rational> = g.coeffs.iter().map(|c| c.eval(x)).collect();
            subresultant_at(&fc, &gc, j)
        })
        .collect();
    Some(BiPoly::new(
        (0..=j)
            .map(|i| {
                let v: Vec<Rational> = values.iter().map(|row| row[i].clone()).collect();
                Poly::interpolate(&nodes, &v)
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn substitution_example() {
        // f = y^2 - x, g = y - 3 (x plays λ, y plays t)
        let f = BiPoly::new(vec![Poly::from_i64(&[0, -1]), Poly::zero(), Poly::one()]);
        let g = BiPoly::new(vec![Poly::from_i64(&[-3]), Poly::one()]);
        assert_eq!(resultant(&f, &g).unwrap(), Poly::from_i64(&[9, -1]));
    }

    #[test]
    fn double_root_shares_factor() {
        let f = BiPoly::from_t(&Poly::from_i64(&[1, -2, 1]));
        let g = f.derivative_t();
        assert_eq!(resultant(&f, &g), Err(Error::SharedFactor));
    }

    #[test]
    fn univariate_resultant() {
        // Res((t-1)(t-2), t-3) = (3-1)(3-2)
        let f = Poly::from_i64(&[2, -3, 1]);
        let g = Poly::from_i64(&[-3, 1]);
        assert_eq!(resultant_univariate(&f, &g), int(2));
        assert_eq!(resultant_univariate(&f, &Poly::from_i64(&[-1, 1])), int(0));
    }

    #[test]
    fn interpolation_in_t() {
        // f = λ t^2 + (λ^2 - 1)
        let f = BiPoly::new(vec![Poly::from_i64(&[-1, 0, 1]), Poly::zero(), Poly::from_i64(&[0, 1])]);
        let nodes = small_integer_nodes(4);
        let slices: Vec<Poly> = nodes.iter().map(|t| f.eval_t(t)).collect();
        assert_eq!(BiPoly::interpolate_t(&nodes, &slices), f);
        assert_eq!(f.eval_lambda(&int(2)), Poly::from_i64(&[3, 0, 2]));
        assert_eq!(f.degree_lambda(), Some(2));
    }

    #[test]
    fn first_subresultant_gives_the_double_root() {
        // f = (t - λ)^2 (t + 1): the double root t = λ is -s10/s11 where s11 ≠ 0
        let f = BiPoly::new(vec![
            Poly::from_i64(&[0, 0, 1]),
            Poly::from_i64(&[0, -2, 1]),
            Poly::from_i64(&[1, -2]),
            Poly::one(),
        ]);
        let g = f.derivative_t();
        let s1 = subresultant(&f, &g, 1).unwrap();
        let s0 = subresultant(&f, &g, 0).unwrap();
        assert!(s0.is_zero());
        for x in [int(2), int(-3), Rational::new(1.into(), 2.into())] {
            let s11 = s1.coeff_t(1).eval(&x);
            let s10 = s1.coeff_t(0).eval(&x);
            assert!(!s11.is_zero());
            assert_eq!(-s10 / s11, x);
        }
    }

    #[test]
    fn content_is_removed() {
        // f = λ (t - λ), g = t + 1: Res_t(t - λ, t + 1) = -(λ + 1) up to sign
        let f = BiPoly::new(vec![Poly::from_i64(&[0, 0, -1]), Poly::from_i64(&[0, 1])]);
        let g = BiPoly::new(vec![Poly::one(), Poly::one()]);
        let r = resultant(&f, &g).unwrap();
        assert_eq!(r.degree(), Some(1));
        assert!(r.eval(&int(-1)).is_zero());
    }
}
