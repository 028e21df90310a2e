//! Exact determinants, inverses and determinant polynomials of matrix pencils.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{NormalizedMatrix, SubproblemKey};
use crate::poly::{small_integer_nodes, Poly};
use crate::scalar::{common_denominator, Rational};

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators, so the
/// elimination runs over `BigInt` and every intermediate division is exact.
pub fn det_exact(m: &Matrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let d = common_denominator(row);
            let out = row
                .iter()
                .map(|x| (x * Rational::from_integer(d.clone())).to_integer())
                .collect();
            scale *= d;
            out
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn inverse_exact(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot invert a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut inv = Matrix::identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[(r, col)].is_zero())
            .ok_or(Error::SingularMatrix)?;
        if pivot != col {
            for j in 0..n {
                let tmp = a[(pivot, j)].clone();
                a[(pivot, j)] = a[(col, j)].clone();
                a[(col, j)] = tmp;
                let tmp = inv[(pivot, j)].clone();
                inv[(pivot, j)] = inv[(col, j)].clone();
                inv[(col, j)] = tmp;
            }
        }
        let p = a[(col, col)].recip();
        for j in 0..n {
            a[(col, j)] *= &p;
            inv[(col, j)] *= &p;
        }
        for r in 0..n {
            if r == col || a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone();
            for j in 0..n {
                let da = &f * &a[(col, j)];
                a[(r, j)] -= da;
                let di = &f * &inv[(col, j)];
                inv[(r, j)] -= di;
            }
        }
    }
    Ok(inv)
}

/// `det(base + t·direction)` as a polynomial in `t`.
///
/// The degree is at most `n`, so the determinant is sampled at the `n + 1`
/// nodes `0, 1, -1, 2, -2, …` and interpolated.
pub fn det_pencil(base: &Matrix, direction: &Matrix) -> Poly {
    assert!(base.is_square() && base.rows() == direction.rows() && base.cols() == direction.cols());
    if direction.is_zero() {
        return Poly::constant(det_exact(base));
    }
    let nodes = small_integer_nodes(base.rows() + 1);
    let values: Vec<Rational> = nodes
        .iter()
        .map(|t| det_exact(&base.add_scaled(t, direction)))
        .collect();
    Poly::interpolate(&nodes, &values)
}

/// Determinant of the one-parameter slice `A(p̌) + t·A_k + Σ_{i≠k} εᵢ p̂ᵢ Aᵢ`.
pub fn det_polynomial(pm: &NormalizedMatrix, key: &SubproblemKey) -> Poly {
    let (base, direction) = pm.slice_pencil(key);
    det_pencil(&base, &direction)
}

/// Characteristic polynomial `det(λI − B)`, monic of degree `n`.
pub fn char_polynomial(b: &Matrix) -> Poly {
    det_pencil(&b.scale(&-Rational::one()), &Matrix::identity(b.rows()))
}
