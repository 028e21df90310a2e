//! Interval parametric matrices `A(p) = A₀ + Σ pₖAₖ`, linear systems built on them,
//! and the normalization to centered parameters used by every criterion.
//!
//! Parameter indices are 0-based in the API and 1-based in every rendered string.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Interval, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "+1")]
    Plus,
}

impl Sign {
    pub fn value(self) -> Rational {
        match self {
            Sign::Minus => -Rational::one(),
            Sign::Plus => Rational::one(),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn of(x: &Rational) -> Sign {
        if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-1",
            Sign::Plus => "+1",
        })
    }
}

/// One-parameter slice: parameter `k` free, every other parameter `i` pinned at `εᵢ p̂ᵢ`.
///
/// `eps` lists the signs of the pinned parameters in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubproblemKey {
    k: usize,
    eps: Vec<Sign>,
}

impl SubproblemKey {
    pub fn new(k: usize, eps: Vec<Sign>) -> Self {
        Self { k, eps }
    }

    /// Free parameter (0-based).
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn eps(&self) -> &[Sign] {
        &self.eps
    }

    /// Sign pinned on parameter `i`, `None` for the free one.
    pub fn sign_of(&self, i: usize) -> Option<Sign> {
        match i.cmp(&self.k) {
            std::cmp::Ordering::Less => Some(self.eps[i]),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(self.eps[i - 1]),
        }
    }

    /// Pinned indices paired with their signs.
    pub fn pinned(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        (0..=self.eps.len())
            .filter(move |&i| i != self.k)
            .zip(self.eps.iter().copied())
    }

    /// The mirrored slice `(k, −ε)`.
    pub fn negated(&self) -> Self {
        Self {
            k: self.k,
            eps: self.eps.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Centered parameter vector on this slice at free value `t`.
    pub fn point(&self, radii: &[Rational], t: &Rational) -> Vec<Rational> {
        (0..radii.len())
            .map(|i| match self.sign_of(i) {
                None => t.clone(),
                Some(s) => s.value() * &radii[i],
            })
            .collect()
    }
}

impl fmt::Display for SubproblemKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: Vec<String> = self.eps.iter().map(ToString::to_string).collect();
        write!(f, "k={}, eps=({})", self.k + 1, eps.join(","))
    }
}

impl Serialize for SubproblemKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SubproblemKey", 2)?;
        st.serialize_field("k", &(self.k + 1))?;
        st.serialize_field("eps", &self.eps)?;
        st.end()
    }
}

/// Sign vectors of length `m` in lexicographic order with `−1 < +1`.
pub fn sign_vectors(m: usize) -> Vec<Vec<Sign>> {
    (0..1usize << m)
        .map(|counter| {
            (0..m)
                .map(|j| {
                    if counter >> (m - 1 - j) & 1 == 1 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect()
        })
        .collect()
}

/// All `K·2^(K−1)` one-parameter slices, `k` ascending then `ε` lexicographic.
pub fn subproblem_keys(param_count: usize) -> Vec<SubproblemKey> {
    if param_count == 0 {
        return Vec::new();
    }
    let signs = sign_vectors(param_count - 1);
    (0..param_count)
        .flat_map(|k| signs.iter().map(move |eps| SubproblemKey::new(k, eps.clone())))
        .collect()
}

/// Multi-parameter slice: the parameters in `free` vary, the rest are pinned at `εⱼ p̂ⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetKey {
    free: Vec<usize>,
    eps: Vec<Sign>,
}

impl SubsetKey {
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn eps(&self) -> &[Sign] {
        &self.eps
    }

    pub fn pinned(&self, param_count: usize) -> Vec<(usize, Sign)> {
        (0..param_count)
            .filter(|i| !self.free.contains(i))
            .zip(self.eps.iter().copied())
            .collect()
    }
}

impl fmt::Display for SubsetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q: Vec<String> = self.free.iter().map(|i| (i + 1).to_string()).collect();
        let eps: Vec<String> = self.eps.iter().map(ToString::to_string).collect();
        write!(f, "q={{{}}}, eps=({})", q.join(","), eps.join(","))
    }
}

impl Serialize for SubsetKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SubsetKey", 2)?;
        st.serialize_field("q", &self.free.iter().map(|i| i + 1).collect::<Vec<_>>())?;
        st.serialize_field("eps", &self.eps)?;
        st.end()
    }
}

fn combinations(n: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, t, &mut Vec::new(), &mut out);
    out
}

/// All `C(K,t)·2^(K−t)` slices with `t` free parameters. Requires `1 ≤ t ≤ min(n−1, K)`.
pub fn subset_keys(dim: usize, param_count: usize, t: usize) -> Result<Vec<SubsetKey>> {
    let max = param_count.min(dim.saturating_sub(1));
    if t == 0 || t > max {
        return Err(Error::InvalidSubsetSize { t, max });
    }
    let signs = sign_vectors(param_count - t);
    Ok(combinations(param_count, t)
        .into_iter()
        .flat_map(|free| {
            signs.iter().map(move |eps| SubsetKey {
                free: free.clone(),
                eps: eps.clone(),
            })
        })
        .collect())
}

/// How [`ParametricMatrix::evaluate`] treats points outside the parameter box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoxPolicy {
    #[default]
    Strict,
    /// Evaluate anyway and log a warning.
    Lax,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParametricMatrix {
    a0: Matrix,
    coeffs: Vec<Matrix>,
    params: Vec<Interval>,
}

impl ParametricMatrix {
    pub fn new(a0: Matrix, coeffs: Vec<Matrix>, params: Vec<Interval>) -> Result<Self> {
        if !a0.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "A0 is {}x{}, expected a square matrix",
                a0.rows(),
                a0.cols()
            )));
        }
        if coeffs.len() != params.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficient matrices but {} parameter intervals",
                coeffs.len(),
                params.len()
            )));
        }
        let n = a0.rows();
        if let Some((k, m)) = coeffs
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != n || m.cols() != n)
        {
            return Err(Error::DimensionMismatch(format!(
                "A{} is {}x{}, expected {n}x{n}",
                k + 1,
                m.rows(),
                m.cols()
            )));
        }
        Ok(Self { a0, coeffs, params })
    }

    pub fn dim(&self) -> usize {
        self.a0.rows()
    }

    pub fn param_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn a0(&self) -> &Matrix {
        &self.a0
    }

    pub fn coeffs(&self) -> &[Matrix] {
        &self.coeffs
    }

    pub fn params(&self) -> &[Interval] {
        &self.params
    }

    pub fn midpoints(&self) -> Vec<Rational> {
        self.params.iter().map(Interval::midpoint).collect()
    }

    pub fn radii(&self) -> Vec<Rational> {
        self.params.iter().map(Interval::radius).collect()
    }

    /// `A₀ + Σ pₖAₖ` without any box check.
    pub fn evaluate_unchecked(&self, p: &[Rational]) -> Matrix {
        debug_assert_eq!(p.len(), self.coeffs.len());
        self.coeffs
            .iter()
            .zip(p)
            .fold(self.a0.clone(), |acc, (m, pk)| acc.add_scaled(pk, m))
    }

    pub fn evaluate(&self, p: &[Rational], policy: BoxPolicy) -> Result<Matrix> {
        if p.len() != self.param_count() {
            return Err(Error::DimensionMismatch(format!(
                "parameter vector has {} entries, expected {}",
                p.len(),
                self.param_count()
            )));
        }
        if let Some((index, (value, iv))) = p
            .iter()
            .zip(&self.params)
            .enumerate()
            .find(|(_, (v, iv))| !iv.contains(v))
        {
            match policy {
                BoxPolicy::Strict => {
                    return Err(Error::OutsideBox {
                        index: index + 1,
                        value: Box::new(value.clone()),
                        interval: Box::new(iv.clone()),
                    })
                }
                BoxPolicy::Lax => log::warn!(
                    "parameter {} = {} lies outside {}; evaluating anyway",
                    index + 1,
                    value,
                    iv
                ),
            }
        }
        Ok(self.evaluate_unchecked(p))
    }

    /// `A(p̌)`.
    pub fn center_matrix(&self) -> Matrix {
        self.evaluate_unchecked(&self.midpoints())
    }

    /// Multiplies `A₀` and every `Aₖ` by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        Self {
            a0: self.a0.scale(c),
            coeffs: self.coeffs.iter().map(|m| m.scale(c)).collect(),
            params: self.params.clone(),
        }
    }

    /// Simultaneous row/column permutation of every matrix.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            a0: self.a0.permute_symmetric(perm),
            coeffs: self.coeffs.iter().map(|m| m.permute_symmetric(perm)).collect(),
            params: self.params.clone(),
        }
    }

    /// Shrinks (or stretches) every interval about its midpoint by `sigma > 0`.
    pub fn with_scaled_radii(&self, sigma: &Rational) -> Self {
        let params = self
            .params
            .iter()
            .map(|iv| {
                let mid = iv.midpoint();
                let r = iv.radius() * sigma;
                Interval::new(&mid - &r, &mid + &r)
            })
            .collect();
        Self {
            a0: self.a0.clone(),
            coeffs: self.coeffs.clone(),
            params,
        }
    }

    /// Recenters every parameter at zero and folds degenerate parameters into `A₀`.
    pub fn normalize(&self) -> NormalizedMatrix {
        let origin = self.midpoints();
        let center = self.evaluate_unchecked(&origin);
        let active: Vec<usize> = (0..self.param_count())
            .filter(|&k| !self.params[k].is_degenerate())
            .collect();
        let centered = ParametricMatrix {
            a0: center,
            coeffs: active.iter().map(|&k| self.coeffs[k].clone()).collect(),
            params: active
                .iter()
                .map(|&k| Interval::symmetric(self.params[k].radius()))
                .collect(),
        };
        NormalizedMatrix {
            centered,
            origin,
            active,
        }
    }
}

/// A family recentered to symmetric intervals `[−p̂ₖ, p̂ₖ]` with every `p̂ₖ > 0`,
/// remembering how to map centered coordinates back to the original parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    centered: ParametricMatrix,
    origin: Vec<Rational>,
    active: Vec<usize>,
}

impl NormalizedMatrix {
    pub fn matrix(&self) -> &ParametricMatrix {
        &self.centered
    }

    pub fn dim(&self) -> usize {
        self.centered.dim()
    }

    pub fn param_count(&self) -> usize {
        self.centered.param_count()
    }

    pub fn original_param_count(&self) -> usize {
        self.origin.len()
    }

    /// `Ǎ = A(p̌)`.
    pub fn center(&self) -> &Matrix {
        &self.centered.a0
    }

    pub fn radii(&self) -> Vec<Rational> {
        self.centered.radii()
    }

    pub fn radius(&self, k: usize) -> Rational {
        self.centered.params[k].hi().clone()
    }

    pub fn coeff(&self, k: usize) -> &Matrix {
        &self.centered.coeffs[k]
    }

    /// Original index of centered parameter `k`.
    pub fn original_index(&self, k: usize) -> usize {
        self.active[k]
    }

    /// Maps a centered parameter vector to original coordinates `p̌ + p`.
    pub fn lift(&self, centered: &[Rational]) -> Vec<Rational> {
        let mut out = self.origin.clone();
        for (j, &k) in self.active.iter().enumerate() {
            out[k] += &centered[j];
        }
        out
    }

    /// Maps original coordinates to the centered, reduced vector `p − p̌`.
    pub fn project(&self, original: &[Rational]) -> Vec<Rational> {
        self.active
            .iter()
            .map(|&k| &original[k] - &self.origin[k])
            .collect()
    }

    pub fn evaluate(&self, centered: &[Rational]) -> Matrix {
        self.centered.evaluate_unchecked(centered)
    }

    /// `(Ǎ + Σ_{i≠k} εᵢ p̂ᵢ Aᵢ, A_k)` so that the slice is `base + t·direction`.
    pub fn slice_pencil(&self, key: &SubproblemKey) -> (Matrix, Matrix) {
        let base = key.pinned().fold(self.center().clone(), |acc, (i, s)| {
            acc.add_scaled(&(s.value() * self.radius(i)), self.coeff(i))
        });
        (base, self.coeff(key.k()).clone())
    }

    /// Matrix of the slice with the pinned parameters applied.
    pub fn slice_base_subset(&self, key: &SubsetKey) -> Matrix {
        key.pinned(self.param_count())
            .into_iter()
            .fold(self.center().clone(), |acc, (i, s)| {
                acc.add_scaled(&(s.value() * self.radius(i)), self.coeff(i))
            })
    }

    pub fn keys(&self) -> Vec<SubproblemKey> {
        subproblem_keys(self.param_count())
    }

    /// Same family with every radius multiplied by `sigma > 0`.
    pub fn with_scaled_radii(&self, sigma: &Rational) -> Self {
        let mut out = self.clone();
        out.centered.params = out
            .centered
            .params
            .iter()
            .map(|iv| Interval::symmetric(iv.hi() * sigma))
            .collect();
        out
    }

    pub fn is_center_singular(&self) -> bool {
        crate::exactla::det_exact(self.center()).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParametricLinearSystem {
    matrix: ParametricMatrix,
    b0: Vec<Rational>,
    b: Vec<Vec<Rational>>,
}

impl ParametricLinearSystem {
    pub fn new(matrix: ParametricMatrix, b0: Vec<Rational>, b: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.dim();
        if b0.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "b0 has {} entries, expected {n}",
                b0.len()
            )));
        }
        if b.len() != matrix.param_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} right-hand-side vectors but {} parameters",
                b.len(),
                matrix.param_count()
            )));
        }
        if let Some((k, v)) = b.iter().enumerate().find(|(_, v)| v.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "b{} has {} entries, expected {n}",
                k + 1,
                v.len()
            )));
        }
        Ok(Self { matrix, b0, b })
    }

    /// `b(p) = 0` for every parameter.
    pub fn with_constant_rhs(matrix: ParametricMatrix, b0: Vec<Rational>) -> Result<Self> {
        let b = vec![vec![Rational::zero(); matrix.dim()]; matrix.param_count()];
        Self::new(matrix, b0, b)
    }

    pub fn matrix(&self) -> &ParametricMatrix {
        &self.matrix
    }

    pub fn b0(&self) -> &[Rational] {
        &self.b0
    }

    pub fn b(&self) -> &[Vec<Rational>] {
        &self.b
    }

    pub fn rhs(&self, p: &[Rational]) -> Vec<Rational> {
        self.b.iter().zip(p).fold(self.b0.clone(), |acc, (bk, pk)| {
            acc.iter().zip(bk).map(|(a, b)| a + pk * b).collect()
        })
    }

    pub fn normalize(&self) -> NormalizedSystem {
        let matrix = self.matrix.normalize();
        let rhs_center = self.rhs(&self.matrix.midpoints());
        let b = matrix.active.iter().map(|&k| self.b[k].clone()).collect();
        NormalizedSystem {
            matrix,
            b0: rhs_center,
            b,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSystem {
    matrix: NormalizedMatrix,
    b0: Vec<Rational>,
    b: Vec<Vec<Rational>>,
}

impl NormalizedSystem {
    pub fn matrix(&self) -> &NormalizedMatrix {
        &self.matrix
    }

    pub fn rhs(&self, centered: &[Rational]) -> Vec<Rational> {
        self.b.iter().zip(centered).fold(self.b0.clone(), |acc, (bk, pk)| {
            acc.iter().zip(bk).map(|(a, b)| a + pk * b).collect()
        })
    }

    /// `(b(p̌) + Σ_{i≠k} εᵢ p̂ᵢ bᵢ, b_k)`.
    pub fn slice_rhs(&self, key: &SubproblemKey) -> (Vec<Rational>, Vec<Rational>) {
        let base = key.pinned().fold(self.b0.clone(), |acc, (i, s)| {
            let c = s.value() * self.matrix.radius(i);
            acc.iter().zip(&self.b[i]).map(|(a, b)| a + &c * b).collect()
        });
        (base, self.b[key.k()].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn hudak() -> ParametricMatrix {
        ParametricMatrix::new(
            Matrix::from_i64(&[&[0, -43, 49], &[-31, 0, -35], &[25, -35, 0]]),
            vec![
                Matrix::diagonal(&[int(1), int(1), int(0)]),
                Matrix::diagonal(&[int(0), int(0), int(1)]),
            ],
            vec![Interval::new(int(31), int(41)), Interval::new(int(28), int(38))],
        )
        .unwrap()
    }

    #[test]
    fn hudak_center() {
        let pm = hudak();
        assert_eq!(pm.midpoints(), vec![int(36), int(33)]);
        assert_eq!(
            pm.center_matrix(),
            Matrix::from_i64(&[&[36, -43, 49], &[-31, 36, -35], &[25, -35, 33]])
        );
        let norm = pm.normalize();
        assert_eq!(norm.radii(), vec![int(5), int(5)]);
        assert_eq!(norm.matrix().params()[0], Interval::new(int(-5), int(5)));
    }

    #[test]
    fn zero_dependency_evaluates_to_a0() {
        let a0 = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let pm = ParametricMatrix::new(
            a0.clone(),
            vec![Matrix::zeros(2, 2)],
            vec![Interval::new(int(-1), int(1))],
        )
        .unwrap();
        assert_eq!(pm.evaluate(&[ratio(1, 3)], BoxPolicy::Strict).unwrap(), a0);
    }

    #[test]
    fn strict_rejects_and_lax_accepts_outside_points() {
        let pm = hudak();
        assert!(matches!(
            pm.evaluate(&[int(30), int(30)], BoxPolicy::Strict),
            Err(Error::OutsideBox { index: 1, .. })
        ));
        assert!(pm.evaluate(&[int(30), int(30)], BoxPolicy::Lax).is_ok());
        assert!(matches!(
            pm.evaluate(&[int(30)], BoxPolicy::Lax),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn dimension_checks() {
        let err = ParametricMatrix::new(
            Matrix::identity(2),
            vec![Matrix::identity(3)],
            vec![Interval::new(int(0), int(1))],
        );
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
        let err = ParametricMatrix::new(Matrix::identity(2), vec![Matrix::identity(2)], vec![]);
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn degenerate_parameter_is_folded() {
        let pm = ParametricMatrix::new(
            Matrix::identity(2),
            vec![
                Matrix::from_i64(&[&[1, 0], &[0, 0]]),
                Matrix::from_i64(&[&[0, 1], &[1, 0]]),
                Matrix::from_i64(&[&[0, 0], &[0, 1]]),
            ],
            vec![
                Interval::new(int(-1), int(1)),
                Interval::new(int(2), int(2)),
                Interval::new(int(0), int(1)),
            ],
        )
        .unwrap();
        let norm = pm.normalize();
        assert_eq!(norm.param_count(), 2);
        assert_eq!(norm.original_index(1), 2);
        assert_eq!(
            norm.center(),
            &Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), ratio(3, 2)]]).unwrap()
        );
        let p = vec![ratio(1, 3), int(2), ratio(1, 5)];
        let reduced = norm.project(&p);
        assert_eq!(norm.evaluate(&reduced), pm.evaluate(&p, BoxPolicy::Strict).unwrap());
        assert_eq!(norm.lift(&reduced), p);
    }

    #[test]
    fn key_enumeration_order() {
        let keys = subproblem_keys(3);
        assert_eq!(keys.len(), 12);
        assert_eq!(keys[0], SubproblemKey::new(0, vec![Sign::Minus, Sign::Minus]));
        assert_eq!(keys[1], SubproblemKey::new(0, vec![Sign::Minus, Sign::Plus]));
        assert_eq!(keys[6], SubproblemKey::new(1, vec![Sign::Plus, Sign::Minus]));
        assert_eq!(keys[6].to_string(), "k=2, eps=(+1,-1)");
        assert_eq!(subproblem_keys(1), vec![SubproblemKey::new(0, vec![])]);
    }

    #[test]
    fn key_point_and_signs() {
        let key = SubproblemKey::new(1, vec![Sign::Plus, Sign::Minus]);
        assert_eq!(key.sign_of(0), Some(Sign::Plus));
        assert_eq!(key.sign_of(1), None);
        assert_eq!(key.sign_of(2), Some(Sign::Minus));
        let p = key.point(&[int(1), int(1), int(1)], &ratio(-3, 5));
        assert_eq!(p, vec![int(1), ratio(-3, 5), int(-1)]);
        assert_eq!(key.negated().eps(), &[Sign::Minus, Sign::Plus]);
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subset_keys(4, 4, 3).unwrap().len(), 8);
        assert_eq!(subset_keys(3, 3, 1).unwrap().len(), 12);
        assert_eq!(subset_keys(3, 3, 2).unwrap().len(), 6);
        assert!(matches!(
            subset_keys(3, 3, 3),
            Err(Error::InvalidSubsetSize { t: 3, max: 2 })
        ));
        assert!(subset_keys(3, 3, 0).is_err());
    }
}
