#![allow(dead_code)]

use paramreg::scalar::{int, ratio};
use paramreg::{Interval, Matrix, ParametricMatrix, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn tol() -> Rational {
    ratio(1, 1_000_000_000)
}

fn shifts() -> (Matrix, Matrix) {
    // ones on the sub- and superdiagonal
    (
        Matrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
        Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
    )
}

/// Three-parameter family with a single-parameter-like structure.
pub fn one_param() -> ParametricMatrix {
    let (lower, upper) = shifts();
    ParametricMatrix::new(
        Matrix::from_i64(&[&[1, 0, -1], &[0, 1, 0], &[-1, 0, 0]]),
        vec![Matrix::diagonal(&[int(1), int(1), ratio(1, 3)]), lower, upper],
        vec![
            Interval::symmetric(ratio(3, 4)),
            Interval::symmetric(ratio(1, 2)),
            Interval::symmetric(ratio(1, 2)),
        ],
    )
    .unwrap()
}

pub fn hudak() -> ParametricMatrix {
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

pub fn red_numb() -> ParametricMatrix {
    let (lower, upper) = shifts();
    ParametricMatrix::new(
        Matrix::from_rows(vec![
            vec![ratio(6, 5), int(0), int(-1)],
            vec![int(2), ratio(6, 5), int(0)],
            vec![int(-1), int(2), int(0)],
        ])
        .unwrap(),
        vec![Matrix::diagonal(&[int(1), int(1), ratio(1, 3)]), lower, upper],
        vec![Interval::symmetric(int(1)); 3],
    )
    .unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| int(rng.gen_range(-3..=3))).collect())
        .collect();
    Matrix::from_rows(rows).unwrap()
}

/// Family with `n ≤ 3`, `K ≤ 3`, integer entries in `[-3, 3]` and intervals with
/// small rational endpoints.
pub fn random_family(rng: &mut ChaCha8Rng) -> ParametricMatrix {
    let n = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=3);
    let a0 = random_matrix(rng, n);
    let coeffs = (0..k).map(|_| random_matrix(rng, n)).collect();
    let params = (0..k)
        .map(|_| {
            let mid = ratio(rng.gen_range(-2..=2), 2);
            let rad = ratio(rng.gen_range(1..=4), 4);
            Interval::new(&mid - &rad, &mid + &rad)
        })
        .collect();
    ParametricMatrix::new(a0, coeffs, params).unwrap()
}

/// A random point of the box with small denominators.
pub fn random_point(rng: &mut ChaCha8Rng, pm: &ParametricMatrix) -> Vec<Rational> {
    pm.params()
        .iter()
        .map(|iv| {
            let u = ratio(rng.gen_range(0..=64), 64);
            iv.lo() + u * iv.width()
        })
        .collect()
}
