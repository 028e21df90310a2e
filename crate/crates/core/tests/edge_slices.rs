//! The edge-slice criteria only see the boundary edges of the parameter box. For
//! a general affine dependency the singular set can sit strictly inside the box,
//! and then every edge verdict is "regular" although the family is not. The
//! eigenvalue maximum scales the edges towards the center, so it does notice.

mod common;

use common::tol;
use paramreg::exactla::det_exact;
use paramreg::oracle::grid_scan_singular;
use paramreg::radius::{regularity_radius, RadiusKind};
use paramreg::regularity::{check_regularity, CheckOptions, Status};
use paramreg::rho0::max_rho0;
use paramreg::scalar::{int, ratio};
use paramreg::{Interval, Matrix, ParametricMatrix, Poly};

/// `det A(p) = 1 − p₁² − p₂²`, zero on the unit circle inside `[−2, 2]²`.
fn circle() -> ParametricMatrix {
    ParametricMatrix::new(
        Matrix::from_i64(&[&[0, -1], &[1, 0]]),
        vec![Matrix::from_i64(&[&[1, 0], &[0, -1]]), Matrix::from_i64(&[&[0, 1], &[1, 0]])],
        vec![Interval::symmetric(int(2)); 2],
    )
    .unwrap()
}

#[test]
fn singular_set_inside_the_box() {
    let pm = circle();
    assert_eq!(det_exact(&pm.evaluate_unchecked(&[int(1), int(0)])), int(0));
    assert_eq!(det_exact(&pm.evaluate_unchecked(&[int(0), int(-1)])), int(0));
    let w = grid_scan_singular(&pm, 5).unwrap();
    assert!(w.exact);
}

#[test]
fn edge_verdict_is_regular() {
    let nm = circle().normalize();
    let v = check_regularity(
        &nm,
        &CheckOptions {
            exhaustive: true,
            ..CheckOptions::default()
        },
    );
    assert_eq!(v.status, Status::Regular);
    assert_eq!(v.slices.len(), 4);
    for s in &v.slices {
        // 1 − 4 − t² on every edge
        assert_eq!(s.det, Poly::from_i64(&[-3, 0, -1]), "{}", s.key);
        assert_eq!(s.roots, Some(0));
    }
}

#[test]
fn eigenvalue_route_sees_the_interior() {
    // the scaled box r·[−2, 2]² first meets the circle at its corners, r = 1/(2√2)
    let nm = circle().normalize();
    let rho = max_rho0(&nm, &tol()).unwrap();
    let (lo, hi) = (rho.max.lo(), rho.max.hi());
    assert!(lo * lo <= int(8) && int(8) <= hi * hi, "{:?}", rho.max);
    assert!(rho.certified);
    let r = regularity_radius(&nm, &tol());
    let RadiusKind::Finite(v) = &r.kind else {
        panic!("expected a finite radius, got {:?}", r.kind);
    };
    assert!(v.lo() * v.lo() * int(8) <= int(1) && int(1) <= v.hi() * v.hi() * int(8), "{v:?}");
    assert!(v.hi() < &ratio(1, 2));
    let w = r.witness.unwrap();
    assert!(w.validated);
}
