mod common;

use common::{hudak, one_param, red_numb, tol};
use paramreg::exactla::{det_exact, det_polynomial};
use paramreg::model::BoxPolicy;
use paramreg::radius::{regularity_radius, RadiusKind};
use paramreg::regularity::{
    check_regularity, check_regularity_reduced_sufficient, sufficient_condition_rho, CheckOptions,
    Status,
};
use paramreg::rho0::max_rho0;
use paramreg::scalar::{int, ratio, to_f64};
use paramreg::{Interval, Matrix, Poly, Sign, SubproblemKey};

fn exhaustive() -> CheckOptions {
    CheckOptions {
        exhaustive: true,
        ..CheckOptions::default()
    }
}

#[test]
fn one_param_sufficient_tests() {
    let nm = one_param().normalize();
    let s = sufficient_condition_rho(&nm, &tol()).unwrap();
    assert!((to_f64(&s.rho.midpoint()) - 1.54).abs() < 0.01);
    assert!(!s.holds);
    let r = check_regularity_reduced_sufficient(&nm, 1, &tol()).unwrap();
    assert_eq!(r.status, Status::Regular);
    assert!((to_f64(&r.max.unwrap().midpoint()) - 0.841).abs() < 0.001);
    assert_eq!(check_regularity(&nm, &CheckOptions::default()).status, Status::Regular);
}

#[test]
fn hudak_center_and_regularity() {
    let pm = hudak();
    assert_eq!(
        pm.center_matrix(),
        Matrix::from_i64(&[&[36, -43, 49], &[-31, 36, -35], &[25, -35, 33]])
    );
    let nm = pm.normalize();
    assert_eq!(nm.radii(), vec![int(5), int(5)]);
    let s = sufficient_condition_rho(&nm, &tol()).unwrap();
    assert!((to_f64(&s.rho.midpoint()) - 1.72).abs() < 0.01);
    let v = check_regularity(&nm, &exhaustive());
    assert_eq!(v.status, Status::Regular);
    assert_eq!(v.slices.len(), 4);
    assert!(v.slices.iter().all(|c| c.roots == Some(0)));
    let rho = max_rho0(&nm, &tol()).unwrap();
    assert!((to_f64(&rho.max.midpoint()) - 0.968164).abs() < 1e-5);
    assert!(rho.certified);
}

#[test]
fn red_numb_witnesses() {
    let pm = red_numb();
    let nm = pm.normalize();
    let key = SubproblemKey::new(1, vec![Sign::Plus, Sign::Minus]);
    assert_eq!(
        det_polynomial(&nm, &key),
        Poly::new(vec![ratio(-13, 25), ratio(-22, 15), int(-1)])
    );
    let v = check_regularity(&nm, &exhaustive());
    assert_eq!(v.status, Status::Singular);
    let points: Vec<_> = v.witnesses.iter().map(|w| w.exact_point().unwrap()).collect();
    assert_eq!(
        points,
        vec![
            vec![int(1), ratio(-13, 15), int(-1)],
            vec![int(1), ratio(-3, 5), int(-1)],
        ]
    );
    assert!(v.witnesses.iter().all(|w| w.key.as_ref() == Some(&key)));
    for p in &points {
        assert_eq!(det_exact(&pm.evaluate(p, BoxPolicy::Strict).unwrap()), int(0));
    }
    assert_eq!(
        check_regularity_reduced_sufficient(&nm, 1, &tol()).unwrap().status,
        Status::Unknown
    );
}

#[test]
fn radii_of_regular_and_singular_families() {
    for (pm, expect) in [(hudak(), 1.03289), (red_numb(), 0.996413)] {
        let r = regularity_radius(&pm.normalize(), &tol());
        let RadiusKind::Finite(v) = &r.kind else {
            panic!("expected a finite radius, got {:?}", r.kind);
        };
        assert!((to_f64(&v.midpoint()) - expect).abs() < 1e-4, "{v}");
        let rho = &r.rho0.as_ref().unwrap().max;
        let product = Interval::new(v.lo() * rho.lo(), v.hi() * rho.hi());
        assert!(product.contains(&int(1)));
        assert!(r.witness.as_ref().unwrap().validated);
    }
}
