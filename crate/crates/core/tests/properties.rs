use minkcurves::families::{anti_salkowski_invariants, salkowski_frame, salkowski_invariants};
use minkcurves::transforms::transformed;
use minkcurves::{
    arclength, frenet_at, lorentz_cross, minkowski_inner, CurveSpec, DerivativeMethod, SalkowskiParams,
    TransformKind, Vec3M,
};
use proptest::prelude::*;

fn vec3() -> impl Strategy<Value = Vec3M> {
    (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64).prop_map(|(a, b, c)| Vec3M::new(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cross_is_orthogonal_and_antisymmetric(u in vec3(), v in vec3()) {
        let w = lorentz_cross(u, v);
        let scale = 1.0 + u.max_abs() * u.max_abs() * v.max_abs();
        prop_assert!(minkowski_inner(w, u).abs() <= 1e-12 * scale);
        prop_assert!((w + lorentz_cross(v, u)).max_abs() <= 1e-12 * scale);
    }

    #[test]
    fn closed_form_frame_is_orthonormal(m in 1.05..10.0f64, t in 0.05..3.0f64) {
        let p = SalkowskiParams::new(m).unwrap();
        let f = salkowski_frame(&p, t).unwrap();
        prop_assert!(f.orthonormality_defect() < 1e-10);
        prop_assert!(f.binormal_defect() < 1e-10);
    }

    #[test]
    fn analytic_invariants_match_closed_forms(m in 1.1..8.0f64, t in 0.2..2.5f64) {
        let p = SalkowskiParams::new(m).unwrap();
        let g = frenet_at(&CurveSpec::salkowski(m).unwrap(), t, DerivativeMethod::Analytic).unwrap();
        let (k, tau) = salkowski_invariants(&p, t).unwrap();
        prop_assert!((g.kappa - k).abs() < 1e-9);
        prop_assert!((g.tau - tau).abs() < 1e-9 * tau);
        let b = frenet_at(&CurveSpec::anti_salkowski(m).unwrap(), t, DerivativeMethod::Analytic).unwrap();
        let inv = anti_salkowski_invariants(&p, t).unwrap();
        prop_assert!((b.kappa - inv.kappa).abs() < 1e-9);
        prop_assert!((b.tau - inv.tau).abs() < 1e-9);
    }

    #[test]
    fn finite_differences_track_exact_invariants(m in 1.2..6.0f64, t in 0.3..2.0f64) {
        let c = CurveSpec::salkowski(m).unwrap();
        let exact = frenet_at(&c, t, DerivativeMethod::Analytic).unwrap();
        let fd = frenet_at(&c, t, DerivativeMethod::FD_DEFAULT).unwrap();
        prop_assert!((fd.kappa - exact.kappa).abs() < 1e-6);
        prop_assert!((fd.tau - exact.tau).abs() < 1e-6);
        prop_assert!(fd.frame.max_difference(&exact.frame) < 1e-6);
    }

    #[test]
    fn arclength_is_additive(m in 1.2..6.0f64, a in 0.1..1.0f64, da in 0.1..1.0f64, db in 0.1..1.0f64) {
        let c = CurveSpec::salkowski(m).unwrap();
        let (b, e) = (a + da, a + da + db);
        let whole = arclength(&c, a, e).unwrap();
        let parts = arclength(&c, a, b).unwrap() + arclength(&c, b, e).unwrap();
        prop_assert!((whole - parts).abs() < 1e-9 * (1.0 + whole));
    }

    #[test]
    fn transforms_swap_the_families(m in 1.2..6.0f64, t in 0.3..2.0f64) {
        let p = SalkowskiParams::new(m).unwrap();
        let (_, tau) = salkowski_invariants(&p, t).unwrap();
        let beta = transformed(&CurveSpec::salkowski(m).unwrap(), TransformKind::TorsionNormalizing);
        let f = frenet_at(&beta, t, DerivativeMethod::Analytic).unwrap();
        prop_assert!((f.tau - 1.0).abs() < 1e-7);
        prop_assert!((f.kappa - 1.0 / tau).abs() < 1e-7);
        let back = transformed(&beta, TransformKind::CurvatureNormalizing);
        let g = frenet_at(&back, t, DerivativeMethod::Analytic).unwrap();
        prop_assert!((g.kappa - 1.0).abs() < 1e-6);
        prop_assert!((g.tau - tau).abs() < 1e-6 * tau);
    }
}
