//! Frozen reference values computed independently at 40 digits.

use minkcurves::families::salkowski_point;
use minkcurves::transforms::transformed;
use minkcurves::{arclength, frenet_at, CurveSpec, DerivativeMethod, SalkowskiParams, TransformKind, Vec3M};

fn close(a: Vec3M, b: [f64; 3], tol: f64) {
    let d = (a - Vec3M::new(b[0], b[1], b[2])).max_abs();
    assert!(d <= tol, "{a:?} vs {b:?}: {d:e}");
}

#[test]
fn salkowski_positions() {
    let p5 = SalkowskiParams::new(5.0).unwrap();
    close(salkowski_point(&p5, 0.5), [0.2286741451155429499, 0.000019744663605615629723, 0.015999698922094050356], 1e-14);
    let p15 = SalkowskiParams::new(1.5).unwrap();
    close(salkowski_point(&p15, 1.7), [9.4283740545367674283, 3.9064175253767706467, 7.1364064571591797038], 1e-12);
}

#[test]
fn salkowski_torsion_from_jet() {
    for (m, t, tau) in [(5.0, 0.5, 2.1268134487868924328), (1.5, 1.7, 1.0211116343381800831)] {
        let c = CurveSpec::salkowski(m).unwrap();
        let exact = frenet_at(&c, t, DerivativeMethod::Analytic).unwrap();
        assert!((exact.kappa - 1.0).abs() < 1e-12);
        assert!((exact.tau - tau).abs() < 1e-12, "m={m}: {}", exact.tau);
        let fd = frenet_at(&c, t, DerivativeMethod::FD_DEFAULT).unwrap();
        assert!((fd.tau - tau).abs() < 1e-6, "m={m}: {}", fd.tau);
    }
}

#[test]
fn arclength_by_quadrature() {
    let c = CurveSpec::salkowski(5.0).unwrap();
    let s = arclength(&c, 0.4, 1.9).unwrap();
    assert!((s - 0.49278703654299928417).abs() < 1e-10, "{s}");
}

#[test]
fn torsion_normalizing_image_of_gamma_2() {
    // Integral of γ'·τ from the domain start 1e-3 up to 1.5.
    let beta = transformed(&CurveSpec::salkowski(2.0).unwrap(), TransformKind::TorsionNormalizing);
    let x = beta.position(1.5).unwrap();
    close(x, [2.0220080708927062979, 0.30139747626953461075, 1.4013521516226700406], 1e-8);
}
