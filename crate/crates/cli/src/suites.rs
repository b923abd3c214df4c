//! Verification suites run by `minkcurves verify`.

use clap::ValueEnum;
use minkcurves::families::{anti_salkowski_point, salkowski_point};
use minkcurves::transforms::{
    round_trip_check, speed_law_check, tangent_transport_check, transform_invariant_check, transformed,
};
use minkcurves::verify::{
    axis_decomposition_check, closed_form_frame_check, closed_form_frenet_check, family_invariants_check,
    fixed_axis_angle, frame_agreement, frenet_equations_check, helix_ratio, lemma1_converse_axis,
    lemma1_forward_check, slant_invariant, torsion_law_check, translation_match,
};
use minkcurves::{
    CurveSpec, DerivativeMethod, InvariantReport, SalkowskiParams, SlantConfig, TransformKind, Vec3M,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Frames,
    Lemma1,
    Lemma2,
    Lemma3,
    Slant,
    Axis,
}

const FD: DerivativeMethod = DerivativeMethod::FiniteDifference { step: Some(1e-4) };
const EXACT: DerivativeMethod = DerivativeMethod::Analytic;

type Reports = Result<Vec<InvariantReport>, CliError>;

fn label(suite: &str, m: f64, r: InvariantReport) -> InvariantReport {
    InvariantReport { name: format!("{suite}: {} (m={m})", r.name), ..r }
}

fn labelled(suite: &'static str, m: f64, reports: Vec<InvariantReport>) -> Vec<InvariantReport> {
    reports.into_iter().map(|r| label(suite, m, r)).collect()
}

fn tag(r: InvariantReport, tag: &str) -> InvariantReport {
    InvariantReport { name: format!("{} [{tag}]", r.name), ..r }
}

/// Constant-curvature, constant-torsion fixture: κ = 1, τ = −√6/2.
fn helix_fixture() -> Result<CurveSpec, CliError> {
    Ok(CurveSpec::helix(6f64.sqrt(), 2.0, 0.0, 10.0)?)
}

pub fn run(suite: Suite, m: f64, grid: &[f64]) -> Reports {
    let p = SalkowskiParams::new(m)?;
    Ok(match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Frames, Suite::Lemma1, Suite::Lemma2, Suite::Lemma3, Suite::Slant, Suite::Axis] {
                all.extend(run(s, m, grid)?);
            }
            all
        }
        Suite::Frames => labelled("frames", m, frames(&p, grid)?),
        Suite::Lemma1 => labelled("lemma1", m, lemma1(&p, grid)?),
        Suite::Lemma2 => labelled("lemma2", m, lemma2(&p, grid)?),
        Suite::Lemma3 => labelled("lemma3", m, lemma3(&p, grid)?),
        Suite::Slant => labelled("slant", m, slant(&p, grid)?),
        Suite::Axis => labelled("axis", m, axis(&p, grid)?),
    })
}

fn frames(p: &SalkowskiParams, grid: &[f64]) -> Reports {
    let gamma = CurveSpec::salkowski(p.m())?;
    let beta = CurveSpec::anti_salkowski(p.m())?;
    Ok(vec![
        closed_form_frame_check(p, grid)?,
        closed_form_frenet_check(p, grid)?,
        tag(family_invariants_check(&gamma, grid, EXACT)?, "exact"),
        tag(family_invariants_check(&gamma, grid, FD)?, "fd"),
        tag(family_invariants_check(&beta, grid, FD)?, "fd"),
        frame_agreement(&gamma, grid, FD)?,
        frenet_equations_check(&gamma, grid, FD, 1e-4)?,
        torsion_law_check(p, grid)?,
    ])
}

fn lemma1(p: &SalkowskiParams, grid: &[f64]) -> Reports {
    let gamma = CurveSpec::salkowski(p.m())?;
    let helix = helix_fixture()?;
    Ok(vec![
        lemma1_forward_check(&gamma, p.phi(), grid, EXACT)?,
        lemma1_converse_axis(&gamma, p.phi(), 1, grid, EXACT)?,
        lemma1_converse_axis(&gamma, p.phi(), -1, grid, EXACT)?
            .expect_fails("constructed axis on the wrong branch is not constant", 1e-3),
        lemma1_forward_check(&helix, p.phi(), grid, EXACT)?
            .expect_fails("constant-torsion helix violates the intrinsic equation", 1e-3),
    ])
}

fn lemma2(p: &SalkowskiParams, grid: &[f64]) -> Reports {
    let gamma = CurveSpec::salkowski(p.m())?;
    let image = transformed(&gamma, TransformKind::TorsionNormalizing).sample(grid)?;
    let closed: Vec<Vec3M> = grid.iter().map(|&t| anti_salkowski_point(p, t)).collect();
    let kind = TransformKind::TorsionNormalizing;
    Ok(vec![
        translation_match("image matches the anti-salkowski closed form up to translation", &image, &closed, grid, 1e-6),
        transform_invariant_check(&gamma, kind, grid)?,
        speed_law_check(&gamma, kind, grid)?,
        tangent_transport_check(&gamma, kind, grid)?,
        round_trip_check(&gamma, grid)?,
    ])
}

fn lemma3(p: &SalkowskiParams, grid: &[f64]) -> Reports {
    let beta = CurveSpec::anti_salkowski(p.m())?;
    let image = transformed(&beta, TransformKind::CurvatureNormalizing).sample(grid)?;
    let closed: Vec<Vec3M> = grid.iter().map(|&t| salkowski_point(p, t)).collect();
    let kind = TransformKind::CurvatureNormalizing;
    Ok(vec![
        translation_match("image matches the salkowski closed form up to translation", &image, &closed, grid, 1e-6),
        transform_invariant_check(&beta, kind, grid)?,
        speed_law_check(&beta, kind, grid)?,
        tangent_transport_check(&beta, kind, grid)?,
    ])
}

fn slant(p: &SalkowskiParams, grid: &[f64]) -> Reports {
    let gamma = CurveSpec::salkowski(p.m())?;
    let cfg = SlantConfig::default();
    let sigma = slant_invariant(&gamma, grid, cfg, EXACT)?;
    let m = p.m();
    let equals = InvariantReport::new(
        "slant invariant equals -m",
        sigma.grid.clone(),
        sigma.values.clone(),
        sigma.values.iter().map(|s| (s + m).abs()).collect(),
        1e-5,
    )
    .with_value(-m);
    let helix = helix_fixture()?;
    let helix_grid: Vec<f64> = grid.iter().map(|t| t + 1.0).collect();
    Ok(vec![
        sigma,
        equals,
        helix_ratio(&gamma, grid, EXACT)?.expect_varies("helix ratio tau/kappa varies", 0.05),
        tag(helix_ratio(&helix, &helix_grid, EXACT)?, "circular helix"),
    ])
}

fn axis(p: &SalkowskiParams, grid: &[f64]) -> Reports {
    let gamma = CurveSpec::salkowski(p.m())?;
    let beta = CurveSpec::anti_salkowski(p.m())?;
    Ok(vec![
        tag(fixed_axis_angle(&gamma, Vec3M::E3, grid, EXACT)?, "salkowski, exact"),
        tag(fixed_axis_angle(&gamma, Vec3M::E3, grid, FD)?, "salkowski, fd"),
        tag(fixed_axis_angle(&beta, Vec3M::E3, grid, EXACT)?, "anti-salkowski, exact"),
        fixed_axis_angle(&gamma, Vec3M::E2, grid, EXACT)?.expect_varies("normal angle with (0,1,0) varies", 0.05),
        axis_decomposition_check(p, grid, 1)?,
    ])
}
