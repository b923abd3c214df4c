use minkcurves::CurveError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Curve(#[from] CurveError),

    #[error("reading input: {0}")]
    Input(String),

    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),

    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    /// 0 pass, 1 invariant-fail, 2 usage, 3 causal, 4 degenerate, 5 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ChecksFailed { .. } => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Output(_) => 5,
            CliError::Curve(e) => match e {
                CurveError::InvalidParameter(_)
                | CurveError::DomainTooSmall { .. }
                | CurveError::DerivativeUnavailable { .. }
                | CurveError::SignatureInvalid { .. } => 2,
                CurveError::NotTimeLike { .. } | CurveError::NearNullVector => 3,
                CurveError::VanishingCurvature { .. }
                | CurveError::DegenerateAt0 { .. }
                | CurveError::CurvatureVanishes { .. }
                | CurveError::TorsionVanishes { .. }
                | CurveError::TorsionBranchInvalid { .. }
                | CurveError::CurvatureNotUnit { .. }
                | CurveError::ArclengthOriginUnresolved => 4,
                CurveError::QuadratureFailure { .. } | CurveError::NonFinite => 5,
            },
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::ChecksFailed { failed: 1, total: 2 }.exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Curve(CurveError::NearNullVector).exit_code(), 3);
        assert_eq!(CliError::Curve(CurveError::ArclengthOriginUnresolved).exit_code(), 4);
        assert_eq!(CliError::Curve(CurveError::NonFinite).exit_code(), 5);
    }
}
