//! Thin-sums systems over exact fields: dependence checks for coefficient
//! families on the builtin graphs, finite thin sums matroids, explicit
//! dependences for the circuits of the twisted `RAYED_G` family, and the
//! skew-cut recurrence.

mod coeffs;
mod family;
mod field;
mod finite;
mod lambda;
mod recurrence;

use thiserror::Error;

use crate::periodic::PeriodicError;

pub use coeffs::{CoefficientsFile, PeriodicEntry, PeriodicValue, ThinCoefficients};
pub use family::{is_thin_dependence, support_degree_check, ThinFamily, ThinVerdict};
pub use field::{parse_value, Field, Gf, Gf2, Gf3, Q};
pub use finite::{check_thm53_finite, thin_sums_matroid_finite, thinly_independent, FiniteThinFamily};
pub use lambda::{
    build_lambda_f_oneray, build_lambda_f_threerung, loop_square_target, oneray_target, solve_thin_dependence, square,
    theta_target, threerung_target, two_squares_target,
};
pub use recurrence::{
    chain_points, lambda_prime_zero_sum, mu_nu_recurrence, nonzero_gf3, small_rational, verify_telescoping, Chain,
    FunctionFamily, Recurrence, SkewFamily,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThinError {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("malformed field value `{0}`")]
    BadValue(String),
    #[error("periodic class ({0}, {1}) is given twice")]
    DuplicateClass(String, usize),
    #[error("coefficients over {0} checked against a family over {1}")]
    FamilyMismatch(&'static str, &'static str),
    #[error("not a thin dependence: {0}")]
    NotADependence(String),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("support shape: {0}")]
    SupportShape(String),
    #[error("no thin dependence with this support: {0}")]
    NoDependence(String),
    #[error("{0} functions exceed the configured bound of {1}")]
    TooLarge(usize, usize),
    #[error(transparent)]
    Periodic(#[from] PeriodicError),
}
