//! Explicit wildness witnesses over the builtin families, packaged as
//! certificates that can be serialized and re-verified from scratch.
//!
//! Two constructions are provided:
//!
//! * `MPLUS_G`: over `RAYED_G`, a double ray `O`, the loop `{l}`, and the
//!   base `B = {p_i} ∪ {r_i}` give a circuit `C = O ∪ {l}` of `M⁺` and a
//!   cocircuit `D = E ∖ B` with `C ∩ D` infinite.
//! * `UNION_H`: over `DOUBLED_H`, the set `C` of all horizontal edges plus
//!   `r:1` and `D = {u_i} ∪ {r_i}` for `M ∨ M`, backed by explicit covers of
//!   `(E ∖ D) + e` by two independent sets and the window counting bound.

mod certificate;
mod mplus;
mod union;

use thiserror::Error;

use crate::periodic::PeriodicError;

pub use certificate::{recheck, Certificate, CheckOutcome, RecheckReport, Support, Verdict, PROCEDURES, TOOL_VERSION};
pub use mplus::{build_mplus_witness, build_mplus_witness_at, certify_mplus, mplus_checks, MplusObjects};
pub use union::{
    b1_union, b2_union, build_c_union, build_covers, build_d_union, certify_union, counting_check, cover_checks,
    split_c_without, swapped_cover, union_checks, verify_union_wildness, CountingRow, CoverWitness, UnionObjects,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("check failed: {check}: {detail}")]
    CheckFailed { check: String, detail: String },
    #[error("depth {0} is too small; at least 2 is required")]
    InsufficientDepth(usize),
    #[error("{0} is not an edge of D (only u and r edges are)")]
    NotInD(String),
    #[error("certificate was produced with {name} version {found}, this build has {expected}")]
    ProcedureVersion { name: String, found: u32, expected: u32 },
    #[error(transparent)]
    Periodic(#[from] PeriodicError),
}

impl ConstructionError {
    /// Name of the failing check, if this is a check failure.
    pub fn check(&self) -> Option<&str> {
        match self {
            ConstructionError::CheckFailed { check, .. } => Some(check),
            _ => None,
        }
    }
}

/// First failing outcome as an error, else `Ok`.
fn require_all(outcomes: &[CheckOutcome]) -> Result<(), ConstructionError> {
    match outcomes.iter().find(|c| !c.passed) {
        Some(c) => Err(ConstructionError::CheckFailed {
            check: c.name.clone(),
            detail: c.detail.clone(),
        }),
        None => Ok(()),
    }
}
