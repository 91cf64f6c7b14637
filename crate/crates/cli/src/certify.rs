use std::path::Path;

use serde_json::json;
use wildmat::constructions::{self, Certificate, ConstructionError};

use crate::io::{read_json, write_or_return};
use crate::report::{CliError, Report};

fn construction_error(e: ConstructionError) -> CliError {
    match e {
        ConstructionError::CheckFailed { .. } | ConstructionError::InsufficientDepth(_) => {
            CliError::Precondition(e.to_string())
        }
        other => CliError::Input(other.into()),
    }
}

fn finish(cert: Certificate, output: Option<&Path>) -> Result<Report, CliError> {
    let plain = |v: serde_json::Value| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
    let summary = format!(
        "{}: verdict {}, |C ∩ D| = {}, {} checks passed",
        cert.tag(),
        plain(serde_json::to_value(cert.verdict).expect("serializable")),
        plain(serde_json::to_value(cert.intersection).expect("serializable")),
        cert.checks.len()
    );
    let status = json!({
        "construction": cert.tag(),
        "verdict": cert.verdict,
        "intersection": cert.intersection,
        "checks": cert.checks.len(),
    });
    Ok(match write_or_return(&cert, output)? {
        Some(text) => Report::pass(text, serde_json::to_value(&cert).expect("serializable")),
        None => Report::pass(summary, status),
    })
}

pub fn mplus(output: Option<&Path>) -> Result<Report, CliError> {
    finish(constructions::build_mplus_witness().map_err(construction_error)?, output)
}

pub fn union(depth: usize, output: Option<&Path>) -> Result<Report, CliError> {
    finish(constructions::verify_union_wildness(depth).map_err(construction_error)?, output)
}

pub fn recheck(path: &Path) -> Result<Report, CliError> {
    let cert: Certificate = read_json(path)?;
    let report = constructions::recheck(&cert).map_err(|e| match e {
        ConstructionError::ProcedureVersion { .. } => CliError::Precondition(e.to_string()),
        other => CliError::Input(other.into()),
    })?;
    let json = serde_json::to_value(&report).expect("serializable");
    Ok(match report.first_failure() {
        None => Report::pass(format!("{}: all {} checks pass", report.construction, report.outcomes.len()), json),
        Some(f) => Report::fail(format!("{}: check failed: {}: {}", report.construction, f.name, f.detail), json),
    })
}
