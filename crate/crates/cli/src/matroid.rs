use std::path::Path;

use anyhow::Context;
use serde_json::{json, Value};
use wildmat::ops;
use wildmat::{verify_axioms as check_axioms, AxiomVerdict, FamilyFile, FiniteMatroid, MatroidError, MatroidFile};

use crate::io::{read_json, write_or_return};
use crate::report::{CliError, Report};

#[derive(Debug, Clone, Copy)]
pub enum UnaryOp {
    Plus,
    Minus,
    Dual,
    Circuits,
    Cocircuits,
    CircuitsLemma33,
}

fn load(path: &Path) -> Result<FiniteMatroid, CliError> {
    let file: MatroidFile = read_json(path)?;
    let m = file.to_matroid().with_context(|| format!("{} is not a matroid", path.display()))?;
    Ok(m)
}

/// Operator preconditions become exit code 1; anything else is bad input.
fn op_error(e: MatroidError) -> CliError {
    match e {
        MatroidError::GroundIsBase | MatroidError::EmptySetIsBase => CliError::Precondition(e.to_string()),
        other => CliError::Input(other.into()),
    }
}

fn emit<T: serde::Serialize>(value: &T, output: Option<&Path>) -> Result<Report, CliError> {
    let json: Value = serde_json::to_value(value).expect("serializable");
    Ok(match write_or_return(value, output)? {
        Some(text) => Report::pass(text, json),
        None => {
            let p = output.expect("written to a file").display().to_string();
            Report::pass(format!("wrote {p}"), json!({ "written": p }))
        }
    })
}

pub fn verify_axioms(path: &Path) -> Result<Report, CliError> {
    let file: MatroidFile = read_json(path)?;
    let (ground, family) = file.independence_family().context("resolving labels")?;
    let verdict = check_axioms(&ground, &family).map_err(|e| CliError::Input(e.into()))?;
    Ok(match verdict {
        AxiomVerdict::Ok => Report::pass(
            format!("ok: (I1), (I2), (I3) hold; {}", AxiomVerdict::MAXIMALITY_NOTE),
            json!({ "verdict": "OK", "note": AxiomVerdict::MAXIMALITY_NOTE }),
        ),
        AxiomVerdict::Violated(v) => {
            let text = v.describe(&ground);
            Report::fail(
                format!("violation: {text}"),
                json!({ "verdict": "VIOLATED", "axiom": v.axiom(), "witness": text }),
            )
        }
    })
}

pub fn unary(op: UnaryOp, path: &Path, output: Option<&Path>) -> Result<Report, CliError> {
    let m = load(path)?;
    match op {
        UnaryOp::Plus => emit(&MatroidFile::from_matroid(&ops::plus(&m).map_err(op_error)?), output),
        UnaryOp::Minus => emit(&MatroidFile::from_matroid(&ops::minus(&m).map_err(op_error)?), output),
        UnaryOp::Dual => emit(&MatroidFile::from_matroid(&m.dual()), output),
        UnaryOp::Circuits => emit(&FamilyFile::from_family(&m.circuits().map_err(op_error)?), output),
        UnaryOp::Cocircuits => emit(&FamilyFile::from_family(&m.cocircuits().map_err(op_error)?), output),
        UnaryOp::CircuitsLemma33 => {
            let fam = ops::circuits_of_plus_via_lemma33(&m).map_err(op_error)?;
            emit(&FamilyFile::from_family(&fam), output)
        }
    }
}

pub fn union(first: &Path, second: &Path, output: Option<&Path>) -> Result<Report, CliError> {
    let (a, b) = (load(first)?, load(second)?);
    emit(&MatroidFile::from_matroid(&ops::union(&a, &b).map_err(op_error)?), output)
}

pub fn wild_scan(path: &Path) -> Result<Report, CliError> {
    let m = load(path)?;
    let (k, witness) = m.max_circuit_cocircuit_intersection().map_err(op_error)?;
    let names = witness.map(|(c, d)| (m.ground().names(c), m.ground().names(d)));
    let text = match &names {
        Some((c, d)) => format!("max |C ∩ D| = {k} (finite)\nC = {c:?}\nD = {d:?}"),
        None => "no circuit-cocircuit pair: max |C ∩ D| = 0 (finite)".to_string(),
    };
    Ok(Report::pass(
        text,
        json!({
            "max_intersection": k,
            "cardinality": "FINITE",
            "circuit": names.as_ref().map(|p| &p.0),
            "cocircuit": names.as_ref().map(|p| &p.1),
        }),
    ))
}
