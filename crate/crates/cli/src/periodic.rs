use std::path::PathBuf;

use clap::Subcommand;
use serde_json::json;
use wildmat::periodic::{self, Cardinality, Dependence, EpSet};

use crate::io::read_json;
use crate::report::{CliError, Report};

#[derive(Debug, Subcommand)]
pub enum PeriodicCommand {
    /// Run every decision on an edge-set file and report the results.
    Check { path: PathBuf },
    /// |S ∩ T| for two edge-set files over the same family.
    Intersect { first: PathBuf, second: PathBuf },
}

pub fn run(cmd: PeriodicCommand) -> Result<Report, CliError> {
    match cmd {
        PeriodicCommand::Check { path } => {
            let s: EpSet = read_json(&path)?;
            Ok(check(&s))
        }
        PeriodicCommand::Intersect { first, second } => {
            let s: EpSet = read_json(&first)?;
            let t: EpSet = read_json(&second)?;
            let c = periodic::intersection_cardinality(&s, &t).map_err(|e| CliError::Input(e.into()))?;
            Ok(Report::pass(format!("|S ∩ T| = {}", cardinality(c)), json!({ "intersection": c })))
        }
    }
}

fn cardinality(c: Cardinality) -> String {
    match c {
        Cardinality::Finite(n) => n.to_string(),
        Cardinality::Infinite => "INFINITE".to_string(),
    }
}

fn check(s: &EpSet) -> Report {
    let f = s.family();
    let names = |es: &[wildmat::periodic::EdgeId]| es.iter().map(|&e| f.edge_name(e)).collect::<Vec<_>>();
    let cycle = periodic::contains_finite_cycle(s).map(|c| names(&c));
    let ray = periodic::contains_double_ray(s);
    let ray_report = ray.certificate().map(|c| c.report(f));
    let base = periodic::is_base_ma(s);
    let circuit = periodic::is_circuit_ma(s);
    let skew = periodic::is_skew_cut(s).ok();
    let independent = matches!(base, periodic::BaseVerdict::Base | periodic::BaseVerdict::NotMaximal(_));
    let dependence = match periodic::dependence(s) {
        None => "independent".to_string(),
        Some(Dependence::FiniteCycle(_)) => "contains a finite cycle".to_string(),
        Some(Dependence::DoubleRay(_)) => "contains a double ray".to_string(),
    };
    let mut lines = vec![
        format!("family: {}", f.name()),
        format!("cardinality: {}", cardinality(s.cardinality())),
        format!("finite cycle: {}", cycle.as_ref().map_or("none".to_string(), |c| format!("{c:?}"))),
        format!("double ray: {}", if ray.is_found() { "yes" } else { "no" }),
        format!("M_A: {dependence}"),
        format!("base: {}", base.describe(f)),
        format!("circuit: {circuit}"),
    ];
    if let Some(sk) = skew {
        lines.push(format!("skew cut: {sk}"));
    }
    Report::pass(
        lines.join("\n"),
        json!({
            "family": f,
            "cardinality": s.cardinality(),
            "finite_cycle": cycle,
            "double_ray": ray_report,
            "independent": independent,
            "base": base.describe(f),
            "is_base": base.is_base(),
            "circuit": circuit,
            "skew_cut": skew,
        }),
    )
}
