use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::mplus::{mplus_checks, MplusObjects};
use super::union::{union_checks, CountingRow, CoverWitness, UnionObjects};
use super::ConstructionError;
use crate::periodic::{Cardinality, EpSet, Family};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Decision procedures a certificate depends on, with the version of their
/// current implementation. A certificate is only rechecked against the
/// versions it was produced with.
pub const PROCEDURES: [(&str, u32); 6] = [
    ("contains_finite_cycle", 1),
    ("contains_double_ray", 1),
    ("is_base_ma", 1),
    ("is_circuit_ma", 1),
    ("intersection_cardinality", 1),
    ("counting_check", 1),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Wild,
    Unverified,
}

/// Construction-specific objects; the `construction` tag is `MPLUS_G` or
/// `UNION_H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction")]
pub enum Support {
    #[serde(rename = "MPLUS_G")]
    MplusG {
        ray_start: usize,
        /// The double-ray circuit `O` of `M`.
        o: EpSet,
        /// A second circuit of `M`, used for the two-circuit hypothesis.
        o_prime: EpSet,
        /// The circuit of `M/O` joined to `O`.
        o_double_prime: EpSet,
        base: EpSet,
    },
    #[serde(rename = "UNION_H")]
    UnionH {
        depth: usize,
        b1: EpSet,
        b2: EpSet,
        covers: Vec<CoverWitness>,
        counting: Vec<CountingRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub tool_version: String,
    pub procedures: BTreeMap<String, u32>,
    pub family: Family,
    #[serde(flatten)]
    pub support: Support,
    pub circuit: EpSet,
    pub cocircuit: EpSet,
    pub intersection: Cardinality,
    pub checks: Vec<CheckOutcome>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl Certificate {
    pub(crate) fn assemble(
        family: Family,
        support: Support,
        circuit: EpSet,
        cocircuit: EpSet,
        checks: Vec<CheckOutcome>,
        notes: Vec<String>,
    ) -> Result<Certificate, ConstructionError> {
        super::require_all(&checks)?;
        let intersection = crate::periodic::intersection_cardinality(&circuit, &cocircuit)?;
        Ok(Certificate {
            tool_version: TOOL_VERSION.to_string(),
            procedures: PROCEDURES.iter().map(|&(n, v)| (n.to_string(), v)).collect(),
            family,
            support,
            circuit,
            cocircuit,
            intersection,
            checks,
            notes,
            verdict: Verdict::Wild,
        })
    }

    pub fn tag(&self) -> &'static str {
        match self.support {
            Support::MplusG { .. } => "MPLUS_G",
            Support::UnionH { .. } => "UNION_H",
        }
    }
}

/// Result of re-verifying a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecheckReport {
    pub construction: &'static str,
    pub outcomes: Vec<CheckOutcome>,
}

impl RecheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|c| !c.passed)
    }
}

/// Recompute every check from the embedded objects, then compare against
/// what the certificate records.
pub fn recheck(cert: &Certificate) -> Result<RecheckReport, ConstructionError> {
    for (name, expected) in PROCEDURES {
        let found = cert.procedures.get(name).copied().unwrap_or(0);
        if found != expected {
            return Err(ConstructionError::ProcedureVersion {
                name: name.to_string(),
                found,
                expected,
            });
        }
    }
    let (family, mut outcomes) = match &cert.support {
        Support::MplusG {
            ray_start,
            o,
            o_prime,
            o_double_prime,
            base,
        } => {
            let objects = MplusObjects {
                ray_start: *ray_start,
                o: o.clone(),
                o_prime: o_prime.clone(),
                o_double_prime: o_double_prime.clone(),
                base: base.clone(),
            };
            (Family::RayedG, mplus_checks(&objects, &cert.circuit, &cert.cocircuit))
        }
        Support::UnionH {
            depth,
            b1,
            b2,
            covers,
            counting,
        } => {
            let objects = UnionObjects {
                depth: *depth,
                b1: b1.clone(),
                b2: b2.clone(),
                covers: covers.clone(),
                counting: counting.clone(),
            };
            (Family::DoubledH, union_checks(&objects, &cert.circuit, &cert.cocircuit))
        }
    };
    outcomes.push(CheckOutcome::new(
        "family matches construction",
        cert.family == family,
        format!("{} for {}", cert.family, cert.tag()),
    ));
    let intersection = crate::periodic::intersection_cardinality(&cert.circuit, &cert.cocircuit)?;
    outcomes.push(CheckOutcome::new(
        "recorded |C ∩ D|",
        intersection == cert.intersection,
        format!("recorded {}, recomputed {}", cert.intersection, intersection),
    ));
    let recorded: Vec<(&str, bool)> = cert.checks.iter().map(|c| (c.name.as_str(), c.passed)).collect();
    let recomputed: Vec<(&str, bool)> = outcomes
        .iter()
        .take(outcomes.len() - 2)
        .map(|c| (c.name.as_str(), c.passed))
        .collect();
    outcomes.push(CheckOutcome::new(
        "recorded checks match recomputation",
        recorded == recomputed,
        format!("{} recorded, {} recomputed", recorded.len(), recomputed.len()),
    ));
    let all = outcomes.iter().all(|c| c.passed);
    outcomes.push(CheckOutcome::new(
        "recorded verdict",
        (cert.verdict == Verdict::Wild) == all,
        format!("{:?}", cert.verdict),
    ));
    Ok(RecheckReport {
        construction: cert.tag(),
        outcomes,
    })
}
