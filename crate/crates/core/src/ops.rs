//! The M⁻ / M⁺ operators, matroid union and the circuit descriptions that
//! go with them, on finite matroids.

use std::collections::HashSet;

use crate::matroid::{max_ground, ElementSet, FiniteMatroid, Ground, MatroidError, SetFamily};

/// `M⁻`: bases are `B - e` for a base `B` and `e ∈ B`.
pub fn minus(m: &FiniteMatroid) -> Result<FiniteMatroid, MatroidError> {
    if m.rank() == 0 {
        return Err(MatroidError::EmptySetIsBase);
    }
    let bases = m
        .bases()
        .iter()
        .flat_map(|&b| b.iter().map(move |e| b.without(e)))
        .collect();
    Ok(FiniteMatroid::from_bases_unchecked(m.ground().clone(), bases))
}

/// `M⁺`: bases are `B + e` for a base `B` and `e ∉ B`.
pub fn plus(m: &FiniteMatroid) -> Result<FiniteMatroid, MatroidError> {
    let full = m.ground().full();
    if m.is_base(full) {
        return Err(MatroidError::GroundIsBase);
    }
    let bases = m
        .bases()
        .iter()
        .flat_map(|&b| full.difference(b).iter().map(move |e| b.with(e)))
        .collect();
    Ok(FiniteMatroid::from_bases_unchecked(m.ground().clone(), bases))
}

/// Circuits of `M⁻` read off `M`: every base, plus every circuit that
/// includes no base.
pub fn circuits_of_minus(m: &FiniteMatroid) -> Result<SetFamily, MatroidError> {
    if m.rank() == 0 {
        return Err(MatroidError::EmptySetIsBase);
    }
    let circuits = m.circuits()?;
    let mut out: Vec<ElementSet> = m.bases().to_vec();
    out.extend(
        circuits
            .members()
            .iter()
            .copied()
            .filter(|&c| !m.bases().iter().any(|&b| b.is_subset(c))),
    );
    Ok(SetFamily::new(m.ground().clone(), out))
}

/// Circuits of `M⁺` as `O₁ ∪ O₂` with `O₁` a circuit of `M` and `O₂` a
/// circuit of `M / O₁`.
pub fn circuits_of_plus_via_lemma33(m: &FiniteMatroid) -> Result<SetFamily, MatroidError> {
    if m.is_base(m.ground().full()) {
        return Err(MatroidError::GroundIsBase);
    }
    let mut out = Vec::new();
    for &o1 in m.circuits()?.members() {
        let contracted = m.contract(o1)?;
        for &o2 in contracted.circuits()?.members() {
            out.push(o1.union(m.lift_from_minor(o1, o2)));
        }
    }
    Ok(SetFamily::new(m.ground().clone(), out))
}

/// Whether `O₁ ∪ O₂` is dependent in `M⁺` for two distinct circuits.
pub fn check_cor34(m: &FiniteMatroid, o1: ElementSet, o2: ElementSet) -> Result<bool, MatroidError> {
    let circuits = m.circuits()?;
    for o in [o1, o2] {
        if !circuits.contains(o) {
            return Err(MatroidError::NotACircuit(m.ground().names(o)));
        }
    }
    if o1 == o2 {
        return Err(MatroidError::SameCircuit);
    }
    Ok(!plus(m)?.is_independent(o1.union(o2))?)
}

/// `M₁ ∨ M₂` on `E₁ ∪ E₂` (elements identified by label; `E₁`'s order
/// first, then new labels of `E₂`).
///
/// Every independent set `I₁ ∪ I₂` lies in some `B₁ ∪ B₂`, so the bases are
/// the largest such unions.
pub fn union(m1: &FiniteMatroid, m2: &FiniteMatroid) -> Result<FiniteMatroid, MatroidError> {
    let mut labels: Vec<String> = m1.ground().labels().to_vec();
    for l in m2.ground().labels() {
        if m1.ground().index_of(l).is_none() {
            labels.push(l.clone());
        }
    }
    let bound = max_ground();
    if labels.len() > bound {
        return Err(MatroidError::GroundTooLarge {
            size: labels.len(),
            bound,
        });
    }
    let ground = Ground::new(labels)?;
    let map_into = |m: &FiniteMatroid| -> Vec<Option<usize>> {
        m.ground().labels().iter().map(|l| ground.index_of(l)).collect()
    };
    let map1 = map_into(m1);
    let map2 = map_into(m2);
    let b1: Vec<ElementSet> = m1.bases().iter().map(|b| b.remap(&map1)).collect();
    let b2: Vec<ElementSet> = m2.bases().iter().map(|b| b.remap(&map2)).collect();

    let mut seen = HashSet::new();
    let mut best = 0;
    for &x in &b1 {
        for &y in &b2 {
            let u = x.union(y);
            if u.len() >= best && seen.insert(u) {
                best = best.max(u.len());
            }
        }
    }
    let bases = seen.into_iter().filter(|b| b.len() == best).collect();
    Ok(FiniteMatroid::from_bases_unchecked(ground, bases))
}

/// Every circuit of a finite matroid is finite, so this is the identity.
/// Present so finite and periodic code paths have the same vocabulary.
pub fn finitarization(m: &FiniteMatroid) -> FiniteMatroid {
    m.clone()
}

/// Which hypotheses of the "M⁺ is wild" criterion a finite matroid meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WildCriterionReport {
    /// At least two circuits.
    pub two_circuits: bool,
    /// A base `B` and circuit `O` with `O ∖ B` infinite. Never true for a
    /// finite ground set; the infinite instance lives in `constructions`.
    pub infinite_circuit_outside_base: bool,
}

impl WildCriterionReport {
    pub fn implies_wild(&self) -> bool {
        self.two_circuits && self.infinite_circuit_outside_base
    }
}

pub fn thm35_hypotheses(m: &FiniteMatroid) -> Result<WildCriterionReport, MatroidError> {
    Ok(WildCriterionReport {
        two_circuits: m.circuits()?.len() >= 2,
        infinite_circuit_outside_base: false,
    })
}

/// `U_{1,E}` on the ground of `m`.
pub fn rank_one_uniform_like(m: &FiniteMatroid) -> FiniteMatroid {
    FiniteMatroid::uniform_on(1, m.ground().clone())
}
