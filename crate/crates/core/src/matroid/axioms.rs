use std::collections::HashSet;

use super::{max_ground, ElementSet, Ground, MatroidError};

/// Which independence axiom failed, with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// (I1): the empty set is missing.
    EmptySetMissing,
    /// (I2): `set` is listed but `set - element` is not.
    NotSubsetClosed { set: ElementSet, element: usize },
    /// (I3): `smaller` is not maximal, `maximal` is, and no `x ∈ maximal ∖ smaller`
    /// gives `smaller + x` independent.
    NoAugmentation { smaller: ElementSet, maximal: ElementSet },
}

impl AxiomViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::EmptySetMissing => "I1",
            AxiomViolation::NotSubsetClosed { .. } => "I2",
            AxiomViolation::NoAugmentation { .. } => "I3",
        }
    }

    pub fn describe(&self, ground: &Ground) -> String {
        match self {
            AxiomViolation::EmptySetMissing => "(I1) violated: ∅ is not independent".to_string(),
            AxiomViolation::NotSubsetClosed { set, element } => format!(
                "(I2) violated: {:?} is independent but {:?} is not",
                ground.names(*set),
                ground.names(set.without(*element))
            ),
            AxiomViolation::NoAugmentation { smaller, maximal } => format!(
                "(I3) violated: I = {:?} is not maximal, I' = {:?} is maximal, and no x ∈ I' ∖ I makes I + x independent",
                ground.names(*smaller),
                ground.names(*maximal)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomVerdict {
    /// (I1)-(I3) hold. (IM) holds automatically on a finite ground set:
    /// every chain of independent sets is finite.
    Ok,
    Violated(AxiomViolation),
}

impl AxiomVerdict {
    pub const MAXIMALITY_NOTE: &'static str = "(IM) holds trivially on a finite ground set";

    pub fn is_ok(&self) -> bool {
        matches!(self, AxiomVerdict::Ok)
    }
}

/// Check (I1), (I2), (I3) for an explicitly listed independence family.
///
/// Witnesses are the first failures in canonical order.
pub fn verify_axioms(ground: &Ground, indep: &[ElementSet]) -> Result<AxiomVerdict, MatroidError> {
    let bound = max_ground();
    if ground.len() > bound {
        return Err(MatroidError::GroundTooLarge {
            size: ground.len(),
            bound,
        });
    }
    let full = ground.full();
    if let Some(s) = indep.iter().find(|s| !s.is_subset(full)) {
        let stray = s.difference(full).iter().next().unwrap_or(0);
        return Err(MatroidError::UnknownElement(format!("#{stray}")));
    }
    let mut sorted = indep.to_vec();
    sorted.sort();
    sorted.dedup();
    let members: HashSet<ElementSet> = sorted.iter().copied().collect();

    if !members.contains(&ElementSet::EMPTY) {
        return Ok(AxiomVerdict::Violated(AxiomViolation::EmptySetMissing));
    }
    for &s in &sorted {
        if let Some(x) = s.iter().find(|&x| !members.contains(&s.without(x))) {
            return Ok(AxiomVerdict::Violated(AxiomViolation::NotSubsetClosed { set: s, element: x }));
        }
    }
    let is_maximal = |s: ElementSet| full.difference(s).iter().all(|x| !members.contains(&s.with(x)));
    let maximal: Vec<ElementSet> = sorted.iter().copied().filter(|&s| is_maximal(s)).collect();
    for &i in sorted.iter().filter(|&&s| !is_maximal(s)) {
        for &m in &maximal {
            if !m.difference(i).iter().any(|x| members.contains(&i.with(x))) {
                return Ok(AxiomVerdict::Violated(AxiomViolation::NoAugmentation {
                    smaller: i,
                    maximal: m,
                }));
            }
        }
    }
    Ok(AxiomVerdict::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::subsets_of;

    fn family(g: &Ground, sets: &[&[&str]]) -> Vec<ElementSet> {
        sets.iter().map(|s| g.set(s).unwrap()).collect()
    }

    fn down_closure(sets: &[ElementSet]) -> Vec<ElementSet> {
        let mut out: Vec<_> = sets.iter().flat_map(|&s| subsets_of(s)).collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn rank_one_uniform_is_ok() {
        let g = Ground::letters(2);
        let v = verify_axioms(&g, &family(&g, &[&[], &["a"], &["b"]])).unwrap();
        assert_eq!(v, AxiomVerdict::Ok);
    }

    #[test]
    fn augmentation_failure_has_witness() {
        let g = Ground::letters(3);
        let indep = down_closure(&family(&g, &[&["a"], &["b", "c"]]));
        let v = verify_axioms(&g, &indep).unwrap();
        // {a} is maximal here, so the first non-maximal I without an
        // augmentation from a maximal I' is {b} against {a}.
        assert_eq!(
            v,
            AxiomVerdict::Violated(AxiomViolation::NoAugmentation {
                smaller: g.set(&["b"]).unwrap(),
                maximal: g.set(&["a"]).unwrap(),
            })
        );
    }

    #[test]
    fn missing_empty_set() {
        let g = Ground::letters(1);
        let v = verify_axioms(&g, &family(&g, &[&["a"]])).unwrap();
        assert_eq!(v, AxiomVerdict::Violated(AxiomViolation::EmptySetMissing));
    }

    #[test]
    fn subset_closure_failure() {
        let g = Ground::letters(2);
        let v = verify_axioms(&g, &family(&g, &[&[], &["a", "b"]])).unwrap();
        assert_eq!(v.clone(), AxiomVerdict::Violated(AxiomViolation::NotSubsetClosed {
            set: g.set(&["a", "b"]).unwrap(),
            element: 0,
        }));
        if let AxiomVerdict::Violated(w) = v {
            assert_eq!(w.axiom(), "I2");
        }
    }

    #[test]
    fn errors() {
        let g = Ground::letters(2);
        let stray = ElementSet::from_indices([5]);
        assert!(matches!(verify_axioms(&g, &[stray]), Err(MatroidError::UnknownElement(_))));
        let big = Ground::letters(25);
        assert!(matches!(verify_axioms(&big, &[]), Err(MatroidError::GroundTooLarge { .. })));
    }
}
