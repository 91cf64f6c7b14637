//! Finite matroids given by an explicit base family.
//!
//! Everything here is exhaustive: independence is "contained in a base",
//! circuits and cocircuits come from a full independence table over the
//! power set. Ground sets are therefore capped (see [`max_ground`]).

mod axioms;
mod file;
mod set;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use thiserror::Error;

pub use axioms::{verify_axioms, AxiomVerdict, AxiomViolation};
pub use file::{FamilyFile, MatroidFile};
pub use set::{subsets_of, ElementSet};

/// Default cap on ground-set size for exhaustive operations.
pub const DEFAULT_MAX_GROUND: usize = 20;

static MAX_GROUND: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_GROUND);

/// Current cap on ground-set size for exhaustive operations.
pub fn max_ground() -> usize {
    MAX_GROUND.load(Ordering::Relaxed)
}

/// Change the exhaustive-enumeration cap. Values above 63 are clamped.
pub fn set_max_ground(n: usize) {
    MAX_GROUND.store(n.min(63), Ordering::Relaxed);
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set has {size} elements, above the configured bound of {bound}")]
    GroundTooLarge { size: usize, bound: usize },
    #[error("element `{0}` is not in the ground set")]
    UnknownElement(String),
    #[error("duplicate element `{0}` in ground set")]
    DuplicateElement(String),
    #[error("base family is empty")]
    EmptyBaseFamily,
    #[error("bases have unequal cardinalities: {first:?} has {first_len}, {second:?} has {second_len}")]
    UnequalBases {
        first: Vec<String>,
        first_len: usize,
        second: Vec<String>,
        second_len: usize,
    },
    #[error("base exchange fails: removing `{removed}` from {from:?} admits no replacement from {other:?}")]
    ExchangeFailure {
        from: Vec<String>,
        removed: String,
        other: Vec<String>,
    },
    #[error("the empty set is a base, so M⁻ is undefined")]
    EmptySetIsBase,
    #[error("E is a base, so M⁺ is undefined")]
    GroundIsBase,
    #[error("{0:?} is not a circuit")]
    NotACircuit(Vec<String>),
    #[error("the two circuits must be distinct")]
    SameCircuit,
}

/// An ordered ground set of string labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Ground {
    inner: Arc<GroundInner>,
}

#[derive(PartialEq, Eq)]
struct GroundInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ground {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Self, MatroidError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > 63 {
            return Err(MatroidError::GroundTooLarge {
                size: labels.len(),
                bound: 63,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(MatroidError::DuplicateElement(l.clone()));
            }
        }
        Ok(Ground {
            inner: Arc::new(GroundInner { labels, index }),
        })
    }

    /// Ground set `a, b, c, ...` (then `e26, e27, ...`).
    pub fn letters(n: usize) -> Self {
        let labels = (0..n).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        });
        Ground::new(labels).expect("generated labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet, MatroidError> {
        labels.iter().try_fold(ElementSet::EMPTY, |acc, l| {
            let l = l.as_ref();
            self.index_of(l)
                .map(|i| acc.with(i))
                .ok_or_else(|| MatroidError::UnknownElement(l.to_string()))
        })
    }

    /// Labels of `s` in ground order.
    pub fn names(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|i| self.label(i).to_string()).collect()
    }

    fn check_bound(&self) -> Result<(), MatroidError> {
        let bound = max_ground();
        if self.len() > bound {
            Err(MatroidError::GroundTooLarge {
                size: self.len(),
                bound,
            })
        } else {
            Ok(())
        }
    }

    /// The ground obtained by dropping the elements of `removed`, with the
    /// index map from old to new positions.
    fn without(&self, removed: ElementSet) -> (Ground, Vec<Option<usize>>) {
        let mut map = vec![None; self.len()];
        let mut labels = Vec::new();
        for (i, slot) in map.iter_mut().enumerate() {
            if !removed.contains(i) {
                *slot = Some(labels.len());
                labels.push(self.label(i).to_string());
            }
        }
        (Ground::new(labels).expect("subset of a valid ground"), map)
    }
}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels()).finish()
    }
}

/// A family of subsets of a ground set, canonically sorted and deduplicated.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: Ground,
    members: Vec<ElementSet>,
}

impl SetFamily {
    pub fn new(ground: Ground, mut members: Vec<ElementSet>) -> Self {
        members.sort();
        members.dedup();
        SetFamily { ground, members }
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn named(&self) -> Vec<Vec<String>> {
        self.members.iter().map(|&s| self.ground.names(s)).collect()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.named()).finish()
    }
}

/// A finite matroid stored as its ground set and base family.
///
/// Two matroids are equal when their ground sets agree as ordered sets and
/// their base families agree.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMatroid {
    ground: Ground,
    bases: Vec<ElementSet>,
}

impl fmt::Debug for FiniteMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMatroid")
            .field("ground", &self.ground)
            .field("bases", &SetFamily::new(self.ground.clone(), self.bases.clone()))
            .finish()
    }
}

impl FiniteMatroid {
    /// Build a matroid from a base family, checking nonemptiness, equal
    /// cardinality and the exchange property.
    pub fn from_bases(ground: Ground, bases: Vec<ElementSet>) -> Result<Self, MatroidError> {
        let m = Self::from_bases_unchecked(ground, bases);
        m.check_base_axioms()?;
        Ok(m)
    }

    /// Build from a family already known to be a base family (constructions
    /// whose output is a matroid by theory). Sorts and deduplicates.
    pub fn from_bases_unchecked(ground: Ground, mut bases: Vec<ElementSet>) -> Self {
        bases.sort();
        bases.dedup();
        FiniteMatroid { ground, bases }
    }

    pub fn from_labels<S: AsRef<str>>(ground: &[S], bases: &[Vec<S>]) -> Result<Self, MatroidError> {
        let ground = Ground::new(ground.iter().map(|s| s.as_ref().to_string()))?;
        let bases = bases
            .iter()
            .map(|b| ground.set(b))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteMatroid::from_bases(ground, bases)
    }

    fn check_base_axioms(&self) -> Result<(), MatroidError> {
        let first = *self.bases.first().ok_or(MatroidError::EmptyBaseFamily)?;
        for &b in &self.bases {
            if b.len() != first.len() {
                return Err(MatroidError::UnequalBases {
                    first: self.ground.names(first),
                    first_len: first.len(),
                    second: self.ground.names(b),
                    second_len: b.len(),
                });
            }
        }
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in b1.difference(b2).iter() {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|y| self.is_base(b1.without(x).with(y)));
                    if !ok {
                        return Err(MatroidError::ExchangeFailure {
                            from: self.ground.names(b1),
                            removed: self.ground.label(x).to_string(),
                            other: self.ground.names(b2),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `U_{r,n}` on the ground `a, b, ...`.
    pub fn uniform(rank: usize, n: usize) -> Self {
        Self::uniform_on(rank, Ground::letters(n))
    }

    pub fn uniform_on(rank: usize, ground: Ground) -> Self {
        let bases = subsets_of(ground.full())
            .filter(|s| s.len() == rank)
            .collect();
        Self::from_bases_unchecked(ground, bases)
    }

    /// The matroid whose only base is the whole ground set.
    pub fn free(ground: Ground) -> Self {
        let full = ground.full();
        Self::from_bases_unchecked(ground, vec![full])
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn base_family(&self) -> SetFamily {
        SetFamily::new(self.ground.clone(), self.bases.clone())
    }

    pub fn rank(&self) -> usize {
        self.bases.first().map_or(0, |b| b.len())
    }

    pub fn is_base(&self, s: ElementSet) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// True iff `s` lies inside some base.
    pub fn is_independent(&self, s: ElementSet) -> Result<bool, MatroidError> {
        if !s.is_subset(self.ground.full()) {
            let stray = s.difference(self.ground.full()).iter().next().unwrap_or(0);
            return Err(MatroidError::UnknownElement(format!("#{stray}")));
        }
        Ok(self.contains_in_base(s))
    }

    fn contains_in_base(&self, s: ElementSet) -> bool {
        self.bases.iter().any(|&b| s.is_subset(b))
    }

    /// Independence indicator over the whole power set, indexed by bitmask.
    pub fn independence_table(&self) -> Result<Vec<bool>, MatroidError> {
        self.ground.check_bound()?;
        let n = self.ground.len();
        let mut table = vec![false; 1usize << n];
        for b in &self.bases {
            table[b.bits() as usize] = true;
        }
        for mask in (0..table.len()).rev() {
            if table[mask] {
                let mut bits = mask;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    table[mask ^ low] = true;
                    bits ^= low;
                }
            }
        }
        Ok(table)
    }

    /// All independent sets, canonically ordered.
    pub fn independent_sets(&self) -> Result<SetFamily, MatroidError> {
        let table = self.independence_table()?;
        let members = table
            .iter()
            .enumerate()
            .filter(|(_, &i)| i)
            .map(|(m, _)| ElementSet::from_bits(m as u64))
            .collect();
        Ok(SetFamily::new(self.ground.clone(), members))
    }

    /// Inclusion-minimal dependent sets.
    pub fn circuits(&self) -> Result<SetFamily, MatroidError> {
        let table = self.independence_table()?;
        let mut out = Vec::new();
        for (mask, &indep) in table.iter().enumerate() {
            if indep {
                continue;
            }
            let s = ElementSet::from_bits(mask as u64);
            if s.iter().all(|i| table[s.without(i).bits() as usize]) {
                out.push(s);
            }
        }
        Ok(SetFamily::new(self.ground.clone(), out))
    }

    /// Bases are the complements of the bases of `self`.
    pub fn dual(&self) -> FiniteMatroid {
        let full = self.ground.full();
        let bases = self.bases.iter().map(|&b| full.difference(b)).collect();
        Self::from_bases_unchecked(self.ground.clone(), bases)
    }

    pub fn cocircuits(&self) -> Result<SetFamily, MatroidError> {
        self.dual().circuits()
    }

    fn check_subset(&self, x: ElementSet) -> Result<(), MatroidError> {
        if x.is_subset(self.ground.full()) {
            Ok(())
        } else {
            let stray = x.difference(self.ground.full()).iter().next().unwrap_or(0);
            Err(MatroidError::UnknownElement(format!("#{stray}")))
        }
    }

    /// `M \ X`: bases are the maximum-size sets `B ∖ X`.
    pub fn delete(&self, x: ElementSet) -> Result<FiniteMatroid, MatroidError> {
        self.check_subset(x)?;
        let (ground, map) = self.ground.without(x);
        let restricted: Vec<ElementSet> = self.bases.iter().map(|&b| b.difference(x)).collect();
        let r = restricted.iter().map(|b| b.len()).max().unwrap_or(0);
        let bases = restricted
            .into_iter()
            .filter(|b| b.len() == r)
            .map(|b| b.remap(&map))
            .collect();
        Ok(Self::from_bases_unchecked(ground, bases))
    }

    /// `M / X = (M* \ X)*`.
    pub fn contract(&self, x: ElementSet) -> Result<FiniteMatroid, MatroidError> {
        Ok(self.dual().delete(x)?.dual())
    }

    /// Re-express a subset of the ground of `minor` (obtained by deleting or
    /// contracting `removed`) as a subset of `self`'s ground.
    pub fn lift_from_minor(&self, removed: ElementSet, s: ElementSet) -> ElementSet {
        let kept: Vec<usize> = (0..self.ground.len()).filter(|&i| !removed.contains(i)).collect();
        ElementSet::from_indices(s.iter().map(|j| kept[j]))
    }

    /// Maximum `|C ∩ D|` over circuits `C` and cocircuits `D`, with a
    /// maximizing pair; `(0, None)` when either family is empty.
    pub fn max_circuit_cocircuit_intersection(
        &self,
    ) -> Result<(usize, Option<(ElementSet, ElementSet)>), MatroidError> {
        let circuits = self.circuits()?;
        let cocircuits = self.cocircuits()?;
        let mut best: (usize, Option<(ElementSet, ElementSet)>) = (0, None);
        for &c in circuits.members() {
            for &d in cocircuits.members() {
                let k = c.intersection(d).len();
                if best.1.is_none() || k > best.0 {
                    best = (k, Some((c, d)));
                }
            }
        }
        Ok(best)
    }

    /// Same base family on a ground set with the same labels, re-indexed
    /// into `target`'s ordering. Fails when the label sets differ.
    pub fn reindexed(&self, target: &Ground) -> Result<FiniteMatroid, MatroidError> {
        let map: Vec<Option<usize>> = self
            .ground
            .labels()
            .iter()
            .map(|l| target.index_of(l))
            .collect();
        if let Some(i) = map.iter().position(Option::is_none) {
            return Err(MatroidError::UnknownElement(self.ground.label(i).to_string()));
        }
        if target.len() != self.ground.len() {
            let missing = target
                .labels()
                .iter()
                .find(|l| self.ground.index_of(l).is_none())
                .cloned()
                .unwrap_or_default();
            return Err(MatroidError::UnknownElement(missing));
        }
        let bases = self.bases.iter().map(|b| b.remap(&map)).collect();
        Ok(Self::from_bases_unchecked(target.clone(), bases))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: usize, n: usize) -> FiniteMatroid {
        FiniteMatroid::uniform(r, n)
    }

    fn fam(g: &Ground, sets: &[&[&str]]) -> Vec<ElementSet> {
        let mut v: Vec<_> = sets.iter().map(|s| g.set(s).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn from_bases_examples() {
        let m = FiniteMatroid::from_labels(&["a", "b"], &[vec!["a"], vec!["b"]]).unwrap();
        assert_eq!(m, u(1, 2));
        let err = FiniteMatroid::from_labels(&["a", "b", "c"], &[vec!["a"], vec!["b", "c"]]).unwrap_err();
        assert!(matches!(err, MatroidError::UnequalBases { .. }));
        let err = FiniteMatroid::from_labels::<&str>(&["a"], &[]).unwrap_err();
        assert_eq!(err, MatroidError::EmptyBaseFamily);
    }

    #[test]
    fn exchange_failure_is_reported() {
        // {a,b} and {c,d} alone: removing a from {a,b} needs {b,c} or {b,d}.
        let err = FiniteMatroid::from_labels(
            &["a", "b", "c", "d"],
            &[vec!["a", "b"], vec!["c", "d"]],
        )
        .unwrap_err();
        assert!(matches!(err, MatroidError::ExchangeFailure { .. }));
    }

    #[test]
    fn independence_examples() {
        let m = u(2, 4);
        let g = m.ground().clone();
        assert!(m.is_independent(g.set(&["a"]).unwrap()).unwrap());
        assert!(!m.is_independent(g.set(&["a", "b", "c"]).unwrap()).unwrap());
        assert!(u(1, 2).is_independent(ElementSet::EMPTY).unwrap());
    }

    #[test]
    fn circuit_examples() {
        let m = u(2, 4);
        let threes: Vec<_> = subsets_of(m.ground().full()).filter(|s| s.len() == 3).collect();
        assert_eq!(m.circuits().unwrap().members(), SetFamily::new(m.ground().clone(), threes).members());

        let g = Ground::letters(3);
        let c = u(1, 3).circuits().unwrap();
        assert_eq!(c.members(), fam(&g, &[&["a", "b"], &["a", "c"], &["b", "c"]]).as_slice());

        assert!(FiniteMatroid::free(Ground::letters(3)).circuits().unwrap().is_empty());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(u(1, 3).dual(), u(2, 3));
        assert_eq!(u(2, 4).dual(), u(2, 4));
        let free = FiniteMatroid::free(Ground::letters(3));
        assert_eq!(free.dual().bases(), &[ElementSet::EMPTY]);
        assert_eq!(free.dual().dual(), free);
    }

    #[test]
    fn cocircuit_examples() {
        let g = Ground::letters(3);
        assert_eq!(u(1, 3).cocircuits().unwrap().members(), &[g.full()]);
        let free = FiniteMatroid::free(g.clone());
        assert_eq!(
            free.cocircuits().unwrap().members(),
            fam(&g, &[&["a"], &["b"], &["c"]]).as_slice()
        );
        assert_eq!(u(2, 4).cocircuits().unwrap(), u(2, 4).circuits().unwrap());
    }

    #[test]
    fn minor_examples() {
        let m = u(2, 4);
        let a = m.ground().set(&["a"]).unwrap();
        let c = m.contract(a).unwrap();
        assert_eq!(c, FiniteMatroid::uniform_on(1, Ground::new(["b", "c", "d"]).unwrap()));
        let d = m.delete(a).unwrap();
        assert_eq!(d, FiniteMatroid::uniform_on(2, Ground::new(["b", "c", "d"]).unwrap()));
        assert_eq!(m.contract(ElementSet::EMPTY).unwrap(), m);
    }

    #[test]
    fn contraction_matches_definition_by_brute_force() {
        // I independent in M/X iff I ∪ B_X independent in M, B_X a maximal
        // independent subset of X.
        let m = u(2, 4);
        let x = m.ground().set(&["a"]).unwrap();
        let c = m.contract(x).unwrap();
        let bx = x; // {a} is independent
        for i in subsets_of(c.ground().full()) {
            let lifted = m.lift_from_minor(x, i);
            let expect = m.is_independent(lifted.union(bx)).unwrap();
            assert_eq!(c.is_independent(i).unwrap(), expect);
        }
    }

    #[test]
    fn max_intersection_examples() {
        assert_eq!(u(2, 4).max_circuit_cocircuit_intersection().unwrap().0, 3);
        let (k, w) = u(1, 2).max_circuit_cocircuit_intersection().unwrap();
        let full = Ground::letters(2).full();
        assert_eq!((k, w), (2, Some((full, full))));
        let free = FiniteMatroid::free(Ground::letters(3));
        assert_eq!(free.max_circuit_cocircuit_intersection().unwrap(), (0, None));
    }

    #[test]
    fn ground_bound_is_enforced() {
        let m = FiniteMatroid::free(Ground::letters(30));
        assert!(matches!(m.circuits(), Err(MatroidError::GroundTooLarge { size: 30, .. })));
    }

    #[test]
    fn unknown_labels_are_rejected() {
        let g = Ground::letters(2);
        assert_eq!(g.set(&["z"]), Err(MatroidError::UnknownElement("z".into())));
        assert!(Ground::new(["a", "a"]).is_err());
    }
}
