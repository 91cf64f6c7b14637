use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::family::{EdgeId, Family};
use super::PeriodicError;

/// A set of edges of a builtin family: finitely many exceptional edges
/// below `onset`, and from `onset` on, the copy of slot `s` in cell `i` is a
/// member iff `(s, i mod period)` is in `pattern`.
///
/// `PartialEq` compares representations; use [`EpSet::same_set`] for set
/// equality.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EpSetFile", into = "EpSetFile")]
pub struct EpSet {
    family: Family,
    exceptional: BTreeSet<EdgeId>,
    onset: usize,
    period: usize,
    pattern: BTreeSet<(usize, usize)>,
}

/// Size of a possibly infinite edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cardinality {
    Finite(usize),
    Infinite,
}

impl Cardinality {
    pub fn is_infinite(self) -> bool {
        self == Cardinality::Infinite
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(k) => write!(f, "{k}"),
            Cardinality::Infinite => f.write_str("INFINITE"),
        }
    }
}

impl Serialize for Cardinality {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinality::Finite(k) => s.serialize_u64(*k as u64),
            Cardinality::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

impl<'de> Deserialize<'de> for Cardinality {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(k) => Ok(Cardinality::Finite(k as usize)),
            Raw::S(s) if s == "INFINITE" => Ok(Cardinality::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad cardinality `{s}`"))),
        }
    }
}

impl EpSet {
    pub fn new(
        family: Family,
        exceptional: impl IntoIterator<Item = EdgeId>,
        onset: usize,
        period: usize,
        pattern: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PeriodicError> {
        if period == 0 {
            return Err(PeriodicError::ZeroPeriod);
        }
        let exceptional: BTreeSet<EdgeId> = exceptional.into_iter().collect();
        for &e in &exceptional {
            match e {
                EdgeId::Prefix(k) if k >= family.n_prefix_edges() => {
                    return Err(PeriodicError::BadEdgeId(format!("prefix #{k}"), family.name()))
                }
                EdgeId::Cell { index, slot } => {
                    if slot >= family.n_slots() || index < family.first_cell() {
                        return Err(PeriodicError::BadEdgeId(format!("{e:?}"), family.name()));
                    }
                    if index >= onset {
                        return Err(PeriodicError::ExceptionalPastOnset(family.edge_name(e), onset));
                    }
                }
                _ => {}
            }
        }
        let pattern: BTreeSet<(usize, usize)> = pattern.into_iter().collect();
        for &(s, r) in &pattern {
            if s >= family.n_slots() {
                return Err(PeriodicError::UnknownSlot(format!("#{s}"), family.name()));
            }
            if r >= period {
                return Err(PeriodicError::ResidueOutOfRange(r, period));
            }
        }
        Ok(EpSet {
            family,
            exceptional,
            onset,
            period,
            pattern,
        })
    }

    /// Build from edge names and `(slot name, residue)` pairs.
    pub fn from_names(
        family: Family,
        exceptional: &[&str],
        onset: usize,
        period: usize,
        pattern: &[(&str, usize)],
    ) -> Result<Self, PeriodicError> {
        let exc = exceptional
            .iter()
            .map(|s| family.parse_edge(s))
            .collect::<Result<Vec<_>, _>>()?;
        let pat = pattern
            .iter()
            .map(|&(s, r)| Ok((family.slot_index(s)?, r)))
            .collect::<Result<Vec<_>, PeriodicError>>()?;
        Self::new(family, exc, onset, period, pat)
    }

    pub fn empty(family: Family) -> Self {
        EpSet {
            family,
            exceptional: BTreeSet::new(),
            onset: family.first_cell(),
            period: 1,
            pattern: BTreeSet::new(),
        }
    }

    /// Every edge of the graph.
    pub fn all(family: Family) -> Self {
        EpSet {
            family,
            exceptional: family.prefix_edges().collect(),
            onset: family.first_cell(),
            period: 1,
            pattern: (0..family.n_slots()).map(|s| (s, 0)).collect(),
        }
    }

    /// A finite set of edges.
    pub fn finite(family: Family, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self, PeriodicError> {
        let edges: BTreeSet<EdgeId> = edges.into_iter().collect();
        let onset = edges
            .iter()
            .filter_map(|&e| Family::owner(e))
            .max()
            .map_or(family.first_cell(), |c| c + 1);
        Self::new(family, edges, onset, 1, [])
    }

    /// All copies of the named slots in cells `≥ from`.
    pub fn slots_from(family: Family, from: usize, slots: &[&str]) -> Result<Self, PeriodicError> {
        let from = from.max(family.first_cell());
        let pat: Vec<(&str, usize)> = slots.iter().map(|&s| (s, 0)).collect();
        Self::from_names(family, &[], from, 1, &pat)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn onset(&self) -> usize {
        self.onset
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn pattern(&self) -> &BTreeSet<(usize, usize)> {
        &self.pattern
    }

    pub fn exceptional(&self) -> &BTreeSet<EdgeId> {
        &self.exceptional
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        match e {
            EdgeId::Prefix(_) => self.exceptional.contains(&e),
            EdgeId::Cell { index, slot } => {
                if index < self.onset {
                    self.exceptional.contains(&e)
                } else {
                    self.pattern.contains(&(slot, index % self.period))
                }
            }
        }
    }

    pub fn contains_name(&self, name: &str) -> Result<bool, PeriodicError> {
        Ok(self.contains(self.family.parse_edge(name)?))
    }

    pub fn is_finite(&self) -> bool {
        self.pattern.is_empty()
    }

    pub fn cardinality(&self) -> Cardinality {
        if self.is_finite() {
            Cardinality::Finite(self.exceptional.len())
        } else {
            Cardinality::Infinite
        }
    }

    /// The members when the set is finite.
    pub fn finite_edges(&self) -> Option<Vec<EdgeId>> {
        self.is_finite().then(|| self.exceptional.iter().copied().collect())
    }

    /// Members owned by cells in `lo..hi`, plus prefix members when
    /// `with_prefix`.
    pub fn edges_in_cells(&self, lo: usize, hi: usize, with_prefix: bool) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = if with_prefix {
            self.exceptional
                .iter()
                .copied()
                .filter(|e| matches!(e, EdgeId::Prefix(_)))
                .collect()
        } else {
            Vec::new()
        };
        for index in lo.max(self.family.first_cell())..hi {
            for slot in 0..self.family.n_slots() {
                let e = EdgeId::Cell { index, slot };
                if self.contains(e) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// `S ∩ window(n)`, in window construction order.
    pub fn restrict(&self, n: usize) -> Vec<EdgeId> {
        self.family
            .window_edges(n)
            .into_iter()
            .filter(|&e| self.contains(e))
            .collect()
    }

    /// The same set described with a later onset and a multiple of the period.
    pub fn rebased(&self, onset: usize, period: usize) -> EpSet {
        assert!(onset >= self.onset && period.is_multiple_of(self.period), "rebase must refine");
        let mut exceptional = self.exceptional.clone();
        for index in self.onset..onset {
            for slot in 0..self.family.n_slots() {
                let e = EdgeId::Cell { index, slot };
                if index >= self.family.first_cell() && self.contains(e) {
                    exceptional.insert(e);
                }
            }
        }
        let pattern = (0..period)
            .flat_map(|r| (0..self.family.n_slots()).map(move |s| (s, r)))
            .filter(|&(s, r)| self.pattern.contains(&(s, r % self.period)))
            .collect();
        EpSet {
            family: self.family,
            exceptional,
            onset,
            period,
            pattern,
        }
    }

    fn aligned(&self, other: &EpSet) -> Result<(EpSet, EpSet), PeriodicError> {
        if self.family != other.family {
            return Err(PeriodicError::FamilyMismatch(self.family.name(), other.family.name()));
        }
        let onset = self.onset.max(other.onset);
        let period = self.period.lcm(&other.period);
        Ok((self.rebased(onset, period), other.rebased(onset, period)))
    }

    fn combine(&self, other: &EpSet, keep: impl Fn(bool, bool) -> bool) -> Result<EpSet, PeriodicError> {
        let (a, b) = self.aligned(other)?;
        let mut out = a.clone();
        let exc_universe: BTreeSet<EdgeId> = a.exceptional.union(&b.exceptional).copied().collect();
        out.exceptional = exc_universe
            .into_iter()
            .filter(|e| keep(a.exceptional.contains(e), b.exceptional.contains(e)))
            .collect();
        let pat_universe: BTreeSet<(usize, usize)> = a.pattern.union(&b.pattern).copied().collect();
        out.pattern = pat_universe
            .into_iter()
            .filter(|c| keep(a.pattern.contains(c), b.pattern.contains(c)))
            .collect();
        Ok(out)
    }

    pub fn union(&self, other: &EpSet) -> Result<EpSet, PeriodicError> {
        self.combine(other, |x, y| x || y)
    }

    pub fn intersection(&self, other: &EpSet) -> Result<EpSet, PeriodicError> {
        self.combine(other, |x, y| x && y)
    }

    pub fn difference(&self, other: &EpSet) -> Result<EpSet, PeriodicError> {
        self.combine(other, |x, y| x && !y)
    }

    /// `E ∖ S`.
    pub fn complement(&self) -> EpSet {
        EpSet::all(self.family)
            .difference(self)
            .expect("same family")
    }

    pub fn is_subset(&self, other: &EpSet) -> Result<bool, PeriodicError> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.exceptional.is_empty() && self.pattern.is_empty()
    }

    /// Set equality, independent of representation.
    pub fn same_set(&self, other: &EpSet) -> Result<bool, PeriodicError> {
        let (a, b) = self.aligned(other)?;
        Ok(a.exceptional == b.exceptional && a.pattern == b.pattern)
    }

    pub fn with_edge(&self, e: EdgeId) -> EpSet {
        let mut s = match Family::owner(e) {
            Some(c) if c >= self.onset => self.rebased(c + 1, self.period),
            _ => self.clone(),
        };
        s.exceptional.insert(e);
        s
    }

    pub fn without_edge(&self, e: EdgeId) -> EpSet {
        let mut s = match Family::owner(e) {
            Some(c) if c >= self.onset => self.rebased(c + 1, self.period),
            _ => self.clone(),
        };
        s.exceptional.remove(&e);
        s
    }

    /// The description with the smallest period, then the smallest onset.
    pub fn normalized(&self) -> EpSet {
        let n = self.family.n_slots();
        let period = (1..=self.period)
            .filter(|d| self.period.is_multiple_of(*d))
            .find(|&d| {
                (0..self.period)
                    .all(|r| (0..n).all(|s| self.pattern.contains(&(s, r)) == self.pattern.contains(&(s, r % d))))
            })
            .unwrap_or(self.period);
        let mut out = EpSet {
            family: self.family,
            exceptional: self.exceptional.clone(),
            onset: self.onset,
            period,
            pattern: self.pattern.iter().copied().filter(|&(_, r)| r < period).collect(),
        };
        while out.onset > self.family.first_cell() {
            let index = out.onset - 1;
            let matches = (0..n).all(|slot| {
                out.exceptional.contains(&EdgeId::Cell { index, slot }) == out.pattern.contains(&(slot, index % period))
            });
            if !matches {
                break;
            }
            for slot in 0..n {
                out.exceptional.remove(&EdgeId::Cell { index, slot });
            }
            out.onset = index;
        }
        out
    }

    /// Highest cell owning an exceptional edge.
    pub fn max_exceptional_cell(&self) -> Option<usize> {
        self.exceptional.iter().filter_map(|&e| Family::owner(e)).max()
    }

    pub fn edge_names(&self, edges: &[EdgeId]) -> Vec<String> {
        edges.iter().map(|&e| self.family.edge_name(e)).collect()
    }
}

/// `|S ∩ T|`: infinite iff the aligned patterns share a class.
pub fn intersection_cardinality(s: &EpSet, t: &EpSet) -> Result<Cardinality, PeriodicError> {
    Ok(s.intersection(t)?.cardinality())
}

impl fmt::Debug for EpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let file = EpSetFile::from(self.clone());
        write!(
            f,
            "EpSet({} exc={:?} onset={} period={} pattern={:?})",
            self.family, file.exceptional, self.onset, self.period, file.pattern
        )
    }
}

/// JSON form: `{ "family", "exceptional": [edge ids], "onset", "period",
/// "pattern": [[slot, residue], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpSetFile {
    pub family: Family,
    pub exceptional: Vec<String>,
    pub onset: usize,
    pub period: usize,
    pub pattern: Vec<(String, usize)>,
}

impl From<EpSet> for EpSetFile {
    fn from(s: EpSet) -> Self {
        let family = s.family;
        EpSetFile {
            family,
            exceptional: s.exceptional.iter().map(|&e| family.edge_name(e)).collect(),
            onset: s.onset,
            period: s.period,
            pattern: s
                .pattern
                .iter()
                .map(|&(slot, r)| (family.slot(slot).name.to_string(), r))
                .collect(),
        }
    }
}

impl TryFrom<EpSetFile> for EpSet {
    type Error = PeriodicError;

    fn try_from(f: EpSetFile) -> Result<Self, Self::Error> {
        let exc: Vec<&str> = f.exceptional.iter().map(String::as_str).collect();
        let pat: Vec<(&str, usize)> = f.pattern.iter().map(|(s, r)| (s.as_str(), *r)).collect();
        EpSet::from_names(f.family, &exc, f.onset, f.period, &pat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(exc: &[&str], onset: usize, period: usize, pat: &[(&str, usize)]) -> EpSet {
        EpSet::from_names(Family::DoubledH, exc, onset, period, pat).unwrap()
    }

    #[test]
    fn membership() {
        let s = h(&["r:1"], 2, 2, &[("u", 0)]);
        assert!(s.contains_name("r:1").unwrap());
        assert!(!s.contains_name("r:2").unwrap());
        assert!(s.contains_name("u:4").unwrap());
        assert!(!s.contains_name("u:3").unwrap());
        assert!(!s.contains_name("u:1").unwrap());
    }

    #[test]
    fn validation() {
        assert!(matches!(
            EpSet::from_names(Family::DoubledH, &["u:5"], 3, 1, &[]),
            Err(PeriodicError::ExceptionalPastOnset(..))
        ));
        assert!(matches!(
            EpSet::from_names(Family::DoubledH, &[], 1, 2, &[("u", 2)]),
            Err(PeriodicError::ResidueOutOfRange(2, 2))
        ));
        assert!(matches!(EpSet::from_names(Family::DoubledH, &[], 1, 0, &[]), Err(PeriodicError::ZeroPeriod)));
    }

    #[test]
    fn intersection_examples() {
        let c = h(&["r:1", "u:1", "u':1", "d:1", "d':1"], 2, 1, &[("u", 0), ("u'", 0), ("d", 0), ("d'", 0)]);
        let d = h(&[], 1, 1, &[("u", 0), ("r", 0)]);
        assert_eq!(intersection_cardinality(&c, &d).unwrap(), Cardinality::Infinite);
        let r1 = EpSet::finite(Family::DoubledH, [Family::DoubledH.parse_edge("r:1").unwrap()]).unwrap();
        let r2 = EpSet::finite(Family::DoubledH, [Family::DoubledH.parse_edge("r:2").unwrap()]).unwrap();
        assert_eq!(intersection_cardinality(&r1, &r2).unwrap(), Cardinality::Finite(0));
        let first5 = h(&["u:1", "u:2", "u:3", "u:4", "u:5"], 6, 1, &[]);
        let all_u = EpSet::slots_from(Family::DoubledH, 1, &["u"]).unwrap();
        assert_eq!(intersection_cardinality(&first5, &all_u).unwrap(), Cardinality::Finite(5));
        let g = EpSet::empty(Family::RayedG);
        assert!(matches!(intersection_cardinality(&g, &all_u), Err(PeriodicError::FamilyMismatch(..))));
    }

    #[test]
    fn set_algebra_and_normal_form() {
        let a = h(&[], 1, 2, &[("u", 0), ("u", 1)]);
        let b = EpSet::slots_from(Family::DoubledH, 1, &["u"]).unwrap();
        assert!(a.same_set(&b).unwrap());
        assert_ne!(a, b);
        assert_eq!(a.normalized(), b);
        let c = h(&["u:1", "u:2"], 3, 1, &[("u", 0)]);
        assert_eq!(c.normalized(), b);
        assert!(b.union(&b.complement()).unwrap().same_set(&EpSet::all(Family::DoubledH)).unwrap());
        assert!(b.intersection(&b.complement()).unwrap().is_empty());
        let e = Family::DoubledH.parse_edge("u:7").unwrap();
        assert!(!b.without_edge(e).contains(e));
        assert!(b.without_edge(e).with_edge(e).same_set(&b).unwrap());
    }

    #[test]
    fn restrict_counts() {
        let h = Family::DoubledH;
        let d = EpSet::slots_from(h, 1, &["u", "r"]).unwrap();
        let not_d = d.complement();
        for n in 1..=50 {
            assert_eq!(not_d.restrict(n).len(), 4 * n - 3);
        }
        assert!(EpSet::empty(h).restrict(10).is_empty());
        let names = not_d.edge_names(&not_d.restrict(1));
        assert_eq!(names, vec!["r':1"]);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let text = r#"{"family":"DOUBLED_H","exceptional":["r:1","r':2"],"onset":3,"period":2,"pattern":[["u",0],["r'",1]]}"#;
        let s: EpSet = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), text);
        let g: EpSet = serde_json::from_str(r#"{"family":"RAYED_G","exceptional":["l"],"onset":0,"period":1,"pattern":[]}"#).unwrap();
        assert_eq!(g.cardinality(), Cardinality::Finite(1));
        assert!(serde_json::from_str::<EpSet>(r#"{"family":"RAYED_G","exceptional":["x"],"onset":0,"period":1,"pattern":[]}"#).is_err());
    }
}
