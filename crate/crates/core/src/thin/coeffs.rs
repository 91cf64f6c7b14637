use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::field::{parse_value, Field};
use super::ThinError;
use crate::periodic::{EdgeId, EpSet, Family};

/// A constant value on one `(slot, residue)` class from `onset` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicValue<F> {
    pub slot: usize,
    pub residue: usize,
    pub onset: usize,
    pub value: F,
}

/// Coefficients `λ_e` over the edges of a builtin family: finitely many
/// explicit values, plus constant values on periodic classes. Explicit
/// values take precedence; everything else is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinCoefficients<F> {
    family: Family,
    explicit: BTreeMap<EdgeId, F>,
    periodic: Vec<PeriodicValue<F>>,
    period: usize,
}

impl<F: Field> ThinCoefficients<F> {
    pub fn new(
        family: Family,
        explicit: BTreeMap<EdgeId, F>,
        period: usize,
        periodic: Vec<PeriodicValue<F>>,
    ) -> Result<Self, ThinError> {
        if period == 0 {
            return Err(ThinError::Periodic(crate::periodic::PeriodicError::ZeroPeriod));
        }
        let mut seen = BTreeSet::new();
        for p in &periodic {
            if p.slot >= family.n_slots() {
                return Err(ThinError::BadValue(format!("slot index {}", p.slot)));
            }
            if p.residue >= period {
                return Err(ThinError::Periodic(crate::periodic::PeriodicError::ResidueOutOfRange(
                    p.residue, period,
                )));
            }
            if !seen.insert((p.slot, p.residue)) {
                return Err(ThinError::DuplicateClass(family.slot(p.slot).name.to_string(), p.residue));
            }
        }
        Ok(ThinCoefficients {
            family,
            explicit,
            periodic,
            period,
        })
    }

    pub fn zero(family: Family) -> Self {
        ThinCoefficients {
            family,
            explicit: BTreeMap::new(),
            periodic: Vec::new(),
            period: 1,
        }
    }

    pub fn from_explicit(family: Family, values: impl IntoIterator<Item = (EdgeId, F)>) -> Self {
        ThinCoefficients {
            family,
            explicit: values.into_iter().collect(),
            periodic: Vec::new(),
            period: 1,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn explicit(&self) -> &BTreeMap<EdgeId, F> {
        &self.explicit
    }

    pub fn periodic(&self) -> &[PeriodicValue<F>] {
        &self.periodic
    }

    pub fn set(&mut self, e: EdgeId, v: F) {
        self.explicit.insert(e, v);
    }

    pub fn value(&self, e: EdgeId) -> F {
        if let Some(v) = self.explicit.get(&e) {
            return v.clone();
        }
        if let EdgeId::Cell { index, slot } = e {
            for p in &self.periodic {
                if p.slot == slot && index >= p.onset && index % self.period == p.residue {
                    return p.value.clone();
                }
            }
        }
        F::zero()
    }

    /// First cell from which the values are purely periodic.
    pub fn onset(&self) -> usize {
        let explicit = self.explicit.keys().filter_map(|&e| Family::owner(e)).map(|c| c + 1);
        let periodic = self.periodic.iter().map(|p| p.onset);
        explicit.chain(periodic).fold(self.family.first_cell(), usize::max)
    }

    /// `{e : λ_e ≠ 0}`.
    pub fn support(&self) -> EpSet {
        let f = self.family;
        let onset = self.onset();
        let mut exceptional: Vec<EdgeId> = f.prefix_edges().filter(|&e| !self.value(e).is_zero()).collect();
        for index in f.first_cell()..onset {
            for slot in 0..f.n_slots() {
                let e = EdgeId::Cell { index, slot };
                if !self.value(e).is_zero() {
                    exceptional.push(e);
                }
            }
        }
        let mut pattern = Vec::new();
        for r in 0..self.period {
            // The representative of residue r at or past the onset.
            let index = onset + (r + self.period - onset % self.period) % self.period;
            for slot in 0..f.n_slots() {
                if !self.value(EdgeId::Cell { index, slot }).is_zero() {
                    pattern.push((slot, r));
                }
            }
        }
        EpSet::new(f, exceptional, onset, self.period, pattern).expect("support is well formed")
    }

    pub fn is_zero(&self) -> bool {
        self.support().is_empty()
    }

    pub fn scaled(&self, c: &F) -> Self {
        ThinCoefficients {
            family: self.family,
            explicit: self.explicit.iter().map(|(&e, v)| (e, v.mul(c))).collect(),
            periodic: self
                .periodic
                .iter()
                .map(|p| PeriodicValue {
                    value: p.value.mul(c),
                    ..p.clone()
                })
                .collect(),
            period: self.period,
        }
    }

    pub fn to_file(&self) -> CoefficientsFile {
        let f = self.family;
        CoefficientsFile {
            explicit: self.explicit.iter().map(|(&e, v)| (f.edge_name(e), v.canonical())).collect(),
            periodic: self
                .periodic
                .iter()
                .map(|p| PeriodicEntry {
                    slot: f.slot(p.slot).name.to_string(),
                    residue: p.residue,
                    onset: p.onset,
                    value: p.value.canonical(),
                })
                .collect(),
            period: self.period,
        }
    }
}

fn default_period() -> usize {
    1
}

/// JSON form: `{ "explicit": {edge: "num/den"}, "periodic": [{ "slot",
/// "residue", "onset", "value" }], "period" }`; `period` defaults to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientsFile {
    #[serde(default)]
    pub explicit: BTreeMap<String, String>,
    #[serde(default)]
    pub periodic: Vec<PeriodicEntry>,
    #[serde(default = "default_period")]
    pub period: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicEntry {
    pub slot: String,
    pub residue: usize,
    pub onset: usize,
    pub value: String,
}

impl CoefficientsFile {
    pub fn parse<F: Field>(&self, family: Family) -> Result<ThinCoefficients<F>, ThinError> {
        let mut explicit = BTreeMap::new();
        for (name, v) in &self.explicit {
            explicit.insert(family.parse_edge(name)?, parse_value(v)?);
        }
        let mut periodic = Vec::new();
        for p in &self.periodic {
            periodic.push(PeriodicValue {
                slot: family.slot_index(&p.slot)?,
                residue: p.residue,
                onset: p.onset,
                value: parse_value(&p.value)?,
            });
        }
        ThinCoefficients::new(family, explicit, self.period, periodic)
    }
}
