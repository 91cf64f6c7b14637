use serde::{Deserialize, Serialize};

use super::{ElementSet, FiniteMatroid, Ground, MatroidError, SetFamily};

/// `{ "ground": [labels], "bases": [[labels], ...] }`.
///
/// For axiom checking an explicit `"independent"` family may be given
/// instead of (or besides) `"bases"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidFile {
    pub ground: Vec<String>,
    #[serde(default)]
    pub bases: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independent: Option<Vec<Vec<String>>>,
}

impl MatroidFile {
    pub fn from_matroid(m: &FiniteMatroid) -> Self {
        MatroidFile {
            ground: m.ground().labels().to_vec(),
            bases: m.base_family().named(),
            independent: None,
        }
    }

    pub fn ground(&self) -> Result<Ground, MatroidError> {
        Ground::new(self.ground.iter().cloned())
    }

    pub fn to_matroid(&self) -> Result<FiniteMatroid, MatroidError> {
        let ground = self.ground()?;
        let bases = self
            .bases
            .iter()
            .map(|b| ground.set(b))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteMatroid::from_bases(ground, bases)
    }

    /// The family handed to the axiom checker: the explicit independent
    /// family when present, else the downward closure of the listed bases.
    pub fn independence_family(&self) -> Result<(Ground, Vec<ElementSet>), MatroidError> {
        let ground = self.ground()?;
        let sets = match &self.independent {
            Some(indep) => indep.iter().map(|s| ground.set(s)).collect::<Result<Vec<_>, _>>()?,
            None => {
                let bases = self
                    .bases
                    .iter()
                    .map(|b| ground.set(b))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut all: Vec<ElementSet> = bases.iter().flat_map(|&b| super::subsets_of(b)).collect();
                all.sort();
                all.dedup();
                all
            }
        };
        Ok((ground, sets))
    }
}

/// `{ "ground": [labels], "family": [[labels], ...] }`, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub ground: Vec<String>,
    pub family: Vec<Vec<String>>,
}

impl FamilyFile {
    pub fn from_family(f: &SetFamily) -> Self {
        FamilyFile {
            ground: f.ground().labels().to_vec(),
            family: f.named(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emitted_bases_are_sorted_and_reparse_equal() {
        let m = FiniteMatroid::uniform(2, 4);
        let f = MatroidFile::from_matroid(&m);
        assert_eq!(f.bases[0], vec!["a", "b"]);
        assert_eq!(f.bases[5], vec!["c", "d"]);
        let json = serde_json::to_string(&f).unwrap();
        let back: MatroidFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_matroid().unwrap(), m);
        assert!(!json.contains("independent"));
    }
}
