use super::field::Field;
use super::ThinError;
use crate::graph::FiniteGraph;
use crate::matroid::{max_ground, ElementSet, FiniteMatroid, Ground};

/// Finitely many functions on a finite domain, stored as dense columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteThinFamily<F> {
    ground: Ground,
    domain: usize,
    columns: Vec<Vec<F>>,
}

impl<F: Field> FiniteThinFamily<F> {
    pub fn new(ground: Ground, domain: usize, columns: Vec<Vec<F>>) -> Result<Self, ThinError> {
        if columns.len() != ground.len() || columns.iter().any(|c| c.len() != domain) {
            return Err(ThinError::BadValue("column shape does not match ground and domain".into()));
        }
        Ok(FiniteThinFamily { ground, domain, columns })
    }

    /// `f^G`: the signed incidence vector of each edge; loops give zero.
    pub fn from_graph(g: &FiniteGraph) -> Self {
        let n = g.n_vertices();
        let columns = g
            .edges
            .iter()
            .map(|&(s, t)| {
                let mut col = vec![F::zero(); n];
                if s != t {
                    col[s] = F::from_i64(-1);
                    col[t] = F::one();
                }
                col
            })
            .collect();
        FiniteThinFamily {
            ground: Ground::new(g.edge_labels.iter().cloned()).expect("distinct edge labels"),
            domain: n,
            columns,
        }
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    fn check_size(&self) -> Result<(), ThinError> {
        if self.ground.len() > max_ground() {
            return Err(ThinError::TooLarge(self.ground.len(), max_ground()));
        }
        Ok(())
    }

    /// Rank of the columns in `s`, by exact elimination.
    pub fn rank(&self, s: ElementSet) -> usize {
        let mut rows: Vec<Vec<F>> = s.iter().map(|e| self.columns[e].clone()).collect();
        let mut rank = 0;
        for col in 0..self.domain {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv().expect("pivot is nonzero");
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = row[col].mul(&inv);
                    for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                        *x = x.sub(&factor.mul(y));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Only the zero combination of the columns in `s` vanishes.
    pub fn thinly_independent(&self, s: ElementSet) -> Result<bool, ThinError> {
        self.check_size()?;
        Ok(self.rank(s) == s.len())
    }

    /// The matroid of thinly independent sets.
    pub fn thin_sums_matroid(&self) -> Result<FiniteMatroid, ThinError> {
        self.check_size()?;
        let full = self.ground.full();
        let r = self.rank(full);
        let bases: Vec<ElementSet> = crate::matroid::subsets_of(full)
            .filter(|s| s.len() == r && self.rank(*s) == r)
            .collect();
        Ok(FiniteMatroid::from_bases_unchecked(self.ground.clone(), bases))
    }
}

pub fn thinly_independent<F: Field>(s: ElementSet, f: &FiniteThinFamily<F>) -> Result<bool, ThinError> {
    f.thinly_independent(s)
}

pub fn thin_sums_matroid_finite<F: Field>(f: &FiniteThinFamily<F>) -> Result<FiniteMatroid, ThinError> {
    f.thin_sums_matroid()
}

/// The thin sums matroid of `f^G` over `F` equals the cycle matroid.
pub fn check_thm53_finite<F: Field>(g: &FiniteGraph) -> Result<bool, ThinError> {
    let thin = FiniteThinFamily::<F>::from_graph(g).thin_sums_matroid()?;
    let cycle = g.cycle_matroid().map_err(|e| ThinError::BadValue(e.to_string()))?;
    Ok(thin == cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thin::{Gf2, Q};

    #[test]
    fn triangle() {
        let f = FiniteThinFamily::<Q>::from_graph(&FiniteGraph::triangle());
        assert!(!f.thinly_independent(ElementSet::full(3)).unwrap());
        assert!(f.thinly_independent(ElementSet::from_indices([0, 2])).unwrap());
        assert!(f.thinly_independent(ElementSet::default()).unwrap());
        assert_eq!(f.thin_sums_matroid().unwrap().bases(), FiniteMatroid::uniform(2, 3).bases());
        assert!(check_thm53_finite::<Q>(&FiniteGraph::triangle()).unwrap());
        assert!(check_thm53_finite::<Gf2>(&FiniteGraph::triangle()).unwrap());
    }

    #[test]
    fn zero_functions_give_rank_zero() {
        let f = FiniteThinFamily::<Q>::new(Ground::letters(3), 2, vec![vec![Q::zero(); 2]; 3]).unwrap();
        let m = f.thin_sums_matroid().unwrap();
        assert_eq!(m.rank(), 0);
    }
}
