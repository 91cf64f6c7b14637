use serde::Serialize;

use super::coeffs::ThinCoefficients;
use super::field::Field;
use super::ThinError;
use crate::periodic::{EdgeId, Family, Vertex};

/// Edge-indexed functions on the vertices of a builtin family.
///
/// The plain family is `f^G`: `f_e = χ_{t(e)} − χ_{s(e)}` with every slot
/// oriented from its first listed end to its second (`p`, `q`, `u`, `d`
/// forward along the cells, rungs from the top or `a` side to the bottom or
/// `b` side); loops give the zero function. The twisted family over
/// `RAYED_G` sets `f_l = χ_*` and `f_{r_i} = f^G_{r_i} + i·χ_*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThinFamily {
    family: Family,
    twisted: bool,
}

const STAR: Vertex = Vertex::Prefix(0);
const RUNG: usize = 2;

impl ThinFamily {
    pub fn graph(family: Family) -> Self {
        ThinFamily { family, twisted: false }
    }

    /// The twisted family over `RAYED_G`.
    pub fn m_plus() -> Self {
        ThinFamily {
            family: Family::RayedG,
            twisted: true,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    /// Nonzero values of `f_e`, as small integers.
    pub fn values(&self, e: EdgeId) -> Vec<(Vertex, i64)> {
        let f = self.family;
        let mut out = Vec::with_capacity(3);
        let (s, t) = f.endpoints(e);
        if s != t {
            out.push((s, -1));
            out.push((t, 1));
        }
        if self.twisted {
            match e {
                EdgeId::Prefix(0) => out.push((STAR, 1)),
                EdgeId::Cell { index, slot: RUNG } if index > 0 => out.push((STAR, index as i64)),
                _ => {}
            }
        }
        out
    }

    pub fn value(&self, e: EdgeId, v: Vertex) -> i64 {
        self.values(e).into_iter().filter(|&(w, _)| w == v).map(|(_, c)| c).sum()
    }

    /// Edges whose function can be nonzero at `v`, for the finitely many
    /// cells below `limit` when `v` is the twist vertex.
    fn touching(&self, v: Vertex, limit: usize) -> Vec<EdgeId> {
        let f = self.family;
        let mut out = f.incident(v);
        if self.twisted && v == STAR {
            out.extend((f.first_cell()..limit).map(|index| EdgeId::Cell { index, slot: RUNG }));
        }
        out
    }
}

/// Outcome of a thin-dependence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ThinVerdict {
    Ok { trivial: bool },
    /// Infinitely many nonzero products at this vertex.
    IllDefinedAt { vertex: String },
    NonzeroAt { vertex: String, sum: String },
}

impl ThinVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, ThinVerdict::Ok { .. })
    }
}

/// Decide whether `λ` is a thin dependence of `f`.
///
/// Past the onset the values repeat with the period and every cell vertex
/// only meets edges of its own and the previous cell, so checking the
/// vertices up to two periods past the onset covers all of them. At the
/// twist vertex the rungs contribute `i·λ_{r_i}`, which is well defined iff
/// no periodic rung class carries a nonzero value.
pub fn is_thin_dependence<F: Field>(lambda: &ThinCoefficients<F>, f: &ThinFamily) -> Result<ThinVerdict, ThinError> {
    let fam = f.family();
    if lambda.family() != fam {
        return Err(ThinError::FamilyMismatch(lambda.family().name(), fam.name()));
    }
    let support = lambda.support();
    let onset = support.onset();
    if f.is_twisted() && support.pattern().iter().any(|&(slot, _)| slot == RUNG) {
        return Ok(ThinVerdict::IllDefinedAt {
            vertex: fam.vertex_name(STAR),
        });
    }
    let hi = onset + 2 * support.period();
    let vertices = (0..fam.n_prefix_vertices())
        .map(Vertex::Prefix)
        .chain((fam.first_cell()..=hi).flat_map(|index| (0..fam.width()).map(move |label| Vertex::Cell { index, label })));
    for v in vertices {
        let mut sum = F::zero();
        for e in f.touching(v, onset) {
            let c = f.value(e, v);
            if c != 0 {
                sum = sum.add(&lambda.value(e).mul(&F::from_i64(c)));
            }
        }
        if !sum.is_zero() {
            return Ok(ThinVerdict::NonzeroAt {
                vertex: fam.vertex_name(v),
                sum: sum.canonical(),
            });
        }
    }
    Ok(ThinVerdict::Ok {
        trivial: support.is_empty(),
    })
}

/// Every vertex other than the twist vertex meets the support of `λ` in
/// zero or at least two edge ends (a loop counts twice).
pub fn support_degree_check<F: Field>(lambda: &ThinCoefficients<F>, f: &ThinFamily) -> Result<bool, ThinError> {
    let verdict = is_thin_dependence(lambda, f)?;
    if !verdict.is_ok() {
        return Err(ThinError::NotADependence(format!("{verdict:?}")));
    }
    let fam = f.family();
    let support = lambda.support();
    let hi = support.onset() + 2 * support.period();
    for index in fam.first_cell()..=hi {
        for label in 0..fam.width() {
            let v = Vertex::Cell { index, label };
            let degree: usize = fam
                .incident(v)
                .into_iter()
                .filter(|&e| support.contains(e))
                .map(|e| {
                    let (a, b) = fam.endpoints(e);
                    usize::from(a == v) + usize::from(b == v)
                })
                .sum();
            if degree == 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thin::Q;

    #[test]
    fn twisted_values() {
        let f = ThinFamily::m_plus();
        let g = Family::RayedG;
        assert_eq!(f.values(g.parse_edge("l").unwrap()), vec![(STAR, 1)]);
        let r3 = f.values(g.parse_edge("r:3").unwrap());
        assert_eq!(r3.len(), 3);
        assert!(r3.contains(&(STAR, 3)));
        assert_eq!(f.values(g.parse_edge("r:0").unwrap()).len(), 2);
        assert!(ThinFamily::graph(g).values(g.parse_edge("l").unwrap()).is_empty());
    }

    #[test]
    fn zero_family_is_trivially_ok() {
        let lam = ThinCoefficients::<Q>::zero(Family::RayedG);
        assert_eq!(is_thin_dependence(&lam, &ThinFamily::m_plus()).unwrap(), ThinVerdict::Ok { trivial: true });
    }
}
