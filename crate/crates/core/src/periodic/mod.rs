//! Eventually periodic edge sets of three one-ended locally finite graphs,
//! and exact decisions for their algebraic cycle matroids.
//!
//! The graphs:
//!
//! * `LADDER_L`: cells `1, 2, ...` with vertices `t_i, b_i`; slots
//!   `u: t_i–t_{i+1}`, `d: b_i–b_{i+1}`, `r: t_i–b_i`.
//! * `DOUBLED_H`: `LADDER_L` with every slot doubled (`u'`, `d'`, `r'`).
//! * `RAYED_G`: cells `0, 1, ...` with vertices `a_i, b_i`; slots
//!   `p: a_i→a_{i+1}`, `q: b_i→b_{i+1}`, `r: a_i→b_i`; plus a vertex `*`
//!   carrying the loop `l`.

mod decide;
mod edgeset;
mod family;

use thiserror::Error;

pub use decide::{
    contains_double_ray, contains_finite_cycle, dependence, is_base_ma, is_circuit_ma, is_independent_ma,
    is_skew_cut, is_skew_cut_edges, restrict, window, BaseVerdict, Dependence, DoubleRayCertificate,
    DoubleRayDecision, DoubleRayReport, PeriodicDoubleRay, RayTail, WindowGraph,
};
pub use edgeset::{intersection_cardinality, Cardinality, EpSet, EpSetFile};
pub use family::{EdgeId, Family, PrefixEdge, PrefixEnd, RayedGraphFamily, Slot, SlotEnd, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodicError {
    #[error("unknown graph family `{0}` (expected LADDER_L, DOUBLED_H or RAYED_G)")]
    UnknownFamily(String),
    #[error("unknown slot `{0}` in {1}")]
    UnknownSlot(String, &'static str),
    #[error("malformed edge id `{0}` for {1}")]
    BadEdgeId(String, &'static str),
    #[error("exceptional edge `{0}` lies at or past the onset {1}")]
    ExceptionalPastOnset(String, usize),
    #[error("period must be at least 1")]
    ZeroPeriod,
    #[error("residue {0} is not below the period {1}")]
    ResidueOutOfRange(usize, usize),
    #[error("edge sets over different families ({0} vs {1})")]
    FamilyMismatch(&'static str, &'static str),
    #[error("only finite edge sets are supported here")]
    InfiniteSet,
}
