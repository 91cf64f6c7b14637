//! Finite matroid oracles, eventually periodic edge sets of three locally
//! finite graphs, and thin-sums dependence checks.
//!
//! Shared types are re-exported at the crate root.

pub mod constructions;
pub mod corpus;
pub mod graph;
pub mod matroid;
pub mod ops;
pub mod periodic;
pub mod thin;

pub use graph::{FiniteGraph, GraphError, GraphFile};
pub use matroid::{
    max_ground, set_max_ground, verify_axioms, AxiomVerdict, AxiomViolation, ElementSet, FamilyFile,
    FiniteMatroid, Ground, MatroidError, MatroidFile, SetFamily,
};
