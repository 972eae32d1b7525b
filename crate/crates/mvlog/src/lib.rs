//! mvlog — a workbench for finite many-valued and paraconsistent logics.
//!
//! The crate decides questions about finite logical matrices (validity,
//! entailment, countermodels, rule soundness), checks Hilbert-style proofs
//! against a library of axiom systems for the consistency-operator
//! paraconsistent logics, enumerates the 8,192-member family of
//! three-valued maximal paraconsistent logics, analyses congruences and
//! algebraizability of finite matrices, and applies the standard
//! conservative translations between these logics.
//!
//! Start from [`registry::builtin`] for a matrix, [`hilbert::system`] for
//! an axiom system, and the `examples/` directory for runnable tours of
//! each capability.

pub mod algebra;
pub mod clone;
pub mod eightk;
pub mod formula;
pub mod hilbert;
pub mod matrices;
pub mod registry;
pub mod report;
pub mod translate;
pub mod verify;

pub mod cli;
