//! Exact-arithmetic structure-constant algebra.
//!
//! Finite-dimensional left Leibniz algebras, 1-truncated conformal algebras,
//! unital commutative associative algebras, and vertex algebroids are all
//! represented by tables of rational structure constants. Every axiom system
//! is decidable by finite equality checks over basis tuples, so everything
//! here is exact: no floating point, no tolerances.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command-line
//! surface live in the companion `algebroids-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod calg;
mod error;
pub mod exactlin;
pub mod leibniz;
pub mod report;
pub mod sl2family;
pub mod tca;
pub mod valgd;

pub use calg::{CommAlg, IdempotentsAnswer};
pub use error::Error;
pub use exactlin::{envelope, spin, QuotientMap, Rat, RatMatrix, Solution, Subspace, Trilinear};
pub use leibniz::{hemisemidirect, sl2, sl2_module, LeibnizAlg, LeibnizModule, Side};
pub use report::{AxiomViolation, Clause, ClauseStatus, Report};
pub use sl2family::{
    probe_dim1_extension, probe_reference, simple_leibniz_sl2, FamilySpec, FamilyVariant,
    ProbeOutcome, ProbeVariant,
};
pub use tca::Tca;
pub use valgd::{
    evaluate_criteria, AlgebroidModule, Conclusion, CriteriaVerdict, LieAlgebroid, LocalityBranch,
    QuotientIdeal, Route, Sl2LeviBranch, VertexAlgebroid,
};
