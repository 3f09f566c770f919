//! Exact computer algebra for Manin triples of complex reductive Lie algebras.
//!
//! The crate builds semisimple/reductive Lie algebras in a Chevalley basis with
//! exact integer structure constants, represents invariant bilinear forms K_λ and
//! B_λ, validates and enumerates generalized Belavin-Drinfeld data, constructs the
//! associated Manin triples, descends them through antecedents, and checks the
//! reality conditions for triples coming from a split real form.
//!
//! All arithmetic is over the Gaussian rationals; there is no floating point
//! anywhere in the crate.

pub mod liealg;

pub mod bd;
pub mod forms;
pub mod realforms;
pub mod triples;

pub use liealg::algebra::{ChevalleyAlgebra, Element};
pub use liealg::cartan::CartanMatrix;
pub use liealg::matrix::Matrix;
pub use liealg::roots::{Root, RootSystem};
pub use liealg::scalar::{Rational, Scalar};
pub use liealg::subspace::{FieldTag, Subspace};

use thiserror::Error;

/// Errors surfaced by exact constructions and validations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("root generation exceeded the finite-type bound ({0} roots)")]
    NotFiniteType(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate form: {0}")]
    DegenerateForm(String),
    #[error("nilpotency candidate set is not a subspace: {0}")]
    NilradicalNotSubspace(String),
    #[error("subspace is not a sum of weight spaces: {0}")]
    NotWeightSum(String),
    #[error("no Lagrangian subspace exists: {0}")]
    NoLagrangian(String),
    #[error("Belavin-Drinfeld data is structurally malformed: {0}")]
    MalformedData(String),
    #[error("Belavin-Drinfeld validation failed: condition {condition}: {witness}")]
    ValidationFailed { condition: u8, witness: String },
    #[error("Weyl generator relations disagree under A: {0}")]
    TauMismatch(String),
    #[error("enumeration budget exceeded (budget {0})")]
    BudgetExceeded(u64),
    #[error("antecedent side condition failed: {0}")]
    SideCondition(String),
    #[error("descent did not strictly decrease dimension at level {0}")]
    DescentStuck(usize),
    #[error("input is not Lagrangian: {0}")]
    NotLagrangian(String),
    #[error("data extraction failed: {0}")]
    ExtractionFailed(String),
    #[error("reality precondition failed: {0}")]
    RealityPrecondition(String),
    #[error("twist normalization needs square roots outside the Gaussian rationals: {0}")]
    SquareRootObstruction(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
