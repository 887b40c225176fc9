//! Exact computation of `H^2(g, R)` for the Cayley-Klein algebras
//! `so_{w1..wN}(N+1)` and construction of their central extensions.
//!
//! ```
//! use ckh2_core::{classify_nontrivial, h2_dimension_formula, OmegaSequence};
//!
//! let galilei: OmegaSequence = "0,0,1,1".parse().unwrap();
//! assert_eq!(h2_dimension_formula(&galilei), classify_nontrivial(&galilei).len());
//! ```

pub mod ck;
pub mod closed_form;
pub mod cochain;
pub mod error;
pub mod extension;
pub mod linalg;
pub mod notation;
pub mod oracle;
pub mod rational;

pub use ck::{
    bracket, check_jacobi, identify, reverse, semidirect_split, structure_table, vector_representation, Generator,
    GeneratorPair, LinComb, OmegaSequence, SemidirectSplit, StructureTable,
};
pub use closed_form::{
    classify_nontrivial, constraint_check, delta_sequence, derive_full_cochain, enumerate_basic, h2_dimension_formula,
    is_formula_consistent, solve_constraints, BasicCoefficient, CoefficientKind, Consistency, ConstraintViolation,
    DeltaSequence, ExtensionAssignment,
};
pub use cochain::{OneCochain, TwoCochain};
pub use error::Error;
pub use extension::{
    commutator_table, extend, extend_unchecked, group_compactness_filter, trivialize, CommutatorTable, ExtendedAlgebra,
    Notation, Trivialization,
};
pub use linalg::{RankAndKernel, RationalMatrix};
pub use notation::GlyphStyle;
pub use oracle::CohomologyDims;
pub use rational::{format_rational, parse_rational, Rational};
