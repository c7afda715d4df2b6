//! Minimal generating sets of Schubert determinantal ideals.
//!
//! Given a permutation `w`, the library computes its Rothe diagram and
//! essential set, enumerates the essential minors of the Schubert
//! determinantal ideal `I_w`, filters them down to the elusive minors (the
//! minimal generating set), and backs the structural claims with exact
//! certificates:
//!
//! - witness points proving each elusive minor is a necessary generator,
//! - multivariate division traces proving the elusive minors generate `I_w`,
//! - initial-term covers and Buchberger runs verifying that the minimal
//!   generators are already a Gröbner basis (antidiagonal order always,
//!   diagonal order for vexillary `w`),
//! - two independent complete-intersection deciders with exhaustive
//!   cross-validation.
//!
//! All arithmetic is exact. The polynomial layer is generic over the
//! coefficient scalar through [`Coefficient`]; the aliases below fix the two
//! supported instantiations.

pub mod ci;
pub mod diagram;
pub mod error;
pub mod generators;
pub mod perm;
pub mod poly;
pub mod report;
pub mod verify;

pub use ci::{ci_verdict, cross_check, is_ci_by_count, is_ci_by_pattern, CiVerdict};
pub use diagram::{
    ascii_render, connected_components, essential_set, rothe_diagram, Cell, Diagram, EssentialCell,
};
pub use error::Error;
pub use generators::{
    attends, belongs_to, canonical_elusive_at, elusive_minors, essential_minors, is_elusive, shift,
    Axis, GeneratorSet, Minor,
};
pub use perm::{all_permutations, Permutation};
pub use poly::{
    antidiagonal_monomial, diagonal_monomial, minor_polynomial, Coefficient, Monomial, OrderKind,
    Polynomial, TermOrder, Var,
};
pub use report::{analyze, to_sorted_json, AnalysisReport};
pub use verify::{
    buchberger_check, buchberger_run, evaluate_minor, initial_term_cover, minimality_certificate,
    minimality_certificates, reduce, s_polynomial, try_initial_term_cover, witness_point,
    BuchbergerLimits, GroebnerOutcome, MinimalityCertificate, ReductionTrace, WitnessPoint,
};

/// Default exact coefficient scalar: overflow-checked 64-bit integers.
/// Every overflow is a hard error, never a silent wraparound.
pub type Coeff = i64;

/// Polynomials over the default coefficient scalar.
pub type Poly = Polynomial<Coeff>;

/// Arbitrary-precision coefficient scalar, for workloads where 64 bits could
/// conceivably overflow.
pub type BigCoeff = num_bigint::BigInt;

/// Polynomials over [`BigCoeff`].
pub type BigPoly = Polynomial<BigCoeff>;
