//! Series twisted by digit-defined sequences.
//!
//! This crate generates the sequences (strongly B-multiplicative families,
//! digit and block counters, the paperfolding and Golay-Shapiro-Rudin
//! recurrences), parses exact rational terms, evaluates the twisted series
//! `sum u(n) t(n)` with ball arithmetic and block extrapolation, and ships a
//! catalog of identities whose exact right-hand sides it can verify
//! numerically.
//!
//! The layering is strictly bottom-up:
//!
//! - [`ball`]: midpoint-radius arithmetic (the only inexact numbers here)
//! - [`cyclo`]: exact values in cyclotomic fields (roots of unity, Gaussian
//!   rationals) for sequence values and partial sums
//! - [`ratfn`]: exact rational functions of `n`, their parser, and decay
//!   analysis
//! - [`seq`]: the sequence families and the CLI specification mini-language
//! - [`constants`]: harmonic and Euler numbers, Dirichlet beta, and the
//!   symbolic constants used as right-hand sides
//! - [`series`]: summation jobs, block partial sums, and acceleration
//! - [`catalog`]: identity records, the builtin catalog, and verification

pub mod ball;
pub mod cyclo;
pub mod error;
pub mod lexer;
pub mod poly;
pub mod ratfn;
pub mod seq;
pub mod constants;
pub mod series;
pub mod catalog;

pub use ball::{Ball, CBall};
pub use catalog::{builtin_catalog, verify_identity, IdentityRecord, VerifyReport};
pub use cyclo::{CycloValue, Cyclotomic};
pub use error::{CatalogError, InadmissibleJob, OverrideConflict, ParseError, PoleError, SumError};
pub use ratfn::{DecayReport, RationalFn};
pub use seq::{DigitCounter, RecurrenceKind, RecurrenceSeq, Sequence, StrongMultSeq};
pub use series::{Method, SeriesJob, SumResult, TermExpr};
