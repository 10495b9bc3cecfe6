//! Error types shared across the crate.

use thiserror::Error;

/// Errors from expression and specification parsing.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("exponent {0} exceeds the cap of {max}", max = crate::ratfn::EXPONENT_CAP)]
    ExponentOverflow(u64),
    #[error("division by the zero polynomial at byte {pos}")]
    DivisionByZeroPoly { pos: usize },
    #[error("invalid sequence specification: {0}")]
    BadSequenceSpec(String),
    #[error("invalid symbolic constant: {0}")]
    BadConstant(String),
}

/// Errors from constructing sequences.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("base must be at least 2, got {0}")]
    BadBase(u64),
    #[error("expected {expected} values u(0..B-1), got {got}")]
    WrongValueCount { expected: usize, got: usize },
    #[error("u(0) must be exactly 1")]
    UnitValueRequired,
    #[error("the Kronecker symbol (-1/n) requires n >= 1")]
    ZeroArgument,
    #[error("digit {digit} is not a base-{base} digit")]
    DigitOutOfRange { digit: u64, base: u64 },
}

/// Evaluation at an unoverridden pole of a rational function.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("pole at n = {n} has no override")]
pub struct PoleError {
    pub n: u64,
}

/// Merging two rational functions whose overrides cannot be combined.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("override at n = {n} cannot be combined: {reason}")]
pub struct OverrideConflict {
    pub n: u64,
    pub reason: String,
}

/// Errors from closed-form constant arithmetic.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConstantError {
    #[error("Euler numbers E_m are defined for even m; got {0}")]
    OddEulerIndex(u64),
    #[error("operation leaves the symbolic constant basis: {0}")]
    OutsideBasis(String),
    #[error("logarithm argument must be positive, got {0}")]
    NonPositiveLog(String),
}

/// A series job that fails the convergence preconditions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InadmissibleJob {
    #[error("sequence is not known to have bounded partial sums: {0}")]
    Sequence(String),
    #[error("term does not decay to zero (numerator degree >= denominator degree)")]
    NoDecay,
    #[error("term differences decay slower than 1/n^2")]
    SlowDifferences,
    #[error("term has an unoverridden pole at n = {0} within the summation range")]
    PoleInRange(u64),
    #[error("log-term argument is not positive at n = {0}")]
    SignError(u64),
    #[error("log-term argument does not tend to 1, so log terms do not decay")]
    LogNoDecay,
    #[error("{0}")]
    Other(String),
}

/// Errors surfaced by the summation engine.
#[derive(Debug, Clone, Error)]
pub enum SumError {
    #[error(transparent)]
    Inadmissible(#[from] InadmissibleJob),
    #[error(transparent)]
    Pole(#[from] PoleError),
    #[error("extrapolants did not converge within the level cap ({levels} levels, {terms} terms)")]
    NoConvergence { levels: u32, terms: u64 },
}

/// Errors from building or verifying catalog records.
#[derive(Debug, Clone, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Sum(#[from] SumError),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("catalog I/O: {0}")]
    Io(String),
    #[error("catalog JSON: {0}")]
    Json(String),
}
