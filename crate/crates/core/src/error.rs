//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the exact-algebra routines.
///
/// Most operations in this crate are total on their documented domains;
/// errors signal either a caller mistake (mismatched rings, out-of-range
/// labels) or a structural finding that the caller must not ignore
/// (inexact division where theory predicts exactness, a class sum that
/// fails to be scalar).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgError {
    /// Division by zero in a field or exact ring.
    DivisionByZero,
    /// Operands belong to different rings (different modulus, variable
    /// count, or extension degree).
    ModulusMismatch,
    /// Exact division left a nonzero remainder where none is possible.
    InexactDivision(String),
    /// A sum over a conjugacy class did not act as a scalar matrix.
    NonScalarClassSum,
    /// The group element is not p-regular (order divisible by p).
    NonPRegular,
    /// Backend configuration violates its invariants.
    InvalidBackend(String),
    /// A singular-vector family is incompatible with the given `tau` or `t`.
    IncompatibleFamily(String),
    /// Random-mode samples disagreed; the result may not be generic.
    GenericityWarning(String),
    /// The Brauer decomposition system could not be solved uniquely.
    BrauerSolve(String),
    /// A structural identity that must hold at generic parameters failed.
    StructuralFailure(String),
    /// An internal invariant was violated; indicates a bug, not bad input.
    InternalFault(&'static str),
    /// Input outside the documented domain.
    InvalidInput(String),
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::DivisionByZero => write!(f, "division by zero"),
            AlgError::ModulusMismatch => write!(f, "operands belong to different rings"),
            AlgError::InexactDivision(s) => write!(f, "inexact division: {s}"),
            AlgError::NonScalarClassSum => write!(f, "conjugacy class sum is not scalar"),
            AlgError::NonPRegular => write!(f, "group element is not p-regular"),
            AlgError::InvalidBackend(s) => write!(f, "invalid backend: {s}"),
            AlgError::IncompatibleFamily(s) => write!(f, "incompatible singular family: {s}"),
            AlgError::GenericityWarning(s) => write!(f, "genericity warning: {s}"),
            AlgError::BrauerSolve(s) => write!(f, "Brauer decomposition failed: {s}"),
            AlgError::StructuralFailure(s) => write!(f, "structural failure: {s}"),
            AlgError::InternalFault(s) => write!(f, "internal fault: {s}"),
            AlgError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl core::error::Error for AlgError {}
