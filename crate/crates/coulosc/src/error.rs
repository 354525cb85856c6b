//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by the numerical kernel, the polynomial-solution theory,
/// the eigensolver, the exact-solution catalog, the bounds evaluators, and the
/// finite-difference oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// A rational function was expanded about one of its poles.
    #[error("series expansion center {center} coincides with a denominator root")]
    PoleAtCenter { center: String },

    /// Series division by a series whose constant term vanishes.
    #[error("series division requires a nonzero constant term in the divisor")]
    DivisionByZeroSeries,

    /// A bracketing root search was started on endpoints with equal signs, or
    /// a re-bracketing sweep never found a sign change.
    #[error("no sign change across bracket [{lo}, {hi}]{detail}")]
    BracketNoSignChange {
        lo: String,
        hi: String,
        detail: String,
    },

    /// A callable handed to the root finder or minimizer returned a
    /// non-finite value.
    #[error("non-finite function evaluation at {at}")]
    NonFiniteEvaluation { at: String },

    /// The minimizer's probes collapsed monotonically onto one endpoint: the
    /// function is not unimodal on the bracket (no interior minimum).
    #[error("function is not unimodal on the bracket: probes collapse onto {endpoint} endpoint")]
    NotUnimodal { endpoint: &'static str },

    /// A banded determinant was requested with entry lists shorter than the
    /// requested size.
    #[error("band entries cover {available} indices but size {requested} was requested")]
    DimensionError { available: usize, requested: usize },

    /// The coefficient recurrence forced the leading coefficient of the
    /// requested degree to vanish: no solution with that exact degree exists.
    #[error("coefficient recurrence forces c_{degree} = 0: no degree-{degree} polynomial solution")]
    DegreeDegenerate { degree: usize },

    /// A denominator of the three-term polynomial generator vanished.
    #[error("degenerate parameters: generator denominator vanishes at index {index}")]
    DegenerateParameter { index: usize },

    /// The iteration seed point lies outside the admissible interval.
    #[error("seed point r0 = {r0} outside admissible interval {interval}")]
    SeedPoint { r0: String, interval: String },

    /// The termination-condition iteration ran out of series order.
    #[error("series order {order} insufficient for {iterations} iterations")]
    InsufficientOrder { order: usize, iterations: usize },

    /// Problem parameters outside the supported domain (for example b = 0).
    #[error("unsupported parameters: {0}")]
    UnsupportedParameter(String),

    /// The eigenvalue ladder exhausted its iteration budget without two
    /// successive refinements agreeing to tolerance.
    #[error("eigensolver did not converge within N = {n_max} iterations (last drift {drift})")]
    NonConvergence { n_max: usize, drift: String },

    /// Independently refined spectrum entries came back out of order
    /// (two scan roots converged onto the same eigenvalue).
    #[error("spectrum refinement produced out-of-order eigenvalues: {detail}")]
    SpectrumOrder { detail: String },

    /// An exact-solution constructor was invoked with parameters that do not
    /// satisfy the closure constraints.
    #[error("parameters do not satisfy the exact-solution constraints (max residual {residual})")]
    NotExactlySolvable { residual: String },

    /// A closed-form parameter family was requested for an unsupported degree.
    #[error("no closed-form parameter family for degree n = {n}; only n = 0 and n = 1 have closed forms")]
    UnsupportedFamily { n: usize },

    /// The finite-difference oracle's grid refinements disagree.
    #[error("oracle refinements disagree: {detail}")]
    OracleDivergence { detail: String },

    /// A free-solution node failed to reproduce its energy as a confined
    /// eigenvalue.
    #[error("node-link check failed at R = {radius}: confined E = {confined}, free E = {free}")]
    NodeLinkMismatch {
        radius: String,
        confined: String,
        free: String,
    },

    /// Invalid problem specification (domain invariants violated).
    #[error("invalid problem specification: {0}")]
    InvalidSpec(String),

    /// A decimal string could not be parsed into a number.
    #[error("cannot parse {input:?} as a decimal number")]
    ParseNumber { input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
