//! Numerical kernel: arbitrary-precision reals, truncated power series,
//! bracketing root finding, unimodal minimization, and polynomial root
//! isolation.

pub mod bigreal;
pub mod series;
pub mod roots;

pub use bigreal::BigReal;
pub use series::{series_from_rational, TruncatedSeries};
pub use roots::{
    cauchy_root_bound, descartes_sign_changes, find_root, lagrange_interpolate,
    minimize_unimodal, poly_derivative, poly_eval, poly_real_roots_in, Bracket,
};
