//! Discrete spectra, exact polynomial solutions, and analytic bounds for the
//! d-dimensional radial Schrödinger problem with potential
//!
//! ```text
//! V(r) = -a/r + b r^2,          b > 0,
//! ```
//!
//! either on the half line (free problem, `R = ∞`) or confined to a box of
//! radius `R` with a Dirichlet wall (`u(R) = 0`).
//!
//! The crate provides:
//!
//! * [`numerics`] — arbitrary-precision scalars, truncated power series,
//!   bracketing root finding, and polynomial root isolation;
//! * [`odepoly`] — machinery deciding when a second-order linear ODE with
//!   polynomial coefficients admits polynomial solutions, and constructing
//!   them;
//! * [`aim`] — the asymptotic iteration eigensolver for the free and
//!   confined problems at arbitrary precision;
//! * [`exact`] — catalogs of quasi-exactly-solvable parameter sets with
//!   closed-form energies and wavefunctions;
//! * [`bounds`] — analytic lower/upper bounds and a sum approximation for
//!   the eigenvalues;
//! * [`oracle`] — an independent shooting-method eigensolver on a uniform
//!   grid with Richardson extrapolation, used for cross-checks;
//! * [`reference`] — embedded high-precision reference eigenvalue tables and
//!   routines that recompute them;
//! * [`batch`] — sequential/parallel execution of independent solver tasks.

pub mod error;
pub mod numerics;
pub mod odepoly;
pub mod aim;
pub mod exact;
pub mod bounds;
pub mod oracle;
pub mod reference;
pub mod batch;

pub use error::{Error, Result};
pub use numerics::bigreal::BigReal;
