//! Analytic spectral bounds and approximations
//!
//! Three closed-form devices bracket the eigenvalues of the radial problem
//! without running the iterative solver:
//!
//! * **Uncertainty-principle lower bound** — the minimum over the domain of
//!   the effective radial potential
//!   `(d-2)^2/(8 r^2) - a/r + b r^2`, a bound on the ground state.
//! * **Envelope bounds** — for each level `(n, l)` the pair
//!   `min_r [ 1/(2 r^2) - a/(P r) + b (P r)^2 ]` with `P = P1 = n + l + (d-1)/2`
//!   (lower) and `P = P2 = 2n + l + d/2` (upper).  Both collapse to the exact
//!   eigenvalue `P sqrt(2b)` when `a = 0`.
//! * **Sum approximation** — the mixed expression
//!   `min_r [ 1/(2 r^2) - a/(P1 r) + b (P2 r)^2 ]`, exact in both the pure
//!   oscillator (`a = 0`) and pure Coulomb (`b -> 0`) limits.
//!
//! Each minimum is found from the stationarity condition, a quartic (or
//! cubic) with exactly one positive root, solved at working precision.

use crate::aim::{ProblemSpec, Radius};
use crate::error::{Error, Result};
use crate::numerics::bigreal::BigReal;
use crate::numerics::roots::{find_root, poly_eval, Bracket};

/// Level labels for the envelope and sum bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumNumbers {
    /// Radial index (0 = lowest at the given `l`).
    pub n: u32,
    /// Angular momentum.
    pub l: u32,
    /// Dimension (`>= 2`).
    pub d: u32,
}

impl QuantumNumbers {
    /// `P1 = n + l + (d - 1)/2`.
    pub fn p_linear(&self, like: &BigReal) -> BigReal {
        like.ratio_like(2 * (self.n as i64 + self.l as i64) + self.d as i64 - 1, 2)
    }

    /// `P2 = 2n + l + d/2`.
    pub fn p_quadratic(&self, like: &BigReal) -> BigReal {
        like.ratio_like(2 * (2 * self.n as i64 + self.l as i64) + self.d as i64, 2)
    }
}

/// The unique positive root of a polynomial (ascending coefficients) whose
/// value at `0` is negative and whose leading behaviour is positive.
fn positive_root(coeffs: &[BigReal]) -> Result<BigReal> {
    let zero = coeffs[0].int_like(0);
    let mut hi = coeffs[0].int_like(1);
    let mut v = poly_eval(coeffs, &hi);
    let mut guard = 0;
    while !v.is_positive() {
        if v.is_zero() {
            return Ok(hi);
        }
        hi = hi.mul_i(2);
        v = poly_eval(coeffs, &hi);
        guard += 1;
        if guard > 600 {
            return Err(Error::NonFiniteEvaluation {
                at: hi.to_decimal_string(8),
            });
        }
    }
    let digits = coeffs[0].digits();
    let tol = &hi * &BigReal::parse(&format!("1e-{digits}"), digits).unwrap();
    let bracket = Bracket::new(zero, hi)?;
    let mut f = |r: &BigReal| Ok(poly_eval(coeffs, r));
    find_root(&mut f, &bracket, &tol)
}

/// `1/(2 r^2) - a/(p_lin r) + b (p_quad r)^2` at its positive minimum.
fn mixed_min(a: &BigReal, b: &BigReal, p_lin: &BigReal, p_quad: &BigReal) -> Result<BigReal> {
    // Stationarity: 2 b p_quad^2 r^4 + (a / p_lin) r - 1 = 0.
    let zero = a.int_like(0);
    let coeffs = [
        a.int_like(-1),
        a / p_lin,
        zero.clone(),
        zero,
        (b * &p_quad.square()).mul_i(2),
    ];
    let r = positive_root(&coeffs)?;
    let quad = &(b * &(p_quad * &r).square());
    let value = &(&r.square().mul_i(2).recip() - &(a / &(p_lin * &r))) + quad;
    Ok(value)
}

/// Lower and upper envelope bounds for level `qn` of the potential
/// `-a/r + b r^2` (free domain).
pub fn envelope_bounds(qn: &QuantumNumbers, a: &BigReal, b: &BigReal) -> Result<(BigReal, BigReal)> {
    if !b.is_positive() {
        return Err(Error::UnsupportedParameter(
            "envelope bounds require b > 0".to_string(),
        ));
    }
    let p1 = qn.p_linear(a);
    let p2 = qn.p_quadratic(a);
    let lower = mixed_min(a, b, &p1, &p1)?;
    let upper = mixed_min(a, b, &p2, &p2)?;
    Ok((lower, upper))
}

/// The mixed-envelope approximation for level `qn`: exact in both the
/// pure-oscillator and pure-Coulomb limits.
pub fn sum_approximation(qn: &QuantumNumbers, a: &BigReal, b: &BigReal) -> Result<BigReal> {
    if !b.is_positive() {
        return Err(Error::UnsupportedParameter(
            "the sum approximation requires b > 0".to_string(),
        ));
    }
    let p1 = qn.p_linear(a);
    let p2 = qn.p_quadratic(a);
    mixed_min(a, b, &p1, &p2)
}

/// Minimum of the effective radial potential
/// `(d-2)^2/(8 r^2) - a/r + b r^2` over the problem domain: a lower bound on
/// the ground-state energy.  For `d = 2` with `a > 0` the effective potential
/// is unbounded below and no such bound exists.
pub fn uncertainty_lower_bound(spec: &ProblemSpec) -> Result<BigReal> {
    let a = spec.a();
    let b = spec.b();
    let d = spec.d();
    let centrifugal_zero = d == 2;
    let limit = match spec.radius() {
        Radius::Free => None,
        Radius::Bounded(r) => Some(r.clone()),
    };
    if centrifugal_zero {
        if a.is_positive() {
            return Err(Error::UnsupportedParameter(
                "for d = 2 with a > 0 the effective potential -a/r + b r^2 is unbounded \
                 below, so the uncertainty-principle bound does not exist"
                    .to_string(),
            ));
        }
        if a.is_zero() {
            // Infimum of b r^2 over (0, R] is approached at r -> 0.
            return Ok(a.int_like(0));
        }
        // a < 0: interior stationary point of -a/r + b r^2 solves
        // 2 b r^3 + a = 0.
        let zero = a.int_like(0);
        let cubic = [a.clone(), zero.clone(), zero, b.mul_i(2)];
        let r_star = positive_root(&cubic)?;
        let r_min = clamp_to_limit(r_star, &limit);
        return Ok(&(b * &r_min.square()) - &(a / &r_min));
    }
    // d >= 3: stationarity of c/r^2 - a/r + b r^2 with c = (d-2)^2 / 8:
    // 2 b r^4 + a r - 2 c = 0.
    let c = a.ratio_like(((d - 2) as i64).pow(2), 8);
    let zero = a.int_like(0);
    let quartic = [
        -&c.mul_i(2),
        a.clone(),
        zero.clone(),
        zero,
        b.mul_i(2),
    ];
    let r_star = positive_root(&quartic)?;
    let r_min = clamp_to_limit(r_star, &limit);
    let value = &(&(&c / &r_min.square()) - &(a / &r_min)) + &(b * &r_min.square());
    Ok(value)
}

fn clamp_to_limit(r_star: BigReal, limit: &Option<BigReal>) -> BigReal {
    match limit {
        Some(radius) if radius < &r_star => radius.clone(),
        _ => r_star,
    }
}

/// One row of the bounds-versus-`l` sweep.
#[derive(Clone, Debug)]
pub struct BoundsRow {
    pub n: u32,
    pub l: u32,
    pub lower: BigReal,
    pub upper: BigReal,
    pub sum: BigReal,
}

/// Envelope bounds and sum approximation for every `(n, l)` with `n` in
/// `n_values` and `l = 0 ..= l_max`, as plotted-data rows.
pub fn bounds_sweep(
    a: &BigReal,
    b: &BigReal,
    d: u32,
    n_values: &[u32],
    l_max: u32,
) -> Result<Vec<BoundsRow>> {
    let mut rows = Vec::with_capacity(n_values.len() * (l_max as usize + 1));
    for &n in n_values {
        for l in 0..=l_max {
            let qn = QuantumNumbers { n, l, d };
            let (lower, upper) = envelope_bounds(&qn, a, b)?;
            let sum = sum_approximation(&qn, a, b)?;
            rows.push(BoundsRow {
                n,
                l,
                lower,
                upper,
                sum,
            });
        }
    }
    Ok(rows)
}
