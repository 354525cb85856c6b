//! Catalog of quasi-exact polynomial solutions
//!
//! For the radial problem with potential `-a/r + b r^2` the substitution
//! `u = r^((k-1)/2) e^(-sqrt(b/2) r^2) f(r)` (free) or the same with an
//! extra `(R - r)` wall factor (confined) turns the eigenproblem into a
//! polynomial-coefficient ODE handled by [`crate::odepoly`].  A degree-`n`
//! polynomial `f` exists only when
//!
//! * the energy takes the *candidate* value `E = (2n + k) sqrt(b/2)` (free)
//!   or `E = (2n + k + 2) sqrt(b/2)` (confined), and
//! * the parameters `(a, b)` (and `R`) satisfy algebraic *constraints*: the
//!   vanishing of a banded determinant (free) or of a pair of closure
//!   residuals (confined).
//!
//! This module evaluates those constraints, solves them for `b` (free) or
//! provides the closed-form `(a, b, E)` families (confined, degrees 0 and
//! 1), constructs the explicit solutions, analyses their radial nodes, and
//! links free-solution nodes to confined problems: truncating the free
//! domain at a node leaves the energy an exact eigenvalue of the box.

use crate::aim::{self, ProblemSpec, Radius};
use crate::error::{Error, Result};
use crate::numerics::bigreal::BigReal;
use crate::numerics::roots::{
    cauchy_root_bound, descartes_sign_changes, effective_degree, lagrange_interpolate,
    poly_real_roots_in,
};
use crate::odepoly::{
    band_determinant, band_entries_14, ode_residual_14, ode_residual_54, poly_coeffs_54,
    sufficiency_residuals_54, OdeClass14, OdeClass54,
};

/// Outcome of a constraint evaluation at fixed polynomial degree.
#[derive(Clone, Debug)]
pub struct ConstraintReport {
    /// The candidate energy forced by the degree.
    pub necessary_energy: BigReal,
    /// Constraint values that must all vanish for exact solvability: the
    /// closure determinant (plus, for low degrees, the equivalent
    /// closed-form polynomial) in the free case; the closure-residual pair
    /// in the confined case.
    pub residuals: Vec<BigReal>,
    /// Whether every residual is below `10^(-digits/2)`.
    pub satisfied: bool,
}

/// An explicit bound-state solution
/// `u(r) = r^power (R - r)? e^(-gauss_width r^2) poly(r)`.
#[derive(Clone, Debug)]
pub struct RadialSolution {
    /// Exponent of the leading power, `(k - 1)/2`.
    pub power: BigReal,
    /// Gaussian factor coefficient `sqrt(b/2)`.
    pub gauss_width: BigReal,
    /// Wall radius of the `(R - r)` factor; `None` for free solutions.
    pub box_factor: Option<BigReal>,
    /// Polynomial factor, ascending coefficients, `poly[0] = 1`.
    pub poly: Vec<BigReal>,
    /// The eigenvalue.
    pub energy: BigReal,
}

impl RadialSolution {
    /// Evaluate `u(r)`.
    pub fn eval(&self, r: &BigReal) -> BigReal {
        // power = (k-1)/2 with integer k, so r^power = sqrt(r^(k-1)).
        let k_minus_1 = (self.power.to_f64() * 2.0).round() as i32;
        let lead = self.power.int_like(0).max_of(r).pow_i(k_minus_1).sqrt();
        let gauss = (-&(&self.gauss_width * &r.square())).exp();
        let mut val = &(&lead * &gauss) * &poly_eval_ascending(&self.poly, r);
        if let Some(wall) = &self.box_factor {
            val = &val * &(wall - r);
        }
        val
    }

    /// Positive radial nodes of the polynomial factor (ascending), together
    /// with the sign-variation upper bound on their count.  Confined
    /// solutions are searched on `(0, R)`, free ones on `(0, ∞)`.
    pub fn nodes(&self) -> Result<(Vec<BigReal>, usize)> {
        poly_real_roots(&self.poly, self.box_factor.as_ref())
    }
}

fn poly_eval_ascending(c: &[BigReal], x: &BigReal) -> BigReal {
    let mut acc = c[c.len() - 1].clone();
    for cj in c.iter().rev().skip(1) {
        acc = &(&acc * x) + cj;
    }
    acc
}

/// Sign branch of a two-branch closed-form parameter family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn combine(&self, base: &BigReal, radical: &BigReal) -> BigReal {
        match self {
            Branch::Plus => base + radical,
            Branch::Minus => base - radical,
        }
    }
}

/// One member of a closed-form exactly-solvable parameter family.
#[derive(Clone, Debug)]
pub struct FamilyPoint {
    pub a: BigReal,
    pub b: BigReal,
    pub energy: BigReal,
}

fn satisfaction_tolerance(digits: u32) -> BigReal {
    BigReal::parse(&format!("1e-{}", digits / 2), digits).unwrap()
}

fn make_report(necessary_energy: BigReal, residuals: Vec<BigReal>, digits: u32) -> ConstraintReport {
    let tol = satisfaction_tolerance(digits);
    let satisfied = residuals.iter().all(|r| r.abs() <= tol);
    ConstraintReport {
        necessary_energy,
        residuals,
        satisfied,
    }
}

/// The transformed free-problem ODE for the polynomial factor, in the
/// cubic/quadratic class:
/// `r f'' + (k - 1 - 2 q r^2) f' + (2 a + (2E - k q) r) f = 0`, `q = sqrt(2b)`.
pub(crate) fn free_f_ode(a: &BigReal, q: &BigReal, k: u32, energy: &BigReal) -> OdeClass14 {
    let zero = a.int_like(0);
    let one = a.int_like(1);
    let shift = &energy.mul_i(2) - &q.mul_i(k as i64); // 2E - k q
    OdeClass14 {
        a3: [zero.clone(), zero.clone(), one, zero.clone()],
        a2: [q.mul_i(-2), zero, a.int_like(k as i64 - 1)],
        tau: [-&shift, a.mul_i(-2)],
    }
}

/// The transformed confined-problem ODE for the polynomial factor, in the
/// quartic/cubic class (wall factor `(R - r)` already absorbed).
pub(crate) fn confined_f_ode(
    a: &BigReal,
    q: &BigReal,
    k: u32,
    radius: &BigReal,
    energy: &BigReal,
) -> OdeClass54 {
    let zero = a.int_like(0);
    let ki = k as i64;
    let shift_k = &energy.mul_i(2) - &q.mul_i(ki); // 2E - k q
    let shift_k2 = &energy.mul_i(2) - &q.mul_i(ki + 2); // 2E - (k+2) q
    OdeClass54 {
        a4: [
            zero.clone(),
            zero.clone(),
            a.int_like(-1),
            radius.clone(),
            zero.clone(),
        ],
        a3: [
            q.mul_i(2),
            -&(&q.mul_i(2) * radius),
            a.int_like(-(ki + 1)),
            radius.mul_i(ki - 1),
        ],
        tau: [
            shift_k2,
            -&(&(radius * &shift_k) - &a.mul_i(2)),
            &a.int_like(ki - 1) - &(radius * a).mul_i(2),
        ],
    }
}

/// Candidate energy of a degree-`nprime` free polynomial solution:
/// `(2 n' + k) sqrt(b/2)`.
pub fn free_energy_candidate(nprime: usize, spec: &ProblemSpec) -> BigReal {
    spec.sqrt_2b()
        .mul_i(2 * nprime as i64 + spec.k() as i64)
        .div_i(2)
}

/// Candidate energy of a degree-`n` confined polynomial solution:
/// `(2 n + k + 2) sqrt(b/2)` (the wall factor raises the offset by 2).
pub fn confined_energy_candidate(n: usize, spec: &ProblemSpec) -> BigReal {
    spec.sqrt_2b()
        .mul_i(2 * n as i64 + spec.k() as i64 + 2)
        .div_i(2)
}

/// Closed-form constraint polynomial for free degrees `n' <= 5` (the
/// determinant condition expanded by hand), in terms of `q = sqrt(2b)`.
/// Vanishes exactly when the closure determinant does.
pub fn free_constraint_closed_form(
    nprime: usize,
    a: &BigReal,
    q: &BigReal,
    k: u32,
) -> Option<BigReal> {
    let ki = k as i64;
    let a2 = a.square();
    match nprime {
        0 => Some(a.clone()),
        // 2 a^2 - (k-1) q
        1 => Some(&a2.mul_i(2) - &q.mul_i(ki - 1)),
        // a (a^2 - (2k-1) q)
        2 => Some(a * &(&a2 - &q.mul_i(2 * ki - 1))),
        // 4 a^4 - 20 k a^2 q - 9 q^2 (1 - k^2)
        3 => {
            let t1 = a2.square().mul_i(4);
            let t2 = &(&a2 * q).mul_i(20 * ki);
            let t3 = &q.square().mul_i(9 * (1 - ki * ki));
            Some(&(&t1 - t2) - t3)
        }
        // a (a^4 - 5 (2k+1) a^2 q + 2 q^2 (8k^2 + 8k - 7))
        4 => {
            let t1 = a2.square();
            let t2 = &(&a2 * q).mul_i(5 * (2 * ki + 1));
            let t3 = &q.square().mul_i(2 * (8 * ki * ki + 8 * ki - 7));
            Some(a * &(&(&t1 - t2) + t3))
        }
        // 8 a^6 - 140 (k+1) a^4 q + 2 q^2 (259 k^2 + 518 k - 65) a^2
        //   - 225 q^3 (k-1)(k+1)(k+3)
        5 => {
            let a4 = a2.square();
            let t1 = (&a4 * &a2).mul_i(8);
            let t2 = &(&a4 * q).mul_i(140 * (ki + 1));
            let t3 = (&q.square() * &a2).mul_i(2 * (259 * ki * ki + 518 * ki - 65));
            let t4 = (&q.square() * q).mul_i(225 * (ki - 1) * (ki + 1) * (ki + 3));
            Some(&(&(&t1 - t2) + &t3) - &t4)
        }
        _ => None,
    }
}

/// Constraint report for a degree-`nprime` free polynomial solution: the
/// closure determinant at the candidate energy, plus (for `n' <= 5`) the
/// equivalent closed-form polynomial.
pub fn free_constraint(nprime: usize, spec: &ProblemSpec) -> Result<ConstraintReport> {
    let q = spec.sqrt_2b();
    let energy = free_energy_candidate(nprime, spec);
    let ode = free_f_ode(spec.a(), &q, spec.k(), &energy);
    let entries = band_entries_14(&ode, nprime + 1);
    let det = band_determinant(&entries, nprime + 1)?;
    let mut residuals = vec![det];
    if let Some(closed) = free_constraint_closed_form(nprime, spec.a(), &q, spec.k()) {
        residuals.push(closed);
    }
    Ok(make_report(energy, residuals, spec.digits()))
}

/// All positive `b` for which the degree-`nprime` free constraint holds at
/// the given `a` and `k`, ascending.  The closure determinant is a
/// polynomial in `q = sqrt(2b)`; it is recovered by interpolation on
/// integer nodes and its positive roots are isolated.  Returns an empty
/// list when no positive solution exists (and for parameter combinations
/// where the determinant vanishes identically, where every `b` works).
pub fn solve_b_for_free_constraint(nprime: usize, a: &BigReal, k: u32) -> Result<Vec<BigReal>> {
    let digits = a.digits();
    let node_count = nprime + 3; // interpolates any polynomial of degree <= n'+2
    let mut nodes = Vec::with_capacity(node_count);
    let mut values = Vec::with_capacity(node_count);
    for j in 0..node_count {
        let q = a.int_like(j as i64 + 1);
        let b = q.square().div_i(2);
        let energy = q.mul_i(2 * nprime as i64 + k as i64).div_i(2);
        let _ = b;
        let ode = free_f_ode(a, &q, k, &energy);
        let entries = band_entries_14(&ode, nprime + 1);
        values.push(band_determinant(&entries, nprime + 1)?);
        nodes.push(q);
    }
    if values.iter().all(|v| v.is_zero()) {
        // Degenerate direction (for example a = 0 at even degree): the
        // constraint holds for every b, so no isolated solutions exist.
        return Ok(Vec::new());
    }
    // Interpolation overshoots the true degree, leaving rounding noise in
    // the top coefficients; trim it so the root bound stays meaningful.
    let interpolated = lagrange_interpolate(&nodes, &values);
    let coeffs = match effective_degree(&interpolated) {
        None | Some(0) => return Ok(Vec::new()),
        Some(deg) => &interpolated[..=deg],
    };
    let lo = a.int_like(0);
    let hi = &cauchy_root_bound(coeffs) + &a.int_like(1);
    let tol = &hi * &BigReal::parse(&format!("1e-{}", digits.saturating_sub(5)), digits).unwrap();
    let q_roots = poly_real_roots_in(coeffs, &lo, &hi, &tol)?;
    Ok(q_roots.iter().map(|q| q.square().div_i(2)).collect())
}

/// Construct the degree-`nprime` free solution.  Fails when the constraint
/// is not satisfied at the spec's parameters.
pub fn free_solution(nprime: usize, spec: &ProblemSpec) -> Result<RadialSolution> {
    let report = free_constraint(nprime, spec)?;
    if !report.satisfied {
        let worst = report
            .residuals
            .iter()
            .map(|r| r.abs())
            .fold(spec.a().int_like(0), |m, r| m.max_of(&r));
        return Err(Error::NotExactlySolvable {
            residual: worst.to_decimal_string(8),
        });
    }
    let q = spec.sqrt_2b();
    let a = spec.a();
    let ki = spec.k() as i64;
    // Three-term downward recurrence for the coefficients:
    // c_{i+1} = -(2a c_i + 2q (n' - i + 1) c_{i-1}) / ((i+1)(i+k-1)).
    let mut coeffs = Vec::with_capacity(nprime + 1);
    coeffs.push(a.int_like(1));
    for i in 0..nprime {
        let ii = i as i64;
        let mut numer = &a.mul_i(2) * &coeffs[i];
        if i >= 1 {
            numer = &numer + &(&q.mul_i(2 * (nprime as i64 - ii + 1)) * &coeffs[i - 1]);
        }
        let den = a.int_like((ii + 1) * (ii + ki - 1));
        coeffs.push(-&(&numer / &den));
    }
    Ok(RadialSolution {
        power: a.ratio_like(ki - 1, 2),
        gauss_width: q.div_i(2),
        box_factor: None,
        poly: coeffs,
        energy: report.necessary_energy,
    })
}

/// Real roots of a polynomial on `(0, upper)` — or `(0, ∞)` when `upper` is
/// `None` — ascending, together with the Descartes sign-variation upper
/// bound on the count of positive roots.
pub fn poly_real_roots(
    poly: &[BigReal],
    upper: Option<&BigReal>,
) -> Result<(Vec<BigReal>, usize)> {
    let digits = poly[0].digits();
    let trimmed = match effective_degree(poly) {
        None | Some(0) => return Ok((Vec::new(), 0)),
        Some(deg) => &poly[..=deg],
    };
    let hi = match upper {
        Some(u) => u.clone(),
        None => &cauchy_root_bound(trimmed) + &poly[0].int_like(1),
    };
    let lo = poly[0].int_like(0);
    let tol = &hi * &BigReal::parse(&format!("1e-{}", digits.saturating_sub(5)), digits).unwrap();
    let roots = poly_real_roots_in(trimmed, &lo, &hi, &tol)?;
    Ok((roots, descartes_sign_changes(trimmed)))
}

fn bounded_radius(spec: &ProblemSpec) -> Result<BigReal> {
    match spec.radius() {
        Radius::Bounded(r) => Ok(r.clone()),
        Radius::Free => Err(Error::InvalidSpec(
            "a confined-catalog operation needs a bounded domain".to_string(),
        )),
    }
}

/// Constraint report for a degree-`n` confined polynomial solution: the two
/// closure residuals of the quartic/cubic-class system at the candidate
/// energy.
pub fn confined_constraint(n: usize, spec: &ProblemSpec) -> Result<ConstraintReport> {
    let radius = bounded_radius(spec)?;
    let q = spec.sqrt_2b();
    let energy = confined_energy_candidate(n, spec);
    let ode = confined_f_ode(spec.a(), &q, spec.k(), &radius, &energy);
    let (r1, r2) = sufficiency_residuals_54(&ode, n)?;
    Ok(make_report(energy, vec![r1, r2], spec.digits()))
}

/// Closed-form exactly-solvable confined parameter family of degree `n`
/// (`0` or `1`) at index `k` and wall radius `R`:
///
/// * `n = 0`: `a = (k-1)/(2R)`, `b = (k-1)^2/(8R^4)`,
///   `E = (k-1)(k+2)/(4R^2)` (branch ignored);
/// * `n = 1`: `a = (2k-1 ± w)/(2R)`, `b = (k ± w)^2/(8R^4)`,
///   `E = (k+4)(k ± w)/(4R^2)` with `w = sqrt(2k-1)`.
///
/// Degrees `n >= 2` have no printed closed form (the constraints couple two
/// cubics) and are rejected.
pub fn confined_parameter_family(
    n: usize,
    branch: Branch,
    k: u32,
    radius: &BigReal,
) -> Result<FamilyPoint> {
    if k < 2 {
        return Err(Error::InvalidSpec(format!(
            "index k must be >= 2 (got {k})"
        )));
    }
    if !radius.is_positive() {
        return Err(Error::InvalidSpec(
            "wall radius R must be positive".to_string(),
        ));
    }
    let ki = k as i64;
    let r2 = radius.square();
    let r4 = r2.square();
    match n {
        0 => {
            let a = radius.int_like(ki - 1).div_i(2) / radius.clone();
            let b = &radius.int_like((ki - 1) * (ki - 1)) / &r4.mul_i(8);
            let energy = &radius.int_like((ki - 1) * (ki + 2)) / &r2.mul_i(4);
            Ok(FamilyPoint { a, b, energy })
        }
        1 => {
            let w = radius.int_like(2 * ki - 1).sqrt();
            let a = &branch.combine(&radius.int_like(2 * ki - 1), &w) / &radius.mul_i(2);
            let kw = branch.combine(&radius.int_like(ki), &w);
            let b = &kw.square() / &r4.mul_i(8);
            let energy = &kw.mul_i(ki + 4) / &r2.mul_i(4);
            Ok(FamilyPoint { a, b, energy })
        }
        _ => Err(Error::UnsupportedFamily { n }),
    }
}

/// Construct the degree-`n` confined solution (with the wall factor).
/// Fails when the constraint is not satisfied at the spec's parameters.
pub fn confined_solution(n: usize, spec: &ProblemSpec) -> Result<RadialSolution> {
    let radius = bounded_radius(spec)?;
    let report = confined_constraint(n, spec)?;
    if !report.satisfied {
        let worst = report
            .residuals
            .iter()
            .map(|r| r.abs())
            .fold(spec.a().int_like(0), |m, r| m.max_of(&r));
        return Err(Error::NotExactlySolvable {
            residual: worst.to_decimal_string(8),
        });
    }
    let q = spec.sqrt_2b();
    let ode = confined_f_ode(spec.a(), &q, spec.k(), &radius, &report.necessary_energy);
    let poly = poly_coeffs_54(&ode, n)?;
    Ok(RadialSolution {
        power: spec.a().ratio_like(spec.k() as i64 - 1, 2),
        gauss_width: q.div_i(2),
        box_factor: Some(radius),
        poly,
        energy: report.necessary_energy,
    })
}

/// Residual coefficients of the governing polynomial-factor ODE applied to
/// a constructed solution — all must vanish to working precision.
pub fn solution_ode_residuals(sol: &RadialSolution, spec: &ProblemSpec) -> Result<Vec<BigReal>> {
    let q = sol.gauss_width.mul_i(2); // sqrt(2b) = 2 sqrt(b/2)
    match &sol.box_factor {
        None => {
            let ode = free_f_ode(spec.a(), &q, spec.k(), &sol.energy);
            Ok(ode_residual_14(&ode, &sol.poly))
        }
        Some(radius) => {
            let ode = confined_f_ode(spec.a(), &q, spec.k(), radius, &sol.energy);
            Ok(ode_residual_54(&ode, &sol.poly))
        }
    }
}

/// Link the nodes of a free exact solution to confined problems: for each
/// positive node `ρ` of the degree-`nprime` free solution, the confined
/// problem with the same `(a, b)` and wall `R = ρ` has the free energy in
/// its spectrum (the truncated wavefunction already vanishes there).  Each
/// pair `(ρ, E)` is verified by running the eigensolver on the box problem;
/// a disagreement is an error.  Solutions without positive nodes (e.g.
/// `a < 0` at degree 1) yield an empty list.
pub fn confined_free_node_link(
    nprime: usize,
    spec_free: &ProblemSpec,
) -> Result<Vec<(BigReal, BigReal)>> {
    if matches!(spec_free.radius(), Radius::Bounded(_)) {
        return Err(Error::InvalidSpec(
            "node linking starts from a free-domain problem".to_string(),
        ));
    }
    let sol = free_solution(nprime, spec_free)?;
    let (nodes, _) = sol.nodes()?;
    let digits = spec_free.digits();
    let solve_tol = BigReal::parse(&format!("1e-{}", digits / 2), digits).unwrap();
    let match_tol = BigReal::parse(&format!("1e-{}", digits / 3), digits).unwrap();
    let mut out = Vec::with_capacity(nodes.len());
    for (i, node) in nodes.iter().enumerate() {
        let conf = ProblemSpec::new(
            spec_free.a().clone(),
            spec_free.b().clone(),
            spec_free.d(),
            spec_free.l(),
            Radius::Bounded(node.clone()),
            digits,
        )?;
        // i nodes lie strictly inside (0, node), so the shared level is the
        // i-th box eigenvalue.
        let found = aim::eigenvalue(&conf, i, &solve_tol)?;
        let gap = (&found.energy - &sol.energy).abs();
        let scale = sol.energy.abs().max_of(&sol.energy.int_like(1));
        if gap > &match_tol * &scale {
            return Err(Error::NodeLinkMismatch {
                radius: node.to_decimal_string(20),
                confined: found.energy.to_decimal_string(25),
                free: sol.energy.to_decimal_string(25),
            });
        }
        out.push((node.clone(), sol.energy.clone()));
    }
    Ok(out)
}

/// Degree-2 confined families at index `k` and wall `R`, found numerically:
/// seeded by scaling free degree-3 solutions so one node lands on the wall,
/// then polished by a damped 2-D Newton iteration on `(a, q)` driving the
/// closure-residual pair to zero.
pub fn confined_family_degree2(k: u32, radius: &BigReal) -> Result<Vec<FamilyPoint>> {
    let digits = radius.digits();
    let one = radius.int_like(1);
    let mut points: Vec<FamilyPoint> = Vec::new();
    for branch in [Branch::Minus, Branch::Plus] {
        // Free degree-3 constraint at a = 1 solved for q = sqrt(2b):
        // q = 2 (5k ± sqrt(16 k^2 + 9)) / (9 (k^2 - 1)).
        let ki = k as i64;
        let rad = radius.int_like(16 * ki * ki + 9).sqrt();
        let q0 = branch
            .combine(&radius.int_like(5 * ki), &rad)
            .mul_i(2)
            .div_i(9 * (ki * ki - 1));
        if !q0.is_positive() {
            continue;
        }
        let b0 = q0.square().div_i(2);
        let free_spec = ProblemSpec::new(one.clone(), b0, k, 0, Radius::Free, digits)?;
        let sol = free_solution(3, &free_spec)?;
        let (nodes, _) = sol.nodes()?;
        for node in &nodes {
            let sigma = node / radius;
            let a_seed = sigma.clone(); // a0 = 1
            let q_seed = &q0 * &sigma.square();
            if let Ok((a, q)) = polish_confined_family(2, k, radius, &a_seed, &q_seed) {
                let point = FamilyPoint {
                    b: q.square().div_i(2),
                    energy: q.mul_i(ki + 6).div_i(2),
                    a,
                };
                let tol = satisfaction_tolerance(digits);
                let dup = points
                    .iter()
                    .any(|p| (&p.a - &point.a).abs() <= &tol * &point.a.abs().max_of(&one));
                if !dup {
                    points.push(point);
                }
            }
        }
    }
    points.sort_by(|x, y| x.a.partial_cmp(&y.a).unwrap());
    Ok(points)
}

/// Newton iteration on `(a, q)` for the degree-`n` confined closure pair,
/// with a numerically differenced Jacobian.
fn polish_confined_family(
    n: usize,
    k: u32,
    radius: &BigReal,
    a0: &BigReal,
    q0: &BigReal,
) -> Result<(BigReal, BigReal)> {
    let digits = radius.digits();
    let bits = radius.prec_bits() as i32;
    let one = radius.int_like(1);
    let h_rel = radius.f64_like(2.0).pow_i(-bits / 3);
    let tol = BigReal::parse(&format!("1e-{}", digits / 2 + 5), digits).unwrap();
    let pair = |a: &BigReal, q: &BigReal| -> Result<(BigReal, BigReal)> {
        let energy = q.mul_i(2 * n as i64 + k as i64 + 2).div_i(2);
        let ode = confined_f_ode(a, q, k, radius, &energy);
        sufficiency_residuals_54(&ode, n)
    };
    let mut a = a0.clone();
    let mut q = q0.clone();
    for _ in 0..48 {
        let (f1, f2) = pair(&a, &q)?;
        if f1.abs() <= tol && f2.abs() <= tol {
            return Ok((a, q));
        }
        let ha = &a.abs().max_of(&one) * &h_rel;
        let hq = &q.abs().max_of(&one) * &h_rel;
        let (f1ap, f2ap) = pair(&(&a + &ha), &q)?;
        let (f1am, f2am) = pair(&(&a - &ha), &q)?;
        let (f1qp, f2qp) = pair(&a, &(&q + &hq))?;
        let (f1qm, f2qm) = pair(&a, &(&q - &hq))?;
        let j11 = &(&f1ap - &f1am) / &ha.mul_i(2);
        let j21 = &(&f2ap - &f2am) / &ha.mul_i(2);
        let j12 = &(&f1qp - &f1qm) / &hq.mul_i(2);
        let j22 = &(&f2qp - &f2qm) / &hq.mul_i(2);
        let det = &(&j11 * &j22) - &(&j12 * &j21);
        if det.is_zero() {
            return Err(Error::NotExactlySolvable {
                residual: f1.abs().max_of(&f2.abs()).to_decimal_string(8),
            });
        }
        let da = &(&(&f1 * &j22) - &(&f2 * &j12)) / &det;
        let dq = &(&(&j11 * &f2) - &(&j21 * &f1)) / &det;
        a = &a - &da;
        q = &q - &dq;
        if !q.is_positive() {
            return Err(Error::NotExactlySolvable {
                residual: "iteration left the b > 0 domain".to_string(),
            });
        }
    }
    Err(Error::NonConvergence {
        n_max: 48,
        drift: "closure-pair Newton iteration stalled".to_string(),
    })
}
