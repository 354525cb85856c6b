//! Iterative eigensolver for the radial problem
//!
//! ```text
//! -u''/2 + [ (k-1)(k-3)/(8 r^2) - a/r + b r^2 ] u = E u,     k = d + 2 l,
//! ```
//!
//! on `(0, ∞)` (free) or `(0, R)` with `u(R) = 0` (confined).
//!
//! Factoring `u = r^((k-1)/2) e^(-sqrt(2b) r^2 / 2) f` (free) or
//! `u = r^((k-1)/2) (R - r) e^(-sqrt(2b) r^2 / 2) f` (confined) reduces the
//! problem to a linear second-order equation `f'' = λ0 f' + s0 f` with
//! rational coefficients.  The iteration
//!
//! ```text
//! λ_n = λ_{n-1}' + s_{n-1} + λ0 λ_{n-1},      s_n = s_{n-1}' + s0 λ_{n-1}
//! ```
//!
//! terminates on square-integrable solutions: the quantization condition is
//! the vanishing of `δ_N(E) = λ_N s_{N-1} - λ_{N-1} s_N` evaluated at a seed
//! point `r0`, for `N` large enough.  Eigenvalues are located by a sign-change
//! scan of `δ_N` at a moderate `N` and polished on an increasing ladder of
//! `N` until two successive refinements agree to tolerance.
//!
//! All series arithmetic is carried out on truncated Taylor expansions about
//! `r0` at the precision requested in the problem specification; each
//! iteration consumes one Taylor order.

use crate::batch::{map_collect, ExecMode};
use crate::bounds;
use crate::error::{Error, Result};
use crate::numerics::bigreal::BigReal;
use crate::numerics::roots::{find_root, Bracket};
use crate::numerics::series::{series_from_rational, TruncatedSeries};

/// Domain of the radial problem.
#[derive(Clone, Debug)]
pub enum Radius {
    /// Half line `(0, ∞)`.
    Free,
    /// Box `(0, R)` with a Dirichlet wall at `R > 0`.
    Bounded(BigReal),
}

/// A fully specified radial problem: potential parameters `a` and `b > 0`,
/// dimension `d >= 2`, angular momentum `l >= 0`, domain, and working
/// precision in decimal digits.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    a: BigReal,
    b: BigReal,
    d: u32,
    l: u32,
    radius: Radius,
    digits: u32,
}

impl ProblemSpec {
    pub fn new(
        a: BigReal,
        b: BigReal,
        d: u32,
        l: u32,
        radius: Radius,
        digits: u32,
    ) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidSpec(format!(
                "dimension d must be >= 2 (got {d})"
            )));
        }
        if !b.is_positive() {
            return Err(Error::UnsupportedParameter(
                "the oscillator coefficient b must be positive (b = 0 is the pure Coulomb \
                 problem, b < 0 has no discrete spectrum)"
                    .to_string(),
            ));
        }
        if let Radius::Bounded(r) = &radius {
            if !r.is_positive() {
                return Err(Error::InvalidSpec(
                    "box radius R must be positive".to_string(),
                ));
            }
        }
        if digits < 10 {
            return Err(Error::InvalidSpec(
                "working precision below 10 digits is not supported".to_string(),
            ));
        }
        Ok(ProblemSpec {
            a,
            b,
            d,
            l,
            radius,
            digits,
        })
    }

    pub fn a(&self) -> &BigReal {
        &self.a
    }

    pub fn b(&self) -> &BigReal {
        &self.b
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn radius(&self) -> &Radius {
        &self.radius
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Effective radial index `k = d + 2 l`.
    pub fn k(&self) -> u32 {
        self.d + 2 * self.l
    }

    /// `sqrt(2 b)` at working precision.
    pub fn sqrt_2b(&self) -> BigReal {
        self.b.mul_i(2).sqrt()
    }

    /// Default seed point: `3` on the half line, `R/2` in a box.
    pub fn default_seed_point(&self) -> BigReal {
        match &self.radius {
            Radius::Free => self.a.int_like(3),
            Radius::Bounded(r) => r.div_i(2),
        }
    }
}

/// Coefficient pair `(λ0, s0)` of `f'' = λ0 f' + s0 f`, Taylor-expanded
/// about the seed point.
#[derive(Clone, Debug)]
pub struct AimState {
    pub lambda: TruncatedSeries,
    pub s: TruncatedSeries,
}

fn check_seed_point_free(r0: &BigReal) -> Result<()> {
    if !r0.is_positive() {
        return Err(Error::SeedPoint {
            r0: r0.to_decimal_string(12),
            interval: "(0, inf)".to_string(),
        });
    }
    Ok(())
}

fn check_seed_point_confined(r0: &BigReal, radius: &BigReal) -> Result<()> {
    if !r0.is_positive() || r0 >= radius {
        return Err(Error::SeedPoint {
            r0: r0.to_decimal_string(12),
            interval: format!("(0, {})", radius.to_decimal_string(12)),
        });
    }
    Ok(())
}

/// Seed coefficients for the free problem at energy `E`:
///
/// ```text
/// λ0 = 2 sqrt(2b) r - (k-1)/r,
/// s0 = -(2E - k sqrt(2b)) - 2a/r .
/// ```
pub fn seed_free(
    spec: &ProblemSpec,
    energy: &BigReal,
    r0: &BigReal,
    order: usize,
) -> Result<AimState> {
    check_seed_point_free(r0)?;
    let k = spec.k() as i64;
    let s2b = spec.sqrt_2b();
    let zero = spec.a.int_like(0);
    let lam_num = [spec.a.int_like(-(k - 1)), zero.clone(), s2b.mul_i(2)];
    let lambda = series_from_rational(&lam_num, &[(zero.clone(), 1)], r0, order)?;
    // 2E - k sqrt(2b)
    let shift = &energy.mul_i(2) - &s2b.mul_i(k);
    let s_num = [-&spec.a.mul_i(2), -&shift];
    let s = series_from_rational(&s_num, &[(zero, 1)], r0, order)?;
    Ok(AimState { lambda, s })
}

/// Seed coefficients for the confined problem at energy `E`:
///
/// ```text
/// λ0 = -2 [ (k-1)/(2r) - 1/(R-r) - sqrt(2b) r ],
/// s0 = t2(r) / (r (R - r)),
/// t2(r) = (2E - (k+2) s) r^2 - (R (2E - k s) - 2a) r - (2Ra - k + 1),
/// ```
///
/// with `s = sqrt(2b)`, both expanded as rational functions with simple
/// poles at `0` and `R`.
pub fn seed_confined(
    spec: &ProblemSpec,
    energy: &BigReal,
    r0: &BigReal,
    order: usize,
) -> Result<AimState> {
    let radius = match &spec.radius {
        Radius::Bounded(r) => r.clone(),
        Radius::Free => {
            return Err(Error::InvalidSpec(
                "confined seed requested for a free-domain problem".to_string(),
            ))
        }
    };
    check_seed_point_confined(r0, &radius)?;
    let k = spec.k() as i64;
    let s2b = spec.sqrt_2b();
    let zero = spec.a.int_like(0);
    let poles = [(zero.clone(), 1u32), (radius.clone(), 1u32)];
    // Numerators relative to the denominator r (r - R) = -r (R - r).
    let lam_num = [
        radius.mul_i(k - 1),
        spec.a.int_like(-(k + 1)),
        -&(&s2b.mul_i(2) * &radius),
        s2b.mul_i(2),
    ];
    let lambda = series_from_rational(&lam_num, &poles, r0, order)?;
    let shift_k = &energy.mul_i(2) - &s2b.mul_i(k); // 2E - k s
    let shift_k2 = &energy.mul_i(2) - &s2b.mul_i(k + 2); // 2E - (k+2) s
    let s_num = [
        &(&radius * &spec.a).mul_i(2) - &spec.a.int_like(k - 1),
        &(&radius * &shift_k) - &spec.a.mul_i(2),
        -&shift_k2,
    ];
    let s = series_from_rational(&s_num, &poles, r0, order)?;
    Ok(AimState { lambda, s })
}

/// Run `n` iterations from the seed pair and return the termination value
/// `δ_n = λ_n s_{n-1} - λ_{n-1} s_n` (constant terms at the seed point).
pub fn iterate_delta(state0: &AimState, n: usize) -> Result<BigReal> {
    iterate_delta_scaled(state0, n).map(|(delta, _)| delta)
}

/// As [`iterate_delta`], additionally returning the natural scale
/// `|λ_n s_{n-1}| + |λ_{n-1} s_n|` for relative-residual reporting.
pub fn iterate_delta_scaled(state0: &AimState, n: usize) -> Result<(BigReal, BigReal)> {
    if n == 0 {
        return Err(Error::InvalidSpec(
            "termination value needs at least one iteration".to_string(),
        ));
    }
    if state0.lambda.order() < n || state0.s.order() < n {
        return Err(Error::InsufficientOrder {
            order: state0.lambda.order().min(state0.s.order()),
            iterations: n,
        });
    }
    let lam0 = &state0.lambda;
    let s0 = &state0.s;
    let mut lam_prev = lam0.clone();
    let mut s_prev = s0.clone();
    let mut lam_cur;
    let mut s_cur;
    // Values at the seed point after the final iteration.
    let (delta, scale);
    let mut step = 1usize;
    loop {
        let target = lam_prev.order() - 1;
        let lam_term = lam0.mul_to(&lam_prev, target);
        lam_cur = lam_prev
            .differentiate()
            .add(&s_prev)
            .add(&lam_term);
        let s_term = s0.mul_to(&lam_prev, target);
        s_cur = s_prev.differentiate().add(&s_term);
        if step == n {
            let t1 = lam_cur.constant_term() * s_prev.constant_term();
            let t2 = lam_prev.constant_term() * s_cur.constant_term();
            delta = &t1 - &t2;
            scale = &t1.abs() + &t2.abs();
            break;
        }
        lam_prev = lam_cur;
        s_prev = s_cur;
        step += 1;
    }
    Ok((delta, scale))
}

/// One converged eigenvalue.
#[derive(Clone, Debug)]
pub struct EigenvalueResult {
    /// The eigenvalue.
    pub energy: BigReal,
    /// Its ordinal in the spectrum at fixed `l` (0 = lowest).
    pub n_index: usize,
    /// Iteration count `N` at which the ladder accepted the value.
    pub iterations: usize,
    /// Relative termination residual at the accepted energy:
    /// `|δ_N| / (|λ_N s_{N-1}| + |λ_{N-1} s_N|)`.
    pub residual: BigReal,
    /// Estimated correct significant digits, from the last ladder drift.
    pub digits_converged: u32,
}

/// Tuning knobs of the eigenvalue search.
#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Seed point override (default: `3` free, `R/2` confined).
    pub r0: Option<BigReal>,
    /// Iteration count used for the initial sign-change scan.
    pub n_start: usize,
    /// Ladder increment between refinement stages.
    pub n_step: usize,
    /// Hard iteration budget; exceeding it is a convergence failure.
    pub n_max: usize,
    /// Interpret the tolerance relative to `max(1, |E|)` (default) rather
    /// than absolutely.
    pub relative_tol: bool,
    /// Execution mode for multi-eigenvalue refinement.
    pub exec: ExecMode,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            r0: None,
            n_start: 16,
            n_step: 5,
            n_max: 201,
            relative_tol: true,
            exec: ExecMode::Auto,
        }
    }
}

/// Termination value `δ_N(E)` for the problem, at iteration count `n` and
/// series order `n + 2`.
fn delta_at(
    spec: &ProblemSpec,
    r0: &BigReal,
    energy: &BigReal,
    n: usize,
) -> Result<(BigReal, BigReal)> {
    let order = n + 2;
    let state = match &spec.radius {
        Radius::Free => seed_free(spec, energy, r0, order)?,
        Radius::Bounded(_) => seed_confined(spec, energy, r0, order)?,
    };
    iterate_delta_scaled(&state, n)
}

fn tol_abs_for(tol: &BigReal, energy: &BigReal, relative: bool) -> BigReal {
    if relative {
        let one = energy.int_like(1);
        tol * &one.max_of(&energy.abs())
    } else {
        tol.clone()
    }
}

/// Scan upward from below the spectrum until `need` sign-change roots of
/// the termination value are bracketed and coarsely refined.  The scan's
/// iteration count starts at `n_scan` (grown with `need`, since the
/// termination value at small `N` does not yet resolve high-lying roots)
/// and escalates whenever a pass marches past where roots were expected.
fn scan_roots(
    spec: &ProblemSpec,
    r0: &BigReal,
    n_start: usize,
    n_max: usize,
    need: usize,
) -> Result<Vec<BigReal>> {
    let s2b = spec.sqrt_2b();
    // The free-problem envelope lower bound also floors the confined
    // spectrum (shrinking the domain raises every eigenvalue).
    let qn = bounds::QuantumNumbers {
        n: 0,
        l: spec.l,
        d: spec.d,
    };
    let (env_lo, _) = bounds::envelope_bounds(&qn, &spec.a, &spec.b)?;
    let pad = &s2b.div_i(2) + &(&env_lo.abs() + &env_lo.int_like(1)).div_i(20);
    let start = &env_lo - &pad;

    let mut n_scan = n_start + 3 * need.saturating_sub(1);
    let scan_cap = n_max.min(120);
    loop {
        match scan_pass(spec, r0, n_scan, need, &start, &s2b) {
            Ok(roots) => return Ok(roots),
            Err(err) => {
                if n_scan >= scan_cap {
                    return Err(err);
                }
                n_scan = (n_scan + (n_scan / 2).max(8)).min(scan_cap);
            }
        }
    }
}

/// One scan pass at fixed iteration count.  Fails (for escalation) when the
/// march runs too far beyond the last found root without a new crossing.
fn scan_pass(
    spec: &ProblemSpec,
    r0: &BigReal,
    n_scan: usize,
    need: usize,
    start: &BigReal,
    s2b: &BigReal,
) -> Result<Vec<BigReal>> {
    let coarse = BigReal::parse("1e-8", spec.digits).unwrap();
    let mut roots: Vec<BigReal> = Vec::with_capacity(need);
    let min_step = s2b.div_i(2).max_of(&s2b.f64_like(0.3));
    let mut step = min_step.clone();
    let mut e_prev = start.clone();
    let (mut f_prev, _) = delta_at(spec, r0, &e_prev, n_scan)?;
    if f_prev.is_zero() {
        e_prev = &e_prev + &min_step.div_i(17);
        f_prev = delta_at(spec, r0, &e_prev, n_scan)?.0;
    }
    // Evaluations since the last crossing: past this, the pass has lost a
    // root to truncation at this iteration count and must escalate.
    let march_limit = 64 + 32 * need;
    let mut since_root = 0usize;
    while roots.len() < need {
        if since_root > march_limit {
            return Err(Error::BracketNoSignChange {
                lo: start.to_decimal_string(12),
                hi: e_prev.to_decimal_string(12),
                detail: format!(
                    "; scan at N = {n_scan} found {} of {need} roots before stalling",
                    roots.len()
                ),
            });
        }
        let e_next = &e_prev + &step;
        let (f_next, _) = delta_at(spec, r0, &e_next, n_scan)?;
        since_root += 1;
        let crossing = f_next.is_zero() || f_next.signum_i() != f_prev.signum_i();
        if crossing {
            let root = if f_next.is_zero() {
                e_next.clone()
            } else {
                let bracket = Bracket::new(e_prev.clone(), e_next.clone())?;
                let tol = tol_abs_for(&coarse, &e_next, true);
                let mut g = |e: &BigReal| delta_at(spec, r0, e, n_scan).map(|(d, _)| d);
                find_root(&mut g, &bracket, &tol)?
            };
            if let Some(prev_root) = roots.last() {
                let gap = &root - prev_root;
                step = s2b.div_i(16).max_of(&gap.div_i(4));
            }
            roots.push(root);
            since_root = 0;
        }
        e_prev = e_next;
        if f_next.is_zero() {
            // Step off the exact zero so the next comparison has a sign.
            e_prev = &e_prev + &step.div_i(17);
            f_prev = delta_at(spec, r0, &e_prev, n_scan)?.0;
        } else {
            f_prev = f_next;
        }
    }
    Ok(roots)
}

/// Polish one scanned root on the iteration ladder until two successive
/// stages agree within tolerance.
fn refine_root(
    spec: &ProblemSpec,
    r0: &BigReal,
    n_index: usize,
    e_scan: &BigReal,
    tol: &BigReal,
    opts: &SolverOptions,
    neighbor_gap: Option<&BigReal>,
) -> Result<EigenvalueResult> {
    let mut e_prev = e_scan.clone();
    // Initial drift guess: the coarse scan tolerance.
    let mut drift = tol_abs_for(
        &BigReal::parse("1e-7", spec.digits).unwrap(),
        &e_prev,
        true,
    );
    let mut n = opts.n_start;
    loop {
        n += opts.n_step;
        if n > opts.n_max {
            return Err(Error::NonConvergence {
                n_max: opts.n_max,
                drift: drift.to_decimal_string(8),
            });
        }
        let tol_abs = tol_abs_for(tol, &e_prev, opts.relative_tol);
        // Local bracket around the previous stage's root.
        let floor = tol_abs.mul_i(8);
        let mut h = drift.mul_i(8).max_of(&floor);
        let cap = neighbor_gap.map(|g| &g.mul_i(9) / &g.int_like(20));
        if let Some(cap) = &cap {
            h = h.min_of(cap);
        }
        let mut bracket = None;
        for _ in 0..18 {
            let lo = &e_prev - &h;
            let hi = &e_prev + &h;
            let (f_lo, _) = delta_at(spec, r0, &lo, n)?;
            let (f_hi, _) = delta_at(spec, r0, &hi, n)?;
            if f_lo.is_zero() || f_hi.is_zero() || f_lo.signum_i() != f_hi.signum_i() {
                bracket = Some((lo, hi));
                break;
            }
            let widened = h.mul_i(3);
            match &cap {
                Some(cap) if &widened > cap => {
                    if &h >= cap {
                        break;
                    }
                    h = cap.clone();
                }
                _ => h = widened,
            }
        }
        let (lo, hi) = bracket.ok_or_else(|| Error::BracketNoSignChange {
            lo: (&e_prev - &h).to_decimal_string(14),
            hi: (&e_prev + &h).to_decimal_string(14),
            detail: format!("; ladder stage N = {n} lost the root near index {n_index}"),
        })?;
        let mut g = |e: &BigReal| delta_at(spec, r0, e, n).map(|(d, _)| d);
        let width_tol = tol_abs.div_i(8);
        let bracket = Bracket::new(lo, hi)?;
        let e_n = find_root(&mut g, &bracket, &width_tol)?;
        let drift_new = (&e_n - &e_prev).abs();
        if drift_new <= tol_abs {
            let (delta, scale) = delta_at(spec, r0, &e_n, n)?;
            let residual = if scale.is_zero() {
                delta.abs()
            } else {
                &delta.abs() / &scale
            };
            let rel_drift = &drift_new.max_of(&width_tol)
                / &e_n.abs().max_of(&e_n.int_like(1));
            let digits_est = -rel_drift.log10_abs_f64();
            let digits_converged = if digits_est.is_finite() {
                digits_est.max(0.0).min(spec.digits as f64) as u32
            } else {
                spec.digits
            };
            return Ok(EigenvalueResult {
                energy: e_n,
                n_index,
                iterations: n,
                residual,
                digits_converged,
            });
        }
        drift = drift_new.max_of(&tol_abs.div_i(100));
        e_prev = e_n;
    }
}

/// The `n_index`-th eigenvalue (0 = lowest at the given `l`), to tolerance
/// `tol` (relative by default), with default options.
pub fn eigenvalue(spec: &ProblemSpec, n_index: usize, tol: &BigReal) -> Result<EigenvalueResult> {
    eigenvalue_with_options(spec, n_index, tol, &SolverOptions::default())
}

/// The `n_index`-th eigenvalue with explicit solver options.
pub fn eigenvalue_with_options(
    spec: &ProblemSpec,
    n_index: usize,
    tol: &BigReal,
    opts: &SolverOptions,
) -> Result<EigenvalueResult> {
    if !tol.is_positive() {
        return Err(Error::InvalidSpec("tolerance must be positive".to_string()));
    }
    let r0 = seed_point(spec, opts)?;
    let roots = scan_roots(spec, &r0, opts.n_start, opts.n_max, n_index + 1)?;
    let gap = neighbor_gap(&roots, n_index);
    refine_root(
        spec,
        &r0,
        n_index,
        &roots[n_index],
        tol,
        opts,
        gap.as_ref(),
    )
}

/// The lowest `count` eigenvalues at the given `l`, ascending, with default
/// options.
pub fn spectrum(spec: &ProblemSpec, count: usize, tol: &BigReal) -> Result<Vec<EigenvalueResult>> {
    spectrum_with_options(spec, count, tol, &SolverOptions::default())
}

/// The lowest `count` eigenvalues with explicit solver options.  Refinement
/// of the scanned roots runs through the batch driver (parallel in `Auto`
/// mode when the `parallel` feature is active).
pub fn spectrum_with_options(
    spec: &ProblemSpec,
    count: usize,
    tol: &BigReal,
    opts: &SolverOptions,
) -> Result<Vec<EigenvalueResult>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if !tol.is_positive() {
        return Err(Error::InvalidSpec("tolerance must be positive".to_string()));
    }
    let r0 = seed_point(spec, opts)?;
    let roots = scan_roots(spec, &r0, opts.n_start, opts.n_max, count)?;
    let tasks: Vec<usize> = (0..count).collect();
    let results = map_collect(opts.exec, tasks, |i| {
        let gap = neighbor_gap(&roots, i);
        refine_root(spec, &r0, i, &roots[i], tol, opts, gap.as_ref())
    });
    let mut out = Vec::with_capacity(count);
    for r in results {
        out.push(r?);
    }
    for i in 1..out.len() {
        if out[i].energy <= out[i - 1].energy {
            return Err(Error::SpectrumOrder {
                detail: format!(
                    "index {} refined to {} but index {} refined to {}",
                    i - 1,
                    out[i - 1].energy.to_decimal_string(20),
                    i,
                    out[i].energy.to_decimal_string(20)
                ),
            });
        }
    }
    Ok(out)
}

fn seed_point(spec: &ProblemSpec, opts: &SolverOptions) -> Result<BigReal> {
    let r0 = opts
        .r0
        .clone()
        .unwrap_or_else(|| spec.default_seed_point());
    match &spec.radius {
        Radius::Free => check_seed_point_free(&r0)?,
        Radius::Bounded(r) => check_seed_point_confined(&r0, r)?,
    }
    Ok(r0)
}

/// Distance to the nearest scanned neighbor of root `i`, if any.
fn neighbor_gap(roots: &[BigReal], i: usize) -> Option<BigReal> {
    let mut gap: Option<BigReal> = None;
    if i >= 1 {
        gap = Some(&roots[i] - &roots[i - 1]);
    }
    if i + 1 < roots.len() {
        let g = &roots[i + 1] - &roots[i];
        gap = Some(match gap {
            None => g,
            Some(old) => old.min_of(&g),
        });
    }
    gap
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_free(a_num: i64, digits: u32, d: u32, l: u32) -> ProblemSpec {
        ProblemSpec::new(
            BigReal::int(a_num, digits),
            BigReal::ratio(1, 2, digits),
            d,
            l,
            Radius::Free,
            digits,
        )
        .unwrap()
    }

    #[test]
    fn seed_constants_match_worked_example() {
        // a = 1, b = 1/2, k = 3 (d = 3, l = 0), E = 5/2, r0 = 3:
        // λ0(r0) = 16/3, s0(r0) = -8/3.
        let spec = spec_free(1, 50, 3, 0);
        let e = BigReal::ratio(5, 2, 50);
        let r0 = BigReal::int(3, 50);
        let state = seed_free(&spec, &e, &r0, 8).unwrap();
        let lam0 = state.lambda.constant_term();
        let s0 = state.s.constant_term();
        assert!((lam0 - &BigReal::ratio(16, 3, 50)).abs().to_f64() < 1e-45);
        assert!((s0 - &BigReal::ratio(-8, 3, 50)).abs().to_f64() < 1e-45);
        // Alternative seed point stays finite and pole-free.
        let r0b = BigReal::ratio(12, 5, 50);
        let state_b = seed_free(&spec, &e, &r0b, 8).unwrap();
        assert!(state_b.lambda.constant_term().is_finite());
    }

    #[test]
    fn seed_point_validation() {
        let spec = spec_free(1, 40, 3, 0);
        let e = BigReal::int(2, 40);
        let zero = BigReal::zero(40);
        assert!(matches!(
            seed_free(&spec, &e, &zero, 6),
            Err(Error::SeedPoint { .. })
        ));
        let conf = ProblemSpec::new(
            BigReal::int(1, 40),
            BigReal::ratio(1, 2, 40),
            3,
            0,
            Radius::Bounded(BigReal::int(1, 40)),
            40,
        )
        .unwrap();
        let outside = BigReal::int(2, 40);
        assert!(matches!(
            seed_confined(&conf, &e, &outside, 6),
            Err(Error::SeedPoint { .. })
        ));
    }

    #[test]
    fn confined_seed_closed_form_value() {
        // k = 3, R = 1, r0 = 1/2: λ0(r0) = sqrt(2b) exactly.
        let digits = 50;
        let conf = ProblemSpec::new(
            BigReal::int(2, digits),
            BigReal::int(2, digits),
            3,
            0,
            Radius::Bounded(BigReal::int(1, digits)),
            digits,
        )
        .unwrap();
        let e = BigReal::int(3, digits);
        let r0 = BigReal::ratio(1, 2, digits);
        let state = seed_confined(&conf, &e, &r0, 8).unwrap();
        let expect = conf.sqrt_2b();
        assert!((state.lambda.constant_term() - &expect).abs().to_f64() < 1e-44);
    }

    #[test]
    fn termination_vanishes_identically_on_exact_confined_solution() {
        // k = 3, R = 1: the degree-0 exact solution sits at a = 1,
        // b = 1/2, E = 5/2, where s0 vanishes identically.
        let digits = 50;
        let conf = ProblemSpec::new(
            BigReal::int(1, digits),
            BigReal::ratio(1, 2, digits),
            3,
            0,
            Radius::Bounded(BigReal::int(1, digits)),
            digits,
        )
        .unwrap();
        let e = BigReal::ratio(5, 2, digits);
        let r0 = BigReal::ratio(1, 2, digits);
        let state = seed_confined(&conf, &e, &r0, 12).unwrap();
        for n in 1..=8 {
            let delta = iterate_delta(&state, n).unwrap();
            assert!(
                delta.abs().to_f64() < 1e-40,
                "delta at n = {n}: {}",
                delta.to_f64()
            );
        }
    }

    #[test]
    fn insufficient_order_is_reported() {
        let spec = spec_free(1, 40, 3, 0);
        let e = BigReal::int(2, 40);
        let r0 = BigReal::int(3, 40);
        let state = seed_free(&spec, &e, &r0, 4).unwrap();
        assert!(matches!(
            iterate_delta(&state, 10),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn oscillator_spectrum_is_exact() {
        // a = 0: E_n = (2n + k) sqrt(b/2); with b = 1/2 and k = 3 the
        // lowest levels are 1.5, 3.5, 5.5.
        let spec = spec_free(0, 40, 3, 0);
        let tol = BigReal::parse("1e-25", 40).unwrap();
        let results = spectrum(&spec, 3, &tol).unwrap();
        for (i, res) in results.iter().enumerate() {
            let expect = BigReal::ratio(2 * i as i64 * 2 + 3, 2, 40);
            assert!(
                (&res.energy - &expect).abs().to_f64() < 1e-24,
                "level {i}: {} vs {}",
                res.energy.to_f64(),
                expect.to_f64()
            );
            assert!(res.iterations <= 66);
        }
    }

    #[test]
    fn free_ground_state_matches_reference() {
        // d = 3, l = 0, a = 1, b = 1/2: reference to 18 digits.
        let spec = spec_free(1, 45, 3, 0);
        let tol = BigReal::parse("1e-22", 45).unwrap();
        let res = eigenvalue(&spec, 0, &tol).unwrap();
        let reference = BigReal::parse("0.179668484653553873", 45).unwrap();
        assert!(
            (&res.energy - &reference).abs().to_f64() < 1e-17,
            "E = {}",
            res.energy.to_decimal_string(20)
        );
        assert!(res.residual.to_f64() < 1e-18);
        assert!(res.digits_converged >= 18);
    }
}
