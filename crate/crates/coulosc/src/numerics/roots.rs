//! Bracketing root finding (Illinois-damped regula falsi), golden-section
//! minimization with monotonicity detection, and real-root isolation for
//! polynomials via recursive critical-point subdivision.

use crate::error::{Error, Result};
use crate::numerics::bigreal::BigReal;

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub lo: BigReal,
    pub hi: BigReal,
}

impl Bracket {
    pub fn new(lo: BigReal, hi: BigReal) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::InvalidSpec(format!(
                "bracket endpoints must satisfy lo < hi (got lo = {}, hi = {})",
                lo.to_decimal_string(12),
                hi.to_decimal_string(12)
            )));
        }
        Ok(Bracket { lo, hi })
    }

    pub fn width(&self) -> BigReal {
        &self.hi - &self.lo
    }
}

fn eval_checked<F>(f: &mut F, x: &BigReal) -> Result<BigReal>
where
    F: FnMut(&BigReal) -> Result<BigReal>,
{
    let v = f(x)?;
    if !v.is_finite() {
        return Err(Error::NonFiniteEvaluation {
            at: x.to_decimal_string(20),
        });
    }
    Ok(v)
}

/// Find a root of `f` inside `bracket`, whose endpoint values must differ in
/// sign.  Deterministic Illinois-damped regula falsi with bisection
/// safeguards; terminates when the bracket width drops below `tol` (> 0).
pub fn find_root<F>(f: &mut F, bracket: &Bracket, tol: &BigReal) -> Result<BigReal>
where
    F: FnMut(&BigReal) -> Result<BigReal>,
{
    if !tol.is_positive() {
        return Err(Error::InvalidSpec(
            "root tolerance must be positive".to_string(),
        ));
    }
    let mut a = bracket.lo.clone();
    let mut b = bracket.hi.clone();
    let mut fa = eval_checked(f, &a)?;
    if fa.is_zero() {
        return Ok(a);
    }
    let mut fb = eval_checked(f, &b)?;
    if fb.is_zero() {
        return Ok(b);
    }
    if fa.signum_i() == fb.signum_i() {
        return Err(Error::BracketNoSignChange {
            lo: a.to_decimal_string(20),
            hi: b.to_decimal_string(20),
            detail: String::new(),
        });
    }
    // -1: `a` was retained last step, +1: `b` was, 0: fresh bracket.
    let mut retained = 0i32;
    let max_iters = 128usize + 4 * a.prec_bits().max(b.prec_bits()) as usize;
    for _ in 0..max_iters {
        let width = &b - &a;
        if &width <= tol {
            return Ok((&a + &b).div_i(2));
        }
        let margin = width.div_i(64);
        let denom = &fb - &fa;
        let secant = if denom.is_zero() {
            None
        } else {
            let c = &b - &(&(&fb * &width) / &denom);
            let lo_ok = &(&a + &margin);
            let hi_ok = &(&b - &margin);
            if &c >= lo_ok && &c <= hi_ok {
                Some(c)
            } else {
                None
            }
        };
        let c = match secant {
            Some(c) => c,
            None => (&a + &b).div_i(2),
        };
        let fc = eval_checked(f, &c)?;
        if fc.is_zero() {
            return Ok(c);
        }
        if fc.signum_i() == fa.signum_i() {
            a = c;
            fa = fc;
            if retained == 1 {
                // `b` kept twice in a row: damp its weight (Illinois step).
                fb = fb.div_i(2);
            }
            retained = 1;
        } else {
            b = c;
            fb = fc;
            if retained == -1 {
                fa = fa.div_i(2);
            }
            retained = -1;
        }
    }
    Err(Error::NonConvergence {
        n_max: max_iters,
        drift: (&b - &a).to_decimal_string(8),
    })
}

/// Golden-section minimization of a unimodal function on `bracket`.
///
/// Returns `(argmin, min)` once the interval width drops below `tol`.  If
/// every interval update collapses toward the same endpoint and that endpoint
/// value undercuts the best interior probe, the function is monotone on the
/// bracket (no interior minimum) and an error is returned.
pub fn minimize_unimodal<F>(
    f: &mut F,
    bracket: &Bracket,
    tol: &BigReal,
) -> Result<(BigReal, BigReal)>
where
    F: FnMut(&BigReal) -> Result<BigReal>,
{
    if !tol.is_positive() {
        return Err(Error::InvalidSpec(
            "minimization tolerance must be positive".to_string(),
        ));
    }
    let mut a = bracket.lo.clone();
    let mut b = bracket.hi.clone();
    // inverse golden ratio (sqrt(5) - 1)/2 at working precision
    let invphi = (a.int_like(5).sqrt() - a.int_like(1)).div_i(2);
    let mut x1 = &b - &(&invphi * &(&b - &a));
    let mut x2 = &a + &(&invphi * &(&b - &a));
    let mut f1 = eval_checked(f, &x1)?;
    let mut f2 = eval_checked(f, &x2)?;
    let mut collapsed_left = 0usize; // interval shrank toward the lower end
    let mut collapsed_right = 0usize;
    let max_iters = 64usize + 8 * a.prec_bits() as usize;
    for _ in 0..max_iters {
        if &(&b - &a) <= tol {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1.clone();
            f2 = f1.clone();
            x1 = &b - &(&invphi * &(&b - &a));
            f1 = eval_checked(f, &x1)?;
            collapsed_left += 1;
        } else {
            a = x1;
            x1 = x2.clone();
            f1 = f2.clone();
            x2 = &a + &(&invphi * &(&b - &a));
            f2 = eval_checked(f, &x2)?;
            collapsed_right += 1;
        }
    }
    let (xb, fb) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    if collapsed_right == 0 {
        let flo = eval_checked(f, &bracket.lo)?;
        if flo <= fb {
            return Err(Error::NotUnimodal { endpoint: "lower" });
        }
    }
    if collapsed_left == 0 {
        let fhi = eval_checked(f, &bracket.hi)?;
        if fhi <= fb {
            return Err(Error::NotUnimodal { endpoint: "upper" });
        }
    }
    Ok((xb, fb))
}

/// Evaluate a polynomial given by coefficients (constant term first) via
/// Horner's scheme.
pub fn poly_eval(c: &[BigReal], x: &BigReal) -> BigReal {
    let mut acc = match c.last() {
        Some(top) => top.clone(),
        None => x.int_like(0),
    };
    for j in (0..c.len().saturating_sub(1)).rev() {
        acc = &(&acc * x) + &c[j];
    }
    acc
}

/// Coefficients of the derivative polynomial.
pub fn poly_derivative(c: &[BigReal]) -> Vec<BigReal> {
    if c.len() <= 1 {
        return vec![c.first().map(|v| v.int_like(0)).unwrap_or_else(|| {
            BigReal::zero(20)
        })];
    }
    (1..c.len()).map(|j| c[j].mul_i(j as i64)).collect()
}

/// Number of sign changes in the coefficient sequence, zeros skipped
/// (Descartes bound on the number of positive real roots).
pub fn descartes_sign_changes(c: &[BigReal]) -> usize {
    let mut changes = 0usize;
    let mut last = 0i32;
    for v in c {
        let s = v.signum_i();
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Cauchy bound: every real root has magnitude below `1 + max |c_i / c_n|`.
/// The leading (trailing-slot) coefficient must be nonzero.
pub fn cauchy_root_bound(c: &[BigReal]) -> BigReal {
    let n = c.len() - 1;
    let lead = c[n].abs();
    let mut m = c[0].int_like(0);
    for v in c[..n].iter() {
        let ratio = &v.abs() / &lead;
        if ratio > m {
            m = ratio;
        }
    }
    c[0].int_like(1) + m
}

/// Effective degree after discarding numerically-negligible leading
/// coefficients (relative threshold derived from the working precision).
pub(crate) fn effective_degree(c: &[BigReal]) -> Option<usize> {
    let mut maxabs = c[0].int_like(0);
    let mut bits = 32u32;
    for v in c {
        let a = v.abs();
        if a > maxabs {
            maxabs = a;
        }
        bits = bits.max(v.prec_bits());
    }
    if maxabs.is_zero() {
        return None;
    }
    let threshold = &maxabs * &maxabs.f64_like(2.0f64).pow_i(-((bits as i32) - 24));
    (0..c.len()).rev().find(|&j| c[j].abs() > threshold)
}

/// All real roots of the polynomial strictly inside `(lo, hi)`, ascending.
///
/// Recursive scheme: the roots of the derivative split `(lo, hi)` into
/// monotone pieces; each piece contributes at most one root, found by sign
/// change, and critical points where the polynomial (numerically) vanishes
/// are roots of even multiplicity.
pub fn poly_real_roots_in(
    c: &[BigReal],
    lo: &BigReal,
    hi: &BigReal,
    tol: &BigReal,
) -> Result<Vec<BigReal>> {
    if !(lo < hi) {
        return Err(Error::InvalidSpec(
            "root-isolation interval must satisfy lo < hi".to_string(),
        ));
    }
    let deg = match effective_degree(c) {
        None => return Ok(Vec::new()),
        Some(d) => d,
    };
    let c = &c[..=deg + 0];
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        let root = -&(&c[0] / &c[1]);
        if &root > lo && &root < hi {
            return Ok(vec![root]);
        }
        return Ok(Vec::new());
    }
    let dpoly = poly_derivative(c);
    let crit = poly_real_roots_in(&dpoly, lo, hi, tol)?;
    let mut pts: Vec<BigReal> = Vec::with_capacity(crit.len() + 2);
    pts.push(lo.clone());
    pts.extend(crit);
    pts.push(hi.clone());

    // Numerical zero threshold at x: eps * sum |c_i| |x|^i.
    let bits = c.iter().map(|v| v.prec_bits()).max().unwrap_or(64);
    let eps = lo.f64_like(2.0f64).pow_i(-((bits as i32) - 24));
    let near_zero = |value: &BigReal, x: &BigReal| -> bool {
        let ax = x.abs();
        let mut scale = x.int_like(1);
        let mut acc = x.int_like(0);
        for v in c {
            acc = &acc + &(&v.abs() * &scale);
            scale = &scale * &ax;
        }
        value.abs() <= &eps * &acc
    };

    let mut roots: Vec<BigReal> = Vec::new();
    let push_root = |roots: &mut Vec<BigReal>, r: BigReal| {
        if let Some(last) = roots.last() {
            if (&r - last).abs() <= tol.mul_i(4) {
                return;
            }
        }
        roots.push(r);
    };
    let mut fvals: Vec<BigReal> = Vec::with_capacity(pts.len());
    for p in &pts {
        fvals.push(poly_eval(c, p));
    }
    for i in 0..pts.len() - 1 {
        let (u, v) = (&pts[i], &pts[i + 1]);
        let (fu, fv) = (&fvals[i], &fvals[i + 1]);
        // A vanishing value at an interior critical point is an
        // even-multiplicity root.
        if i > 0 && near_zero(fu, u) {
            push_root(&mut roots, u.clone());
            continue;
        }
        if near_zero(fv, v) || near_zero(fu, u) {
            continue; // handled at the endpoint pass of the next interval
        }
        if fu.signum_i() != fv.signum_i() {
            let bracket = Bracket::new(u.clone(), v.clone())?;
            let mut g = |x: &BigReal| Ok(poly_eval(c, x));
            let r = find_root(&mut g, &bracket, tol)?;
            push_root(&mut roots, r);
        }
    }
    Ok(roots)
}

/// Interpolating polynomial through `(nodes[i], values[i])`, returned as
/// coefficients with the constant term first (Lagrange form, accumulated).
pub fn lagrange_interpolate(nodes: &[BigReal], values: &[BigReal]) -> Vec<BigReal> {
    assert_eq!(nodes.len(), values.len());
    assert!(!nodes.is_empty());
    let n = nodes.len();
    let zero = nodes[0].int_like(0);
    let mut result = vec![zero.clone(); n];
    for i in 0..n {
        // numerator polynomial prod_{j != i} (x - nodes[j])
        let mut numer = vec![nodes[0].int_like(1)];
        let mut denom = nodes[0].int_like(1);
        for (j, xj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![zero.clone(); numer.len() + 1];
            for (k, nk) in numer.iter().enumerate() {
                next[k + 1] = &next[k + 1] + nk;
                next[k] = &next[k] - &(nk * xj);
            }
            numer = next;
            denom = &denom * &(&nodes[i] - xj);
        }
        let w = &values[i] / &denom;
        for (k, nk) in numer.iter().enumerate() {
            result[k] = &result[k] + &(nk * &w);
        }
    }
    result
}
