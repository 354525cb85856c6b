//! Independent eigenvalue oracle
//!
//! Cross-validates the iterative solver and the exact catalog with a
//! completely different method at ordinary double precision: shooting
//! integration of the radial equation
//! `-(1/2) u'' + [(k-1)(k-3)/(8 r^2) - a/r + b r^2] u = E u`
//! with a fourth-order Numerov stencil, started near the origin from the
//! Frobenius series of the regular solution (which handles the singular
//! centrifugal term, attractive `k = 2` case included), matched to an
//! inward sweep from the outer boundary.  Eigenvalues are located by
//! node-count bisection followed by bisection on the matching determinant,
//! then Richardson-extrapolated across grid doublings.
//!
//! Accuracy target is eight or more significant digits — this is a
//! cross-check, not a replacement for the extended-precision solver.

use crate::aim::{ProblemSpec, Radius};
use crate::error::{Error, Result};
use crate::numerics::bigreal::BigReal;

/// Discretization request for the oracle.
#[derive(Clone, Debug)]
pub struct GridSpec {
    /// Outer radius of the integration domain.  For confined problems the
    /// wall radius from the problem spec takes precedence; for free
    /// problems this is the starting truncation radius (grown automatically
    /// until the spectrum stops moving).
    pub r_max: BigReal,
    /// Number of interior grid points on the coarsest grid (at least 100).
    pub m: usize,
    /// Number of grid doublings used for Richardson extrapolation
    /// (at least 1).
    pub richardson_levels: u32,
}

impl GridSpec {
    pub fn new(r_max: BigReal, m: usize, richardson_levels: u32) -> Result<Self> {
        if !r_max.is_positive() {
            return Err(Error::InvalidSpec(
                "oracle grid radius must be positive".to_string(),
            ));
        }
        if m < 100 {
            return Err(Error::InvalidSpec(format!(
                "oracle grid needs at least 100 interior points (got {m})"
            )));
        }
        if richardson_levels < 1 {
            return Err(Error::InvalidSpec(
                "oracle needs at least one Richardson level".to_string(),
            ));
        }
        Ok(GridSpec {
            r_max,
            m,
            richardson_levels,
        })
    }
}

/// Double-precision view of the problem parameters.
#[derive(Clone, Copy, Debug)]
struct Params {
    a: f64,
    b: f64,
    k: f64,
    confined: bool,
}

impl Params {
    fn effective_potential(&self, r: f64) -> f64 {
        (self.k - 1.0) * (self.k - 3.0) / (8.0 * r * r) - self.a / r + self.b * r * r
    }
}

/// Frobenius coefficients of the regular solution
/// `u = r^((k-1)/2) (c_0 + c_1 r + ...)` near the origin:
/// `c_m m (m + k - 2) = -2 a c_{m-1} - 2 E c_{m-2} + 2 b c_{m-4}`.
fn series_coeffs(p: &Params, energy: f64, nterms: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(nterms);
    c.push(1.0f64);
    for m in 1..nterms {
        let mut v = -2.0 * p.a * c[m - 1];
        if m >= 2 {
            v += -2.0 * energy * c[m - 2];
        }
        if m >= 4 {
            v += 2.0 * p.b * c[m - 4];
        }
        c.push(v / (m as f64 * (m as f64 + p.k - 2.0)));
    }
    c
}

fn series_eval(c: &[f64], k: f64, r: f64) -> f64 {
    let mut val = 0.0f64;
    for cm in c.iter().rev() {
        val = val * r + cm;
    }
    r.powf(0.5 * (k - 1.0)) * val
}

/// One shooting pass at fixed energy.  Returns the node count and, unless
/// `nodes_only`, the normalized matching determinant at the stitch point.
fn shoot(p: &Params, r_max: f64, m: usize, energy: f64, nodes_only: bool) -> (usize, f64) {
    let h = r_max / (m as f64 + 1.0);
    // Start the outward sweep from the series, beyond the worst of the
    // centrifugal singularity but close enough that 60 terms converge.
    let rs_target = (0.25 * r_max).min(0.5 / (1.0 + energy.abs().sqrt()));
    let j0 = 2usize.max((rs_target / h).round() as usize);

    let mut t = vec![0.0f64; m + 2];
    let mut f = vec![0.0f64; m + 2];
    for j in 1..m + 2 {
        let r = j as f64 * h;
        let fj = 2.0 * (p.effective_potential(r) - energy);
        f[j] = fj;
        t[j] = h * h / 12.0 * fj;
    }

    let c = series_coeffs(p, energy, 60);
    let mut nodes = 0usize;
    let mut sv_prev = series_eval(&c, p.k, h);
    for j in 2..=j0 + 1 {
        let sv = series_eval(&c, p.k, j as f64 * h);
        if sv_prev * sv < 0.0 {
            nodes += 1;
        }
        sv_prev = sv;
    }
    // Running pair (u[j-1], u[j]) for the recurrence, renormalized together
    // so the stored pair always shares one scale.
    let mut u_prev = series_eval(&c, p.k, j0 as f64 * h);
    let mut u_cur = sv_prev; // u[j0 + 1]

    // Stitch where the integrand is least stiff.
    let jlo = (j0 + 5).max(m / 10);
    let jm = if nodes_only {
        m
    } else {
        let mut arg = jlo;
        for j in jlo..m - 4 {
            if f[j] < f[arg] {
                arg = j;
            }
        }
        arg.clamp(j0 + 3, m - 4)
    };

    let out_end = if nodes_only { m } else { jm };
    for j in j0 + 1..=out_end {
        let nxt = (u_cur * (2.0 + 10.0 * t[j]) - u_prev * (1.0 - t[j - 1])) / (1.0 - t[j + 1]);
        if nxt * u_cur < 0.0 {
            nodes += 1;
        }
        u_prev = u_cur;
        u_cur = nxt;
        if u_cur.abs() > 1e280 {
            u_prev /= 1e280;
            u_cur /= 1e280;
        }
    }
    if nodes_only {
        return (nodes, 0.0);
    }
    let (ul_jm, ul_jm1) = (u_prev, u_cur); // u[jm], u[jm+1]

    // Inward sweep from the outer boundary.
    let (mut v_next, mut v_cur) = if p.confined {
        (0.0f64, 1.0f64)
    } else {
        let seed = 1e-160f64;
        (seed, seed * (1.0 + h * f[m].max(1e-8).sqrt()) * 2.0)
    };
    for j in (jm + 1..=m).rev() {
        let prv = (v_cur * (2.0 + 10.0 * t[j]) - v_next * (1.0 - t[j + 1])) / (1.0 - t[j - 1]);
        v_next = v_cur;
        v_cur = prv;
        if v_cur.abs() > 1e280 {
            v_next /= 1e280;
            v_cur /= 1e280;
        }
    }
    let (ur_jm, ur_jm1) = (v_cur, v_next); // u[jm], u[jm+1]

    let det = ul_jm * ur_jm1 - ul_jm1 * ur_jm;
    let nrm = (ul_jm.abs() + ul_jm1.abs()) * (ur_jm.abs() + ur_jm1.abs());
    if nrm == 0.0 || !det.is_finite() {
        return (nodes, f64::NAN);
    }
    (nodes, det / nrm)
}

fn count_nodes(p: &Params, r_max: f64, m: usize, energy: f64) -> usize {
    shoot(p, r_max, m, energy, true).0
}

/// The `target`-th eigenvalue on one fixed grid, by node-count bracketing
/// followed by bisection of the matching determinant.
fn eigenvalue_on_grid(p: &Params, r_max: f64, m: usize, target: usize) -> Result<f64> {
    let mut lo = -2.0 * p.a * p.a - 1.0; // below the variational ground floor
    let mut hi = lo + 4.0;
    let mut span = hi - lo;
    let mut guard = 0;
    while count_nodes(p, r_max, m, hi) <= target {
        hi += span;
        span *= 2.0;
        guard += 1;
        if guard > 200 {
            return Err(Error::OracleDivergence {
                detail: format!("node count never exceeds {target} while raising the energy"),
            });
        }
    }
    guard = 0;
    while count_nodes(p, r_max, m, lo) > target {
        lo -= span;
        span *= 2.0;
        guard += 1;
        if guard > 200 {
            return Err(Error::OracleDivergence {
                detail: format!("node count stays above {target} while lowering the energy"),
            });
        }
    }
    // Narrow to a bracket whose node counts are exactly (target, target+1).
    for _ in 0..300 {
        if count_nodes(p, r_max, m, lo) == target && count_nodes(p, r_max, m, hi) == target + 1 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if count_nodes(p, r_max, m, mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut f_lo = shoot(p, r_max, m, lo, false).1;
    let f_hi = shoot(p, r_max, m, hi, false).1;
    if !(f_lo.is_finite() && f_hi.is_finite()) {
        return Err(Error::OracleDivergence {
            detail: "matching determinant is not finite at the bracket".to_string(),
        });
    }
    if f_lo * f_hi > 0.0 {
        // The determinant can share a sign at the node-count edges when the
        // bracket still contains a pole of the stitch ratio; scan interior
        // points for the sign change.
        let mut found = false;
        let mut prev_e = lo;
        let mut prev_f = f_lo;
        for i in 1..=9 {
            let e = lo + (hi - lo) * (i as f64) / 10.0;
            let fe = shoot(p, r_max, m, e, false).1;
            if fe.is_finite() && prev_f * fe <= 0.0 {
                lo = prev_e;
                f_lo = prev_f;
                hi = e;
                found = true;
                break;
            }
            prev_e = e;
            prev_f = fe;
        }
        if !found {
            let fe = shoot(p, r_max, m, hi, false).1;
            if prev_f * fe <= 0.0 {
                lo = prev_e;
                f_lo = prev_f;
            } else {
                return Err(Error::OracleDivergence {
                    detail: format!(
                        "no matching-determinant sign change inside the level-{target} bracket"
                    ),
                });
            }
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = shoot(p, r_max, m, mid, false).1;
        if f_mid * f_lo <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        if hi - lo < 1e-16 * lo.abs().max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Richardson-extrapolated eigenvalue across `levels + 1` grids
/// (`m, 2m, 4m, ...`).  The shooting scheme converges as `h^4` with even
/// higher-order corrections, so the elimination weights are 16, 64, 256...
fn refined_eigenvalue(
    p: &Params,
    r_max: f64,
    m: usize,
    levels: u32,
    target: usize,
) -> Result<f64> {
    let grids = levels as usize + 1;
    let mut tableau: Vec<Vec<f64>> = Vec::with_capacity(grids);
    for i in 0..grids {
        let mi = m << i;
        let e = eigenvalue_on_grid(p, r_max, mi, target)?;
        let mut row = vec![e];
        for j in 1..=i {
            let w = (2.0f64).powi(2 + 2 * j as i32); // 16, 64, 256, ...
            let prev = tableau[i - 1][j - 1];
            let cur = row[j - 1];
            row.push((w * cur - prev) / (w - 1.0));
        }
        tableau.push(row);
    }
    let last = tableau[grids - 1][grids - 1];
    if grids >= 2 {
        let prev = tableau[grids - 2][grids - 2];
        let scale = last.abs().max(1.0);
        if (last - prev).abs() > 1e-7 * scale {
            return Err(Error::OracleDivergence {
                detail: format!(
                    "extrapolation levels disagree: {prev:.12e} vs {last:.12e} at level {target}"
                ),
            });
        }
    }
    Ok(last)
}

/// Lowest `count` eigenvalues of the radial problem, computed independently
/// of the main solver.  Free problems grow the truncation radius (doubling
/// both radius and grid) until the whole batch moves less than `1e-10`
/// relative between truncations.
pub fn fd_eigenvalues(spec: &ProblemSpec, grid: &GridSpec, count: usize) -> Result<Vec<BigReal>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let p = Params {
        a: spec.a().to_f64(),
        b: spec.b().to_f64(),
        k: spec.k() as f64,
        confined: matches!(spec.radius(), Radius::Bounded(_)),
    };
    let levels = grid.richardson_levels;
    let batch = |r_max: f64, m: usize| -> Result<Vec<f64>> {
        (0..count)
            .map(|n| refined_eigenvalue(&p, r_max, m, levels, n))
            .collect()
    };
    let energies: Vec<f64> = match spec.radius() {
        Radius::Bounded(wall) => batch(wall.to_f64(), grid.m)?,
        Radius::Free => {
            let mut r_max = grid.r_max.to_f64();
            let mut m = grid.m;
            let mut cur = batch(r_max, m)?;
            let mut settled = false;
            for _ in 0..6 {
                let next_r = 2.0 * r_max;
                let next_m = 2 * m;
                let next = batch(next_r, next_m)?;
                let moved = cur
                    .iter()
                    .zip(&next)
                    .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
                    .fold(0.0f64, f64::max);
                r_max = next_r;
                m = next_m;
                cur = next;
                if moved < 1e-10 {
                    settled = true;
                    break;
                }
            }
            if !settled {
                return Err(Error::OracleDivergence {
                    detail: "free-domain truncation keeps shifting the spectrum".to_string(),
                });
            }
            cur
        }
    };
    Ok(energies
        .iter()
        .map(|&e| BigReal::from_f64(e, spec.digits()))
        .collect())
}
