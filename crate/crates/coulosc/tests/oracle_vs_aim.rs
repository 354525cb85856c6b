//! Systematic cross-validation between the extended-precision solver and
//! the double-precision shooting oracle on a parameter grid spanning both
//! Coulomb-term signs, three oscillator strengths, and free vs confined
//! domains: the lowest three eigenvalues must agree to at least eight
//! significant digits everywhere.

use coulosc::aim::{self, ProblemSpec, Radius};
use coulosc::oracle::{fd_eigenvalues, GridSpec};
use coulosc::reference::matches_to_digits;
use coulosc::BigReal;

const DIGITS: u32 = 36;

#[test]
fn lowest_three_levels_agree_on_the_parameter_grid() {
    let tol = BigReal::parse("1e-15", DIGITS).unwrap();
    for a in [-1i64, 0, 1] {
        for (bn, bd) in [(1i64, 2i64), (1, 1), (2, 1)] {
            for confined in [true, false] {
                let radius = if confined {
                    Radius::Bounded(BigReal::int(1, DIGITS))
                } else {
                    Radius::Free
                };
                let spec = ProblemSpec::new(
                    BigReal::int(a, DIGITS),
                    BigReal::ratio(bn, bd, DIGITS),
                    3,
                    0,
                    radius,
                    DIGITS,
                )
                .unwrap();
                let grid = GridSpec::new(
                    BigReal::from_f64(if confined { 1.0 } else { 12.0 }, DIGITS),
                    if confined { 500 } else { 400 },
                    2,
                )
                .unwrap();
                let oracle = fd_eigenvalues(&spec, &grid, 3)
                    .unwrap_or_else(|e| panic!("oracle failed at a={a} b={bn}/{bd}: {e}"));
                let solved = aim::spectrum(&spec, 3, &tol)
                    .unwrap_or_else(|e| panic!("solver failed at a={a} b={bn}/{bd}: {e}"));
                for n in 0..3 {
                    assert!(
                        matches_to_digits(&oracle[n], &solved[n].energy, 8),
                        "disagreement at a={a}, b={bn}/{bd}, confined={confined}, n={n}: \
                         oracle {} vs solver {}",
                        oracle[n].to_decimal_string(12),
                        solved[n].energy.to_decimal_string(12)
                    );
                }
            }
        }
    }
}
