//! Truncated Taylor series about a fixed expansion point, with the algebra
//! needed by the iterative eigensolver: addition, multiplication to a target
//! order, differentiation, and division (including expansion of rational
//! functions whose denominator is a product of linear factors).

use crate::error::{Error, Result};
use crate::numerics::bigreal::BigReal;

/// Polynomial truncation of a function's Taylor expansion about `center`:
/// `f(r) ≈ Σ_{j=0..=order} coeffs[j] (r - center)^j`.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    center: BigReal,
    coeffs: Vec<BigReal>,
}

impl TruncatedSeries {
    /// Build from explicit Taylor coefficients (lowest order first).
    pub fn new(center: BigReal, coeffs: Vec<BigReal>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncatedSeries { center, coeffs }
    }

    /// Constant function truncated at `order`.
    pub fn constant(center: &BigReal, value: &BigReal, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(value.clone());
        for _ in 0..order {
            coeffs.push(value.int_like(0));
        }
        TruncatedSeries {
            center: center.clone(),
            coeffs,
        }
    }

    /// Expand a polynomial given by global coefficients (`p(r) = Σ cᵢ rⁱ`)
    /// about `center`, truncated at `order`.
    ///
    /// Uses Horner's scheme in the shifted variable: with `t = r - center`,
    /// each Horner step multiplies by `(center + t)`.
    pub fn from_poly_global(global: &[BigReal], center: &BigReal, order: usize) -> Self {
        let zero = center.int_like(0);
        let mut acc = TruncatedSeries::constant(center, &zero, order);
        for c in global.iter().rev() {
            // acc <- acc * (center + t) + c
            let mut next = vec![zero.clone(); order + 1];
            for j in 0..=order {
                let mut v = &acc.coeffs[j] * center;
                if j > 0 {
                    v = &v + &acc.coeffs[j - 1];
                }
                next[j] = v;
            }
            next[0] = &next[0] + c;
            acc.coeffs = next;
        }
        acc
    }

    pub fn center(&self) -> &BigReal {
        &self.center
    }

    /// Truncation order (degree of the highest retained term).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Taylor coefficient of `(r - center)^j`.
    pub fn coeff(&self, j: usize) -> &BigReal {
        &self.coeffs[j]
    }

    /// Value at the expansion point.
    pub fn constant_term(&self) -> &BigReal {
        &self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[BigReal] {
        &self.coeffs
    }

    fn check_same_center(&self, rhs: &TruncatedSeries) {
        debug_assert!(
            (&self.center - &rhs.center).is_zero(),
            "series combined across different expansion centers"
        );
    }

    /// Sum, truncated at the smaller of the two orders.
    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_center(rhs);
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|j| &self.coeffs[j] + &rhs.coeffs[j])
            .collect();
        TruncatedSeries {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Difference, truncated at the smaller of the two orders.
    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_center(rhs);
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|j| &self.coeffs[j] - &rhs.coeffs[j])
            .collect();
        TruncatedSeries {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Product truncated at `target_order` (must not exceed either operand's
    /// order; Cauchy products above that would silently drop contributions).
    pub fn mul_to(&self, rhs: &TruncatedSeries, target_order: usize) -> TruncatedSeries {
        self.check_same_center(rhs);
        debug_assert!(target_order <= self.order() && target_order <= rhs.order());
        let prec = self.coeffs[0].prec_bits().max(rhs.coeffs[0].prec_bits());
        let zero = BigReal::from_float(rug::Float::with_val(prec, 0));
        let mut coeffs = Vec::with_capacity(target_order + 1);
        for k in 0..=target_order {
            let mut acc = zero.clone();
            for i in 0..=k {
                acc = &acc + &(&self.coeffs[i] * &rhs.coeffs[k - i]);
            }
            coeffs.push(acc);
        }
        TruncatedSeries {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Product truncated at the smaller operand order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.mul_to(rhs, self.order().min(rhs.order()))
    }

    /// Scale by a constant.
    pub fn scale(&self, c: &BigReal) -> TruncatedSeries {
        TruncatedSeries {
            center: self.center.clone(),
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Term-by-term derivative; the order drops by one.
    ///
    /// Differentiating an order-0 series returns an order-0 zero series.
    pub fn differentiate(&self) -> TruncatedSeries {
        if self.coeffs.len() == 1 {
            return TruncatedSeries {
                center: self.center.clone(),
                coeffs: vec![self.coeffs[0].int_like(0)],
            };
        }
        let coeffs = (1..self.coeffs.len())
            .map(|j| self.coeffs[j].mul_i(j as i64))
            .collect();
        TruncatedSeries {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Quotient truncated at the smaller operand order.  Fails if the
    /// divisor's constant term vanishes.
    pub fn div(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_same_center(rhs);
        if rhs.coeffs[0].is_zero() {
            return Err(Error::DivisionByZeroSeries);
        }
        let n = self.order().min(rhs.order());
        let inv_b0 = rhs.coeffs[0].recip();
        let mut q: Vec<BigReal> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = &acc - &(&rhs.coeffs[j] * &q[k - j]);
            }
            q.push(&acc * &inv_b0);
        }
        Ok(TruncatedSeries {
            center: self.center.clone(),
            coeffs: q,
        })
    }

    /// Evaluate the truncation at a point (Horner in `r - center`).
    pub fn eval(&self, r: &BigReal) -> BigReal {
        let t = r - &self.center;
        let mut acc = self.coeffs[self.coeffs.len() - 1].clone();
        for j in (0..self.coeffs.len() - 1).rev() {
            acc = &(&acc * &t) + &self.coeffs[j];
        }
        acc
    }
}

/// Taylor-expand the rational function
///
/// ```text
/// p(r) / Π_i (r - root_i)^mult_i
/// ```
///
/// about `center`, truncated at `order`.  `numer` holds the global
/// coefficients of `p` (constant term first).  Fails if `center` coincides
/// with any denominator root.
pub fn series_from_rational(
    numer: &[BigReal],
    denom_linear_roots: &[(BigReal, u32)],
    center: &BigReal,
    order: usize,
) -> Result<TruncatedSeries> {
    for (root, _) in denom_linear_roots {
        if (center - root).is_zero() {
            return Err(Error::PoleAtCenter {
                center: center.to_decimal_string(20),
            });
        }
    }
    let mut acc = TruncatedSeries::from_poly_global(numer, center, order);
    for (root, mult) in denom_linear_roots {
        // (r - root) expanded about center: (center - root) + t.
        let linear = TruncatedSeries::new(
            center.clone(),
            std::iter::once(center - root)
                .chain(std::iter::once(center.int_like(1)))
                .chain((2..=order).map(|_| center.int_like(0)))
                .collect(),
        );
        for _ in 0..*mult {
            acc = acc.div(&linear)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(v: i64) -> BigReal {
        BigReal::int(v, 50)
    }

    #[test]
    fn polynomial_recentering() {
        // p(r) = 1 + 2r + 3r^2 about center 2: p(2+t) = 17 + 14t + 3t^2.
        let s = TruncatedSeries::from_poly_global(&[br(1), br(2), br(3)], &br(2), 4);
        assert_eq!(s.coeff(0).to_f64(), 17.0);
        assert_eq!(s.coeff(1).to_f64(), 14.0);
        assert_eq!(s.coeff(2).to_f64(), 3.0);
        assert_eq!(s.coeff(3).to_f64(), 0.0);
    }

    #[test]
    fn geometric_series_expansion() {
        // 1/(r - 3) about center 1: -(1/2) * 1/(1 - t/2) = -1/2 - t/4 - t^2/8 ...
        let s = series_from_rational(&[br(1)], &[(br(3), 1)], &br(1), 5).unwrap();
        for j in 0..=5 {
            let expect = -(0.5f64).powi(j as i32 + 1);
            assert!(
                (s.coeff(j).to_f64() - expect).abs() < 1e-40,
                "coeff {j}: {} vs {expect}",
                s.coeff(j).to_f64()
            );
        }
    }

    #[test]
    fn rational_expansion_example() {
        // 2/(r^2 - 1) about 0 -> -2 - 2 r^2 - 2 r^4 ... given as coefficients
        // [2] over roots (1,1), (-1,1); check first terms [-2, 0, -2, 0, -2].
        let s = series_from_rational(&[br(2)], &[(br(1), 1), (br(-1), 1)], &br(0), 4).unwrap();
        let expect = [-2.0, 0.0, -2.0, 0.0, -2.0];
        for (j, e) in expect.iter().enumerate() {
            assert!((s.coeff(j).to_f64() - e).abs() < 1e-40, "coeff {j}");
        }
    }

    #[test]
    fn expansion_at_pole_is_rejected() {
        let err = series_from_rational(&[br(1)], &[(br(3), 1)], &br(3), 4);
        assert!(matches!(err, Err(Error::PoleAtCenter { .. })));
    }

    #[test]
    fn product_and_quotient_invert() {
        let a = TruncatedSeries::new(br(0), vec![br(1), br(-2), br(3), br(5), br(-1)]);
        let b = TruncatedSeries::new(br(0), vec![br(2), br(1), br(0), br(-4), br(2)]);
        let q = a.div(&b).unwrap();
        let back = q.mul(&b);
        for j in 0..=4 {
            assert!(
                (back.coeff(j).to_f64() - a.coeff(j).to_f64()).abs() < 1e-35,
                "coeff {j}"
            );
        }
    }

    #[test]
    fn derivative_drops_order() {
        let s = TruncatedSeries::new(br(0), vec![br(7), br(5), br(4)]);
        let d = s.differentiate();
        assert_eq!(d.order(), 1);
        assert_eq!(d.coeff(0).to_f64(), 5.0);
        assert_eq!(d.coeff(1).to_f64(), 8.0);
    }

    #[test]
    fn multiplication_consumes_no_more_than_target() {
        let a = TruncatedSeries::new(br(0), vec![br(1), br(1), br(1)]);
        let b = TruncatedSeries::new(br(0), vec![br(1), br(1), br(1)]);
        let p = a.mul_to(&b, 1);
        assert_eq!(p.order(), 1);
        assert_eq!(p.coeff(1).to_f64(), 2.0);
    }

    #[test]
    fn eval_matches_horner() {
        let s = TruncatedSeries::from_poly_global(&[br(1), br(2), br(3)], &br(2), 4);
        let r = BigReal::ratio(7, 2, 50);
        // p(3.5) = 1 + 7 + 36.75 = 44.75
        assert!((s.eval(&r).to_f64() - 44.75).abs() < 1e-40);
    }
}
