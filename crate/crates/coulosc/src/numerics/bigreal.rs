//! Arbitrary-precision real scalar built on MPFR via the `rug` crate.
//!
//! Precision is requested in *decimal digits* at construction and mapped to
//! binary precision with guard bits.  Results of binary operations carry the
//! larger precision of the two operands, so precision never degrades silently
//! through a computation.

use std::cmp::Ordering;
use std::fmt;

use rug::float::Round;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

/// Guard bits added on top of the binary equivalent of the requested decimal
/// digits.
pub const GUARD_BITS: u32 = 32;

const LOG2_10: f64 = 3.321928094887362f64;

/// Binary precision used for a requested number of decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    ((digits.max(1) as f64) * LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Approximate decimal digits carried by a binary precision.
pub fn digits_for_bits(bits: u32) -> u32 {
    ((bits.saturating_sub(GUARD_BITS)) as f64 / LOG2_10).floor() as u32
}

/// Arbitrary-precision real number.
#[derive(Clone, Debug)]
pub struct BigReal {
    x: Float,
}

impl BigReal {
    /// Wrap a raw `rug::Float`.
    pub fn from_float(x: Float) -> Self {
        BigReal { x }
    }

    /// Borrow the underlying `rug::Float`.
    pub fn as_float(&self) -> &Float {
        &self.x
    }

    /// Zero at the given decimal precision.
    pub fn zero(digits: u32) -> Self {
        BigReal {
            x: Float::with_val(bits_for_digits(digits), 0),
        }
    }

    /// Integer value at the given decimal precision.
    pub fn int(v: i64, digits: u32) -> Self {
        BigReal {
            x: Float::with_val(bits_for_digits(digits), v),
        }
    }

    /// Exact ratio of two integers, rounded once at the given precision.
    pub fn ratio(num: i64, den: i64, digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        let n = Float::with_val(bits, num);
        let d = Float::with_val(bits, den);
        BigReal {
            x: Float::with_val(bits, &n / &d),
        }
    }

    /// Parse a decimal string (`"1.5"`, `"-2"`, `"1e-3"`, `"0.25"`).
    pub fn parse(s: &str, digits: u32) -> Result<Self> {
        let trimmed = s.trim();
        let incomplete = Float::parse(trimmed).map_err(|_| Error::ParseNumber {
            input: s.to_string(),
        })?;
        let x = Float::with_val(bits_for_digits(digits), incomplete);
        if !x.is_finite() {
            return Err(Error::ParseNumber {
                input: s.to_string(),
            });
        }
        Ok(BigReal { x })
    }

    /// Lossless import of an `f64` at the given decimal precision.
    pub fn from_f64(v: f64, digits: u32) -> Self {
        BigReal {
            x: Float::with_val(bits_for_digits(digits), v),
        }
    }

    /// Binary precision in bits.
    pub fn prec_bits(&self) -> u32 {
        self.x.prec()
    }

    /// Approximate decimal precision.
    pub fn digits(&self) -> u32 {
        digits_for_bits(self.x.prec())
    }

    /// Integer constant carrying this value's precision.
    pub fn int_like(&self, v: i64) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), v),
        }
    }

    /// `f64` constant carrying this value's precision.
    pub fn f64_like(&self, v: f64) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), v),
        }
    }

    /// Ratio of integers carrying this value's precision.
    pub fn ratio_like(&self, num: i64, den: i64) -> Self {
        let bits = self.x.prec();
        let n = Float::with_val(bits, num);
        let d = Float::with_val(bits, den);
        BigReal {
            x: Float::with_val(bits, &n / &d),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite()
    }

    /// Sign of the value: `Less`, `Equal` (zero), or `Greater`; `None` on NaN.
    pub fn cmp0(&self) -> Option<Ordering> {
        self.x.cmp0()
    }

    /// Sign as an integer in {-1, 0, 1}; NaN maps to 0.
    pub fn signum_i(&self) -> i32 {
        match self.x.cmp0() {
            Some(Ordering::Less) => -1,
            Some(Ordering::Greater) => 1,
            _ => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum_i() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum_i() > 0
    }

    pub fn abs(&self) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), self.x.abs_ref()),
        }
    }

    pub fn sqrt(&self) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), self.x.sqrt_ref()),
        }
    }

    pub fn recip(&self) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), self.x.recip_ref()),
        }
    }

    pub fn square(&self) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), self.x.square_ref()),
        }
    }

    pub fn exp(&self) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), self.x.exp_ref()),
        }
    }

    /// Integer power (negative exponents allowed).
    pub fn pow_i(&self, e: i32) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), (&self.x).pow(e)),
        }
    }

    /// Multiply by a machine integer.
    pub fn mul_i(&self, v: i64) -> Self {
        let f = Float::with_val(self.x.prec(), v);
        BigReal {
            x: Float::with_val(self.x.prec(), &self.x * &f),
        }
    }

    /// Divide by a machine integer.
    pub fn div_i(&self, v: i64) -> Self {
        let f = Float::with_val(self.x.prec(), v);
        BigReal {
            x: Float::with_val(self.x.prec().max(f.prec()), &self.x / &f),
        }
    }

    pub fn neg(&self) -> Self {
        BigReal {
            x: Float::with_val(self.x.prec(), -&self.x),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.x.to_f64()
    }

    /// Round-trip through a fresh precision (used to widen or narrow).
    pub fn with_digits(&self, digits: u32) -> Self {
        BigReal {
            x: Float::with_val(bits_for_digits(digits), &self.x),
        }
    }

    /// Natural logarithm of the absolute value, as `f64` (diagnostics only).
    pub fn log10_abs_f64(&self) -> f64 {
        if self.x.is_zero() {
            return f64::NEG_INFINITY;
        }
        let a = Float::with_val(64, self.x.abs_ref());
        Float::with_val(64, a.log10_ref()).to_f64()
    }

    /// Maximum of two values.
    pub fn max_of(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Minimum of two values.
    pub fn min_of(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Render as a plain decimal string with `sig_digits` significant digits.
    ///
    /// Values with decimal exponent in a moderate window are written in
    /// positional notation (`"2.5"`, `"0.00125"`, `"-1.8362"`); outside that
    /// window scientific notation (`"1.25e-9"`) is used.  Trailing zeros of
    /// the fractional part are trimmed.
    pub fn to_decimal_string(&self, sig_digits: usize) -> String {
        let digits = sig_digits.max(1);
        if self.x.is_nan() {
            return "nan".to_string();
        }
        if self.x.is_infinite() {
            return if self.x.is_sign_negative() {
                "-inf".to_string()
            } else {
                "inf".to_string()
            };
        }
        if self.x.is_zero() {
            return "0".to_string();
        }
        let raw = self
            .x
            .to_string_radix_round(10, Some(digits), Round::Nearest);
        format_decimal(&raw)
    }
}

/// Reformat an MPFR decimal string (positional or `e`-exponent form) into the
/// crate's canonical plain-decimal form.
fn format_decimal(raw: &str) -> String {
    let (neg, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw),
    };
    let (mantissa, exp) = match body.split_once(['e', 'E', '@']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let mut digits: String = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    // Position of the decimal point counted from the left of `digits`,
    // after applying the exponent.
    let mut point = int_part.len() as i64 + exp;
    // Strip leading zeros (each shifts the point left).
    let lead = digits.chars().take_while(|&c| c == '0').count();
    digits.drain(..lead);
    point -= lead as i64;
    if digits.is_empty() {
        return "0".to_string();
    }
    // Strip trailing zeros (value unchanged).
    let trimmed = digits.trim_end_matches('0').len().max(1);
    digits.truncate(trimmed);

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point > 0 && point <= 27 {
        let p = point as usize;
        if p >= digits.len() {
            out.push_str(&digits);
            out.extend(std::iter::repeat('0').take(p - digits.len()));
        } else {
            out.push_str(&digits[..p]);
            out.push('.');
            out.push_str(&digits[p..]);
        }
    } else if point <= 0 && point >= -6 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-point) as usize));
        out.push_str(&digits);
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&(point - 1).to_string());
    }
    out
}

fn combined_prec(a: &BigReal, b: &BigReal) -> u32 {
    a.x.prec().max(b.x.prec())
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, 'b> std::ops::$trait<&'b BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'b BigReal) -> BigReal {
                BigReal {
                    x: Float::with_val(combined_prec(self, rhs), &self.x $op &rhs.x),
                }
            }
        }
        impl std::ops::$trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self) $op (&rhs)
            }
        }
        impl<'a> std::ops::$trait<&'a BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                (&self) $op rhs
            }
        }
        impl<'a> std::ops::$trait<BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self $op (&rhs)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);
impl_binop!(Div, div, /);

impl std::ops::Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            x: Float::with_val(self.x.prec(), -&self.x),
        }
    }
}

impl std::ops::Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.x.partial_cmp(&other.x)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(self.digits() as usize))
    }
}
