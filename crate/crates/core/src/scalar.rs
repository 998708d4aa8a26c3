//! Exact rational scalars.
//!
//! Every quantity in the volume pipeline is a rational function of the box
//! bounds, so all of it is carried as [`BigRational`]. Floating point only
//! appears in the oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an integer (`-3`), a fraction (`5/2`), or a finite decimal
/// (`-0.125`, `1.5e3`). Decimals are converted exactly.
pub fn parse_scalar(input: &str) -> Result<Scalar> {
    let s = input.trim();
    let fail = |reason: &str| Error::ParseScalar {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(fail("empty string"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = parse_int(num.trim()).ok_or_else(|| fail("bad numerator"))?;
        let den: BigInt = parse_int(den.trim()).ok_or_else(|| fail("bad denominator"))?;
        if den.is_zero() {
            return Err(fail("zero denominator"));
        }
        return Ok(Scalar::new(num, den));
    }
    parse_decimal(s).ok_or_else(|| fail("expected integer, p/q, or finite decimal"))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_decimal(s: &str) -> Option<Scalar> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, unsigned) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, fraction) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    if whole.is_empty() && fraction.is_empty() {
        return None;
    }
    if !whole
        .bytes()
        .chain(fraction.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{whole}{fraction}");
    let mut value = Scalar::from_integer(digits.parse::<BigInt>().ok()?);
    let scale = exponent - fraction.len() as i32;
    let ten = BigInt::from(10u32);
    if scale >= 0 {
        value *= Scalar::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Scalar::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

/// `p/q` rendering with the denominator always present (`960/1`).
pub fn fmt_exact(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// 17 significant digits in scientific notation; round-trips any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Exact conversion of a finite `f64` to a rational.
pub fn from_f64(x: f64) -> Option<Scalar> {
    Scalar::from_float(x)
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}
