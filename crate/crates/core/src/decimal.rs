//! Exact decimal numbers for shape coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Limit on the number of digits on either side of the decimal point.
pub const MAX_DIGITS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid decimal number `{0}`")]
pub struct DecimalError(pub String);

/// `mantissa / 10^scale`, normalized so that the mantissa has no trailing
/// zero digit when `scale > 0`. Equal values therefore compare equal
/// structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

impl Decimal {
    pub fn new(mantissa: impl Into<BigInt>, scale: u32) -> Self {
        let mut d = Self {
            mantissa: mantissa.into(),
            scale,
        };
        d.normalize();
        d
    }

    pub fn from_integer(value: i64) -> Self {
        Self::new(value, 0)
    }

    fn normalize(&mut self) {
        let ten = BigInt::from(10);
        if self.mantissa.is_zero() {
            self.scale = 0;
            return;
        }
        while self.scale > 0 && (&self.mantissa % &ten).is_zero() {
            self.mantissa /= &ten;
            self.scale -= 1;
        }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// The value multiplied by `10^scale`; `scale` must be at least
    /// `self.scale()`.
    pub fn scaled_to(&self, scale: u32) -> BigInt {
        debug_assert!(scale >= self.scale);
        &self.mantissa * BigInt::from(10).pow(scale - self.scale)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let scale = self.scale.max(other.scale);
        self.scaled_to(scale).cmp(&other.scaled_to(scale))
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Decimal {
    type Err = DecimalError;

    /// Accepts `[+-]digits[.digits]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || DecimalError(s.chars().take(64).collect());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        let digits_ok = |part: &str| part.bytes().all(|b| b.is_ascii_digit());
        if int_part.is_empty()
            || int_part.len() > MAX_DIGITS
            || frac_part.len() > MAX_DIGITS
            || !digits_ok(int_part)
            || !digits_ok(frac_part)
            || (body.contains('.') && frac_part.is_empty())
        {
            return Err(err());
        }
        let mut mantissa: BigInt = format!("{int_part}{frac_part}")
            .parse()
            .map_err(|_| err())?;
        if negative {
            mantissa = -mantissa;
        }
        Ok(Self::new(mantissa, frac_part.len() as u32))
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.abs().to_string();
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let scale = self.scale as usize;
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = format!("{digits:0>width$}", width = scale + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}

/// Scaled coordinates that fit comfortably in `i128` arithmetic.
pub(crate) fn small(value: &BigInt) -> Option<i128> {
    value.to_i128().filter(|v| v.unsigned_abs() < 1 << 60)
}
