use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};

/// Minimum supported working precision in decimal digits.
pub const MIN_DIGITS: u32 = 15;
/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 40;

const LOG2_10: f64 = 3.321928094887362;

/// Precision context: a stated working precision `P` in decimal digits.
///
/// Internal computations carry guard digits (`10 + ceil(P/4)`); the contract
/// for every special-function operation is a relative error of at most
/// `10^(2-P)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ctx {
    digits: u32,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { digits: DEFAULT_DIGITS }
    }
}

impl Ctx {
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::Precision(format!(
                "precision {digits} below minimum {MIN_DIGITS}"
            )));
        }
        Ok(Ctx { digits })
    }

    /// Stated precision `P` in decimal digits.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Guard digits carried internally.
    pub fn guard(&self) -> u32 {
        10 + self.digits.div_ceil(4)
    }

    /// Total working digits (stated + guard).
    pub fn work_digits(&self) -> u32 {
        self.digits + self.guard()
    }

    /// Binary working precision handed to MPFR.
    pub fn bits(&self) -> u32 {
        (self.work_digits() as f64 * LOG2_10).ceil() as u32 + 8
    }

    /// A context with `extra` additional stated digits.
    pub fn deeper(&self, extra: u32) -> Ctx {
        Ctx { digits: self.digits + extra }
    }

    pub fn float(&self, v: impl Into<f64>) -> Float {
        Float::with_val(self.bits(), v.into())
    }

    pub fn int(&self, v: i64) -> Float {
        Float::with_val(self.bits(), v)
    }

    pub fn zero(&self) -> Float {
        Float::with_val(self.bits(), 0)
    }

    pub fn rational(&self, q: &Rational) -> Float {
        Float::with_val(self.bits(), q)
    }

    /// Exact ratio `p/q` at working precision.
    pub fn ratio(&self, p: i64, q: i64) -> Float {
        Float::with_val(self.bits(), Rational::from((p, q)))
    }

    /// Parse a decimal string at working precision.
    pub fn parse(&self, s: &str) -> Result<Float> {
        Float::parse(s)
            .map(|p| Float::with_val(self.bits(), p))
            .map_err(|e| Error::Domain(format!("cannot parse {s:?}: {e}")))
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits(), rug::float::Constant::Pi)
    }

    /// Euler's constant (MPFR Brent–McMillan-class computation).
    pub fn euler(&self) -> Float {
        Float::with_val(self.bits(), rug::float::Constant::Euler)
    }

    pub fn ln2(&self) -> Float {
        Float::with_val(self.bits(), rug::float::Constant::Log2)
    }

    /// `10^e` at working precision.
    pub fn pow10(&self, e: i64) -> Float {
        Float::with_val(self.bits(), 10).pow(e)
    }

    /// Working epsilon `10^-(P+guard)`: the target for internal truncations.
    pub fn work_eps(&self) -> Float {
        self.pow10(-(self.work_digits() as i64))
    }

    /// The documented result accuracy `10^(2-P)`.
    pub fn contract_eps(&self) -> Float {
        self.pow10(2 - self.digits as i64)
    }

    /// Format a float with the stated number of significant digits.
    pub fn format(&self, x: &Float) -> Float {
        let out_bits = (self.digits as f64 * LOG2_10).ceil() as u32 + 1;
        let mut y = x.clone();
        y.set_prec_round(out_bits, Round::Nearest);
        y
    }

    /// Decimal string with the stated number of significant digits.
    pub fn to_decimal(&self, x: &Float) -> String {
        format_decimal(x, self.digits as usize)
    }
}

/// Plain decimal rendering (no exponent for moderate magnitudes).
pub fn format_decimal(x: &Float, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf".into() } else { "inf".into() };
    }
    let s = x.to_string_radix(10, Some(digits.max(2)));
    s
}
