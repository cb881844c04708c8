//! Exact scalar types used for weight coordinates.
//!
//! Every formula in this crate branches on whether a coordinate (or a sum or
//! difference of two coordinates) is an integer, so the scalar has to be an
//! exact field. [`Scalar`] is implemented for every `Ratio<T>` over a signed
//! integer type, which covers `Ratio<i64>`, `Ratio<i128>` and `BigRational`.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::Error;

/// An exact ordered field element with integrality tests.
pub trait Scalar: Clone + Ord + Debug + Display + Signed + FromStr + Send + Sync + 'static {
    fn from_int(v: i64) -> Self;

    /// `num / den`; panics if `den == 0`.
    fn from_frac(num: i64, den: i64) -> Self;

    fn is_integral(&self) -> bool;

    /// `self - floor(self)`, in `[0, 1)`.
    fn fract_part(&self) -> Self;

    /// The value as an `i64` if it is an integer that fits.
    fn to_int(&self) -> Option<i64>;

    fn half() -> Self {
        Self::from_frac(1, 2)
    }

    /// `2 * self` is an integer.
    fn is_half_lattice(&self) -> bool {
        (self.clone() + self.clone()).is_integral()
    }

    /// In `1/2 + Z`.
    fn is_half_integral(&self) -> bool {
        !self.is_integral() && self.is_half_lattice()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Display
        + Debug
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar"))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Ratio::new(
            T::from_i64(num).expect("integer out of range for scalar"),
            T::from_i64(den).expect("integer out of range for scalar"),
        )
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn fract_part(&self) -> Self {
        self.clone() - self.floor()
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Parses the `a/b` wire format (optional sign on `a`, `b > 0`, integers as
/// plain `a`). Decimal points and exponents are rejected.
pub fn parse_rational<S: Scalar>(token: &str) -> Result<S, Error> {
    let bad = || Error::Parse {
        token: token.to_string(),
    };
    let t = token.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let digits_ok = |s: &str, signed: bool| {
        let s = if signed {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits_ok(num, true) {
        return Err(bad());
    }
    let num = num.strip_prefix('+').unwrap_or(num);
    let numer: S = num.parse().map_err(|_| bad())?;
    match den {
        None => Ok(numer),
        Some(d) => {
            if !digits_ok(d, false) {
                return Err(bad());
            }
            let denom: S = d.parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(numer / denom)
        }
    }
}

/// Comma-separated list of rationals.
pub fn parse_rational_list<S: Scalar>(list: &str) -> Result<Vec<S>, Error> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',').map(parse_rational).collect()
}

/// Canonical text form: lowest terms, positive denominator, integers
/// without a `/1` suffix. `Ratio`'s `Display` already does exactly this.
pub fn format_rational<S: Scalar>(v: &S) -> String {
    v.to_string()
}
