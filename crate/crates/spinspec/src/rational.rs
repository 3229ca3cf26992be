//! Exact rational scalars.
//!
//! Every eigenvalue in this crate is a rational number and every multiplicity
//! an integer; no floating point appears anywhere. `Rational` is backed by
//! `num_rational::BigRational`, which keeps values in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Integer = BigInt;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Half-integer `p/2`.
pub fn half(p: i64) -> Rational {
    ratio(p, 2)
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True iff `r` lies in `Z + 1/2`.
pub fn is_strict_half_integer(r: &Rational) -> bool {
    *r.denom() == BigInt::from(2)
}

/// Doubles `r` and returns the result as an integer; errors unless `r` is a
/// half-integer.
pub fn doubled(r: &Rational) -> Result<Integer> {
    let two = rat(2) * r;
    if !is_integer(&two) {
        return Err(Error::InvalidParameter(format!(
            "{r} is not a half-integer"
        )));
    }
    Ok(two.to_integer())
}

/// Parses "3/2", "-1/2", "7".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Canonical rendering: "p/q", integers without "/1".
pub fn format_rational(r: &Rational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact square root test: returns `s` with `s*s == r` when `r` is a perfect
/// square of rationals.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    let cand = BigRational::new(num, den);
    (&cand * &cand == *r).then_some(cand)
}
