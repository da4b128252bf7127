//! Exact rational scalars and their text form.
//!
//! Every coefficient in the engine is a rational number with
//! arbitrary-precision integer parts; floating point never appears. The text
//! form is `p` for integers and `p/q` otherwise, with q > 0 and gcd(p,q) = 1
//! — the canonical form the backing type maintains.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n` as an exact rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational, reduced with positive denominator.
///
/// Panics if `d = 0`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` (optionally signed); rejects a zero denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer_text.parse().map_err(|e| Error::Parse {
        what: "rational",
        text: text.to_string(),
        reason: format!("bad numerator: {e}"),
    })?;
    let denom: BigInt = denom_text.parse().map_err(|e| Error::Parse {
        what: "rational",
        text: text.to_string(),
        reason: format!("bad denominator: {e}"),
    })?;
    if denom.is_zero() {
        return Err(Error::Parse {
            what: "rational",
            text: text.to_string(),
            reason: "zero denominator".to_string(),
        });
    }
    Ok(BigRational::new(numer, denom))
}

/// Generalized binomial coefficient C(e, k) = e(e−1)…(e−k+1)/k! for any
/// integer e, possibly negative. Always an integer; in particular
/// C(−f, k) = (−1)^k C(f+k−1, k).
pub fn binomial(e: &BigInt, k: u32) -> BigInt {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc *= BigRational::new(e - BigInt::from(j), BigInt::from(j + 1));
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

/// Sign of a rational: −1, 0, or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
