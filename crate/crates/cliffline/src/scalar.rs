//! Exact field arithmetic.
//!
//! Every computation in this crate runs over the rationals with arbitrary
//! precision. `Scalar` values are always in lowest terms with a positive
//! denominator, so structural equality is field equality and hashing is
//! well defined.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, kept reduced with positive denominator.
pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar from a numerator/denominator pair. Panics on zero denominator.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a scalar: -1, 0, or 1.
pub fn sign(s: &Scalar) -> i8 {
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact square root if `s` is a square in the rationals.
///
/// Returns the root with positive numerator; the root of zero is zero.
pub fn square_root(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    if s.is_zero() {
        return Some(Scalar::zero());
    }
    let n = s.numer();
    let d = s.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Whether `s` is a square in the rationals.
pub fn is_square(s: &Scalar) -> bool {
    square_root(s).is_some()
}

/// Render a scalar as `n` or `n/d`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Render a coordinate vector as space-separated scalars.
pub fn fmt_vec(v: &[Scalar]) -> String {
    v.iter().map(fmt_scalar).collect::<Vec<_>>().join(" ")
}

/// Parse `n` or `n/d` with arbitrary-precision integers.
///
/// `offset` is the position of the token in its surrounding input and is
/// only used to report errors.
pub fn parse_scalar(tok: &str, offset: usize) -> Result<Scalar> {
    let err = |message: String| Error::Parse { offset, message };
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| err(format!("`{t}` is not an integer")))
    };
    match tok.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(tok)?)),
        Some((n, d)) => {
            let numer = parse_int(n)?;
            let denom = parse_int(d)?;
            if denom.is_zero() {
                return Err(err(format!("`{tok}` has a zero denominator")));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Total order used for deterministic labeling: absolute value ascending,
/// ties broken with positive before negative.
///
/// This makes `1` precede `-1`, which is what pins the left/right labeling
/// of the invariant planes (see `klein`).
pub fn label_cmp(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match a.abs().cmp(&b.abs()) {
        Ordering::Equal => sign(b).cmp(&sign(a)),
        other => other,
    }
}
