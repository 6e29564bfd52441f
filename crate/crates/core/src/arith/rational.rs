use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parses `"p/q"` or `"p"` with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        input: s.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Ordering used for deterministic tie-breaks: negatives before zero before
/// positives, then by absolute value.
pub fn canonical_cmp(a: &Rational, b: &Rational) -> Ordering {
    let rank = |q: &Rational| match q.numer().sign() {
        Sign::Minus => 0,
        Sign::NoSign => 1,
        Sign::Plus => 2,
    };
    rank(a).cmp(&rank(b)).then_with(|| a.abs().cmp(&b.abs()))
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    if Pow::pow(&r, k) == *n {
        Some(r)
    } else {
        None
    }
}

/// Rational `n`-th roots of `q`, in [`canonical_cmp`] order.
pub fn rational_nth_roots(q: &Rational, n: u32) -> Vec<Rational> {
    if n == 0 {
        return Vec::new();
    }
    if q.is_zero() {
        return vec![Rational::zero()];
    }
    if q.is_negative() && n.is_multiple_of(2) {
        return Vec::new();
    }
    let (Some(num), Some(den)) = (exact_root(&q.numer().abs(), n), exact_root(q.denom(), n)) else {
        return Vec::new();
    };
    let r = Rational::new(num, den);
    if n.is_multiple_of(2) {
        vec![-r.clone(), r]
    } else if q.is_negative() {
        vec![-r]
    } else {
        vec![r]
    }
}
