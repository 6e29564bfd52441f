use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{canonical_cmp, Field, FractionField, RatFunc, Rational, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial, lowest degree first.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `a + b x` from integers.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::new(vec![R::from_int(a), R::from_int(b)])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// Substitutes another polynomial for the indeterminate.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul_ref(inner) + &Self::constant(c.clone())
        })
    }

    fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + &o.coeff(k)).collect())
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Self::new(out)
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![F::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = rem[k + d].clone() * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(c.clone() * b);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Constraint {
                constraint: String::from("exact polynomial division"),
            })
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                self.mul_scalar(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keeping remainders monic stops coefficient growth over Q
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }
}

impl UniPoly<Rational> {
    /// Scales to an integer polynomial with content one and a positive
    /// leading coefficient; returns the scalar `c` with `self = c * result`.
    pub fn primitive_integer_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::one(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if self.coeffs.last().is_some_and(|l| l.is_negative()) {
            content = -content;
        }
        let prim = ints.into_iter().map(|c| c / &content).collect();
        (Rational::new(content, lcm), prim)
    }

    /// Distinct rational roots in canonical order.
    ///
    /// Linear and quadratic squarefree factors are solved in closed form;
    /// higher degrees use the rational root test with divisors of the
    /// leading and constant coefficients.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::Constraint {
                constraint: String::from("roots of the zero polynomial"),
            });
        }
        let mut p = self.squarefree_part()?;
        let mut roots = Vec::new();
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            p = p.exact_div(&Self::x())?;
        }
        match p.degree() {
            Some(0) => {}
            Some(1) => roots.push(-&p.coeffs[0] / &p.coeffs[1]),
            Some(2) => {
                let (c, b, a) = (&p.coeffs[0], &p.coeffs[1], &p.coeffs[2]);
                let disc = b * b - Rational::from_integer(4.into()) * a * c;
                for s in super::rational_nth_roots(&disc, 2) {
                    let r = (-b + s) / (Rational::from_integer(2.into()) * a);
                    if !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
            _ => {
                let (_, ints) = p.primitive_integer_part();
                let lead = ints.last().cloned().unwrap_or_default();
                let constant = ints[0].clone();
                for num in divisors(&constant) {
                    for den in divisors(&lead) {
                        for sign in [-1, 1] {
                            let r = Rational::new(&num * BigInt::from(sign), den.clone());
                            if !roots.contains(&r) && p.eval(&r).is_zero() {
                                roots.push(r);
                            }
                        }
                    }
                }
            }
        }
        roots.sort_by(canonical_cmp);
        Ok(roots)
    }
}

// positive divisors by trial division
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut m = d.clone();
            for _ in 0..=e {
                next.push(m.clone());
                m *= &p;
            }
        }
        out = next;
    }
    out
}

super::ring_ops!([R: Ring] UniPoly<R>);

impl<R: Ring> Zero for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for UniPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    fn scale(&self, q: &Rational) -> Self {
        UniPoly::scale(self, q)
    }
}

impl<F: Field> FractionField for UniPoly<F> {
    type Frac = RatFunc<F>;

    fn to_frac(&self) -> RatFunc<F> {
        RatFunc::from_poly(self.clone())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    type P = UniPoly<Rational>;

    #[test]
    fn gcd_basic() {
        let a = P::from_ints(&[-1, 0, 1]);
        let b = P::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);
        let p = P::from_ints(&[4, 0, 2]);
        assert_eq!(p.gcd(&P::zero()).unwrap(), P::from_ints(&[2, 0, 1]));
        assert_eq!(P::zero().gcd(&P::zero()), Err(Error::ZeroGcd));
    }

    #[test]
    fn division_identity() {
        let a = P::from_ints(&[3, -2, 0, 5, 7]);
        let b = P::from_ints(&[1, 0, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q * &b + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn roots_of_products() {
        let p = P::linear(3, -5) * &P::linear(-7, 2) * &P::linear(1, 1) * &P::from_ints(&[1, 0, 1]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![rat(-1, 1), rat(3, 5), rat(7, 2)]
        );
        let q = P::linear(3, -5) * &P::linear(3, -5) * &P::from_ints(&[2, 0, 1]);
        assert_eq!(q.rational_roots().unwrap(), vec![rat(3, 5)]);
        let quad = P::linear(1, 4) * &P::linear(-2, 3);
        assert_eq!(quad.rational_roots().unwrap(), vec![rat(-1, 4), rat(2, 3)]);
    }

    #[test]
    fn primitive_part() {
        let p = P::new(vec![rat(1, 2), rat(-3, 4)]);
        let (c, ints) = p.primitive_integer_part();
        assert_eq!(ints, vec![BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(c, rat(-1, 4));
    }

    #[test]
    fn compose_and_derivative() {
        let p = P::from_ints(&[1, 0, 1]);
        let shifted = p.compose(&P::linear(1, 1));
        assert_eq!(shifted, P::from_ints(&[2, 2, 1]));
        assert_eq!(shifted.derivative(), P::from_ints(&[2, 2]));
    }
}
