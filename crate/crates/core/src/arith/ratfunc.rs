use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Field, FractionField, Rational, Ring, UniPoly};
use crate::error::{Error, Result};

/// Quotient of polynomials over a field, kept in lowest terms with a monic
/// denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lead = den.leading().expect("nonzero").inv()?;
        Ok(RatFunc {
            num: num.mul_scalar(&lead),
            den: den.mul_scalar(&lead),
        })
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole {
                at: alloc::format!("{x:?}"),
            });
        }
        self.num.eval(x).div(&d)
    }

    /// Evaluates after embedding the coefficients into a larger field.
    pub fn eval_in<K: Field>(&self, x: &K, embed: impl Fn(&F) -> K) -> Result<K> {
        let d = self.den.map(&embed).eval(x);
        if d.is_zero() {
            return Err(Error::Pole {
                at: alloc::format!("{x:?}"),
            });
        }
        self.num.map(&embed).eval(x).div(&d)
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.clone() + &o.num, self.den.clone()).expect("nonzero den");
        }
        Self::new(
            self.num.clone() * &o.den + &(o.num.clone() * &self.den),
            self.den.clone() * &o.den,
        )
        .expect("nonzero den")
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        RatFunc {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        Self::new(self.num.clone() * &o.num, self.den.clone() * &o.den).expect("nonzero den")
    }
}

impl RatFunc<Rational> {
    /// Numerator and denominator as integer polynomials without a common
    /// integer factor, leading denominator coefficient positive (lowest degree
    /// first).
    pub fn integer_normal_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let (cn, num) = self.num.primitive_integer_part();
        let (cd, den) = self.den.primitive_integer_part();
        // self = (cn / cd) * num / den; fold the ratio back into integers
        let ratio = cn / cd;
        let num = num.into_iter().map(|c| c * ratio.numer()).collect();
        let den = den.into_iter().map(|c| c * ratio.denom()).collect();
        (num, den)
    }
}

super::ring_ops!([F: Field] RatFunc<F>);

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<F: Field> FractionField for RatFunc<F> {
    type Frac = RatFunc<F>;

    fn to_frac(&self) -> Self {
        self.clone()
    }
}

impl<F: Field + fmt::Display> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    type P = UniPoly<Rational>;
    type RF = RatFunc<Rational>;

    #[test]
    fn eval_and_pole() {
        let f = RF::new(P::from_ints(&[1, 0, 1]), P::x()).unwrap();
        assert_eq!(f.eval(&rat(2, 1)).unwrap(), rat(5, 2));
        assert!(matches!(f.eval(&rat(0, 1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn lowest_terms() {
        let p = P::from_ints(&[1, 2]);
        let q = P::from_ints(&[3, 0, 1]);
        let g = P::from_ints(&[-5, 1, 1]);
        let a = RF::new(p.clone() * &g, q.clone() * &g).unwrap();
        let b = RF::new(p, q).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den().leading(), Some(&rat(1, 1)));
    }

    #[test]
    fn integer_form() {
        let f = RF::new(P::new(vec![rat(1, 2), rat(1, 3)]), P::from_ints(&[4, 2])).unwrap();
        let (n, d) = f.integer_normal_form();
        // (1/2 + x/3) / (4 + 2x) = (3 + 2x) / (24 + 12x)
        assert_eq!(n, vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(d, vec![BigInt::from(24), BigInt::from(12)]);
    }
}
