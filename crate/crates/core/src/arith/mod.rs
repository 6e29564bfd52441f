//! Exact scalars and univariate polynomials.
//!
//! Everything in the kernel is generic over [`Ring`]: exact addition,
//! subtraction, multiplication and equality, together with an embedding of
//! the rationals. Rings that are fields additionally implement [`Field`].

// Operator impls forwarding to inherent `add_ref`, `sub_ref`, `mul_ref` and
// `neg_ref`.
macro_rules! ring_ops {
    ([$($gen:tt)*] $ty:ty) => {
        impl<$($gen)*> core::ops::Add for $ty {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                self.add_ref(&rhs)
            }
        }
        impl<'a, $($gen)*> core::ops::Add<&'a $ty> for $ty {
            type Output = Self;
            fn add(self, rhs: &'a Self) -> Self {
                self.add_ref(rhs)
            }
        }
        impl<$($gen)*> core::ops::Sub for $ty {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                self.sub_ref(&rhs)
            }
        }
        impl<'a, $($gen)*> core::ops::Sub<&'a $ty> for $ty {
            type Output = Self;
            fn sub(self, rhs: &'a Self) -> Self {
                self.sub_ref(rhs)
            }
        }
        impl<$($gen)*> core::ops::Mul for $ty {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self {
                self.mul_ref(&rhs)
            }
        }
        impl<'a, $($gen)*> core::ops::Mul<&'a $ty> for $ty {
            type Output = Self;
            fn mul(self, rhs: &'a Self) -> Self {
                self.mul_ref(rhs)
            }
        }
        impl<$($gen)*> core::ops::Neg for $ty {
            type Output = Self;
            fn neg(self) -> Self {
                self.neg_ref()
            }
        }
        impl<'a, $($gen)*> core::ops::AddAssign<&'a $ty> for $ty {
            fn add_assign(&mut self, rhs: &'a Self) {
                *self = self.add_ref(rhs);
            }
        }
        impl<'a, $($gen)*> core::ops::SubAssign<&'a $ty> for $ty {
            fn sub_assign(&mut self, rhs: &'a Self) {
                *self = self.sub_ref(rhs);
            }
        }
    };
}
pub(crate) use ring_ops;

mod cyclo;
mod poly;
mod ratfunc;
mod rational;

use core::fmt::Debug;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

pub use cyclo::CycloElement;
pub use poly::UniPoly;
pub use ratfunc::RatFunc;
pub use rational::{canonical_cmp, parse_rational, rat, rational_nth_roots, Rational};

use crate::error::Result;

/// Commutative Q-algebra with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Rational) -> Self {
        self.clone() * &Self::from_rational(q)
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }
}

/// A ring together with the field its ratios live in.
///
/// Invariants of forms over `Q[mu]` are polynomials, their ratios are
/// rational functions; over a field both coincide.
pub trait FractionField: Ring {
    type Frac: Field;

    fn to_frac(&self) -> Self::Frac;
}

/// Fields in which some radicals can be extracted exactly.
pub trait RootField: Field {
    /// All `n`-th roots of `self` that lie in the field, in a fixed order.
    ///
    /// The list may be incomplete for radicands the implementation cannot
    /// decide; each type documents its coverage.
    fn nth_roots(&self, n: u32) -> alloc::vec::Vec<Self>;

    /// Total order used to pick deterministic representatives.
    fn canonical_cmp(&self, other: &Self) -> core::cmp::Ordering;
}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(crate::Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl FractionField for Rational {
    type Frac = Rational;

    fn to_frac(&self) -> Rational {
        self.clone()
    }
}

impl RootField for Rational {
    fn nth_roots(&self, n: u32) -> alloc::vec::Vec<Self> {
        rational_nth_roots(self, n)
    }

    fn canonical_cmp(&self, other: &Self) -> core::cmp::Ordering {
        canonical_cmp(self, other)
    }
}
