use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{rational_nth_roots, Field, FractionField, Rational, Ring, RootField};
use crate::error::{Error, Result};

/// Element `c0 + c1*i + c2*sqrt3 + c3*i*sqrt3` of the biquadratic field
/// Q(i, sqrt3).
///
/// The field contains the twelfth roots of unity; `zeta12 = (sqrt3 + i) / 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloElement {
    c: [Rational; 4],
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl CycloElement {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        CycloElement {
            c: [c0, c1, c2, c3],
        }
    }

    pub fn from_coords(c: [Rational; 4]) -> Self {
        CycloElement { c }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn i() -> Self {
        Self::new(q(0), q(1), q(0), q(0))
    }

    pub fn sqrt3() -> Self {
        Self::new(q(0), q(0), q(1), q(0))
    }

    pub fn i_sqrt3() -> Self {
        Self::new(q(0), q(0), q(0), q(1))
    }

    /// `(sqrt3 + i) / 2`, a primitive twelfth root of unity.
    pub fn zeta12() -> Self {
        let h = Rational::new(1.into(), 2.into());
        Self::new(q(0), h.clone(), h, q(0))
    }

    /// A primitive `order`-th root of unity, available for `order | 12`.
    pub fn primitive_root_of_unity(order: u32) -> Result<Self> {
        if order == 0 || 12 % order != 0 {
            return Err(Error::UnrepresentableRootOfUnity { order });
        }
        Ok(Self::zeta12().pow(12 / order))
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    /// Automorphism `i -> -i`.
    pub fn conj_i(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a.clone(), -b, c.clone(), -d)
    }

    /// Automorphism `sqrt3 -> -sqrt3`.
    pub fn conj_sqrt3(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a.clone(), b.clone(), -c, -d)
    }

    fn add_ref(&self, o: &Self) -> Self {
        Self::from_coords(core::array::from_fn(|k| &self.c[k] + &o.c[k]))
    }

    fn sub_ref(&self, o: &Self) -> Self {
        Self::from_coords(core::array::from_fn(|k| &self.c[k] - &o.c[k]))
    }

    fn neg_ref(&self) -> Self {
        Self::from_coords(core::array::from_fn(|k| -&self.c[k]))
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let three = q(3);
        // i^2 = -1, sqrt3^2 = 3, i*sqrt3 * sqrt3 = 3i, i * i*sqrt3 = -sqrt3
        let c0 = a0 * b0 - a1 * b1 + &three * (a2 * b2 - a3 * b3);
        let c1 = a0 * b1 + a1 * b0 + &three * (a2 * b3 + a3 * b2);
        let c2 = a0 * b2 + a2 * b0 - (a1 * b3 + a3 * b1);
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Self::new(c0, c1, c2, c3)
    }

    /// Absolute norm to Q.
    pub fn norm(&self) -> Rational {
        let (p, s) = self.norm_to_q3();
        &p * &p - q(3) * &s * &s
    }

    // x * conj_i(x) lies in Q(sqrt3); returned as (p, s) meaning p + s*sqrt3
    fn norm_to_q3(&self) -> (Rational, Rational) {
        let n = self.mul_ref(&self.conj_i());
        let [p, _, s, _] = n.c;
        (p, s)
    }

    /// Both square roots, or none if `self` is not a square in the field.
    pub fn sqrt(&self) -> Option<Self> {
        let alpha = (self.c[0].clone(), self.c[2].clone());
        let beta = (self.c[1].clone(), self.c[3].clone());
        if beta.0.is_zero() && beta.1.is_zero() {
            if let Some((r, s)) = q3_sqrt(&alpha) {
                return Some(Self::new(r, q(0), s, q(0)));
            }
            let (r, s) = q3_sqrt(&(-&alpha.0, -&alpha.1))?;
            return Some(Self::new(q(0), r, q(0), s));
        }
        // (c + d i)^2 = alpha + beta i with c, d in Q(sqrt3)
        let modulus = q3_add(&q3_mul(&alpha, &alpha), &q3_mul(&beta, &beta));
        let root = q3_sqrt(&modulus)?;
        for sign in [1i64, -1] {
            let n = (&root.0 * q(sign), &root.1 * q(sign));
            let half = Rational::new(1.into(), 2.into());
            let c_sq = ((&alpha.0 + &n.0) * &half, (&alpha.1 + &n.1) * &half);
            let Some(c) = q3_sqrt(&c_sq) else { continue };
            if c.0.is_zero() && c.1.is_zero() {
                continue;
            }
            let two_c = (&c.0 * q(2), &c.1 * q(2));
            let d = q3_mul(&beta, &q3_inv(&two_c));
            return Some(Self::new(c.0, d.0, c.1, d.1));
        }
        None
    }

    // x = r * zeta12^k with r rational
    fn rational_times_root_of_unity(&self) -> Option<(Rational, u32)> {
        let inv_zeta = Self::zeta12().conj_i();
        let mut y = self.clone();
        for k in 0..12 {
            if let Some(r) = y.as_rational() {
                return Some((r.clone(), k));
            }
            y = y.mul_ref(&inv_zeta);
        }
        None
    }

    fn cube_roots(&self) -> Vec<Self> {
        let Some((r, k)) = self.rational_times_root_of_unity() else {
            return Vec::new();
        };
        if k % 3 != 0 {
            return Vec::new();
        }
        let Some(base) = rational_nth_roots(&r, 3).into_iter().next() else {
            return Vec::new();
        };
        let zeta = Self::zeta12();
        (0..3)
            .map(|m| Self::from_rational(&base).mul_ref(&zeta.pow(k / 3 + 4 * m)))
            .collect()
    }
}

type Q3 = (Rational, Rational);

fn q3_add(a: &Q3, b: &Q3) -> Q3 {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn q3_mul(a: &Q3, b: &Q3) -> Q3 {
    (&a.0 * &b.0 + q(3) * &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn q3_inv(a: &Q3) -> Q3 {
    let n = &a.0 * &a.0 - q(3) * &a.1 * &a.1;
    (&a.0 / &n, -&a.1 / &n)
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    rational_nth_roots(x, 2).pop()
}

// square root in Q(sqrt3)
fn q3_sqrt(a: &Q3) -> Option<Q3> {
    let (p, s) = a;
    if s.is_zero() {
        if let Some(r) = rational_sqrt(p) {
            return Some((r, q(0)));
        }
        return rational_sqrt(&(p / q(3))).map(|r| (q(0), r));
    }
    // (r + t sqrt3)^2 = r^2 + 3t^2 + 2rt sqrt3
    let m = rational_sqrt(&(p * p - q(3) * s * s))?;
    for cand in [p + &m, p - &m] {
        let r_sq = cand / q(2);
        if !r_sq.is_positive() {
            continue;
        }
        if let Some(r) = rational_sqrt(&r_sq) {
            let t = s / (q(2) * &r);
            return Some((r, t));
        }
    }
    None
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "*i", "*sqrt3", "*i*sqrt3"];
        let mut first = true;
        for (c, name) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){name}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

super::ring_ops!([] CycloElement);

impl Zero for CycloElement {
    fn zero() -> Self {
        Self::from_coords(core::array::from_fn(|_| q(0)))
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CycloElement {
    fn one() -> Self {
        Self::new(q(1), q(0), q(0), q(0))
    }
}

impl Ring for CycloElement {
    fn from_rational(r: &Rational) -> Self {
        Self::new(r.clone(), q(0), q(0), q(0))
    }

    fn scale(&self, r: &Rational) -> Self {
        Self::from_coords(core::array::from_fn(|k| &self.c[k] * r))
    }
}

impl Field for CycloElement {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x^-1 = conj_i(x) * (p - s sqrt3) / (p^2 - 3 s^2)
        let (p, s) = self.norm_to_q3();
        let n = &p * &p - q(3) * &s * &s;
        let adj = Self::new(p, q(0), -s, q(0));
        Ok(self.conj_i().mul_ref(&adj).scale(&n.recip()))
    }
}

impl FractionField for CycloElement {
    type Frac = CycloElement;

    fn to_frac(&self) -> Self {
        self.clone()
    }
}

/// Square roots are complete. Cube roots are found when the radicand is a
/// rational multiple of a twelfth root of unity; other prime orders only for
/// rational radicands.
impl RootField for CycloElement {
    fn nth_roots(&self, n: u32) -> Vec<Self> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 || self.is_zero() {
            return vec![self.clone()];
        }
        let step: Vec<Self> = if n.is_multiple_of(2) {
            match self.sqrt() {
                Some(r) => vec![r.neg_ref(), r],
                None => Vec::new(),
            }
        } else if n.is_multiple_of(3) {
            self.cube_roots()
        } else {
            return match self.as_rational() {
                Some(r) => rational_nth_roots(r, n)
                    .iter()
                    .map(Self::from_rational)
                    .collect(),
                None => Vec::new(),
            };
        };
        let rest = if n.is_multiple_of(2) { n / 2 } else { n / 3 };
        let mut out: Vec<Self> = Vec::new();
        for s in step {
            for r in s.nth_roots(rest) {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
        out
    }

    // coordinate by coordinate
    fn canonical_cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| super::canonical_cmp(a, b))
            .find(|o| o.is_ne())
            .unwrap_or(core::cmp::Ordering::Equal)
    }
}
