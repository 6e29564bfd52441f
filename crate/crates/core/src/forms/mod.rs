//! Binary forms, the `GL2` action and the transvectant.

mod catalogue;
mod classify;
mod transvect;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{Rational, Ring, UniPoly};
use crate::error::{Error, Result};

pub use catalogue::{Catalogue, Invariant, InvariantSet};
pub use classify::{
    absolute_invariants, classify_point, vanishing_invariants, vanishing_profile,
    AbsoluteInvariant, AbsoluteInvariants, Branch, ModuliPoint, A4_GENERA,
};
pub use transvect::{transvectant, Covariant};

/// Homogeneous polynomial `sum a_i X^i Z^(d-i)` of declared degree `d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm<R> {
    coeffs: Vec<R>,
}

/// `n (n-1) ... (n-k+1)`.
pub(crate) fn falling(n: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| {
        acc * Rational::from_integer((n - j).into())
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> Rational {
    falling(n, k) / falling(k, k)
}

impl<R: Ring> BinaryForm<R> {
    /// `coeffs` must hold `degree + 1` entries, `a_0` first.
    pub fn new(degree: usize, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: degree + 1,
                found: coeffs.len(),
            });
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![R::zero(); degree + 1],
        }
    }

    /// Homogenizes `p(X)` to degree `d`.
    pub fn from_poly(p: &UniPoly<R>, degree: usize) -> Result<Self> {
        if let Some(n) = p.degree().filter(|&n| n > degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: n,
            });
        }
        Ok(BinaryForm {
            coeffs: (0..=degree).map(|k| p.coeff(k)).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `F(X, 1)`.
    pub fn dehomogenize(&self) -> UniPoly<R> {
        UniPoly::new(self.coeffs.clone())
    }

    /// The coordinates `b_i = a_i / C(d, i)`.
    pub fn binomial_coords(&self) -> Vec<R> {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.scale(&binomial(d, i).recip()))
            .collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BinaryForm<S> {
        BinaryForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// `d^(kx + kz) F / dX^kx dZ^kz`, a form of degree `d - kx - kz`.
    ///
    /// Returns `None` when the total order exceeds the degree.
    pub fn partial(&self, kx: usize, kz: usize) -> Option<Self> {
        let d = self.degree();
        let out = d.checked_sub(kx + kz)?;
        let coeffs = (0..=out)
            .map(|j| {
                // X^j Z^(out-j) comes from a_i with i = j + kx
                let i = j + kx;
                let c = falling(i, kx) * falling(d - i, kz);
                self.coeffs[i].scale(&c)
            })
            .collect();
        Some(BinaryForm { coeffs })
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        BinaryForm { coeffs: out }
    }

    fn same_degree(&self, o: &Self) -> Result<()> {
        if self.degree() == o.degree() {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: o.degree(),
            })
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_degree(o)?;
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_degree(o)?;
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn eval(&self, x: &R, z: &R) -> R {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .fold(R::zero(), |acc, (i, a)| {
                acc + &(a.clone() * &x.pow(i as u32) * &z.pow((d - i) as u32))
            })
    }

    /// The single coefficient of a form of degree zero.
    pub fn as_constant(&self) -> Option<&R> {
        (self.degree() == 0).then(|| &self.coeffs[0])
    }
}

impl<R: Ring + fmt::Display> fmt::Display for BinaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({a})")?;
            match i {
                0 => {}
                1 => f.write_str("*X")?,
                _ => write!(f, "*X^{i}")?,
            }
            match d - i {
                0 => {}
                1 => f.write_str("*Z")?,
                k => write!(f, "*Z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `[[a, b], [c, d]]`, acting by `X -> aX + bZ`, `Z -> cX + dZ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Matrix2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn diag(a: R, d: R) -> Self {
        Self::new(a, R::zero(), R::zero(), d)
    }

    pub fn det(&self) -> R {
        self.a.clone() * &self.d - self.b.clone() * &self.c
    }
}

// powers of the linear form p X + q Z, as degree-k forms
fn linear_powers<R: Ring>(p: &R, q: &R, n: usize) -> Vec<BinaryForm<R>> {
    let lin = BinaryForm {
        coeffs: vec![q.clone(), p.clone()],
    };
    let mut out = Vec::with_capacity(n + 1);
    out.push(BinaryForm {
        coeffs: vec![R::one()],
    });
    for k in 0..n {
        let next = out[k].mul(&lin);
        out.push(next);
    }
    out
}

/// `F(aX + bZ, cX + dZ)`.
pub fn gl2_act<R: Ring>(m: &Matrix2<R>, f: &BinaryForm<R>) -> Result<BinaryForm<R>> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d = f.degree();
    let xs = linear_powers(&m.a, &m.b, d);
    let zs = linear_powers(&m.c, &m.d, d);
    let mut out = BinaryForm::zero(d);
    for (i, a) in f.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = xs[i].mul(&zs[d - i]).mul_scalar(a);
        out = out.add(&term)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    type F = BinaryForm<Rational>;

    fn form(c: &[i64]) -> F {
        F::new(c.len() - 1, c.iter().map(|&n| rat(n, 1)).collect()).unwrap()
    }

    #[test]
    fn partials() {
        // X^3 + 2 X Z^2
        let f = form(&[0, 2, 0, 1]);
        assert_eq!(f.partial(1, 0).unwrap(), form(&[2, 0, 3]));
        assert_eq!(f.partial(0, 1).unwrap(), form(&[0, 4, 0]));
        assert_eq!(f.partial(1, 2).unwrap(), form(&[4]));
        assert!(f.partial(2, 2).is_none());
    }

    #[test]
    fn identity_and_diagonal() {
        let f = form(&[1, -2, 3, 5, 7]);
        assert_eq!(gl2_act(&Matrix2::identity(), &f).unwrap(), f);
        let xd = form(&[0, 0, 0, 0, 1]);
        let m = Matrix2::diag(rat(3, 1), rat(1, 1));
        assert_eq!(gl2_act(&m, &xd).unwrap(), form(&[0, 0, 0, 0, 81]));
        let sing = Matrix2::new(rat(1, 1), rat(2, 1), rat(2, 1), rat(4, 1));
        assert_eq!(gl2_act(&sing, &f), Err(Error::SingularMatrix));
    }

    #[test]
    fn binomial_view() {
        let f = form(&[1, 4, 6, 4, 1]);
        assert!(f.binomial_coords().iter().all(|b| *b == rat(1, 1)));
    }
}
