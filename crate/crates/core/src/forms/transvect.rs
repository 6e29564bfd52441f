use crate::arith::Ring;
use crate::error::{Error, Result};

use super::{binomial, falling, BinaryForm};

/// The `r`-th transvectant of two binary forms.
///
/// `(f, g)^r = (m-r)! (n-r)! / (m! n!) * sum_k (-1)^k C(r, k)
/// d^r f / dX^(r-k) dZ^k * d^r g / dX^k dZ^(r-k)`,
/// computed on the stored coefficients.
pub fn transvectant<R: Ring>(
    f: &BinaryForm<R>,
    g: &BinaryForm<R>,
    r: usize,
) -> Result<BinaryForm<R>> {
    let (m, n) = (f.degree(), g.degree());
    if r > m || r > n {
        return Err(Error::TransvectantOrder {
            r,
            left: m,
            right: n,
        });
    }
    let mut acc = BinaryForm::zero(m + n - 2 * r);
    for k in 0..=r {
        let df = f.partial(r - k, k).expect("r <= m");
        let dg = g.partial(k, r - k).expect("r <= n");
        let mut c = binomial(r, k);
        if k % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&df.mul(&dg).scale(&c))?;
    }
    let pre = (falling(m, r) * falling(n, r)).recip();
    Ok(acc.scale(&pre))
}

/// A form produced from a source form of degree `d` by transvection,
/// with its degree in the source coefficients and its index.
#[derive(Clone, PartialEq, Debug)]
pub struct Covariant<R> {
    form: BinaryForm<R>,
    degree: usize,
    index: usize,
    source_degree: usize,
}

impl<R: Ring> Covariant<R> {
    /// The source form itself: degree 1, index 0.
    pub fn source(f: BinaryForm<R>) -> Self {
        let d = f.degree();
        Covariant {
            form: f,
            degree: 1,
            index: 0,
            source_degree: d,
        }
    }

    pub fn form(&self) -> &BinaryForm<R> {
        &self.form
    }

    pub fn into_form(self) -> BinaryForm<R> {
        self.form
    }

    /// Degree in the coefficients of the source form.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Degree in `X, Z`.
    pub fn order(&self) -> usize {
        self.form.degree()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    pub fn is_invariant(&self) -> bool {
        self.order() == 0
    }

    pub fn transvect(&self, o: &Self, r: usize) -> Result<Self> {
        if self.source_degree != o.source_degree {
            return Err(Error::SourceMismatch {
                left: self.source_degree,
                right: o.source_degree,
            });
        }
        Ok(Covariant {
            form: transvectant(&self.form, &o.form, r)?,
            degree: self.degree + o.degree,
            index: self.index + o.index + r,
            source_degree: self.source_degree,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};
    use alloc::vec::Vec;

    fn form(c: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(
            c.len() - 1,
            c.iter().map(|&n| rat(n, 1)).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn hand_expanded_values() {
        // X^2 + Z^2: f_XX g_ZZ + f_ZZ g_XX = 8, times 1/4
        let f = form(&[1, 0, 1]);
        assert_eq!(transvectant(&f, &f, 2).unwrap(), form(&[2]));
        // XZ: -2 f_XZ g_XZ = -2, times 1/4
        let h = form(&[0, 1, 0]);
        assert_eq!(transvectant(&h, &h, 2).unwrap().coeffs(), &[rat(-1, 2)]);
    }

    #[test]
    fn zeroth_is_product() {
        let f = form(&[1, 2, 3]);
        let g = form(&[0, -1, 4, 5]);
        assert_eq!(transvectant(&f, &g, 0).unwrap(), f.mul(&g));
    }

    #[test]
    fn order_bound() {
        let f = form(&[1, 2, 3]);
        assert!(matches!(
            transvectant(&f, &f, 3),
            Err(Error::TransvectantOrder { .. })
        ));
    }

    #[test]
    fn metadata() {
        let f = Covariant::source(form(&[1, 0, 3, 0, 2, 1, 1]));
        let j4 = f.transvect(&f, 4).unwrap();
        let i = j4.transvect(&j4, 4).unwrap();
        assert_eq!((j4.degree(), j4.order(), j4.index()), (2, 4, 4));
        assert_eq!((i.degree(), i.order(), i.index()), (4, 0, 12));
        for c in [&j4, &i] {
            assert_eq!(2 * c.index(), c.degree() * c.source_degree() - c.order());
        }
    }
}
