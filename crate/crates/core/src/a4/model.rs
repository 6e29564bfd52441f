use alloc::vec::Vec;

use crate::arith::{Ring, UniPoly};
use crate::error::{Error, Result};
use crate::forms::{BinaryForm, A4_GENERA};

/// Which reading of the one-parameter models to build.
///
/// `Transcribed` is the model as first recorded; `Corrected` replaces the
/// factors that fail the vanishing conditions of their genus. The two differ
/// only for `g = 7, 10, 12`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ModelVariant {
    Transcribed,
    Corrected,
}

impl ModelVariant {
    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::Transcribed => "transcribed",
            ModelVariant::Corrected => "corrected",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [ModelVariant::Transcribed, ModelVariant::Corrected]
            .into_iter()
            .find(|v| v.name() == s)
    }

    /// Whether the two variants give different curves in genus `g`.
    pub fn differs(g: u32) -> bool {
        matches!(g, 7 | 10 | 12)
    }
}

// polynomial in X from (power of mu, integer coefficient) pairs per degree
fn mu_poly<R: Ring>(mu: &R, terms: &[(usize, u32, i64)]) -> UniPoly<R> {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c: Vec<R> = (0..=deg).map(|_| R::zero()).collect();
    for &(k, e, n) in terms {
        c[k] += &(mu.pow(e) * &R::from_int(n));
    }
    UniPoly::new(c)
}

/// `mu^3 X^12 - mu^3 X^10 - 33 mu^2 X^8 + 2 mu^2 X^6 - 33 mu X^4 - mu X^2 + 1`.
pub fn m_polynomial<R: Ring>(mu: &R) -> UniPoly<R> {
    mu_poly(
        mu,
        &[
            (12, 3, 1),
            (10, 3, -1),
            (8, 2, -33),
            (6, 2, 2),
            (4, 1, -33),
            (2, 1, -1),
            (0, 0, 1),
        ],
    )
}

// the degree-12 factor of the g = 7, 10 models
fn sextic_factor<R: Ring>(mu: &R, v: ModelVariant) -> UniPoly<R> {
    match v {
        ModelVariant::Transcribed => mu_poly(
            mu,
            &[
                (12, 0, 27),
                (10, 1, -27),
                (8, 0, 297),
                (6, 0, -18),
                (4, 0, -99),
                (2, 1, 3),
                (0, 0, 1),
            ],
        ),
        ModelVariant::Corrected => mu_poly(
            mu,
            &[
                (12, 0, 27),
                (10, 1, -27),
                (8, 0, 297),
                (6, 1, -18),
                (4, 0, -99),
                (2, 1, -3),
                (0, 0, -1),
            ],
        ),
    }
}

// mu^2 X^8 + 14 mu X^4 + 1
fn octic_factor<R: Ring>(mu: &R) -> UniPoly<R> {
    mu_poly(mu, &[(8, 2, 1), (4, 1, 14), (0, 0, 1)])
}

/// The one-parameter model of the `A4` locus in genus `g`, as a form of
/// degree `2g + 2`. For `g = 4` the locus is a point and `mu` is ignored.
pub fn rational_model<R: Ring>(g: u32, mu: &R, variant: ModelVariant) -> Result<BinaryForm<R>> {
    if !A4_GENERA.contains(&g) {
        return Err(Error::UnsupportedGenus { genus: g });
    }
    let x = UniPoly::<R>::x();
    let quartic = UniPoly::from_ints(&[-1, 0, 6, 0, 3]);
    let mu_x4 = mu_poly(mu, &[(4, 1, 1), (0, 0, -1)]);
    let p = match g {
        4 => x * &UniPoly::from_ints(&[1, 0, 0, 0, 3]) * &quartic,
        5 => m_polynomial(mu),
        7 => quartic * &sextic_factor(mu, variant),
        8 => x * &mu_x4 * &m_polynomial(mu),
        9 => octic_factor(mu) * &m_polynomial(mu),
        10 => x * &UniPoly::from_ints(&[1, 0, 0, 0, 3]) * &quartic * &sextic_factor(mu, variant),
        _ => {
            let octic = match variant {
                ModelVariant::Transcribed => mu_poly(mu, &[(8, 2, 1), (1, 1, 1), (0, 0, 1)]),
                ModelVariant::Corrected => octic_factor(mu),
            };
            x * &mu_x4 * &octic * &m_polynomial(mu)
        }
    };
    BinaryForm::from_poly(&p, 2 * g as usize + 2)
}
