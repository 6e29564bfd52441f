//! Curves whose reduced automorphism group is cyclic: normal forms, the
//! residual dihedral action on their coefficients, and dihedral invariants.

mod catalogue;
mod reconstruct;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::forms::BinaryForm;

pub use catalogue::{group_catalogue, CatalogueRow, CycleType, GroupTag};
pub use reconstruct::{reconstruct_all, reconstruct_from_u, Reconstruction};

/// Position of the fixed points of the cyclic group relative to the
/// Weierstrass points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NormalFormCase {
    /// `y^2 = x^(2g+2) + a_1 x^(n(t-1)) + ... + a_delta x^n + 1`, `n | 2g+2`
    Even,
    /// `y^2 = x^(2g+1) + a_1 x^(n(t-1)) + ... + a_delta x^n + 1`, `n | 2g+1`
    Odd,
    /// `y^2 = x (x^(nt) + a_1 x^(n(t-1)) + ... + a_delta x^n + 1)`, `n | 2g`
    Marked,
}

impl NormalFormCase {
    pub fn number(self) -> u32 {
        match self {
            NormalFormCase::Even => 1,
            NormalFormCase::Odd => 2,
            NormalFormCase::Marked => 3,
        }
    }

    pub fn from_number(k: u32) -> Result<Self> {
        match k {
            1 => Ok(NormalFormCase::Even),
            2 => Ok(NormalFormCase::Odd),
            3 => Ok(NormalFormCase::Marked),
            _ => Err(Error::Constraint {
                constraint: format!("case {k} is not one of 1, 2, 3"),
            }),
        }
    }

    /// The quantity `n` must divide.
    fn modulus(self, g: u32) -> u32 {
        match self {
            NormalFormCase::Even => 2 * g + 2,
            NormalFormCase::Odd => 2 * g + 1,
            NormalFormCase::Marked => 2 * g,
        }
    }

    fn modulus_name(self) -> &'static str {
        match self {
            NormalFormCase::Even => "2g+2",
            NormalFormCase::Odd => "2g+1",
            NormalFormCase::Marked => "2g",
        }
    }
}

/// `t` for a case, after checking `n` divides the right quantity.
pub fn orbit_count(case: NormalFormCase, n: u32, g: u32) -> Result<u32> {
    let m = case.modulus(g);
    if n < 2 || !m.is_multiple_of(n) {
        return Err(Error::Constraint {
            constraint: format!("n | {} (n = {n}, g = {g})", case.modulus_name()),
        });
    }
    Ok(m / n)
}

/// A curve in one of the cyclic normal forms, by its coefficients
/// `a_1, ..., a_delta` with `delta = t - 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct CyclicNormalForm<F> {
    case: NormalFormCase,
    n: u32,
    genus: u32,
    coeffs: Vec<F>,
}

impl<F: Field> CyclicNormalForm<F> {
    pub fn new(case: NormalFormCase, n: u32, genus: u32, coeffs: Vec<F>) -> Result<Self> {
        let t = orbit_count(case, n, genus)?;
        if coeffs.len() + 1 != t as usize {
            return Err(Error::Constraint {
                constraint: format!(
                    "{} coefficients for t = {t}, expected {}",
                    coeffs.len(),
                    t - 1
                ),
            });
        }
        Ok(CyclicNormalForm {
            case,
            n,
            genus,
            coeffs,
        })
    }

    pub fn case(&self) -> NormalFormCase {
        self.case
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn t(&self) -> u32 {
        self.coeffs.len() as u32 + 1
    }

    pub fn delta(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1, ..., a_delta`.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    // a_i for 1 <= i <= delta
    fn a(&self, i: usize) -> &F {
        &self.coeffs[i - 1]
    }

    /// The right-hand side as a binary form of degree `2g + 2`.
    pub fn polynomial(&self) -> BinaryForm<F> {
        let n = self.n as usize;
        let t = self.t() as usize;
        let shift = usize::from(self.case == NormalFormCase::Marked);
        let mut c = vec![F::zero(); 2 * self.genus as usize + 3];
        c[shift] = F::one();
        c[n * t + shift] = F::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            // a_i multiplies x^(n(t-i))
            c[n * (t - k - 1) + shift] = a.clone();
        }
        BinaryForm::new(c.len() - 1, c).expect("length is degree + 1")
    }

    /// `u_i = a_1^(t-i) a_i + a_delta^(t-i) a_(t-i)` for `1 <= i <= delta`.
    pub fn dihedral_invariants(&self) -> DihedralInvariants<F> {
        let t = self.t();
        let delta = self.delta();
        let u = (1..=delta)
            .map(|i| {
                let e = t - i as u32;
                self.a(1).pow(e) * self.a(i) + &(self.a(delta).pow(e) * self.a(t as usize - i))
            })
            .collect();
        DihedralInvariants {
            case: self.case,
            n: self.n,
            genus: self.genus,
            u,
        }
    }

    /// Image under a generator of the residual dihedral group.
    pub fn act(&self, h: &HGenerator<F>) -> Result<Self> {
        let t = self.t();
        let coeffs = match h {
            HGenerator::Rotation(eps) => {
                if eps.pow(t) != F::one() {
                    return Err(Error::NotRootOfUnity { order: t });
                }
                // a_i -> eps^(d - n i) with d = n t, reduced mod t
                let n = self.n % t;
                (1..=self.delta())
                    .map(|i| {
                        let e = (t - (n * i as u32) % t) % t;
                        self.a(i).clone() * &eps.pow(e)
                    })
                    .collect()
            }
            HGenerator::Inversion => self.coeffs.iter().rev().cloned().collect(),
        };
        Ok(CyclicNormalForm {
            coeffs,
            ..self.clone()
        })
    }
}

/// Generators of the group `<x -> eps x, x -> 1/x>` acting on normal forms.
#[derive(Clone, PartialEq, Debug)]
pub enum HGenerator<F> {
    /// `x -> eps x` with `eps^t = 1`
    Rotation(F),
    /// `x -> 1/x`
    Inversion,
}

/// The tuple `(u_1, ..., u_delta)` together with the normal form it came from.
#[derive(Clone, PartialEq, Debug)]
pub struct DihedralInvariants<F> {
    pub case: NormalFormCase,
    pub n: u32,
    pub genus: u32,
    pub u: Vec<F>,
}

impl<F: Field> DihedralInvariants<F> {
    pub fn new(case: NormalFormCase, n: u32, genus: u32, u: Vec<F>) -> Result<Self> {
        let t = orbit_count(case, n, genus)?;
        if u.len() + 1 != t as usize {
            return Err(Error::Constraint {
                constraint: format!("{} invariants for t = {t}, expected {}", u.len(), t - 1),
            });
        }
        Ok(DihedralInvariants { case, n, genus, u })
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(Zero::is_zero)
    }

    /// `2^(g-1) u_1^2 = u_g^(g+1)`, the condition for a second pair of
    /// involutions on the `n = 2` locus.
    pub fn extra_involution_condition(&self) -> Result<bool> {
        if self.case != NormalFormCase::Even || self.n != 2 {
            return Err(Error::Constraint {
                constraint: format!(
                    "case 1 with n = 2 (got case {}, n = {})",
                    self.case.number(),
                    self.n
                ),
            });
        }
        let g = self.genus;
        let lhs = self.u[0]
            .pow(2)
            .scale(&crate::arith::Rational::from_integer(
                (1u64 << (g - 1)).into(),
            ));
        let rhs = self.u[g as usize - 1].pow(g + 1);
        Ok(lhs == rhs)
    }
}
