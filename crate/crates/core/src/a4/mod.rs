//! Curves whose reduced automorphism group is `A4`: the degree-12 quotient
//! map, the branch polynomials, curve models and the genus `<= 12` loci.

mod locus;
mod model;
mod verify;

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{CycloElement, Field, Ring, UniPoly};
use crate::cyclic::GroupTag;
use crate::error::{Error, Result};
use crate::forms::BinaryForm;

pub use locus::{
    l5_gradient, l5_is_singular, l5_relation, locus_parametrization, recover_mu, DegenerateLocus,
    EntryStatus, LocusComponent, LocusEntry, LocusTable, LocusValue, SpecialValue,
};
pub use model::{rational_model, ModelVariant};
pub use verify::{verify_locus, Check, LocusReport};

/// A point of the projective line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum P1<F> {
    Finite(F),
    Infinity,
}

impl<F> P1<F> {
    pub fn finite(self) -> Option<F> {
        match self {
            P1::Finite(x) => Some(x),
            P1::Infinity => None,
        }
    }
}

/// `X^12 - 33 X^8 - 33 X^4 + 1`.
pub fn phi_numerator<R: Ring>() -> UniPoly<R> {
    UniPoly::from_ints(&[1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1])
}

/// `X^2 (X^4 - 1)^2`.
pub fn phi_denominator<R: Ring>() -> UniPoly<R> {
    UniPoly::from_ints(&[0, 0, 1, 0, 0, 0, -2, 0, 0, 0, 1])
}

/// The degree-12 invariant function of `A4`, with poles at `0, +-1, +-i`
/// and infinity.
pub fn klein_phi<F: Field>(t: &P1<F>) -> Result<P1<F>> {
    let t = match t {
        P1::Infinity => return Ok(P1::Infinity),
        P1::Finite(t) => t,
    };
    let den = phi_denominator::<F>().eval(t);
    if den.is_zero() {
        return Ok(P1::Infinity);
    }
    Ok(P1::Finite(phi_numerator::<F>().eval(t).div(&den)?))
}

/// `X^12 - l X^10 - 33 X^8 + 2 l X^6 - 33 X^4 - l X^2 + 1` as a form of
/// degree 12.
pub fn build_g<R: Ring>(lambda: &R) -> BinaryForm<R> {
    let c = R::from_int;
    let l = lambda.clone();
    let coeffs = [
        c(1),
        R::zero(),
        -l.clone(),
        R::zero(),
        c(-33),
        R::zero(),
        l.clone() * &c(2),
        R::zero(),
        c(-33),
        R::zero(),
        -l,
        R::zero(),
        c(1),
    ];
    BinaryForm::new(12, coeffs.to_vec()).expect("13 coefficients")
}

/// The two exclusions on a branch parameter `lambda`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BranchConditions {
    /// `lambda^2 + 108 != 0`: `lambda` is not one of the branch points
    /// `+-6 i sqrt3`.
    pub off_branch_points: bool,
    /// `lambda^2 != 108`.
    pub lambda_sq_ne_108: bool,
}

impl BranchConditions {
    pub fn holds(&self) -> bool {
        self.off_branch_points && self.lambda_sq_ne_108
    }
}

pub fn branch_conditions<R: Ring>(lambda: &R) -> BranchConditions {
    let sq = lambda.clone() * lambda;
    BranchConditions {
        off_branch_points: !(sq.clone() + &R::from_int(108)).is_zero(),
        lambda_sq_ne_108: sq != R::from_int(108),
    }
}

/// The twelve maps of the `A4` action, in orbit order.
pub const ORBIT_MAPS: [&str; 12] = [
    "t",
    "(t-i)/(t+i)",
    "-i(t+1)/(t-1)",
    "(t+i)/(t-i)",
    "-i(t-1)/(t+1)",
    "1/t",
    "-t",
    "-(t-i)/(t+i)",
    "i(t+1)/(t-1)",
    "-(t+i)/(t-i)",
    "i(t-1)/(t+1)",
    "-1/t",
];

/// The `A4` orbit of a point of the line, in the order of [`ORBIT_MAPS`].
pub fn a4_orbit(t: &CycloElement) -> Result<Vec<CycloElement>> {
    let i = CycloElement::i();
    let one = CycloElement::from_int(1);
    let frac = |k: usize, num: CycloElement, den: CycloElement| -> Result<CycloElement> {
        if den.is_zero() {
            return Err(Error::OrbitPole {
                transformation: ORBIT_MAPS[k],
            });
        }
        num.div(&den)
    };
    let t = t.clone();
    let tmi = t.clone() - &i;
    let tpi = t.clone() + &i;
    let tp1 = t.clone() + &one;
    let tm1 = t.clone() - &one;
    let a1 = frac(1, tmi.clone(), tpi.clone())?;
    let a2 = frac(2, -(i.clone() * &tp1), tm1.clone())?;
    let a3 = frac(3, tpi.clone(), tmi.clone())?;
    let a4 = frac(4, -(i.clone() * &tm1), tp1.clone())?;
    let a5 = frac(5, one.clone(), t.clone())?;
    let first = [t, a1, a2, a3, a4, a5];
    let mut out: Vec<CycloElement> = first.to_vec();
    out.extend(first.iter().map(|a| -a.clone()));
    for k in 0..12 {
        if out[..k].contains(&out[k]) {
            return Err(Error::OrbitCollision);
        }
    }
    Ok(out)
}

/// `prod (X - a)` over the orbit of `t`, as a form of degree 12.
pub fn a4_orbit_polynomial(t: &CycloElement) -> Result<BinaryForm<CycloElement>> {
    let p = a4_orbit(t)?.into_iter().fold(UniPoly::one(), |acc, a| {
        acc * &UniPoly::new([-a, CycloElement::from_int(1)].to_vec())
    });
    BinaryForm::from_poly(&p, 12)
}

/// Shape of the branch locus forced by the genus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct A4BranchShape {
    /// Number of fixed points of `A4` that are Weierstrass points.
    pub intersection: u32,
    pub group: GroupTag,
    /// `g mod 6`.
    pub residue: u32,
}

pub fn a4_branch_shape(g: u32) -> Result<A4BranchShape> {
    if g < 4 || g == 6 {
        return Err(Error::ExcludedGenus { genus: g });
    }
    let residue = g % 6;
    let (intersection, group) = match residue {
        5 => (0, GroupTag::Z2xA4),
        1 => (4, GroupTag::Z2xA4),
        3 => (8, GroupTag::Z2xA4),
        2 => (6, GroupTag::Sl2F3),
        4 => (10, GroupTag::Sl2F3),
        _ => (14, GroupTag::Sl2F3),
    };
    Ok(A4BranchShape {
        intersection,
        group,
        residue,
    })
}

/// Coefficient rings that contain `i sqrt3`.
pub trait CycloAlgebra: Ring {
    fn i_sqrt3() -> Self;
}

impl CycloAlgebra for CycloElement {
    fn i_sqrt3() -> Self {
        CycloElement::i_sqrt3()
    }
}

impl<R: CycloAlgebra> CycloAlgebra for UniPoly<R> {
    fn i_sqrt3() -> Self {
        UniPoly::constant(R::i_sqrt3())
    }
}

impl<F: CycloAlgebra + Field> CycloAlgebra for crate::arith::RatFunc<F> {
    fn i_sqrt3() -> Self {
        crate::arith::RatFunc::constant(F::i_sqrt3())
    }
}

/// `X^4 + 2 i sqrt3 X^2 + 1`.
pub fn t_polynomial<R: CycloAlgebra>() -> UniPoly<R> {
    let c = R::from_int;
    UniPoly::new([c(1), R::zero(), R::i_sqrt3() * &c(2), R::zero(), c(1)].to_vec())
}

/// `X^4 - 2 i sqrt3 X^2 + 1`.
pub fn s_polynomial<R: CycloAlgebra>() -> UniPoly<R> {
    let c = R::from_int;
    UniPoly::new([c(1), R::zero(), R::i_sqrt3() * &c(-2), R::zero(), c(1)].to_vec())
}

/// `X (X^4 - 1)`.
pub fn r_polynomial<R: Ring>() -> UniPoly<R> {
    UniPoly::from_ints(&[0, -1, 0, 0, 0, 1])
}

/// Number of branch parameters for genus `g`.
pub fn a4_delta(g: u32) -> Result<usize> {
    let b = a4_branch_shape(g)?;
    let shift = match b.residue {
        5 => return Ok(((g + 1) / 6) as usize),
        0 => 6,
        r => r,
    };
    let delta = (g - shift) / 6;
    if delta == 0 && matches!(b.residue, 3 | 2 | 0) {
        return Err(Error::ExcludedGenus { genus: g });
    }
    Ok(delta as usize)
}

/// The factor multiplying `prod G_lambda` in genus `g`.
pub fn orbit_model_prefactor<R: CycloAlgebra>(g: u32) -> Result<UniPoly<R>> {
    let b = a4_branch_shape(g)?;
    let octic = UniPoly::from_ints(&[1, 0, 0, 0, 14, 0, 0, 0, 1]);
    Ok(match b.residue {
        5 => UniPoly::one(),
        1 => t_polynomial(),
        3 => octic,
        2 => r_polynomial(),
        4 => r_polynomial() * &t_polynomial(),
        _ => r_polynomial() * &octic,
    })
}

/// `prefactor(X) * prod G_lambda(X)`, a form of degree `2g + 2`.
pub fn orbit_model<R: CycloAlgebra>(g: u32, lambdas: &[R]) -> Result<BinaryForm<R>> {
    let delta = a4_delta(g)?;
    if lambdas.len() != delta {
        return Err(Error::Constraint {
            constraint: alloc::format!(
                "genus {g} takes {delta} branch parameters, got {}",
                lambdas.len()
            ),
        });
    }
    let mut p = orbit_model_prefactor::<R>(g)?;
    for l in lambdas {
        p = p * &build_g(l).dehomogenize();
    }
    BinaryForm::from_poly(&p, 2 * g as usize + 2)
}
