use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Field, FractionField, Ring};
use crate::error::{Error, Result};

use super::{BinaryForm, Catalogue, Invariant};

/// Weight-zero ratios of catalogue invariants.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AbsoluteInvariant {
    I1,
    I2,
    I3,
    J1,
    J2,
    S1,
    S2,
    V1,
    V2,
    V3,
    V4,
    V5,
}

impl AbsoluteInvariant {
    pub const ALL: [AbsoluteInvariant; 12] = [
        AbsoluteInvariant::I1,
        AbsoluteInvariant::I2,
        AbsoluteInvariant::I3,
        AbsoluteInvariant::J1,
        AbsoluteInvariant::J2,
        AbsoluteInvariant::S1,
        AbsoluteInvariant::S2,
        AbsoluteInvariant::V1,
        AbsoluteInvariant::V2,
        AbsoluteInvariant::V3,
        AbsoluteInvariant::V4,
        AbsoluteInvariant::V5,
    ];

    pub fn name(self) -> &'static str {
        use AbsoluteInvariant::*;
        match self {
            I1 => "i1",
            I2 => "i2",
            I3 => "i3",
            J1 => "j1",
            J2 => "j2",
            S1 => "s1",
            S2 => "s2",
            V1 => "v1",
            V2 => "v2",
            V3 => "v3",
            V4 => "v4",
            V5 => "v5",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }

    /// `(numerator, exponent), (denominator, exponent)`.
    pub fn definition(self) -> ((Invariant, u32), (Invariant, u32)) {
        use AbsoluteInvariant::*;
        use Invariant as I;
        match self {
            I1 => ((I::I4p, 1), (I::I2, 2)),
            I2 => ((I::I3, 2), (I::I2, 3)),
            I3 => ((I::I6Ast, 1), (I::I2, 3)),
            J1 => ((I::I6p, 1), (I::I3, 2)),
            J2 => ((I::I6, 1), (I::I3, 2)),
            S1 => ((I::I6, 2), (I::I12, 1)),
            S2 => ((I::I6p, 2), (I::I12, 1)),
            V1 => ((I::I6, 1), (I::I6Ast, 1)),
            V2 => ((I::I4p, 3), (I::I3, 4)),
            V3 => ((I::I6, 1), (I::I6p, 1)),
            V4 => ((I::I6Ast, 2), (I::I4p, 3)),
            V5 => ((I::I6Star, 1), (I::I12Ast, 1)),
        }
    }

    /// The ratio, or `None` when an ingredient is undefined in this degree
    /// or the denominator vanishes.
    pub fn evaluate<R: FractionField>(self, cat: &Catalogue<R>) -> Result<Option<R::Frac>> {
        let ((n, a), (d, b)) = self.definition();
        let deg = cat.degree();
        if !n.defined_for(deg) || !d.defined_for(deg) {
            return Ok(None);
        }
        let den = cat.invariant(d)?;
        if den.is_zero() {
            return Ok(None);
        }
        let num = cat.invariant(n)?;
        Ok(Some(num.pow(a).to_frac().div(&den.pow(b).to_frac())?))
    }
}

impl fmt::Display for AbsoluteInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every absolute invariant of a form; `None` where undefined.
#[derive(Clone, PartialEq, Debug)]
pub struct AbsoluteInvariants<K> {
    pub values: Vec<(AbsoluteInvariant, Option<K>)>,
}

impl<K> AbsoluteInvariants<K> {
    pub fn get(&self, a: AbsoluteInvariant) -> Option<&K> {
        self.values
            .iter()
            .find(|(b, _)| *b == a)
            .and_then(|(_, v)| v.as_ref())
    }
}

pub fn absolute_invariants<R: FractionField>(
    f: &BinaryForm<R>,
) -> Result<AbsoluteInvariants<R::Frac>> {
    let cat = Catalogue::new(f.clone())?;
    let mut values = Vec::new();
    for a in AbsoluteInvariant::ALL {
        values.push((a, a.evaluate(&cat)?));
    }
    Ok(AbsoluteInvariants { values })
}

/// Which case of the moduli map produced a point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Branch {
    /// `g = 4`: `v1`
    Genus4,
    /// `g = 5, 9`, `I2 != 0`: `(i1, i2)`
    I1I2,
    /// `g = 5, 9`, `I2 = 0`: `v2`
    V2,
    /// `g = 7`, `I3 != 0`: `(j1, j2)`
    J1J2,
    /// `g = 7`, `I3 = 0`: `v3`
    V3,
    /// `g = 8, 12`, `I2 != 0`: `(i1, i3)`
    I1I3,
    /// `g = 8, 12`, `I2 = 0`: `v4`
    V4,
    /// `g = 10`, `I12 != 0`: `(s2, s1)`
    S2S1,
    /// `g = 10`, `I12 = 0`: `v5`
    V5,
}

impl Branch {
    pub const ALL: [Branch; 9] = [
        Branch::Genus4,
        Branch::I1I2,
        Branch::V2,
        Branch::J1J2,
        Branch::V3,
        Branch::I1I3,
        Branch::V4,
        Branch::S2S1,
        Branch::V5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Genus4 => "g=4",
            Branch::I1I2 => "g=5,9; I2!=0",
            Branch::V2 => "g=5,9; I2=0",
            Branch::J1J2 => "g=7; I3!=0",
            Branch::V3 => "g=7; I3=0",
            Branch::I1I3 => "g=8,12; I2!=0",
            Branch::V4 => "g=8,12; I2=0",
            Branch::S2S1 => "g=10; I12!=0",
            Branch::V5 => "g=10; I12=0",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.name() == s)
    }

    /// The coordinates of the point, in order.
    pub fn components(self) -> &'static [AbsoluteInvariant] {
        use AbsoluteInvariant as A;
        match self {
            Branch::Genus4 => &[A::V1],
            Branch::I1I2 => &[A::I1, A::I2],
            Branch::V2 => &[A::V2],
            Branch::J1J2 => &[A::J1, A::J2],
            Branch::V3 => &[A::V3],
            Branch::I1I3 => &[A::I1, A::I3],
            Branch::V4 => &[A::V4],
            Branch::S2S1 => &[A::S2, A::S1],
            Branch::V5 => &[A::V5],
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Image of a curve under the moduli map of its genus.
#[derive(Clone, PartialEq, Debug)]
pub struct ModuliPoint<K> {
    pub genus: u32,
    pub branch: Branch,
    pub values: Vec<K>,
}

/// Genera carrying an `A4` reduced automorphism group.
pub const A4_GENERA: [u32; 7] = [4, 5, 7, 8, 9, 10, 12];

fn check_genus<R: Ring>(f: &BinaryForm<R>, g: u32) -> Result<()> {
    if !A4_GENERA.contains(&g) {
        return Err(Error::UnsupportedGenus { genus: g });
    }
    let d = 2 * g as usize + 2;
    if f.degree() != d {
        return Err(Error::DegreeMismatch {
            expected: d,
            found: f.degree(),
        });
    }
    Ok(())
}

/// The moduli point of `y^2 = F(x, 1)`, assuming `F` squarefree.
pub fn classify_point<R: FractionField>(f: &BinaryForm<R>, g: u32) -> Result<ModuliPoint<R::Frac>> {
    check_genus(f, g)?;
    let cat = Catalogue::new(f.clone())?;
    let nonzero = |inv: Invariant| -> Result<bool> { Ok(!cat.invariant(inv)?.is_zero()) };
    let branch = match g {
        4 => Branch::Genus4,
        5 | 9 if nonzero(Invariant::I2)? => Branch::I1I2,
        5 | 9 => Branch::V2,
        7 if nonzero(Invariant::I3)? => Branch::J1J2,
        7 => Branch::V3,
        8 | 12 if nonzero(Invariant::I2)? => Branch::I1I3,
        8 | 12 => Branch::V4,
        10 if nonzero(Invariant::I12)? => Branch::S2S1,
        _ => Branch::V5,
    };
    let mut values = Vec::new();
    for &a in branch.components() {
        let v = a.evaluate(&cat)?.ok_or_else(|| {
            let ((_, _), (den, _)) = a.definition();
            Error::DegenerateBranch {
                branch: branch.name(),
                denominator: den.name(),
            }
        })?;
        values.push(v);
    }
    Ok(ModuliPoint {
        genus: g,
        branch,
        values,
    })
}

/// The invariants that must vanish on the `A4` locus of genus `g`.
pub fn vanishing_invariants(g: u32) -> Result<&'static [Invariant]> {
    use Invariant as I;
    Ok(match g {
        4 => &[I::I2, I::I4, I::I4p, I::I6p],
        5 | 9 | 12 => &[I::I4, I::I6],
        7 | 10 => &[I::I2, I::I4, I::I4p, I::I6Ast],
        8 => &[I::I4],
        _ => return Err(Error::UnsupportedGenus { genus: g }),
    })
}

/// Which of the genus-`g` vanishing conditions hold for `F`.
pub fn vanishing_profile<R: Ring>(f: &BinaryForm<R>, g: u32) -> Result<Vec<(Invariant, bool)>> {
    check_genus(f, g)?;
    let cat = Catalogue::new(f.clone())?;
    vanishing_invariants(g)?
        .iter()
        .map(|&inv| Ok((inv, cat.invariant(inv)?.is_zero())))
        .collect()
}
