use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::arith::Ring;
use crate::error::{Error, Result};

use super::{BinaryForm, Covariant};

/// The named invariants of the catalogue.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Invariant {
    /// `(F, F)^d`
    I2,
    /// `(F, J_d)^d`, defined when `4 | d`
    I3,
    /// `(J_4, J_4)^4`
    I4,
    /// `(J_8, J_8)^8`
    I4p,
    /// `((F, J_4)^4, (F, J_4)^4)^(d-4)`
    I6,
    /// `((F, J_8)^8, (F, J_8)^8)^(d-8)`
    I6p,
    /// `((F, J_12)^12, (F, J_12)^12)^(d-12)`; see [`Catalogue::invariant`]
    /// for `d = 10`
    I6Ast,
    /// `(M, M)^8`
    I12,
    /// `((F, J_16)^16, (F, J_16)^16)^(d-16)`, genus 10 only
    I6Star,
    /// `((J_16, S)^4, (J_16, S)^4)^12` with `S = (J_12, J_16)^12`, genus 10 only
    I12Ast,
}

impl Invariant {
    pub const ALL: [Invariant; 10] = [
        Invariant::I2,
        Invariant::I3,
        Invariant::I4,
        Invariant::I4p,
        Invariant::I6,
        Invariant::I6p,
        Invariant::I6Ast,
        Invariant::I12,
        Invariant::I6Star,
        Invariant::I12Ast,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::I2 => "I2",
            Invariant::I3 => "I3",
            Invariant::I4 => "I4",
            Invariant::I4p => "I4p",
            Invariant::I6 => "I6",
            Invariant::I6p => "I6p",
            Invariant::I6Ast => "I6ast",
            Invariant::I12 => "I12",
            Invariant::I6Star => "I6star",
            Invariant::I12Ast => "I12ast",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == s)
    }

    /// Degree in the coefficients of `F`.
    pub fn weight(self) -> usize {
        match self {
            Invariant::I2 => 2,
            Invariant::I3 => 3,
            Invariant::I4 | Invariant::I4p => 4,
            Invariant::I6 | Invariant::I6p | Invariant::I6Ast | Invariant::I6Star => 6,
            Invariant::I12 => 12,
            Invariant::I12Ast => 12,
        }
    }

    /// Whether the invariant is defined for forms of degree `d`.
    pub fn defined_for(self, d: usize) -> bool {
        match self {
            Invariant::I2 | Invariant::I4 | Invariant::I4p | Invariant::I6 => true,
            Invariant::I3 => d.is_multiple_of(4),
            Invariant::I6p => d >= 8,
            Invariant::I6Ast => d >= 10,
            Invariant::I12 => d >= 10,
            Invariant::I6Star | Invariant::I12Ast => d == 22,
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    J(usize),
    FJ(usize, usize),
    M,
    S,
    J16S,
    Inv(Invariant),
}

/// Lazily evaluated covariants and invariants of one form, with every
/// intermediate covariant computed at most once.
pub struct Catalogue<R> {
    f: Covariant<R>,
    cache: RefCell<BTreeMap<Key, Covariant<R>>>,
}

impl<R: Ring> Catalogue<R> {
    /// Accepts forms of even degree `d >= 6`.
    pub fn new(f: BinaryForm<R>) -> Result<Self> {
        let d = f.degree();
        if d % 2 == 1 || d < 6 {
            return Err(Error::UnsupportedDegree { degree: d });
        }
        Ok(Catalogue {
            f: Covariant::source(f),
            cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn form(&self) -> &BinaryForm<R> {
        self.f.form()
    }

    pub fn degree(&self) -> usize {
        self.f.order()
    }

    fn cached(
        &self,
        key: Key,
        build: impl FnOnce() -> Result<Covariant<R>>,
    ) -> Result<Covariant<R>> {
        if let Some(c) = self.cache.borrow().get(&key) {
            return Ok(c.clone());
        }
        let c = build()?;
        self.cache.borrow_mut().insert(key, c.clone());
        Ok(c)
    }

    /// `J_(4j) = (F, F)^(d - 2j)` for `1 <= j <= g`.
    pub fn j(&self, order: usize) -> Result<Covariant<R>> {
        let d = self.degree();
        let g = (d - 2) / 2;
        if !order.is_multiple_of(4) || order == 0 || order / 4 > g {
            return Err(Error::UndefinedInvariant {
                name: "J",
                degree: d,
            });
        }
        self.cached(Key::J(order), || self.f.transvect(&self.f, d - order / 2))
    }

    /// `(F, J_k)^r`.
    fn fj(&self, k: usize, r: usize) -> Result<Covariant<R>> {
        self.cached(Key::FJ(k, r), || self.f.transvect(&self.j(k)?, r))
    }

    /// `M = ((F, J_4)^4, (F, J_8)^8)^(d-10)`, defined for `d >= 10`.
    pub fn m(&self) -> Result<Covariant<R>> {
        let d = self.degree();
        if d < 10 {
            return Err(Error::UndefinedInvariant {
                name: "M",
                degree: d,
            });
        }
        self.cached(Key::M, || self.fj(4, 4)?.transvect(&self.fj(8, 8)?, d - 10))
    }

    /// `S = (J_12, J_16)^12`, genus 10 only.
    pub fn s(&self) -> Result<Covariant<R>> {
        let d = self.degree();
        if d != 22 {
            return Err(Error::UndefinedInvariant {
                name: "S",
                degree: d,
            });
        }
        self.cached(Key::S, || self.j(12)?.transvect(&self.j(16)?, 12))
    }

    /// The invariant as a covariant of order zero.
    pub fn invariant_covariant(&self, inv: Invariant) -> Result<Covariant<R>> {
        let d = self.degree();
        if !inv.defined_for(d) {
            return Err(Error::UndefinedInvariant {
                name: inv.name(),
                degree: d,
            });
        }
        let self_square = |c: Covariant<R>, r: usize| c.transvect(&c, r);
        self.cached(Key::Inv(inv), || match inv {
            Invariant::I2 => self.f.transvect(&self.f, d),
            Invariant::I3 => self.f.transvect(&self.j(d)?, d),
            Invariant::I4 => self_square(self.j(4)?, 4),
            Invariant::I4p => self_square(self.j(8)?, 8),
            Invariant::I6 => self_square(self.fj(4, 4)?, d - 4),
            Invariant::I6p => self_square(self.fj(8, 8)?, d - 8),
            // (F, J_12)^12 does not exist for d = 10; the sextic (F, J_8)^6
            // takes its place
            Invariant::I6Ast if d == 10 => self_square(self.fj(8, 6)?, 6),
            Invariant::I6Ast => self_square(self.fj(12, 12)?, d - 12),
            Invariant::I12 => self_square(self.m()?, 8),
            Invariant::I6Star => self_square(self.fj(16, 16)?, d - 16),
            Invariant::I12Ast => {
                let c = self.cached(Key::J16S, || self.j(16)?.transvect(&self.s()?, 4))?;
                self_square(c, 12)
            }
        })
    }

    pub fn invariant(&self, inv: Invariant) -> Result<R> {
        let c = self.invariant_covariant(inv)?;
        Ok(c.form().as_constant().expect("order zero").clone())
    }

    /// Every invariant defined for this degree.
    pub fn invariant_set(&self) -> Result<InvariantSet<R>> {
        let d = self.degree();
        let mut values = Vec::new();
        for inv in Invariant::ALL {
            let v = if inv.defined_for(d) {
                Some(self.invariant(inv)?)
            } else {
                None
            };
            values.push((inv, v));
        }
        Ok(InvariantSet { degree: d, values })
    }
}

/// Values of the catalogue invariants; `None` marks an invariant that is
/// not defined in this degree.
#[derive(Clone, PartialEq, Debug)]
pub struct InvariantSet<R> {
    degree: usize,
    values: Vec<(Invariant, Option<R>)>,
}

impl<R: Ring> InvariantSet<R> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, inv: Invariant) -> Option<&R> {
        self.values
            .iter()
            .find(|(i, _)| *i == inv)
            .and_then(|(_, v)| v.as_ref())
    }

    pub fn require(&self, inv: Invariant) -> Result<&R> {
        self.get(inv).ok_or(Error::UndefinedInvariant {
            name: inv.name(),
            degree: self.degree,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (Invariant, Option<&R>)> {
        self.values.iter().map(|(i, v)| (*i, v.as_ref()))
    }
}
