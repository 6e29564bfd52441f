use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{canonical_cmp, parse_rational, Field, RatFunc, Rational, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::forms::{AbsoluteInvariant, Branch, ModuliPoint};

/// Agreement between a transcribed entry and its recomputation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EntryStatus {
    /// Not yet compared.
    Transcribed,
    /// Recomputation reproduces the transcription.
    Verified,
    /// Recomputation differs; the recomputed value is the active one.
    RecomputedDiffers,
    /// The transcription cannot be evaluated.
    IncompleteInSource,
}

impl EntryStatus {
    pub fn name(self) -> &'static str {
        match self {
            EntryStatus::Transcribed => "transcribed",
            EntryStatus::Verified => "verified",
            EntryStatus::RecomputedDiffers => "recomputed-differs",
            EntryStatus::IncompleteInSource => "incomplete-in-source",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            EntryStatus::Transcribed,
            EntryStatus::Verified,
            EntryStatus::RecomputedDiffers,
            EntryStatus::IncompleteInSource,
        ]
        .into_iter()
        .find(|e| e.name() == s)
    }
}

impl fmt::Display for EntryStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One coordinate of the generic branch as a function of `mu`.
#[derive(Clone, PartialEq, Debug)]
pub struct LocusComponent {
    pub invariant: AbsoluteInvariant,
    pub transcribed: RatFunc<Rational>,
    pub recomputed: RatFunc<Rational>,
    pub status: EntryStatus,
}

/// The value taken at the one parameter where the generic branch degenerates.
#[derive(Clone, PartialEq, Debug)]
pub struct SpecialValue {
    pub mu: Rational,
    pub branch: Branch,
    pub transcribed: Rational,
    pub recomputed: Rational,
    pub status: EntryStatus,
}

/// The part of the locus where the generic branch's denominators vanish and
/// the parameter is not a single rational value.
#[derive(Clone, PartialEq, Debug)]
pub enum DegenerateLocus {
    /// On `condition(mu) = 0` the point is a root of `relation(p)`.
    Constraint {
        invariant: AbsoluteInvariant,
        condition: UniPoly<Rational>,
        recomputed_condition: UniPoly<Rational>,
        relation: UniPoly<Rational>,
        status: EntryStatus,
    },
    /// On `condition(mu) = 0` the stated value is not evaluable.
    Incomplete {
        condition: UniPoly<Rational>,
        text: String,
        status: EntryStatus,
    },
}

impl DegenerateLocus {
    /// The active condition on `mu`.
    pub fn condition(&self) -> &UniPoly<Rational> {
        match self {
            DegenerateLocus::Constraint {
                recomputed_condition,
                ..
            } => recomputed_condition,
            DegenerateLocus::Incomplete { condition, .. } => condition,
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct LocusEntry {
    pub genus: u32,
    pub branch: Branch,
    pub components: Vec<LocusComponent>,
    pub special: Option<SpecialValue>,
    pub degenerate: Option<DegenerateLocus>,
}

/// Parametrizations of the `A4` loci by `mu`, one entry per genus.
#[derive(Clone, PartialEq, Debug)]
pub struct LocusTable {
    pub version: String,
    pub entries: Vec<LocusEntry>,
}

/// Value of the parametrization at one `mu`.
#[derive(Clone, PartialEq, Debug)]
pub enum LocusValue {
    Point(ModuliPoint<Rational>),
    /// The point is a root of `relation`, which has no rational root.
    Constraint {
        invariant: AbsoluteInvariant,
        relation: UniPoly<Rational>,
    },
    Incomplete {
        text: String,
    },
}

// c * prod num_i^e_i / prod den_j^f_j, factors as integer coefficient lists
struct Factored {
    scale: &'static str,
    num: &'static [(&'static [i64], u32)],
    den: &'static [(&'static [i64], u32)],
}

impl Factored {
    fn build(&self) -> RatFunc<Rational> {
        let prod = |fs: &[(&[i64], u32)]| {
            fs.iter().fold(UniPoly::<Rational>::one(), |acc, (c, e)| {
                acc * &UniPoly::from_ints(c).pow(*e)
            })
        };
        let c = parse_rational(self.scale).expect("valid constant");
        RatFunc::new(prod(self.num).mul_scalar(&c), prod(self.den)).expect("nonzero denominator")
    }
}

const MU: &[i64] = &[0, 1];

fn component(
    invariant: AbsoluteInvariant,
    transcribed: Factored,
    recomputed: Option<Factored>,
    status: EntryStatus,
) -> LocusComponent {
    let transcribed = transcribed.build();
    let recomputed = recomputed.map_or_else(|| transcribed.clone(), |f| f.build());
    LocusComponent {
        invariant,
        transcribed,
        recomputed,
        status,
    }
}

fn special(
    mu: &str,
    branch: Branch,
    transcribed: &str,
    recomputed: &str,
    status: EntryStatus,
) -> SpecialValue {
    let q = |s: &str| parse_rational(s).expect("valid constant");
    SpecialValue {
        mu: q(mu),
        branch,
        transcribed: q(transcribed),
        recomputed: q(recomputed),
        status,
    }
}

const G10_DEGENERATE: &str = "p = -950367275/(21168*Q) * (25170477*mu^3 + 402998158*mu^2 - 4363415636*mu + 13083554824)^4 \
/ ((1268277*mu^2 - 5261568*mu + 18129548)^2 * (7959*mu^2 - 65756*mu - 287844)^2) \
/ (228384659961*mu^4 - 22196181318948*mu^3 + 185588379432544*mu^2 - 447275488903152*mu + 658755318269936), \
Q undefined";

impl LocusTable {
    pub const BUILTIN_VERSION: &'static str = "1";

    /// The transcribed parametrizations together with their recomputation
    /// from the corrected models.
    pub fn builtin() -> Self {
        use AbsoluteInvariant as A;
        use EntryStatus::*;
        let mut entries = Vec::new();

        entries.push(LocusEntry {
            genus: 4,
            branch: Branch::Genus4,
            components: vec![component(
                A::V1,
                Factored {
                    scale: "1764/25",
                    num: &[],
                    den: &[],
                },
                None,
                Verified,
            )],
            special: None,
            degenerate: None,
        });

        const G5_DEN: &[(&[i64], u32)] = &[(&[924, 5], 2)];
        entries.push(LocusEntry {
            genus: 5,
            branch: Branch::I1I2,
            components: vec![
                component(
                    A::I1,
                    Factored {
                        scale: "49/3630",
                        num: &[(&[-484, 5], 2)],
                        den: G5_DEN,
                    },
                    None,
                    Verified,
                ),
                component(
                    A::I2,
                    Factored {
                        scale: "10/27951",
                        num: &[(MU, 1), (&[30492, 5], 2)],
                        den: &[(&[924, 5], 3)],
                    },
                    None,
                    Verified,
                ),
            ],
            special: Some(special(
                "-924/5",
                Branch::V2,
                "273375/1568",
                "1568/273375",
                RecomputedDiffers,
            )),
            degenerate: None,
        });

        const G7_CUBIC: &[i64] = &[1549769, -838068, 49566, 1093];
        const G7_CUBIC_FIXED: &[i64] = &[1549768, -838068, 49566, 1093];
        fn g7(den: &'static [(&'static [i64], u32)]) -> (Factored, Factored) {
            (
                Factored {
                    scale: "6/245",
                    num: &[(&[1606, 97], 2), (&[2596, 528, 87], 2)],
                    den,
                },
                Factored {
                    scale: "301158/30625",
                    num: &[(&[-6556, -44, 61], 2), (&[-157476, 1496, 2021], 1)],
                    den,
                },
            )
        }
        let (t1, t2) = g7(&[(G7_CUBIC, 2)]);
        let (r1, r2) = g7(&[(G7_CUBIC_FIXED, 2)]);
        entries.push(LocusEntry {
            genus: 7,
            branch: Branch::J1J2,
            components: vec![
                component(A::J1, t1, Some(r1), RecomputedDiffers),
                component(A::J2, t2, Some(r2), RecomputedDiffers),
            ],
            special: None,
            degenerate: Some(DegenerateLocus::Constraint {
                invariant: A::V3,
                condition: UniPoly::from_ints(G7_CUBIC),
                recomputed_condition: UniPoly::from_ints(G7_CUBIC_FIXED),
                relation: UniPoly::from_ints(&[308290455, -31666132872, -404568000, 8000000]),
                status: RecomputedDiffers,
            }),
        });

        entries.push(LocusEntry {
            genus: 8,
            branch: Branch::I1I3,
            components: vec![
                component(
                    A::I1,
                    Factored {
                        scale: "49/11236320",
                        num: &[(&[15028, 279], 2)],
                        den: &[(&[884, 7], 2)],
                    },
                    None,
                    Verified,
                ),
                component(
                    A::I3,
                    Factored {
                        scale: "1/1360026486",
                        num: &[(MU, 1), (&[3321188, 3675], 2)],
                        den: &[(&[884, 7], 3)],
                    },
                    None,
                    Verified,
                ),
            ],
            special: Some(special(
                "-884/7",
                Branch::V4,
                "147471902847576/1448646051125",
                "147471902847576/1448646051125",
                Verified,
            )),
            degenerate: None,
        });

        entries.push(LocusEntry {
            genus: 9,
            branch: Branch::I1I2,
            components: vec![
                component(
                    A::I1,
                    Factored {
                        scale: "605/5633766",
                        num: &[(&[-7200, 9], 2)],
                        den: &[(&[836, 3], 2)],
                    },
                    Some(Factored {
                        scale: "605/5633766",
                        num: &[(&[-7220, 9], 2)],
                        den: &[(&[836, 3], 2)],
                    }),
                    RecomputedDiffers,
                ),
                component(
                    A::I2,
                    Factored {
                        scale: "90/370680937",
                        num: &[(MU, 1), (&[79420, 157], 2)],
                        den: &[(&[836, 3], 3)],
                    },
                    None,
                    Verified,
                ),
            ],
            special: Some(special(
                "-836/3",
                Branch::V2,
                "-309760/2187",
                "309760/2187",
                RecomputedDiffers,
            )),
            degenerate: None,
        });

        const L251: &[i64] = &[-782, 251];
        const Q115: &[i64] = &[-6596, -68, 115];
        const L181: &[i64] = &[1598, 181];
        const Q3813: &[i64] = &[-39236, 15912, 3813];
        entries.push(LocusEntry {
            genus: 10,
            branch: Branch::S2S1,
            components: vec![
                component(
                    A::S2,
                    Factored {
                        scale: "147/90250",
                        num: &[(L181, 2), (Q3813, 2)],
                        den: &[(L251, 2), (Q115, 2)],
                    },
                    None,
                    Verified,
                ),
                component(
                    A::S1,
                    Factored {
                        scale: "5007792000/121",
                        num: &[(&[-374884, 3128, 7877], 2), (Q115, 2)],
                        den: &[(L251, 2), (L181, 2), (Q3813, 2)],
                    },
                    None,
                    Verified,
                ),
            ],
            special: None,
            degenerate: Some(DegenerateLocus::Incomplete {
                condition: [L251, Q115, L181, Q3813]
                    .iter()
                    .fold(UniPoly::one(), |acc, c| acc * &UniPoly::from_ints(c)),
                text: G10_DEGENERATE.to_string(),
                status: IncompleteInSource,
            }),
        });

        entries.push(LocusEntry {
            genus: 12,
            branch: Branch::I1I3,
            components: vec![
                component(
                    A::I1,
                    Factored {
                        scale: "1/268203000",
                        num: &[(&[-501500, 6611], 2)],
                        den: &[(&[1700, 11], 2)],
                    },
                    None,
                    Verified,
                ),
                component(
                    A::I3,
                    Factored {
                        scale: "56/284015801875",
                        num: &[(MU, 1), (&[-5686500, 20933], 2)],
                        den: &[(&[1700, 11], 2)],
                    },
                    Some(Factored {
                        scale: "56/284015801875",
                        num: &[(MU, 1), (&[-5686500, 20933], 2)],
                        den: &[(&[1700, 11], 3)],
                    }),
                    RecomputedDiffers,
                ),
            ],
            special: Some(special(
                "-1700/11",
                Branch::V4,
                "762955470/83960569",
                "762955470/83960569",
                Verified,
            )),
            degenerate: None,
        });

        LocusTable {
            version: Self::BUILTIN_VERSION.to_string(),
            entries,
        }
    }

    pub fn get(&self, g: u32) -> Result<&LocusEntry> {
        self.entries
            .iter()
            .find(|e| e.genus == g)
            .ok_or(Error::UnsupportedGenus { genus: g })
    }

    /// The point of the genus-`g` locus with parameter `mu`, from the
    /// recomputed entries.
    pub fn parametrize(&self, g: u32, mu: &Rational) -> Result<LocusValue> {
        let e = self.get(g)?;
        if let Some(s) = e.special.as_ref().filter(|s| s.mu == *mu) {
            return Ok(LocusValue::Point(ModuliPoint {
                genus: g,
                branch: s.branch,
                values: vec![s.recomputed.clone()],
            }));
        }
        if let Some(d) = &e.degenerate {
            if d.condition().eval(mu).is_zero() {
                return Ok(match d {
                    DegenerateLocus::Constraint {
                        invariant,
                        relation,
                        ..
                    } => LocusValue::Constraint {
                        invariant: *invariant,
                        relation: relation.clone(),
                    },
                    DegenerateLocus::Incomplete { text, .. } => {
                        LocusValue::Incomplete { text: text.clone() }
                    }
                });
            }
        }
        let values = e
            .components
            .iter()
            .map(|c| {
                c.recomputed
                    .eval(mu)
                    .map_err(|_| Error::Pole { at: mu.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LocusValue::Point(ModuliPoint {
            genus: g,
            branch: e.branch,
            values,
        }))
    }

    /// Every rational `mu` whose point is `p`, in canonical order.
    pub fn recover_mu(&self, g: u32, p: &[Rational]) -> Result<Vec<Rational>> {
        let e = self.get(g)?;
        if g == 4 {
            return Err(Error::Constraint {
                constraint: "the genus 4 locus is a single point".to_string(),
            });
        }
        if p.len() == 1 {
            return match e.special.as_ref().filter(|s| s.recomputed == p[0]) {
                Some(s) => Ok(vec![s.mu.clone()]),
                None => Err(Error::OffLocus),
            };
        }
        if p.len() != e.components.len() {
            return Err(Error::Constraint {
                constraint: alloc::format!(
                    "genus {g} points have {} coordinates, got {}",
                    e.components.len(),
                    p.len()
                ),
            });
        }
        let mut acc = UniPoly::<Rational>::zero();
        for (c, v) in e.components.iter().zip(p) {
            let h = c.recomputed.num().clone() - c.recomputed.den().mul_scalar(v);
            acc = if acc.is_zero() { h } else { acc.gcd(&h)? };
        }
        if acc.degree().is_none_or(|d| d == 0) {
            return Err(Error::OffLocus);
        }
        let roots = acc.rational_roots()?;
        if roots.is_empty() {
            return Err(Error::NoRationalRoot {
                polynomial: acc.monic().to_string(),
            });
        }
        let mut out: Vec<Rational> = roots
            .into_iter()
            .filter(|mu| match self.parametrize(g, mu) {
                Ok(LocusValue::Point(q)) => q.values == p,
                _ => false,
            })
            .collect();
        if out.is_empty() {
            return Err(Error::OffLocus);
        }
        out.sort_by(canonical_cmp);
        Ok(out)
    }
}

/// [`LocusTable::parametrize`] on the built-in table.
pub fn locus_parametrization(g: u32, mu: &Rational) -> Result<LocusValue> {
    LocusTable::builtin().parametrize(g, mu)
}

/// [`LocusTable::recover_mu`] on the built-in table.
pub fn recover_mu(g: u32, p: &[Rational]) -> Result<Vec<Rational>> {
    LocusTable::builtin().recover_mu(g, p)
}

fn pair<K: Field>(p: &[K]) -> Result<(&K, &K)> {
    match p {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Constraint {
            constraint: alloc::format!("expected (i1, i2), got {} coordinates", p.len()),
        }),
    }
}

/// `4920750 i1^3 - 28224 i2^2 - 164025 i1^2 - 136080 i1 i2 + 672 i2 + 1620 i1 - 4`
/// at `p = (i1, i2)`; zero exactly on the genus 5 locus.
pub fn l5_relation<K: Field>(p: &[K]) -> Result<K> {
    let (a, b) = pair(p)?;
    let c = K::from_int;
    Ok(
        c(4920750) * &a.pow(3) - c(28224) * &b.pow(2) - c(164025) * &a.pow(2) - c(136080) * a * b
            + &(c(672) * b)
            + &(c(1620) * a)
            - c(4),
    )
}

/// Partial derivatives of [`l5_relation`] in `i1` and `i2`.
pub fn l5_gradient<K: Field>(p: &[K]) -> Result<(K, K)> {
    let (a, b) = pair(p)?;
    let c = K::from_int;
    let da = c(14762250) * &a.pow(2) - c(328050) * a - c(136080) * b + &c(1620);
    let db = c(-56448) * b - c(136080) * a + &c(672);
    Ok((da, db))
}

pub fn l5_is_singular<K: Field>(p: &[K]) -> Result<bool> {
    let (da, db) = l5_gradient(p)?;
    Ok(l5_relation(p)?.is_zero() && da.is_zero() && db.is_zero())
}
