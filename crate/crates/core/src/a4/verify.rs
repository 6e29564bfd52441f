use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{RatFunc, Rational, Ring, UniPoly};
use crate::error::Result;
use crate::forms::{classify_point, vanishing_profile, Catalogue};

use super::locus::{l5_relation, DegenerateLocus, LocusTable};
use super::model::{rational_model, ModelVariant};

/// Outcome of one recomputation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The residual or the recomputed value when the check fails.
    pub detail: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocusReport {
    pub genus: u32,
    pub checks: Vec<Check>,
}

impl LocusReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: String, passed: bool, detail: impl FnOnce() -> String) -> Check {
    let detail = (!passed).then(detail);
    Check {
        name,
        passed,
        detail,
    }
}

type Q = UniPoly<Rational>;

fn vanishing_check(g: u32, variant: ModelVariant) -> Result<Check> {
    let f = rational_model(g, &Q::x(), variant)?;
    let profile = vanishing_profile(&f, g)?;
    let bad: Vec<&str> = profile
        .iter()
        .filter(|(_, z)| !z)
        .map(|(i, _)| i.name())
        .collect();
    Ok(check(
        format!("vanishing conditions, {} model", variant.name()),
        bad.is_empty(),
        || format!("nonzero: {}", bad.join(", ")),
    ))
}

// relation(N / D) * D^deg reduced modulo the condition
fn relation_residue(relation: &Q, v: &RatFunc<Rational>, condition: &Q) -> Result<Q> {
    let deg = relation.degree().unwrap_or(0);
    let mut acc = Q::zero();
    for (k, c) in relation.coeffs().iter().enumerate() {
        acc += &(v.num().pow(k as u32) * &v.den().pow((deg - k) as u32)).mul_scalar(c);
    }
    Ok(acc.div_rem(condition)?.1)
}

/// Recomputes every entry of the genus-`g` locus from the models and
/// compares with the table.
pub fn verify_locus(table: &LocusTable, g: u32) -> Result<LocusReport> {
    super::a4_branch_shape(g)?;
    let entry = table.get(g)?;
    let mut checks = Vec::new();

    checks.push(vanishing_check(g, ModelVariant::Corrected)?);
    if ModelVariant::differs(g) {
        checks.push(vanishing_check(g, ModelVariant::Transcribed)?);
    }

    let f = rational_model(g, &Q::x(), ModelVariant::Corrected)?;
    let point = classify_point(&f, g)?;
    let same_branch = point.branch == entry.branch;
    checks.push(check(
        format!("generic branch {}", entry.branch),
        same_branch,
        || format!("classifier chose {}", point.branch),
    ));
    if same_branch {
        for (c, v) in entry.components.iter().zip(&point.values) {
            checks.push(check(
                format!("{} matches transcription", c.invariant),
                *v == c.transcribed,
                || format!("recomputed {v}; residual {}", v.clone() - &c.transcribed),
            ));
            checks.push(check(
                format!("{} matches table", c.invariant),
                *v == c.recomputed,
                || format!("recomputed {v}; residual {}", v.clone() - &c.recomputed),
            ));
        }
    }

    if let Some(s) = &entry.special {
        let f = rational_model(g, &s.mu, ModelVariant::Corrected)?;
        let p = classify_point(&f, g)?;
        let v = p.values.first().cloned().unwrap_or_else(Rational::zero);
        let ok_branch = p.branch == s.branch;
        checks.push(check(
            format!("special value at mu = {} matches transcription", s.mu),
            ok_branch && v == s.transcribed,
            || {
                format!(
                    "recomputed {} = {v}, transcribed {}",
                    p.branch, s.transcribed
                )
            },
        ));
        checks.push(check(
            format!("special value at mu = {} matches table", s.mu),
            ok_branch && v == s.recomputed,
            || format!("recomputed {} = {v}, table {}", p.branch, s.recomputed),
        ));
    }

    if let Some(DegenerateLocus::Constraint {
        invariant,
        condition,
        recomputed_condition,
        relation,
        ..
    }) = &entry.degenerate
    {
        let cat = Catalogue::new(f.clone())?;
        match invariant.evaluate(&cat)? {
            Some(v) => {
                for (label, cond) in [("transcribed", condition), ("table", recomputed_condition)] {
                    let r = relation_residue(relation, &v, cond)?;
                    checks.push(check(
                        format!("{invariant} satisfies the relation on the {label} condition"),
                        r.is_zero(),
                        || format!("residue {r}"),
                    ));
                }
            }
            None => checks.push(check(format!("{invariant} defined"), false, || {
                "denominator vanishes".to_string()
            })),
        }
    }

    if g == 5 && same_branch {
        let r = l5_relation(&point.values)?;
        checks.push(check(
            "L5 relation on the parametrization".to_string(),
            r.is_zero(),
            || format!("residual {r}"),
        ));
    }
    Ok(LocusReport { genus: g, checks })
}
