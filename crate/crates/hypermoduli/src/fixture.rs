//! The locus table as a versioned JSON file.

use std::path::Path;

use hypermoduli_core::a4::{
    DegenerateLocus, EntryStatus, LocusComponent, LocusEntry, LocusTable, LocusValue, SpecialValue,
};
use hypermoduli_core::arith::{RatFunc, Rational, UniPoly};
use hypermoduli_core::forms::{AbsoluteInvariant, Branch};
use serde_json::{json, Value};

use crate::codec::{array, field, opt_field, string, uint, Codec, Decoded, Malformed};

fn status(s: EntryStatus) -> Value {
    json!(s.name())
}

fn decode_status(v: &Value, at: &str) -> Decoded<EntryStatus> {
    EntryStatus::from_name(string(v, "status", at)?)
        .ok_or_else(|| Malformed::new(format!("{at}.status"), "unknown status"))
}

fn decode_branch(v: &Value, key: &str, at: &str) -> Decoded<Branch> {
    Branch::from_name(string(v, key, at)?)
        .ok_or_else(|| Malformed::new(format!("{at}.{key}"), "unknown branch"))
}

fn decode_invariant(v: &Value, at: &str) -> Decoded<AbsoluteInvariant> {
    AbsoluteInvariant::from_name(string(v, "invariant", at)?)
        .ok_or_else(|| Malformed::new(format!("{at}.invariant"), "unknown absolute invariant"))
}

fn sub<T: Codec>(v: &Value, key: &str, at: &str) -> Decoded<T> {
    T::decode(field(v, key, at)?, &format!("{at}.{key}"))
}

fn encode_entry(e: &LocusEntry) -> Value {
    let components: Vec<Value> = e
        .components
        .iter()
        .map(|c| {
            json!({
                "invariant": c.invariant.name(),
                "transcribed": c.transcribed.encode(),
                "recomputed": c.recomputed.encode(),
                "status": status(c.status),
            })
        })
        .collect();
    let special = e.special.as_ref().map(|s| {
        json!({
            "mu": s.mu.encode(),
            "branch": s.branch.name(),
            "transcribed": s.transcribed.encode(),
            "recomputed": s.recomputed.encode(),
            "status": status(s.status),
        })
    });
    let degenerate = e.degenerate.as_ref().map(|d| match d {
        DegenerateLocus::Constraint {
            invariant,
            condition,
            recomputed_condition,
            relation,
            status: s,
        } => json!({
            "kind": "constraint",
            "invariant": invariant.name(),
            "condition": condition.encode(),
            "recomputed_condition": recomputed_condition.encode(),
            "relation": relation.encode(),
            "status": status(*s),
        }),
        DegenerateLocus::Incomplete {
            condition,
            text,
            status: s,
        } => json!({
            "kind": "incomplete",
            "condition": condition.encode(),
            "text": text,
            "status": status(*s),
        }),
    });
    json!({
        "genus": e.genus,
        "branch": e.branch.name(),
        "components": components,
        "special": special,
        "degenerate": degenerate,
    })
}

fn decode_entry(v: &Value, at: &str) -> Decoded<LocusEntry> {
    let comps = array(field(v, "components", at)?, &format!("{at}.components"))?;
    let components = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let at = format!("{at}.components[{i}]");
            Ok(LocusComponent {
                invariant: decode_invariant(c, &at)?,
                transcribed: sub::<RatFunc<Rational>>(c, "transcribed", &at)?,
                recomputed: sub::<RatFunc<Rational>>(c, "recomputed", &at)?,
                status: decode_status(c, &at)?,
            })
        })
        .collect::<Decoded<Vec<_>>>()?;
    let special = match opt_field(v, "special", at)? {
        None => None,
        Some(s) => {
            let at = format!("{at}.special");
            Some(SpecialValue {
                mu: sub(s, "mu", &at)?,
                branch: decode_branch(s, "branch", &at)?,
                transcribed: sub(s, "transcribed", &at)?,
                recomputed: sub(s, "recomputed", &at)?,
                status: decode_status(s, &at)?,
            })
        }
    };
    let degenerate = match opt_field(v, "degenerate", at)? {
        None => None,
        Some(d) => {
            let at = format!("{at}.degenerate");
            Some(match string(d, "kind", &at)? {
                "constraint" => DegenerateLocus::Constraint {
                    invariant: decode_invariant(d, &at)?,
                    condition: sub::<UniPoly<Rational>>(d, "condition", &at)?,
                    recomputed_condition: sub::<UniPoly<Rational>>(d, "recomputed_condition", &at)?,
                    relation: sub::<UniPoly<Rational>>(d, "relation", &at)?,
                    status: decode_status(d, &at)?,
                },
                "incomplete" => DegenerateLocus::Incomplete {
                    condition: sub::<UniPoly<Rational>>(d, "condition", &at)?,
                    text: string(d, "text", &at)?.to_string(),
                    status: decode_status(d, &at)?,
                },
                other => {
                    return Err(Malformed::new(
                        format!("{at}.kind"),
                        format!("unknown kind {other:?}"),
                    ))
                }
            })
        }
    };
    Ok(LocusEntry {
        genus: uint(v, "genus", at)?,
        branch: decode_branch(v, "branch", at)?,
        components,
        special,
        degenerate,
    })
}

pub fn encode_table(t: &LocusTable) -> Value {
    json!({
        "version": t.version,
        "entries": t.entries.iter().map(encode_entry).collect::<Vec<_>>(),
    })
}

pub fn decode_table(v: &Value) -> Decoded<LocusTable> {
    let entries = array(field(v, "entries", "fixture")?, "fixture.entries")?
        .iter()
        .enumerate()
        .map(|(i, e)| decode_entry(e, &format!("fixture.entries[{i}]")))
        .collect::<Decoded<Vec<_>>>()?;
    Ok(LocusTable {
        version: string(v, "version", "fixture")?.to_string(),
        entries,
    })
}

pub fn load_table(path: &Path) -> Result<LocusTable, Malformed> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Malformed::new(
            path.display().to_string(),
            format!("cannot read fixture: {e}"),
        )
    })?;
    decode_table(&serde_json::from_str(&text)?)
}

pub fn encode_locus_value(v: &LocusValue) -> Value {
    match v {
        LocusValue::Point(p) => json!({
            "kind": "point",
            "genus": p.genus,
            "branch": p.branch.name(),
            "components": p.branch.components().iter().map(|c| c.name()).collect::<Vec<_>>(),
            "p": crate::codec::encode_list(&p.values),
        }),
        LocusValue::Constraint {
            invariant,
            relation,
        } => json!({
            "kind": "constraint",
            "invariant": invariant.name(),
            "relation": relation.encode(),
        }),
        LocusValue::Incomplete { text } => json!({ "kind": "incomplete", "text": text }),
    }
}
