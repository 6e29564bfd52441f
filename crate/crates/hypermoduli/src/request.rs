use std::fmt;
use std::time::Instant;

use hypermoduli_core::a4::{
    a4_branch_shape, a4_delta, orbit_model, rational_model, verify_locus, LocusTable, ModelVariant,
};
use hypermoduli_core::arith::{CycloElement, Field, FractionField, Rational, RootField, UniPoly};
use hypermoduli_core::cyclic::{
    group_catalogue, reconstruct_all, reconstruct_from_u, CyclicNormalForm, DihedralInvariants,
    GroupTag, Reconstruction,
};
use hypermoduli_core::forms::{
    classify_point, vanishing_profile, AbsoluteInvariant, BinaryForm, Catalogue,
};
use serde_json::{json, Map, Value};

use crate::codec::{
    array, cyclic_header, decode_list, decode_normal_form, encode_dihedral, encode_list,
    encode_normal_form, field, is_cyclotomic, opt_field, string, uint, AnyForm, Codec, Decoded,
    FormDoc, Malformed,
};
use crate::fixture::encode_locus_value;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Command {
    Invariants,
    Classify,
    Vanishing,
    Dihedral,
    Reconstruct,
    Model,
    Recover,
    VerifyLocus,
    Catalogue,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Invariants,
        Command::Classify,
        Command::Vanishing,
        Command::Dihedral,
        Command::Reconstruct,
        Command::Model,
        Command::Recover,
        Command::VerifyLocus,
        Command::Catalogue,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Invariants => "invariants",
            Command::Classify => "classify",
            Command::Vanishing => "vanishing",
            Command::Dihedral => "dihedral",
            Command::Reconstruct => "reconstruct",
            Command::Model => "model",
            Command::Recover => "recover",
            Command::VerifyLocus => "verify-locus",
            Command::Catalogue => "catalogue",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Request {
    pub command: Command,
    pub payload: Value,
}

impl Request {
    /// `{"command": ..., "payload": {...}}`
    pub fn decode(v: &Value, at: &str) -> Decoded<Self> {
        let name = string(v, "command", at)?;
        let command = Command::from_name(name).ok_or_else(|| {
            Malformed::new(format!("{at}.command"), format!("unknown command {name:?}"))
        })?;
        let payload = field(v, "payload", at)?.clone();
        Ok(Request { command, payload })
    }

    pub fn encode(&self) -> Value {
        json!({ "command": self.command.name(), "payload": self.payload })
    }
}

/// Why a request produced no result.
#[derive(Clone, PartialEq, Debug)]
pub enum Failure {
    /// The input does not match the command's schema.
    Malformed(Malformed),
    /// The kernel rejected well-formed input.
    Domain(hypermoduli_core::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Malformed(_) => 2,
        }
    }

    pub fn encode(&self) -> Value {
        match self {
            Failure::Malformed(m) => {
                json!({ "name": "malformed", "at": m.at, "message": m.message })
            }
            Failure::Domain(e) => json!({ "name": e.name(), "message": e.to_string() }),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Malformed(m) => write!(f, "malformed input at {m}"),
            Failure::Domain(e) => write!(f, "{}: {e}", e.name()),
        }
    }
}

impl From<Malformed> for Failure {
    fn from(m: Malformed) -> Self {
        Failure::Malformed(m)
    }
}

impl From<hypermoduli_core::Error> for Failure {
    fn from(e: hypermoduli_core::Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Provenance {
    pub kernel: String,
    pub fixture: String,
    pub wall_time_us: u128,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Report {
    pub outcome: Result<Value, Failure>,
    pub provenance: Provenance,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        self.outcome.as_ref().err().map_or(0, Failure::exit_code)
    }

    pub fn encode(&self) -> Value {
        let provenance = json!({
            "kernel": self.provenance.kernel,
            "fixture": self.provenance.fixture,
            "wall_time_us": self.provenance.wall_time_us,
        });
        match &self.outcome {
            Ok(result) => json!({ "status": "ok", "result": result, "provenance": provenance }),
            Err(f) => json!({ "status": "error", "error": f.encode(), "provenance": provenance }),
        }
    }
}

/// Runs requests against one locus table.
pub struct Engine {
    table: LocusTable,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(LocusTable::builtin())
    }
}

impl Engine {
    pub fn new(table: LocusTable) -> Self {
        Engine { table }
    }

    pub fn table(&self) -> &LocusTable {
        &self.table
    }

    fn provenance(&self, start: Instant) -> Provenance {
        Provenance {
            kernel: hypermoduli_core::VERSION.to_string(),
            fixture: self.table.version.clone(),
            wall_time_us: start.elapsed().as_micros(),
        }
    }

    /// Wraps a decoding failure that happened before a request existed.
    pub fn reject(&self, m: Malformed) -> Report {
        Report {
            outcome: Err(Failure::Malformed(m)),
            provenance: self.provenance(Instant::now()),
        }
    }

    pub fn run(&self, req: &Request) -> Report {
        let start = Instant::now();
        let outcome = self.execute(req);
        Report {
            outcome,
            provenance: self.provenance(start),
        }
    }

    pub fn execute(&self, req: &Request) -> Result<Value, Failure> {
        let p = &req.payload;
        let at = "payload";
        match req.command {
            Command::Invariants => invariants(&FormDoc::decode(p, at)?),
            Command::Classify => classify(&FormDoc::decode(p, at)?),
            Command::Vanishing => vanishing(&FormDoc::decode(p, at)?),
            Command::Dihedral => dihedral(p),
            Command::Reconstruct => reconstruct(p),
            Command::Model => self.model(p),
            Command::Recover => {
                let g = uint(p, "genus", at)?;
                let point: Vec<Rational> =
                    decode_list(array(field(p, "p", at)?, "payload.p")?, "payload.p")?;
                let mu = self.table.recover_mu(g, &point)?;
                Ok(json!({ "genus": g, "mu": encode_list(&mu) }))
            }
            Command::VerifyLocus => {
                let g = uint(p, "genus", at)?;
                let r = verify_locus(&self.table, g)?;
                let checks: Vec<Value> = r
                    .checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                    .collect();
                Ok(json!({ "genus": g, "passed": r.passed(), "checks": checks }))
            }
            Command::Catalogue => catalogue(p),
        }
    }

    fn model(&self, p: &Value) -> Result<Value, Failure> {
        let at = "payload";
        let g = uint(p, "genus", at)?;
        let family = opt_field(p, "family", at)?
            .and_then(Value::as_str)
            .unwrap_or("rational");
        match family {
            "rational" => {
                let variant = match opt_field(p, "variant", at)? {
                    None => ModelVariant::Corrected,
                    Some(v) => v
                        .as_str()
                        .and_then(ModelVariant::from_name)
                        .ok_or_else(|| {
                            Malformed::new(
                                "payload.variant",
                                "expected \"corrected\" or \"transcribed\"",
                            )
                        })?,
                };
                match opt_field(p, "mu", at)? {
                    None => {
                        let f = rational_model(g, &UniPoly::<Rational>::x(), variant)?;
                        let doc = FormDoc {
                            genus: Some(g),
                            form: AnyForm::Parametric(f),
                        };
                        Ok(json!({ "form": doc.encode(), "variant": variant.name() }))
                    }
                    Some(mu) => {
                        let mu = Rational::decode(mu, "payload.mu")?;
                        let f = rational_model(g, &mu, variant)?;
                        let doc = FormDoc {
                            genus: Some(g),
                            form: AnyForm::Rational(f),
                        };
                        let locus = self
                            .table
                            .parametrize(g, &mu)
                            .map(|v| encode_locus_value(&v));
                        let mut out = Map::new();
                        out.insert("form".into(), doc.encode());
                        out.insert("variant".into(), json!(variant.name()));
                        out.insert("locus".into(), locus.unwrap_or(Value::Null));
                        Ok(Value::Object(out))
                    }
                }
            }
            "orbit" => {
                let lambdas: Vec<CycloElement> = decode_list(
                    array(field(p, "lambda", at)?, "payload.lambda")?,
                    "payload.lambda",
                )?;
                let f = orbit_model(g, &lambdas)?;
                let doc = FormDoc {
                    genus: Some(g),
                    form: AnyForm::Cyclotomic(f),
                };
                Ok(json!({ "form": doc.encode() }))
            }
            other => {
                Err(Malformed::new("payload.family", format!("unknown family {other:?}")).into())
            }
        }
    }
}

fn invariants_of<R: FractionField + Codec>(f: &BinaryForm<R>) -> Result<Value, Failure>
where
    R::Frac: Codec,
{
    let cat = Catalogue::new(f.clone())?;
    let mut inv = Map::new();
    for (i, v) in cat.invariant_set()?.iter() {
        inv.insert(i.name().into(), v.map_or(Value::Null, Codec::encode));
    }
    let mut abs = Map::new();
    for a in AbsoluteInvariant::ALL {
        abs.insert(
            a.name().into(),
            a.evaluate(&cat)?
                .as_ref()
                .map_or(Value::Null, Codec::encode),
        );
    }
    Ok(json!({ "degree": f.degree(), "invariants": inv, "absolute": abs }))
}

fn invariants(doc: &FormDoc) -> Result<Value, Failure> {
    match &doc.form {
        AnyForm::Rational(f) => invariants_of(f),
        AnyForm::Cyclotomic(f) => invariants_of(f),
        AnyForm::Parametric(f) => invariants_of(f),
    }
}

fn need_genus(doc: &FormDoc) -> Decoded<u32> {
    doc.genus
        .ok_or_else(|| Malformed::new("payload", "missing field \"genus\""))
}

fn classify_of<R: FractionField>(f: &BinaryForm<R>, g: u32) -> Result<Value, Failure>
where
    R::Frac: Codec,
{
    let p = classify_point(f, g)?;
    let names: Vec<&str> = p.branch.components().iter().map(|c| c.name()).collect();
    Ok(
        json!({ "genus": g, "branch": p.branch.name(), "components": names, "p": encode_list(&p.values) }),
    )
}

fn classify(doc: &FormDoc) -> Result<Value, Failure> {
    let g = need_genus(doc)?;
    match &doc.form {
        AnyForm::Rational(f) => classify_of(f, g),
        AnyForm::Cyclotomic(f) => classify_of(f, g),
        AnyForm::Parametric(f) => classify_of(f, g),
    }
}

fn vanishing(doc: &FormDoc) -> Result<Value, Failure> {
    let g = need_genus(doc)?;
    let profile = match &doc.form {
        AnyForm::Rational(f) => vanishing_profile(f, g)?,
        AnyForm::Cyclotomic(f) => vanishing_profile(f, g)?,
        AnyForm::Parametric(f) => vanishing_profile(f, g)?,
    };
    let mut m = Map::new();
    for (i, z) in &profile {
        m.insert(i.name().into(), json!(z));
    }
    Ok(json!({ "genus": g, "vanishing": m, "holds": profile.iter().all(|(_, z)| *z) }))
}

fn dihedral_of<F: Field + Codec>(p: &Value) -> Result<Value, Failure> {
    let nf: CyclicNormalForm<F> = decode_normal_form(p, "payload")?;
    Ok(encode_dihedral(&nf.dihedral_invariants()))
}

fn dihedral(p: &Value) -> Result<Value, Failure> {
    if is_cyclotomic(array(field(p, "coeffs", "payload")?, "payload.coeffs")?) {
        dihedral_of::<CycloElement>(p)
    } else {
        dihedral_of::<Rational>(p)
    }
}

fn reconstruct_of<F: RootField + Codec>(p: &Value, u: &[Value]) -> Result<Value, Failure> {
    let (case, n, genus) = cyclic_header(p, "payload")?;
    let u = DihedralInvariants::new(case, n, genus, decode_list::<F>(u, "payload.u")?)?;
    let all = opt_field(p, "all", "payload")?
        .and_then(Value::as_bool)
        .unwrap_or(false);
    if all {
        let forms: Vec<Value> = reconstruct_all(&u)?
            .iter()
            .map(encode_normal_form)
            .collect();
        return Ok(json!({ "forms": forms }));
    }
    Ok(match reconstruct_from_u(&u)? {
        Reconstruction::Form(nf) => json!({ "form": encode_normal_form(&nf) }),
        Reconstruction::Irrational { polynomial } => {
            json!({ "irrational": { "polynomial": polynomial.encode() } })
        }
    })
}

fn reconstruct(p: &Value) -> Result<Value, Failure> {
    let u = array(field(p, "u", "payload")?, "payload.u")?;
    if is_cyclotomic(u) {
        reconstruct_of::<CycloElement>(p, u)
    } else {
        reconstruct_of::<Rational>(p, u)
    }
}

fn catalogue(p: &Value) -> Result<Value, Failure> {
    let at = "payload";
    let g = uint(p, "genus", at)?;
    match opt_field(p, "group", at)? {
        Some(name) => {
            let group = name.as_str().and_then(GroupTag::from_name).ok_or_else(|| {
                Malformed::new("payload.group", "expected Z2xZn, Z2n, Z2xA4 or SL2(3)")
            })?;
            let n = match opt_field(p, "n", at)? {
                Some(_) => uint(p, "n", at)?,
                None => 0,
            };
            let row = group_catalogue(group, n, g)?;
            let sig: Vec<String> = row.signature.iter().map(ToString::to_string).collect();
            Ok(json!({
                "row": row.row,
                "group": row.group.name(),
                "delta": row.delta,
                "signature": sig,
                "involutions": row.involutions,
            }))
        }
        None => {
            let b = a4_branch_shape(g)?;
            Ok(json!({
                "genus": g,
                "group": b.group.name(),
                "residue": b.residue,
                "fixed_weierstrass_points": b.intersection,
                "delta": a4_delta(g)?,
            }))
        }
    }
}
