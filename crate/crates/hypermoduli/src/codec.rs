//! JSON encodings of the kernel's exact values.
//!
//! Rationals are strings `"p/q"` or `"p"`, elements of `Q(i, sqrt3)` are
//! 4-arrays `[c0, c1, c2, c3]` on the basis `1, i, sqrt3, i sqrt3`,
//! polynomials are coefficient arrays lowest degree first and rational
//! functions are `{"num": [...], "den": [...]}`.

use std::fmt;

use hypermoduli_core::arith::{
    parse_rational, CycloElement, Field, RatFunc, Rational, Ring, UniPoly,
};
use hypermoduli_core::cyclic::{CyclicNormalForm, DihedralInvariants, NormalFormCase};
use hypermoduli_core::forms::BinaryForm;
use serde_json::{json, Map, Value};

/// Input that does not match the expected schema.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Malformed {
    /// JSON path of the offending value, or `line:column` for syntax errors.
    pub at: String,
    pub message: String,
}

impl Malformed {
    pub fn new(at: impl Into<String>, message: impl Into<String>) -> Self {
        Malformed {
            at: at.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Malformed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.at, self.message)
    }
}

impl std::error::Error for Malformed {}

impl From<serde_json::Error> for Malformed {
    fn from(e: serde_json::Error) -> Self {
        Malformed::new(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    }
}

pub type Decoded<T> = Result<T, Malformed>;

/// Values with a fixed JSON encoding.
pub trait Codec: Sized {
    fn encode(&self) -> Value;
    fn decode(v: &Value, at: &str) -> Decoded<Self>;
}

impl Codec for Rational {
    fn encode(&self) -> Value {
        Value::String(self.to_string())
    }

    fn decode(v: &Value, at: &str) -> Decoded<Self> {
        match v {
            Value::String(s) => {
                parse_rational(s).map_err(|_| Malformed::new(at, format!("not a rational: {s:?}")))
            }
            Value::Number(n) if n.is_i64() => {
                Ok(Rational::from_integer(n.as_i64().unwrap().into()))
            }
            _ => Err(Malformed::new(at, "expected a rational string")),
        }
    }
}

impl Codec for CycloElement {
    fn encode(&self) -> Value {
        Value::Array(self.coords().iter().map(Codec::encode).collect())
    }

    fn decode(v: &Value, at: &str) -> Decoded<Self> {
        match v {
            Value::Array(a) if a.len() == 4 => {
                let c = decode_list::<Rational>(a, at)?;
                Ok(CycloElement::from_coords([
                    c[0].clone(),
                    c[1].clone(),
                    c[2].clone(),
                    c[3].clone(),
                ]))
            }
            Value::Array(_) => Err(Malformed::new(at, "expected 4 coordinates")),
            // a bare rational embeds
            _ => Rational::decode(v, at).map(|q| CycloElement::from_rational(&q)),
        }
    }
}

impl<R: Ring + Codec> Codec for UniPoly<R> {
    fn encode(&self) -> Value {
        Value::Array(self.coeffs().iter().map(Codec::encode).collect())
    }

    fn decode(v: &Value, at: &str) -> Decoded<Self> {
        Ok(UniPoly::new(decode_list(array(v, at)?, at)?))
    }
}

impl<F: Field + Codec> Codec for RatFunc<F> {
    fn encode(&self) -> Value {
        json!({ "num": self.num().encode(), "den": self.den().encode() })
    }

    fn decode(v: &Value, at: &str) -> Decoded<Self> {
        let num = UniPoly::decode(field(v, "num", at)?, &format!("{at}.num"))?;
        let den = UniPoly::decode(field(v, "den", at)?, &format!("{at}.den"))?;
        RatFunc::new(num, den).map_err(|_| Malformed::new(format!("{at}.den"), "zero denominator"))
    }
}

pub fn encode_list<T: Codec>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(Codec::encode).collect())
}

pub fn decode_list<T: Codec>(xs: &[Value], at: &str) -> Decoded<Vec<T>> {
    xs.iter()
        .enumerate()
        .map(|(i, x)| T::decode(x, &format!("{at}[{i}]")))
        .collect()
}

pub fn array<'a>(v: &'a Value, at: &str) -> Decoded<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Malformed::new(at, "expected an array"))
}

pub fn object<'a>(v: &'a Value, at: &str) -> Decoded<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Malformed::new(at, "expected an object"))
}

pub fn field<'a>(v: &'a Value, key: &str, at: &str) -> Decoded<&'a Value> {
    object(v, at)?
        .get(key)
        .ok_or_else(|| Malformed::new(at, format!("missing field {key:?}")))
}

pub fn opt_field<'a>(v: &'a Value, key: &str, at: &str) -> Decoded<Option<&'a Value>> {
    Ok(object(v, at)?.get(key).filter(|x| !x.is_null()))
}

pub fn uint(v: &Value, key: &str, at: &str) -> Decoded<u32> {
    let x = field(v, key, at)?;
    x.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Malformed::new(format!("{at}.{key}"), "expected a non-negative integer"))
}

pub fn opt_uint(v: &Value, key: &str, at: &str) -> Decoded<Option<u32>> {
    match opt_field(v, key, at)? {
        None => Ok(None),
        Some(_) => uint(v, key, at).map(Some),
    }
}

pub fn string<'a>(v: &'a Value, key: &str, at: &str) -> Decoded<&'a str> {
    field(v, key, at)?
        .as_str()
        .ok_or_else(|| Malformed::new(format!("{at}.{key}"), "expected a string"))
}

/// Coefficient ring of a form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingTag {
    Rational,
    Cyclotomic,
    Parametric,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Rational => "Q",
            RingTag::Cyclotomic => "Qi_sqrt3",
            RingTag::Parametric => "Q[mu]",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [RingTag::Rational, RingTag::Cyclotomic, RingTag::Parametric]
            .into_iter()
            .find(|r| r.name() == s)
    }
}

/// A binary form over one of the supported rings.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyForm {
    Rational(BinaryForm<Rational>),
    Cyclotomic(BinaryForm<CycloElement>),
    Parametric(BinaryForm<UniPoly<Rational>>),
}

impl AnyForm {
    pub fn degree(&self) -> usize {
        match self {
            AnyForm::Rational(f) => f.degree(),
            AnyForm::Cyclotomic(f) => f.degree(),
            AnyForm::Parametric(f) => f.degree(),
        }
    }

    pub fn ring(&self) -> RingTag {
        match self {
            AnyForm::Rational(_) => RingTag::Rational,
            AnyForm::Cyclotomic(_) => RingTag::Cyclotomic,
            AnyForm::Parametric(_) => RingTag::Parametric,
        }
    }

    fn coeffs(&self) -> Value {
        match self {
            AnyForm::Rational(f) => encode_list(f.coeffs()),
            AnyForm::Cyclotomic(f) => encode_list(f.coeffs()),
            AnyForm::Parametric(f) => encode_list(f.coeffs()),
        }
    }
}

/// `{"genus", "degree", "ring", "coeffs"}`; `genus` is optional.
#[derive(Clone, PartialEq, Debug)]
pub struct FormDoc {
    pub genus: Option<u32>,
    pub form: AnyForm,
}

impl FormDoc {
    pub fn encode(&self) -> Value {
        let mut m = Map::new();
        if let Some(g) = self.genus {
            m.insert("genus".into(), json!(g));
        }
        m.insert("degree".into(), json!(self.form.degree()));
        m.insert("ring".into(), json!(self.form.ring().name()));
        m.insert("coeffs".into(), self.form.coeffs());
        Value::Object(m)
    }

    pub fn decode(v: &Value, at: &str) -> Decoded<Self> {
        let genus = opt_uint(v, "genus", at)?;
        let coeffs = array(field(v, "coeffs", at)?, &format!("{at}.coeffs"))?;
        let degree = match opt_uint(v, "degree", at)? {
            Some(d) => d as usize,
            None => coeffs.len().saturating_sub(1),
        };
        if coeffs.len() != degree + 1 {
            return Err(Malformed::new(
                format!("{at}.coeffs"),
                format!("{} coefficients for degree {degree}", coeffs.len()),
            ));
        }
        let ring = match opt_field(v, "ring", at)? {
            None => RingTag::Rational,
            Some(r) => r.as_str().and_then(RingTag::from_name).ok_or_else(|| {
                Malformed::new(
                    format!("{at}.ring"),
                    "expected \"Q\", \"Qi_sqrt3\" or \"Q[mu]\"",
                )
            })?,
        };
        let at_c = format!("{at}.coeffs");
        let build = |e: hypermoduli_core::Error| Malformed::new(at, e.to_string());
        let form = match ring {
            RingTag::Rational => AnyForm::Rational(
                BinaryForm::new(degree, decode_list(coeffs, &at_c)?).map_err(build)?,
            ),
            RingTag::Cyclotomic => AnyForm::Cyclotomic(
                BinaryForm::new(degree, decode_list(coeffs, &at_c)?).map_err(build)?,
            ),
            RingTag::Parametric => AnyForm::Parametric(
                BinaryForm::new(degree, decode_list(coeffs, &at_c)?).map_err(build)?,
            ),
        };
        Ok(FormDoc { genus, form })
    }
}

fn case_number(v: &Value, at: &str) -> Decoded<NormalFormCase> {
    let k = uint(v, "case", at)?;
    NormalFormCase::from_number(k)
        .map_err(|_| Malformed::new(format!("{at}.case"), "expected 1, 2 or 3"))
}

/// Whether any entry of a scalar list is written as a 4-array.
pub fn is_cyclotomic(xs: &[Value]) -> bool {
    xs.iter().any(Value::is_array)
}

/// `(case, n, genus)` header shared by normal forms and dihedral invariants.
pub fn cyclic_header(v: &Value, at: &str) -> Decoded<(NormalFormCase, u32, u32)> {
    Ok((
        case_number(v, at)?,
        uint(v, "n", at)?,
        uint(v, "genus", at)?,
    ))
}

pub fn encode_normal_form<F: Field + Codec>(nf: &CyclicNormalForm<F>) -> Value {
    json!({
        "case": nf.case().number(),
        "n": nf.n(),
        "genus": nf.genus(),
        "coeffs": encode_list(nf.coeffs()),
    })
}

pub fn decode_normal_form<F: Field + Codec>(v: &Value, at: &str) -> Decoded<CyclicNormalForm<F>> {
    let (case, n, genus) = cyclic_header(v, at)?;
    let coeffs = decode_list(
        array(field(v, "coeffs", at)?, &format!("{at}.coeffs"))?,
        &format!("{at}.coeffs"),
    )?;
    CyclicNormalForm::new(case, n, genus, coeffs).map_err(|e| Malformed::new(at, e.to_string()))
}

pub fn encode_dihedral<F: Field + Codec>(u: &DihedralInvariants<F>) -> Value {
    json!({ "u": encode_list(&u.u) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypermoduli_core::arith::rat;

    #[test]
    fn scalars() {
        assert_eq!(rat(-3, 4).encode(), json!("-3/4"));
        assert_eq!(rat(5, 1).encode(), json!("5"));
        assert_eq!(Rational::decode(&json!(7), "x").unwrap(), rat(7, 1));
        assert!(Rational::decode(&json!("1/0"), "x").is_err());
        let z = CycloElement::new(rat(1, 2), rat(0, 1), rat(-1, 1), rat(3, 1));
        assert_eq!(z.encode(), json!(["1/2", "0", "-1", "3"]));
        assert_eq!(CycloElement::decode(&z.encode(), "x").unwrap(), z);
        let e = CycloElement::decode(&json!(["1", "2"]), "p.coeffs[3]").unwrap_err();
        assert_eq!(e.at, "p.coeffs[3]");
    }

    #[test]
    fn rational_functions() {
        let f = RatFunc::new(UniPoly::from_ints(&[0, 2]), UniPoly::from_ints(&[4, 0, 2])).unwrap();
        let v = f.encode();
        assert_eq!(v, json!({"num": ["0", "1"], "den": ["2", "0", "1"]}));
        assert_eq!(RatFunc::<Rational>::decode(&v, "x").unwrap(), f);
        assert!(RatFunc::<Rational>::decode(&json!({"num": ["1"], "den": []}), "x").is_err());
    }

    #[test]
    fn forms() {
        let v = json!({"genus": 2, "degree": 6, "ring": "Q", "coeffs": ["1", "0", "0", "0", "0", "0", "-1"]});
        let doc = FormDoc::decode(&v, "payload").unwrap();
        assert_eq!(doc.encode(), v);
        let bad = json!({"degree": 6, "coeffs": ["1"]});
        assert_eq!(
            FormDoc::decode(&bad, "payload").unwrap_err().at,
            "payload.coeffs"
        );
        let p = json!({"degree": 2, "ring": "Q[mu]", "coeffs": [["0", "1"], [], ["1"]]});
        assert_eq!(
            FormDoc::decode(&p, "p").unwrap().form.ring(),
            RingTag::Parametric
        );
    }
}
