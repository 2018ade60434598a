//! Parameter bundles, their wire format and conversion into scalars.
//!
//! Parameters are stored as decimal or rational strings so that a
//! [`ParamSet`] means the same thing in every arithmetic mode and survives a
//! JSON round trip unchanged. They are parsed into [`QComplex`] only when an
//! [`EvalContext`] is known.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::qarith::{EvalContext, QComplex};

use super::registry::{descriptor, Family, Len, Shape};
use super::IdentityId;

/// A complex parameter as `[re, im]`, each a decimal or `p/q` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Num(pub String, pub String);

impl Num {
    pub fn real(re: impl Into<String>) -> Self {
        Num(re.into(), "0".into())
    }

    pub fn complex(re: impl Into<String>, im: impl Into<String>) -> Self {
        Num(re.into(), im.into())
    }

    pub fn value(&self, ctx: &EvalContext) -> Result<QComplex> {
        ctx.number(&self.0, &self.1)
    }

    /// Accepts `"1/3"`, `0.25`, or `["re", "im"]`.
    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(Num::real(s.clone())),
            Value::Number(x) => Ok(Num::real(x.to_string())),
            Value::Array(parts) if parts.len() == 2 && parts.iter().all(is_scalar_json) => {
                Ok(Num(scalar_string(&parts[0]), scalar_string(&parts[1])))
            }
            other => Err(Error::Parse(format!("expected a number or [re, im], got {other}"))),
        }
    }
}

fn is_scalar_json(v: &Value) -> bool {
    matches!(v, Value::String(_) | Value::Number(_))
}

fn scalar_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn nums(v: &[Num], ctx: &EvalContext) -> Result<Vec<QComplex>> {
    v.iter().map(|x| x.value(ctx)).collect()
}

fn opt(v: &Option<Num>, ctx: &EvalContext) -> Result<Option<QComplex>> {
    v.as_ref().map(|x| x.value(ctx)).transpose()
}

/// Parameters of bilateral `C_n` series: `gi_cn_6psi6`, `te_reduction`,
/// `kmt_transform`, `kms_summation` and `c2_gasper`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilateralCnParams {
    pub n: usize,
    pub p: usize,
    pub a: Vec<Num>,
    pub z: Vec<Num>,
    #[serde(default)]
    pub c: Vec<Num>,
    #[serde(default)]
    pub m: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Num>,
}

/// Parameters of the terminating `C_n` identities: `ak_finite`,
/// `n0_terminating` and `cml_watson`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCnParams {
    pub n: usize,
    pub p: usize,
    pub z: Vec<Num>,
    #[serde(default)]
    pub c: Vec<Num>,
    #[serde(default)]
    pub m: Vec<u32>,
    #[serde(default)]
    pub l: Vec<u32>,
    #[serde(default)]
    pub a: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<Num>,
}

/// Parameters of the one-variable well-poised series: `fl_onevar`,
/// `fl_an_form` and the finite cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneVarParams {
    pub p: usize,
    pub a: Num,
    pub b: Num,
    pub c: Num,
    pub d: Num,
    pub e: Num,
    #[serde(default)]
    pub f: Vec<Num>,
    #[serde(default)]
    pub m: Vec<u32>,
}

/// Parameters of the `A_n` reduction formula `rg_an_reduction`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnBilateralParams {
    pub n: usize,
    pub p: usize,
    pub a: Vec<Num>,
    pub b: Vec<Num>,
    #[serde(default)]
    pub c: Vec<Num>,
    #[serde(default)]
    pub m: Vec<u32>,
    pub z: Vec<Num>,
}

/// A parameter bundle tagged by family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ParamSet {
    BilateralCn(BilateralCnParams),
    FiniteCn(FiniteCnParams),
    OneVar(OneVarParams),
    AnBilateral(AnBilateralParams),
}

impl ParamSet {
    pub fn family(&self) -> Family {
        match self {
            ParamSet::BilateralCn(_) => Family::BilateralCn,
            ParamSet::FiniteCn(_) => Family::FiniteCn,
            ParamSet::OneVar(_) => Family::OneVar,
            ParamSet::AnBilateral(_) => Family::AnBilateral,
        }
    }

    fn n(&self) -> usize {
        match self {
            ParamSet::BilateralCn(x) => x.n,
            ParamSet::FiniteCn(x) => x.n,
            ParamSet::OneVar(_) => 1,
            ParamSet::AnBilateral(x) => x.n,
        }
    }

    fn p(&self) -> usize {
        match self {
            ParamSet::BilateralCn(x) => x.p,
            ParamSet::FiniteCn(x) => x.p,
            ParamSet::OneVar(x) => x.p,
            ParamSet::AnBilateral(x) => x.p,
        }
    }

    /// Shape of a named field as it is present in this bundle.
    fn field_shape(&self, name: &str) -> FieldPresence {
        use FieldPresence::*;
        let vecn = |v: &Vec<Num>| if v.is_empty() { Absent } else { Vector(v.len()) };
        let ints = |v: &Vec<u32>| if v.is_empty() { Absent } else { Ints(v.len()) };
        let scal = |v: &Option<Num>| if v.is_some() { Scalar } else { Absent };
        match (self, name) {
            (ParamSet::BilateralCn(x), "a") => vecn(&x.a),
            (ParamSet::BilateralCn(x), "z") => vecn(&x.z),
            (ParamSet::BilateralCn(x), "c") => vecn(&x.c),
            (ParamSet::BilateralCn(x), "m") => ints(&x.m),
            (ParamSet::BilateralCn(x), "w") => x.w.as_ref().map_or(Absent, vecn),
            (ParamSet::BilateralCn(x), "b") => scal(&x.b),
            (ParamSet::BilateralCn(x), "d") => scal(&x.d),
            (ParamSet::FiniteCn(x), "z") => vecn(&x.z),
            (ParamSet::FiniteCn(x), "c") => vecn(&x.c),
            (ParamSet::FiniteCn(x), "m") => ints(&x.m),
            (ParamSet::FiniteCn(x), "l") => ints(&x.l),
            (ParamSet::FiniteCn(x), "a") => vecn(&x.a),
            (ParamSet::FiniteCn(x), "b") => scal(&x.b),
            (ParamSet::FiniteCn(x), "d") => scal(&x.d),
            (ParamSet::FiniteCn(x), "e") => scal(&x.e),
            (ParamSet::OneVar(_), "a" | "b" | "c" | "d" | "e") => Scalar,
            (ParamSet::OneVar(x), "f") => vecn(&x.f),
            (ParamSet::OneVar(x), "m") => ints(&x.m),
            (ParamSet::AnBilateral(x), "a") => vecn(&x.a),
            (ParamSet::AnBilateral(x), "b") => vecn(&x.b),
            (ParamSet::AnBilateral(x), "c") => vecn(&x.c),
            (ParamSet::AnBilateral(x), "m") => ints(&x.m),
            (ParamSet::AnBilateral(x), "z") => vecn(&x.z),
            _ => Absent,
        }
    }

    /// Checks family, dimensions and field lengths against the schema of `id`.
    pub fn validate(&self, id: IdentityId) -> Result<()> {
        let desc = descriptor(id);
        if self.family() != desc.family {
            return Err(Error::SchemaMismatch(format!(
                "{id} takes {:?} parameters, got {:?}",
                desc.family,
                self.family()
            )));
        }
        let (n, p) = (self.n(), self.p());
        if n < desc.n_range.0 || n > desc.n_range.1 {
            return Err(Error::SchemaMismatch(format!(
                "{id} needs n in {}..={}, got {n}",
                desc.n_range.0, desc.n_range.1
            )));
        }
        if desc.p_equals_n && p != n {
            return Err(Error::SchemaMismatch(format!("{id} needs p = n, got p = {p}, n = {n}")));
        }
        if desc.p_zero && p != 0 {
            return Err(Error::SchemaMismatch(format!("{id} takes no shift parameters, got p = {p}")));
        }
        for spec in desc.fields {
            let want_len = |len: Len| match len {
                Len::N => n,
                Len::P => p,
                Len::TwoNPlus2 => 2 * n + 2,
                Len::Fixed(k) => k,
            };
            let got = self.field_shape(spec.name);
            let ok = match (spec.shape, got) {
                (Shape::Scalar, FieldPresence::Scalar) => true,
                (Shape::Vector(len), FieldPresence::Vector(k)) => k == want_len(len),
                (Shape::Vector(len), FieldPresence::Absent) => want_len(len) == 0,
                (Shape::Ints(len), FieldPresence::Ints(k)) => k == want_len(len),
                (Shape::Ints(len), FieldPresence::Absent) => want_len(len) == 0,
                _ => false,
            };
            if !ok {
                return Err(Error::SchemaMismatch(format!(
                    "{id}: field {} should be {}, found {}",
                    spec.name,
                    spec.shape.describe(),
                    got.describe()
                )));
            }
        }
        for name in ["a", "b", "c", "d", "e", "f", "l", "m", "w", "z"] {
            if !desc.fields.iter().any(|s| s.name == name)
                && self.field_shape(name) != FieldPresence::Absent
            {
                return Err(Error::SchemaMismatch(format!("{id} does not take field {name}")));
            }
        }
        Ok(())
    }

    pub fn as_bilateral_cn(&self) -> Option<&BilateralCnParams> {
        match self {
            ParamSet::BilateralCn(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_finite_cn(&self) -> Option<&FiniteCnParams> {
        match self {
            ParamSet::FiniteCn(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_one_var(&self) -> Option<&OneVarParams> {
        match self {
            ParamSet::OneVar(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_an_bilateral(&self) -> Option<&AnBilateralParams> {
        match self {
            ParamSet::AnBilateral(x) => Some(x),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldPresence {
    Absent,
    Scalar,
    Vector(usize),
    Ints(usize),
}

impl FieldPresence {
    fn describe(self) -> String {
        match self {
            FieldPresence::Absent => "nothing".into(),
            FieldPresence::Scalar => "a scalar".into(),
            FieldPresence::Vector(k) => format!("a vector of length {k}"),
            FieldPresence::Ints(k) => format!("{k} integers"),
        }
    }
}

fn shifts(m: &[u32]) -> Vec<i64> {
    m.iter().map(|&x| x as i64).collect()
}

/// Scalars of a [`BilateralCnParams`] in a given context.
#[derive(Debug, Clone)]
pub struct CnValues {
    pub a: Vec<QComplex>,
    pub z: Vec<QComplex>,
    pub c: Vec<QComplex>,
    pub m: Vec<i64>,
    pub w: Option<Vec<QComplex>>,
    pub b: Option<QComplex>,
    pub d: Option<QComplex>,
}

impl CnValues {
    pub fn new(p: &BilateralCnParams, ctx: &EvalContext) -> Result<Self> {
        Ok(CnValues {
            a: nums(&p.a, ctx)?,
            z: nums(&p.z, ctx)?,
            c: nums(&p.c, ctx)?,
            m: shifts(&p.m),
            w: p.w.as_ref().map(|w| nums(w, ctx)).transpose()?,
            b: opt(&p.b, ctx)?,
            d: opt(&p.d, ctx)?,
        })
    }
}

/// Scalars of a [`FiniteCnParams`] in a given context.
#[derive(Debug, Clone)]
pub struct FiniteValues {
    pub z: Vec<QComplex>,
    pub c: Vec<QComplex>,
    pub m: Vec<i64>,
    pub l: Vec<i64>,
    pub a: Vec<QComplex>,
    pub b: Option<QComplex>,
    pub d: Option<QComplex>,
    pub e: Option<QComplex>,
}

impl FiniteValues {
    pub fn new(p: &FiniteCnParams, ctx: &EvalContext) -> Result<Self> {
        Ok(FiniteValues {
            z: nums(&p.z, ctx)?,
            c: nums(&p.c, ctx)?,
            m: shifts(&p.m),
            l: shifts(&p.l),
            a: nums(&p.a, ctx)?,
            b: opt(&p.b, ctx)?,
            d: opt(&p.d, ctx)?,
            e: opt(&p.e, ctx)?,
        })
    }
}

/// Scalars of a [`OneVarParams`] in a given context.
#[derive(Debug, Clone)]
pub struct OneVarValues {
    pub a: QComplex,
    pub b: QComplex,
    pub c: QComplex,
    pub d: QComplex,
    pub e: QComplex,
    pub f: Vec<QComplex>,
    pub m: Vec<i64>,
}

impl OneVarValues {
    pub fn new(p: &OneVarParams, ctx: &EvalContext) -> Result<Self> {
        Ok(OneVarValues {
            a: p.a.value(ctx)?,
            b: p.b.value(ctx)?,
            c: p.c.value(ctx)?,
            d: p.d.value(ctx)?,
            e: p.e.value(ctx)?,
            f: nums(&p.f, ctx)?,
            m: shifts(&p.m),
        })
    }
}

/// Scalars of an [`AnBilateralParams`] in a given context.
#[derive(Debug, Clone)]
pub struct AnValues {
    pub a: Vec<QComplex>,
    pub b: Vec<QComplex>,
    pub c: Vec<QComplex>,
    pub m: Vec<i64>,
    pub z: Vec<QComplex>,
}

impl AnValues {
    pub fn new(p: &AnBilateralParams, ctx: &EvalContext) -> Result<Self> {
        Ok(AnValues {
            a: nums(&p.a, ctx)?,
            b: nums(&p.b, ctx)?,
            c: nums(&p.c, ctx)?,
            m: shifts(&p.m),
            z: nums(&p.z, ctx)?,
        })
    }
}

/// The flat parameter-file format:
/// `{"id": ..., "q": [re, im], "n": ..., "p": ..., "a": [[re, im], ...], ...}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamFile {
    pub id: IdentityId,
    pub q: Option<Num>,
    pub params: ParamSet,
}

impl ParamFile {
    pub fn parse_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(format!("parameter file: {e}")))?;
        ParamFile::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("parameter file must be a JSON object".into()))?;
        let id: IdentityId = obj
            .get("id")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("parameter file needs a string field \"id\"".into()))?
            .parse()?;
        let q = obj.get("q").map(Num::from_json).transpose()?;
        let params = params_from_fields(id, obj)?;
        Ok(ParamFile { id, q, params })
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("id".into(), Value::String(self.id.to_string()));
        if let Some(q) = &self.q {
            obj.insert("q".into(), serde_json::to_value(q).unwrap());
        }
        if let Value::Object(fields) = serde_json::to_value(&self.params).unwrap() {
            for (k, v) in fields {
                if k == "family" {
                    continue;
                }
                let empty = matches!(&v, Value::Array(a) if a.is_empty());
                if !empty {
                    obj.insert(k, v);
                }
            }
        }
        let n_default = matches!(self.params, ParamSet::OneVar(_));
        if n_default {
            obj.insert("n".into(), Value::from(1));
        }
        Value::Object(obj)
    }
}

/// Builds a [`ParamSet`] for `id` from loosely typed JSON fields, normalizing
/// bare scalars to `[re, "0"]` according to the schema.
pub fn params_from_fields(id: IdentityId, obj: &Map<String, Value>) -> Result<ParamSet> {
    let desc = descriptor(id);
    let mut out = Map::new();
    out.insert("family".into(), serde_json::to_value(desc.family).unwrap());
    let get_usize = |k: &str| -> Result<Option<usize>> {
        obj.get(k)
            .map(|v| {
                v.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("field {k} must be a nonnegative integer")))
            })
            .transpose()
    };
    let n = get_usize("n")?;
    let p = get_usize("p")?;
    let mut infer_n = None;
    let mut infer_p = None;
    for spec in desc.fields {
        let Some(v) = obj.get(spec.name) else { continue };
        let norm = match spec.shape {
            Shape::Scalar => serde_json::to_value(Num::from_json(v)?).unwrap(),
            Shape::Vector(len) => {
                let items: Vec<Num> = match v {
                    Value::Array(items) if items.iter().all(|x| !is_scalar_json(x)) => {
                        items.iter().map(Num::from_json).collect::<Result<_>>()?
                    }
                    // a bare [re, im] pair for a length-one vector
                    Value::Array(items) if len == Len::Fixed(1) && items.len() == 2 => vec![Num::from_json(v)?],
                    Value::Array(items) => items.iter().map(Num::from_json).collect::<Result<_>>()?,
                    single => vec![Num::from_json(single)?],
                };
                match len {
                    Len::N => infer_n = Some(items.len()),
                    Len::P => infer_p = Some(items.len()),
                    _ => {}
                }
                serde_json::to_value(items).unwrap()
            }
            Shape::Ints(len) => {
                let items: Vec<u32> = serde_json::from_value(v.clone())
                    .map_err(|_| Error::Parse(format!("field {} must be a list of nonnegative integers", spec.name)))?;
                if len == Len::P && infer_p.is_none() {
                    infer_p = Some(items.len());
                }
                Value::from(items)
            }
        };
        out.insert(spec.name.into(), norm);
    }
    for k in obj.keys() {
        let known = ["id", "q", "n", "p", "family"].contains(&k.as_str()) || desc.fields.iter().any(|s| s.name == k);
        if !known {
            return Err(Error::SchemaMismatch(format!("{id} does not take field {k}")));
        }
    }
    let n = n.or(infer_n).unwrap_or(desc.n_range.0);
    let p = p.or(infer_p).unwrap_or(if desc.p_equals_n { n } else { 0 });
    if desc.family != Family::OneVar {
        out.insert("n".into(), Value::from(n));
    }
    out.insert("p".into(), Value::from(p));
    let params: ParamSet =
        serde_json::from_value(Value::Object(out)).map_err(|e| Error::Parse(format!("{id}: {e}")))?;
    params.validate(id)?;
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn num_accepts_loose_forms() {
        assert_eq!(Num::from_json(&json!("1/3")).unwrap(), Num::real("1/3"));
        assert_eq!(Num::from_json(&json!(0.25)).unwrap(), Num::real("0.25"));
        assert_eq!(Num::from_json(&json!(["1", "-2"])).unwrap(), Num::complex("1", "-2"));
        assert!(Num::from_json(&json!({"re": 1})).is_err());
    }

    #[test]
    fn n0_file_with_scalar_letters() {
        let f = ParamFile::from_json(&json!({
            "id": "n0_terminating", "q": ["1/3", "0"], "n": 1,
            "z": [["2", "0"]], "m": [1], "a": ["1/5", "0"], "b": "1/7"
        }))
        .unwrap();
        let p = f.params.as_finite_cn().unwrap();
        assert_eq!(p.a, vec![Num::real("1/5")]);
        assert_eq!(p.b, Some(Num::real("1/7")));
        assert_eq!(p.p, 1);
    }

    #[test]
    fn file_round_trip() {
        let v = json!({
            "id": "te_reduction", "q": ["0.3", "0.1"], "n": 1, "p": 1,
            "a": [["1.5","0"],["1.2","0.3"],["-1.1","0"],["1.7","0"]],
            "z": [["0.6","0.2"]], "c": [["0.5","0"]], "m": [2]
        });
        let f = ParamFile::from_json(&v).unwrap();
        let back = ParamFile::from_json(&f.to_json()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn schema_errors() {
        let bad_len = json!({
            "id": "gi_cn_6psi6", "n": 1,
            "a": [["1.5","0"],["1.2","0"],["-1.1","0"]], "z": [["0.6","0"]]
        });
        assert!(matches!(ParamFile::from_json(&bad_len), Err(Error::SchemaMismatch(_))));
        let extra = json!({
            "id": "gi_cn_6psi6", "n": 1,
            "a": [["1.5","0"],["1.2","0"],["-1.1","0"],["2","0"]], "z": [["0.6","0"]], "e": "1"
        });
        assert!(matches!(ParamFile::from_json(&extra), Err(Error::SchemaMismatch(_))));
        let wrong_family = ParamSet::OneVar(OneVarParams {
            p: 0,
            a: Num::real("1"),
            b: Num::real("1"),
            c: Num::real("1"),
            d: Num::real("1"),
            e: Num::real("1"),
            f: vec![],
            m: vec![],
        });
        assert!(wrong_family.validate(IdentityId::GiCn6psi6).is_err());
        assert!(wrong_family.validate(IdentityId::FlOnevar).is_ok());
    }
}
