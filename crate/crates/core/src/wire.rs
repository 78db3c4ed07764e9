//! JSON text forms for polynomials, matrices, modules, forms, blocks and
//! reports. Polynomials are `[[exponent, "num/den"], ...]` with strictly
//! increasing exponents.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::decompose::{CanonicalBlock, DecompositionResult};
use crate::error::{Error, Result};
use crate::form::BlanchfieldForm;
use crate::iso::IsoReport;
use crate::laurent::LaurentPoly;
use crate::matrix::LambdaMatrix;
use crate::module::{AlexanderModule, ClassifierVerdict};
use crate::poly::Poly;
use crate::realize::SurgeryRecipe;
use crate::snf::SnfResult;
use crate::symmetric::SymmetricPoly;
use crate::torsion::TorsionValue;
use crate::Rational;

pub const MAX_INPUT_BYTES: usize = 8 << 20;
pub const MAX_EXPONENT: i64 = 1 << 14;
pub const MAX_DIM: usize = 64;
pub const MAX_DIGITS: usize = 4096;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_document(text: &str) -> Result<Value> {
    if text.len() > MAX_INPUT_BYTES {
        return Err(bad(format!("input exceeds {MAX_INPUT_BYTES} bytes")));
    }
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

fn parse_int(s: &str) -> Result<BigInt> {
    let s = s.trim();
    if s.is_empty() || s.len() > MAX_DIGITS {
        return Err(bad(format!("bad integer {s:?}")));
    }
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(format!("bad integer {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| bad(e.to_string()))
}

/// `"a/b"` or `"a"`; JSON integers are accepted too.
pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => {
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (parse_int(n)?, parse_int(d)?),
                None => (parse_int(s)?, BigInt::from(1)),
            };
            if d.is_zero() {
                return Err(bad(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| bad(format!("coefficient {n} is not an integer; use \"num/den\""))),
        other => Err(bad(format!("expected coefficient, got {other}"))),
    }
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn parse_poly(v: &Value) -> Result<LaurentPoly> {
    let terms = v.as_array().ok_or_else(|| bad("polynomial must be an array of [exponent, coefficient] pairs"))?;
    let mut prev: Option<i64> = None;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad(format!("bad term {t}")))?;
        let e = pair[0].as_i64().ok_or_else(|| bad(format!("bad exponent {}", pair[0])))?;
        if e.abs() > MAX_EXPONENT {
            return Err(bad(format!("exponent {e} out of range")));
        }
        if prev.is_some_and(|p| e <= p) {
            return Err(bad("exponents must be strictly increasing"));
        }
        prev = Some(e);
        out.push((e, parse_rational(&pair[1])?));
    }
    Ok(LaurentPoly::from_terms(out))
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, rational_to_json(&c)])).collect())
}

/// A polynomial in s, written with nonnegative exponents.
pub fn parse_symmetric(v: &Value) -> Result<SymmetricPoly> {
    let p = parse_poly(v)?;
    if p.low_exponent().is_some_and(|e| e < 0) {
        return Err(bad("polynomial in s must not have negative exponents"));
    }
    let mut coeffs = Vec::new();
    for (e, c) in p.terms() {
        coeffs.resize(e as usize, Rational::zero());
        coeffs.push(c);
    }
    Ok(SymmetricPoly::new(Poly::from_coeffs(coeffs)))
}

pub fn symmetric_to_json(p: &SymmetricPoly) -> Value {
    let terms = p.poly().coeffs().into_iter().enumerate().filter(|(_, c)| !c.is_zero());
    Value::Array(terms.map(|(e, c)| json!([e, rational_to_json(&c)])).collect())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| bad("expected a JSON object"))?
        .get(key)
        .ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn poly_rows(v: &Value, what: &str) -> Result<Vec<Vec<LaurentPoly>>> {
    let rows = array(v, what)?;
    if rows.len() > MAX_DIM {
        return Err(bad(format!("{what} has more than {MAX_DIM} rows")));
    }
    rows.iter()
        .map(|r| {
            let r = array(r, what)?;
            if r.len() > MAX_DIM {
                return Err(bad(format!("{what} has more than {MAX_DIM} columns")));
            }
            r.iter().map(parse_poly).collect()
        })
        .collect()
}

pub fn parse_matrix(v: &Value) -> Result<LambdaMatrix> {
    let n = field(v, "n")?.as_u64().ok_or_else(|| bad("\"n\" must be a nonnegative integer"))? as usize;
    let rows = poly_rows(field(v, "rows")?, "rows")?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(bad(format!("rows do not form a {n}x{n} matrix")));
    }
    LambdaMatrix::square(rows).map_err(|e| bad(e.to_string()))
}

fn rows_to_json(rows: &[Vec<LaurentPoly>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(poly_to_json).collect())).collect())
}

pub fn matrix_to_json(a: &LambdaMatrix) -> Value {
    json!({ "n": a.rows(), "rows": rows_to_json(&a.to_rows()) })
}

pub fn parse_module(v: &Value) -> Result<AlexanderModule> {
    let f = array(field(v, "invariant_factors")?, "invariant_factors")?;
    if f.len() > MAX_DIM {
        return Err(bad(format!("more than {MAX_DIM} invariant factors")));
    }
    AlexanderModule::new(f.iter().map(parse_poly).collect::<Result<_>>()?)
}

pub fn module_to_json(m: &AlexanderModule) -> Value {
    json!({ "invariant_factors": m.factors().iter().map(poly_to_json).collect::<Vec<_>>() })
}

pub fn torsion_to_json(x: &TorsionValue) -> Value {
    json!({ "num": poly_to_json(&x.num()), "den": poly_to_json(&x.den()) })
}

pub fn parse_torsion(v: &Value) -> Result<TorsionValue> {
    TorsionValue::reduce(&parse_poly(field(v, "num")?)?, &parse_poly(field(v, "den")?)?)
}

pub fn parse_form(v: &Value) -> Result<BlanchfieldForm> {
    let module = parse_module(field(v, "module")?)?;
    let rows = array(field(v, "gram")?, "gram")?;
    if rows.len() > MAX_DIM {
        return Err(bad(format!("gram has more than {MAX_DIM} rows")));
    }
    let gram = rows
        .iter()
        .map(|r| array(r, "gram")?.iter().take(MAX_DIM + 1).map(parse_torsion).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    BlanchfieldForm::new(module, gram)
}

pub fn form_to_json(f: &BlanchfieldForm) -> Value {
    let gram: Vec<Value> = f.gram().iter().map(|r| Value::Array(r.iter().map(torsion_to_json).collect())).collect();
    json!({ "module": module_to_json(f.module()), "gram": gram })
}

pub fn block_to_json(b: &CanonicalBlock) -> Value {
    match b {
        CanonicalBlock::SymmetricCyclic { pi, n, p } => {
            json!({ "kind": "symmetric", "pi": poly_to_json(pi), "n": n, "P": symmetric_to_json(p) })
        }
        CanonicalBlock::HyperbolicPair { pi, n } => json!({ "kind": "hyperbolic", "pi": poly_to_json(pi), "n": n }),
    }
}

pub fn parse_block(v: &Value) -> Result<CanonicalBlock> {
    let pi = parse_poly(field(v, "pi")?)?;
    let n = field(v, "n")?
        .as_u64()
        .filter(|&n| (1..=64).contains(&n))
        .ok_or_else(|| bad("\"n\" must be an integer in 1..=64"))? as u32;
    match field(v, "kind")?.as_str() {
        Some("symmetric") => Ok(CanonicalBlock::SymmetricCyclic { pi, n, p: parse_symmetric(field(v, "P")?)? }),
        Some("hyperbolic") => Ok(CanonicalBlock::HyperbolicPair { pi, n }),
        _ => Err(bad("\"kind\" must be \"symmetric\" or \"hyperbolic\"")),
    }
}

pub fn decomposition_to_json(r: &DecompositionResult) -> Value {
    json!({
        "blocks": r.blocks.iter().map(block_to_json).collect::<Vec<_>>(),
        "basis": rows_to_json(&r.basis),
    })
}

pub fn parse_decomposition(v: &Value) -> Result<DecompositionResult> {
    let blocks = array(field(v, "blocks")?, "blocks")?;
    if blocks.len() > MAX_DIM {
        return Err(bad(format!("more than {MAX_DIM} blocks")));
    }
    let blocks = blocks.iter().map(parse_block).collect::<Result<_>>()?;
    let basis = match v.get("basis") {
        Some(b) => poly_rows(b, "basis")?,
        None => Vec::new(),
    };
    Ok(DecompositionResult { blocks, basis })
}

pub fn recipe_to_json(r: &SurgeryRecipe) -> Value {
    let coeffs: Vec<Value> = r.r.iter().map(|(&(i, j, k), c)| json!([i, j, k, rational_to_json(c)])).collect();
    let table: Vec<Value> = r
        .table()
        .into_iter()
        .map(|((i, k), (j, l), c)| json!([[i, k], [j, l], rational_to_json(&c)]))
        .collect();
    json!({ "n": r.n, "d": r.d, "r": coeffs, "table": table, "admissible": r.admissible })
}

pub fn classifier_to_json(v: &ClassifierVerdict) -> Value {
    serde_json::to_value(v).expect("plain data")
}

pub fn check_to_json(a: &LambdaMatrix) -> Value {
    let det = if a.is_square() { poly_to_json(&a.determinant()) } else { Value::Null };
    json!({ "hermitian": a.is_hermitian(), "admissible": a.is_admissible(), "det": det })
}

pub fn snf_to_json(snf: &SnfResult) -> Value {
    let singular = snf.diagonal.iter().any(|d| d.is_zero());
    let factors: Vec<Value> = snf.diagonal.iter().rev().filter(|d| !d.is_unit()).map(poly_to_json).collect();
    json!({
        "invariant_factors": factors,
        "diagonal": snf.diagonal.iter().map(poly_to_json).collect::<Vec<_>>(),
        "singular": singular,
        "U": matrix_to_json(&snf.u),
        "V": matrix_to_json(&snf.v),
    })
}

pub fn iso_report_to_json(r: &IsoReport) -> Value {
    let blocks: Vec<Value> = r
        .blocks
        .iter()
        .map(|b| {
            let mut o: Map<String, Value> = match block_to_json(&b.block) {
                Value::Object(o) => o,
                _ => unreachable!(),
            };
            o.insert("verdict".into(), json!(b.verdict));
            o.insert("certificate".into(), b.certificate.as_ref().map_or(Value::Null, poly_to_json));
            Value::Object(o)
        })
        .collect();
    json!({
        "verdict": r.verdict,
        "certificate": r.certificate.as_ref().map_or(Value::Null, poly_to_json),
        "blocks": blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(s: &str) -> Value {
        parse_document(s).unwrap()
    }

    #[test]
    fn poly_text_form() {
        let p = parse_poly(&doc(r#"[[-1,"1/1"],[0,"-1/1"],[1,"1/1"]]"#)).unwrap();
        assert_eq!(p, LaurentPoly::from_ints(-1, &[1, -1, 1]));
        assert_eq!(poly_to_json(&p).to_string(), r#"[[-1,"1/1"],[0,"-1/1"],[1,"1/1"]]"#);
        assert_eq!(parse_poly(&doc(r#"[[0, 2], [3, "-4/6"]]"#)).unwrap().coeff(3), Rational::new((-2).into(), 3.into()));
        assert_eq!(parse_poly(&doc("[]")).unwrap(), LaurentPoly::zero());
        for s in [r#"[[1,"1"],[0,"1"]]"#, r#"[[0,"1/0"]]"#, r#"[[0,"x"]]"#, r#"[[0]]"#, r#"{"a":1}"#, r#"[[99999999,"1"]]"#, r#"[[0,1.5]]"#, r#"[[0,"--1"]]"#] {
            assert!(matches!(parse_poly(&doc(s)), Err(Error::Parse(_))), "{s}");
        }
    }

    #[test]
    fn matrix_roundtrip() {
        let s = r#"{"n":2,"rows":[[[],[[0,"1/1"],[1,"1/1"]]],[[[-1,"1/1"],[0,"1/1"]],[]]]}"#;
        let a = parse_matrix(&doc(s)).unwrap();
        assert!(a.is_hermitian());
        assert_eq!(matrix_to_json(&a).to_string(), s);
        assert!(parse_matrix(&doc(r#"{"n":2,"rows":[[[]]]}"#)).is_err());
        assert!(parse_matrix(&doc(r#"{"rows":[]}"#)).is_err());
    }

    #[test]
    fn module_and_form_roundtrip() {
        let m = doc(r#"{"invariant_factors":[[[0,"1"],[1,"1"]],[[0,"1"],[1,"1"]]]}"#);
        let module = parse_module(&m).unwrap();
        assert_eq!(module.len(), 2);
        assert_eq!(parse_module(&module_to_json(&module)).unwrap(), module);
        let f = doc(r#"{"module":{"invariant_factors":[[[-1,"1"],[0,"-1"],[1,"1"]]]},
                      "gram":[[{"num":[[0,"1"]],"den":[[-1,"1"],[0,"-1"],[1,"1"]]}]]}"#);
        let form = parse_form(&f).unwrap();
        assert_eq!(parse_form(&form_to_json(&form)).unwrap(), form);
        assert!(parse_module(&doc(r#"{"invariant_factors":[[[0,"3"]]]}"#)).is_err());
    }

    #[test]
    fn block_roundtrip() {
        let b = CanonicalBlock::SymmetricCyclic { pi: LaurentPoly::from_ints(-1, &[1, -1, 1]), n: 2, p: SymmetricPoly::from_ints(&[0, 1]) };
        assert_eq!(parse_block(&block_to_json(&b)).unwrap(), b);
        let h = CanonicalBlock::HyperbolicPair { pi: LaurentPoly::from_ints(0, &[1, 1]), n: 3 };
        assert_eq!(parse_block(&block_to_json(&h)).unwrap(), h);
        assert!(parse_block(&doc(r#"{"kind":"other","pi":[],"n":1}"#)).is_err());
        assert!(parse_block(&doc(r#"{"kind":"symmetric","pi":[[0,"1"]],"n":1,"P":[[-1,"1"]]}"#)).is_err());
    }

    #[test]
    fn oversized_input_rejected() {
        let big = " ".repeat(MAX_INPUT_BYTES + 1);
        assert!(matches!(parse_document(&big), Err(Error::Parse(_))));
    }
}
