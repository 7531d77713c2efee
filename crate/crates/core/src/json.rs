//! JSON encodings with canonical rational strings (`"55/3"`, `"-3"`).
//!
//! Objects are built from `serde_json::Value`, whose maps keep keys sorted, so
//! encoding the same value twice gives identical text.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::algebra::OddMonomial;
use crate::error::{Error, Result};
use crate::kerov::{
    ComparisonReport, GeneratorFamily, GeneratorMonomial, KerovPolynomial, PositivityRecord,
};
use crate::oracle::SpinCharacterTable;
use crate::{Poly, Rational};

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::Parse(format!("expected a rational string, got {v}")))?;
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

fn exponents_to_json<I: IntoIterator<Item = (u32, u32)>>(it: I) -> Value {
    Value::Object(
        it.into_iter()
            .map(|(s, e)| (s.to_string(), Value::from(e)))
            .collect::<Map<_, _>>(),
    )
}

fn exponents_from_json(v: &Value) -> Result<BTreeMap<u32, u32>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("exponents must be an object".into()))?;
    obj.iter()
        .map(|(k, e)| {
            let s = k
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad subscript {k:?}")))?;
            let e = e
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| Error::Parse(format!("bad exponent for subscript {k}")))?;
            Ok((s, e))
        })
        .collect()
}

fn terms_array(v: &Value) -> Result<&Vec<Value>> {
    v.get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing terms array".into()))
}

fn term_parts(t: &Value) -> Result<(BTreeMap<u32, u32>, Rational)> {
    let exps = exponents_from_json(
        t.get("exponents")
            .ok_or_else(|| Error::Parse("term without exponents".into()))?,
    )?;
    let coeff = rational_from_json(
        t.get("coeff")
            .ok_or_else(|| Error::Parse("term without coeff".into()))?,
    )?;
    Ok((exps, coeff))
}

pub fn monomial_to_json(m: &GeneratorMonomial) -> Value {
    exponents_to_json(m.exponents().iter().map(|(&s, &e)| (s, e)))
}

pub fn kerov_to_json(p: &KerovPolynomial) -> Value {
    let terms: Vec<Value> = p
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| json!({"exponents": monomial_to_json(m), "coeff": rational_to_json(c)}))
        .collect();
    json!({"family": p.family.name(), "terms": terms})
}

pub fn kerov_from_json(v: &Value) -> Result<KerovPolynomial> {
    let name = v
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing family".into()))?;
    let family = GeneratorFamily::from_name(name)
        .ok_or_else(|| Error::Parse(format!("unknown family {name:?}")))?;
    let terms = terms_array(v)?
        .iter()
        .map(|t| term_parts(t).map(|(e, c)| (GeneratorMonomial::from_exponents(e), c)))
        .collect::<Result<Vec<_>>>()?;
    KerovPolynomial::from_terms(family, terms).map_err(|e| Error::Parse(e.to_string()))
}

pub fn poly_to_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| json!({"exponents": exponents_to_json(m.factors()), "coeff": rational_to_json(c)}))
        .collect();
    json!({"terms": terms})
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let mut out = Poly::zero();
    for t in terms_array(v)? {
        let (exps, c) = term_parts(t)?;
        if let Some(s) = exps.keys().find(|&&s| s % 2 == 0) {
            return Err(Error::Parse(format!("even subscript {s} in odd power-sum polynomial")));
        }
        let subs: Vec<u32> = exps
            .iter()
            .flat_map(|(&s, &e)| std::iter::repeat_n(s, e as usize))
            .collect();
        out.add_term(OddMonomial::from_subscripts(&subs), c);
    }
    Ok(out)
}

pub fn positivity_to_json(records: &[PositivityRecord]) -> Value {
    Value::Array(
        records
            .iter()
            .map(|r| {
                let offending: Vec<Value> = r
                    .offending
                    .iter()
                    .map(|(m, c)| json!({"exponents": monomial_to_json(m), "coeff": rational_to_json(c)}))
                    .collect();
                json!({
                    "k": r.k,
                    "allNonnegative": r.all_nonnegative,
                    "allIntegers": r.all_integers,
                    "offending": offending,
                })
            })
            .collect(),
    )
}

pub fn comparison_to_json(r: &ComparisonReport) -> Value {
    let linear: Vec<Value> = r
        .linear_matches
        .iter()
        .map(|m| {
            json!({
                "subscript": m.subscript,
                "ordinary": rational_to_json(&m.ordinary),
                "spin": rational_to_json(&m.spin),
                "matches": m.matches,
            })
        })
        .collect();
    let ratios: Vec<Value> = r
        .top_degree_ratios
        .iter()
        .map(|e| {
            json!({
                "exponents": monomial_to_json(&e.monomial),
                "spin": rational_to_json(&e.spin),
                "ordinary": rational_to_json(&e.ordinary),
                "ratio": e.ratio.as_ref().map(rational_to_json),
                "predicted": rational_to_json(&e.predicted),
                "matches": e.matches,
            })
        })
        .collect();
    json!({"k": r.k, "linearMatches": linear, "topDegreeRatios": ratios})
}

pub fn character_table_to_json(t: &SpinCharacterTable) -> Value {
    let mut rows: BTreeMap<_, Map<String, Value>> = BTreeMap::new();
    for ((lambda, rho), x) in &t.values {
        rows.entry(lambda.clone())
            .or_default()
            .insert(rho.to_string(), bigint_to_json(x));
    }
    // largest lambda first, matching the enumeration order
    let rows: Vec<Value> = rows
        .into_iter()
        .rev()
        .map(|(lambda, values)| json!({"lambda": lambda.parts(), "values": values}))
        .collect();
    let dims: Map<String, Value> = t
        .dimensions
        .iter()
        .map(|(l, g)| (l.to_string(), bigint_to_json(g)))
        .collect();
    json!({"n": t.n, "rows": rows, "dims": dims})
}

fn bigint_to_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(x.to_string()),
    }
}

/// `{command, parameters, result, toolVersion}`.
pub fn envelope(command: &str, parameters: Value, result: Value) -> Value {
    json!({
        "command": command,
        "parameters": parameters,
        "result": result,
        "toolVersion": env!("CARGO_PKG_VERSION"),
    })
}
