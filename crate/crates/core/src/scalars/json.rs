//! JSON encodings of scalars. Coefficients are decimal strings so values are
//! exact and byte-stable.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::bipoly::BiPoly;
use super::cyclo::CycloElem;
use super::generic::{CycloFactor, Den, GenericScalar};
use super::rat::Rat;
use super::spec::SpecScalar;
use super::wpoly::WPoly;

fn err(msg: &str) -> String {
    format!("malformed scalar JSON: {msg}")
}

pub fn bipoly_to_json(p: &BiPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let (n, d) = c.to_strings();
                json!([n, d, e.0, e.1])
            })
            .collect(),
    )
}

pub fn bipoly_from_json(v: &Value) -> Result<BiPoly, String> {
    let arr = v.as_array().ok_or_else(|| err("expected term list"))?;
    let mut out = BiPoly::zero();
    for t in arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| err("term"))?;
        let n = t[0].as_str().ok_or_else(|| err("cnum"))?;
        let d = t[1].as_str().ok_or_else(|| err("cden"))?;
        let ea = t[2].as_i64().ok_or_else(|| err("e_a"))? as i32;
        let eq = t[3].as_i64().ok_or_else(|| err("e_q"))? as i32;
        out.add_term((ea, eq), &Rat::from_strings(n, d)?);
    }
    Ok(out)
}

/// `{"num": [[cnum, cden, e_a, e_q], ...], "den": [...]}` with the expanded
/// normalized denominator.
pub fn generic_to_json(s: &GenericScalar) -> Value {
    json!({"num": bipoly_to_json(s.num()), "den": bipoly_to_json(&s.den_expanded())})
}

pub fn generic_from_json(v: &Value) -> Result<GenericScalar, String> {
    let num = bipoly_from_json(v.get("num").ok_or_else(|| err("num"))?)?;
    let den = bipoly_from_json(v.get("den").ok_or_else(|| err("den"))?)?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(GenericScalar::from_fraction(num, &den))
}

/// Denominator kept factored, as used by the result cache.
pub fn generic_to_json_factored(s: &GenericScalar) -> Value {
    let factors: Vec<Value> = s
        .den()
        .factors()
        .iter()
        .map(|(f, m)| json!([f.d, f.e, f.f, m]))
        .collect();
    json!({"num": bipoly_to_json(s.num()), "factors": factors, "rest": bipoly_to_json(s.den().rest())})
}

pub fn generic_from_json_factored(v: &Value) -> Result<GenericScalar, String> {
    let num = bipoly_from_json(v.get("num").ok_or_else(|| err("num"))?)?;
    let rest = bipoly_from_json(v.get("rest").ok_or_else(|| err("rest"))?)?;
    let mut factors = BTreeMap::new();
    for f in v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| err("factors"))?
    {
        let f = f
            .as_array()
            .filter(|f| f.len() == 4)
            .ok_or_else(|| err("factor"))?;
        let g = |i: usize| f[i].as_i64().ok_or_else(|| err("factor entry"));
        let cf = CycloFactor {
            d: g(0)? as u32,
            e: g(1)? as i32,
            f: g(2)? as i32,
        };
        factors.insert(cf, g(3)? as u32);
    }
    Ok(GenericScalar::from_parts(
        num,
        Den::from_parts(factors, rest),
    ))
}

pub fn wpoly_to_json(p: &WPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let coeffs: Vec<Value> = c
                    .coeffs()
                    .iter()
                    .map(|r| {
                        let (n, d) = r.to_strings();
                        json!([n, d])
                    })
                    .collect();
                json!([coeffs, e])
            })
            .collect(),
    )
}

pub fn wpoly_from_json(v: &Value, root_order: u32) -> Result<WPoly, String> {
    let arr = v.as_array().ok_or_else(|| err("expected term list"))?;
    let mut out = WPoly::zero();
    for t in arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 2)
            .ok_or_else(|| err("term"))?;
        let mut coeffs = Vec::new();
        for c in t[0].as_array().ok_or_else(|| err("coefficient vector"))? {
            let c = c
                .as_array()
                .filter(|c| c.len() == 2)
                .ok_or_else(|| err("coefficient"))?;
            let n = c[0].as_str().ok_or_else(|| err("cnum"))?;
            let d = c[1].as_str().ok_or_else(|| err("cden"))?;
            coeffs.push(Rat::from_strings(n, d)?);
        }
        let e = t[1].as_i64().ok_or_else(|| err("e_w"))? as i32;
        out.add_term(e, &CycloElem::from_coeffs(root_order, coeffs));
    }
    Ok(out)
}

/// `{"root_order": N, "num": [[[[cnum, cden], ...], e_w], ...], "den": [...]}`
/// where each coefficient is a vector over the power basis of ℚ(ζ_N).
pub fn spec_to_json(s: &SpecScalar, root_order: u32) -> Value {
    json!({"root_order": root_order, "num": wpoly_to_json(s.num()), "den": wpoly_to_json(s.den())})
}

pub fn spec_from_json(v: &Value) -> Result<SpecScalar, String> {
    let n = v
        .get("root_order")
        .and_then(Value::as_u64)
        .ok_or_else(|| err("root_order"))? as u32;
    let num = wpoly_from_json(v.get("num").ok_or_else(|| err("num"))?, n)?;
    let den = wpoly_from_json(v.get("den").ok_or_else(|| err("den"))?, n)?;
    SpecScalar::from_fraction(num, den).ok_or_else(|| err("zero denominator"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_roundtrip() {
        let x = GenericScalar::binomial(2, 1)
            .div(&GenericScalar::binomial(4, 1).mul(&GenericScalar::binomial(1, -3)))
            .mul(&GenericScalar::from_rat(Rat::new(-7, 3)));
        assert_eq!(generic_from_json(&generic_to_json(&x)).unwrap(), x);
        assert_eq!(
            generic_from_json_factored(&generic_to_json_factored(&x)).unwrap(),
            x
        );
        let text = serde_json::to_string(&generic_to_json(&GenericScalar::mono(1, 2))).unwrap();
        assert_eq!(text, r#"{"den":[["1","1",0,0]],"num":[["1","1",1,2]]}"#);
    }

    #[test]
    fn spec_roundtrip() {
        let z = CycloElem::root_power(3, 1);
        let num = WPoly::monomial(z, 2).add(&WPoly::one());
        let den = WPoly::mono(1).sub(&WPoly::one());
        let s = SpecScalar::from_fraction(num, den).unwrap();
        assert_eq!(spec_from_json(&spec_to_json(&s, 3)).unwrap(), s);
    }
}
