use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{Exps, LaurentPoly};
use crate::compositions::rho_of;
use crate::error::{Error, Result};
use crate::scalars::json::{generic_from_json, generic_to_json, spec_from_json, spec_to_json};
use crate::scalars::{
    specialize, BiPoly, CycloFactor, Den, GenericScalar, ParamSpec, SpecScalar, WPoly,
};

/// Which point a weight names: `u_λ` substitutes `x_i = t^{−ρ(λ)_i} q^{−λ_i}`
/// (`Minus`); `Plus` is the eigenvalue point `t^{ρ(λ)_i} q^{λ_i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

/// `(half-t exponent, q exponent)` of the image of `x^e` at the point.
fn point_exponent(e: &[i32], rho2: &[i64], lambda: &[i64], sign: Sign) -> (i64, i64) {
    let s = if sign == Sign::Minus { -1 } else { 1 };
    let mut ht = 0;
    let mut qe = 0;
    for i in 0..e.len() {
        ht += e[i] as i64 * rho2[i];
        qe += e[i] as i64 * lambda[i];
    }
    (s * ht, s * qe)
}

pub fn eval_at_weight(f: &LaurentPoly<GenericScalar>, lambda: &[i64], sign: Sign) -> GenericScalar {
    assert_eq!(f.nvars(), lambda.len());
    let rho = rho_of(lambda);
    let items = f
        .terms()
        .map(|(e, c)| {
            let (ht, qe) = point_exponent(e, rho.doubled(), lambda, sign);
            c.mul(&GenericScalar::mono(ht as i32, qe as i32))
        })
        .collect();
    GenericScalar::sum_of(items)
}

pub fn eval_at_weight_spec(
    f: &LaurentPoly<SpecScalar>,
    lambda: &[i64],
    sign: Sign,
    p: &ParamSpec,
) -> SpecScalar {
    assert_eq!(f.nvars(), lambda.len());
    let rho = rho_of(lambda);
    let items = f
        .terms()
        .map(|(e, c)| {
            let (ht, qe) = point_exponent(e, rho.doubled(), lambda, sign);
            c.mul(&SpecScalar::from_poly(p.specialize_monomial(ht, qe)))
        })
        .collect();
    SpecScalar::sum_of(items)
}

/// Coefficient-wise specialization; fails listing every exponent whose
/// coefficient has a pole.
pub fn specialize_poly(
    f: &LaurentPoly<GenericScalar>,
    p: &ParamSpec,
) -> Result<LaurentPoly<SpecScalar>> {
    let mut bad = Vec::new();
    let mut terms = Vec::with_capacity(f.len());
    for (e, c) in f.terms() {
        match specialize(c, p) {
            Ok(s) => terms.push((e.clone(), s)),
            Err(_) => bad.push(e.iter().map(|&v| v as i64).collect()),
        }
    }
    if !bad.is_empty() {
        return Err(Error::PoleAtSpecialization { at: bad });
    }
    Ok(LaurentPoly::from_terms(f.nvars(), terms))
}

/// Multiplies by the lcm of the coefficient denominators, giving a
/// polynomial over ℚ(ζ)[w^±] with the same zero set.
pub fn clear_denominators(f: &LaurentPoly<SpecScalar>) -> LaurentPoly<WPoly> {
    let mut l = WPoly::one();
    for (_, c) in f.terms() {
        let d = c.den();
        if d.is_one() {
            continue;
        }
        let g = l.gcd(d);
        l = l.mul(&d.div_exact(&g).expect("gcd divides"));
    }
    f.map_coeffs(|c| {
        c.num()
            .mul(&l.div_exact(c.den()).expect("lcm is a multiple"))
    })
}

/// `f = P / D` with `P` over Laurent polynomials in `t^{1/2}, q` and `D` the
/// lcm of the coefficient denominators, kept factored.
pub fn clear_generic_denominators(
    f: &LaurentPoly<GenericScalar>,
) -> (LaurentPoly<BiPoly>, GenericScalar) {
    let mut factors: BTreeMap<CycloFactor, u32> = BTreeMap::new();
    let mut rest = BiPoly::one();
    for (_, c) in f.terms() {
        for (fa, m) in c.den().factors() {
            let e = factors.entry(*fa).or_insert(0);
            *e = (*e).max(*m);
        }
        let r = c.den().rest();
        if !r.is_one() {
            let g = rest.gcd(r);
            rest = rest.mul(&r.div_exact(&g).unwrap()).normalize().0;
        }
    }
    let p = f.map_coeffs(|c| {
        let mut cof = rest.div_exact(c.den().rest()).expect("lcm of remainders");
        for (fa, m) in &factors {
            let have = c.den().factors().get(fa).copied().unwrap_or(0);
            if *m > have {
                cof = cof.mul(&fa.poly().pow(m - have));
            }
        }
        c.num().mul(&cof)
    });
    let d = GenericScalar::from_parts(BiPoly::one(), Den::from_parts(factors, rest))
        .inv()
        .unwrap();
    (p, d)
}

fn exps_json(e: &Exps) -> Value {
    json!(e)
}

fn parse_exps(v: &Value, n: usize) -> std::result::Result<Exps, String> {
    let arr = v.as_array().ok_or("exponent vector must be an array")?;
    if arr.len() != n {
        return Err(format!(
            "exponent vector of length {} for n = {n}",
            arr.len()
        ));
    }
    arr.iter()
        .map(|x| {
            x.as_i64()
                .map(|v| v as i32)
                .ok_or_else(|| "bad exponent".to_string())
        })
        .collect()
}

fn parse_header(v: &Value, kind: &str) -> std::result::Result<(usize, Vec<Value>), String> {
    let n = v["n"].as_u64().ok_or("missing n")? as usize;
    if v["kind"] != kind {
        return Err(format!("expected kind {kind:?}"));
    }
    let terms = v["terms"].as_array().ok_or("missing terms")?.clone();
    Ok((n, terms))
}

/// `{"n", "kind": "generic", "terms": [[[e_1, …, e_n], scalar], …]}` in
/// lexicographic exponent order.
pub fn poly_to_json(f: &LaurentPoly<GenericScalar>) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(e, c)| json!([exps_json(e), generic_to_json(c)]))
        .collect();
    json!({"n": f.nvars(), "kind": "generic", "terms": terms})
}

pub fn poly_from_json(v: &Value) -> std::result::Result<LaurentPoly<GenericScalar>, String> {
    let (n, terms) = parse_header(v, "generic")?;
    let mut out = Vec::with_capacity(terms.len());
    for t in &terms {
        out.push((parse_exps(&t[0], n)?, generic_from_json(&t[1])?));
    }
    Ok(LaurentPoly::from_terms(n, out))
}

pub fn spec_poly_to_json(f: &LaurentPoly<SpecScalar>, p: &ParamSpec) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(e, c)| json!([exps_json(e), spec_to_json(c, p.tau_order())]))
        .collect();
    json!({"n": f.nvars(), "kind": "spec", "terms": terms})
}

pub fn spec_poly_from_json(v: &Value) -> std::result::Result<LaurentPoly<SpecScalar>, String> {
    let (n, terms) = parse_header(v, "spec")?;
    let mut out = Vec::with_capacity(terms.len());
    for t in &terms {
        out.push((parse_exps(&t[0], n)?, spec_from_json(&t[1])?));
    }
    Ok(LaurentPoly::from_terms(n, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_examples() {
        let one = LaurentPoly::<GenericScalar>::one(3);
        assert!(eval_at_weight(&one, &[0, 0, 0], Sign::Minus).is_one());
        let x1 = LaurentPoly::<GenericScalar>::var(3, 0);
        assert_eq!(
            eval_at_weight(&x1, &[0, 0, 0], Sign::Minus),
            GenericScalar::mono(-2, 0)
        );
        // u_λ(x_1/x_2) = t^{ρ_2 − ρ_1} q^{λ_2 − λ_1}
        let ratio = LaurentPoly::monomial(3, vec![1, -1, 0], GenericScalar::one());
        let lam = [0, 5, 3];
        assert_eq!(
            eval_at_weight(&ratio, &lam, Sign::Minus),
            GenericScalar::mono(4, 5)
        );
    }

    #[test]
    fn specialization_examples() {
        let p = ParamSpec::point(1, 2).unwrap();
        let c = GenericScalar::binomial(4, 1);
        let f = LaurentPoly::monomial(2, vec![1, 0], c.clone());
        assert!(specialize_poly(&f, &p).unwrap().is_zero());
        let g = LaurentPoly::monomial(2, vec![1, 0], c.inv().unwrap());
        match specialize_poly(&g, &p) {
            Err(Error::PoleAtSpecialization { at }) => assert_eq!(at, vec![vec![1, 0]]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn clearing_denominators() {
        let c1 = GenericScalar::binomial(2, 1).inv().unwrap();
        let c2 = GenericScalar::binomial(2, 1)
            .mul(&GenericScalar::binomial(0, 1))
            .inv()
            .unwrap();
        let f = LaurentPoly::from_terms(2, vec![(vec![1, 0], c1), (vec![0, 1], c2)]);
        let (p, d) = clear_generic_denominators(&f);
        let back = p.map_coeffs(|c| GenericScalar::from_poly(c.clone()).mul(&d.inv().unwrap()));
        assert_eq!(back, f);
    }

    #[test]
    fn json_roundtrip() {
        let f = LaurentPoly::from_terms(
            2,
            vec![
                (vec![1, 0], GenericScalar::binomial(2, 1).inv().unwrap()),
                (vec![-1, 2], GenericScalar::mono(1, -1)),
            ],
        );
        let v = poly_to_json(&f);
        assert_eq!(poly_from_json(&v).unwrap(), f);
        let p = ParamSpec::point(1, 3).unwrap();
        let s = specialize_poly(&f, &p).unwrap();
        assert_eq!(spec_poly_from_json(&spec_poly_to_json(&s, &p)).unwrap(), s);
    }
}
