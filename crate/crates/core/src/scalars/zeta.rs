//! Specialization to ℚ(ζ)(w) and the order ζ along the component of
//! `t^{k+1} q^{r-1} = 1` through the specialization point.
//!
//! The order is read off the transverse deformation
//! `t^{1/2} ↦ w^{(r-1)/M}`, `q ↦ τ w^{-2(k+1)/M} (1 + ε)`: the lowest power
//! of `ε` with a nonzero coefficient in ℚ(ζ)(w).

use std::collections::BTreeMap;

use super::bipoly::BiPoly;
use super::cyclo::CycloElem;
use super::generic::{CycloFactor, GenericScalar};
use super::params::ParamSpec;
use super::rat::Rat;
use super::spec::SpecScalar;
use super::wpoly::WPoly;
use crate::error::{Error, Result};

/// Image of a polynomial in ℚ(ζ)[w^±].
pub fn specialize_bipoly(f: &BiPoly, p: &ParamSpec) -> WPoly {
    let mut out = WPoly::zero();
    let n = p.tau_order();
    for (e, c) in f.terms() {
        let w = p.w_exponent(e.0 as i64, e.1 as i64) as i32;
        let z = CycloElem::root_power(n, e.1 as i64).scale(c);
        out.add_term(w, &z);
    }
    out
}

fn specialize_den(s: &GenericScalar, p: &ParamSpec) -> Option<WPoly> {
    let mut den = specialize_bipoly(s.den().rest(), p);
    for (f, m) in s.den().factors() {
        let v = specialize_bipoly(&f.poly(), p);
        if v.is_zero() {
            return None;
        }
        for _ in 0..*m {
            den = den.mul(&v);
        }
    }
    if den.is_zero() {
        None
    } else {
        Some(den)
    }
}

/// Substitutes the specialization into `s`.
pub fn specialize(s: &GenericScalar, p: &ParamSpec) -> Result<SpecScalar> {
    if s.is_zero() {
        return Ok(SpecScalar::zero());
    }
    let den = specialize_den(s, p).ok_or(Error::PoleAtSpecialization { at: vec![] })?;
    Ok(SpecScalar::from_fraction(specialize_bipoly(s.num(), p), den).unwrap())
}

pub fn is_regular_at_spec(s: &GenericScalar, p: &ParamSpec) -> bool {
    s.is_zero() || specialize_den(s, p).is_some()
}

/// `binom(j, n)` for any integer `j`.
fn gen_binomial(j: i64, n: u32) -> Rat {
    let mut acc = Rat::ONE;
    for i in 0..n as i64 {
        acc = acc.mul(&Rat::new(j - i, i + 1));
    }
    acc
}

/// Coefficient of `ε^n` in the transverse deformation of `f`.
pub fn deformation_coefficient(f: &BiPoly, p: &ParamSpec, n: u32) -> WPoly {
    let mut out = WPoly::zero();
    let ord = p.tau_order();
    for (e, c) in f.terms() {
        let b = gen_binomial(e.1 as i64, n);
        if b.is_zero() {
            continue;
        }
        let w = p.w_exponent(e.0 as i64, e.1 as i64) as i32;
        out.add_term(w, &CycloElem::root_power(ord, e.1 as i64).scale(&c.mul(&b)));
    }
    out
}

/// Lowest `ε`-degree of the deformation of a nonzero polynomial.
pub fn poly_order(f: &BiPoly, p: &ParamSpec) -> u32 {
    assert!(!f.is_zero());
    // group terms by their image so each ε-coefficient is a short sum
    let mut groups: BTreeMap<(i64, i64), Vec<(i64, Rat)>> = BTreeMap::new();
    let ord = p.tau_order() as i64;
    for (e, c) in f.terms() {
        let w = p.w_exponent(e.0 as i64, e.1 as i64);
        groups
            .entry((w, (e.1 as i64).rem_euclid(ord)))
            .or_default()
            .push((e.1 as i64, c.clone()));
    }
    // after multiplying by a power of q the deformation is a polynomial in ε
    // of degree at most the q-spread
    let (_, qmin, _, qmax) = f.bounds().unwrap();
    for n in 0..=(qmax - qmin) as u32 {
        let mut by_w: BTreeMap<i64, Vec<Rat>> = BTreeMap::new();
        for ((w, z), terms) in &groups {
            let s = terms.iter().fold(Rat::ZERO, |acc, (j, c)| {
                acc.add(&c.mul(&gen_binomial(*j, n)))
            });
            if s.is_zero() {
                continue;
            }
            let v = by_w
                .entry(*w)
                .or_insert_with(|| vec![Rat::ZERO; ord as usize]);
            v[*z as usize] = v[*z as usize].add(&s);
        }
        let nonzero = by_w
            .into_values()
            .any(|v| !CycloElem::from_coeffs(ord as u32, v).is_zero());
        if nonzero {
            return n;
        }
    }
    unreachable!("deformation of a nonzero polynomial is nonzero")
}

/// ζ of a single denominator factor.
pub fn factor_order(f: &CycloFactor, p: &ParamSpec) -> u32 {
    poly_order(&f.poly(), p)
}

pub fn zeta_series(s: &GenericScalar, p: &ParamSpec) -> Result<i64> {
    if s.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut z = poly_order(s.num(), p) as i64;
    if !s.den().rest().is_one() {
        z -= poly_order(s.den().rest(), p) as i64;
    }
    for (f, m) in s.den().factors() {
        z -= factor_order(f, p) as i64 * *m as i64;
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(k: usize, r: usize) -> ParamSpec {
        ParamSpec::point(k, r).unwrap()
    }

    #[test]
    fn specialize_examples() {
        let p = pt(1, 2);
        let s = GenericScalar::mono(4, 1);
        assert_eq!(specialize(&s, &p).unwrap(), SpecScalar::one());
        let p = pt(1, 3);
        let t = specialize(&GenericScalar::mono(2, 0), &p).unwrap();
        assert_eq!(t, SpecScalar::from_poly(WPoly::mono(2)));
        let q = specialize(&GenericScalar::mono(0, 1), &p).unwrap();
        let minus = CycloElem::rational(Rat::from_int(-1));
        assert_eq!(q, SpecScalar::from_poly(WPoly::monomial(minus, -2)));
    }

    #[test]
    fn zeta_examples() {
        for (k, r) in [(1, 2), (2, 2), (1, 3), (2, 4)] {
            let p = pt(k, r);
            let rel = GenericScalar::binomial(2 * (k as i32 + 1), r as i32 - 1);
            assert_eq!(zeta_series(&rel, &p).unwrap(), 1);
            assert_eq!(zeta_series(&GenericScalar::mono(3, -2), &p).unwrap(), 0);
        }
        let p = pt(1, 2);
        assert_eq!(zeta_series(&GenericScalar::binomial(8, 2), &p).unwrap(), 1);
        assert_eq!(zeta_series(&GenericScalar::binomial(2, 1), &p).unwrap(), 0);
        assert!(zeta_series(&GenericScalar::zero(), &p).is_err());
    }

    #[test]
    fn regularity_examples() {
        let p = pt(1, 2);
        let one = GenericScalar::one();
        assert!(is_regular_at_spec(
            &one.div(&GenericScalar::binomial(2, 1)),
            &p
        ));
        assert!(!is_regular_at_spec(
            &one.div(&GenericScalar::binomial(4, 1)),
            &p
        ));
        assert!(is_regular_at_spec(&GenericScalar::zero(), &p));
    }
}
