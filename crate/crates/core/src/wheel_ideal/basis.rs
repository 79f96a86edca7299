//! Bases of the wheel ideals inside a box, and the representation check.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::linalg::{kernel, spec_poly_rank};
use super::substitution::{
    ideal_witness, multi_substitutions, substitute_monomial, Direction, Witness,
};
use crate::compositions::{enumerate_box, BoxFilter, Composition};
use crate::error::{Error, Result};
use crate::macdonald::e_specialized;
use crate::polyrep::{
    apply_omega, apply_omega_inv, apply_ti, apply_x, apply_x_inv, clear_denominators, HeckeParams,
    LaurentPoly,
};
use crate::scalars::{ParamSpec, SpecScalar, WPoly};

/// Specialized `E_λ` for every `λ ∈ B ∩ box`, each confirmed pole-free and in
/// `I_1`. Sorted by `>′`.
pub fn basis_b_specialized(
    p: &ParamSpec,
    bound: i64,
) -> Result<Vec<(Composition, LaurentPoly<SpecScalar>)>> {
    enumerate_box(p, bound, BoxFilter::B)
        .into_par_iter()
        .map(|lam| {
            let e = e_specialized(&lam, p)?;
            if let Some(w) = ideal_witness(&clear_denominators(&e), p, 1, Direction::Ascending) {
                return Err(Error::WheelViolation(format!("E_{lam:?}: {w}")));
            }
            Ok((lam, e))
        })
        .collect()
}

/// Whether the polynomials are linearly independent over `ℚ(ζ)(w)`.
pub fn linearly_independent(polys: &[&LaurentPoly<SpecScalar>]) -> bool {
    spec_poly_rank(polys) == polys.len()
}

/// Box monomials of total degree `d`.
fn box_monomials(n: usize, bound: i64, d: i64) -> Vec<Vec<i32>> {
    fn go(n: usize, bound: i64, left: i64, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        let slots = (n - cur.len()) as i64;
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in -bound..=bound {
            let rest = left - v;
            if rest.abs() <= bound * (slots - 1) {
                cur.push(v as i32);
                go(n, bound, rest, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, bound, d, &mut Vec::new(), &mut out);
    out
}

/// A basis of `I_m ∩ V_(M)`, the polynomials supported in the box that
/// vanish on every `m`-wheel configuration.
///
/// Substitution preserves total degree, so the linear conditions split by
/// degree and each block is solved exactly over `ℚ(ζ)(w)`.
pub fn ideal_in_box(
    p: &ParamSpec,
    bound: i64,
    m: usize,
    dir: Direction,
) -> Vec<LaurentPoly<SpecScalar>> {
    let n = p.n();
    let subs = multi_substitutions(p, m, dir);
    let degrees: Vec<i64> = (-(n as i64) * bound..=(n as i64) * bound).collect();
    let blocks: Vec<Vec<LaurentPoly<SpecScalar>>> = degrees
        .into_par_iter()
        .map(|d| {
            let monos = box_monomials(n, bound, d);
            let mut rows: Vec<Vec<SpecScalar>> = Vec::new();
            for s in &subs {
                let mut eqs: BTreeMap<Vec<i32>, Vec<SpecScalar>> = BTreeMap::new();
                for (col, e) in monos.iter().enumerate() {
                    let (key, ht, qe) = substitute_monomial(e, s);
                    let row = eqs
                        .entry(key)
                        .or_insert_with(|| vec![SpecScalar::zero(); monos.len()]);
                    row[col] = SpecScalar::from_poly(p.specialize_monomial(ht, qe));
                }
                rows.extend(eqs.into_values());
            }
            kernel(rows, monos.len())
                .into_iter()
                .map(|v| {
                    LaurentPoly::from_terms(
                        n,
                        monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
                    )
                })
                .collect()
        })
        .collect();
    blocks.into_iter().flatten().collect()
}

/// One failure of stability under an algebra generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub operator: String,
    pub witness: Witness,
}

/// Applies `ω^{±1}`, every `T_i` and every `x_i^{±1}` to `f ∈ I_m` and
/// collects the images that leave `I_m`. Indices are 0-based.
pub fn invariance_check(
    f: &LaurentPoly<SpecScalar>,
    p: &ParamSpec,
    m: usize,
    dir: Direction,
) -> Vec<Violation> {
    invariance_check_cleared(&clear_denominators(f), p, m, dir)
}

pub fn invariance_check_cleared(
    f: &LaurentPoly<WPoly>,
    p: &ParamSpec,
    m: usize,
    dir: Direction,
) -> Vec<Violation> {
    let h = HeckeParams::<WPoly>::specialized(p);
    let n = p.n();
    let mut images: Vec<(String, LaurentPoly<WPoly>)> = vec![
        ("omega".into(), apply_omega(f, &h)),
        ("omega^-1".into(), apply_omega_inv(f, &h)),
    ];
    for i in 0..n - 1 {
        images.push((format!("T{i}"), apply_ti(f, i, &h)));
    }
    for i in 0..n {
        images.push((format!("x{i}"), apply_x(f, i)));
        images.push((format!("x{i}^-1"), apply_x_inv(f, i)));
    }
    images
        .into_iter()
        .filter_map(|(operator, g)| {
            ideal_witness(&g, p, m, dir).map(|witness| Violation { operator, witness })
        })
        .collect()
}
