//! The spectral-projection construction of `E_λ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::compositions::{dominant, rho_of, succ, Composition};
use crate::error::{Error, Result};
use crate::polyrep::{apply_yi, HeckeParams, LaurentPoly};
use crate::scalars::{BiPoly, GenericScalar};

type YColumn = Arc<LaurentPoly<BiPoly>>;

fn column_cache() -> &'static Mutex<HashMap<(Composition, usize), YColumn>> {
    static CACHE: OnceLock<Mutex<HashMap<(Composition, usize), YColumn>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Y_j x^ν`, memoized. The operators never divide, so the column lives over
/// Laurent polynomials in `t^{1/2}, q`.
pub fn y_column(nu: &[i64], j: usize) -> YColumn {
    let key = (nu.to_vec(), j);
    if let Some(c) = column_cache().lock().unwrap().get(&key) {
        return c.clone();
    }
    let col = Arc::new(apply_yi(
        &LaurentPoly::x_pow(nu),
        j,
        &HeckeParams::laurent(),
    ));
    column_cache().lock().unwrap().insert(key, col.clone());
    col
}

/// `(2ρ(λ)_j, λ_j)`: exponents of the `Y_j`-eigenvalue `t^{ρ(λ)_j} q^{λ_j}`.
fn eigen_exps(lambda: &[i64]) -> Vec<(i64, i64)> {
    let rho = rho_of(lambda);
    rho.doubled()
        .iter()
        .copied()
        .zip(lambda.iter().copied())
        .collect()
}

fn distinct_permutations(sorted_desc: &[i64], out: &mut Vec<Composition>) {
    let mut v: Vec<i64> = sorted_desc.iter().rev().copied().collect();
    loop {
        out.push(v.clone());
        // next lexicographic permutation
        let Some(i) = (0..v.len().saturating_sub(1))
            .rev()
            .find(|&i| v[i] < v[i + 1])
        else {
            return;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
    }
}

fn dominant_below(top: &[i64], prefix: &mut Vec<i64>, remaining: i64, out: &mut Vec<Composition>) {
    let n = top.len();
    let k = prefix.len();
    if k == n {
        if remaining == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let lo = top[n - 1];
    let hi = if k == 0 { top[0] } else { prefix[k - 1] };
    let left = (n - k) as i64;
    for v in (lo..=hi).rev() {
        // the remaining entries lie in [lo, v]
        if remaining - v < lo * (left - 1) || remaining - v > v * (left - 1) {
            continue;
        }
        prefix.push(v);
        let ps: i64 = prefix.iter().sum();
        let ts: i64 = top[..=k].iter().sum();
        if ps <= ts {
            dominant_below(top, prefix, remaining - v, out);
        }
        prefix.pop();
    }
}

/// All `μ ≺ λ`, listed so that `ν ≻ μ` implies `ν` comes first.
pub fn weights_below(lambda: &[i64]) -> Vec<Composition> {
    let top = dominant(lambda);
    let mut doms = Vec::new();
    dominant_below(&top, &mut Vec::new(), top.iter().sum(), &mut doms);
    let mut out = Vec::new();
    for d in &doms {
        let mut perms = Vec::new();
        distinct_permutations(d, &mut perms);
        out.extend(perms.into_iter().filter(|mu| succ(lambda, mu)));
    }
    // dominance implies lexicographic order, so this is a linear extension
    out.sort_by(|x, y| dominant(y).cmp(&dominant(x)).then(y.cmp(x)));
    out
}

/// `E_λ` from the triangular eigen-system: with `E_λ = Σ e_μ x^μ` and pivot
/// `j` the first coordinate where the eigenvalues of `λ` and `μ` differ,
/// `e_μ = Σ_{ν≻μ} [x^μ](Y_j x^ν) e_ν / (c_λ(j) − c_μ(j))`.
pub fn e_by_projection(lambda: &[i64]) -> Result<LaurentPoly<GenericScalar>> {
    let n = lambda.len();
    let ev_l = eigen_exps(lambda);
    let mut coeffs: BTreeMap<Composition, GenericScalar> = BTreeMap::new();
    coeffs.insert(lambda.to_vec(), GenericScalar::one());
    for mu in weights_below(lambda) {
        let ev_m = eigen_exps(&mu);
        let j = (0..n)
            .find(|&j| ev_l[j] != ev_m[j])
            .ok_or_else(|| Error::NonTermination(mu.clone()))?;
        let e_mu: Vec<i32> = mu.iter().map(|&v| v as i32).collect();
        let mut items = Vec::new();
        for (nu, c) in &coeffs {
            let col = y_column(nu, j);
            if let Some(y) = col.coeff(&e_mu) {
                debug_assert!(succ(nu, &mu), "Y is triangular");
                items.push(c.mul_poly(y));
            }
        }
        if items.is_empty() {
            continue;
        }
        let s = GenericScalar::sum_of(items);
        if s.is_zero() {
            continue;
        }
        let (a1, q1) = ev_l[j];
        let (a2, q2) = ev_m[j];
        let diff = GenericScalar::mono(a1 as i32, q1 as i32)
            .sub(&GenericScalar::mono(a2 as i32, q2 as i32));
        coeffs.insert(mu, s.div(&diff));
    }
    Ok(LaurentPoly::from_terms(
        n,
        coeffs
            .into_iter()
            .map(|(mu, c)| (mu.iter().map(|&v| v as i32).collect(), c)),
    ))
}

/// The literal product `Π_{μ≺λ} (Y_j − c_μ(j)) / (c_λ(j) − c_μ(j))` applied
/// to `x^λ`. Slow; kept to cross-check the triangular solve on small cases.
pub fn e_by_projector_product(lambda: &[i64]) -> Result<LaurentPoly<GenericScalar>> {
    let n = lambda.len();
    let h = HeckeParams::laurent();
    let ev_l = eigen_exps(lambda);
    let mut p = LaurentPoly::<BiPoly>::x_pow(lambda);
    let mut den = GenericScalar::one();
    for mu in weights_below(lambda) {
        let ev_m = eigen_exps(&mu);
        let j = (0..n)
            .find(|&j| ev_l[j] != ev_m[j])
            .ok_or_else(|| Error::NonTermination(mu.clone()))?;
        let cm = BiPoly::mono(ev_m[j].0 as i32, ev_m[j].1 as i32);
        p = apply_yi(&p, j, &h).sub(&p.scale(&cm));
        let cl = BiPoly::mono(ev_l[j].0 as i32, ev_l[j].1 as i32);
        den = den.mul_poly(&cl.sub(&cm));
    }
    let inv = den.inv().expect("eigenvalues are distinct");
    Ok(p.map_coeffs(|c| GenericScalar::from_poly(c.clone()).mul(&inv)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn below_lists() {
        assert!(weights_below(&[0, 0]).is_empty());
        assert_eq!(weights_below(&[1, 0]), vec![vec![0, 1]]);
        assert!(weights_below(&[0, 1]).is_empty());
        let b = weights_below(&[2, 0]);
        assert_eq!(b, vec![vec![0, 2], vec![1, 1]]);
        for (x, mu) in b.iter().enumerate() {
            for nu in &b[x + 1..] {
                assert!(!succ(nu, mu));
            }
        }
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(e_by_projection(&[0, 0]).unwrap(), LaurentPoly::one(2));
        // E_{(1,0)} = x_1 + (t − 1) q / (t q − 1) x_2
        let e = e_by_projection(&[1, 0]).unwrap();
        let c = GenericScalar::from_poly(BiPoly::mono(2, 1).sub(&BiPoly::mono(0, 1)))
            .div(&GenericScalar::binomial(2, 1));
        assert_eq!(e.coeff_of(&[0, 1]), c);
        assert!(e.coeff_of(&[1, 0]).is_one());
        assert_eq!(e_by_projection(&[0, 1]).unwrap(), LaurentPoly::var(2, 1));
        for lam in [vec![1, 0], vec![2, 0], vec![1, -1], vec![0, 1, 0]] {
            assert_eq!(
                e_by_projector_product(&lam).unwrap(),
                e_by_projection(&lam).unwrap()
            );
        }
    }
}
