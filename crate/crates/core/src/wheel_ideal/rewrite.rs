//! Rewriting box symbols `e_λ`, `λ ∈ S`, into symbols labelled by `B`
//! using the relations of the dual (pairing) picture at `u = 1`.
//!
//! A relation is attached to a neighborhood of type `(k+1, r−1)`: with the
//! window positions sorted increasingly and `λ′` the values there, it is
//! `Σ e_μ = 0` over box weights `μ` that agree with `λ` off the window and
//! whose window values sum to `Σ λ′` and are congruent to `λ′` mod `r−1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compositions::{
    enumerate_box, in_b, neighborhoods, total_compare, BoxFilter, Composition,
};
use crate::error::{Error, Result};
use crate::scalars::{ParamSpec, Rat};

/// Orders compositions by `>′`, smallest first.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ByTotal(Composition);

impl Ord for ByTotal {
    fn cmp(&self, o: &Self) -> Ordering {
        total_compare(&self.0, &o.0)
    }
}

impl PartialOrd for ByTotal {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// One relation used to eliminate `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedRelation {
    pub target: Composition,
    /// window positions, increasing
    pub window: Vec<usize>,
    /// residues of the window values mod `r − 1`
    pub residues: Vec<i64>,
    pub sum: i64,
    /// every box weight in the relation, `target` included
    pub terms: Vec<Composition>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteState {
    pub bound: i64,
    /// the current linear combination, sorted by `>′`
    pub combination: Vec<(Composition, Rat)>,
    pub history: Vec<AppliedRelation>,
}

impl RewriteState {
    /// `{bound, combination: [[μ, "p/q"]], relations}`.
    pub fn to_json(&self) -> serde_json::Value {
        let comb: Vec<_> = self
            .combination
            .iter()
            .map(|(mu, c)| serde_json::json!([mu, c.to_string()]))
            .collect();
        serde_json::json!({"bound": self.bound, "combination": comb, "relations": self.history.len()})
    }
}

/// Window vectors `v` with `|v_a| ≤ bound`, `v_a ≡ residues_a`, `Σ v = sum`.
fn congruent_vectors(residues: &[i64], modulus: i64, sum: i64, bound: i64) -> Vec<Vec<i64>> {
    fn go(res: &[i64], m: i64, left: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let a = cur.len();
        if a == res.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = (res.len() - a - 1) as i64;
        let start = -bound + (res[a] - -bound).rem_euclid(m);
        let mut v = start;
        while v <= bound {
            let rest = left - v;
            if rest.abs() <= bound * slots {
                cur.push(v);
                go(res, m, rest, bound, cur, out);
                cur.pop();
            }
            v += m;
        }
    }
    let mut out = Vec::new();
    go(residues, modulus, sum, bound, &mut Vec::new(), &mut out);
    out
}

/// The relation eliminating `lambda` through its first neighborhood, or
/// `None` when `lambda ∈ B`.
pub fn relation_for(lambda: &[i64], p: &ParamSpec, bound: i64) -> Option<AppliedRelation> {
    let (a, b) = (p.k() + 1, p.r() as i64 - 1);
    let nb = *neighborhoods(lambda, a, b).first()?;
    let mut window = nb.window(lambda);
    window.sort_unstable();
    let vals: Vec<i64> = window.iter().map(|&i| lambda[i]).collect();
    let residues: Vec<i64> = vals.iter().map(|v| v.rem_euclid(b)).collect();
    let sum = vals.iter().sum();
    let terms = congruent_vectors(&residues, b, sum, bound)
        .into_iter()
        .map(|v| {
            let mut mu = lambda.to_vec();
            for (&i, x) in window.iter().zip(v) {
                mu[i] = x;
            }
            mu
        })
        .collect();
    Some(AppliedRelation {
        target: lambda.to_vec(),
        window,
        residues,
        sum,
        terms,
    })
}

/// Rewrites `e_λ` as a combination of `e_μ` with `μ ∈ B ∩ box`.
///
/// Symbols are always eliminated smallest-first in `>′`, and every relation
/// must only introduce `>′`-greater symbols, so the smallest surviving `S`
/// symbol strictly increases and the procedure stops.
pub fn rewrite_to_b(lambda: &[i64], p: &ParamSpec, bound: i64) -> Result<RewriteState> {
    if lambda.iter().any(|v| v.abs() > bound) {
        return Err(Error::BoxTooSmall(format!(
            "{lambda:?} is outside [-{bound}, {bound}]^n"
        )));
    }
    let mut work: BTreeMap<ByTotal, Rat> = BTreeMap::new();
    work.insert(ByTotal(lambda.to_vec()), Rat::one());
    let mut done: BTreeMap<ByTotal, Rat> = BTreeMap::new();
    let mut history = Vec::new();
    let mut floor: Option<Composition> = None;
    while let Some((ByTotal(mu), c)) = work.pop_first() {
        if c.is_zero() {
            continue;
        }
        if in_b(&mu, p) {
            done.insert(ByTotal(mu), c);
            continue;
        }
        if let Some(prev) = &floor {
            if total_compare(&mu, prev) != Ordering::Greater {
                return Err(Error::OrderViolation(format!("{mu:?} follows {prev:?}")));
            }
        }
        floor = Some(mu.clone());
        let rel = relation_for(&mu, p, bound).expect("weights outside B have a neighborhood");
        let own: Vec<i64> = rel.window.iter().map(|&i| mu[i]).collect();
        for nu in &rel.terms {
            if *nu == mu {
                continue;
            }
            let theirs: Vec<i64> = rel.window.iter().map(|&i| nu[i]).collect();
            if total_compare(&theirs, &own) != Ordering::Greater
                || total_compare(nu, &mu) != Ordering::Greater
            {
                return Err(Error::OrderViolation(format!("{nu:?} is not above {mu:?}")));
            }
            if nu.iter().any(|v| v.abs() > bound) {
                return Err(Error::BoxTooSmall(format!("{nu:?} from {mu:?}")));
            }
            let slot = work.entry(ByTotal(nu.clone())).or_insert_with(Rat::zero);
            *slot = slot.sub(&c);
        }
        history.push(rel);
    }
    Ok(RewriteState {
        bound,
        combination: done
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.0, c))
            .collect(),
        history,
    })
}

/// `|B ∩ box|`, after confirming that every `S` symbol in the box rewrites.
pub fn quotient_dimension(p: &ParamSpec, bound: i64) -> Result<usize> {
    enumerate_box(p, bound, BoxFilter::S)
        .par_iter()
        .try_for_each(|lam| rewrite_to_b(lam, p, bound).map(|_| ()))?;
    Ok(enumerate_box(p, bound, BoxFilter::B).len())
}

/// `Π_{i<j} (x_i^{r−1} − x_j^{r−1})` as integer coefficients on exponents.
/// It vanishes whenever two coordinates differ by an `(r−1)`-th root of
/// unity, so it and its monomial multiples lie in the `u = 1` limit ideal.
pub fn limit_ideal_seed(p: &ParamSpec) -> BTreeMap<Vec<i64>, i64> {
    let n = p.n();
    let r1 = p.r() as i64 - 1;
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::from([(vec![0; n], 1)]);
    for i in 0..n {
        for j in i + 1..n {
            let mut next: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
            for (e, c) in &acc {
                for (idx, s) in [(i, 1), (j, -1)] {
                    let mut f = e.clone();
                    f[idx] += r1;
                    *next.entry(f).or_insert(0) += s * c;
                }
            }
            next.retain(|_, c| *c != 0);
            acc = next;
        }
    }
    acc
}

/// Pairs every relation with every box-supported monomial multiple of
/// [`limit_ideal_seed`]; returns the number of pairings tested and the
/// relations that fail to annihilate some multiple.
pub fn relation_soundness(
    relations: &[AppliedRelation],
    p: &ParamSpec,
    bound: i64,
) -> (usize, Vec<Composition>) {
    let seed = limit_ideal_seed(p);
    let n = p.n();
    let lo: Vec<i64> = (0..n)
        .map(|i| seed.keys().map(|e| e[i]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| seed.keys().map(|e| e[i]).max().unwrap())
        .collect();
    // shifts keeping the whole support inside the box
    let ranges: Vec<(i64, i64)> = (0..n).map(|i| (-bound - lo[i], bound - hi[i])).collect();
    if ranges.iter().any(|(a, b)| a > b) {
        return (0, vec![]);
    }
    let mut shifts = vec![vec![]];
    for &(a, b) in &ranges {
        shifts = shifts
            .into_iter()
            .flat_map(|s: Vec<i64>| (a..=b).map(move |v| [s.clone(), vec![v]].concat()))
            .collect();
    }
    let mut tested = 0;
    let mut bad = Vec::new();
    for rel in relations {
        let mut ok = true;
        for sh in &shifts {
            let total: i64 = rel
                .terms
                .iter()
                .filter_map(|mu| {
                    let e: Vec<i64> = mu.iter().zip(sh).map(|(m, s)| m - s).collect();
                    seed.get(&e)
                })
                .sum();
            tested += 1;
            ok &= total == 0;
        }
        if !ok {
            bad.push(rel.target.clone());
        }
    }
    (tested, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_in_congruence_class() {
        let v = congruent_vectors(&[0, 0], 1, 2, 2);
        assert_eq!(v, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let v = congruent_vectors(&[1, 0], 2, 1, 2);
        assert_eq!(v, vec![vec![-1, 2], vec![1, 0]]);
    }

    #[test]
    fn rewrite_small() {
        let p = ParamSpec::new(2, 1, 2).unwrap();
        let st = rewrite_to_b(&[1, 1], &p, 2).unwrap();
        assert!(!st.combination.is_empty());
        assert!(st.combination.iter().all(|(mu, _)| in_b(mu, &p)));
        let b = rewrite_to_b(&[0, 2], &p, 2).unwrap();
        assert_eq!(b.combination, vec![(vec![0, 2], Rat::one())]);
        assert!(b.history.is_empty());
        assert!(matches!(
            rewrite_to_b(&[3, 0], &p, 2),
            Err(Error::BoxTooSmall(_))
        ));
    }

    #[test]
    fn dimension_small() {
        let p = ParamSpec::new(2, 1, 2).unwrap();
        assert_eq!(quotient_dimension(&p, 0).unwrap(), 0);
        let d1 = quotient_dimension(&p, 1).unwrap();
        assert_eq!(d1, 4);
        assert!(quotient_dimension(&p, 2).unwrap() >= d1);
    }

    #[test]
    fn relations_annihilate_limit_ideal() {
        for (n, k, r, b) in [(2, 1, 2, 2), (2, 1, 3, 2), (3, 1, 2, 2), (3, 2, 2, 2)] {
            let p = ParamSpec::new(n, k, r).unwrap();
            let rels: Vec<_> = enumerate_box(&p, b, BoxFilter::S)
                .iter()
                .filter_map(|l| relation_for(l, &p, b))
                .collect();
            let (tested, bad) = relation_soundness(&rels, &p, b);
            assert!(tested > 0);
            assert!(bad.is_empty(), "{p}: {bad:?}");
        }
    }
}
