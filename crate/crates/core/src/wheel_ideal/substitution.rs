//! Symbolic wheel substitutions on Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyrep::{clear_denominators, LaurentPoly};
use crate::scalars::{ParamSpec, SpecScalar, WPoly};

/// Which index order a zero step forces along a chain.
///
/// The single-wheel definition asks for `i_a < i_{a+1}` when `s_a = 0`; the
/// multi-wheel definition as printed reverses that inequality. `Ascending`
/// is the default everywhere.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[default]
    Ascending,
    Descending,
}

impl Direction {
    fn allows(self, from: usize, to: usize) -> bool {
        match self {
            Direction::Ascending => from < to,
            Direction::Descending => from > to,
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascending" => Ok(Direction::Ascending),
            "descending" => Ok(Direction::Descending),
            _ => Err(format!(
                "unknown direction {s:?} (expected ascending or descending)"
            )),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Ascending => "ascending",
            Direction::Descending => "descending",
        })
    }
}

/// A chain `x_{i_{a+1}} = x_{i_a} · t · q^{s_a}` anchored at the free
/// variable `x_{i_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WheelSubstitution {
    pub indices: Vec<usize>,
    pub steps: Vec<i64>,
}

impl WheelSubstitution {
    pub fn anchor(&self) -> usize {
        self.indices[0]
    }

    /// `(half-t exponent, q exponent)` of `x_{i_a} / x_{i_1}` for each `a`.
    pub fn offsets(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.indices.len());
        let mut s = 0;
        for a in 0..self.indices.len() {
            out.push((2 * a as i64, s));
            if a < self.steps.len() {
                s += self.steps[a];
            }
        }
        out
    }

    pub fn is_valid(&self, p: &ParamSpec, dir: Direction) -> bool {
        let mut seen = vec![false; p.n()];
        for &i in &self.indices {
            if i >= p.n() || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        self.indices.len() == p.k() + 1
            && self.steps.len() == p.k()
            && self.steps.iter().all(|&s| s >= 0)
            && self.steps.iter().sum::<i64>() <= p.r() as i64 - 2
            && self
                .indices
                .windows(2)
                .zip(&self.steps)
                .all(|(w, &s)| s > 0 || dir.allows(w[0], w[1]))
    }
}

impl fmt::Display for WheelSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.indices[0])?;
        for (a, s) in self.steps.iter().enumerate() {
            write!(f, " -> x{} (q^{s})", self.indices[a + 1])?;
        }
        Ok(())
    }
}

fn extend(
    p: &ParamSpec,
    dir: Direction,
    budget: i64,
    cur: &mut WheelSubstitution,
    out: &mut Vec<WheelSubstitution>,
) {
    if cur.indices.len() == p.k() + 1 {
        out.push(cur.clone());
        return;
    }
    let last = *cur.indices.last().unwrap();
    for j in 0..p.n() {
        if cur.indices.contains(&j) {
            continue;
        }
        let lo = if dir.allows(last, j) { 0 } else { 1 };
        for s in lo..=budget {
            cur.indices.push(j);
            cur.steps.push(s);
            extend(p, dir, budget - s, cur, out);
            cur.indices.pop();
            cur.steps.pop();
        }
    }
}

/// Every chain of `k+1` distinct indices with admissible steps, sorted.
pub fn wheel_substitutions(p: &ParamSpec, dir: Direction) -> Vec<WheelSubstitution> {
    let mut out = Vec::new();
    for i in 0..p.n() {
        let mut cur = WheelSubstitution {
            indices: vec![i],
            steps: vec![],
        };
        extend(p, dir, p.r() as i64 - 2, &mut cur, &mut out);
    }
    out.sort();
    out
}

/// Unordered `m`-tuples of chains with pairwise disjoint index sets.
pub fn multi_substitutions(p: &ParamSpec, m: usize, dir: Direction) -> Vec<Vec<WheelSubstitution>> {
    assert!(m >= 1);
    let singles = wheel_substitutions(p, dir);
    let masks: Vec<u64> = singles
        .iter()
        .map(|s| s.indices.iter().fold(0, |acc, &i| acc | 1 << i))
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go(
        start: usize,
        used: u64,
        m: usize,
        singles: &[WheelSubstitution],
        masks: &[u64],
        pick: &mut Vec<usize>,
        out: &mut Vec<Vec<WheelSubstitution>>,
    ) {
        if pick.len() == m {
            out.push(pick.iter().map(|&x| singles[x].clone()).collect());
            return;
        }
        for x in start..singles.len() {
            if used & masks[x] == 0 {
                pick.push(x);
                go(x + 1, used | masks[x], m, singles, masks, pick, out);
                pick.pop();
            }
        }
    }
    go(0, 0, m, &singles, &masks, &mut pick, &mut out);
    out
}

/// Image of `x^e` under simultaneous chains: the exponent vector in the
/// surviving variables (zeros at non-anchor chain positions) and the
/// `(half-t, q)` exponents of the scalar picked up.
pub fn substitute_monomial(e: &[i32], subs: &[WheelSubstitution]) -> (Vec<i32>, i64, i64) {
    let mut key = e.to_vec();
    let (mut ht, mut qe) = (0i64, 0i64);
    for sub in subs {
        let anchor = sub.anchor();
        for (a, (dt, dq)) in sub.offsets().into_iter().enumerate().skip(1) {
            let i = sub.indices[a];
            let v = e[i] as i64;
            key[anchor] += e[i];
            key[i] = 0;
            ht += v * dt;
            qe += v * dq;
        }
    }
    (key, ht, qe)
}

/// `f` after the substitution, as a polynomial in the surviving variables.
pub fn restrict(
    f: &LaurentPoly<WPoly>,
    subs: &[WheelSubstitution],
    p: &ParamSpec,
) -> BTreeMap<Vec<i32>, WPoly> {
    let mut acc: BTreeMap<Vec<i32>, Vec<WPoly>> = BTreeMap::new();
    for (e, c) in f.terms() {
        let (key, ht, qe) = substitute_monomial(e, subs);
        acc.entry(key)
            .or_default()
            .push(c.mul(&p.specialize_monomial(ht, qe)));
    }
    acc.into_iter()
        .filter_map(|(k, v)| {
            let s = <WPoly as crate::scalars::Ring>::sum(v);
            (!s.is_zero()).then_some((k, s))
        })
        .collect()
}

/// Where a polynomial fails to vanish: the chains and one surviving
/// monomial with nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub substitution: Vec<WheelSubstitution>,
    pub monomial: Vec<i32>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let subs: Vec<String> = self.substitution.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}] leaves x^{:?}", subs.join("; "), self.monomial)
    }
}

/// Exact symbolic test: the substituted polynomial is identically zero.
pub fn wheel_vanishes(f: &LaurentPoly<SpecScalar>, sub: &WheelSubstitution, p: &ParamSpec) -> bool {
    restrict(&clear_denominators(f), std::slice::from_ref(sub), p).is_empty()
}

/// First failing `m`-wheel substitution for a cleared polynomial, if any.
pub fn ideal_witness(
    f: &LaurentPoly<WPoly>,
    p: &ParamSpec,
    m: usize,
    dir: Direction,
) -> Option<Witness> {
    if f.is_zero() || m * (p.k() + 1) > p.n() {
        return None;
    }
    for subs in multi_substitutions(p, m, dir) {
        if let Some((mono, _)) = restrict(f, &subs, p).into_iter().next() {
            return Some(Witness {
                substitution: subs,
                monomial: mono,
            });
        }
    }
    None
}

/// Membership in `I_m` with the default chain direction.
pub fn in_ideal(f: &LaurentPoly<SpecScalar>, p: &ParamSpec, m: usize) -> bool {
    in_ideal_with(f, p, m, Direction::Ascending)
}

pub fn in_ideal_with(f: &LaurentPoly<SpecScalar>, p: &ParamSpec, m: usize, dir: Direction) -> bool {
    ideal_witness(&clear_denominators(f), p, m, dir).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::CycloElem;

    fn spec_poly(n: usize, terms: Vec<(Vec<i32>, WPoly)>) -> LaurentPoly<SpecScalar> {
        LaurentPoly::from_terms(
            n,
            terms
                .into_iter()
                .map(|(e, c)| (e, SpecScalar::from_poly(c))),
        )
    }

    #[test]
    fn enumeration_counts() {
        let p = ParamSpec::new(3, 1, 2).unwrap();
        assert_eq!(wheel_substitutions(&p, Direction::Ascending).len(), 3);
        let p = ParamSpec::new(3, 1, 3).unwrap();
        // 3 ascending pairs with step 0, all 6 ordered pairs with step 1
        assert_eq!(wheel_substitutions(&p, Direction::Ascending).len(), 9);
        let p = ParamSpec::new(4, 1, 2).unwrap();
        assert_eq!(multi_substitutions(&p, 2, Direction::Ascending).len(), 3);
        assert!(multi_substitutions(&p, 3, Direction::Ascending).is_empty());
        for s in wheel_substitutions(&ParamSpec::new(4, 2, 4).unwrap(), Direction::Descending) {
            assert!(s.is_valid(&ParamSpec::new(4, 2, 4).unwrap(), Direction::Descending));
        }
    }

    #[test]
    fn vanishing_examples() {
        let p = ParamSpec::new(2, 1, 2).unwrap();
        let sub = WheelSubstitution {
            indices: vec![0, 1],
            steps: vec![0],
        };
        assert!(wheel_vanishes(&LaurentPoly::zero(2), &sub, &p));
        assert!(!wheel_vanishes(&LaurentPoly::one(2), &sub, &p));
        // x_1 − t^{-1} x_2 dies on x_2 = t x_1
        let t_inv = p.specialize_monomial(-2, 0);
        let f = spec_poly(
            2,
            vec![(vec![1, 0], WPoly::one()), (vec![0, 1], t_inv.neg())],
        );
        assert!(wheel_vanishes(&f, &sub, &p));
        assert!(in_ideal(&f, &p, 1));
        assert!(!in_ideal(&LaurentPoly::one(2), &p, 1));
        assert!(in_ideal(&LaurentPoly::one(2), &p, 2));
        let g = spec_poly(
            2,
            vec![(vec![1, 0], WPoly::constant(CycloElem::rational(2.into())))],
        );
        assert!(!in_ideal(&g, &p, 1));
    }
}
