//! Sparse Laurent polynomials in `x_1, …, x_n` and the polynomial
//! representation of the double affine Hecke algebra on them.
//!
//! Positions and operator indices are 0-based: `apply_ti(f, i)` acts on
//! `x_i, x_{i+1}` in 0-based numbering.

mod eval;
mod ops;
mod relations;

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Ring;

pub use eval::{
    clear_denominators, clear_generic_denominators, eval_at_weight, eval_at_weight_spec,
    poly_from_json, poly_to_json, spec_poly_from_json, spec_poly_to_json, specialize_poly, Sign,
};
pub use ops::{
    apply_omega, apply_omega_inv, apply_si, apply_ti, apply_ti_inv, apply_x, apply_x_inv, apply_yi,
    apply_yi_inv, HeckeParams,
};
pub use relations::{random_laurent, relation_checks};

pub type Exps = Vec<i32>;

/// Finite sum `Σ c_e x^e` with nonzero coefficients, ordered by exponent.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<R> {
    n: usize,
    terms: BTreeMap<Exps, R>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![0; n], R::one())
    }

    pub fn constant(n: usize, c: R) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn monomial(n: usize, e: Exps, c: R) -> Self {
        assert_eq!(e.len(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { n, terms }
    }

    /// `x^λ` for a weight given as `i64` entries.
    pub fn x_pow(lambda: &[i64]) -> Self {
        let e = lambda.iter().map(|&v| v as i32).collect();
        Self::monomial(lambda.len(), e, R::one())
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, e, R::one())
    }

    /// Collects terms, summing repeated exponents with [`Ring::sum`].
    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Exps, R)>) -> Self {
        let mut buckets: BTreeMap<Exps, Vec<R>> = BTreeMap::new();
        for (e, c) in it {
            debug_assert_eq!(e.len(), n);
            buckets.entry(e).or_default().push(c);
        }
        let terms = buckets
            .into_iter()
            .filter_map(|(e, cs)| {
                let c = if cs.len() == 1 {
                    cs.into_iter().next().unwrap()
                } else {
                    R::sum(cs)
                };
                (!c.is_zero()).then_some((e, c))
            })
            .collect();
        LaurentPoly { n, terms }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &R)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exps, R)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &[i32]) -> Option<&R> {
        self.terms.get(e)
    }

    /// Coefficient of `x^λ`, zero if absent.
    pub fn coeff_of(&self, lambda: &[i64]) -> R {
        let e: Exps = lambda.iter().map(|&v| v as i32).collect();
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent vectors of the support, as weights.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&v| v as i64).collect())
            .collect()
    }

    /// `max |e_i|` over the support.
    pub fn degree_bound(&self) -> i32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|v| v.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn add_term(&mut self, e: Exps, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|x| x.mul(c))
    }

    /// Multiplication by `c x^e`.
    pub fn mul_monomial(&self, e: &[i32], c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(f, x)| {
                let y = x.mul(c);
                (!y.is_zero()).then(|| (f.iter().zip(e).map(|(a, b)| a + b).collect(), y))
            })
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        Self::from_terms(
            self.n,
            self.terms.iter().flat_map(|(e1, c1)| {
                o.terms.iter().map(move |(e2, c2)| {
                    (e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1.mul(c2))
                })
            }),
        )
    }

    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> LaurentPoly<S> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (e.clone(), d))
            })
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    /// Rewrites every exponent vector; colliding exponents are summed.
    pub fn map_exps(&self, mut f: impl FnMut(&[i32]) -> (Exps, R)) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().map(|(e, c)| {
                let (e2, m) = f(e);
                (e2, c.mul(&m))
            }),
        )
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(i, v)| {
                    if *v == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, v)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rat;

    #[test]
    fn arithmetic_keeps_canonical_form() {
        let x1 = LaurentPoly::<Rat>::var(2, 0);
        let x2 = LaurentPoly::<Rat>::var(2, 1);
        let s = x1.add(&x2);
        let d = x1.sub(&x2);
        let p = s.mul(&d);
        assert_eq!(p.len(), 2);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.coeff(&[2, 0]), Some(&Rat::ONE));
        assert_eq!(p.coeff(&[0, 2]), Some(&Rat::from_int(-1)));
        assert_eq!(p.coeff(&[1, 1]), None);
        let inv = LaurentPoly::monomial(2, vec![-1, 0], Rat::ONE);
        assert_eq!(inv.mul(&x1), LaurentPoly::one(2));
        assert_eq!(p.degree_bound(), 2);
    }
}
