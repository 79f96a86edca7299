use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::cyclo::CycloElem;
use super::wpoly::WPoly;
use crate::error::{Error, Result};

/// A specialization point `t^{k+1} q^{r-1} = 1` together with the number of
/// variables.
///
/// With `M = gcd(k+1, r-1)`, `w = u^{1/2}` and `τ` a primitive `(r-1)`-th root
/// of unity, the substitution is `t^{1/2} ↦ w^{(r-1)/M}`,
/// `q ↦ τ·w^{-2(k+1)/M}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamSpec {
    n: usize,
    k: usize,
    r: usize,
}

impl ParamSpec {
    pub fn new(n: usize, k: usize, r: usize) -> Result<ParamSpec> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 2")));
        }
        if k < 1 || k > n - 1 {
            return Err(Error::InvalidParams(format!(
                "k = {k} must lie in 1..={}",
                n - 1
            )));
        }
        if r < 2 {
            return Err(Error::InvalidParams(format!("r = {r} must be at least 2")));
        }
        Ok(ParamSpec { n, k, r })
    }

    /// Point for scalar-only work, where the number of variables is irrelevant.
    pub fn point(k: usize, r: usize) -> Result<ParamSpec> {
        ParamSpec::new(k + 1, k, r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        (self.k + 1).gcd(&(self.r - 1))
    }

    pub fn tau_order(&self) -> u32 {
        (self.r - 1) as u32
    }

    /// Exponent of `w` in the image of `t^{1/2}`.
    pub fn half_t_weight(&self) -> i64 {
        ((self.r - 1) / self.m()) as i64
    }

    /// Exponent of `w` in the image of `q` (the root of unity aside).
    pub fn q_weight(&self) -> i64 {
        -2 * ((self.k + 1) / self.m()) as i64
    }

    /// `⌊n/(k+1)⌋`, the largest number of disjoint wheels.
    pub fn max_wheels(&self) -> usize {
        self.n / (self.k + 1)
    }

    /// Whether `t^{e/2} q^f` becomes 1 at the specialization.
    pub fn is_unit_monomial(&self, half_t_exp: i64, q_exp: i64) -> bool {
        let (k1, r1) = ((self.k + 1) as i64, (self.r - 1) as i64);
        if half_t_exp % 2 != 0 || q_exp % r1 != 0 {
            return false;
        }
        let m = q_exp / r1;
        half_t_exp / 2 == m * k1
    }

    /// Exponent of `w` in the image of `t^{e/2} q^f`.
    pub fn w_exponent(&self, half_t_exp: i64, q_exp: i64) -> i64 {
        half_t_exp * self.half_t_weight() + q_exp * self.q_weight()
    }

    /// Image of `t^{e/2} q^f`.
    pub fn specialize_monomial(&self, half_t_exp: i64, q_exp: i64) -> WPoly {
        let c = CycloElem::root_power(self.tau_order(), q_exp);
        WPoly::monomial(c, self.w_exponent(half_t_exp, q_exp) as i32)
    }
}

impl std::fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n,k,r) = ({},{},{})", self.n, self.k, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_specializes_to_one() {
        for (k, r) in [(1, 2), (1, 3), (2, 2), (2, 5), (3, 7), (5, 4)] {
            let p = ParamSpec::point(k, r).unwrap();
            let e_a = 2 * (k as i64 + 1);
            let e_q = r as i64 - 1;
            assert!(p.is_unit_monomial(e_a, e_q));
            assert!(p.specialize_monomial(e_a, e_q).is_one());
            assert!(!p.is_unit_monomial(2, 0));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ParamSpec::new(1, 1, 2).is_err());
        assert!(ParamSpec::new(3, 3, 2).is_err());
        assert!(ParamSpec::new(3, 1, 1).is_err());
    }
}
