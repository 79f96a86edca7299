//! Products `± c · t^{e/2} q^f · Π (t^a q^b - 1)^{m}` kept in factored form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::generic::GenericScalar;
use super::params::ParamSpec;
use super::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredScalar {
    sign: i8,
    prefactor: Rat,
    half_t_exp: i64,
    q_exp: i64,
    /// `(a, b) ↦ m` for `(t^a q^b - 1)^m`, with `a > 0` or `a = 0 < b`
    factors: BTreeMap<(i64, i64), i64>,
}

/// Serialized form: `{"sign", "prefactor": [num, den], "monomial": [e_a, e_q],
/// "factors": [[a, b, mult], ...]}`.
#[derive(Serialize, Deserialize)]
struct FactoredJson {
    sign: i8,
    prefactor: (String, String),
    monomial: (i64, i64),
    factors: Vec<(i64, i64, i64)>,
}

impl FactoredScalar {
    pub fn one() -> FactoredScalar {
        FactoredScalar {
            sign: 1,
            prefactor: Rat::ONE,
            half_t_exp: 0,
            q_exp: 0,
            factors: BTreeMap::new(),
        }
    }

    /// `c · t^{e/2} q^f`; panics on `c = 0`.
    pub fn monomial(c: Rat, half_t_exp: i64, q_exp: i64) -> FactoredScalar {
        assert!(!c.is_zero(), "factored scalars are nonzero");
        FactoredScalar {
            sign: if c.signum() < 0 { -1 } else { 1 },
            prefactor: c.abs(),
            half_t_exp,
            q_exp,
            factors: BTreeMap::new(),
        }
    }

    /// `(t^a q^b - 1)^m`
    pub fn factor(a: i64, b: i64, m: i64) -> FactoredScalar {
        let mut f = FactoredScalar::one();
        f.push_factor(a, b, m);
        f
    }

    fn push_factor(&mut self, a: i64, b: i64, m: i64) {
        assert!((a, b) != (0, 0), "t^0 q^0 - 1 vanishes");
        if m == 0 {
            return;
        }
        let (a, b) = if a < 0 || (a == 0 && b < 0) {
            // t^a q^b - 1 = -t^a q^b (t^{-a} q^{-b} - 1)
            if m % 2 != 0 {
                self.sign = -self.sign;
            }
            self.half_t_exp += 2 * a * m;
            self.q_exp += b * m;
            (-a, -b)
        } else {
            (a, b)
        };
        let e = self.factors.entry((a, b)).or_insert(0);
        *e += m;
        if *e == 0 {
            self.factors.remove(&(a, b));
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn prefactor(&self) -> &Rat {
        &self.prefactor
    }

    /// `(e, f)` of the monomial `t^{e/2} q^f`.
    pub fn monomial_exps(&self) -> (i64, i64) {
        (self.half_t_exp, self.q_exp)
    }

    pub fn factors(&self) -> &BTreeMap<(i64, i64), i64> {
        &self.factors
    }

    pub fn mul(&self, o: &FactoredScalar) -> FactoredScalar {
        let mut out = self.clone();
        out.sign *= o.sign;
        out.prefactor = out.prefactor.mul(&o.prefactor);
        out.half_t_exp += o.half_t_exp;
        out.q_exp += o.q_exp;
        for ((a, b), m) in &o.factors {
            out.push_factor(*a, *b, *m);
        }
        out
    }

    pub fn inv(&self) -> FactoredScalar {
        FactoredScalar {
            sign: self.sign,
            prefactor: self.prefactor.inv().unwrap(),
            half_t_exp: -self.half_t_exp,
            q_exp: -self.q_exp,
            factors: self.factors.iter().map(|(k, m)| (*k, -m)).collect(),
        }
    }

    pub fn div(&self, o: &FactoredScalar) -> FactoredScalar {
        self.mul(&o.inv())
    }

    pub fn expand(&self) -> GenericScalar {
        let c = if self.sign < 0 {
            self.prefactor.neg()
        } else {
            self.prefactor.clone()
        };
        let mut out = GenericScalar::from_rat(c).mul(&GenericScalar::mono(
            self.half_t_exp as i32,
            self.q_exp as i32,
        ));
        let mut den = GenericScalar::one();
        for ((a, b), m) in &self.factors {
            let f = GenericScalar::binomial(2 * *a as i32, *b as i32);
            if *m > 0 {
                out = out.mul(&f.pow(*m));
            } else {
                den = den.mul(&f.pow(-*m));
            }
        }
        out.div(&den)
    }

    /// Sum of multiplicities of the factors that vanish along the component
    /// through the specialization point.
    pub fn zeta(&self, p: &ParamSpec) -> i64 {
        let (k1, r1) = ((p.k() + 1) as i64, (p.r() - 1) as i64);
        self.factors
            .iter()
            .filter(|((a, b), _)| *a % k1 == 0 && *a / k1 >= 1 && *b == (*a / k1) * r1)
            .map(|(_, m)| *m)
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = FactoredJson {
            sign: self.sign,
            prefactor: self.prefactor.to_strings(),
            monomial: (self.half_t_exp, self.q_exp),
            factors: self
                .factors
                .iter()
                .map(|((a, b), m)| (*a, *b, *m))
                .collect(),
        };
        serde_json::to_value(j).unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<FactoredScalar, String> {
        let j: FactoredJson = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        let c = Rat::from_strings(&j.prefactor.0, &j.prefactor.1)?;
        let c = if j.sign < 0 { c.neg() } else { c };
        let mut f = FactoredScalar::monomial(c, j.monomial.0, j.monomial.1);
        for (a, b, m) in j.factors {
            f.push_factor(a, b, m);
        }
        Ok(f)
    }
}

impl fmt::Display for FactoredScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            if self.sign < 0 { "-" } else { "" },
            self.prefactor
        )?;
        if self.half_t_exp != 0 {
            write!(f, "*t^({}/2)", self.half_t_exp)?;
        }
        if self.q_exp != 0 {
            write!(f, "*q^{}", self.q_exp)?;
        }
        for ((a, b), m) in &self.factors {
            write!(f, "*(t^{a}*q^{b} - 1)^{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::zeta::zeta_series;

    #[test]
    fn zeta_examples() {
        let p = ParamSpec::point(1, 2).unwrap();
        assert_eq!(FactoredScalar::factor(2, 1, 1).zeta(&p), 1);
        assert_eq!(FactoredScalar::factor(1, 1, 1).zeta(&p), 0);
        let f = FactoredScalar::factor(4, 2, 1).div(&FactoredScalar::factor(2, 1, 1));
        assert_eq!(f.zeta(&p), 0);
        assert_eq!(zeta_series(&f.expand(), &p).unwrap(), 0);
    }

    #[test]
    fn orientation_is_normalized() {
        let f = FactoredScalar::factor(-1, 2, 1);
        assert_eq!(f.factors().get(&(1, -2)), Some(&1));
        assert_eq!(f.expand(), GenericScalar::binomial(-2, 2));
    }

    #[test]
    fn json_roundtrip() {
        let f =
            FactoredScalar::monomial(Rat::new(-3, 4), 3, -1).mul(&FactoredScalar::factor(2, 1, -2));
        assert_eq!(FactoredScalar::from_json(&f.to_json()).unwrap(), f);
    }
}
