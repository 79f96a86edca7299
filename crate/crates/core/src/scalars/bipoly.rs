//! Laurent polynomials in `a` (standing for t^{1/2}) and `q` with rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rat::Rat;
use super::ring::Ring;
use super::zpoly::{self, BPolyZ, UPolyZ};

/// Exponent pair `(e_a, e_q)`; map order is lexicographic with `a` first.
pub type Exp2 = (i32, i32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exp2, Rat>,
}

fn grlex_key(e: &Exp2) -> (i64, i32, i32) {
    (e.0 as i64 + e.1 as i64, e.0, e.1)
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(Rat::ONE)
    }

    pub fn constant(c: Rat) -> BiPoly {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rat, ea: i32, eq: i32) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ea, eq), c);
        }
        BiPoly { terms }
    }

    /// `a^ea q^eq`
    pub fn mono(ea: i32, eq: i32) -> BiPoly {
        BiPoly::monomial(Rat::ONE, ea, eq)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp2, Rat)>) -> BiPoly {
        let mut p = BiPoly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp2, &Rat)> + ExactSizeIterator {
        self.terms.iter()
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// The single term, if this is `c·a^i q^j` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(Rat, Exp2)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn coeff(&self, e: Exp2) -> Rat {
        self.terms.get(&e).cloned().unwrap_or(Rat::ZERO)
    }

    pub fn add_term(&mut self, e: Exp2, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let (mut big, small) = if self.len() >= o.len() {
            (self.clone(), o)
        } else {
            (o.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(*e, c);
        }
        big
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect(),
        }
    }

    /// Multiplies by `c·a^ea q^eq`.
    pub fn mul_term(&self, c: &Rat, ea: i32, eq: i32) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| ((e.0 + ea, e.1 + eq), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        if let Some((c, e)) = o.as_monomial() {
            return self.mul_term(&c, e.0, e.1);
        }
        if let Some((c, e)) = self.as_monomial() {
            return o.mul_term(&c, e.0, e.1);
        }
        let mut out = BiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term((e1.0 + e2.0, e1.1 + e2.1), &c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `(min e_a, min e_q, max e_a, max e_q)`; `None` for zero.
    pub fn bounds(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b = (first.0, first.1, first.0, first.1);
        for e in it {
            b.0 = b.0.min(e.0);
            b.1 = b.1.min(e.1);
            b.2 = b.2.max(e.0);
            b.3 = b.3.max(e.1);
        }
        Some(b)
    }

    pub fn leading_grlex(&self) -> Option<(Exp2, Rat)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| grlex_key(e))
            .map(|(e, c)| (*e, c.clone()))
    }

    /// Writes `self = c·a^i q^j · p` with `p` having minimal exponents 0 and
    /// grlex-leading coefficient 1. Returns `(p, c, (i, j))`.
    pub fn normalize(&self) -> (BiPoly, Rat, Exp2) {
        let Some((mina, minq, _, _)) = self.bounds() else {
            return (BiPoly::zero(), Rat::ONE, (0, 0));
        };
        let lc = self.leading_grlex().unwrap().1;
        let inv = lc.inv().unwrap();
        let p = BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 - mina, e.1 - minq), c.mul(&inv)))
                .collect(),
        };
        (p, lc, (mina, minq))
    }

    /// Exact quotient in the Laurent ring, or `None` if `g` does not divide.
    pub fn div_exact(&self, g: &BiPoly) -> Option<BiPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        if let Some((c, e)) = g.as_monomial() {
            return Some(self.mul_term(&c.inv().unwrap(), -e.0, -e.1));
        }
        let (fa0, fq0, fa1, fq1) = self.bounds().unwrap();
        let (ga0, gq0, ga1, gq1) = g.bounds().unwrap();
        let (qa0, qq0, qa1, qq1) = (fa0 - ga0, fq0 - gq0, fa1 - ga1, fq1 - gq1);
        if qa0 > qa1 || qq0 > qq1 {
            return None;
        }
        let (ge, gc) = {
            let (e, c) = g.terms.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let ginv = gc.inv().unwrap();
        let mut r = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((re, rc)) = r.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let qe = (re.0 - ge.0, re.1 - ge.1);
            if qe.0 < qa0 || qe.0 > qa1 || qe.1 < qq0 || qe.1 > qq1 {
                return None;
            }
            let qc = rc.mul(&ginv);
            for (e, c) in &g.terms {
                r.add_term((e.0 + qe.0, e.1 + qe.1), &c.mul(&qc).neg());
            }
            quot.add_term(qe, &qc);
        }
        Some(quot)
    }

    /// Gcd normalized as in [`BiPoly::normalize`]; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return o.normalize().0;
        }
        if o.is_zero() {
            return self.normalize().0;
        }
        let g = zpoly::b_gcd(&self.to_dense_z(), &o.to_dense_z());
        BiPoly::from_dense_z(&g).normalize().0
    }

    /// Shifted to nonnegative exponents and scaled to integer coefficients.
    fn to_dense_z(&self) -> BPolyZ {
        let (mina, minq, maxa, maxq) = self.bounds().unwrap();
        let den = Rat::denom_lcm(self.terms.values().cloned());
        let mut out: BPolyZ = vec![Vec::new(); (maxq - minq + 1) as usize];
        for (e, c) in &self.terms {
            let row = &mut out[(e.1 - minq) as usize];
            if row.is_empty() {
                *row = vec![BigInt::zero(); (maxa - mina + 1) as usize];
            }
            row[(e.0 - mina) as usize] = c.numer() * (&den / c.denom());
        }
        for row in out.iter_mut() {
            while row.last().is_some_and(|c: &BigInt| c.is_zero()) {
                row.pop();
            }
        }
        out
    }

    fn from_dense_z(p: &BPolyZ) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, row) in p.iter().enumerate() {
            let row: &UPolyZ = row;
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert(
                        (i as i32, j as i32),
                        Rat::from_bigints(c.clone(), BigInt::one()),
                    );
                }
            }
        }
        out
    }

    /// Applies a monomial map `a^i q^j ↦ f(i, j)` and sums.
    pub fn map_monomials<R: Ring>(&self, mut f: impl FnMut(i32, i32) -> R) -> R {
        let items: Vec<R> = self
            .terms
            .iter()
            .map(|(e, c)| f(e.0, e.1).mul(&R::from_rat(c.clone())))
            .collect();
        R::sum(items)
    }

    /// Substitutes `a = s^{x}`, `q = s^{y}` and returns the univariate image
    /// as `(exponent, coefficient)` pairs, zero coefficients dropped.
    pub fn restrict(&self, x: i32, y: i32) -> BTreeMap<i64, Rat> {
        let mut out: BTreeMap<i64, Rat> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.0 as i64 * x as i64 + e.1 as i64 * y as i64;
            let v = out.entry(k).or_insert(Rat::ZERO);
            *v = v.add(c);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn has_negative_leading(&self) -> bool {
        self.leading_grlex().is_some_and(|(_, c)| c.signum() < 0)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.signum() < 0;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut parts = Vec::new();
            if !mag.is_one() || *e == (0, 0) {
                parts.push(mag.to_string());
            }
            match e.0 {
                0 => {}
                1 => parts.push("a".into()),
                k => parts.push(format!("a^{k}")),
            }
            match e.1 {
                0 => {}
                1 => parts.push("q".into()),
                k => parts.push(format!("q^{k}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        BiPoly::add(self, o)
    }
    fn neg(&self) -> Self {
        BiPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        BiPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        BiPoly::sub(self, o)
    }
    fn from_rat(r: Rat) -> Self {
        BiPoly::constant(r)
    }
    fn sum(items: Vec<Self>) -> Self {
        let mut out = BiPoly::zero();
        for p in &items {
            for (e, c) in &p.terms {
                out.add_term(*e, c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tq_minus_one(ea: i32, eq: i32) -> BiPoly {
        BiPoly::mono(ea, eq).sub(&BiPoly::one())
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = tq_minus_one(2, 1)
            .mul(&tq_minus_one(1, -1))
            .mul(&BiPoly::mono(-3, 2));
        let q = f.div_exact(&tq_minus_one(2, 1)).unwrap();
        assert_eq!(q, tq_minus_one(1, -1).mul(&BiPoly::mono(-3, 2)));
        assert!(f.div_exact(&tq_minus_one(1, 1)).is_none());
    }

    #[test]
    fn gcd_finds_common_binomial() {
        let common = tq_minus_one(4, 1);
        let f = common.mul(&tq_minus_one(0, 1));
        let g = common.mul(&BiPoly::mono(2, 0).add(&BiPoly::mono(0, 3)));
        assert_eq!(f.gcd(&g), common.normalize().0);
    }

    #[test]
    fn normalize_is_idempotent() {
        let f = tq_minus_one(2, -3).scale(&Rat::new(-5, 3));
        let (p, _, _) = f.normalize();
        assert_eq!(p.normalize().0, p);
        assert_eq!(p.normalize().1, Rat::ONE);
    }
}
