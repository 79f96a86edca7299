//! Laurent polynomials in `w` (standing for u^{1/2}) over ℚ(ζ_N).

use std::collections::BTreeMap;
use std::fmt;

use super::cyclo::CycloElem;
use super::rat::Rat;
use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct WPoly {
    terms: BTreeMap<i32, CycloElem>,
}

impl WPoly {
    pub fn zero() -> WPoly {
        WPoly::default()
    }

    pub fn one() -> WPoly {
        WPoly::constant(CycloElem::rational(Rat::ONE))
    }

    pub fn constant(c: CycloElem) -> WPoly {
        WPoly::monomial(c, 0)
    }

    pub fn monomial(c: CycloElem, e: i32) -> WPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        WPoly { terms }
    }

    /// `w^e`
    pub fn mono(e: i32) -> WPoly {
        WPoly::monomial(CycloElem::rational(Rat::ONE), e)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i32, &CycloElem)> + ExactSizeIterator {
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
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(CycloElem, i32)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i32, c: &CycloElem) {
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

    pub fn add(&self, o: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> WPoly {
        WPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }

    pub fn mul_term(&self, c: &CycloElem, e: i32) -> WPoly {
        if c.is_zero() {
            return WPoly::zero();
        }
        WPoly {
            terms: self.terms.iter().map(|(k, x)| (k + e, x.mul(c))).collect(),
        }
    }

    pub fn mul(&self, o: &WPoly) -> WPoly {
        if let Some((c, e)) = o.as_monomial() {
            return self.mul_term(&c, e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return o.mul_term(&c, e);
        }
        let mut out = WPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(i32, &CycloElem)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// `self = c·w^e·p` with `p` monic and of minimal exponent 0.
    pub fn normalize(&self) -> (WPoly, CycloElem, i32) {
        let Some(min) = self.min_exp() else {
            return (WPoly::zero(), CycloElem::rational(Rat::ONE), 0);
        };
        let lc = self.leading().unwrap().1.clone();
        let inv = lc.inv().unwrap();
        let p = WPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e - min, c.mul(&inv)))
                .collect(),
        };
        (p, lc, min)
    }

    /// Exact quotient in the Laurent ring.
    pub fn div_exact(&self, g: &WPoly) -> Option<WPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(WPoly::zero());
        }
        if let Some((c, e)) = g.as_monomial() {
            return Some(self.mul_term(&c.inv().unwrap(), -e));
        }
        let (gmin, gmax) = (g.min_exp().unwrap(), g.max_exp().unwrap());
        let (fmin, fmax) = (self.min_exp().unwrap(), self.max_exp().unwrap());
        let (lo, hi) = (fmin - gmin, fmax - gmax);
        if lo > hi {
            return None;
        }
        let ginv = g.leading().unwrap().1.inv().unwrap();
        let mut r = self.clone();
        let mut quot = WPoly::zero();
        while let Some((re, rc)) = r.leading().map(|(e, c)| (e, c.clone())) {
            let qe = re - gmax;
            if qe < lo {
                return None;
            }
            let qc = rc.mul(&ginv);
            for (e, c) in &g.terms {
                r.add_term(e + qe, &c.mul(&qc).neg());
            }
            quot.add_term(qe, &qc);
        }
        Some(quot)
    }

    fn rem(&self, g: &WPoly) -> WPoly {
        // both assumed to be ordinary polynomials (exponents ≥ 0)
        let gmax = g.max_exp().unwrap();
        let ginv = g.leading().unwrap().1.inv().unwrap();
        let mut r = self.clone();
        while let Some((re, rc)) = r.leading().map(|(e, c)| (e, c.clone())) {
            if re < gmax {
                break;
            }
            let qc = rc.mul(&ginv);
            for (e, c) in &g.terms {
                r.add_term(e + re - gmax, &c.mul(&qc).neg());
            }
        }
        r
    }

    /// Monic gcd with minimal exponent 0.
    pub fn gcd(&self, o: &WPoly) -> WPoly {
        let mut a = self.normalize().0;
        let mut b = o.normalize().0;
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.normalize().0;
        }
        a.normalize().0
    }

    pub fn eval(&self, w: &Rat) -> CycloElem {
        let winv = w.inv().expect("evaluation at w = 0");
        let mut acc = CycloElem::rational(Rat::ZERO);
        for (e, c) in &self.terms {
            let base = if *e < 0 { &winv } else { w };
            acc = acc.add(&c.scale(&base.pow(e.unsigned_abs())));
        }
        acc
    }

    /// Order of vanishing at `w = 1` and the leading Taylor coefficient there.
    pub fn order_at_one(&self) -> Option<(u32, CycloElem)> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.normalize();
        let unit = p.1.clone();
        let mut ord = 0;
        let w_minus_1 = WPoly::mono(1).sub(&WPoly::one());
        loop {
            let v = p.0.eval(&Rat::ONE);
            if !v.is_zero() {
                return Some((ord, v.mul(&unit)));
            }
            p.0 = p.0.div_exact(&w_minus_1).expect("root at w = 1 divides");
            ord += 1;
        }
    }

    pub fn root_order(&self) -> u32 {
        self.terms.values().map(CycloElem::order).max().unwrap_or(1)
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match *e {
                0 => c.to_string(),
                1 => format!("{c}*w"),
                k => format!("{c}*w^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for WPoly {
    fn zero() -> Self {
        WPoly::zero()
    }
    fn one() -> Self {
        WPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        WPoly::add(self, o)
    }
    fn neg(&self) -> Self {
        WPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        WPoly::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        WPoly::sub(self, o)
    }
    fn from_rat(r: Rat) -> Self {
        WPoly::constant(CycloElem::rational(r))
    }
    fn sum(items: Vec<Self>) -> Self {
        let mut out = WPoly::zero();
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

    fn w(e: i32) -> WPoly {
        WPoly::mono(e)
    }

    #[test]
    fn gcd_and_division() {
        let one = WPoly::one();
        let f = w(1).sub(&one).mul(&w(2).add(&one));
        let g = w(1).sub(&one).mul(&w(1).add(&one)).mul(&w(-3));
        assert_eq!(f.gcd(&g), w(1).sub(&one));
        assert_eq!(f.div_exact(&w(2).add(&one)).unwrap(), w(1).sub(&one));
        assert!(f.div_exact(&w(1).add(&one)).is_none());
    }

    #[test]
    fn order_at_one() {
        let one = WPoly::one();
        let f = w(1)
            .sub(&one)
            .mul(&w(1).sub(&one))
            .mul(&w(1).add(&one))
            .mul(&w(-2));
        let (ord, lead) = f.order_at_one().unwrap();
        assert_eq!(ord, 2);
        assert_eq!(lead, CycloElem::rational(Rat::from_int(2)));
    }
}
