//! Elements of ℚ(ζ_N)(w).

use std::fmt;

use super::cyclo::CycloElem;
use super::rat::Rat;
use super::ring::{Field, Ring};
use super::wpoly::WPoly;

/// Reduced fraction with a monic denominator of minimal exponent 0.
#[derive(Clone, PartialEq, Eq)]
pub struct SpecScalar {
    num: WPoly,
    den: WPoly,
}

impl SpecScalar {
    pub fn zero() -> SpecScalar {
        SpecScalar {
            num: WPoly::zero(),
            den: WPoly::one(),
        }
    }

    pub fn one() -> SpecScalar {
        SpecScalar::from_poly(WPoly::one())
    }

    pub fn from_poly(p: WPoly) -> SpecScalar {
        SpecScalar {
            num: p,
            den: WPoly::one(),
        }
    }

    pub fn from_cyclo(c: CycloElem) -> SpecScalar {
        SpecScalar::from_poly(WPoly::constant(c))
    }

    /// `num / den`; `None` if `den` is zero.
    pub fn from_fraction(num: WPoly, den: WPoly) -> Option<SpecScalar> {
        if den.is_zero() {
            return None;
        }
        Some(reduce(num, den))
    }

    pub fn num(&self) -> &WPoly {
        &self.num
    }

    pub fn den(&self) -> &WPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &SpecScalar) -> SpecScalar {
        SpecScalar::sum_of(vec![self.clone(), o.clone()])
    }

    pub fn sub(&self, o: &SpecScalar) -> SpecScalar {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> SpecScalar {
        SpecScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &SpecScalar) -> SpecScalar {
        if self.den.is_one() && o.den.is_one() {
            return SpecScalar::from_poly(self.num.mul(&o.num));
        }
        reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<SpecScalar> {
        if self.is_zero() {
            return None;
        }
        Some(reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &SpecScalar) -> SpecScalar {
        self.mul(&o.inv().expect("division by zero"))
    }

    pub fn sum_of(items: Vec<SpecScalar>) -> SpecScalar {
        let items: Vec<SpecScalar> = items.into_iter().filter(|x| !x.is_zero()).collect();
        if items.len() <= 1 {
            return items.into_iter().next().unwrap_or_else(SpecScalar::zero);
        }
        if items.iter().all(|x| x.den.is_one()) {
            return SpecScalar::from_poly(WPoly::sum(items.into_iter().map(|x| x.num).collect()));
        }
        let mut l = WPoly::one();
        for x in &items {
            if !x.den.is_one() {
                let g = l.gcd(&x.den);
                l = l.mul(&x.den.div_exact(&g).unwrap());
            }
        }
        let parts: Vec<WPoly> = items
            .iter()
            .map(|x| x.num.mul(&l.div_exact(&x.den).unwrap()))
            .collect();
        reduce(WPoly::sum(parts), l)
    }

    /// Evaluates at a rational `w`, `None` at a pole.
    pub fn eval(&self, w: &Rat) -> Option<CycloElem> {
        let d = self.den.eval(w);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(w).mul(&d.inv().unwrap()))
    }

    /// Order at `w = 1` (negative for a pole) and the leading coefficient.
    pub fn order_at_one(&self) -> Option<(i64, CycloElem)> {
        let (on, cn) = self.num.order_at_one()?;
        let (od, cd) = self.den.order_at_one().unwrap();
        Some((on as i64 - od as i64, cn.mul(&cd.inv().unwrap())))
    }
}

fn reduce(num: WPoly, den: WPoly) -> SpecScalar {
    if num.is_zero() {
        return SpecScalar::zero();
    }
    let (d, c, e) = den.normalize();
    let cinv = c.inv().unwrap();
    let mut num = num.mul_term(&cinv, -e);
    let mut den = d;
    if !den.is_one() {
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g).unwrap();
            den = den.div_exact(&g).unwrap();
        }
    }
    SpecScalar { num, den }
}

impl fmt::Display for SpecScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for SpecScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for SpecScalar {
    fn zero() -> Self {
        SpecScalar::zero()
    }
    fn one() -> Self {
        SpecScalar::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        SpecScalar::add(self, o)
    }
    fn neg(&self) -> Self {
        SpecScalar::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        SpecScalar::mul(self, o)
    }
    fn from_rat(r: Rat) -> Self {
        SpecScalar::from_poly(WPoly::from_rat(r))
    }
    fn sum(items: Vec<Self>) -> Self {
        SpecScalar::sum_of(items)
    }
}

impl Field for SpecScalar {
    fn inv(&self) -> Option<Self> {
        SpecScalar::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_arithmetic() {
        let one = WPoly::one();
        let w = WPoly::mono(1);
        let x = SpecScalar::from_fraction(one.clone(), w.sub(&one)).unwrap();
        let y = SpecScalar::from_fraction(w.clone(), w.sub(&one)).unwrap();
        assert_eq!(y.sub(&x), SpecScalar::one());
        assert!(SpecScalar::from_fraction(one, WPoly::zero()).is_none());
    }
}
