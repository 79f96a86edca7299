//! Elements of ℚ(t^{1/2}, q) with the generator `a = t^{1/2}`.
//!
//! Denominators that occur in Macdonald theory are products of binomials
//! `t^i q^j - 1`, so the denominator is stored as a multiset of irreducible
//! factors `Φ_d(a^e q^f)` with `(e, f)` primitive, plus a general remainder
//! polynomial (normally 1) for anything else. Divisibility by a factor is
//! decided by restricting the numerator to the curve where the factor
//! vanishes, which is much cheaper than trial division.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::bipoly::{BiPoly, Exp2};
use super::cyclo::{cyclotomic, divisors, CycloElem};
use super::rat::Rat;
use super::ring::{Field, Ring};

/// `Φ_d(a^e q^f)` with `gcd(e, f) = 1` and `e > 0`, or `(e, f) = (0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloFactor {
    pub d: u32,
    pub e: i32,
    pub f: i32,
}

fn ext_euclid(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_euclid(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl CycloFactor {
    /// `Φ_d(a^e q^f)` as a Laurent polynomial, before normalization.
    pub fn raw(&self) -> BiPoly {
        let phi = cyclotomic(self.d as usize);
        BiPoly::from_terms(
            phi.iter()
                .enumerate()
                .map(|(j, c)| ((self.e * j as i32, self.f * j as i32), Rat::from_int(*c))),
        )
    }

    /// Normalized polynomial (minimal exponents 0, grlex-leading coefficient 1).
    pub fn poly(&self) -> BiPoly {
        self.raw().normalize().0
    }

    /// Whether this factor divides `p`, by restriction to the curve
    /// `a^e q^f = ζ_d` parametrized as `a = ζ^x s^{-f}`, `q = ζ^y s^e`.
    pub fn divides(&self, p: &BiPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        let d = self.d as i64;
        let (_, x, y) = ext_euclid(self.e as i64, self.f as i64);
        let mut buckets: BTreeMap<i64, Vec<Rat>> = BTreeMap::new();
        for (ex, c) in p.terms() {
            let (i, j) = (ex.0 as i64, ex.1 as i64);
            let s = -(self.f as i64) * i + (self.e as i64) * j;
            let z = (x * i + y * j).rem_euclid(d) as usize;
            let v = buckets
                .entry(s)
                .or_insert_with(|| vec![Rat::ZERO; d as usize]);
            v[z] = v[z].add(c);
        }
        buckets
            .into_values()
            .all(|v| CycloElem::from_coeffs(self.d, v).is_zero())
    }

    /// Factors of the binomial `y^g - 1` (or `y^g + 1` when `plus`) where
    /// `y = a^e q^f` is primitive and oriented.
    fn binomial_factors(e: i32, f: i32, g: u32, plus: bool) -> Vec<CycloFactor> {
        let ds: Vec<usize> = if plus {
            divisors(2 * g as usize)
                .into_iter()
                .filter(|d| g as usize % d != 0)
                .collect()
        } else {
            divisors(g as usize)
        };
        ds.into_iter()
            .map(|d| CycloFactor { d: d as u32, e, f })
            .collect()
    }
}

/// Normalized denominator: a product of cyclotomic-binomial factors times a
/// normalized remainder polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Den {
    factors: BTreeMap<CycloFactor, u32>,
    rest: BiPoly,
}

impl Den {
    pub fn one() -> Den {
        Den {
            factors: BTreeMap::new(),
            rest: BiPoly::one(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.rest.is_one()
    }

    pub fn factors(&self) -> &BTreeMap<CycloFactor, u32> {
        &self.factors
    }

    pub fn rest(&self) -> &BiPoly {
        &self.rest
    }

    pub fn from_parts(factors: BTreeMap<CycloFactor, u32>, rest: BiPoly) -> Den {
        Den { factors, rest }
    }

    pub fn expand(&self) -> BiPoly {
        let mut acc = self.rest.clone();
        for (f, m) in &self.factors {
            acc = acc.mul(&f.poly().pow(*m));
        }
        acc
    }

    fn merge_mul(&self, o: &Den) -> Den {
        let mut factors = self.factors.clone();
        for (f, m) in &o.factors {
            *factors.entry(*f).or_insert(0) += m;
        }
        let rest = if o.rest.is_one() {
            self.rest.clone()
        } else if self.rest.is_one() {
            o.rest.clone()
        } else {
            self.rest.mul(&o.rest).normalize().0
        };
        Den { factors, rest }
    }
}

/// Canonical reduced fraction `num / den` in ℚ(a, q).
#[derive(Clone)]
pub struct GenericScalar {
    num: BiPoly,
    den: Den,
}

impl PartialEq for GenericScalar {
    fn eq(&self, o: &Self) -> bool {
        if self.num != o.num {
            return false;
        }
        self.den == o.den || self.den.expand() == o.den.expand()
    }
}

impl Eq for GenericScalar {}

/// Splits a nonzero polynomial into `unit · Π factors · rest` where `unit` is
/// a monomial. Only monomials and binomials `c(m1 ± m2)` are recognized.
fn factor_poly(p: &BiPoly) -> (BiPoly, Vec<CycloFactor>, BiPoly) {
    if let Some((c, e)) = p.as_monomial() {
        return (BiPoly::monomial(c, e.0, e.1), vec![], BiPoly::one());
    }
    if p.len() == 2 {
        let mut it = p.terms();
        let (e1, c1) = it.next().unwrap();
        let (e2, c2) = it.next().unwrap();
        let plus = c1 == c2;
        if plus || *c1 == c2.neg() {
            let (mut de, mut df) = (e1.0 - e2.0, e1.1 - e2.1);
            let g = (de as i64).gcd(&(df as i64)) as i32;
            de /= g;
            df /= g;
            if de < 0 || (de == 0 && df < 0) {
                de = -de;
                df = -df;
            }
            let fs = CycloFactor::binomial_factors(de, df, g as u32, plus);
            let prod = fs.iter().fold(BiPoly::one(), |acc, f| acc.mul(&f.poly()));
            let unit = p.div_exact(&prod).expect("binomial factorization");
            debug_assert!(unit.as_monomial().is_some());
            return (unit, fs, BiPoly::one());
        }
    }
    let (n, c, e) = p.normalize();
    (BiPoly::monomial(c, e.0, e.1), vec![], n)
}

impl GenericScalar {
    pub fn zero() -> GenericScalar {
        GenericScalar {
            num: BiPoly::zero(),
            den: Den::one(),
        }
    }

    pub fn one() -> GenericScalar {
        GenericScalar::from_poly(BiPoly::one())
    }

    pub fn from_rat(c: Rat) -> GenericScalar {
        GenericScalar::from_poly(BiPoly::constant(c))
    }

    pub fn from_int(c: i64) -> GenericScalar {
        GenericScalar::from_rat(Rat::from_int(c))
    }

    pub fn from_poly(p: BiPoly) -> GenericScalar {
        GenericScalar {
            num: p,
            den: Den::one(),
        }
    }

    /// `t^{e/2} q^f`
    pub fn mono(half_t_exp: i32, q_exp: i32) -> GenericScalar {
        GenericScalar::from_poly(BiPoly::mono(half_t_exp, q_exp))
    }

    /// `t^{e/2} q^f - 1`
    pub fn binomial(half_t_exp: i32, q_exp: i32) -> GenericScalar {
        GenericScalar::from_poly(BiPoly::mono(half_t_exp, q_exp).sub(&BiPoly::one()))
    }

    /// `num / den`, reduced.
    pub fn from_fraction(num: BiPoly, den: &BiPoly) -> GenericScalar {
        GenericScalar::from_poly(num).div(&GenericScalar::from_poly(den.clone()))
    }

    /// Rebuilds a value from stored canonical parts, re-reducing to be safe.
    pub fn from_parts(num: BiPoly, den: Den) -> GenericScalar {
        reduce(num, den)
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &Den {
        &self.den
    }

    pub fn den_expanded(&self) -> BiPoly {
        self.den.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &GenericScalar) -> GenericScalar {
        GenericScalar::sum_of(vec![self.clone(), o.clone()])
    }

    pub fn sub(&self, o: &GenericScalar) -> GenericScalar {
        GenericScalar::sum_of(vec![self.clone(), o.neg()])
    }

    pub fn neg(&self) -> GenericScalar {
        GenericScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &GenericScalar) -> GenericScalar {
        if self.is_zero() || o.is_zero() {
            return GenericScalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return GenericScalar::from_poly(self.num.mul(&o.num));
        }
        reduce(self.num.mul(&o.num), self.den.merge_mul(&o.den))
    }

    pub fn mul_poly(&self, p: &BiPoly) -> GenericScalar {
        self.mul(&GenericScalar::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Option<GenericScalar> {
        if self.is_zero() {
            return None;
        }
        let (unit, fs, rest) = factor_poly(&self.num);
        let (uc, ue) = unit.as_monomial().unwrap();
        let mut factors = BTreeMap::new();
        for f in fs {
            *factors.entry(f).or_insert(0) += 1;
        }
        let num = self.den.expand().mul_term(&uc.inv().unwrap(), -ue.0, -ue.1);
        // already coprime; `reduce` only re-checks the general remainder
        Some(reduce(num, Den { factors, rest }))
    }

    pub fn div(&self, o: &GenericScalar) -> GenericScalar {
        self.mul(&o.inv().expect("division by zero"))
    }

    pub fn pow(&self, e: i64) -> GenericScalar {
        let base = if e < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut acc = GenericScalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Sum with a single common-denominator reduction.
    pub fn sum_of(items: Vec<GenericScalar>) -> GenericScalar {
        let items: Vec<GenericScalar> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return GenericScalar::zero(),
            1 => return items.into_iter().next().unwrap(),
            _ => {}
        }
        if items.iter().all(|x| x.den.is_one()) {
            return GenericScalar::from_poly(BiPoly::sum(
                items.into_iter().map(|x| x.num).collect(),
            ));
        }
        // group numerators by identical denominators first
        let mut groups: Vec<(Den, Vec<BiPoly>)> = Vec::new();
        for x in items {
            match groups.iter_mut().find(|(d, _)| *d == x.den) {
                Some((_, v)) => v.push(x.num),
                None => groups.push((x.den, vec![x.num])),
            }
        }
        let mut lcm_factors: BTreeMap<CycloFactor, u32> = BTreeMap::new();
        let mut lcm_rest = BiPoly::one();
        for (d, _) in &groups {
            for (f, m) in &d.factors {
                let e = lcm_factors.entry(*f).or_insert(0);
                *e = (*e).max(*m);
            }
            if !d.rest.is_one() {
                let g = lcm_rest.gcd(&d.rest);
                lcm_rest = lcm_rest.mul(&d.rest.div_exact(&g).unwrap()).normalize().0;
            }
        }
        let mut parts = Vec::with_capacity(groups.len());
        for (d, nums) in groups {
            let s = BiPoly::sum(nums);
            if s.is_zero() {
                continue;
            }
            let mut cof = if d.rest.is_one() {
                lcm_rest.clone()
            } else {
                lcm_rest.div_exact(&d.rest).unwrap()
            };
            for (f, m) in &lcm_factors {
                let have = d.factors.get(f).copied().unwrap_or(0);
                if *m > have {
                    cof = cof.mul(&f.poly().pow(m - have));
                }
            }
            parts.push(s.mul(&cof));
        }
        let num = BiPoly::sum(parts);
        reduce(
            num,
            Den {
                factors: lcm_factors,
                rest: lcm_rest,
            },
        )
    }

    /// Applies a ring map that sends monomials to `R` and inverts the
    /// denominator in the target field; `None` when a denominator factor maps
    /// to zero.
    pub fn map_to<F: Field>(&self, mut mono: impl FnMut(i32, i32) -> F) -> Option<F> {
        let num = self.num.map_monomials(&mut mono);
        let mut den = self.den.rest.map_monomials(&mut mono);
        for (f, m) in &self.den.factors {
            let v = f.poly().map_monomials(&mut mono);
            for _ in 0..*m {
                den = den.mul(&v);
            }
        }
        if den.is_zero() {
            return None;
        }
        Some(num.div(&den))
    }

    /// Substitutes `a ↦ a^{ka} q^{kq}`-style monomial maps given by exponent
    /// images of the generators; used for the `t ↦ t^{-1}` style symmetries
    /// in tests.
    pub fn monomial_substitute(&self, a_img: Exp2, q_img: Exp2) -> GenericScalar {
        let sub = |p: &BiPoly| {
            BiPoly::from_terms(p.terms().map(|(e, c)| {
                (
                    (e.0 * a_img.0 + e.1 * q_img.0, e.0 * a_img.1 + e.1 * q_img.1),
                    c.clone(),
                )
            }))
        };
        GenericScalar::from_fraction(sub(&self.num), &sub(&self.den.expand()))
    }
}

/// Cancels common factors and normalizes.
fn reduce(mut num: BiPoly, den: Den) -> GenericScalar {
    if num.is_zero() {
        return GenericScalar::zero();
    }
    let mut factors = BTreeMap::new();
    for (f, m) in den.factors {
        let mut m = m;
        if m > 0 && f.divides(&num) {
            let fp = f.poly();
            while m > 0 && f.divides(&num) {
                num = num
                    .div_exact(&fp)
                    .expect("factor divides after restriction test");
                m -= 1;
            }
        }
        if m > 0 {
            factors.insert(f, m);
        }
    }
    let mut rest = den.rest;
    if !rest.is_one() {
        let g = num.gcd(&rest);
        if !g.is_one() {
            num = num.div_exact(&g).unwrap();
            rest = rest.div_exact(&g).unwrap().normalize().0;
        }
        // the remainder may itself be a recognizable binomial
        if !rest.is_one() {
            let (unit, fs, r2) = factor_poly(&rest);
            if !fs.is_empty() {
                let (uc, ue) = unit.as_monomial().unwrap();
                num = num.mul_term(&uc.inv().unwrap(), -ue.0, -ue.1);
                for f in fs {
                    *factors.entry(f).or_insert(0) += 1;
                }
                rest = r2;
            }
        }
    }
    GenericScalar {
        num,
        den: Den { factors, rest },
    }
}

impl fmt::Display for GenericScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        let mut first = true;
        for (fac, m) in &self.den.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "({})", fac.poly())?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if !self.den.rest.is_one() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "({})", self.den.rest)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GenericScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for GenericScalar {
    fn zero() -> Self {
        GenericScalar::zero()
    }
    fn one() -> Self {
        GenericScalar::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        GenericScalar::add(self, o)
    }
    fn neg(&self) -> Self {
        GenericScalar::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        GenericScalar::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        GenericScalar::sub(self, o)
    }
    fn from_rat(r: Rat) -> Self {
        GenericScalar::from_rat(r)
    }
    fn sum(items: Vec<Self>) -> Self {
        GenericScalar::sum_of(items)
    }
}

impl Field for GenericScalar {
    fn inv(&self) -> Option<Self> {
        GenericScalar::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> GenericScalar {
        GenericScalar::mono(2, 0)
    }

    fn q() -> GenericScalar {
        GenericScalar::mono(0, 1)
    }

    #[test]
    fn binomial_inverse_cancels() {
        let x = GenericScalar::binomial(4, 2);
        let y = GenericScalar::binomial(2, 1);
        let r = x.div(&y);
        // t^2 q^2 - 1 = (tq - 1)(tq + 1) in terms of t = a^2
        assert!(r.is_polynomial());
        assert_eq!(r, GenericScalar::mono(2, 1).add(&GenericScalar::one()));
    }

    #[test]
    fn sums_reduce_to_canonical_form() {
        let one = GenericScalar::one();
        let d = t().mul(&q()).sub(&one);
        let x = one.div(&d);
        let y = t().mul(&q()).div(&d);
        assert_eq!(y.sub(&x), one);
        assert_eq!(x.add(&x).sub(&x), x);
    }

    #[test]
    fn general_remainder_denominator() {
        let one = GenericScalar::one();
        let g = t().add(&q()).add(&one);
        let x = one.div(&g);
        assert!(!x.den().rest().is_one());
        assert_eq!(x.mul(&g), one);
        let h = t().mul(&t()).sub(&q());
        let y = h.div(&g.mul(&h));
        assert_eq!(y, x);
    }

    #[test]
    fn divisibility_by_restriction() {
        let f = CycloFactor { d: 3, e: 1, f: -2 };
        let p = f.raw().mul(&BiPoly::mono(1, 1).add(&BiPoly::one()));
        assert!(f.divides(&p));
        assert!(!f.divides(&BiPoly::mono(1, 1).add(&BiPoly::one())));
        assert!(!CycloFactor { d: 6, e: 1, f: -2 }.divides(&p));
    }

    #[test]
    fn equality_across_representations() {
        let a = GenericScalar::binomial(2, 1).inv().unwrap();
        let b = GenericScalar::one().div(&GenericScalar::from_poly(
            BiPoly::mono(2, 1).sub(&BiPoly::one()),
        ));
        assert_eq!(a, b);
    }
}
