//! Cyclotomic polynomials and exact arithmetic in ℚ(ζ_N) = ℚ[x]/Φ_N(x).

use std::fmt;
use std::sync::OnceLock;

use super::rat::Rat;
use super::ring::{Field, Ring};

const TABLE_SIZE: usize = 97;

fn table() -> &'static Vec<Vec<i64>> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t: Vec<Vec<i64>> = vec![vec![]];
        for n in 1..TABLE_SIZE {
            let phi = compute_cyclotomic(n, |d| t[d].clone());
            t.push(phi);
        }
        t
    })
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn compute_cyclotomic(n: usize, lower: impl Fn(usize) -> Vec<i64>) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        p = divide_monic_int(&p, &lower(d));
    }
    p
}

fn divide_monic_int(f: &[i64], g: &[i64]) -> Vec<i64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let mut q = vec![0i64; f.len() - dg];
    for k in (0..q.len()).rev() {
        let c = r[k + dg];
        q[k] = c;
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= c * gj;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    if n < TABLE_SIZE {
        table()[n].clone()
    } else {
        compute_cyclotomic(n, cyclotomic)
    }
}

pub fn euler_phi(n: usize) -> usize {
    cyclotomic(n).len() - 1
}

/// Element of ℚ(ζ_N) in the power basis 1, ζ, …, ζ^{φ(N)-1}.
///
/// Rational elements carry order 1 and combine with any field, so constants
/// never need to know which cyclotomic field they will meet.
#[derive(Clone)]
pub struct CycloElem {
    order: u32,
    coeffs: Vec<Rat>,
}

impl PartialEq for CycloElem {
    fn eq(&self, o: &Self) -> bool {
        self.coeffs == o.coeffs
    }
}

impl Eq for CycloElem {}

fn trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl CycloElem {
    pub fn rational(r: Rat) -> CycloElem {
        let mut coeffs = vec![r];
        trim(&mut coeffs);
        CycloElem { order: 1, coeffs }
    }

    /// ζ_N^j for a fixed primitive N-th root of unity ζ_N.
    pub fn root_power(order: u32, j: i64) -> CycloElem {
        let n = order as i64;
        let j = j.rem_euclid(n) as usize;
        let mut coeffs = vec![Rat::ZERO; j + 1];
        coeffs[j] = Rat::ONE;
        CycloElem::from_coeffs(order, coeffs)
    }

    /// Reduces an arbitrary polynomial in ζ modulo Φ_order.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rat>) -> CycloElem {
        let mut c = coeffs;
        reduce_mod(&mut c, &cyclotomic(order as usize));
        trim(&mut c);
        let order = if c.len() <= 1 { 1 } else { order };
        CycloElem { order, coeffs: c }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn joint_order(&self, o: &CycloElem) -> u32 {
        match (self.order, o.order) {
            (1, b) => b,
            (a, 1) => a,
            (a, b) => {
                assert_eq!(a, b, "mixing different cyclotomic fields");
                a
            }
        }
    }

    pub fn add(&self, o: &CycloElem) -> CycloElem {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let x = self.coeffs.get(i).cloned().unwrap_or(Rat::ZERO);
            let y = o.coeffs.get(i).cloned().unwrap_or(Rat::ZERO);
            c.push(x.add(&y));
        }
        trim(&mut c);
        let order = if c.len() <= 1 { 1 } else { self.joint_order(o) };
        CycloElem { order, coeffs: c }
    }

    pub fn neg(&self) -> CycloElem {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(Rat::neg).collect(),
        }
    }

    pub fn sub(&self, o: &CycloElem) -> CycloElem {
        self.add(&o.neg())
    }

    pub fn scale(&self, r: &Rat) -> CycloElem {
        if r.is_zero() {
            return CycloElem::rational(Rat::ZERO);
        }
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(r)).collect(),
        }
    }

    pub fn mul(&self, o: &CycloElem) -> CycloElem {
        if self.is_zero() || o.is_zero() {
            return CycloElem::rational(Rat::ZERO);
        }
        if let Some(r) = o.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(&r);
        }
        let order = self.joint_order(o);
        let mut c = vec![Rat::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
        CycloElem::from_coeffs(order, c)
    }

    pub fn inv(&self) -> Option<CycloElem> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(CycloElem::rational(r.inv().unwrap()));
        }
        let phi: Vec<Rat> = cyclotomic(self.order as usize)
            .into_iter()
            .map(Rat::from_int)
            .collect();
        // extended Euclid: s·self + t·phi = g, g a nonzero constant
        let (g, s) = ext_gcd(&self.coeffs, &phi);
        assert!(g.len() == 1, "Φ_N is irreducible, so the gcd is a unit");
        let ginv = g[0].inv().unwrap();
        Some(CycloElem::from_coeffs(
            self.order,
            s.iter().map(|c| c.mul(&ginv)).collect(),
        ))
    }

    pub fn pow(&self, e: i64) -> CycloElem {
        let base = if e < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut acc = CycloElem::rational(Rat::ONE);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

fn reduce_mod(c: &mut Vec<Rat>, phi: &[i64]) {
    let d = phi.len() - 1;
    while c.len() > d {
        let lead = c.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let k = c.len() - d;
        for (j, pj) in phi.iter().take(d).enumerate() {
            c[k + j] = c[k + j].sub(&lead.mul(&Rat::from_int(*pj)));
        }
    }
}

fn poly_trimmed(mut v: Vec<Rat>) -> Vec<Rat> {
    trim(&mut v);
    v
}

fn poly_divrem(f: &[Rat], g: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lc = g[dg].inv().unwrap();
    if r.len() < g.len() {
        return (vec![], poly_trimmed(r));
    }
    let mut q = vec![Rat::ZERO; r.len() - dg];
    for k in (0..q.len()).rev() {
        let c = r[k + dg].mul(&lc);
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] = r[k + j].sub(&c.mul(gj));
        }
        q[k] = c;
    }
    (poly_trimmed(q), poly_trimmed(r))
}

fn poly_mul(f: &[Rat], g: &[Rat]) -> Vec<Rat> {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut c = vec![Rat::ZERO; f.len() + g.len() - 1];
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            c[i + j] = c[i + j].add(&x.mul(y));
        }
    }
    poly_trimmed(c)
}

fn poly_sub(f: &[Rat], g: &[Rat]) -> Vec<Rat> {
    let n = f.len().max(g.len());
    poly_trimmed(
        (0..n)
            .map(|i| {
                let x = f.get(i).cloned().unwrap_or(Rat::ZERO);
                let y = g.get(i).cloned().unwrap_or(Rat::ZERO);
                x.sub(&y)
            })
            .collect(),
    )
}

/// Returns `(g, s)` with `s·f ≡ g (mod h)`, `g = gcd(f, h)`.
fn ext_gcd(f: &[Rat], h: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (h.to_vec(), poly_trimmed(f.to_vec()));
    let (mut s0, mut s1) = (vec![], vec![Rat::ONE]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*z{}", self.order),
                _ => format!("{c}*z{}^{i}", self.order),
            })
            .collect();
        write!(f, "({})", parts.join(" + "))
    }
}

impl Ring for CycloElem {
    fn zero() -> Self {
        CycloElem::rational(Rat::ZERO)
    }
    fn one() -> Self {
        CycloElem::rational(Rat::ONE)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        CycloElem::add(self, o)
    }
    fn neg(&self) -> Self {
        CycloElem::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        CycloElem::mul(self, o)
    }
    fn from_rat(r: Rat) -> Self {
        CycloElem::rational(r)
    }
}

impl Field for CycloElem {
    fn inv(&self) -> Option<Self> {
        CycloElem::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn root_of_unity_orders() {
        assert_eq!(CycloElem::root_power(1, 5), CycloElem::rational(Rat::ONE));
        assert_eq!(
            CycloElem::root_power(2, 1),
            CycloElem::rational(Rat::from_int(-1))
        );
        let z = CycloElem::root_power(5, 1);
        assert!(z.pow(5).is_one());
        assert!(!z.pow(3).is_one());
        assert_eq!(z.pow(-2), CycloElem::root_power(5, 3));
    }

    #[test]
    fn inverse_in_degree_four_field() {
        let z = CycloElem::root_power(5, 1);
        let x = z.add(&CycloElem::rational(Rat::new(3, 2)));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }
}
