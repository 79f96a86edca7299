//! Dense integer polynomials in one and two variables, used only for gcds.
//!
//! A bivariate polynomial is a vector of coefficients in ℤ[a], indexed by the
//! q-degree. Gcds use the primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type UPolyZ = Vec<BigInt>;
pub type BPolyZ = Vec<UPolyZ>;

fn trim(p: &mut UPolyZ) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn trim_b(p: &mut BPolyZ) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

pub fn u_mul(f: &UPolyZ, g: &UPolyZ) -> UPolyZ {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(f: &UPolyZ, g: &UPolyZ) -> UPolyZ {
    let n = f.len().max(g.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = f.get(i).cloned().unwrap_or_default();
        let b = g.get(i).cloned().unwrap_or_default();
        out.push(a - b);
    }
    trim(&mut out);
    out
}

fn u_scale(f: &UPolyZ, c: &BigInt) -> UPolyZ {
    let mut out: UPolyZ = f.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

fn u_shift(f: &UPolyZ, k: usize) -> UPolyZ {
    if f.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(f.iter().cloned());
    out
}

pub fn u_content(f: &UPolyZ) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn u_div_scalar(f: &UPolyZ, c: &BigInt) -> UPolyZ {
    f.iter().map(|x| x / c).collect()
}

/// Exact division in ℤ[a]; `None` if `g` does not divide `f`.
pub fn u_div_exact(f: &UPolyZ, g: &UPolyZ) -> Option<UPolyZ> {
    assert!(!g.is_empty());
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let mut r = f.clone();
    let lg = g.last().unwrap();
    let mut q = vec![BigInt::zero(); f.len() - g.len() + 1];
    for k in (0..q.len()).rev() {
        let lr = &r[k + g.len() - 1];
        if lr.is_zero() {
            continue;
        }
        let (c, rem) = lr.div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

fn u_prem(f: &UPolyZ, g: &UPolyZ) -> UPolyZ {
    let mut r = f.clone();
    let lg = g.last().unwrap().clone();
    while r.len() >= g.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - g.len();
        r = u_sub(&u_scale(&r, &lg), &u_shift(&u_scale(g, &lr), k));
    }
    r
}

fn u_primitive(f: &UPolyZ) -> UPolyZ {
    if f.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(f);
    if f.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_scalar(f, &c)
}

pub fn u_gcd(f: &UPolyZ, g: &UPolyZ) -> UPolyZ {
    if f.is_empty() {
        return u_primitive(g);
    }
    if g.is_empty() {
        return u_primitive(f);
    }
    let c = u_content(f).gcd(&u_content(g));
    let (mut a, mut b) = (u_primitive(f), u_primitive(g));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = u_prem(&a, &b);
        a = b;
        b = u_primitive(&r);
    }
    u_scale(&u_primitive(&a), &c)
}

fn b_content(f: &BPolyZ) -> UPolyZ {
    let mut g: UPolyZ = Vec::new();
    for c in f {
        if !c.is_empty() {
            g = u_gcd(&g, c);
            if g.len() == 1 {
                break;
            }
        }
    }
    g
}

fn b_sub(f: &BPolyZ, g: &BPolyZ) -> BPolyZ {
    let n = f.len().max(g.len());
    let empty = Vec::new();
    let mut out: BPolyZ = (0..n)
        .map(|i| u_sub(f.get(i).unwrap_or(&empty), g.get(i).unwrap_or(&empty)))
        .collect();
    trim_b(&mut out);
    out
}

fn b_scale(f: &BPolyZ, c: &UPolyZ) -> BPolyZ {
    let mut out: BPolyZ = f.iter().map(|x| u_mul(x, c)).collect();
    trim_b(&mut out);
    out
}

fn b_shift(f: &BPolyZ, k: usize) -> BPolyZ {
    let mut out = vec![Vec::new(); k];
    out.extend(f.iter().cloned());
    out
}

fn b_prem(f: &BPolyZ, g: &BPolyZ) -> BPolyZ {
    let mut r = f.clone();
    let lg = g.last().unwrap().clone();
    while r.len() >= g.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - g.len();
        r = b_sub(&b_scale(&r, &lg), &b_shift(&b_scale(g, &lr), k));
    }
    r
}

fn b_div_content(f: &BPolyZ, c: &UPolyZ) -> BPolyZ {
    f.iter()
        .map(|x| {
            if x.is_empty() {
                Vec::new()
            } else {
                u_div_exact(x, c).expect("content divides every coefficient")
            }
        })
        .collect()
}

fn b_primitive(f: &BPolyZ) -> BPolyZ {
    if f.is_empty() {
        return Vec::new();
    }
    let c = b_content(f);
    b_div_content(f, &c)
}

/// Gcd in ℤ[a, q] up to sign.
pub fn b_gcd(f: &BPolyZ, g: &BPolyZ) -> BPolyZ {
    if f.is_empty() {
        return g.clone();
    }
    if g.is_empty() {
        return f.clone();
    }
    let c = u_gcd(&b_content(f), &b_content(g));
    let (mut a, mut b) = (b_primitive(f), b_primitive(g));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            // q-free primitive part: the q-content is trivial
            a = vec![UPolyZ::from([BigInt::one()])];
            break;
        }
        let r = b_prem(&a, &b);
        a = b;
        b = b_primitive(&r);
    }
    b_scale(&b_primitive(&a), &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[i64]) -> UPolyZ {
        let mut p: UPolyZ = v.iter().map(|&x| BigInt::from(x)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn univariate_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let f = u(&[-2, 1, 1]);
        let g = u(&[3, -4, 1]);
        assert_eq!(u_gcd(&f, &g), u(&[-1, 1]));
    }

    #[test]
    fn bivariate_gcd() {
        // (a q - 1) (q + a) and (a q - 1)(q - 2)
        let f: BPolyZ = vec![u(&[0, -1]), u(&[-1, 0, 1]), u(&[0, 1])];
        let g: BPolyZ = vec![u(&[2]), u(&[-1, -2]), u(&[0, 1])];
        let h = b_gcd(&f, &g);
        let want: BPolyZ = vec![u(&[-1]), u(&[0, 1])];
        let neg: BPolyZ = vec![u(&[1]), u(&[0, -1])];
        assert!(h == want || h == neg, "{h:?}");
    }
}
