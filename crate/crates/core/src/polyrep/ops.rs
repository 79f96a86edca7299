use super::{Exps, LaurentPoly};
use crate::scalars::{BiPoly, GenericScalar, ParamSpec, Ring, SpecScalar, WPoly};

/// Images of `t^{±1/2}` and `q^{±1}` in a coefficient ring.
#[derive(Clone, Debug)]
pub struct HeckeParams<R> {
    pub a: R,
    pub a_inv: R,
    pub q: R,
    pub q_inv: R,
    /// `t^{1/2} − t^{-1/2}`
    pub gap: R,
}

impl<R: Ring> HeckeParams<R> {
    fn from_generators(a: R, a_inv: R, q: R, q_inv: R) -> Self {
        let gap = a.sub(&a_inv);
        HeckeParams {
            a,
            a_inv,
            q,
            q_inv,
            gap,
        }
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(&self, e: i32) -> R {
        let base = if e >= 0 { &self.q } else { &self.q_inv };
        let mut acc = R::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(base);
        }
        acc
    }
}

impl HeckeParams<GenericScalar> {
    pub fn generic() -> Self {
        Self::from_generators(
            GenericScalar::mono(1, 0),
            GenericScalar::mono(-1, 0),
            GenericScalar::mono(0, 1),
            GenericScalar::mono(0, -1),
        )
    }
}

impl HeckeParams<BiPoly> {
    /// Generic parameters as Laurent polynomials in `t^{1/2}, q`; the
    /// operators never divide, so this ring suffices for numerators.
    pub fn laurent() -> Self {
        Self::from_generators(
            BiPoly::mono(1, 0),
            BiPoly::mono(-1, 0),
            BiPoly::mono(0, 1),
            BiPoly::mono(0, -1),
        )
    }
}

impl HeckeParams<WPoly> {
    pub fn specialized(p: &ParamSpec) -> Self {
        Self::from_generators(
            p.specialize_monomial(1, 0),
            p.specialize_monomial(-1, 0),
            p.specialize_monomial(0, 1),
            p.specialize_monomial(0, -1),
        )
    }
}

impl HeckeParams<SpecScalar> {
    pub fn specialized(p: &ParamSpec) -> Self {
        let w = HeckeParams::<WPoly>::specialized(p);
        Self::from_generators(
            SpecScalar::from_poly(w.a),
            SpecScalar::from_poly(w.a_inv),
            SpecScalar::from_poly(w.q),
            SpecScalar::from_poly(w.q_inv),
        )
    }
}

/// Swaps `x_i` and `x_{i+1}`.
pub fn apply_si<R: Ring>(f: &LaurentPoly<R>, i: usize) -> LaurentPoly<R> {
    assert!(i + 1 < f.nvars());
    LaurentPoly {
        n: f.n,
        terms: f
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, i + 1);
                (e, c.clone())
            })
            .collect(),
    }
}

/// Terms of `T_i x^e` (or `T_i^{-1} x^e` when `inverse`), before collection.
///
/// With `y = x_i/x_{i+1}`, `α = e_i`, `β = e_{i+1}`, the divided difference
/// `(s_i − 1) x^e / (y − 1)` is `x_{i+1}^{α+β}` times `Σ_{α≤j<β} y^j` when
/// `β > α`, and minus `Σ_{β≤j<α} y^j` when `β < α`.
fn ti_terms<R: Ring>(
    e: &[i32],
    c: &R,
    i: usize,
    h: &HeckeParams<R>,
    inverse: bool,
    out: &mut Vec<(Exps, R)>,
) {
    let (al, be) = (e[i], e[i + 1]);
    let mut sw = e.to_vec();
    sw.swap(i, i + 1);
    out.push((sw, c.mul(&h.a)));
    if inverse {
        out.push((e.to_vec(), c.mul(&h.gap).neg()));
    }
    if al == be {
        return;
    }
    let (lo, hi, cg) = if be > al {
        (al, be, c.mul(&h.gap))
    } else {
        (be, al, c.mul(&h.gap).neg())
    };
    for j in lo..hi {
        let mut m = e.to_vec();
        m[i] = j;
        m[i + 1] = al + be - j;
        out.push((m, cg.clone()));
    }
}

fn apply_t_generic<R: Ring>(
    f: &LaurentPoly<R>,
    i: usize,
    h: &HeckeParams<R>,
    inverse: bool,
) -> LaurentPoly<R> {
    assert!(i + 1 < f.nvars());
    let mut out = Vec::with_capacity(f.len() * 3);
    for (e, c) in f.terms() {
        ti_terms(e, c, i, h, inverse, &mut out);
    }
    LaurentPoly::from_terms(f.nvars(), out)
}

/// `T_i = t^{1/2} s_i + (t^{1/2} − t^{-1/2}) (x_i/x_{i+1} − 1)^{-1} (s_i − 1)`.
pub fn apply_ti<R: Ring>(f: &LaurentPoly<R>, i: usize, h: &HeckeParams<R>) -> LaurentPoly<R> {
    apply_t_generic(f, i, h, false)
}

/// `T_i^{-1} = T_i − (t^{1/2} − t^{-1/2})`.
pub fn apply_ti_inv<R: Ring>(f: &LaurentPoly<R>, i: usize, h: &HeckeParams<R>) -> LaurentPoly<R> {
    apply_t_generic(f, i, h, true)
}

/// `(ωf)(x_1, …, x_n) = f(q x_n, x_1, …, x_{n−1})`.
pub fn apply_omega<R: Ring>(f: &LaurentPoly<R>, h: &HeckeParams<R>) -> LaurentPoly<R> {
    let n = f.nvars();
    LaurentPoly {
        n,
        terms: f
            .terms()
            .map(|(e, c)| {
                let mut e2 = e[1..].to_vec();
                e2.push(e[0]);
                (e2, c.mul(&h.q_pow(e[0])))
            })
            .collect(),
    }
}

/// `(ω^{-1}f)(x_1, …, x_n) = f(x_2, …, x_n, q^{-1} x_1)`.
pub fn apply_omega_inv<R: Ring>(f: &LaurentPoly<R>, h: &HeckeParams<R>) -> LaurentPoly<R> {
    let n = f.nvars();
    LaurentPoly {
        n,
        terms: f
            .terms()
            .map(|(e, c)| {
                let mut e2 = vec![e[n - 1]];
                e2.extend_from_slice(&e[..n - 1]);
                (e2, c.mul(&h.q_pow(-e[n - 1])))
            })
            .collect(),
    }
}

fn unit(n: usize, i: usize, s: i32) -> Exps {
    let mut e = vec![0; n];
    e[i] = s;
    e
}

pub fn apply_x<R: Ring>(f: &LaurentPoly<R>, i: usize) -> LaurentPoly<R> {
    f.mul_monomial(&unit(f.nvars(), i, 1), &R::one())
}

pub fn apply_x_inv<R: Ring>(f: &LaurentPoly<R>, i: usize) -> LaurentPoly<R> {
    f.mul_monomial(&unit(f.nvars(), i, -1), &R::one())
}

/// `Y_i = T_i ⋯ T_{n−1} ω T_1^{-1} ⋯ T_{i−1}^{-1}` (1-based in the formula).
pub fn apply_yi<R: Ring>(f: &LaurentPoly<R>, i: usize, h: &HeckeParams<R>) -> LaurentPoly<R> {
    let n = f.nvars();
    assert!(i < n);
    let mut g = f.clone();
    for j in (0..i).rev() {
        g = apply_ti_inv(&g, j, h);
    }
    g = apply_omega(&g, h);
    for j in (i..n - 1).rev() {
        g = apply_ti(&g, j, h);
    }
    g
}

/// `Y_i^{-1} = T_{i−1} ⋯ T_1 ω^{-1} T_{n−1}^{-1} ⋯ T_i^{-1}` (1-based).
pub fn apply_yi_inv<R: Ring>(f: &LaurentPoly<R>, i: usize, h: &HeckeParams<R>) -> LaurentPoly<R> {
    let n = f.nvars();
    assert!(i < n);
    let mut g = f.clone();
    for j in i..n - 1 {
        g = apply_ti_inv(&g, j, h);
    }
    g = apply_omega_inv(&g, h);
    for j in 0..i {
        g = apply_ti(&g, j, h);
    }
    g
}
