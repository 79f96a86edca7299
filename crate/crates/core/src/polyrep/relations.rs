//! The defining relations of the algebra, checked as operator identities on
//! a given polynomial.

use rand::Rng;

use super::ops::*;
use super::LaurentPoly;
use crate::scalars::{BiPoly, Rat};

/// Every relation evaluated on `f`, as `(name, holds)`. Operator indices in
/// names are 0-based.
pub fn relation_checks(f: &LaurentPoly<BiPoly>) -> Vec<(String, bool)> {
    let h = HeckeParams::laurent();
    let n = f.nvars();
    let ti = |g: &LaurentPoly<BiPoly>, i| apply_ti(g, i, &h);
    let yi = |g: &LaurentPoly<BiPoly>, i| apply_yi(g, i, &h);
    let mut out = Vec::new();
    for i in 0..n - 1 {
        // (T − t^{1/2})(T + t^{-1/2}) = 0
        let q1 = ti(f, i).sub(&f.scale(&h.a));
        out.push((
            format!("quadratic T{i}"),
            ti(&q1, i).add(&q1.scale(&h.a_inv)).is_zero(),
        ));
        out.push((
            format!("inverse T{i}"),
            apply_ti_inv(&ti(f, i), i, &h) == *f,
        ));
        out.push((
            format!("T{i} X{i} T{i} = X{}", i + 1),
            ti(&apply_x(&ti(f, i), i), i) == apply_x(f, i + 1),
        ));
        let l = apply_ti_inv(&yi(&apply_ti_inv(f, i, &h), i), i, &h);
        out.push((
            format!("T{i}^-1 Y{i} T{i}^-1 = Y{}", i + 1),
            l == yi(f, i + 1),
        ));
        for j in (0..n).filter(|&j| j != i && j != i + 1) {
            out.push((
                format!("T{i} X{j} = X{j} T{i}"),
                ti(&apply_x(f, j), i) == apply_x(&ti(f, i), j),
            ));
            out.push((
                format!("T{i} Y{j} = Y{j} T{i}"),
                ti(&yi(f, j), i) == yi(&ti(f, i), j),
            ));
        }
        for j in (i + 2)..n - 1 {
            out.push((
                format!("T{i} T{j} = T{j} T{i}"),
                ti(&ti(f, j), i) == ti(&ti(f, i), j),
            ));
        }
        if i + 2 < n {
            let l = ti(&ti(&ti(f, i), i + 1), i);
            let r = ti(&ti(&ti(f, i + 1), i), i + 1);
            out.push((format!("braid T{i} T{}", i + 1), l == r));
        }
    }
    let all_x = vec![1; n];
    let mut y_all = f.clone();
    for j in 0..n {
        y_all = yi(&y_all, j);
    }
    for i in 0..n {
        out.push((
            format!("Y{i}^-1 Y{i}"),
            apply_yi_inv(&yi(f, i), i, &h) == *f,
        ));
        out.push((
            format!("X{i}^-1 X{i}"),
            apply_x_inv(&apply_x(f, i), i) == *f,
        ));
        for j in i + 1..n {
            out.push((
                format!("Y{i} Y{j} = Y{j} Y{i}"),
                yi(&yi(f, j), i) == yi(&yi(f, i), j),
            ));
            out.push((
                format!("X{i} X{j} = X{j} X{i}"),
                apply_x(&apply_x(f, j), i) == apply_x(&apply_x(f, i), j),
            ));
        }
        // Y_i (x_1⋯x_n) = q (x_1⋯x_n) Y_i
        let l = yi(&f.mul_monomial(&all_x, &BiPoly::one()), i);
        out.push((
            format!("Y{i} Xall = q Xall Y{i}"),
            l == yi(f, i).mul_monomial(&all_x, &h.q),
        ));
        // X_i (Y_1⋯Y_n) = q^{-1} (Y_1⋯Y_n) X_i
        let mut r = apply_x(f, i);
        for j in 0..n {
            r = yi(&r, j);
        }
        out.push((
            format!("X{i} Yall = q^-1 Yall X{i}"),
            apply_x(&y_all, i) == r.scale(&h.q_inv),
        ));
    }
    let l = apply_yi_inv(&apply_x(&yi(&apply_x_inv(f, 0), 1), 0), 1, &h);
    out.push(("Y1^-1 X0 Y1 X0^-1 = T0^2".into(), l == ti(&ti(f, 0), 0)));
    out.push((
        "omega^-1 omega".into(),
        apply_omega_inv(&apply_omega(f, &h), &h) == *f,
    ));
    out
}

/// A random Laurent polynomial with `terms` monomials of degree at most
/// `deg` in each variable and small coefficients in `ℤ[t^{±1/2}, q^{±1}]`.
pub fn random_laurent<G: Rng>(
    rng: &mut G,
    n: usize,
    deg: i32,
    terms: usize,
) -> LaurentPoly<BiPoly> {
    let items = (0..terms).map(|_| {
        let e: Vec<i32> = (0..n).map(|_| rng.gen_range(-deg..=deg)).collect();
        let mut c = BiPoly::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let v = rng.gen_range(-3..=3);
            c.add_term(
                (rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
                &Rat::from_int(if v == 0 { 1 } else { v }),
            );
        }
        (e, c)
    });
    LaurentPoly::from_terms(n, items)
}
