//! Dense exact linear algebra over the coefficient fields.

use std::collections::BTreeMap;

use crate::polyrep::LaurentPoly;
use crate::scalars::{CycloElem, Field, Rat, Ring, SpecScalar};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(pr) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, pr);
        let inv = rows[top][col].inv().expect("pivot is nonzero");
        for x in &mut rows[top][col..ncols] {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = row[c].sub(&f.mul(&pivot_row[c]));
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    pivots
}

pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    rref(&mut rows).len()
}

/// A basis of `{v : rows · v = 0}`.
pub fn kernel<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let pivots = if rows.is_empty() {
        vec![]
    } else {
        rref(&mut rows)
    };
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// Coefficient rows of polynomials over a shared sorted monomial index.
pub fn coefficient_rows<R: Ring>(polys: &[&LaurentPoly<R>]) -> Vec<Vec<R>> {
    let mut cols: BTreeMap<&Vec<i32>, usize> = BTreeMap::new();
    for f in polys {
        for (e, _) in f.terms() {
            cols.insert(e, 0);
        }
    }
    for (x, v) in cols.values_mut().enumerate() {
        *v = x;
    }
    polys
        .iter()
        .map(|f| {
            let mut row = vec![R::zero(); cols.len()];
            for (e, c) in f.terms() {
                row[cols[e]] = c.clone();
            }
            row
        })
        .collect()
}

/// Sample points for the quick rank bound.
const PROBES: [(i64, i64); 2] = [(3, 7), (-5, 11)];

/// Exact rank of rows over `ℚ(ζ)(w)`.
///
/// Evaluating at a rational `w` can only lower the rank, so a probe showing
/// full row rank settles the question; otherwise the rows are reduced over
/// the rational function field itself.
pub fn spec_rank(rows: &[Vec<SpecScalar>]) -> usize {
    let full = rows.len();
    for (a, b) in PROBES {
        let w = Rat::new(a, b);
        let evald: Option<Vec<Vec<CycloElem>>> = rows
            .iter()
            .map(|r| r.iter().map(|c| c.eval(&w)).collect::<Option<Vec<_>>>())
            .collect();
        if let Some(m) = evald {
            if rank(m) == full {
                return full;
            }
        }
    }
    rank(rows.to_vec())
}

/// Exact rank of a family of specialized polynomials.
pub fn spec_poly_rank(polys: &[&LaurentPoly<SpecScalar>]) -> usize {
    spec_rank(&coefficient_rows(polys))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[0, 1, 1])];
        assert_eq!(rank(m.clone()), 2);
        let k = kernel(m.clone(), 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&k[0])
                .fold(Rat::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
            assert!(dot.is_zero());
        }
        assert_eq!(kernel::<Rat>(vec![], 2).len(), 2);
    }

    #[test]
    fn spec_rank_detects_generic_dependence() {
        use crate::scalars::WPoly;
        // rows (1, w) and (w, w^2) are dependent over ℚ(w); (1, w) and
        // (1, w^2) are not, though they agree at w = 1
        let s = |p: WPoly| SpecScalar::from_poly(p);
        let dep = vec![
            vec![s(WPoly::one()), s(WPoly::mono(1))],
            vec![s(WPoly::mono(1)), s(WPoly::mono(2))],
        ];
        assert_eq!(spec_rank(&dep), 1);
        let ind = vec![
            vec![s(WPoly::one()), s(WPoly::mono(1))],
            vec![s(WPoly::one()), s(WPoly::mono(2))],
        ];
        assert_eq!(spec_rank(&ind), 2);
    }
}
