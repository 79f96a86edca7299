//! Weight-lattice combinatorics on ℤ^n.
//!
//! Positions are 0-based throughout. A weight is a plain `[i64]` slice;
//! derived data (the ranking permutation, ρ(λ), u-values) is recomputed on
//! demand because it is cheap.

mod enlarge;
mod enumerate;
mod nbhd;
mod wheels;

use std::cmp::Ordering;

pub use enlarge::{
    enlargement, enlarging_procedure, is_enlargement, is_intertwined_swap, path_from_zero, Move,
    MoveTag, Step,
};
pub use enumerate::{enumerate_box, BoxFilter};
pub use nbhd::{
    disjoint_neighborhoods, in_b, in_s, in_s_m, in_sprime, is_scattered_one_wheel, neighborhoods,
    Neighborhood,
};
pub use wheels::{sharp, wheels, Wheel};

pub type Composition = Vec<i64>;

/// Positions sorted by value descending, then index ascending; this is
/// `w_λ·(1, …, n)`.
pub fn w_lambda(lambda: &[i64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..lambda.len()).collect();
    idx.sort_by(|&i, &j| lambda[j].cmp(&lambda[i]).then(i.cmp(&j)));
    idx
}

/// `ranks[i]` is the place of position `i` in [`w_lambda`].
pub fn ranks(lambda: &[i64]) -> Vec<usize> {
    let mut r = vec![0; lambda.len()];
    for (place, i) in w_lambda(lambda).into_iter().enumerate() {
        r[i] = place;
    }
    r
}

/// ρ(λ) stored doubled so that half-integers stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhoVector(pub Vec<i64>);

impl RhoVector {
    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    /// Integer difference `ρ_i − ρ_j`.
    pub fn diff(&self, i: usize, j: usize) -> i64 {
        (self.0[i] - self.0[j]) / 2
    }
}

/// `ρ(λ) = w_λ ρ` with `ρ = ((n−1)/2, …, −(n−1)/2)`.
pub fn rho_of(lambda: &[i64]) -> RhoVector {
    let n = lambda.len() as i64;
    RhoVector(
        ranks(lambda)
            .into_iter()
            .map(|r| n - 1 - 2 * r as i64)
            .collect(),
    )
}

pub fn dominant(lambda: &[i64]) -> Composition {
    let mut v = lambda.to_vec();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// Dominance: all partial sums of `a` are at least those of `b` (equal totals
/// assumed).
fn dominates(a: &[i64], b: &[i64]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa < sb {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartialOrdering {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// The order `≻`: compare dominant representatives by dominance, then the
/// weights themselves.
pub fn succ_compare(lambda: &[i64], mu: &[i64]) -> PartialOrdering {
    assert_eq!(lambda.len(), mu.len());
    if lambda == mu {
        return PartialOrdering::Equal;
    }
    if lambda.iter().sum::<i64>() != mu.iter().sum::<i64>() {
        return PartialOrdering::Incomparable;
    }
    let (lp, mp) = (dominant(lambda), dominant(mu));
    let (x, y) = if lp != mp {
        (lp, mp)
    } else {
        (lambda.to_vec(), mu.to_vec())
    };
    match (dominates(&x, &y), dominates(&y, &x)) {
        (true, false) => PartialOrdering::Greater,
        (false, true) => PartialOrdering::Less,
        _ => PartialOrdering::Incomparable,
    }
}

pub fn succ(lambda: &[i64], mu: &[i64]) -> bool {
    succ_compare(lambda, mu) == PartialOrdering::Greater
}

/// The total order `>′`: walk both weights in ranking order; a larger value
/// wins, and on equal values the smaller position wins.
pub fn total_compare(lambda: &[i64], mu: &[i64]) -> Ordering {
    let (wl, wm) = (w_lambda(lambda), w_lambda(mu));
    for (&i, &j) in wl.iter().zip(&wm) {
        match lambda[i].cmp(&mu[j]).then(j.cmp(&i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// `ωλ = (λ_2, …, λ_n, λ_1 + 1)`
pub fn omega_act(lambda: &[i64]) -> Composition {
    let mut v = lambda[1..].to_vec();
    v.push(lambda[0] + 1);
    v
}

/// `ω⁻¹λ = (λ_n − 1, λ_1, …, λ_{n−1})`
pub fn omega_inv_act(lambda: &[i64]) -> Composition {
    let n = lambda.len();
    let mut v = vec![lambda[n - 1] - 1];
    v.extend_from_slice(&lambda[..n - 1]);
    v
}

/// Swaps positions `i` and `i + 1`.
pub fn si_act(lambda: &[i64], i: usize) -> Composition {
    let mut v = lambda.to_vec();
    v.swap(i, i + 1);
    v
}

/// `u_λ(x_i) = t^{-ρ(λ)_i} q^{-λ_i}` as `(exponent of t^{1/2}, exponent of q)`.
pub fn u_value(lambda: &[i64], i: usize) -> (i64, i64) {
    let rho = rho_of(lambda);
    (-rho.0[i], -lambda[i])
}

/// `u_λ(x_i / x_{i+1})` as `(exponent of t^{1/2}, exponent of q)`.
pub fn u_ratio(lambda: &[i64], i: usize) -> (i64, i64) {
    let rho = rho_of(lambda);
    (rho.0[i + 1] - rho.0[i], lambda[i + 1] - lambda[i])
}

/// Eigenvalue of `Y_i` on `E_λ`: `t^{ρ(λ)_i} q^{λ_i}` as exponents.
pub fn eigenvalue(lambda: &[i64], i: usize) -> (i64, i64) {
    let rho = rho_of(lambda);
    (rho.0[i], lambda[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_examples() {
        assert_eq!(rho_of(&[0, 0, 0]).0, vec![2, 0, -2]);
        assert_eq!(rho_of(&[2, 2, 1]).0, vec![2, 0, -2]);
        assert_eq!(rho_of(&[0, 5, 3]).0, vec![-2, 2, 0]);
    }

    #[test]
    fn w_lambda_examples() {
        assert_eq!(w_lambda(&[3, 2, 1]), vec![0, 1, 2]);
        assert_eq!(w_lambda(&[0, 5, 3]), vec![1, 2, 0]);
        assert_eq!(w_lambda(&[1, 1, 0]), vec![0, 1, 2]);
    }

    #[test]
    fn succ_examples() {
        assert_eq!(succ_compare(&[1, 0], &[0, 1]), PartialOrdering::Greater);
        assert_eq!(succ_compare(&[0, 1], &[0, 1]), PartialOrdering::Equal);
        assert_eq!(succ_compare(&[2, 0], &[1, 1]), PartialOrdering::Greater);
        assert_eq!(
            succ_compare(&[2, 0], &[1, 0]),
            PartialOrdering::Incomparable
        );
        assert_eq!(
            succ_compare(&[0, 2, 0], &[1, 0, 1]),
            PartialOrdering::Greater
        );
    }

    #[test]
    fn total_compare_examples() {
        assert_eq!(total_compare(&[1, 3, 1], &[1, 1, 3]), Ordering::Greater);
        assert_eq!(total_compare(&[1, 3, 1], &[1, 3, 1]), Ordering::Equal);
        assert_eq!(total_compare(&[2, 0], &[1, 1]), Ordering::Greater);
    }

    #[test]
    fn affine_moves() {
        assert_eq!(omega_act(&[0, 0, 0]), vec![0, 0, 1]);
        assert_eq!(omega_inv_act(&[0, 0, 1]), vec![0, 0, 0]);
        assert_eq!(si_act(&[2, 5, 0], 0), vec![5, 2, 0]);
    }
}
