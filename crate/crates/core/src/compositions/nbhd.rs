use super::{rho_of, w_lambda};
use crate::scalars::ParamSpec;

/// A pair of positions `(i, j)` with `ρ(λ)_i − ρ(λ)_j = a − 1` and either
/// `λ_i − λ_j ≤ b − 1`, or `λ_i − λ_j = b` with `j < i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Neighborhood {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: i64,
    /// place of `i` in the ranking, so the window is `rank..=rank + a − 1`
    pub rank: usize,
}

impl Neighborhood {
    /// Positions covered by the window between `i` and `j` in ranking order.
    pub fn window(&self, lambda: &[i64]) -> Vec<usize> {
        w_lambda(lambda)[self.rank..self.rank + self.a].to_vec()
    }

    /// Re-checks the defining conditions against `λ`.
    pub fn holds_in(&self, lambda: &[i64]) -> bool {
        let rho = rho_of(lambda);
        let gap = lambda[self.i] - lambda[self.j];
        rho.diff(self.i, self.j) == self.a as i64 - 1
            && (gap < self.b || (gap == self.b && self.j < self.i))
    }
}

pub fn neighborhoods(lambda: &[i64], a: usize, b: i64) -> Vec<Neighborhood> {
    assert!(a >= 2 && b >= 1);
    let n = lambda.len();
    if a > n {
        return vec![];
    }
    let w = w_lambda(lambda);
    (0..=n - a)
        .filter_map(|l| {
            let (i, j) = (w[l], w[l + a - 1]);
            let gap = lambda[i] - lambda[j];
            (gap < b || (gap == b && j < i)).then_some(Neighborhood {
                i,
                j,
                a,
                b,
                rank: l,
            })
        })
        .collect()
}

fn main_type(p: &ParamSpec) -> (usize, i64) {
    (p.k() + 1, p.r() as i64 - 1)
}

/// Has a neighborhood of type `(k+1, r−1)`.
pub fn in_s(lambda: &[i64], p: &ParamSpec) -> bool {
    let (a, b) = main_type(p);
    !neighborhoods(lambda, a, b).is_empty()
}

/// Has a neighborhood `(i, j)` of type `(k+1, r−1)` with `λ_i − λ_j ≤ r − 2`.
pub fn in_sprime(lambda: &[i64], p: &ParamSpec) -> bool {
    let (a, b) = main_type(p);
    neighborhoods(lambda, a, b)
        .iter()
        .any(|nb| lambda[nb.i] - lambda[nb.j] < b)
}

pub fn in_b(lambda: &[i64], p: &ParamSpec) -> bool {
    !in_s(lambda, p)
}

/// Largest number of type-`(k+1, r−1)` neighborhoods with pairwise disjoint
/// windows, with one optimal choice.
pub fn disjoint_neighborhoods(lambda: &[i64], p: &ParamSpec) -> Vec<Neighborhood> {
    let (a, b) = main_type(p);
    // windows are intervals of equal length in ranking order, so picking
    // greedily from the left is optimal
    let mut chosen: Vec<Neighborhood> = Vec::new();
    for nb in neighborhoods(lambda, a, b) {
        if chosen.last().is_none_or(|last| nb.rank >= last.rank + a) {
            chosen.push(nb);
        }
    }
    chosen
}

pub fn in_s_m(lambda: &[i64], p: &ParamSpec, m: usize) -> bool {
    assert!(m >= 1);
    disjoint_neighborhoods(lambda, p).len() >= m
}

/// One type-`(k+1, r−1)` neighborhood whose window is far from everything
/// else: any two positions not both in the window differ by more than
/// `2⌊n/(k+1)⌋(r−1)`. Such weights carry exactly one wheel.
pub fn is_scattered_one_wheel(lambda: &[i64], p: &ParamSpec) -> bool {
    let (a, b) = main_type(p);
    let gap = 2 * p.max_wheels() as i64 * b;
    neighborhoods(lambda, a, b).iter().any(|nb| {
        let window = nb.window(lambda);
        let n = lambda.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (window.contains(&i) && window.contains(&j)) || (lambda[i] - lambda[j]).abs() > gap
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize, r: usize) -> ParamSpec {
        ParamSpec::new(n, k, r).unwrap()
    }

    #[test]
    fn neighborhood_examples() {
        let nb = neighborhoods(&[1, 3, 1], 2, 1);
        assert_eq!(nb.len(), 1);
        assert_eq!((nb[0].i, nb[0].j), (0, 2));
        let nb = neighborhoods(&[5, 0, 0], 2, 1);
        assert_eq!(
            nb.iter().map(|x| (x.i, x.j)).collect::<Vec<_>>(),
            vec![(1, 2)]
        );
        assert!(neighborhoods(&[6, 3, 0], 2, 2).is_empty());
    }

    #[test]
    fn set_membership_examples() {
        let q = p(3, 1, 2);
        assert!(in_s(&[5, 1, 1], &q));
        assert!(in_s(&[0, 1, 2], &q));
        assert!(in_b(&[0, 2, 4], &q));
        assert!(in_s_m(&[5, 5, 0, 0], &p(4, 1, 2), 2));
        assert!(!in_s_m(&[5, 5, 5], &q, 2));
        assert!(in_s_m(&[5, 5, 5], &q, 1));
    }

    #[test]
    fn scattered_examples() {
        let q = p(3, 1, 2);
        assert!(is_scattered_one_wheel(&[0, 0, 3], &q));
        assert!(!is_scattered_one_wheel(&[0, 0, 2], &q));
        assert!(!is_scattered_one_wheel(&[0, 3, 6], &q));
        // the window may cover every position
        assert!(is_scattered_one_wheel(&[1, 1], &p(2, 1, 2)));
    }
}
