use std::collections::BTreeMap;

use super::rho_of;
use crate::scalars::ParamSpec;

/// Positions `(i_1, …, i_{k+1})` and steps `(s_1, …, s_k)` with
/// `u_λ(x_{i_{a+1}}) = u_λ(x_{i_a})·t·q^{s_a}` at the specialization,
/// `Σ s_a ≤ r − 2`, and `i_a < i_{a+1}` whenever `s_a = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wheel {
    pub indices: Vec<usize>,
    pub steps: Vec<i64>,
}

impl Wheel {
    /// Re-checks the wheel relations against `λ`.
    pub fn holds_in(&self, lambda: &[i64], p: &ParamSpec) -> bool {
        let mut seen = vec![false; lambda.len()];
        for &i in &self.indices {
            if i >= lambda.len() || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        self.indices.len() == p.k() + 1
            && self.steps.len() == p.k()
            && self.steps.iter().sum::<i64>() <= p.r() as i64 - 2
            && self.indices.windows(2).zip(&self.steps).all(|(w, &s)| {
                s >= 0 && (s > 0 || w[0] < w[1]) && step_for(lambda, w[0], w[1], p) == Some(s)
            })
    }
}

/// The unique step `s ≥ 0` linking `x_i → x_j` in `λ`, if any.
///
/// The relation `u_λ(x_j) = u_λ(x_i) t q^s` becomes 1 = t^{ρ_i − ρ_j − 1}
/// q^{λ_i − λ_j − s}, which at the specialization means the exponent pair is
/// an integer multiple of `(k+1, r−1)`.
fn step_for(lambda: &[i64], i: usize, j: usize, p: &ParamSpec) -> Option<i64> {
    let rho = rho_of(lambda);
    let (k1, r1) = ((p.k() + 1) as i64, (p.r() - 1) as i64);
    let dt = rho.diff(i, j) - 1;
    if dt % k1 != 0 {
        return None;
    }
    let s = lambda[i] - lambda[j] - (dt / k1) * r1;
    (s >= 0).then_some(s)
}

fn extend(
    lambda: &[i64],
    p: &ParamSpec,
    budget: i64,
    idx: &mut Vec<usize>,
    steps: &mut Vec<i64>,
    out: &mut Vec<Wheel>,
) {
    if idx.len() == p.k() + 1 {
        out.push(Wheel {
            indices: idx.clone(),
            steps: steps.clone(),
        });
        return;
    }
    let last = *idx.last().unwrap();
    for j in 0..lambda.len() {
        if idx.contains(&j) {
            continue;
        }
        let Some(s) = step_for(lambda, last, j, p) else {
            continue;
        };
        if s > budget || (s == 0 && last > j) {
            continue;
        }
        idx.push(j);
        steps.push(s);
        extend(lambda, p, budget - s, idx, steps, out);
        idx.pop();
        steps.pop();
    }
}

fn all_wheels(lambda: &[i64], p: &ParamSpec) -> Vec<Wheel> {
    let mut out = Vec::new();
    for i in 0..lambda.len() {
        let mut idx = vec![i];
        let mut steps = vec![];
        extend(lambda, p, p.r() as i64 - 2, &mut idx, &mut steps, &mut out);
    }
    out
}

fn least_rotation(v: &[usize]) -> Vec<usize> {
    (0..v.len())
        .map(|s| v[s..].iter().chain(&v[..s]).copied().collect::<Vec<_>>())
        .min()
        .unwrap()
}

/// One representative per class of wheels identified up to rotation: the
/// lexicographically least member of the class.
pub fn wheels(lambda: &[i64], p: &ParamSpec) -> Vec<Wheel> {
    assert_eq!(lambda.len(), p.n());
    let mut classes: BTreeMap<Vec<usize>, Wheel> = BTreeMap::new();
    for w in all_wheels(lambda, p) {
        let key = least_rotation(&w.indices);
        match classes.get(&key) {
            Some(best) if best.indices <= w.indices => {}
            _ => {
                classes.insert(key, w);
            }
        }
    }
    classes.into_values().collect()
}

/// Number of wheel classes.
pub fn sharp(lambda: &[i64], p: &ParamSpec) -> usize {
    wheels(lambda, p).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_examples() {
        let p = ParamSpec::new(3, 1, 2).unwrap();
        let w = wheels(&[1, 3, 1], &p);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].indices, vec![0, 2]);
        assert_eq!(w[0].steps, vec![0]);
        assert!(w[0].holds_in(&[1, 3, 1], &p));
        assert_eq!(sharp(&[0, 2, 4], &p), 0);
        assert_eq!(sharp(&[0, 10, 20], &p), 0);
    }

    #[test]
    fn rotations_share_a_class() {
        // (n,k,r) = (2,1,3): (1,0) has the wheel (0,1) and its rotation
        // (1,0), both with step 1
        let p = ParamSpec::new(2, 1, 3).unwrap();
        assert_eq!(all_wheels(&[1, 0], &p).len(), 2);
        assert_eq!(sharp(&[1, 0], &p), 1);
        assert_eq!(wheels(&[1, 0], &p)[0].indices, vec![0, 1]);
    }
}
