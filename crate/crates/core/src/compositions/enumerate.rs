use std::fmt;
use std::str::FromStr;

use super::{in_b, in_s, in_s_m, in_sprime, total_compare, Composition};
use crate::scalars::ParamSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxFilter {
    All,
    B,
    S,
    SPrime,
    /// at least `m` disjoint neighborhoods
    SM(usize),
}

impl BoxFilter {
    pub fn accepts(&self, lambda: &[i64], p: &ParamSpec) -> bool {
        match *self {
            BoxFilter::All => true,
            BoxFilter::B => in_b(lambda, p),
            BoxFilter::S => in_s(lambda, p),
            BoxFilter::SPrime => in_sprime(lambda, p),
            BoxFilter::SM(m) => in_s_m(lambda, p, m),
        }
    }
}

impl fmt::Display for BoxFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxFilter::All => write!(f, "all"),
            BoxFilter::B => write!(f, "B"),
            BoxFilter::S => write!(f, "S"),
            BoxFilter::SPrime => write!(f, "S'"),
            BoxFilter::SM(m) => write!(f, "S_{m}"),
        }
    }
}

impl FromStr for BoxFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(BoxFilter::All),
            "B" => Ok(BoxFilter::B),
            "S" => Ok(BoxFilter::S),
            "S'" | "Sprime" => Ok(BoxFilter::SPrime),
            _ => s
                .strip_prefix("S_")
                .and_then(|m| m.parse().ok())
                .filter(|m: &usize| *m >= 1)
                .map(BoxFilter::SM)
                .ok_or_else(|| format!("unknown filter {s:?} (all, B, S, S', S_m)")),
        }
    }
}

/// All weights in `[−M, M]^n` (for `M = bound`) that pass `filter`,
/// increasing in the total order `>′`.
pub fn enumerate_box(p: &ParamSpec, bound: i64, filter: BoxFilter) -> Vec<Composition> {
    assert!(bound >= 0);
    let n = p.n();
    let side = 2 * bound + 1;
    let total = (side as usize).pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let lam: Composition = (0..n)
            .map(|_| {
                let d = (c % side as usize) as i64;
                c /= side as usize;
                d - bound
            })
            .collect();
        if filter.accepts(&lam, p) {
            out.push(lam);
        }
    }
    out.sort_by(|a, b| total_compare(a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_box_partition() {
        let p = ParamSpec::new(2, 1, 2).unwrap();
        let all = enumerate_box(&p, 1, BoxFilter::All);
        let s = enumerate_box(&p, 1, BoxFilter::S);
        let b = enumerate_box(&p, 1, BoxFilter::B);
        assert_eq!(all.len(), 9);
        assert_eq!(s.len() + b.len(), 9);
        let mut s_sorted = s.clone();
        s_sorted.sort();
        assert_eq!(
            s_sorted,
            vec![
                vec![-1, -1],
                vec![-1, 0],
                vec![0, 0],
                vec![0, 1],
                vec![1, 1]
            ]
        );
    }

    #[test]
    fn filters() {
        let p = ParamSpec::new(3, 1, 2).unwrap();
        assert_eq!(enumerate_box(&p, 0, BoxFilter::S), vec![vec![0, 0, 0]]);
        assert!(enumerate_box(&p, 1, BoxFilter::SM(2)).is_empty());
        assert_eq!("S_2".parse::<BoxFilter>().unwrap(), BoxFilter::SM(2));
        assert!("S_0".parse::<BoxFilter>().is_err());
    }
}
