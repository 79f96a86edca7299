use super::{omega_act, omega_inv_act, rho_of, si_act, succ, u_ratio, w_lambda, Composition};
use crate::error::{Error, Result};
use crate::scalars::ParamSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Omega,
    OmegaInv,
    /// swap of positions `i` and `i + 1`
    S(usize),
}

impl Move {
    pub fn apply(&self, lambda: &[i64]) -> Composition {
        match *self {
            Move::Omega => omega_act(lambda),
            Move::OmegaInv => omega_inv_act(lambda),
            Move::S(i) => si_act(lambda, i),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveTag {
    /// `ω^{±1}`
    Omega,
    /// `s_i` going up in `≻`
    Raise,
    /// `s_i` going down in `≻` between intertwined weights
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub from: Composition,
    pub mv: Move,
    pub to: Composition,
    pub tag: MoveTag,
}

/// Moves realizing `Δ_p = s_p ⋯ s_{n−1} ω s_1 ⋯ s_{p−1}`, which adds 1 at
/// position `p`, with swaps of equal entries left out.
pub(crate) fn delta_moves(lambda: &[i64], p: usize, out: &mut Vec<Move>) -> Composition {
    let n = lambda.len();
    let mut nu = lambda.to_vec();
    let mut push = |nu: &mut Composition, mv: Move| {
        let next = mv.apply(nu);
        if next != *nu {
            out.push(mv);
            *nu = next;
        }
    };
    for j in (0..p).rev() {
        push(&mut nu, Move::S(j));
    }
    push(&mut nu, Move::Omega);
    for j in (p..n - 1).rev() {
        push(&mut nu, Move::S(j));
    }
    nu
}

/// A move sequence from `0` to `λ`: translate to `(m, …, m)` with
/// `m = min λ_i` by `ω^{±n·m}`, then raise positions in ranking order by
/// powers of `Δ`.
pub fn path_from_zero(lambda: &[i64]) -> Vec<Move> {
    let n = lambda.len();
    let m = *lambda.iter().min().unwrap();
    let mut moves = Vec::new();
    let shift = if m >= 0 { Move::Omega } else { Move::OmegaInv };
    for _ in 0..(n as i64 * m).unsigned_abs() {
        moves.push(shift);
    }
    let mut nu = vec![m; n];
    for &p in w_lambda(lambda).iter().take(n - 1) {
        for _ in 0..(lambda[p] - m) {
            nu = delta_moves(&nu, p, &mut moves);
        }
    }
    debug_assert_eq!(nu, lambda);
    moves
}

fn gaps_bound(p: &ParamSpec) -> i64 {
    (p.max_wheels() * (p.r() - 1)) as i64
}

/// The enlargement with every consecutive gap (in ranking order) equal to
/// `max(⌊n/(k+1)⌋(r−1), old gap) + 1`, keeping the last-ranked entry fixed.
pub fn enlargement(lambda: &[i64], p: &ParamSpec) -> Composition {
    let w = w_lambda(lambda);
    let n = lambda.len();
    let bound = gaps_bound(p);
    let mut out = lambda.to_vec();
    for a in (0..n - 1).rev() {
        let gap = (lambda[w[a]] - lambda[w[a + 1]]).max(bound) + 1;
        out[w[a]] = out[w[a + 1]] + gap;
    }
    out
}

pub fn is_enlargement(lambda: &[i64], candidate: &[i64], p: &ParamSpec) -> bool {
    if lambda.len() != candidate.len() || rho_of(lambda) != rho_of(candidate) {
        return false;
    }
    let w = w_lambda(lambda);
    let bound = gaps_bound(p);
    w.windows(2).all(|pair| {
        let (i, j) = (pair[0], pair[1]);
        candidate[i] - candidate[j] > bound.max(lambda[i] - lambda[j])
    })
}

/// Whether `u_ν(x_i/x_{i+1})` avoids `1, t, t^{-1}` at the specialization.
pub fn is_intertwined_swap(nu: &[i64], i: usize, p: &ParamSpec) -> bool {
    let (e, f) = u_ratio(nu, i);
    (-1..=1).all(|d| !p.is_unit_monomial(e + 2 * d, f))
}

/// Tags a move and checks that a lowering swap is intertwined.
fn tag_step(from: &[i64], mv: Move, p: &ParamSpec) -> Result<Step> {
    let to = mv.apply(from);
    let tag = match mv {
        Move::Omega | Move::OmegaInv => MoveTag::Omega,
        Move::S(i) => {
            if succ(&to, from) {
                MoveTag::Raise
            } else if is_intertwined_swap(from, i, p) {
                MoveTag::Lower
            } else {
                return Err(Error::InvalidEnlargement(format!(
                    "lowering swap s_{i} at {from:?} is not intertwined"
                )));
            }
        }
    };
    Ok(Step {
        from: from.to_vec(),
        mv,
        to,
        tag,
    })
}

/// The sequence from `λ` to its enlargement `λ′`: powers of `Δ_{i_a}` for
/// `a = 1, …, n−1` in ranking order, then `ω^{n·shift}`.
pub fn enlarging_procedure(lambda: &[i64], target: &[i64], p: &ParamSpec) -> Result<Vec<Step>> {
    if !is_enlargement(lambda, target, p) {
        return Err(Error::InvalidEnlargement(format!(
            "{target:?} is not an enlargement of {lambda:?}"
        )));
    }
    let n = lambda.len();
    let w = w_lambda(lambda);
    let grow: Vec<i64> = (0..n).map(|i| target[i] - lambda[i]).collect();
    let base = grow[w[n - 1]];
    let mut moves = Vec::new();
    let mut nu = lambda.to_vec();
    for &i in w.iter().take(n - 1) {
        for _ in 0..(grow[i] - base) {
            nu = delta_moves(&nu, i, &mut moves);
        }
    }
    let shift = if base >= 0 {
        Move::Omega
    } else {
        Move::OmegaInv
    };
    for _ in 0..(n as i64 * base).unsigned_abs() {
        moves.push(shift);
    }
    let mut steps = Vec::with_capacity(moves.len());
    let mut cur = lambda.to_vec();
    for mv in moves {
        let st = tag_step(&cur, mv, p)?;
        cur = st.to.clone();
        steps.push(st);
    }
    debug_assert_eq!(cur, target);
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{in_b, sharp};

    #[test]
    fn enlargement_example() {
        let p = ParamSpec::new(3, 1, 2).unwrap();
        let e = enlargement(&[0, 0, 0], &p);
        assert_eq!(e, vec![4, 2, 0]);
        assert!(is_enlargement(&[0, 0, 0], &e, &p));
        assert_eq!(sharp(&e, &p), 0);
        assert!(in_b(&e, &p));
    }

    #[test]
    fn procedure_reaches_target() {
        let p = ParamSpec::new(2, 1, 2).unwrap();
        let e = enlargement(&[0, 0], &p);
        let steps = enlarging_procedure(&[0, 0], &e, &p).unwrap();
        assert_eq!(steps.last().unwrap().to, e);
        for w in steps.windows(2) {
            assert_eq!(w[0].to, w[1].from);
        }
        assert!(enlarging_procedure(&[0, 0], &[1, 0], &p).is_err());
    }

    #[test]
    fn path_from_zero_lands() {
        for lam in [vec![0, 0, 0], vec![2, -1, 0], vec![-2, -2, 1], vec![1, 0]] {
            let mut nu = vec![0; lam.len()];
            for mv in path_from_zero(&lam) {
                let next = mv.apply(&nu);
                assert_ne!(next, nu);
                nu = next;
            }
            assert_eq!(nu, lam);
        }
    }
}
