//! Intertwiner paths from `0` to `λ`, the resulting construction of `E_λ`,
//! and the factored recursion for `u_0(E_λ)`.

use crate::compositions::{path_from_zero, rho_of, succ, u_ratio, Composition, Move};
use crate::error::{Error, Result};
use crate::polyrep::{
    apply_omega, apply_omega_inv, apply_ti, apply_x, apply_x_inv, HeckeParams, LaurentPoly,
};
use crate::scalars::{BiPoly, FactoredScalar, GenericScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// `A = ω X_1`
    A,
    /// `A^{-1} = X_1^{-1} ω^{-1}`
    AInv,
    /// `B_i(ν)`, raising in `≻`
    Raise(usize),
    /// `B_i(ν)`, lowering in `≻`
    Lower(usize),
}

/// One move `E_to = coefficient · (operator) E_from`.
#[derive(Clone, Debug)]
pub struct PathMove {
    pub kind: MoveKind,
    pub from: Composition,
    pub to: Composition,
    pub coefficient: GenericScalar,
}

#[derive(Clone, Debug)]
pub struct IntertwinerPath {
    pub target: Composition,
    pub moves: Vec<PathMove>,
}

/// `u_ν(x_i/x_{i+1})` as a Laurent monomial.
fn u_mono(nu: &[i64], i: usize) -> BiPoly {
    let (e, f) = u_ratio(nu, i);
    BiPoly::mono(e as i32, f as i32)
}

/// `t^{-1/2} (t^{-1}u − 1)(t u − 1) / (u − 1)^2`, the lowering eigen-ratio.
fn lowering_factor(u: &BiPoly) -> GenericScalar {
    let one = BiPoly::one();
    let num = BiPoly::mono(-2, 0)
        .mul(u)
        .sub(&one)
        .mul(&BiPoly::mono(2, 0).mul(u).sub(&one));
    let den = u.sub(&one).pow(2);
    GenericScalar::from_poly(BiPoly::mono(-1, 0).mul(&num)).div(&GenericScalar::from_poly(den))
}

impl IntertwinerPath {
    pub fn to(lambda: &[i64]) -> Result<IntertwinerPath> {
        let n = lambda.len();
        let mut nu = vec![0; n];
        let mut moves = Vec::new();
        for mv in path_from_zero(lambda) {
            let to = mv.apply(&nu);
            let (kind, coefficient) = match mv {
                Move::Omega => (MoveKind::A, GenericScalar::mono(0, -(nu[0] as i32) - 1)),
                Move::OmegaInv => (MoveKind::AInv, GenericScalar::mono(0, nu[n - 1] as i32)),
                Move::S(i) => {
                    if to == nu {
                        return Err(Error::FixedPointMove {
                            index: i,
                            lambda: nu,
                        });
                    }
                    if succ(&to, &nu) {
                        (MoveKind::Raise(i), GenericScalar::mono(-1, 0))
                    } else {
                        (
                            MoveKind::Lower(i),
                            lowering_factor(&u_mono(&nu, i)).inv().unwrap(),
                        )
                    }
                }
            };
            moves.push(PathMove {
                kind,
                from: nu.clone(),
                to: to.clone(),
                coefficient,
            });
            nu = to;
        }
        Ok(IntertwinerPath {
            target: lambda.to_vec(),
            moves,
        })
    }
}

/// `E = scale · P` with `P` over Laurent polynomials in `t^{1/2}, q`.
struct Fraction {
    p: LaurentPoly<BiPoly>,
    scale: GenericScalar,
}

impl Fraction {
    /// Moves common content of `P` (monomial shift, rational content,
    /// denominator factors of `scale`) out of `P`.
    fn tidy(&mut self) {
        let mut mins: Option<(i32, i32)> = None;
        for (_, c) in self.p.terms() {
            let (ma, mq, _, _) = c.bounds().unwrap();
            mins = Some(match mins {
                None => (ma, mq),
                Some((a, q)) => (a.min(ma), q.min(mq)),
            });
        }
        if let Some((ma, mq)) = mins {
            if (ma, mq) != (0, 0) {
                let shift = BiPoly::mono(-ma, -mq);
                self.p = self.p.scale(&shift);
                self.scale = self.scale.mul(&GenericScalar::mono(ma, mq));
            }
        }
        let factors: Vec<_> = self
            .scale
            .den()
            .factors()
            .iter()
            .map(|(f, m)| (*f, *m))
            .collect();
        for (f, m) in factors {
            let fp = f.poly();
            for _ in 0..m {
                if !self.p.terms().all(|(_, c)| f.divides(c)) {
                    break;
                }
                self.p = self
                    .p
                    .map_coeffs(|c| c.div_exact(&fp).expect("restriction test passed"));
                self.scale = self.scale.mul_poly(&fp);
            }
        }
    }

    fn finish(self) -> LaurentPoly<GenericScalar> {
        let s = self.scale;
        self.p
            .map_coeffs(|c| GenericScalar::from_poly(c.clone()).mul(&s))
    }
}

/// `E_λ` by replaying the intertwiner path from `E_0 = 1`.
pub fn e_by_intertwiners(lambda: &[i64]) -> Result<LaurentPoly<GenericScalar>> {
    let n = lambda.len();
    let h = HeckeParams::laurent();
    let path = IntertwinerPath::to(lambda)?;
    let mut e = Fraction {
        p: LaurentPoly::one(n),
        scale: GenericScalar::one(),
    };
    for mv in &path.moves {
        match mv.kind {
            MoveKind::A => e.p = apply_omega(&apply_x(&e.p, 0), &h),
            MoveKind::AInv => e.p = apply_x_inv(&apply_omega_inv(&e.p, &h), 0),
            MoveKind::Raise(i) | MoveKind::Lower(i) => {
                // (u − 1) B_i(ν) = (u − 1) T_i + (t^{1/2} − t^{-1/2})
                let u1 = u_mono(&mv.from, i).sub(&BiPoly::one());
                e.p = apply_ti(&e.p, i, &h).scale(&u1).add(&e.p.scale(&h.gap));
                e.scale = e.scale.div(&GenericScalar::from_poly(u1));
            }
        }
        e.scale = e.scale.mul(&mv.coefficient);
        e.tidy();
    }
    Ok(e.finish())
}

/// `u_0(E_λ)` in factored form along the same path: `ω` multiplies by
/// `t^{ρ(ν)_1}`, and a raising swap by `t^{-1}(t u − 1)/(u − 1)`.
pub fn u0_factored(lambda: &[i64]) -> Result<FactoredScalar> {
    let path = IntertwinerPath::to(lambda)?;
    let mut acc = FactoredScalar::one();
    for mv in &path.moves {
        match mv.kind {
            MoveKind::A => {
                let r = rho_of(&mv.from);
                acc = acc.mul(&FactoredScalar::monomial(
                    crate::scalars::Rat::ONE,
                    r.doubled()[0],
                    0,
                ));
            }
            MoveKind::AInv => {
                let r = rho_of(&mv.to);
                acc = acc.mul(&FactoredScalar::monomial(
                    crate::scalars::Rat::ONE,
                    -r.doubled()[0],
                    0,
                ));
            }
            MoveKind::Raise(i) => acc = acc.mul(&raise_ratio(&mv.from, i)),
            MoveKind::Lower(i) => acc = acc.div(&raise_ratio(&mv.to, i)),
        }
    }
    Ok(acc)
}

/// `u_0(E_{s_iν}) / u_0(E_ν)` for `s_iν ≻ ν`.
fn raise_ratio(nu: &[i64], i: usize) -> FactoredScalar {
    let (e, f) = u_ratio(nu, i);
    debug_assert!(e % 2 == 0);
    let a = e / 2;
    FactoredScalar::monomial(crate::scalars::Rat::ONE, -2, 0)
        .mul(&FactoredScalar::factor(a + 1, f, 1))
        .div(&FactoredScalar::factor(a, f, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::projection::e_by_projection;
    use crate::polyrep::{eval_at_weight, Sign};

    #[test]
    fn routes_agree_small() {
        for lam in [
            vec![0, 0],
            vec![1, 0],
            vec![0, 1],
            vec![-1, 2],
            vec![2, -2],
            vec![1, 0, -1],
            vec![0, 2, 1],
        ] {
            let a = e_by_intertwiners(&lam).unwrap();
            let b = e_by_projection(&lam).unwrap();
            assert_eq!(a, b, "λ = {lam:?}");
        }
    }

    #[test]
    fn u0_values() {
        assert_eq!(u0_factored(&[0, 0, 0]).unwrap(), FactoredScalar::one());
        // ω·0 = (0,…,0,1) gives t^{(n−1)/2}
        assert_eq!(
            u0_factored(&[0, 0, 1]).unwrap().expand(),
            GenericScalar::mono(2, 0)
        );
        for lam in [vec![1, 0], vec![2, -1], vec![0, 2, 1], vec![-1, 1, 0]] {
            let e = e_by_projection(&lam).unwrap();
            assert_eq!(
                u0_factored(&lam).unwrap().expand(),
                eval_at_weight(&e, &[0; 3][..lam.len()], Sign::Minus)
            );
        }
    }
}
