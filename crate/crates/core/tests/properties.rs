//! Randomized invariants of the combinatorics, scalars, operators and ideals.

use std::cmp::Ordering;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use daha_wheel::compositions::{
    enlargement, enlarging_procedure, in_b, is_intertwined_swap, neighborhoods, omega_act, rho_of,
    sharp, si_act, succ, total_compare, u_ratio, w_lambda, Move, MoveTag,
};
use daha_wheel::macdonald::{e_specialized, zeta_u0};
use daha_wheel::polyrep::{random_laurent, relation_checks, LaurentPoly};
use daha_wheel::scalars::{
    is_regular_at_spec, specialize, zeta_factored, zeta_series, CycloElem, FactoredScalar,
    GenericScalar, ParamSpec, Rat, SpecScalar,
};
use daha_wheel::wheel_ideal::{basis_b_specialized, equivalent_definitions, quotient_dimension};

const POINTS: [(usize, usize, usize); 5] = [(2, 1, 2), (3, 1, 2), (3, 2, 2), (3, 1, 3), (4, 1, 3)];

fn point() -> impl Strategy<Value = ParamSpec> {
    (0..POINTS.len()).prop_map(|i| {
        let (n, k, r) = POINTS[i];
        ParamSpec::new(n, k, r).unwrap()
    })
}

fn weight(n: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, n)
}

fn weight_at(bound: i64) -> impl Strategy<Value = (ParamSpec, Vec<i64>)> {
    point().prop_flat_map(move |p| {
        let n = p.n();
        (Just(p), weight(n, bound))
    })
}

/// Products and quotients of monomials and binomials `t^{e/2} q^f - 1`.
fn scalar() -> impl Strategy<Value = GenericScalar> {
    let factor = (-3i32..=3, -3i32..=3, any::<bool>(), 1i64..=3).prop_map(|(e, f, bin, c)| {
        let base = if bin && (e, f) != (0, 0) {
            GenericScalar::binomial(e, f)
        } else {
            GenericScalar::mono(e, f)
        };
        base.mul(&GenericScalar::from_int(c))
    });
    (
        prop::collection::vec(factor.clone(), 1..4),
        prop::collection::vec(factor, 0..3),
    )
        .prop_map(|(num, den)| {
            let top = num.iter().fold(GenericScalar::one(), |a, b| a.mul(b));
            den.iter().fold(top, |a, b| a.div(b))
        })
}

fn factored() -> impl Strategy<Value = FactoredScalar> {
    prop::collection::vec((0i64..=6, -4i64..=6, -2i64..=3), 0..5).prop_map(|fs| {
        fs.into_iter()
            .filter(|(a, b, _)| (*a, *b) != (0, 0))
            .fold(FactoredScalar::one(), |acc, (a, b, m)| {
                acc.mul(&FactoredScalar::factor(a, b, m))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn total_order_is_strict_and_total(a in weight(3, 3), b in weight(3, 3), c in weight(3, 3)) {
        prop_assert_eq!(total_compare(&a, &a), Ordering::Equal);
        prop_assert_eq!(total_compare(&a, &b), total_compare(&b, &a).reverse());
        prop_assert_eq!(total_compare(&a, &b) == Ordering::Equal, a == b);
        if total_compare(&a, &b) == Ordering::Greater && total_compare(&b, &c) == Ordering::Greater {
            prop_assert_eq!(total_compare(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn total_order_refines_succ(a in weight(3, 2), b in weight(3, 2)) {
        if succ(&a, &b) {
            prop_assert_eq!(total_compare(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn rho_is_permuted_staircase(lam in weight(4, 4)) {
        let n = lam.len() as i64;
        let w = w_lambda(&lam);
        let rho = rho_of(&lam);
        for (rank, &pos) in w.iter().enumerate() {
            prop_assert_eq!(rho.doubled()[pos], n - 1 - 2 * rank as i64);
        }
    }

    #[test]
    fn wheels_are_omega_equivariant((p, lam) in weight_at(4)) {
        prop_assert_eq!(sharp(&omega_act(&lam), &p), sharp(&lam, &p));
    }

    #[test]
    fn longer_neighborhood_forces_shorter_ones(lam in weight(4, 4), a in 2usize..=3, d in 1usize..=2, b in 1i64..=3) {
        if !neighborhoods(&lam, a + d, b).is_empty() {
            prop_assert!(neighborhoods(&lam, a, b).len() > d);
        }
    }

    #[test]
    fn enlargement_is_wheel_free((p, lam) in weight_at(3)) {
        let big = enlargement(&lam, &p);
        prop_assert_eq!(rho_of(&big), rho_of(&lam));
        prop_assert_eq!(sharp(&big, &p), 0);
        prop_assert!(in_b(&big, &p));
    }

    #[test]
    fn enlarging_steps_are_single_moves((p, lam) in weight_at(2)) {
        let big = enlargement(&lam, &p);
        let steps = enlarging_procedure(&lam, &big, &p).unwrap();
        let mut cur = lam.clone();
        for s in &steps {
            prop_assert_eq!(&s.from, &cur);
            prop_assert_eq!(&s.mv.apply(&cur), &s.to);
            if let (MoveTag::Lower, Move::S(i)) = (&s.tag, &s.mv) {
                prop_assert!(is_intertwined_swap(&s.from, *i, &p));
            }
            cur = s.to.clone();
        }
        prop_assert_eq!(cur, big);
    }

    #[test]
    fn specialization_is_a_homomorphism(p in point(), a in scalar(), b in scalar()) {
        if is_regular_at_spec(&a, &p) && is_regular_at_spec(&b, &p) {
            let (sa, sb) = (specialize(&a, &p).unwrap(), specialize(&b, &p).unwrap());
            prop_assert_eq!(specialize(&a.add(&b), &p).unwrap(), sa.add(&sb));
            prop_assert_eq!(specialize(&a.mul(&b), &p).unwrap(), sa.mul(&sb));
        }
    }

    #[test]
    fn zeta_is_additive(p in point(), a in scalar(), b in scalar()) {
        if !a.is_zero() && !b.is_zero() {
            let z = zeta_series(&a.mul(&b), &p).unwrap();
            prop_assert_eq!(z, zeta_series(&a, &p).unwrap() + zeta_series(&b, &p).unwrap());
        }
    }

    #[test]
    fn regular_scalars_have_no_pole(p in point(), a in scalar()) {
        if !a.is_zero() && is_regular_at_spec(&a, &p) {
            prop_assert!(zeta_series(&a, &p).unwrap() >= 0);
        }
    }

    #[test]
    fn factored_zeta_matches_series(p in point(), f in factored()) {
        prop_assert_eq!(zeta_factored(&f, &p), zeta_series(&f.expand(), &p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn operator_relations_hold(n in 2usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_laurent(&mut rng, n, 2, 3);
        for (name, ok) in relation_checks(&f) {
            prop_assert!(ok, "{} fails on {}", name, f);
        }
    }

    #[test]
    fn key_lemma_on_random_swaps(lam in weight(3, 4), i in 0usize..2) {
        let p = ParamSpec::new(3, 1, 2).unwrap();
        let up = si_act(&lam, i);
        if succ(&up, &lam) {
            let (e, f) = u_ratio(&lam, i);
            let (before, after) = (sharp(&lam, &p), sharp(&up, &p));
            if after < before {
                prop_assert!(p.is_unit_monomial(e + 2, f));
            }
            if after > before {
                prop_assert!(p.is_unit_monomial(e - 2, f));
            }
            let step = zeta_u0(&up, &p).unwrap() - zeta_u0(&lam, &p).unwrap();
            prop_assert!(step.abs() <= 1);
            prop_assert_eq!(step == 1, p.is_unit_monomial(e + 2, f));
            prop_assert_eq!(step == -1, p.is_unit_monomial(e, f));
        }
    }

    #[test]
    fn basis_combinations_satisfy_both_ideal_forms(p in point(), coeffs in prop::collection::vec(-3i64..=3, 1..5)) {
        let basis = basis_b_specialized(&p, 1).unwrap();
        let mut f = LaurentPoly::<SpecScalar>::zero(p.n());
        for ((_, e), c) in basis.iter().zip(&coeffs) {
            f = f.add(&e.scale(&SpecScalar::from_cyclo(CycloElem::rational(Rat::from_int(*c)))));
        }
        prop_assert_eq!(equivalent_definitions(&f, &p, 2), (true, true));
    }

    #[test]
    fn ideal_forms_agree_on_wheel_weights(lam in weight(3, 1)) {
        let p = ParamSpec::new(3, 1, 2).unwrap();
        if !in_b(&lam, &p) {
            if let Ok(e) = e_specialized(&lam, &p) {
                let (wheel_form, point_form) = equivalent_definitions(&e, &p, 2);
                prop_assert_eq!(wheel_form, point_form);
            }
        }
    }
}

#[test]
fn quotient_dimension_grows_with_the_box() {
    for (n, k, r) in [(2, 1, 2), (2, 1, 3), (3, 1, 2)] {
        let p = ParamSpec::new(n, k, r).unwrap();
        let dims: Vec<usize> = (0..=2)
            .map(|b| quotient_dimension(&p, b).unwrap())
            .collect();
        assert!(
            dims.windows(2).all(|w| w[0] <= w[1]),
            "{n} {k} {r}: {dims:?}"
        );
    }
}
