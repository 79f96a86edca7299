//! Small values computed once and cross-checked by hand against the
//! eigenvalue equations; frozen here so regressions show up as diffs.

use daha_wheel::compositions::{enumerate_box, BoxFilter};
use daha_wheel::macdonald::{check_duality, e_generic, e_specialized, zeta_u0};
use daha_wheel::polyrep::LaurentPoly;
use daha_wheel::scalars::{BiPoly, CycloElem, GenericScalar, ParamSpec, Rat, SpecScalar, WPoly};
use daha_wheel::wheel_ideal::{ideal_in_box, quotient_dimension, Direction};

/// `q^j (t - 1) / (q^j t - 1)`, with `t = a^2`.
fn ratio(j: i32) -> GenericScalar {
    let num = BiPoly::mono(2, j).sub(&BiPoly::mono(0, j));
    let den = BiPoly::mono(2, j).sub(&BiPoly::one());
    GenericScalar::from_fraction(num, &den)
}

#[test]
fn rank_one_polynomials_in_two_variables() {
    assert_eq!(*e_generic(&[0, 1]).unwrap(), LaurentPoly::x_pow(&[0, 1]));
    assert_eq!(*e_generic(&[-1, 0]).unwrap(), LaurentPoly::x_pow(&[-1, 0]));

    let e = e_generic(&[1, 0]).unwrap();
    assert_eq!(e.len(), 2);
    assert!(e.coeff_of(&[1, 0]).is_one());
    assert_eq!(e.coeff_of(&[0, 1]), ratio(1));
}

#[test]
fn degree_two_coefficient() {
    let e = e_generic(&[2, 0]).unwrap();
    assert_eq!(e.len(), 3);
    assert_eq!(e.coeff_of(&[0, 2]), ratio(2));
}

#[test]
fn specialized_polynomial_at_one_two() {
    let p = ParamSpec::new(3, 1, 2).unwrap();
    let e = e_specialized(&[0, 0, 2], &p).unwrap();
    let minus_t = SpecScalar::from_poly(WPoly::monomial(CycloElem::rational(Rat::from_int(-1)), 2));
    assert_eq!(e.len(), 3);
    assert!(e.coeff_of(&[0, 0, 2]).is_polynomial());
    assert_eq!(e.coeff_of(&[1, 0, 1]), minus_t);
    assert_eq!(e.coeff_of(&[0, 1, 1]), minus_t);
}

#[test]
fn wheel_free_weights_in_the_smallest_box() {
    let p = ParamSpec::new(2, 1, 2).unwrap();
    let b = enumerate_box(&p, 1, BoxFilter::B);
    assert_eq!(b, vec![vec![0, -1], vec![-1, 1], vec![1, -1], vec![1, 0]]);
    assert_eq!(enumerate_box(&p, 1, BoxFilter::S).len(), 5);
    assert_eq!(quotient_dimension(&p, 1).unwrap(), 4);
    assert_eq!(ideal_in_box(&p, 1, 1, Direction::Ascending).len(), 4);
}

#[test]
fn spread_out_weight_has_one_vanishing_factor() {
    let p = ParamSpec::new(3, 1, 2).unwrap();
    assert_eq!(zeta_u0(&[0, 5, 10], &p).unwrap(), 1);
}

#[test]
fn duality_on_fixed_pairs() {
    for (l, m) in [
        (vec![1, 0], vec![0, 1]),
        (vec![2, -1, 0], vec![0, 1, 1]),
        (vec![-1, 2, 0], vec![1, 1, -2]),
    ] {
        assert!(check_duality(&l, &m).unwrap(), "{l:?} {m:?}");
    }
}
