//! Property tests for the power-series algebra: ring laws, involutions,
//! reversion round trips, and the hand-derived reversion coefficients.

use motzkin_shadows::motzkin::{expand_closed_form, ClosedForm};
use motzkin_shadows::series::{ratio, rational, ExactRational, PowerSeries};
use proptest::prelude::*;

fn series_of_order(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-9i64..=9, order + 1).prop_map(|v| PowerSeries::from_integers(&v))
}

/// Admissible for reversion: zero constant term, non-zero linear term with
/// |linear| <= 3.
fn admissible_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    let linear = prop::sample::select(vec![1i64, -1, 2, -2, 3, -3]);
    let tail = prop::collection::vec(-5i64..=5, order - 1);
    (linear, tail).prop_map(|(linear, tail)| {
        let mut coeffs = vec![0, linear];
        coeffs.extend(tail);
        PowerSeries::from_integers(&coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn add_and_mul_are_commutative(f in series_of_order(30), g in series_of_order(30)) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
    }

    #[test]
    fn add_and_mul_are_associative(
        f in series_of_order(30),
        g in series_of_order(30),
        h in series_of_order(30),
    ) {
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn mul_distributes_over_add(
        f in series_of_order(30),
        g in series_of_order(30),
        h in series_of_order(30),
    ) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn sqrt_round_trips_on_perfect_squares(f in series_of_order(20)) {
        // Force a unit constant term so the square has one too.
        let mut coeffs = f.coefficients().to_vec();
        coeffs[0] = rational(1);
        let g = PowerSeries::from_rationals(coeffs);
        let square = g.mul(&g);
        prop_assert_eq!(square.sqrt().unwrap(), g);
    }

    #[test]
    fn sign_invert_and_negate_argument_are_involutions(f in series_of_order(25)) {
        prop_assert_eq!(f.sign_invert().sign_invert(), f.clone());
        prop_assert_eq!(f.negate_argument().negate_argument(), f.clone());
        prop_assert_eq!(f.sign_invert(), f.negate_argument().neg());
    }

    #[test]
    fn shift_up_then_down_is_identity(f in series_of_order(15), k in 0i64..=4) {
        prop_assert_eq!(f.shift(k).unwrap().shift(-k).unwrap(), f);
    }

    #[test]
    fn reversion_round_trips(f in admissible_series(14)) {
        let r = f.reversion().unwrap();
        let x = PowerSeries::x(14);
        prop_assert_eq!(f.compose(&r).unwrap(), x.clone());
        prop_assert_eq!(r.compose(&f).unwrap(), x);
        prop_assert_eq!(r.reversion().unwrap(), f);
    }

    #[test]
    fn reversion_commutes_with_sign_inversion(f in admissible_series(16)) {
        prop_assert_eq!(
            f.sign_invert().reversion().unwrap(),
            f.reversion().unwrap().sign_invert()
        );
    }

    #[test]
    fn reversion_matches_hand_formulas(f in admissible_series(8)) {
        let r = f.reversion().unwrap();
        prop_assert_eq!(r.coeff(1), &hand_coefficients(&f)[0]);
        prop_assert_eq!(r.coeff(2), &hand_coefficients(&f)[1]);
        prop_assert_eq!(r.coeff(3), &hand_coefficients(&f)[2]);
        prop_assert_eq!(r.coeff(4), &hand_coefficients(&f)[3]);
    }
}

/// First four reversion coefficients worked out by hand from coefficient
/// matching: an independent check on the triangular solver.
fn hand_coefficients(f: &PowerSeries) -> [ExactRational; 4] {
    let a = f.coeff(1);
    let b = f.coeff(2);
    let c = f.coeff(3);
    let d = f.coeff(4);
    let a_inv = a.recip();
    let cap_a = a_inv.clone();
    let cap_b = -(b * a_inv.pow(3));
    let cap_c = rational(2) * b * b * a_inv.pow(5) - c * a_inv.pow(4);
    let cap_d = rational(5) * b * c * a_inv.pow(6)
        - d * a_inv.pow(5)
        - rational(5) * b * b * b * a_inv.pow(7);
    [cap_a, cap_b, cap_c, cap_d]
}

#[test]
fn hand_formulas_on_the_shifted_shadow_series() {
    // Leading coefficients 1, 1, 0, -2 revert to 1, -1, 2, -3.
    let f = PowerSeries::from_integers(&[0, 1, 1, 0, -2, -3, 1, 11, 15]);
    let expected = [rational(1), rational(-1), rational(2), rational(-3)];
    assert_eq!(hand_coefficients(&f), expected);
}

#[test]
fn hand_formulas_with_non_unit_linear_coefficient() {
    // Reverting 2x gives x/2.
    let f = PowerSeries::from_integers(&[0, 2, 0, 0, 0]);
    let r = f.reversion().unwrap();
    assert_eq!(r.coeff(1), &ratio(1, 2));
    assert_eq!(hand_coefficients(&f)[0], ratio(1, 2));
}

#[test]
fn commutation_on_the_shifted_shadow_series_at_order_50() {
    let order = 50;
    let shadow = expand_closed_form(ClosedForm::Shadow, order - 1).unwrap();
    let xs = shadow.shift(1).unwrap();
    assert_eq!(
        xs.sign_invert().reversion().unwrap(),
        xs.reversion().unwrap().sign_invert()
    );
}
