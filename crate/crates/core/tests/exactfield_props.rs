use proptest::prelude::*;

use qloop::exactfield::json::{qrational_from_json, qrational_to_json};
use qloop::exactfield::{pade, qnum, IntPoly, QRational, UPoly, URational, USeries};
use qloop::Error;

fn laurent(coeffs: &[i64], shift: i64) -> QRational {
    let p = QRational::from_parts(IntPoly::from_i64s(coeffs), IntPoly::one());
    p * QRational::q_pow(shift)
}

prop_compose! {
    fn any_qrational()(
        num in prop::collection::vec(-4i64..=4, 0..4),
        den in prop::collection::vec(-3i64..=3, 1..3),
        den_lead in 1i64..=3,
        shift in -3i64..=3,
        scale in 1i64..=3,
    ) -> QRational {
        let mut d = den;
        d.push(den_lead);
        laurent(&num, shift) / laurent(&d, 0) * QRational::from_ratio(1, scale).unwrap()
    }
}

prop_compose! {
    fn nonzero_qrational()(x in any_qrational().prop_filter("nonzero", |x| !x.is_zero())) -> QRational {
        x
    }
}

prop_compose! {
    fn any_series(order: usize)(
        c0 in nonzero_qrational(),
        rest in prop::collection::vec(any_qrational(), order),
    ) -> USeries {
        let mut cs = vec![c0];
        cs.extend(rest);
        USeries::new(cs, order)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in any_qrational(), b in any_qrational(), c in any_qrational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, QRational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * a.inv().unwrap(), QRational::one());
        }
    }

    #[test]
    fn canonical_form_is_structural(a in any_qrational(), b in nonzero_qrational()) {
        // (a*b)/b must be literally the same representation as a.
        let back = (&a * &b) / &b;
        prop_assert_eq!(back.numer(), a.numer());
        prop_assert_eq!(back.denom(), a.denom());
        prop_assert_eq!(back.scale(), a.scale());
    }

    #[test]
    fn qnum_symmetries(n in -12i64..=12) {
        prop_assert_eq!(qnum(-n), -qnum(n));
        prop_assert_eq!(qnum(n).bar(), qnum(n));
    }

    #[test]
    fn bar_is_a_field_automorphism(a in any_qrational(), b in any_qrational()) {
        prop_assert_eq!((&a * &b).bar(), a.bar() * b.bar());
        prop_assert_eq!((&a + &b).bar(), a.bar() + b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn invert_is_an_involution(s in any_series(4)) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(inv.invert().unwrap(), s.clone());
        prop_assert_eq!(s.mul(&inv), USeries::one(4));
    }

    #[test]
    fn log_derivative_identity(rest in prop::collection::vec(any_qrational(), 4)) {
        let mut cs = vec![QRational::one()];
        cs.extend(rest);
        let s = USeries::new(cs, 4);
        let lg = s.log().unwrap();
        prop_assert!(lg.coeff(0).is_zero());
        prop_assert_eq!(s.mul(&lg.derivative()), s.derivative());
        prop_assert_eq!(lg.exp().unwrap(), s);
    }

    #[test]
    fn pade_round_trip(
        n0 in nonzero_qrational(),
        n1 in any_qrational(),
        d1 in any_qrational(),
        d2 in any_qrational(),
    ) {
        let r = URational::new(
            UPoly::new(vec![n0, n1]),
            UPoly::new(vec![QRational::one(), d1, d2]),
        ).unwrap();
        let s = r.expand(6);
        let back = pade(&s, 2, 2).unwrap();
        prop_assert_eq!(back.expand(6), s);
        prop_assert_eq!(back, r);
    }

    #[test]
    fn json_round_trip(a in any_qrational()) {
        prop_assert_eq!(qrational_from_json(&qrational_to_json(&a)).unwrap(), a);
    }
}

#[test]
fn pade_of_simple_pole() {
    let q = QRational::q_pow;
    let target = URational::one_minus_pow(q(-1), true).scale(&q(-2));
    let r = pade(&target.expand(4), 0, 1).unwrap();
    assert_eq!(r.numerator(), &UPoly::constant(q(-2)));
    assert_eq!(r.denominator(), &UPoly::one_minus(q(-1)));
}

#[test]
fn series_errors() {
    let zero_const = USeries::new(vec![QRational::zero(), QRational::one()], 2);
    assert_eq!(zero_const.invert(), Err(Error::ZeroConstantTerm));
    let two = USeries::constant(QRational::from_int(2), 2);
    assert_eq!(two.log(), Err(Error::ConstantTermNotOne));
    assert!(matches!(
        pade(&USeries::one(2), 2, 2),
        Err(Error::SeriesTooShort { .. })
    ));
}

#[test]
fn log_of_linear_factor() {
    let a = QRational::from_ratio(3, 2).unwrap() * QRational::q();
    let s = USeries::new(vec![QRational::one(), a.clone()], 3);
    let lg = s.log().unwrap();
    assert_eq!(lg.coeff(1), &a);
    assert_eq!(lg.coeff(2), &(-(&a * &a) * QRational::from_ratio(1, 2).unwrap()));
    assert_eq!(lg.coeff(3), &(&a * &a * &a * QRational::from_ratio(1, 3).unwrap()));
    let cancel = s.invert().unwrap().mul(&s).log().unwrap();
    assert!(cancel.is_zero());
}
