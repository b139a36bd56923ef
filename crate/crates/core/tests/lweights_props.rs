//! l-weight algebra, reflection and triviality structure, and negative
//! controls showing the comparisons can fail.

use proptest::prelude::*;

use qloop::borelrep::RepSpec;
use qloop::exactfield::{pade, QRational};
use qloop::fock::occupations;
use qloop::lweights::{
    closed_psi, factor_sides, lweight_product, phi_series, prefundamental, shift_weight,
    FactorCheck, LWeight, PhiEngine, Weight,
};

const L: usize = 3;

prop_compose! {
    fn any_lweight()(
        omega in prop::collection::vec(-3i64..=3, L),
        pref in prop::collection::vec((1usize..=L, any::<bool>(), -3i64..=3, 1i64..=3), 0..4),
    ) -> LWeight {
        pref.into_iter().fold(shift_weight(&Weight::new(omega)), |acc, (i, plus, k, c)| {
            let x = QRational::monomial(c, k);
            lweight_product(&acc, &prefundamental(L, i, plus, &x).unwrap()).unwrap()
        })
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative_associative_unital(
        x in any_lweight(), y in any_lweight(), z in any_lweight()
    ) {
        let p = |a: &LWeight, b: &LWeight| lweight_product(a, b).unwrap();
        prop_assert_eq!(p(&x, &y), p(&y, &x));
        prop_assert_eq!(p(&p(&x, &y), &z), p(&x, &p(&y, &z)));
        prop_assert_eq!(p(&x, &LWeight::trivial(L)), x.clone());
        // The constant-term law survives products.
        let xy = p(&x, &y);
        prop_assert!(LWeight::new(xy.weight().clone(), xy.psi().to_vec()).is_ok());
    }

    #[test]
    fn plus_and_minus_prefundamentals_cancel(i in 1usize..=L, k in -4i64..=4) {
        let x = QRational::q_pow(k);
        let p = lweight_product(
            &prefundamental(L, i, true, &x).unwrap(),
            &prefundamental(L, i, false, &x).unwrap(),
        ).unwrap();
        prop_assert_eq!(p, LWeight::trivial(L));
    }
}

#[test]
fn reflected_family_is_reflected_series() {
    for l in 1..=3 {
        let sign = QRational::from_int(if l % 2 == 0 { -1 } else { 1 });
        for a in 1..=l + 1 {
            let bar = RepSpec::new(l, a, true).unwrap();
            let plain = RepSpec::new(l, l + 2 - a, false).unwrap();
            for m in occupations(l, 1) {
                for i in 1..=l {
                    let lhs = phi_series(i, &bar, &m, 5).unwrap();
                    let rhs = phi_series(l + 1 - i, &plain, &m, 5)
                        .unwrap()
                        .rescale_variable(&sign);
                    assert_eq!(lhs, rhs, "l={l} a={a} i={i} m={m:?}");
                }
            }
        }
    }
}

/// Cells `(a, i)` where the eigenvalue is a pure power of q for every `m`.
fn constant_cell(l: usize, a: usize, i: usize) -> bool {
    (a == l + 1 && i < l) || (2 <= a && a <= l && i + 2 <= a)
}

#[test]
fn triviality_blocks() {
    for l in 1..=3 {
        for a in 1..=l + 1 {
            let spec = RepSpec::new(l, a, false).unwrap();
            let mut engine = PhiEngine::new(&spec);
            for i in 1..=l {
                let is_const = |s: &qloop::exactfield::USeries| {
                    (1..=s.order()).all(|k| s.coeff(k).is_zero())
                };
                if constant_cell(l, a, i) {
                    for m in occupations(l, 2) {
                        let s = engine.phi_series(i, &m, 6).unwrap();
                        assert!(is_const(&s), "l={l} a={a} i={i} m={m:?}");
                    }
                } else {
                    let s = engine.phi_series(i, &vec![1; l], 6).unwrap();
                    assert!(!is_const(&s), "l={l} a={a} i={i}");
                }
            }
        }
    }
}

#[test]
fn vacuum_of_theta_1_is_shifted_prefundamental() {
    for l in 1..=3 {
        let spec = RepSpec::new(l, 1, false).unwrap();
        let lw = PhiEngine::new(&spec).lweight(&vec![0; l], 6).unwrap();
        assert_eq!(lw.weight(), &Weight::omega(l, 1).scaled(-(l as i64 + 1)));
        let expected = lweight_product(
            &shift_weight(&Weight::omega(l, 1).scaled(-(l as i64 + 1))),
            &prefundamental(l, 1, false, &QRational::q_pow(-(l as i64))).unwrap(),
        )
        .unwrap();
        assert_eq!(lw, expected);
    }
}

// ---------------------------------------------------------------- negative controls

#[test]
fn wrong_spectral_parameter_is_detected() {
    let l = 2;
    for a in 1..=l + 1 {
        let twisted = RepSpec::with_zs(l, a, false, QRational::q()).unwrap();
        let plain = RepSpec::new(l, a, false).unwrap();
        let m = vec![1; l];
        let mut differs = false;
        for i in 1..=l {
            let s = phi_series(i, &twisted, &m, 6).unwrap();
            let wrong = closed_psi(i, &plain, &m).unwrap().expand(6);
            let right = closed_psi(i, &twisted, &m).unwrap().expand(6);
            assert_eq!(s, right);
            differs |= s != wrong;
        }
        assert!(differs, "a={a}");
    }
}

#[test]
fn neighbouring_family_closed_form_is_rejected() {
    let l = 3;
    let m = vec![1, 0, 2];
    for a in 1..=l {
        let here = RepSpec::new(l, a, false).unwrap();
        let next = RepSpec::new(l, a + 1, false).unwrap();
        let mismatches = (1..=l)
            .filter(|&i| {
                phi_series(i, &here, &m, 6).unwrap() != closed_psi(i, &next, &m).unwrap().expand(6)
            })
            .count();
        assert!(mismatches > 0, "a={a}");
    }
}

#[test]
fn reflection_without_sign_is_rejected_for_even_rank() {
    let l = 2;
    let bar = RepSpec::new(l, l + 1, true).unwrap();
    let plain = RepSpec::new(l, 1, false).unwrap();
    let m = vec![1, 1];
    let lhs = phi_series(l, &bar, &m, 5).unwrap();
    let unsigned = phi_series(1, &plain, &m, 5).unwrap();
    assert_ne!(lhs, unsigned);
}

#[test]
fn underdetermined_pade_is_rejected() {
    let spec = RepSpec::new(2, 1, false).unwrap();
    let s = phi_series(1, &spec, &[1, 1], 6).unwrap();
    assert!(pade(&s, 1, 1).is_err());
    assert!(pade(&s, 2, 2).is_ok());
}

#[test]
fn shifted_spectral_parameter_breaks_factorization() {
    let l = 2;
    let q = QRational::q_pow;
    let (lhs, rhs) = factor_sides(l, &FactorCheck::PrefMinus { i: 2, zs: q(0) }).unwrap();
    assert_eq!(lhs, rhs);
    let (lhs2, _) = factor_sides(l, &FactorCheck::PrefMinus { i: 2, zs: q(2) }).unwrap();
    assert_ne!(lhs2, rhs);
}

#[test]
fn vacuum_is_annihilated_by_xi_plus() {
    use qloop::borelrep::Representation;
    use qloop::fock::FockState;
    use qloop::rootvectors::RootVectors;
    for l in 1..=3 {
        for a in 1..=l + 1 {
            for bar in [false, true] {
                let spec = RepSpec::new(l, a, bar).unwrap();
                let mut ev = Representation::new(&spec).evaluator();
                let mut rv = RootVectors::new(l);
                let v = FockState::vacuum(l);
                // Not vacuous: some xi+ moves a non-vacuum vector.
                let w = FockState::basis(vec![1; l]);
                let moves = (1..=l)
                    .flat_map(|i| (0..=3).map(move |n| (i, n)))
                    .any(|(i, n)| !ev.apply(&rv.xi_plus(i, n).unwrap(), &w).is_zero());
                assert!(moves, "l={l} a={a} bar={bar}");
                for i in 1..=l {
                    for n in 0..=3 {
                        let x = rv.xi_plus(i, n).unwrap();
                        assert!(
                            ev.apply(&x, &v).is_zero(),
                            "l={l} a={a} bar={bar} i={i} n={n}"
                        );
                    }
                }
            }
        }
    }
}
