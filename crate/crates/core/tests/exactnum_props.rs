use num_bigint::BigInt;
use proptest::prelude::*;
use romik::exactnum::rational::rat;
use romik::exactnum::{
    berggren_inverse, berggren_matrix, lorentz_pairing, reflection_h, reflection_u, square_part, tower_sign, Mat3,
    QuadTower, Vec3, ZRoot2,
};
use romik::Rational;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| rat(n, d))
}

fn zroot2() -> impl Strategy<Value = ZRoot2> {
    (small_rat(), small_rat()).prop_map(|(a, b)| ZRoot2::new(a, b))
}

fn tower() -> impl Strategy<Value = QuadTower> {
    (zroot2(), zroot2(), 0u32..400).prop_map(|(b, c, d)| QuadTower::new(b, c, BigInt::from(d)))
}

proptest! {
    #[test]
    fn zroot2_ring(x in zroot2(), y in zroot2(), z in zroot2()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &x), &ZRoot2::zero());
        prop_assert_eq!(&x * &ZRoot2::one(), x.clone());
    }

    #[test]
    fn zroot2_norm(x in zroot2()) {
        let n = &x * &x.conj();
        prop_assert!(n.is_rational());
        prop_assert_eq!(n.rat.clone(), &x.rat * &x.rat - rat(2, 1) * &x.irr * &x.irr);
        prop_assert_eq!(n.rat, x.norm());
    }

    #[test]
    fn zroot2_inverse(x in zroot2()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.recip().unwrap(), ZRoot2::one());
    }

    #[test]
    fn tower_normal_form_is_idempotent(x in tower()) {
        let again = QuadTower::new(x.base().clone(), x.coeff().clone(), x.disc().clone());
        prop_assert_eq!(again.base(), x.base());
        prop_assert_eq!(again.coeff(), x.coeff());
        prop_assert_eq!(again.disc(), x.disc());
    }

    #[test]
    fn tower_field_ops(x in tower(), c in zroot2(), d in zroot2()) {
        let y = QuadTower::new(c, d, x.disc().clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assume!(!y.is_zero());
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
    }

    #[test]
    fn berggren_preserves_pairing(x in (-50i64..50, -50i64..50, -50i64..50), y in (-50i64..50, -50i64..50, -50i64..50), d in 1u8..4) {
        let (x, y) = (Vec3::ints(x.0, x.1, x.2).to_rational(), Vec3::ints(y.0, y.1, y.2).to_rational());
        let p = lorentz_pairing(&x, &y);
        for m in [berggren_matrix(d), berggren_inverse(d), reflection_h(), reflection_u(d)] {
            prop_assert_eq!(lorentz_pairing(&m.apply(&x), &m.apply(&y)), p.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn tower_sign_matches_intervals(x in tower()) {
        prop_assert_eq!(tower_sign(&x), x.numeric_sign());
        if !x.is_zero() {
            let iv = x.to_interval(180);
            if let Some(s) = iv.sign() {
                prop_assert_eq!(s, tower_sign(&x));
            }
        }
    }
}

#[test]
fn reflections() {
    let id = Mat3::identity();
    assert_eq!(&reflection_h() * &reflection_h(), id);
    for d in 1..=3 {
        assert_eq!(&reflection_u(d) * &reflection_u(d), id);
        assert_eq!(&reflection_h() * &reflection_u(d), berggren_matrix(d));
        assert_eq!(&berggren_matrix(d) * &berggren_inverse(d), id);
    }
}

#[test]
fn square_part_examples() {
    assert_eq!(square_part(&BigInt::from(4896)), (BigInt::from(12), BigInt::from(34)));
    assert_eq!(square_part(&BigInt::from(1)), (BigInt::from(1), BigInt::from(1)));
    assert_eq!(square_part(&BigInt::from(2)), (BigInt::from(1), BigInt::from(2)));
}
