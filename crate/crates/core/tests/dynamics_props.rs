mod common;

use common::TABLE;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use romik::dynamics::{
    berggren_level, cylinder_bounds, cylinder_norm_interval, delta_squared, delta_squared_by_distance,
    expand_rational, is_interior, mobius, orbit_digits, romik_map, stereo_norm, treal, triples_up_to_height,
    CirclePoint, DigitWord, ExtReal, PythTriple,
};
use romik::exactnum::{berggren_inverse, n_product, QuadTower};
use romik::oracle::best_approximant_check;

/// Primitive triple from Euclid parameters, legs swapped on request.
fn euclid() -> impl Strategy<Value = PythTriple> {
    (2i64..317, 1i64..316, any::<bool>())
        .prop_filter("primitive parameters", |(m, n, _)| n < m && (m - n) % 2 == 1 && m.gcd(n) == 1)
        .prop_filter("height bound", |(m, n, _)| m * m + n * n <= 100_000)
        .prop_map(|(m, n, swap)| {
            let (a, b, c) = (m * m - n * n, 2 * m * n, m * m + n * n);
            if swap {
                PythTriple::from_i64(b, a, c).unwrap()
            } else {
                PythTriple::from_i64(a, b, c).unwrap()
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn norm_conjugates_the_map(z in euclid()) {
        let p = CirclePoint::from_triple(&z);
        prop_assert_eq!(stereo_norm(&romik_map(&p)), treal(&stereo_norm(&p)));
    }

    #[test]
    fn expansions_rebuild_the_point(z in euclid()) {
        let (e1, e2) = expand_rational(&z).unwrap();
        prop_assert!(e1 != e2);
        let p = CirclePoint::from_triple(&z);
        for e in [e1, e2] {
            let n = romik::dynamics::word_norm(&e).unwrap();
            prop_assert_eq!(romik::dynamics::point_from_norm(&n), p.clone());
        }
    }
}

proptest! {
    #[test]
    fn delta_formulas_agree(z in euclid(), row in 0usize..10) {
        let p = romik::cohn::fixed_point_coordinates(&TABLE[row].digits());
        prop_assert_eq!(delta_squared(&p, &z), delta_squared_by_distance(&p, &z));
        let q = CirclePoint::from_triple(&z);
        let w = PythTriple::from_i64(3, 4, 5).unwrap();
        prop_assert_eq!(delta_squared(&q, &w), delta_squared_by_distance(&q, &w));
    }
}

#[test]
fn shift_is_inverse_berggren() {
    for row in &TABLE {
        let p = romik::cohn::fixed_point_coordinates(&row.digits());
        let digits = orbit_digits(&p, 20);
        let w = row.point_word();
        assert_eq!(digits, w.prefix(20), "{}", row.period);
        let mut v = p.lift();
        let mut cur = p.clone();
        for &d in &digits {
            v = berggren_inverse(d).apply(&v);
            cur = romik_map(&cur);
            let z = &v.0[2];
            assert!(z.sign() > 0);
            assert_eq!(&v.0[0] / z, cur.x);
            assert_eq!(&v.0[1] / z, cur.y);
        }
    }
}

#[test]
fn fixed_points_lie_on_the_circle() {
    for row in &TABLE {
        let p = romik::cohn::fixed_point_coordinates(&row.digits());
        assert_eq!(&(&p.x * &p.x) + &(&p.y * &p.y), QuadTower::one());
    }
}

#[test]
fn interior_points_are_higher() {
    for z in triples_up_to_height(&BigInt::from(10_000)) {
        if !is_interior(&z) {
            continue;
        }
        let (e1, e2) = expand_rational(&z).unwrap();
        for e in [e1, e2] {
            for k in 0..=6 {
                let (lo, hi) = cylinder_bounds(&e.prefix(k));
                if z == lo || z == hi {
                    continue;
                }
                let top = std::cmp::max(&lo.c, &hi.c);
                assert!(&z.c - top >= BigInt::from(2), "{z} in cylinder {:?}", e.prefix(k));
            }
        }
    }
}

fn all_words(k: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|w| (1..=3).map(move |d| [w.clone(), vec![d]].concat())).collect();
    }
    out
}

#[test]
fn cylinder_images() {
    for k in 1..=5 {
        for w in all_words(k) {
            let n = n_product(&w);
            let at0 = mobius(&n, &ExtReal::zero());
            let at_inf = mobius(&n, &ExtReal::Infinity);
            let twos = w.iter().filter(|&&d| d == 2).count();
            let expected = if twos % 2 == 0 { (at0.clone(), at_inf.clone()) } else { (at_inf.clone(), at0.clone()) };
            assert_eq!(cylinder_norm_interval(&w), expected, "{w:?}");
            let (z10, z01) = cylinder_bounds(&w);
            assert_eq!(stereo_norm(&CirclePoint::from_triple(&z10)), at0);
            assert_eq!(stereo_norm(&CirclePoint::from_triple(&z01)), at_inf);
        }
    }
}

#[test]
fn vee_symmetry_of_boundaries() {
    for row in &TABLE {
        let w = row.point_word();
        let p = romik::dynamics::point_of_word(&w).unwrap();
        let pv = romik::dynamics::point_of_word(&w.vee()).unwrap();
        assert_eq!(pv, p.vee());
        for k in 0..=30 {
            let z01 = cylinder_bounds(&w.prefix(k)).1;
            let z10v = cylinder_bounds(&w.vee().prefix(k)).0;
            assert_eq!(delta_squared(&p, &z01), delta_squared(&pv, &z10v));
        }
    }
}

#[test]
fn best_approximants_dominate() {
    let p = DigitWord::purely_periodic(vec![3, 1, 2, 2]).unwrap();
    let r = best_approximant_check(&p, &BigInt::from(200), 25).unwrap();
    assert!(r.counterexample.is_none());
}

#[test]
fn level_sizes() {
    let odd = PythTriple::from_i64(3, 4, 5).unwrap();
    assert_eq!(berggren_level(&odd, 2).len(), 9);
    assert_eq!(berggren_level(&odd, 1)[1], PythTriple::from_i64(21, 20, 29).unwrap());
}
