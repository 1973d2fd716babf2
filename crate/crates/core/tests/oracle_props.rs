use std::cmp::Ordering;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use romik::cohn::lagrange_doubly_periodic;
use romik::dynamics::{word_norm, Digit, DigitWord, ExtReal};
use romik::exactnum::rational::rat;
use romik::oracle::{
    admissible_periodic, estimate_by_height, forbidden_blocks, perron_check, Admissibility, Witness,
};
use romik::{QuadTower, Rational};

fn random_tail(rng: &mut ChaCha8Rng) -> (Vec<Digit>, Vec<Digit>) {
    let head: Vec<Digit> = (0..rng.gen_range(0..5)).map(|_| rng.gen_range(1..=3)).collect();
    let period: Vec<Digit> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(1..=3)).collect();
    (head, period)
}

fn norm_with(prefix: &[Digit], (head, period): &(Vec<Digit>, Vec<Digit>)) -> ExtReal {
    let w = DigitWord::periodic([prefix, head].concat(), period.clone()).unwrap();
    word_norm(&w).unwrap()
}

fn fin(e: ExtReal) -> QuadTower {
    e.finite().cloned().expect("finite norm")
}

fn two_root2() -> QuadTower {
    &QuadTower::from_int(2) * &QuadTower::sqrt2()
}

#[test]
fn family_blocks_are_witnessed() {
    let fams = forbidden_blocks(13);
    assert_eq!(fams.len(), 4 + 2 * 5 + 2 * 11);
    for (block, family) in fams {
        // an even run between equal ends wraps onto 33 or 11 by itself
        let filler: &[Digit] = match family {
            "32^(2k)3" => &[1, 2, 1],
            "12^(2k)1" => &[3, 2, 3],
            _ => &[],
        };
        let period = [block.as_slice(), filler].concat();
        let r = admissible_periodic(&period).unwrap();
        assert_eq!(r.class, Admissibility::NotAdmissible, "{period:?}");
        match r.witness {
            Some(Witness::Block { block: b, family: f, .. }) => {
                assert_eq!(b, block);
                assert_eq!(f, family);
            }
            other => panic!("{period:?}: unexpected witness {other:?}"),
        }
        assert!(r.lagrange > ExtReal::Finite(QuadTower::from_int(2)), "{period:?}");
    }
}

fn all_periods(max_len: usize) -> Vec<Vec<Digit>> {
    let mut out = vec![];
    let mut level: Vec<Vec<Digit>> = vec![vec![]];
    for _ in 0..max_len {
        level = level.into_iter().flat_map(|w| [1, 2, 3].map(|d| [w.clone(), vec![d]].concat())).collect();
        out.extend(level.iter().cloned());
    }
    out
}

#[test]
fn classification_agrees_with_exact_value() {
    let two = ExtReal::Finite(QuadTower::from_int(2));
    let mut counts = [0usize; 3];
    for p in all_periods(8) {
        let r = admissible_periodic(&p).unwrap();
        let l = lagrange_doubly_periodic(&p);
        assert_eq!(r.lagrange, l);
        let want = match l.cmp(&two) {
            Ordering::Less => Admissibility::StronglyAdmissible,
            Ordering::Equal => Admissibility::Admissible,
            Ordering::Greater => Admissibility::NotAdmissible,
        };
        assert_eq!(r.class, want, "{p:?}: witness {:?}", r.witness.map(|w| w.to_string()));
        counts[want as usize] += 1;
    }
    // a periodic section P*2|31Q never has P = Q, so the value 2 is not hit
    assert_eq!(counts[1], 0);
    assert!(counts[0] > 50 && counts[2] > 9000, "{counts:?}");
}

#[test]
fn section_with_equal_tails_has_value_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(38);
    for _ in 0..1000 {
        let t = random_tail(&mut rng);
        let sum = &fin(norm_with(&[2], &t)) + &fin(norm_with(&[3, 1], &t));
        assert_eq!(sum, two_root2(), "{t:?}");
    }
}

#[test]
fn section_comparison_decides_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3813);
    for _ in 0..1000 {
        let (p, q) = (random_tail(&mut rng), random_tail(&mut rng));
        // L(P*2|31Q) <= 2  iff  ||2P|| <= 2 sqrt2 - ||31Q||
        let left = fin(norm_with(&[2], &p));
        let room = &two_root2() - &fin(norm_with(&[3, 1], &q));
        let at_most_two = left.exact_cmp(&room) != Ordering::Greater;
        assert_eq!(at_most_two, norm_with(&[], &p) >= norm_with(&[], &q), "{p:?} {q:?}");
    }
}

#[test]
fn section_upper_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(311);
    for _ in 0..1000 {
        let (p, q) = (random_tail(&mut rng), random_tail(&mut rng));
        // L(P*2|2Q) <= 2
        let a = fin(norm_with(&[2], &p));
        let b = &two_root2() - &fin(norm_with(&[2], &q));
        assert_ne!(a.exact_cmp(&b), Ordering::Greater, "{p:?} {q:?}");
        // L(P*13|1Q) <= 2, the left side read as 31P
        let a = fin(norm_with(&[3, 1], &p));
        let b = &two_root2() - &fin(norm_with(&[1], &q));
        assert_ne!(a.exact_cmp(&b), Ordering::Greater, "{p:?} {q:?}");
    }
}

#[test]
fn unwindowed_sweep_is_monotone() {
    for per in [vec![2], vec![3, 1], vec![3, 1, 2, 2]] {
        let p = DigitWord::purely_periodic(per.clone()).unwrap();
        let mut prev: Option<(Rational, Rational)> = None;
        for e in 6..14 {
            let r = estimate_by_height(&p, &(BigInt::from(1) << e), u64::MAX).unwrap();
            let cur = (r.estimate.lo_rational(), r.estimate.hi_rational());
            if let Some((lo, hi)) = &prev {
                assert!(cur.0 >= *lo && cur.1 >= *hi, "{per:?} at 2^{e}");
            }
            prev = Some(cur);
        }
    }
}

#[test]
fn perron_epsilon_tends_to_one() {
    let p = DigitWord::purely_periodic(vec![3, 1, 2, 2]).unwrap();
    let tol = rat(1, 1) / Rational::from_integer(BigInt::from(10).pow(30));
    let gaps: Vec<Rational> = (8..=40)
        .map(|k| {
            let r = perron_check(&p, k, 50).unwrap();
            assert!(r.exact, "k = {k}");
            assert!(r.residual.hi_rational() < tol, "k = {k}");
            let one = romik::exactnum::Interval::exact_int(&BigInt::from(1), r.epsilon.prec());
            r.epsilon.sub(&one).abs().hi_rational()
        })
        .collect();
    for (i, w) in gaps.windows(2).enumerate() {
        // equal when the boundary point does not move
        assert!(w[1] <= w[0], "k = {}", i + 9);
    }
    for (i, w) in gaps.windows(5).enumerate() {
        assert!(w[4] < w[0], "k = {}", i + 12);
    }
}
