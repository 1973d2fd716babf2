use std::collections::BTreeSet;

use num_bigint::BigInt;
use romik::cohn::{
    cohn_matrix, digit_matrix, fixed_point_coordinates, markoff_number, matrix_a, matrix_b, q_trace_identity_check,
    MarkoffKind,
};
use romik::dynamics::orbit_digits;
use romik::exactnum::j_matrix;
use romik::exactnum::rational::rat;
use romik::markoff::{enumerate_markoff, is_markoff, markoff_sets, spectrum_below_2, triple_from_christoffel};
use romik::words::{christoffel, christoffel_tree, minimal_period, standard_factorization, ABWord, Kind, Letter};
use romik::{QuadTower, Rational, ZRoot2};

fn all_words(max_len: usize) -> Vec<ABWord> {
    let mut out = vec![];
    let mut level: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
        level = level.into_iter().flat_map(|w| [Letter::A, Letter::B].map(|l| [w.clone(), vec![l]].concat())).collect();
        out.extend(level.iter().map(|w| ABWord::new(w.clone()).unwrap()));
    }
    out
}

fn lower_slopes(max_sum: u64) -> Vec<(u64, u64)> {
    (2..=max_sum)
        .flat_map(|n| (1..n).map(move |t| (t, n - t)))
        .filter(|&(t, s)| num_integer::Integer::gcd(&t, &s) == 1)
        .collect()
}

#[test]
fn cohn_matrices_unimodular_with_parity() {
    let words = all_words(12);
    assert_eq!(words.len(), 8190);
    for w in &words {
        let m = cohn_matrix(w).unwrap().m;
        assert_eq!(m.det(), ZRoot2::one(), "{w}");
        for e in [m.p(), m.p_prime(), m.q(), m.q_prime()] {
            assert_eq!(e.sign(), 1, "{w}");
        }
        let (int_pair, root_pair) = if w.is_even() { ([m.p(), m.q_prime()], [m.p_prime(), m.q()]) } else { ([m.p_prime(), m.q()], [m.p(), m.q_prime()]) };
        assert!(int_pair.iter().all(|e| e.is_integer()), "{w}");
        assert!(root_pair.iter().all(|e| e.is_sqrt2_integer()), "{w}");
        // the digit product is N(w) or N(w)J
        let want = if w.is_even() { m.clone() } else { &m * &j_matrix() };
        assert_eq!(digit_matrix(w), want, "{w}");
    }
}

#[test]
fn commutator_trace() {
    let (a, b) = (matrix_a(), matrix_b());
    let c = &(&(&a * &b) * &a.inverse().unwrap()) * &b.inverse().unwrap();
    assert_eq!(c.trace(), ZRoot2::ints(-2, 0));
}

#[test]
fn trace_identity_on_christoffel_words() {
    let slopes = lower_slopes(30);
    assert_eq!(slopes.len(), 277);
    for (t, s) in slopes {
        let w = christoffel(t, s, Kind::Lower).unwrap();
        assert!(q_trace_identity_check(&w.word), "{}", w.word);
        let m = markoff_number(&w.word).unwrap();
        assert!(m >= BigInt::from(1));
    }
    // the identity is particular to lower words
    assert!(!q_trace_identity_check(&ABWord::parse("ba").unwrap()));
}

#[test]
fn fricke_relation() {
    for (t, s) in lower_slopes(20) {
        let w = christoffel(t, s, Kind::Lower).unwrap();
        let (u, v) = standard_factorization(&w).unwrap();
        let tr = |x: &ABWord| cohn_matrix(x).unwrap().m.trace();
        let (tu, tv, tw) = (tr(&u.word), tr(&v.word), tr(&w.word));
        let lhs = &(&(&tu * &tu) + &(&tv * &tv)) + &(&tw * &tw);
        assert_eq!(lhs, &(&tu * &tv) * &tw, "{}", w.word);
    }
}

#[test]
fn fixed_points_on_circle_and_reproduce_period() {
    for (t, s) in lower_slopes(9).into_iter().chain([(1, 0), (0, 1)]) {
        let w = christoffel(t, s, Kind::Lower).unwrap();
        let period = minimal_period(&w.word).unwrap().period().unwrap().to_vec();
        let p = fixed_point_coordinates(&period);
        assert_eq!(&(&p.x * &p.x) + &(&p.y * &p.y), QuadTower::one());
        let want: Vec<_> = period.iter().cycle().take(20).copied().collect();
        assert_eq!(orbit_digits(&p, 20), want, "{}", w.word);
    }
}

#[test]
fn markoff_equation_to_depth_12() {
    let ts = enumerate_markoff(12);
    assert_eq!(ts.len(), (1 << 13) - 1);
    assert!(ts.iter().all(|t| is_markoff(t.x(), t.y1(), t.y2())));
    let distinct: BTreeSet<_> = ts.iter().map(|t| t.to_string()).collect();
    assert_eq!(distinct.len(), ts.len());
}

#[test]
fn christoffel_tree_gives_markoff_tree() {
    let from_words: Vec<String> = christoffel_tree(8).iter().map(|n| triple_from_christoffel(&n.w).unwrap().to_string()).collect();
    let from_tree: Vec<String> = enumerate_markoff(8).iter().map(|t| t.to_string()).collect();
    let (a, b): (BTreeSet<_>, BTreeSet<_>) = (from_words.iter().collect(), from_tree.iter().collect());
    assert_eq!(a, b);
    assert_eq!(a.len(), from_words.len());
}

#[test]
fn spectrum_shape() {
    let sp = spectrum_below_2(50).unwrap();
    let (xs, ys) = markoff_sets(10);
    let four = Rational::from_integer(4.into());
    for (i, e) in sp.iter().enumerate() {
        let m = Rational::from_integer(e.markoff_number.clone());
        let want = match e.kind {
            MarkoffKind::X => &four - &(Rational::from_integer(1.into()) / (&m * &m)),
            MarkoffKind::Y => &four - &(Rational::from_integer(2.into()) / (&m * &m)),
        };
        assert_eq!(e.l_squared, want);
        assert!(e.l_squared < four);
        if i > 0 {
            assert!(e.l_squared > sp[i - 1].l_squared);
        }
        // L > 2 - 3/m^2
        let low = &Rational::from_integer(2.into()) - &(&rat(3, 1) / &(&m * &m));
        assert!(low.numer() < &BigInt::from(0) || e.l_squared > &low * &low, "{}", e.word.word);
        let pool = if e.kind == MarkoffKind::X { &xs } else { &ys };
        if e.markoff_number < *pool.last().unwrap() {
            assert!(pool.contains(&e.markoff_number), "{}", e.markoff_number);
        }
    }
    // 2x^2 = y^2 has no positive solutions, so kinds never share a value
    for x in &xs {
        for y in &ys {
            assert_ne!(BigInt::from(2) * x * x, y * y);
        }
    }
}
