//! The acceptance suite: eleven end-to-end checks with fixed reference data
//! and tolerances. Used by the `verify` subcommand and the acceptance tests.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohn::{cohn_matrix, fixed_point_coordinates, q_trace_identity_check};
use crate::dynamics::{
    berggren_level, parse_digits, romik_map, stereo_norm, treal, CirclePoint, Digit, DigitWord, ExtReal, PythTriple,
};
use crate::exactnum::rational::rat;
use crate::exactnum::{berggren_matrix, lorentz_pairing, reflection_h, reflection_u, Interval, Vec3};
use crate::markoff::{enumerate_markoff, is_markoff, spectrum_below_2, triple_from_christoffel, MarkoffTriple};
use crate::oracle::{
    admissible_periodic, best_approximant_check, estimate_by_cylinders, estimate_by_height, forbidden_blocks,
    perron_check, Admissibility, Witness,
};
use crate::words::{christoffel, christoffel_tree, standard_factorization, Kind};
use crate::{QuadTower, Rational};

/// Reference row: word, minimal period, kind, Markoff number, `L^2`, `L` to
/// nine decimals.
pub struct TableRow {
    pub word: &'static str,
    pub period: &'static str,
    pub kind: &'static str,
    pub m: u64,
    pub l2: (i64, i64),
    pub decimal: &'static str,
}

const fn row(
    word: &'static str,
    period: &'static str,
    kind: &'static str,
    m: u64,
    l2: (i64, i64),
    decimal: &'static str,
) -> TableRow {
    TableRow { word, period, kind, m, l2, decimal }
}

pub const TABLE: [TableRow; 10] = [
    row("b", "2", "y", 1, (2, 1), "1.414213562"),
    row("a", "31", "x", 1, (3, 1), "1.732050808"),
    row("ab", "312132", "y", 3, (34, 9), "1.943650632"),
    row("abb", "3122", "x", 5, (99, 25), "1.989974874"),
    row("aab", "3131213132", "y", 11, (482, 121), "1.995863491"),
    row("abbb", "3122213222", "y", 17, (1154, 289), "1.998269147"),
    row("aaab", "31313121313132", "y", 41, (6722, 1681), "1.999702536"),
    row("abbbb", "312222", "x", 29, (3363, 841), "1.999702713"),
    row("ababb", "31213221323122", "y", 59, (13922, 3481), "1.999856358"),
    row("aabab", "31312132", "x", 65, (16899, 4225), "1.999940828"),
];

impl TableRow {
    pub fn digits(&self) -> Vec<Digit> {
        parse_digits(self.period).expect("table periods are digit strings")
    }

    pub fn lagrange(&self) -> QuadTower {
        QuadTower::sqrt_rational(&rat(self.l2.0, self.l2.1))
    }
}

const MARKOFF_TREE: [(i64, i64, i64); 15] = [
    (1, 3, 1),
    (5, 3, 1),
    (1, 11, 3),
    (5, 17, 1),
    (5, 3, 59),
    (65, 11, 3),
    (1, 41, 11),
    (29, 17, 1),
    (5, 17, 339),
    (349, 3, 59),
    (5, 1177, 59),
    (65, 769, 3),
    (65, 2857, 11),
    (901, 41, 11),
    (1, 41, 153),
];

const PYTHAGOREAN_LEVELS: [[(i64, i64, i64); 12]; 2] = [
    [
        (15, 8, 17),
        (21, 20, 29),
        (5, 12, 13),
        (35, 12, 37),
        (65, 72, 97),
        (33, 56, 65),
        (77, 36, 85),
        (119, 120, 169),
        (39, 80, 89),
        (45, 28, 53),
        (55, 48, 73),
        (7, 24, 25),
    ],
    [
        (12, 5, 13),
        (20, 21, 29),
        (8, 15, 17),
        (24, 7, 25),
        (48, 55, 73),
        (28, 45, 53),
        (80, 39, 89),
        (120, 119, 169),
        (36, 77, 85),
        (56, 33, 65),
        (72, 65, 97),
        (12, 35, 37),
    ],
];

/// Result of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    /// One line: `PASS [n] name (time): detail`.
    pub fn line(&self) -> String {
        format!(
            "{} [{:>2}] {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": self.elapsed.as_secs_f64(),
        })
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub const NAMES: [&str; 11] = [
    "top-10 spectrum table",
    "fixed point coordinates",
    "Markoff and Pythagorean trees",
    "Markoff equation to depth 12",
    "trace and Fricke identities",
    "Christoffel-Markoff correspondence",
    "conjugacy and orthogonality",
    "oracle agreement",
    "Perron residual",
    "forbidden blocks and table admissibility",
    "best approximants",
];

/// Runs criterion `id` (1 to 11).
pub fn run(id: usize) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => spectrum_table(),
        2 => coordinates(),
        3 => trees(),
        4 => markoff_equation(),
        5 => identities(),
        6 => correspondence(),
        7 => conjugacy(),
        8 => oracle_agreement(),
        9 => perron(),
        10 => admissibility(),
        11 => approximants(),
        _ => Err(format!("no criterion {id}")),
    };
    let elapsed = start.elapsed();
    let name = NAMES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown");
    let limit = match id {
        1 => Some(Duration::from_secs(1)),
        4 => Some(Duration::from_secs(5)),
        8 => Some(Duration::from_secs(60)),
        _ => None,
    };
    let (passed, detail) = match (result, limit) {
        (Err(d), _) => (false, d),
        (Ok(d), Some(l)) if elapsed > l => (false, format!("{d}, but over the {}s limit", l.as_secs())),
        (Ok(d), _) => (true, d),
    };
    Outcome { id, name, passed, detail, elapsed }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=NAMES.len()).map(run).collect()
}

fn spectrum_table() -> Check {
    let sp = spectrum_below_2(10).map_err(|e| e.to_string())?;
    for (e, r) in sp.iter().zip(TABLE.iter()) {
        let got = (
            e.word.word.to_string(),
            e.period_string(),
            e.kind.to_string(),
            e.markoff_number.clone(),
            e.l_squared.clone(),
            e.decimal(9),
        );
        let want = (r.word.to_string(), r.period.to_string(), r.kind.to_string(), BigInt::from(r.m), rat(r.l2.0, r.l2.1), r.decimal.to_string());
        ensure(got == want, || format!("row {}: got {got:?}", r.word))?;
    }
    ensure(sp.len() == 10, || format!("{} rows", sp.len()))?;
    Ok("10 rows exact".into())
}

fn coordinates() -> Check {
    let half = QuadTower::from_rational(rat(1, 2));
    let r34 = QuadTower::sqrt_int(&BigInt::from(34));
    let cases = [
        ("2", &QuadTower::sqrt2() * &half, &QuadTower::sqrt2() * &half),
        ("31", half.clone(), &QuadTower::sqrt_int(&BigInt::from(3)) * &half),
        ("312132", &r34 * &QuadTower::from_rational(rat(3, 34)), &r34 * &QuadTower::from_rational(rat(5, 34))),
    ];
    for (period, x, y) in cases {
        let p = fixed_point_coordinates(&parse_digits(period).unwrap());
        ensure(p.x == x && p.y == y, || format!("[{period}] gave ({}, {})", p.x, p.y))?;
    }
    Ok("3 points exact".into())
}

fn trees() -> Check {
    let got = enumerate_markoff(3);
    let want: Vec<MarkoffTriple> = MARKOFF_TREE.iter().map(|&(x, a, b)| MarkoffTriple::from_i64(x, a, b).unwrap()).collect();
    ensure(got == want, || format!("Markoff tree to depth 3 differs: {got:?}"))?;
    let roots = [PythTriple::from_i64(3, 4, 5).unwrap(), PythTriple::from_i64(4, 3, 5).unwrap()];
    for (root, want) in roots.iter().zip(PYTHAGOREAN_LEVELS.iter()) {
        let got: Vec<PythTriple> = [berggren_level(root, 1), berggren_level(root, 2)].concat();
        let want: Vec<PythTriple> = want.iter().map(|&(a, b, c)| PythTriple::from_i64(a, b, c).unwrap()).collect();
        ensure(got == want, || format!("levels below {root} differ"))?;
    }
    Ok("15 Markoff triples, 24 Pythagorean triples".into())
}

fn markoff_equation() -> Check {
    let ts = enumerate_markoff(12);
    ensure(ts.len() == (1 << 13) - 1, || format!("{} triples", ts.len()))?;
    if let Some(t) = ts.iter().find(|t| !is_markoff(t.x(), t.y1(), t.y2())) {
        return Err(format!("{t} fails the equation"));
    }
    Ok(format!("{} triples", ts.len()))
}

fn lower_slopes(max_sum: u64) -> Vec<(u64, u64)> {
    (2..=max_sum).flat_map(|n| (1..n).map(move |t| (t, n - t))).filter(|&(t, s)| t.gcd(&s) == 1).collect()
}

fn identities() -> Check {
    let words = lower_slopes(30);
    for &(t, s) in &words {
        let w = christoffel(t, s, Kind::Lower).map_err(|e| e.to_string())?;
        ensure(q_trace_identity_check(&w.word), || format!("trace identity fails for {}", w.word))?;
    }
    let fricke = lower_slopes(20);
    for &(t, s) in &fricke {
        let w = christoffel(t, s, Kind::Lower).map_err(|e| e.to_string())?;
        let (u, v) = standard_factorization(&w).map_err(|e| e.to_string())?;
        let tr = |c: &crate::words::ChristoffelWord| cohn_matrix(&c.word).map(|m| m.m.trace());
        let (a, b, c) = (tr(&u).unwrap(), tr(&v).unwrap(), tr(&w).unwrap());
        let lhs = &(&(&a * &a) + &(&b * &b)) + &(&c * &c);
        ensure(lhs == &(&a * &b) * &c, || format!("Fricke fails for {}", w.word))?;
    }
    Ok(format!("{} words (trace), {} factorizations (Fricke)", words.len(), fricke.len()))
}

fn correspondence() -> Check {
    let from_words: BTreeSet<MarkoffTriple> =
        christoffel_tree(8).iter().map(|n| triple_from_christoffel(&n.w)).collect::<crate::Result<_>>().map_err(|e| e.to_string())?;
    let from_tree: BTreeSet<MarkoffTriple> = enumerate_markoff(8).into_iter().collect();
    ensure(from_words == from_tree, || "the two sets differ".into())?;
    Ok(format!("{} triples", from_tree.len()))
}

fn random_triple(rng: &mut ChaCha8Rng) -> PythTriple {
    loop {
        let m: i64 = rng.gen_range(2..317);
        let n: i64 = rng.gen_range(1..m);
        if (m - n) % 2 == 1 && m.gcd(&n) == 1 && m * m + n * n <= 100_000 {
            let (a, b, c) = (m * m - n * n, 2 * m * n, m * m + n * n);
            let (a, b) = if rng.gen() { (b, a) } else { (a, b) };
            return PythTriple::from_i64(a, b, c).unwrap();
        }
    }
}

fn conjugacy() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let z = random_triple(&mut rng);
        let p = CirclePoint::from_triple(&z);
        ensure(stereo_norm(&romik_map(&p)) == treal(&stereo_norm(&p)), || format!("conjugacy fails at {z}"))?;
    }
    for d in 1..=3 {
        let m = berggren_matrix(d);
        ensure(&reflection_h() * &reflection_u(d) == m, || format!("M_{d} != H U_{d}"))?;
        for _ in 0..100 {
            let mut v = || Vec3::ints(rng.gen_range(-1000..1000), rng.gen_range(-1000..1000), rng.gen_range(-1000..1000));
            let (x, y) = (v().to_rational(), v().to_rational());
            ensure(lorentz_pairing(&m.apply(&x), &m.apply(&y)) == lorentz_pairing(&x, &y), || format!("M_{d} not orthogonal"))?;
        }
    }
    Ok("1000 triples, 3 matrices".into())
}

fn oracle_agreement() -> Check {
    let tol6 = 1e-6;
    let tol3 = 1e-3;
    let mut worst = (0.0f64, 0.0f64);
    let h = BigInt::from(100_000);
    for r in &TABLE {
        let p = DigitWord::purely_periodic(r.digits()).unwrap();
        let c = estimate_by_cylinders(&p, 60).map_err(|e| e.to_string())?;
        ensure(c.within(tol6), || format!("cylinder estimate {} for {}", c.decimal(12), r.word))?;
        let s = estimate_by_height(&p, &h, 64).map_err(|e| e.to_string())?;
        ensure(s.within(tol3), || format!("height estimate {} for {}", s.decimal(9), r.word))?;
        worst.0 = worst.0.max(c.error().unwrap().mid_f64());
        worst.1 = worst.1.max(s.error().unwrap().mid_f64());
    }
    Ok(format!("max error {:.1e} (cylinders), {:.1e} (heights)", worst.0, worst.1))
}

fn perron() -> Check {
    let tol = rat(1, 1) / Rational::from_integer(BigInt::from(10).pow(30));
    let eps_tol = Rational::from_float(1e-6).unwrap();
    for period in [[3, 1].as_slice(), &[3, 1, 2, 2], &[3, 1, 2, 1, 3, 2]] {
        let p = DigitWord::purely_periodic(period.to_vec()).unwrap();
        let r = perron_check(&p, 40, 50).map_err(|e| e.to_string())?;
        ensure(r.residual.hi_rational() < tol, || format!("residual too large for {p}"))?;
        let one = Interval::exact_int(&BigInt::from(1), r.epsilon.prec());
        ensure(r.epsilon.sub(&one).abs().hi_rational() < eps_tol, || format!("eps = {} for {p}", r.epsilon.to_decimal(12)))?;
    }
    Ok("3 points at k = 40".into())
}

fn admissibility() -> Check {
    let two = ExtReal::Finite(QuadTower::from_int(2));
    let blocks = forbidden_blocks(13);
    for (block, family) in &blocks {
        let filler: &[Digit] = match *family {
            "32^(2k)3" => &[1, 2, 1],
            "12^(2k)1" => &[3, 2, 3],
            _ => &[],
        };
        let period = [block.as_slice(), filler].concat();
        let r = admissible_periodic(&period).map_err(|e| e.to_string())?;
        let ok = r.class == Admissibility::NotAdmissible
            && matches!(&r.witness, Some(Witness::Block { block: b, .. }) if b == block)
            && r.lagrange > two;
        ensure(ok, || format!("{period:?} classified {} with {:?}", r.class, r.witness.map(|w| w.to_string())))?;
    }
    for row in &TABLE {
        let r = admissible_periodic(&row.digits()).map_err(|e| e.to_string())?;
        ensure(r.class == Admissibility::StronglyAdmissible && r.lagrange < two, || format!("{} is {}", row.period, r.class))?;
    }
    Ok(format!("{} family sequences rejected, 10 table periods strongly admissible", blocks.len()))
}

fn approximants() -> Check {
    let p = DigitWord::purely_periodic(vec![3, 1, 2, 2]).unwrap();
    let r = best_approximant_check(&p, &BigInt::from(200), 25).map_err(|e| e.to_string())?;
    match r.counterexample {
        None => Ok(format!("{} points checked", r.checked)),
        Some(z) => Err(format!("{z} beats every boundary point")),
    }
}
