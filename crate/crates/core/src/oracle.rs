//! Independent numerical and combinatorial checks: brute-force Lagrange
//! estimates, Perron residuals, best approximants and admissibility of
//! periodic digit sequences.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohn::lagrange_doubly_periodic;
use crate::dynamics::{
    cylinder_bounds, delta_squared, mobius, periodic_norm, point_of_word, triples_up_to_height, vee_digits, word_norm,
    CirclePoint, Digit, DigitWord, ExtReal, PythTriple,
};
use crate::error::{Error, Result};
use crate::exactnum::interval::refine;
use crate::exactnum::{n_product, Interval, QuadTower};

/// Binary precision of the height sweep.
const SWEEP_PREC: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "height-sweep")]
    HeightSweep,
    #[serde(rename = "cylinder-boundary")]
    CylinderBoundary,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::HeightSweep => "height-sweep",
            Method::CylinderBoundary => "cylinder-boundary",
        })
    }
}

#[derive(Clone, Debug)]
pub struct EstimateReport {
    pub point: DigitWord,
    pub method: Method,
    pub estimate: Interval,
    /// Largest height for a sweep, largest `k` for cylinders.
    pub k_or_height: BigInt,
    /// Number of approximants examined.
    pub samples: usize,
    pub target: Option<QuadTower>,
}

impl EstimateReport {
    pub fn decimal(&self, digits: usize) -> String {
        self.estimate.to_decimal(digits)
    }

    pub fn value_f64(&self) -> f64 {
        self.estimate.mid_f64()
    }

    /// Enclosure of `|estimate - target|`.
    pub fn error(&self) -> Option<Interval> {
        let t = self.target.as_ref()?;
        Some(self.estimate.sub(&t.to_interval(self.estimate.prec())).abs())
    }

    /// Whether the estimate is certainly within `tol` of the target.
    pub fn within(&self, tol: f64) -> bool {
        match self.error() {
            Some(e) => e.hi_rational() < crate::exactnum::Rational::from_float(tol).expect("finite tolerance"),
            None => false,
        }
    }

    pub fn to_json_value(&self, digits: usize) -> serde_json::Value {
        serde_json::json!({
            "point": self.point.to_json_value(),
            "method": self.method.to_string(),
            "estimate": self.decimal(digits),
            "k_or_height": self.k_or_height.to_string(),
            "samples": self.samples,
            "target": self.target.as_ref().map(|t| t.to_json_value()),
            "target_decimal": self.target.as_ref().map(|t| t.to_decimal(digits)),
            "abs_error": self.error().map(|e| e.to_decimal(digits + 3)),
        })
    }
}

fn target_of(p: &DigitWord) -> Option<QuadTower> {
    match lagrange_doubly_periodic(p.period()?) {
        ExtReal::Finite(v) => Some(v),
        ExtReal::Infinity => None,
    }
}

fn irrational_point(p: &DigitWord) -> Result<CirclePoint> {
    let pt = point_of_word(p)?;
    if pt.x.as_rational().is_some() && pt.y.as_rational().is_some() {
        return Err(Error::Parse(format!("{p} is a rational point")));
    }
    Ok(pt)
}

/// `1 / delta(P; Z)` from `delta^2 = 2c(c - a alpha - b beta)`.
fn inv_delta(alpha: &Interval, beta: &Interval, z: &PythTriple) -> Option<Interval> {
    let prec = alpha.prec();
    let (a, b, c) = (Interval::exact_int(&z.a, prec), Interval::exact_int(&z.b, prec), Interval::exact_int(&z.c, prec));
    let inner = c.sub(&a.mul(alpha)).sub(&b.mul(beta));
    let d2 = Interval::exact_int(&(&z.c * 2), prec).mul(&inner);
    if d2.sign() != Some(1) {
        return None;
    }
    Interval::exact_int(&BigInt::one(), prec).div(&d2.sqrt()?)
}

/// Height growth of the best approximants over one period: the square of
/// the leading eigenvalue of the period's digit matrix.
pub fn period_growth(p: &DigitWord) -> f64 {
    let Some(per) = p.period() else { return 1.0 };
    let m = n_product(per);
    let tr = m.trace().to_f64().abs();
    let det = m.det().to_f64();
    let lambda = (tr + (tr * tr - 4.0 * det).max(0.0).sqrt()) / 2.0;
    lambda * lambda
}

/// Window ratio large enough that `[H / r, H]` always holds a full period
/// of approximants. Converges as `H` grows, but lets early outliers in
/// when `H` is small compared to the growth.
pub fn full_period_ratio(p: &DigitWord) -> u64 {
    (2.0 * period_growth(p)).ceil().min(u64::MAX as f64) as u64
}

/// Largest `1/delta(P; Z)` over primitive `Z` with height in
/// `[max_height / window_ratio, max_height]`.
///
/// A fixed ratio can fall between two good approximants when the period
/// grows faster than the ratio (period 3122 at height 2^17 does); see
/// [`full_period_ratio`].
pub fn estimate_by_height(p: &DigitWord, max_height: &BigInt, window_ratio: u64) -> Result<EstimateReport> {
    let pt = irrational_point(p)?;
    let alpha = pt.x.to_interval(SWEEP_PREC);
    let beta = pt.y.to_interval(SWEEP_PREC);
    let low = max_height / BigInt::from(window_ratio.max(1));
    let triples = triples_up_to_height(max_height);
    let (best, samples) = triples
        .par_iter()
        .filter(|z| z.c >= low)
        .filter_map(|z| inv_delta(&alpha, &beta, z))
        .map(|v| (Some(v), 1usize))
        .reduce(
            || (None, 0),
            |(a, n), (b, m)| {
                let v = match (a, b) {
                    (Some(a), Some(b)) => Some(a.max(&b)),
                    (a, b) => a.or(b),
                };
                (v, n + m)
            },
        );
    let estimate = best.ok_or_else(|| Error::Parse("no rational points in the height window".into()))?;
    Ok(EstimateReport {
        point: p.clone(),
        method: Method::HeightSweep,
        estimate,
        k_or_height: max_height.clone(),
        samples,
        target: target_of(p),
    })
}

fn inv_delta_exact(pt: &CirclePoint, z: &PythTriple, digits: u32) -> Option<Interval> {
    let d2 = delta_squared(pt, z);
    if d2.is_zero() {
        return None;
    }
    Some(refine(|prec| Interval::exact_int(&BigInt::one(), prec).div(&d2.to_interval(prec).sqrt()?), digits))
}

/// `max(1/delta(P; Z_k), 1/delta(P^v; Z_k(P^v)))` over the last full period
/// of indices `k <= k_max`, with `Z_k` the `(0,1)` end of the `k`-th cylinder.
pub fn estimate_by_cylinders(p: &DigitWord, k_max: usize) -> Result<EstimateReport> {
    let period = p.period().ok_or(Error::Parse("finite digit word does not name a point".into()))?;
    let first = (k_max + 1).saturating_sub(period.len()).max(p.head().len() + 1).max(1);
    if first > k_max {
        return Err(Error::Parse(format!("k_max {k_max} does not reach past the head of {p}")));
    }
    let digits = 40;
    let mut best: Option<Interval> = None;
    let mut samples = 0;
    for w in [p.clone(), p.vee()] {
        let pt = irrational_point(&w)?;
        for k in first..=k_max {
            let z = cylinder_bounds(&w.prefix(k)).1;
            if let Some(v) = inv_delta_exact(&pt, &z, digits) {
                samples += 1;
                best = Some(match best {
                    Some(b) => align_max(&b, &v),
                    None => v,
                });
            }
        }
    }
    let estimate = best.ok_or_else(|| Error::Parse("no boundary points in the window".into()))?;
    Ok(EstimateReport {
        point: p.clone(),
        method: Method::CylinderBoundary,
        estimate,
        k_or_height: BigInt::from(k_max),
        samples,
        target: target_of(p),
    })
}

/// Max of two enclosures that may carry different precisions.
fn align_max(a: &Interval, b: &Interval) -> Interval {
    let prec = a.prec().max(b.prec());
    a.rescale(prec).max(&b.rescale(prec))
}

/// Both sides of the Perron identity at one index.
#[derive(Clone, Debug)]
pub struct PerronReport {
    pub k: usize,
    pub delta: Interval,
    pub rhs: Interval,
    pub epsilon: Interval,
    /// Enclosure of `|delta - rhs|`.
    pub residual: Interval,
    /// Whether `delta^2` and the squared right side agree exactly.
    pub exact: bool,
}

impl PerronReport {
    pub fn to_json_value(&self, digits: usize) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "delta": self.delta.to_decimal(digits),
            "rhs": self.rhs.to_decimal(digits),
            "epsilon": self.epsilon.to_decimal(digits),
            "residual_upper": crate::exactnum::rational::to_decimal(&self.residual.hi_rational(), digits + 10),
            "exact": self.exact,
        })
    }
}

/// `delta(P; Z_k)` against `sqrt(2) eps_k / (||P'_k|| + ||P''_k||)`, both
/// enclosed to `digits` decimals.
pub fn perron_check(p: &DigitWord, k: usize, digits: u32) -> Result<PerronReport> {
    let prefix = p.prefix(k);
    if k <= p.head().len() || prefix.iter().all(|&d| d == 1) || prefix.iter().all(|&d| d == 3) {
        return Err(Error::Parse(format!("index {k} is too small for {p}")));
    }
    let pt = irrational_point(p)?;
    let z = cylinder_bounds(&prefix).1;
    let n1 = word_norm(&p.shift(k))?;
    let rev: Vec<Digit> = prefix.iter().rev().copied().collect();
    let n2 = mobius(&n_product(&rev), &ExtReal::Infinity);
    let (n1, n2) = match (n1, n2) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => (a, b),
        _ => return Err(Error::Parse(format!("infinite norm at index {k} of {p}"))),
    };
    let c = QuadTower::from_int(z.c.clone());
    let b = QuadTower::from_int(z.b.clone());
    // eps^2 = c (1 - beta) / (c - b)
    let eps2 = &(&c * &(&QuadTower::one() - &pt.y)) / &(&c - &b);
    let sum = &n1 + &n2;
    let rhs2 = &(&QuadTower::from_int(2) * &eps2) / &sum.square();
    let d2 = delta_squared(&pt, &z);
    let exact = d2.try_sub(&rhs2).map(|d| d.is_zero()).unwrap_or(false);

    // numeric side: every quantity rebuilt from coordinates and digits
    let pp = point_of_word(&p.shift(k))?;
    let numeric = |prec: u32| -> Option<(Interval, Interval, Interval)> {
        let one = Interval::exact_int(&BigInt::one(), prec);
        let r2 = Interval::sqrt_int(&BigInt::from(2), prec);
        let (alpha, beta) = (pt.x.to_interval(prec), pt.y.to_interval(prec));
        let delta = Interval::exact_int(&BigInt::one(), prec).div(&inv_delta(&alpha, &beta, &z)?)?;
        let (ci, bi) = (Interval::exact_int(&z.c, prec), Interval::exact_int(&z.b, prec));
        let eps = ci.mul(&one.sub(&beta)).div(&ci.sub(&bi))?.sqrt()?;
        let (a1, b1) = (pp.x.to_interval(prec), pp.y.to_interval(prec));
        let norm1 = one.sub(&a1).add(&b1).div(&r2.mul(&a1))?;
        let m = n_product(&rev);
        let norm2 = m.p().to_interval(prec).div(&m.q().to_interval(prec))?;
        let rhs = r2.mul(&eps).div(&norm1.add(&norm2))?;
        Some((delta, rhs, eps))
    };
    let mut prec = 64 + 4 * digits;
    loop {
        if let Some((delta, rhs, eps)) = numeric(prec) {
            if delta.width_below_decimal(digits) && rhs.width_below_decimal(digits) {
                let residual = delta.sub(&rhs).abs();
                return Ok(PerronReport { k, delta, rhs, epsilon: eps, residual, exact });
            }
        }
        prec *= 2;
        assert!(prec < 1 << 22, "Perron evaluation did not converge");
    }
}

/// Outcome of the best-approximant check.
#[derive(Clone, Debug)]
pub struct ApproximantReport {
    pub checked: usize,
    /// A rational point closer than every boundary point examined.
    pub counterexample: Option<PythTriple>,
}

/// Checks that every primitive `Z` with height at most `max_height` is no
/// closer to `P` than some cylinder end `Z_k^(1,0)`, `Z_k^(0,1)` with
/// `k <= k_max`. Exact comparisons of `delta^2`.
pub fn best_approximant_check(p: &DigitWord, max_height: &BigInt, k_max: usize) -> Result<ApproximantReport> {
    let pt = irrational_point(p)?;
    let best = (0..=k_max)
        .flat_map(|k| {
            let (z10, z01) = cylinder_bounds(&p.prefix(k));
            [z10, z01]
        })
        .map(|z| delta_squared(&pt, &z))
        .min_by(|a, b| a.exact_cmp(b))
        .expect("at least one boundary point");
    let zs = triples_up_to_height(max_height);
    let counterexample =
        zs.par_iter().find_first(|z| delta_squared(&pt, z).exact_cmp(&best) == std::cmp::Ordering::Less).cloned();
    Ok(ApproximantReport { checked: zs.len(), counterexample })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Admissibility {
    #[serde(rename = "strongly_admissible")]
    StronglyAdmissible,
    #[serde(rename = "admissible")]
    Admissible,
    #[serde(rename = "not_admissible")]
    NotAdmissible,
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Admissibility::StronglyAdmissible => "strongly_admissible",
            Admissibility::Admissible => "admissible",
            Admissibility::NotAdmissible => "not_admissible",
        })
    }
}

/// Which reading of the doubly infinite sequence a witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reading {
    T,
    Reversed,
    Vee,
    ReversedVee,
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::T => "T",
            Reading::Reversed => "T*",
            Reading::Vee => "T^v",
            Reading::ReversedVee => "(T*)^v",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A forbidden block starting at `position` of the period.
    Block { block: Vec<Digit>, family: &'static str, position: usize },
    /// A section `P* 2 | 31 Q` with `||P|| < ||Q||`; `position` indexes the 2.
    Section { reading: Reading, position: usize, p: DigitWord, q: DigitWord },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Block { block, .. } => {
                let s: String = block.iter().map(|d| d.to_string()).collect();
                f.write_str(&s)
            }
            Witness::Section { reading, position, p, q } => {
                write!(f, "{reading} at {position}: P*2|31Q with ||P|| < ||Q||, P={p}, Q={q}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub period: Vec<Digit>,
    pub class: Admissibility,
    pub witness: Option<Witness>,
    /// `L(T)`, computed whatever the class.
    pub lagrange: ExtReal,
}

impl AdmissibilityReport {
    pub fn to_json_value(&self, digits: usize) -> serde_json::Value {
        let (family, position) = match &self.witness {
            Some(Witness::Block { family, position, .. }) => (Some(*family), Some(*position)),
            Some(Witness::Section { position, .. }) => (Some("section"), Some(*position)),
            None => (None, None),
        };
        serde_json::json!({
            "period": self.period.iter().map(|d| d.to_string()).collect::<String>(),
            "class": self.class.to_string(),
            "witness": self.witness.as_ref().map(|w| w.to_string()),
            "witness_family": family,
            "witness_position": position,
            "L": match &self.lagrange {
                ExtReal::Finite(v) => serde_json::json!({ "exact": v.to_string(), "decimal": v.to_decimal(digits) }),
                ExtReal::Infinity => serde_json::json!("inf"),
            },
        })
    }
}

/// Forbidden blocks of length at most `max_len`, in scan order, with the
/// name of their family.
pub fn forbidden_blocks(max_len: usize) -> Vec<(Vec<Digit>, &'static str)> {
    let mut out: Vec<(Vec<Digit>, &'static str)> = Vec::new();
    for b in [[3, 3], [1, 1]] {
        out.push((b.to_vec(), "basic"));
    }
    for b in [[2, 3, 2], [2, 1, 2]] {
        out.push((b.to_vec(), "basic"));
    }
    // k = 0 gives 232 and 212 again
    let mut k = 1;
    while 2 * k + 3 <= max_len {
        for (x, y) in [(3, 1), (1, 3)] {
            let mut b = vec![2];
            for _ in 0..k {
                b.extend([x, y]);
            }
            b.extend([x, 2]);
            out.push((b, if x == 3 { "2(31)^k32" } else { "2(13)^k12" }));
        }
        k += 1;
    }
    // j = 0 gives 33 and 11 again
    for j in 1..=max_len.saturating_sub(2) {
        let fams: [(Digit, Digit, &'static str); 2] = if j % 2 == 1 {
            [(1, 3, "12^(2k+1)3"), (3, 1, "32^(2k+1)1")]
        } else {
            [(3, 3, "32^(2k)3"), (1, 1, "12^(2k)1")]
        };
        for (l, r, name) in fams {
            let mut b = vec![l];
            b.extend(std::iter::repeat_n(2, j));
            b.push(r);
            out.push((b, name));
        }
    }
    out
}

fn cyclic_find(period: &[Digit], block: &[Digit]) -> Option<usize> {
    let n = period.len();
    (0..n).find(|&i| block.iter().enumerate().all(|(j, &d)| period[(i + j) % n] == d))
}

/// First forbidden block occurring in the periodic sequence.
pub fn find_forbidden_block(period: &[Digit]) -> Option<Witness> {
    // interior runs of a longer block would cover a whole period
    forbidden_blocks(period.len() + 3)
        .into_iter()
        .find_map(|(b, family)| cyclic_find(period, &b).map(|position| Witness::Block { block: b, family, position }))
}

fn section_violation(period: &[Digit]) -> Option<Witness> {
    let n = period.len();
    let rev: Vec<Digit> = period.iter().rev().copied().collect();
    let readings = [
        (Reading::T, period.to_vec()),
        (Reading::Reversed, rev.clone()),
        (Reading::Vee, vee_digits(period)),
        (Reading::ReversedVee, vee_digits(&rev)),
    ];
    for (reading, s) in readings {
        for i in 0..n {
            if s[i] != 2 || s[(i + 1) % n] != 3 || s[(i + 2) % n] != 1 {
                continue;
            }
            let left: Vec<Digit> = (1..=n).map(|j| s[(i + n * 2 - j) % n]).collect();
            let right: Vec<Digit> = (0..n).map(|j| s[(i + 3 + j) % n]).collect();
            let (np, nq) = (periodic_norm(&left), periodic_norm(&right));
            if np < nq {
                return Some(Witness::Section {
                    reading,
                    position: i,
                    p: DigitWord::purely_periodic(left).unwrap(),
                    q: DigitWord::purely_periodic(right).unwrap(),
                });
            }
        }
    }
    None
}

/// Classifies the doubly infinite sequence with the given period.
pub fn admissible_periodic(period: &[Digit]) -> Result<AdmissibilityReport> {
    if period.is_empty() {
        return Err(Error::EmptyWord);
    }
    crate::dynamics::check_digits(period)?;
    let lagrange = lagrange_doubly_periodic(period);
    let witness = find_forbidden_block(period).or_else(|| section_violation(period));
    let class = if witness.is_some() {
        Admissibility::NotAdmissible
    } else if lagrange < ExtReal::Finite(QuadTower::from_int(2)) {
        Admissibility::StronglyAdmissible
    } else {
        Admissibility::Admissible
    };
    Ok(AdmissibilityReport { period: period.to_vec(), class, witness, lagrange })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    fn pw(p: &[Digit]) -> DigitWord {
        DigitWord::purely_periodic(p.to_vec()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let r = admissible_periodic(&[2]).unwrap();
        assert_eq!(r.class, Admissibility::StronglyAdmissible);
        assert_eq!(r.lagrange, ExtReal::Finite(QuadTower::sqrt2()));
        let r = admissible_periodic(&[3, 3]).unwrap();
        assert_eq!(r.class, Admissibility::NotAdmissible);
        assert_eq!(r.witness.unwrap().to_string(), "33");
        let r = admissible_periodic(&[3, 1, 2, 1, 3, 2, 2, 1, 3, 2, 3, 1, 2, 2]).unwrap();
        assert_eq!(r.class, Admissibility::StronglyAdmissible);
        assert_eq!(r.lagrange, ExtReal::Finite(QuadTower::sqrt_rational(&rat(13922, 3481))));
    }

    #[test]
    fn block_families() {
        let names: Vec<String> =
            forbidden_blocks(7).iter().map(|(b, _)| b.iter().map(|d| d.to_string()).collect()).collect();
        for b in ["33", "11", "232", "212", "23132", "21312", "2313132", "123", "321", "1221", "3223", "12223", "32221"] {
            assert!(names.contains(&b.to_string()), "missing {b}");
        }
        for b in ["121", "1223", "3221", "12221", "323"] {
            assert!(!names.contains(&b.to_string()), "{b} is allowed");
        }
    }

    #[test]
    fn cylinder_estimates() {
        let r = estimate_by_cylinders(&pw(&[2]), 60).unwrap();
        assert!(r.within(1e-9), "{}", r.decimal(15));
        let r = estimate_by_cylinders(&pw(&[3, 1, 2, 1, 3, 2]), 60).unwrap();
        assert!(r.within(1e-9), "{}", r.decimal(15));
    }

    #[test]
    fn height_estimates() {
        let r = estimate_by_height(&pw(&[3, 1]), &BigInt::from(20000), 64).unwrap();
        assert!(r.within(1e-2), "{}", r.decimal(9));
    }

    #[test]
    fn perron_examples() {
        let r = perron_check(&pw(&[3, 1]), 40, 50).unwrap();
        assert!(r.exact);
        assert!(r.residual.hi_rational() < rat(1, 1) / crate::exactnum::rational::int(BigInt::from(10).pow(30)));
        let r = perron_check(&pw(&[2]), 10, 50).unwrap();
        assert!(r.exact);
        assert!(perron_check(&pw(&[3, 1]), 1, 50).is_err());
    }

    #[test]
    fn approximants_dominate() {
        let r = best_approximant_check(&pw(&[3, 1, 2, 2]), &BigInt::from(200), 25).unwrap();
        assert!(r.counterexample.is_none());
        assert!(r.checked > 50);
    }
}
