//! Seeded verification suites: randomized cross-checks of the expansion
//! invariants, the diameter sandwich, and the exact transition geometry.
//!
//! The transition oracle here is deliberately independent of the exact
//! geometry code: sample points are dyadic with denominator 2^16, so
//! membership, digit extraction and image membership reduce to `i128`
//! integer comparisons with no shared code path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cf::{evaluate, expand_exact, q_pair};
use crate::error::{HcfError, Result};
use crate::gauss::{big_to_f64, GaussianInt, GaussianRational};
use crate::geometry::{
    derive_constants, digit_transition, witness_distance, FeasibleShape, Transition,
};

#[derive(Debug, Clone, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<SuiteCheck>) -> Self {
        Self {
            suite: suite.to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

pub fn run_suite(name: &str, samples: usize, depth: usize, seed: u64) -> Result<SuiteReport> {
    match name {
        "prop21" => Ok(run_prop21(samples, seed)),
        "sandwich" => Ok(run_sandwich(samples.min(2000), depth, seed)),
        "transitions" => Ok(run_transitions(samples.min(2000), 10_000, seed)),
        other => Err(HcfError::Parse(format!("unknown suite: {other}"))),
    }
}

/// Random Gaussian rationals in the fundamental domain.
pub fn random_rationals(count: usize, seed: u64) -> Vec<GaussianRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(2i64..=1_000_000);
            let a = rng.gen_range(-d / 2..d - d / 2);
            let b = rng.gen_range(-d / 2..d - d / 2);
            let z = GaussianRational::new(GaussianInt::new(a, b), GaussianInt::new(d, 0))
                .expect("nonzero denominator");
            z.sub(&GaussianRational::from_int(z.nearest_gaussian()))
        })
        .collect()
}

/// Exact expansion invariants on a random corpus: the approximation
/// quality `|z - p_n/q_n| |q_n|^2 <= 1`, unimodularity, strict growth of
/// `|q_n|`, and the evaluate-expand roundtrip within `2/|q_n|^2`; all
/// comparisons in rational arithmetic with zero tolerance.
pub fn run_prop21(samples: usize, seed: u64) -> SuiteReport {
    let corpus = random_rationals(samples, seed);
    let one = BigRational::one();
    let mut quality_bad = 0usize;
    let mut unimodular_bad = 0usize;
    let mut growth_bad = 0usize;
    let mut roundtrip_bad = 0usize;
    let mut expansions = 0usize;

    for z in &corpus {
        let exp = expand_exact(z, 30);
        let n = exp.depth();
        if n == 0 {
            continue;
        }
        expansions += 1;

        let mut prev = BigInt::from(0);
        for j in 0..=n {
            if exp.det_abs_sqr(j) != BigInt::one() {
                unimodular_bad += 1;
            }
            if j >= 1 {
                let cur = exp.q(j as isize).norm();
                if cur <= prev {
                    growth_bad += 1;
                }
                prev = cur;
            }
        }

        for j in 1..=n {
            // |z - p_j/q_j|^2 |q_j|^4 <= 1 exactly
            let conv = GaussianRational::new(exp.p(j as isize).clone(), exp.q(j as isize).clone())
                .expect("q_j nonzero");
            let diff = z.sub(&conv).norm_sqr();
            let q2 = exp.q(j as isize).norm();
            if diff * BigRational::from(&q2 * &q2) > one {
                quality_bad += 1;
            }
        }

        // roundtrip: |z - value(digits)|^2 |q_n|^4 <= 4
        let back = evaluate(&exp.digits, None).expect("nonempty digit string");
        let diff = z.sub(&back).norm_sqr();
        let q2 = exp.q(n as isize).norm();
        if diff * BigRational::from(&q2 * &q2) > BigRational::from(BigInt::from(4)) {
            roundtrip_bad += 1;
        }
    }

    SuiteReport::new(
        "prop21",
        vec![
            SuiteCheck {
                name: "approximation quality |z - p_n/q_n| |q_n|^2 <= 1".into(),
                passed: quality_bad == 0,
                detail: format!("{expansions} expansions, {quality_bad} violations"),
            },
            SuiteCheck {
                name: "unimodularity |p_n q_(n-1) - p_(n-1) q_n| = 1".into(),
                passed: unimodular_bad == 0,
                detail: format!("{unimodular_bad} violations"),
            },
            SuiteCheck {
                name: "|q_n| strictly increasing".into(),
                passed: growth_bad == 0,
                detail: format!("{growth_bad} violations"),
            },
            SuiteCheck {
                name: "roundtrip within 2/|q_n|^2".into(),
                passed: roundtrip_bad == 0,
                detail: format!("{roundtrip_bad} violations"),
            },
        ],
    )
}

/// Random admissible prefixes with all digits of modulus >= sqrt 8: the
/// witness-tail distance normalized by `|q_n|^2` must land in [gamma, 2].
pub fn run_sandwich(prefixes: usize, max_depth: usize, seed: u64) -> SuiteReport {
    let constants = derive_constants(192);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let digit_pool: Vec<GaussianInt> = {
        let mut v = Vec::new();
        for re in -7i64..=7 {
            for im in -7i64..=7 {
                if (8..=49).contains(&(re * re + im * im)) {
                    v.push(GaussianInt::new(re, im));
                }
            }
        }
        v
    };

    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    let mut bad = 0usize;
    for _ in 0..prefixes {
        let depth = rng.gen_range(1..=max_depth.max(1));
        let prefix: Vec<GaussianInt> = (0..depth)
            .map(|_| digit_pool[rng.gen_range(0..digit_pool.len())].clone())
            .collect();
        let qp = q_pair(&prefix);
        let q_norm = big_to_f64(&qp.q.norm());
        let ratio = witness_distance(&prefix, &constants).to_f64() * q_norm;
        min_ratio = min_ratio.min(ratio);
        max_ratio = max_ratio.max(ratio);
        if !(constants.gamma..=2.0).contains(&ratio) {
            bad += 1;
        }
    }

    SuiteReport::new(
        "sandwich",
        vec![
            SuiteCheck {
                name: "two xi solvers agree".into(),
                passed: constants.solver_disagreement < 1e-30,
                detail: format!("disagreement {:.3e}", constants.solver_disagreement),
            },
            SuiteCheck {
                name: "witness distance * |q_n|^2 in [gamma, 2]".into(),
                passed: bad == 0,
                detail: format!(
                    "range [{min_ratio:.6}, {max_ratio:.6}], gamma {:.6}, {bad} violations",
                    constants.gamma
                ),
            },
        ],
    )
}

const SCALE_BITS: u32 = 16;

/// Dyadic sample points `(x + i y)/2^16` of the fundamental domain.
fn sample_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<(i64, i64)> {
    let half = 1i64 << (SCALE_BITS - 1);
    (0..count).map(|_| (rng.gen_range(-half..half), rng.gen_range(-half..half))).collect()
}

/// Strict interior membership of `(x + i y)/2^16` in a shape; `None`
/// marks a boundary contact, which the oracle skips.
fn point_in_shape(shape: &FeasibleShape, x: i64, y: i64) -> Option<bool> {
    let den = 1i64 << SCALE_BITS;
    let half = den / 2;
    if x.abs() == half || y.abs() == half {
        return None;
    }
    if x.abs() > half || y.abs() > half {
        return Some(false);
    }
    for c in shape.excluded_centers() {
        let (cre, cim) = small_center(&c);
        let dx = (x - cre * den) as i128;
        let dy = (y - cim * den) as i128;
        let d2 = dx * dx + dy * dy;
        let r2 = (den as i128) * (den as i128);
        if d2 == r2 {
            return None;
        }
        if d2 < r2 {
            return Some(false);
        }
    }
    Some(true)
}

fn small_center(c: &GaussianInt) -> (i64, i64) {
    use num_traits::ToPrimitive;
    (c.re.to_i64().unwrap(), c.im.to_i64().unwrap())
}

/// Evaluates one sampled point against a claimed transition. Returns
/// `Some(true)` for agreement, `Some(false)` for a counterexample, `None`
/// when the point does not exercise the claim (wrong digit, outside the
/// shape, or on a boundary).
fn check_point(
    shape: &FeasibleShape,
    digit: (i64, i64),
    claimed: &Transition,
    x: i64,
    y: i64,
) -> Option<bool> {
    if (x, y) == (0, 0) {
        return None;
    }
    match point_in_shape(shape, x, y) {
        Some(true) => {}
        _ => return None,
    }
    // 1/z = 2^16 (x - i y) / (x^2 + y^2)
    let den = (x as i128) * (x as i128) + (y as i128) * (y as i128);
    let num_re = (x as i128) << SCALE_BITS;
    let num_im = -((y as i128) << SCALE_BITS);
    let a_re = (2 * num_re + den).div_euclid(2 * den);
    let a_im = (2 * num_im + den).div_euclid(2 * den);
    if (a_re, a_im) != (digit.0 as i128, digit.1 as i128) {
        return None;
    }
    // w = 1/z - digit, components over the common denominator
    let w_re = num_re - a_re * den;
    let w_im = num_im - a_im * den;
    // strict interior of the box; boundary contacts are skipped
    if (2 * w_re).abs() == den || (2 * w_im).abs() == den {
        return None;
    }
    debug_assert!((2 * w_re).abs() < den && (2 * w_im).abs() < den);
    match claimed {
        Transition::Shape(s) => {
            for c in s.excluded_centers() {
                let (cre, cim) = small_center(&c);
                let dx = w_re - (cre as i128) * den;
                let dy = w_im - (cim as i128) * den;
                let d2 = dx * dx + dy * dy;
                let r2 = den * den;
                if d2 == r2 {
                    return None;
                }
                if d2 < r2 {
                    return Some(false);
                }
            }
            Some(true)
        }
        // an interior image point contradicts emptiness outright
        Transition::Empty { .. } => Some(false),
    }
}

/// The reverse direction: a sampled point `w` of the claimed image must
/// have a preimage `z = 1/(w + digit)` inside the domain shape, else the
/// claim is too large. Returns `None` when `w` misses the claimed
/// interior or any quantity lands on a boundary.
fn check_point_reverse(
    shape: &FeasibleShape,
    digit: (i64, i64),
    claimed: &Transition,
    x: i64,
    y: i64,
) -> Option<bool> {
    let image = match claimed {
        Transition::Shape(s) => s,
        // nothing to sample from an empty image
        Transition::Empty { .. } => return None,
    };
    match point_in_shape(image, x, y) {
        Some(true) => {}
        _ => return None,
    }
    let den = 1i128 << SCALE_BITS;
    // u = w + digit = 1/z; w strictly inside the box forces the digit of
    // 1/z to round back to `digit`, so only membership of z needs checking
    let u_re = x as i128 + digit.0 as i128 * den;
    let u_im = y as i128 + digit.1 as i128 * den;
    let u_norm = u_re * u_re + u_im * u_im;
    // z = den * conj(u) / u_norm; box membership: |2 den u_re| < u_norm
    let zr2 = 2 * den * u_re;
    let zi2 = -2 * den * u_im;
    if zr2.abs() == u_norm || zi2.abs() == u_norm {
        return None;
    }
    if zr2.abs() > u_norm || zi2.abs() > u_norm {
        return Some(false);
    }
    for c in shape.excluded_centers() {
        let (cre, cim) = small_center(&c);
        let a = den * u_re - cre as i128 * u_norm;
        let b = -den * u_im - cim as i128 * u_norm;
        let d2 = a * a + b * b;
        let r2 = u_norm * u_norm;
        if d2 == r2 {
            return None;
        }
        if d2 < r2 {
            return Some(false);
        }
    }
    Some(true)
}

/// Exact transitions versus the integer sampling oracle on random
/// `(shape, digit)` pairs, plus the closure of the transition system.
pub fn run_transitions(pairs: usize, points: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes = FeasibleShape::all();
    let samples = sample_points(&mut rng, points);

    let mut mismatched = 0usize;
    let mut exercised = 0usize;
    for _ in 0..pairs {
        let shape = shapes[rng.gen_range(0..shapes.len())];
        let digit = loop {
            let re = rng.gen_range(-8i64..=8);
            let im = rng.gen_range(-8i64..=8);
            if (2..=64).contains(&(re * re + im * im)) {
                break (re, im);
            }
        };
        let claimed = digit_transition(shape, &GaussianInt::new(digit.0, digit.1))
            .expect("all sampled digits classify");
        for &(x, y) in &samples {
            match check_point(&shape, digit, &claimed, x, y) {
                Some(true) => exercised += 1,
                Some(false) => {
                    exercised += 1;
                    mismatched += 1;
                }
                None => {}
            }
            match check_point_reverse(&shape, digit, &claimed, x, y) {
                Some(true) => exercised += 1,
                Some(false) => {
                    exercised += 1;
                    mismatched += 1;
                }
                None => {}
            }
        }
    }

    // closure: walking all (shape, small digit) pairs reaches exactly the
    // thirteen catalogued regions
    let mut reached = std::collections::HashSet::new();
    for shape in &shapes {
        for re in -3i64..=3 {
            for im in -3i64..=3 {
                if (2..=8).contains(&(re * re + im * im)) {
                    if let Ok(t) = digit_transition(*shape, &GaussianInt::new(re, im)) {
                        if let Some(s) = t.shape() {
                            reached.insert(s);
                        }
                    }
                }
            }
        }
    }

    let example = digit_transition(FeasibleShape::FULL, &GaussianInt::new(-2, 0))
        .expect("digit -2 classifies");

    SuiteReport::new(
        "transitions",
        vec![
            SuiteCheck {
                name: "sampling oracle agrees with exact transitions".into(),
                passed: mismatched == 0,
                detail: format!("{pairs} pairs, {exercised} exercised points, {mismatched} mismatches"),
            },
            SuiteCheck {
                name: "13 shapes reached by the transition system".into(),
                passed: reached.len() == 13,
                detail: format!("{} reached", reached.len()),
            },
            SuiteCheck {
                name: "transition(F4, -2) = F \\ D(1)".into(),
                passed: example == Transition::Shape(FeasibleShape::new(2, 2)),
                detail: format!("{example:?}"),
            },
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop21_suite_passes() {
        let r = run_prop21(200, 11);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn sandwich_suite_passes() {
        let r = run_sandwich(40, 8, 5);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn transitions_suite_passes() {
        let r = run_transitions(25, 2000, 3);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn oracle_rejects_a_wrong_claim() {
        // claim the full box for a digit that actually cuts out a disk:
        // sampled points inside the true excluded disk must be flagged
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let samples = sample_points(&mut rng, 20_000);
        let wrong = Transition::Shape(FeasibleShape::FULL);
        let mut bad = 0;
        for &(x, y) in &samples {
            // the over-claim only shows up in reverse: a w inside the
            // truly excluded disk has no preimage with digit -2
            if check_point_reverse(&FeasibleShape::FULL, (-2, 0), &wrong, x, y) == Some(false) {
                bad += 1;
            }
        }
        assert!(bad > 0, "oracle must catch the missing disk");
        // and an under-claim (emptiness) falls to the forward check
        let wrong = Transition::Empty { degenerate: false };
        let mut bad = 0;
        for &(x, y) in &samples {
            if check_point(&FeasibleShape::FULL, (-2, 0), &wrong, x, y) == Some(false) {
                bad += 1;
            }
        }
        assert!(bad > 0, "oracle must catch a false emptiness claim");
    }

    #[test]
    fn unknown_suite_is_a_parse_error() {
        assert!(matches!(
            run_suite("nope", 1, 1, 0),
            Err(HcfError::Parse(_))
        ));
    }

    #[test]
    fn suites_are_deterministic() {
        let a = serde_json::to_string(&run_transitions(10, 1000, 9)).unwrap();
        let b = serde_json::to_string(&run_transitions(10, 1000, 9)).unwrap();
        assert_eq!(a, b);
    }
}
