//! The Hurwitz continued fraction algorithm: shift map, digit extraction,
//! Q-pair recurrences, convergents, finite evaluation, and the Moebius
//! maps that conjugate the shift to the digit shift.
//!
//! Arithmetic is dual-path: exact over `Q(i)` when the input is rational,
//! fixed-point with per-step precision accounting otherwise.

use num_bigint::BigInt;
use serde::Serialize;

use crate::bigc::{BigComplex, PRECISION_FLOOR};
use crate::error::{HcfError, Result};
use crate::gauss::{big_to_f64, GaussianInt, GaussianRational};

/// A point of an orbit under the shift map, either exact or approximate.
#[derive(Debug, Clone)]
pub enum OrbitValue {
    Exact(GaussianRational),
    Approx(BigComplex),
}

impl OrbitValue {
    pub fn is_zero(&self) -> bool {
        match self {
            OrbitValue::Exact(z) => z.is_zero(),
            OrbitValue::Approx(z) => z.is_zero(),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        match self {
            OrbitValue::Exact(z) => {
                let b = BigComplex::from_rational(z, 64);
                b.to_f64()
            }
            OrbitValue::Approx(z) => z.to_f64(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrbitState {
    pub z: OrbitValue,
    pub step: usize,
}

/// One application of `T(z) = 1/z - [1/z]`, returning the extracted digit
/// and the next orbit state.
pub fn shift_map(state: &OrbitState) -> Result<(GaussianInt, OrbitState)> {
    let (digit, next) = match &state.z {
        OrbitValue::Exact(z) => {
            if z.is_zero() {
                return Err(HcfError::ZeroInput);
            }
            let w = z.recip()?;
            let digit = w.nearest_gaussian();
            let next = w.sub(&GaussianRational::from_int(digit.clone()));
            (digit, OrbitValue::Exact(next))
        }
        OrbitValue::Approx(z) => {
            if z.is_zero() {
                return Err(HcfError::ZeroInput);
            }
            let w = z.recip()?;
            let certified = w.certified_bits();
            if certified < PRECISION_FLOOR {
                return Err(HcfError::PrecisionExhausted {
                    certified,
                    floor: PRECISION_FLOOR,
                });
            }
            let digit = w.nearest_gaussian(true)?;
            let next = w.sub_int(&digit);
            (digit, OrbitValue::Approx(next))
        }
    };
    debug_assert!(digit.norm() >= BigInt::from(2), "digit outside I");
    Ok((
        digit,
        OrbitState { z: next, step: state.step + 1 },
    ))
}

/// A finite Hurwitz continued fraction together with its Q-pair.
///
/// The seeds `(p_-1, p_0; q_-1, q_0)` are the identity matrix and are
/// stored explicitly at the front of `p` and `q`, so `p[n + 1]` is `p_n`.
#[derive(Debug, Clone)]
pub struct HcfExpansion {
    pub a0: GaussianInt,
    pub digits: Vec<GaussianInt>,
    p: Vec<GaussianInt>,
    q: Vec<GaussianInt>,
    /// True iff the orbit reached 0, i.e. the input was in `Q(i)`.
    pub terminated: bool,
}

impl HcfExpansion {
    fn with_seeds(a0: GaussianInt) -> Self {
        Self {
            a0,
            digits: Vec::new(),
            p: vec![GaussianInt::one(), GaussianInt::zero()],
            q: vec![GaussianInt::zero(), GaussianInt::one()],
            terminated: false,
        }
    }

    fn push_digit(&mut self, a: GaussianInt) {
        let k = self.p.len();
        self.p.push(&(&a * &self.p[k - 1]) + &self.p[k - 2]);
        self.q.push(&(&a * &self.q[k - 1]) + &self.q[k - 2]);
        self.digits.push(a);
    }

    pub fn depth(&self) -> usize {
        self.digits.len()
    }

    /// `p_n` for `n >= -1`.
    pub fn p(&self, n: isize) -> &GaussianInt {
        &self.p[(n + 1) as usize]
    }

    /// `q_n` for `n >= -1`.
    pub fn q(&self, n: isize) -> &GaussianInt {
        &self.q[(n + 1) as usize]
    }

    /// The convergent `a0 + p_n/q_n` as an exact rational, `n >= 1`.
    pub fn convergent(&self, n: usize) -> Result<GaussianRational> {
        let frac = GaussianRational::new(self.p(n as isize).clone(), self.q(n as isize).clone())?;
        Ok(frac.add_int(&self.a0))
    }

    /// `|p_n q_{n-1} - p_{n-1} q_n|` for `n >= 0`; unimodularity says 1.
    pub fn det_abs_sqr(&self, n: usize) -> BigInt {
        let n = n as isize;
        (&(self.p(n) * self.q(n - 1)) - &(self.p(n - 1) * self.q(n))).norm()
    }

    /// Empirical growth base: `min |q_n|^(1/(n-1))` over `2 <= n <= depth`.
    /// Reported as evidence for exponential growth, never assumed.
    pub fn empirical_psi(&self) -> Option<f64> {
        (2..=self.depth())
            .map(|n| big_to_f64(&self.q(n as isize).norm()).powf(0.5 / (n as f64 - 1.0)))
            .min_by(|a, b| a.partial_cmp(b).unwrap())
    }

    pub fn to_report(&self) -> ExpansionReport {
        ExpansionReport {
            a0: self.a0.to_string(),
            digits: self.digits.iter().map(|d| d.to_string()).collect(),
            convergents: (1..=self.depth())
                .map(|n| ConvergentReport {
                    p: self.p(n as isize).to_string(),
                    q: self.q(n as isize).to_string(),
                    abs_q: big_to_f64(&self.q(n as isize).norm()).sqrt(),
                })
                .collect(),
            terminated: self.terminated,
        }
    }
}

/// JSON-facing view of an expansion.
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionReport {
    pub a0: String,
    pub digits: Vec<String>,
    pub convergents: Vec<ConvergentReport>,
    pub terminated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergentReport {
    pub p: String,
    pub q: String,
    pub abs_q: f64,
}

/// Expands an exact input to at most `max_depth` digits. Expansion of a
/// Gaussian rational always terminates at some orbit point 0; `terminated`
/// distinguishes that from the depth cutoff.
pub fn expand_exact(z: &GaussianRational, max_depth: usize) -> HcfExpansion {
    let a0 = z.nearest_gaussian();
    let mut exp = HcfExpansion::with_seeds(a0.clone());
    let mut state = OrbitState {
        z: OrbitValue::Exact(z.sub(&GaussianRational::from_int(a0))),
        step: 0,
    };
    for _ in 0..max_depth {
        if state.z.is_zero() {
            exp.terminated = true;
            return exp;
        }
        let (digit, next) = shift_map(&state).expect("exact orbit cannot fail");
        exp.push_digit(digit);
        state = next;
    }
    exp.terminated = state.z.is_zero();
    exp
}

/// Expands an approximate input, stopping early with `PrecisionExhausted`
/// once the certified bits drop below the floor.
pub fn expand_big(z: &BigComplex, max_depth: usize) -> Result<HcfExpansion> {
    let a0 = z.nearest_gaussian(true)?;
    let mut exp = HcfExpansion::with_seeds(a0.clone());
    let mut state = OrbitState {
        z: OrbitValue::Approx(z.sub_int(&a0)),
        step: 0,
    };
    for _ in 0..max_depth {
        if state.z.is_zero() {
            exp.terminated = true;
            return Ok(exp);
        }
        let (digit, next) = shift_map(&state)?;
        exp.push_digit(digit);
        state = next;
    }
    Ok(exp)
}

pub fn expand(z: &OrbitValue, max_depth: usize) -> Result<HcfExpansion> {
    match z {
        OrbitValue::Exact(z) => Ok(expand_exact(z, max_depth)),
        OrbitValue::Approx(z) => expand_big(z, max_depth),
    }
}

/// The Q-pair `(p_{n-1}, p_n, q_{n-1}, q_n)` of a digit string.
#[derive(Debug, Clone)]
pub struct QPair {
    pub p_prev: GaussianInt,
    pub p: GaussianInt,
    pub q_prev: GaussianInt,
    pub q: GaussianInt,
}

pub fn q_pair(digits: &[GaussianInt]) -> QPair {
    let mut pp = GaussianInt::one();
    let mut p = GaussianInt::zero();
    let mut qp = GaussianInt::zero();
    let mut q = GaussianInt::one();
    for a in digits {
        let np = &(a * &p) + &pp;
        let nq = &(a * &q) + &qp;
        pp = p;
        qp = q;
        p = np;
        q = nq;
    }
    QPair { p_prev: pp, p, q_prev: qp, q }
}

/// Evaluates `[0; a_1, ..., a_n]` exactly; with a tail value `w` it
/// evaluates `[0; a_1, ..., a_n, a_{n+1} + w-tail]` in the sense of the
/// convergent recurrence: `((a_{n+1}+w) p_n + p_{n-1}) / ((...) q_n + q_{n-1})`
/// where the tail replaces the remainder after the last digit.
pub fn evaluate(digits: &[GaussianInt], tail: Option<&GaussianRational>) -> Result<GaussianRational> {
    match tail {
        None => {
            let qp = q_pair(digits);
            if qp.q.is_zero() {
                return Err(HcfError::DivisionByZero);
            }
            GaussianRational::new(qp.p, qp.q)
        }
        Some(w) => {
            let (last, prefix) = digits.split_last().ok_or(HcfError::DivisionByZero)?;
            let qp = q_pair(prefix);
            let head = w.add_int(last);
            let num = head.mul(&GaussianRational::from_int(qp.p)).add_int(&qp.p_prev);
            let den = head.mul(&GaussianRational::from_int(qp.q)).add_int(&qp.q_prev);
            num.div(&den)
        }
    }
}

/// `t_{a,n}(z) = (q_n z - p_n) / (-q_{n-1} z + p_{n-1})`; agrees with `T^n`
/// on the cylinder of `prefix`.
pub fn moebius_t(prefix: &[GaussianInt], z: &GaussianRational) -> Result<GaussianRational> {
    let qp = q_pair(prefix);
    let num = z
        .mul(&GaussianRational::from_int(qp.q))
        .sub(&GaussianRational::from_int(qp.p));
    let den = GaussianRational::from_int(qp.p_prev)
        .sub(&z.mul(&GaussianRational::from_int(qp.q_prev)));
    num.div(&den)
}

/// `v_{a,n}(z) = (p_{n-1} z + p_n) / (q_{n-1} z + q_n)`, the inverse of
/// `moebius_t`; `v(0) = p_n/q_n`.
pub fn moebius_v(prefix: &[GaussianInt], z: &GaussianRational) -> Result<GaussianRational> {
    let qp = q_pair(prefix);
    let num = z.mul(&GaussianRational::from_int(qp.p_prev)).add_int(&qp.p);
    let den = z.mul(&GaussianRational::from_int(qp.q_prev)).add_int(&qp.q);
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn gr(nre: i64, nim: i64, dre: i64, dim: i64) -> GaussianRational {
        GaussianRational::new(gi(nre, nim), gi(dre, dim)).unwrap()
    }

    #[test]
    fn shift_map_examples() {
        // z = (3-4i)/25 = 1/(3+4i): digit 3+4i, next orbit point 0
        let state = OrbitState { z: OrbitValue::Exact(gr(3, -4, 25, 0)), step: 0 };
        let (digit, next) = shift_map(&state).unwrap();
        assert_eq!(digit, gi(3, 4));
        assert!(next.z.is_zero());

        // z = -1/2: 1/z = -2 exactly
        let state = OrbitState { z: OrbitValue::Exact(gr(-1, 0, 2, 0)), step: 0 };
        let (digit, next) = shift_map(&state).unwrap();
        assert_eq!(digit, gi(-2, 0));
        assert!(next.z.is_zero());

        // z = 1/(2+2i) = (1-i)/4
        let state = OrbitState { z: OrbitValue::Exact(gr(1, -1, 4, 0)), step: 0 };
        let (digit, next) = shift_map(&state).unwrap();
        assert_eq!(digit, gi(2, 2));
        assert!(next.z.is_zero());
    }

    #[test]
    fn expand_terminates_on_rationals() {
        let exp = expand_exact(&gr(3, -4, 25, 0), 5);
        assert_eq!(exp.a0, gi(0, 0));
        assert_eq!(exp.digits, vec![gi(3, 4)]);
        assert!(exp.terminated);

        let exp = expand_exact(&GaussianRational::zero(), 5);
        assert!(exp.digits.is_empty());
        assert!(exp.terminated);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&[gi(3, 4)], None).unwrap(), gr(3, -4, 25, 0));
        // [0; 2i, 2i] = 1/(2i + 1/(2i)) = -(2/3)i; the value escapes F,
        // witnessing that (2i, 2i) is not admissible
        let v = evaluate(&[gi(0, 2), gi(0, 2)], None).unwrap();
        assert_eq!(v, gr(0, -2, 3, 0));
        assert!(!v.in_fundamental_domain());
    }

    #[test]
    fn evaluate_roundtrip_quality() {
        let z = gr(1234, -987, 4421, 317);
        let frac = z.sub(&GaussianRational::from_int(z.nearest_gaussian()));
        let exp = expand_exact(&frac, 30);
        let n = exp.depth();
        assert!(n >= 1);
        let back = evaluate(&exp.digits, None).unwrap();
        // |z - p_n/q_n| <= 1/|q_n|^2, checked exactly
        let diff = frac.sub(&back).norm_sqr();
        let qn4 = {
            let q2 = exp.q(n as isize).norm();
            num_rational::BigRational::from(&q2 * &q2)
        };
        assert!(diff * qn4 <= num_rational::BigRational::one());
    }

    #[test]
    fn unimodularity_and_growth() {
        let z = gr(355, 113, 1130, -7);
        let frac = z.sub(&GaussianRational::from_int(z.nearest_gaussian()));
        let exp = expand_exact(&frac, 40);
        let mut prev = BigInt::zero();
        for n in 0..=exp.depth() {
            assert_eq!(exp.det_abs_sqr(n), BigInt::one());
            if n >= 1 {
                let cur = exp.q(n as isize).norm();
                assert!(cur > prev, "|q_n| must strictly increase");
                prev = cur;
            }
        }
        if exp.depth() >= 2 {
            assert!(exp.empirical_psi().unwrap() > 1.0);
        }
    }

    #[test]
    fn moebius_inverse_pair() {
        let prefix = [gi(3, 4), gi(-2, 3), gi(0, -4)];
        for (a, b, c, d) in [(1, 1, 7, 0), (-3, 2, 11, -4), (5, -5, 17, 1)] {
            let z = gr(a, b, c, d);
            let w = moebius_v(&prefix, &z).unwrap();
            assert_eq!(moebius_t(&prefix, &w).unwrap(), z);
        }
        // v(0) = p_n/q_n
        let v0 = moebius_v(&[gi(3, 4)], &GaussianRational::zero()).unwrap();
        assert_eq!(v0, gr(3, -4, 25, 0));
    }

    #[test]
    fn moebius_t_is_iterated_shift() {
        // pick an exact point, read off its first two digits, then compare
        // t on that prefix with two applications of the shift map
        let z = gr(1234, -987, 44211, 317);
        let frac = z.sub(&GaussianRational::from_int(z.nearest_gaussian()));
        let exp = expand_exact(&frac, 2);
        if exp.depth() == 2 {
            let t = moebius_t(&exp.digits, &frac).unwrap();
            let mut state = OrbitState { z: OrbitValue::Exact(frac), step: 0 };
            for _ in 0..2 {
                let (_, next) = shift_map(&state).unwrap();
                state = next;
            }
            match state.z {
                OrbitValue::Exact(orbit) => assert_eq!(t, orbit),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn digit_shift_identity() {
        // digits of T(z) are the digits of z shifted by one
        let z = gr(9871, 555, 31007, -12);
        let frac = z.sub(&GaussianRational::from_int(z.nearest_gaussian()));
        let exp = expand_exact(&frac, 10);
        if exp.depth() >= 2 {
            let state = OrbitState { z: OrbitValue::Exact(frac), step: 0 };
            let (_, next) = shift_map(&state).unwrap();
            match next.z {
                OrbitValue::Exact(tz) => {
                    let shifted = expand_exact(&tz, 9);
                    assert_eq!(shifted.digits[..], exp.digits[1..]);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn big_orbit_matches_exact_digits() {
        // denominator chosen so no orbit point lands on a rounding tie
        // within the first 8 steps (e.g. 44211+317i hits Im(1/T^5 z) = 3/2,
        // which the certified path must refuse)
        let z = gr(1234, -987, 44213, 317);
        let frac = z.sub(&GaussianRational::from_int(z.nearest_gaussian()));
        let exact = expand_exact(&frac, 8);
        let big = BigComplex::from_rational(&frac, 256);
        let approx = expand_big(&big, 8).unwrap();
        let k = approx.depth().min(exact.depth());
        assert!(k >= 3);
        assert_eq!(approx.digits[..k], exact.digits[..k]);
    }
}
