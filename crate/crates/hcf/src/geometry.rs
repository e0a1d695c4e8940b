//! Exact cylinder geometry.
//!
//! The image of a cylinder under the iterated shift map is, up to
//! boundary, one of thirteen regions: the open fundamental box, or the
//! box minus one or two closed unit disks centered at neighbouring
//! Gaussian integers, in four rotations. Appending a digit `b` maps the
//! current region through `z -> 1/z - b`; since every boundary piece is
//! either a half-integer line or a unit circle centered at a Gaussian
//! integer, and inversion maps this family to itself, the transition can
//! be computed exactly over the rationals:
//!
//!   * a box edge inverts to a unit circle centered at a unit,
//!   * a unit circle centered at a unit `c` inverts to the half-plane
//!     `Re(c w) < 1/2`,
//!   * a unit circle centered at `c` with `|c|^2 = 2` inverts to the unit
//!     circle centered at `conj(c)`.
//!
//! After translating by `-b` the half-plane cut sits at an integer offset,
//! so inside the box it is all-or-nothing, and the surviving disks are
//! those whose centers are neighbours of the origin. The result is
//! classified against the thirteen-shape catalogue; anything else is a
//! hard `UnclassifiableShape` error.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bigc::{BigComplex, BigFloat};
use crate::cf::{q_pair, QPair};
use crate::error::{HcfError, Result};
use crate::gauss::{big_to_f64, GaussianInt, GaussianRational};

/// One of the thirteen maximal feasible regions: `i^rotation * F_base`,
/// where `F_1..F_4` exclude the disks at `{-1, -i}`, `{-1}`, `{-1-i}`
/// and nothing respectively. The full box `F_4` is rotation invariant and
/// is stored with rotation 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FeasibleShape {
    rotation: u8,
    base: u8,
}

impl FeasibleShape {
    /// The full open box, the root of every transition walk.
    pub const FULL: FeasibleShape = FeasibleShape { rotation: 0, base: 4 };

    pub fn new(rotation: u8, base: u8) -> Self {
        assert!(rotation < 4 && (1..=4).contains(&base));
        if base == 4 {
            Self::FULL
        } else {
            Self { rotation, base }
        }
    }

    pub fn rotation(&self) -> u8 {
        self.rotation
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn all() -> Vec<FeasibleShape> {
        let mut out = vec![Self::FULL];
        for base in 1..=3 {
            for rotation in 0..4 {
                out.push(Self { rotation, base });
            }
        }
        out
    }

    /// Centers of the excluded closed unit disks.
    pub fn excluded_centers(&self) -> Vec<GaussianInt> {
        let base: Vec<GaussianInt> = match self.base {
            1 => vec![GaussianInt::new(-1, 0), GaussianInt::new(0, -1)],
            2 => vec![GaussianInt::new(-1, 0)],
            3 => vec![GaussianInt::new(-1, -1)],
            _ => vec![],
        };
        base.iter().map(|c| c.mul_i_pow(self.rotation)).collect()
    }

    pub fn label(&self) -> String {
        if self.base == 4 {
            "F4".to_string()
        } else if self.rotation == 0 {
            format!("F{}", self.base)
        } else {
            format!("i^{}*F{}", self.rotation, self.base)
        }
    }

    /// Exact interior membership for a rational point.
    pub fn contains(&self, z: &GaussianRational) -> bool {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let re = z.re();
        let im = z.im();
        if re.abs() >= half || im.abs() >= half {
            return false;
        }
        self.excluded_centers().iter().all(|c| {
            let d = z.sub(&GaussianRational::from_int(c.clone()));
            d.norm_sqr() > BigRational::one()
        })
    }

    /// Certified membership for an approximate point; errs on the side of
    /// `AmbiguousBoundary` whenever the error radius straddles a boundary.
    pub fn contains_big(&self, z: &BigComplex) -> Result<bool> {
        let (re, im) = z.to_f64();
        let err = z.error_radius();
        for v in [re, im] {
            if (v.abs() - 0.5).abs() <= err {
                return Err(HcfError::AmbiguousBoundary);
            }
        }
        if re.abs() > 0.5 || im.abs() > 0.5 {
            return Ok(false);
        }
        for c in self.excluded_centers() {
            let dre = re - big_to_f64(&c.re);
            let dim = im - big_to_f64(&c.im);
            let d2 = dre * dre + dim * dim;
            if (d2 - 1.0).abs() <= 4.0 * err {
                return Err(HcfError::AmbiguousBoundary);
            }
            if d2 < 1.0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Result of appending a digit to a feasible region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Transition {
    Shape(FeasibleShape),
    /// Interior-empty image. `degenerate` marks the boundary-touching
    /// case, where the feasible set is a measure-zero segment or point
    /// rather than truly void.
    Empty { degenerate: bool },
}

impl Transition {
    pub fn is_empty(&self) -> bool {
        matches!(self, Transition::Empty { .. })
    }

    pub fn shape(&self) -> Option<FeasibleShape> {
        match self {
            Transition::Shape(s) => Some(*s),
            Transition::Empty { .. } => None,
        }
    }
}

fn units() -> [GaussianInt; 4] {
    [
        GaussianInt::new(1, 0),
        GaussianInt::new(-1, 0),
        GaussianInt::new(0, 1),
        GaussianInt::new(0, -1),
    ]
}

/// True when the closed unit disk at `g` meets the open box: the
/// clamped squared distance from `g` to the box must be below 1.
/// Everything stays in integers by working with doubled coordinates.
fn disk_meets_box(g: &GaussianInt) -> bool {
    let clamp = |t: &BigInt| -> BigInt {
        let d: BigInt = t.abs() * 2 - 1; // 2*dist along this axis
        d.max(BigInt::zero())
    };
    let dr = clamp(&g.re);
    let di = clamp(&g.im);
    &dr * &dr + &di * &di < BigInt::from(4)
}

fn classify(mut excluded: Vec<GaussianInt>) -> Result<Transition> {
    excluded.sort_by(|a, b| (a.re.clone(), a.im.clone()).cmp(&(b.re.clone(), b.im.clone())));
    excluded.dedup();

    // a diagonal disk is redundant inside the open box whenever an
    // adjacent unit disk is present: coordinatewise, the diagonal center
    // is strictly farther from every interior point
    let units_present: Vec<GaussianInt> = excluded
        .iter()
        .filter(|c| c.norm() == BigInt::one())
        .cloned()
        .collect();
    excluded.retain(|c| {
        if c.norm() == BigInt::from(2) {
            !units_present
                .iter()
                .any(|u| (c - u).norm() == BigInt::one())
        } else {
            true
        }
    });

    match excluded.len() {
        0 => Ok(Transition::Shape(FeasibleShape::FULL)),
        1 => {
            let c = &excluded[0];
            if c.norm() == BigInt::one() {
                for j in 0..4 {
                    if GaussianInt::new(-1, 0).mul_i_pow(j) == *c {
                        return Ok(Transition::Shape(FeasibleShape::new(j, 2)));
                    }
                }
            } else if c.norm() == BigInt::from(2) {
                for j in 0..4 {
                    if GaussianInt::new(-1, -1).mul_i_pow(j) == *c {
                        return Ok(Transition::Shape(FeasibleShape::new(j, 3)));
                    }
                }
            }
            Err(HcfError::UnclassifiableShape(format!("excluded {{{c}}}")))
        }
        2 => {
            for j in 0..4 {
                let mut want = vec![
                    GaussianInt::new(-1, 0).mul_i_pow(j),
                    GaussianInt::new(0, -1).mul_i_pow(j),
                ];
                want.sort_by(|a, b| (a.re.clone(), a.im.clone()).cmp(&(b.re.clone(), b.im.clone())));
                if want == excluded {
                    return Ok(Transition::Shape(FeasibleShape::new(j, 1)));
                }
            }
            Err(HcfError::UnclassifiableShape(format!(
                "excluded {{{}, {}}}",
                excluded[0], excluded[1]
            )))
        }
        _ => Err(HcfError::UnclassifiableShape(format!(
            "{} surviving disks",
            excluded.len()
        ))),
    }
}

fn digit_transition_uncached(shape: FeasibleShape, digit: &GaussianInt) -> Result<Transition> {
    assert!(digit.norm() >= BigInt::from(2), "digit outside I");

    let mut degenerate = false;
    let mut killed = false;
    let mut disks: Vec<GaussianInt> = Vec::new();

    for c in shape.excluded_centers() {
        let n = c.norm();
        if n == BigInt::one() {
            // unit circle at a unit inverts to the half-plane
            // Re(c w) < 1/2; after translation the cut offset is the
            // integer Re(c b), so the box is kept whole or lost whole
            let m = (&c * digit).re;
            if m >= BigInt::from(2) {
                killed = true;
            } else if m == BigInt::one() {
                killed = true;
                degenerate = true;
            }
        } else {
            // |c|^2 = 2: circle maps to the unit circle at conj(c)
            disks.push(&c.conj() - digit);
        }
    }
    if killed {
        return Ok(Transition::Empty { degenerate });
    }

    // the four box edges invert to the unit circles at the units
    for u in units() {
        disks.push(&u - digit);
    }

    let mut relevant = Vec::new();
    for g in disks {
        if g.is_zero() {
            // the whole box sits inside the excluded disk
            return Ok(Transition::Empty { degenerate: false });
        }
        if disk_meets_box(&g) {
            relevant.push(g);
        }
    }
    classify(relevant)
}

type TransitionKey = (FeasibleShape, (i64, i64));

fn small_digit_table() -> &'static HashMap<TransitionKey, Transition> {
    static TABLE: OnceLock<HashMap<TransitionKey, Transition>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut map = HashMap::new();
        for shape in FeasibleShape::all() {
            for re in -3i64..=3 {
                for im in -3i64..=3 {
                    let n = re * re + im * im;
                    if (2..=8).contains(&n) {
                        let digit = GaussianInt::new(re, im);
                        let t = digit_transition_uncached(shape, &digit)
                            .expect("small-digit transitions are classifiable");
                        map.insert((shape, (re, im)), t);
                    }
                }
            }
        }
        map
    })
}

/// The feasible region after appending `digit` to a cylinder whose
/// current region is `shape`. Transitions for the finitely many digits
/// with `|b|^2 <= 8` are memoized; beyond that no disk reaches the box
/// and only the half-plane cuts remain.
pub fn digit_transition(shape: FeasibleShape, digit: &GaussianInt) -> Result<Transition> {
    use num_traits::ToPrimitive;
    if let (Some(re), Some(im)) = (digit.re.to_i64(), digit.im.to_i64()) {
        if let Some(n) = re.checked_mul(re).and_then(|r| im.checked_mul(im).and_then(|i| r.checked_add(i))) {
            if (2..=8).contains(&n) {
                return Ok(small_digit_table()[&(shape, (re, im))]);
            }
        }
    }
    digit_transition_uncached(shape, digit)
}

/// True iff the digit string names a nonempty cylinder: iterating the
/// transition system from the full box never goes empty.
pub fn admissible(digits: &[GaussianInt]) -> bool {
    shape_of_prefix(digits).map(|t| !t.is_empty()).unwrap_or(false)
}

/// Folds the transition system over a digit string.
pub fn shape_of_prefix(digits: &[GaussianInt]) -> Result<Transition> {
    let mut cur = FeasibleShape::FULL;
    for d in digits {
        match digit_transition(cur, d)? {
            Transition::Shape(s) => cur = s,
            empty @ Transition::Empty { .. } => return Ok(empty),
        }
    }
    Ok(Transition::Shape(cur))
}

/// Digit filters used when enumerating valid digits of a region.
#[derive(Debug, Clone, Copy)]
pub enum NormFilter {
    /// `L <= |a| <= M` in the Euclidean norm.
    Euclidean { lo: f64, hi: f64 },
    /// `lo <= ||a|| <= hi` in the sup norm.
    Sup { lo: f64, hi: f64 },
}

impl NormFilter {
    fn lattice_points(&self) -> Vec<GaussianInt> {
        let mut out = Vec::new();
        match *self {
            NormFilter::Euclidean { lo, hi } => {
                let bound = hi.ceil() as i64;
                let lo2 = lo * lo;
                let hi2 = hi * hi;
                for re in -bound..=bound {
                    for im in -bound..=bound {
                        let n = (re * re + im * im) as f64;
                        if n >= lo2 && n <= hi2 && n >= 2.0 {
                            out.push(GaussianInt::new(re, im));
                        }
                    }
                }
            }
            NormFilter::Sup { lo, hi } => {
                let bound = hi.floor() as i64;
                let lo_i = lo.ceil() as i64;
                for re in -bound..=bound {
                    for im in -bound..=bound {
                        let s = re.abs().max(im.abs());
                        if s >= lo_i && s <= bound && re * re + im * im >= 2 {
                            out.push(GaussianInt::new(re, im));
                        }
                    }
                }
            }
        }
        out
    }
}

/// All digits passing the filter whose transition from `shape` is
/// non-empty.
pub fn valid_digits(shape: FeasibleShape, filter: NormFilter) -> Result<Vec<GaussianInt>> {
    let mut out = Vec::new();
    for d in filter.lattice_points() {
        if !digit_transition(shape, &d)?.is_empty() {
            out.push(d);
        }
    }
    Ok(out)
}

/// The constants behind the separation and diameter-sandwich lemmas.
#[derive(Debug, Clone)]
pub struct SeparationConstants {
    /// `xi = [3+4i; 3+4i, 3+4i, ...]`, root of `xi^2 - (3+4i) xi - 1 = 0`
    /// with `|xi| > 1`.
    pub xi: BigComplex,
    pub xi_abs: BigFloat,
    /// `gamma = 2|xi| / (1+|xi|)^2`, rounded down so the lower diameter
    /// bound stays conservative.
    pub gamma: f64,
    pub gamma_hp: BigFloat,
    /// Separation constant for digit strings opening with `|a| >= sqrt 8`:
    /// any such tail has `|alpha| <= 1/(sqrt 8 - 1/sqrt 2)`, so distinct
    /// integer parts stay `1 - 2/(sqrt 8 - 1/sqrt 2)` apart.
    pub k_sep: f64,
    /// `| |xi|_quadratic - |xi|_fixed_point |`, agreement of the two
    /// independent solvers.
    pub solver_disagreement: f64,
}

/// Derives the constants with two independent solvers for `xi`.
pub fn derive_constants(bits: u32) -> SeparationConstants {
    let c = BigComplex::from_int(&GaussianInt::new(3, 4), bits);

    // solver 1: fixed-point iteration xi <- 3+4i + 1/xi
    let mut xi = c.clone();
    for _ in 0..((bits as usize) / 4 + 16) {
        xi = c.add(&xi.recip().expect("xi stays away from 0"));
    }

    // solver 2: quadratic formula xi = ((3+4i) + sqrt((3+4i)^2 + 4)) / 2
    let four = BigComplex::from_int(&GaussianInt::new(4, 0), bits);
    let disc = c.mul(&c).add(&four).sqrt();
    let half = BigComplex::from_rational(
        &GaussianRational::new(GaussianInt::new(1, 0), GaussianInt::new(2, 0)).unwrap(),
        bits,
    );
    let xi_quad = c.add(&disc).mul(&half);

    let abs_fp = xi.abs_hp();
    let abs_quad = xi_quad.abs_hp();
    let solver_disagreement = abs_fp.abs_diff(&abs_quad);

    let one = BigFloat::from_u32(1, bits);
    let two = BigFloat::from_u32(2, bits);
    let denom = abs_fp.add(&one);
    let gamma_hp = two.mul(&abs_fp).div(&denom.mul(&denom));
    // round toward zero: certificates must not benefit from float noise
    let gamma = next_down(gamma_hp.to_f64());

    let k_sep = 1.0 - 2.0 / (8f64.sqrt() - 1.0 / 2f64.sqrt());

    SeparationConstants {
        xi,
        xi_abs: abs_fp,
        gamma,
        gamma_hp,
        k_sep,
        solver_disagreement,
    }
}

fn next_down(x: f64) -> f64 {
    f64::from_bits(x.to_bits() - 1)
}

/// A node of the cylinder tree: digit string, Q-pair, feasible region,
/// and the diameter sandwich `gamma/|q_n|^2 <= diam <= 2/|q_n|^2`.
#[derive(Debug, Clone)]
pub struct CylinderNode {
    pub digits: Vec<GaussianInt>,
    pub q_pair: QPair,
    pub shape: FeasibleShape,
    pub diam_lower: f64,
    pub diam_upper: f64,
}

impl CylinderNode {
    pub fn root() -> Self {
        Self {
            digits: Vec::new(),
            q_pair: q_pair(&[]),
            shape: FeasibleShape::FULL,
            diam_lower: 1.0,
            diam_upper: 1.0,
        }
    }

    pub fn from_digits(digits: &[GaussianInt], gamma: f64) -> Result<Self> {
        let t = shape_of_prefix(digits)?;
        let shape = t
            .shape()
            .ok_or_else(|| HcfError::UnclassifiableShape("empty cylinder".into()))?;
        let qp = q_pair(digits);
        let q_norm = big_to_f64(&qp.q.norm());
        let lower_ok = digits.iter().all(|d| d.norm() >= BigInt::from(8));
        Ok(Self {
            digits: digits.to_vec(),
            q_pair: qp,
            shape,
            diam_lower: if lower_ok { gamma / q_norm } else { f64::NAN },
            diam_upper: 2.0 / q_norm,
        })
    }
}

/// The sandwich `(gamma/|q_n|^2, 2/|q_n|^2)`; the lower bound is only
/// claimed when every digit has `|a| >= sqrt 8`.
pub fn cylinder_diameter_bounds(node: &CylinderNode) -> Result<(f64, f64)> {
    if let Some(bad) = node.digits.iter().find(|d| d.norm() < BigInt::from(8)) {
        return Err(HcfError::LowerBoundInapplicable(bad.to_string()));
    }
    Ok((node.diam_lower, node.diam_upper))
}

/// Distance between the two witness tails `[0; a, +-(3+4i), +-(3+4i), ...]`
/// of a cylinder, evaluated in high precision. The sandwich lemma promises
/// this lies in `[gamma/|q_n|^2, 2/|q_n|^2]`.
pub fn witness_distance(prefix: &[GaussianInt], constants: &SeparationConstants) -> BigFloat {
    let bits = constants.xi.precision_bits();
    let qp = q_pair(prefix);
    let p = BigComplex::from_int(&qp.p, bits);
    let pp = BigComplex::from_int(&qp.p_prev, bits);
    let q = BigComplex::from_int(&qp.q, bits);
    let qprev = BigComplex::from_int(&qp.q_prev, bits);
    let eval = |xi: &BigComplex| -> BigComplex {
        let num = p.mul(xi).add(&pp);
        let den = q.mul(xi).add(&qprev);
        num.div(&den).expect("witness denominators are nonzero")
    };
    let neg_xi = BigComplex::from_int(&GaussianInt::zero(), bits).sub(&constants.xi);
    let z = eval(&constants.xi);
    let w = eval(&neg_xi);
    z.sub(&w).abs_hp()
}

/// Seeded rational sample points of the fundamental domain, used by the
/// Monte-Carlo cross-checks. Components are dyadic with denominator 2^16.
pub fn sample_domain_points(seed: u64, count: usize) -> Vec<GaussianRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let den = 1i64 << 16;
    (0..count)
        .map(|_| {
            let re = rng.gen_range(-den / 2..den / 2);
            let im = rng.gen_range(-den / 2..den / 2);
            GaussianRational::new(GaussianInt::new(re, im), GaussianInt::new(den, 0))
                .expect("denominator nonzero")
        })
        .collect()
}

/// Checks an exact transition claim against sample points: every sampled
/// `z` in `shape` whose digit is `digit` must map into the claimed image
/// region. Returns the number of misclassified points and the number of
/// points that actually exercised the cylinder.
pub fn transition_sampling_check(
    shape: FeasibleShape,
    digit: &GaussianInt,
    claimed: &Transition,
    samples: &[GaussianRational],
) -> (usize, usize) {
    let mut mismatched = 0;
    let mut hits = 0;
    for z in samples {
        if z.is_zero() || !shape.contains(z) {
            continue;
        }
        let w = z.recip().expect("nonzero");
        if &w.nearest_gaussian() != digit {
            continue;
        }
        hits += 1;
        let image = w.sub(&GaussianRational::from_int(digit.clone()));
        let inside = match claimed {
            Transition::Shape(s) => s.contains(&image),
            // empty interior: no sampled point may land strictly inside
            Transition::Empty { .. } => false,
        };
        if !inside {
            // boundary contacts are measure zero and do not count against
            // the classification; dyadic samples can only land on a
            // boundary if a coordinate or disk equation holds exactly
            if on_any_boundary(&image, claimed) {
                continue;
            }
            mismatched += 1;
        }
    }
    (mismatched, hits)
}

fn on_any_boundary(z: &GaussianRational, claimed: &Transition) -> bool {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if z.re().abs() == half || z.im().abs() == half {
        return true;
    }
    if let Transition::Shape(s) = claimed {
        for c in s.excluded_centers() {
            let d = z.sub(&GaussianRational::from_int(c));
            if d.norm_sqr() == BigRational::one() {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn gr(nre: i64, nim: i64, den: i64) -> GaussianRational {
        GaussianRational::new(gi(nre, nim), gi(den, 0)).unwrap()
    }

    #[test]
    fn thirteen_shapes() {
        let all = FeasibleShape::all();
        assert_eq!(all.len(), 13);
        let mut set: Vec<_> = all.iter().map(|s| s.label()).collect();
        set.dedup();
        assert_eq!(set.len(), 13);
    }

    #[test]
    fn membership_examples() {
        assert!(FeasibleShape::FULL.contains(&GaussianRational::zero()));
        // F2 excludes D(-1): -0.4 is 0.6 from -1, inside the disk
        let f2 = FeasibleShape::new(0, 2);
        assert!(!f2.contains(&gr(-4, 0, 10)));
        // F1: 0.4+0.4i clears both excluded disks
        let f1 = FeasibleShape::new(0, 1);
        assert!(f1.contains(&gr(4, 4, 10)));
    }

    #[test]
    fn transition_minus_two_gives_box_minus_disk_one() {
        // T[C_1(-2)] = F \ D(1) = i^2 * F2
        let t = digit_transition(FeasibleShape::FULL, &gi(-2, 0)).unwrap();
        assert_eq!(t, Transition::Shape(FeasibleShape::new(2, 2)));
    }

    #[test]
    fn transition_far_digits_keep_full_box() {
        for (re, im) in [(2, 2), (-2, 2), (3, 0), (0, -3), (3, 1), (-4, 5)] {
            let d = gi(re, im);
            assert!(d.norm() >= BigInt::from(8));
            let t = digit_transition(FeasibleShape::FULL, &d).unwrap();
            assert_eq!(t, Transition::Shape(FeasibleShape::FULL), "digit {d}");
        }
    }

    #[test]
    fn transition_produces_f1_and_f3() {
        // digit 1+i leaves the region excluding D(-1) and D(-i)
        let t = digit_transition(FeasibleShape::FULL, &gi(1, 1)).unwrap();
        assert_eq!(t, Transition::Shape(FeasibleShape::new(0, 1)));
        // digit 2+i leaves the region excluding D(-1-i)
        let t = digit_transition(FeasibleShape::FULL, &gi(2, 1)).unwrap();
        assert_eq!(t, Transition::Shape(FeasibleShape::new(0, 3)));
    }

    #[test]
    fn degenerate_segment_after_minus_two() {
        // T^2[C_2(-2, 1-3i)] is a vertical segment: empty interior,
        // flagged degenerate
        let after = digit_transition(FeasibleShape::FULL, &gi(-2, 0))
            .unwrap()
            .shape()
            .unwrap();
        let t = digit_transition(after, &gi(1, -3)).unwrap();
        assert_eq!(t, Transition::Empty { degenerate: true });
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissible(&[gi(3, 0), gi(0, 3), gi(-3, 0)]));
        // every single digit in I is admissible
        for (re, im) in [(1, 1), (-1, 1), (0, 2), (-2, 0), (3, 4)] {
            assert!(admissible(&[gi(re, im)]));
        }
        // after -2 the region excludes D(1); digits with positive real
        // part are cut off
        assert!(!admissible(&[gi(-2, 0), gi(5, 0)]));
        assert!(admissible(&[gi(-2, 0), gi(-5, 0)]));
    }

    #[test]
    fn transition_system_closure() {
        // walk every (shape, small digit) pair; everything classifies and
        // at most 13 shapes are reachable
        let mut reached = std::collections::HashSet::new();
        for shape in FeasibleShape::all() {
            for re in -3i64..=3 {
                for im in -3i64..=3 {
                    let n = re * re + im * im;
                    if (2..=8).contains(&n) {
                        let t = digit_transition(shape, &gi(re, im)).unwrap();
                        if let Some(s) = t.shape() {
                            reached.insert(s);
                        }
                    }
                }
            }
        }
        assert!(reached.len() <= 13);
    }

    #[test]
    fn valid_digit_counts() {
        // |a| in [3, 5]: 56 Gaussian integers with 9 <= re^2+im^2 <= 25
        // (norms 9,10,13,16,17,18,20,25 contribute 4+8+8+4+8+4+8+12)
        let v = valid_digits(FeasibleShape::FULL, NormFilter::Euclidean { lo: 3.0, hi: 5.0 })
            .unwrap();
        assert_eq!(v.len(), 56);
        // sup norm exactly 3: the 24 lattice points on the square ring
        let v = valid_digits(FeasibleShape::FULL, NormFilter::Sup { lo: 3.0, hi: 3.0 }).unwrap();
        assert_eq!(v.len(), 24);
    }

    #[test]
    fn constants_sanity() {
        let c = derive_constants(192);
        assert!(c.solver_disagreement < 1e-30);
        assert!(c.gamma > 0.0 && c.gamma <= 0.5);
        assert!(c.k_sep > 0.05);
        // xi = 3+4i + 1/xi pulls |xi| a little below |3+4i| = 5
        let abs = c.xi_abs.to_f64();
        assert!((4.9..5.0).contains(&abs), "{abs}");
    }

    #[test]
    fn witness_distance_in_sandwich() {
        let c = derive_constants(192);
        let prefix = [gi(3, 4)];
        let d = witness_distance(&prefix, &c).to_f64();
        // |q_1|^2 = 25
        assert!(d >= c.gamma / 25.0, "{d}");
        assert!(d <= 2.0 / 25.0, "{d}");
    }

    #[test]
    fn sampling_agrees_with_exact_transition() {
        let samples = sample_domain_points(7, 4000);
        for (shape, digit) in [
            (FeasibleShape::FULL, gi(-2, 0)),
            (FeasibleShape::FULL, gi(1, 1)),
            (FeasibleShape::FULL, gi(2, 1)),
            (FeasibleShape::new(2, 2), gi(-2, 0)),
            (FeasibleShape::new(0, 1), gi(2, 2)),
        ] {
            let t = digit_transition(shape, &digit).unwrap();
            let (bad, _) = transition_sampling_check(shape, &digit, &t, &samples);
            assert_eq!(bad, 0, "shape {} digit {digit}", shape.label());
        }
    }
}
