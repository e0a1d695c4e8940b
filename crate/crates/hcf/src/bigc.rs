//! Arbitrary-precision complex floats.
//!
//! A `BigComplex` stores both components as dyadic fixed-point numbers
//! `m / 2^bits` with unbounded mantissas, together with a heuristic
//! absolute error radius per component. Exactness, where required, comes
//! from the `GaussianRational` paths; the error radius here only has to
//! be good enough to certify digit extraction away from cell boundaries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{HcfError, Result};
use crate::gauss::{big_to_f64, GaussianInt, GaussianRational};

/// Default working precision for orbits; depth-50 orbits lose only a few
/// bits per step, so this leaves ample margin.
pub const DEFAULT_PRECISION: u32 = 256;

/// Certified-bit floor below which digit extraction is refused.
pub const PRECISION_FLOOR: i64 = 32;

/// Strict-mode guard: a component must be at least this many error radii
/// (2^8) away from a half-integer boundary before rounding is accepted.
const BOUNDARY_GUARD: f64 = 256.0;

#[derive(Debug, Clone)]
pub struct BigComplex {
    re: BigInt,
    im: BigInt,
    bits: u32,
    /// Absolute error radius bounding each component, in value units.
    err: f64,
}

impl BigComplex {
    pub fn from_mantissas(re: BigInt, im: BigInt, bits: u32, err: f64) -> Self {
        Self { re, im, bits, err }
    }

    pub fn from_rational(z: &GaussianRational, bits: u32) -> Self {
        let scale = BigInt::from(1) << bits;
        let re = z.re();
        let im = z.im();
        let round = |r: &num_rational::BigRational| -> BigInt {
            let n = r.numer() * &scale;
            crate::gauss::round_half_up(&n, r.denom())
        };
        Self {
            re: round(&re),
            im: round(&im),
            bits,
            err: ulp(bits),
        }
    }

    pub fn from_int(g: &GaussianInt, bits: u32) -> Self {
        Self {
            re: &g.re << bits,
            im: &g.im << bits,
            bits,
            err: 0.0,
        }
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        let s = 2f64.powi(bits.min(52) as i32);
        let shift = bits.saturating_sub(52);
        Self {
            re: BigInt::from((re * s).round() as i64) << shift,
            im: BigInt::from((im * s).round() as i64) << shift,
            bits,
            err: re.abs().max(im.abs()).max(1.0) * f64::EPSILON,
        }
    }

    pub fn precision_bits(&self) -> u32 {
        self.bits
    }

    /// Number of certified bits: `-log2` of the error radius. `i64::MAX`
    /// marks an exact value.
    pub fn certified_bits(&self) -> i64 {
        if self.err == 0.0 {
            i64::MAX
        } else {
            (-self.err.log2()).floor() as i64
        }
    }

    pub fn error_radius(&self) -> f64 {
        self.err
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let s = ulp(self.bits);
        (big_to_f64(&self.re) * s, big_to_f64(&self.im) * s)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn abs(&self) -> f64 {
        let (re, im) = self.to_f64();
        re.hypot(im)
    }

    /// Euclidean and sup norms `(|z|, ||z||)`.
    pub fn norms(&self) -> (f64, f64) {
        let (re, im) = self.to_f64();
        (re.hypot(im), re.abs().max(im.abs()))
    }

    fn align(&self, other: &Self) -> (BigInt, BigInt, BigInt, BigInt, u32, f64, f64) {
        // results carry the min of the operand precisions
        let bits = self.bits.min(other.bits);
        let a = rescale(&self.re, self.bits, bits);
        let b = rescale(&self.im, self.bits, bits);
        let c = rescale(&other.re, other.bits, bits);
        let d = rescale(&other.im, other.bits, bits);
        (a, b, c, d, bits, self.err, other.err)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b, c, d, bits, e1, e2) = self.align(rhs);
        Self { re: a + c, im: b + d, bits, err: e1 + e2 + ulp(bits) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let (a, b, c, d, bits, e1, e2) = self.align(rhs);
        Self { re: a - c, im: b - d, bits, err: e1 + e2 + ulp(bits) }
    }

    pub fn sub_int(&self, g: &GaussianInt) -> Self {
        Self {
            re: &self.re - (&g.re << self.bits),
            im: &self.im - (&g.im << self.bits),
            bits: self.bits,
            err: self.err,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b, c, d, bits, e1, e2) = self.align(rhs);
        let re = &a * &c - &b * &d;
        let im = &a * &d + &b * &c;
        let m1 = self.abs();
        let m2 = rhs.abs();
        Self {
            re: shift_round(&re, bits),
            im: shift_round(&im, bits),
            bits,
            err: m1 * e2 + m2 * e1 + e1 * e2 + 2.0 * ulp(bits),
        }
    }

    /// `1/z`, the only operation that can magnify the error radius
    /// substantially: the input error is scaled by `1/|z|^2`.
    pub fn recip(&self) -> Result<Self> {
        if self.re.is_zero() && self.im.is_zero() {
            return Err(HcfError::ZeroInput);
        }
        let bits = self.bits;
        let n = &self.re * &self.re + &self.im * &self.im; // scaled by 2^(2 bits)
        let num_re = &self.re << bits;
        let num_im = -&self.im << bits;
        let re = div_round(&(num_re << bits), &n);
        let im = div_round(&(num_im << bits), &n);
        let abs2 = {
            let a = self.abs();
            a * a
        };
        if abs2 == 0.0 {
            return Err(HcfError::ZeroInput);
        }
        Ok(Self {
            re,
            im,
            bits,
            err: self.err / abs2 * 1.5 + 2.0 * ulp(bits),
        })
    }

    /// Nearest Gaussian integer of the value. In strict mode the rounding
    /// must be certified: each component must sit well clear of the
    /// half-integer boundary relative to the error radius.
    pub fn nearest_gaussian(&self, strict: bool) -> Result<GaussianInt> {
        let half = BigInt::from(1) << (self.bits - 1);
        let one = BigInt::from(1) << self.bits;
        let mut out = Vec::with_capacity(2);
        for m in [&self.re, &self.im] {
            let t = m + &half;
            let (q, r) = t.div_mod_floor(&one);
            if strict {
                let frac = big_to_f64(&r) * ulp(self.bits);
                let dist = frac.min(1.0 - frac);
                if dist < self.err * BOUNDARY_GUARD {
                    return Err(HcfError::AmbiguousRounding);
                }
            }
            out.push(q);
        }
        let im = out.pop().unwrap();
        let re = out.pop().unwrap();
        Ok(GaussianInt { re, im })
    }

    /// Real square root of `|z|^2`, high precision.
    pub fn abs_hp(&self) -> BigFloat {
        let n = &self.re * &self.re + &self.im * &self.im; // scale 2^(2 bits)
        BigFloat { m: n.sqrt(), bits: self.bits }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Principal complex square root via `Re w = sqrt((|z|+Re z)/2)`,
    /// `Im w = sign(Im z) sqrt((|z|-Re z)/2)`.
    pub fn sqrt(&self) -> Self {
        let bits = self.bits;
        let r = self.abs_hp().m; // scale 2^bits
        let t1 = shift_round_by(&(&r + &self.re), 1);
        let t2 = shift_round_by(&(&r - &self.re), 1);
        let re = (t1.max(BigInt::zero()) << bits).sqrt();
        let mut im = (t2.max(BigInt::zero()) << bits).sqrt();
        if self.im.is_negative() {
            im = -im;
        }
        Self {
            re,
            im,
            bits,
            err: self.err.sqrt().max(4.0 * ulp(bits)),
        }
    }
}

fn ulp(bits: u32) -> f64 {
    2f64.powi(-(bits as i32))
}

fn rescale(m: &BigInt, from: u32, to: u32) -> BigInt {
    if from == to {
        m.clone()
    } else if from < to {
        m << (to - from)
    } else {
        shift_round_by(m, from - to)
    }
}

fn shift_round_by(m: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return m.clone();
    }
    let half = BigInt::from(1) << (k - 1);
    (m + half) >> k
}

/// Round `m / 2^bits` back to scale `bits` after a product at scale `2 bits`.
fn shift_round(m: &BigInt, bits: u32) -> BigInt {
    shift_round_by(m, bits)
}

/// Rounded integer division `round(n/d)` valid for either sign of `n`, `d > 0`.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

/// A positive dyadic fixed-point real, used for high-precision absolute
/// values and the constants derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFloat {
    pub m: BigInt,
    pub bits: u32,
}

impl BigFloat {
    pub fn from_u32(v: u32, bits: u32) -> Self {
        Self { m: BigInt::from(v) << bits, bits }
    }

    pub fn to_f64(&self) -> f64 {
        big_to_f64(&self.m) * ulp(self.bits)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.bits, rhs.bits);
        Self { m: &self.m + &rhs.m, bits: self.bits }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.bits, rhs.bits);
        Self { m: shift_round_by(&(&self.m * &rhs.m), self.bits), bits: self.bits }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert_eq!(self.bits, rhs.bits);
        Self { m: div_round(&(&self.m << self.bits), &rhs.m), bits: self.bits }
    }

    /// Absolute difference in value units.
    pub fn abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.bits, rhs.bits);
        big_to_f64(&(&self.m - &rhs.m).abs()) * ulp(self.bits)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.bits, rhs.bits);
        Self { m: &self.m - &rhs.m, bits: self.bits }
    }

    pub fn from_ratio(n: i64, d: i64, bits: u32) -> Self {
        assert!(d > 0);
        Self {
            m: div_round(&(BigInt::from(n) << bits), &BigInt::from(d)),
            bits,
        }
    }

    fn div_int(&self, d: i64) -> Self {
        Self { m: div_round(&self.m, &BigInt::from(d)), bits: self.bits }
    }

    fn is_zero_val(&self) -> bool {
        self.m.is_zero()
    }

    /// `atanh(t) = t + t^3/3 + t^5/5 + …`, requires `|t| < 1` and converges
    /// fast only for small `|t|`; callers range-reduce first.
    fn atanh_series(&self) -> Self {
        let t2 = self.mul(self);
        let mut term = self.clone();
        let mut sum = self.clone();
        let mut k: i64 = 1;
        loop {
            term = term.mul(&t2);
            k += 2;
            let inc = term.div_int(k);
            if inc.is_zero_val() {
                break;
            }
            sum = sum.add(&inc);
        }
        sum
    }

    /// Natural logarithm of a positive value: range-reduce to
    /// `m ∈ [2/3, 4/3)` by powers of two, then
    /// `ln x = e ln 2 + 2 atanh((m−1)/(m+1))`.
    pub fn ln(&self) -> Self {
        assert!(self.m.is_positive(), "ln of non-positive value");
        let bits = self.bits;
        let one = Self::from_u32(1, bits);
        let two = Self::from_u32(2, bits);
        let lo = Self::from_ratio(2, 3, bits);
        let hi = Self::from_ratio(4, 3, bits);
        let mut m = self.clone();
        let mut e: i64 = 0;
        while m.m >= hi.m {
            m = Self { m: shift_round_by(&m.m, 1), bits };
            e += 1;
        }
        while m.m < lo.m {
            m = Self { m: &m.m << 1, bits };
            e -= 1;
        }
        let t = m.sub(&one).div(&m.add(&one));
        let ln_m = two.mul(&t.atanh_series());
        // ln 2 = 2 atanh(1/3)
        let ln2 = two.mul(&Self::from_ratio(1, 3, bits).atanh_series());
        let mut out = ln_m;
        let scaled = Self { m: &ln2.m * BigInt::from(e.abs()), bits };
        if e >= 0 {
            out = out.add(&scaled);
        } else {
            out = out.sub(&scaled);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_rational() {
        let z = GaussianRational::new(GaussianInt::new(3, -4), GaussianInt::new(25, 0)).unwrap();
        let b = BigComplex::from_rational(&z, 128);
        let (re, im) = b.to_f64();
        assert!((re - 0.12).abs() < 1e-30);
        assert!((im + 0.16).abs() < 1e-30);
        assert!(b.certified_bits() > 120);
    }

    #[test]
    fn recip_matches_exact() {
        let z = GaussianRational::new(GaussianInt::new(3, -4), GaussianInt::new(25, 0)).unwrap();
        let b = BigComplex::from_rational(&z, 192).recip().unwrap();
        let (re, im) = b.to_f64();
        assert!((re - 3.0).abs() < 1e-30);
        assert!((im - 4.0).abs() < 1e-30);
    }

    #[test]
    fn strict_rounding_rejects_boundary() {
        let b = BigComplex::from_f64(0.5, 0.0, 128);
        assert!(matches!(
            b.nearest_gaussian(true),
            Err(HcfError::AmbiguousRounding)
        ));
        // lenient mode applies the half-open convention: halves round up
        assert_eq!(
            b.nearest_gaussian(false).unwrap(),
            GaussianInt::new(1, 0)
        );
    }

    #[test]
    fn bigfloat_ln_matches_f64() {
        for v in [(1i64, 1i64), (2, 1), (10, 1), (10000, 1), (1, 7), (136, 1000)] {
            let x = BigFloat::from_ratio(v.0, v.1, 256);
            let want = (v.0 as f64 / v.1 as f64).ln();
            assert!((x.ln().to_f64() - want).abs() < 1e-14, "{v:?}");
        }
    }

    #[test]
    fn precision_carries_min_of_operands() {
        let a = BigComplex::from_f64(0.25, 0.0, 256);
        let b = BigComplex::from_f64(0.125, 0.0, 128);
        assert_eq!(a.add(&b).precision_bits(), 128);
    }
}
