//! Exact arithmetic in the ring of Gaussian integers `Z[i]` and its field
//! of fractions `Q(i)`.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so values may be shared freely between workers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HcfError, Result};

/// An element of `Z[i]` with unbounded integer components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// The field norm `re^2 + im^2 = |z|^2`, always exact and non-negative.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Euclidean absolute value `|z|` as a float.
    pub fn abs(&self) -> f64 {
        big_to_f64(&self.norm()).sqrt()
    }

    /// Sup norm `max(|re|, |im|)`.
    pub fn sup_norm(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    /// Multiplication by `i^k`.
    pub fn mul_i_pow(&self, k: u8) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => Self { re: -&self.im, im: self.re.clone() },
            2 => -self,
            _ => Self { re: self.im.clone(), im: -&self.re },
        }
    }

    /// Quotient and remainder with the quotient rounded to a nearest
    /// Gaussian integer, so `|r| <= |d|/sqrt(2)`.
    pub fn div_rem_nearest(&self, d: &GaussianInt) -> Result<(GaussianInt, GaussianInt)> {
        if d.is_zero() {
            return Err(HcfError::DivisionByZero);
        }
        let n = d.norm();
        let t = self * &d.conj();
        let q = GaussianInt {
            re: round_half_up(&t.re, &n),
            im: round_half_up(&t.im, &n),
        };
        let r = self - &(&q * d);
        Ok((q, r))
    }

    /// Greatest common divisor, unique up to a unit.
    pub fn gcd(&self, other: &GaussianInt) -> GaussianInt {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem_nearest(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a
    }

    /// The unit `u` such that `u * self` has argument in `[0, pi/2)`,
    /// i.e. positive real part and non-negative imaginary part.
    pub fn normalizing_unit(&self) -> GaussianInt {
        assert!(!self.is_zero(), "zero has no normalizing unit");
        let re_pos = self.re.is_positive();
        let im_pos = self.im.is_positive();
        if re_pos && !self.im.is_negative() {
            GaussianInt::one()
        } else if !re_pos && im_pos && !self.re.is_positive() {
            // second quadrant or positive imaginary axis: multiply by -i
            -&GaussianInt::i()
        } else if self.re.is_negative() && !im_pos {
            -&GaussianInt::one()
        } else {
            GaussianInt::i()
        }
    }
}

/// `floor(n/d + 1/2)` for exact rationals `n/d`, `d > 0`; halves round up.
pub(crate) fn round_half_up(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

pub(crate) fn big_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::INFINITY)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &GaussianInt) -> GaussianInt {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = if self.im == BigInt::one() {
            "i".to_string()
        } else if self.im == -BigInt::one() {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{im_part}")
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, im_part)
        } else {
            write!(f, "{}+{}", self.re, im_part)
        }
    }
}

/// An exact element of `Q(i)`, stored in canonical reduced form: numerator
/// and denominator are coprime and the denominator is the associate with
/// argument in `[0, pi/2)`. Equality is a field compare.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num: GaussianInt,
    den: GaussianInt,
}

impl GaussianRational {
    pub fn new(num: GaussianInt, den: GaussianInt) -> Result<Self> {
        if den.is_zero() {
            return Err(HcfError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self { num, den: GaussianInt::one() });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem_nearest(&g)?;
        let (den, _) = den.div_rem_nearest(&g)?;
        let u = den.normalizing_unit();
        Ok(Self { num: &num * &u, den: &den * &u })
    }

    pub fn from_int(z: GaussianInt) -> Self {
        Self { num: z, den: GaussianInt::one() }
    }

    pub fn zero() -> Self {
        Self::from_int(GaussianInt::zero())
    }

    pub fn num(&self) -> &GaussianInt {
        &self.num
    }

    pub fn den(&self) -> &GaussianInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den == GaussianInt::one()
    }

    /// Real part as an exact rational.
    pub fn re(&self) -> BigRational {
        let t = &self.num * &self.den.conj();
        BigRational::new(t.re, self.den.norm())
    }

    /// Imaginary part as an exact rational.
    pub fn im(&self) -> BigRational {
        let t = &self.num * &self.den.conj();
        BigRational::new(t.im, self.den.norm())
    }

    /// `|z|^2` as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        BigRational::new(self.num.norm(), self.den.norm())
    }

    /// Euclidean and sup norms `(|z|, ||z||)` as floats, with
    /// `||z|| <= |z| <= sqrt(2) ||z||`.
    pub fn norms(&self) -> (f64, f64) {
        let abs = rational_to_f64(&self.norm_sqr()).sqrt();
        let re = rational_to_f64(&self.re()).abs();
        let im = rational_to_f64(&self.im()).abs();
        (abs, re.max(im))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(HcfError::DivisionByZero);
        }
        let u = self.num.normalizing_unit();
        Ok(Self { num: &self.den * &u, den: &self.num * &u })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        Self::new(num, den).expect("denominator nonzero")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominator nonzero")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn add_int(&self, g: &GaussianInt) -> Self {
        self.add(&Self::from_int(g.clone()))
    }

    /// Nearest Gaussian integer `[z] = floor(Re z + 1/2) + i floor(Im z + 1/2)`,
    /// exact; halves round up, following the half-open rounding cell.
    pub fn nearest_gaussian(&self) -> GaussianInt {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        GaussianInt {
            re: (self.re() + &half).floor().to_integer(),
            im: (self.im() + &half).floor().to_integer(),
        }
    }

    /// Exact membership in the fundamental domain
    /// `-1/2 <= Re z, Im z < 1/2` (half-open on the right, closed on the left).
    pub fn in_fundamental_domain(&self) -> bool {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let neg_half = -half.clone();
        let re = self.re();
        let im = self.im();
        neg_half <= re && re < half && neg_half <= im && im < half
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back to a scaled quotient when numerator or denominator
        // individually overflow f64
        let scale = BigInt::one() << 64;
        let scaled: BigInt = r.numer() * &scale;
        let q = scaled.div_floor(r.denom());
        big_to_f64(&q) / 2f64.powi(64)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn gr(nre: i64, nim: i64, dre: i64, dim: i64) -> GaussianRational {
        GaussianRational::new(gi(nre, nim), gi(dre, dim)).unwrap()
    }

    #[test]
    fn norm_is_exact() {
        assert_eq!(gi(3, 4).norm(), BigInt::from(25));
        assert_eq!(gi(0, 0).norm(), BigInt::from(0));
    }

    #[test]
    fn norms_triangle() {
        let (abs, sup) = gr(3, 4, 1, 0).norms();
        assert_eq!(abs, 5.0);
        assert_eq!(sup, 4.0);
        let (abs, sup) = gr(1, 1, 1, 0).norms();
        assert!((abs - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(sup, 1.0);
        let (abs, sup) = GaussianRational::zero().norms();
        assert_eq!((abs, sup), (0.0, 0.0));
    }

    #[test]
    fn nearest_gaussian_examples() {
        // 0 is a fixed point of rounding
        assert_eq!(GaussianRational::zero().nearest_gaussian(), gi(0, 0));
        // halves round up: 1/2 + i/2 -> 1 + i
        assert_eq!(gr(1, 1, 2, 0).nearest_gaussian(), gi(1, 1));
        // 3.2 - 4.7i = (32 - 47i)/10 -> 3 - 5i
        assert_eq!(gr(32, -47, 10, 0).nearest_gaussian(), gi(3, -5));
    }

    #[test]
    fn fundamental_domain_convention() {
        assert!(GaussianRational::zero().in_fundamental_domain());
        // left/bottom edges belong to F, right/top do not
        assert!(gr(-1, -1, 2, 0).in_fundamental_domain());
        assert!(!gr(1, 0, 2, 0).in_fundamental_domain());
        // 0.49 + 0.49i
        assert!(gr(49, 49, 100, 0).in_fundamental_domain());
    }

    #[test]
    fn canonical_form_is_unique() {
        // (3-4i)/25 = 1/(3+4i) in all unit presentations
        let a = gr(3, -4, 25, 0);
        let b = gr(1, 0, 3, 4);
        let c = gr(-3, 4, -25, 0);
        assert_eq!(a, b);
        assert_eq!(a, c);
        // denominator argument lies in [0, pi/2)
        assert!(a.den().re.is_positive());
        assert!(!a.den().im.is_negative());
    }

    #[test]
    fn translation_equivariance() {
        let z = gr(7, -3, 13, 5);
        let g = gi(-4, 9);
        let lhs = z.add_int(&g).nearest_gaussian();
        let rhs = &z.nearest_gaussian() + &g;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fractional_part_lands_in_domain() {
        for (nre, nim, dre, dim) in [(7, -3, 13, 5), (100, 99, 7, -2), (-5, 11, 3, 3)] {
            let z = gr(nre, nim, dre, dim);
            let frac = z.sub(&GaussianRational::from_int(z.nearest_gaussian()));
            assert!(frac.in_fundamental_domain(), "{z}");
        }
    }

    #[test]
    fn recip_and_field_ops() {
        let z = gr(3, -4, 25, 0);
        let r = z.recip().unwrap();
        assert_eq!(r, gr(3, 4, 1, 0));
        assert_eq!(z.mul(&r), GaussianRational::from_int(gi(1, 0)));
        assert!(GaussianRational::zero().recip().is_err());
    }

    #[test]
    fn gcd_reduces() {
        let g = gi(6, 8).gcd(&gi(3, 4));
        assert_eq!(g.norm(), BigInt::from(25));
    }
}
