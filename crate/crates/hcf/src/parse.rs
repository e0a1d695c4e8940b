//! Parsing of complex literals.
//!
//! Accepted forms:
//!   * `a+bi` with integer components: `3-4i`, `-2i`, `7`, `i`
//!   * decimal components: `0.3+0.3i`, `-1.25i`
//!   * fraction components: `1/3+2/7i`, `-1/2i`
//!   * exact Gaussian-rational quotients: `(3-4i)/(25)`, `(1)/(2+2i)`
//!
//! Every literal denotes an exact element of `Q(i)`; the `decimal` flag
//! records whether the writer used decimal points, which the CLI uses to
//! select the approximate orbit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{HcfError, Result};
use crate::gauss::{GaussianInt, GaussianRational};

#[derive(Debug, Clone)]
pub struct ParsedComplex {
    pub value: GaussianRational,
    /// True when the literal used decimal points.
    pub decimal: bool,
}

pub fn parse_complex(input: &str) -> Result<ParsedComplex> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(HcfError::Parse(input.to_string()));
    }
    if let Some((num, den)) = split_quotient(&s) {
        let (nre, nim, ndec) = parse_components(num).ok_or_else(err(input))?;
        let (dre, dim, ddec) = parse_components(den).ok_or_else(err(input))?;
        if ndec || ddec {
            return Err(HcfError::Parse(input.to_string()));
        }
        let num = rational_pair_to_int(&nre, &nim).ok_or_else(err(input))?;
        let den = rational_pair_to_int(&dre, &dim).ok_or_else(err(input))?;
        let value = GaussianRational::new(num, den)?;
        return Ok(ParsedComplex { value, decimal: false });
    }
    let (re, im, decimal) = parse_components(&s).ok_or_else(err(input))?;
    let value = rational_to_gaussian(&re, &im)?;
    Ok(ParsedComplex { value, decimal })
}

fn err(input: &str) -> impl Fn() -> HcfError + '_ {
    move || HcfError::Parse(input.to_string())
}

/// Splits `(num)/(den)` into its two parenthesised halves.
fn split_quotient(s: &str) -> Option<(&str, &str)> {
    let s = s.strip_prefix('(')?;
    let close = s.find(')')?;
    let num = &s[..close];
    let rest = s[close + 1..].strip_prefix('/')?;
    let den = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some((num, den))
}

/// Parses `a+bi` into exact rational components; third element flags
/// decimal notation.
fn parse_components(s: &str) -> Option<(BigRational, BigRational, bool)> {
    let mut re = BigRational::zero();
    let mut im = BigRational::zero();
    let mut decimal = false;
    let mut seen_re = false;
    let mut seen_im = false;
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = BigRational::one();
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -sign;
                pos += 1;
            }
            _ => {}
        }
        let start = pos;
        let mut seen_dot = false;
        while pos < bytes.len() {
            match bytes[pos] {
                b'0'..=b'9' => pos += 1,
                b'.' if !seen_dot => {
                    seen_dot = true;
                    pos += 1;
                }
                _ => break,
            }
        }
        let digits = &s[start..pos];
        // exact fraction component `p/q` with integer halves
        let mut denom: Option<&str> = None;
        if pos < bytes.len() && bytes[pos] == b'/' && !seen_dot && !digits.is_empty() {
            pos += 1;
            let dstart = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == dstart {
                return None;
            }
            denom = Some(&s[dstart..pos]);
        }
        let is_imag = pos < bytes.len() && bytes[pos] == b'i';
        if is_imag {
            pos += 1;
        }
        let magnitude = if digits.is_empty() {
            if !is_imag {
                return None; // bare sign
            }
            BigRational::one() // "i" or "-i"
        } else {
            decimal |= seen_dot;
            let mut m = parse_decimal(digits)?;
            if let Some(d) = denom {
                let d = parse_decimal(d)?;
                if d.is_zero() {
                    return None;
                }
                m /= d;
            }
            m
        };
        if is_imag {
            if seen_im {
                return None;
            }
            seen_im = true;
            im = sign * magnitude;
        } else {
            if seen_re {
                return None;
            }
            seen_re = true;
            re = sign * magnitude;
        }
    }
    if !seen_re && !seen_im {
        return None;
    }
    Some((re, im, decimal))
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    if let Some(dot) = s.find('.') {
        let int_part = &s[..dot];
        let frac_part = &s[dot + 1..];
        if frac_part.is_empty() && int_part.is_empty() {
            return None;
        }
        let joined: String = [int_part, frac_part].concat();
        let n: BigInt = joined.parse().ok()?;
        let den = BigInt::from(10).pow(frac_part.len() as u32);
        Some(BigRational::new(n, den))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from(n))
    }
}

fn rational_pair_to_int(re: &BigRational, im: &BigRational) -> Option<GaussianInt> {
    if !re.is_integer() || !im.is_integer() {
        return None;
    }
    Some(GaussianInt::new(re.to_integer(), im.to_integer()))
}

fn rational_to_gaussian(re: &BigRational, im: &BigRational) -> Result<GaussianRational> {
    // common denominator d: value = (re_n d/re_d + i im_n d/im_d) / d
    let d = re.denom() * im.denom();
    let num = GaussianInt::new(re.numer() * im.denom(), im.numer() * re.denom());
    GaussianRational::new(num, GaussianInt::new(d, BigInt::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_ok(s: &str) -> ParsedComplex {
        parse_complex(s).unwrap()
    }

    #[test]
    fn quotient_literals() {
        let p = parse_ok("(3-4i)/(25)");
        assert!(!p.decimal);
        assert_eq!(
            p.value,
            GaussianRational::new(GaussianInt::new(3, -4), GaussianInt::new(25, 0)).unwrap()
        );
        let q = parse_ok("(1)/(3+4i)");
        assert_eq!(p.value, q.value);
    }

    #[test]
    fn integer_and_unit_literals() {
        assert_eq!(parse_ok("3-4i").value, GaussianRational::from_int(GaussianInt::new(3, -4)));
        assert_eq!(parse_ok("-2i").value, GaussianRational::from_int(GaussianInt::new(0, -2)));
        assert_eq!(parse_ok("i").value, GaussianRational::from_int(GaussianInt::new(0, 1)));
        assert_eq!(parse_ok("0").value, GaussianRational::zero());
    }

    #[test]
    fn fraction_components() {
        let p = parse_ok("1/3+2/7i");
        assert!(!p.decimal);
        // 1/3 + (2/7)i = (7 + 6i)/21
        assert_eq!(
            p.value,
            GaussianRational::new(GaussianInt::new(7, 6), GaussianInt::new(21, 0)).unwrap()
        );
        assert_eq!(
            parse_ok("-1/2i").value,
            GaussianRational::new(GaussianInt::new(0, -1), GaussianInt::new(2, 0)).unwrap()
        );
    }

    #[test]
    fn decimal_literals() {
        let p = parse_ok("0.3+0.3i");
        assert!(p.decimal);
        assert_eq!(
            p.value,
            GaussianRational::new(GaussianInt::new(3, 3), GaussianInt::new(10, 0)).unwrap()
        );
        let q = parse_ok("-0.5");
        assert_eq!(
            q.value,
            GaussianRational::new(GaussianInt::new(-1, 0), GaussianInt::new(2, 0)).unwrap()
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1+2", "++3", "1i2i", "(1)/(0.5)", "1/0", "0.5/2", "1/"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }
}
