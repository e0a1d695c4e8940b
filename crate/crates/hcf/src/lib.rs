//! Hurwitz continued fractions over the Gaussian integers: exact
//! expansions and convergents, the cylinder transition geometry, and
//! finite-depth Hausdorff-dimension certificates for digit-restricted
//! sets.
//!
//! The expansion of `z` iterates `T(z) = 1/z - [1/z]`, where `[.]` rounds
//! both coordinates to the nearest integer (halves up). Gaussian
//! rationals run in exact arithmetic and always terminate:
//!
//! ```
//! use hcf::cf::expand_exact;
//! use hcf::parse::parse_complex;
//!
//! let z = parse_complex("(3-4i)/(25)").unwrap().value;
//! let exp = expand_exact(&z, 10);
//! assert_eq!(exp.digits.len(), 1);
//! assert_eq!(exp.digits[0].to_string(), "3+4i");
//! assert!(exp.terminated);
//! ```
//!
//! Appending a digit to a cylinder transforms its feasible region through
//! `z -> 1/z - digit`; the thirteen possible regions and their exact
//! transitions live in [`geometry`]:
//!
//! ```
//! use hcf::geometry::{digit_transition, FeasibleShape, Transition};
//! use hcf::gauss::GaussianInt;
//!
//! let t = digit_transition(FeasibleShape::FULL, &GaussianInt::new(-2, 0)).unwrap();
//! assert_eq!(t, Transition::Shape(FeasibleShape::new(2, 2))); // box minus D(1)
//! ```
//!
//! The certificate engine in [`jarnik`] verifies descendant-sum and
//! separation conditions at finite depth; bisection brackets the critical
//! exponent. On the middle-third Cantor family it recovers
//! `log 2 / log 3`:
//!
//! ```
//! use hcf::jarnik::{critical_exponent, CantorFamily, CheckOptions};
//!
//! let (lo, hi) = critical_exponent(&CantorFamily, 8, 1e-3, &CheckOptions::default()).unwrap();
//! let dim = 2f64.ln() / 3f64.ln();
//! assert!(lo <= dim && dim <= hi);
//! ```
//!
//! [`families`] builds the digit-restricted families `E_L`, `E_L^M` and
//! `E_{f,g}` as certificate trees and carries the closed-form exponent
//! bounds:
//!
//! ```
//! use hcf::families::lower_exponent_closed_form;
//! use hcf::geometry::derive_constants;
//!
//! let gamma = derive_constants(128).gamma;
//! let s = lower_exponent_closed_form(1e4, gamma);
//! assert!(s > 0.9 && s < 1.0);
//! ```

pub mod bigc;
pub mod cf;
pub mod error;
pub mod families;
pub mod gauss;
pub mod geometry;
pub mod jarnik;
pub mod parse;
pub mod verify;

pub use error::{HcfError, Result};
