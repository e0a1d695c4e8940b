//! Property tests for the structural invariants: every expansion of a
//! random Gaussian rational must satisfy them exactly, with no tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use hcf::cf::{evaluate, expand_exact, q_pair};
use hcf::gauss::{GaussianInt, GaussianRational};
use hcf::geometry::{digit_transition, FeasibleShape, Transition};
use hcf::parse::parse_complex;

fn arb_rational() -> impl Strategy<Value = GaussianRational> {
    (2i64..100_000, any::<i64>(), any::<i64>()).prop_map(|(d, a, b)| {
        let z = GaussianRational::new(
            GaussianInt::new(a % d, b % d),
            GaussianInt::new(d, 0),
        )
        .unwrap();
        z.sub(&GaussianRational::from_int(z.nearest_gaussian()))
    })
}

proptest! {
    #[test]
    fn fractional_part_lies_in_fundamental_domain(z in arb_rational()) {
        prop_assert!(z.in_fundamental_domain());
    }

    #[test]
    fn digits_have_norm_at_least_two(z in arb_rational()) {
        let exp = expand_exact(&z, 20);
        for a in &exp.digits {
            prop_assert!(a.norm() >= BigInt::from(2), "digit {a}");
        }
    }

    #[test]
    fn unimodularity_and_strict_growth(z in arb_rational()) {
        let exp = expand_exact(&z, 20);
        let mut prev = BigInt::from(0);
        for n in 0..=exp.depth() {
            prop_assert_eq!(exp.det_abs_sqr(n), BigInt::one());
            if n >= 1 {
                let cur = exp.q(n as isize).norm();
                prop_assert!(cur > prev);
                prev = cur;
            }
        }
    }

    #[test]
    fn approximation_quality_is_exact(z in arb_rational()) {
        let exp = expand_exact(&z, 20);
        for n in 1..=exp.depth() {
            let conv = GaussianRational::new(
                exp.p(n as isize).clone(),
                exp.q(n as isize).clone(),
            ).unwrap();
            let q2 = exp.q(n as isize).norm();
            let lhs = z.sub(&conv).norm_sqr() * BigRational::from(&q2 * &q2);
            prop_assert!(lhs <= BigRational::one());
        }
    }

    #[test]
    fn evaluate_inverts_expand(z in arb_rational()) {
        let exp = expand_exact(&z, 20);
        if exp.terminated && exp.depth() >= 1 {
            let back = evaluate(&exp.digits, None).unwrap();
            prop_assert_eq!(back, z);
        }
    }

    #[test]
    fn q_pair_matches_expansion(z in arb_rational()) {
        let exp = expand_exact(&z, 12);
        if exp.depth() >= 1 {
            let qp = q_pair(&exp.digits);
            prop_assert_eq!(&qp.p, exp.p(exp.depth() as isize));
            prop_assert_eq!(&qp.q, exp.q(exp.depth() as isize));
        }
    }

    #[test]
    fn large_digits_fix_the_full_box(re in -6i64..=6, im in -6i64..=6) {
        prop_assume!(re * re + im * im >= 8);
        let digit = GaussianInt::new(re, im);
        let t = digit_transition(FeasibleShape::FULL, &digit).unwrap();
        prop_assert_eq!(t, Transition::Shape(FeasibleShape::FULL));
        // from a restricted shape the digit may be infeasible or give a
        // clipped region, but it always classifies into the catalogue
        for shape in FeasibleShape::all() {
            prop_assert!(digit_transition(shape, &digit).is_ok());
        }
    }

    #[test]
    fn parse_roundtrips_quotient_display(z in arb_rational()) {
        let shown = format!("({})/({})", z.num(), z.den());
        let parsed = parse_complex(&shown).unwrap();
        prop_assert_eq!(parsed.value, z);
    }
}
