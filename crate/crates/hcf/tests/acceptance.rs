//! End-to-end acceptance suite: one numbered criterion per test, each
//! printing a single PASS line (a failed assertion marks the criterion
//! failed). The expansion corpus is shared across the first three
//! criteria and built once.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use hcf::families::{
    build_family, lattice_tail_bound, linear_schedule, lower_exponent_closed_form,
    lower_exponent_closed_form_hp, schedule_condition, schedule_threshold,
    upper_exponent_threshold, DigitFilter,
};
use hcf::gauss::GaussianInt;
use hcf::geometry::{derive_constants, digit_transition, FeasibleShape, Transition};
use hcf::jarnik::{
    check_lower_conditions, check_upper_conditions, critical_exponent, CantorFamily, CheckOptions,
};
use hcf::verify::{run_prop21, run_sandwich, run_transitions, SuiteReport};

fn corpus_report() -> &'static (SuiteReport, Duration) {
    static REPORT: OnceLock<(SuiteReport, Duration)> = OnceLock::new();
    REPORT.get_or_init(|| {
        let start = Instant::now();
        let report = run_prop21(10_000, 7);
        (report, start.elapsed())
    })
}

fn check(report: &SuiteReport, name_part: &str) -> bool {
    report
        .checks
        .iter()
        .find(|c| c.name.contains(name_part))
        .unwrap_or_else(|| panic!("suite has no check matching {name_part:?}"))
        .passed
}

#[test]
fn criterion_01_approximation_quality() {
    let (report, elapsed) = corpus_report();
    assert!(check(report, "approximation quality"), "{report:?}");
    assert!(*elapsed <= Duration::from_secs(60), "corpus took {elapsed:?}");
    println!("ACCEPTANCE 1 approximation quality |z - p_n/q_n| |q_n|^2 <= 1 on 10^4 corpus: PASS ({elapsed:?})");
}

#[test]
fn criterion_02_q_pair_structure() {
    let (report, _) = corpus_report();
    assert!(check(report, "unimodularity"), "{report:?}");
    assert!(check(report, "strictly increasing"), "{report:?}");
    println!("ACCEPTANCE 2 unimodularity and strict |q_n| growth: PASS");
}

#[test]
fn criterion_03_roundtrip() {
    let (report, _) = corpus_report();
    assert!(check(report, "roundtrip"), "{report:?}");
    println!("ACCEPTANCE 3 evaluate(expand(z)) within 2/|q_n|^2: PASS");
}

#[test]
fn criterion_04_transition_geometry() {
    let start = Instant::now();

    let t = digit_transition(FeasibleShape::FULL, &GaussianInt::new(-2, 0)).unwrap();
    assert_eq!(t, Transition::Shape(FeasibleShape::new(2, 2)), "F4 after -2");

    // every digit with sqrt(8) <= |a| <= 6 maps the full box to itself
    for re in -6i64..=6 {
        for im in -6i64..=6 {
            let n = re * re + im * im;
            if (8..=36).contains(&n) {
                let t = digit_transition(FeasibleShape::FULL, &GaussianInt::new(re, im)).unwrap();
                assert_eq!(t, Transition::Shape(FeasibleShape::FULL), "digit {re}+{im}i");
            }
        }
    }

    let report = run_transitions(1000, 10_000, 3);
    assert!(report.passed, "{report:?}");
    let elapsed = start.elapsed();
    assert!(elapsed <= Duration::from_secs(120), "took {elapsed:?}");
    println!("ACCEPTANCE 4 exact transitions vs 10^3 x 10^4-point sampling oracle: PASS ({elapsed:?})");
}

#[test]
fn criterion_05_diameter_sandwich() {
    let report = run_sandwich(500, 12, 5);
    assert!(report.passed, "{report:?}");
    println!("ACCEPTANCE 5 witness distance in [gamma/|q_n|^2, 2/|q_n|^2], xi solvers agree to 1e-30: PASS");
}

#[test]
fn criterion_06_cantor_oracle() {
    let opts = CheckOptions::default();
    let dim = 2f64.ln() / 3f64.ln();
    let (lo, hi) = critical_exponent(&CantorFamily, 8, 1e-3, &opts).unwrap();
    assert!(lo <= dim && dim <= hi, "bracket [{lo}, {hi}]");
    assert!(hi - lo <= 1e-3);

    let lower = check_lower_conditions(&CantorFamily, 0.62, 8, 0, &opts).unwrap();
    let cert = lower.certificate().expect("lower certificate at 0.62");
    assert!(cert.conditions[0].margin > 0.0);
    let upper = check_upper_conditions(&CantorFamily, 0.64, 8, 0, &opts).unwrap();
    let cert = upper.certificate().expect("upper certificate at 0.64");
    assert!(cert.conditions[0].margin > 0.0);
    println!("ACCEPTANCE 6 Cantor critical exponent brackets log2/log3, margins positive: PASS [{lo:.6}, {hi:.6}]");
}

#[test]
fn criterion_07_closed_form_lower_bound() {
    let constants = derive_constants(256);
    let gamma = constants.gamma;

    let ms = [10.0, 1e2, 1e3, 1e4, 1e5, 1e6];
    let values: Vec<f64> = ms.iter().map(|&m| lower_exponent_closed_form(m, gamma)).collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]), "{values:?}");
    assert!(values[5] > values[1]);

    let hp = lower_exponent_closed_form_hp(10_000, &constants);
    let f64_val = lower_exponent_closed_form(1e4, gamma);
    assert!((hp - f64_val).abs() < 1e-12, "hp {hp} vs f64 {f64_val}");

    let s = lower_exponent_closed_form(50.0, gamma) - 1e-6;
    let fam = build_family(DigitFilter::AnnulusConstant { l: 3.0, m: 50.0 }, 3, &constants).unwrap();
    let out = check_lower_conditions(&fam, s, 3, 0, &CheckOptions::default()).unwrap();
    let cert = out.certificate().expect("lower certificate at s(50) - 1e-6");
    assert!(cert.conditions.iter().all(|c| c.satisfied), "{cert:?}");
    println!("ACCEPTANCE 7 s(M) monotone, HP agreement 1e-12, lower certificate at s(50)-1e-6: PASS (s = {s:.6})");
}

#[test]
fn criterion_08_upper_bound() {
    let constants = derive_constants(192);
    let gamma = constants.gamma;
    let s = 1.5;

    let thr = upper_exponent_threshold(0.5, gamma);
    let fam = build_family(DigitFilter::AnnulusLower { l: thr.l_min }, 3, &constants).unwrap();
    let out = check_upper_conditions(&fam, s, 3, 0, &CheckOptions::default()).unwrap();
    let cert = out.certificate().expect("upper certificate at 1.5");
    assert!(cert.conditions.iter().all(|c| c.satisfied), "{cert:?}");

    // direct truncated tail: sum (|b|-1)^(-2s) over l_min <= |b| <= 10^3,
    // remainder past 10^3 bounded by the logged lattice count estimate;
    // together they must sit below the analytic bound with room to spare
    let l = thr.l_min;
    let cap = 1000i64;
    let mut direct = 0.0f64;
    for re in -cap..=cap {
        for im in -cap..=cap {
            let n2 = (re * re + im * im) as f64;
            if n2 >= l * l && n2 <= (cap * cap) as f64 {
                direct += (n2.sqrt() - 1.0).powf(-2.0 * s);
            }
        }
    }
    let remainder = lattice_tail_bound(cap as f64 + 1.0, s).bound;
    let analytic = lattice_tail_bound(l, s).bound;
    let margin = analytic - (direct + remainder);
    assert!(margin > 0.0, "direct {direct} + remainder {remainder} vs analytic {analytic}");
    // and c2 stays valid against the direct sum
    let ratio = (2.0 / gamma).powf(s) * (direct + remainder);
    assert!(ratio <= 1.0, "ratio {ratio}");
    assert!(thr.c2 >= ratio * l.powf(1.0), "c2 {} vs {}", thr.c2, ratio * l.powf(1.0));
    println!(
        "ACCEPTANCE 8 upper certificate at s=1.5 with L_min={}, truncated tail confirms c2 (margin {margin:.3e}): PASS",
        thr.l_min
    );
}

#[test]
fn criterion_09_schedule_condition() {
    let gamma = derive_constants(192).gamma;
    let f = linear_schedule(1.0, 3.0);
    let g = linear_schedule(10.0, 3.0);
    let n0 = schedule_threshold(&f, &g, 0.1, 0.9, 200, gamma).expect("threshold exists");
    assert!(n0 <= 100, "N = {n0}");
    for n in n0..=200 {
        assert!(schedule_condition(&f, &g, 0.1, 0.9, n, gamma).holds, "n = {n}");
    }

    let mut prev = 0.0f64;
    for n in (1..=10_000).step_by(9) {
        let c = schedule_condition(&f, &g, 0.1, 0.9, n, gamma);
        assert!(c.ratio > prev, "ratio not monotone at n = {n}");
        assert!(c.ratio < 1.0);
        prev = c.ratio;
    }
    println!("ACCEPTANCE 9 schedule condition holds from N = {n0} <= 100, ratio monotone toward 1 (reaches {prev:.4}): PASS");
}

#[test]
fn criterion_10_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_hcf");
    let runs: &[&[&str]] = &[
        &["expand", "(3-4i)/(25)"],
        &["expand", "0.41421356-0.27182818i", "--depth", "12"],
        &["expand", "1/3+2/7i", "--format", "text"],
        &["verify", "prop21", "--samples", "50", "--seed", "9"],
        &["verify", "sandwich", "--samples", "30", "--depth", "8", "--seed", "9"],
        &["verify", "transitions", "--samples", "20", "--seed", "9"],
        &["shapes"],
        &["shapes", "--format", "csv"],
        &["dim-bounds", "--l", "3", "--m", "12", "--depth", "2"],
        &["dim-bounds", "--scan-m", "--format", "csv"],
        &["dim-bounds", "--epsilon", "0.5"],
        &["dim-bounds", "--schedule", "--s", "0.9", "--c-prime", "0.1", "--n-max", "200"],
        &["cantor-demo", "--depth", "8", "--tol", "0.001"],
        &["constants"],
    ];
    for args in runs {
        let once = std::process::Command::new(bin).args(*args).output().unwrap();
        let twice = std::process::Command::new(bin).args(*args).output().unwrap();
        assert!(once.status.success(), "{args:?}: {}", String::from_utf8_lossy(&once.stderr));
        assert_eq!(once.stdout, twice.stdout, "stdout differs for {args:?}");
        assert_eq!(once.stderr, twice.stderr, "stderr differs for {args:?}");
    }
    println!("ACCEPTANCE 10 byte-identical CLI output across repeated runs of every subcommand: PASS");
}
