//! Command-line front end. All computation happens in the library; this
//! layer parses arguments, picks exact or approximate paths, and renders
//! results as JSON, text (same fields), or CSV where a tabular form
//! exists.
//!
//! Exit codes: 0 success, 2 parse/usage errors, 3 precision exhaustion,
//! 4 missing bisection bracket, 1 anything else.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hcf::bigc::BigComplex;
use hcf::cf::{expand_big, expand_exact, HcfExpansion};
use hcf::families::{
    build_family, csv_lambda, csv_m_scan, csv_schedule_scan, linear_schedule,
    lower_exponent_closed_form, schedule_condition, schedule_threshold, upper_exponent_threshold,
    DigitFilter,
};
use hcf::geometry::{derive_constants, digit_transition, FeasibleShape, Transition};
use hcf::jarnik::{
    check_lower_conditions, check_upper_conditions, critical_exponent, CantorFamily, CheckOptions,
    CheckOutcome,
};
use hcf::parse::parse_complex;
use hcf::verify::run_suite;
use hcf::HcfError;

#[derive(Parser)]
#[command(name = "hcf", about = "Hurwitz continued fractions: expansions, cylinder geometry, dimension certificates", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; text mirrors the JSON fields.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Working precision in bits for approximate orbits and constants.
    #[arg(long, global = true, default_value_t = 256)]
    precision: u32,

    /// Worker cap for the engines (the current engines are sequential;
    /// values >= 1 are accepted as an upper bound).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a complex literal into HCF digits and convergents.
    Expand {
        /// Literal: "a+bi" with integer or decimal parts, or "(p)/(q)".
        z: String,
        #[arg(long, default_value_t = 30)]
        depth: usize,
    },
    /// Run a named verification suite (prop21 | sandwich | transitions).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dump the exact transition table of the thirteen feasible shapes
    /// over all digits with |b|^2 <= 8.
    Shapes,
    /// Dimension bounds for digit-restricted families.
    DimBounds {
        /// Inner Euclidean radius L of the digit annulus.
        #[arg(long, default_value_t = 3.0)]
        l: f64,
        /// Outer radius M; the closed-form bound and lower certificate
        /// use the family L <= |a| <= M.
        #[arg(long, default_value_t = 50.0)]
        m: f64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        from_depth: usize,
        /// Also bisect the critical exponent of the family.
        #[arg(long)]
        bracket: bool,
        /// Derive the E_L upper threshold at this epsilon and certify
        /// s = 1 + epsilon.
        #[arg(long)]
        epsilon: Option<f64>,
        /// Emit the closed-form scan over M in {10, ..., 10^6}.
        #[arg(long)]
        scan_m: bool,
        /// Evaluate the schedule condition for f(n) = n+3, g(n) = 10(n+3).
        #[arg(long)]
        schedule: bool,
        /// Exponent for the schedule condition.
        #[arg(long, default_value_t = 0.9)]
        s: f64,
        /// f <= c' g for the schedule preset.
        #[arg(long, default_value_t = 0.1)]
        c_prime: f64,
        /// Largest n scanned for the schedule condition.
        #[arg(long, default_value_t = 10_000)]
        n_max: usize,
    },
    /// Bracket the middle-third Cantor dimension as an engine oracle.
    CantorDemo {
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Derive and print the sandwich constants xi, gamma, k.
    Constants,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.precision < 64 {
        eprintln!("error: --precision must be at least 64");
        return ExitCode::from(2);
    }
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(Output::Value(v)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).expect("serializable")),
                Format::Text => print!("{}", render_text(&v, 0)),
                Format::Csv => {
                    eprintln!("error: this command has no CSV form; use --format json or text");
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Csv(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                HcfError::Parse(_) => 2,
                HcfError::PrecisionExhausted { .. } => 3,
                HcfError::NoBracket => 4,
                _ => 1,
            })
        }
    }
}

enum Output {
    Value(Value),
    Csv(String),
}

fn run(cli: &Cli) -> hcf::Result<Output> {
    match &cli.command {
        Command::Expand { z, depth } => cmd_expand(z, (*depth).max(1), cli.precision),
        Command::Verify { suite, samples, depth, seed } => {
            let report = run_suite(suite, *samples, (*depth).max(1), *seed)?;
            if !report.passed {
                // nonzero exit without losing the report
                let v = to_value(&report);
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                std::process::exit(1);
            }
            Ok(Output::Value(to_value(&report)))
        }
        Command::Shapes => cmd_shapes(cli.format),
        Command::DimBounds {
            l,
            m,
            depth,
            tol,
            from_depth,
            bracket,
            epsilon,
            scan_m,
            schedule,
            s,
            c_prime,
            n_max,
        } => cmd_dim_bounds(DimBoundsArgs {
            l: *l,
            m: *m,
            depth: (*depth).max(1),
            tol: *tol,
            from_depth: *from_depth,
            bracket: *bracket,
            epsilon: *epsilon,
            scan_m: *scan_m,
            schedule: *schedule,
            s: *s,
            c_prime: *c_prime,
            n_max: *n_max,
            precision: cli.precision,
            format: cli.format,
        }),
        Command::CantorDemo { depth, tol } => cmd_cantor(*depth, *tol),
        Command::Constants => {
            let c = derive_constants(cli.precision);
            let (re, im) = c.xi.to_f64();
            Ok(Output::Value(json!({
                "xi": { "re": re, "im": im },
                "xi_abs": c.xi_abs.to_f64(),
                "gamma": c.gamma,
                "k_sep": c.k_sep,
                "solver_disagreement": c.solver_disagreement,
            })))
        }
    }
}

fn cmd_expand(literal: &str, depth: usize, precision: u32) -> hcf::Result<Output> {
    let parsed = parse_complex(literal)?;
    let exp: HcfExpansion = if parsed.decimal {
        let b = BigComplex::from_rational(&parsed.value, precision);
        expand_big(&b, depth)?
    } else {
        expand_exact(&parsed.value, depth)
    };
    // per-step quality |z - (a0 + p_n/q_n)| * |q_n|^2, evaluated exactly
    // against the parsed rational value
    let quality: Vec<f64> = (1..=exp.depth())
        .map(|n| {
            let conv = exp.convergent(n).expect("q_n nonzero");
            let diff = parsed.value.sub(&conv).norm_sqr();
            let q2 = exp.q(n as isize).norm();
            let v = hcf::gauss::rational_to_f64(&(diff * num_rational::BigRational::from(&q2 * &q2)));
            v.sqrt()
        })
        .collect();
    let mut v = to_value(&exp.to_report());
    v["quality"] = to_value(&quality);
    Ok(Output::Value(v))
}

fn cmd_shapes(format: Format) -> hcf::Result<Output> {
    #[derive(Serialize)]
    struct Row {
        shape: String,
        digit: String,
        image: String,
    }
    let mut rows = Vec::new();
    for shape in FeasibleShape::all() {
        for re in -3i64..=3 {
            for im in -3i64..=3 {
                if (2..=8).contains(&(re * re + im * im)) {
                    let d = hcf::gauss::GaussianInt::new(re, im);
                    let t = digit_transition(shape, &d)?;
                    rows.push(Row {
                        shape: shape.label(),
                        digit: d.to_string(),
                        image: match t {
                            Transition::Shape(s) => s.label(),
                            Transition::Empty { degenerate: true } => "empty (degenerate)".into(),
                            Transition::Empty { degenerate: false } => "empty".into(),
                        },
                    });
                }
            }
        }
    }
    if format == Format::Csv {
        let mut out = String::from("shape,digit,image\n");
        for r in &rows {
            out.push_str(&format!("{},{},{}\n", r.shape, r.digit, r.image));
        }
        return Ok(Output::Csv(out));
    }
    Ok(Output::Value(json!({ "transitions": to_value(&rows) })))
}

struct DimBoundsArgs {
    l: f64,
    m: f64,
    depth: usize,
    tol: f64,
    from_depth: usize,
    bracket: bool,
    epsilon: Option<f64>,
    scan_m: bool,
    schedule: bool,
    s: f64,
    c_prime: f64,
    n_max: usize,
    precision: u32,
    format: Format,
}

fn cmd_dim_bounds(a: DimBoundsArgs) -> hcf::Result<Output> {
    let constants = derive_constants(a.precision);
    let opts = CheckOptions::default();

    if a.scan_m {
        let ms = [10.0, 100.0, 1e3, 1e4, 1e5, 1e6];
        let csv = csv_m_scan(&ms, constants.gamma);
        if a.format == Format::Csv {
            return Ok(Output::Csv(csv));
        }
        let rows: Vec<Value> = ms
            .iter()
            .map(|&m| json!({ "m": m, "s": lower_exponent_closed_form(m, constants.gamma) }))
            .collect();
        return Ok(Output::Value(json!({ "scan_m": rows })));
    }

    if a.schedule {
        let f = linear_schedule(1.0, 3.0);
        let g = linear_schedule(10.0, 3.0);
        let threshold = schedule_threshold(&f, &g, a.c_prime, a.s, a.n_max, constants.gamma);
        if a.format == Format::Csv {
            let ns: Vec<usize> = (1..=a.n_max).collect();
            return Ok(Output::Csv(csv_schedule_scan(&f, &g, a.c_prime, a.s, &ns, constants.gamma)));
        }
        let probes: Vec<Value> = [1usize, 10, 100, 1000, a.n_max]
            .iter()
            .filter(|&&n| n <= a.n_max)
            .map(|&n| to_value(&schedule_condition(&f, &g, a.c_prime, a.s, n, constants.gamma)))
            .collect();
        return Ok(Output::Value(json!({
            "schedule": { "f": "n+3", "g": "10(n+3)", "c_prime": a.c_prime, "s": a.s },
            "holds_for_all_n_from": threshold,
            "probes": probes,
        })));
    }

    if let Some(eps) = a.epsilon {
        let t = upper_exponent_threshold(eps, constants.gamma);
        let fam = build_family(DigitFilter::AnnulusLower { l: t.l_min }, a.depth, &constants)?;
        let outcome = check_upper_conditions(&fam, 1.0 + eps, a.depth, a.from_depth, &opts)?;
        return Ok(Output::Value(json!({
            "epsilon": eps,
            "l_min": t.l_min,
            "c2": t.c2,
            "derivation": t.derivation,
            "upper_certificate": to_value(&outcome),
        })));
    }

    let s_closed = lower_exponent_closed_form(a.m, constants.gamma);
    let fam = build_family(DigitFilter::AnnulusConstant { l: a.l, m: a.m }, a.depth, &constants)?;
    let s_cert = s_closed - 1e-6;
    let lower = check_lower_conditions(&fam, s_cert, a.depth, a.from_depth, &opts)?;
    let mut out = json!({
        "l": a.l,
        "m": a.m,
        "depth": a.depth,
        "s_closed_form": s_closed,
        "s_certified": s_cert,
        "lower_certificate": to_value(&lower),
    });
    if a.format == Format::Csv {
        if let CheckOutcome::Certificate(cert) = &lower {
            return Ok(Output::Csv(csv_lambda(cert)));
        }
    }
    if a.bracket {
        let (lo, hi) = critical_exponent(&fam, a.depth, a.tol, &opts)?;
        out["bracket"] = json!([lo, hi]);
    }
    Ok(Output::Value(out))
}

fn cmd_cantor(depth: usize, tol: f64) -> hcf::Result<Output> {
    let opts = CheckOptions::default();
    let (lo, hi) = critical_exponent(&CantorFamily, depth, tol, &opts)?;
    let lower = check_lower_conditions(&CantorFamily, 0.62, depth, 0, &opts)?;
    let upper = check_upper_conditions(&CantorFamily, 0.64, depth, 0, &opts)?;
    Ok(Output::Value(json!({
        "bracket": [lo, hi],
        "reference": 2f64.ln() / 3f64.ln(),
        "lower_at_0.62": to_value(&lower),
        "upper_at_0.64": to_value(&upper),
    })))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

/// Plain-text rendering with the same fields as the JSON output.
fn render_text(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            let mut out = String::new();
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&render_text(val, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
            out
        }
        Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        out.push_str(&render_text(item, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
            out
        }
        other => format!("{pad}{}\n", scalar(other)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
