mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use annulus_core::alpha::{self, Method};
use annulus_core::crosszeros::{self, bound_report};
use annulus_core::pleijel::pleijel_estimate;
use annulus_core::validate::{self, Suite};
use clap::{Parser, Subcommand, ValueEnum};

use output::{Cell, Record};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "annulus", version, about = "Cross-product Bessel zeros, the alpha curve and Pleijel values for annuli")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Ode,
    Transcendental,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    Bounds,
    Convergence,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// First zeros a_{nu,k} of J_nu(Rz)Y_nu(z) - J_nu(z)Y_nu(Rz) with their bounds
    Zeros {
        #[arg(long)]
        nu: f64,
        #[arg(long = "R")]
        r: f64,
        #[arg(long)]
        k_max: usize,
        #[arg(long, default_value_t = crosszeros::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Samples of the alpha curve on [0, x_max]
    Alpha {
        #[arg(long = "R")]
        r: f64,
        /// Defaults to max(4 x0, 20)
        #[arg(long)]
        x_max: Option<f64>,
        #[arg(long, default_value_t = alpha::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Ode)]
        method: MethodArg,
        /// Compare every sample against the other solver
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// The Pleijel value 8/(R^2-1) sup x/alpha(x)^2
    Pleijel {
        #[arg(long = "R")]
        r: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Built-in numerical self-checks
    Validate {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Compute(annulus_core::Error),
}

impl From<annulus_core::Error> for Failure {
    fn from(e: annulus_core::Error) -> Self {
        Failure::Compute(e)
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Usage(msg()))
    }
}

fn check_r(r: f64) -> Result<(), Failure> {
    require(r.is_finite() && r > 1.0, || format!("--R must be a finite number greater than 1, got {r}"))
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    require(tol.is_finite() && tol > 0.0, || format!("--tol must be a finite positive number, got {tol}"))
}

fn zeros(nu: f64, r: f64, k_max: usize, tol: f64) -> Result<Record, Failure> {
    require(nu.is_finite() && nu >= 0.0, || format!("--nu must be finite and >= 0, got {nu}"))?;
    check_r(r)?;
    require(k_max >= 1, || "--k-max must be at least 1".to_string())?;
    check_tol(tol)?;

    let found = crosszeros::first_zeros(nu, r, k_max, tol)?;
    let order0 = if nu == 0.0 { found.clone() } else { crosszeros::first_zeros(0.0, r, k_max, tol)? };

    let mut rec = Record::new(
        "zeros",
        vec!["k", "value", "residual", "lower_bound", "lower_margin", "upper_bound", "upper_margin", "order0_margin"],
    );
    rec.param("nu", nu);
    rec.param("R", r);
    rec.param("k_max", k_max);
    rec.param("tol", tol);
    let mut all_hold = true;
    for (z, z0) in found.iter().zip(&order0) {
        let b = bound_report(nu, r, z.k, z.value, z0.value);
        all_hold &= b.holds();
        rec.push(vec![
            z.k.into(),
            z.value.into(),
            z.residual.into(),
            b.lower.into(),
            b.lower_margin.into(),
            b.upper.into(),
            b.upper_margin.into(),
            b.order0_margin.into(),
        ]);
    }
    rec.meta("bounds_hold", all_hold);
    Ok(rec)
}

fn alpha_cmd(r: f64, x_max: Option<f64>, tol: f64, method: MethodArg, check: bool) -> Result<Record, Failure> {
    check_r(r)?;
    check_tol(tol)?;
    let x_max = match x_max {
        Some(x) => {
            require(x.is_finite() && x >= 0.0, || format!("--x-max must be finite and >= 0, got {x}"))?;
            x
        }
        None => alpha::default_x_max(r)?,
    };
    let method = match method {
        MethodArg::Ode => Method::Ode,
        MethodArg::Transcendental => Method::Transcendental,
    };
    let curve = alpha::solve(r, x_max, tol, method)?;

    let mut rec = Record::new("alpha", vec!["x", "alpha"]);
    rec.param("R", r);
    rec.param("x_max", x_max);
    rec.param("tol", tol);
    rec.param("method", method_name(method).to_string());
    for s in &curve.samples {
        rec.push(vec![s.x.into(), s.alpha.into()]);
    }
    rec.meta("x0", curve.x0);
    rec.meta("alpha_at_origin", alpha::alpha_at_origin(r));
    if check {
        let other = match method {
            Method::Ode => Method::Transcendental,
            Method::Transcendental => Method::Ode,
        };
        let mut worst: f64 = 0.0;
        if method == Method::Ode {
            for s in &curve.samples {
                worst = worst.max((s.alpha - alpha::alpha_transcendental(r, s.x, 1e-3 * tol)?).abs());
            }
        } else {
            let reference = alpha::solve_ivp(r, x_max, tol)?;
            for s in &curve.samples {
                worst = worst.max((s.alpha - reference.eval(s.x)?).abs());
            }
        }
        rec.meta("check_method", method_name(other).to_string());
        rec.meta("max_discrepancy", worst);
    }
    Ok(rec)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Ode => "ode",
        Method::Transcendental => "transcendental",
    }
}

fn pleijel(r: f64, tol: f64) -> Result<Record, Failure> {
    check_r(r)?;
    check_tol(tol)?;
    let p = pleijel_estimate(r, tol)?;
    let mut rec = Record::new("pleijel", vec!["x_star", "sup_value", "pleijel_value", "is_lower_bound_only"]);
    rec.param("R", r);
    rec.param("tol", tol);
    rec.push(vec![p.x_star.into(), p.sup_value.into(), p.pleijel_value.into(), p.is_lower_bound_only.into()]);
    rec.meta("x_max", p.x_max);
    Ok(rec)
}

fn validate_cmd(suite: SuiteArg) -> Result<(Record, bool), Failure> {
    let (suite, name) = match suite {
        SuiteArg::Identities => (Suite::Identities, "identities"),
        SuiteArg::Bounds => (Suite::Bounds, "bounds"),
        SuiteArg::Convergence => (Suite::Convergence, "convergence"),
        SuiteArg::All => (Suite::All, "all"),
    };
    let report = validate::run(suite)?;
    let mut rec = Record::new("validate", vec!["suite", "name", "value", "relation", "limit", "margin", "passed"]);
    rec.param("suite", name.to_string());
    for c in &report.checks {
        let suite = match c.suite {
            Suite::Identities => "identities",
            Suite::Bounds => "bounds",
            Suite::Convergence => "convergence",
            Suite::All => "all",
        };
        let relation = match c.relation {
            validate::Relation::AtMost => "<=",
            validate::Relation::Below => "<",
            validate::Relation::Above => ">",
            validate::Relation::AtLeast => ">=",
        };
        rec.push(vec![
            Cell::Text(suite.to_string()),
            Cell::Text(c.name.clone()),
            c.value.into(),
            Cell::Text(relation.to_string()),
            c.limit.into(),
            c.margin.into(),
            c.passed.into(),
        ]);
    }
    let failed = report.failures().count();
    rec.meta("checks", report.checks.len());
    rec.meta("failed", failed);
    Ok((rec, failed == 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (format, result) = match cli.command {
        Command::Zeros { nu, r, k_max, tol, format } => (format, zeros(nu, r, k_max, tol).map(|r| (r, true))),
        Command::Alpha { r, x_max, tol, method, check, format } => {
            (format, alpha_cmd(r, x_max, tol, method, check).map(|r| (r, true)))
        }
        Command::Pleijel { r, tol, format } => (format, pleijel(r, tol).map(|r| (r, true))),
        Command::Validate { suite, format } => (format, validate_cmd(suite)),
    };
    let (mut rec, ok) = match result {
        Ok(v) => v,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    rec.meta("version", VERSION.to_string());
    rec.meta("runtime_seconds", start.elapsed().as_secs_f64());
    let text = match format {
        Format::Csv => rec.to_csv(),
        Format::Json => rec.to_json(),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(3);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        for c in rec.rows.iter().filter(|row| row[6] == Cell::Bool(false)) {
            if let Cell::Text(name) = &c[1] {
                eprintln!("failed: {name}");
            }
        }
        ExitCode::from(1)
    }
}
