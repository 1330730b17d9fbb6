//! `wishmom`: command-line access to exact Wishart moments, the coefficient
//! tables, the closed forms and the numerical cross-checks.

mod expr;
mod params;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;
use wishart_moments::closed_forms::{
    complex_2x2_moment_by_exponents, hermite_coeffs, kibble_moment, laguerre_coeffs,
    noncentral_chisq_moment, real_2x2_moment_by_exponent,
};
use wishart_moments::combinatorics::{
    coeff_f, coeff_g, noncentral_stirling, phi, psi, EnumerationLimit, DEFAULT_MAX_N,
};
use wishart_moments::validation::{cross_check, CrossCheckOptions, SimulationConfig, Tolerances};
use wishart_moments::{
    evaluate, expand_moment_with, group_by_shape, Exec, Flavor, MomentSpec, NuPolynomial,
};

pub use expr::parse_moment_expression;
pub use params::{load_params, parse_params, LoadedParams};

/// Environment variable holding the default worker-thread count.
pub const THREADS_ENV: &str = "WISHART_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    Engine(#[from] wishart_moments::Error),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parameter file does not match the schema: {0}")]
    Schema(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "wishmom",
    version,
    about = "Exact moments of real and complex noncentral Wishart matrices"
)]
pub struct Cli {
    /// Worker threads for enumeration and sampling.
    #[arg(long, global = true, env = THREADS_ENV)]
    threads: Option<usize>,
    /// Largest number of factors a full enumeration may take.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FlavorArg {
    Real,
    Complex,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Real => Flavor::Real,
            FlavorArg::Complex => Flavor::Complex,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a moment symbolically or evaluate it at given parameters.
    Moment(MomentArgs),
    /// Graph counts f(l,m,n), g(l,m,n) or the noncentral Stirling number s_n(m,l).
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Generating polynomials Φ_{m,n}(ν) or Ψ_{m,n}(ν).
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Closed-form moments and orthogonal-polynomial coefficients.
    Closed {
        #[command(subcommand)]
        form: ClosedForm,
    },
    /// Compare the symbolic value with Monte Carlo and MGF finite differences.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
struct MomentArgs {
    /// Defaults to the flavor of --params.
    #[arg(long, value_enum)]
    flavor: Option<FlavorArg>,
    /// Defaults to the dimension of --params.
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    expr: String,
    #[arg(long)]
    params: Option<PathBuf>,
    /// Print the polynomial even when --params is given.
    #[arg(long)]
    symbolic: bool,
    /// Group the terms into shapes.
    #[arg(long, conflicts_with = "params")]
    shapes: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountKind {
    F,
    G,
    Stirling,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolyKind {
    Phi,
    Psi,
}

#[derive(Debug, Subcommand)]
enum ClosedForm {
    /// E[w^n] for w ~ χ²_ν(δ).
    Chisq {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of L_n^{(ν)}(x), lowest power of x first.
    Laguerre {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of He_n(x), lowest power of x first.
    Hermite {
        #[arg(long)]
        n: usize,
    },
    /// E[w11^b w22^c] for Kibble's bivariate chi-square.
    Kibble {
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// E[w12^(2a) w11^b w22^c] for W ~ W_2(ν, I); --w12 gives the raw exponent.
    Real2x2 {
        #[arg(long, required_unless_present = "w12", conflicts_with = "w12")]
        a: Option<u64>,
        #[arg(long)]
        w12: Option<u64>,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value_t = 0)]
        c: u64,
    },
    /// E[w11^b (w12 w21)^a w22^c] for W ~ CW_2(ν, I); --w12/--w21 give raw exponents.
    Complex2x2 {
        #[arg(long, required_unless_present_all = ["w12", "w21"], conflicts_with_all = ["w12", "w21"])]
        a: Option<u64>,
        #[arg(long, requires = "w21")]
        w12: Option<u64>,
        #[arg(long, requires = "w12")]
        w21: Option<u64>,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value_t = 0)]
        c: u64,
    },
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[arg(long)]
    expr: String,
    #[arg(long)]
    params: PathBuf,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    streams: usize,
    /// Also differentiate the MGF numerically (orders up to 3).
    #[arg(long)]
    fd: bool,
    #[arg(long)]
    fd_step: Option<f64>,
    #[arg(long, default_value_t = 5.0)]
    z_max: f64,
    #[arg(long, default_value_t = 1e-4)]
    fd_rel: f64,
}

/// Result of a successful dispatch: what to print and whether checks passed.
struct Outcome {
    stdout: String,
    passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            passed: true,
        }
    }
}

struct Context {
    format: Format,
    limit: EnumerationLimit,
    exec: Exec,
}

fn json_line(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("JSON value prints")
}

fn nu_poly_out(ctx: &Context, poly: &NuPolynomial) -> String {
    match ctx.format {
        Format::Json => serde_json::to_string(poly).expect("polynomial serializes"),
        Format::Text => poly.to_string(),
    }
}

fn moment(ctx: &Context, args: &MomentArgs) -> Result<Outcome, CliError> {
    let loaded = args.params.as_deref().map(load_params).transpose()?;
    let flavor = match (args.flavor, &loaded) {
        (Some(f), Some(l)) if Flavor::from(f) != l.params.flavor() => {
            return Err(CliError::Usage(format!(
                "--flavor {} disagrees with the parameter file ({})",
                Flavor::from(f),
                l.params.flavor()
            )))
        }
        (Some(f), _) => f.into(),
        (None, Some(l)) => l.params.flavor(),
        (None, None) => {
            return Err(CliError::Usage(
                "--flavor is required without --params".into(),
            ))
        }
    };
    let p = match (args.p, &loaded) {
        (Some(p), _) => p,
        (None, Some(l)) => l.params.p(),
        (None, None) => return Err(CliError::Usage("--p is required without --params".into())),
    };
    let spec = parse_moment_expression(&args.expr, flavor, p)?;
    let poly = expand_moment_with(&spec, ctx.limit, ctx.exec)?;
    if args.shapes {
        let shapes = group_by_shape(&poly);
        return Ok(Outcome::ok(match ctx.format {
            Format::Json => json_line(&render::shapes_json(&poly, &shapes)),
            Format::Text => render::shapes_text(&poly, &shapes),
        }));
    }
    match loaded {
        Some(l) if !args.symbolic => {
            let value = evaluate(&poly, &l.params)?;
            Ok(Outcome::ok(match ctx.format {
                Format::Json => json_line(&render::value_json(value)),
                Format::Text => render::value_text(value),
            }))
        }
        _ => Ok(Outcome::ok(match ctx.format {
            Format::Json => poly.to_json_string(),
            Format::Text => render::moment_text(&poly),
        })),
    }
}

fn count(kind: CountKind, l: u64, m: u64, n: u64) -> Result<Outcome, CliError> {
    let value = match kind {
        CountKind::F => coeff_f(l as i64, m as i64, n as i64),
        CountKind::G => coeff_g(l as i64, m as i64, n as i64),
        CountKind::Stirling => noncentral_stirling(n as usize, m as usize, l as usize)?,
    };
    Ok(Outcome::ok(value.to_string()))
}

fn closed(ctx: &Context, form: &ClosedForm) -> Result<Outcome, CliError> {
    let bivariate = |p: wishart_moments::BivariateMomentPoly| match ctx.format {
        Format::Json => serde_json::to_string(&p).expect("polynomial serializes"),
        Format::Text => render::bivariate_text(&p),
    };
    let out = match *form {
        ClosedForm::Chisq { n } => bivariate(noncentral_chisq_moment(n)),
        ClosedForm::Laguerre { n } => {
            let coeffs = laguerre_coeffs(n);
            match ctx.format {
                Format::Json => json_line(&render::nu_polys_json(&coeffs)),
                Format::Text => coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("x^{k}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        ClosedForm::Hermite { n } => {
            let coeffs: Vec<String> = hermite_coeffs(n).iter().map(|c| c.to_string()).collect();
            match ctx.format {
                Format::Json => json_line(&json!(coeffs)),
                Format::Text => coeffs.join(" "),
            }
        }
        ClosedForm::Kibble { b, c } => bivariate(kibble_moment(b, c)),
        ClosedForm::Real2x2 { a, w12, b, c } => {
            let e = w12.unwrap_or_else(|| 2 * a.unwrap_or(0));
            nu_poly_out(ctx, &real_2x2_moment_by_exponent(e, b, c))
        }
        ClosedForm::Complex2x2 { a, w12, w21, b, c } => {
            let (e, f) = match a {
                Some(a) => (a, a),
                None => (w12.unwrap_or(0), w21.unwrap_or(0)),
            };
            nu_poly_out(ctx, &complex_2x2_moment_by_exponents(e, f, b, c))
        }
    };
    Ok(Outcome::ok(out))
}

fn validate(ctx: &Context, args: &ValidateArgs) -> Result<Outcome, CliError> {
    let loaded = load_params(&args.params)?;
    let spec: MomentSpec =
        parse_moment_expression(&args.expr, loaded.params.flavor(), loaded.params.p())?;
    ctx.limit.check(spec.n())?;
    if args.samples == 0 || args.streams == 0 {
        return Err(CliError::Usage(
            "--samples and --streams must be positive".into(),
        ));
    }
    let mut config =
        SimulationConfig::new(loaded.params, args.samples, args.seed).with_streams(args.streams);
    if let Some(means) = loaded.means {
        config = config.with_mean_vectors(means);
    }
    let options = CrossCheckOptions {
        tolerances: Tolerances {
            z_max: args.z_max,
            fd_rel: args.fd_rel,
        },
        finite_difference: args.fd,
        fd_step: args.fd_step,
        exec: ctx.exec,
    };
    let report = cross_check(&spec, &config, &options)?;
    let stdout = match ctx.format {
        Format::Json => report.to_json_string(),
        Format::Text => {
            let mut s = format!(
                "symbolic {}\nmc {} se {} n {} z {:.3}",
                report.symbolic, report.mc.estimate, report.mc.se, report.mc.n, report.mc.z
            );
            if let Some(fd) = report.fd {
                s.push_str(&format!("\nfd {} rel_err {:e}", fd.value, fd.rel_err));
            }
            s.push_str(if report.pass { "\npass" } else { "\nFAIL" });
            s
        }
    };
    Ok(Outcome {
        stdout,
        passed: report.pass,
    })
}

fn dispatch(cli: &Cli, exec: Exec) -> Result<Outcome, CliError> {
    let ctx = Context {
        format: cli.format,
        limit: EnumerationLimit { max_n: cli.max_n },
        exec,
    };
    match &cli.command {
        Command::Moment(args) => moment(&ctx, args),
        Command::Count { kind, l, m, n } => count(*kind, *l, *m, *n),
        Command::Poly { kind, m, n } => {
            let poly = match kind {
                PolyKind::Phi => phi(*m, *n)?,
                PolyKind::Psi => psi(*m, *n)?,
            };
            Ok(Outcome::ok(nu_poly_out(&ctx, &poly)))
        }
        Command::Closed { form } => closed(&ctx, form),
        Command::Validate(args) => validate(&ctx, args),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be positive".into())),
        Some(1) => dispatch(cli, Exec::Sequential),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {n} threads: {e}")))?;
            pool.install(|| dispatch(cli, Exec::Parallel))
        }
        None => dispatch(cli, Exec::Parallel),
    }
}

/// Runs the command line and returns the process exit status.
///
/// 0 on success, 1 when a validation check fails, 2 on usage or input
/// errors. Output is written only once the command has fully succeeded.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(stream, "{rendered}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if writeln!(stdout, "{}", outcome.stdout).is_err() {
                return 2;
            }
            if outcome.passed {
                0
            } else {
                let _ = writeln!(stderr, "wishmom: validation failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "wishmom: {e}");
            2
        }
    }
}
