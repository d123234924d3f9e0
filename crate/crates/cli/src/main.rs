use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nrcert::harness::{
    analyze, format_cmat, generate, parse_complex, parse_matrix, run_sweep, GeneratorSpec, MatrixKind, SweepConfig,
    SweepKind,
};
use nrcert::hypotheses::{
    fit_disk, fit_lambda, fit_segment, CombinationParams, DiskParams, LambdaRadius, Objective, PriorParams,
    SegmentParams,
};
use nrcert::ledger::{certificates_csv, EvalOptions, Evaluator, InequalityId, ParamSet, Verdict};
use nrcert::range::range_boundary;
use nrcert::{Error, C64};

const EXIT_VIOLATED: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_INPUT: u8 = 3;

/// Certified numerical-range inequalities for normal matrices.
#[derive(Parser, Debug)]
#[command(name = "nrcert", version)]
struct Cli {
    /// Relative enclosure tolerance for numerical radii.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Norms, numerical radius and sphere functionals of one matrix.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// Random restarts for the δ search.
        #[arg(long, default_value_t = 4)]
        restarts: usize,
    },
    /// Evaluate catalog inequalities and write a certificate CSV.
    Certify(CertifyArgs),
    /// Fit (λ, r), (γ, Γ) and (m, M) to a normal matrix.
    Fit {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Randomized soundness sweep.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        /// mixed, normal, hermitian, unitary, near-normal or ray-spectrum.
        #[arg(long, default_value = "mixed")]
        kind: String,
        /// Perturbation size for near-normal trials (default 0.1 for near-normal).
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Boundary points of the numerical range as theta,re,im rows.
    Range {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        points: usize,
    },
    /// Write a random matrix in cmat format.
    Generate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
    },
}

#[derive(clap::Args, Debug)]
struct CertifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, allow_hyphen_values = true, value_parser = complex_arg)]
    lambda: Option<C64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = complex_arg)]
    gamma: Option<C64>,
    #[arg(long = "Gamma", allow_hyphen_values = true, value_parser = complex_arg)]
    big_gamma: Option<C64>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long = "M")]
    big_m: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = complex_arg)]
    alpha: Option<C64>,
    #[arg(long, allow_hyphen_values = true, value_parser = complex_arg)]
    beta: Option<C64>,
    #[arg(long)]
    rho: Option<f64>,
    /// Comma-separated ids, or `all`.
    #[arg(long, default_value = "all")]
    ids: String,
    /// Exit 2 when a selected hypothesis fails.
    #[arg(long)]
    strict_hyp: bool,
    /// Fill parameters that were not given from the fitting routines.
    #[arg(long)]
    fit: bool,
}

/// A complex literal such as `1-2i`, or a plain real number.
fn complex_arg(s: &str) -> Result<C64, String> {
    match parse_complex(s) {
        Ok(z) => Ok(z),
        Err(e) => s
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(|v| C64::new(v, 0.0))
            .ok_or(e),
    }
}

enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<u8, Failure>;

fn emit(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn pair<T, U>(a: Option<T>, b: Option<U>, names: &str) -> Result<Option<(T, U)>, Failure> {
    match (a, b) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        (None, None) => Ok(None),
        _ => Err(Failure::Input(format!("{names} must be given together"))),
    }
}

fn certify(cli: &Cli, args: &CertifyArgs) -> Outcome {
    let a = parse_matrix(&args.input)?;
    let options = EvalOptions {
        radius_tol: cli.tol,
        ..EvalOptions::default()
    };
    let eval = Evaluator::new(&a, options)?;
    let mut params = ParamSet::default();
    if let Some((l, r)) = pair(args.lambda, args.r, "--lambda and --r")? {
        params.lambda = Some(LambdaRadius::new(l, r)?);
    }
    if let Some((g, big_g)) = pair(args.gamma, args.big_gamma, "--gamma and --Gamma")? {
        params.disk = Some(DiskParams::new(g, big_g)?);
    }
    if let Some((m, big_m)) = pair(args.m, args.big_m, "--m and --M")? {
        params.segment = Some(SegmentParams::new(m, big_m)?);
    }
    if let Some((alpha, beta)) = pair(args.alpha, args.beta, "--alpha and --beta")? {
        params.combination = Some(CombinationParams { alpha, beta });
    }
    if let Some(rho) = args.rho {
        params.prior = Some(PriorParams::new(rho)?);
    }
    if args.fit {
        if params.lambda.is_none() {
            params.lambda = fit_lambda(&a, Objective::MinDefect).ok().map(|f| f.params);
        }
        params.lambda_gain = fit_lambda(&a, Objective::MinRatio).ok().map(|f| f.params);
        if params.disk.is_none() {
            params.disk = fit_disk(&a).ok().map(|f| f.params);
        }
        if params.segment.is_none() {
            params.segment = fit_segment(&a)?;
        }
    }
    let certs = if args.ids.trim() == "all" {
        eval.evaluate_all(&params)?
    } else {
        let ids = args
            .ids
            .split(',')
            .map(|s| s.trim().parse::<InequalityId>())
            .collect::<Result<Vec<_>, _>>()?;
        ids.into_iter()
            .map(|id| eval.evaluate(id, &params))
            .collect::<Result<Vec<_>, _>>()?
    };
    emit(&cli.out, &certificates_csv(&certs))?;
    if certs.iter().any(|c| c.verdict == Verdict::Violated) {
        Ok(EXIT_VIOLATED)
    } else if args.strict_hyp && certs.iter().any(|c| c.verdict == Verdict::HypothesisFailed) {
        Ok(EXIT_HYPOTHESIS)
    } else {
        Ok(0)
    }
}

fn fit(cli: &Cli, input: &PathBuf) -> Outcome {
    let a = parse_matrix(input)?;
    let mut s = String::new();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(s, "{k}: {v}");
    };
    for (label, objective) in [("min_defect", Objective::MinDefect), ("min_ratio", Objective::MinRatio)] {
        match fit_lambda(&a, objective) {
            Ok(f) => {
                line(&format!("{label}.lambda"), format!("{}", f.params.lambda));
                line(&format!("{label}.r"), format!("{:.16e}", f.params.r));
                line(&format!("{label}.achieved"), format!("{:.16e}", f.achieved));
                line(&format!("{label}.non_attained"), f.non_attained.to_string());
            }
            Err(Error::Singular { .. }) if objective == Objective::MinRatio => {
                line(&format!("{label}"), "unavailable (matrix is singular)".into());
            }
            Err(e) => return Err(e.into()),
        }
    }
    match fit_disk(&a) {
        Ok(f) => {
            line("disk.gamma", format!("{}", f.params.gamma));
            line("disk.Gamma", format!("{}", f.params.big_gamma));
            line("disk.feasible", f.feasible.to_string());
        }
        Err(Error::Singular { .. }) => line("disk", "unavailable (matrix is singular)".into()),
        Err(e) => return Err(e.into()),
    }
    match fit_segment(&a)? {
        Some(p) => {
            line("segment.m", format!("{:.16e}", p.m));
            line("segment.M", format!("{:.16e}", p.big_m));
        }
        None => line("segment", "unavailable (eigenphases not in an open right half-plane)".into()),
    }
    emit(&cli.out, &s)?;
    Ok(0)
}

fn sweep(cli: &Cli, n: usize, trials: usize, kind: &str, eps: Option<f64>) -> Outcome {
    let kind: SweepKind = kind.parse()?;
    let eps = eps.unwrap_or(if kind == SweepKind::Single(MatrixKind::NearNormal) { 0.1 } else { 0.0 });
    let config = SweepConfig {
        kind,
        eps,
        options: EvalOptions {
            radius_tol: cli.tol,
            ..EvalOptions::default()
        },
        ..SweepConfig::new(n, trials, cli.seed)
    };
    let report = run_sweep(&config)?;
    emit(&cli.out, &report.to_csv())?;
    Ok(if report.total_violations() > 0 { EXIT_VIOLATED } else { 0 })
}

fn range(cli: &Cli, input: &PathBuf, points: usize) -> Outcome {
    let a = parse_matrix(input)?;
    let boundary = range_boundary(&a, points)?;
    let mut s = String::from("theta,re,im\n");
    for (t, z) in boundary.thetas.iter().zip(&boundary.points) {
        let _ = writeln!(s, "{t:.16e},{:.16e},{:.16e}", z.re, z.im);
    }
    emit(&cli.out, &s)?;
    Ok(0)
}

fn run(cli: &Cli) -> Outcome {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Failure::Input(format!("--tol must be finite and positive, got {}", cli.tol)));
    }
    match &cli.command {
        Command::Analyze { input, restarts } => {
            let a = parse_matrix(input)?;
            let report = analyze(&a, cli.tol, *restarts)?;
            emit(&cli.out, &report.render())?;
            Ok(0)
        }
        Command::Certify(args) => certify(cli, args),
        Command::Fit { input } => fit(cli, input),
        Command::Sweep { n, trials, kind, eps } => sweep(cli, *n, *trials, kind, *eps),
        Command::Range { input, points } => range(cli, input, *points),
        Command::Generate { kind, n, eps } => {
            let spec = GeneratorSpec::new(kind.parse()?, *n, cli.seed).with_perturbation(*eps);
            emit(&cli.out, &format_cmat(&generate(&spec)?))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
