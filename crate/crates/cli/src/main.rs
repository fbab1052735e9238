//! `pdha`: estimate, solve, and inspect the modified second PdHA problem.
//!
//! Exit codes: 0 success, 1 usage/configuration error, 2 numerical failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pdha::eigensolver::{
    solve_robin_eigen, solve_slope_normalized_all, ClosureCondition, EigenError, SolverConfig,
};
use pdha::grid::linspace;
use pdha::landscape::{landscape_fd, ClosedFormLandscape, LandscapeError};
use pdha::liouville::{branch_exponent_k, Branch, CanonicalProblem};
use pdha::problem::SchrodingerProblem;
use pdha::DOMAIN_END;

use pdha_cli::config::ProblemConfig;
use pdha_cli::csvfmt::fmt_g12;
use pdha_cli::figures::{figure_csv, FigureId};
use pdha_cli::sweep::{run_sweep, sweep_csv, SweepConfig};
use pdha_cli::verify;

#[derive(Parser)]
#[command(
    name = "pdha",
    version,
    about = "Spectrum estimation and computation for the modified second PdHA problem"
)]
struct Cli {
    /// JSON problem configuration (defaults to the classical instance:
    /// a=1, b=0.1, c=1, n=2, homogeneous Dirichlet data)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output path (defaults to stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Landscape-function estimate of the lowest eigenvalue
    Estimate,
    /// Numerical eigensolve: homogeneous Robin data, or the Neumann slope
    /// mode when the configured data is inhomogeneous Neumann
    Solve(SolveArgs),
    /// Landscape function and effective potential as CSV (zhat,w,W)
    Landscape(LandscapeArgs),
    /// Canonical-form problem produced by the inverse Liouville transformation
    Transform(TransformArgs),
    /// Eigenvalue sweep over (c_hat, b_hat): estimate vs numerical values
    Sweep(SweepArgs),
    /// CSV data underlying one published figure (ids 1a..8b)
    Figure(FigureArgs),
    /// Run the self-verification suite and print its pass/fail table
    Verify,
}

#[derive(Args)]
struct SolveArgs {
    /// Highest eigenvalue index to compute
    #[arg(long, default_value_t = 1)]
    k_max: usize,
    #[command(flatten)]
    closure: ClosureArgs,
    #[command(flatten)]
    scan: ScanArgs,
}

#[derive(Args)]
struct LandscapeArgs {
    /// Intervals for the finite-difference path (used when n != 2)
    #[arg(long, default_value_t = 4000)]
    fd_intervals: usize,
}

#[derive(Args)]
struct TransformArgs {
    /// Branch of the exponent k
    #[arg(long, value_enum, default_value_t = BranchArg::Minus)]
    branch: BranchArg,
    /// Shift d (default: the value that places z0 at the origin)
    #[arg(long)]
    shift: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value_t = BcArg::Dirichlet)]
    bc: BcArg,
    /// Comma-separated c_hat values (defaults: 0.5,1,1.9 Dirichlet; 1 Neumann)
    #[arg(long, value_delimiter = ',')]
    c_hats: Vec<f64>,
    #[arg(long, default_value_t = 0.1)]
    b_lo: f64,
    #[arg(long, default_value_t = 6.0)]
    b_hi: f64,
    #[arg(long, default_value_t = 0.1)]
    b_step: f64,
    /// Left slope for the Neumann mode
    #[arg(long, default_value_t = 1.0)]
    s0: f64,
    /// Right slope for the Neumann mode
    #[arg(long, default_value_t = -1.0)]
    s1: f64,
    #[command(flatten)]
    closure: ClosureArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id: 1a, 1b, ..., 8b
    #[arg(long)]
    id: String,
}

#[derive(Args)]
struct ClosureArgs {
    /// Closure condition for the inhomogeneous-slope mode
    #[arg(long, value_enum, default_value_t = ClosureArg::UnitL2)]
    closure: ClosureArg,
    /// Endpoint value for the left-value/right-value closures
    #[arg(long, default_value_t = 1.0)]
    closure_gamma: f64,
}

impl ClosureArgs {
    fn condition(&self) -> ClosureCondition {
        match self.closure {
            ClosureArg::UnitL2 => ClosureCondition::UnitL2,
            ClosureArg::LeftValue => ClosureCondition::LeftValue(self.closure_gamma),
            ClosureArg::RightValue => ClosureCondition::RightValue(self.closure_gamma),
        }
    }
}

#[derive(Args)]
struct ScanArgs {
    /// Lambda scan window start
    #[arg(long, default_value_t = 0.0)]
    scan_lo: f64,
    /// Lambda scan window end
    #[arg(long, default_value_t = 60.0)]
    scan_hi: f64,
    /// Lambda scan step
    #[arg(long, default_value_t = 0.25)]
    scan_step: f64,
}

impl ScanArgs {
    fn solver(&self) -> SolverConfig {
        SolverConfig {
            lambda_scan: (self.scan_lo, self.scan_hi, self.scan_step),
            ..SolverConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureArg {
    UnitL2,
    LeftValue,
    RightValue,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum BcArg {
    Dirichlet,
    Neumann,
}

enum AppError {
    Usage(anyhow::Error),
    Numerical(anyhow::Error),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 1,
            AppError::Numerical(_) => 2,
        }
    }

    fn message(&self) -> &anyhow::Error {
        match self {
            AppError::Usage(e) | AppError::Numerical(e) => e,
        }
    }
}

fn usage<E: Into<anyhow::Error>>(e: E) -> AppError {
    AppError::Usage(e.into())
}

fn numerical<E: Into<anyhow::Error>>(e: E) -> AppError {
    AppError::Numerical(e.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let config = match &cli.config {
        Some(path) => ProblemConfig::from_path(path).map_err(usage)?,
        None => ProblemConfig::default(),
    };
    match &cli.command {
        Command::Estimate => estimate(&cli, &config),
        Command::Solve(args) => solve(&cli, &config, args),
        Command::Landscape(args) => landscape(&cli, &config, args),
        Command::Transform(args) => transform(&cli, &config, args),
        Command::Sweep(args) => sweep(&cli, args),
        Command::Figure(args) => figure(&cli, args),
        Command::Verify => run_verify(),
    }
}

fn write_output(cli: &Cli, content: &str) -> Result<(), AppError> {
    match &cli.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| usage(anyhow::anyhow!("writing {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn estimate(cli: &Cli, config: &ProblemConfig) -> Result<(), AppError> {
    let normalized = config.params().map_err(usage)?.normalize().map_err(usage)?;
    let left = config.left().map_err(usage)?;
    let right = config.right().map_err(usage)?;
    let solution =
        ClosedFormLandscape::robin(normalized.b_hat(), normalized.c_hat(), &left, &right)
            .map_err(numerical)?;
    let est = solution.estimate_lambda0().map_err(numerical)?;
    let json = serde_json::json!({
        "b_hat": normalized.b_hat(),
        "c_hat": normalized.c_hat(),
        "z_star": est.z_star,
        "w_max": est.landscape_max,
        "W_min": est.effective_potential_min,
        "lambda0_est": est.lambda0_est,
    });
    write_output(cli, &format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable")))
}

fn eigenfunction_csv(pairs: &[pdha::eigensolver::EigenPair]) -> String {
    let mut out = String::from("zhat");
    for position in 0..pairs.len() {
        out.push_str(&format!(",y{position}"));
    }
    out.push('\n');
    for (i, z) in pairs[0].grid.iter().enumerate() {
        out.push_str(&fmt_g12(*z));
        for pair in pairs {
            out.push_str(&format!(",{}", fmt_g12(pair.values[i])));
        }
        out.push('\n');
    }
    out
}

fn solve(cli: &Cli, config: &ProblemConfig, args: &SolveArgs) -> Result<(), AppError> {
    let params = config.params().map_err(usage)?;
    let left = config.left().map_err(usage)?;
    let right = config.right().map_err(usage)?;
    let problem = SchrodingerProblem::new(
        move |z: f64| params.q(z).unwrap_or(f64::NAN),
        left,
        right,
    )
    .validated()
    .map_err(usage)?;
    let q = |z: f64| problem.q(z);
    let solver = args.scan.solver();

    let pairs = if left.is_homogeneous() && right.is_homogeneous() {
        solve_robin_eigen(&q, &left, &right, args.k_max, &solver).map_err(map_eigen)?
    } else if left.is_neumann() && right.is_neumann() {
        let all = solve_slope_normalized_all(
            &q,
            left.rhs,
            right.rhs,
            args.closure.condition(),
            &solver,
        )
        .map_err(map_eigen)?;
        all.into_iter().take(args.k_max + 1).collect()
    } else {
        return Err(usage(anyhow::anyhow!(
            "inhomogeneous data is only supported for Neumann (slope) conditions"
        )));
    };

    for (position, pair) in pairs.iter().enumerate() {
        println!("lambda_{position} = {}", fmt_g12(pair.lambda));
    }
    if cli.out.is_some() {
        write_output(cli, &eigenfunction_csv(&pairs))?;
    }
    Ok(())
}

fn map_eigen(e: EigenError) -> AppError {
    match e {
        EigenError::InvalidConfig(_) | EigenError::InhomogeneousBoundary => usage(e),
        _ => numerical(e),
    }
}

fn landscape(cli: &Cli, config: &ProblemConfig, args: &LandscapeArgs) -> Result<(), AppError> {
    let params = config.params().map_err(usage)?;
    let left = config.left().map_err(usage)?;
    let right = config.right().map_err(usage)?;

    let samples: Vec<(f64, f64)> = if params.n() == 2 {
        let normalized = params.normalize().map_err(usage)?;
        let solution =
            ClosedFormLandscape::robin(normalized.b_hat(), normalized.c_hat(), &left, &right)
                .map_err(numerical)?;
        linspace(0.0, DOMAIN_END, 2001)
            .into_iter()
            .map(|z| (z, solution.eval(z)))
            .collect()
    } else {
        let q = move |z: f64| params.q(z).unwrap_or(f64::NAN);
        let fd = landscape_fd(q, &left, &right, args.fd_intervals).map_err(map_landscape)?;
        fd.grid.into_iter().zip(fd.values).collect()
    };

    let mut out = String::from("zhat,w,W\n");
    for (z, w) in samples {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_g12(z),
            fmt_g12(w),
            pdha_cli::csvfmt::fmt_effective(w)
        ));
    }
    write_output(cli, &out)
}

fn map_landscape(e: LandscapeError) -> AppError {
    match e {
        LandscapeError::InvalidParams { .. } | LandscapeError::DegenerateBC => usage(e),
        _ => numerical(e),
    }
}

fn transform(cli: &Cli, config: &ProblemConfig, args: &TransformArgs) -> Result<(), AppError> {
    let params = config.params().map_err(usage)?;
    if params.n() != 2 {
        return Err(usage(anyhow::anyhow!(
            "the canonical transformation requires n = 2"
        )));
    }
    let branch = match args.branch {
        BranchArg::Plus => Branch::Plus,
        BranchArg::Minus => Branch::Minus,
    };
    let shift = match args.shift {
        Some(d) => d,
        None => {
            // place z0 at the origin, as in the worked classical example
            let k = branch_exponent_k(params.a(), params.c(), branch).map_err(usage)?;
            let m = 1.0 - 2.0 * k;
            -params.b().powf(m) / (params.a() * m)
        }
    };
    let cp = CanonicalProblem::new(params.a(), params.b(), params.c(), shift, branch)
        .map_err(numerical)?;
    let json = serde_json::json!({
        "k": cp.k(),
        "d": cp.d(),
        "z0": cp.z0(),
        "z1": cp.z1(),
        "exponent": cp.exponent(),
        "base_factor": cp.base_factor(),
    });
    write_output(cli, &format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable")))
}

fn sweep(cli: &Cli, args: &SweepArgs) -> Result<(), AppError> {
    let mut cfg = match args.bc {
        BcArg::Dirichlet => SweepConfig::dirichlet_default(),
        BcArg::Neumann => SweepConfig::neumann_default(),
    };
    if !args.c_hats.is_empty() {
        cfg.c_hats = args.c_hats.clone();
    }
    cfg.b_lo = args.b_lo;
    cfg.b_hi = args.b_hi;
    cfg.b_step = args.b_step;
    cfg.slopes = (args.s0, args.s1);
    cfg.closure = args.closure.condition();
    cfg.validate().map_err(usage)?;

    let rows = run_sweep(&cfg);
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    write_output(cli, &sweep_csv(&cfg, &rows))?;
    if failed > 0 {
        return Err(numerical(anyhow::anyhow!("{failed} sweep rows failed")));
    }
    Ok(())
}

fn figure(cli: &Cli, args: &FigureArgs) -> Result<(), AppError> {
    let id: FigureId = args.id.parse().map_err(usage)?;
    let csv = figure_csv(id).map_err(numerical)?;
    write_output(cli, &csv)
}

fn run_verify() -> Result<(), AppError> {
    let results = verify::run_all();
    print!("{}", verify::report(&results));
    let all_criteria_pass = results
        .iter()
        .filter(|r| !r.id.starts_with("inv"))
        .all(|r| r.passed);
    if all_criteria_pass {
        Ok(())
    } else {
        Err(numerical(anyhow::anyhow!(
            "one or more acceptance checks failed (see table)"
        )))
    }
}
