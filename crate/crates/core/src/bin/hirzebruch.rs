//! Command-line front end: individual computations or the full verification
//! suite, as a human table or machine-readable JSON.

use clap::{Parser, Subcommand, ValueEnum};
use hirzebruch::curvature::KahlerCurvature;
use hirzebruch::genera::CharSeries;
use hirzebruch::hrr::{
    certify_search_window, chi_closed_form, chi_genus_route, chi_series_route, classify_c1,
    residue_route, HrrProblem,
};
use hirzebruch::report::{VerificationReport, VerifyConfig};
use hirzebruch::surface::blowup_c1_top;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hirzebruch",
    version,
    about = "Exact characteristic-class and Riemann-Roch calculator with a numerical Kähler curvature lab"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite and emit a report.
    Verify(VerifyArgs),
    /// Holomorphic Euler characteristic chi(M, O(s)) by all four routes.
    Chi(ChiArgs),
    /// Integer classification of c1(M) = lambda·h from n! = (s+n)...(s+1).
    Classify(ClassifyArgs),
    /// Coefficient of a characteristic series (Todd, Ahat, L).
    Genus(GenusArgs),
    /// Random Kähler-Einstein curvature trials: norm and contraction identities.
    Curvature(CurvatureArgs),
    /// Top self-intersection of c1 on the blowup of a point (c1 = 0, b2 = 0 downstairs).
    Blowup(BlowupArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Truncation order for the series identity check.
    #[arg(long, default_value_t = 64)]
    order: usize,
    /// Largest complex dimension in the exact sweeps.
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    /// Largest |s| in the chi sweep.
    #[arg(long, default_value_t = 12)]
    smax: i64,
    /// Random tensors per curvature cell.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Base seed for the curvature trials.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Scaled residual bound for float checks.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the report to this path.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(clap::Args)]
struct ChiArgs {
    /// Complex dimension, 1..=64.
    #[arg(long)]
    n: usize,
    /// Bundle power: the bundle is L^s with c1 = s·h.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    s: i64,
    /// c1(M) = lambda·h; defaults to n+1. Must satisfy lambda ≡ n+1 (mod 2).
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<i64>,
}

#[derive(clap::Args)]
struct ClassifyArgs {
    /// Complex dimension, 1..=64.
    #[arg(long)]
    n: usize,
}

#[derive(clap::Args)]
struct GenusArgs {
    /// Which characteristic series.
    #[arg(long, value_enum)]
    kind: GenusKindArg,
    /// Degree of the coefficient to print (in the root variable).
    #[arg(long)]
    degree: usize,
    /// Series truncation order, degree..=512.
    #[arg(long, default_value_t = 64)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenusKindArg {
    Todd,
    Ahat,
    L,
}

#[derive(clap::Args)]
struct CurvatureArgs {
    /// Complex dimension, 2..=10.
    #[arg(long)]
    n: usize,
    /// Einstein constant.
    #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
    lambda: f64,
    /// Number of random tensors.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Base seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Scaled residual bound.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(clap::Args)]
struct BlowupArgs {
    /// Complex dimension, 2..=32.
    #[arg(long)]
    n: usize,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Chi(args) => cmd_chi(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Genus(args) => cmd_genus(args),
        Command::Curvature(args) => cmd_curvature(args),
        Command::Blowup(args) => cmd_blowup(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.order == 0 || args.order > 512 {
        return usage_error("--order must be in 1..=512");
    }
    if args.nmax == 0 || args.nmax > 16 {
        return usage_error("--nmax must be in 1..=16");
    }
    if !(0..=64).contains(&args.smax) {
        return usage_error("--smax must be in 0..=64");
    }
    if args.trials == 0 || args.trials > 100_000 {
        return usage_error("--trials must be in 1..=100000");
    }
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage_error("--tol must be positive");
    }
    let config = VerifyConfig {
        order: args.order,
        nmax: args.nmax,
        smax: args.smax,
        seed: args.seed,
        trials: args.trials,
        tolerance: args.tol,
    };
    let report = VerificationReport::run(&config);
    let rendered = match args.format {
        Format::Table => report.render_table(),
        Format::Json => format!("{}\n", report.to_json()),
    };
    print!("{rendered}");
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_chi(args: ChiArgs) -> ExitCode {
    if args.n == 0 || args.n > 64 {
        return usage_error("--n must be in 1..=64");
    }
    if args.s.abs() > 1000 {
        return usage_error("--s must be in -1000..=1000");
    }
    let lambda = args.lambda.unwrap_or(args.n as i64 + 1);
    let problem = match HrrProblem::new(args.n, lambda, args.s) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let genus = chi_genus_route(&problem).expect("parity already checked");
    let s_eff = problem.effective_twist();
    let series = chi_series_route(args.n, s_eff);
    let residue = residue_route(args.n, s_eff);
    let closed = chi_closed_form(args.n, s_eff);
    if genus != closed || series != closed || residue != closed {
        eprintln!(
            "internal error: routes disagree (genus {genus}, series {series}, residue {residue}, closed {closed})"
        );
        return ExitCode::from(1);
    }
    println!("chi(M, O(s)) = {closed}");
    println!(
        "  n = {}, lambda = {lambda}, s = {}, effective twist = {s_eff}",
        args.n, args.s
    );
    println!("  identity: chi = C(n + s_eff, n), agreed by genus, series, residue and closed-form routes");
    ExitCode::SUCCESS
}

fn cmd_classify(args: ClassifyArgs) -> ExitCode {
    if args.n == 0 || args.n > 64 {
        return usage_error("--n must be in 1..=64");
    }
    let c = classify_c1(args.n);
    let fmt = |v: &[i64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("s in {{{}}}", fmt(&c.s_values));
    println!("lambda in {{{}}}", fmt(&c.lambda_values));
    println!(
        "  identity: n! = (s+n)...(s+1); search window [-n-2, 1] certified exhaustive: {}",
        certify_search_window(args.n)
    );
    ExitCode::SUCCESS
}

fn cmd_genus(args: GenusArgs) -> ExitCode {
    if args.order == 0 || args.order > 512 {
        return usage_error("--order must be in 1..=512");
    }
    if args.degree > args.order {
        return usage_error("--degree must not exceed --order");
    }
    let (series, name, variable) = match args.kind {
        GenusKindArg::Todd => (CharSeries::todd(args.order), "Todd", "x"),
        GenusKindArg::Ahat => (CharSeries::ahat(args.order), "Ahat", "u = x^2"),
        GenusKindArg::L => (CharSeries::l(args.order), "L", "u = x^2"),
    };
    let coeff = series
        .series()
        .coefficient(args.degree)
        .expect("degree <= order");
    println!(
        "{name} series coefficient at degree {} = {coeff}",
        args.degree
    );
    println!("  root variable: {variable}");
    ExitCode::SUCCESS
}

fn cmd_curvature(args: CurvatureArgs) -> ExitCode {
    if !(2..=10).contains(&args.n) {
        return usage_error("--n must be in 2..=10");
    }
    if args.trials == 0 || args.trials > 100_000 {
        return usage_error("--trials must be in 1..=100000");
    }
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage_error("--tol must be positive");
    }
    let n = args.n;
    let mut worst_norm: f64 = 0.0;
    let mut worst_contraction: f64 = 0.0;
    let mut gaps_positive = 0usize;
    for t in 0..args.trials {
        let seed = args.seed.wrapping_add(t as u64);
        let raw = KahlerCurvature::random(n, seed).expect("n >= 2");
        worst_contraction =
            worst_contraction.max(raw.contraction_identity_residual() / (1.0 + raw.norm_rm_sq()));
        let einstein = match raw.make_einstein(args.lambda) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        };
        let lhs = einstein.rm0(args.lambda).norm_rm_sq();
        let rhs =
            einstein.norm_rm_sq() - 2.0 * args.lambda * args.lambda * n as f64 / (n as f64 + 1.0);
        worst_norm = worst_norm.max((lhs - rhs).abs() / (1.0 + einstein.norm_rm_sq()));
        if einstein
            .chern_gap(args.lambda)
            .expect("einstein by construction")
            > 0.0
        {
            gaps_positive += 1;
        }
    }
    let ok = worst_norm <= args.tol && worst_contraction <= args.tol;
    println!(
        "norm identity |Rm0|^2 = |Rm|^2 - 2 lambda^2 n/(n+1): max scaled residual {worst_norm:.3e}"
    );
    println!("contraction identity = |Ric|^2 - |Rm|^2:             max scaled residual {worst_contraction:.3e}");
    println!(
        "chern gap positivity on generic Einstein tensors:    {gaps_positive}/{} > 0",
        args.trials
    );
    println!(
        "  n = {n}, lambda = {}, tol = {:.0e}: {}",
        args.lambda,
        args.tol,
        if ok { "PASS" } else { "FAIL" }
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_blowup(args: BlowupArgs) -> ExitCode {
    if !(2..=32).contains(&args.n) {
        return usage_error("--n must be in 2..=32");
    }
    let value = blowup_c1_top(args.n).expect("range checked");
    println!("int c1(blowup)^n = {value}");
    println!("  rule: c1(blowup) = pi* c1(M) - 2[E], c1(M) = 0, int [E]^n = (-1)^(n-1)");
    ExitCode::SUCCESS
}
