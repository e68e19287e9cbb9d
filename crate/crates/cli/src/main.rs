//! `meshlab`: counting, transforming, and verifying mesh-pattern
//! statistics on permutations.
//!
//! Exit codes: 0 success / everything verified, 1 verification failure or
//! divergence, 2 usage error. Identical invocations produce byte-identical
//! output regardless of `--jobs`; the `MESHLAB_MAX_N` environment variable
//! overrides the enumeration cap (default 10).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use meshlab_core::cfrac;
use meshlab_core::equidist::joint_distribution;
use meshlab_core::involution::{phi, phi_traced, psi, psi_traced, InvolutionTrace};
use meshlab_core::mesh::MeshPattern;
use meshlab_core::poly::Var;
use meshlab_core::verify::{run_suite, Suite};
use meshlab_core::{Error, Permutation, Symmetry};

mod output;

#[derive(Parser)]
#[command(name = "meshlab", version, about, max_term_width = 100)]
struct Cli {
    /// Worker threads for exhaustive sweeps (default: all cores). Results
    /// do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count occurrences of a mesh pattern in a permutation.
    Count(CountArgs),
    /// Print the eight statistics and the antirecord positions.
    Stats(StatsArgs),
    /// Apply a symmetry to a permutation or a pattern.
    Transform(TransformArgs),
    /// Apply the involution Phi.
    Phi(MapArgs),
    /// Apply the involution Psi.
    Psi(MapArgs),
    /// Joint distribution of pattern counts over S_n.
    Dist(DistArgs),
    /// Expand a continued fraction into a truncated series.
    Cf(CfArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    perm: String,
    /// Pattern in the text form `tau|a,b;a,b`, e.g. `231|1,2;2,1`.
    #[arg(long)]
    pattern: String,
    /// Also list each occurrence's index tuple.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    perm: String,
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, conflicts_with = "pattern", required_unless_present = "pattern")]
    perm: Option<String>,
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long, value_enum)]
    op: SymmetryArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    Inverse,
    Reverse,
    Complement,
}

impl From<SymmetryArg> for Symmetry {
    fn from(op: SymmetryArg) -> Symmetry {
        match op {
            SymmetryArg::Inverse => Symmetry::Inverse,
            SymmetryArg::Reverse => Symmetry::Reverse,
            SymmetryArg::Complement => Symmetry::Complement,
        }
    }
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    perm: String,
    /// Also print the step panels as a JSON array.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated pattern list; the flag may repeat.
    #[arg(long, required = true)]
    patterns: Vec<String>,
    /// Tab-separated rows instead of JSON.
    #[arg(long, conflicts_with = "json")]
    tsv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CfArgs {
    #[arg(long, value_enum)]
    rule: RuleArg,
    /// Truncation order N: coefficients of t^0..t^N.
    #[arg(long)]
    order: usize,
    /// Reinstate the rar variable z via F1/(1 + x(1-z) t F1).
    #[arg(long)]
    z_correction: bool,
    /// Compare against the enumeration oracle instead of printing the
    /// series; exits 1 on divergence.
    #[arg(long)]
    compare_brute: bool,
    /// JSON instead of the line-per-degree text form.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    /// Five-variable coefficients for arec/erec/rar/exc/inv.
    Dkz,
    /// One-variable coefficients a(2k-1) = k, a(2k) = y + k - 1.
    Conjecture,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// Sweep depth for the exhaustive checks.
    #[arg(long, default_value_t = 7)]
    n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn sweep_options(jobs: Option<usize>) -> Result<meshlab_core::SweepOptions, Error> {
    let mut opts = meshlab_core::SweepOptions { jobs, ..Default::default() };
    if let Ok(value) = std::env::var("MESHLAB_MAX_N") {
        opts.cap = value.parse().map_err(|_| Error::InvalidCap(value.clone()))?;
    }
    Ok(opts)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let opts = sweep_options(cli.jobs)?;
    match cli.command {
        Command::Count(args) => {
            let perm: Permutation = args.perm.parse()?;
            let pattern: MeshPattern = args.pattern.parse()?;
            println!("{}", pattern.count(&perm));
            if args.list {
                for occ in pattern.occurrences(&perm) {
                    println!("{occ}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats(args) => {
            let perm: Permutation = args.perm.parse()?;
            print!("{}", output::stats(&perm, args.pretty));
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform(args) => {
            let op: Symmetry = args.op.into();
            match (args.perm, args.pattern) {
                (Some(p), None) => println!("{}", op.apply(&p.parse()?)),
                (None, Some(p)) => println!("{}", p.parse::<MeshPattern>()?.transform(op)),
                _ => unreachable!("clap enforces exactly one input"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi(args) => run_involution(&args, phi, phi_traced),
        Command::Psi(args) => run_involution(&args, psi, psi_traced),
        Command::Dist(args) => {
            let patterns = parse_pattern_list(&args.patterns)?;
            let dist = joint_distribution(args.n, &patterns, &opts)?;
            if args.tsv {
                print!("{}", dist.to_tsv());
            } else {
                println!("{}", dist.to_json());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cf(args) => run_cf(args, &opts),
        Command::Verify(args) => {
            let suite: Suite = args.suite.parse()?;
            let results = run_suite(suite, args.n, &opts)?;
            let failures = results.iter().filter(|r| r.status.is_failure()).count();
            for r in &results {
                println!("{}\t{}\t{}", r.status.label(), r.name, r.detail);
            }
            println!(
                "# suite={} n={} checks={} failures={}",
                suite,
                args.n,
                results.len(),
                failures
            );
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn run_involution(
    args: &MapArgs,
    plain: fn(&Permutation) -> Permutation,
    traced: fn(&Permutation) -> (Permutation, InvolutionTrace),
) -> Result<ExitCode, Error> {
    let perm: Permutation = args.perm.parse()?;
    if args.trace {
        let (image, trace) = traced(&perm);
        println!("{image}");
        println!("{}", trace.to_json());
    } else {
        println!("{}", plain(&perm));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_cf(args: CfArgs, opts: &meshlab_core::SweepOptions) -> Result<ExitCode, Error> {
    let rule = match args.rule {
        RuleArg::Dkz => cfrac::dkz_alpha(),
        RuleArg::Conjecture => cfrac::conjecture_alpha(),
    };
    let mut series = cfrac::sfraction_series(&rule, args.order);
    if args.z_correction {
        series = cfrac::apply_z_correction(&series)?;
    }
    if args.compare_brute {
        let oracle = match args.rule {
            RuleArg::Dkz => {
                let full = cfrac::brute_force_f(args.order, opts)?;
                if args.z_correction {
                    full
                } else {
                    full.map_coeffs(|c| c.substitute_one(&[Var::Z]))
                }
            }
            RuleArg::Conjecture => cfrac::brute_force_pattern_series(
                &meshlab_core::mesh::catalog(meshlab_core::PatternName::Nr3),
                args.order,
                opts,
            )?,
        };
        return Ok(if series == oracle {
            println!("equal through t^{}", args.order);
            ExitCode::SUCCESS
        } else {
            let degree = (0..=args.order)
                .find(|&d| series.coeff(d) != oracle.coeff(d))
                .expect("some degree differs");
            println!("diverges at t^{degree}");
            ExitCode::FAILURE
        });
    }
    if args.json {
        println!("{}", series.to_json());
    } else {
        println!("{series}");
    }
    Ok(ExitCode::SUCCESS)
}

/// Split pattern lists on the commas that separate patterns, not the
/// commas inside box pairs: a new pattern starts at each segment that
/// contains a `|`.
fn parse_pattern_list(flags: &[String]) -> Result<Vec<MeshPattern>, Error> {
    let mut out = Vec::new();
    for flag in flags {
        let mut current = String::new();
        for segment in flag.split(',') {
            if segment.contains('|') && !current.is_empty() {
                out.push(current.parse()?);
                current = String::new();
            }
            if !current.is_empty() {
                current.push(',');
            }
            current.push_str(segment);
        }
        if !current.is_empty() || !flag.is_empty() {
            out.push(current.parse()?);
        }
    }
    Ok(out)
}
