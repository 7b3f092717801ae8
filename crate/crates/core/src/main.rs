use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skeltrop::bounds::{
    coordinate_count, corollary_twist, phi_upper_bound, BoundMode, BoundQuery, CanonicalClass,
};
use skeltrop::io::{emit_certificate, generate_fixture, parse_input, FixtureKind, InputDocument};
use skeltrop::sections::{canonical_order_matrix, validate_orders};
use skeltrop::{check_faithful, CheckMode, Overall};

#[derive(Parser)]
#[command(
    name = "skeltrop",
    version,
    about = "Certify tropicalizations of skeletons from vanishing-order data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the complex and order matrix of an input document.
    Validate(InputArg),
    /// Print the canonical order matrix of the document's complex.
    Canonical(InputArg),
    /// Certify unimodularity and injectivity, printing a JSON certificate.
    Check(CheckArgs),
    /// Fixture documents.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Basepoint-freeness thresholds and coordinate counts.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct InputArg {
    /// Input document, `-` for stdin.
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Certificate,
    Exact,
    Both,
}

impl From<ModeArg> for CheckMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Certificate => CheckMode::Certificate,
            ModeArg::Exact => CheckMode::Exact,
            ModeArg::Both => CheckMode::Both,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Input document, `-` for stdin.
    input: PathBuf,
    /// Overrides the document's check mode (default both).
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the certificate here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FixtureAction {
    /// Print a fixture document.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cycle,
    Path,
    SimplexBoundary,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: KindArg,
    /// Size for cycle, path and simplex-boundary.
    #[arg(long, short)]
    n: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundModeArg {
    AngehrnSiu,
    Fujita,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum, default_value = "angehrn-siu")]
    mode: BoundModeArg,
    /// Number of special-fiber components, for the coordinate count.
    #[arg(long, default_value_t = 1)]
    ell: usize,
}

#[derive(Serialize)]
struct BoundsOutput {
    d: usize,
    ell: usize,
    mode: BoundMode,
    phi_upper_bound: usize,
    coordinate_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    twist_trivial_canonical: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    twist_ample_canonical: Option<usize>,
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn read_input(path: &PathBuf) -> Result<InputDocument, Box<dyn std::error::Error>> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    Ok(parse_input(&text)?)
}

fn validate(arg: &InputArg) -> CliResult {
    let doc = read_input(&arg.input)?;
    let p = doc.resolve()?;
    let mut problems: Vec<String> = p
        .complex
        .validate()
        .iter()
        .map(ToString::to_string)
        .collect();
    problems.extend(
        validate_orders(&p.orders, &p.complex)?
            .iter()
            .map(ToString::to_string),
    );
    if problems.is_empty() {
        println!(
            "valid: {} strata on {} components",
            p.complex.strata().len(),
            p.complex.ell()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        for line in &problems {
            eprintln!("{line}");
        }
        Ok(ExitCode::from(1))
    }
}

fn canonical(arg: &InputArg) -> CliResult {
    let doc = read_input(&arg.input)?;
    let c = doc.build_complex()?;
    let m = canonical_order_matrix(&c);
    println!(
        "{}",
        serde_json::to_string(&serde_json::json!({ "rows": m.rows() }))?
    );
    Ok(ExitCode::SUCCESS)
}

fn check(args: &CheckArgs) -> CliResult {
    let doc = read_input(&args.input)?;
    let p = doc.resolve()?;
    let options = p.options(args.mode.map(Into::into), args.jobs.max(1));
    let report = check_faithful(&p.complex, &p.orders, &options)?;
    let text = emit_certificate(&doc, &p.complex, &report);
    match &args.output {
        Some(path) => fs::write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(match report.overall {
        Overall::Faithful => ExitCode::SUCCESS,
        Overall::NotFaithful | Overall::CertificateIncomplete => ExitCode::from(2),
    })
}

fn fixtures(args: &GenArgs) -> CliResult {
    let size = || args.n.ok_or("--n is required for this fixture");
    let kind = match args.kind {
        KindArg::Cycle => FixtureKind::Cycle(size()?),
        KindArg::Path => FixtureKind::Path(size()?),
        KindArg::SimplexBoundary => FixtureKind::SimplexBoundary(size()?),
        KindArg::Random => FixtureKind::Random {
            ell: args.ell.ok_or("--ell is required for random fixtures")?,
            d: args.dim.ok_or("--dim is required for random fixtures")?,
            seed: args.seed,
        },
    };
    println!("{}", generate_fixture(kind)?.to_pretty_json());
    Ok(ExitCode::SUCCESS)
}

fn bounds(args: &BoundsArgs) -> CliResult {
    let mode = match args.mode {
        BoundModeArg::AngehrnSiu => BoundMode::AngehrnSiu,
        BoundModeArg::Fujita => BoundMode::Fujita,
    };
    let q = BoundQuery::new(args.dim, args.ell, mode)?;
    let out = BoundsOutput {
        d: q.d,
        ell: q.ell,
        mode,
        phi_upper_bound: phi_upper_bound(&q)?,
        coordinate_count: coordinate_count(q.ell, q.d)?,
        twist_trivial_canonical: corollary_twist(q.d, CanonicalClass::TrivialCanonical).ok(),
        twist_ample_canonical: corollary_twist(q.d, CanonicalClass::AmpleCanonical).ok(),
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(a) => validate(a),
        Command::Canonical(a) => canonical(a),
        Command::Check(a) => check(a),
        Command::Fixtures {
            action: FixtureAction::Gen(a),
        } => fixtures(a),
        Command::Bounds(a) => bounds(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
