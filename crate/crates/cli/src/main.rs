use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use recdet::exact::parse_rational;
use recdet::identities::EngineChoice;
use recdet::sequences::NamedFamily;
use recdet_cli::commands::{self, MatrixSource};
use recdet_cli::config::{Format, SweepConfig};
use recdet_cli::sweep;

/// Exact determinants of matrices built from recurrence sequences.
#[derive(Parser)]
#[command(name = "recdet", version)]
struct Cli {
    /// Output format: text or json.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Seed for random specs and profiles.
    #[arg(long, global = true)]
    seed: Option<String>,
    /// bareiss, gauss, condense, laplace or all.
    #[arg(long, global = true)]
    engine: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the terms P_lo through P_hi.
    Seq {
        /// fib, lucas, chebT, chebS, companion:a,b,c, favard:q,r,b,c or p,q,r;a,b,c.
        family: String,
        /// Inclusive range such as -2..4.
        #[arg(allow_hyphen_values = true)]
        range: String,
    },
    /// Compute a determinant from a matrix file or a theorem's matrix.
    Det(DetArgs),
    /// Run an identity sweep and report every comparison.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DetArgs {
    /// Text dump: one row per line, entries separated by `|`.
    #[arg(long, conflicts_with = "theorem")]
    matrix_file: Option<String>,
    /// 2, 3, 3.5 or 4.
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long, default_value = "fib")]
    family: String,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    s: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    d_seq: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    e_seq: Option<Vec<i64>>,
    /// Evaluate entries at this rational point first.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
}

/// Each flag overrides the same key from `--config`.
#[derive(Args)]
struct VerifyArgs {
    /// File of `key = value` lines.
    #[arg(long)]
    config: Option<String>,
    /// Whitespace-separated families.
    #[arg(long = "family", alias = "families")]
    families: Option<String>,
    #[arg(long)]
    random_families: Option<String>,
    /// Comma-separated: 1, 2, 3, 3.5, 4, cor, lemmas, all.
    #[arg(long = "theorem", alias = "theorems")]
    theorems: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    d: Option<String>,
    /// fixed or random:COUNT:BOUND.
    #[arg(long)]
    profiles: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d_seq: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    e_seq: Option<String>,
    /// Comma-separated evaluation points.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long)]
    lemma_count: Option<String>,
    #[arg(long, hide = true)]
    corrupt_rhs: bool,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn format_of(cli: &Cli) -> Result<Format, String> {
    cli.format.as_deref().map_or(Ok(Format::Text), str::parse)
}

fn engine_of(cli: &Cli) -> Result<EngineChoice, String> {
    cli.engine.as_deref().map_or(Ok(EngineChoice::One(recdet::det::Engine::Bareiss)), str::parse)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Seq { family, range } => {
            let format = match format_of(&cli) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let family: NamedFamily = match family.parse() {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let (lo, hi) = match commands::parse_span(range) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            print!("{}", commands::seq(&family, lo, hi, format));
            ExitCode::SUCCESS
        }
        Command::Det(args) => match det(&cli, args) {
            Ok(out) => {
                print!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Verify(args) => {
            let config = match verify_config(&cli, args) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let report = sweep::run(&config);
            match config.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

fn det(cli: &Cli, args: &DetArgs) -> Result<String, String> {
    let format = format_of(cli)?;
    let engine = engine_of(cli)?;
    let x = args.x.as_deref().map(parse_rational).transpose().map_err(|e| e.to_string())?;
    let source = match (&args.matrix_file, &args.theorem) {
        (Some(path), _) => MatrixSource::Text(fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?),
        (None, Some(theorem)) => MatrixSource::Builder {
            theorem: theorem.clone(),
            family: args.family.parse().map_err(|e: recdet::sequences::SpecError| e.to_string())?,
            case: commands::builder_case(args.s, args.k, args.n, args.m, args.d, args.d_seq.clone(), args.e_seq.clone())?,
        },
        (None, None) => return Err("give --matrix-file or --theorem".into()),
    };
    commands::det(&source, engine, x.as_ref(), format)
}

fn verify_config(cli: &Cli, args: &VerifyArgs) -> Result<SweepConfig, String> {
    let mut config = SweepConfig::default();
    if let Some(path) = &args.config {
        let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        config.apply_file(&text).map_err(|e| format!("{path}: {e}"))?;
    }
    let flags = [
        ("families", &args.families),
        ("random-families", &args.random_families),
        ("theorems", &args.theorems),
        ("s", &args.s),
        ("k", &args.k),
        ("n", &args.n),
        ("m", &args.m),
        ("d", &args.d),
        ("profiles", &args.profiles),
        ("d-seq", &args.d_seq),
        ("e-seq", &args.e_seq),
        ("x", &args.x),
        ("lemma-count", &args.lemma_count),
        ("format", &cli.format),
        ("seed", &cli.seed),
        ("engine", &cli.engine),
    ];
    for (key, value) in flags {
        if let Some(value) = value {
            config.apply(key, value).map_err(|e| e.to_string())?;
        }
    }
    config.corrupt_rhs = args.corrupt_rhs;
    config.finish().map_err(|e| e.to_string())
}
