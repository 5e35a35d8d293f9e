//! Command-line front end.
//!
//! Exit codes: 0 success, 1 parse error, 2 evaluation error, 3 bound
//! exceeded.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use brauerlink::corpus::{bundled_corpus, parse_corpus, run_corpus};
use brauerlink::invariants::{self, InvariantResult, Link};
use brauerlink::{parse_braid, parse_pd, Error, ErrorClass, Labeling, SkeinEngine};
use clap::{Parser, Subcommand, ValueEnum};
use log::info;

#[derive(Parser)]
#[command(name = "brauerlink", version, about = "Exact HOMFLY-PT, Jones, Alexander and colored link invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one invariant of one link.
    Eval(EvalArgs),
    /// Bundled test corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Check every entry against the oracles and its expected values.
    Run {
        /// JSON-lines corpus file; the bundled corpus when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Parser)]
struct EvalArgs {
    /// Input file, or `-` for stdin.
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Braid)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Invariant::Homfly)]
    invariant: Invariant,
    /// Specialize at `a = q^d`.
    #[arg(long, allow_negative_numbers = true)]
    d: Option<i32>,
    /// Labels as `{"<component>": [parts], ...}`; unlisted components get one box.
    #[arg(long)]
    labels: Option<String>,
    /// Component cut open for the reduced invariant.
    #[arg(long, default_value_t = 0)]
    cut: usize,
    /// Multiply by `a^writhe`.
    #[arg(long)]
    normalize_framing: bool,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Braid,
    Pd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    Homfly,
    Dpoly,
    Jones,
    Alexander,
    Colored,
    Reduced,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

enum Failure {
    Parse(String),
    Eval(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Eval(e)
    }
}

impl Failure {
    fn report(&self) -> ExitCode {
        match self {
            Failure::Parse(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Failure::Eval(e) => {
                eprintln!("error: {e}");
                ExitCode::from(match e.class() {
                    ErrorClass::Parse => 1,
                    ErrorClass::Evaluation => 2,
                    ErrorClass::BoundExceeded => 3,
                })
            }
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Parse(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("reading {path}: {e}")))
    }
}

fn evaluate(args: &EvalArgs) -> Result<InvariantResult, Failure> {
    let text = read_input(&args.input)?;
    let link: Link = match args.format {
        Format::Braid => parse_braid(&text).map_err(Error::from)?.into(),
        Format::Pd => parse_pd(&text).map_err(Error::from)?.into(),
    };
    let components = link.components();
    let labeling = match &args.labels {
        Some(json) => Labeling::from_json(json, components).map_err(Error::from)?,
        None => Labeling::all_box(components),
    };
    info!(
        "{} components, {} crossings, writhe {}",
        components,
        link.diagram().crossing_count(),
        link.writhe()
    );
    let need_d = || {
        args.d
            .ok_or_else(|| Failure::Parse("--invariant dpoly needs --d".into()))
    };
    let r = match args.invariant {
        Invariant::Homfly => invariants::homfly(&link)?,
        Invariant::Dpoly => invariants::d_polynomial(&link, need_d()?)?,
        Invariant::Jones => invariants::jones(&link)?,
        Invariant::Alexander => invariants::alexander(&link)?,
        Invariant::Colored => match args.d {
            Some(d) => invariants::colored_d(&link, &labeling, d)?,
            None => invariants::colored_homfly(&link, &labeling)?,
        },
        Invariant::Reduced => invariants::reduced(&link, &labeling, args.cut, args.d)?,
    };
    let already = matches!(args.invariant, Invariant::Jones | Invariant::Alexander);
    if args.normalize_framing && !already {
        Ok(invariants::framing_normalize(&r, link.writhe())?)
    } else {
        Ok(r)
    }
}

fn print_result(r: &InvariantResult, output: Output) {
    match output {
        Output::Text => println!("{}", r.value),
        Output::Json => {
            let mut json = serde_json::to_value(r).expect("results serialize");
            if let Some(Ok(beta)) = r.beta_expansion() {
                json["beta_expansion"] = serde_json::to_value(&beta).expect("expansions serialize");
            }
            println!("{json}");
        }
    }
}

fn eval(args: EvalArgs) -> ExitCode {
    let start = Instant::now();
    match evaluate(&args) {
        Ok(r) => {
            print_result(&r, args.output);
            let stats = SkeinEngine::global().stats();
            info!("done in {:.3?}; engine: {stats:?}", start.elapsed());
            ExitCode::SUCCESS
        }
        Err(f) => f.report(),
    }
}

fn corpus(file: Option<PathBuf>, output: Output) -> ExitCode {
    let entries = match file {
        None => bundled_corpus(),
        Some(path) => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => return Failure::Parse(format!("reading {}: {e}", path.display())).report(),
            };
            match parse_corpus(&text) {
                Ok(e) => e,
                Err(e) => return Failure::Eval(e).report(),
            }
        }
    };
    let report = run_corpus(&entries);
    match output {
        Output::Text => println!("{report}"),
        Output::Json => println!("{}", serde_json::to_string(&report).expect("reports serialize")),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let verbose = matches!(&cli.command, Command::Eval(a) if a.verbose);
    env_logger::Builder::new()
        .filter_level(if verbose { log::LevelFilter::Info } else { log::LevelFilter::Warn })
        .format_timestamp(None)
        .init();
    match cli.command {
        Command::Eval(args) => eval(args),
        Command::Corpus {
            action: CorpusAction::Run { file, output },
        } => corpus(file, output),
    }
}
