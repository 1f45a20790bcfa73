//! The `ck` command: braid invariants, projection-algebra images, seed
//! mutation, Bratteli diagrams, bridge reports, and verification suites.
//!
//! Exit status is 0 on success, 1 on domain errors (bad strand counts,
//! crossing caps, failed verification), and 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use clusterknot::braid::{BraidError, BraidWord};
use clusterknot::bridge::{bridge_report, NStrategy};
use clusterknot::cluster::{mutation_graph, CoefficientMode, Seed};
use clusterknot::projection::{Algebra, RelationPreset};
use clusterknot::skein::{
    homfly_skein, jones_in_t, jones_in_t_latex, jones_skein, jones_via_bracket, SkeinOptions,
};
use clusterknot::verify::{run_suite, Suite};

/// Highest generator index accepted when the strand count is inferred
/// from the braid text alone.
const INFERRED_STRAND_CAP: usize = 64;

#[derive(Parser)]
#[command(
    name = "ck",
    version,
    about = "Exact knot and link invariants from braid words, with a cluster mutation engine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamsArg {
    /// integer relations with sigma -> e + 1
    Paper,
    /// delta relations with the Markov trace
    Tl,
    /// symbolic a, b with sigma -> a e + b
    Parametric,
}

impl ParamsArg {
    fn preset(self) -> RelationPreset {
        match self {
            ParamsArg::Paper => RelationPreset::Paper,
            ParamsArg::Tl => RelationPreset::TemperleyLieb,
            ParamsArg::Parametric => RelationPreset::Parametric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SemifieldArg {
    Universal,
    Tropical,
    Trivial,
}

impl SemifieldArg {
    fn mode(self) -> CoefficientMode {
        match self {
            SemifieldArg::Universal => CoefficientMode::Universal,
            SemifieldArg::Tropical => CoefficientMode::Tropical,
            SemifieldArg::Trivial => CoefficientMode::Trivial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Laurent,
    Catalan,
    BraidRelations,
    Markov,
    Oracle,
    BridgeIdentities,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::All => Suite::All,
            SuiteArg::Laurent => Suite::Laurent,
            SuiteArg::Catalan => Suite::Catalan,
            SuiteArg::BraidRelations => Suite::BraidRelations,
            SuiteArg::Markov => Suite::Markov,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::BridgeIdentities => Suite::BridgeIdentities,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Jones polynomial of the braid closure, printed in t
    Jones {
        /// braid word, e.g. "s1^3", "s1 s2^-1" or "1 1 1"
        braid: String,
        /// strand count (default: the smallest count fitting the word)
        #[arg(long)]
        strands: Option<usize>,
        /// crossing cap on the reduced input (default 16, or CK_LIMIT)
        #[arg(long)]
        limit: Option<usize>,
        /// also run the bracket state sum and fail on disagreement
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Homfly polynomial of the braid closure, in l and m
    Homfly {
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Image of the braid word in the projection algebra
    Rho {
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        /// relation preset for the algebra
        #[arg(long, value_enum, default_value_t = ParamsArg::Paper)]
        params: ParamsArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Integer coefficient vector of the image over the word basis
    Class {
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Apply mutations to a seed and print the result
    Mutate {
        /// named seed, S02 or S11
        #[arg(long, conflicts_with = "matrix")]
        preset: Option<String>,
        /// JSON seed file with fields n, entries, and optional frozen
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SemifieldArg::Universal)]
        semifield: SemifieldArg,
        /// comma-separated 1-based directions, applied left to right
        #[arg(long, value_delimiter = ',')]
        directions: Vec<usize>,
        /// also write the level graph of the mutated seed to this DOT file
        #[arg(long)]
        bratteli: Option<PathBuf>,
        /// depth of the level graph written with --bratteli
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Level graph of mutation classes, as DOT or JSON
    Bratteli {
        #[arg(long, conflicts_with = "matrix")]
        preset: Option<String>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SemifieldArg::Trivial)]
        semifield: SemifieldArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compare the class evaluation with the skein value per exponent
    Bridge {
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        /// single candidate exponent for the prefactor
        #[arg(long = "N", conflicts_with = "search")]
        n_factor: Option<i64>,
        /// inclusive exponent range lo..hi (default 0..6)
        #[arg(long)]
        search: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run a verification suite and exit nonzero on failure
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type RunResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn usage(message: &str) -> RunResult {
    eprintln!("usage error: {message}");
    Ok(ExitCode::from(2))
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize")
}

fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, BraidError> {
    match strands {
        Some(n) => BraidWord::parse(n, text),
        None => {
            let wide = BraidWord::parse(INFERRED_STRAND_CAP, text)?;
            let needed = wide
                .letters()
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1);
            BraidWord::new(needed, wide.letters().to_vec())
        }
    }
}

fn skein_options(limit: Option<usize>) -> SkeinOptions {
    match limit {
        Some(limit) => SkeinOptions { limit },
        None => SkeinOptions::default(),
    }
}

fn load_seed(
    preset: Option<String>,
    matrix: Option<PathBuf>,
    semifield: SemifieldArg,
) -> Result<Option<Seed>, Box<dyn std::error::Error>> {
    match (preset, matrix) {
        (Some(name), None) => Ok(Some(Seed::preset(&name, semifield.mode())?)),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            Ok(Some(Seed::from_matrix_json(&text, semifield.mode())?))
        }
        _ => Ok(None),
    }
}

fn print_seed(seed: &Seed) {
    println!(
        "rank {}, {} coefficients",
        seed.rank(),
        seed.mode().name()
    );
    let rows: Vec<String> = seed
        .matrix()
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    println!("matrix [{}]", rows.join("; "));
    for (i, x) in seed.cluster().iter().enumerate() {
        println!("x{} = {x}", i + 1);
    }
    for (i, c) in seed.coeffs().iter().enumerate() {
        println!("c{} = {c}", i + 1);
    }
    let frozen = seed.frozen_directions();
    if frozen.is_empty() {
        println!("frozen none");
    } else {
        println!(
            "frozen {}",
            frozen
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
}

fn run(command: Command) -> RunResult {
    match command {
        Command::Jones {
            braid,
            strands,
            limit,
            oracle,
            format,
        } => {
            let word = parse_braid(&braid, strands)?;
            let value = jones_skein(&word, &skein_options(limit))?;
            if oracle {
                let bracket = jones_via_bracket(&word)?;
                if bracket != value {
                    return Err(format!(
                        "oracle mismatch: skein gave {value}, bracket gave {bracket}"
                    )
                    .into());
                }
            }
            match format {
                Format::Plain => println!("{}", jones_in_t(&value)),
                Format::Latex => println!("{}", jones_in_t_latex(&value)),
                Format::Json => println!(
                    "{}",
                    pretty(&serde_json::json!({
                        "braid": word.to_string(),
                        "strands": word.strands(),
                        "value": value.to_json(),
                        "in_t": jones_in_t(&value),
                    }))
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homfly {
            braid,
            strands,
            limit,
            format,
        } => {
            let word = parse_braid(&braid, strands)?;
            let value = homfly_skein(&word, &skein_options(limit))?;
            match format {
                Format::Plain => println!("{value}"),
                Format::Latex => println!("{}", value.to_latex()),
                Format::Json => println!(
                    "{}",
                    pretty(&serde_json::json!({
                        "braid": word.to_string(),
                        "strands": word.strands(),
                        "value": value.to_json(),
                    }))
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rho {
            braid,
            strands,
            params,
            format,
        } => {
            if format == Format::Latex {
                return usage("latex output applies to jones and homfly only");
            }
            let word = parse_braid(&braid, strands)?;
            let algebra = Algebra::new(word.strands(), params.preset())?;
            let element = algebra.rho(&word)?;
            match format {
                Format::Plain => println!("{element}"),
                Format::Json => println!(
                    "{}",
                    pretty(&serde_json::json!({
                        "braid": word.to_string(),
                        "params": params.preset().name(),
                        "element": element.to_json(),
                    }))
                ),
                Format::Latex => unreachable!(),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Class {
            braid,
            strands,
            format,
        } => {
            if format == Format::Latex {
                return usage("latex output applies to jones and homfly only");
            }
            let word = parse_braid(&braid, strands)?;
            let algebra = Algebra::new(word.strands(), RelationPreset::Paper)?;
            let (coeffs, scale) = algebra.rho_class(&word)?;
            let basis = algebra.basis();
            match format {
                Format::Plain => {
                    for (w, c) in basis.iter().zip(&coeffs) {
                        println!("{c} {w}");
                    }
                    println!("scale {scale}");
                }
                Format::Json => println!(
                    "{}",
                    pretty(&serde_json::json!({
                        "braid": word.to_string(),
                        "strands": word.strands(),
                        "basis": basis.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        "coeffs": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "scale": scale.to_string(),
                    }))
                ),
                Format::Latex => unreachable!(),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mutate {
            preset,
            matrix,
            semifield,
            directions,
            bratteli,
            depth,
            format,
        } => {
            if format == Format::Latex {
                return usage("latex output applies to jones and homfly only");
            }
            let Some(mut seed) = load_seed(preset, matrix, semifield)? else {
                return usage("mutate needs --preset or --matrix");
            };
            for direction in directions {
                seed = seed.mutate_seed(direction)?;
            }
            match format {
                Format::Plain => print_seed(&seed),
                Format::Json => println!("{}", pretty(&seed.to_json())),
                Format::Latex => unreachable!(),
            }
            if let Some(path) = bratteli {
                let graph = mutation_graph(&seed, depth)?;
                fs::write(&path, graph.to_dot())?;
                println!(
                    "wrote {} with level sizes {}",
                    path.display(),
                    graph
                        .level_sizes()
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bratteli {
            preset,
            matrix,
            semifield,
            depth,
            format,
        } => {
            if format == Format::Latex {
                return usage("latex output applies to jones and homfly only");
            }
            let Some(seed) = load_seed(preset, matrix, semifield)? else {
                return usage("bratteli needs --preset or --matrix");
            };
            let graph = mutation_graph(&seed, depth)?;
            match format {
                Format::Plain => print!("{}", graph.to_dot()),
                Format::Json => println!("{}", pretty(&graph.to_json())),
                Format::Latex => unreachable!(),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bridge {
            braid,
            strands,
            n_factor,
            search,
            limit,
            format,
        } => {
            if format == Format::Latex {
                return usage("latex output applies to jones and homfly only");
            }
            let strategy = match (n_factor, search) {
                (Some(n), None) => NStrategy::Explicit(n),
                (None, Some(text)) => {
                    let Some((lo, hi)) = text.split_once("..") else {
                        return usage("--search expects lo..hi, e.g. 0..6");
                    };
                    match (lo.parse(), hi.parse()) {
                        (Ok(lo), Ok(hi)) if lo <= hi => NStrategy::Search { lo, hi },
                        _ => return usage("--search expects lo..hi with integer lo <= hi"),
                    }
                }
                (None, None) => NStrategy::default(),
                (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
            };
            let word = parse_braid(&braid, strands)?;
            let report = bridge_report(&word, strategy, &skein_options(limit))?;
            match format {
                Format::Plain => {
                    println!("braid {}", report["braid"].as_str().expect("string field"));
                    println!(
                        "jones (in s) {}",
                        report["lhs"].as_str().expect("string field")
                    );
                    for row in report["N_candidates"].as_array().expect("array field") {
                        println!(
                            "N = {}: rhs = {}, agree = {}",
                            row["N"], row["rhs"].as_str().expect("string field"), row["agree"]
                        );
                    }
                }
                Format::Json => println!("{}", pretty(&report)),
                Format::Latex => unreachable!(),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, format } => {
            if format == Format::Latex {
                return usage("latex output applies to jones and homfly only");
            }
            let report = run_suite(suite.suite());
            match format {
                Format::Plain => println!("{report}"),
                Format::Json => println!("{}", pretty(&report.to_json())),
                Format::Latex => unreachable!(),
            }
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
