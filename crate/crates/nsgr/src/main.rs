//! Command-line front end: per-semigroup analysis reports, corpus theorem
//! sweeps, and open-question hunts.
//!
//! Exit codes: 0 success, 1 sweep found invariant violations, 2 input
//! error, 3 a hunt found a discovery. The `NSGR_MAX_TABLE` environment
//! variable caps internal table growth; exceeding it aborts with exit 2.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use nsgr::report::ReportDocument;
use nsgr::search::{self, EnumerationParams, OpenQuestion, SweepResult};
use nsgr::semigroup::NumericalSemigroup;
use nsgr::{graded, threegen};

const EXIT_OK: i32 = 0;
const EXIT_VIOLATIONS: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_DISCOVERY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "nsgr",
    about = "Tangent cone invariants of numerical semigroup rings",
    long_about = "Analyzes the associated graded ring of a numerical semigroup ring: \
                  Apery invariants, reduction number, socle basis, and the \
                  Cohen-Macaulay / Buchsbaum / Gorenstein verdicts. Sweeps enumerated \
                  corpora against the structure theorems and hunts for counterexamples \
                  to two open questions.\n\n\
                  Exit codes: 0 ok, 1 sweep violations, 2 input error, 3 hunt discovery.\n\
                  NSGR_MAX_TABLE caps internal table sizes (input error when exceeded)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one semigroup given as a comma-separated generator list
    Analyze {
        /// Generators, e.g. 4,5,11
        gens: String,
        /// Emit the machine-readable JSON document
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the human-readable text report (default)
        #[arg(long)]
        text: bool,
    },
    /// Hunt one open question over a corpus; exits 3 when hits are found
    Search {
        /// Which question to hunt: 5.7 or 5.8
        #[arg(long)]
        question: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Re-check every structure theorem over a corpus; exits 1 on violations
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// Largest generator value for enumeration
    #[arg(long, value_name = "V")]
    max_gen: Option<u64>,
    /// Largest number of minimal generators for enumeration
    #[arg(long, value_name = "N")]
    max_ngens: Option<u32>,
    /// Corpus file: one comma-separated generator list per line, # comments
    #[arg(long, value_name = "FILE", conflicts_with_all = ["max_gen", "max_ngens"])]
    corpus: Option<PathBuf>,
    /// Worker threads for the sweep (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    // table-cap overruns surface as panics deep in table growth; map them to
    // an input error instead of a crash
    std::panic::set_hook(Box::new(|info| {
        let message = if let Some(s) = info.payload().downcast_ref::<&str>() {
            s
        } else if let Some(s) = info.payload().downcast_ref::<String>() {
            s.as_str()
        } else {
            "internal error"
        };
        eprintln!("error: {message}");
    }));
    let outcome = std::panic::catch_unwind(|| run(cli));
    let _ = std::panic::take_hook();
    std::process::exit(match outcome {
        Ok(code) => code,
        Err(_) => EXIT_INPUT,
    });
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze { gens, json, .. } => cmd_analyze(&gens, json),
        Command::Search { question, corpus } => cmd_search(&question, &corpus),
        Command::Verify { corpus } => cmd_verify(&corpus),
    }
}

fn parse_generators(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<u64>()
                .map_err(|e| format!("bad generator {token:?}: {e}"))
        })
        .collect()
}

fn cmd_analyze(gens: &str, json: bool) -> i32 {
    let raw = match parse_generators(gens) {
        Ok(raw) => raw,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT;
        }
    };
    let semigroup = match NumericalSemigroup::new(&raw) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let analysis = graded::analyze(&semigroup);
    let tg = (semigroup.generators().len() == 3)
        .then(|| threegen::verify_structure(&semigroup).expect("three generators checked"));
    let document = ReportDocument::from_analysis(&analysis, tg.as_ref());
    if json {
        println!("{}", document.to_json());
    } else {
        print!("{}", document.render_text());
    }
    EXIT_OK
}

fn resolve_systems(corpus: &CorpusArgs) -> Result<Vec<Vec<u64>>, String> {
    match (&corpus.corpus, corpus.max_gen, corpus.max_ngens) {
        (Some(path), None, None) => search::load_corpus(path).map_err(|e| e.to_string()),
        (None, Some(max_gen), Some(max_ngens)) => {
            let params = EnumerationParams::new(max_ngens, max_gen);
            search::minimal_generating_systems(&params).map_err(|e| e.to_string())
        }
        (None, _, _) => Err("specify either --corpus FILE or both --max-gen and --max-ngens".into()),
        (Some(_), _, _) => unreachable!("clap forbids mixing --corpus with bounds"),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, task: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => task(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(task),
    }
}

fn cmd_search(question: &str, corpus: &CorpusArgs) -> i32 {
    let question = match question {
        "5.7" => OpenQuestion::Q57,
        "5.8" => OpenQuestion::Q58,
        other => {
            eprintln!("error: unknown question {other:?}, expected 5.7 or 5.8");
            return EXIT_INPUT;
        }
    };
    let systems = match resolve_systems(corpus) {
        Ok(systems) => systems,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT;
        }
    };
    let start = Instant::now();
    let result: Result<SweepResult, _> = with_jobs(corpus.jobs, || search::hunt(question, &systems));
    match result {
        Ok(result) => {
            println!(
                "question {question}: corpus {} semigroups, elapsed {:.2?}, hits {}",
                result.corpus_size,
                start.elapsed(),
                result.hits.len()
            );
            for hit in &result.hits {
                println!("DISCOVERY <{}>: {}", join(&hit.generators), hit.description);
            }
            if result.hits.is_empty() {
                EXIT_OK
            } else {
                EXIT_DISCOVERY
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn cmd_verify(corpus: &CorpusArgs) -> i32 {
    let systems = match resolve_systems(corpus) {
        Ok(systems) => systems,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_INPUT;
        }
    };
    let start = Instant::now();
    let result = with_jobs(corpus.jobs, || search::sweep_theorems(&systems));
    match result {
        Ok(result) => {
            println!(
                "verified {} semigroups, elapsed {:.2?}, violations {}",
                result.corpus_size,
                start.elapsed(),
                result.violations.len()
            );
            for v in &result.violations {
                println!(
                    "VIOLATION <{}> [{}] {}",
                    join(&v.generators),
                    v.invariant,
                    v.details
                );
            }
            if result.violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn join(gens: &[u64]) -> String {
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
