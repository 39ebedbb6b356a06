use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use centra_core::verify::{
    corpus_specs, default_cache_dir, render_report, AnalysisCache, CorpusSpec, ReportFormat, Theorem, Verdict,
};
use centra_core::{cent_count, classify_central_quotient, cover_profile, parse_group, FiniteGroup, Limits};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PASS_WITH_SKIPS: u8 = 3;

/// Centralizer analysis and classification checks for small finite groups.
///
/// Group specs use the expression language `C n`, `D n` (dihedral of total
/// order n), `Q n` (dicyclic of order n), `S n`, `A n`, `Heis p`,
/// `Cn:Cm(k=j)` (cyclic semidirect product) and `x` for direct products,
/// e.g. `D14xC5` or `C7:C6(k=3)`.
#[derive(Parser)]
#[command(name = "centra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the centralizer profile of a group as JSON.
    Analyze { spec: String },
    /// Print the class of G/Z(G).
    Classify { spec: String },
    /// Print a group's multiplication table as JSON.
    Dump { spec: String },
    /// Sweep a corpus and check a classification statement.
    Verify {
        #[arg(value_parser = ["theorem1", "theorem2", "small-n"])]
        theorem: String,
        #[arg(long, default_value_t = 343)]
        max_order: usize,
        #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out pairwise direct products.
        #[arg(long)]
        no_products: bool,
        /// Drop corpus groups isomorphic to an earlier one.
        #[arg(long)]
        dedup: bool,
        /// Neither read nor write the analysis cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Inspect the generated corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List corpus group specs in corpus order.
    List {
        #[arg(long, default_value_t = 343)]
        max_order: usize,
        #[arg(long)]
        no_products: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

type CliResult = Result<u8, (u8, String)>;

fn load(spec: &str) -> Result<FiniteGroup, (u8, String)> {
    parse_group(spec).map_err(|e| (EXIT_USAGE, format!("{spec}: {e}")))
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Analyze { spec } => {
            let g = load(&spec)?;
            let text = if g.is_abelian() {
                let json = serde_json::json!({
                    "group": g.name(),
                    "order": g.order(),
                    "center_order": g.order(),
                    "cent_count": cent_count(&g),
                    "abelian": true,
                });
                serde_json::to_string_pretty(&json)
            } else {
                let profile = cover_profile(&g).map_err(|e| (EXIT_FAIL, e.to_string()))?;
                serde_json::to_string_pretty(&profile)
            };
            println!("{}", text.expect("analysis serializes"));
            Ok(EXIT_PASS)
        }
        Command::Classify { spec } => {
            let g = load(&spec)?;
            let class = classify_central_quotient(&g).map_err(|e| (EXIT_FAIL, e.to_string()))?;
            println!("{class}");
            Ok(EXIT_PASS)
        }
        Command::Dump { spec } => {
            println!("{}", load(&spec)?.to_json());
            Ok(EXIT_PASS)
        }
        Command::Verify {
            theorem,
            max_order,
            format,
            out,
            no_products,
            dedup,
            no_cache,
        } => {
            let theorem: Theorem = theorem.parse().map_err(|e| (EXIT_USAGE, e))?;
            let format: ReportFormat = format.parse().map_err(|e| (EXIT_USAGE, e))?;
            let corpus = CorpusSpec {
                include_products: !no_products,
                dedup,
                ..CorpusSpec::up_to(max_order)
            };
            let mut cache = (!no_cache).then(|| AnalysisCache::open(&default_cache_dir(), Limits::default()));
            let report = centra_core::verify::verify(theorem, &corpus, cache.as_mut())
                .map_err(|e| (EXIT_USAGE, e.to_string()))?;
            if let Some(cache) = cache.as_mut() {
                if let Err(e) = cache.save() {
                    eprintln!("warning: could not write analysis cache: {e}");
                }
            }
            let text = render_report(&report, format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| (EXIT_FAIL, format!("{}: {e}", path.display())))?
                }
                None => print!("{text}"),
            }
            eprintln!(
                "{}: {} groups, verdict {}, {} counterexamples, {} skipped",
                theorem,
                report.records.len(),
                if report.verdict == Verdict::Pass {
                    "pass"
                } else {
                    "fail"
                },
                report.counterexamples.len(),
                report.skipped
            );
            Ok(match (report.verdict, report.skipped) {
                (Verdict::Fail, _) => EXIT_FAIL,
                (Verdict::Pass, 0) => EXIT_PASS,
                (Verdict::Pass, _) => EXIT_PASS_WITH_SKIPS,
            })
        }
        Command::Corpus {
            action: CorpusAction::List { max_order, no_products },
        } => {
            let corpus = CorpusSpec {
                include_products: !no_products,
                ..CorpusSpec::up_to(max_order)
            };
            let specs = corpus_specs(&corpus).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            for e in specs {
                println!("{e}");
            }
            Ok(EXIT_PASS)
        }
    }
}
