use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stable_koszul::canon::enumerate_graphs;
use stable_koszul::graph::Graph;
use stable_koszul::koszul::is_strongly_koszul;
use stable_koszul::poset::Poset;
use stable_koszul::report::{classify, run_table, verify_theorems, Fault, VerifyOptions, RECORD_HEADER};
use stable_koszul::toric::{hibi_ring, stable_set_ring, SemigroupRing};
use stable_koszul::Error;

#[derive(Parser)]
#[command(version, about = "Graph classes, toric rings and strong Koszulness on small instances")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    /// Largest degree scanned by the Koszul oracle.
    #[arg(long, env = "KOSZUL_DEGREE_BOUND", default_value_t = 4, global = true)]
    degree_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List one graph per isomorphism class, as graph6.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Classify graphs given as graph6.
    Classify(ClassifyInput),
    /// Classify every connected graph on n vertices.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Cross-check every characterization on all small graphs and posets.
    Verify {
        #[arg(long)]
        n: usize,
        /// Corrupt a recognizer to confirm the checks can fail.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Strong-Koszulness verdict for a graph's stable-set ring or a
    /// poset's Hibi ring.
    Koszul(KoszulInput),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ClassifyInput {
    /// File with one graph6 string per line.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KoszulInput {
    #[arg(long)]
    graph6: Option<String>,
    /// Poset JSON file: {"n": .., "relations": [[i, j], ..]} meaning i < j.
    #[arg(long)]
    poset: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    #[value(name = "flip-c4-p4-free")]
    FlipC4P4Free,
    NegateKoszul,
}

/// Failures that map to exit status 2.
fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => return usage(e),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    code
}

fn run(cli: &Cli, out: &mut String) -> Result<ExitCode, Error> {
    let d = cli.degree_bound;
    match &cli.command {
        Command::Enum { n, connected } => {
            let graphs = enumerate_graphs(*n, *connected)?;
            let codes: Vec<String> = graphs.iter().map(Graph::to_graph6).collect();
            match cli.format {
                Format::Text => codes.iter().for_each(|c| writeln!(out, "{c}").unwrap()),
                Format::Json => *out = json(&json!({
                    "n": n,
                    "connected": connected,
                    "count": codes.len(),
                    "graphs": codes,
                })),
            }
        }
        Command::Classify(input) => {
            let text = match (&input.input, &input.graph6) {
                (Some(path), _) => read(path)?,
                (None, Some(code)) => code.clone(),
                (None, None) => unreachable!("clap requires one input"),
            };
            let records = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| classify(&Graph::from_graph6(l)?, d))
                .collect::<Result<Vec<_>, _>>()?;
            match cli.format {
                Format::Text => {
                    writeln!(out, "{RECORD_HEADER}").unwrap();
                    records.iter().for_each(|r| writeln!(out, "{r}").unwrap());
                }
                Format::Json => *out = json(&records),
            }
        }
        Command::Table { n } => {
            let report = run_table(*n, d, cli.jobs)?;
            match cli.format {
                Format::Text => *out = report.to_string(),
                Format::Json => *out = json(&report),
            }
        }
        Command::Verify { n, inject_fault } => {
            let fault = inject_fault.map(|f| match f {
                FaultArg::FlipC4P4Free => Fault::FlipC4P4Free,
                FaultArg::NegateKoszul => Fault::NegateKoszul,
            });
            let options = VerifyOptions { degree_bound: d, jobs: cli.jobs, fault };
            let report = verify_theorems(*n, options)?;
            match cli.format {
                Format::Text => *out = report.to_string(),
                Format::Json => *out = json(&report),
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Koszul(input) => {
            let ring: SemigroupRing = match (&input.graph6, &input.poset) {
                (Some(code), _) => stable_set_ring(&Graph::from_graph6(code)?)?,
                (None, Some(path)) => hibi_ring(&Poset::from_json(&read(path)?)?)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let verdict = is_strongly_koszul(&ring, d)?;
            match cli.format {
                Format::Json => *out = json(&verdict.to_json_value(&ring)),
                Format::Text => match &verdict.witness {
                    None => writeln!(out, "strongly Koszul up to degree {d}").unwrap(),
                    Some(w) => writeln!(
                        out,
                        "not strongly Koszul: generators {} and {} share degree-{} element {:?} \
                         outside the ideal of their degree-2 common multiples",
                        w.pair.0,
                        w.pair.1,
                        w.degree,
                        ring.coords(w.vector),
                    )
                    .unwrap(),
                },
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
