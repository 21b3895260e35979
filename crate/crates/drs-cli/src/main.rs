//! `drs`: compute, verify, and construct doubly resolving sets from the
//! command line.
//!
//! Exit codes: 0 success; 1 parse or argument errors; 2 disconnected input
//! or too few vertices; 3 graph over the solver cap; 4 verification found a
//! non-resolving set; 5 a construction does not apply to the input; 6 a
//! conformance property failed. Reports go to stdout, diagnostics and timing
//! to stderr.

mod conformance;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use drs_core::constructive::{construct_diametral, construct_tree_basis, construct_unicyclic};
use drs_core::families::{classify_n_minus_1, closed_form_psi, recognize};
use drs_core::resolve::is_doubly_resolving_set;
use drs_core::solver::DEFAULT_CAP;
use drs_core::{psi_exact_capped, verify_doubly_resolving, Error, Graph, VertexSet};
use report::{
    classify_text, construct_text, emit, family_text, solve_text, verify_text, ClassifyPayload,
    ConstructPayload, FamilyEntry, FamilyPayload, GraphSummary, RunReport, VerifyPayload, SCHEMA,
};
use std::time::Instant;

#[derive(Parser)]
#[command(name = "drs", version, about = "Doubly resolving sets in connected graphs")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
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
    /// Compute the exact minimum doubly resolving set.
    Psi {
        /// Graph file (edge list or JSON), or `-` for stdin.
        input: String,
        /// Largest order the solver accepts (default: DRS_CAP or 16).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check whether a vertex set doubly resolves the graph.
    Verify {
        input: String,
        /// Comma-separated vertex indices, e.g. `0,2,5`.
        #[arg(long)]
        set: String,
    },
    /// Build a doubly resolving set without searching.
    Construct {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Recognize named families and report their closed-form psi values.
    Family { input: String },
    /// Decide whether psi equals n - 1 and name the responsible family.
    ClassifyN1 { input: String },
    /// Run randomized self-checks of the library's guarantees.
    Conformance {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Cases per property.
        #[arg(long, default_value_t = 100)]
        count: u32,
        /// Largest graph order drawn.
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Tree basis for trees, leaf-plus-cycle for unicyclic graphs,
    /// diametral-path complement otherwise.
    Auto,
    Diametral,
    Tree,
    Unicyclic,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn args(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected { .. } | Error::TooFewVertices { .. } => 2,
            Error::OverCap { .. } => 3,
            Error::NotATree { .. } | Error::NotUnicyclic { .. } | Error::BareCycle => 5,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    eprintln!("drs: finished in {:.2?}", started.elapsed());
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Psi { input, cap } => {
            let cap = resolve_cap(*cap)?;
            let g = read_graph(input)?;
            let result = psi_exact_capped(&g, cap)?;
            let dm = g.distance_matrix()?;
            let report = RunReport {
                schema: SCHEMA,
                command: "psi",
                graph: Some(GraphSummary::new(&g, &dm)),
                result,
            };
            emit(&report, json, || solve_text(&report.result));
            Ok(0)
        }
        Command::Verify { input, set } => {
            let g = read_graph(input)?;
            let dm = g.distance_matrix()?;
            let set = parse_set(set, g.n())?;
            let verdict = verify_doubly_resolving(&dm, &set)?;
            let report = RunReport {
                schema: SCHEMA,
                command: "verify",
                graph: Some(GraphSummary::new(&g, &dm)),
                result: VerifyPayload { set, verdict },
            };
            emit(&report, json, || verify_text(&report.result));
            Ok(if verdict.is_resolving() { 0 } else { 4 })
        }
        Command::Construct { input, method } => {
            let g = read_graph(input)?;
            let dm = g.distance_matrix()?;
            let (method, set, cycle_basis, cycle_len) = match method {
                Method::Auto => {
                    if g.is_tree() {
                        ("tree", construct_tree_basis(&g)?, None, None)
                    } else if g.is_unicyclic() && !g.is_cycle_graph() {
                        let built = construct_unicyclic(&g)?;
                        ("unicyclic", built.set, Some(built.cycle_basis.set), Some(built.cycle_len))
                    } else {
                        ("diametral", construct_diametral(&g, &dm)?, None, None)
                    }
                }
                Method::Diametral => ("diametral", construct_diametral(&g, &dm)?, None, None),
                Method::Tree => ("tree", construct_tree_basis(&g)?, None, None),
                Method::Unicyclic => {
                    let built = construct_unicyclic(&g)?;
                    ("unicyclic", built.set, Some(built.cycle_basis.set), Some(built.cycle_len))
                }
            };
            let verified = is_doubly_resolving_set(&dm, &set)?;
            let report = RunReport {
                schema: SCHEMA,
                command: "construct",
                graph: Some(GraphSummary::new(&g, &dm)),
                result: ConstructPayload {
                    method,
                    size: set.len(),
                    set,
                    verified,
                    cycle_basis,
                    cycle_len,
                },
            };
            emit(&report, json, || construct_text(&report.result));
            Ok(0)
        }
        Command::Family { input } => {
            let g = read_graph(input)?;
            let dm = g.distance_matrix()?;
            let families = recognize(&g)?
                .into_iter()
                .map(|family| FamilyEntry {
                    family,
                    psi: closed_form_psi(&family).ok(),
                })
                .collect();
            let report = RunReport {
                schema: SCHEMA,
                command: "family",
                graph: Some(GraphSummary::new(&g, &dm)),
                result: FamilyPayload { families },
            };
            emit(&report, json, || family_text(&report.result));
            Ok(0)
        }
        Command::ClassifyN1 { input } => {
            let g = read_graph(input)?;
            let dm = g.distance_matrix()?;
            let family = classify_n_minus_1(&g)?;
            let report = RunReport {
                schema: SCHEMA,
                command: "classify-n1",
                graph: Some(GraphSummary::new(&g, &dm)),
                result: ClassifyPayload {
                    extremal: family.is_some(),
                    family,
                },
            };
            emit(&report, json, || classify_text(&report.result));
            Ok(0)
        }
        Command::Conformance {
            seed,
            count,
            max_n,
            cap,
        } => {
            let cap = resolve_cap(*cap)?;
            if *count == 0 {
                return Err(CliError::args("--count must be at least 1"));
            }
            if *max_n < 4 || cap < 4 {
                return Err(CliError::args(
                    "conformance needs --max-n >= 4 and a cap of at least 4",
                ));
            }
            let payload = conformance::run(&conformance::Config {
                seed: *seed,
                count: *count,
                max_n: *max_n,
                cap,
            });
            let ok = payload.failed == 0;
            let report = RunReport {
                schema: SCHEMA,
                command: "conformance",
                graph: None,
                result: payload,
            };
            emit(&report, json, || conformance::conformance_text(&report.result));
            Ok(if ok { 0 } else { 6 })
        }
    }
}

/// Cap precedence: `--cap` flag, then the `DRS_CAP` environment variable,
/// then the built-in default.
fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("DRS_CAP") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::args(format!("invalid DRS_CAP value {text:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CAP),
        Err(e) => Err(CliError::args(format!("cannot read DRS_CAP: {e}"))),
    }
}

fn read_graph(input: &str) -> Result<Graph, CliError> {
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::args(format!("cannot read stdin: {e}")))?
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::args(format!("cannot read {input}: {e}")))?
    };
    Ok(Graph::parse(&text)?)
}

fn parse_set(arg: &str, n: usize) -> Result<VertexSet, CliError> {
    let members = arg
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            CliError::args(format!(
                "invalid --set {arg:?}: expected comma-separated vertex indices"
            ))
        })?;
    Ok(VertexSet::new(members, n)?)
}
