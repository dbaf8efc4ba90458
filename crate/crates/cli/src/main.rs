use std::path::PathBuf;
use std::process::ExitCode;

use arbopack::instance::{InstanceDocument, PackingDocument, PieoDocument};
use arbopack::render;
use arbopack::{exit, exit_code_for};
use arbopack_core::conditions::check_feasible;
use arbopack_core::graph::DEFAULT_MAX_N;
use arbopack_core::pack::{pack_mixed, PackOptions, PackOutcome};
use arbopack_core::pieo::laminarize_type1;
use arbopack_core::verify::{oracle_pack_exists, verify_packing};
use clap::{Args, Parser, Subcommand};

/// Decide and construct packings of k edge- and arc-disjoint spanning mixed
/// arborescences with per-vertex root-count bounds.
#[derive(Parser)]
#[command(name = "arbopack", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Instance JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Cap for exhaustive scans; overrides ARBOPACK_MAX_N (default 10).
    #[arg(long)]
    max_n: Option<usize>,
    /// Emit the machine-readable JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check feasibility; exit 0 feasible, 1 infeasible with a witness.
    Check(CommonArgs),
    /// Build a packing; exit 0 with packing JSON, 1 with a report.
    Solve {
        #[command(flatten)]
        common: CommonArgs,
        /// Attach the edge-orientation step log to the output.
        #[arg(long)]
        trace: bool,
        /// Force per-step invariant re-checks on (default: automatic by size).
        #[arg(long)]
        paranoid: bool,
    },
    /// Verify a packing file against an instance; exit 0 when valid.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Packing JSON file to verify.
        #[arg(long)]
        packing: PathBuf,
    },
    /// Brute-force packing existence on small instances; exit 0 when one exists.
    Oracle(CommonArgs),
    /// Uncross two disjoint families and print the full trace.
    PieoTrace(CommonArgs),
}

fn resolve_max_n(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("ARBOPACK_MAX_N") {
        Ok(value) => value
            .parse::<usize>()
            .map_err(|_| format!("ARBOPACK_MAX_N must be an integer, got `{value}`")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON rendering cannot fail")
}

fn fail(code: i32, message: String) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code as u8)
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Check(common) => {
            let max_n = match resolve_max_n(common.max_n) {
                Ok(n) => n,
                Err(e) => return fail(exit::USAGE, e),
            };
            let doc = match InstanceDocument::load(&common.input) {
                Ok(doc) => doc,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let (graph, bounds) = match doc.build() {
                Ok(pair) => pair,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            match check_feasible(&graph, &bounds, max_n) {
                Ok(report) => {
                    if common.json {
                        println!("{}", pretty(&render::feasibility_json(&report, &graph)));
                    } else {
                        print!("{}", render::feasibility_human(&report, &graph));
                    }
                    ExitCode::from(u8::from(!report.feasible()))
                }
                Err(e) => fail(exit_code_for(&e), e.to_string()),
            }
        }
        Command::Solve {
            common,
            trace,
            paranoid,
        } => {
            let max_n = match resolve_max_n(common.max_n) {
                Ok(n) => n,
                Err(e) => return fail(exit::USAGE, e),
            };
            let doc = match InstanceDocument::load(&common.input) {
                Ok(doc) => doc,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let (graph, bounds) = match doc.build() {
                Ok(pair) => pair,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let opts = PackOptions {
                max_n,
                paranoid: paranoid.then_some(true),
            };
            match pack_mixed(&graph, &bounds, opts) {
                Ok(PackOutcome::Packed(solution)) => {
                    let mut output = render::packing_json(&solution.packing, &graph);
                    if trace {
                        output.as_object_mut().expect("object").insert(
                            "trace".to_string(),
                            render::orientation_trace_json(&solution.orientation, &graph),
                        );
                    }
                    println!("{}", pretty(&output));
                    ExitCode::SUCCESS
                }
                Ok(PackOutcome::Infeasible(report)) => {
                    if common.json {
                        println!("{}", pretty(&render::feasibility_json(&report, &graph)));
                    } else {
                        print!("{}", render::feasibility_human(&report, &graph));
                    }
                    ExitCode::from(1)
                }
                Err(e) => fail(exit_code_for(&e), e.to_string()),
            }
        }
        Command::Verify { common, packing } => {
            let doc = match InstanceDocument::load(&common.input) {
                Ok(doc) => doc,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let (graph, bounds) = match doc.build() {
                Ok(pair) => pair,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let packing_doc = match PackingDocument::load(&packing) {
                Ok(doc) => doc,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let packing = match packing_doc.build(&graph) {
                Ok(p) => p,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let report = verify_packing(&graph, &bounds, &packing);
            if common.json {
                println!("{}", pretty(&render::verification_json(&report)));
            } else {
                print!("{}", render::verification_human(&report));
            }
            ExitCode::from(u8::from(!report.ok()))
        }
        Command::Oracle(common) => {
            let doc = match InstanceDocument::load(&common.input) {
                Ok(doc) => doc,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let (graph, bounds) = match doc.build() {
                Ok(pair) => pair,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            match oracle_pack_exists(&graph, &bounds) {
                Ok(witness) => {
                    let exists = witness.is_some();
                    let output = serde_json::json!({
                        "exists": exists,
                        "witness": witness.map(|p| render::packing_json(&p, &graph)),
                    });
                    println!("{}", pretty(&output));
                    ExitCode::from(u8::from(!exists))
                }
                Err(e) => fail(exit_code_for(&e), e.to_string()),
            }
        }
        Command::PieoTrace(common) => {
            let doc = match PieoDocument::load(&common.input) {
                Ok(doc) => doc,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            let (ground, f1, f2) = match doc.build() {
                Ok(parts) => parts,
                Err(e) => return fail(exit::USAGE, e.0),
            };
            match laminarize_type1(&f1, &f2) {
                Ok(trace) => {
                    println!("{}", pretty(&render::pieo_trace_json(&trace, &ground)));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(exit_code_for(&e), e.to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
