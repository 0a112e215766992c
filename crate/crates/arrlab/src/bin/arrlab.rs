//! Thin command-line front end over the `arrlab` library.
//!
//! Exit codes: 0 = success / claim verified / pair distinguishable,
//! 1 = violation found / pair indistinguishable, 2 = usage or input error.

use arrlab::arrangement::{ArrangementGraph, GraphParams};
use arrlab::diagnosis;
use arrlab::export;
use arrlab::fault::FaultSet;
use arrlab::verify::{Claim, RunConfig, VerifyError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "arrlab", version, about = "Arrangement-graph fault-tolerance lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an arrangement graph and write it out.
    Gen(GenArgs),
    /// Run a named verification campaign.
    Verify(VerifyArgs),
    /// Decide distinguishability of two fault sets under the MM* scheme.
    Diagnose(DiagnoseArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Edgelist,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim name, e.g. "kappa", "thm-3.9", "lemma-4.1-equiv".
    claim: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Override the maximum fault-set size for sampled claims.
    #[arg(long)]
    max_fault: Option<usize>,
    /// Enable long-running exhaustive sweeps.
    #[arg(long)]
    long: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct DiagnoseArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// File with one fault vertex label per line, e.g. "1 3 2".
    f1: PathBuf,
    f2: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Verify(args) => verify(args),
        Command::Diagnose(args) => diagnose(args),
    }
}

fn build_graph(n: usize, k: usize) -> Result<ArrangementGraph, String> {
    let params = GraphParams::new(n, k).map_err(|e| e.to_string())?;
    ArrangementGraph::build(params).map_err(|e| e.to_string())
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> Result<ExitCode, String> {
    let g = build_graph(args.n, args.k)?;
    let text = match args.format {
        Format::Dot => export::to_dot(&g),
        Format::Json => {
            let mut s = export::to_json(&g);
            s.push('\n');
            s
        }
        Format::Edgelist => export::to_edge_list(&g),
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let claim: Claim = args.claim.parse().map_err(|e: VerifyError| e.to_string())?;
    let cfg = RunConfig {
        n: args.n,
        k: args.k,
        seed: args.seed,
        trials: args.trials,
        max_fault: args.max_fault,
        long: args.long,
    };
    let report = arrlab::verify::run_claim(claim, &cfg).map_err(|e| e.to_string())?;
    let text = match args.format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        ReportFormat::Text => format!(
            "{}: {} ({} mode, {} examined, {} violations)\n",
            report.claim,
            if report.ok() { "verified" } else { "VIOLATED" },
            report.mode,
            report.examined,
            report.violations.len(),
        ),
    };
    emit(&args.out, &text)?;
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn read_fault_file(g: &ArrangementGraph, path: &PathBuf) -> Result<FaultSet, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut members = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        members.push(
            g.vertex_of_label(line)
                .map_err(|e| format!("{}: bad vertex {line:?}: {e}", path.display()))?,
        );
    }
    FaultSet::new(g.vertex_count(), members).map_err(|e| e.to_string())
}

fn diagnose(args: DiagnoseArgs) -> Result<ExitCode, String> {
    let g = build_graph(args.n, args.k)?;
    let f1 = read_fault_file(&g, &args.f1)?;
    let f2 = read_fault_file(&g, &args.f2)?;
    let result = diagnosis::distinguishable_sd(g.topology(), &f1, &f2).map_err(|e| e.to_string())?;
    let cross = diagnosis::distinguishable_forced(g.topology(), &f1, &f2)
        .map_err(|e| e.to_string())?;
    if result.distinguishable != cross.distinguishable {
        return Err("internal checker disagreement".into());
    }
    let mut text = serde_json::to_string_pretty(&result.to_json(&g, &f1, &f2))
        .map_err(|e| e.to_string())?;
    text.push('\n');
    emit(&args.out, &text)?;
    Ok(if result.distinguishable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
