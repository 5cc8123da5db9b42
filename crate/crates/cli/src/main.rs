mod args;
mod report;
mod run;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use report::ReportDoc;

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("WORKBENCH_THREADS") else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| format!("WORKBENCH_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("WORKBENCH_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let outcome = match run::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let config = serde_json::to_value(&cli).expect("config serializes");
    let doc = ReportDoc::new(outcome.command, config, outcome.result, outcome.checks, cli.global.timings);
    let text = serde_json::to_string_pretty(&doc).expect("report serializes") + "\n";
    match &cli.global.json {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            println!("{}: {} checks, {} failed", doc.status, doc.summary.total, doc.summary.failed);
        }
        None => print!("{text}"),
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
