mod args;
mod report;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use pdrkit_core::pdr::classify;
use pdrkit_core::predistance::build_predistance;
use pdrkit_core::spectral::{decompose, local_spectrum};
use pdrkit_core::{Error, ErrorClass, Tolerances64};
use serde::Serialize;

use args::{Cli, Command, GraphInput};
use report::{AnalysisReport, LocalReport, R12, SpectrumReport};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn exit_code(class: ErrorClass) -> u8 {
    match class {
        ErrorClass::Input => EXIT_INPUT,
        ErrorClass::Connectivity => 3,
        ErrorClass::Numerical => 4,
        ErrorClass::Internal => 5,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e.class()))
}

fn emit(value: &impl Serialize) {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, value).expect("serializable report");
    writeln!(out).ok();
}

fn analyze(input: &GraphInput, tol: &Tolerances64) -> Result<(), Error> {
    let loaded = input.load()?;
    let c = classify(&loaded.graph, tol)?;
    emit(&AnalysisReport::new(loaded.input, loaded.named, loaded.graph.edge_count(), &c, tol));
    Ok(())
}

fn spectrum(input: &GraphInput, vertex: Option<usize>, tol: &Tolerances64) -> Result<(), Error> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    if let Some(u) = vertex {
        g.check_vertex(u)?;
    }
    let dec = decompose(g, tol)?;
    let local = match vertex {
        Some(u) => {
            let ls = local_spectrum(&dec, u, tol)?;
            let sys = build_predistance(&ls, dec.lambda0(), dec.perron[u])?;
            Some(LocalReport::new(&ls, &sys))
        }
        None => None,
    };
    emit(&SpectrumReport {
        input: loaded.input,
        named: loaded.named,
        n: g.n(),
        spectrum: report::spectrum(&dec),
        perron: dec.perron.iter().copied().map(R12).collect(),
        local,
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.tolerances.resolve();
    match cli.command {
        Command::Analyze(input) => match analyze(&input, &tol) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        },
        Command::Spectrum { input, vertex } => match spectrum(&input, vertex, &tol) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        },
        Command::Verify(args) => {
            let corpus = match &args.corpus {
                Some(path) => match verify::read_corpus(path) {
                    Ok(lines) => Some(lines),
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", path.display());
                        return ExitCode::from(EXIT_INPUT);
                    }
                },
                None => None,
            };
            let stdout = io::stdout();
            let mut out = stdout.lock();
            match verify::run(corpus, args.enumerate, args.jobs, args.jsonl, &tol, &mut out) {
                Ok(outcome) if outcome.summary.violations > 0 => {
                    eprintln!("{} graph(s) violate invariants", outcome.summary.graphs_with_violations);
                    ExitCode::from(EXIT_VIOLATION)
                }
                Ok(outcome) => match outcome.first_error {
                    Some(class) => {
                        eprintln!("{} graph(s) could not be processed", outcome.summary.errors);
                        ExitCode::from(exit_code(class))
                    }
                    None => ExitCode::SUCCESS,
                },
                Err(e) => fail(&e),
            }
        }
    }
}
