use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pdrkit_core::graph::{generate_named, graph6::serialize_graph6};
use pdrkit_core::{parse_graph6, Error, Graph, Tolerances64};

#[derive(Debug, Parser)]
#[command(name = "pdrkit", version, about = "Local spectra, predistance polynomials and pseudo-distance-regularity")]
pub struct Cli {
    #[command(flatten)]
    pub tolerances: ToleranceArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full per-vertex analysis and classification of one graph.
    Analyze(GraphInput),
    /// Global spectrum, and with --vertex the local spectrum and predistance polynomials.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Classify and audit every graph of a corpus.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph in graph6 format.
    #[arg(conflicts_with = "named", required_unless_present = "named")]
    pub graph6: Option<String>,
    /// Catalog graph, e.g. `petersen`, `cycle:5`, `complete_bipartite:2,3`.
    #[arg(long)]
    pub named: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// File with one graph6 string per line; `#` starts a comment line.
    #[arg(conflicts_with = "enumerate", required_unless_present = "enumerate")]
    pub corpus: Option<PathBuf>,
    /// Use every connected labeled graph on this many vertices (1..=7).
    #[arg(long)]
    pub enumerate: Option<usize>,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Emit one JSON line per graph instead of only the failing ones.
    #[arg(long)]
    pub jsonl: bool,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Eigenvalue grouping tolerance, scaled by max(1, λ0) [default: 1e-8]
    #[arg(long, global = true, env = "PDRKIT_EPS_GROUP", value_parser = positive)]
    pub eps_group: Option<f64>,
    /// Local multiplicities below this are treated as zero [default: 1e-8]
    #[arg(long, global = true, env = "PDRKIT_EPS_MULT", value_parser = positive)]
    pub eps_mult: Option<f64>,
    /// Tolerance of the pseudo-distance-regularity checks, scaled by max(1, λ0) [default: 1e-7]
    #[arg(long, global = true, env = "PDRKIT_EPS_PDR", value_parser = positive)]
    pub eps_pdr: Option<f64>,
    /// Tolerance of the walk identities, scaled by max(1, λ0^l) [default: 1e-6]
    #[arg(long, global = true, env = "PDRKIT_EPS_WALK", value_parser = positive)]
    pub eps_walk: Option<f64>,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

impl ToleranceArgs {
    pub fn resolve(&self) -> Tolerances64 {
        let mut tol = Tolerances64::default();
        if let Some(x) = self.eps_group {
            tol.group = x;
        }
        if let Some(x) = self.eps_mult {
            tol.mult = x;
        }
        if let Some(x) = self.eps_pdr {
            tol.pdr = x;
        }
        if let Some(x) = self.eps_walk {
            tol.walk = x;
        }
        tol
    }
}

/// A loaded input graph and how to name it in reports.
pub struct LoadedGraph {
    pub graph: Graph,
    pub input: String,
    pub named: Option<String>,
}

impl GraphInput {
    pub fn load(&self) -> Result<LoadedGraph, Error> {
        match (&self.graph6, &self.named) {
            (Some(text), _) => {
                let graph = parse_graph6(text.trim().as_bytes())?;
                Ok(LoadedGraph { input: text.trim().to_string(), graph, named: None })
            }
            (None, Some(spec)) => {
                let graph = parse_named(spec)?;
                let input = serialize_graph6(&graph).unwrap_or_else(|_| spec.clone());
                Ok(LoadedGraph { graph, input, named: Some(spec.clone()) })
            }
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

/// `family` or `family:p1,p2,..`.
pub fn parse_named(spec: &str) -> Result<Graph, Error> {
    let (family, params) = spec.split_once(':').unwrap_or((spec, ""));
    let params = params
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim().parse::<usize>().map_err(|_| Error::InvalidParams {
                family: family.to_string(),
                reason: format!("`{p}` is not a non-negative integer"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    generate_named(family, &params)
}
