//! Corpus verification: classify and audit every graph, in input order.

use std::io::{self, Write};
use std::path::Path;

use pdrkit_core::audit::{audit_graph, Violation};
use pdrkit_core::graph::{enumerate_connected, graph6::serialize_graph6};
use pdrkit_core::pdr::Verdict;
use pdrkit_core::{parse_graph6, Error, ErrorClass, Graph, Tolerances64};
use rayon::prelude::*;
use serde::Serialize;

const CHUNK: usize = 2048;

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub all_pdr: usize,
    pub distance_regular: usize,
    pub distance_biregular: usize,
    pub not_pdr: usize,
    pub violations: usize,
    pub graphs_with_violations: usize,
    pub errors: usize,
}

#[derive(Debug, Serialize)]
struct ViolationRecord {
    check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<usize>,
    detail: String,
}

impl From<Violation> for ViolationRecord {
    fn from(v: Violation) -> Self {
        ViolationRecord { check: v.check, vertex: v.vertex, detail: v.detail }
    }
}

#[derive(Debug, Serialize)]
struct ErrorRecord {
    class: &'static str,
    message: String,
}

#[derive(Debug, Serialize)]
struct GraphRecord {
    index: usize,
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
    violations: Vec<ViolationRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorRecord>,
    #[serde(skip)]
    error_class: Option<ErrorClass>,
}

pub fn class_name(class: ErrorClass) -> &'static str {
    match class {
        ErrorClass::Input => "input",
        ErrorClass::Connectivity => "connectivity",
        ErrorClass::Numerical => "numerical",
        ErrorClass::Internal => "internal",
    }
}

enum Item {
    Text(String),
    Graph(Graph),
}

fn process(index: usize, item: Item, tol: &Tolerances64) -> GraphRecord {
    let (input, parsed) = match item {
        Item::Text(text) => {
            let parsed = parse_graph6(text.as_bytes());
            (text, parsed)
        }
        Item::Graph(g) => (serialize_graph6(&g).unwrap_or_default(), Ok(g)),
    };
    let outcome = parsed.and_then(|g| audit_graph(&g, tol));
    match outcome {
        Ok(audit) => GraphRecord {
            index,
            input,
            verdict: audit.classification.as_ref().map(|c| c.verdict.as_str()),
            violations: audit.violations.into_iter().map(ViolationRecord::from).collect(),
            error: None,
            error_class: None,
        },
        Err(e) => GraphRecord {
            index,
            input,
            verdict: None,
            violations: Vec::new(),
            error: Some(ErrorRecord { class: class_name(e.class()), message: e.to_string() }),
            error_class: Some(e.class()),
        },
    }
}

pub struct Outcome {
    pub summary: Summary,
    pub first_error: Option<ErrorClass>,
}

/// Reads a corpus file: one graph6 string per line, blank lines and lines
/// starting with `#` skipped.
pub fn read_corpus(path: &Path) -> io::Result<Vec<String>> {
    let text = std::fs::read_to_string(path)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect())
}

pub fn run(
    corpus: Option<Vec<String>>,
    enumerate: Option<usize>,
    jobs: Option<usize>,
    jsonl: bool,
    tol: &Tolerances64,
    out: &mut impl Write,
) -> Result<Outcome, Error> {
    let items: Box<dyn Iterator<Item = Item>> = match (corpus, enumerate) {
        (Some(lines), _) => Box::new(lines.into_iter().map(Item::Text)),
        (None, Some(n)) => Box::new(enumerate_connected(n)?.map(Item::Graph)),
        (None, None) => unreachable!("clap requires a source"),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().expect("thread pool");

    let mut summary = Summary::default();
    let mut first_error = None;
    let mut items = items.enumerate().peekable();
    while items.peek().is_some() {
        let chunk: Vec<(usize, Item)> = items.by_ref().take(CHUNK).collect();
        let records: Vec<GraphRecord> =
            pool.install(|| chunk.into_par_iter().map(|(i, item)| process(i, item, tol)).collect());
        for record in records {
            summary.total += 1;
            match record.verdict {
                Some(v) if v == Verdict::NotPdr.as_str() => summary.not_pdr += 1,
                Some(v) => {
                    summary.all_pdr += 1;
                    if v == Verdict::DistanceRegular.as_str() {
                        summary.distance_regular += 1;
                    } else {
                        summary.distance_biregular += 1;
                    }
                }
                None => {}
            }
            if let Some(class) = record.error_class {
                summary.errors += 1;
                first_error.get_or_insert(class);
            }
            if !record.violations.is_empty() {
                summary.violations += record.violations.len();
                summary.graphs_with_violations += 1;
            }
            if jsonl || !record.violations.is_empty() || record.error.is_some() {
                serde_json::to_writer(&mut *out, &record).expect("serializable record");
                writeln!(out).ok();
            }
        }
    }
    #[derive(Serialize)]
    struct Wrapped<'a> {
        summary: &'a Summary,
    }
    serde_json::to_writer(&mut *out, &Wrapped { summary: &summary }).expect("serializable summary");
    writeln!(out).ok();
    Ok(Outcome { summary, first_error })
}
