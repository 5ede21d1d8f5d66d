//! `census`: streaming per-graph statistics of bicircular matroids.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::time::Instant;

use gspkit::bicircular::{make_bicircular, symdiff2_circuit_pair};
use gspkit::doublecirc::enumerate_double_circuits;
use gspkit::graph::{parse_edge_list, parse_graph6};
use gspkit::matroid::clone_reduction_order;
use gspkit::{Error, GraphFormat, MultiGraph, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Global, OutputFormat};

/// Records with more edges need `--slow`.
const FAST_EDGE_LIMIT: usize = 24;

/// Separator between records of an edge-list stream.
const RECORD_SEPARATOR: &str = "---";

pub const CSV_COLUMNS: [&str; 9] = [
    "record",
    "n",
    "m",
    "girth",
    "dc_count",
    "dc_degree_max",
    "positive_count",
    "symdiff2_found",
    "runtime_ms",
];

#[derive(clap::Args, Debug, Serialize)]
pub struct Args {
    /// Input stream (`-` for stdin): graph6 lines, or edge lists separated
    /// by `---` lines.
    #[arg(default_value = "-")]
    pub path: String,

    #[arg(long, default_value = "graph6")]
    pub input_format: String,

    /// File recording the next record to process, for resuming.
    #[arg(long)]
    pub checkpoint: Option<String>,

    /// Records between checkpoint writes.
    #[arg(long, default_value_t = 100)]
    pub checkpoint_every: usize,

    /// Skip records already covered by the checkpoint file.
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,

    /// Also decide clone reducibility of B(G) (by a clone ordering).
    #[arg(long)]
    pub clones: bool,

    /// Records processed in parallel at a time.
    #[arg(long, default_value_t = 64)]
    pub batch: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub record: usize,
    pub n: usize,
    pub m: usize,
    pub girth: Option<usize>,
    pub dc_count: usize,
    pub dc_degree_max: Option<usize>,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub positive_count: usize,
    /// `construction` or `fallback`; `None` when the minimum degree is
    /// below three.
    pub symdiff2_method: Option<&'static str>,
    pub symdiff2_found: Option<bool>,
    pub clone_reducible: Option<bool>,
    pub runtime_ms: u128,
}

impl CensusRow {
    fn violates(&self) -> bool {
        self.dc_degree_max.is_some_and(|d| d > 6) || self.symdiff2_found == Some(false)
    }

    fn csv_record(&self) -> [String; 9] {
        let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
        [
            self.record.to_string(),
            self.n.to_string(),
            self.m.to_string(),
            self.girth.map_or("inf".into(), |g| g.to_string()),
            self.dc_count.to_string(),
            opt(self.dc_degree_max),
            self.positive_count.to_string(),
            self.symdiff2_found.map_or("na".into(), |b| b.to_string()),
            self.runtime_ms.to_string(),
        ]
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    next_record: usize,
}

#[derive(Debug, Default, Serialize)]
struct Summary {
    records: usize,
    parse_errors: usize,
    cap_errors: usize,
    other_errors: usize,
    violations: usize,
    max_dc_degree: Option<usize>,
}

fn analyse(index: usize, g: &MultiGraph, global: &Global, clones: bool) -> Result<CensusRow> {
    let started = Instant::now();
    if g.edge_count() > FAST_EDGE_LIMIT && !global.slow {
        return Err(Error::ResourceCap {
            what: "edges without --slow",
            limit: FAST_EDGE_LIMIT,
            actual: g.edge_count(),
        });
    }
    let b = make_bicircular(g)?;
    let dcs = enumerate_double_circuits(&b.matroid)?;
    let mut degree_histogram = BTreeMap::new();
    for d in &dcs {
        *degree_histogram.entry(d.degree).or_default() += 1;
    }
    let (symdiff2_method, symdiff2_found) = match symdiff2_circuit_pair(&b) {
        Ok(p) => (
            Some(match p.method {
                gspkit::bicircular::PairMethod::Construction => "construction",
                gspkit::bicircular::PairMethod::Fallback => "fallback",
            }),
            Some(true),
        ),
        Err(Error::Precondition(_)) => (None, None),
        Err(Error::SearchExhausted(_)) => (None, Some(false)),
        Err(e) => return Err(e),
    };
    let clone_reducible = if clones && g.edge_count() <= global.caps.clone_order {
        Some(clone_reduction_order(&b.matroid)?.is_some())
    } else {
        None
    };
    Ok(CensusRow {
        record: index,
        n: g.vertex_count(),
        m: g.edge_count(),
        girth: g.girth(),
        dc_count: dcs.len(),
        dc_degree_max: dcs.iter().map(|d| d.degree).max(),
        degree_histogram,
        positive_count: dcs.iter().filter(|d| d.positive).count(),
        symdiff2_method,
        symdiff2_found,
        clone_reducible,
        runtime_ms: if global.timing {
            started.elapsed().as_millis()
        } else {
            0
        },
    })
}

/// Splits the input into raw records, numbered from 1.
fn records(reader: Box<dyn BufRead>, format: GraphFormat) -> impl Iterator<Item = (usize, std::io::Result<String>)> {
    let mut lines = reader.lines();
    let mut index = 0;
    std::iter::from_fn(move || match format {
        GraphFormat::Graph6 => loop {
            match lines.next()? {
                Ok(l) if l.trim().is_empty() => continue,
                other => {
                    index += 1;
                    return Some((index, other));
                }
            }
        },
        GraphFormat::EdgeList => {
            let mut buf = String::new();
            let mut any = false;
            for line in lines.by_ref() {
                match line {
                    Err(e) => {
                        index += 1;
                        return Some((index, Err(e)));
                    }
                    Ok(l) if l.trim() == RECORD_SEPARATOR => {
                        if any {
                            break;
                        }
                    }
                    Ok(l) => {
                        any |= !l.split('#').next().unwrap_or("").trim().is_empty();
                        buf.push_str(&l);
                        buf.push('\n');
                    }
                }
            }
            if !any {
                return None;
            }
            index += 1;
            Some((index, Ok(buf)))
        }
    })
}

fn parse_record(format: GraphFormat, raw: &str) -> Result<MultiGraph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(raw.trim()),
        GraphFormat::EdgeList => parse_edge_list(raw),
    }
}

fn write_checkpoint(path: &str, next_record: usize) -> Result<()> {
    let body = serde_json::to_string(&Checkpoint { next_record }).expect("serializes");
    std::fs::write(path, body).map_err(|e| Error::InvalidInput(format!("writing checkpoint {path}: {e}")))
}

fn read_checkpoint(path: &str) -> Result<usize> {
    match std::fs::read_to_string(path) {
        Ok(s) => serde_json::from_str::<Checkpoint>(&s)
            .map(|c| c.next_record)
            .map_err(|e| Error::Parse {
                location: path.to_string(),
                message: e.to_string(),
            }),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(1),
        Err(e) => Err(Error::InvalidInput(format!("reading checkpoint {path}: {e}"))),
    }
}

enum Sink {
    Csv(Box<csv::Writer<std::io::StdoutLock<'static>>>),
    Json(std::io::StdoutLock<'static>),
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("writing output: {e}"))
}

pub fn run(global: &Global, args: &Args) -> Result<u8> {
    let format: GraphFormat = args.input_format.parse()?;
    let reader: Box<dyn BufRead> = if args.path == "-" {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        let f =
            std::fs::File::open(&args.path).map_err(|e| Error::InvalidInput(format!("opening {}: {e}", args.path)))?;
        Box::new(BufReader::new(f))
    };
    let start_at = match (&args.checkpoint, args.resume) {
        (Some(p), true) => read_checkpoint(p)?,
        _ => 1,
    };
    let mut sink = match global.format {
        OutputFormat::Text => Sink::Csv(Box::new(csv::Writer::from_writer(std::io::stdout().lock()))),
        OutputFormat::Json => Sink::Json(std::io::stdout().lock()),
    };
    match &mut sink {
        Sink::Csv(w) => {
            if start_at == 1 {
                w.write_record(CSV_COLUMNS).map_err(io_error)?;
            }
        }
        Sink::Json(out) => {
            let header = serde_json::json!({
                "tool": "gspkit",
                "version": env!("CARGO_PKG_VERSION"),
                "command": "census",
                "global": global,
                "config": args,
            });
            writeln!(out, "{header}").map_err(io_error)?;
        }
    }

    let mut summary = Summary::default();
    let mut stream = records(reader, format).filter(|(i, _)| *i >= start_at).peekable();
    let mut since_checkpoint = 0;
    while stream.peek().is_some() {
        let batch: Vec<(usize, std::io::Result<String>)> = stream.by_ref().take(args.batch.max(1)).collect();
        let last = batch.last().map(|(i, _)| *i).unwrap_or(0);
        let results: Vec<(usize, Result<CensusRow>, bool)> = batch
            .into_par_iter()
            .map(|(i, raw)| {
                let raw = match raw {
                    Ok(r) => r,
                    Err(e) => return (i, Err(Error::InvalidInput(format!("reading input: {e}"))), true),
                };
                match parse_record(format, &raw) {
                    Ok(g) => (i, analyse(i, &g, global, args.clones), false),
                    Err(e) => (i, Err(e), true),
                }
            })
            .collect();
        for (i, r, parse_failure) in results {
            match r {
                Ok(row) => {
                    summary.records += 1;
                    if row.violates() {
                        summary.violations += 1;
                    }
                    summary.max_dc_degree = summary.max_dc_degree.max(row.dc_degree_max);
                    match &mut sink {
                        Sink::Csv(w) => w.write_record(row.csv_record()).map_err(io_error)?,
                        Sink::Json(out) => {
                            let line = serde_json::to_string(&row).expect("rows serialize");
                            writeln!(out, "{line}").map_err(io_error)?;
                        }
                    }
                }
                Err(e) => {
                    match e {
                        _ if parse_failure => summary.parse_errors += 1,
                        Error::ResourceCap { .. } => summary.cap_errors += 1,
                        _ => summary.other_errors += 1,
                    }
                    eprintln!("record {i}: {e}");
                }
            }
        }
        match &mut sink {
            Sink::Csv(w) => w.flush().map_err(io_error)?,
            Sink::Json(out) => out.flush().map_err(io_error)?,
        }
        since_checkpoint += args.batch.max(1);
        if let Some(p) = &args.checkpoint {
            if since_checkpoint >= args.checkpoint_every || stream.peek().is_none() {
                write_checkpoint(p, last + 1)?;
                since_checkpoint = 0;
            }
        }
    }
    if let Sink::Json(out) = &mut sink {
        let line = serde_json::json!({ "summary": summary });
        writeln!(out, "{line}").map_err(io_error)?;
    }
    Ok(if summary.violations > 0 {
        1
    } else if summary.cap_errors > 0 {
        3
    } else if summary.other_errors > 0 {
        2
    } else {
        0
    })
}
