//! `verify-girth5`: no positive double circuits in `B(G)` when the girth of
//! `G` is at least five.

use std::collections::BTreeMap;
use std::time::Instant;

use gspkit::doublecirc::enumerate_double_circuits;
use gspkit::{DoubleCircuitReport, Error, Matroid, Result};
use serde::Serialize;

use crate::input::GraphInput;
use crate::report::{set_label, ReportEnvelope};
use crate::{Global, OutputFormat};

/// Graphs with more edges need `--slow`.
const FAST_EDGE_LIMIT: usize = 24;

#[derive(clap::Args, Debug, Serialize)]
pub struct Args {
    #[command(flatten)]
    pub input: GraphInput,

    /// Positive double circuits to include in a violation report.
    #[arg(long, default_value_t = 10)]
    pub max_witnesses: usize,
}

#[derive(Debug, Serialize)]
pub struct GirthResult {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub girth: Option<usize>,
    pub applicable: bool,
    pub double_circuits: Option<usize>,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub max_degree: Option<usize>,
    pub positive_count: Option<usize>,
    pub positive_witnesses: Vec<DoubleCircuitReport>,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Verdicts {
    pub no_positive_double_circuits: Option<bool>,
    pub degrees_at_most_six: Option<bool>,
}

pub fn run(global: &Global, args: &Args) -> Result<u8> {
    let started = Instant::now();
    let g = args.input.load()?;
    if g.edge_count() > FAST_EDGE_LIMIT && !global.slow {
        return Err(Error::ResourceCap {
            what: "edges without --slow",
            limit: FAST_EDGE_LIMIT,
            actual: g.edge_count(),
        });
    }
    let girth = g.girth();
    let applicable = girth.is_none_or(|k| k >= 5);
    let mut result = GirthResult {
        graph: args.input.label(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        girth,
        applicable,
        double_circuits: None,
        degree_histogram: BTreeMap::new(),
        max_degree: None,
        positive_count: None,
        positive_witnesses: Vec::new(),
        verdict: "skipped",
    };
    let mut verdicts = Verdicts {
        no_positive_double_circuits: None,
        degrees_at_most_six: None,
    };
    if applicable {
        let m = Matroid::bicircular(&g)?;
        let dcs = enumerate_double_circuits(&m)?;
        for d in &dcs {
            *result.degree_histogram.entry(d.degree).or_default() += 1;
        }
        let positive: Vec<&DoubleCircuitReport> = dcs.iter().filter(|d| d.positive).collect();
        result.double_circuits = Some(dcs.len());
        result.max_degree = dcs.iter().map(|d| d.degree).max();
        result.positive_count = Some(positive.len());
        result.positive_witnesses = positive.into_iter().take(args.max_witnesses).cloned().collect();
        let ok_positive = result.positive_count == Some(0);
        let ok_degree = result.max_degree.is_none_or(|d| d <= 6);
        verdicts.no_positive_double_circuits = Some(ok_positive);
        verdicts.degrees_at_most_six = Some(ok_degree);
        result.verdict = if ok_positive && ok_degree {
            "verified"
        } else {
            "violated"
        };
    }
    let code = if result.verdict == "violated" { 1 } else { 0 };
    let env = ReportEnvelope::new("verify-girth5", global, args, result, verdicts, started);
    match global.format {
        OutputFormat::Json => println!("{}", env.to_json()),
        OutputFormat::Text => print_text(&env.result, env.timing_ms),
    }
    Ok(code)
}

fn print_text(r: &GirthResult, timing: Option<u128>) {
    let girth = r.girth.map_or("infinite".to_string(), |g| g.to_string());
    println!(
        "graph {}: {} vertices, {} edges, girth {}",
        r.graph, r.vertices, r.edges, girth
    );
    if !r.applicable {
        println!("girth {girth} < 5: theorem not applicable");
        println!("verdict: skipped");
        return;
    }
    println!("double circuits: {}", r.double_circuits.unwrap_or(0));
    for (deg, count) in &r.degree_histogram {
        println!("  degree {deg}: {count}");
    }
    println!("positive double circuits: {}", r.positive_count.unwrap_or(0));
    for w in &r.positive_witnesses {
        let classes: Vec<String> = w.classes.iter().map(|&c| set_label(c)).collect();
        println!("  D = {} classes {}", set_label(w.set), classes.join(" "));
    }
    if let Some(ms) = timing {
        println!("time: {ms} ms");
    }
    println!("verdict: {}", r.verdict);
}
