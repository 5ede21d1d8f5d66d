//! `certify`: realize an orientation and certify it GSP or coGSP.

use std::time::Instant;

use clap::ValueEnum;
use gspkit::oriented::{
    certify_cogsp, certify_gsp, orient_from_realization, realize_bicircular, realize_graphic, realize_lattice_path,
    realize_uniform, reorientation_masks, CertifyOptions,
};
use gspkit::{Error, GspCertificate, LatticePathBounds, OrientedMatroid, RationalMatrix, Result};
use serde::Serialize;

use crate::input::{read_source, GraphInput};
use crate::report::{set_label, ReportEnvelope};
use crate::{Global, OutputFormat};

/// Largest ground set for an exhaustive reorientation sweep.
const SWEEP_ALL_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Gsp,
    Cogsp,
}

#[derive(clap::Args, Debug, Serialize)]
pub struct Args {
    #[command(flatten)]
    pub input: GraphInput,

    /// Use the bicircular matroid of the graph (the default for graphs).
    #[arg(long)]
    pub bicircular: bool,

    /// Use the graphic matroid of the graph, oriented by its incidence matrix.
    #[arg(long, conflicts_with = "bicircular")]
    pub graphic: bool,

    /// A lattice path matroid given by its bounds, e.g. `NNEE,EENN`.
    #[arg(long)]
    pub lattice_path: Option<String>,

    /// A uniform matroid `R,N`.
    #[arg(long)]
    pub uniform: Option<String>,

    /// A JSON file holding the rows of an integer matrix; its columns are
    /// the elements.
    #[arg(long)]
    pub matrix: Option<String>,

    #[arg(long, value_enum)]
    pub mode: Mode,

    /// Also certify reorientations: `all` (up to 12 elements) or a number of
    /// seeded random ones.
    #[arg(long)]
    pub sweep: Option<String>,

    /// Only survey minors removing at most this many elements.
    #[arg(long)]
    pub max_removed: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct OrientationResult {
    pub reorientation: u64,
    pub certificate: GspCertificate,
}

#[derive(Debug, Serialize)]
pub struct CertifyResult {
    pub source: String,
    pub elements: usize,
    pub rank: usize,
    pub mode: Mode,
    /// The published statement this run tests, if any.
    pub claim: Option<&'static str>,
    pub orientations: Vec<OrientationResult>,
}

#[derive(Debug, Serialize)]
pub struct Verdicts {
    pub all_certified: bool,
    pub claim_holds: Option<bool>,
}

enum Family {
    Bicircular,
    LatticePath,
    Uniform,
    Other,
}

fn parse_pair(s: &str, what: &str) -> Result<(usize, usize)> {
    let err = || Error::Parse {
        location: what.to_string(),
        message: format!("expected two integers `R,N`, got `{s}`"),
    };
    let (a, b) = s.split_once(',').ok_or_else(err)?;
    Ok((
        a.trim().parse().map_err(|_| err())?,
        b.trim().parse().map_err(|_| err())?,
    ))
}

fn build(args: &Args, seed: u64) -> Result<(String, Family, OrientedMatroid)> {
    let sources = [
        args.input.is_given(),
        args.lattice_path.is_some(),
        args.uniform.is_some(),
        args.matrix.is_some(),
    ];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::InvalidInput(
            "give exactly one of a graph, --lattice-path, --uniform, --matrix".into(),
        ));
    }
    if args.input.is_given() {
        let g = args.input.load()?;
        return if args.graphic {
            Ok((
                format!("M({})", args.input.label()),
                Family::Other,
                realize_graphic(&g)?,
            ))
        } else {
            Ok((
                format!("B({})", args.input.label()),
                Family::Bicircular,
                realize_bicircular(&g, seed)?,
            ))
        };
    }
    if let Some(s) = &args.lattice_path {
        let b: LatticePathBounds = s.parse()?;
        return Ok((
            format!("LPM({b})"),
            Family::LatticePath,
            realize_lattice_path(&b, seed)?,
        ));
    }
    if let Some(s) = &args.uniform {
        let (r, n) = parse_pair(s, "--uniform")?;
        if r > n {
            return Err(Error::InvalidInput(format!("rank {r} exceeds size {n}")));
        }
        return Ok((format!("U({r},{n})"), Family::Uniform, realize_uniform(r, n, seed)?));
    }
    let path = args.matrix.as_deref().unwrap_or("-");
    let rows: Vec<Vec<i64>> = serde_json::from_str(&read_source(path)?).map_err(|e| Error::Parse {
        location: format!("{path}, line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let a = RationalMatrix::from_rows(&rows)?;
    Ok((
        format!("matrix({path})"),
        Family::Other,
        orient_from_realization(&a, None)?,
    ))
}

fn claim(family: &Family, mode: Mode) -> Option<&'static str> {
    match (family, mode) {
        (Family::Bicircular, Mode::Cogsp) => Some("every oriented bicircular matroid is coGSP"),
        (Family::LatticePath, Mode::Gsp) => Some("every orientation of a lattice path matroid is GSP"),
        (Family::LatticePath, Mode::Cogsp) => Some("every orientation of a lattice path matroid is coGSP"),
        (Family::Uniform, Mode::Gsp) => Some("every orientation of a clone reducible matroid is GSP"),
        (Family::Uniform, Mode::Cogsp) => Some("every orientation of a clone reducible matroid is coGSP"),
        _ => None,
    }
}

pub fn run(global: &Global, args: &Args) -> Result<u8> {
    let started = Instant::now();
    let (source, family, o) = build(args, global.seed)?;
    let n = o.size();
    let masks = match args.sweep.as_deref() {
        None => vec![0],
        Some("all") => {
            if n > SWEEP_ALL_LIMIT {
                return Err(Error::ResourceCap {
                    what: "exhaustive reorientation sweep ground size",
                    limit: SWEEP_ALL_LIMIT,
                    actual: n,
                });
            }
            reorientation_masks(n, SWEEP_ALL_LIMIT, 0, global.seed)
        }
        Some(k) => {
            let k: usize = k.parse().map_err(|_| Error::Parse {
                location: "--sweep".into(),
                message: format!("expected `all` or a count, got `{k}`"),
            })?;
            reorientation_masks(n, 0, k, global.seed)
        }
    };
    let options = CertifyOptions {
        max_removed: args.max_removed,
    };
    let mut orientations = Vec::with_capacity(masks.len());
    for &mask in &masks {
        let r = o.reorient(mask);
        let certificate = match args.mode {
            Mode::Gsp => certify_gsp(&r, options)?,
            Mode::Cogsp => certify_cogsp(&r, options)?,
        };
        orientations.push(OrientationResult {
            reorientation: mask,
            certificate,
        });
    }
    let all_certified = orientations.iter().all(|x| x.certificate.verdict);
    let claim = claim(&family, args.mode);
    let verdicts = Verdicts {
        all_certified,
        claim_holds: claim.map(|_| all_certified),
    };
    let code = if verdicts.claim_holds == Some(false) { 1 } else { 0 };
    let result = CertifyResult {
        source,
        elements: n,
        rank: o.underlying().full_rank(),
        mode: args.mode,
        claim,
        orientations,
    };
    let env = ReportEnvelope::new("certify", global, args, result, verdicts, started);
    match global.format {
        OutputFormat::Json => println!("{}", env.to_json()),
        OutputFormat::Text => print_text(&env.result, &env.verdicts, env.timing_ms),
    }
    Ok(code)
}

fn print_text(r: &CertifyResult, v: &Verdicts, timing: Option<u128>) {
    let mode = match r.mode {
        Mode::Gsp => "GSP",
        Mode::Cogsp => "coGSP",
    };
    println!("{}: {} elements, rank {}, mode {mode}", r.source, r.elements, r.rank);
    for o in &r.orientations {
        let c = &o.certificate;
        let scope = if c.exhaustive { "" } else { " (bounded minor survey)" };
        print!(
            "reorientation {}: {} over {} minors{scope}",
            set_label(o.reorientation),
            if c.verdict { "certified" } else { "NOT certified" },
            c.minors_checked
        );
        match &c.failing_minor {
            Some(f) => println!(
                "; failing minor deletes {} and contracts {}",
                set_label(f.delete),
                set_label(f.contract)
            ),
            None => println!(),
        }
    }
    if let Some(claim) = r.claim {
        println!("claim: {claim}");
    }
    if let Some(ms) = timing {
        println!("time: {ms} ms");
    }
    let failing = r.orientations.iter().filter(|o| !o.certificate.verdict).count();
    println!(
        "verdict: {} ({} of {} orientations certified)",
        if v.all_certified { "certified" } else { "not certified" },
        r.orientations.len() - failing,
        r.orientations.len(),
    );
}
