//! GSP and coGSP certificates over all (co)simple minors.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::flows::small_support_member;
use super::{minor_family, OrientedMatroid, SignedSet};
use crate::bits;
use crate::caps::Caps;
use crate::error::{check_cap, Result};
use crate::intlattice::IntegerLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertifyMode {
    Gsp,
    Cogsp,
}

impl fmt::Display for CertifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertifyMode::Gsp => "GSP",
            CertifyMode::Cogsp => "coGSP",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Only minors removing at most this many elements. The certificate is
    /// then marked non-exhaustive.
    pub max_removed: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinorRef {
    pub delete: u64,
    pub contract: u64,
}

/// A minor and a small `{0, ±1}` flow (coGSP) or coflow (GSP) of it, in the
/// minor's own coordinates (surviving elements in ascending order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowWitness {
    pub delete: u64,
    pub contract: u64,
    pub flow: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GspCertificate {
    pub mode: CertifyMode,
    pub verdict: bool,
    pub exhaustive: bool,
    pub minors_checked: usize,
    pub witnesses: Vec<FlowWitness>,
    pub failing_minor: Option<MinorRef>,
}

impl GspCertificate {
    /// Recomputes every witness's minor and checks its flow against the
    /// minor's (co)flow lattice.
    pub fn reverify(&self, o: &OrientedMatroid) -> Result<bool> {
        for w in &self.witnesses {
            let ok = match self.mode {
                CertifyMode::Cogsp => o.minor(w.delete, w.contract)?.flow_lattice()?.quick_contains(&w.flow),
                CertifyMode::Gsp => o.minor(w.delete, w.contract)?.coflow_lattice()?.quick_contains(&w.flow),
            };
            let small = w.flow.iter().all(|x| x.abs() <= 1) && w.flow.iter().filter(|&&x| x != 0).count() <= 2;
            if !ok || !small || w.flow.iter().all(|&x| x == 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `(delete, contract)` pairs removing at most `max_removed` elements,
/// ordered by number removed, then delete mask, then contract mask.
fn minor_pairs(n: usize, max_removed: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for k in 0..=max_removed.min(n) {
        for removed in bits::k_subsets(n, k) {
            let mut level: Vec<(u64, u64)> = bits::submasks(removed).map(|d| (d, removed & !d)).collect();
            level.sort_unstable();
            out.extend(level);
        }
    }
    out
}

struct Candidate {
    delete: u64,
    contract: u64,
    kept: u64,
    circuits: Vec<SignedSet>,
}

/// Certifies that every cosimple minor has a nonzero `{0, ±1}` flow with
/// at most two nonzero entries. Minors are deduplicated by surviving set
/// and signed circuit family; empty minors are skipped.
pub fn certify_cogsp(o: &OrientedMatroid, options: CertifyOptions) -> Result<GspCertificate> {
    let n = o.size();
    let caps = Caps::global();
    match options.max_removed {
        None => check_cap("certification ground size", caps.certify, n)?,
        Some(_) => check_cap("certification ground size", caps.realize, n)?,
    }
    let table = o.underlying().rank_table()?;
    let rk = |s: u64| table[s as usize] as usize;
    let g = o.underlying().ground();
    let pairs = minor_pairs(n, options.max_removed.unwrap_or(n));

    let candidates: Vec<Candidate> = pairs
        .par_iter()
        .filter_map(|&(delete, contract)| {
            let kept = g & !delete & !contract;
            if kept == 0 {
                return None;
            }
            let rc = rk(contract);
            let rn = |s: u64| rk(s | contract) - rc;
            let full = rn(kept);
            let coloop = |e: usize| rn(kept & !bits::bit(e)) < full;
            if bits::elements(kept).any(coloop) {
                return None;
            }
            let elems: Vec<usize> = bits::elements(kept).collect();
            for (i, &e) in elems.iter().enumerate() {
                for &f in &elems[i + 1..] {
                    if rn(kept & !bits::bit(e) & !bits::bit(f)) + 1 == full {
                        return None;
                    }
                }
            }
            let is_circuit = |s: u64| {
                let s = bits::expand(s, &elems);
                let size = bits::count(s);
                rn(s) + 1 == size && bits::elements(s).all(|e| rn(s & !bits::bit(e)) + 1 == size)
            };
            let circuits = minor_family(o.signed_circuits(), delete, contract, &elems, is_circuit);
            Some(Candidate {
                delete,
                contract,
                kept,
                circuits,
            })
        })
        .collect();

    let mut seen = HashSet::new();
    let unique: Vec<&Candidate> = candidates
        .iter()
        .filter(|c| seen.insert((c.kept, c.circuits.clone())))
        .collect();

    let results: Vec<Result<Option<Vec<i64>>>> = unique
        .par_iter()
        .map(|c| {
            let k = bits::count(c.kept);
            let gens: Vec<Vec<i64>> = c.circuits.iter().map(|x| x.to_vec(k)).collect();
            let lattice = IntegerLattice::from_i64(k, &gens)?;
            Ok(small_support_member(&lattice, 2)?.map(|f| f.entries))
        })
        .collect();

    let mut witnesses = Vec::new();
    let mut failing_minor = None;
    for (c, r) in unique.iter().zip(results) {
        match r? {
            Some(flow) => witnesses.push(FlowWitness {
                delete: c.delete,
                contract: c.contract,
                flow,
            }),
            None => {
                if failing_minor.is_none() {
                    failing_minor = Some(MinorRef {
                        delete: c.delete,
                        contract: c.contract,
                    });
                }
            }
        }
    }
    Ok(GspCertificate {
        mode: CertifyMode::Cogsp,
        verdict: failing_minor.is_none(),
        exhaustive: options.max_removed.is_none_or(|k| k >= n),
        minors_checked: unique.len(),
        witnesses,
        failing_minor,
    })
}

/// Certifies that every simple minor has a nonzero `{0, ±1}` coflow with at
/// most two nonzero entries, by certifying the dual orientation as coGSP.
/// Masks in the result refer to this orientation.
pub fn certify_gsp(o: &OrientedMatroid, options: CertifyOptions) -> Result<GspCertificate> {
    let mut cert = certify_cogsp(&o.dual()?, options)?;
    cert.mode = CertifyMode::Gsp;
    for w in &mut cert.witnesses {
        std::mem::swap(&mut w.delete, &mut w.contract);
    }
    if let Some(f) = &mut cert.failing_minor {
        std::mem::swap(&mut f.delete, &mut f.contract);
    }
    Ok(cert)
}

/// Reorientation masks for a sweep. Up to `exhaustive_limit` elements every
/// orientation class is listed once (the last element is never flipped,
/// since global negation changes nothing); beyond it, the empty mask
/// followed by `samples` seeded random masks.
pub fn reorientation_masks(n: usize, exhaustive_limit: usize, samples: usize, seed: u64) -> Vec<u64> {
    if n == 0 {
        return vec![0];
    }
    if n <= exhaustive_limit {
        return (0..1u64 << (n - 1)).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![0];
    out.extend((0..samples).map(|_| rng.random::<u64>() & bits::full(n)));
    out
}
