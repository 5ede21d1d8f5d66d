//! Orientations from rational realizations.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{circuits_from_realization, OrientedMatroid};
use crate::bits;
use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};
use crate::graph::MultiGraph;
use crate::intlattice::{integer_rank, modular_rank, to_mod_p, RationalMatrix};
use crate::matroid::{LatticePathBounds, Matroid};

/// Attempts per realization before giving up on genericity.
const ATTEMPTS: u64 = 8;

/// Orients the column matroid of `a`.
///
/// With `expected`, the column matroid must equal it: same rank, and an
/// `r`-subset is independent in `a` exactly when it is a basis of
/// `expected`. Independence is settled modulo a large prime when possible
/// (a nonzero minor mod `p` is nonzero) and by exact elimination otherwise,
/// so the comparison is exact.
pub fn orient_from_realization(a: &RationalMatrix, expected: Option<&Matroid>) -> Result<OrientedMatroid> {
    let cols = a.integer_columns();
    let underlying = match expected {
        Some(m) => {
            if m.size() != a.cols() {
                return Err(Error::DimensionMismatch {
                    expected: m.size(),
                    got: a.cols(),
                });
            }
            check_same_matroid(&cols, m)?;
            m.tabulated_if_small(16)
        }
        None => Matroid::linear(cols)?.tabulated_if_small(16),
    };
    let circuits = circuits_from_realization(&underlying, a)?;
    Ok(OrientedMatroid::from_parts(underlying, circuits, None, Some(a.clone())))
}

fn check_same_matroid(cols: &[Vec<BigInt>], m: &Matroid) -> Result<()> {
    let n = cols.len();
    let r = integer_rank(cols.to_vec());
    if r != m.full_rank() {
        return Err(Error::Genericity(format!(
            "realization has rank {r}, expected {}",
            m.full_rank()
        )));
    }
    let modular: Vec<Vec<u64>> = cols.iter().map(|c| c.iter().map(to_mod_p).collect()).collect();
    let subsets: Vec<u64> = bits::k_subsets(n, r).collect();
    let bad = subsets.par_iter().find_first(|&&s| {
        let want = m.rank(s) == r;
        let picked = |k: &[Vec<u64>]| bits::elements(s).map(|e| k[e].clone()).collect::<Vec<_>>();
        let independent = modular_rank(picked(&modular)) == r
            || integer_rank(bits::elements(s).map(|e| cols[e].clone()).collect()) == r;
        independent != want
    });
    match bad {
        Some(&s) => Err(Error::Genericity(format!(
            "columns {} are {} in the realization but {} in the matroid",
            bits::display(s),
            if m.rank(s) == r { "dependent" } else { "independent" },
            if m.rank(s) == r { "a basis" } else { "not a basis" },
        ))),
        None => Ok(()),
    }
}

fn random_entry(rng: &mut ChaCha8Rng) -> BigRational {
    let v: i64 = rng.random_range(1..=(1i64 << 62));
    let v = if rng.random::<bool>() { v } else { -v };
    BigRational::from_integer(v.into())
}

/// Builds random matrices from `seed`, `seed + 1`, ... until one realizes
/// `expected`.
fn realize_with(
    seed: u64,
    expected: &Matroid,
    build: impl Fn(&mut ChaCha8Rng) -> RationalMatrix,
) -> Result<OrientedMatroid> {
    let mut last = None;
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let a = build(&mut rng);
        match orient_from_realization(&a, Some(expected)) {
            Err(e @ Error::Genericity(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(Error::Genericity(format!(
        "{ATTEMPTS} consecutive random matrices were degenerate; last: {}",
        last.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// Random realization of `B(G)`: edge `uv` gets random nonzero entries in
/// rows `u` and `v`, a loop at `v` a single one in row `v`.
pub fn realize_bicircular(g: &MultiGraph, seed: u64) -> Result<OrientedMatroid> {
    check_cap("realization ground size", Caps::global().realize, g.edge_count())?;
    let m = Matroid::bicircular(g)?;
    realize_with(seed, &m, |rng| {
        let mut a = RationalMatrix::zeros(g.vertex_count(), g.edge_count());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            a.set(u, e, random_entry(rng));
            if u != v {
                a.set(v, e, random_entry(rng));
            }
        }
        a
    })
}

/// Random `r x n` realization of `U_{r,n}`.
pub fn realize_uniform(r: usize, n: usize, seed: u64) -> Result<OrientedMatroid> {
    check_cap("realization ground size", Caps::global().realize, n)?;
    let m = Matroid::uniform(r, n)?;
    realize_with(seed, &m, |rng| {
        let mut a = RationalMatrix::zeros(r, n);
        for i in 0..r {
            for j in 0..n {
                a.set(i, j, random_entry(rng));
            }
        }
        a
    })
}

/// Random realization of a lattice path matroid as a transversal matroid:
/// row `j` is supported on the `j`-th interval.
pub fn realize_lattice_path(bounds: &LatticePathBounds, seed: u64) -> Result<OrientedMatroid> {
    check_cap("realization ground size", Caps::global().realize, bounds.len())?;
    let m = Matroid::lattice_path(bounds.clone());
    realize_with(seed, &m, |rng| {
        let mut a = RationalMatrix::zeros(bounds.intervals().len(), bounds.len());
        for (j, &(lo, hi)) in bounds.intervals().iter().enumerate() {
            for e in lo..=hi {
                a.set(j, e, random_entry(rng));
            }
        }
        a
    })
}

/// Directed incidence matrix of `G`: edge `(u, v)` is `+1` at `u`, `-1` at
/// `v`; loops are zero columns.
pub fn realize_graphic(g: &MultiGraph) -> Result<OrientedMatroid> {
    check_cap("realization ground size", Caps::global().realize, g.edge_count())?;
    let mut a = RationalMatrix::zeros(g.vertex_count(), g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            a.set(u, e, BigRational::from_integer(1.into()));
            a.set(v, e, BigRational::from_integer((-1).into()));
        }
    }
    orient_from_realization(&a, Some(&Matroid::graphic(g)?))
}
