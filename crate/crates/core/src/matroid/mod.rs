//! Matroids given by rank oracles on bitmask subsets.

mod clones;
mod enumerate;
mod iso;
mod json;
mod lattice_path;
mod structure;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::intlattice::integer_rank;

pub use clones::{clone_pairs, clone_reduction_order, find_clone_free_minor, is_clone_reducible_exhaustive};
pub use enumerate::{
    circuits, circuits_within, closure, coline_report, flats_of_corank, flats_of_rank, is_flat, ColineReport, Flat,
};
pub use iso::{has_m_k4_minor, is_isomorphic, MinorWitness};
pub use json::{matroid_from_json, matroid_to_json};
pub use lattice_path::{lattice_path_bases_by_paths, LatticePathBounds};
pub use structure::{
    cosimplify, is_cosimple, is_simple, parallel_classes, series_classes, simplify, SeriesClasses, Simplified,
};

/// Largest ground set for which a full rank table may be materialised.
pub const TABLE_LIMIT: usize = 22;

/// A matroid on `{0, .., n-1}`. Cheap to clone.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    full_rank: usize,
    repr: Arc<Repr>,
}

enum Repr {
    Uniform {
        rank: usize,
    },
    Graphic(MultiGraph),
    Bicircular(MultiGraph),
    LatticePath(LatticePathBounds),
    Dual(Matroid),
    Minor {
        of: Matroid,
        keep: Vec<usize>,
        contract: u64,
        contract_rank: usize,
    },
    ExplicitBases(Vec<u64>),
    Linear(Vec<Vec<BigInt>>),
    ParallelExtension {
        of: Matroid,
        copy_of: usize,
    },
    Table {
        ranks: Vec<u8>,
        source: Option<Matroid>,
    },
}

/// Where a matroid came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Uniform,
    Graphic,
    Bicircular,
    LatticePath,
    Dual,
    Minor,
    ExplicitBases,
    Linear,
    ParallelExtension,
    Table,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Uniform => "uniform",
            Kind::Graphic => "graphic",
            Kind::Bicircular => "bicircular",
            Kind::LatticePath => "lattice_path",
            Kind::Dual => "dual",
            Kind::Minor => "minor",
            Kind::ExplicitBases => "explicit_bases",
            Kind::Linear => "linear",
            Kind::ParallelExtension => "parallel_extension",
            Kind::Table => "table",
        };
        f.write_str(s)
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid({}, n={}, r={})", self.kind(), self.n, self.full_rank)
    }
}

fn ground_check(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::ResourceCap {
            what: "ground set size",
            limit: 64,
            actual: n,
        });
    }
    Ok(())
}

impl Matroid {
    fn build(n: usize, repr: Repr) -> Matroid {
        let mut m = Matroid {
            n,
            full_rank: 0,
            repr: Arc::new(repr),
        };
        m.full_rank = m.rank(bits::full(n));
        m
    }

    /// `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        ground_check(n)?;
        if r > n {
            return Err(Error::invalid(format!("uniform rank {r} exceeds ground size {n}")));
        }
        Ok(Matroid::build(n, Repr::Uniform { rank: r }))
    }

    /// Cycle matroid of a multigraph; element `i` is edge `i`.
    pub fn graphic(g: &MultiGraph) -> Result<Matroid> {
        ground_check(g.edge_count())?;
        Ok(Matroid::build(g.edge_count(), Repr::Graphic(g.clone())))
    }

    /// Bicircular matroid of a multigraph.
    pub fn bicircular(g: &MultiGraph) -> Result<Matroid> {
        ground_check(g.edge_count())?;
        Ok(Matroid::build(g.edge_count(), Repr::Bicircular(g.clone())))
    }

    pub fn lattice_path(bounds: LatticePathBounds) -> Matroid {
        Matroid::build(bounds.len(), Repr::LatticePath(bounds))
    }

    /// Matroid whose bases are the given equal-size masks.
    pub fn from_bases(n: usize, bases: Vec<u64>) -> Result<Matroid> {
        ground_check(n)?;
        let Some(&first) = bases.first() else {
            return Err(Error::invalid("a matroid needs at least one basis"));
        };
        let r = bits::count(first);
        for &b in &bases {
            if b & !bits::full(n) != 0 {
                return Err(Error::invalid(format!(
                    "basis {} leaves the ground set",
                    bits::display(b)
                )));
            }
            if bits::count(b) != r {
                return Err(Error::invalid("bases have different sizes"));
            }
        }
        let mut bases = bases;
        bases.sort_unstable();
        bases.dedup();
        let m = Matroid::build(n, Repr::ExplicitBases(bases));
        m.check_rank_axioms(200, 7)?;
        Ok(m)
    }

    /// Column matroid of an integer matrix given column by column.
    pub fn linear(columns: Vec<Vec<BigInt>>) -> Result<Matroid> {
        ground_check(columns.len())?;
        if let Some(len) = columns.first().map(Vec::len) {
            if let Some(c) = columns.iter().find(|c| c.len() != len) {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    got: c.len(),
                });
            }
        }
        Ok(Matroid::build(columns.len(), Repr::Linear(columns)))
    }

    /// Matroid given by a full rank table indexed by mask.
    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Matroid> {
        if n > TABLE_LIMIT {
            return Err(Error::ResourceCap {
                what: "rank table ground size",
                limit: TABLE_LIMIT,
                actual: n,
            });
        }
        if ranks.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: ranks.len(),
            });
        }
        Ok(Matroid::build(n, Repr::Table { ranks, source: None }))
    }

    /// Same matroid with its rank function cached in a table.
    pub fn tabulated(&self) -> Result<Matroid> {
        if matches!(*self.repr, Repr::Table { .. }) {
            return Ok(self.clone());
        }
        let ranks = self.rank_table()?;
        Ok(Matroid {
            n: self.n,
            full_rank: self.full_rank,
            repr: Arc::new(Repr::Table {
                ranks,
                source: Some(self.clone()),
            }),
        })
    }

    /// Tabulates when the ground set is small enough, otherwise clones.
    pub fn tabulated_if_small(&self, limit: usize) -> Matroid {
        if self.n <= limit.min(TABLE_LIMIT) {
            self.tabulated().expect("size checked")
        } else {
            self.clone()
        }
    }

    pub fn rank_table(&self) -> Result<Vec<u8>> {
        if let Repr::Table { ranks, .. } = &*self.repr {
            return Ok(ranks.clone());
        }
        crate::error::check_cap("rank table ground size", TABLE_LIMIT, self.n)?;
        use rayon::prelude::*;
        Ok((0..1u64 << self.n)
            .into_par_iter()
            .map(|s| self.rank(s) as u8)
            .collect())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> u64 {
        bits::full(self.n)
    }

    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    pub fn kind(&self) -> Kind {
        match &*self.repr {
            Repr::Uniform { .. } => Kind::Uniform,
            Repr::Graphic(_) => Kind::Graphic,
            Repr::Bicircular(_) => Kind::Bicircular,
            Repr::LatticePath(_) => Kind::LatticePath,
            Repr::Dual(_) => Kind::Dual,
            Repr::Minor { .. } => Kind::Minor,
            Repr::ExplicitBases(_) => Kind::ExplicitBases,
            Repr::Linear(_) => Kind::Linear,
            Repr::ParallelExtension { .. } => Kind::ParallelExtension,
            Repr::Table { source: Some(s), .. } => s.kind(),
            Repr::Table { source: None, .. } => Kind::Table,
        }
    }

    /// Underlying graph for graphic and bicircular matroids.
    pub fn graph(&self) -> Option<&MultiGraph> {
        match &*self.repr {
            Repr::Graphic(g) | Repr::Bicircular(g) => Some(g),
            Repr::Table { source: Some(s), .. } => s.graph(),
            _ => None,
        }
    }

    pub fn lattice_path_bounds(&self) -> Option<&LatticePathBounds> {
        match &*self.repr {
            Repr::LatticePath(b) => Some(b),
            Repr::Table { source: Some(s), .. } => s.lattice_path_bounds(),
            _ => None,
        }
    }

    /// Rank of the subset `s`.
    pub fn rank(&self, s: u64) -> usize {
        debug_assert_eq!(s & !bits::full(self.n), 0, "subset outside ground set");
        match &*self.repr {
            Repr::Uniform { rank } => bits::count(s).min(*rank),
            Repr::Graphic(g) => g.component_census(s).forest_edges,
            Repr::Bicircular(g) => {
                let c = g.component_census(s);
                c.vertices - c.acyclic_components
            }
            Repr::LatticePath(b) => b.rank(s),
            Repr::Dual(m) => bits::count(s) + m.rank(m.ground() & !s) - m.full_rank,
            Repr::Minor {
                of,
                keep,
                contract,
                contract_rank,
            } => of.rank(bits::expand(s, keep) | contract) - contract_rank,
            Repr::ExplicitBases(bases) => bases.iter().map(|&b| bits::count(b & s)).max().unwrap_or(0),
            Repr::Linear(cols) => {
                let rows: Vec<Vec<BigInt>> = bits::elements(s).map(|e| cols[e].clone()).collect();
                integer_rank(rows)
            }
            Repr::ParallelExtension { of, copy_of } => {
                let new = bits::bit(self.n - 1);
                if s & new != 0 {
                    of.rank((s & !new) | bits::bit(*copy_of))
                } else {
                    of.rank(s)
                }
            }
            Repr::Table { ranks, .. } => ranks[s as usize] as usize,
        }
    }

    pub fn is_independent(&self, s: u64) -> bool {
        self.rank(s) == bits::count(s)
    }

    pub fn is_basis(&self, s: u64) -> bool {
        bits::count(s) == self.full_rank && self.is_independent(s)
    }

    pub fn is_circuit(&self, s: u64) -> bool {
        let k = bits::count(s);
        k > 0 && self.rank(s) == k - 1 && bits::elements(s).all(|e| self.rank(s & !bits::bit(e)) == k - 1)
    }

    pub fn loops(&self) -> u64 {
        (0..self.n)
            .filter(|&e| self.rank(bits::bit(e)) == 0)
            .fold(0, |a, e| a | bits::bit(e))
    }

    pub fn coloops(&self) -> u64 {
        let g = self.ground();
        (0..self.n)
            .filter(|&e| self.rank(g & !bits::bit(e)) < self.full_rank)
            .fold(0, |a, e| a | bits::bit(e))
    }

    /// Greedy basis of `s`, scanning elements in ascending order.
    pub fn greedy_basis(&self, s: u64) -> u64 {
        let mut b = 0u64;
        for e in bits::elements(s) {
            if self.rank(b | bits::bit(e)) > bits::count(b) {
                b |= bits::bit(e);
            }
        }
        b
    }

    /// The dual matroid; dualising a dual unwraps it.
    pub fn dual(&self) -> Matroid {
        if let Repr::Dual(inner) = &*self.repr {
            return inner.clone();
        }
        Matroid {
            n: self.n,
            full_rank: self.n - self.full_rank,
            repr: Arc::new(Repr::Dual(self.clone())),
        }
    }

    /// `M \ delete / contract`, re-indexed ascending over the survivors.
    pub fn minor(&self, delete: u64, contract: u64) -> Result<Matroid> {
        let g = self.ground();
        if (delete | contract) & !g != 0 {
            return Err(Error::invalid("minor sets leave the ground set"));
        }
        if delete & contract != 0 {
            return Err(Error::invalid(format!(
                "delete and contract overlap in {}",
                bits::display(delete & contract)
            )));
        }
        let keep: Vec<usize> = bits::elements(g & !delete & !contract).collect();
        let n = keep.len();
        Ok(Matroid::build(
            n,
            Repr::Minor {
                of: self.clone(),
                keep,
                contract,
                contract_rank: self.rank(contract),
            },
        ))
    }

    pub fn restrict(&self, s: u64) -> Result<Matroid> {
        self.minor(self.ground() & !s, 0)
    }

    pub fn contract(&self, c: u64) -> Result<Matroid> {
        self.minor(0, c)
    }

    /// Adds a new element `n` parallel to `e`.
    pub fn parallel_extension(&self, e: usize) -> Result<Matroid> {
        if e >= self.n {
            return Err(Error::invalid(format!("element {e} is not in the ground set")));
        }
        ground_check(self.n + 1)?;
        Ok(Matroid::build(
            self.n + 1,
            Repr::ParallelExtension {
                of: self.clone(),
                copy_of: e,
            },
        ))
    }

    /// Adds a new element `n` in series with `e`.
    pub fn series_extension(&self, e: usize) -> Result<Matroid> {
        Ok(self.dual().parallel_extension(e)?.dual())
    }

    /// True if both matroids have the same size and rank function.
    pub fn same_rank_function(&self, other: &Matroid) -> bool {
        if self.n != other.n || self.full_rank != other.full_rank {
            return false;
        }
        if self.n <= TABLE_LIMIT {
            return (0..1u64 << self.n).all(|s| self.rank(s) == other.rank(s));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        (0..20_000).all(|_| {
            let s = rng.random::<u64>() & self.ground();
            self.rank(s) == other.rank(s)
        })
    }

    /// Spot-checks normalisation, monotonicity, unit increase and
    /// submodularity on random triples.
    pub fn check_rank_axioms(&self, samples: usize, seed: u64) -> Result<()> {
        if self.rank(0) != 0 {
            return Err(Error::invalid("rank of the empty set is not zero"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = self.ground();
        for _ in 0..samples {
            let a = rng.random::<u64>() & g;
            let b = rng.random::<u64>() & g;
            let (ra, rb) = (self.rank(a), self.rank(b));
            if ra > bits::count(a) {
                return Err(Error::invalid(format!("rank({}) exceeds its size", bits::display(a))));
            }
            if self.rank(a | b) + self.rank(a & b) > ra + rb {
                return Err(Error::invalid(format!(
                    "submodularity fails on {} and {}",
                    bits::display(a),
                    bits::display(b)
                )));
            }
            if self.n > 0 {
                let e = rng.random_range(0..self.n);
                let ra_e = self.rank(a | bits::bit(e));
                if ra_e < ra || ra_e > ra + 1 {
                    return Err(Error::invalid(format!(
                        "adding element {} to {} changes rank by more than one or decreases it",
                        e + 1,
                        bits::display(a)
                    )));
                }
            }
        }
        Ok(())
    }
}
