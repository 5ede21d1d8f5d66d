//! Realized oriented matroids: signed circuits and cocircuits, flow and
//! coflow lattices, and the small-support flow searches built on them.

mod certify;
mod flows;
mod realize;

use std::collections::HashSet;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::bits;
use crate::error::{Error, Result};
use crate::intlattice::{IntegerLattice, RationalMatrix};
use crate::matroid::{circuits, flats_of_corank, Matroid};

pub use certify::{
    certify_cogsp, certify_gsp, reorientation_masks, CertifyMode, CertifyOptions, FlowWitness, GspCertificate, MinorRef,
};
pub use flows::{flow_from_double_circuit, nz3_coflow, rank3_full_lattice_check, small_support_flow, FlowVector};
pub use realize::{
    orient_from_realization, realize_bicircular, realize_graphic, realize_lattice_path, realize_uniform,
};

/// A signed subset `(X+, X-)` stored as two disjoint masks.
///
/// Families keep one representative per `±` pair: the one whose smallest
/// element is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pub pos: u64,
    pub neg: u64,
}

impl SignedSet {
    pub fn new(pos: u64, neg: u64) -> Result<SignedSet> {
        if pos & neg != 0 {
            return Err(Error::invalid("positive and negative parts overlap"));
        }
        Ok(SignedSet { pos, neg })
    }

    /// Reads signs off an integer or rational vector.
    pub fn from_signs<T: Signed>(v: &[T]) -> SignedSet {
        let mut s = SignedSet { pos: 0, neg: 0 };
        for (i, x) in v.iter().enumerate() {
            if x.is_positive() {
                s.pos |= bits::bit(i);
            } else if x.is_negative() {
                s.neg |= bits::bit(i);
            }
        }
        s
    }

    pub fn support(&self) -> u64 {
        self.pos | self.neg
    }

    pub fn negated(&self) -> SignedSet {
        SignedSet {
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// The representative with a positive first entry.
    pub fn canonical(&self) -> SignedSet {
        let low = self.support() & self.support().wrapping_neg();
        if self.neg & low != 0 {
            self.negated()
        } else {
            *self
        }
    }

    /// Flips the signs on `s`.
    pub fn reoriented(&self, s: u64) -> SignedSet {
        SignedSet {
            pos: (self.pos & !s) | (self.neg & s),
            neg: (self.neg & !s) | (self.pos & s),
        }
    }

    /// Re-indexes onto the listed positions (see [`bits::compress`]).
    pub fn compress(&self, positions: &[usize]) -> SignedSet {
        SignedSet {
            pos: bits::compress(self.pos, positions),
            neg: bits::compress(self.neg, positions),
        }
    }

    /// Inverse of [`SignedSet::compress`].
    pub fn expand(&self, positions: &[usize]) -> SignedSet {
        SignedSet {
            pos: bits::expand(self.pos, positions),
            neg: bits::expand(self.neg, positions),
        }
    }

    pub fn to_vec(&self, n: usize) -> Vec<i64> {
        (0..n)
            .map(|i| {
                if bits::contains(self.pos, i) {
                    1
                } else if bits::contains(self.neg, i) {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }
}

/// Oriented-matroid orthogonality: disjoint supports, or both a sign
/// agreement and a sign disagreement on the common support.
pub fn sign_orthogonal(x: &SignedSet, y: &SignedSet) -> bool {
    if x.support() & y.support() == 0 {
        return true;
    }
    let agree = (x.pos & y.pos) | (x.neg & y.neg);
    let disagree = (x.pos & y.neg) | (x.neg & y.pos);
    agree != 0 && disagree != 0
}

fn sort_family(family: &mut [SignedSet]) {
    family.sort_by_key(|s| (bits::canonical_key(s.support()), s.pos));
}

fn is_antichain(family: &[SignedSet]) -> bool {
    family.iter().enumerate().all(|(i, a)| {
        family
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || a.support() & !b.support() != 0)
    })
}

/// An orientation of a matroid, given by its signed circuits and, when
/// known, its signed cocircuits and a rational realization.
#[derive(Debug, Clone)]
pub struct OrientedMatroid {
    underlying: Matroid,
    circuits: Vec<SignedSet>,
    cocircuits: OnceLock<Vec<SignedSet>>,
    realization: Option<RationalMatrix>,
}

impl OrientedMatroid {
    /// Wraps a family of signed circuits. Supports must be exactly the
    /// circuits of `underlying`.
    pub fn from_signed_circuits(underlying: Matroid, family: Vec<SignedSet>) -> Result<OrientedMatroid> {
        let mut family: Vec<SignedSet> = family.iter().map(SignedSet::canonical).collect();
        sort_family(&mut family);
        let supports: Vec<u64> = family.iter().map(SignedSet::support).collect();
        if supports.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("two signed circuits share a support"));
        }
        if supports != circuits(&underlying)? {
            return Err(Error::invalid(
                "signed circuit supports differ from the circuits of the matroid",
            ));
        }
        Ok(OrientedMatroid {
            underlying,
            circuits: family,
            cocircuits: OnceLock::new(),
            realization: None,
        })
    }

    fn from_parts(
        underlying: Matroid,
        mut circuits: Vec<SignedSet>,
        cocircuits: Option<Vec<SignedSet>>,
        realization: Option<RationalMatrix>,
    ) -> OrientedMatroid {
        sort_family(&mut circuits);
        debug_assert!(is_antichain(&circuits));
        let lock = OnceLock::new();
        if let Some(mut c) = cocircuits {
            sort_family(&mut c);
            debug_assert!(is_antichain(&c));
            let _ = lock.set(c);
        }
        OrientedMatroid {
            underlying,
            circuits,
            cocircuits: lock,
            realization,
        }
    }

    pub fn size(&self) -> usize {
        self.underlying.size()
    }

    pub fn underlying(&self) -> &Matroid {
        &self.underlying
    }

    pub fn realization(&self) -> Option<&RationalMatrix> {
        self.realization.as_ref()
    }

    /// Canonical signed circuits, sorted by size then support.
    pub fn signed_circuits(&self) -> &[SignedSet] {
        &self.circuits
    }

    pub fn circuit_vectors(&self) -> Vec<Vec<i64>> {
        self.circuits.iter().map(|c| c.to_vec(self.size())).collect()
    }

    /// Canonical signed cocircuits. Needs a realization unless they were
    /// supplied when the orientation was built.
    pub fn signed_cocircuits(&self) -> Result<&[SignedSet]> {
        if let Some(c) = self.cocircuits.get() {
            return Ok(c);
        }
        let a = self
            .realization
            .as_ref()
            .ok_or_else(|| Error::Unsupported("signed cocircuits need a realization".into()))?;
        let computed = cocircuits_from_realization(&self.underlying, a)?;
        Ok(self.cocircuits.get_or_init(|| computed))
    }

    pub fn cocircuit_vectors(&self) -> Result<Vec<Vec<i64>>> {
        Ok(self
            .signed_cocircuits()?
            .iter()
            .map(|c| c.to_vec(self.size()))
            .collect())
    }

    /// Negates the elements of `s`.
    pub fn reorient(&self, s: u64) -> OrientedMatroid {
        let s = s & self.underlying.ground();
        let flip = |fam: &[SignedSet]| -> Vec<SignedSet> { fam.iter().map(|x| x.reoriented(s).canonical()).collect() };
        let realization = self.realization.as_ref().map(|a| {
            let mut a = a.clone();
            for e in bits::elements(s) {
                a.negate_column(e);
            }
            a
        });
        OrientedMatroid::from_parts(
            self.underlying.clone(),
            flip(&self.circuits),
            self.cocircuits.get().map(|c| flip(c)),
            realization,
        )
    }

    /// The dual orientation: its signed circuits are our signed cocircuits.
    pub fn dual(&self) -> Result<OrientedMatroid> {
        let cocircuits = self.signed_cocircuits()?.to_vec();
        let realization = self.realization.as_ref().map(kernel_realization);
        Ok(OrientedMatroid::from_parts(
            self.underlying.dual(),
            cocircuits,
            Some(self.circuits.clone()),
            realization,
        ))
    }

    /// `O \ delete / contract`, re-indexed ascending over the survivors.
    /// Signed cocircuits carry over when this orientation has them.
    pub fn minor(&self, delete: u64, contract: u64) -> Result<OrientedMatroid> {
        let m = self.underlying.minor(delete, contract)?;
        let keep: Vec<usize> = bits::elements(self.underlying.ground() & !delete & !contract).collect();
        let circuits = minor_family(&self.circuits, delete, contract, &keep, |s| m.is_circuit(s));
        let cocircuits = self.signed_cocircuits().ok().map(|fam| {
            let d = m.dual();
            minor_family(fam, contract, delete, &keep, |s| d.is_circuit(s))
        });
        Ok(OrientedMatroid::from_parts(m, circuits, cocircuits, None))
    }

    /// Checks every signed circuit against every signed cocircuit.
    pub fn check_orthogonality(&self) -> Result<bool> {
        let co = self.signed_cocircuits()?;
        Ok(self.circuits.iter().all(|x| co.iter().all(|y| sign_orthogonal(x, y))))
    }

    pub fn flow_lattice(&self) -> Result<IntegerLattice> {
        IntegerLattice::from_i64(self.size(), &self.circuit_vectors())
    }

    pub fn coflow_lattice(&self) -> Result<IntegerLattice> {
        IntegerLattice::from_i64(self.size(), &self.cocircuit_vectors()?)
    }
}

/// Signed circuits of a minor from those of the parent: restrictions
/// `X \ drop` of members avoiding `avoid`, kept when the support is a
/// circuit of the minor.
pub(crate) fn minor_family(
    family: &[SignedSet],
    avoid: u64,
    drop: u64,
    keep: &[usize],
    is_circuit: impl Fn(u64) -> bool,
) -> Vec<SignedSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in family {
        if x.support() & avoid != 0 || x.support() & !drop == 0 {
            continue;
        }
        let r = SignedSet {
            pos: x.pos & !drop,
            neg: x.neg & !drop,
        }
        .compress(keep)
        .canonical();
        if seen.contains(&r.support()) || !is_circuit(r.support()) {
            continue;
        }
        seen.insert(r.support());
        out.push(r);
    }
    sort_family(&mut out);
    out
}

/// Signs of the one-dimensional kernel of the columns in `support`.
pub(crate) fn circuit_signs(a: &RationalMatrix, support: u64) -> Result<SignedSet> {
    let cols: Vec<usize> = bits::elements(support).collect();
    let kernel = a.select_columns(&cols).null_space();
    if kernel.len() != 1 {
        return Err(Error::Genericity(format!(
            "columns {} have a {}-dimensional kernel, expected a circuit",
            bits::display(support),
            kernel.len()
        )));
    }
    let v = &kernel[0];
    if v.iter().any(Zero::is_zero) {
        return Err(Error::Genericity(format!(
            "kernel vector on {} has a zero entry",
            bits::display(support)
        )));
    }
    Ok(SignedSet::from_signs(v).expand(&cols).canonical())
}

pub(crate) fn circuits_from_realization(m: &Matroid, a: &RationalMatrix) -> Result<Vec<SignedSet>> {
    circuits(m)?.par_iter().map(|&c| circuit_signs(a, c)).collect()
}

fn cocircuits_from_realization(m: &Matroid, a: &RationalMatrix) -> Result<Vec<SignedSet>> {
    let n = m.size();
    let g = m.ground();
    let copoints = if m.full_rank() == 0 {
        Vec::new()
    } else {
        flats_of_corank(m, 1)?
    };
    let mut out: Vec<SignedSet> = copoints
        .par_iter()
        .map(|h| {
            let cols: Vec<usize> = bits::elements(h.elements).collect();
            // Functionals vanishing on the copoint: kernel of its columns transposed.
            let mut t = RationalMatrix::zeros(cols.len(), a.rows());
            for (i, &c) in cols.iter().enumerate() {
                for r in 0..a.rows() {
                    t.set(i, r, a.get(r, c).clone());
                }
            }
            for y in t.null_space() {
                let values: Vec<BigRational> = (0..n)
                    .map(|e| {
                        (0..a.rows())
                            .filter(|&r| !y[r].is_zero())
                            .map(|r| &y[r] * a.get(r, e))
                            .fold(BigRational::zero(), |acc, v| acc + v)
                    })
                    .collect();
                let s = SignedSet::from_signs(&values);
                if s.support() == 0 {
                    continue;
                }
                if s.support() != g & !h.elements {
                    return Err(Error::Genericity(format!(
                        "covector for copoint {} has the wrong support",
                        bits::display(h.elements)
                    )));
                }
                return Ok(s.canonical());
            }
            Err(Error::Genericity(format!(
                "no functional separates copoint {}",
                bits::display(h.elements)
            )))
        })
        .collect::<Result<_>>()?;
    sort_family(&mut out);
    Ok(out)
}

/// Rows spanning the kernel of `a`; a realization of the dual matroid.
fn kernel_realization(a: &RationalMatrix) -> RationalMatrix {
    let kernel = a.null_space();
    let mut k = RationalMatrix::zeros(kernel.len(), a.cols());
    for (i, v) in kernel.into_iter().enumerate() {
        for (j, x) in v.into_iter().enumerate() {
            k.set(i, j, x);
        }
    }
    k
}

#[cfg(test)]
mod tests;
