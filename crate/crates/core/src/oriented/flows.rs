//! Flow searches against the flow and coflow lattices.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::OrientedMatroid;
use crate::bits;
use crate::caps::Caps;
use crate::doublecirc::{flowable_hypothesis, DoubleCircuitReport, FlowHypothesis};
use crate::error::{check_cap, Error, Result};
use crate::intlattice::{IntegerLattice, MembershipCertificate};
use crate::matroid::{is_cosimple, is_isomorphic, is_simple, Matroid};

/// An integer vector with a certificate of membership in a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowVector {
    pub entries: Vec<i64>,
    pub certificate: MembershipCertificate,
}

impl FlowVector {
    pub fn support(&self) -> u64 {
        bits::from_elements(self.entries.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i))
    }

    /// Re-checks the certificate against the lattice generators.
    pub fn verify(&self, lattice: &IntegerLattice) -> bool {
        let target: Vec<BigInt> = self.entries.iter().map(|&x| x.into()).collect();
        self.certificate.target() == target.as_slice() && self.certificate.verify(lattice.generators())
    }
}

fn certified(lattice: &IntegerLattice, x: Vec<i64>) -> Result<Option<FlowVector>> {
    Ok(lattice.contains_i64(&x)?.map(|certificate| FlowVector {
        entries: x,
        certificate,
    }))
}

/// Sign patterns on `k` coordinates with the first one positive.
fn sign_patterns(k: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u64 << k.saturating_sub(1)).map(move |m| {
        (0..k)
            .map(|i| if i > 0 && m & (1 << (i - 1)) != 0 { -1 } else { 1 })
            .collect()
    })
}

/// First `{0, ±1}` vector in `lattice` with between one and `max_support`
/// nonzero entries: smaller supports first, then supports in lexicographic
/// order, then sign patterns.
pub(crate) fn small_support_member(lattice: &IntegerLattice, max_support: usize) -> Result<Option<FlowVector>> {
    let n = lattice.dimension();
    for k in 1..=max_support.min(n) {
        for support in lexicographic_subsets(n, k) {
            for signs in sign_patterns(k) {
                let mut x = vec![0i64; n];
                for (&e, &s) in support.iter().zip(&signs) {
                    x[e] = s;
                }
                if lattice.quick_contains(&x) {
                    return certified(lattice, x);
                }
            }
        }
    }
    Ok(None)
}

fn lexicographic_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = bits::k_subsets(n, k).map(|s| bits::elements(s).collect()).collect();
    out.sort();
    out
}

/// First `{0, ±1}` flow with at most `max_support` nonzero entries.
pub fn small_support_flow(o: &OrientedMatroid, max_support: usize) -> Result<Option<FlowVector>> {
    small_support_member(&o.flow_lattice()?, max_support)
}

/// The flow promised for a double circuit with a flowable class census:
/// a unit vector on a singular class when the degree is even, or a `±1`
/// pair on two singular classes when it is odd. Only signed circuits
/// inside the double circuit are used.
pub fn flow_from_double_circuit(o: &OrientedMatroid, report: &DoubleCircuitReport) -> Result<FlowVector> {
    let hypothesis = flowable_hypothesis(report);
    let singular: Vec<usize> = report.singular_classes().map(|c| c.trailing_zeros() as usize).collect();
    let targets: Vec<Vec<usize>> = match hypothesis {
        FlowHypothesis::None => {
            return Err(Error::precondition(format!(
                "double circuit {} of degree {} with {} singular classes satisfies neither flow hypothesis",
                bits::display(report.set),
                report.degree,
                report.singular
            )))
        }
        FlowHypothesis::EvenOneSingular => singular.iter().map(|&e| vec![e]).collect(),
        FlowHypothesis::OddTwoSingular => {
            let mut t = Vec::new();
            for (i, &e) in singular.iter().enumerate() {
                for &f in &singular[i + 1..] {
                    t.push(vec![e, f]);
                }
            }
            t
        }
    };
    let n = o.size();
    let inside: Vec<usize> = (0..o.signed_circuits().len())
        .filter(|&i| o.signed_circuits()[i].support() & !report.set == 0)
        .collect();
    let gens: Vec<Vec<i64>> = inside.iter().map(|&i| o.signed_circuits()[i].to_vec(n)).collect();
    let local = IntegerLattice::from_i64(n, &gens)?;
    for support in &targets {
        for signs in sign_patterns(support.len()) {
            let mut x = vec![0i64; n];
            for (&e, &s) in support.iter().zip(&signs) {
                x[e] = s;
            }
            let Some(cert) = local.contains_i64(&x)? else {
                continue;
            };
            // Lift the coefficients to the full list of signed circuits.
            let mut coefficients = vec![BigInt::zero(); o.signed_circuits().len()];
            for (&i, c) in inside.iter().zip(cert.coefficients()) {
                coefficients[i] = c.clone();
            }
            let all: Vec<Vec<BigInt>> = o
                .circuit_vectors()
                .into_iter()
                .map(|v| v.into_iter().map(BigInt::from).collect())
                .collect();
            let certificate = MembershipCertificate::new(cert.target().to_vec(), coefficients, &all)?;
            return Ok(FlowVector {
                entries: x,
                certificate,
            });
        }
    }
    Err(Error::SearchExhausted(format!(
        "no small flow on the singular classes of double circuit {}",
        bits::display(report.set)
    )))
}

const NZ3_SYMBOLS: [i64; 4] = [1, -1, 2, -2];

/// First coflow with every entry in `{±1, ±2}`, in lexicographic order over
/// the symbols `1, -1, 2, -2`. Prefixes that no lattice vector extends are
/// pruned column by column against the Hermite normal form.
pub fn nz3_coflow(o: &OrientedMatroid) -> Result<Option<FlowVector>> {
    let n = o.size();
    check_cap("NZ-3 coflow ground size", Caps::global().nz3, n)?;
    let loops = o.underlying().loops();
    if loops != 0 {
        return Err(Error::precondition(format!(
            "loops {} admit no nowhere-zero coflow",
            bits::display(loops)
        )));
    }
    let lattice = o.coflow_lattice()?;
    let mut x = vec![0i64; n];
    let found = match lattice.small_hnf() {
        Some(h) => {
            let mut lambdas = vec![vec![0i128; h.num_rows()]; n + 1];
            fn dfs(h: &crate::intlattice::SmallHnf, x: &mut Vec<i64>, lambdas: &mut Vec<Vec<i128>>, c: usize) -> bool {
                if c == x.len() {
                    return true;
                }
                for s in NZ3_SYMBOLS {
                    x[c] = s;
                    let mut next = lambdas[c].clone();
                    if h.step(x, c, &mut next) {
                        lambdas[c + 1] = next;
                        if dfs(h, x, lambdas, c + 1) {
                            return true;
                        }
                    }
                }
                false
            }
            dfs(h, &mut x, &mut lambdas, 0)
        }
        None => {
            let mut found = false;
            for code in 0..4u64.pow(n as u32) {
                let mut c = code;
                for v in x.iter_mut().rev() {
                    *v = NZ3_SYMBOLS[(c % 4) as usize];
                    c /= 4;
                }
                if lattice.quick_contains(&x) {
                    found = true;
                    break;
                }
            }
            found
        }
    };
    if !found {
        return Ok(None);
    }
    certified(&lattice, x)
}

/// Whether the flow lattice is all of `Z^E`, for rank-3 orientations that
/// are simple, cosimple, non-uniform and not `M(K4)`.
pub fn rank3_full_lattice_check(o: &OrientedMatroid) -> Result<bool> {
    let m = o.underlying();
    if m.full_rank() != 3 {
        return Err(Error::precondition(format!("rank is {}, not 3", m.full_rank())));
    }
    if !is_simple(m) {
        return Err(Error::precondition("matroid is not simple"));
    }
    if !is_cosimple(m) {
        return Err(Error::precondition("matroid is not cosimple"));
    }
    if m.same_rank_function(&Matroid::uniform(3, m.size())?) {
        return Err(Error::precondition("matroid is uniform"));
    }
    if m.size() == 6 && is_isomorphic(m, &Matroid::graphic(&crate::graph::named_graph("k4")?)?)?.is_some() {
        return Err(Error::precondition("matroid is M(K4)"));
    }
    Ok(o.flow_lattice()?.is_full())
}
