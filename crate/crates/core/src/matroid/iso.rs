//! Isomorphism testing and M(K4)-minor search for small matroids.

use std::collections::HashSet;

use serde::Serialize;

use super::{circuits, Matroid};
use crate::bits;
use crate::caps::Caps;
use crate::error::{check_cap, Result};
use crate::graph::named_graph;

/// Per-element invariant: how many circuits of each size contain it.
fn signatures(n: usize, circs: &[u64]) -> Vec<Vec<usize>> {
    let mut sig = vec![vec![0usize; n + 2]; n];
    for &c in circs {
        let k = bits::count(c);
        for e in bits::elements(c) {
            sig[e][k] += 1;
        }
    }
    sig
}

/// A bijection `phi` with `phi[e]` the image of element `e`, or `None`.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Result<Option<Vec<usize>>> {
    let cap = Caps::global().isomorphism;
    check_cap("isomorphism ground size", cap, a.size())?;
    check_cap("isomorphism ground size", cap, b.size())?;
    if a.size() != b.size() || a.full_rank() != b.full_rank() {
        return Ok(None);
    }
    let ca = circuits(a)?;
    let cb = circuits(b)?;
    Ok(isomorphism_from_circuits(a.size(), &ca, &cb))
}

pub(crate) fn isomorphism_from_circuits(n: usize, ca: &[u64], cb: &[u64]) -> Option<Vec<usize>> {
    if ca.len() != cb.len() {
        return None;
    }
    let mut sa: Vec<usize> = ca.iter().map(|&c| bits::count(c)).collect();
    let mut sb: Vec<usize> = cb.iter().map(|&c| bits::count(c)).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let siga = signatures(n, ca);
    let sigb = signatures(n, cb);
    let mut ma = siga.clone();
    let mut mb = sigb.clone();
    ma.sort();
    mb.sort();
    if ma != mb {
        return None;
    }
    let target: HashSet<u64> = cb.iter().copied().collect();
    // Circuits of `a` grouped by their largest element: they are checked as
    // soon as that element is mapped.
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &c in ca {
        by_top[63 - c.leading_zeros() as usize].push(c);
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = 0u64;
    fn go(
        i: usize,
        n: usize,
        phi: &mut [usize],
        used: &mut u64,
        siga: &[Vec<usize>],
        sigb: &[Vec<usize>],
        by_top: &[Vec<u64>],
        target: &HashSet<u64>,
    ) -> bool {
        if i == n {
            return true;
        }
        for t in 0..n {
            if bits::contains(*used, t) || siga[i] != sigb[t] {
                continue;
            }
            phi[i] = t;
            let ok = by_top[i].iter().all(|&c| {
                let img = bits::elements(c).fold(0u64, |acc, e| acc | bits::bit(phi[e]));
                target.contains(&img)
            });
            if ok {
                *used |= bits::bit(t);
                if go(i + 1, n, phi, used, siga, sigb, by_top, target) {
                    return true;
                }
                *used &= !bits::bit(t);
            }
        }
        phi[i] = usize::MAX;
        false
    }
    go(0, n, &mut phi, &mut used, &siga, &sigb, &by_top, &target).then_some(phi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub delete: u64,
    pub contract: u64,
}

/// Searches for a minor isomorphic to M(K4).
///
/// Any minor of rank 3 can be written `M / I \ J` with `I` independent of
/// size `r - 3` and `J` coindependent, so it suffices to range over such
/// `I` and over 6-sets `T` disjoint from `I` with `r(T ∪ I) = r(M)`.
pub fn has_m_k4_minor(m: &Matroid) -> Result<Option<MinorWitness>> {
    check_cap("M(K4)-minor ground size", Caps::global().k4_minor, m.size())?;
    let n = m.size();
    let r = m.full_rank();
    if r < 3 || n < 6 || n - r < 3 {
        return Ok(None);
    }
    let k4 = Matroid::graphic(&named_graph("k4")?)?;
    let k4_circuits = circuits(&k4)?;
    let m = m.tabulated_if_small(16);
    let g = m.ground();
    for i in bits::k_subsets(n, r - 3) {
        if !m.is_independent(i) {
            continue;
        }
        let rest: Vec<usize> = bits::elements(g & !i).collect();
        for tc in bits::k_subsets(rest.len(), 6) {
            let t = bits::expand(tc, &rest);
            if m.rank(t | i) != r {
                continue;
            }
            let delete = g & !i & !t;
            let minor = m.minor(delete, i)?;
            // Quick filter: M(K4) has exactly four 3-circuits.
            let triangles = bits::k_subsets(6, 3).filter(|&s| minor.rank(s) == 2).count();
            if triangles != 4 || (0..6).any(|e| minor.rank(bits::bit(e)) == 0) {
                continue;
            }
            let cm = super::enumerate::circuits_within(&minor, minor.ground())?;
            if isomorphism_from_circuits(6, &cm, &k4_circuits).is_some() {
                return Ok(Some(MinorWitness { delete, contract: i }));
            }
        }
    }
    Ok(None)
}
