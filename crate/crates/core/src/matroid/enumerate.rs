//! Circuits, closures, flats and copoint partitions.

use rayon::prelude::*;
use serde::Serialize;

use super::Matroid;
use crate::bits;
use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Flat {
    pub elements: u64,
    pub rank: usize,
}

pub fn closure(m: &Matroid, s: u64) -> u64 {
    let r = m.rank(s);
    let mut out = s;
    for e in bits::elements(m.ground() & !s) {
        if m.rank(s | bits::bit(e)) == r {
            out |= bits::bit(e);
        }
    }
    out
}

pub fn is_flat(m: &Matroid, s: u64) -> bool {
    closure(m, s) == s
}

/// All circuits, sorted by size then mask.
pub fn circuits(m: &Matroid) -> Result<Vec<u64>> {
    check_cap("circuit enumeration ground size", Caps::global().circuits, m.size())?;
    circuits_within(m, m.ground())
}

/// Circuits contained in `within`, sorted by size then mask.
pub fn circuits_within(m: &Matroid, within: u64) -> Result<Vec<u64>> {
    let k = bits::count(within);
    check_cap("circuit enumeration ground size", Caps::global().circuits, k)?;
    let positions: Vec<usize> = bits::elements(within).collect();
    let sub = m.restrict(within)?.tabulated_if_small(super::TABLE_LIMIT);
    let r = sub.full_rank();
    let mut found: Vec<u64> = (1..=(r + 1).min(k))
        .into_par_iter()
        .flat_map_iter(|size| {
            let sub = &sub;
            bits::k_subsets(k, size).filter(move |&s| {
                sub.rank(s) + 1 == size && bits::elements(s).all(|e| sub.rank(s & !bits::bit(e)) + 1 == size)
            })
        })
        .map(|s| bits::expand(s, &positions))
        .collect();
    found.sort_by_key(|&c| bits::canonical_key(c));
    Ok(found)
}

/// Flats of rank `t`, each reported once, sorted by size then mask.
///
/// Every flat is the closure of its greedy (ascending) basis, so the
/// search visits independent `t`-sets and keeps a closure only when the
/// set is that greedy basis.
pub fn flats_of_rank(m: &Matroid, t: usize) -> Result<Vec<Flat>> {
    if t > m.full_rank() {
        return Err(Error::precondition(format!(
            "no flats of rank {t} in a matroid of rank {}",
            m.full_rank()
        )));
    }
    let n = m.size();
    let loops = m.loops();
    if t == 0 {
        return Ok(vec![Flat {
            elements: loops,
            rank: 0,
        }]);
    }
    let nonloops: Vec<usize> = (0..n).filter(|&e| !bits::contains(loops, e)).collect();
    // Seeds are independent prefixes of size at most two, which spreads the
    // work more evenly than splitting on the first element alone.
    let mut seeds = Vec::new();
    for (i, &a) in nonloops.iter().enumerate() {
        if t == 1 {
            seeds.push(bits::bit(a));
            continue;
        }
        for &b in &nonloops[i + 1..] {
            let s = bits::bit(a) | bits::bit(b);
            if m.rank(s) == 2 {
                seeds.push(s);
            }
        }
    }
    let mut out: Vec<Flat> = seeds
        .par_iter()
        .flat_map_iter(|&seed| {
            let mut local = Vec::new();
            let mut stack = vec![seed];
            extend(m, t, &nonloops, &mut stack, &mut local);
            local
        })
        .collect();
    out.sort_by_key(|f| bits::canonical_key(f.elements));
    Ok(out)
}

fn extend(m: &Matroid, t: usize, order: &[usize], stack: &mut Vec<u64>, out: &mut Vec<Flat>) {
    let cur = *stack.last().unwrap();
    let size = bits::count(cur);
    if size == t {
        let f = closure(m, cur);
        if is_greedy_basis(m, cur, f) {
            out.push(Flat { elements: f, rank: t });
        }
        return;
    }
    let top = 63 - cur.leading_zeros() as usize;
    for &e in order.iter().filter(|&&e| e > top) {
        let next = cur | bits::bit(e);
        if m.rank(next) == size + 1 {
            stack.push(next);
            extend(m, t, order, stack, out);
            stack.pop();
        }
    }
}

/// True if `b` is what the ascending greedy scan picks inside `flat`.
fn is_greedy_basis(m: &Matroid, b: u64, flat: u64) -> bool {
    for x in bits::elements(flat & !b) {
        let below = b & (bits::bit(x) - 1);
        if m.rank(below | bits::bit(x)) > bits::count(below) {
            return false;
        }
    }
    true
}

/// Copoints (`k = 1`) or colines (`k = 2`).
pub fn flats_of_corank(m: &Matroid, k: usize) -> Result<Vec<Flat>> {
    if m.full_rank() < k {
        return Err(Error::precondition(format!(
            "rank {} is below the requested corank {k}",
            m.full_rank()
        )));
    }
    flats_of_rank(m, m.full_rank() - k)
}

/// A coline with its copoint partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColineReport {
    pub coline: u64,
    /// Classes of `E \ L`, sorted by smallest element.
    pub classes: Vec<u64>,
    pub degree: usize,
    pub singular: usize,
    pub multiple: usize,
    pub positive: bool,
}

impl ColineReport {
    pub(crate) fn from_classes(coline: u64, mut classes: Vec<u64>) -> ColineReport {
        classes.sort_by_key(|c| c.trailing_zeros());
        let singular = classes.iter().filter(|&&c| bits::count(c) == 1).count();
        let multiple = classes.len() - singular;
        ColineReport {
            coline,
            degree: classes.len(),
            singular,
            multiple,
            positive: singular > multiple,
            classes,
        }
    }
}

/// Groups `E \ L` by the copoint `cl(L + x)`.
pub fn coline_report(m: &Matroid, coline: u64) -> Result<ColineReport> {
    if m.full_rank() < 2 || m.rank(coline) + 2 != m.full_rank() || !is_flat(m, coline) {
        return Err(Error::invalid(format!("{} is not a coline", bits::display(coline))));
    }
    let mut rest = m.ground() & !coline;
    let mut classes = Vec::new();
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        let copoint = closure(m, coline | bits::bit(x));
        let class = copoint & !coline;
        classes.push(class);
        rest &= !class;
    }
    Ok(ColineReport::from_classes(coline, classes))
}
