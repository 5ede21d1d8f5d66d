//! Clone pairs and clone reducibility.

use std::collections::{HashMap, HashSet};

use super::{circuits, Matroid, MinorWitness};
use crate::bits;
use crate::caps::Caps;
use crate::error::{check_cap, Result};

fn swap(c: u64, e: usize, f: usize) -> u64 {
    (c & !bits::bit(e)) | bits::bit(f)
}

/// True if transposing `e` and `f` maps `family` (restricted to subsets of
/// `within`) onto itself.
fn clones_in(family: &HashSet<u64>, list: &[u64], within: u64, e: usize, f: usize) -> bool {
    let (be, bf) = (bits::bit(e), bits::bit(f));
    list.iter()
        .filter(|&&c| c & within == c)
        .all(|&c| match (c & be != 0, c & bf != 0) {
            (true, false) => family.contains(&swap(c, e, f)),
            (false, true) => family.contains(&swap(c, f, e)),
            _ => true,
        })
}

/// All pairs `(e, f)`, `e < f`, whose transposition is an automorphism.
pub fn clone_pairs(m: &Matroid) -> Result<Vec<(usize, usize)>> {
    check_cap("clone pair ground size", Caps::global().clone_pairs, m.size())?;
    let list = circuits(m)?;
    let family: HashSet<u64> = list.iter().copied().collect();
    let n = m.size();
    let loops = m.loops();
    let coloops = m.coloops();
    let mut out = Vec::new();
    for e in 0..n {
        for f in e + 1..n {
            if bits::contains(loops, e) != bits::contains(loops, f)
                || bits::contains(coloops, e) != bits::contains(coloops, f)
            {
                continue;
            }
            if clones_in(&family, &list, m.ground(), e, f) {
                out.push((e, f));
            }
        }
    }
    Ok(out)
}

/// An ordering `e_1, .., e_n` in which every `e_i` (`i ≥ 2`) has a clone
/// in the restriction to `{e_1, .., e_i}`, or is a loop or coloop there.
pub fn clone_reduction_order(m: &Matroid) -> Result<Option<Vec<usize>>> {
    check_cap("clone reduction ground size", Caps::global().clone_order, m.size())?;
    let m = m.tabulated_if_small(16);
    let list = circuits(&m)?;
    let family: HashSet<u64> = list.iter().copied().collect();
    let mut dead: HashSet<u64> = HashSet::new();
    let mut removed = Vec::new();
    if reduce(&m, &family, &list, m.ground(), &mut dead, &mut removed) {
        let rest = m.ground() & !removed.iter().fold(0u64, |a, &e| a | bits::bit(e));
        let mut order: Vec<usize> = bits::elements(rest).collect();
        order.extend(removed.iter().rev());
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

fn removable(m: &Matroid, family: &HashSet<u64>, list: &[u64], s: u64, e: usize) -> bool {
    let without = s & !bits::bit(e);
    if m.rank(bits::bit(e)) == 0 || m.rank(without) < m.rank(s) {
        return true;
    }
    bits::elements(without).any(|f| clones_in(family, list, s, e, f))
}

fn reduce(
    m: &Matroid,
    family: &HashSet<u64>,
    list: &[u64],
    s: u64,
    dead: &mut HashSet<u64>,
    removed: &mut Vec<usize>,
) -> bool {
    if bits::count(s) <= 1 {
        return true;
    }
    if dead.contains(&s) {
        return false;
    }
    for e in bits::elements(s).collect::<Vec<_>>().into_iter().rev() {
        if removable(m, family, list, s, e) {
            removed.push(e);
            if reduce(m, family, list, s & !bits::bit(e), dead, removed) {
                return true;
            }
            removed.pop();
        }
    }
    dead.insert(s);
    false
}

fn table_has_clone(n: usize, ranks: &[u8]) -> bool {
    for e in 0..n {
        for f in e + 1..n {
            let rest = bits::full(n) & !bits::bit(e) & !bits::bit(f);
            if bits::submasks(rest).all(|t| ranks[(t | bits::bit(e)) as usize] == ranks[(t | bits::bit(f)) as usize]) {
                return true;
            }
        }
    }
    false
}

/// A minor with at least two elements, no loops, no coloops and no clone
/// pair, if one exists. Minors are deduplicated by rank table.
pub fn find_clone_free_minor(m: &Matroid) -> Result<Option<MinorWitness>> {
    check_cap(
        "exhaustive clone check ground size",
        Caps::global().clone_exhaustive,
        m.size(),
    )?;
    let m = m.tabulated()?;
    let n = m.size();
    let mut seen: HashMap<(usize, Vec<u8>), bool> = HashMap::new();
    // Every (delete, contract) pair is encoded by a base-3 digit string.
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut delete, mut contract) = (0u64, 0u64);
        let mut c = code;
        for e in 0..n {
            match c % 3 {
                1 => delete |= bits::bit(e),
                2 => contract |= bits::bit(e),
                _ => {}
            }
            c /= 3;
        }
        let k = n - bits::count(delete | contract);
        if k < 2 {
            continue;
        }
        let minor = m.minor(delete, contract)?;
        let ranks: Vec<u8> = (0..1u64 << k).map(|s| minor.rank(s) as u8).collect();
        let r = ranks[(1usize << k) - 1];
        let has_loop = (0..k).any(|e| ranks[1 << e] == 0);
        let has_coloop = (0..k).any(|e| ranks[((1usize << k) - 1) & !(1 << e)] < r);
        if has_loop || has_coloop {
            continue;
        }
        let key = (k, ranks);
        if let Some(&ok) = seen.get(&key) {
            if !ok {
                return Ok(Some(MinorWitness { delete, contract }));
            }
            continue;
        }
        let ok = table_has_clone(k, &key.1);
        seen.insert(key, ok);
        if !ok {
            return Ok(Some(MinorWitness { delete, contract }));
        }
    }
    Ok(None)
}

/// Checks directly that every minor with at least two elements and no
/// loops or coloops has a pair of clones.
pub fn is_clone_reducible_exhaustive(m: &Matroid) -> Result<bool> {
    Ok(find_clone_free_minor(m)?.is_none())
}
