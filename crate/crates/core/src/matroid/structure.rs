//! Parallel and series classes, simplification and cosimplification.

use serde::Serialize;

use super::Matroid;
use crate::bits;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesClasses {
    /// Partition of the ground set, sorted by smallest element.
    pub classes: Vec<u64>,
    /// Coloops; each one is a singleton class.
    pub coloops: u64,
}

/// A (co)simplified matroid and where its elements came from.
#[derive(Debug, Clone)]
pub struct Simplified {
    pub matroid: Matroid,
    /// `kept[i]` is the original id of element `i` of `matroid`.
    pub kept: Vec<usize>,
    /// For each original element, the index in `matroid` of the element
    /// standing for its class, or `None` if it was removed outright.
    pub representative: Vec<Option<usize>>,
}

fn classes_by(n: usize, eligible: u64, related: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut assigned = 0u64;
    let mut out = Vec::new();
    for e in 0..n {
        if bits::contains(assigned, e) {
            continue;
        }
        let mut class = bits::bit(e);
        if bits::contains(eligible, e) {
            for f in e + 1..n {
                if bits::contains(eligible, f) && !bits::contains(assigned, f) && related(e, f) {
                    class |= bits::bit(f);
                }
            }
        }
        assigned |= class;
        out.push(class);
    }
    out
}

/// Classes of mutually parallel non-loop elements; loops are singletons.
pub fn parallel_classes(m: &Matroid) -> Vec<u64> {
    let loops = m.loops();
    classes_by(m.size(), m.ground() & !loops, |e, f| {
        m.rank(bits::bit(e) | bits::bit(f)) == 1
    })
}

/// Classes of coparallel elements. Two non-coloops are in series when
/// deleting both drops the rank by exactly one.
pub fn series_classes(m: &Matroid) -> SeriesClasses {
    let g = m.ground();
    let coloops = m.coloops();
    let r = m.full_rank();
    let classes = classes_by(m.size(), g & !coloops, |e, f| {
        m.rank(g & !bits::bit(e) & !bits::bit(f)) + 1 == r
    });
    SeriesClasses { classes, coloops }
}

fn finish(m: &Matroid, delete: u64, contract: u64, classes: &[u64]) -> Result<Simplified> {
    let matroid = m.minor(delete, contract)?;
    let kept: Vec<usize> = bits::elements(m.ground() & !delete & !contract).collect();
    let mut representative = vec![None; m.size()];
    for &class in classes {
        let rep = class.trailing_zeros() as usize;
        if let Ok(idx) = kept.binary_search(&rep) {
            for e in bits::elements(class) {
                representative[e] = Some(idx);
            }
        }
    }
    Ok(Simplified {
        matroid,
        kept,
        representative,
    })
}

/// Deletes loops and all but the smallest element of each parallel class.
pub fn simplify(m: &Matroid) -> Result<Simplified> {
    let loops = m.loops();
    let classes = parallel_classes(m);
    let mut delete = loops;
    for &c in &classes {
        delete |= c & (c - 1);
    }
    finish(m, delete, 0, &classes)
}

/// Contracts coloops and all but the smallest element of each series class.
pub fn cosimplify(m: &Matroid) -> Result<Simplified> {
    let sc = series_classes(m);
    let mut contract = sc.coloops;
    for &c in &sc.classes {
        contract |= c & (c - 1);
    }
    finish(m, 0, contract, &sc.classes)
}

/// No loops and no parallel pairs.
pub fn is_simple(m: &Matroid) -> bool {
    m.loops() == 0 && parallel_classes(m).iter().all(|&c| bits::count(c) == 1)
}

/// No coloops and no series pairs.
pub fn is_cosimple(m: &Matroid) -> bool {
    let sc = series_classes(m);
    sc.coloops == 0 && sc.classes.iter().all(|&c| bits::count(c) == 1)
}
