//! Double circuits, their circuit partitions, and colines through duality.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};
use crate::matroid::{circuits, flats_of_corank, series_classes, ColineReport, Matroid};

/// A double circuit `D` with its circuit partition `D_1, .., D_k`: the
/// circuits inside `D` are exactly the sets `D \ D_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DoubleCircuitReport {
    #[serde(rename = "D")]
    pub set: u64,
    /// Sorted by smallest element.
    pub classes: Vec<u64>,
    pub degree: usize,
    pub singular: usize,
    pub multiple: usize,
    pub positive: bool,
}

impl DoubleCircuitReport {
    fn new(set: u64, mut classes: Vec<u64>) -> Self {
        classes.sort_by_key(|c| c.trailing_zeros());
        let singular = classes.iter().filter(|&&c| bits::count(c) == 1).count();
        let multiple = classes.len() - singular;
        DoubleCircuitReport {
            set,
            degree: classes.len(),
            singular,
            multiple,
            positive: singular > multiple,
            classes,
        }
    }

    pub fn singular_classes(&self) -> impl Iterator<Item = u64> + '_ {
        self.classes.iter().copied().filter(|&c| bits::count(c) == 1)
    }

    /// The circuits contained in `D`.
    pub fn circuits(&self) -> Vec<u64> {
        self.classes.iter().map(|&c| self.set & !c).collect()
    }
}

/// `r(D) = |D| - 2` and no element of `D` is a coloop of `M|D`.
pub fn is_double_circuit(m: &Matroid, d: u64) -> bool {
    let k = bits::count(d);
    if k < 2 {
        return false;
    }
    let r = m.rank(d);
    r + 2 == k && bits::elements(d).all(|e| m.rank(d & !bits::bit(e)) == r)
}

/// Computes the circuit partition of a double circuit.
///
/// For `e ∈ D` the set `D - e` has nullity one, so it holds a unique
/// circuit `C_e`, namely the elements whose removal keeps the rank; the
/// class of `e` is `D \ C_e`.
///
/// # Panics
/// If the classes fail to partition `D` into complements of circuits,
/// which the theory rules out.
pub fn circuit_partition(m: &Matroid, d: u64) -> Result<DoubleCircuitReport> {
    if !is_double_circuit(m, d) {
        return Err(Error::invalid(format!("{} is not a double circuit", bits::display(d))));
    }
    let mut rest = d;
    let mut classes = Vec::new();
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        let without = d & !bits::bit(e);
        let r = m.rank(without);
        let circuit = bits::elements(without)
            .filter(|&x| m.rank(without & !bits::bit(x)) == r)
            .fold(0u64, |a, x| a | bits::bit(x));
        let class = d & !circuit;
        assert!(
            class & !rest == 0 && class & bits::bit(e) != 0,
            "circuit partition of {} is not a partition",
            bits::display(d)
        );
        assert!(
            m.is_circuit(circuit),
            "complement of a class of {} is not a circuit",
            bits::display(d)
        );
        classes.push(class);
        rest &= !class;
    }
    Ok(DoubleCircuitReport::new(d, classes))
}

/// Which disjunct of the flow hypothesis on double circuits holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowHypothesis {
    /// Even degree and at least one singular class.
    EvenOneSingular,
    /// Odd degree and at least two singular classes.
    OddTwoSingular,
    None,
}

pub fn flowable_hypothesis(report: &DoubleCircuitReport) -> FlowHypothesis {
    match (report.degree.is_multiple_of(2), report.singular) {
        (true, s) if s >= 1 => FlowHypothesis::EvenOneSingular,
        (false, s) if s >= 2 => FlowHypothesis::OddTwoSingular,
        _ => FlowHypothesis::None,
    }
}

/// All double circuits as complements of the colines of the dual.
pub fn enumerate_double_circuits(m: &Matroid) -> Result<Vec<DoubleCircuitReport>> {
    check_cap(
        "double circuit enumeration (dual route) ground size",
        Caps::global().dc_dual,
        m.size(),
    )?;
    let dual = m.dual();
    if dual.full_rank() < 2 {
        return Ok(Vec::new());
    }
    let colines = flats_of_corank(&dual, 2)?;
    let g = m.ground();
    let mut out: Vec<DoubleCircuitReport> = colines
        .par_iter()
        .map(|f| circuit_partition(m, g & !f.elements))
        .collect::<Result<_>>()?;
    out.sort_by_key(|r| bits::canonical_key(r.set));
    Ok(out)
}

/// All double circuits as unions of two circuits. Used to cross-check
/// the dual route on small ground sets.
pub fn enumerate_double_circuits_direct(m: &Matroid) -> Result<Vec<DoubleCircuitReport>> {
    check_cap(
        "double circuit enumeration (direct route) ground size",
        Caps::global().dc_direct,
        m.size(),
    )?;
    let cs = circuits(m)?;
    let sets: HashSet<u64> = (0..cs.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let cs = &cs;
            (i + 1..cs.len())
                .map(move |j| cs[i] | cs[j])
                .filter(|&d| is_double_circuit(m, d))
        })
        .collect();
    let mut sets: Vec<u64> = sets.into_iter().collect();
    sets.sort_by_key(|&d| bits::canonical_key(d));
    sets.into_iter().map(|d| circuit_partition(m, d)).collect()
}

/// Coline of `M` corresponding to a double circuit of `M*`.
pub fn coline_from_dual_double_circuit(m: &Matroid, report: &DoubleCircuitReport) -> ColineReport {
    ColineReport::from_classes(m.ground() & !report.set, report.classes.clone())
}

/// All colines of `M` with their copoint partitions, via double circuits
/// of the dual.
pub fn colines_via_dual(m: &Matroid) -> Result<Vec<ColineReport>> {
    let mut out: Vec<ColineReport> = enumerate_double_circuits(&m.dual())?
        .iter()
        .map(|r| coline_from_dual_double_circuit(m, r))
        .collect();
    out.sort_by_key(|c| bits::canonical_key(c.coline));
    Ok(out)
}

/// Positive colines of `M`.
pub fn positive_colines(m: &Matroid) -> Result<Vec<ColineReport>> {
    Ok(colines_via_dual(m)?.into_iter().filter(|c| c.positive).collect())
}

/// Series classes of `M|D` and the uniform matroid `U_{k-2,k}` obtained by
/// contracting all but one element of each class.
///
/// # Panics
/// If the contraction is not `U_{k-2,k}`.
pub fn series_to_uniform(m: &Matroid, d: u64) -> Result<(Vec<u64>, (usize, usize))> {
    let report = circuit_partition(m, d)?;
    let positions: Vec<usize> = bits::elements(d).collect();
    let restricted = m.restrict(d)?;
    let sc = series_classes(&restricted);
    let classes: Vec<u64> = sc.classes.iter().map(|&c| bits::expand(c, &positions)).collect();
    let contract = sc.classes.iter().fold(0u64, |a, &c| a | (c & (c - 1)));
    let small = restricted.contract(contract)?;
    let k = classes.len();
    assert!(
        k >= 2 && k == report.degree,
        "series classes of {} disagree with its degree",
        bits::display(d)
    );
    let uniform = Matroid::uniform(k - 2, k)?;
    assert!(
        small.same_rank_function(&uniform),
        "contracting the series classes of {} does not give U_{{{},{}}}",
        bits::display(d),
        k - 2,
        k
    );
    Ok((classes, (k - 2, k)))
}

/// Double circuit formed by two circuits whose symmetric difference has
/// two elements.
pub fn symdiff_pair_to_double_circuit(m: &Matroid, c1: u64, c2: u64) -> Result<DoubleCircuitReport> {
    if !m.is_circuit(c1) || !m.is_circuit(c2) {
        return Err(Error::invalid("both sets must be circuits"));
    }
    if bits::count(c1 ^ c2) != 2 {
        return Err(Error::invalid(
            "the symmetric difference must have exactly two elements",
        ));
    }
    let report = circuit_partition(m, c1 | c2)?;
    let d = c1 | c2;
    for single in [d & !c1, d & !c2] {
        assert!(
            report.classes.contains(&single),
            "{} is not a singular class",
            bits::display(single)
        );
    }
    Ok(report)
}

/// Two circuits `D \ D_i`, `D \ D_j` for the first two singular classes.
pub fn double_circuit_to_symdiff_pair(report: &DoubleCircuitReport) -> Result<(u64, u64)> {
    let singles: Vec<u64> = report.singular_classes().take(2).collect();
    if singles.len() < 2 {
        return Err(Error::invalid("the double circuit has fewer than two singular classes"));
    }
    Ok((report.set & !singles[0], report.set & !singles[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use crate::matroid::{coline_report, flats_of_corank};

    fn k4() -> Matroid {
        Matroid::graphic(&named_graph("k4").unwrap()).unwrap()
    }

    #[test]
    fn recognition() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(is_double_circuit(&u, 0b1111));
        assert!(!is_double_circuit(&u, 0b0111));
        let m = k4();
        let brute: Vec<u64> = (0..64u64).filter(|&s| is_double_circuit(&m, s)).collect();
        assert_eq!(brute.len(), 6);
        assert!(brute.iter().all(|&d| bits::count(d) == 5));
    }

    #[test]
    fn partitions() {
        let r = circuit_partition(&Matroid::uniform(2, 4).unwrap(), 0b1111).unwrap();
        assert_eq!((r.degree, r.singular, r.positive), (4, 4, true));

        let ext = Matroid::uniform(2, 4).unwrap().series_extension(0).unwrap();
        let r = circuit_partition(&ext, 0b11111).unwrap();
        assert_eq!(r.classes, vec![0b10001, 0b00010, 0b00100, 0b01000]);
        assert_eq!((r.degree, r.singular, r.multiple, r.positive), (4, 3, 1, true));

        let b = Matroid::bicircular(&named_graph("bouquet(3)").unwrap()).unwrap();
        let r = circuit_partition(&b, 0b111).unwrap();
        assert_eq!((r.degree, r.singular, r.positive), (3, 3, true));
        assert!(circuit_partition(&b, 0b011).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let u = enumerate_double_circuits(&Matroid::uniform(2, 4).unwrap()).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].set, 0b1111);
        let k = enumerate_double_circuits(&k4()).unwrap();
        assert_eq!(k.len(), 6);
        assert_eq!(k, enumerate_double_circuits_direct(&k4()).unwrap());
    }

    #[test]
    fn positive_coline_examples() {
        let u = Matroid::uniform(3, 6).unwrap();
        let pos = positive_colines(&u).unwrap();
        assert_eq!(pos.len(), 6);
        assert!(pos.iter().all(|c| c.degree == 5 && c.singular == 5));
        assert!(positive_colines(&k4()).unwrap().is_empty());
    }

    #[test]
    fn dual_bridge_on_k4() {
        let m = k4();
        let direct: Vec<ColineReport> = flats_of_corank(&m, 2)
            .unwrap()
            .iter()
            .map(|f| coline_report(&m, f.elements).unwrap())
            .collect();
        assert_eq!(direct, colines_via_dual(&m).unwrap());
    }

    #[test]
    fn series_structure() {
        let (classes, t) = series_to_uniform(&Matroid::uniform(2, 4).unwrap(), 0b1111).unwrap();
        assert_eq!((classes.len(), t), (4, (2, 4)));
        let ext = Matroid::uniform(2, 4).unwrap().series_extension(0).unwrap();
        let (classes, t) = series_to_uniform(&ext, 0b11111).unwrap();
        assert_eq!(classes, vec![0b10001, 0b00010, 0b00100, 0b01000]);
        assert_eq!(t, (2, 4));
        // Two vertices with two loops each: two disjoint circuits.
        let g = crate::graph::parse_edge_list("0 0\n0 0\n1 1\n1 1").unwrap();
        let b = Matroid::bicircular(&g).unwrap();
        let (classes, t) = series_to_uniform(&b, 0b1111).unwrap();
        assert_eq!(classes, vec![0b0011, 0b1100]);
        assert_eq!(t, (0, 2));
    }

    #[test]
    fn symdiff_round_trip() {
        let u = Matroid::uniform(2, 4).unwrap();
        let r = symdiff_pair_to_double_circuit(&u, 0b0111, 0b1011).unwrap();
        assert_eq!(r.set, 0b1111);
        assert!(r.classes.contains(&0b1000) && r.classes.contains(&0b0100));
        let (c1, c2) = double_circuit_to_symdiff_pair(&r).unwrap();
        assert!(u.is_circuit(c1) && u.is_circuit(c2));
        assert_eq!(bits::count(c1 ^ c2), 2);
        assert!(symdiff_pair_to_double_circuit(&u, 0b0111, 0b0111).is_err());
    }

    #[test]
    fn hypotheses() {
        let mk = |sizes: &[u32]| {
            let mut classes = Vec::new();
            let mut next = 0;
            for &s in sizes {
                classes.push(((1u64 << s) - 1) << next);
                next += s;
            }
            DoubleCircuitReport::new((1u64 << next) - 1, classes)
        };
        assert_eq!(flowable_hypothesis(&mk(&[1, 1, 1, 1])), FlowHypothesis::EvenOneSingular);
        assert_eq!(
            flowable_hypothesis(&mk(&[1, 1, 2, 2, 2])),
            FlowHypothesis::OddTwoSingular
        );
        assert_eq!(flowable_hypothesis(&mk(&[1, 2, 2, 2, 2])), FlowHypothesis::None);
    }
}
