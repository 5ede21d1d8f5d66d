use super::*;
use crate::doublecirc::circuit_partition;
use crate::graph::{named_graph, MultiGraph};
use crate::matroid::is_isomorphic;

fn u24() -> OrientedMatroid {
    let a = RationalMatrix::from_columns(2, &[vec![1i64, 0], vec![0, 1], vec![1, 1], vec![1, 2]]).unwrap();
    orient_from_realization(&a, None).unwrap()
}

fn directed_triangle() -> OrientedMatroid {
    let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    realize_graphic(&g).unwrap()
}

fn vectors(fam: &[SignedSet], n: usize) -> Vec<Vec<i64>> {
    fam.iter().map(|s| s.to_vec(n)).collect()
}

#[test]
fn u24_from_columns() {
    let o = u24();
    assert!(o.underlying().same_rank_function(&Matroid::uniform(2, 4).unwrap()));
    assert_eq!(o.signed_circuits().len(), 4);
    let first = o.signed_circuits().iter().find(|c| c.support() == 0b0111).unwrap();
    assert_eq!(first.to_vec(4), vec![1, 1, -1, 0]);
}

#[test]
fn identity_is_free() {
    let a = RationalMatrix::from_rows(&[vec![1i64, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let o = orient_from_realization(&a, None).unwrap();
    assert!(o.signed_circuits().is_empty());
    assert_eq!(o.signed_cocircuits().unwrap().len(), 3);
}

#[test]
fn triangle_orientation() {
    let o = directed_triangle();
    assert_eq!(vectors(o.signed_circuits(), 3), vec![vec![1, 1, 1]]);
    let co = o.signed_cocircuits().unwrap();
    assert_eq!(co.len(), 3);
    assert!(co.iter().all(|c| bits::count(c.support()) == 2));
    assert!(o.check_orthogonality().unwrap());
}

#[test]
fn expected_mismatch_is_a_genericity_error() {
    let a = RationalMatrix::from_columns(2, &[vec![1i64, 0], vec![2, 0], vec![0, 1]]).unwrap();
    let err = orient_from_realization(&a, Some(&Matroid::uniform(2, 3).unwrap())).unwrap_err();
    assert!(matches!(err, Error::Genericity(_)));
}

#[test]
fn bicircular_realizations() {
    for seed in [1, 2, 99] {
        let t = realize_bicircular(&named_graph("theta(3)").unwrap(), seed).unwrap();
        assert!(t.underlying().same_rank_function(&Matroid::uniform(2, 3).unwrap()));
        let k4 = realize_bicircular(&named_graph("k4").unwrap(), seed).unwrap();
        assert!(is_isomorphic(k4.underlying(), &Matroid::uniform(4, 6).unwrap())
            .unwrap()
            .is_some());
        assert_eq!(k4.signed_circuits().len(), 6);
        assert!(k4.check_orthogonality().unwrap());
        let b = realize_bicircular(&named_graph("bouquet(2)").unwrap(), seed).unwrap();
        assert_eq!(b.signed_circuits().len(), 1);
        assert_eq!(b.signed_circuits()[0].support(), 0b11);
    }
}

#[test]
fn reorientation() {
    let o = u24();
    assert_eq!(o.reorient(0).signed_circuits(), o.signed_circuits());
    assert_eq!(o.reorient(0b1111).signed_circuits(), o.signed_circuits());
    let r = o.reorient(0b0001);
    let c = r.signed_circuits().iter().find(|c| c.support() == 0b0111).unwrap();
    assert_eq!(c.to_vec(4), vec![1, -1, 1, 0]);
    assert!(r.check_orthogonality().unwrap());
}

#[test]
fn cocircuits_of_u24() {
    let o = u24();
    let co = o.signed_cocircuits().unwrap();
    assert_eq!(co.len(), 4);
    assert!(co.iter().all(|c| bits::count(c.support()) == 3));
    assert!(o.check_orthogonality().unwrap());
}

#[test]
fn dual_swaps_families() {
    let o = realize_bicircular(&named_graph("k4").unwrap(), 5).unwrap();
    let d = o.dual().unwrap();
    assert_eq!(d.signed_circuits(), o.signed_cocircuits().unwrap());
    assert_eq!(d.signed_cocircuits().unwrap(), o.signed_circuits());
    assert_eq!(d.underlying().full_rank(), 2);
    assert!(d.check_orthogonality().unwrap());
}

#[test]
fn minors_match_realized_minors() {
    let o = realize_uniform(3, 6, 4).unwrap();
    let m = o.minor(0b000001, 0b000010).unwrap();
    assert!(m.underlying().same_rank_function(&Matroid::uniform(2, 4).unwrap()));
    assert_eq!(m.signed_circuits().len(), 4);
    assert!(m.check_orthogonality().unwrap());
}

#[test]
fn lattices() {
    assert!(u24().flow_lattice().unwrap().is_full());
    let t = directed_triangle().flow_lattice().unwrap();
    assert_eq!(t.rank(), 1);
    assert!(t.quick_contains(&[2, 2, 2]));
    assert!(!t.quick_contains(&[1, 1, 0]));
}

#[test]
fn small_flows() {
    let f = small_support_flow(&u24(), 2).unwrap().unwrap();
    assert_eq!(f.entries, vec![1, 0, 0, 0]);
    let u35 = realize_uniform(3, 5, 1).unwrap();
    let f = small_support_flow(&u35, 2).unwrap().unwrap();
    assert_eq!(bits::count(f.support()), 2);
    assert!(f.verify(&u35.flow_lattice().unwrap()));
    assert!(small_support_flow(&directed_triangle(), 2).unwrap().is_none());
}

#[test]
fn flows_from_double_circuits() {
    let o = u24();
    let report = circuit_partition(o.underlying(), 0b1111).unwrap();
    let f = flow_from_double_circuit(&o, &report).unwrap();
    assert_eq!(bits::count(f.support()), 1);
    assert!(f.verify(&o.flow_lattice().unwrap()));

    let b = realize_bicircular(&named_graph("bouquet(3)").unwrap(), 3).unwrap();
    let report = circuit_partition(b.underlying(), 0b111).unwrap();
    let f = flow_from_double_circuit(&b, &report).unwrap();
    assert_eq!(f.entries[2], 0);
    assert_eq!(f.entries[0].abs(), 1);
    assert_eq!(f.entries[1].abs(), 1);
}

#[test]
fn certificates() {
    let k4 = realize_bicircular(&named_graph("k4").unwrap(), 1).unwrap();
    let c = certify_cogsp(&k4, CertifyOptions::default()).unwrap();
    assert!(c.verdict);
    assert!(c.exhaustive);
    assert!(c.minors_checked > 0);
    assert!(c.reverify(&k4).unwrap());

    let t = directed_triangle();
    let c = certify_gsp(&t, CertifyOptions::default()).unwrap();
    assert!(c.verdict);
    assert!(c.reverify(&t).unwrap());
}

#[test]
fn nz3_examples() {
    let x = nz3_coflow(&directed_triangle()).unwrap().unwrap();
    assert_eq!(x.entries, vec![1, 1, -2]);
    let d = realize_bicircular(&named_graph("k4").unwrap(), 2)
        .unwrap()
        .dual()
        .unwrap();
    let x = nz3_coflow(&d).unwrap().unwrap();
    assert!(x.entries.iter().all(|v| (1..=2).contains(&v.abs())));
    let u12 = realize_uniform(1, 2, 0).unwrap();
    assert!(nz3_coflow(&u12).unwrap().is_some());
}

#[test]
fn rank3_check() {
    let a = RationalMatrix::from_columns(
        3,
        &[
            vec![1i64, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 2, 3],
            vec![2, 1, 5],
        ],
    )
    .unwrap();
    let o = orient_from_realization(&a, None).unwrap();
    assert!(rank3_full_lattice_check(&o).unwrap());
    let u36 = realize_uniform(3, 6, 1).unwrap();
    assert!(matches!(rank3_full_lattice_check(&u36), Err(Error::Precondition(_))));
    let k4 = realize_graphic(&named_graph("k4").unwrap()).unwrap();
    assert!(matches!(rank3_full_lattice_check(&k4), Err(Error::Precondition(_))));
}

#[test]
fn sweep_masks() {
    assert_eq!(reorientation_masks(3, 12, 5, 0), vec![0, 1, 2, 3]);
    let s = reorientation_masks(20, 12, 5, 7);
    assert_eq!(s.len(), 6);
    assert_eq!(s, reorientation_masks(20, 12, 5, 7));
}
