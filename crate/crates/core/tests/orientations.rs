use gspkit::bits;
use gspkit::catalog::graph_catalog;
use gspkit::doublecirc::{enumerate_double_circuits, flowable_hypothesis, FlowHypothesis};
use gspkit::oriented::{
    certify_cogsp, certify_gsp, flow_from_double_circuit, realize_bicircular, realize_lattice_path, realize_uniform,
    reorientation_masks, small_support_flow, CertifyOptions,
};
use gspkit::LatticePathBounds;

fn pair_flow_exists(o: &gspkit::OrientedMatroid, e: usize, f: usize) -> bool {
    let l = o.flow_lattice().unwrap();
    [1i64, -1].iter().any(|&s| {
        let mut x = vec![0i64; o.size()];
        x[e] = 1;
        x[f] = s;
        l.quick_contains(&x)
    })
}

#[test]
fn even_rank_uniform_singleton_flows() {
    for (r, n) in [(2, 4), (2, 5), (4, 6)] {
        let o = realize_uniform(r, n, 1).unwrap();
        for mask in reorientation_masks(n, 0, 50, 7) {
            let l = o.reorient(mask).flow_lattice().unwrap();
            assert!(l.is_full(), "U({r},{n}) reoriented by {mask:#b}");
            for e in 0..n {
                let mut x = vec![0i64; n];
                x[e] = 1;
                assert!(l.quick_contains(&x));
            }
        }
    }
}

#[test]
fn odd_rank_uniform_pair_flows() {
    for (r, n) in [(1, 3), (3, 5), (3, 6)] {
        let o = realize_uniform(r, n, 1).unwrap();
        for mask in reorientation_masks(n, 0, 50, 11) {
            let ro = o.reorient(mask);
            for e in 0..n {
                for f in e + 1..n {
                    assert!(pair_flow_exists(&ro, e, f), "U({r},{n}) pair {e},{f} mask {mask:#b}");
                }
            }
        }
    }
}

#[test]
fn flows_from_flowable_double_circuits() {
    let mut checked = 0;
    for entry in graph_catalog(3, 12) {
        let g = &entry.graph;
        if g.edge_count() > 10 {
            continue;
        }
        let o = realize_bicircular(g, 5).unwrap();
        let lattice = o.flow_lattice().unwrap();
        for report in enumerate_double_circuits(o.underlying()).unwrap() {
            if flowable_hypothesis(&report) == FlowHypothesis::None {
                continue;
            }
            let flow = flow_from_double_circuit(&o, &report).unwrap();
            let support = flow.support();
            assert!(flow.verify(&lattice), "{}: {}", entry.name, bits::display(report.set));
            assert!(support != 0 && support & !report.set == 0);
            assert!(bits::count(support) <= 2);
            assert!(flow.entries.iter().all(|x| x.abs() <= 1));
            assert!(small_support_flow(&o, 2).unwrap().is_some());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn small_bicircular_orientations_are_cogsp() {
    let mut certified = 0;
    for entry in graph_catalog(1, 40) {
        let g = &entry.graph;
        if g.edge_count() > 9 || g.vertex_count() == 0 || g.min_degree() < 3 {
            continue;
        }
        let o = realize_bicircular(g, 1).unwrap();
        for mask in reorientation_masks(g.edge_count(), 0, 3, 2) {
            let ro = o.reorient(mask);
            let cert = certify_cogsp(&ro, CertifyOptions::default()).unwrap();
            assert!(
                cert.verdict,
                "{} reoriented by {mask:#b}: {:?}",
                entry.name, cert.failing_minor
            );
            assert!(cert.exhaustive);
            assert!(cert.reverify(&ro).unwrap());
            certified += 1;
        }
    }
    assert!(certified >= 20);
}

#[test]
fn lattice_path_orientations_are_gsp() {
    for (upper, lower) in [("NNEE", "EENN"), ("NENE", "ENEN"), ("NNENE", "ENENN")] {
        let b = LatticePathBounds::new(upper, lower).unwrap();
        let o = realize_lattice_path(&b, 3).unwrap();
        for mask in reorientation_masks(o.size(), 6, 0, 0) {
            let cert = certify_gsp(&o.reorient(mask), CertifyOptions::default()).unwrap();
            assert!(cert.verdict, "{upper},{lower} mask {mask:#b}");
        }
    }
}

/// Whether the two certificates ever disagree is open; record, don't assert.
#[test]
fn gsp_and_cogsp_divergences_are_recorded() {
    let mut divergent = Vec::new();
    let mut total = 0;
    for entry in graph_catalog(2, 10) {
        let g = &entry.graph;
        if g.edge_count() > 8 {
            continue;
        }
        let o = realize_bicircular(g, 2).unwrap();
        let gsp = certify_gsp(&o, CertifyOptions::default()).unwrap();
        let cogsp = certify_cogsp(&o, CertifyOptions::default()).unwrap();
        total += 1;
        if gsp.verdict != cogsp.verdict {
            divergent.push((entry.name.clone(), gsp.verdict, cogsp.verdict));
        }
    }
    eprintln!("GSP/coGSP divergences among {total} orientations: {divergent:?}");
    assert!(total > 0);
}
