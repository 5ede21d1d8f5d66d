use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gspkit::doublecirc::{enumerate_double_circuits, enumerate_double_circuits_direct};
use gspkit::matroid::circuits;
use gspkit::oriented::{certify_cogsp, nz3_coflow, realize_bicircular, CertifyOptions};
use gspkit::IntegerLattice;
use gspkit_bench::{bicircular, graph, lattice_generators, GRAPHS};

fn rank_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("bicircular_rank");
    for name in GRAPHS {
        let m = bicircular(name);
        let g = m.ground();
        group.bench_with_input(BenchmarkId::from_parameter(name), &m, |b, m| {
            b.iter(|| {
                (0..256u64)
                    .map(|i| m.rank(i.wrapping_mul(0x9e37_79b9_7f4a_7c15) & g))
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn circuit_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("circuits");
    for name in ["k4", "prism(3)", "wheel(5)"] {
        let m = bicircular(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &m, |b, m| {
            b.iter(|| circuits(m).unwrap())
        });
    }
    group.finish();
}

fn double_circuits(c: &mut Criterion) {
    let mut group = c.benchmark_group("double_circuits");
    group.sample_size(10);
    for name in ["prism(3)", "petersen"] {
        let m = bicircular(name);
        group.bench_with_input(BenchmarkId::new("dual", name), &m, |b, m| {
            b.iter(|| enumerate_double_circuits(m).unwrap())
        });
    }
    let m = bicircular("prism(3)");
    group.bench_function("direct/prism(3)", |b| {
        b.iter(|| enumerate_double_circuits_direct(&m).unwrap())
    });
    group.finish();
}

fn lattices(c: &mut Criterion) {
    let gens = lattice_generators(10, 40);
    c.bench_function("hnf/10x40", |b| b.iter(|| IntegerLattice::from_i64(10, &gens).unwrap()));
    let l = IntegerLattice::from_i64(10, &gens).unwrap();
    let x: Vec<i64> = (0..10).map(|i| i % 3 - 1).collect();
    c.bench_function("membership/10", |b| b.iter(|| l.contains_i64(&x).unwrap()));
}

fn certification(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify");
    group.sample_size(10);
    for name in ["k4", "prism(3)"] {
        let o = realize_bicircular(&graph(name), 1).unwrap();
        group.bench_with_input(BenchmarkId::new("cogsp", name), &o, |b, o| {
            b.iter(|| certify_cogsp(o, CertifyOptions::default()).unwrap())
        });
    }
    let d = realize_bicircular(&graph("prism(3)"), 1).unwrap().dual().unwrap();
    group.bench_function("nz3/prism(3)*", |b| b.iter(|| nz3_coflow(&d).unwrap()));
    group.finish();
}

criterion_group!(
    benches,
    rank_oracle,
    circuit_enumeration,
    double_circuits,
    lattices,
    certification
);
criterion_main!(benches);
