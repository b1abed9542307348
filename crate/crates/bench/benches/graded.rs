use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use godeaux_core::arith::rat;
use godeaux_core::scenarios::{sc_data, sc_predicate, z3_data, z4_presentation, z5_invariant_presentation};

fn quotient_tables(c: &mut Criterion) {
    let z3 = z3_data().unwrap().specialize(&[rat(1, 1), rat(1, 1), rat(1, 1)]).unwrap();
    let z4 = z4_presentation(42, 8).unwrap().presentation;
    let z5 = z5_invariant_presentation().unwrap();
    let mut group = c.benchmark_group("hilbert");
    group.sample_size(10);
    for d in [6u32, 9, 12] {
        group.bench_with_input(BenchmarkId::new("z3", d), &d, |b, &d| b.iter(|| z3.hilbert(d).unwrap()));
        group.bench_with_input(BenchmarkId::new("z4", d), &d, |b, &d| b.iter(|| z4.hilbert(d).unwrap()));
        group.bench_with_input(BenchmarkId::new("z5", d), &d, |b, &d| b.iter(|| z5.hilbert(d).unwrap()));
    }
    group.finish();
}

fn symbolic_membership(c: &mut Criterion) {
    let data = z3_data().unwrap();
    let ideal = data.presentation.restrict(&["f0", "f1", "f2", "h0"]).unwrap();
    let target = &data.parse("x2^2").unwrap() * data.relation("H0");
    c.bench_function("membership/x2sq-H0", |b| b.iter(|| ideal.reduces_to_zero(&target).unwrap().unwrap()));
}

fn glued_subring(c: &mut Criterion) {
    let pred = sc_predicate(&sc_data().unwrap()).unwrap();
    let mut group = c.benchmark_group("subring");
    group.sample_size(10);
    group.bench_function("subspaces/12", |b| b.iter(|| pred.subspaces(12).unwrap()));
    group.bench_function("presentation/10", |b| b.iter(|| pred.presentation(10).unwrap()));
    group.finish();
}

criterion_group!(benches, quotient_tables, symbolic_membership, glued_subring);
criterion_main!(benches);
