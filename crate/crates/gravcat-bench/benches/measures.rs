use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gravcat_bench::{cold_state, reference_params, reference_point, reference_state};
use gravcat_core::{
    compare_measures, dense_eigh, lqu, minimize_skew, partition_function, thermal_state,
    MinimizeConfig,
};

fn bench_thermal_state(c: &mut Criterion) {
    let params = reference_params();
    let at = reference_point();
    c.bench_function("thermal_state", |b| {
        b.iter(|| thermal_state(black_box(&params), black_box(at)).unwrap())
    });
}

fn bench_block_sqrt(c: &mut Criterion) {
    let warm = reference_state();
    let cold = cold_state();
    c.bench_function("block_sqrt_warm", |b| {
        b.iter(|| black_box(&warm).sqrt().unwrap())
    });
    c.bench_function("block_sqrt_cold", |b| {
        b.iter(|| black_box(&cold).sqrt().unwrap())
    });
}

fn bench_dense_eigh(c: &mut Criterion) {
    let dense = reference_state().to_dense();
    c.bench_function("dense_eigh", |b| {
        b.iter(|| dense_eigh(black_box(&dense)).unwrap())
    });
}

fn bench_lqu_closed_form(c: &mut Criterion) {
    let state = reference_state();
    c.bench_function("lqu_closed_form", |b| {
        b.iter(|| lqu(black_box(&state)).unwrap())
    });
}

fn bench_compare_measures(c: &mut Criterion) {
    let state = reference_state();
    c.bench_function("compare_measures", |b| {
        b.iter(|| compare_measures(black_box(&state)).unwrap())
    });
}

fn bench_minimize_skew(c: &mut Criterion) {
    let state = reference_state();
    let config = MinimizeConfig::default();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    group.bench_function("minimize_skew", |b| {
        b.iter(|| minimize_skew(black_box(&state), black_box(config)).unwrap())
    });
    group.finish();
}

// One full sweep row without the CSV layer: state, partition function, and
// both measure variants. This is the unit the sweep command parallelizes.
fn bench_point(c: &mut Criterion) {
    let params = reference_params();
    let at = reference_point();
    c.bench_function("point_row", |b| {
        b.iter(|| {
            let state = thermal_state(black_box(&params), black_box(at)).unwrap();
            let z = partition_function(&params, at).unwrap();
            let measures = compare_measures(&state).unwrap();
            black_box((z, measures))
        })
    });
}

criterion_group!(
    benches,
    bench_thermal_state,
    bench_block_sqrt,
    bench_dense_eigh,
    bench_lqu_closed_form,
    bench_compare_measures,
    bench_minimize_skew,
    bench_point,
);
criterion_main!(benches);
