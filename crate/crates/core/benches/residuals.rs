use std::hint::black_box;

use alia_core::constructions::drinfeld_double;
use alia_core::exec::sequential;
use alia_core::fixtures::{fix_a4, fix_d4, fix_n4, fix_s4};
use alia_core::generate::{antisymmetric_tensor, random_map, rng};
use alia_core::laws::{check_left_alia, check_nijenhuis_left_alia_bialgebra};
use alia_core::yang_baxter::{alia_ybe_residual, check_coboundary_conditions, delta_r};
use alia_core::{Algebra, LinearMap, Scalar, TwoTensor};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

struct Workload {
    big: Algebra,
    nij: LinearMap,
    r: TwoTensor,
}

fn workload() -> Workload {
    let double = drinfeld_double(&fix_a4(), &fix_d4(), Some((&fix_n4(), &fix_s4()))).unwrap();
    let mut g = rng(1);
    let n = double.big.dim();
    Workload {
        r: antisymmetric_tensor(&mut g, n),
        nij: double.nij.unwrap(),
        big: double.big,
    }
}

fn compare<F: Fn() -> bool>(c: &mut Criterion, name: &str, f: F) {
    let mut group = c.benchmark_group(name);
    group.sample_size(20);
    group.bench_function(BenchmarkId::new("parallel", 8), |b| {
        b.iter(|| black_box(f()))
    });
    group.bench_function(BenchmarkId::new("sequential", 8), |b| {
        b.iter(|| sequential(|| black_box(f())))
    });
    group.finish();
}

fn residuals(c: &mut Criterion) {
    let w = workload();
    let coproduct = delta_r(&w.big, &w.r).unwrap();
    let scalar = LinearMap::scalar(w.big.dim(), &Scalar::from_int(2));
    let mut g = rng(2);
    let other = random_map(&mut g, w.big.dim());

    compare(c, "left-alia", || check_left_alia(&w.big).passed());
    compare(c, "ybe", || {
        alia_ybe_residual(&w.big, &w.r).unwrap().passed()
    });
    compare(c, "nijenhuis-bialgebra", || {
        check_nijenhuis_left_alia_bialgebra(&w.big, &coproduct, &w.nij, &other)
            .unwrap()
            .passed()
    });
    compare(c, "coboundary-nijenhuis", || {
        check_coboundary_conditions(&w.big, &scalar, &scalar, &w.r)
            .unwrap()
            .passed()
    });
}

criterion_group!(benches, residuals);
criterion_main!(benches);
