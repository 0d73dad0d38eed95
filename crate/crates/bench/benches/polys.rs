use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrook_core::ffmat::rank_distribution;
use qrook_core::placements::{hit_polys, rook_polys};
use qrook_core::verify::step_formulas;
use qrook_core::{FerrersBoard, HitMethod, StepMethod, StepSpec};

fn rook(c: &mut Criterion) {
    let mut g = c.benchmark_group("rook_polys");
    for n in [4, 6, 8] {
        let b = FerrersBoard::staircase(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &b, |bch, b| {
            bch.iter(|| rook_polys(black_box(b)))
        });
    }
    g.finish();
}

fn hit(c: &mut Criterion) {
    let mut g = c.benchmark_group("hit_polys");
    for n in [4, 6] {
        let b = FerrersBoard::staircase(n);
        for m in HitMethod::ALL {
            g.bench_with_input(BenchmarkId::new(m.name(), n), &b, |bch, b| {
                bch.iter(|| hit_polys(black_box(b), m).unwrap())
            });
        }
    }
    g.finish();
}

fn steps(c: &mut Criterion) {
    let spec = StepSpec::from_pairs(&[(1, 2), (2, 2), (1, 2)]).unwrap();
    let mut g = c.benchmark_group("step_formulas");
    for m in [StepMethod::Eq24, StepMethod::Eq26] {
        g.bench_function(m.name(), |bch| {
            bch.iter(|| step_formulas(black_box(&spec), m))
        });
    }
    g.finish();
}

fn ffmat(c: &mut Criterion) {
    let b = FerrersBoard::new(vec![1, 2, 2]).unwrap();
    c.bench_function("rank_distribution/p3", |bch| {
        bch.iter(|| rank_distribution(black_box(&b), 3, 1_000_000).unwrap())
    });
}

criterion_group!(benches, rook, hit, steps, ffmat);
criterion_main!(benches);
