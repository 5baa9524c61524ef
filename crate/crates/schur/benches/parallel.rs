//! Compare the feature-dispatched executor against the sequential fallback
//! on the three hot paths: batch character tables, point-evaluation sweeps,
//! and box scans. Build with `--no-default-features` to pin the dispatched
//! path to sequential as well.

use criterion::{criterion_group, criterion_main, Criterion};
use schur::characters::Engine;
use schur::exec::{map_collect, map_collect_seq};
use schur::idealgen::{generator_f, BasisChoice, PointSet};
use schur::rootdata::{preset, PresetKind, Weight};
use schur::weylgroup::{dominant_representative, SaturatedSet};

fn character_weights() -> Vec<Weight> {
    let mut out = Vec::new();
    for a in 0..6i64 {
        for b in 0..6i64 {
            out.push(Weight(vec![a + b, b]));
        }
    }
    out
}

fn bench_characters(c: &mut Criterion) {
    let datum = preset(PresetKind::SpinB, 2).unwrap();
    let engine = Engine::new(&datum).unwrap();
    let weights = character_weights();
    let mut group = c.benchmark_group("batch_characters");
    group.sample_size(10);
    group.bench_function("dispatched", |b| {
        b.iter(|| engine.batch_characters(weights.clone()).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            map_collect_seq(weights.clone(), |w| engine.character(&w).unwrap())
        })
    });
    group.finish();
}

fn bench_evaluation(c: &mut Criterion) {
    let datum = preset(PresetKind::Sp, 2).unwrap();
    let engine = Engine::new(&datum).unwrap();
    let v = datum.fundamental_weight(0).unwrap();
    let factors = engine.tensor_power_factors(&v, 4).unwrap();
    let piplus = engine.pi_plus(&factors).unwrap();
    let pi = SaturatedSet::closure(&datum, &piplus).unwrap();
    let wpi = pi.orbit_union(&datum);
    let points = PointSet::quantized(&datum, &wpi, BasisChoice::Canonical).unwrap();
    let f = generator_f(&points, &[1, 1], false).unwrap().poly;
    let exps: Vec<Vec<i64>> = points.iter().map(|(_, e)| e.clone()).collect();
    let mut group = c.benchmark_group("point_evaluation");
    group.bench_function("dispatched", |b| {
        b.iter(|| map_collect(exps.clone(), |e| f.evaluate(&e)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| map_collect_seq(exps.clone(), |e| f.evaluate(&e)))
    });
    group.finish();
}

fn box_cells(radius: i64, n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for cell in &out {
            for x in -radius..=radius {
                let mut c = cell.clone();
                c.push(x);
                next.push(c);
            }
        }
        out = next;
    }
    out
}

fn bench_box_scan(c: &mut Criterion) {
    let datum = preset(PresetKind::SpinB, 3).unwrap();
    let cells = box_cells(4, 3);
    let mut group = c.benchmark_group("box_scan");
    group.bench_function("dispatched", |b| {
        b.iter(|| {
            map_collect(cells.clone(), |c| {
                dominant_representative(&datum, &Weight(c))
            })
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            map_collect_seq(cells.clone(), |c| {
                dominant_representative(&datum, &Weight(c))
            })
        })
    });
    group.finish();
}

criterion_group!(benches, bench_characters, bench_evaluation, bench_box_scan);
criterion_main!(benches);
