//! Parallel vs sequential timings for the heavy sweeps, plus micro
//! benchmarks of the core enumerations. With the default `parallel`
//! feature the `par` variants run on the rayon global pool; built with
//! `--no-default-features` every variant is the sequential fallback.

use criterion::{criterion_group, criterion_main, Criterion};

use gcdegen::gcpattern::{enumerate_patterns, union_face_count};
use gcdegen::grid::{enumerate_pipe_dreams, Permutation};
use gcdegen::ideals::{verify_degeneration_all, verify_degeneration_bounded, DegenerationReport};
use gcdegen::parallel::{map_collect, map_collect_seq};
use gcdegen::polyalg::{schubert_divided_difference, schubert_pipedreams, HighestWeight};

fn degeneration_sweep_seq(n: usize) -> Vec<DegenerationReport> {
    map_collect_seq(Permutation::all(n), |w| {
        verify_degeneration_bounded(&w, 5).unwrap()
    })
}

fn bench_degeneration(c: &mut Criterion) {
    let mut group = c.benchmark_group("degeneration_sweep_s5");
    group.sample_size(10);
    group.bench_function("seq", |b| b.iter(|| degeneration_sweep_seq(5)));
    group.bench_function("par", |b| {
        b.iter(|| verify_degeneration_all(5, 5).unwrap())
    });
    group.finish();
}

fn bench_schubert(c: &mut Criterion) {
    let mut group = c.benchmark_group("schubert_double_s5");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            map_collect_seq(Permutation::all(5), |w| {
                let dd = schubert_divided_difference(&w);
                let pd = schubert_pipedreams(&w).unwrap();
                assert_eq!(dd, pd);
            })
        })
    });
    group.bench_function("par", |b| {
        b.iter(|| {
            map_collect(Permutation::all(5), |w| {
                let dd = schubert_divided_difference(&w);
                let pd = schubert_pipedreams(&w).unwrap();
                assert_eq!(dd, pd);
            })
        })
    });
    group.finish();
}

fn bench_face_unions(c: &mut Criterion) {
    let lambda = HighestWeight::staircase(4);
    let mut group = c.benchmark_group("face_unions_s4");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            map_collect_seq(Permutation::all(4), |w| {
                union_face_count(&w, &lambda).unwrap()
            })
        })
    });
    group.bench_function("par", |b| {
        b.iter(|| {
            map_collect(Permutation::all(4), |w| {
                union_face_count(&w, &lambda).unwrap()
            })
        })
    });
    group.finish();
}

fn bench_enumerations(c: &mut Criterion) {
    let w: Permutation = "456123".parse().unwrap();
    c.bench_function("pipe_dreams_456123", |b| {
        b.iter(|| enumerate_pipe_dreams(&w).unwrap())
    });

    let lambda = HighestWeight::staircase(5);
    c.bench_function("patterns_staircase_5", |b| {
        b.iter(|| enumerate_patterns(&lambda).unwrap())
    });
}

criterion_group!(
    benches,
    bench_degeneration,
    bench_schubert,
    bench_face_unions,
    bench_enumerations
);
criterion_main!(benches);
