//! Sequential versus parallel execution of the verification suites.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lmbraid::braid::BraidWord;
use lmbraid::exec::Exec;
use lmbraid::lawrence::lawrence_tower;
use lmbraid::long_moody::long_moody_with;
use lmbraid::poly::{Poly, Vars};
use lmbraid::rep::{GroupKind, Representation};
use lmbraid::subgroup::BraidSubgroup;
use lmbraid::suites::{braid_relation_suite, burau_suite, gassner_suite, lawrence_relation_suite};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn random_words(count: usize, n: usize, len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    (0..count)
        .map(|_| {
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n as i32);
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            BraidWord::from_signed(n, &letters).unwrap()
        })
        .collect()
}

fn relation_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("relation_suites");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("universal_n6", name), &exec, |b, &exec| {
            b.iter(|| black_box(braid_relation_suite(6, exec).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("lawrence_n5_m2", name), &exec, |b, &exec| {
            b.iter(|| black_box(lawrence_relation_suite(5, 2, exec).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("gassner_n4", name), &exec, |b, &exec| {
            b.iter(|| black_box(gassner_suite(4, exec).unwrap()))
        });
    }
    group.finish();
}

fn specialization(c: &mut Criterion) {
    let words = random_words(48, 6, 12);
    let mut group = c.benchmark_group("specialization");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("burau_48_words", name), &exec, |b, &exec| {
            b.iter(|| black_box(burau_suite(words.clone(), exec).unwrap()))
        });
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let vars = Vars::new(&["q", "t"]);
    let q = Poly::var(&vars, "q").unwrap();
    let t = Poly::var(&vars, "t").unwrap();
    let full = |n| GroupKind::Braid(BraidSubgroup::Full { n });
    let lk = Representation::one_dim(full(2), &vars, vec![t.clone()]).unwrap();
    let tower = lawrence_tower(&lk, &q, 4).unwrap();
    let semidirect = Representation::one_dim_semidirect(5, &q, &t).unwrap();
    let mut group = c.benchmark_group("constructions");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("verify_lk_tower_n4", name), &exec, |b, &exec| {
            b.iter(|| black_box(tower.check_relations(exec).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("long_moody_n5", name), &exec, |b, &exec| {
            b.iter(|| black_box(long_moody_with(&semidirect, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, relation_suites, specialization, constructions);
criterion_main!(benches);
