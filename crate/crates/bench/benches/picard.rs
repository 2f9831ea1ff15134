use bsdh_bench::{cyclic_word, root_system};
use bsdh_core::oracle::expand_character_symbolic;
use bsdh_core::{anticanonical_gz, expand_character, m_table_alpha};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand_character");
    let rs = root_system("E8");
    let rho = rs.rho();
    for len in [8, 32, 128] {
        let word = cyclic_word(&rs, len);
        group.bench_with_input(BenchmarkId::new("fast", len), &word, |b, w| {
            b.iter(|| expand_character(&rs, black_box(w), &rho).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("symbolic", len), &word, |b, w| {
            b.iter(|| expand_character_symbolic(&rs, black_box(w), &rho).unwrap())
        });
    }
    group.finish();
}

fn anticanonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("anticanonical_gz");
    let rs = root_system("F4");
    for len in [8, 24] {
        let word = cyclic_word(&rs, len);
        group.bench_with_input(BenchmarkId::new("m_table", len), &word, |b, w| {
            b.iter(|| m_table_alpha(&rs, black_box(w)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("class", len), &word, |b, w| {
            b.iter(|| anticanonical_gz(&rs, black_box(w)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, expansion, anticanonical);
criterion_main!(benches);
