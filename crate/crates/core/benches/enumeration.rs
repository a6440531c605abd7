//! Benchmarks for the enumeration-heavy paths. Run with the default
//! features for the rayon-backed version and with `--no-default-features`
//! for the sequential fallback:
//!
//! ```text
//! cargo bench -p chowlab
//! cargo bench -p chowlab --no-default-features
//! ```

use criterion::{criterion_group, criterion_main, Criterion};

use chowlab::bijections::check_phi_equivariance;
use chowlab::chow::{aug_chow_presentation, aug_fy_basis, fy_basis_matroid, hilbert_quotient};
use chowlab::codes::{enumerate_codes, enumerate_extended_codes};
use chowlab::matroid::Matroid;
use chowlab::perm::sample_perms;

fn bench_codes(c: &mut Criterion) {
    c.bench_function("enumerate_codes n=6", |b| {
        b.iter(|| enumerate_codes(std::hint::black_box(6)))
    });
    c.bench_function("enumerate_extended_codes n=5", |b| {
        b.iter(|| enumerate_extended_codes(std::hint::black_box(5)))
    });
}

fn bench_bases(c: &mut Criterion) {
    let b6 = Matroid::boolean(6).unwrap();
    c.bench_function("fy_basis B_6", |b| b.iter(|| fy_basis_matroid(&b6)));
    let b5 = Matroid::boolean(5).unwrap();
    c.bench_function("aug_fy_basis B_5", |b| b.iter(|| aug_fy_basis(&b5)));
}

fn bench_equivariance(c: &mut Criterion) {
    let n = 5;
    let basis: Vec<_> = fy_basis_matroid(&Matroid::boolean(n).unwrap())
        .iter()
        .cloned()
        .collect();
    let perms = sample_perms(n, 40, 1);
    c.bench_function("phi equivariance B_5 x 40 perms", |b| {
        b.iter(|| check_phi_equivariance(n, &basis, &perms).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let m = Matroid::boolean(3).unwrap();
    let p = aug_chow_presentation(&m);
    c.bench_function("hilbert_quotient aug B_3 deg 2", |b| {
        b.iter(|| hilbert_quotient(&p, 2))
    });
}

criterion_group!(benches, bench_codes, bench_bases, bench_equivariance, bench_oracle);
criterion_main!(benches);
