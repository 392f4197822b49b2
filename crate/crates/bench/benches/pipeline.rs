use criterion::{black_box, criterion_group, criterion_main, Criterion};

use mpl2_bench::nontrivial_bases;
use mpl2_core::enumerate::{enumerate_2permutational, enumerate_sf_2reductive, isotopes_of_base};
use mpl2_core::{automorphism_group, canonical_form};

fn symmetry(c: &mut Criterion) {
    let bases = nontrivial_bases(5);
    c.bench_function("canonical_form/sf2r-5", |b| {
        b.iter(|| bases.iter().map(|s| canonical_form(black_box(s))).collect::<Vec<_>>())
    });
    c.bench_function("automorphism_group/sf2r-5", |b| {
        b.iter(|| bases.iter().map(|s| automorphism_group(black_box(s)).order()).sum::<usize>())
    });
}

fn enumeration(c: &mut Criterion) {
    let bases = nontrivial_bases(5);
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("sf2r-5", |b| b.iter(|| enumerate_sf_2reductive(black_box(5), false).unwrap().len()));
    group.bench_function("isotopes-of-bases-5", |b| {
        b.iter(|| {
            bases
                .iter()
                .map(|s| isotopes_of_base(black_box(s), false).unwrap().len())
                .sum::<usize>()
        })
    });
    group.bench_function("2perm-5", |b| b.iter(|| enumerate_2permutational(black_box(5), false).unwrap().len()));
    group.finish();
}

criterion_group!(benches, symmetry, enumeration);
criterion_main!(benches);
