use criterion::{black_box, criterion_group, criterion_main, Criterion};
use minorlab_core::{
    canonical_form, has_family_minor, random_cockade, recognize_cockade, EnumFilter, Family, MinDegreeEnumeration,
    NamedGraph,
};

fn canonical(c: &mut Criterion) {
    let pbar = NamedGraph::PetersenComplement.build().unwrap();
    let (_, cockade) = random_cockade(4, 11).unwrap();
    c.bench_function("canonical_form/petersen-bar", |b| b.iter(|| canonical_form(black_box(&pbar))));
    c.bench_function("canonical_form/cockade-4-pieces", |b| b.iter(|| canonical_form(black_box(&cockade))));
}

fn minors(c: &mut Criterion) {
    let k333 = NamedGraph::K333.build().unwrap();
    let (_, cockade) = random_cockade(2, 3).unwrap();
    let (u, v) = cockade.non_edges().next().unwrap();
    let plus = cockade.add_edge(u, v).unwrap();
    c.bench_function("family_minor/K333 no K7=+K1", |b| {
        b.iter(|| has_family_minor(black_box(&k333), Family::KtEqPlusK1(7)))
    });
    c.bench_function("family_minor/cockade no K9=", |b| {
        b.iter(|| has_family_minor(black_box(&cockade), Family::KtEq(9)))
    });
    c.bench_function("family_minor/cockade+edge K9=", |b| {
        b.iter(|| has_family_minor(black_box(&plus), Family::KtEq(9)))
    });
}

fn cockades(c: &mut Criterion) {
    let (_, g) = random_cockade(10, 5).unwrap();
    c.bench_function("recognize_cockade/10 pieces", |b| b.iter(|| recognize_cockade(black_box(&g))));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_min_degree");
    group.sample_size(10);
    group.bench_function("n=10 d=6", |b| {
        b.iter(|| MinDegreeEnumeration::new(EnumFilter::new(10, 6)).unwrap().collect().len())
    });
    group.finish();
}

criterion_group!(benches, canonical, minors, cockades, enumeration);
criterion_main!(benches);
