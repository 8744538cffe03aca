use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pareto_core::{check_axiom, Axiom, Correspondence, DomainIndex};

fn decode(c: &mut Criterion) {
    let d = DomainIndex::new(5, 3).unwrap();
    let step = d.total() / 997;
    c.bench_function("index_profile m=5 n=3", |b| {
        b.iter(|| {
            for k in (0..d.total()).step_by(step as usize) {
                black_box(d.index_profile(k).unwrap());
            }
        })
    });
}

fn pareto_set(c: &mut Criterion) {
    let d = DomainIndex::new(5, 3).unwrap();
    let profiles: Vec<_> = (0..d.total())
        .step_by(1000)
        .map(|k| d.index_profile(k).unwrap())
        .collect();
    c.bench_function("pareto_set m=5 n=3", |b| {
        b.iter(|| {
            profiles
                .iter()
                .map(|u| u.pareto_set())
                .map(|s| s.len())
                .sum::<usize>()
        })
    });
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (m, n) in [(3, 3), (4, 2), (4, 3)] {
        let d = DomainIndex::new(m, n).unwrap();
        let g = Correspondence::from_name("pareto", m, n).unwrap();
        for axiom in [Axiom::Balancedness, Axiom::StrongStability] {
            let id = BenchmarkId::new(axiom.name(), format!("m={m} n={n}"));
            group.bench_with_input(id, &d, |b, d| b.iter(|| check_axiom(axiom, &g, d).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, decode, pareto_set, sweeps);
criterion_main!(benches);
