use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fewswitch::graphs;
use fewswitch::harness;
use fewswitch::par::Exec;
use fewswitch::torus::{self, TorusColoring};
use fewswitch::{colorings, ComponentGraph};

fn modes() -> Vec<(&'static str, Exec)> {
    vec![
        ("sequential", Exec::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", Exec::Parallel),
    ]
}

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_d");
    group.sample_size(10);
    let cases = [
        ("cycle:12", graphs::cycle(12).unwrap(), graphs::farthest_point_automorphism(&[12]).unwrap()),
        ("hypercube:3", graphs::hypercube(3).unwrap(), graphs::antipodal(3).unwrap()),
    ];
    for (name, g, phi) in &cases {
        for (mode, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(mode, name), &exec, |b, &exec| {
                b.iter(|| harness::exhaustive_d_with(g, phi, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn sampled(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampled_d");
    group.sample_size(10);
    let g = graphs::hypercube(5).unwrap();
    let phi = graphs::antipodal(5).unwrap();
    for (mode, exec) in modes() {
        group.bench_function(BenchmarkId::new(mode, "hypercube:5 x 2000"), |b| {
            b.iter(|| harness::sampled_d_with(&g, &phi, 2000, 1, Some(1), exec).unwrap())
        });
    }
    let t = graphs::product_of_cycles(&[4, 8]).unwrap();
    let psi = graphs::farthest_point_automorphism(&[4, 8]).unwrap();
    for (mode, exec) in modes() {
        group.bench_function(BenchmarkId::new(mode, "product:4x8 x 2000"), |b| {
            b.iter(|| harness::sampled_d_with(&t, &psi, 2000, 1, Some(3), exec).unwrap())
        });
    }
    group.finish();
}

fn experiments(c: &mut Criterion) {
    let mut group = c.benchmark_group("experiments");
    group.sample_size(10);
    for (mode, exec) in modes() {
        group.bench_function(BenchmarkId::new(mode, "tree_fraction n=8 x 200"), |b| {
            b.iter(|| harness::tree_fraction_experiment(8, 200, 1, exec).unwrap())
        });
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let g = graphs::hypercube(8).unwrap();
    let col = colorings::random_coloring(&g, 0.5, 7).unwrap();
    c.bench_function("component_graph Q_8", |b| b.iter(|| ComponentGraph::build(&g, &col).unwrap()));
    let phi = graphs::antipodal(8).unwrap();
    c.bench_function("orbit_objective Q_8", |b| {
        b.iter(|| fewswitch::switchpaths::orbit_objective(&g, &col, &phi).unwrap())
    });
    let tg = graphs::product_of_cycles(&[6, 8]).unwrap();
    let tc = TorusColoring::new(3, 4, colorings::random_coloring(&tg, 0.5, 7).unwrap()).unwrap();
    c.bench_function("find_pair C_6 x C_8", |b| b.iter(|| torus::find_pair(&tc).unwrap()));
}

criterion_group!(benches, exhaustive, sampled, experiments, kernels);
criterion_main!(benches);
