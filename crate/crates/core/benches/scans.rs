//! Sequential vs parallel execution of the exhaustive scans.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sqfree_core::covering::{application_matrix_cycle, scan_weights, CoverProgram};
use sqfree_core::paths::{cycle_graph, path_graph, path_hypergraph, path_ideal};
use sqfree_core::symbolic::SquarefreeIdeal;
use sqfree_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn weight_scan(c: &mut Criterion) {
    // p = 9 has no gap, so the whole cube {0,1,2}^9 is scanned
    let m = application_matrix_cycle(9).unwrap();
    let program = CoverProgram::new(m.rows, vec![0; 9]).unwrap();
    let mut group = c.benchmark_group("weight_scan_cycle9");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| scan_weights(&program, 2, exec).unwrap())
        });
    }
    group.finish();
}

fn symbolic_power(c: &mut Criterion) {
    let ideal = SquarefreeIdeal::new(path_ideal(&cycle_graph(9).unwrap(), 3).unwrap()).unwrap();
    let mut group = c.benchmark_group("equality_check_c9_n3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| ideal.equality_check_with(3, exec).unwrap())
        });
    }
    group.finish();
}

fn packing(c: &mut Criterion) {
    let h = path_hypergraph(&cycle_graph(9).unwrap(), 3).unwrap();
    let mut group = c.benchmark_group("packing_c9");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| h.has_packing_with(14, exec).unwrap())
        });
    }
    group.finish();
}

fn forest(c: &mut Criterion) {
    let h = path_hypergraph(&path_graph(16).unwrap(), 3).unwrap();
    let mut group = c.benchmark_group("leafless_subcollection_p16");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| h.leafless_subcollection_with(exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, weight_scan, symbolic_power, packing, forest);
criterion_main!(benches);
