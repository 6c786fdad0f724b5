use std::time::Instant;

use dpaths_graph::{random_instance, RandomSpec};
use dpaths_solver::{prepare, solve_prepared, SolveOptions, WorkEstimate};

fn main() {
    for n in [20usize, 30, 40, 50, 60] {
        for seed in 1..=3 {
            let inst = random_instance(&RandomSpec {
                n,
                max_length: 3,
                a_count: 2,
                b_count: 2,
                removed_edges: 0,
                seed,
            })
            .unwrap();
            let prepared = prepare(&inst, None).unwrap();
            let est: f64 = prepared
                .parts
                .as_ref()
                .unwrap()
                .iter()
                .map(|p| WorkEstimate::of(p).modular)
                .sum();
            let start = Instant::now();
            let report = solve_prepared(&prepared, &SolveOptions::default()).unwrap();
            println!(
                "n={n} seed={seed} len={:?} lambda={} est_ms={:.0} ms={}",
                report.summary.length,
                report.components.iter().map(|c| c.lambda).sum::<u64>(),
                est / 1e6,
                start.elapsed().as_millis()
            );
        }
    }
}
