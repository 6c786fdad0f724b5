mod common;

use common::{k4_unit, random_case, two_pairs_example};
use dpaths_graph::{Graph, Instance};
use dpaths_oracle::{enumerate_solutions, DEFAULT_VERTEX_CAP};
use dpaths_solver::{evaluate_p, prepare, solve, solve_prepared, Engine, SolveOptions};
use num_bigint::BigUint;

fn opts(engine: Engine) -> SolveOptions {
    SolveOptions {
        engine,
        ..SolveOptions::default()
    }
}

fn oracle(inst: &Instance) -> (Option<u64>, BigUint) {
    let set = enumerate_solutions(inst, DEFAULT_VERTEX_CAP).unwrap();
    (set.min_length, BigUint::from(set.count()))
}

#[test]
fn worked_example() {
    let inst = two_pairs_example();
    let report = solve(&inst, None, &SolveOptions::default()).unwrap();
    assert_eq!(report.summary.length, Some(11));
    assert_eq!((report.summary.length, report.summary.count), oracle(&inst));
}

#[test]
fn k4_unique_direct_pair() {
    let report = solve(&k4_unit(), None, &SolveOptions::default()).unwrap();
    assert_eq!(report.summary.length, Some(2));
    assert_eq!(report.summary.count, BigUint::from(1u32));
    let c = &report.components[0];
    let (d, lead) = c.poly.leading().unwrap();
    assert_eq!(d as u64, 2 * c.lambda - 2);
    assert_eq!(*lead, 4.into());
}

#[test]
fn separated_terminals_are_infeasible() {
    let g = Graph::from_triples(4, &[(0, 2, 1), (1, 3, 1)]).unwrap();
    let report = solve(
        &Instance::new(g, [0, 1], []),
        None,
        &SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(report.summary.length, None);
    assert_eq!(report.summary.count, BigUint::from(0u32));
}

#[test]
fn engines_agree() {
    for seed in 0..6 {
        let inst = random_case(seed, 10, 2, 2);
        let exact = solve(&inst, None, &opts(Engine::Exact)).unwrap();
        let modular = solve(&inst, None, &opts(Engine::Modular)).unwrap();
        assert_eq!(exact, SolveReportEq::strip(modular, Engine::Exact));
    }
}

struct SolveReportEq;
impl SolveReportEq {
    fn strip(mut r: dpaths_solver::SolveReport, engine: Engine) -> dpaths_solver::SolveReport {
        for c in &mut r.components {
            c.engine = engine;
        }
        r
    }
}

#[test]
fn polynomial_matches_direct_evaluation() {
    let inst = two_pairs_example();
    let prepared = prepare(&inst, None).unwrap();
    let report = solve_prepared(&prepared, &SolveOptions::default()).unwrap();
    let part = &prepared.parts.as_ref().unwrap()[0];
    for s in [0u64, 1, 2, 5] {
        assert_eq!(
            report.components[0].poly.eval(s),
            evaluate_p(part, s).unwrap()
        );
    }
}

#[test]
fn random_instances_match_oracle() {
    for seed in 0..25 {
        for (a, b) in [(2, 2), (4, 0), (2, 0), (4, 2)] {
            let inst = random_case(seed, 8 + 2 * (seed as usize % 4), a, b);
            let report = solve(&inst, None, &SolveOptions::default()).unwrap();
            assert_eq!(
                (report.summary.length, report.summary.count),
                oracle(&inst),
                "seed {seed} a {a} b {b}"
            );
        }
    }
}

#[test]
fn thread_count_does_not_change_results() {
    for seed in [1u64, 2, 3] {
        let inst = random_case(seed, 12, 2, 2);
        let one = solve(
            &inst,
            None,
            &SolveOptions {
                threads: 1,
                ..SolveOptions::default()
            },
        )
        .unwrap();
        for threads in [4, 8] {
            let many = solve(
                &inst,
                None,
                &SolveOptions {
                    threads,
                    ..SolveOptions::default()
                },
            )
            .unwrap();
            assert_eq!(one, many);
        }
    }
}

#[test]
fn capacity_guard_refuses_oversized_runs() {
    let opts = SolveOptions {
        max_work: 1.0,
        ..SolveOptions::default()
    };
    assert!(matches!(
        solve(&two_pairs_example(), None, &opts),
        Err(dpaths_solver::SolveError::CapacityExceeded { .. })
    ));
}

#[test]
fn components_add_lengths_and_multiply_counts() {
    // Two disjoint 4-cycles; in each, two A-terminals sit on opposite corners.
    let g = Graph::from_triples(
        8,
        &[
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (0, 3, 1),
            (4, 5, 2),
            (5, 6, 2),
            (6, 7, 2),
            (4, 7, 2),
        ],
    )
    .unwrap();
    let inst = Instance::new(g, [0, 2, 4, 6], []);
    let report = solve(&inst, None, &SolveOptions::default()).unwrap();
    assert_eq!(report.summary.length, Some(2 + 4));
    assert_eq!(report.summary.count, BigUint::from(4u32));
    assert_eq!((report.summary.length, report.summary.count), oracle(&inst));
}

#[test]
fn odd_terminal_split_across_components_is_infeasible() {
    let g = Graph::from_triples(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
    let report = solve(
        &Instance::new(g, [0, 2], []),
        None,
        &SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(report.summary.count, BigUint::from(0u32));
    assert!(report.infeasible_reason.is_some());
}

#[test]
fn path_between_two_terminals() {
    let g = Graph::from_triples(3, &[(0, 1, 2), (1, 2, 3)]).unwrap();
    let report = solve(
        &Instance::new(g, [0, 2], []),
        None,
        &SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(report.summary.length, Some(5));
    assert_eq!(report.summary.count, BigUint::from(1u32));
}

#[test]
fn invalid_instances_are_rejected() {
    let g = Graph::from_triples(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
    assert!(matches!(
        solve(
            &Instance::new(g, [0, 1], [1, 2]),
            None,
            &SolveOptions::default()
        ),
        Err(dpaths_solver::SolveError::Validation(_))
    ));
}

#[test]
fn leading_monomial_invariants_on_random_instances() {
    for seed in 0..15 {
        let inst = random_case(seed, 10, 2, 2);
        let report = solve(&inst, None, &SolveOptions::default()).unwrap();
        for c in &report.components {
            if let Some(l) = c.reduced_length {
                let top = (2 * c.lambda - l) as usize;
                assert_eq!(c.poly.degree(), Some(top));
                assert!(c.poly.coeffs.len() <= 2 * c.lambda as usize + 1);
            } else {
                assert!(c.poly.is_zero());
            }
        }
    }
}
