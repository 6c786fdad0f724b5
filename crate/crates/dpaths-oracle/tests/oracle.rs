use dpaths_graph::{Graph, Instance};
use dpaths_oracle::{
    canonical_cmp, count_pm_brute, count_pm_graph, enumerate_solutions, max_independent_sets,
    DEFAULT_MIS_CAP, DEFAULT_VERTEX_CAP,
};
use num_bigint::BigUint;
use std::cmp::Ordering;

fn k4_unit() -> Graph {
    Graph::from_triples(
        4,
        &[
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (1, 2, 1),
            (1, 3, 1),
            (2, 3, 1),
        ],
    )
    .unwrap()
}

fn two_pairs_example() -> Instance {
    let g = Graph::from_triples(
        8,
        &[
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 3),
            (2, 4, 1),
            (4, 1, 4),
            (3, 5, 1),
            (5, 1, 1),
            (2, 6, 1),
            (3, 7, 1),
            (4, 6, 1),
            (5, 7, 1),
            (6, 7, 8),
        ],
    )
    .unwrap();
    Instance::new(g, [6, 7], [4, 5])
}

#[test]
fn worked_example_minimum_is_eleven() {
    let set = enumerate_solutions(&two_pairs_example(), DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!(set.min_length, Some(11));
    println!(
        "worked example: {} optimal solutions: {:?}",
        set.count(),
        set.solutions
    );
}

#[test]
fn k4_direct_edges_are_the_unique_optimum() {
    let inst = Instance::new(k4_unit(), [0, 1], [2, 3]);
    let set = enumerate_solutions(&inst, DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!(set.min_length, Some(2));
    let g = &inst.graph;
    let expected = vec![g.find_edge(0, 1).unwrap(), g.find_edge(2, 3).unwrap()];
    assert_eq!(set.solutions, vec![expected]);
}

#[test]
fn disconnected_terminals_have_no_solution() {
    let g = Graph::from_triples(4, &[(0, 2, 1), (1, 3, 1)]).unwrap();
    let set = enumerate_solutions(&Instance::new(g, [0, 1], []), DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!(set.min_length, None);
    assert!(set.solutions.is_empty());
}

#[test]
fn cap_is_enforced() {
    let g = Graph::new(20, []).unwrap();
    assert!(enumerate_solutions(&Instance::new(g, [0, 1], []), DEFAULT_VERTEX_CAP).is_err());
}

#[test]
fn matching_counts() {
    assert_eq!(count_pm_brute(2, &[(0, 1, 7u64)], 16).unwrap(), 7);
    let c4 = [(0, 1, 1u64), (1, 2, 1), (2, 3, 1), (0, 3, 1)];
    assert_eq!(count_pm_brute(4, &c4, 16).unwrap(), 2);
    assert_eq!(
        count_pm_brute(3, &[(0, 1, 1u64), (1, 2, 1)], 16).unwrap(),
        0
    );
    // K4 has three perfect matchings; weighted by s^len with s = 2.
    assert_eq!(
        count_pm_graph(&k4_unit(), 2, 16).unwrap(),
        BigUint::from(12u32)
    );
}

#[test]
fn independent_set_counts() {
    assert_eq!(
        max_independent_sets(&k4_unit(), DEFAULT_MIS_CAP).unwrap(),
        (1, BigUint::from(4u32))
    );
    let empty = Graph::new(3, []).unwrap();
    assert_eq!(
        max_independent_sets(&empty, DEFAULT_MIS_CAP).unwrap(),
        (3, BigUint::from(1u32))
    );
    let c6 = Graph::from_triples(
        6,
        &[
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
            (0, 5, 1),
        ],
    )
    .unwrap();
    assert_eq!(
        max_independent_sets(&c6, DEFAULT_MIS_CAP).unwrap(),
        (3, BigUint::from(2u32))
    );
    let prism = Graph::from_triples(
        6,
        &[
            (0, 1, 1),
            (1, 2, 1),
            (0, 2, 1),
            (3, 4, 1),
            (4, 5, 1),
            (3, 5, 1),
            (0, 3, 1),
            (1, 4, 1),
            (2, 5, 1),
        ],
    )
    .unwrap();
    assert_eq!(
        max_independent_sets(&prism, DEFAULT_MIS_CAP).unwrap(),
        (2, BigUint::from(6u32))
    );
}

#[test]
fn canonical_order_puts_absent_first() {
    assert_eq!(canonical_cmp(&[1, 2], &[0, 2]), Ordering::Less);
    assert_eq!(canonical_cmp(&[0, 3], &[0, 2]), Ordering::Less);
    assert_eq!(canonical_cmp(&[0, 2], &[0, 2]), Ordering::Equal);
}
