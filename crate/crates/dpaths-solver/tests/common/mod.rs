#![allow(dead_code)]

use dpaths_graph::{random_instance, Graph, Instance, RandomSpec};

pub fn two_pairs_example() -> Instance {
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

pub fn k4_unit() -> Instance {
    let g = Graph::from_triples(
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
    .unwrap();
    Instance::new(g, [0, 1], [2, 3])
}

pub fn random_case(seed: u64, n: usize, a: usize, b: usize) -> Instance {
    let spec = RandomSpec {
        n,
        max_length: 4,
        a_count: a,
        b_count: b,
        removed_edges: (seed as usize) % (n / 2 + 1),
        seed,
    };
    random_instance(&spec).unwrap()
}
