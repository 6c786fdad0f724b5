use dpaths_graph::{planar_embed, random_instance, Graph, PlanarEmbedding, RandomSpec};
use dpaths_oracle::count_pm_brute;
use dpaths_pfaffian::{
    build_skew_matrix, count_pm, crt_symmetric, det_exact, isqrt_exact, kasteleyn_orient,
    primes_below, verify_orientation, BigSkewMatrix, ModularPfaffian, Orientation, PfaffianError,
    SkewMatrix,
};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cycle(n: usize) -> Graph {
    let triples: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    Graph::from_triples(n, &triples).unwrap()
}

fn brute_pm(g: &Graph, s: u64) -> BigInt {
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, BigInt::from(s).pow(e.length as u32)))
        .collect();
    count_pm_brute(g.vertex_count(), &edges, 64).unwrap()
}

#[test]
fn two_by_two_determinant() {
    let mut m = SkewMatrix::<i64>::zeros(2);
    m.set(0, 1, 1);
    assert_eq!(det_exact(&m), 1);
    assert!(m.is_skew());
}

#[test]
fn four_cycle_orientation_and_count() {
    let g = cycle(4);
    let emb = planar_embed(&g).unwrap();
    let o = kasteleyn_orient(&g, &emb);
    assert!(verify_orientation(&g, &emb, &o));
    // Along 0->1->2->3->0 an odd number of edges must point backwards.
    let along = [o.forward[0], o.forward[2], o.forward[3], !o.forward[1]];
    assert_eq!(along.iter().filter(|&&f| !f).count() % 2, 1);
    let m: BigSkewMatrix = build_skew_matrix(&g, &o, 1);
    assert_eq!(det_exact(&m), BigInt::from(4));
    assert_eq!(count_pm(&g, &emb, 1).unwrap(), BigUint::from(2u32));
}

#[test]
fn consistent_four_cycle_is_rejected() {
    let g = cycle(4);
    let emb = planar_embed(&g).unwrap();
    // Edges (0,1),(0,3),(1,2),(2,3): direct them along 0->1->2->3->0.
    let o = Orientation {
        forward: vec![true, false, true, true],
    };
    assert!(!verify_orientation(&g, &emb, &o));
}

#[test]
fn triangle_orientations() {
    let g = cycle(3);
    let emb = planar_embed(&g).unwrap();
    // Edges (0,1),(0,2),(1,2). Cycle 0->1->2->0: three agreeing darts on one face.
    assert!(verify_orientation(
        &g,
        &emb,
        &Orientation {
            forward: vec![true, false, true]
        }
    ));
    // One reversed edge: counts 2 and 1.
    assert!(verify_orientation(
        &g,
        &emb,
        &Orientation {
            forward: vec![true, true, true]
        }
    ));
}

#[test]
fn single_edge_matrices() {
    let g = Graph::from_triples(2, &[(0, 1, 3)]).unwrap();
    let emb = planar_embed(&g).unwrap();
    let o = kasteleyn_orient(&g, &emb);
    assert!(verify_orientation(&g, &emb, &o));
    let m: BigSkewMatrix = build_skew_matrix(&g, &o, 2);
    assert_eq!(m.get(0, 1).magnitude(), &BigUint::from(8u32));
    assert_eq!(m.get(0, 1), &-m.get(1, 0).clone());
    let unit: BigSkewMatrix = build_skew_matrix(&g, &o, 1);
    assert_eq!(unit.get(0, 1).magnitude(), &BigUint::from(1u32));
    let zero_len = Graph::from_triples(2, &[(0, 1, 0)]).unwrap();
    let m0: BigSkewMatrix = build_skew_matrix(&zero_len, &kasteleyn_orient(&zero_len, &emb), 0);
    assert_eq!(m0.get(0, 1).magnitude(), &BigUint::from(1u32));
}

#[test]
fn integer_square_roots() {
    assert_eq!(isqrt_exact(&BigInt::from(0)).unwrap(), BigInt::from(0));
    assert_eq!(isqrt_exact(&BigInt::from(144)).unwrap(), BigInt::from(12));
    assert_eq!(isqrt_exact(&BigInt::from(1)).unwrap(), BigInt::from(1));
    assert!(matches!(
        isqrt_exact(&BigInt::from(2)),
        Err(PfaffianError::NotPerfectSquare(_))
    ));
    let big = BigInt::from(3u32).pow(301);
    assert_eq!(isqrt_exact(&(&big * &big)).unwrap(), big);
    assert!(isqrt_exact(&(&big * &big + 1)).is_err());
}

#[test]
fn odd_vertex_count_has_no_matching() {
    let g = cycle(5);
    let emb = planar_embed(&g).unwrap();
    assert_eq!(count_pm(&g, &emb, 3).unwrap(), BigUint::from(0u32));
}

#[test]
fn two_adjacent_triangles() {
    // Triangles {0,1,2} and {3,4,5} joined by the weighted edge 0-3.
    let g = Graph::from_triples(
        6,
        &[
            (0, 1, 0),
            (1, 2, 0),
            (0, 2, 0),
            (3, 4, 0),
            (4, 5, 0),
            (3, 5, 0),
            (0, 3, 4),
        ],
    )
    .unwrap();
    let emb = planar_embed(&g).unwrap();
    for s in 0..4u64 {
        assert_eq!(count_pm(&g, &emb, s).unwrap(), BigUint::from(s.pow(4)));
    }
}

fn random_planar(rng: &mut ChaCha8Rng) -> Graph {
    let n = 2 * rng.gen_range(2..=6);
    let spec = RandomSpec {
        n,
        max_length: 3,
        a_count: 2,
        b_count: 0,
        removed_edges: rng.gen_range(0..=n / 2),
        seed: rng.gen(),
    };
    random_instance(&spec).unwrap().graph
}

#[test]
fn determinant_is_squared_matching_count_on_random_planar_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let g = random_planar(&mut rng);
        let emb: PlanarEmbedding = planar_embed(&g).unwrap();
        let o = kasteleyn_orient(&g, &emb);
        assert!(verify_orientation(&g, &emb, &o));
        for s in [1u64, 2, 3] {
            let m: BigSkewMatrix = build_skew_matrix(&g, &o, s);
            let pm = brute_pm(&g, s);
            assert_eq!(det_exact(&m), &pm * &pm);
        }
    }
}

#[test]
fn generic_determinant_agrees_across_scalars() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = random_planar(&mut rng);
        let emb = planar_embed(&g).unwrap();
        let o = kasteleyn_orient(&g, &emb);
        let small: SkewMatrix<i128> = build_skew_matrix(&g, &o, 2);
        let big: BigSkewMatrix = build_skew_matrix(&g, &o, 2);
        assert_eq!(BigInt::from(det_exact(&small)), det_exact(&big));
    }
}

#[test]
fn modular_pfaffian_matches_exact_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let primes = primes_below(3);
    for _ in 0..40 {
        let g = random_planar(&mut rng);
        let emb = planar_embed(&g).unwrap();
        let o = kasteleyn_orient(&g, &emb);
        let engine = ModularPfaffian::new(&g, &o);
        for s in 0..4u64 {
            let residues: Vec<u64> = primes.iter().map(|&p| engine.eval(s, p)).collect();
            let pf = crt_symmetric(&residues, &primes);
            assert_eq!(pf.magnitude(), brute_pm(&g, s).magnitude(), "s = {s}");
        }
    }
}

#[test]
fn crt_recovers_negative_values() {
    let primes = primes_below(2);
    let x = BigInt::from(-123456789012345i64);
    let residues: Vec<u64> = primes
        .iter()
        .map(|&p| {
            let pb = BigInt::from(p);
            u64::try_from(((&x % &pb) + &pb) % &pb).unwrap()
        })
        .collect();
    assert_eq!(crt_symmetric(&residues, &primes), x);
}
