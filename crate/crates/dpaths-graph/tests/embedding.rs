use dpaths_graph::{faces, planar_embed, Graph, PlanarityError};

fn complete(n: usize) -> Graph {
    let mut t = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            t.push((u, v, 1));
        }
    }
    Graph::from_triples(n, &t).unwrap()
}

fn two_pairs_example() -> Graph {
    Graph::from_triples(
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
    .unwrap()
}

#[test]
fn k4_has_four_triangular_faces() {
    let g = complete(4);
    let emb = planar_embed(&g).unwrap();
    emb.verify(&g).unwrap();
    let f = faces(&emb);
    assert_eq!(f.len(), 4);
    assert!(f.iter().all(|face| face.len() == 3));
}

#[test]
fn k5_and_k33_are_rejected() {
    assert_eq!(planar_embed(&complete(5)), Err(PlanarityError::NonPlanar));
    let mut t = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            t.push((u, v, 1));
        }
    }
    let k33 = Graph::from_triples(6, &t).unwrap();
    assert_eq!(planar_embed(&k33), Err(PlanarityError::NonPlanar));
}

#[test]
fn worked_example_has_six_faces() {
    let g = two_pairs_example();
    let emb = planar_embed(&g).unwrap();
    emb.verify(&g).unwrap();
    assert_eq!(faces(&emb).len(), 6);
}

#[test]
fn single_edge_and_triangle_faces() {
    let edge = Graph::from_triples(2, &[(0, 1, 1)]).unwrap();
    let f = faces(&planar_embed(&edge).unwrap());
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].len(), 2);
    let tri = Graph::from_triples(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
    let f = faces(&planar_embed(&tri).unwrap());
    assert_eq!(f.len(), 2);
    assert!(f.iter().all(|face| face.len() == 3));
}

#[test]
fn every_dart_lies_on_exactly_one_face() {
    let g = two_pairs_example();
    let f = faces(&planar_embed(&g).unwrap());
    let mut darts: Vec<_> = f.concat();
    darts.sort_unstable();
    let before = darts.len();
    darts.dedup();
    assert_eq!(before, darts.len());
    assert_eq!(darts.len(), 2 * g.edge_count());
}

#[test]
fn graphs_with_cut_vertices_and_bridges_embed() {
    // Two triangles joined by a bridge, plus a pendant path.
    let g = Graph::from_triples(
        8,
        &[
            (0, 1, 1),
            (1, 2, 1),
            (0, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
            (3, 5, 1),
            (5, 6, 1),
            (6, 7, 1),
        ],
    )
    .unwrap();
    let emb = planar_embed(&g).unwrap();
    emb.verify(&g).unwrap();
}

#[test]
fn embedding_is_deterministic() {
    let g = two_pairs_example();
    assert_eq!(planar_embed(&g).unwrap(), planar_embed(&g).unwrap());
}

#[test]
fn user_rotation_is_verified() {
    let g = complete(4);
    let mut emb = planar_embed(&g).unwrap();
    emb.verify(&g).unwrap();
    // Swapping two neighbors at one vertex of K4 breaks planarity.
    emb.rotation[0].swap(0, 1);
    assert!(emb.verify(&g).is_err());
    emb.rotation[0] = vec![1, 2];
    assert!(emb.verify(&g).is_err());
}

#[test]
fn grid_and_larger_graphs_embed() {
    let w = 7;
    let mut t = Vec::new();
    for r in 0..w {
        for c in 0..w {
            let v = r * w + c;
            if c + 1 < w {
                t.push((v, v + 1, 1));
            }
            if r + 1 < w {
                t.push((v, v + w, 1));
            }
        }
    }
    let g = Graph::from_triples(w * w, &t).unwrap();
    let emb = planar_embed(&g).unwrap();
    emb.verify(&g).unwrap();
    assert_eq!(faces(&emb).len(), (w - 1) * (w - 1) + 1);
}
