use std::collections::{BTreeSet, HashSet};

use achromatic_core::dsu::DisjointSets;
use achromatic_core::{
    all_edges, build_plane, greedy_extend, hamiltonian_path_factorization, is_forest,
    known_witness, star_extend, union_contains_cycle, verify_coloring, ColoringDocument, Edge,
    EdgeColoring,
};
use proptest::prelude::*;

/// Component count by depth-first search, independent of the union-find.
fn components(n: usize, edges: &[Edge]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        let (u, v) = e.endpoints();
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

fn edge_set(n: u32) -> impl Strategy<Value = Vec<Edge>> {
    proptest::collection::btree_set((0..n, 0..n), 0..(2 * n as usize)).prop_map(|pairs| {
        pairs
            .into_iter()
            .filter_map(|(a, b)| Edge::try_new(a, b))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    })
}

/// Random labelled tree on `n` vertices: vertex `i` hangs off a random
/// earlier vertex, then labels are permuted.
fn spanning_tree(n: usize) -> impl Strategy<Value = Vec<Edge>> {
    let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
    (
        parents,
        Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(|(ps, labels)| {
            ps.iter()
                .enumerate()
                .map(|(i, &p)| Edge::new(labels[i + 1], labels[p]))
                .collect()
        })
}

fn assignment(n: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    let m = n * (n - 1) / 2;
    (1..=m).prop_flat_map(move |k| {
        proptest::collection::vec(0..k, m).prop_map(move |mut colors| {
            // Make every color appear so the classes are nonempty.
            for (i, c) in colors.iter_mut().take(k).enumerate() {
                *c = i;
            }
            (n, colors)
        })
    })
}

proptest! {
    #[test]
    fn forest_iff_edges_plus_components_equals_vertices(edges in edge_set(12)) {
        let forest = is_forest(&edges, 12);
        prop_assert_eq!(forest, edges.len() + components(12, &edges) == 12);
    }

    #[test]
    fn union_find_tracks_components(edges in edge_set(10)) {
        let mut dsu = DisjointSets::new(10);
        let mut merges = 0;
        for e in &edges {
            let (u, v) = e.endpoints();
            if dsu.union(u, v) {
                merges += 1;
            }
        }
        prop_assert_eq!(10 - merges, components(10, &edges));
        let roots: HashSet<usize> = (0..10).map(|x| dsu.find(x)).collect();
        prop_assert_eq!(roots.len(), 10 - merges);
    }

    #[test]
    fn union_cycle_iff_union_not_forest(a in edge_set(9), b in edge_set(9)) {
        let union: Vec<Edge> = a.iter().chain(&b).copied().collect::<BTreeSet<_>>().into_iter().collect();
        prop_assert_eq!(union_contains_cycle(&a, &b, 9), !is_forest(&union, 9));
    }

    #[test]
    fn spanning_trees_are_maximal_forests(
        tree in (2usize..14).prop_flat_map(spanning_tree),
        extra in (0u32..14, 0u32..14),
    ) {
        let n = tree.len() + 1;
        prop_assert!(is_forest(&tree, n));
        prop_assert_eq!(components(n, &tree), 1);
        if let Some(e) = Edge::try_new(extra.0 % n as u32, extra.1 % n as u32) {
            if !tree.contains(&e) {
                let mut more = tree.clone();
                more.push(e);
                prop_assert!(!is_forest(&more, n));
            }
        }
    }

    #[test]
    fn document_round_trip((n, colors) in (2usize..9).prop_flat_map(assignment)) {
        let c = EdgeColoring::from_assignment(n, &colors);
        let text = ColoringDocument::from_coloring(&c, None).to_json();
        let back = ColoringDocument::parse(&text).unwrap().to_coloring().unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(ColoringDocument::from_coloring(&back, None).to_json(), text);
    }

    #[test]
    fn extensions_stay_valid(base in 2usize..=7, extra in 0usize..6) {
        let seed = known_witness(base).unwrap();
        let n = base + extra;
        let greedy = greedy_extend(&seed, n).unwrap();
        prop_assert!(verify_coloring(&greedy).is_valid);
        prop_assert!(greedy.k() >= seed.k());
        let star = star_extend(&seed, n).unwrap();
        prop_assert!(verify_coloring(&star).is_valid);
        prop_assert_eq!(star.k(), seed.k() + extra);
    }
}

#[test]
fn stored_witnesses_are_valid() {
    for (n, k) in [(2, 1), (3, 2), (4, 3), (5, 4), (6, 6), (7, 7)] {
        let w = known_witness(n).unwrap();
        assert_eq!(w.k(), k);
        assert!(verify_coloring(&w).is_valid, "n={n}");
    }
    assert!(known_witness(8).is_none());
}

#[test]
fn path_factorizations_are_hamiltonian() {
    for m in (2..=40).step_by(2) {
        let f = hamiltonian_path_factorization(m).unwrap();
        assert_eq!(f.paths().len(), m / 2);
        let mut covered = HashSet::new();
        for (j, path) in f.paths().iter().enumerate() {
            let vertices: HashSet<u32> = path.iter().copied().collect();
            assert_eq!(vertices.len(), m, "m={m} path {j} repeats a vertex");
            for (a, b) in f.path_edges(j) {
                assert!(covered.insert(Edge::new(a, b)), "m={m}: ({a},{b}) twice");
            }
        }
        assert_eq!(covered.len(), all_edges(m).len());
    }
    assert!(hamiltonian_path_factorization(5).is_err());
}

#[test]
fn line_intersection_is_symmetric_and_incident() {
    for q in [2u32, 3, 5, 7] {
        let plane = build_plane(q).unwrap();
        let lines = plane.lines();
        for (i, &l) in lines.iter().enumerate() {
            for &m in &lines[i + 1..] {
                let p = plane.line_intersection(l, m).unwrap();
                assert_eq!(plane.line_intersection(m, l).unwrap(), p);
                assert!(plane.incident(p, l) && plane.incident(p, m));
            }
            assert!(plane.line_intersection(l, l).is_err());
        }
    }
}

#[test]
fn lines_partition_the_edges() {
    for q in [3u32, 5] {
        let plane = build_plane(q).unwrap();
        let mut seen = HashSet::new();
        for &l in plane.lines() {
            let pts = plane.line_point_indices(l);
            for (i, &a) in pts.iter().enumerate() {
                for &b in &pts[i + 1..] {
                    assert!(seen.insert(Edge::new(a as u32, b as u32)));
                }
            }
        }
        assert_eq!(seen.len(), all_edges(plane.size()).len());
    }
}
