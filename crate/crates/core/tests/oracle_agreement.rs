#![cfg(feature = "oracle")]

use std::collections::BTreeMap;

use graphpow_core::oracle::{naive_automorphisms, naive_minimum_labels};
use graphpow_core::*;

/// One representative per isomorphism class of graphs on `n` vertices,
/// picked as the permutation image with the least graph6 string.
fn classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut perms = vec![(0..n).collect::<Vec<_>>()];
    let mut p: Vec<usize> = (0..n).collect();
    while next(&mut p) {
        perms.push(p.clone());
    }
    let mut reps = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let canon = perms
            .iter()
            .map(|p| write_graph6(&g.relabel_by_order(p)))
            .min()
            .unwrap();
        reps.entry(canon).or_insert(g);
    }
    reps.into_values().collect()
}

fn next(a: &mut [usize]) -> bool {
    let Some(i) = (0..a.len().saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (0..=5).map(|n| classes(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
}

#[test]
fn automorphisms_agree_with_brute_force() {
    for n in 0..=5 {
        for g in classes(n) {
            assert_eq!(
                enumerate_automorphisms(&g, &SymmetryLimits::default()).unwrap(),
                naive_automorphisms(&g),
                "{}",
                write_graph6(&g)
            );
        }
    }
    for n in 6..=8 {
        for g in [path(n), cycle(n), star(n - 1), power(&cycle(n), 2).unwrap()] {
            assert_eq!(
                enumerate_automorphisms(&g, &SymmetryLimits::default()).unwrap(),
                naive_automorphisms(&g)
            );
        }
    }
}

#[test]
fn minimum_labels_agree_with_brute_force() {
    let lim = SearchLimits::default();
    for n in 1..=5 {
        for g in classes(n) {
            let auts = naive_automorphisms(&g);
            for kind in [LabelKind::Vertex, LabelKind::Edge, LabelKind::Total] {
                let fast = minimum_labels(&g, &auts, kind, &lim);
                let slow = naive_minimum_labels(&g, &auts, kind);
                match (fast, slow) {
                    (Ok(r), Some(d)) => assert_eq!(r.value, d, "{} {kind:?}", write_graph6(&g)),
                    (Err(DistinguishingError::Undefined(_)), None) => {}
                    (f, s) => panic!("{} {kind:?}: {f:?} vs {s:?}", write_graph6(&g)),
                }
            }
        }
    }
}

#[test]
fn subdivided_small_graphs_agree() {
    let lim = SearchLimits::default();
    for g in classes(4).into_iter().filter(|g| g.is_connected() && g.n() > 1) {
        let sg = subdivide(&g, 2).unwrap().graph;
        let auts = naive_automorphisms(&sg);
        assert_eq!(
            minimum_labels(&sg, &auts, LabelKind::Vertex, &lim).unwrap().value,
            naive_minimum_labels(&sg, &auts, LabelKind::Vertex).unwrap()
        );
    }
}
