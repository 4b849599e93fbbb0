//! Naive reference implementations for cross-checking the pruned searches.
//! Everything here is exponential and meant for tiny graphs only.

use crate::graph::Graph;
use crate::labeling::{LabelKind, Labeling};
use crate::symmetry::{is_automorphism, labeling_stabilizer, AutomorphismSet, Permutation};

/// `Aut(g)` by testing all `n!` permutations.
pub fn naive_automorphisms(g: &Graph) -> AutomorphismSet {
    let n = g.n();
    let mut found = Vec::new();
    let mut image: Vec<usize> = (0..n).collect();
    loop {
        let p = Permutation::new(image.clone()).expect("permutation");
        if is_automorphism(g, &p).expect("length matches") {
            found.push(p);
        }
        if !next_permutation(&mut image) {
            break;
        }
    }
    AutomorphismSet::from_elements(n, found)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("successor");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Least `d` such that some labeling of the given kind with labels in
/// `1..=d` is distinguishing, trying every labeling. `None` when even
/// all-distinct labels fail.
pub fn naive_minimum_labels(g: &Graph, auts: &AutomorphismSet, kind: LabelKind) -> Option<u32> {
    let (nv, ne) = match kind {
        LabelKind::Vertex => (g.n(), 0),
        LabelKind::Edge => (0, g.edge_count()),
        LabelKind::Total => (g.n(), g.edge_count()),
    };
    let items = nv + ne;
    for d in 1..=items.max(1) as u32 {
        let mut labels = vec![1u32; items];
        loop {
            let l = build(kind, &labels, nv, d);
            if labeling_stabilizer(auts, &l, g).expect("valid").is_trivial() {
                return Some(d);
            }
            // odometer increment
            let mut pos = 0;
            while pos < items && labels[pos] == d {
                labels[pos] = 1;
                pos += 1;
            }
            if pos == items {
                break;
            }
            labels[pos] += 1;
        }
    }
    None
}

fn build(kind: LabelKind, labels: &[u32], nv: usize, d: u32) -> Labeling {
    let mut l = match kind {
        LabelKind::Vertex => Labeling::vertex(labels.to_vec()),
        LabelKind::Edge => Labeling::edge(labels.to_vec()),
        LabelKind::Total => Labeling::total(labels[..nv].to_vec(), labels[nv..].to_vec()),
    };
    l.d = d;
    l
}
