use std::collections::HashSet;

use graphpow_harness::enumerate::{
    canonical_code, enumerate_all_graphs, enumerate_connected_graphs, random_connected_graphs,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn seven_vertices() {
    assert_eq!(enumerate_all_graphs(7).unwrap().len(), 1044);
    let connected = enumerate_connected_graphs(7).unwrap();
    assert_eq!(connected.len(), 853);
    let codes: HashSet<u64> = connected.iter().map(canonical_code).collect();
    assert_eq!(codes.len(), 853);
}

#[test]
fn codes_survive_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in random_connected_graphs(10, 40, 3) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel_by_order(&order)));
    }
}

#[test]
fn every_six_vertex_graph_is_found_once() {
    // all 2^15 labeled graphs on 6 vertices fall into exactly the listed classes
    let listed: HashSet<u64> = enumerate_all_graphs(6).unwrap().iter().map(canonical_code).collect();
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        let g = graphpow_core::Graph::new(6, edges).unwrap();
        seen.insert(canonical_code(&g));
    }
    assert_eq!(seen, listed);
}
