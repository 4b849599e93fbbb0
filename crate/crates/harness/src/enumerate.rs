//! Graph supplies: every graph (or connected graph) up to isomorphism on a
//! few vertices, and seeded random connected graphs beyond that.

use std::collections::HashSet;

use graphpow_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const MAX_EXHAUSTIVE_N: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_N}, got {0}")]
pub struct EnumerationRange(pub usize);

/// Canonical code of `g`: the least upper-triangle bit string (graph6 bit
/// order) over all vertex orders that list the cells of the stable colour
/// refinement in colour order.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes fit 64 bits only for n <= 11");
    let colours = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_colour: Vec<(usize, usize)> = colours.iter().copied().zip(0..n).collect();
    by_colour.sort_unstable();
    for (c, v) in by_colour {
        match cells.last_mut() {
            Some(cell) if colours[cell[0]] == c => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    search_orders(g, &mut cells, 0, &mut order, &mut best);
    best
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    code
}

fn search_orders(
    g: &Graph,
    cells: &mut [Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).min(code_of(g, order));
        return;
    }
    permute(g, cells, cell, 0, order, best);
}

fn permute(
    g: &Graph,
    cells: &mut [Vec<usize>],
    cell: usize,
    at: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    let len = cells[cell].len();
    if at == len {
        search_orders(g, cells, cell + 1, order, best);
        return;
    }
    for i in at..len {
        cells[cell].swap(at, i);
        order.push(cells[cell][at]);
        permute(g, cells, cell, at + 1, order, best);
        order.pop();
        cells[cell].swap(at, i);
    }
}

/// Stable colour refinement starting from degrees. Colours are ranks of
/// isomorphism-invariant signatures, so equal graphs up to relabeling get
/// equal colour multisets.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colours = g.degrees();
    let mut classes = count_distinct(&colours);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| colours[w]).collect();
                around.sort_unstable();
                (colours[v], around)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("present"))
            .collect();
        let next_classes = sorted.len();
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    xs.iter().collect::<HashSet<_>>().len()
}

/// One representative of every isomorphism class on `n` vertices, ordered
/// by canonical code. Built by adding a vertex to every class on `n - 1`.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>, EnumerationRange> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(EnumerationRange(n));
    }
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (size - 1)) {
                let h = g.with_vertex((0..size - 1).filter(|&v| mask >> v & 1 == 1));
                let code = canonical_code(&h);
                if seen.insert(code) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationRange> {
    Ok(enumerate_all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// `count` seeded random connected graphs on `n` vertices: a random
/// recursive tree plus each remaining pair with a per-graph density.
pub fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..count)
        .map(|_| {
            let density: f64 = rng.gen_range(0.05..0.6);
            let mut edges: Vec<(usize, usize)> =
                (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(density) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, edges).expect("valid ids")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphpow_core::{cycle, path};

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (1..=6).map(|n| enumerate_all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn three_vertices() {
        let g = enumerate_connected_graphs(3).unwrap();
        assert!(g.iter().any(|h| h.is_path()) && g.iter().any(|h| h.is_cycle()));
        assert_eq!(enumerate_connected_graphs(1).unwrap(), vec![Graph::empty(1)]);
        assert_eq!(enumerate_all_graphs(8), Err(EnumerationRange(8)));
    }

    #[test]
    fn codes_are_invariant() {
        let g = path(6);
        let h = g.relabel_by_order(&[3, 0, 5, 1, 4, 2]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&path(6)), canonical_code(&cycle(6)));
    }

    #[test]
    fn random_graphs_are_seeded_and_connected() {
        let a = random_connected_graphs(9, 5, 7);
        assert_eq!(a, random_connected_graphs(9, 5, 7));
        assert_ne!(a, random_connected_graphs(9, 5, 8));
        assert!(a.iter().all(|g| g.is_connected() && g.n() == 9));
    }
}
