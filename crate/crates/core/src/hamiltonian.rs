use thiserror::Error;

use crate::graph::Graph;

/// Default vertex cap for the exponential Hamiltonian path search.
pub const DEFAULT_HAMILTONIAN_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("skipped: Hamiltonian path search on {n} vertices exceeds the cap of {cap}")]
pub struct HamiltonianSkipped {
    pub n: usize,
    pub cap: usize,
}

/// Whether `g` has a Hamiltonian path, by backtracking from every start
/// vertex. Graphs above `cap` vertices are refused, never guessed.
pub fn hamiltonian_path_exists(g: &Graph, cap: usize) -> Result<bool, HamiltonianSkipped> {
    let n = g.n();
    if n > cap {
        return Err(HamiltonianSkipped { n, cap });
    }
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    // more than two degree-one vertices rules out a spanning path
    if (0..n).filter(|&v| g.degree(v) == 1).count() > 2 {
        return Ok(false);
    }
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        if extend(g, start, 1, &mut visited) {
            return Ok(true);
        }
        visited[start] = false;
    }
    Ok(false)
}

fn extend(g: &Graph, at: usize, len: usize, visited: &mut [bool]) -> bool {
    if len == g.n() {
        return true;
    }
    for w in g.neighbors(at) {
        if !visited[w] {
            visited[w] = true;
            if extend(g, w, len + 1, visited) {
                return true;
            }
            visited[w] = false;
        }
    }
    false
}
