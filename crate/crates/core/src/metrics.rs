use std::collections::VecDeque;

use crate::graph::Graph;

/// Distance sentinel for unreachable pairs.
pub const INFINITE: u32 = u32::MAX;

/// All-pairs distances and the eccentricity-derived quantities.
///
/// Eccentricity, radius, diameter and center are `None` for disconnected
/// graphs (and for the empty graph).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    n: usize,
    dist: Vec<u32>,
    ecc: Option<Vec<u32>>,
}

impl Metrics {
    pub fn new(g: &Graph) -> Metrics {
        let n = g.n();
        let mut dist = vec![INFINITE; n * n];
        for s in 0..n {
            bfs_into(g, s, &mut dist[s * n..(s + 1) * n], u32::MAX);
        }
        let connected = n > 0 && dist.iter().all(|&d| d != INFINITE);
        let ecc = connected.then(|| {
            (0..n)
                .map(|v| *dist[v * n..(v + 1) * n].iter().max().unwrap())
                .collect()
        });
        Metrics { n, dist, ecc }
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.ecc.is_some()
    }

    pub fn eccentricities(&self) -> Option<&[u32]> {
        self.ecc.as_deref()
    }

    pub fn radius(&self) -> Option<u32> {
        self.ecc.as_ref().map(|e| *e.iter().min().unwrap())
    }

    pub fn diameter(&self) -> Option<u32> {
        self.ecc.as_ref().map(|e| *e.iter().max().unwrap())
    }

    pub fn center(&self) -> Option<Vec<usize>> {
        let r = self.radius()?;
        let ecc = self.ecc.as_ref()?;
        Some((0..self.n).filter(|&v| ecc[v] == r).collect())
    }

    pub fn sphere(&self, x: usize, k: u32) -> Vec<usize> {
        (0..self.n).filter(|&v| self.dist(x, v) == k).collect()
    }
}

pub fn metrics(g: &Graph) -> Metrics {
    Metrics::new(g)
}

/// BFS distances from `source`, stopping after depth `limit`; vertices beyond
/// the limit keep `INFINITE`.
pub(crate) fn bfs_into(g: &Graph, source: usize, out: &mut [u32], limit: u32) {
    out.fill(INFINITE);
    out[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = out[u];
        if du >= limit {
            continue;
        }
        for w in g.neighbors(u) {
            if out[w] == INFINITE {
                out[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

pub fn distances_from(g: &Graph, source: usize) -> Vec<u32> {
    let mut out = vec![INFINITE; g.n()];
    bfs_into(g, source, &mut out, u32::MAX);
    out
}

/// `S_k(x)`: the vertices at distance exactly `k` from `x`.
pub fn sphere(g: &Graph, x: usize, k: u32) -> Vec<usize> {
    let d = distances_from(g, x);
    (0..g.n()).filter(|&v| d[v] == k).collect()
}
