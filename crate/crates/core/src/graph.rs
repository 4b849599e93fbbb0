//! Immutable simple undirected graphs and the standard families.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{family} requires parameter >= {min}, got {got}")]
    FamilyParameter {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one bitset row per vertex together with the canonical
/// edge list: pairs `(u, v)` with `u < v`, sorted lexicographically. Edge
/// indices used by edge labelings always refer to positions in that list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse; the pair
    /// order within each edge is irrelevant.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_rows(adj))
    }

    pub(crate) fn from_rows(adj: Vec<FixedBitSet>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            for v in row.ones() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph { n, adj, edges }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![FixedBitSet::with_capacity(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, row) in adj.iter_mut().enumerate() {
            row.insert_range(..);
            row.set(u, false);
        }
        Graph::from_rows(adj)
    }

    pub fn family(kind: Family) -> Result<Graph, GraphError> {
        kind.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Index of edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut queue = VecDeque::from([0]);
        seen.insert(0);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].ones() {
                if !seen.put(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.count_ones(..) == self.n
    }

    /// Connected, at least three vertices, every degree two.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Connected with `n - 1` edges and maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.n >= 1
            && self.edges.len() == self.n - 1
            && self.max_degree() <= 2
            && self.is_connected()
    }

    /// `K_{1,m}` for some `m >= 1`, in any vertex numbering.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.edges.len() == self.n - 1
            && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].ones() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Adds one vertex (id `n`) adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: impl IntoIterator<Item = usize>) -> Graph {
        let n = self.n + 1;
        let mut adj: Vec<FixedBitSet> = self
            .adj
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.grow(n);
                r
            })
            .collect();
        adj.push(FixedBitSet::with_capacity(n));
        for u in neighbors {
            adj[u].insert(self.n);
            adj[self.n].insert(u);
        }
        Graph::from_rows(adj)
    }

    /// Relabels vertex `v` as `order.position(v)`, i.e. `order[i]` becomes `i`.
    pub fn relabel_by_order(&self, order: &[usize]) -> Graph {
        let mut pos = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (pos[u], pos[v])))
            .expect("relabeling keeps a simple graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Identity-map equality: same order and the same edge set. This is not an
/// isomorphism test.
pub fn graph_equal(a: &Graph, b: &Graph) -> bool {
    a.n == b.n && a.edges == b.edges
}

/// Standard families with fixed vertex numbering: paths and cycles in
/// traversal order, star center 0, fan apex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// `K_1 + 2K_2`: apex 0, leaf edges {1,2} and {3,4}.
    Fan2,
}

impl Family {
    fn build(self) -> Result<Graph, GraphError> {
        let check = |family, min, got| {
            if got < min {
                Err(GraphError::FamilyParameter { family, min, got })
            } else {
                Ok(())
            }
        };
        match self {
            Family::Path(n) => {
                check("path", 1, n)?;
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                check("cycle", 3, n)?;
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                check("complete", 1, n)?;
                Ok(Graph::complete(n))
            }
            Family::Star(m) => {
                check("star", 1, m)?;
                Graph::new(m + 1, (1..=m).map(|i| (0, i)))
            }
            Family::CompleteBipartite(a, b) => {
                check("complete_bipartite", 1, a)?;
                check("complete_bipartite", 1, b)?;
                Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            Family::Fan2 => Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]),
        }
    }
}

pub fn path(n: usize) -> Graph {
    Graph::family(Family::Path(n)).expect("path order >= 1")
}

pub fn cycle(n: usize) -> Graph {
    Graph::family(Family::Cycle(n)).expect("cycle order >= 3")
}

pub fn star(m: usize) -> Graph {
    Graph::family(Family::Star(m)).expect("star with at least one leaf")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(graph_equal(&p3, &path(3)));
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let g = Graph::new(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn families() {
        assert_eq!(cycle(3).edge_count(), 3);
        let mut degs = star(3).degrees();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 3]);
        let fan = Graph::family(Family::Fan2).unwrap();
        assert_eq!((fan.n(), fan.edge_count(), fan.degree(0)), (5, 6, 4));
        assert!(Graph::family(Family::Cycle(2)).is_err());
        assert!(Graph::family(Family::Path(0)).is_err());
        assert_eq!(Graph::family(Family::CompleteBipartite(3, 3)).unwrap().edge_count(), 9);
    }

    #[test]
    fn shape_predicates() {
        assert!(cycle(5).is_cycle() && !path(5).is_cycle());
        assert!(path(4).is_path() && !star(3).is_path());
        assert!(star(3).is_star() && !path(4).is_star());
        assert!(cycle(6).is_bipartite() && !cycle(5).is_bipartite());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(!graph_equal(&path(3), &cycle(3)));
    }

    #[test]
    fn edge_index_is_canonical() {
        let c4 = cycle(4);
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(c4.edge_index(3, 0), Some(1));
        assert_eq!(c4.edge_index(0, 2), None);
    }
}
