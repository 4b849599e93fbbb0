//! Automorphism groups of small graphs and their actions on vertices,
//! edges, and subdivision base vertices.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{LabelKind, Labeling, LabelingError};
use crate::metrics::{Metrics, INFINITE};
use crate::power::SubdividedGraph;

pub const DEFAULT_MAX_ORDER: usize = 1_000_000;
pub const DEFAULT_MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("permutation has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("permutation is not an automorphism")]
    NotAutomorphism,
    #[error("automorphism group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    VertexCapExceeded { n: usize, cap: usize },
    #[error("base vertex {vertex} maps to internal vertex {image}")]
    InternalImage { vertex: usize, image: usize },
    #[error("restriction is not an automorphism of the base graph")]
    NotBaseAutomorphism,
    #[error("groups act on {0} and {1} vertices")]
    VertexCountMismatch(usize, usize),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// Caps for automorphism enumeration. Exceeding either is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryLimits {
    pub max_order: usize,
    pub max_vertices: usize,
}

impl Default for SymmetryLimits {
    fn default() -> Self {
        SymmetryLimits {
            max_order: DEFAULT_MAX_ORDER,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// A bijection on `0..n`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation, SymmetryError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(SymmetryError::NotBijection(n));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Explicit list of automorphisms, sorted lexicographically by image array.
/// The identity is always the first element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AutomorphismSet {
    #[serde(skip)]
    n: usize,
    elements: Vec<Permutation>,
}

impl AutomorphismSet {
    /// Wraps a list of permutations on `n` points; sorts and dedups it.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> AutomorphismSet {
        elements.sort();
        elements.dedup();
        AutomorphismSet { n, elements }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Identity present, closed under composition and inverse. Quadratic in
    /// the order; meant for tests and small groups.
    pub fn is_group(&self) -> bool {
        if !self.contains(&Permutation::identity(self.n)) {
            return false;
        }
        self.elements.iter().all(|a| {
            self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.then(b)))
        })
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, SymmetryError> {
    if p.len() != g.n() {
        return Err(SymmetryError::LengthMismatch {
            expected: g.n(),
            got: p.len(),
        });
    }
    // a bijection mapping every edge to an edge preserves non-edges too
    Ok(g.edges().iter().all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

fn factorial_capped(n: usize, cap: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, i| acc.checked_mul(i).filter(|&x| x <= cap))
}

/// Enumerates `Aut(g)` by backtracking over vertex images in id order.
///
/// Candidates start from the classes of the invariant (degree, sorted
/// distance row); placing `v -> w` intersects every unplaced vertex's domain
/// with the sphere around `w` at the matching distance, so preserving all
/// distances to placed vertices is enforced as the search goes.
pub fn enumerate_automorphisms(
    g: &Graph,
    limits: &SymmetryLimits,
) -> Result<AutomorphismSet, SymmetryError> {
    let n = g.n();
    if n > limits.max_vertices {
        return Err(SymmetryError::VertexCapExceeded {
            n,
            cap: limits.max_vertices,
        });
    }
    if (g.is_complete() || g.edge_count() == 0)
        && factorial_capped(n, limits.max_order).is_none()
    {
        return Err(SymmetryError::OrderCapExceeded {
            cap: limits.max_order,
        });
    }

    let m = Metrics::new(g);
    let max_finite = (0..n * n)
        .map(|i| m.dist(i / n, i % n))
        .filter(|&d| d != INFINITE)
        .max()
        .unwrap_or(0) as usize;
    let bucket = |d: u32| if d == INFINITE { max_finite + 1 } else { d as usize };
    let spheres: Vec<Vec<FixedBitSet>> = (0..n)
        .map(|x| {
            let mut rows = vec![FixedBitSet::with_capacity(n); max_finite + 2];
            for y in 0..n {
                rows[bucket(m.dist(x, y))].insert(y);
            }
            rows
        })
        .collect();

    let keys: Vec<(usize, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut row = m.row(v).to_vec();
            row.sort_unstable();
            (g.degree(v), row)
        })
        .collect();
    let domains: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut d = FixedBitSet::with_capacity(n);
            d.extend((0..n).filter(|&w| keys[w] == keys[v]));
            d
        })
        .collect();

    let mut search = AutSearch {
        n,
        dist: &m,
        spheres: &spheres,
        bucket: &bucket,
        image: vec![usize::MAX; n],
        found: Vec::new(),
        cap: limits.max_order,
    };
    if n > 0 {
        search.place(0, domains)?;
    } else {
        search.found.push(Permutation(Vec::new()));
    }
    let found = search.found;
    Ok(AutomorphismSet { n, elements: found })
}

struct AutSearch<'a, F: Fn(u32) -> usize> {
    n: usize,
    dist: &'a Metrics,
    spheres: &'a [Vec<FixedBitSet>],
    bucket: &'a F,
    image: Vec<usize>,
    found: Vec<Permutation>,
    cap: usize,
}

impl<F: Fn(u32) -> usize> AutSearch<'_, F> {
    fn place(&mut self, v: usize, domains: Vec<FixedBitSet>) -> Result<(), SymmetryError> {
        if v == self.n {
            if self.found.len() == self.cap {
                return Err(SymmetryError::OrderCapExceeded { cap: self.cap });
            }
            self.found.push(Permutation(self.image.clone()));
            return Ok(());
        }
        'candidates: for w in domains[v].ones() {
            self.image[v] = w;
            let mut next = domains.clone();
            for (u, dom) in next.iter_mut().enumerate().skip(v + 1) {
                dom.intersect_with(&self.spheres[w][(self.bucket)(self.dist.dist(v, u))]);
                dom.set(w, false);
                if dom.is_clear() {
                    continue 'candidates;
                }
            }
            self.place(v + 1, next)?;
        }
        self.image[v] = usize::MAX;
        Ok(())
    }
}

/// Permutation of the canonical edge list induced by an automorphism:
/// entry `e` is the index of `{p(u), p(v)}` for edge `e = {u, v}`.
pub fn edge_action(g: &Graph, p: &Permutation) -> Result<Vec<usize>, SymmetryError> {
    if !is_automorphism(g, p)? {
        return Err(SymmetryError::NotAutomorphism);
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| g.edge_index(p.apply(u), p.apply(v)).expect("automorphism maps edges"))
        .collect())
}

/// Restriction of an automorphism of `G^{1/k}` to the original vertices.
pub fn restrict_to_base(sg: &SubdividedGraph, p: &Permutation) -> Result<Permutation, SymmetryError> {
    if !is_automorphism(&sg.graph, p)? {
        return Err(SymmetryError::NotAutomorphism);
    }
    let image: Vec<usize> = p.images()[..sg.base_n].to_vec();
    if let Some((vertex, &img)) = image.iter().enumerate().find(|&(_, &x)| x >= sg.base_n) {
        return Err(SymmetryError::InternalImage { vertex, image: img });
    }
    let r = Permutation::new(image).map_err(|_| SymmetryError::NotBaseAutomorphism)?;
    if !is_automorphism(&sg.base, &r)? {
        return Err(SymmetryError::NotBaseAutomorphism);
    }
    Ok(r)
}

/// Whether every element of `a` lies in `b`.
pub fn is_subgroup(a: &AutomorphismSet, b: &AutomorphismSet) -> Result<bool, SymmetryError> {
    if a.n != b.n {
        return Err(SymmetryError::VertexCountMismatch(a.n, b.n));
    }
    let lookup: HashSet<&Permutation> = b.elements.iter().collect();
    Ok(a.elements.iter().all(|p| lookup.contains(p)))
}

/// The elements of `auts` that preserve every label of `labeling`.
pub fn labeling_stabilizer(
    auts: &AutomorphismSet,
    labeling: &Labeling,
    g: &Graph,
) -> Result<AutomorphismSet, SymmetryError> {
    labeling.validate(g)?;
    if auts.n != g.n() {
        return Err(SymmetryError::VertexCountMismatch(auts.n, g.n()));
    }
    let mut kept = Vec::new();
    for p in &auts.elements {
        let vertex_ok = labeling
            .vertex_labels
            .as_ref()
            .is_none_or(|l| (0..g.n()).all(|v| l[p.apply(v)] == l[v]));
        let edge_ok = vertex_ok
            && match &labeling.edge_labels {
                Some(l) => {
                    let action = edge_action(g, p)?;
                    action.iter().enumerate().all(|(e, &f)| l[f] == l[e])
                }
                None => true,
            };
        if vertex_ok && edge_ok {
            kept.push(p.clone());
        }
    }
    debug_assert!(labeling.kind != LabelKind::Total || labeling.edge_labels.is_some());
    Ok(AutomorphismSet {
        n: auts.n,
        elements: kept,
    })
}
