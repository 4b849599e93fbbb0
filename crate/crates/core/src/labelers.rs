//! Explicit distinguishing labelings of subdivisions, subdivision edge
//! labelings, and path powers. Every returned labeling has been checked
//! against the full automorphism group of its target graph.

use thiserror::Error;

use crate::distinguishing::{
    is_distinguishing, pair_bound, sphere_bound, tuple_bound,
};
use crate::graph::{star, Graph};
use crate::labeling::{LabelKind, Labeling};
use crate::metrics::Metrics;
use crate::power::{power, subdivide, SubdividedGraph};
use crate::symmetry::{enumerate_automorphisms, SymmetryError, SymmetryLimits};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelerError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
}

/// A certified labeling plus the label count the construction is supposed
/// to need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labeling: Labeling,
    pub claimed: i64,
}

impl Construction {
    pub fn labels_used(&self) -> usize {
        self.labeling.labels_used()
    }
}

fn certify(g: &Graph, labeling: Labeling, claimed: i64) -> Result<Construction, LabelerError> {
    labeling
        .validate(g)
        .map_err(|e| LabelerError::ConstructionFailure(e.to_string()))?;
    let auts = enumerate_automorphisms(g, &SymmetryLimits::default())?;
    if !is_distinguishing(g, &auts, &labeling)? {
        return Err(LabelerError::ConstructionFailure(
            "a nontrivial automorphism preserves the constructed labeling".into(),
        ));
    }
    Ok(Construction { labeling, claimed })
}

/// All `k`-tuples over `1..=s` in lexicographic order.
fn tuples(s: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut cur = if s == 0 { None } else { Some(vec![1u32; k]) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < s {
                next[i] += 1;
                next[i + 1..].fill(1);
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), LabelerError> {
    if ok {
        Ok(())
    } else {
        Err(LabelerError::Precondition(msg()))
    }
}

/// Vertex labeling of `K_{1,m}^{1/k}`: center 1, leg `i` (ordered from the
/// center) gets the `i`-th `k`-tuple over `1..=s` in lexicographic order.
pub fn star_subdivision_labeling(m: usize, k: usize, s: u32) -> Result<Construction, LabelerError> {
    // the center must be the unique vertex of degree m
    require(m >= 2 && k >= 1, || "need m >= 2 and k >= 1".into())?;
    require(s >= 2, || "need s >= 2".into())?;
    let available = (s as u128).saturating_pow(k as u32);
    if available < m as u128 {
        return Err(LabelerError::ConstructionFailure(format!(
            "{m} legs but only {available} distinct {k}-tuples over {s} labels"
        )));
    }
    let sg = subdivide(&star(m), k).expect("k >= 1");
    let mut labels = vec![1u32; sg.graph.n()];
    for (leaf, t) in (1..=m).zip(tuples(s, k)) {
        let leg = sg.leg(0, leaf).expect("star edge");
        for (&v, &c) in leg.iter().zip(&t) {
            labels[v] = c;
        }
    }
    certify(&sg.graph, Labeling::vertex(labels), s as i64)
}

fn cycle_subdivision_labeling(sg: &SubdividedGraph) -> Result<Construction, LabelerError> {
    let g = &sg.graph;
    let mut walk = vec![0usize];
    let mut prev = usize::MAX;
    while walk.len() < g.n() {
        let at = *walk.last().expect("nonempty walk");
        let next = g.neighbors(at).find(|&w| w != prev).expect("cycle continues");
        prev = at;
        walk.push(next);
    }
    let mut labels = vec![1u32; g.n()];
    // {0, 1, 3} has cyclic gaps 1, 2, N - 3, all distinct once N >= 6
    for p in [0, 1, 3] {
        labels[walk[p]] = 2;
    }
    certify(g, Labeling::vertex(labels), 2)
}

/// Vertex labeling of `G^{1/k}` from a BFS tree rooted at a maximum-degree
/// vertex, with `sphere_bound(k, Δ)` labels. Stars and cycles use their own
/// constructions.
pub fn bfs_sphere_labeling(g: &Graph, k: usize) -> Result<Construction, LabelerError> {
    require(g.n() >= 3, || "need n >= 3".into())?;
    require(g.is_connected(), || "graph must be connected".into())?;
    require(k >= 2, || "need k >= 2".into())?;
    let delta = g.max_degree();
    let s = sphere_bound(k as u32, delta as u64) as u32;
    let sg = subdivide(g, k).expect("k >= 1");
    if g.is_cycle() {
        return cycle_subdivision_labeling(&sg);
    }
    if g.is_star() {
        let star_sg = star_subdivision_labeling(delta, k, s)?;
        // carry the labels over to this graph's own numbering
        let center = (0..g.n()).find(|&v| g.degree(v) == delta).expect("center");
        let template = subdivide(&star(delta), k).expect("k >= 1");
        let src = star_sg.labeling.vertex_labels.as_ref().expect("vertex labels");
        let mut labels = vec![1u32; sg.graph.n()];
        labels[center] = src[0];
        for (i, leaf) in g.neighbors(center).enumerate() {
            let from = template.leg(0, i + 1).expect("template leg");
            let to = sg.leg(center, leaf).expect("leg");
            for (&a, &b) in from.iter().zip(&to) {
                labels[b] = src[a];
            }
        }
        return certify(&sg.graph, Labeling::vertex(labels), s as i64);
    }

    let n = g.n();
    let metrics = Metrics::new(g);
    let v0 = (0..n).find(|&v| g.degree(v) == delta).expect("max degree vertex");
    let mut parent = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut bfs = vec![v0];
    parent[v0] = v0;
    let mut head = 0;
    while head < bfs.len() {
        let u = bfs[head];
        head += 1;
        for w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                children[u].push(w);
                bfs.push(w);
            }
        }
    }
    let s1: Vec<usize> = children[v0].clone();
    let s2_nonempty = (0..n).any(|v| metrics.dist(v0, v) == 2);

    let (v1, v2, fallback) = if s2_nonempty {
        let v1 = s1
            .iter()
            .copied()
            .find(|&v| g.neighbors(v).any(|w| metrics.dist(v0, w) == 2))
            .unwrap_or(s1[0]);
        let v2 = s1.iter().copied().find(|&v| v != v1).expect("|S1| >= 2");
        (v1, v2, None)
    } else {
        // v0 dominates; there is an edge inside S1 since g is not a star
        let v1 = s1
            .iter()
            .copied()
            .find(|&v| g.neighbors(v).any(|w| w != v0))
            .expect("edge inside S1");
        let x = g.neighbors(v1).find(|&w| w != v0).expect("S1 neighbor");
        let v2 = s1
            .iter()
            .copied()
            .find(|&v| v != v1 && v != x)
            .ok_or_else(|| LabelerError::ConstructionFailure("S1 has fewer than 3 vertices".into()))?;
        (v1, v2, Some(x))
    };

    let all_ones = vec![1u32; k];
    let pool: Vec<Vec<u32>> = tuples(s, k).filter(|t| *t != all_ones).collect();
    let mut labels = vec![2u32; sg.graph.n()];
    labels[v0] = 2;
    let assign = |from: usize, to: usize, t: &[u32], labels: &mut Vec<u32>| {
        for (&v, &c) in sg.leg(from, to).expect("tree edge").iter().zip(t) {
            labels[v] = c;
        }
    };
    let exhausted = |parent: usize, need: usize| {
        LabelerError::ConstructionFailure(format!(
            "vertex {parent} needs {need} distinct tuples but only {} are admissible over {s} labels",
            pool.len()
        ))
    };

    let rest: Vec<usize> = s1.iter().copied().filter(|&v| v != v1 && v != v2).collect();
    if rest.len() > pool.len() {
        return Err(exhausted(v0, rest.len()));
    }
    assign(v0, v1, &all_ones, &mut labels);
    assign(v0, v2, &all_ones, &mut labels);
    for (&v, t) in rest.iter().zip(&pool) {
        assign(v0, v, t, &mut labels);
    }
    let mut shared_offset = 0;
    for &u in bfs.iter().skip(1) {
        let start = if u == v1 || u == v2 { shared_offset } else { 0 };
        let need = children[u].len();
        if start + need > pool.len() {
            return Err(exhausted(u, start + need));
        }
        for (&w, t) in children[u].iter().zip(&pool[start..]) {
            assign(u, w, t, &mut labels);
        }
        if u == v1 || u == v2 {
            shared_offset += need;
        }
    }
    if let Some(x) = fallback {
        let leg = sg.leg(v1, x).expect("S1 edge");
        for &w in &leg[..k - 1] {
            labels[w] = 1;
        }
    }
    certify(&sg.graph, Labeling::vertex(labels), s as i64)
}

fn check_base(g: &Graph) -> Result<(), LabelerError> {
    require(g.n() >= 3, || "need n >= 3".into())?;
    require(g.is_connected(), || "graph must be connected".into())?;
    require(!g.is_cycle(), || "cycles are excluded".into())
}

fn certified_edge_labeling(g: &Graph, el: &Labeling) -> Result<Vec<u32>, LabelerError> {
    require(el.kind == LabelKind::Edge, || "input must be an edge labeling".into())?;
    el.validate(g)
        .map_err(|e| LabelerError::Precondition(e.to_string()))?;
    let auts = enumerate_automorphisms(g, &SymmetryLimits::default())?;
    require(is_distinguishing(g, &auts, el)?, || {
        "input edge labeling is not distinguishing".into()
    })?;
    Ok(el.edge_labels.clone().expect("validated"))
}

/// Vertex labeling of `G^{1/(k+1)}` whose internal vertices on each
/// superedge copy, in order, the edge labels on the matching superedge of a
/// distinguishing edge labeling of `G^{1/k}`. Original vertices get 1.
pub fn edge_to_vertex_transfer(
    g: &Graph,
    k: usize,
    el: &Labeling,
) -> Result<Construction, LabelerError> {
    check_base(g)?;
    require(k >= 1, || "need k >= 1".into())?;
    let small = subdivide(g, k).expect("k >= 1");
    let edge_labels = certified_edge_labeling(&small.graph, el)?;
    let big = subdivide(g, k + 1).expect("k >= 1");
    let mut labels = vec![1u32; big.graph.n()];
    for e in 0..g.edge_count() {
        let path = small.superedge_edges(e);
        for (&w, &pe) in big.superedges[e].internal.iter().zip(&path) {
            labels[w] = edge_labels[pe];
        }
    }
    certify(&big.graph, Labeling::vertex(labels), el.labels_used() as i64)
}

/// Distinct label values of `labels`, ascending, as class ids.
fn classes(labels: &[u32]) -> Vec<u32> {
    let mut values = labels.to_vec();
    values.sort_unstable();
    values.dedup();
    values
}

/// Edge labeling of `G^{1/2}`: each class of a distinguishing edge
/// labeling of `G` gets its own unordered pair of distinct labels, written
/// from the lower endpoint. Pairs come in the order (1,2), (1,3), (2,3), ...
pub fn pair_edge_labeling(g: &Graph, el: &Labeling) -> Result<Construction, LabelerError> {
    check_base(g)?;
    let edge_labels = certified_edge_labeling(g, el)?;
    let values = classes(&edge_labels);
    let claimed = pair_bound(values.len() as u64);
    let mut s = claimed.max(2);
    while s * (s - 1) / 2 < values.len() as u64 {
        s += 1;
    }
    let pairs: Vec<(u32, u32)> = (2..=s as u32)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .collect();
    let sg = subdivide(g, 2).expect("k >= 1");
    let mut labels = vec![1u32; sg.graph.edge_count()];
    for (e, &c) in edge_labels.iter().enumerate() {
        let (a, b) = pairs[values.binary_search(&c).expect("class")];
        let path = sg.superedge_edges(e);
        labels[path[0]] = a;
        labels[path[1]] = b;
    }
    certify(&sg.graph, Labeling::edge(labels), claimed as i64)
}

/// Edge labeling of `G^{1/k}`: each class of a distinguishing edge
/// labeling of `G` gets a non-palindromic `k`-tuple, no two classes sharing
/// a tuple up to reversal, over `tuple_bound` labels. Tuples are written
/// along the superedge from its lower endpoint.
pub fn tuple_edge_labeling(g: &Graph, k: usize, el: &Labeling) -> Result<Construction, LabelerError> {
    check_base(g)?;
    require(k >= 2, || "need k >= 2".into())?;
    let edge_labels = certified_edge_labeling(g, el)?;
    let values = classes(&edge_labels);
    let s = tuple_bound(values.len() as u64, k as u32) as u32;
    let mut chosen: Vec<Vec<u32>> = Vec::with_capacity(values.len());
    for t in tuples(s, k) {
        if chosen.len() == values.len() {
            break;
        }
        let r: Vec<u32> = t.iter().rev().copied().collect();
        if r != t && !chosen.contains(&r) {
            chosen.push(t);
        }
    }
    if chosen.len() < values.len() {
        return Err(LabelerError::ConstructionFailure(format!(
            "{} classes but only {} reversal classes over {s} labels",
            values.len(),
            chosen.len()
        )));
    }
    let sg = subdivide(g, k).expect("k >= 1");
    let mut labels = vec![1u32; sg.graph.edge_count()];
    for (e, &c) in edge_labels.iter().enumerate() {
        let t = &chosen[values.binary_search(&c).expect("class")];
        for (&pe, &x) in sg.superedge_edges(e).iter().zip(t) {
            labels[pe] = x;
        }
    }
    certify(&sg.graph, Labeling::edge(labels), s as i64)
}

/// Vertex labeling of `P_n^k` (vertices in path order). Mirror pairs of
/// vertices below full degree get labels 1 and 2; the full-degree vertices,
/// which form a clique of twins, get distinct labels. `claimed` is 2 for
/// `k <= r` and `2k - n` above, `r = floor(n/2)` being the radius of `P_n`.
pub fn path_power_labeling(n: usize, k: usize) -> Result<Construction, LabelerError> {
    require(n >= 4, || "need n >= 4".into())?;
    require((1..n).contains(&k), || "need 1 <= k <= n - 1".into())?;
    let r = n / 2;
    let g = power(&crate::graph::path(n), k).expect("k >= 1");
    let mut labels = vec![1u32; n];
    let full: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    for (i, &v) in full.iter().enumerate() {
        labels[v] = i as u32 + 1;
    }
    for i in 0..n / 2 {
        if g.degree(i) < n - 1 {
            labels[n - 1 - i] = 2;
        }
    }
    let claimed = if k <= r { 2 } else { 2 * k as i64 - n as i64 };
    certify(&g, Labeling::vertex(labels), claimed)
}
