//! Exact distinguishing number, index and total distinguishing number, and
//! the closed-form label-count bounds.

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{LabelKind, Labeling, LabelingError};
use crate::symmetry::{
    edge_action, enumerate_automorphisms, labeling_stabilizer, AutomorphismSet, SymmetryError,
    SymmetryLimits,
};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub symmetry: SymmetryLimits,
    /// Maximum number of prefix nodes visited by one search.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            symmetry: SymmetryLimits::default(),
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistinguishingError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("undefined: {0}")]
    Undefined(&'static str),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishingResult {
    pub value: u32,
    pub certificate: Labeling,
    /// Prefix nodes visited over all label counts tried.
    pub nodes: u64,
}

/// True iff only the identity of `auts` preserves `l`.
pub fn is_distinguishing(
    g: &Graph,
    auts: &AutomorphismSet,
    l: &Labeling,
) -> Result<bool, SymmetryError> {
    Ok(labeling_stabilizer(auts, l, g)?.is_trivial())
}

pub fn distinguishing_number(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<DistinguishingResult, DistinguishingError> {
    let auts = enumerate_automorphisms(g, &limits.symmetry)?;
    minimum_labels(g, &auts, LabelKind::Vertex, limits)
}

pub fn distinguishing_index(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<DistinguishingResult, DistinguishingError> {
    let auts = enumerate_automorphisms(g, &limits.symmetry)?;
    minimum_labels(g, &auts, LabelKind::Edge, limits)
}

pub fn total_distinguishing_number(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<DistinguishingResult, DistinguishingError> {
    let auts = enumerate_automorphisms(g, &limits.symmetry)?;
    minimum_labels(g, &auts, LabelKind::Total, limits)
}

/// Least `d` admitting a distinguishing labeling of the given kind, with a
/// certificate. `auts` must be `Aut(g)`.
pub fn minimum_labels(
    g: &Graph,
    auts: &AutomorphismSet,
    kind: LabelKind,
    limits: &SearchLimits,
) -> Result<DistinguishingResult, DistinguishingError> {
    let space = ItemSpace::new(g, auts, kind)?;
    if kind == LabelKind::Edge && space.edges_cannot_distinguish() {
        return Err(DistinguishingError::Undefined(
            "a nontrivial automorphism fixes every edge",
        ));
    }
    let mut nodes = 0;
    for d in 1..=space.items.max(1) as u32 {
        let mut search = Search::new(&space, d, limits.node_budget.saturating_sub(nodes));
        let found = search.run();
        nodes += search.nodes;
        match found {
            Err(()) => {
                return Err(DistinguishingError::BudgetExceeded {
                    budget: limits.node_budget,
                })
            }
            Ok(Some(labels)) => {
                let certificate = space.to_labeling(&labels);
                assert!(
                    is_distinguishing(g, auts, &certificate)?,
                    "search produced an uncertified labeling"
                );
                return Ok(DistinguishingResult {
                    value: d,
                    certificate,
                    nodes,
                });
            }
            Ok(None) => {}
        }
    }
    unreachable!("all-distinct labels always distinguish once the edge case is excluded")
}

/// A distinguishing labeling with at most `d` labels, if one exists.
pub fn find_distinguishing(
    g: &Graph,
    auts: &AutomorphismSet,
    kind: LabelKind,
    d: u32,
    limits: &SearchLimits,
) -> Result<Option<Labeling>, DistinguishingError> {
    let space = ItemSpace::new(g, auts, kind)?;
    if kind == LabelKind::Edge && space.edges_cannot_distinguish() {
        return Err(DistinguishingError::Undefined(
            "a nontrivial automorphism fixes every edge",
        ));
    }
    let mut search = Search::new(&space, d.max(1), limits.node_budget);
    match search.run() {
        Err(()) => Err(DistinguishingError::BudgetExceeded {
            budget: limits.node_budget,
        }),
        Ok(found) => Ok(found.map(|l| space.to_labeling(&l))),
    }
}

/// Labeled items (vertices, edges, or both) laid out in search order, with
/// every nontrivial automorphism as a permutation of positions.
struct ItemSpace {
    kind: LabelKind,
    n: usize,
    items: usize,
    /// `order[p]` is the item placed at position `p`.
    order: Vec<usize>,
    /// Flat `perms[s * items + p]`: position of the image of position `p`.
    perms: Vec<u32>,
    invs: Vec<u32>,
    max_moved: Vec<u32>,
}

impl ItemSpace {
    fn new(g: &Graph, auts: &AutomorphismSet, kind: LabelKind) -> Result<ItemSpace, SymmetryError> {
        let n = g.n();
        let m = g.edge_count();
        let order = closure_order(g, kind);
        let items = order.len();
        let mut pos_of = vec![0u32; items];
        for (p, &it) in order.iter().enumerate() {
            pos_of[it] = p as u32;
        }
        let mut perms = Vec::new();
        let mut invs = Vec::new();
        let mut max_moved = Vec::new();
        for sigma in auts.elements().iter().filter(|p| !p.is_identity()) {
            let edge_img = if kind == LabelKind::Vertex {
                Vec::new()
            } else {
                edge_action(g, sigma)?
            };
            let item_img = |it: usize| match kind {
                LabelKind::Vertex => sigma.apply(it),
                LabelKind::Edge => edge_img[it],
                LabelKind::Total if it < n => sigma.apply(it),
                LabelKind::Total => n + edge_img[it - n],
            };
            let start = perms.len();
            perms.extend(order.iter().map(|&it| pos_of[item_img(it)]));
            invs.resize(start + items, 0);
            let mut moved = 0;
            for p in 0..items {
                let q = perms[start + p] as usize;
                invs[start + q] = p as u32;
                if q != p {
                    moved = p as u32;
                }
            }
            // an automorphism acting trivially on the items never moves anything
            max_moved.push(if perms[start..].iter().enumerate().all(|(p, &q)| p == q as usize) {
                u32::MAX
            } else {
                moved
            });
        }
        debug_assert!(kind != LabelKind::Edge || items == m);
        Ok(ItemSpace {
            kind,
            n,
            items,
            order,
            perms,
            invs,
            max_moved,
        })
    }

    fn group_len(&self) -> usize {
        self.max_moved.len()
    }

    fn edges_cannot_distinguish(&self) -> bool {
        self.max_moved.contains(&u32::MAX)
    }

    fn to_labeling(&self, by_position: &[u32]) -> Labeling {
        let mut by_item = vec![1; self.items];
        for (p, &it) in self.order.iter().enumerate() {
            by_item[it] = by_position[p];
        }
        let mut l = match self.kind {
            LabelKind::Vertex => Labeling::vertex(by_item),
            LabelKind::Edge => Labeling::edge(by_item),
            LabelKind::Total => {
                let edges = by_item.split_off(self.n);
                Labeling::total(by_item, edges)
            }
        };
        l.d = l.d.max(1);
        l
    }
}

/// DFS preorder of the vertices, each vertex followed by its edges to
/// vertices already placed. Vertex kind keeps only vertices, edge kind
/// only edges; total items number edges after the `n` vertices.
fn closure_order(g: &Graph, kind: LabelKind) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut preorder = Vec::with_capacity(n);
    for root in 0..n {
        if placed[root] {
            continue;
        }
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut placed[v], true) {
                continue;
            }
            preorder.push(v);
            let mut next: Vec<usize> = g.neighbors(v).filter(|&w| !placed[w]).collect();
            next.reverse();
            stack.extend(next);
        }
    }
    let mut rank = vec![0; n];
    for (i, &v) in preorder.iter().enumerate() {
        rank[v] = i;
    }
    let mut order = Vec::new();
    for (i, &v) in preorder.iter().enumerate() {
        if kind != LabelKind::Edge {
            order.push(v);
        }
        if kind != LabelKind::Vertex {
            let mut back: Vec<usize> = g.neighbors(v).filter(|&w| rank[w] < i).collect();
            back.sort_by_key(|&w| rank[w]);
            let offset = if kind == LabelKind::Total { n } else { 0 };
            order.extend(back.iter().map(|&w| offset + g.edge_index(v, w).expect("edge")));
        }
    }
    order
}

enum Undo {
    Lex { sigma: u32, j: u32, next: u32 },
    Map { slot: usize },
}

/// Depth-first search over labelings in position order with labels in
/// first-occurrence order. Tracks the automorphisms still consistent with
/// the prefix; the prefix is accepted once none remain. Prefixes that are
/// not lexicographically least in their orbit under Aut and label renaming
/// are cut.
struct Search<'a> {
    space: &'a ItemSpace,
    d: u32,
    budget: u64,
    nodes: u64,
    labels: Vec<u32>,
    alive: Vec<Vec<u32>>,
    lex_active: Vec<Vec<u32>>,
    lex_j: Vec<u32>,
    lex_next: Vec<u32>,
    /// Flat `lex_map[s * (d + 1) + value]`, 0 when unassigned.
    lex_map: Vec<u32>,
    undo: Vec<Undo>,
}

impl<'a> Search<'a> {
    fn new(space: &'a ItemSpace, d: u32, budget: u64) -> Search<'a> {
        let g = space.group_len();
        let all: Vec<u32> = (0..g as u32)
            .filter(|&s| space.max_moved[s as usize] != u32::MAX)
            .collect();
        Search {
            space,
            d,
            budget,
            nodes: 0,
            labels: vec![0; space.items],
            alive: vec![all.clone()],
            lex_active: vec![all],
            lex_j: vec![0; g],
            lex_next: vec![1; g],
            lex_map: vec![0; g * (d as usize + 1)],
            undo: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<Option<Vec<u32>>, ()> {
        if self.alive[0].is_empty() {
            return Ok(Some(vec![1; self.space.items]));
        }
        if self.descend(0, 0)? {
            Ok(Some(self.labels.clone()))
        } else {
            Ok(None)
        }
    }

    fn descend(&mut self, i: usize, max_used: u32) -> Result<bool, ()> {
        let top = max_used.saturating_add(1).min(self.d);
        for c in 1..=top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            self.labels[i] = c;
            let mark = self.undo.len();
            match self.step(i) {
                Step::Prune => {}
                Step::Accept => {
                    self.labels[i + 1..].fill(1);
                    return Ok(true);
                }
                Step::Continue => {
                    if self.descend(i + 1, max_used.max(c))? {
                        return Ok(true);
                    }
                    self.alive.pop();
                    self.lex_active.pop();
                }
            }
            self.rollback(mark);
        }
        Ok(false)
    }

    fn step(&mut self, i: usize) -> Step {
        let items = self.space.items;
        let labels = &self.labels;
        let mut alive = Vec::with_capacity(self.alive.last().map_or(0, Vec::len));
        for &s in self.alive.last().expect("alive stack") {
            let base = s as usize * items;
            let a = self.space.perms[base + i] as usize;
            let b = self.space.invs[base + i] as usize;
            if (a <= i && labels[a] != labels[i]) || (b < i && labels[b] != labels[i]) {
                continue;
            }
            if self.space.max_moved[s as usize] as usize <= i {
                return Step::Prune;
            }
            alive.push(s);
        }
        if alive.is_empty() {
            return Step::Accept;
        }
        if i + 1 == items {
            return Step::Prune;
        }

        let stride = self.d as usize + 1;
        let mut lex = Vec::with_capacity(self.lex_active.last().map_or(0, Vec::len));
        for &s in self.lex_active.last().expect("lex stack") {
            let su = s as usize;
            let base = su * items;
            let (mut j, mut next) = (self.lex_j[su], self.lex_next[su]);
            let saved = (j, next);
            let mut decided = false;
            while (j as usize) <= i {
                let img = self.space.perms[base + j as usize] as usize;
                if img > i {
                    break;
                }
                let value = labels[img] as usize;
                let slot = su * stride + value;
                if self.lex_map[slot] == 0 {
                    self.lex_map[slot] = next;
                    next += 1;
                    self.undo.push(Undo::Map { slot });
                }
                let normalized = self.lex_map[slot];
                let own = labels[j as usize];
                if normalized < own {
                    if saved != (j, next) {
                        self.undo.push(Undo::Lex {
                            sigma: s,
                            j: saved.0,
                            next: saved.1,
                        });
                    }
                    self.lex_j[su] = j;
                    self.lex_next[su] = next;
                    return Step::Prune;
                }
                if normalized > own {
                    decided = true;
                    break;
                }
                j += 1;
            }
            if saved != (j, next) {
                self.undo.push(Undo::Lex {
                    sigma: s,
                    j: saved.0,
                    next: saved.1,
                });
                self.lex_j[su] = j;
                self.lex_next[su] = next;
            }
            if !decided {
                lex.push(s);
            }
        }
        self.alive.push(alive);
        self.lex_active.push(lex);
        Step::Continue
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            match self.undo.pop().expect("undo entry") {
                Undo::Lex { sigma, j, next } => {
                    self.lex_j[sigma as usize] = j;
                    self.lex_next[sigma as usize] = next;
                }
                Undo::Map { slot } => self.lex_map[slot] = 0,
            }
        }
    }
}

enum Step {
    Prune,
    Accept,
    Continue,
}

/// `⌈√Δ⌉`.
pub fn kalinowski_bound(delta: u64) -> u64 {
    let mut s = (delta as f64).sqrt() as u64;
    while s * s < delta {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= delta {
        s -= 1;
    }
    s
}

/// Least `s >= 2` with `2^k + sum_{j=3}^{s} j^(k-1) >= Δ`.
pub fn sphere_bound(k: u32, delta: u64) -> u64 {
    let mut total = 2u128.saturating_pow(k);
    let mut s = 2u64;
    while total < delta as u128 {
        s += 1;
        total = total.saturating_add((s as u128).saturating_pow(k.saturating_sub(1)));
    }
    s
}

/// Least `s` with `s(s+1)/2 >= D′`.
pub fn pair_bound(dprime: u64) -> u64 {
    let mut s = 0u64;
    while s * (s + 1) / 2 < dprime {
        s += 1;
    }
    s
}

/// Number of reversal classes of non-palindromic `k`-tuples over `s` labels.
pub fn reversal_classes(s: u64, k: u32) -> u128 {
    let all = (s as u128).saturating_pow(k);
    let palindromes = (s as u128).saturating_pow(k.div_ceil(2));
    (all - palindromes) / 2
}

/// Least `s` with `reversal_classes(s, k) >= D′`.
pub fn tuple_bound(dprime: u64, k: u32) -> u64 {
    assert!(k >= 2, "tuple bound needs k >= 2");
    let mut s = 1u64;
    while reversal_classes(s, k) < dprime as u128 {
        s += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, star, Family};
    use crate::power::subdivide;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn aut(g: &Graph) -> AutomorphismSet {
        enumerate_automorphisms(g, &SymmetryLimits::default()).unwrap()
    }

    #[test]
    fn certificates() {
        let k3 = Graph::complete(3);
        assert!(is_distinguishing(&k3, &aut(&k3), &Labeling::vertex(vec![1, 2, 3])).unwrap());
        assert!(!is_distinguishing(&k3, &aut(&k3), &Labeling::vertex(vec![1, 1, 2])).unwrap());
        let c4 = cycle(4);
        // brute force over the 8 elements of D_4
        let l = Labeling::edge(vec![1, 1, 1, 2]);
        let fixing = aut(&c4)
            .elements()
            .iter()
            .filter(|p| {
                let act = edge_action(&c4, p).unwrap();
                (0..4).all(|e| l.edge_labels.as_ref().unwrap()[act[e]] == l.edge_labels.as_ref().unwrap()[e])
            })
            .count();
        assert_eq!(fixing, 2);
        assert!(!is_distinguishing(&c4, &aut(&c4), &l).unwrap());
    }

    #[test]
    fn distinguishing_numbers() {
        assert_eq!(distinguishing_number(&Graph::complete(4), &lim()).unwrap().value, 4);
        assert_eq!(distinguishing_number(&cycle(5), &lim()).unwrap().value, 3);
        assert_eq!(distinguishing_number(&path(9), &lim()).unwrap().value, 2);
        assert_eq!(distinguishing_number(&Graph::empty(1), &lim()).unwrap().value, 1);
        assert_eq!(distinguishing_number(&cycle(6), &lim()).unwrap().value, 2);
        assert_eq!(distinguishing_number(&star(4), &lim()).unwrap().value, 4);
    }

    #[test]
    fn distinguishing_indices() {
        let k33 = Graph::family(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(distinguishing_index(&k33, &lim()).unwrap().value, 3);
        assert_eq!(distinguishing_index(&cycle(6), &lim()).unwrap().value, 2);
        let spider = subdivide(&star(3), 2).unwrap().graph;
        assert_eq!(distinguishing_index(&spider, &lim()).unwrap().value, 2);
        assert!(matches!(
            distinguishing_index(&path(2), &lim()),
            Err(DistinguishingError::Undefined(_))
        ));
    }

    #[test]
    fn total_numbers() {
        assert_eq!(total_distinguishing_number(&star(4), &lim()).unwrap().value, 2);
        assert_eq!(total_distinguishing_number(&Graph::empty(1), &lim()).unwrap().value, 1);
        assert_eq!(total_distinguishing_number(&star(9), &lim()).unwrap().value, 3);
    }

    #[test]
    fn budget_is_loud() {
        let tiny = SearchLimits {
            node_budget: 3,
            ..SearchLimits::default()
        };
        assert_eq!(
            distinguishing_number(&cycle(5), &tiny),
            Err(DistinguishingError::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(kalinowski_bound(4), 2);
        assert_eq!(kalinowski_bound(1), 1);
        assert_eq!(kalinowski_bound(10), 4);
        assert_eq!(sphere_bound(2, 3), 2);
        assert_eq!(sphere_bound(2, 5), 3);
        assert_eq!(sphere_bound(3, 8), 2);
        assert_eq!(pair_bound(1), 1);
        assert_eq!(pair_bound(3), 2);
        assert_eq!(pair_bound(7), 4);
        assert_eq!(tuple_bound(2, 3), 2);
        assert_eq!(tuple_bound(1, 2), 2);
        assert_eq!(tuple_bound(6, 2), 4);
    }

    #[test]
    fn pair_bound_matches_closed_form() {
        for dp in 1..=500u64 {
            let closed = ((-1.0 + (1.0 + 8.0 * dp as f64).sqrt()) / 2.0 - 1e-9).ceil() as u64;
            assert_eq!(pair_bound(dp), closed, "D' = {dp}");
        }
    }

    #[test]
    fn reversal_class_counts_match_enumeration() {
        for s in 1..=4u64 {
            for k in 2..=5u32 {
                let mut classes = std::collections::BTreeSet::new();
                let total = s.pow(k);
                for code in 0..total {
                    let t: Vec<u64> = (0..k).map(|i| code / s.pow(i) % s).collect();
                    let r: Vec<u64> = t.iter().rev().copied().collect();
                    if t != r {
                        classes.insert(t.clone().min(r));
                    }
                }
                assert_eq!(reversal_classes(s, k), classes.len() as u128);
            }
        }
    }
}
