//! Shared limits, graph supplies, and memoized exact quantities.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use graphpow_core::{
    enumerate_automorphisms, minimum_labels, write_graph6, AutomorphismSet, DistinguishingError,
    Graph, LabelKind, SearchLimits, SymmetryLimits, DEFAULT_NODE_BUDGET,
};
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_connected_graphs, random_connected_graphs, MAX_EXHAUSTIVE_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest order of exhaustively enumerated connected graphs.
    pub max_n: usize,
    /// Largest power / subdivision parameter.
    pub max_k: usize,
    /// Node budget of each exact search.
    pub budget: u64,
    /// Random graphs per order in sampled ranges.
    pub samples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 6,
            max_k: 3,
            budget: DEFAULT_NODE_BUDGET,
            samples: 4,
        }
    }
}

impl Limits {
    /// Largest base order for claims about subdivisions.
    pub fn sub_max_n(&self) -> usize {
        self.max_n.min(5)
    }

    /// Largest order of path, cycle and star family instances.
    pub fn family_max_n(&self) -> usize {
        self.max_n + 2
    }
}

/// Outcome of one exact computation: a value, "undefined", or a refusal
/// (budget or cap) carrying its reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exact {
    Value(u64),
    Undefined(String),
    Skipped(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    D,
    Dprime,
    Dtotal,
}

impl Quantity {
    fn kind(self) -> LabelKind {
        match self {
            Quantity::D => LabelKind::Vertex,
            Quantity::Dprime => LabelKind::Edge,
            Quantity::Dtotal => LabelKind::Total,
        }
    }
}

pub struct Context {
    pub limits: Limits,
    pub seed: u64,
    auts: Mutex<HashMap<String, Result<Arc<AutomorphismSet>, String>>>,
    values: Mutex<HashMap<(Quantity, String), Exact>>,
    connected: Mutex<HashMap<usize, Arc<Vec<Graph>>>>,
    samples: OnceLock<Vec<Graph>>,
}

impl Context {
    pub fn new(limits: Limits, seed: u64) -> Context {
        Context {
            limits,
            seed,
            auts: Mutex::new(HashMap::new()),
            values: Mutex::new(HashMap::new()),
            connected: Mutex::new(HashMap::new()),
            samples: OnceLock::new(),
        }
    }

    pub fn search_limits(&self) -> SearchLimits {
        SearchLimits {
            symmetry: SymmetryLimits::default(),
            node_budget: self.limits.budget,
        }
    }

    pub fn aut(&self, g: &Graph) -> Result<Arc<AutomorphismSet>, String> {
        let key = write_graph6(g);
        if let Some(hit) = self.auts.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let computed = enumerate_automorphisms(g, &SymmetryLimits::default())
            .map(Arc::new)
            .map_err(|e| e.to_string());
        self.auts
            .lock()
            .expect("cache lock")
            .insert(key, computed.clone());
        computed
    }

    pub fn exact(&self, q: Quantity, g: &Graph) -> Exact {
        let key = (q, write_graph6(g));
        if let Some(hit) = self.values.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let value = match self.aut(g) {
            Err(e) => Exact::Skipped(e),
            Ok(auts) => match minimum_labels(g, &auts, q.kind(), &self.search_limits()) {
                Ok(r) => Exact::Value(r.value as u64),
                Err(DistinguishingError::Undefined(why)) => Exact::Undefined(why.to_string()),
                Err(e) => Exact::Skipped(e.to_string()),
            },
        };
        self.values
            .lock()
            .expect("cache lock")
            .insert(key, value.clone());
        value
    }

    /// Connected graphs on `n` vertices up to isomorphism (`n <= 7`).
    pub fn connected(&self, n: usize) -> Arc<Vec<Graph>> {
        assert!(n <= MAX_EXHAUSTIVE_N, "exhaustive range");
        if let Some(hit) = self.connected.lock().expect("cache lock").get(&n) {
            return hit.clone();
        }
        let list = Arc::new(enumerate_connected_graphs(n).expect("in range"));
        self.connected
            .lock()
            .expect("cache lock")
            .insert(n, list.clone());
        list
    }

    /// Connected graphs with `lo <= n <= hi`, capped at the exhaustive range.
    pub fn connected_range(&self, lo: usize, hi: usize) -> Vec<Graph> {
        (lo..=hi.min(MAX_EXHAUSTIVE_N))
            .flat_map(|n| self.connected(n).as_ref().clone())
            .collect()
    }

    /// Seeded random connected graphs on 8 to 10 vertices.
    pub fn random_samples(&self) -> &[Graph] {
        self.samples.get_or_init(|| {
            (8..=10)
                .flat_map(|n| random_connected_graphs(n, self.limits.samples, self.seed))
                .collect()
        })
    }
}
