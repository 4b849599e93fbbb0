use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Vertex,
    Edge,
    Total,
}

/// Labels `1..=d` on vertices, canonical edge indices, or both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub kind: LabelKind,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex_labels: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge_labels: Option<Vec<u32>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("{kind:?} labeling expects {expected} {what} labels, got {got}")]
    WrongLength {
        kind: LabelKind,
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{what} labels missing for a {kind:?} labeling")]
    Missing { kind: LabelKind, what: &'static str },
    #[error("{what} labels present on a {kind:?} labeling")]
    Unexpected { kind: LabelKind, what: &'static str },
    #[error("label {label} outside 1..={d}")]
    OutOfRange { label: u32, d: u32 },
}

fn max_label(labels: &[u32]) -> u32 {
    labels.iter().copied().max().unwrap_or(1).max(1)
}

impl Labeling {
    pub fn vertex(labels: Vec<u32>) -> Labeling {
        Labeling {
            kind: LabelKind::Vertex,
            d: max_label(&labels),
            vertex_labels: Some(labels),
            edge_labels: None,
        }
    }

    pub fn edge(labels: Vec<u32>) -> Labeling {
        Labeling {
            kind: LabelKind::Edge,
            d: max_label(&labels),
            vertex_labels: None,
            edge_labels: Some(labels),
        }
    }

    pub fn total(vertex: Vec<u32>, edge: Vec<u32>) -> Labeling {
        Labeling {
            kind: LabelKind::Total,
            d: max_label(&vertex).max(max_label(&edge)),
            vertex_labels: Some(vertex),
            edge_labels: Some(edge),
        }
    }

    /// Number of distinct label values actually used.
    pub fn labels_used(&self) -> usize {
        let mut all: Vec<u32> = self
            .vertex_labels
            .iter()
            .chain(self.edge_labels.iter())
            .flatten()
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }

    /// Checks that the labeling covers exactly the domain its kind requires
    /// on `g` and that every label lies in `1..=d`.
    pub fn validate(&self, g: &Graph) -> Result<(), LabelingError> {
        let wants_vertices = self.kind != LabelKind::Edge;
        let wants_edges = self.kind != LabelKind::Vertex;
        for (what, labels, wanted, expected) in [
            ("vertex", &self.vertex_labels, wants_vertices, g.n()),
            ("edge", &self.edge_labels, wants_edges, g.edge_count()),
        ] {
            match (labels, wanted) {
                (None, true) => {
                    return Err(LabelingError::Missing {
                        kind: self.kind,
                        what,
                    })
                }
                (Some(_), false) => {
                    return Err(LabelingError::Unexpected {
                        kind: self.kind,
                        what,
                    })
                }
                (Some(l), true) => {
                    if l.len() != expected {
                        return Err(LabelingError::WrongLength {
                            kind: self.kind,
                            what,
                            expected,
                            got: l.len(),
                        });
                    }
                    if let Some(&label) = l.iter().find(|&&x| x == 0 || x > self.d) {
                        return Err(LabelingError::OutOfRange { label, d: self.d });
                    }
                }
                (None, false) => {}
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn validation() {
        let g = path(3);
        assert!(Labeling::vertex(vec![1, 2, 1]).validate(&g).is_ok());
        assert!(matches!(
            Labeling::vertex(vec![1, 2]).validate(&g),
            Err(LabelingError::WrongLength { .. })
        ));
        let mut bad = Labeling::edge(vec![1, 1]);
        bad.edge_labels = None;
        assert!(matches!(bad.validate(&g), Err(LabelingError::Missing { .. })));
        assert!(matches!(
            Labeling::edge(vec![0, 1]).validate(&g),
            Err(LabelingError::OutOfRange { label: 0, .. })
        ));
        assert!(Labeling::total(vec![1, 1, 1], vec![3, 1]).validate(&g).is_ok());
    }

    #[test]
    fn json_shape() {
        let l = Labeling::edge(vec![1, 2]);
        assert_eq!(
            serde_json::to_string(&l).unwrap(),
            r#"{"kind":"edge","d":2,"edge_labels":[1,2]}"#
        );
        assert_eq!(Labeling::total(vec![1, 3], vec![3]).labels_used(), 2);
    }
}
