//! Graph powers, subdivisions, and symmetry breaking by labelings.

pub mod distinguishing;
pub mod graph;
pub mod graph6;
pub mod hamiltonian;
pub mod labelers;
pub mod labeling;
pub mod metrics;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod power;
pub mod symmetry;

pub use distinguishing::{
    distinguishing_index, distinguishing_number, find_distinguishing, is_distinguishing,
    kalinowski_bound, minimum_labels, pair_bound, reversal_classes, sphere_bound,
    total_distinguishing_number, tuple_bound, DistinguishingError, DistinguishingResult,
    SearchLimits, DEFAULT_NODE_BUDGET,
};
pub use graph::{cycle, graph_equal, path, star, Family, Graph, GraphError};
pub use graph6::{read_graph6, read_graph6_lines, write_graph6, Graph6Error, Graph6ErrorKind};
pub use hamiltonian::{hamiltonian_path_exists, HamiltonianSkipped, DEFAULT_HAMILTONIAN_CAP};
pub use labelers::{
    bfs_sphere_labeling, edge_to_vertex_transfer, pair_edge_labeling, path_power_labeling,
    star_subdivision_labeling, tuple_edge_labeling, Construction, LabelerError,
};
pub use labeling::{LabelKind, Labeling, LabelingError};
pub use metrics::{distances_from, metrics, sphere, Metrics, INFINITE};
pub use power::{
    fractional_power, power, power_distance_claim, power_then_subdivide, subdivide,
    FractionalOrder, PowerError, SubdividedGraph, Superedge,
};
pub use symmetry::{
    edge_action, enumerate_automorphisms, is_automorphism, is_subgroup, labeling_stabilizer,
    restrict_to_base, AutomorphismSet, Permutation, SymmetryError, SymmetryLimits,
};
