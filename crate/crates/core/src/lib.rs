//! Small triangle covers with certificates.
//!
//! A graph's triangles form a linear 3-uniform hypergraph over its edges.
//! Breaking every cycle of that hypergraph, by vertices or by hyperedges,
//! leaves an acyclic remainder on which minimum transversal and maximum
//! matching coincide and are computed exactly. The pieces combine into a
//! triangle cover whose size is bounded by quantities the certificate
//! carries.
//!
//! ```
//! use tricover_core::{best_cover, complete_graph};
//!
//! let k4 = complete_graph(4);
//! let cert = best_cover(&k4);
//! assert_eq!(cert.size(), 2);
//! assert!(cert.verify_graph(&k4));
//! ```

pub mod acyclic;
pub mod cover;
pub mod cycle_breaking;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod oracle;

/// Exact non-negative ratios for bounds and condition checks.
pub type Rational = num_rational::Ratio<u64>;

pub use acyclic::{forest_decompose, solve_acyclic, DualPair, IncidenceForest};
pub use cover::{
    best_cover, condition_report, cover_via_bipartite, cover_via_fes, cover_via_fvs, cover_with, hypergraph_cover,
    Condition, ConditionKind, ConditionReport, ConditionStatus, CoverCertificate, Strategy,
};
pub use cycle_breaking::{fes_size_bound, fvs_alg1, is_acyclic, minimal_fes, FesResult, FvsResult, FvsRule, FvsStep};
pub use error::{Error, Result};
pub use graph::{
    bipartite_cut, bipartite_cut_cover, book_graph, complete_graph, disjoint_union, enumerate_triangles,
    extend_packing, gadget_augment, greedy_triangle_packing, irreducible_subgraph, is_triangle_cover,
    is_triangle_free, random_gnp, EdgeId, Gadget, Graph, PackingOrder, PackingWitness, Triangle, VertexId,
};
pub use hypergraph::{
    components, find_cycle_through, hyperedges_on_cycles, is_k_uniform, is_linear, shortest_cycle, shortest_path,
    triangle_hypergraph, Component, Cycle, Element, HEdge, HVertex, Hypergraph, Path,
};
pub use oracle::{
    exact_min_fes, exact_min_fvs, exact_nu, exact_nu_t, exact_tau, exact_tau_t, fano_plane, steiner_triple_system,
    steiner_triples, OracleBudget,
};
