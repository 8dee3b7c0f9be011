//! Multigraphs, square-graph enumeration up to isomorphism, and expansion
//! of ordered-distinct graph sums into power sums.

mod enumerate;
mod expand;
mod lemma;
mod multigraph;
mod partitions;

pub use enumerate::{
    enumerate_multigraphs, enumerate_square_graphs, enumerate_square_graphs_with_cap, DEFAULT_ENUMERATION_CAP,
};
pub use expand::{
    brute_force_ordered_sum, graph_monomial, ordered_graph_sum, ordered_graph_sum_cached, symmetrization_factor,
};
pub use lemma::{
    degree_six_generators, degree_six_reference, verify_lemma_degree_six, verify_polarization_identity, GeneratorCheck,
    NamedGenerator,
};
pub use multigraph::{parse_graph_spec, Multigraph};
pub use partitions::{
    distinct_sum_moments, distinct_sum_moments_mobius, mobius_weight, set_partitions, DistinctSumCache, SetPartition,
};
