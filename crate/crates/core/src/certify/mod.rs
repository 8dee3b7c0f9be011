//! Square-graph cone membership as exact rational linear feasibility,
//! explicit cubic certificates, and uniform-in-`n` certificate search.

mod basis;
mod certificate;
mod cubic;
mod lp;
mod nonneg;
mod search;

pub use basis::{moment_basis, to_symbolic_vector, to_vector};
pub use certificate::{
    Certificate, CertificateCheck, CertificateEntry, CertificateScope, Generator, GeneratorSet, Target,
};
pub use cubic::{
    cubic_certificate, cubic_certificate_uniform, cubic_weights, verify_cubic_identity_symbolic, CubicIdentityReport,
};
pub use lp::{feasible_vertices, is_farkas, is_solution, lp_feasible, LpOutcome, VertexEnumeration};
pub use nonneg::{prove_nonnegative, NonnegVerdict, MAX_SCAN};
pub use search::{
    cone_membership, cone_membership_with, default_degree_cap, find_negative_witness, random_roots, uniform_search,
    uniform_search_with, ConeOutcome, FailureStage, InfeasibilityReport, NegativeWitness, SampleResult, SearchConfig,
    SearchReport, UniformOutcome, WITNESS_SEED, WITNESS_TRIALS,
};
