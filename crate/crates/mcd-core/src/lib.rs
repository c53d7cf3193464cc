//! Mixed Cayley digraphs over finite groups: construction, arc
//! connectivity (λ, atoms, max-λ / super-λ), and the group-theoretic
//! characterizations of the non-max-λ and non-super-λ instances.

pub mod cayley;
pub mod classify;
pub mod connectivity;
pub mod digraph;
pub mod error;
pub mod flow;
pub mod group;
pub mod report;

pub use cayley::{build_bicayley, build_cayley, build_mixed, MixedCayleyParams};
pub use classify::{
    check_class_g, check_not_max_lambda, check_not_super_lambda, detect_exceptional, gamma_label,
    FamilyLabel, GammaLabel, MaxLambdaVerdict, SuperLambdaVerdict,
};
pub use connectivity::{
    arc_connectivity, arc_connectivity_bruteforce, connectivity_report, is_super_lambda,
    is_super_lambda_flow, lambda_atoms, AtomReport, ConnectivityReport, DEFAULT_SUBSET_CAP,
};
pub use digraph::{Digraph, Sign, VertexSet};
pub use error::{Error, Result};
pub use group::{ElementSet, Group, Subgroup, DEFAULT_GROUP_CAP};
pub use report::{analyze, classify, AnalysisDocument, ClassifyDocument, SCHEMA_VERSION};
