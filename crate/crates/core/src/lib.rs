//! Achromatic arboricity of complete graphs.
//!
//! The achromatic arboricity `A_α(G)` is the largest number of colors in an
//! edge coloring of `G` where every color class is a forest and the union of
//! any two classes contains a cycle. This crate provides:
//!
//! * [`graphcore`]: the edge model and the validity checker,
//! * [`projplane`]: the algebraic projective plane `PG(2, q)` for prime `q`,
//! * [`construction`]: Hamiltonian path factorizations, the triplet
//!   decomposition of the plane's lines and the resulting colorings,
//! * [`bounds`]: the counting upper bound and constructive lower bounds,
//! * [`solver`]: exhaustive branch-and-bound for small `n`,
//! * [`document`]: the JSON and DOT exchange formats.

pub mod arith;
pub mod bounds;
pub mod construction;
pub mod document;
pub mod dsu;
pub mod graphcore;
pub mod projplane;
pub mod solver;

pub use construction::{
    build_coloring, greedy_extend, hamiltonian_path_factorization, star_extend,
    triplet_decomposition, ConstructionError, Decomposition, PathFactorization, Triplet,
};

pub use document::{to_dot, ColoringDocument, DocumentError, Meta};

pub use graphcore::{
    all_edges, is_forest, union_contains_cycle, verify_coloring, Edge, EdgeColoring,
    PartitionIssue, VerificationReport,
};
pub use projplane::{build_plane, incident, PlaneError, PlaneLine, PlanePoint, ProjectivePlane};

pub use bounds::{
    asymptotic_upper, best_lower_bound, extension_lower_bound, known_exact, known_witness,
    lower_bound_prime, summarize, upper_bound_lemma1, x0_diagnostic, BoundsError, BoundsSummary,
    LowerSource,
};
pub use solver::{
    exact_value, exists_coloring, search, AttemptOutcome, Budget, ExactResult, ExactStatus,
    Exhausted, SearchOutcome, SearchReport, DEFAULT_MAX_NODES, MAX_VERTICES,
};
