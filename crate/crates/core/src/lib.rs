//! Contraction decomposition for embedded planar graphs and layered exact
//! solvers for odd cycle transversal, edge bipartization and the group
//! feedback vertex/edge set problems.
//!
//! The pipeline:
//!
//! 1. [`graph`] traces the faces of a rotation system and builds the
//!    vertex-face incidence graph.
//! 2. [`layering`] peels the embedding into layers by incidence distance
//!    from the outer face and groups layers by residue into disjoint sets
//!    `Z_1..Z_p`.
//! 3. [`solver`] enumerates pairs `(i, Y')`, contracts `Z_i \ Y'`
//!    ([`contraction`]), decomposes the quotient ([`treewidth`]) and runs
//!    the contraction-friendly [`dp`].
//! 4. [`oracle`] provides brute-force ground truth and solution checking.
//!
//! Runnable demonstrations live in the crate's `examples/` directory.

pub mod bench;
pub mod candidate;
pub mod cli;
pub mod contraction;
pub mod dp;
pub mod error;
pub mod gen;
pub mod graph;
pub mod group;
pub mod io;
pub mod layering;
pub mod oracle;
pub mod problem;
pub mod solver;
pub mod treewidth;

pub use candidate::{candidate_trivial, CandidateProvider, CandidateSet, TrivialCandidates};
pub use contraction::{component_orbit, contract, ComponentOrbit, ContractionMap};
pub use dp::{solve_on_td, solve_restricted, DpOutcome};
pub use error::{Error, Result};
pub use graph::{build_vfi, trace_faces, EmbeddedGraph, FaceSet, Graph, VfiGraph};
pub use group::{Group, GroupLabels};
pub use layering::{build_zsets, check_layer_invariants, compute_layers, Layering, ZFamily};
pub use oracle::{brute_force, brute_force_restricted, has_violation, OracleLimits};
pub use problem::{Instance, ProblemKind, Solution};
pub use solver::{enumerate_pairs, solve, SolveRequest, SolveResult};
pub use treewidth::{
    exact_treewidth, heuristic_decompose, make_nice, validate_decomposition, NiceTreeDecomposition,
    TreeDecomposition,
};
