//! Minimum dominating sets on Erdős–Rényi random graphs `G(n, p)`.
//!
//! Graphs, solvers and certificates are combinatorial. Parameter types and
//! threshold functions that involve `p`, `ε`, `C` or `D` are generic over a
//! [`Real`] scalar; the aliases below fix it to `f64`, with `*F32` variants
//! for `f32`.

pub mod bitset;
pub mod cli;
pub mod dimacs;
pub mod error;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod hybrid;
pub mod partition;
pub mod scalar;

pub use bitset::BitSet;
pub use dimacs::{parse_graph, serialize_graph};
pub use error::{Error, Result};
pub use exact::{
    bb_domset_within, bounded_domset_search, has_domset_of_size, min_domset_bb, min_domset_enum, DecideStrategy, Decision,
    SolveMethod, SolveOutcome,
};
pub use graph::{gen_random_graph, GenParams, Graph, Vertex, VertexSet};
pub use greedy::{good_vertex_greedy, good_vertex_greedy_traced, greedy_lnn, GoodVertexRun, ThresholdBase};
pub use harness::{
    derive_seed, emit_csv, estimate_rarity_lemma7, estimate_small_domset_frequency, run_campaign, Algorithm,
    ExperimentConfig, TrialRecord,
};
pub use hybrid::{
    approx_via_fpt, expected_qp_min_domset, fpt_via_approx, sparse_fpt_decide, ApproximatorHandle, DeclaredRatio,
    PluginFn, PluginFunctions, ScanMode,
};
pub use partition::{build_distinguish_digraph, partition_hunt, refine_once, Color, ColoredPartition, HuntReport};
pub use scalar::Real;

pub type GoodVertexParams = greedy::GoodVertexParams<f64>;
pub type GoodVertexParamsF32 = greedy::GoodVertexParams<f32>;
pub type HuntParams = partition::HuntParams<f64>;
pub type HuntParamsF32 = partition::HuntParams<f32>;
pub type ApproxViaFptParams = hybrid::ApproxViaFptParams<f64>;
pub type ApproxViaFptParamsF32 = hybrid::ApproxViaFptParams<f32>;
