//! Recoloring plans and exhaustive search over list-recoloring state spaces.
//!
//! Given a graph, a per-vertex color list, and two proper list colorings, this
//! crate can
//!
//! * build certified step-by-step recoloring plans whose length never exceeds
//!   `n + μ` (vertex count plus matching number) for graphs of maximum degree
//!   at most three ([`planner::subcubic`]) and for complete multipartite
//!   graphs ([`planner::multipartite`]),
//! * exhaustively enumerate the recoloring state space to answer exact
//!   distance, diameter, and connectivity questions at small scale
//!   ([`oracle`]),
//! * and audit the plans' step accounting against explicit matching
//!   certificates ([`planner::audit_ledger`]).
//!
//! The supporting machinery (maximum matchings via blossom contraction,
//! bipartite minimum vertex covers, complete-multipartite recognition) lives
//! in [`graph`]; colorings, conflict structures, and plan replay live in
//! [`coloring`].

pub mod coloring;
pub mod graph;
pub mod oracle;
pub mod planner;

pub use coloring::{
    apply_step, color_graph, color_shift, free_colors, is_proper, replay, stitch, Color,
    ColorGraph, ColorShiftDigraph, Coloring, Instance, InstanceError, ListAssignment, Plan,
    PlanSide, ReplayError, Step, StitchError,
};
pub use graph::{
    degree1_free_cover, detect_multipartite, koenig_min_cover, max_matching, mu_multipartite,
    restrict, CoverError, Graph, GraphError, Matching, MultipartiteStructure, VertexCover,
    VertexMap,
};
pub use oracle::{
    bfs_distance, diameter, oracle_plan, OracleError, OracleOptions, ReconfGraph,
    ReconfGraphStats, DEFAULT_STATE_BUDGET,
};
pub use planner::{
    audit_ledger, multipartite::plan_multipartite, subcubic::plan_subcubic, AuditError,
    LedgerAudit, MuWitness, Planned, PlannerError, Reduction, ReductionKind,
};
