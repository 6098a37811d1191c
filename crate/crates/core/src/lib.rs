//! Optimal radio k-colorings of path powers `P_n^m` for `k` above the
//! diameter threshold.
//!
//! * [`graph`] and [`layering`] model the instance and its layer structure.
//! * [`formula`] evaluates the closed-form spans.
//! * [`construct`] builds the optimal color order and its greedy coloring.
//! * [`verify`] checks colorings and computes the optimal/loose
//!   decomposition and lower-bound certificate.
//! * [`oracle`] computes `rc_k` exactly by branch-and-bound.
//! * [`sweep`] runs grids of instances and emits CSV/JSON reports.

pub mod coloring;
pub mod construct;
pub mod error;
pub mod formula;
pub mod graph;
pub mod layering;
pub mod oracle;
pub mod sweep;
pub mod verify;

pub use coloring::{ColorSequence, ColoringFile, Provenance, RadioColoring};
pub use construct::{case_sequence, construct_optimal, greedy_color};
pub use error::{Error, Result};
pub use formula::{
    alpha1, alpha2_lower_bound, closed_form_span, hypothesis_holds, hypothesis_min_k, CaseTag,
    HypothesisCheck, SpanFormulaResult, Variant,
};
pub use graph::{PathPowerGraph, Vertex};
pub use layering::{Layering, Parity, Side, SideVertex, VertexName};
pub use oracle::{rc_exact, OracleConfig, OracleOutcome};
pub use verify::{
    check_coloring, decompose, lower_bound_certificate, Decomposition, ValidityReport,
};
