use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("path length n must be at least 1")]
    EmptyPath,
    #[error("power m must be at least 1")]
    ZeroPower,
    #[error("power m = {m} exceeds path length n = {n} (P_n^m = P_n^n for every m >= n)")]
    PowerExceedsLength { n: usize, m: usize },
    #[error("radio parameter k must be at least 1")]
    ZeroK,
    #[error("vertex {vertex} is outside 0..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{numerator} is not divisible by {denominator}")]
    InexactDivision { numerator: i64, denominator: i64 },
    #[error("k = {k} is below the closed-form regime for n = {n}, m = {m} (need k >= {min_k})")]
    HypothesisViolated {
        n: usize,
        m: usize,
        k: u64,
        min_k: u64,
    },
    #[error("vertices on different sides of the centre cannot be compared")]
    MixedSides,
    #[error("alternating chain needs equal side counts, got {ascending} and {descending}")]
    UnequalSides { ascending: usize, descending: usize },
    #[error("expected {expected} vertices, found {found}")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("sequence is not a permutation of 0..={n}")]
    NotAPermutation { n: usize },
    #[error("vertices {u} and {v} share color {color}")]
    ColorTie { u: usize, v: usize, color: u64 },
    #[error("vertices {u} and {v} are not consecutive in color order")]
    NotConsecutive { u: usize, v: usize },
    #[error("pair ({u}, {v}) has gap {gap} below the layer bound {bound}")]
    GapBelowBound {
        u: usize,
        v: usize,
        gap: i64,
        bound: i64,
    },
    #[error("coloring violates the radio condition on {violations} pair(s)")]
    InvalidColoring { violations: usize },
    #[error("run polarity is only defined for even diameter")]
    PolarityUndefined,
    #[error("a run with fewer than two vertices is never optimally colored")]
    SingletonRun,
    #[error("exact search limited to {limit} vertices, instance has {vertices}")]
    OracleTooLarge { vertices: usize, limit: usize },
    #[error("exact search needs k > diam (k = {k}, diam = {diam}) so that colors are distinct")]
    OracleNeedsDistinctColors { k: u64, diam: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
