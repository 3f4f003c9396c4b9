use thiserror::Error;

/// Errors produced by graph construction, spectral computations and checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("edge-list JSON error: {0}")]
    EdgeListJson(String),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("bad parameters for {family}: {reason}")]
    BadParameters { family: String, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("matrix is not symmetric: |m[{row},{col}] - m[{col},{row}]| = {gap:e}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error(
        "symmetric eigensolver did not converge on a {dim}x{dim} matrix within {cap} iterations"
    )]
    NoConvergence { dim: usize, cap: usize },

    #[error("spectrum kinds differ: {big:?} vs {small:?}")]
    KindMismatch {
        big: crate::spectral::SpectrumKind,
        small: crate::spectral::SpectrumKind,
    },

    #[error("multiset containment fails: value {witness} unmatched (nearest gap {gap:e}, tolerance {tol:e})")]
    ContainmentFailure { witness: f64, gap: f64, tol: f64 },

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph must be regular")]
    NotRegular,

    #[error("graph needs at least {needed} vertices, has {n}")]
    TooSmall { needed: usize, n: usize },

    #[error("k = {k} out of range for n = {n}")]
    TokenCountOutOfRange { k: usize, n: usize },

    #[error("token graph F_{k} of a graph on {n} vertices has {order} vertices, above the limit {limit}")]
    GuardExceeded {
        n: usize,
        k: usize,
        order: u64,
        limit: u64,
    },

    #[error("binomial matrix needs 0 <= h <= k <= n, got n = {n}, k = {k}, h = {h}")]
    BinomialOrder { n: usize, k: usize, h: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("lifted vector is numerically zero")]
    ZeroLift,

    #[error("vector is not an eigenvector: relative residual {residual:e}")]
    NotEigenvector { residual: f64 },

    #[error("matrix identity violated: {what} (max deviation {deviation:e} at [{row},{col}])")]
    IdentityViolated {
        what: &'static str,
        deviation: f64,
        row: usize,
        col: usize,
    },

    #[error("Gram matrix S^T S is singular")]
    SingularGram,

    #[error("partition invalid: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable: vertices {u} and {v} of cell {cell} have different neighbour counts into cell {into}")]
    NotEquitable {
        cell: usize,
        u: usize,
        v: usize,
        into: usize,
    },

    #[error("invalid intersection array: {0}")]
    InvalidIntersectionArray(String),

    #[error("infeasible SRG parameters ({n},{d},{a},{c})")]
    InfeasibleSrg {
        n: usize,
        d: usize,
        a: usize,
        c: usize,
    },

    #[error("distance polynomial vanishes at eigenvalue {0}")]
    VanishingDistancePolynomial(f64),

    #[error("expected {expected} distinct eigenvalues, found {found}")]
    MeshSize { expected: usize, found: usize },

    #[error("k = {k} must be below the vertex connectivity {kappa}")]
    ConnectivityTooLow { k: usize, kappa: usize },

    #[error("numeric health failure: {0}")]
    NumericHealth(String),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
