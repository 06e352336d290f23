use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generators {gens:?} have gcd {gcd}; the gap set would be infinite")]
    NonCoprime { gens: Vec<u32>, gcd: u32 },
    #[error("min(S) = {min} is below the shift r = {r}")]
    ShiftUnderflow { min: u32, r: u32 },
    #[error("delta set has {got} elements, expected delta = {expected}")]
    CardinalityMismatch { got: usize, expected: usize },
    #[error("delta set {0:?} does not give a weakly decreasing Schubert index")]
    MalformedDelta(Vec<u32>),
    #[error("Schubert indices of different length ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("series truncations differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("vector is identically zero; no projective limit")]
    IdenticallyZeroVector,
    #[error("relation at t^{order} is not linear in any remaining parameter: {relation}")]
    NonTriangularRelation { order: u32, relation: String },
    #[error("truncation N = {n} too small: need at least {needed}")]
    TruncationTooSmall { n: usize, needed: usize },
    #[error("symbolic row reduction lost a pivot at column {column}")]
    PivotLoss { column: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cell {gaps:?} at r = {r}: {source}")]
    InCell {
        r: u32,
        gaps: Vec<u32>,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn in_cell(self, r: u32, gaps: &[u32]) -> Error {
        Error::InCell { r, gaps: gaps.to_vec(), source: Box::new(self) }
    }
}
