use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants fall in two families: malformed input (`Parse`, `DimensionMismatch`,
/// invalid structure constants or flags) and mathematical precondition
/// failures (a non-semisimple algebra where one is required, a diverging
/// limit, an inadmissible filtration, ...).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants not antisymmetric at ({l}, {m}, {n})")]
    NotAntisymmetric { l: usize, m: usize, n: usize },
    #[error("Jacobi identity fails on basis triple ({l}, {m}, {n})")]
    JacobiViolation { l: usize, m: usize, n: usize },
    #[error("Lie algebra is not semisimple")]
    NotSemisimple,
    #[error("not a derivation")]
    NotADerivation,
    #[error("linear system inconsistent: {0}")]
    Inconsistent(String),
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("μ undefined: bracket vanishes identically")]
    MuUndefined,
    #[error("limit diverges: μ = {0} < 0")]
    LimitDiverges(i64),
    #[error("element not graded-integral")]
    NotGradedIntegral,
    #[error("flag is not a balanced algebra filtration")]
    NotBalancedAlgebra,
    #[error("character not Killing-representable")]
    CharacterNotRepresentable,
    #[error("slope of a rank-0 class")]
    ZeroRank,
    #[error("invalid sheaf class: {0}")]
    InvalidClass(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("rank overflow: step {step} has rank {rank} >= total rank {total}")]
    RankOverflow { step: usize, rank: i64, total: i64 },
    #[error("stability parameter δ must have degree {expected} and positive leading coefficient")]
    BadDelta { expected: usize },
    #[error("filtration not admissible")]
    NotAdmissible,
    #[error("model is unstable")]
    Unstable,
    #[error("empty summand list")]
    EmptySummands,
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

impl Error {
    /// Input that could not be read or does not have the declared shape,
    /// as opposed to a failed mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::DimensionMismatch { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
