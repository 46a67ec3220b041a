use thiserror::Error;

/// Every failure the core can report.
///
/// Generator labels in messages are 1-based, matrix positions are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix must be square and non-empty")]
    NotSquare,
    #[error("diagonal entry ({index},{index}) is {value}, expected 2")]
    NonTwoDiagonal { index: usize, value: i64 },
    #[error("off-diagonal entry ({row},{col}) is {value}, expected <= 0")]
    PositiveOffDiagonal { row: usize, col: usize, value: i64 },
    #[error("entry ({row},{col}) is zero but ({col},{row}) is not")]
    AsymmetricZeroPattern { row: usize, col: usize },
    #[error("generator {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has length {got}, algebra has rank {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("Cartan matrix is singular")]
    SingularCartanMatrix,
    #[error("rho minus the image is not in the positive root lattice")]
    NotInPositiveRootLattice,
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset indices must be strictly increasing and in 1..={rank}")]
    InvalidSubset { rank: usize },
    #[error("{family}{rank} is not a valid finite type")]
    InvalidRankForFamily { family: char, rank: usize },
    #[error("integer overflow")]
    Overflow,
    #[error("series constant term must be +1 or -1")]
    NonUnitConstantTerm,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a remainder or a non-integer quotient")]
    InexactDivision,
    #[error("seed weight is not dominant")]
    NonDominantSeed,
    #[error("frontier of {size} weights exceeds the budget of {limit}")]
    MemoryBudgetExceeded { size: usize, limit: usize },
    #[error("orbit of a strictly dominant seed produced a weight with a zero coordinate")]
    IrregularImage,
    #[error("descent walk did not reach the seed")]
    NotInOrbit,
    #[error("{equations} coefficients cannot determine {unknowns} unknowns")]
    Underdetermined { equations: usize, unknowns: usize },
    #[error("no rational function within the degree bounds matches the series")]
    Inconsistent,
    #[error("the exact solution is not integral")]
    NonIntegerSolution,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
