use thiserror::Error;

/// Errors raised by the analysis and decision procedures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("entry {value} at ({row}, {col}) is out of range for a table of size {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    Associativity { a: usize, b: usize, c: usize },

    #[error("element {zero} is not a zero: fails against element {a}")]
    ZeroAxiom { zero: usize, a: usize },

    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),

    #[error("J-class containing element {0} is not regular")]
    NotRegularClass(usize),

    #[error("semigroup is not regular: element {0} has no generalized inverse")]
    NotRegular(usize),

    #[error("map is not an involution: {0}")]
    NotInvolution(String),

    #[error("matrix is not positive definite: signature ({positive}, {negative})")]
    Indefinite { positive: usize, negative: usize },

    #[error("Hermitian intertwiner has signature ({positive}, {negative}); no positive factorization")]
    FactorizationObstruction { positive: usize, negative: usize },

    #[error("character identity fails: {0}")]
    ConditionFails(String),

    #[error("representations are not equivalent")]
    NotEquivalent,

    #[error("representation-theoretic verdict ({reps}) disagrees with brute force ({brute})")]
    OracleMismatch { reps: bool, brute: bool },

    #[error("annihilator is not the ideal below a regular J-class")]
    NoApex,

    #[error("the contracted semigroup algebra is not semisimple")]
    NotSemisimple,

    #[error("size limit exceeded: {size} > {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("Rees semigroup is not compatible with an involution: {0}")]
    NotReesCompatible(String),

    #[error("{0} involutions induce the inverse map; at most one is possible")]
    MultipleSurvivors(usize),

    #[error("involution is not in the symmetric normal form")]
    NotCorollaryForm,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFinite(usize, usize),

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Whether the error signals a failed internal consistency check rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::OracleMismatch { .. } | Error::MultipleSurvivors(_) | Error::Invariant(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
