use thiserror::Error;

/// Coarse classification used by callers that map errors to process exit
/// codes: `Input` covers malformed files and references to missing data,
/// `Precondition` covers structurally valid data fed to an operation whose
/// mathematical hypotheses it does not satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),

    #[error("element `{id}` has rank {rank}; ranks start at 1")]
    InvalidRank { id: String, rank: usize },

    #[error("cover references unknown element id `{0}`")]
    UnknownElement(String),

    #[error("cover `{lower}` -> `{upper}` joins ranks {lower_rank} and {upper_rank}; covers must rise exactly one rank")]
    CoverRankGap {
        lower: String,
        upper: String,
        lower_rank: usize,
        upper_rank: usize,
    },

    #[error("element `{id}` of rank {rank} has no lower cover; every rank >= 2 element needs one")]
    MissingLowerCover { id: String, rank: usize },

    #[error("`{0}` is not an element of the poset")]
    NoSuchElement(String),

    #[error("`{bottom}` is not below `{top}`")]
    NotBelow { bottom: String, top: String },

    #[error("`{0}` is not a maximal element")]
    NotMaximal(String),

    #[error("a composition needs at least one part")]
    EmptyComposition,

    #[error("composition parts must be >= 1")]
    ZeroPart,

    #[error("multinomial parts sum to {got}, expected {expected}")]
    MultinomialSum { expected: usize, got: usize },

    #[error("poset is not pure: maximal element `{witness}` has rank {witness_rank}, max rank is {max_rank}")]
    NotPure {
        witness: String,
        witness_rank: usize,
        max_rank: usize,
    },

    #[error("composition totals {composition}, poset has max rank {poset}")]
    RankTotalMismatch { composition: usize, poset: usize },

    #[error("face `{face}` has rank {face_rank}; composition starts at rank {expected}")]
    FaceRankMismatch {
        face: String,
        face_rank: usize,
        expected: usize,
    },

    #[error("rank tuple must be strictly increasing within 1..=max_rank (max rank {max_rank})")]
    BadRankTuple { max_rank: usize },

    #[error("interval [{face}, {facet}] is not boolean; the product formula does not apply here")]
    NotLocallyBoolean { face: String, facet: String },

    #[error("need 1 <= k <= n, got n={n}, k={k}")]
    SubsetSize { n: usize, k: usize },

    #[error("requested {m} facets but there are only {available} distinct subsets")]
    SampleTooLarge { m: usize, available: String },

    #[error("{n} choose {k} does not fit in a machine word; pick smaller parameters")]
    UniverseTooLarge { n: usize, k: usize },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. }
            | Error::DuplicateElement(_)
            | Error::InvalidRank { .. }
            | Error::UnknownElement(_)
            | Error::CoverRankGap { .. }
            | Error::MissingLowerCover { .. }
            | Error::NoSuchElement(_) => ErrorKind::Input,
            Error::NotBelow { .. }
            | Error::NotMaximal(_)
            | Error::EmptyComposition
            | Error::ZeroPart
            | Error::MultinomialSum { .. }
            | Error::NotPure { .. }
            | Error::RankTotalMismatch { .. }
            | Error::FaceRankMismatch { .. }
            | Error::BadRankTuple { .. }
            | Error::NotLocallyBoolean { .. }
            | Error::SubsetSize { .. }
            | Error::SampleTooLarge { .. }
            | Error::UniverseTooLarge { .. } => ErrorKind::Precondition,
        }
    }
}
