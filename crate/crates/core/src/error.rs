use core::fmt;

use crate::perm::Permutation;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The one-line notation repeats a value, skips one, or is empty.
    NotABijection,
    /// Positions passed to a pattern query are not `1 <= i < j <= n`.
    BadPositions {
        i: usize,
        j: usize,
        n: usize,
    },
    /// A generator index outside `1..n`.
    LetterOutOfRange {
        letter: usize,
        n: usize,
    },
    /// Some proper prefix of the permutation is `{1..r}`, so the polygon pinches.
    NotFullySupported(Permutation),
    /// An enumeration exceeded its configured cap.
    SizeLimitExceeded {
        what: &'static str,
        limit: usize,
    },
    /// Words handed to class partitioning evaluate to different permutations.
    MixedPermutations,
    /// A commutation class was placed against a permutation it does not evaluate to.
    ClassPermutationMismatch,
    /// Input outside the domain of an optimal-forcing map.
    DomainViolation(&'static str),
    UnknownTheorem,
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotABijection => "NotABijection",
            Error::BadPositions { .. } => "BadPositions",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::NotFullySupported(_) => "NotFullySupported",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::MixedPermutations => "MixedPermutations",
            Error::ClassPermutationMismatch => "ClassPermutationMismatch",
            Error::DomainViolation(_) => "DomainViolation",
            Error::UnknownTheorem => "UnknownTheorem",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotABijection => f.write_str("entries are not a bijection on 1..n"),
            Error::BadPositions { i, j, n } => {
                write!(f, "positions ({i}, {j}) are not 1 <= i < j <= {n}")
            }
            Error::LetterOutOfRange { letter, n } => {
                write!(f, "generator s_{letter} does not exist in S_{n}")
            }
            Error::NotFullySupported(w) => write!(f, "{w} is not fully supported"),
            Error::SizeLimitExceeded { what, limit } => {
                write!(f, "more than {limit} {what}; raise the cap to continue")
            }
            Error::MixedPermutations => f.write_str("words evaluate to different permutations"),
            Error::ClassPermutationMismatch => {
                f.write_str("commutation class does not evaluate to the permutation")
            }
            Error::DomainViolation(why) => write!(f, "input outside domain: {why}"),
            Error::UnknownTheorem => f.write_str("unknown theorem name"),
        }
    }
}

impl core::error::Error for Error {}
