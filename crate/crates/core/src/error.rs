use std::fmt;

use thiserror::Error;

/// Which group axiom a candidate Cayley table broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotAGroupReason {
    NotLatinSquare,
    NotAssociative,
    WrongIdentity,
    MissingInverse,
}

impl fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotAGroupReason::NotLatinSquare => "not-latin-square",
            NotAGroupReason::NotAssociative => "not-associative",
            NotAGroupReason::WrongIdentity => "wrong-identity",
            NotAGroupReason::MissingInverse => "missing-inverse",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `witness` is the first violating triple. Its meaning depends on the
    /// reason: `(i, j, k)` with `table[i][j] == table[i][k]` (or the column
    /// analogue) for Latin-square failures, `(i, j, k)` with
    /// `(ij)k != i(jk)` for associativity, `(0, j, table[0][j])` for identity.
    #[error("not a group ({reason}) at {witness:?}")]
    NotAGroup {
        reason: NotAGroupReason,
        witness: [usize; 3],
    },

    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),

    #[error("{what}: size {actual} exceeds cap {cap}")]
    SizeLimit {
        what: String,
        actual: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element {0} does not belong to the group")]
    ElementOutOfRange(String),

    #[error("subsets belong to different groups")]
    MixedGroups,

    #[error("empty input subset")]
    EmptyInput,

    #[error("the set S must be nonempty")]
    EmptyS,

    #[error("element {0} is not in A")]
    NotInA(String),

    #[error("|A| = {left} but |B| = {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("B contains the identity, so no matching can exist")]
    IdentityInB,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn size_limit(what: impl Into<String>, actual: usize, cap: usize) -> Self {
        Error::SizeLimit {
            what: what.into(),
            actual,
            cap,
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
