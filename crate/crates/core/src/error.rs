use alloc::string::String;

use thiserror::Error;

use crate::PosClass;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A line of a tab-separated input could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("letter id must not be empty")]
    EmptyLetterId,

    #[error("duplicate letter id `{0}`")]
    DuplicateLetterId(String),

    #[error("letter `{id}`: year {year} outside [1400, 1900]")]
    YearOutOfRange { id: String, year: i32 },

    #[error("anaphora target {letter_id}:{sent_idx}:{tok_idx} does not exist")]
    AnaphoraMissing {
        letter_id: String,
        sent_idx: usize,
        tok_idx: usize,
    },

    #[error("anaphora target {letter_id}:{sent_idx}:{tok_idx} is tagged {found}, expected PRON")]
    AnaphoraNotPronoun {
        letter_id: String,
        sent_idx: usize,
        tok_idx: usize,
        found: PosClass,
    },

    #[error("lemma `{lemma}` ({pos}) does not occur in the frequency source")]
    MissingLemma { lemma: String, pos: PosClass },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph document: {0}")]
    GraphDocument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
