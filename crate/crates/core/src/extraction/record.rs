use core::fmt;
use core::str::FromStr;

use alloc::string::String;
use serde::{Deserialize, Serialize};

use crate::{Lexeme, PosClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RelationKind {
    /// Undirected co-occurrence.
    Cooccur,
    /// Candidate subject: directed noun -> verb.
    Subj,
    /// Candidate object: directed verb -> noun.
    Obj,
}

impl RelationKind {
    pub const ALL: [RelationKind; 3] = [RelationKind::Cooccur, RelationKind::Subj, RelationKind::Obj];

    pub const fn as_str(self) -> &'static str {
        match self {
            RelationKind::Cooccur => "COOCCUR",
            RelationKind::Subj => "SUBJ",
            RelationKind::Obj => "OBJ",
        }
    }

    pub const fn is_directed(self) -> bool {
        !matches!(self, RelationKind::Cooccur)
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| crate::Error::InvalidParameter(alloc::format!("unknown relation kind `{s}`")))
    }
}

/// One extracted link with the letter and sentence it came from.
///
/// For `Subj`/`Obj`, `first` is the noun and `second` the verb. For
/// `Cooccur` the two items are stored in canonical order (`first <= second`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RelationRecord {
    pub kind: RelationKind,
    pub first: Lexeme,
    pub second: Lexeme,
    pub letter_id: String,
    pub sent_idx: usize,
}

impl RelationRecord {
    pub fn cooccur(a: Lexeme, b: Lexeme, letter_id: impl Into<String>, sent_idx: usize) -> Self {
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        RelationRecord {
            kind: RelationKind::Cooccur,
            first,
            second,
            letter_id: letter_id.into(),
            sent_idx,
        }
    }

    /// A subject or object link; panics in debug builds when `kind` is
    /// `Cooccur` or the classes are not NOUN and VERB.
    pub fn pair(
        kind: RelationKind,
        noun: impl Into<String>,
        verb: impl Into<String>,
        letter_id: impl Into<String>,
        sent_idx: usize,
    ) -> Self {
        debug_assert!(kind.is_directed());
        RelationRecord {
            kind,
            first: Lexeme::new(noun, PosClass::Noun),
            second: Lexeme::new(verb, PosClass::Verb),
            letter_id: letter_id.into(),
            sent_idx,
        }
    }

    pub fn noun(&self) -> Option<&str> {
        self.kind.is_directed().then_some(self.first.lemma.as_str())
    }

    pub fn verb(&self) -> Option<&str> {
        self.kind.is_directed().then_some(self.second.lemma.as_str())
    }

    /// Edge endpoints in graph direction: noun -> verb for `Subj`,
    /// verb -> noun for `Obj`, canonical order for `Cooccur`.
    pub fn endpoints(&self) -> (&Lexeme, &Lexeme) {
        match self.kind {
            RelationKind::Obj => (&self.second, &self.first),
            RelationKind::Subj | RelationKind::Cooccur => (&self.first, &self.second),
        }
    }
}

impl fmt::Display for RelationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (src, dst) = self.endpoints();
        write!(
            f,
            "{}:{} {} {} -> {}",
            self.letter_id, self.sent_idx, self.kind, src, dst
        )
    }
}
