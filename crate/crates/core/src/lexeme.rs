use core::fmt;

use alloc::string::String;
use serde::{Deserialize, Serialize};

use crate::PosClass;

/// A lemma together with its part-of-speech class; the identity of a graph
/// node. Ordered by lemma, then class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Lexeme {
    pub lemma: String,
    pub pos: PosClass,
}

impl Lexeme {
    pub fn new(lemma: impl Into<String>, pos: PosClass) -> Self {
        Lexeme {
            lemma: lemma.into(),
            pos,
        }
    }
}

impl fmt::Display for Lexeme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lemma, self.pos)
    }
}
