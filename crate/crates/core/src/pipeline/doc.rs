use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Lexeme, PosClass, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    /// As written, case preserved.
    pub surface: String,
    /// Modern lowercase spelling.
    pub normalized: String,
    pub lemma: String,
    pub pos: PosClass,
    pub sent_idx: usize,
    pub tok_idx: usize,
}

impl Token {
    pub fn lexeme(&self) -> Lexeme {
        Lexeme::new(self.lemma.clone(), self.pos)
    }
}

/// A letter as sentences of annotated tokens.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedDoc {
    pub letter_id: String,
    pub sentences: Vec<Vec<Token>>,
}

impl AnnotatedDoc {
    pub fn new(letter_id: impl Into<String>) -> Self {
        AnnotatedDoc {
            letter_id: letter_id.into(),
            sentences: Vec::new(),
        }
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flatten()
    }

    pub fn token(&self, sent_idx: usize, tok_idx: usize) -> Option<&Token> {
        self.sentences.get(sent_idx)?.get(tok_idx)
    }

    pub fn token_mut(&mut self, sent_idx: usize, tok_idx: usize) -> Option<&mut Token> {
        self.sentences.get_mut(sent_idx)?.get_mut(tok_idx)
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    /// Appends a sentence, renumbering its tokens to keep indices contiguous.
    pub fn push_sentence(&mut self, mut tokens: Vec<Token>) {
        let sent_idx = self.sentences.len();
        for (tok_idx, t) in tokens.iter_mut().enumerate() {
            t.sent_idx = sent_idx;
            t.tok_idx = tok_idx;
        }
        self.sentences.push(tokens);
    }
}

/// Non-fatal issue met while reading the vertical format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalWarning {
    pub line: usize,
    pub label: String,
}

impl core::fmt::Display for VerticalWarning {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "line {}: unknown class `{}`, using OTHER", self.line, self.label)
    }
}

/// Parses the vertical format: `surface TAB normalized TAB lemma TAB class`,
/// one token per line, a blank line ending a sentence, `#` comments.
pub fn parse_vertical(letter_id: &str, text: &str) -> Result<(AnnotatedDoc, Vec<VerticalWarning>)> {
    let mut doc = AnnotatedDoc::new(letter_id);
    let mut warnings = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim_end_matches('\r');
        if line.starts_with('#') {
            continue;
        }
        if line.trim().is_empty() {
            if !current.is_empty() {
                doc.push_sentence(core::mem::take(&mut current));
            }
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(Error::parse(
                line_no,
                format!("expected 4 tab-separated columns, found {}", cols.len()),
            ));
        }
        if cols.iter().any(|c| c.trim().is_empty()) {
            return Err(Error::parse(line_no, "empty column"));
        }
        let pos = PosClass::from_label(cols[3]).unwrap_or_else(|| {
            warnings.push(VerticalWarning {
                line: line_no,
                label: cols[3].to_string(),
            });
            PosClass::Other
        });
        current.push(Token {
            surface: cols[0].to_string(),
            normalized: cols[1].to_string(),
            lemma: cols[2].to_string(),
            pos,
            sent_idx: 0,
            tok_idx: 0,
        });
    }
    if !current.is_empty() {
        doc.push_sentence(current);
    }
    Ok((doc, warnings))
}

/// Renders `doc` in the vertical format read by [`parse_vertical`].
pub fn write_vertical(doc: &AnnotatedDoc) -> String {
    let mut out = format!("# letter: {}\n", doc.letter_id);
    for (i, sentence) in doc.sentences.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for t in sentence {
            out.push_str(&t.surface);
            out.push('\t');
            out.push_str(&t.normalized);
            out.push('\t');
            out.push_str(&t.lemma);
            out.push('\t');
            out.push_str(t.pos.as_str());
            out.push('\n');
        }
    }
    out
}
