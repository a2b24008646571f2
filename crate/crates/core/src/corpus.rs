//! Letters, their metadata, and editorial clean-up of transcriptions.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Plausible years for the target material.
pub const YEAR_RANGE: core::ops::RangeInclusive<i32> = 1400..=1900;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterMeta {
    pub id: String,
    pub sender: String,
    /// Absent for texts that are not letters (memoranda, summaries).
    pub addressee: Option<String>,
    pub year: Option<i32>,
    pub year_uncertain: bool,
    pub language: String,
}

impl LetterMeta {
    pub fn new(id: impl Into<String>, sender: impl Into<String>) -> Self {
        LetterMeta {
            id: id.into(),
            sender: sender.into(),
            addressee: None,
            year: None,
            year_uncertain: false,
            language: String::from("en"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.id.trim().is_empty() {
            return Err(Error::EmptyLetterId);
        }
        if let Some(year) = self.year {
            if !YEAR_RANGE.contains(&year) {
                return Err(Error::YearOutOfRange {
                    id: self.id.clone(),
                    year,
                });
            }
        }
        Ok(())
    }
}

/// Which editorial conventions `clean_text` removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CleaningConfig {
    /// Drop `<...>` tags.
    pub strip_markup: bool,
    /// Drop `[...]` editorial insertions.
    pub strip_notes: bool,
    /// Join words hyphenated across a line break.
    pub rejoin_hyphenation: bool,
}

impl Default for CleaningConfig {
    fn default() -> Self {
        CleaningConfig {
            strip_markup: true,
            strip_notes: true,
            rejoin_hyphenation: true,
        }
    }
}

/// A recoverable problem found while cleaning. Offsets are byte offsets
/// into the input text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CleanWarning {
    UnclosedTag { offset: usize },
    UnclosedBracket { offset: usize },
    UnopenedBracket { offset: usize },
    NestedBrackets { offset: usize },
}

impl core::fmt::Display for CleanWarning {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CleanWarning::UnclosedTag { offset } => {
                write!(f, "unclosed markup tag at byte {offset}, kept as text")
            }
            CleanWarning::UnclosedBracket { offset } => {
                write!(f, "unclosed '[' at byte {offset}, kept as text")
            }
            CleanWarning::UnopenedBracket { offset } => {
                write!(f, "unmatched ']' at byte {offset}, kept as text")
            }
            CleanWarning::NestedBrackets { offset } => {
                write!(f, "nested brackets at byte {offset}, kept as text")
            }
        }
    }
}

/// Removes markup, editorial notes and redundant whitespace.
pub fn clean_text(raw: &str, cfg: &CleaningConfig) -> String {
    clean_text_with_warnings(raw, cfg).0
}

/// Like [`clean_text`], also reporting malformed markup found in `raw`.
pub fn clean_text_with_warnings(raw: &str, cfg: &CleaningConfig) -> (String, Vec<CleanWarning>) {
    let mut warnings = Vec::new();
    let mut text = clean_pass(raw, cfg, &mut warnings);
    // A removal can expose a new removable span; run to a fixed point so the
    // operation is idempotent. Every productive pass shortens the text.
    let mut scratch = Vec::new();
    loop {
        let next = clean_pass(&text, cfg, &mut scratch);
        if next == text {
            break;
        }
        text = next;
    }
    (text, warnings)
}

fn clean_pass(raw: &str, cfg: &CleaningConfig, warnings: &mut Vec<CleanWarning>) -> String {
    let text = if cfg.rejoin_hyphenation {
        rejoin_hyphenation(raw)
    } else {
        String::from(raw)
    };
    let text = if cfg.strip_markup {
        strip_markup(&text, warnings)
    } else {
        text
    };
    let text = if cfg.strip_notes {
        strip_notes(&text, warnings)
    } else {
        text
    };
    collapse_whitespace(&text)
}

fn rejoin_hyphenation(text: &str) -> String {
    let bytes = text.as_bytes();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < text.len() {
        let ch = text[i..].chars().next().unwrap();
        if ch == '-' && out.chars().next_back().is_some_and(char::is_alphabetic) {
            let mut j = i + 1;
            while j < bytes.len() && (bytes[j] == b' ' || bytes[j] == b'\t' || bytes[j] == b'\r') {
                j += 1;
            }
            if j < bytes.len() && bytes[j] == b'\n' {
                j += 1;
                while j < bytes.len() && (bytes[j] as char).is_ascii_whitespace() {
                    j += 1;
                }
                if text[j..].chars().next().is_some_and(char::is_lowercase) {
                    i = j;
                    continue;
                }
            }
        }
        out.push(ch);
        i += ch.len_utf8();
    }
    out
}

const BLOCK_TAGS: &[&str] = &["br", "p", "div", "lb", "pb", "l", "li", "tr", "td", "head"];

fn strip_markup(text: &str, warnings: &mut Vec<CleanWarning>) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    let mut offset = 0;
    while let Some(open) = rest.find('<') {
        out.push_str(&rest[..open]);
        let after = &rest[open + 1..];
        let looks_like_tag = after
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || matches!(c, '/' | '!' | '?'));
        let close = after.find('>');
        let reopen = after.find('<');
        match close {
            Some(close) if looks_like_tag && reopen.is_none_or(|r| r > close) => {
                let name: String = after[..close]
                    .trim_start_matches(['/', '!', '?'])
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric())
                    .collect::<String>()
                    .to_ascii_lowercase();
                if BLOCK_TAGS.contains(&name.as_str()) {
                    out.push(' ');
                }
                let consumed = open + 1 + close + 1;
                rest = &rest[consumed..];
                offset += consumed;
            }
            _ => {
                if looks_like_tag {
                    warnings.push(CleanWarning::UnclosedTag { offset: offset + open });
                }
                out.push('<');
                rest = &rest[open + 1..];
                offset += open + 1;
            }
        }
    }
    out.push_str(rest);
    out
}

fn strip_notes(text: &str, warnings: &mut Vec<CleanWarning>) -> String {
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < text.len() {
        let ch = text[i..].chars().next().unwrap();
        match ch {
            '[' => match bracket_span(&text[i..]) {
                BracketSpan::Flat(len) => {
                    let next = text[i + len..].chars().next();
                    if next.is_some_and(|c| matches!(c, '.' | ',' | ';' | ':' | '!' | '?' | ')')) {
                        while out.ends_with(char::is_whitespace) {
                            out.pop();
                        }
                    } else {
                        out.push(' ');
                    }
                    i += len;
                }
                BracketSpan::Nested(len) => {
                    warnings.push(CleanWarning::NestedBrackets { offset: i });
                    out.push_str(&text[i..i + len]);
                    i += len;
                }
                BracketSpan::Unclosed => {
                    warnings.push(CleanWarning::UnclosedBracket { offset: i });
                    out.push('[');
                    i += 1;
                }
            },
            ']' => {
                warnings.push(CleanWarning::UnopenedBracket { offset: i });
                out.push(']');
                i += 1;
            }
            _ => {
                out.push(ch);
                i += ch.len_utf8();
            }
        }
    }
    out
}

enum BracketSpan {
    /// Byte length of a `[...]` span containing no other bracket.
    Flat(usize),
    /// Byte length of a balanced span containing inner brackets.
    Nested(usize),
    Unclosed,
}

fn bracket_span(text: &str) -> BracketSpan {
    debug_assert!(text.starts_with('['));
    let mut depth = 0usize;
    let mut nested = false;
    for (idx, ch) in text.char_indices() {
        match ch {
            '[' => {
                depth += 1;
                if depth > 1 {
                    nested = true;
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    let len = idx + 1;
                    return if nested {
                        BracketSpan::Nested(len)
                    } else {
                        BracketSpan::Flat(len)
                    };
                }
            }
            _ => {}
        }
    }
    BracketSpan::Unclosed
}

fn collapse_whitespace(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub meta: LetterMeta,
    pub raw_text: String,
    pub clean_text: String,
    /// Text from the first occurrence of this marker onwards is excluded
    /// from analysis (e.g. a trailing passage in another language).
    pub cut_marker: Option<String>,
}

impl Letter {
    pub fn new(meta: LetterMeta, raw_text: String, cfg: &CleaningConfig) -> Result<(Letter, Vec<CleanWarning>)> {
        meta.validate()?;
        let (clean_text, warnings) = clean_text_with_warnings(&raw_text, cfg);
        Ok((
            Letter {
                meta,
                raw_text,
                clean_text,
                cut_marker: None,
            },
            warnings,
        ))
    }

    pub fn with_cut_marker(mut self, marker: Option<String>) -> Self {
        self.cut_marker = marker.filter(|m| !m.trim().is_empty());
        self
    }

    /// The portion of the clean text that enters the pipeline.
    pub fn analysis_text(&self) -> &str {
        match &self.cut_marker {
            Some(marker) => match self.clean_text.find(marker.as_str()) {
                Some(at) => self.clean_text[..at].trim_end(),
                None => &self.clean_text,
            },
            None => &self.clean_text,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    letters: Vec<Letter>,
}

impl Corpus {
    pub fn new(letters: Vec<Letter>) -> Result<Corpus> {
        let mut seen = BTreeSet::new();
        for letter in &letters {
            letter.meta.validate()?;
            if !seen.insert(letter.meta.id.as_str()) {
                return Err(Error::DuplicateLetterId(letter.meta.id.clone()));
            }
        }
        Ok(Corpus { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Letter> {
        self.letters.iter().find(|l| l.meta.id == id)
    }

    /// Letters whose metadata satisfies `predicate`, in original order.
    pub fn filter<P>(&self, predicate: P) -> Corpus
    where
        P: Fn(&LetterMeta) -> bool,
    {
        Corpus {
            letters: self.letters.iter().filter(|l| predicate(&l.meta)).cloned().collect(),
        }
    }
}

impl IntoIterator for Corpus {
    type Item = Letter;
    type IntoIter = alloc::vec::IntoIter<Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.letters.into_iter()
    }
}

/// Conjunctive metadata filter; unset fields match everything.
/// Name comparisons ignore ASCII case.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct MetaFilter {
    pub sender: Option<String>,
    pub addressee: Option<String>,
    pub year: Option<i32>,
    pub year_from: Option<i32>,
    pub year_to: Option<i32>,
}

impl MetaFilter {
    pub fn matches(&self, meta: &LetterMeta) -> bool {
        let name_ok = |want: &Option<String>, have: Option<&str>| match want {
            None => true,
            Some(w) => have.is_some_and(|h| h.eq_ignore_ascii_case(w)),
        };
        let year_ok = |check: Option<i32>, f: fn(i32, i32) -> bool| match check {
            None => true,
            Some(bound) => meta.year.is_some_and(|y| f(y, bound)),
        };
        name_ok(&self.sender, Some(&meta.sender))
            && name_ok(&self.addressee, meta.addressee.as_deref())
            && year_ok(self.year, |y, b| y == b)
            && year_ok(self.year_from, |y, b| y >= b)
            && year_ok(self.year_to, |y, b| y <= b)
    }

    pub fn is_empty(&self) -> bool {
        *self == MetaFilter::default()
    }
}
