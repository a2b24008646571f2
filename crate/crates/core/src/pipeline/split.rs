use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

const BUILTIN_ABBREVIATIONS: &str = include_str!("../../data/abbreviations.txt");

/// Sentence boundary rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitConfig {
    /// Treat `:` as a boundary in addition to `.`, `?` and `!`.
    pub colon_boundary: bool,
    /// Lowercase words, without the trailing period, after which a period
    /// does not end a sentence.
    pub abbreviations: BTreeSet<String>,
    /// A period after a single capital letter marks an initial.
    pub initials: bool,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig {
            colon_boundary: false,
            abbreviations: parse_abbreviations(BUILTIN_ABBREVIATIONS),
            initials: true,
        }
    }
}

impl SplitConfig {
    pub fn with_colon_boundary(mut self, on: bool) -> Self {
        self.colon_boundary = on;
        self
    }
}

/// Parses an abbreviation list: one entry per line, `#` comments, the
/// trailing period optional.
pub fn parse_abbreviations(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.trim_end_matches('.').to_lowercase())
        .collect()
}

fn is_closer(c: char) -> bool {
    matches!(c, '"' | '\'' | ')' | ']' | '\u{2019}' | '\u{201d}')
}

/// Splits clean text into trimmed sentence slices. Every non-whitespace
/// character of `text` ends up in exactly one sentence, in order.
pub fn split_sentences<'a>(text: &'a str, cfg: &SplitConfig) -> Vec<&'a str> {
    let mut sentences = Vec::new();
    let mut start = 0;
    let mut chars = text.char_indices().peekable();
    while let Some((idx, ch)) = chars.next() {
        let terminal = matches!(ch, '.' | '?' | '!') || (cfg.colon_boundary && ch == ':');
        if !terminal {
            continue;
        }
        let mut end = idx + ch.len_utf8();
        while let Some(&(j, c)) = chars.peek() {
            if matches!(c, '.' | '?' | '!') || is_closer(c) {
                end = j + c.len_utf8();
                chars.next();
            } else {
                break;
            }
        }
        let followed_by_space = text[end..].chars().next().is_none_or(char::is_whitespace);
        if !followed_by_space {
            continue;
        }
        if ch == '.' && end == idx + 1 && is_abbreviation(&text[start..idx], cfg) {
            continue;
        }
        let sentence = text[start..end].trim();
        if !sentence.is_empty() {
            sentences.push(sentence);
        }
        start = end;
    }
    let tail = text[start..].trim();
    if !tail.is_empty() {
        sentences.push(tail);
    }
    sentences
}

fn is_abbreviation(before: &str, cfg: &SplitConfig) -> bool {
    let word = before
        .rsplit(char::is_whitespace)
        .next()
        .unwrap_or("")
        .trim_start_matches(|c: char| !c.is_alphanumeric());
    if word.is_empty() {
        return false;
    }
    if cfg.initials {
        let mut it = word.chars();
        if let (Some(c), None) = (it.next(), it.next()) {
            if c.is_uppercase() && c != 'I' {
                return true;
            }
        }
    }
    cfg.abbreviations.contains(&word.to_lowercase())
}

/// Owned variant of [`split_sentences`].
pub fn split_sentences_owned(text: &str, cfg: &SplitConfig) -> Vec<String> {
    split_sentences(text, cfg)
        .into_iter()
        .map(ToString::to_string)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_stops_end_sentences() {
        let cfg = SplitConfig::default();
        assert_eq!(
            split_sentences("By this then wee see what trueth is. And more.", &cfg),
            ["By this then wee see what trueth is.", "And more."]
        );
    }

    #[test]
    fn colon_boundary_is_optional() {
        let text = "is to bee seene: And secondly the trueth";
        let off = SplitConfig::default();
        assert_eq!(split_sentences(text, &off).len(), 1);
        let on = SplitConfig::default().with_colon_boundary(true);
        assert_eq!(
            split_sentences(text, &on),
            ["is to bee seene:", "And secondly the trueth"]
        );
    }

    #[test]
    fn abbreviations_do_not_split() {
        let cfg = SplitConfig::default();
        assert_eq!(split_sentences("Mr. Hartlib wrote.", &cfg), ["Mr. Hartlib wrote."]);
        assert_eq!(split_sentences("Mrs. Dury came. Then", &cfg).len(), 2);
        assert_eq!(split_sentences("J. Dury wrote. I answered.", &cfg).len(), 2);
    }

    #[test]
    fn question_marks_and_closers() {
        let cfg = SplitConfig::default();
        assert_eq!(
            split_sentences("Is it so?\" he said. (Yes.) Well", &cfg),
            ["Is it so?\"", "he said.", "(Yes.)", "Well"]
        );
        assert_eq!(split_sentences("pay 3.5 pounds", &cfg), ["pay 3.5 pounds"]);
    }

    #[test]
    fn no_terminator_gives_one_sentence() {
        let cfg = SplitConfig::default();
        assert_eq!(split_sentences("no end here", &cfg), ["no end here"]);
        assert!(split_sentences("   ", &cfg).is_empty());
    }

    proptest! {
        #[test]
        fn preserves_non_whitespace(text in "[A-Za-z .:?!\"]{0,60}", colon in any::<bool>()) {
            let cfg = SplitConfig::default().with_colon_boundary(colon);
            let joined: String = split_sentences(&text, &cfg).concat().chars().filter(|c| !c.is_whitespace()).collect();
            let expected: String = text.chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(joined, expected);
        }
    }
}
