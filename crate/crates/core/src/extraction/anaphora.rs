use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::pipeline::AnnotatedDoc;
use crate::{Error, PosClass, Result};

/// Position of a token in a corpus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenRef {
    pub letter_id: String,
    pub sent_idx: usize,
    pub tok_idx: usize,
}

/// Manual pronoun resolutions: pronoun position -> antecedent noun lemma.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnaphoraMap {
    entries: BTreeMap<TokenRef, String>,
}

impl AnaphoraMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, at: TokenRef, noun_lemma: impl Into<String>) {
        self.entries.insert(at, noun_lemma.into());
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TokenRef, &str)> {
        self.entries.iter().map(|(k, v)| (k, v.as_str()))
    }

    /// Parses `letter_id TAB sent_idx TAB tok_idx TAB lemma` lines.
    pub fn parse(text: &str) -> Result<AnaphoraMap> {
        let mut map = AnaphoraMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
            if cols.len() != 4 {
                return Err(Error::parse(
                    line_no,
                    format!("expected 4 tab-separated columns, found {}", cols.len()),
                ));
            }
            let index = |col: &str, what: &str| {
                col.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("{what} `{col}` is not a non-negative integer")))
            };
            if cols[0].is_empty() || cols[3].is_empty() {
                return Err(Error::parse(line_no, "empty letter id or lemma"));
            }
            map.insert(
                TokenRef {
                    letter_id: cols[0].to_string(),
                    sent_idx: index(cols[1], "sentence index")?,
                    tok_idx: index(cols[2], "token index")?,
                },
                cols[3].to_lowercase(),
            );
        }
        Ok(map)
    }
}

/// Relabels the pronouns `map` lists for this letter as nouns carrying the
/// antecedent's lemma. Entries for other letters are ignored.
pub fn apply_anaphora(doc: &AnnotatedDoc, map: &AnaphoraMap) -> Result<AnnotatedDoc> {
    let mut out = doc.clone();
    for (at, lemma) in map.iter().filter(|(at, _)| at.letter_id == doc.letter_id) {
        let token = out
            .token_mut(at.sent_idx, at.tok_idx)
            .ok_or_else(|| Error::AnaphoraMissing {
                letter_id: at.letter_id.clone(),
                sent_idx: at.sent_idx,
                tok_idx: at.tok_idx,
            })?;
        if token.pos != PosClass::Pron {
            return Err(Error::AnaphoraNotPronoun {
                letter_id: at.letter_id.clone(),
                sent_idx: at.sent_idx,
                tok_idx: at.tok_idx,
                found: token.pos,
            });
        }
        token.lemma = lemma.to_string();
        token.pos = PosClass::Noun;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::Pipeline;

    fn example_doc() -> AnnotatedDoc {
        Pipeline::default()
            .annotate("L01", "what hee ought to doe to leade a Child")
            .0
    }

    #[test]
    fn relabels_pronoun() {
        let doc = example_doc();
        let map = AnaphoraMap::parse("L01\t0\t1\ttutor\n").unwrap();
        let resolved = apply_anaphora(&doc, &map).unwrap();
        let t = resolved.token(0, 1).unwrap();
        assert_eq!(
            (t.surface.as_str(), t.lemma.as_str(), t.pos),
            ("hee", "tutor", PosClass::Noun)
        );
        for (a, b) in doc.tokens().zip(resolved.tokens()).filter(|(a, _)| a.tok_idx != 1) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn empty_map_and_other_letters_leave_doc_unchanged() {
        let doc = example_doc();
        assert_eq!(apply_anaphora(&doc, &AnaphoraMap::new()).unwrap(), doc);
        let other = AnaphoraMap::parse("L02\t0\t1\ttutor\n").unwrap();
        assert_eq!(apply_anaphora(&doc, &other).unwrap(), doc);
    }

    #[test]
    fn non_pronoun_target_is_an_error() {
        let doc = example_doc();
        let map = AnaphoraMap::parse("L01\t0\t8\ttutor\n").unwrap();
        assert_eq!(
            apply_anaphora(&doc, &map),
            Err(Error::AnaphoraNotPronoun {
                letter_id: "L01".into(),
                sent_idx: 0,
                tok_idx: 8,
                found: PosClass::Noun
            })
        );
        let missing = AnaphoraMap::parse("L01\t4\t0\ttutor\n").unwrap();
        assert!(matches!(
            apply_anaphora(&doc, &missing),
            Err(Error::AnaphoraMissing { .. })
        ));
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(matches!(
            AnaphoraMap::parse("L01\tx\t1\ttutor"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            AnaphoraMap::parse("# c\nL01\t0\t1"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
