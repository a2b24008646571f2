use alloc::vec::Vec;
use core::num::NonZeroUsize;

use crate::extraction::{RelationKind, RelationRecord};
use crate::pipeline::{AnnotatedDoc, Token};
use crate::PosClass;

/// Verb lemmas that act as auxiliaries and therefore never stop a scan.
pub const AUXILIARY_LEMMAS: [&str; 3] = ["be", "have", "do"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowConfig {
    /// Most tokens allowed between a verb and its candidate noun.
    pub max_dist: NonZeroUsize,
    /// Stop a scan at a non-auxiliary verb.
    pub verb_blocker: bool,
    /// Count punctuation tokens toward the distance.
    pub count_punctuation: bool,
}

impl Default for WindowConfig {
    fn default() -> Self {
        WindowConfig {
            max_dist: NonZeroUsize::new(4).unwrap(),
            verb_blocker: true,
            count_punctuation: true,
        }
    }
}

impl WindowConfig {
    pub fn with_max_dist(mut self, max_dist: usize) -> crate::Result<Self> {
        self.max_dist = NonZeroUsize::new(max_dist)
            .ok_or_else(|| crate::Error::InvalidParameter("max_dist must be at least 1".into()))?;
        Ok(self)
    }
}

pub(crate) fn is_blocker(token: &Token) -> bool {
    token.pos == PosClass::Verb && !AUXILIARY_LEMMAS.contains(&token.lemma.as_str())
}

/// Finds, for every verb, the closest noun on each side with at most
/// `max_dist` tokens in between, and emits them as candidate subject (left)
/// and object (right). Scans stay inside the sentence and stop at a blocking
/// verb when the blocker is on. Pronouns are never candidates.
pub fn extract_window_pairs(doc: &AnnotatedDoc, cfg: &WindowConfig) -> Vec<RelationRecord> {
    let mut out = Vec::new();
    for (sent_idx, sentence) in doc.sentences.iter().enumerate() {
        for (v, verb) in sentence.iter().enumerate() {
            if verb.pos != PosClass::Verb {
                continue;
            }
            let left = scan(sentence, (0..v).rev(), cfg);
            let right = scan(sentence, v + 1..sentence.len(), cfg);
            for (kind, found) in [(RelationKind::Subj, left), (RelationKind::Obj, right)] {
                if let Some(n) = found {
                    out.push(RelationRecord::pair(
                        kind,
                        sentence[n].lemma.as_str(),
                        verb.lemma.as_str(),
                        doc.letter_id.as_str(),
                        sent_idx,
                    ));
                }
            }
        }
    }
    out
}

fn scan(sentence: &[Token], positions: impl Iterator<Item = usize>, cfg: &WindowConfig) -> Option<usize> {
    let mut between = 0;
    for i in positions {
        let token = &sentence[i];
        if token.pos == PosClass::Noun {
            return Some(i);
        }
        if cfg.verb_blocker && is_blocker(token) {
            return None;
        }
        if token.pos != PosClass::Punct || cfg.count_punctuation {
            between += 1;
            if between > cfg.max_dist.get() {
                return None;
            }
        }
    }
    None
}
