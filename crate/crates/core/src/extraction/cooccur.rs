use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::num::NonZeroUsize;

use crate::extraction::RelationRecord;
use crate::pipeline::{AnnotatedDoc, Token};
use crate::PosClass;

/// The textual unit two tokens must share to co-occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Context {
    Sentence,
    /// Tokens at most this many positions apart within a sentence.
    Window(NonZeroUsize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CooccurConfig {
    pub context: Context,
    pub pos_filter: BTreeSet<PosClass>,
    /// Count punctuation tokens toward window distance.
    pub count_punctuation: bool,
}

impl Default for CooccurConfig {
    fn default() -> Self {
        CooccurConfig {
            context: Context::Sentence,
            pos_filter: [PosClass::Noun, PosClass::Verb, PosClass::Adj].into_iter().collect(),
            count_punctuation: true,
        }
    }
}

/// Distance between positions `from < to` of a sentence: the number of
/// counted tokens in `(from, to]`.
pub(crate) fn distance(sentence: &[Token], from: usize, to: usize, count_punctuation: bool) -> usize {
    if count_punctuation {
        return to - from;
    }
    sentence[from + 1..=to]
        .iter()
        .filter(|t| t.pos != PosClass::Punct)
        .count()
}

/// One record per unordered pair of distinct positions sharing a context
/// unit, both tokens passing the class filter. Repeated pairs are kept;
/// their multiplicity is the co-occurrence frequency.
pub fn extract_cooccurrences(doc: &AnnotatedDoc, cfg: &CooccurConfig) -> Vec<RelationRecord> {
    let mut out = Vec::new();
    for (sent_idx, sentence) in doc.sentences.iter().enumerate() {
        let content: Vec<usize> = (0..sentence.len())
            .filter(|&i| cfg.pos_filter.contains(&sentence[i].pos))
            .collect();
        for (a, &i) in content.iter().enumerate() {
            for &j in &content[a + 1..] {
                if let Context::Window(k) = cfg.context {
                    if distance(sentence, i, j, cfg.count_punctuation) > k.get() {
                        break;
                    }
                }
                out.push(RelationRecord::cooccur(
                    sentence[i].lexeme(),
                    sentence[j].lexeme(),
                    doc.letter_id.as_str(),
                    sent_idx,
                ));
            }
        }
    }
    out
}
