//! Sentence splitting, tokenization, spelling normalization, tagging and
//! lemmatization.

mod doc;
mod lemma;
mod spelling;
mod split;
mod tagger;
mod tokenize;
mod variants;

use alloc::string::String;
use alloc::vec::Vec;

pub use doc::{parse_vertical, write_vertical, AnnotatedDoc, Token, VerticalWarning};
pub use lemma::{lemmatize, Lemmatizer};
pub use spelling::{normalize_spelling, spelling_candidates, swap_graphemes, Normalization};
pub use split::{parse_abbreviations, split_sentences, split_sentences_owned, SplitConfig};
pub use tagger::{BaselineTagger, TagContext, Tagger};
pub use tokenize::tokenize;
pub use variants::{VariantEntry, VariantLexicon};

use crate::PosClass;

/// A token the tagger could not classify; it was recorded as `OTHER`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagWarning {
    pub sent_idx: usize,
    pub tok_idx: usize,
    pub surface: String,
}

impl core::fmt::Display for TagWarning {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "tagger failed on `{}` at {}:{}, using OTHER",
            self.surface, self.sent_idx, self.tok_idx
        )
    }
}

/// Annotates one tokenized sentence with the shipped lemmatizer. Tokens get
/// sentence index 0; failures are logged.
pub fn normalize_and_tag<T: Tagger>(surfaces: &[&str], lexicon: &VariantLexicon, tagger: &T) -> Vec<Token> {
    let mut warnings = Vec::new();
    let tokens = normalize_and_tag_with(surfaces, 0, lexicon, tagger, Lemmatizer::builtin(), &mut warnings);
    for w in &warnings {
        log::warn!("{w}");
    }
    tokens
}

/// One output token per surface, in order. Variant-lexicon entries take
/// precedence over the tagger and lemmatizer.
pub fn normalize_and_tag_with<T: Tagger>(
    surfaces: &[&str],
    sent_idx: usize,
    lexicon: &VariantLexicon,
    tagger: &T,
    lemmatizer: &Lemmatizer,
    warnings: &mut Vec<TagWarning>,
) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(surfaces.len());
    for (tok_idx, &surface) in surfaces.iter().enumerate() {
        let lower = surface.to_lowercase();
        let ctx = TagContext {
            surface,
            sentence_initial: tok_idx == 0,
            previous: out.last().map(|t| t.pos),
        };
        let mut tag = |word: &str| {
            tagger.tag(word, &ctx).unwrap_or_else(|| {
                warnings.push(TagWarning {
                    sent_idx,
                    tok_idx,
                    surface: String::from(surface),
                });
                PosClass::Other
            })
        };
        let (normalized, pos, lemma) = match normalize_spelling(&lower, lexicon, |w| tagger.knows(w)) {
            Normalization::Listed(entry) => {
                let pos = entry.pos.unwrap_or_else(|| tag(&entry.normalized));
                let lemma = entry
                    .lemma
                    .clone()
                    .unwrap_or_else(|| lemmatizer.lemmatize(&entry.normalized, pos));
                (entry.normalized.clone(), pos, lemma)
            }
            Normalization::Modern(normalized) => {
                let pos = tag(&normalized);
                let lemma = lemmatizer.lemmatize(&normalized, pos);
                (normalized, pos, lemma)
            }
        };
        out.push(Token {
            surface: String::from(surface),
            normalized,
            lemma,
            pos,
            sent_idx,
            tok_idx,
        });
    }
    out
}

/// Text-to-annotation pipeline with a pluggable tagger.
#[derive(Debug, Clone)]
pub struct Pipeline<T: Tagger = BaselineTagger<'static>> {
    pub split: SplitConfig,
    pub variants: VariantLexicon,
    pub tagger: T,
    pub lemmatizer: Lemmatizer,
}

impl Default for Pipeline {
    fn default() -> Self {
        Pipeline {
            split: SplitConfig::default(),
            variants: VariantLexicon::builtin().clone(),
            tagger: BaselineTagger::default(),
            lemmatizer: Lemmatizer::builtin().clone(),
        }
    }
}

impl<T: Tagger> Pipeline<T> {
    pub fn with_tagger(split: SplitConfig, variants: VariantLexicon, tagger: T) -> Self {
        Pipeline {
            split,
            variants,
            tagger,
            lemmatizer: Lemmatizer::builtin().clone(),
        }
    }

    pub fn annotate(&self, letter_id: &str, text: &str) -> (AnnotatedDoc, Vec<TagWarning>) {
        let mut doc = AnnotatedDoc::new(letter_id);
        let mut warnings = Vec::new();
        for sentence in split_sentences(text, &self.split) {
            let surfaces = tokenize(sentence);
            if surfaces.is_empty() {
                continue;
            }
            let sent_idx = doc.sentences.len();
            let tokens = normalize_and_tag_with(
                &surfaces,
                sent_idx,
                &self.variants,
                &self.tagger,
                &self.lemmatizer,
                &mut warnings,
            );
            doc.push_sentence(tokens);
        }
        (doc, warnings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn one(surface: &str) -> Token {
        normalize_and_tag(&[surface], VariantLexicon::builtin(), &BaselineTagger::default())
            .pop()
            .unwrap()
    }

    #[test]
    fn variant_lexicon_fixes_pronouns_and_be() {
        for (surface, norm, pos, lemma) in [
            ("bee", "be", PosClass::Verb, "be"),
            ("wee", "we", PosClass::Pron, "we"),
            ("hee", "he", PosClass::Pron, "he"),
            ("trueth", "truth", PosClass::Noun, "truth"),
            ("shew", "show", PosClass::Verb, "show"),
            ("vse", "use", PosClass::Verb, "use"),
            ("Tutour", "tutor", PosClass::Noun, "tutor"),
            ("seene", "seen", PosClass::Verb, "see"),
        ] {
            let t = one(surface);
            assert_eq!(
                (t.normalized.as_str(), t.pos, t.lemma.as_str()),
                (norm, pos, lemma),
                "{surface}"
            );
            assert_eq!(t.surface, surface);
        }
    }

    #[test]
    fn grapheme_rule_then_tagger() {
        let t = one("moue");
        assert_eq!(
            (t.normalized.as_str(), t.pos, t.lemma.as_str()),
            ("move", PosClass::Verb, "move")
        );
        let t = one("Children");
        assert_eq!((t.pos, t.lemma.as_str()), (PosClass::Noun, "child"));
        let t = one("visibilitie");
        assert_eq!((t.normalized.as_str(), t.pos), ("visibility", PosClass::Noun));
    }

    struct Failing;
    impl Tagger for Failing {
        fn tag(&self, _: &str, _: &TagContext<'_>) -> Option<PosClass> {
            None
        }
    }

    #[test]
    fn tagger_failure_gives_other_with_warning() {
        let mut warnings = Vec::new();
        let toks = normalize_and_tag_with(
            &["care", "bee"],
            3,
            VariantLexicon::builtin(),
            &Failing,
            Lemmatizer::builtin(),
            &mut warnings,
        );
        assert_eq!(toks[0].pos, PosClass::Other);
        assert_eq!(toks[1].pos, PosClass::Verb);
        assert_eq!(warnings.len(), 1);
        assert_eq!((warnings[0].sent_idx, warnings[0].tok_idx), (3, 0));
    }

    #[test]
    fn annotate_indexes_contiguously() {
        let (doc, warnings) = Pipeline::default().annotate("L", "By this then wee see what trueth is. And more.");
        assert!(warnings.is_empty());
        assert_eq!(doc.sentences.len(), 2);
        for (s, sentence) in doc.sentences.iter().enumerate() {
            for (i, t) in sentence.iter().enumerate() {
                assert_eq!((t.sent_idx, t.tok_idx), (s, i));
            }
        }
    }

    #[test]
    fn shipped_lexicon_overrides_any_tagger() {
        for (key, entry) in VariantLexicon::builtin().iter() {
            let mut w = Vec::new();
            let t = &normalize_and_tag_with(
                &[key],
                0,
                VariantLexicon::builtin(),
                &Failing,
                Lemmatizer::builtin(),
                &mut w,
            )[0];
            let b = one(key);
            assert_eq!(t, &b, "{key}");
            assert_eq!(Some(t.pos), entry.pos);
            assert!(w.is_empty());
        }
    }

    proptest! {
        #[test]
        fn token_count_preserved(words in proptest::collection::vec("[A-Za-z]{1,8}|[.,:&]", 0..20)) {
            let refs: Vec<&str> = words.iter().map(String::as_str).collect();
            let toks = normalize_and_tag(&refs, VariantLexicon::builtin(), &BaselineTagger::default());
            prop_assert_eq!(toks.len(), refs.len());
            for (t, s) in toks.iter().zip(&refs) {
                prop_assert_eq!(&t.surface, &s.to_string());
                if t.pos != PosClass::Punct {
                    prop_assert!(!t.lemma.is_empty() && !t.normalized.is_empty());
                }
            }
        }

        #[test]
        fn surfaces_reconstruct_text(text in "[A-Za-z ,.:;?!&']{0,80}") {
            let (doc, _) = Pipeline::default().annotate("p", &text);
            let joined: String = doc.tokens().map(|t| t.surface.as_str()).collect();
            let expected: String = text.chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(joined, expected);
        }
    }
}
