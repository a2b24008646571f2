use super::lemma::Lemmatizer;
use crate::PosClass;

/// What a tagger may look at besides the normalized form.
#[derive(Debug, Clone, Copy)]
pub struct TagContext<'a> {
    /// The token as written, case preserved.
    pub surface: &'a str,
    pub sentence_initial: bool,
    /// Class assigned to the previous token of the sentence.
    pub previous: Option<PosClass>,
}

/// Pluggable part-of-speech tagger.
pub trait Tagger {
    /// `None` signals a failure; the pipeline then records `OTHER`.
    fn tag(&self, normalized: &str, ctx: &TagContext<'_>) -> Option<PosClass>;

    /// Whether `word` is a known modern form. Used to confirm spelling
    /// normalization candidates.
    fn knows(&self, _word: &str) -> bool {
        false
    }
}

impl<T: Tagger + ?Sized> Tagger for &T {
    fn tag(&self, normalized: &str, ctx: &TagContext<'_>) -> Option<PosClass> {
        (**self).tag(normalized, ctx)
    }

    fn knows(&self, word: &str) -> bool {
        (**self).knows(word)
    }
}

/// Deterministic baseline: lexicon lookup, then inflection analysis, then
/// suffix heuristics, falling back to the most frequent open class (NOUN).
#[derive(Debug, Clone, Copy)]
pub struct BaselineTagger<'l> {
    lexicon: &'l Lemmatizer,
}

impl Default for BaselineTagger<'static> {
    fn default() -> Self {
        BaselineTagger {
            lexicon: Lemmatizer::builtin(),
        }
    }
}

const SUFFIXES: &[(&str, PosClass)] = &[
    ("ly", PosClass::Adv),
    ("ing", PosClass::Verb),
    ("ed", PosClass::Verb),
    ("ize", PosClass::Verb),
    ("ise", PosClass::Verb),
    ("ify", PosClass::Verb),
    ("tion", PosClass::Noun),
    ("sion", PosClass::Noun),
    ("cion", PosClass::Noun),
    ("ment", PosClass::Noun),
    ("ness", PosClass::Noun),
    ("ity", PosClass::Noun),
    ("itie", PosClass::Noun),
    ("ance", PosClass::Noun),
    ("ence", PosClass::Noun),
    ("ship", PosClass::Noun),
    ("hood", PosClass::Noun),
    ("dom", PosClass::Noun),
    ("ism", PosClass::Noun),
    ("ist", PosClass::Noun),
    ("ous", PosClass::Adj),
    ("ful", PosClass::Adj),
    ("less", PosClass::Adj),
    ("ive", PosClass::Adj),
    ("able", PosClass::Adj),
    ("ible", PosClass::Adj),
    ("ical", PosClass::Adj),
    ("all", PosClass::Adj),
    ("ish", PosClass::Adj),
    ("ary", PosClass::Adj),
];

impl<'l> BaselineTagger<'l> {
    pub fn new(lexicon: &'l Lemmatizer) -> Self {
        BaselineTagger { lexicon }
    }

    fn suffix_class(word: &str) -> Option<PosClass> {
        SUFFIXES
            .iter()
            .find(|(s, _)| word.len() > s.len() + 2 && word.ends_with(s))
            .map(|&(_, pos)| pos)
    }
}

impl Tagger for BaselineTagger<'_> {
    fn tag(&self, word: &str, ctx: &TagContext<'_>) -> Option<PosClass> {
        if word.is_empty() {
            return None;
        }
        if word.chars().all(|c| !c.is_alphanumeric()) {
            return Some(if word == "&" { PosClass::Conj } else { PosClass::Punct });
        }
        if word.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | ',')) {
            return Some(PosClass::Num);
        }
        if let Some(pos) = self.lexicon.base_class(word) {
            return Some(pos);
        }
        if let Some((_, pos)) = self.lexicon.irregular(word) {
            return Some(pos);
        }
        let capitalised = ctx.surface.chars().next().is_some_and(char::is_uppercase);
        if capitalised && !ctx.sentence_initial {
            return Some(PosClass::Noun);
        }
        if let Some((_, pos)) = self.lexicon.analyse(word) {
            return Some(pos);
        }
        Some(Self::suffix_class(word).unwrap_or(PosClass::Noun))
    }

    fn knows(&self, word: &str) -> bool {
        self.lexicon.knows(word)
    }
}
