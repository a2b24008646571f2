//! Exception lexicon plus suffix rules, confirmed against a table of known
//! base forms where possible.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::{Error, PosClass, Result};

const BUILTIN_LEXICON: &str = include_str!("../../data/lexicon.tsv");
const BUILTIN_IRREGULAR: &str = include_str!("../../data/irregular.tsv");

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lemmatizer {
    base: BTreeMap<String, PosClass>,
    irregular: BTreeMap<String, (String, PosClass)>,
}

/// Lemmatizes with the shipped tables.
pub fn lemmatize(normalized: &str, pos: PosClass) -> String {
    Lemmatizer::builtin().lemmatize(normalized, pos)
}

impl Lemmatizer {
    pub fn builtin() -> &'static Lemmatizer {
        static BUILTIN: OnceBox<Lemmatizer> = OnceBox::new();
        BUILTIN.get_or_init(|| {
            Box::new(Lemmatizer::from_tables(BUILTIN_LEXICON, BUILTIN_IRREGULAR).expect("shipped lemma tables parse"))
        })
    }

    /// `lexicon` holds `word TAB class` base forms, `irregular` holds
    /// `form TAB lemma TAB class` rows.
    pub fn from_tables(lexicon: &str, irregular: &str) -> Result<Lemmatizer> {
        let mut base = BTreeMap::new();
        for (line_no, cols) in rows(lexicon) {
            if cols.len() != 2 {
                return Err(Error::parse(line_no, "expected word and class"));
            }
            base.insert(cols[0].to_lowercase(), class(line_no, cols[1])?);
        }
        let mut irregular_map = BTreeMap::new();
        for (line_no, cols) in rows(irregular) {
            if cols.len() != 3 {
                return Err(Error::parse(line_no, "expected form, lemma and class"));
            }
            irregular_map.insert(
                cols[0].to_lowercase(),
                (cols[1].to_lowercase(), class(line_no, cols[2])?),
            );
        }
        Ok(Lemmatizer {
            base,
            irregular: irregular_map,
        })
    }

    /// Class of a known base form.
    pub fn base_class(&self, word: &str) -> Option<PosClass> {
        self.base.get(word).copied()
    }

    pub fn irregular(&self, word: &str) -> Option<(&str, PosClass)> {
        self.irregular.get(word).map(|(l, p)| (l.as_str(), *p))
    }

    /// Explains `word` as a regular inflection of a known base form,
    /// returning that base and its class.
    pub fn analyse(&self, word: &str) -> Option<(String, PosClass)> {
        for pos in [PosClass::Noun, PosClass::Verb, PosClass::Adj] {
            if let Some(stem) = candidates(word, pos).into_iter().find(|c| self.base.contains_key(c)) {
                let class = self.base[&stem];
                return Some((stem, class));
            }
        }
        None
    }

    pub fn knows(&self, word: &str) -> bool {
        self.base.contains_key(word) || self.irregular.contains_key(word) || self.analyse(word).is_some()
    }

    /// Base form of `normalized` read as `pos`. Idempotent.
    pub fn lemmatize(&self, normalized: &str, pos: PosClass) -> String {
        let mut current = self.step(normalized, pos);
        loop {
            let next = self.step(&current, pos);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    fn step(&self, word: &str, pos: PosClass) -> String {
        if !matches!(pos, PosClass::Noun | PosClass::Verb | PosClass::Adj) {
            return word.to_string();
        }
        if let Some((lemma, class)) = self.irregular.get(word) {
            if *class == pos {
                return lemma.clone();
            }
        }
        if self.base.contains_key(word) {
            return word.to_string();
        }
        if let Some(stem) = candidates(word, pos).into_iter().find(|c| self.base.contains_key(c)) {
            return stem;
        }
        fallback(word, pos).unwrap_or_else(|| word.to_string())
    }
}

fn rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split('\t').map(str::trim).collect()))
}

fn class(line_no: usize, label: &str) -> Result<PosClass> {
    label
        .parse()
        .map_err(|_| Error::parse(line_no, format!("unknown class `{label}`")))
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// `stopp` -> `stop`; keeps `ll`, `ss`, `zz` which are usually part of the stem.
fn undouble(stem: &str) -> Option<String> {
    let mut rev = stem.chars().rev();
    let (a, b) = (rev.next()?, rev.next()?);
    (a == b && !is_vowel(a) && !matches!(a, 'l' | 's' | 'z')).then(|| stem[..stem.len() - a.len_utf8()].to_string())
}

fn strip<'a>(word: &'a str, suffix: &str) -> Option<&'a str> {
    word.strip_suffix(suffix).filter(|s| s.chars().count() >= 2)
}

/// Rule-generated base-form candidates, most specific first.
fn candidates(word: &str, pos: PosClass) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: Option<String>| {
        if let Some(s) = s {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    };
    match pos {
        PosClass::Verb => {
            push(strip(word, "ies").map(|s| format!("{s}y")));
            push(strip(word, "ied").map(|s| format!("{s}y")));
            push(strip(word, "es").map(ToString::to_string));
            push(strip(word, "s").filter(|s| !s.ends_with('s')).map(ToString::to_string));
            for suffix in ["ed", "ing", "eth", "est"] {
                if let Some(stem) = strip(word, suffix) {
                    if suffix == "ed" {
                        push(Some(format!("{stem}e")));
                    }
                    push(Some(stem.to_string()));
                    push(Some(format!("{stem}e")));
                    push(undouble(stem));
                }
            }
        }
        PosClass::Noun => {
            push(strip(word, "ies").map(|s| format!("{s}y")));
            push(strip(word, "men").map(|s| format!("{s}man")));
            push(strip(word, "es").map(ToString::to_string));
            push(strip(word, "s").filter(|s| !s.ends_with('s')).map(ToString::to_string));
        }
        PosClass::Adj => {
            push(strip(word, "ier").map(|s| format!("{s}y")));
            push(strip(word, "iest").map(|s| format!("{s}y")));
            for suffix in ["er", "est"] {
                if let Some(stem) = strip(word, suffix) {
                    push(Some(stem.to_string()));
                    push(Some(format!("{stem}e")));
                    push(undouble(stem));
                }
            }
        }
        _ => {}
    }
    out
}

fn has_vowel(s: &str) -> bool {
    s.chars().any(|c| is_vowel(c) || c == 'y')
}

fn sibilant_es(word: &str) -> Option<String> {
    ["ches", "shes", "sses", "xes", "zes"]
        .iter()
        .any(|s| word.ends_with(s))
        .then(|| word[..word.len() - 2].to_string())
}

fn plain_s(word: &str) -> Option<String> {
    let stem = word.strip_suffix('s')?;
    let blocked = stem.ends_with('s') || stem.ends_with('u') || stem.ends_with('i') || stem.ends_with('\'');
    (!blocked && stem.chars().count() >= 3).then(|| stem.to_string())
}

/// Best-effort stripping for words whose base form is not in the table.
fn fallback(word: &str, pos: PosClass) -> Option<String> {
    let long = |min: usize| word.chars().count() >= min;
    match pos {
        PosClass::Noun => {
            if long(5) {
                if let Some(s) = word.strip_suffix("ies") {
                    return Some(format!("{s}y"));
                }
            }
            sibilant_es(word).or_else(|| plain_s(word))
        }
        PosClass::Verb => {
            if long(5) {
                if let Some(s) = word.strip_suffix("ies").or_else(|| word.strip_suffix("ied")) {
                    return Some(format!("{s}y"));
                }
            }
            for (suffix, min) in [("ing", 6), ("eth", 6), ("ed", 5)] {
                if let Some(stem) = word.strip_suffix(suffix) {
                    if long(min) && has_vowel(stem) {
                        return Some(undouble(stem).unwrap_or_else(|| stem.to_string()));
                    }
                }
            }
            sibilant_es(word).or_else(|| plain_s(word))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn strips_inflection() {
        assert_eq!(lemmatize("eating", PosClass::Verb), "eat");
        assert_eq!(lemmatize("children", PosClass::Noun), "child");
        assert_eq!(lemmatize("truth", PosClass::Noun), "truth");
        assert_eq!(lemmatize("called", PosClass::Verb), "call");
        assert_eq!(lemmatize("moved", PosClass::Verb), "move");
        assert_eq!(lemmatize("moving", PosClass::Verb), "move");
        assert_eq!(lemmatize("running", PosClass::Verb), "run");
        assert_eq!(lemmatize("churches", PosClass::Noun), "church");
        assert_eq!(lemmatize("letters", PosClass::Noun), "letter");
        assert_eq!(lemmatize("carries", PosClass::Verb), "carry");
        assert_eq!(lemmatize("seen", PosClass::Verb), "see");
        assert_eq!(lemmatize("is", PosClass::Verb), "be");
        assert_eq!(lemmatize("greater", PosClass::Adj), "great");
        assert_eq!(lemmatize("better", PosClass::Adj), "good");
    }

    #[test]
    fn unknown_words_get_regular_stripping() {
        assert_eq!(lemmatize("blorfing", PosClass::Verb), "blorf");
        assert_eq!(lemmatize("catalogues", PosClass::Noun), "catalogue");
        assert_eq!(lemmatize("glasses", PosClass::Noun), "glass");
        assert_eq!(lemmatize("genius", PosClass::Noun), "genius");
        assert_eq!(lemmatize("maketh", PosClass::Verb), "make");
    }

    #[test]
    fn non_inflecting_classes_are_identity() {
        assert_eq!(lemmatize("this", PosClass::Det), "this");
        assert_eq!(lemmatize("always", PosClass::Adv), "always");
        assert_eq!(lemmatize("children", PosClass::Verb), "children");
    }

    #[test]
    fn analyse_finds_known_bases() {
        let lem = Lemmatizer::builtin();
        assert_eq!(lem.analyse("churches"), Some(("church".into(), PosClass::Noun)));
        assert_eq!(lem.analyse("comes"), Some(("come".into(), PosClass::Verb)));
        assert_eq!(lem.analyse("qqq"), None);
        assert!(lem.knows("moved") && lem.knows("children") && !lem.knows("moue"));
    }

    proptest! {
        #[test]
        fn lemmatize_is_idempotent(word in "[a-z]{1,12}", pos in proptest::sample::select(PosClass::ALL.to_vec())) {
            let once = lemmatize(&word, pos);
            prop_assert_eq!(lemmatize(&once, pos), once);
        }
    }
}
