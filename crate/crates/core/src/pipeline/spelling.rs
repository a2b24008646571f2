//! Rule-based modernisation of Early Modern English spellings.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::variants::{VariantEntry, VariantLexicon};

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Initial `v` before a consonant is `u` (`vse`, `vnto`, `vp`).
fn initial_v(word: &str) -> Option<String> {
    let mut chars = word.chars();
    let (first, second) = (chars.next()?, chars.next()?);
    (first == 'v' && !is_vowel(second) && second != 'y' && second.is_alphabetic())
        .then(|| alloc::format!("u{}", &word[1..]))
}

/// Swaps `u`/`v` and `i`/`j` where Early Modern printing used them
/// positionally: medial `u` between vowels reads `v` (`moue`, `haue`),
/// initial `v` before a consonant reads `u`, initial `i` before a vowel
/// reads `j` (`iust`, `ioy`).
pub fn swap_graphemes(word: &str) -> String {
    let chars: Vec<char> = word.chars().collect();
    let mut out = String::with_capacity(word.len());
    for (i, &c) in chars.iter().enumerate() {
        let prev = i.checked_sub(1).map(|p| chars[p]);
        let next = chars.get(i + 1).copied();
        let swapped = match c {
            'v' if i == 0 && next.is_some_and(|n| n.is_alphabetic() && !is_vowel(n) && n != 'y') => 'u',
            'u' if i > 0 && prev.is_some_and(is_vowel) && next.is_some_and(is_vowel) => 'v',
            'i' if i == 0 && chars.len() > 2 && next.is_some_and(|n| matches!(n, 'a' | 'o' | 'u')) => 'j',
            other => other,
        };
        out.push(swapped);
    }
    out
}

/// Candidate modern spellings in preference order; `word` itself excluded.
pub fn spelling_candidates(word: &str) -> Vec<String> {
    let mut bases = alloc::vec![word.to_string()];
    let swapped = swap_graphemes(word);
    if swapped != word {
        bases.insert(0, swapped);
    }
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: String| {
        if s != word && !out.contains(&s) {
            out.push(s);
        }
    };
    for base in &bases {
        push(base.clone());
        if let Some(stem) = base.strip_suffix("ie").filter(|s| s.len() >= 3) {
            push(alloc::format!("{stem}y"));
        }
        if let Some(stem) = base.strip_suffix('e').filter(|s| s.len() >= 3 && !s.ends_with('e')) {
            push(stem.to_string());
            let mut rev = stem.chars().rev();
            if let (Some(a), Some(b)) = (rev.next(), rev.next()) {
                if a == b && !is_vowel(a) {
                    push(stem[..stem.len() - 1].to_string());
                }
            }
        }
        if let Some(stem) = base.strip_suffix("ck").filter(|s| s.len() >= 3) {
            push(alloc::format!("{stem}c"));
        }
    }
    out
}

/// Result of normalizing one lowercase word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalization<'a> {
    /// Listed in the variant lexicon, possibly after a grapheme swap.
    Listed(&'a VariantEntry),
    /// A modern form, either as written or via a confirmed rule.
    Modern(String),
}

/// Looks `lower` up in the lexicon, then tries rule-generated candidates,
/// accepting one only when the lexicon lists it or `known` confirms it.
pub fn normalize_spelling<'a>(
    lower: &str,
    lexicon: &'a VariantLexicon,
    known: impl Fn(&str) -> bool,
) -> Normalization<'a> {
    if let Some(entry) = lexicon.get(lower) {
        return Normalization::Listed(entry);
    }
    if known(lower) {
        return Normalization::Modern(lower.to_string());
    }
    let candidates = spelling_candidates(lower);
    if let Some(entry) = candidates.iter().find_map(|c| lexicon.get(c)) {
        return Normalization::Listed(entry);
    }
    if let Some(c) = candidates.into_iter().find(|c| known(c)) {
        return Normalization::Modern(c);
    }
    Normalization::Modern(initial_v(lower).unwrap_or_else(|| lower.to_string()))
}
