use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::{Error, PosClass, Result};

const BUILTIN_VARIANTS: &str = include_str!("../../data/variants.tsv");

/// What a historical spelling maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantEntry {
    pub normalized: String,
    /// Overrides the tagger when set.
    pub pos: Option<PosClass>,
    /// Overrides the lemmatizer when set.
    pub lemma: Option<String>,
}

/// Historical spelling lexicon keyed by case-folded form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VariantLexicon {
    entries: BTreeMap<String, VariantEntry>,
}

impl VariantLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// The shipped Early Modern English lexicon.
    pub fn builtin() -> &'static VariantLexicon {
        static BUILTIN: OnceBox<VariantLexicon> = OnceBox::new();
        BUILTIN.get_or_init(|| {
            alloc::boxed::Box::new(VariantLexicon::parse(BUILTIN_VARIANTS).expect("shipped variant lexicon parses"))
        })
    }

    /// Parses `historical TAB normalized TAB class-or-"-" TAB lemma-or-"-"`
    /// lines. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<VariantLexicon> {
        let mut lex = VariantLexicon::new();
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
                    alloc::format!("expected 4 tab-separated columns, found {}", cols.len()),
                ));
            }
            if cols[0].is_empty() || cols[1].is_empty() {
                return Err(Error::parse(line_no, "empty historical or normalized form"));
            }
            let pos = match cols[2] {
                "-" | "" => None,
                label => Some(
                    PosClass::from_label(label)
                        .ok_or_else(|| Error::parse(line_no, alloc::format!("unknown class `{label}`")))?,
                ),
            };
            let lemma = match cols[3] {
                "-" | "" => None,
                l => Some(l.to_lowercase()),
            };
            lex.insert(
                cols[0],
                VariantEntry {
                    normalized: cols[1].to_lowercase(),
                    pos,
                    lemma,
                },
            );
        }
        Ok(lex)
    }

    pub fn insert(&mut self, historical: &str, entry: VariantEntry) {
        self.entries.insert(historical.to_lowercase(), entry);
    }

    /// Adds all entries of `other`, replacing existing keys.
    pub fn extend(&mut self, other: VariantLexicon) {
        self.entries.extend(other.entries);
    }

    pub fn get(&self, form: &str) -> Option<&VariantEntry> {
        match self.entries.get(form) {
            Some(e) => Some(e),
            None => self.entries.get(&form.to_lowercase()),
        }
    }

    pub fn contains(&self, form: &str) -> bool {
        self.get(form).is_some()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &VariantEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push('\t');
            out.push_str(&v.normalized);
            out.push('\t');
            out.push_str(v.pos.map_or("-", PosClass::as_str));
            out.push('\t');
            out.push_str(v.lemma.as_deref().unwrap_or("-"));
            out.push('\n');
        }
        out
    }
}

impl core::fmt::Display for VariantEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.normalized)?;
        if let Some(pos) = self.pos {
            write!(f, "/{pos}")?;
        }
        if let Some(lemma) = &self.lemma {
            write!(f, " ({lemma})")?;
        }
        Ok(())
    }
}

impl From<&str> for VariantEntry {
    fn from(normalized: &str) -> Self {
        VariantEntry {
            normalized: normalized.to_string(),
            pos: None,
            lemma: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_covers_attested_forms() {
        let lex = VariantLexicon::builtin();
        let expect = [
            ("bee", "be", PosClass::Verb),
            ("wee", "we", PosClass::Pron),
            ("hee", "he", PosClass::Pron),
            ("shee", "she", PosClass::Pron),
            ("trueth", "truth", PosClass::Noun),
            ("falshood", "falsehood", PosClass::Noun),
            ("shew", "show", PosClass::Verb),
            ("vse", "use", PosClass::Verb),
            ("Tutour", "tutor", PosClass::Noun),
            ("doe", "do", PosClass::Verb),
            ("leade", "lead", PosClass::Verb),
            ("seene", "seen", PosClass::Verb),
        ];
        for (form, norm, pos) in expect {
            let e = lex.get(form).unwrap_or_else(|| panic!("{form} missing"));
            assert_eq!(e.normalized, norm, "{form}");
            assert_eq!(e.pos, Some(pos), "{form}");
        }
        assert_eq!(lex.get("seene").unwrap().lemma.as_deref(), Some("see"));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = VariantLexicon::parse("# c\nbee\tbe\tVERB\tbe\nwee\twe\tPRON\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = VariantLexicon::parse("x\ty\tNOPE\t-\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn dashes_mean_absent_and_tsv_round_trips() {
        let lex = VariantLexicon::parse("Loue\tlove\t-\t-\n").unwrap();
        let e = lex.get("LOUE").unwrap();
        assert_eq!((e.pos, e.lemma.as_deref()), (None, None));
        assert_eq!(VariantLexicon::parse(&lex.to_tsv()).unwrap(), lex);
        let builtin = VariantLexicon::builtin();
        assert_eq!(&VariantLexicon::parse(&builtin.to_tsv()).unwrap(), builtin);
    }
}
