use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

/// Coarse part-of-speech class carried by every token.
///
/// `Modal` is kept apart from `Verb` so that modal auxiliaries never take
/// part in verb/noun pair extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PosClass {
    Noun,
    Verb,
    Adj,
    Adv,
    Pron,
    Modal,
    Det,
    Prep,
    Conj,
    Num,
    Punct,
    Other,
}

impl PosClass {
    pub const ALL: [PosClass; 12] = [
        PosClass::Noun,
        PosClass::Verb,
        PosClass::Adj,
        PosClass::Adv,
        PosClass::Pron,
        PosClass::Modal,
        PosClass::Det,
        PosClass::Prep,
        PosClass::Conj,
        PosClass::Num,
        PosClass::Punct,
        PosClass::Other,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            PosClass::Noun => "NOUN",
            PosClass::Verb => "VERB",
            PosClass::Adj => "ADJ",
            PosClass::Adv => "ADV",
            PosClass::Pron => "PRON",
            PosClass::Modal => "MODAL",
            PosClass::Det => "DET",
            PosClass::Prep => "PREP",
            PosClass::Conj => "CONJ",
            PosClass::Num => "NUM",
            PosClass::Punct => "PUNCT",
            PosClass::Other => "OTHER",
        }
    }

    /// Maps a label to a class. Besides the native labels this accepts the
    /// Penn Treebank and Universal Dependencies tags external taggers emit.
    pub fn from_label(label: &str) -> Option<PosClass> {
        if let Ok(pos) = label.parse() {
            return Some(pos);
        }
        let upper = label.trim().to_ascii_uppercase();
        let pos = match upper.as_str() {
            "NN" | "NNS" | "NNP" | "NNPS" | "PROPN" | "N" | "SUBST" => PosClass::Noun,
            "VB" | "VBD" | "VBG" | "VBN" | "VBP" | "VBZ" | "AUX" | "V" => PosClass::Verb,
            "JJ" | "JJR" | "JJS" | "A" => PosClass::Adj,
            "RB" | "RBR" | "RBS" | "WRB" | "RP" | "PART" => PosClass::Adv,
            "PRP" | "PRP$" | "WP" | "WP$" | "EX" => PosClass::Pron,
            "MD" => PosClass::Modal,
            "DT" | "PDT" | "WDT" => PosClass::Det,
            "IN" | "TO" | "ADP" => PosClass::Prep,
            "CC" | "CCONJ" | "SCONJ" => PosClass::Conj,
            "CD" => PosClass::Num,
            "." | "," | ":" | ";" | "``" | "''" | "-LRB-" | "-RRB-" | "HYPH" | "SYM" => PosClass::Punct,
            "X" | "FW" | "UH" | "INTJ" | "LS" => PosClass::Other,
            _ => return None,
        };
        Some(pos)
    }

    /// Content classes that become graph nodes by default.
    pub const fn is_content(self) -> bool {
        matches!(self, PosClass::Noun | PosClass::Verb | PosClass::Adj)
    }
}

impl fmt::Display for PosClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPosLabel;

impl fmt::Display for UnknownPosLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown part-of-speech label")
    }
}

impl FromStr for PosClass {
    type Err = UnknownPosLabel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosClass::ALL
            .iter()
            .copied()
            .find(|p| p.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or(UnknownPosLabel)
    }
}
