//! Hand-annotated verb triples and scoring of automatic pairs against them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::extraction::{RelationKind, RelationRecord};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldTriple {
    pub letter_id: String,
    pub sent_idx: usize,
    pub verb: String,
    pub subject: Option<String>,
    pub object: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldTriples {
    pub triples: Vec<GoldTriple>,
}

impl GoldTriples {
    /// Parses `letter_id TAB sent_idx TAB verb TAB subject-or-"-" TAB
    /// object-or-"-"` lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<GoldTriples> {
        let mut triples = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
            if cols.len() != 5 {
                return Err(Error::parse(
                    line_no,
                    format!("expected 5 tab-separated columns, found {}", cols.len()),
                ));
            }
            let sent_idx = cols[1].parse().map_err(|_| {
                Error::parse(
                    line_no,
                    format!("sentence index `{}` is not a non-negative integer", cols[1]),
                )
            })?;
            let slot = |c: &str| (!c.is_empty() && c != "-").then(|| c.to_lowercase());
            let (subject, object) = (slot(cols[3]), slot(cols[4]));
            if subject.is_none() && object.is_none() {
                return Err(Error::parse(line_no, "triple has neither subject nor object"));
            }
            if cols[0].is_empty() || cols[2].is_empty() || cols[2] == "-" {
                return Err(Error::parse(line_no, "empty letter id or verb"));
            }
            triples.push(GoldTriple {
                letter_id: cols[0].to_string(),
                sent_idx,
                verb: cols[2].to_lowercase(),
                subject,
                object,
            });
        }
        Ok(GoldTriples { triples })
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// The verb/noun pairs these triples imply, one per filled slot.
    pub fn expected_pairs(&self) -> Vec<RelationRecord> {
        let mut out = Vec::new();
        for t in &self.triples {
            if let Some(s) = &t.subject {
                out.push(RelationRecord::pair(
                    RelationKind::Subj,
                    s.as_str(),
                    t.verb.as_str(),
                    t.letter_id.as_str(),
                    t.sent_idx,
                ));
            }
            if let Some(o) = &t.object {
                out.push(RelationRecord::pair(
                    RelationKind::Obj,
                    o.as_str(),
                    t.verb.as_str(),
                    t.letter_id.as_str(),
                    t.sent_idx,
                ));
            }
        }
        out
    }
}

/// Precision, recall and F1 over a multiset match. A ratio with an empty
/// denominator is undefined and reported as `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scores {
    pub matched: usize,
    pub predicted: usize,
    pub expected: usize,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: Option<f64>,
}

impl Scores {
    pub fn new(matched: usize, predicted: usize, expected: usize) -> Scores {
        let ratio = |n: usize, d: usize| (d > 0).then(|| n as f64 / d as f64);
        let precision = ratio(matched, predicted);
        let recall = ratio(matched, expected);
        let f1 = match (precision, recall) {
            (Some(p), Some(r)) if p + r > 0.0 => Some(2.0 * p * r / (p + r)),
            (Some(_), Some(_)) => Some(0.0),
            _ => None,
        };
        Scores {
            matched,
            predicted,
            expected,
            precision,
            recall,
            f1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalReport {
    pub subj: Scores,
    pub obj: Scores,
    pub overall: Scores,
}

type PairKey<'a> = (&'a str, usize, &'a str, &'a str, RelationKind);

fn key(r: &RelationRecord) -> PairKey<'_> {
    (
        r.letter_id.as_str(),
        r.sent_idx,
        r.second.lemma.as_str(),
        r.first.lemma.as_str(),
        r.kind,
    )
}

/// Scores the SUBJ/OBJ records of `auto` against the pairs implied by
/// `gold`, matching exactly on letter, sentence, verb, noun and kind.
/// Co-occurrence records are ignored.
pub fn evaluate_pairs(auto: &[RelationRecord], gold: &GoldTriples) -> EvalReport {
    let expected = gold.expected_pairs();
    let mut want: BTreeMap<PairKey<'_>, usize> = BTreeMap::new();
    for r in &expected {
        *want.entry(key(r)).or_default() += 1;
    }
    let mut matched = [0usize; 2];
    let mut predicted = [0usize; 2];
    let slot = |k: RelationKind| usize::from(k == RelationKind::Obj);
    for r in auto.iter().filter(|r| r.kind.is_directed()) {
        predicted[slot(r.kind)] += 1;
        if let Some(n) = want.get_mut(&key(r)) {
            if *n > 0 {
                *n -= 1;
                matched[slot(r.kind)] += 1;
            }
        }
    }
    let mut expected_n = [0usize; 2];
    for r in &expected {
        expected_n[slot(r.kind)] += 1;
    }
    EvalReport {
        subj: Scores::new(matched[0], predicted[0], expected_n[0]),
        obj: Scores::new(matched[1], predicted[1], expected_n[1]),
        overall: Scores::new(
            matched[0] + matched[1],
            predicted[0] + predicted[1],
            expected_n[0] + expected_n[1],
        ),
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |x| format!("{x:.4}"))
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind\tmatched\tpredicted\texpected\tprecision\trecall\tf1")?;
        for (name, s) in [("SUBJ", &self.subj), ("OBJ", &self.obj), ("ALL", &self.overall)] {
            writeln!(
                f,
                "{name}\t{}\t{}\t{}\t{}\t{}\t{}",
                s.matched,
                s.predicted,
                s.expected,
                opt(s.precision),
                opt(s.recall),
                opt(s.f1)
            )?;
        }
        Ok(())
    }
}
