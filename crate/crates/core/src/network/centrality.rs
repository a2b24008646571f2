use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::network::LexicalGraph;
use crate::{Error, Lexeme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Measure {
    /// Number of incident edges of any kind.
    Degree,
    /// Number of incoming directed edges.
    InDegree,
    /// Number of outgoing directed edges.
    OutDegree,
    /// Sum of incident edge weights.
    WeightedDegree,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Degree,
        Measure::InDegree,
        Measure::OutDegree,
        Measure::WeightedDegree,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            Measure::Degree => "DEGREE",
            Measure::InDegree => "IN_DEGREE",
            Measure::OutDegree => "OUT_DEGREE",
            Measure::WeightedDegree => "WEIGHTED_DEGREE",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Measure::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown centrality measure `{s}`")))
    }
}

/// Scores every node and ranks them by descending score, then lemma, then
/// class. A self-loop is incident twice.
pub fn centrality(graph: &LexicalGraph, measure: Measure) -> Vec<(Lexeme, u64)> {
    let mut scores: BTreeMap<&Lexeme, u64> = graph.nodes().keys().map(|n| (n, 0)).collect();
    let mut bump = |n: &Lexeme, by: u64| {
        if let Some(s) = scores.get_mut(n) {
            *s += by;
        }
    };
    for (k, &w) in graph.edges() {
        match measure {
            Measure::Degree => {
                bump(&k.source, 1);
                bump(&k.target, 1);
            }
            Measure::WeightedDegree => {
                bump(&k.source, w);
                bump(&k.target, w);
            }
            Measure::InDegree if k.is_directed() => bump(&k.target, 1),
            Measure::OutDegree if k.is_directed() => bump(&k.source, 1),
            Measure::InDegree | Measure::OutDegree => {}
        }
    }
    let mut ranked: Vec<(Lexeme, u64)> = scores.into_iter().map(|(n, s)| (n.clone(), s)).collect();
    ranked.sort_by(|(a, sa), (b, sb)| sb.cmp(sa).then_with(|| a.cmp(b)));
    ranked
}
