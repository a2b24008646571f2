use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::extraction::RelationKind;
use crate::network::{centrality, summarize, Deviation, LexicalGraph, Measure, Summary};
use crate::{Lexeme, PosClass};

/// Classes that get their own top list.
pub const CONTENT_CLASSES: [PosClass; 3] = [PosClass::Noun, PosClass::Verb, PosClass::Adj];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub node_count: usize,
    pub edge_count: usize,
    pub nodes_by_class: BTreeMap<PosClass, usize>,
    pub edges_by_kind: BTreeMap<RelationKind, usize>,
    /// Population summary of node frequencies; `None` for no nodes.
    pub frequency: Option<Summary>,
    /// Population summary of edge weights; `None` for no edges.
    pub weight: Option<Summary>,
    pub top_nodes: Vec<(Lexeme, u64)>,
    pub top_by_class: BTreeMap<PosClass, Vec<(Lexeme, u64)>>,
    pub top_by_measure: BTreeMap<Measure, Vec<(Lexeme, u64)>>,
}

impl StatsReport {
    /// Lemmas of the top list for `pos`, most frequent first.
    pub fn top_lemmas(&self, pos: PosClass) -> Vec<&str> {
        self.top_by_class
            .get(&pos)
            .map(|l| l.iter().map(|(n, _)| n.lemma.as_str()).collect())
            .unwrap_or_default()
    }
}

fn by_frequency<'a>(nodes: impl Iterator<Item = (&'a Lexeme, &'a u64)>, top_n: usize) -> Vec<(Lexeme, u64)> {
    let mut all: Vec<(Lexeme, u64)> = nodes.map(|(n, &f)| (n.clone(), f)).collect();
    all.sort_by(|(a, fa), (b, fb)| fb.cmp(fa).then_with(|| a.cmp(b)));
    all.truncate(top_n);
    all
}

/// Counts, distributions and top-`top_n` lists for a graph. Ties in every
/// ranking fall back to lemma order.
pub fn stats_report(graph: &LexicalGraph, top_n: usize) -> StatsReport {
    let mut nodes_by_class = BTreeMap::new();
    for n in graph.nodes().keys() {
        *nodes_by_class.entry(n.pos).or_default() += 1;
    }
    let mut edges_by_kind: BTreeMap<RelationKind, usize> = RelationKind::ALL.into_iter().map(|k| (k, 0)).collect();
    for k in graph.edges().keys() {
        *edges_by_kind.entry(k.kind).or_default() += 1;
    }
    let freqs: Vec<u64> = graph.nodes().values().copied().collect();
    let weights: Vec<u64> = graph.edges().values().copied().collect();
    StatsReport {
        node_count: graph.node_count(),
        edge_count: graph.edge_count(),
        nodes_by_class,
        edges_by_kind,
        frequency: summarize(&freqs, Deviation::Population),
        weight: summarize(&weights, Deviation::Population),
        top_nodes: by_frequency(graph.nodes().iter(), top_n),
        top_by_class: CONTENT_CLASSES
            .into_iter()
            .map(|pos| {
                (
                    pos,
                    by_frequency(graph.nodes().iter().filter(|(n, _)| n.pos == pos), top_n),
                )
            })
            .collect(),
        top_by_measure: Measure::ALL
            .into_iter()
            .map(|m| {
                let mut ranked = centrality(graph, m);
                ranked.truncate(top_n);
                (m, ranked)
            })
            .collect(),
    }
}

fn write_summary(f: &mut fmt::Formatter<'_>, name: &str, s: &Option<Summary>) -> fmt::Result {
    match s {
        Some(s) => writeln!(
            f,
            "{name}: min {} max {} mean {:.4} sd {:.4}",
            s.min, s.max, s.mean, s.sd
        ),
        None => writeln!(f, "{name}: none"),
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, title: &str, list: &[(Lexeme, u64)]) -> fmt::Result {
    writeln!(f, "{title}:")?;
    for (i, (n, s)) in list.iter().enumerate() {
        writeln!(f, "  {:>2}. {n}\t{s}", i + 1)?;
    }
    Ok(())
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes: {}", self.node_count)?;
        for (pos, n) in &self.nodes_by_class {
            writeln!(f, "  {pos}\t{n}")?;
        }
        writeln!(f, "edges: {}", self.edge_count)?;
        for (kind, n) in &self.edges_by_kind {
            writeln!(f, "  {kind}\t{n}")?;
        }
        write_summary(f, "node frequency", &self.frequency)?;
        write_summary(f, "edge weight", &self.weight)?;
        write_list(f, "top nodes by frequency", &self.top_nodes)?;
        for (pos, list) in &self.top_by_class {
            write_list(f, &alloc::format!("top {pos} by frequency"), list)?;
        }
        for (m, list) in &self.top_by_measure {
            write_list(f, &alloc::format!("top by {m}"), list)?;
        }
        Ok(())
    }
}
