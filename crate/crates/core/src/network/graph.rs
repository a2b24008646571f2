use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;

use serde::{Deserialize, Serialize};

use crate::extraction::{RelationKind, RelationRecord};
use crate::pipeline::AnnotatedDoc;
use crate::{Error, Lexeme, Result};

/// Identity of an edge. COOCCUR keys keep `source <= target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeKey {
    pub source: Lexeme,
    pub target: Lexeme,
    pub kind: RelationKind,
}

impl EdgeKey {
    /// Builds a key, swapping the endpoints of an undirected edge into
    /// canonical order.
    pub fn new(source: Lexeme, target: Lexeme, kind: RelationKind) -> Self {
        let (source, target) = if !kind.is_directed() && target < source {
            (target, source)
        } else {
            (source, target)
        };
        EdgeKey { source, target, kind }
    }

    pub fn is_directed(&self) -> bool {
        self.kind.is_directed()
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Weighted typed graph over lexemes.
///
/// Node values are corpus frequencies, edge values are the number of
/// supporting relation records. Both are always at least 1 and every edge
/// endpoint is a node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LexicalGraph {
    nodes: BTreeMap<Lexeme, u64>,
    edges: BTreeMap<EdgeKey, u64>,
}

impl LexicalGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assembles a graph from explicit maps, checking the invariants.
    pub fn from_parts(nodes: BTreeMap<Lexeme, u64>, edges: BTreeMap<EdgeKey, u64>) -> Result<Self> {
        if let Some((n, _)) = nodes.iter().find(|(_, &f)| f == 0) {
            return Err(Error::GraphDocument(format!("node {n} has frequency 0")));
        }
        for (k, &w) in &edges {
            if w == 0 {
                return Err(Error::GraphDocument(format!(
                    "edge {} -> {} ({}) has weight 0",
                    k.source, k.target, k.kind
                )));
            }
            for end in [&k.source, &k.target] {
                if !nodes.contains_key(end) {
                    return Err(Error::GraphDocument(format!("edge endpoint {end} is not a node")));
                }
            }
            if !k.kind.is_directed() && k.target < k.source {
                return Err(Error::GraphDocument(format!(
                    "undirected edge {} -- {} is not in canonical order",
                    k.source, k.target
                )));
            }
        }
        Ok(LexicalGraph { nodes, edges })
    }

    pub fn nodes(&self) -> &BTreeMap<Lexeme, u64> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeMap<EdgeKey, u64> {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn frequency(&self, node: &Lexeme) -> Option<u64> {
        self.nodes.get(node).copied()
    }

    pub fn weight(&self, key: &EdgeKey) -> Option<u64> {
        self.edges.get(key).copied()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().sum()
    }

    /// Adds `freq` to a node, creating it if needed. Zero is ignored.
    pub fn add_node(&mut self, node: Lexeme, freq: u64) {
        if freq > 0 {
            *self.nodes.entry(node).or_default() += freq;
        }
    }

    /// Adds `weight` to an edge. Missing endpoints are created with
    /// frequency 1 so the graph stays valid.
    pub fn add_edge(&mut self, key: EdgeKey, weight: u64) {
        if weight == 0 {
            return;
        }
        for end in [&key.source, &key.target] {
            if !self.nodes.contains_key(end) {
                self.nodes.insert(end.clone(), 1);
            }
        }
        *self.edges.entry(key).or_default() += weight;
    }

    /// Whether `self` is contained in `other` with identical values.
    pub fn is_subgraph_of(&self, other: &LexicalGraph) -> bool {
        self.nodes.iter().all(|(n, f)| other.nodes.get(n) == Some(f))
            && self.edges.iter().all(|(k, w)| other.edges.get(k) == Some(w))
    }

    pub(crate) fn retain(
        &mut self,
        mut keep_node: impl FnMut(&Lexeme, u64) -> bool,
        mut keep_edge: impl FnMut(&EdgeKey, u64) -> bool,
    ) {
        self.nodes.retain(|n, f| keep_node(n, *f));
        let nodes = &self.nodes;
        self.edges
            .retain(|k, w| keep_edge(k, *w) && nodes.contains_key(&k.source) && nodes.contains_key(&k.target));
    }

    pub(crate) fn drop_isolated(&mut self) {
        let touched: BTreeSet<&Lexeme> = self.edges.keys().flat_map(|k| [&k.source, &k.target]).collect();
        let keep: BTreeMap<Lexeme, u64> = self
            .nodes
            .iter()
            .filter(|(n, _)| touched.contains(n))
            .map(|(n, &f)| (n.clone(), f))
            .collect();
        self.nodes = keep;
    }
}

/// Aggregates records into a graph. Node frequency is the number of tokens
/// in `freq_source` carrying that lemma and class; edge weight is the
/// number of records with the same endpoints and kind.
pub fn build_graph(records: &[RelationRecord], freq_source: &[AnnotatedDoc]) -> Result<LexicalGraph> {
    let mut counts: BTreeMap<Lexeme, u64> = BTreeMap::new();
    for token in freq_source.iter().flat_map(AnnotatedDoc::tokens) {
        *counts.entry(token.lexeme()).or_default() += 1;
    }
    let mut graph = LexicalGraph::new();
    for r in records {
        for lex in [&r.first, &r.second] {
            if !graph.nodes.contains_key(lex) {
                let freq = counts.get(lex).copied().ok_or_else(|| Error::MissingLemma {
                    lemma: lex.lemma.clone(),
                    pos: lex.pos,
                })?;
                graph.nodes.insert(lex.clone(), freq);
            }
        }
        let (src, dst) = r.endpoints();
        *graph
            .edges
            .entry(EdgeKey::new(src.clone(), dst.clone(), r.kind))
            .or_default() += 1;
    }
    Ok(graph)
}

/// Sums node frequencies and edge weights key by key.
pub fn merge_graphs<'a>(graphs: impl IntoIterator<Item = &'a LexicalGraph>) -> LexicalGraph {
    let mut out = LexicalGraph::new();
    for g in graphs {
        for (n, &f) in &g.nodes {
            out.add_node(n.clone(), f);
        }
        for (k, &w) in &g.edges {
            *out.edges.entry(k.clone()).or_default() += w;
        }
    }
    out
}
