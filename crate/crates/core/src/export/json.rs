use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::extraction::RelationKind;
use crate::network::{EdgeKey, LexicalGraph};
use crate::{Error, Lexeme, PosClass, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct NodeDoc {
    lemma: String,
    pos: PosClass,
    frequency: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct EdgeDoc {
    source: Lexeme,
    target: Lexeme,
    kind: RelationKind,
    directed: bool,
    weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct GraphDoc {
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
}

/// Pretty-printed JSON with `nodes` and `edges` arrays in key order.
pub fn to_json(graph: &LexicalGraph) -> String {
    let doc = GraphDoc {
        nodes: graph
            .nodes()
            .iter()
            .map(|(n, &frequency)| NodeDoc {
                lemma: n.lemma.clone(),
                pos: n.pos,
                frequency,
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|(k, &weight)| EdgeDoc {
                source: k.source.clone(),
                target: k.target.clone(),
                kind: k.kind,
                directed: k.is_directed(),
                weight,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).unwrap_or_default();
    s.push('\n');
    s
}

/// Reads a document produced by [`to_json`], rejecting duplicates and
/// anything that would break the graph invariants.
pub fn from_json(text: &str) -> Result<LexicalGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::GraphDocument(format!("{e}")))?;
    let mut nodes = BTreeMap::new();
    for n in doc.nodes {
        let lex = Lexeme::new(n.lemma, n.pos);
        if nodes.contains_key(&lex) {
            return Err(Error::GraphDocument(format!("duplicate node {lex}")));
        }
        nodes.insert(lex, n.frequency);
    }
    let mut edges = BTreeMap::new();
    for e in doc.edges {
        if e.directed != e.kind.is_directed() {
            return Err(Error::GraphDocument(format!(
                "edge kind {} has wrong directed flag",
                e.kind
            )));
        }
        let key = EdgeKey {
            source: e.source,
            target: e.target,
            kind: e.kind,
        };
        if edges.contains_key(&key) {
            return Err(Error::GraphDocument(format!(
                "duplicate edge {} -> {} ({})",
                key.source, key.target, key.kind
            )));
        }
        edges.insert(key, e.weight);
    }
    LexicalGraph::from_parts(nodes, edges)
}
