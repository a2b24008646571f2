use alloc::string::{String, ToString};
use core::fmt::Write;

use crate::export::gexf::freq_range;
use crate::export::StyleSpec;
use crate::network::LexicalGraph;
use crate::Result;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Renders a Graphviz digraph. Undirected edges are drawn without arrows;
/// pen width grows linearly with weight from 1 to 5.
pub fn to_dot(graph: &LexicalGraph, style: &StyleSpec) -> Result<String> {
    style.validate()?;
    let (fmin, fmax) = freq_range(graph);
    let weights = graph.edges().values().copied();
    let (wmin, wmax) = (weights.clone().min().unwrap_or(0), weights.max().unwrap_or(0));
    let pen = |w: u64| {
        if wmax > wmin {
            1.0 + 4.0 * (w - wmin) as f64 / (wmax - wmin) as f64
        } else {
            1.0
        }
    };
    let mut out = String::new();
    let _ = (|| -> core::fmt::Result {
        writeln!(out, "digraph letternet {{")?;
        writeln!(out, "  node [shape=circle, style=filled, fixedsize=true];")?;
        for (node, &freq) in graph.nodes() {
            writeln!(
                out,
                "  {} [label={}, fillcolor=\"{}\", width={:.3}, freq={freq}];",
                quote(&node.to_string()),
                quote(&node.lemma),
                style.node_color(node.pos),
                style.node_size(freq, fmin, fmax) / 20.0
            )?;
        }
        for (key, &w) in graph.edges() {
            let dir = if key.is_directed() { "" } else { ", dir=none" };
            writeln!(
                out,
                "  {} -> {} [label=\"{}\", color=\"{}\", weight={w}, penwidth={:.3}{dir}];",
                quote(&key.source.to_string()),
                quote(&key.target.to_string()),
                key.kind,
                style.edge_color(key.kind),
                pen(w)
            )?;
        }
        writeln!(out, "}}")
    })();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extraction::RelationKind;
    use crate::network::EdgeKey;
    use crate::{Lexeme, PosClass};

    #[test]
    fn subj_edge_is_directed() {
        let mut g = LexicalGraph::new();
        g.add_edge(
            EdgeKey::new(
                Lexeme::new("tutor", PosClass::Noun),
                Lexeme::new("use", PosClass::Verb),
                RelationKind::Subj,
            ),
            1,
        );
        let d = to_dot(&g, &StyleSpec::default()).unwrap();
        let edge = d.lines().find(|l| l.contains("->")).unwrap();
        assert!(edge.starts_with("  \"tutor/NOUN\" -> \"use/VERB\""));
        assert!(edge.contains("color=\"#FF0000\""));
        assert!(!edge.contains("dir=none"));
    }

    #[test]
    fn cooccur_edge_has_no_arrow() {
        let mut g = LexicalGraph::new();
        g.add_edge(
            EdgeKey::new(
                Lexeme::new("a", PosClass::Noun),
                Lexeme::new("b", PosClass::Noun),
                RelationKind::Cooccur,
            ),
            2,
        );
        assert!(to_dot(&g, &StyleSpec::default()).unwrap().contains("dir=none"));
        assert_eq!(quote("x\"y"), "\"x\\\"y\"");
    }
}
