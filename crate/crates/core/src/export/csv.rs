use alloc::string::{String, ToString};
use core::fmt::Write;

use crate::network::LexicalGraph;

/// Quotes a field when it holds a comma, quote or line break.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        let mut out = String::from("\"");
        out.push_str(&s.replace('"', "\"\""));
        out.push('"');
        out
    } else {
        s.to_string()
    }
}

/// Edge list with header `src,src_pos,dst,dst_pos,kind,weight`.
pub fn to_csv_edges(graph: &LexicalGraph) -> String {
    let mut out = String::from("src,src_pos,dst,dst_pos,kind,weight\n");
    for (k, w) in graph.edges() {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{w}",
            csv_field(&k.source.lemma),
            k.source.pos,
            csv_field(&k.target.lemma),
            k.target.pos,
            k.kind
        );
    }
    out
}
