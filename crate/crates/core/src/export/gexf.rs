use alloc::string::{String, ToString};
use core::fmt::Write;

use crate::export::{escape_xml, StyleSpec};
use crate::network::LexicalGraph;
use crate::Result;

pub const GEXF_NS: &str = "http://www.gexf.net/1.2draft";
pub const VIZ_NS: &str = "http://www.gexf.net/1.2draft/viz";

/// Renders a GEXF 1.2 document. Nodes are identified as `lemma/POS` and
/// carry class and frequency attributes; edges carry their kind as label.
/// Output contains no timestamp so identical input gives identical bytes.
pub fn to_gexf(graph: &LexicalGraph, style: &StyleSpec) -> Result<String> {
    style.validate()?;
    let mut out = String::new();
    let (fmin, fmax) = freq_range(graph);
    // Writing to a String cannot fail.
    let _ = write_doc(&mut out, graph, style, fmin, fmax);
    Ok(out)
}

pub(crate) fn freq_range(graph: &LexicalGraph) -> (u64, u64) {
    let freqs = graph.nodes().values().copied();
    (freqs.clone().min().unwrap_or(0), freqs.max().unwrap_or(0))
}

fn write_doc(out: &mut String, graph: &LexicalGraph, style: &StyleSpec, fmin: u64, fmax: u64) -> core::fmt::Result {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<gexf xmlns="{GEXF_NS}" xmlns:viz="{VIZ_NS}" xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance" xsi:schemaLocation="{GEXF_NS} {GEXF_NS}/gexf.xsd" version="1.2">"#
    )?;
    writeln!(out, "  <meta>\n    <creator>letternet</creator>\n  </meta>")?;
    writeln!(out, r#"  <graph mode="static" defaultedgetype="directed">"#)?;
    writeln!(out, r#"    <attributes class="node" mode="static">"#)?;
    writeln!(out, r#"      <attribute id="pos" title="pos" type="string"/>"#)?;
    writeln!(
        out,
        r#"      <attribute id="frequency" title="frequency" type="integer"/>"#
    )?;
    writeln!(out, "    </attributes>")?;
    writeln!(out, "    <nodes>")?;
    for (node, &freq) in graph.nodes() {
        let c = style.node_color(node.pos);
        writeln!(
            out,
            r#"      <node id="{}" label="{}">"#,
            escape_xml(&node.to_string()),
            escape_xml(&node.lemma)
        )?;
        writeln!(out, "        <attvalues>")?;
        writeln!(out, r#"          <attvalue for="pos" value="{}"/>"#, node.pos)?;
        writeln!(out, r#"          <attvalue for="frequency" value="{freq}"/>"#)?;
        writeln!(out, "        </attvalues>")?;
        writeln!(out, r#"        <viz:color r="{}" g="{}" b="{}"/>"#, c.r, c.g, c.b)?;
        writeln!(
            out,
            r#"        <viz:size value="{:.4}"/>"#,
            style.node_size(freq, fmin, fmax)
        )?;
        writeln!(out, "      </node>")?;
    }
    writeln!(out, "    </nodes>")?;
    writeln!(out, "    <edges>")?;
    for (i, (key, &weight)) in graph.edges().iter().enumerate() {
        let c = style.edge_color(key.kind);
        let kind = if key.is_directed() { "directed" } else { "undirected" };
        writeln!(
            out,
            r#"      <edge id="{i}" source="{}" target="{}" type="{kind}" weight="{weight}" label="{}">"#,
            escape_xml(&key.source.to_string()),
            escape_xml(&key.target.to_string()),
            key.kind
        )?;
        writeln!(out, r#"        <viz:color r="{}" g="{}" b="{}"/>"#, c.r, c.g, c.b)?;
        writeln!(out, "      </edge>")?;
    }
    writeln!(out, "    </edges>")?;
    writeln!(out, "  </graph>")?;
    writeln!(out, "</gexf>")
}
