//! Serialisation of graphs to GEXF, DOT, JSON and CSV, and text reports.
//! Everything renders to strings; writing files is left to the caller.

mod csv;
mod dot;
mod gexf;
mod json;
mod stats;
mod style;

use alloc::string::String;

pub use self::csv::{csv_field, to_csv_edges};
pub use dot::to_dot;
pub use gexf::{to_gexf, GEXF_NS, VIZ_NS};
pub use json::{from_json, to_json};
pub use stats::{stats_report, StatsReport, CONTENT_CLASSES};
pub use style::{Rgb, StyleSpec};

pub(crate) fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
