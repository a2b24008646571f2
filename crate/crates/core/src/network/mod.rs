//! Weighted typed lexical graphs: construction, merging, pruning and
//! degree centrality.

mod centrality;
mod graph;
mod prune;

pub use centrality::{centrality, Measure};
pub use graph::{build_graph, merge_graphs, EdgeKey, LexicalGraph};
pub use prune::{cutoff, prune, summarize, Deviation, PruneRule, PruneSpec, Summary};
