//! Relation extraction: co-occurrences, window-based verb/noun pairs,
//! manual anaphora resolution and gold-standard evaluation.

mod anaphora;
mod cooccur;
mod gold;
mod record;
mod window;

pub use anaphora::{apply_anaphora, AnaphoraMap, TokenRef};
pub use cooccur::{extract_cooccurrences, Context, CooccurConfig};
pub use gold::{evaluate_pairs, EvalReport, GoldTriple, GoldTriples, Scores};
pub use record::{RelationKind, RelationRecord};
pub use window::{extract_window_pairs, WindowConfig, AUXILIARY_LEMMAS};
