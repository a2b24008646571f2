//! Sidecar metadata: one tab-separated row per letter.
//!
//! Columns, with a header row: `id file sender addressee year
//! year_uncertain language cut`. Empty cells mean "absent". `file` is
//! relative to the manifest. A `.vert` file is read as pre-tagged vertical
//! text instead of being cleaned and annotated. `cut` is a phrase at which
//! analysis of the body stops.

use std::path::{Path, PathBuf};

use letternet_core::corpus::{LetterMeta, MetaFilter};
use log::warn;
use serde::Deserialize;

use crate::io::read_text;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub meta: LetterMeta,
    pub path: PathBuf,
    pub cut: Option<String>,
}

impl ManifestEntry {
    pub fn is_pretagged(&self) -> bool {
        self.path.extension().is_some_and(|e| e == "vert")
    }
}

#[derive(Debug, Deserialize)]
struct Row {
    id: String,
    file: String,
    sender: String,
    addressee: Option<String>,
    year: Option<i32>,
    year_uncertain: Option<bool>,
    language: Option<String>,
    cut: Option<String>,
}

pub fn load_manifest(path: &Path) -> Result<Vec<ManifestEntry>> {
    let text = read_text(path)?;
    let base = path.parent().unwrap_or(Path::new(""));
    let bad = |message: String| Error::Manifest {
        path: path.to_path_buf(),
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .quoting(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut entries = Vec::new();
    for row in reader.deserialize::<Row>() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            bad(format!("line {line}: {e}"))
        })?;
        let meta = LetterMeta {
            id: row.id,
            sender: row.sender,
            addressee: row.addressee.filter(|a| !a.is_empty()),
            year: row.year,
            year_uncertain: row.year_uncertain.unwrap_or(false),
            language: row.language.filter(|l| !l.is_empty()).unwrap_or_else(|| "en".into()),
        };
        meta.validate().map_err(Error::in_file(path))?;
        if entries.iter().any(|e: &ManifestEntry| e.meta.id == meta.id) {
            return Err(bad(format!("duplicate letter id `{}`", meta.id)));
        }
        entries.push(ManifestEntry {
            meta,
            path: base.join(row.file),
            cut: row.cut.filter(|c| !c.is_empty()),
        });
    }
    if entries.is_empty() {
        warn!("{}: manifest lists no letters", path.display());
    }
    Ok(entries)
}

/// Keeps the entries whose metadata satisfies `filter`, in order.
pub fn select(entries: Vec<ManifestEntry>, filter: &MetaFilter) -> Vec<ManifestEntry> {
    entries.into_iter().filter(|e| filter.matches(&e.meta)).collect()
}
