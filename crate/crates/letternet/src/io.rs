//! Reading inputs and writing outputs on disk.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use letternet_core::corpus::{CleanWarning, CleaningConfig, Letter, LetterMeta};
use letternet_core::extraction::{AnaphoraMap, GoldTriples};
use letternet_core::pipeline::{parse_abbreviations, parse_vertical, AnnotatedDoc, VariantLexicon};
use log::warn;

use crate::{Error, Result};

/// Reads a UTF-8 file, reporting the byte offset of the first bad sequence.
pub fn read_text(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    String::from_utf8(bytes).map_err(|e| Error::Decode {
        path: path.to_path_buf(),
        offset: e.utf8_error().valid_up_to(),
    })
}

pub fn load_letter(path: &Path, meta: LetterMeta, cfg: &CleaningConfig) -> Result<(Letter, Vec<CleanWarning>)> {
    let raw = read_text(path)?;
    if raw.trim().is_empty() {
        warn!("{}: letter {} is empty", path.display(), meta.id);
    }
    Letter::new(meta, raw, cfg).map_err(Error::in_file(path))
}

/// Reads a pre-tagged vertical file; unknown class labels are logged.
pub fn load_pretagged(path: &Path, letter_id: &str) -> Result<AnnotatedDoc> {
    let (doc, warnings) = parse_vertical(letter_id, &read_text(path)?).map_err(Error::in_file(path))?;
    for w in warnings {
        warn!("{}: {w}", path.display());
    }
    Ok(doc)
}

/// The built-in variant lexicon with the entries of `path` layered on top.
pub fn load_variants(path: &Path) -> Result<VariantLexicon> {
    let extra = VariantLexicon::parse(&read_text(path)?).map_err(Error::in_file(path))?;
    let mut lex = VariantLexicon::builtin().clone();
    lex.extend(extra);
    Ok(lex)
}

pub fn load_abbreviations(path: &Path) -> Result<BTreeSet<String>> {
    Ok(parse_abbreviations(&read_text(path)?))
}

pub fn load_gold(path: &Path) -> Result<GoldTriples> {
    let gold = GoldTriples::parse(&read_text(path)?).map_err(Error::in_file(path))?;
    if gold.is_empty() {
        return Err(Error::EmptyGold(path.to_path_buf()));
    }
    Ok(gold)
}

pub fn load_anaphora(path: &Path) -> Result<AnaphoraMap> {
    AnaphoraMap::parse(&read_text(path)?).map_err(Error::in_file(path))
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(contents).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
