//! The work behind each subcommand.

use std::io::Write;
use std::path::{Path, PathBuf};

use letternet_core::corpus::CleaningConfig;
use letternet_core::export::{stats_report, to_csv_edges, to_dot, to_gexf, to_json, StatsReport};
use letternet_core::extraction::{
    apply_anaphora, evaluate_pairs, extract_cooccurrences, extract_window_pairs, EvalReport, RelationRecord,
};
use letternet_core::network::{build_graph, merge_graphs, prune, LexicalGraph};
use letternet_core::pipeline::{write_vertical, AnnotatedDoc, Pipeline, SplitConfig, VariantLexicon};
use log::{info, warn};
use rayon::prelude::*;

use crate::config::{Format, Mode, RunConfig};
use crate::io::{
    load_abbreviations, load_anaphora, load_gold, load_letter, load_pretagged, load_variants, write_atomic,
};
use crate::manifest::{load_manifest, select, ManifestEntry};
use crate::{Error, Result};

fn pipeline(cfg: &RunConfig) -> Result<Pipeline> {
    let mut split = SplitConfig::default().with_colon_boundary(cfg.colon_boundary);
    if let Some(p) = &cfg.abbreviations {
        split.abbreviations = load_abbreviations(p)?;
    }
    let variants = match &cfg.variants {
        Some(p) => load_variants(p)?,
        None => VariantLexicon::builtin().clone(),
    };
    Ok(Pipeline {
        split,
        variants,
        ..Pipeline::default()
    })
}

fn annotate_entry(entry: &ManifestEntry, pipeline: &Pipeline, cleaning: &CleaningConfig) -> Result<AnnotatedDoc> {
    if entry.is_pretagged() {
        return load_pretagged(&entry.path, &entry.meta.id);
    }
    let (letter, warnings) = load_letter(&entry.path, entry.meta.clone(), cleaning)?;
    for w in warnings {
        warn!("{}: {w}", entry.path.display());
    }
    let letter = letter.with_cut_marker(entry.cut.clone());
    if entry.cut.is_some() && letter.analysis_text().len() == letter.clean_text.len() {
        warn!("{}: cut marker not found", entry.path.display());
    }
    let (doc, warnings) = pipeline.annotate(&entry.meta.id, letter.analysis_text());
    for w in warnings {
        warn!("{}: {w}", entry.path.display());
    }
    Ok(doc)
}

/// Loads, cleans and annotates the selected letters, one task per letter,
/// and applies the anaphora map when one is configured. Output order
/// follows the manifest.
pub fn annotate_corpus(cfg: &RunConfig) -> Result<Vec<AnnotatedDoc>> {
    cfg.validate()?;
    let manifest = cfg.manifest.as_deref().expect("validated");
    let entries = select(load_manifest(manifest)?, &cfg.filter);
    let pipeline = pipeline(cfg)?;
    let docs: Vec<AnnotatedDoc> = entries
        .par_iter()
        .map(|e| annotate_entry(e, &pipeline, &cfg.cleaning))
        .collect::<Result<_>>()?;
    match &cfg.anaphora {
        Some(path) => {
            let map = load_anaphora(path)?;
            docs.iter()
                .map(|d| apply_anaphora(d, &map).map_err(Error::in_file(path)))
                .collect()
        }
        None => Ok(docs),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CorpusSummary {
    pub letters: usize,
    pub sentences: usize,
    pub tokens: usize,
}

impl CorpusSummary {
    pub fn of(docs: &[AnnotatedDoc]) -> Self {
        CorpusSummary {
            letters: docs.len(),
            sentences: docs.iter().map(|d| d.sentences.len()).sum(),
            tokens: docs.iter().map(AnnotatedDoc::token_count).sum(),
        }
    }
}

/// Writes one vertical file per letter under `<out>/vertical`.
pub fn cmd_preprocess(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<CorpusSummary> {
    let docs = annotate_corpus(cfg)?;
    write_docs(cfg, &docs, stdout)
}

fn write_docs(cfg: &RunConfig, docs: &[AnnotatedDoc], stdout: &mut dyn Write) -> Result<CorpusSummary> {
    if docs.is_empty() {
        warn!("no letters selected; nothing written");
    }
    let dir = cfg.out.join("vertical");
    for doc in docs {
        write_atomic(
            &dir.join(format!("{}.vert", doc.letter_id)),
            write_vertical(doc).as_bytes(),
        )?;
    }
    let s = CorpusSummary::of(docs);
    writeln!(
        stdout,
        "letters {}\tsentences {}\ttokens {}",
        s.letters, s.sentences, s.tokens
    )
    .map_err(|e| Error::io("<stdout>", e))?;
    Ok(s)
}

pub fn extract(cfg: &RunConfig, doc: &AnnotatedDoc) -> Result<Vec<RelationRecord>> {
    Ok(match cfg.mode {
        Mode::Cooccur => extract_cooccurrences(doc, &cfg.cooccur()),
        Mode::Pairs => extract_window_pairs(doc, &cfg.window()?),
    })
}

/// Unpruned graphs, one per letter in manifest order.
pub fn letter_graphs(cfg: &RunConfig, docs: &[AnnotatedDoc]) -> Result<Vec<(String, LexicalGraph)>> {
    docs.par_iter()
        .map(|doc| {
            let records = extract(cfg, doc)?;
            let graph = build_graph(&records, std::slice::from_ref(doc))?;
            Ok((doc.letter_id.clone(), graph))
        })
        .collect()
}

/// One pruned graph with its report, as written by [`cmd_network`].
#[derive(Debug, Clone)]
pub struct NetworkOutput {
    /// `merged` or the letter id.
    pub name: String,
    pub graph: LexicalGraph,
    pub report: StatsReport,
    pub files: Vec<PathBuf>,
}

fn render(graph: &LexicalGraph, format: Format, cfg: &RunConfig) -> Result<String> {
    Ok(match format {
        Format::Gexf => to_gexf(graph, &cfg.style)?,
        Format::Dot => to_dot(graph, &cfg.style)?,
        Format::Json => to_json(graph),
        Format::Csv => to_csv_edges(graph),
    })
}

fn emit(name: &str, dir: &Path, graph: LexicalGraph, cfg: &RunConfig) -> Result<NetworkOutput> {
    let graph = prune(&graph, &cfg.prune_spec())?;
    let report = stats_report(&graph, cfg.top_n);
    let mut files = Vec::new();
    for &format in &cfg.formats {
        let path = dir.join(format!("{name}.{}", format.extension()));
        write_atomic(&path, render(&graph, format, cfg)?.as_bytes())?;
        files.push(path);
    }
    let path = dir.join(format!("{name}.stats.txt"));
    write_atomic(&path, report.to_string().as_bytes())?;
    files.push(path);
    info!("{name}: {} nodes, {} edges", graph.node_count(), graph.edge_count());
    Ok(NetworkOutput {
        name: name.to_string(),
        graph,
        report,
        files,
    })
}

/// Builds, prunes and writes the networks the scope asks for. Merged
/// output goes to `<out>/merged.*`, per-letter output to
/// `<out>/letters/<id>.*`. The merged report (or, without one, each
/// letter's) is printed.
pub fn cmd_network(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<Vec<NetworkOutput>> {
    let docs = annotate_corpus(cfg)?;
    network_from_docs(cfg, &docs, stdout)
}

pub fn network_from_docs(cfg: &RunConfig, docs: &[AnnotatedDoc], stdout: &mut dyn Write) -> Result<Vec<NetworkOutput>> {
    let graphs = letter_graphs(cfg, docs)?;
    let mut outputs = Vec::new();
    if cfg.scope.per_letter() {
        let dir = cfg.out.join("letters");
        for (id, g) in &graphs {
            outputs.push(emit(id, &dir, g.clone(), cfg)?);
        }
    }
    if cfg.scope.merged() {
        let merged = merge_graphs(graphs.iter().map(|(_, g)| g));
        outputs.push(emit("merged", &cfg.out, merged, cfg)?);
    }
    let shown = outputs.iter().filter(|o| o.name == "merged" || !cfg.scope.merged());
    for o in shown {
        writeln!(stdout, "== {}\n{}", o.name, o.report).map_err(|e| Error::io("<stdout>", e))?;
    }
    Ok(outputs)
}

/// Scores automatic pairs on the letters named in the gold file and
/// writes the report to `<out>/eval.tsv`.
pub fn cmd_eval(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<EvalReport> {
    let gold_path = cfg
        .gold
        .as_deref()
        .ok_or_else(|| Error::Config("evaluation needs a gold file (--gold)".into()))?;
    let gold = load_gold(gold_path)?;
    let docs = annotate_corpus(cfg)?;
    let window = cfg.window()?;
    let letters: std::collections::BTreeSet<&str> = gold.triples.iter().map(|t| t.letter_id.as_str()).collect();
    let auto: Vec<RelationRecord> = docs
        .iter()
        .filter(|d| letters.contains(d.letter_id.as_str()))
        .flat_map(|d| extract_window_pairs(d, &window))
        .collect();
    for id in &letters {
        if !docs.iter().any(|d| d.letter_id == *id) {
            warn!("{}: letter {id} is not in the selected corpus", gold_path.display());
        }
    }
    let report = evaluate_pairs(&auto, &gold);
    write_atomic(&cfg.out.join("eval.tsv"), report.to_string().as_bytes())?;
    write!(stdout, "{report}").map_err(|e| Error::io("<stdout>", e))?;
    Ok(report)
}

/// Report for a graph read from JSON, or for the configured merged
/// network when no graph is given. Nothing is written.
pub fn cmd_stats(cfg: &RunConfig, graph: Option<&Path>, stdout: &mut dyn Write) -> Result<StatsReport> {
    let graph = match graph {
        Some(path) => {
            let text = crate::io::read_text(path)?;
            letternet_core::export::from_json(&text).map_err(Error::in_file(path))?
        }
        None => {
            let docs = annotate_corpus(cfg)?;
            let graphs = letter_graphs(cfg, &docs)?;
            prune(&merge_graphs(graphs.iter().map(|(_, g)| g)), &cfg.prune_spec())?
        }
    };
    let report = stats_report(&graph, cfg.top_n);
    write!(stdout, "{report}").map_err(|e| Error::io("<stdout>", e))?;
    Ok(report)
}

/// Preprocessing followed by network construction over the same docs.
pub fn cmd_run(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<Vec<NetworkOutput>> {
    let docs = annotate_corpus(cfg)?;
    write_docs(cfg, &docs, stdout)?;
    network_from_docs(cfg, &docs, stdout)
}
