//! Run configuration: a TOML file, overridable from the command line.

use std::fmt;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use letternet_core::corpus::{CleaningConfig, MetaFilter};
use letternet_core::export::StyleSpec;
use letternet_core::extraction::{Context, CooccurConfig, WindowConfig};
use letternet_core::network::{Deviation, PruneRule, PruneSpec};
use letternet_core::PosClass;
use serde::{Deserialize, Serialize};

use crate::io::read_text;
use crate::{Error, Result};

/// Environment variable naming the default configuration file.
pub const CONFIG_ENV: &str = "LETTERNET_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Co-occurrence edges.
    #[default]
    Cooccur,
    /// Candidate subject and object edges.
    Pairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    PerLetter,
    #[default]
    Merged,
    Both,
}

impl Scope {
    pub fn per_letter(self) -> bool {
        matches!(self, Scope::PerLetter | Scope::Both)
    }

    pub fn merged(self) -> bool {
        matches!(self, Scope::Merged | Scope::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Gexf,
    Dot,
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Gexf => "gexf",
            Format::Dot => "dot",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Co-occurrence context written `sentence` or `window:K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ContextSetting(pub Context);

impl Default for ContextSetting {
    fn default() -> Self {
        ContextSetting(Context::Sentence)
    }
}

impl FromStr for ContextSetting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("context `{s}` is not `sentence` or `window:K` with K >= 1"));
        match s.trim() {
            "sentence" => Ok(ContextSetting(Context::Sentence)),
            other => {
                let k = other.strip_prefix("window:").ok_or_else(bad)?;
                let k = k.parse::<usize>().ok().and_then(NonZeroUsize::new).ok_or_else(bad)?;
                Ok(ContextSetting(Context::Window(k)))
            }
        }
    }
}

impl fmt::Display for ContextSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Context::Sentence => f.write_str("sentence"),
            Context::Window(k) => write!(f, "window:{k}"),
        }
    }
}

impl TryFrom<String> for ContextSetting {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ContextSetting> for String {
    fn from(c: ContextSetting) -> String {
        c.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub manifest: Option<PathBuf>,
    /// Extra variant spellings layered over the built-in lexicon.
    pub variants: Option<PathBuf>,
    /// Replaces the built-in abbreviation list.
    pub abbreviations: Option<PathBuf>,
    pub colon_boundary: bool,
    pub mode: Mode,
    pub context: ContextSetting,
    pub pos_filter: Vec<PosClass>,
    pub max_dist: usize,
    pub blocker: bool,
    pub count_punctuation: bool,
    pub prune_nodes: PruneRule,
    pub prune_edges: PruneRule,
    pub deviation: Deviation,
    pub keep_isolated: bool,
    pub formats: Vec<Format>,
    pub scope: Scope,
    pub gold: Option<PathBuf>,
    pub anaphora: Option<PathBuf>,
    pub out: PathBuf,
    pub top_n: usize,
    pub filter: MetaFilter,
    pub cleaning: CleaningConfig,
    pub style: StyleSpec,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            manifest: None,
            variants: None,
            abbreviations: None,
            colon_boundary: false,
            mode: Mode::Cooccur,
            context: ContextSetting::default(),
            pos_filter: CooccurConfig::default().pos_filter.into_iter().collect(),
            max_dist: 4,
            blocker: true,
            count_punctuation: true,
            prune_nodes: PruneRule::Threshold(0),
            prune_edges: PruneRule::Threshold(0),
            deviation: Deviation::Population,
            keep_isolated: false,
            formats: vec![Format::Gexf],
            scope: Scope::Merged,
            gold: None,
            anaphora: None,
            out: PathBuf::from("out"),
            top_n: 10,
            filter: MetaFilter::default(),
            cleaning: CleaningConfig::default(),
            style: StyleSpec::default(),
        }
    }
}

/// Values given on the command line; each set field replaces the file's.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub manifest: Option<PathBuf>,
    pub variants: Option<PathBuf>,
    pub mode: Option<Mode>,
    pub context: Option<ContextSetting>,
    pub max_dist: Option<usize>,
    pub no_blocker: bool,
    pub colon_boundary: bool,
    pub prune_nodes: Option<PruneRule>,
    pub prune_edges: Option<PruneRule>,
    pub keep_isolated: bool,
    pub formats: Option<Vec<Format>>,
    pub scope: Option<Scope>,
    pub gold: Option<PathBuf>,
    pub anaphora: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Parses TOML. Relative paths inside are taken relative to `base`.
    pub fn from_toml(text: &str, base: &Path) -> Result<RunConfig> {
        let mut cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        for p in [
            &mut cfg.manifest,
            &mut cfg.variants,
            &mut cfg.abbreviations,
            &mut cfg.gold,
            &mut cfg.anaphora,
        ]
        .into_iter()
        .flatten()
        {
            *p = base.join(&*p);
        }
        cfg.out = base.join(&cfg.out);
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = read_text(path)?;
        RunConfig::from_toml(&text, path.parent().unwrap_or(Path::new("")))
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn apply(&mut self, o: &Overrides) {
        fn set<T: Clone>(dst: &mut T, src: &Option<T>) {
            if let Some(v) = src {
                *dst = v.clone();
            }
        }
        let wrap = |p: &Option<PathBuf>| p.clone().map(Some);
        set(&mut self.manifest, &wrap(&o.manifest));
        set(&mut self.variants, &wrap(&o.variants));
        set(&mut self.gold, &wrap(&o.gold));
        set(&mut self.anaphora, &wrap(&o.anaphora));
        set(&mut self.mode, &o.mode);
        set(&mut self.context, &o.context);
        set(&mut self.max_dist, &o.max_dist);
        set(&mut self.prune_nodes, &o.prune_nodes);
        set(&mut self.prune_edges, &o.prune_edges);
        set(&mut self.formats, &o.formats);
        set(&mut self.scope, &o.scope);
        set(&mut self.out, &o.out);
        self.blocker &= !o.no_blocker;
        self.colon_boundary |= o.colon_boundary;
        self.keep_isolated |= o.keep_isolated;
    }

    /// Checks that referenced files exist and parameters are in range.
    pub fn validate(&self) -> Result<()> {
        let manifest = self
            .manifest
            .as_ref()
            .ok_or_else(|| Error::Config("no manifest given".into()))?;
        for (what, p) in [
            ("manifest", Some(manifest)),
            ("variant lexicon", self.variants.as_ref()),
            ("abbreviation list", self.abbreviations.as_ref()),
            ("gold file", self.gold.as_ref()),
            ("anaphora map", self.anaphora.as_ref()),
        ] {
            if let Some(p) = p {
                if !p.is_file() {
                    return Err(Error::Config(format!("{what} {} does not exist", p.display())));
                }
            }
        }
        self.window()?;
        self.style.validate()?;
        self.prune_spec().validate()?;
        if self.formats.is_empty() {
            return Err(Error::Config("no output format selected".into()));
        }
        Ok(())
    }

    pub fn window(&self) -> Result<WindowConfig> {
        let cfg = WindowConfig {
            verb_blocker: self.blocker,
            count_punctuation: self.count_punctuation,
            ..WindowConfig::default()
        };
        Ok(cfg.with_max_dist(self.max_dist)?)
    }

    pub fn cooccur(&self) -> CooccurConfig {
        CooccurConfig {
            context: self.context.0,
            pos_filter: self.pos_filter.iter().copied().collect(),
            count_punctuation: self.count_punctuation,
        }
    }

    pub fn prune_spec(&self) -> PruneSpec {
        PruneSpec {
            node_rule: self.prune_nodes,
            edge_rule: self.prune_edges,
            deviation: self.deviation,
            drop_isolated: !self.keep_isolated,
        }
    }
}
