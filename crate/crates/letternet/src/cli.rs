//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use letternet_core::network::PruneRule;

use crate::commands::{cmd_eval, cmd_network, cmd_preprocess, cmd_run, cmd_stats};
use crate::config::{ContextSetting, Format, Mode, Overrides, RunConfig, Scope, CONFIG_ENV};
use crate::Result;

#[derive(Debug, Parser)]
#[command(name = "letternet", version, about = "Lexical networks from letter collections")]
pub struct Cli {
    /// TOML configuration file.
    #[arg(long, global = true, env = CONFIG_ENV)]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub flags: Flags,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Annotate letters and write vertical files.
    Preprocess,
    /// Build, prune and export networks.
    Network,
    /// Score automatic pairs against a gold file.
    Eval,
    /// Print statistics for a JSON graph or the configured network.
    Stats {
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Preprocess, then build networks.
    Run,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    /// Extra variant lexicon (historical, normalized, class, lemma).
    #[arg(long, global = true)]
    pub variants: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    /// `sentence` or `window:K`.
    #[arg(long, global = true)]
    pub context: Option<ContextSetting>,
    #[arg(long, global = true)]
    pub max_dist: Option<usize>,
    #[arg(long, global = true)]
    pub no_blocker: bool,
    #[arg(long, global = true)]
    pub colon_boundary: bool,
    /// `gtN` or `meanK`.
    #[arg(long, global = true)]
    pub prune_nodes: Option<PruneRule>,
    /// `gtN` or `meanK`.
    #[arg(long, global = true)]
    pub prune_edges: Option<PruneRule>,
    #[arg(long, global = true)]
    pub keep_isolated: bool,
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    pub format: Option<Vec<Format>>,
    #[arg(long, global = true, value_enum)]
    pub scope: Option<Scope>,
    #[arg(long, global = true)]
    pub gold: Option<PathBuf>,
    #[arg(long, global = true)]
    pub anaphora: Option<PathBuf>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl From<Flags> for Overrides {
    fn from(f: Flags) -> Overrides {
        Overrides {
            manifest: f.manifest,
            variants: f.variants,
            mode: f.mode,
            context: f.context,
            max_dist: f.max_dist,
            no_blocker: f.no_blocker,
            colon_boundary: f.colon_boundary,
            prune_nodes: f.prune_nodes,
            prune_edges: f.prune_edges,
            keep_isolated: f.keep_isolated,
            formats: f.format,
            scope: f.scope,
            gold: f.gold,
            anaphora: f.anaphora,
            out: f.out,
        }
    }
}

impl Cli {
    /// The configuration file (if any) with flags applied on top.
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        cfg.apply(&self.flags.clone().into());
        Ok(cfg)
    }
}

/// Runs one parsed invocation, writing reports to `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    let cfg = cli.resolve()?;
    match &cli.command {
        Command::Preprocess => cmd_preprocess(&cfg, stdout).map(drop),
        Command::Network => cmd_network(&cfg, stdout).map(drop),
        Command::Eval => cmd_eval(&cfg, stdout).map(drop),
        Command::Stats { graph } => cmd_stats(&cfg, graph.as_deref(), stdout).map(drop),
        Command::Run => cmd_run(&cfg, stdout).map(drop),
    }
}
