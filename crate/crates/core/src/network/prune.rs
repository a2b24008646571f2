use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::network::LexicalGraph;
use crate::{Error, Result};

/// How the spread of a distribution is measured.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Deviation {
    /// Divide by N.
    #[default]
    Population,
    /// Divide by N - 1.
    Sample,
}

/// A cutoff rule. Survivors have a value strictly greater than the cutoff.
///
/// Written as `gtN` (threshold N) or `meanK` (mean plus K deviations).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PruneRule {
    Threshold(u64),
    MeanSd(f64),
}

impl PruneRule {
    fn validate(self) -> Result<Self> {
        match self {
            PruneRule::MeanSd(k) if !(k.is_finite() && k >= 0.0) => Err(Error::InvalidParameter(format!(
                "deviation multiplier must be finite and non-negative, got {k}"
            ))),
            rule => Ok(rule),
        }
    }
}

impl fmt::Display for PruneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PruneRule::Threshold(min) => write!(f, "gt{min}"),
            PruneRule::MeanSd(k) => write!(f, "mean{k}"),
        }
    }
}

impl FromStr for PruneRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("prune rule `{s}` is not gtN or meanK"));
        let s = s.trim();
        let rule = if let Some(n) = s.strip_prefix("gt") {
            PruneRule::Threshold(n.parse().map_err(|_| bad())?)
        } else if let Some(k) = s.strip_prefix("mean") {
            PruneRule::MeanSd(k.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        rule.validate()
    }
}

impl TryFrom<String> for PruneRule {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PruneRule> for String {
    fn from(r: PruneRule) -> String {
        r.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PruneSpec {
    pub node_rule: PruneRule,
    pub edge_rule: PruneRule,
    pub deviation: Deviation,
    /// Remove nodes left without edges after edge pruning.
    pub drop_isolated: bool,
}

impl PruneSpec {
    pub fn new(node_rule: PruneRule, edge_rule: PruneRule) -> Self {
        PruneSpec {
            node_rule,
            edge_rule,
            deviation: Deviation::Population,
            drop_isolated: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.node_rule.validate()?;
        self.edge_rule.validate()?;
        Ok(())
    }

    /// Keeps everything.
    pub fn identity() -> Self {
        PruneSpec {
            drop_isolated: false,
            ..PruneSpec::new(PruneRule::Threshold(0), PruneRule::Threshold(0))
        }
    }
}

/// Min, max, mean and deviation of a non-empty integer distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub min: u64,
    pub max: u64,
    pub mean: f64,
    pub sd: f64,
}

pub fn summarize(values: &[u64], deviation: Deviation) -> Option<Summary> {
    let n = values.len();
    let min = *values.iter().min()?;
    let max = *values.iter().max()?;
    let mean = values.iter().map(|&v| v as f64).sum::<f64>() / n as f64;
    let ss: f64 = values.iter().map(|&v| (v as f64 - mean) * (v as f64 - mean)).sum();
    let denom = match deviation {
        Deviation::Population => n as f64,
        Deviation::Sample if n > 1 => (n - 1) as f64,
        Deviation::Sample => 1.0,
    };
    Some(Summary {
        count: n,
        min,
        max,
        mean,
        sd: libm::sqrt(ss / denom),
    })
}

/// The numeric cutoff a rule yields on `values`; `None` when a mean rule
/// meets an empty distribution.
pub fn cutoff(values: &[u64], rule: PruneRule, deviation: Deviation) -> Option<f64> {
    match rule {
        PruneRule::Threshold(min) => Some(min as f64),
        PruneRule::MeanSd(k) => summarize(values, deviation).map(|s| s.mean + k * s.sd),
    }
}

/// Decides `value > cutoff` for one rule over a fixed distribution.
///
/// Mean rules compare in integers where possible: with d = n*x - S and
/// V = n*Q - S^2, the test x > mean + k*sd becomes d > 0 and d^2 > k^2*V
/// (population) or d^2*(n-1) > k^2*V*n (sample).
struct Keep {
    rule: PruneRule,
    deviation: Deviation,
    n: u128,
    sum: u128,
    var_n2: u128,
}

impl Keep {
    fn new(values: impl Iterator<Item = u64> + Clone, rule: PruneRule, deviation: Deviation) -> Keep {
        let (mut n, mut sum, mut sq) = (0u128, 0u128, 0u128);
        for v in values {
            let v = u128::from(v);
            n += 1;
            sum += v;
            sq = sq.saturating_add(v.saturating_mul(v));
        }
        Keep {
            rule,
            deviation,
            n,
            sum,
            var_n2: n.saturating_mul(sq).saturating_sub(sum.saturating_mul(sum)),
        }
    }

    fn keeps(&self, x: u64) -> bool {
        match self.rule {
            PruneRule::Threshold(min) => x > min,
            PruneRule::MeanSd(k) => {
                let nx = self.n * u128::from(x);
                if nx <= self.sum {
                    return false;
                }
                let d = (nx - self.sum) as f64;
                let v = self.var_n2 as f64;
                let k2 = k * k;
                match self.deviation {
                    Deviation::Population => d * d > k2 * v,
                    Deviation::Sample if self.n > 1 => d * d * (self.n - 1) as f64 > k2 * v * self.n as f64,
                    Deviation::Sample => true,
                }
            }
        }
    }
}

/// Removes nodes and edges whose value does not exceed their cutoff, then
/// edges that lost an endpoint, then (optionally) isolated nodes. Cutoffs
/// are computed once from the input graph.
pub fn prune(graph: &LexicalGraph, spec: &PruneSpec) -> Result<LexicalGraph> {
    spec.validate()?;
    let node_keep = Keep::new(graph.nodes().values().copied(), spec.node_rule, spec.deviation);
    let edge_keep = Keep::new(graph.edges().values().copied(), spec.edge_rule, spec.deviation);
    let mut out = graph.clone();
    out.retain(|_, f| node_keep.keeps(f), |_, w| edge_keep.keeps(w));
    if spec.drop_isolated {
        out.drop_isolated();
    }
    Ok(out)
}
