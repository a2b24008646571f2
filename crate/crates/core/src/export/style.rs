use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::extraction::RelationKind;
use crate::{Error, PosClass, Result};

/// A 24-bit colour, written `#RRGGBB`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Rgb {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl Rgb {
    pub const fn new(r: u8, g: u8, b: u8) -> Self {
        Rgb { r, g, b }
    }
}

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{:02X}{:02X}{:02X}", self.r, self.g, self.b)
    }
}

impl FromStr for Rgb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let hex = s
            .strip_prefix('#')
            .filter(|h| h.len() == 6 && h.bytes().all(|b| b.is_ascii_hexdigit()))
            .ok_or_else(|| Error::InvalidParameter(format!("`{s}` is not a #RRGGBB colour")))?;
        let byte = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).unwrap_or(0);
        Ok(Rgb::new(byte(0), byte(2), byte(4)))
    }
}

impl TryFrom<String> for Rgb {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Rgb> for String {
    fn from(c: Rgb) -> String {
        c.to_string()
    }
}

/// Visual conventions shared by the styled exporters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct StyleSpec {
    pub node_colors: BTreeMap<PosClass, Rgb>,
    /// Colour of classes missing from `node_colors`.
    pub fallback_color: Rgb,
    pub edge_colors: BTreeMap<RelationKind, Rgb>,
    pub size_min: f64,
    pub size_max: f64,
}

impl Default for StyleSpec {
    fn default() -> Self {
        StyleSpec {
            node_colors: [
                (PosClass::Verb, Rgb::new(0xFF, 0, 0)),
                (PosClass::Noun, Rgb::new(0, 0, 0xFF)),
                (PosClass::Adj, Rgb::new(0, 0xFF, 0)),
                (PosClass::Other, Rgb::new(0x99, 0x99, 0x99)),
            ]
            .into_iter()
            .collect(),
            fallback_color: Rgb::new(0x99, 0x99, 0x99),
            edge_colors: [
                (RelationKind::Subj, Rgb::new(0xFF, 0, 0)),
                (RelationKind::Obj, Rgb::new(0, 0, 0xFF)),
                (RelationKind::Cooccur, Rgb::new(0x88, 0x88, 0x88)),
            ]
            .into_iter()
            .collect(),
            size_min: 10.0,
            size_max: 60.0,
        }
    }
}

impl StyleSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.size_min.is_finite()
            && self.size_max.is_finite()
            && self.size_min > 0.0
            && self.size_max > self.size_min)
        {
            return Err(Error::InvalidParameter(format!(
                "node sizes need 0 < size_min < size_max, got {} and {}",
                self.size_min, self.size_max
            )));
        }
        Ok(())
    }

    pub fn node_color(&self, pos: PosClass) -> Rgb {
        self.node_colors.get(&pos).copied().unwrap_or(self.fallback_color)
    }

    pub fn edge_color(&self, kind: RelationKind) -> Rgb {
        self.edge_colors.get(&kind).copied().unwrap_or(self.fallback_color)
    }

    /// Linear interpolation of `freq` over `[freq_min, freq_max]`, clamped
    /// to the size range. An empty range maps to `size_min`.
    pub fn node_size(&self, freq: u64, freq_min: u64, freq_max: u64) -> f64 {
        if freq_max <= freq_min {
            return self.size_min;
        }
        let t = (freq.clamp(freq_min, freq_max) - freq_min) as f64 / (freq_max - freq_min) as f64;
        self.size_min + (self.size_max - self.size_min) * t
    }
}
