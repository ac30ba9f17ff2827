//! Sweep configuration: flat `key = value` files and the equivalent flags.

use std::fmt;
use std::str::FromStr;

use recdet::exact::{parse_rational, Rational};
use recdet::identities::{EngineChoice, ProfileStrategy};
use recdet::matrix::IndexProfile;
use recdet::sequences::NamedFamily;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown config key {0:?}")]
    UnknownKey(String),
    #[error("bad value for {key}: {reason}")]
    BadValue { key: String, reason: String },
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("{0} must not be empty")]
    Empty(&'static str),
}

fn bad(key: &str, reason: impl ToString) -> ConfigError {
    ConfigError::BadValue {
        key: key.to_string(),
        reason: reason.to_string(),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected text or json)")),
        }
    }
}

/// What a sweep runs. `cor` runs the corollary stated for each family that
/// has one; `lemmas` runs the random lemma instances once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Catalan,
    Power,
    Product,
    Reciprocal,
    Rising,
    Corollaries,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Catalan,
        Suite::Power,
        Suite::Product,
        Suite::Reciprocal,
        Suite::Rising,
        Suite::Corollaries,
        Suite::Lemmas,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Catalan => "1",
            Suite::Power => "2",
            Suite::Product => "3",
            Suite::Reciprocal => "3.5",
            Suite::Rising => "4",
            Suite::Corollaries => "cor",
            Suite::Lemmas => "lemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| format!("unknown theorem tag {s:?} (expected 1, 2, 3, 3.5, 4, cor, lemmas or all)"))
    }
}

/// Comma-separated items, each an integer or an inclusive range `a..b`.
pub fn parse_range(input: &str) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for item in input.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        // the separator search skips a leading sign
        match item.get(1..).and_then(|rest| rest.find("..")).map(|at| at + 1) {
            Some(at) => {
                let lo: i64 = item[..at].trim().parse().map_err(|_| format!("bad range start in {item:?}"))?;
                let hi: i64 = item[at + 2..].trim().parse().map_err(|_| format!("bad range end in {item:?}"))?;
                if lo > hi {
                    return Err(format!("empty range {item:?}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(item.parse().map_err(|_| format!("bad integer {item:?}"))?),
        }
    }
    if out.is_empty() {
        return Err("no values".into());
    }
    Ok(out)
}

fn parse_sizes(key: &str, input: &str) -> Result<Vec<usize>, ConfigError> {
    parse_range(input)
        .map_err(|e| bad(key, e))?
        .into_iter()
        .map(|v| usize::try_from(v).ok().filter(|&v| v >= 1).ok_or_else(|| bad(key, format!("{v} is not a positive size"))))
        .collect()
}

fn split_list(input: &str) -> impl Iterator<Item = &str> {
    input.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<NamedFamily>,
    /// Random specs drawn from the seed and appended to `families`.
    pub random_families: usize,
    pub suites: Vec<Suite>,
    pub s: Vec<i64>,
    pub k: Vec<i64>,
    pub n: Vec<i64>,
    pub m: Vec<usize>,
    pub d: Option<Vec<usize>>,
    pub profiles: ProfileStrategy,
    /// Evaluation points; empty means symbolic comparison.
    pub x: Vec<Rational>,
    pub engine: EngineChoice,
    pub lemma_count: usize,
    pub seed: u64,
    pub format: Format,
    pub corrupt_rhs: bool,
    // fixed-profile entries, kept until both halves are known
    d_seq: Option<Vec<i64>>,
    e_seq: Option<Vec<i64>>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: vec![NamedFamily::Fibonacci, NamedFamily::Lucas, NamedFamily::ChebyshevT, NamedFamily::ChebyshevS],
            random_families: 0,
            suites: vec![Suite::Catalan, Suite::Power, Suite::Product, Suite::Reciprocal, Suite::Rising, Suite::Corollaries],
            s: (-2..=2).collect(),
            k: (-2..=2).collect(),
            n: (-2..=2).collect(),
            m: vec![1, 2, 3],
            d: None,
            profiles: ProfileStrategy::Fixed(None),
            x: Vec::new(),
            engine: EngineChoice::One(recdet::det::Engine::Bareiss),
            lemma_count: 20,
            seed: 0,
            format: Format::Text,
            corrupt_rhs: false,
            d_seq: None,
            e_seq: None,
        }
    }
}

/// Every key accepted by [`SweepConfig::apply`], in canonical spelling.
pub const KEYS: [&str; 16] = [
    "families",
    "random-families",
    "theorems",
    "s",
    "k",
    "n",
    "m",
    "d",
    "profiles",
    "d-seq",
    "e-seq",
    "x",
    "engine",
    "lemma-count",
    "seed",
    "format",
];

impl SweepConfig {
    /// Sets one field from its text form. Keys accept `_` for `-`.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        let k = key.as_str();
        match k {
            "families" => {
                // literals carry their own commas, so families split on whitespace
                self.families = value
                    .split_whitespace()
                    .map(|f| f.trim_end_matches(',').parse::<NamedFamily>().map_err(|e| bad(k, e)))
                    .collect::<Result<_, _>>()?;
            }
            "random-families" => self.random_families = value.parse().map_err(|e| bad(k, e))?,
            "theorems" => {
                let mut suites = Vec::new();
                for tag in split_list(value) {
                    if tag == "all" {
                        suites = Suite::ALL.to_vec();
                        continue;
                    }
                    let suite: Suite = tag.parse().map_err(|e: String| bad(k, e))?;
                    if !suites.contains(&suite) {
                        suites.push(suite);
                    }
                }
                self.suites = suites;
            }
            "s" => self.s = parse_range(value).map_err(|e| bad(k, e))?,
            "k" => self.k = parse_range(value).map_err(|e| bad(k, e))?,
            "n" => self.n = parse_range(value).map_err(|e| bad(k, e))?,
            "m" => self.m = parse_sizes(k, value)?,
            "d" => self.d = Some(parse_sizes(k, value)?),
            "profiles" => self.profiles = parse_profiles(value).map_err(|e| bad(k, e))?,
            "d-seq" => self.d_seq = Some(parse_list(k, value)?),
            "e-seq" => self.e_seq = Some(parse_list(k, value)?),
            "x" => {
                self.x = split_list(value).map(|v| parse_rational(v).map_err(|e| bad(k, e))).collect::<Result<_, _>>()?;
            }
            "engine" => self.engine = value.parse().map_err(|e: String| bad(k, e))?,
            "lemma-count" => self.lemma_count = value.parse().map_err(|e| bad(k, e))?,
            "seed" => self.seed = value.parse().map_err(|e| bad(k, e))?,
            "format" => self.format = value.parse().map_err(|e: String| bad(k, e))?,
            _ => return Err(ConfigError::UnknownKey(key)),
        }
        Ok(())
    }

    /// Reads `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_file(&mut self, text: &str) -> Result<(), ConfigError> {
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax { line: idx + 1 })?;
            self.apply(key, value)?;
        }
        Ok(())
    }

    /// Checks cross-field constraints and folds `d-seq`/`e-seq` into the
    /// profile strategy.
    pub fn finish(mut self) -> Result<Self, ConfigError> {
        if self.families.is_empty() && self.random_families == 0 {
            return Err(ConfigError::Empty("families"));
        }
        if self.suites.is_empty() {
            return Err(ConfigError::Empty("theorems"));
        }
        match (self.d_seq.take(), self.e_seq.take()) {
            (None, None) => {}
            (Some(d), Some(e)) => {
                if matches!(self.profiles, ProfileStrategy::Random { .. }) {
                    return Err(bad("profiles", "d-seq/e-seq need profiles = fixed"));
                }
                let profile = IndexProfile::new(d, e).map_err(|e| bad("d-seq", e))?;
                self.profiles = ProfileStrategy::Fixed(Some(profile));
            }
            _ => return Err(bad("d-seq", "d-seq and e-seq must be given together")),
        }
        Ok(self)
    }

    /// The configuration as recorded in a report header.
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            families: self.families.iter().map(NamedFamily::label).collect(),
            random_families: self.random_families,
            theorems: self.suites.iter().map(|s| s.tag().to_string()).collect(),
            s: self.s.clone(),
            k: self.k.clone(),
            n: self.n.clone(),
            m: self.m.clone(),
            d: self.d.clone(),
            profiles: match &self.profiles {
                ProfileStrategy::Fixed(None) => "fixed".into(),
                ProfileStrategy::Fixed(Some(p)) => format!("fixed:{:?}:{:?}", p.d_seq(), p.e_seq()),
                ProfileStrategy::Random { count, bound } => format!("random:{count}:{bound}"),
            },
            x: self.x.iter().map(ToString::to_string).collect(),
            engine: self.engine.to_string(),
            lemma_count: self.lemma_count,
        }
    }
}

fn parse_list(key: &str, value: &str) -> Result<Vec<i64>, ConfigError> {
    split_list(value).map(|v| v.parse().map_err(|_| bad(key, format!("bad integer {v:?}")))).collect()
}

/// `fixed` or `random:COUNT:BOUND`.
fn parse_profiles(value: &str) -> Result<ProfileStrategy, String> {
    if value == "fixed" {
        return Ok(ProfileStrategy::Fixed(None));
    }
    let parts: Vec<&str> = value.split(':').collect();
    match parts.as_slice() {
        ["random", count, bound] => {
            let count = count.parse().map_err(|_| format!("bad count {count:?}"))?;
            let bound: i64 = bound.parse().map_err(|_| format!("bad bound {bound:?}"))?;
            if bound < 0 {
                return Err("bound must be nonnegative".into());
            }
            Ok(ProfileStrategy::Random { count, bound })
        }
        _ => Err(format!("expected fixed or random:COUNT:BOUND, got {value:?}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub families: Vec<String>,
    pub random_families: usize,
    pub theorems: Vec<String>,
    pub s: Vec<i64>,
    pub k: Vec<i64>,
    pub n: Vec<i64>,
    pub m: Vec<usize>,
    pub d: Option<Vec<usize>>,
    pub profiles: String,
    pub x: Vec<String>,
    pub engine: String,
    pub lemma_count: usize,
}
