use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{Block, BlockKind, BlockSpec};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Verb {
    Build,
    Kac,
    Match,
    HopfCheck,
    Numeric,
    #[default]
    Report,
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verb::Build => "build",
            Verb::Kac => "kac",
            Verb::Match => "match",
            Verb::HopfCheck => "hopf-check",
            Verb::Numeric => "numeric",
            Verb::Report => "report",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunOptions {
    /// Word length `k` of the multipliers `w` in `tau(w r)`; 0 traces relations only.
    pub lp_degree: usize,
    pub membership_bound: usize,
    pub seed: u64,
    pub dim: usize,
    pub restarts: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            lp_degree: 0,
            membership_bound: 4,
            seed: 0,
            dim: 1,
            restarts: 50,
            out: None,
        }
    }
}

/// A block specification plus what to do with it.
///
/// On disk this is the block specification object with optional `verb` and
/// `options` keys, e.g. `{"kind":"one-block","blocks":[{"q":"1/2","m":2}],"epsilon":1}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(from = "ConfigFile", into = "ConfigFile")]
pub struct RunConfig {
    pub spec: BlockSpec,
    pub verb: Verb,
    pub options: RunOptions,
}

// Flat on-disk form; spelled out so parse errors keep their field path.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    kind: BlockKind,
    blocks: Vec<Block>,
    #[serde(default)]
    trailing: usize,
    #[serde(default = "default_epsilon")]
    epsilon: i8,
    #[serde(default)]
    verb: Verb,
    #[serde(default)]
    options: RunOptions,
}

fn default_epsilon() -> i8 {
    1
}

impl From<ConfigFile> for RunConfig {
    fn from(f: ConfigFile) -> Self {
        RunConfig {
            spec: BlockSpec {
                kind: f.kind,
                blocks: f.blocks,
                trailing: f.trailing,
                epsilon: f.epsilon,
            },
            verb: f.verb,
            options: f.options,
        }
    }
}

impl From<RunConfig> for ConfigFile {
    fn from(c: RunConfig) -> Self {
        ConfigFile {
            kind: c.spec.kind,
            blocks: c.spec.blocks,
            trailing: c.spec.trailing,
            epsilon: c.spec.epsilon,
            verb: c.verb,
            options: c.options,
        }
    }
}

impl RunConfig {
    pub fn new(spec: BlockSpec, verb: Verb) -> Self {
        RunConfig {
            spec,
            verb,
            options: RunOptions::default(),
        }
    }

    /// Parses and validates; errors name the offending field.
    pub fn from_json(text: &str) -> Result<RunConfig> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let config: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::Config(format!("at `{path}`: {}", e.inner()))
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_path(path: &std::path::Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)?;
        RunConfig::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        self.spec.validate().map_err(|e| match e {
            Error::InvalidSpec { field, message } => Error::Config(format!("at `{field}`: {message}")),
            other => other,
        })?;
        if self.options.dim == 0 {
            return Err(Error::Config("at `options.dim`: dimension must be at least 1".into()));
        }
        if self.options.membership_bound == 0 {
            return Err(Error::Config("at `options.membership_bound`: bound must be at least 1".into()));
        }
        Ok(())
    }
}
