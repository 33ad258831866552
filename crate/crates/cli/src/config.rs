use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use subspace_codes::ScalarField;

use crate::error::{CliError, CliResult};

/// One JSON document drives every subcommand; each reads the sections it needs.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<ChannelConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    /// Largest code whose minimum distance is computed pair by pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure3: Option<Figure3Config>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CodeConfig {
    Cp {
        q: u64,
        k: usize,
        /// Encoded field element selecting the character `χ_j`.
        #[serde(default = "default_character")]
        character: u32,
        /// Kept at 64 bits: tagged enums cannot buffer `u128` values.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        size_cap: Option<u64>,
    },
    Binary {
        n: usize,
        /// Words as strings over `{0, 1}`.
        words: Vec<String>,
    },
    RandomEnsemble {
        n: usize,
        m: usize,
        size: usize,
        #[serde(default = "default_field")]
        field: ScalarField,
        /// Falls back to the master seed.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
    File {
        path: PathBuf,
    },
}

fn default_character() -> u32 {
    1
}

fn default_field() -> ScalarField {
    ScalarField::Complex
}

/// Absent from a config, the channel passes codewords through unchanged.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelConfig {
    /// Kept dimension. Defaults to no erasure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Erased dimension, as an alternative to `k` for constant-dimension codes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
    #[serde(default)]
    pub t: usize,
    #[serde(default)]
    pub delta: f64,
    #[serde(default)]
    pub r_d: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BoundsConfig {
    pub labels: Vec<String>,
    pub m: usize,
    pub beta: u8,
    pub epsilon: f64,
    /// Grid size; `δ` runs over `i/points` for `i = 1..=points`.
    pub points: usize,
    /// Block lengths for the CP curves.
    pub cp_n: Vec<usize>,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            labels: crate::commands::BOUND_LABELS.iter().map(|s| s.to_string()).collect(),
            m: 1,
            beta: 2,
            epsilon: 0.05,
            points: 100,
            cp_n: vec![100, 1000, 10_000],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Figure3Config {
    pub min_exponent: u32,
    pub max_exponent: u32,
    pub delta_target: f64,
}

impl Default for Figure3Config {
    fn default() -> Self {
        Figure3Config { min_exponent: 3, max_exponent: 10, delta_target: 0.5 }
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> CliResult<ExperimentConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        ExperimentConfig::parse(&text)
    }

    pub fn parse(text: &str) -> CliResult<ExperimentConfig> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    /// SHA-256 of the canonical JSON form, ignoring the output path so that
    /// the same experiment written to different files hashes identically.
    pub fn hash(&self) -> String {
        let canonical = ExperimentConfig { out: None, ..self.clone() };
        let json = serde_json::to_string(&canonical).expect("config serializes");
        hex::encode(Sha256::digest(json.as_bytes()))
    }

    pub fn require_seed(&self) -> CliResult<u64> {
        self.seed.ok_or_else(|| CliError::Config("a master seed is required for sampling".into()))
    }
}
