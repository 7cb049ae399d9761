//! Optional TOML configuration file with one table per stage.
//!
//! Every key is optional. Command-line flags override the file, and the file
//! overrides the built-in defaults.

use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub corpus: CorpusSection,
    pub negsample: NegsampleSection,
    pub embed: EmbedSection,
    pub train: TrainSection,
    pub detect: DetectSection,
    pub trace: TraceSection,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSection {
    pub top_k: Option<usize>,
    pub test_count: Option<usize>,
    pub train_fraction: Option<f64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NegsampleSection {
    pub strategy: Option<String>,
    pub infreq_threshold: Option<f64>,
    pub scope: Option<String>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EmbedSection {
    pub dim: Option<usize>,
    pub window: Option<usize>,
    pub epochs: Option<usize>,
    pub min_count: Option<u64>,
    pub negatives: Option<usize>,
    pub ngram_min: Option<usize>,
    pub ngram_max: Option<usize>,
    pub learning_rate: Option<f64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainSection {
    pub batch_size: Option<usize>,
    pub epochs: Option<usize>,
    pub learning_rate: Option<f64>,
    pub dropout: Option<f64>,
    pub seed: Option<u64>,
    pub mask: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DetectSection {
    pub threshold: Option<f64>,
    pub format: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TraceSection {
    pub command: Option<Vec<String>>,
    pub timeout: Option<f64>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections() {
        let cfg: FileConfig = toml::from_str(
            "[train]\nepochs = 3\nmask = [\"name\"]\n[detect]\nthreshold = 0.4\n",
        )
        .unwrap();
        assert_eq!(cfg.train.epochs, Some(3));
        assert_eq!(cfg.train.mask.as_deref(), Some(&["name".to_string()][..]));
        assert_eq!(cfg.detect.threshold, Some(0.4));
        assert_eq!(cfg.embed, EmbedSection::default());
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(toml::from_str::<FileConfig>("[train]\nepoch = 3\n").is_err());
        assert!(toml::from_str::<FileConfig>("[model]\n").is_err());
    }
}
