//! On-disk layout of a cleaned dataset directory.
//!
//! ```text
//! train.jsonl valid.jsonl test.jsonl   one NameValuePair per line
//! frequencies.json                     TypeFrequencyTable of the train split
//! split.json                           SplitManifest
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{type_frequencies, DatasetSplit, NameValuePair, TypeFrequencyTable};
use crate::checksum::file_sha256;
use crate::error::{Error, Result};
use crate::jsonl;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitManifest {
    pub seed: u64,
    pub train: usize,
    pub valid: usize,
    pub test: usize,
    /// Frequent types of the merged corpus, in one-hot slot order.
    pub frequent_types: Vec<String>,
    pub checksums: SplitChecksums,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitChecksums {
    pub train: String,
    pub valid: String,
    pub test: String,
}

pub fn write_split(
    dir: &Path,
    split: &DatasetSplit,
    frequent_types: &[String],
) -> Result<(SplitManifest, TypeFrequencyTable)> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    jsonl::write(&dir.join("train.jsonl"), &split.train)?;
    jsonl::write(&dir.join("valid.jsonl"), &split.valid)?;
    jsonl::write(&dir.join("test.jsonl"), &split.test)?;
    let table = type_frequencies(&split.train, frequent_types.len());
    write_json(&dir.join("frequencies.json"), &table)?;
    let manifest = SplitManifest {
        seed: split.seed,
        train: split.train.len(),
        valid: split.valid.len(),
        test: split.test.len(),
        frequent_types: frequent_types.to_vec(),
        checksums: SplitChecksums {
            train: file_sha256(&dir.join("train.jsonl"))?,
            valid: file_sha256(&dir.join("valid.jsonl"))?,
            test: file_sha256(&dir.join("test.jsonl"))?,
        },
    };
    write_json(&dir.join("split.json"), &manifest)?;
    Ok((manifest, table))
}

pub fn read_split(dir: &Path) -> Result<(DatasetSplit, SplitManifest)> {
    let manifest: SplitManifest = read_json(&dir.join("split.json"))?;
    let read = |file: &str| -> Result<Vec<NameValuePair>> { jsonl::read(&dir.join(file)) };
    let split = DatasetSplit {
        train: read("train.jsonl")?,
        valid: read("valid.jsonl")?,
        test: read("test.jsonl")?,
        seed: manifest.seed,
    };
    if (split.train.len(), split.valid.len(), split.test.len())
        != (manifest.train, manifest.valid, manifest.test)
    {
        return Err(Error::Dataset(format!(
            "{}: split sizes disagree with split.json",
            dir.display()
        )));
    }
    Ok((split, manifest))
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{pair, split_dataset};

    #[test]
    fn round_trips_through_a_directory() {
        let pairs: Vec<_> = (0..50)
            .map(|i| pair(if i % 2 == 0 { "count" } else { "file_name" }, &i.to_string(), if i % 2 == 0 { "int" } else { "str" }))
            .collect();
        let split = split_dataset(pairs, 10, 0.8, 3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let types = vec!["int".to_string(), "str".to_string()];
        let (manifest, table) = write_split(dir.path(), &split, &types).unwrap();
        assert_eq!(table.global.values().sum::<u64>() as usize, split.train.len());
        let (back, manifest_back) = read_split(dir.path()).unwrap();
        assert_eq!(back, split);
        assert_eq!(manifest_back, manifest);
    }
}
