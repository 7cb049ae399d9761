//! Glue for running the stages end to end on directories of files.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::corpus::{
    filter_names, load_traces, merge_types, FilterReport, IngestReport, MergeConfig, MergeReport, NameValuePair,
};
use crate::embed::{tokenize_corpus, train_subword_embedding, EmbedConfig, EmbedTrainReport, TokenEmbedding};
use crate::error::{Error, Result};

/// Files under `root` (recursively) with the given extension, sorted.
/// A path to a single file is returned as is.
pub fn files_with_extension(root: &Path, ext: &str) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            Error::io(path, e.into())
        })?;
        let path = entry.path();
        if entry.file_type().is_file() && (path == root || path.extension().is_some_and(|x| x == ext)) {
            out.push(path.to_path_buf());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CleanReport {
    pub ingest: IngestReport,
    pub merge: MergeReport,
    pub filter: FilterReport,
}

/// Load, merge, and filter.
pub fn clean_corpus<P: AsRef<Path>>(traces: &[P], merge: &MergeConfig) -> (Vec<NameValuePair>, CleanReport) {
    let (pairs, ingest) = load_traces(traces);
    let (pairs, merge) = merge_types(pairs, merge);
    let (pairs, filter) = filter_names(pairs);
    (pairs, CleanReport { ingest, merge, filter })
}

/// Tokenizes the source files and trains an embedding on them.
pub fn embed_sources<P: AsRef<Path>>(
    sources: &[P],
    config: &EmbedConfig,
) -> Result<(TokenEmbedding, EmbedTrainReport)> {
    let corpus = tokenize_corpus(sources);
    let (emb, mut report) = train_subword_embedding(&corpus.sequences, config)?;
    for (path, reason) in corpus.skipped {
        report.warnings.push(format!("skipped {}: {reason}", path.display()));
    }
    Ok((emb, report))
}
