//! Cleaned dataset of name-value pairs.
//!
//! The stages run in a fixed order: [`load_traces`], [`merge_types`],
//! [`filter_names`], [`split_dataset`], then [`type_frequencies`] over
//! whichever subset the caller needs statistics for.

mod filter;
mod freq;
mod load;
mod merge;
mod split;
mod store;

use serde::{Deserialize, Serialize};

use crate::trace::TraceRecord;

pub use filter::{filter_names, is_meaningless_name, FilterReport};
pub use freq::{frequent_types, type_frequencies, TypeFrequencyTable};
pub use load::{load_traces, IngestReport};
pub use merge::{merge_types, merge_types_with, MergeConfig, MergeReport};
pub use split::{split_dataset, DatasetSplit};
pub use store::{read_split, write_split, SplitChecksums, SplitManifest};

/// Where a pair was observed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Origin {
    pub file: String,
    pub line: u32,
    pub seq: u64,
    /// Trace file the record was read from.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub trace: String,
}

/// One observed assignment: name, value string, type, length, and shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NameValuePair {
    pub name: String,
    pub repr: String,
    #[serde(rename = "type")]
    pub type_name: String,
    pub len: Option<u64>,
    pub shape: Option<Vec<u64>>,
    /// Base-type names as recorded, used by type merging.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bases: Vec<String>,
    pub origin: Origin,
}

impl NameValuePair {
    pub fn from_record(record: TraceRecord, trace: &str) -> Self {
        NameValuePair {
            name: record.name,
            repr: record.repr,
            type_name: record.type_name,
            len: record.len,
            shape: record.shape,
            bases: record.bases,
            origin: Origin {
                file: record.file,
                line: record.line,
                seq: record.seq,
                trace: trace.to_string(),
            },
        }
    }

    /// Replaces the value part (v, τ, l, s) with another pair's value.
    pub fn with_value_of(&self, other: &NameValuePair) -> NameValuePair {
        NameValuePair {
            name: self.name.clone(),
            repr: other.repr.clone(),
            type_name: other.type_name.clone(),
            len: other.len,
            shape: other.shape.clone(),
            bases: other.bases.clone(),
            origin: self.origin.clone(),
        }
    }

    /// True when both pairs have the same (n, v, τ, l, s) tuple.
    pub fn same_tuple(&self, other: &NameValuePair) -> bool {
        self.name == other.name
            && self.repr == other.repr
            && self.type_name == other.type_name
            && self.len == other.len
            && self.shape == other.shape
    }
}

#[cfg(test)]
pub(crate) fn pair(name: &str, repr: &str, ty: &str) -> NameValuePair {
    NameValuePair {
        name: name.into(),
        repr: repr.into(),
        type_name: ty.into(),
        len: None,
        shape: None,
        bases: Vec::new(),
        origin: Origin {
            file: "t.py".into(),
            line: 1,
            seq: 0,
            trace: String::new(),
        },
    }
}
