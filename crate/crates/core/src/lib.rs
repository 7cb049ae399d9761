//! Detection of name-value inconsistencies from runtime assignment traces.
//!
//! The pipeline runs in stages that each live in their own module:
//!
//! - [`trace`]: the line-delimited trace record format written by the tracer.
//! - [`corpus`]: loading traces, type merging, name filtering, splits, and
//!   type-frequency statistics.
//! - [`negsample`]: type-guided and purely random negative example generation.
//! - [`embed`]: subword identifier embeddings (skip-gram over character n-grams).
//! - [`model`]: feature encoders and the GRU + CNN + feed-forward classifier.
//! - [`detect`]: scoring, heuristic suppression, and warning reports.
//! - [`eval`]: precision/recall/F1 sweeps, ablations, and strategy comparison.

pub mod checksum;
pub mod corpus;
pub mod detect;
pub mod embed;
pub mod error;
pub mod eval;
pub mod jsonl;
pub mod model;
pub mod negsample;
pub mod pipeline;
pub mod rng;
pub mod trace;

pub use error::{Error, Result};
