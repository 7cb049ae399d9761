//! Versioned model checkpoint.
//!
//! ```text
//! magic "NVMODEL\0" | u32 version | u64 header length | JSON header | f64 LE parameters
//! ```
//!
//! The header records every hyperparameter, the frequent-type list, the
//! character vocabulary, and the checksum of the embedding the model was
//! trained against.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::encode::{ComponentMask, CHAR_VOCAB, PAD, UNK};
use super::params::{Layout, Params};
use super::train::{Model, TrainConfig};
use crate::checksum::sha256_hex;
use crate::embed::TokenEmbedding;
use crate::error::{Error, Result};

const MAGIC: &[u8; 8] = b"NVMODEL\0";
const VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Header {
    config: TrainConfig,
    frequent_types: Vec<String>,
    mask: ComponentMask,
    char_vocabulary: String,
    unk_index: u8,
    pad_index: u8,
    embedding_checksum: String,
    parameter_count: usize,
}

fn char_vocabulary() -> String {
    (' '..='~').collect()
}

impl Model {
    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let header = Header {
            config: self.config.clone(),
            frequent_types: self.frequent_types.clone(),
            mask: self.mask.clone(),
            char_vocabulary: char_vocabulary(),
            unk_index: UNK,
            pad_index: PAD,
            embedding_checksum: self.embedding_checksum.clone(),
            parameter_count: self.params.data.len(),
        };
        let json = serde_json::to_vec(&header)?;
        let mut out = Vec::with_capacity(json.len() + self.params.data.len() * 8 + 20);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(json.len() as u64).to_le_bytes());
        out.extend_from_slice(&json);
        for x in &self.params.data {
            out.extend_from_slice(&x.to_le_bytes());
        }
        Ok(out)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |m: &str| Error::Incompatible(format!("model checkpoint: {m}"));
        if bytes.len() < 20 || &bytes[..8] != MAGIC {
            return Err(bad("not a model checkpoint"));
        }
        let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
        if version != VERSION {
            return Err(bad(&format!("version {version}, expected {VERSION}")));
        }
        let header_len = u64::from_le_bytes(bytes[12..20].try_into().unwrap()) as usize;
        let body = bytes
            .get(20..)
            .filter(|b| b.len() >= header_len)
            .ok_or_else(|| bad("truncated header"))?;
        let header: Header = serde_json::from_slice(&body[..header_len])?;
        if header.char_vocabulary != char_vocabulary()
            || header.unk_index != UNK
            || header.pad_index != PAD
            || header.config.hyper.char_vocab != CHAR_VOCAB
        {
            return Err(bad("character vocabulary differs from this build"));
        }
        let layout = Layout::new(header.config.hyper);
        let raw = &body[header_len..];
        if layout.total() != header.parameter_count || raw.len() != header.parameter_count * 8 {
            return Err(bad("parameter block does not match the recorded shape"));
        }
        let data = raw
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(Model {
            params: Params { layout, data },
            frequent_types: header.frequent_types,
            mask: header.mask,
            embedding_checksum: header.embedding_checksum,
            config: header.config,
        })
    }

    pub fn checksum(&self) -> Result<String> {
        Ok(sha256_hex(&self.to_bytes()?))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_bytes()?).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
        Self::from_bytes(&bytes)
    }

    /// Loads a checkpoint and refuses it unless it was trained against
    /// `embedding`.
    pub fn load_for(path: &Path, embedding: &TokenEmbedding) -> Result<Self> {
        let model = Self::load(path)?;
        model.check_embedding(embedding)?;
        Ok(model)
    }
}
