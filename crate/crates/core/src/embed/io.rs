//! Binary and text persistence of [`TokenEmbedding`].
//!
//! Binary layout, little endian:
//!
//! ```text
//! magic "NVEMB\0" | u32 version | u32 dim | u32 ngram_min | u32 ngram_max
//! u64 word count | u64 n-gram count
//! per word, then per n-gram: u32 byte length | UTF-8 bytes | dim × f64
//! ```

use std::fs;
use std::io::Write;
use std::path::Path;

use super::TokenEmbedding;
use crate::checksum::sha256_hex;
use crate::error::{Error, Result};

const MAGIC: &[u8; 6] = b"NVEMB\0";
const VERSION: u32 = 1;

impl TokenEmbedding {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        for v in [VERSION, self.dim as u32, self.ngram_min as u32, self.ngram_max as u32] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out.extend_from_slice(&(self.words.len() as u64).to_le_bytes());
        out.extend_from_slice(&(self.ngrams.len() as u64).to_le_bytes());
        let d = self.dim;
        for (keys, vecs) in [(&self.words, &self.word_vecs), (&self.ngrams, &self.ngram_vecs)] {
            for (i, key) in keys.iter().enumerate() {
                out.extend_from_slice(&(key.len() as u32).to_le_bytes());
                out.extend_from_slice(key.as_bytes());
                for x in &vecs[i * d..(i + 1) * d] {
                    out.extend_from_slice(&x.to_le_bytes());
                }
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { bytes, pos: 0 };
        if r.take(MAGIC.len())? != MAGIC {
            return Err(Error::Incompatible("not an embedding table".into()));
        }
        let version = r.u32()?;
        if version != VERSION {
            return Err(Error::Incompatible(format!(
                "embedding format version {version}, expected {VERSION}"
            )));
        }
        let dim = r.u32()? as usize;
        let ngram_min = r.u32()? as usize;
        let ngram_max = r.u32()? as usize;
        let n_words = r.u64()? as usize;
        let n_grams = r.u64()? as usize;
        let mut read_table = |n: usize| -> Result<(Vec<String>, Vec<f64>)> {
            let mut keys = Vec::with_capacity(n.min(1 << 20));
            let mut vecs = Vec::with_capacity(n.saturating_mul(dim).min(1 << 24));
            for _ in 0..n {
                let len = r.u32()? as usize;
                let key = std::str::from_utf8(r.take(len)?)
                    .map_err(|_| Error::Incompatible("non-UTF-8 key".into()))?;
                keys.push(key.to_string());
                for _ in 0..dim {
                    vecs.push(f64::from_le_bytes(r.take(8)?.try_into().unwrap()));
                }
            }
            Ok((keys, vecs))
        };
        let (words, word_vecs) = read_table(n_words)?;
        let (ngrams, ngram_vecs) = read_table(n_grams)?;
        if r.pos != bytes.len() {
            return Err(Error::Incompatible("trailing bytes after embedding table".into()));
        }
        TokenEmbedding::from_parts(dim, (ngram_min, ngram_max), words, word_vecs, ngrams, ngram_vecs)
    }

    /// SHA-256 of the binary serialization.
    pub fn checksum(&self) -> String {
        sha256_hex(&self.to_bytes())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_bytes()).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
        Self::from_bytes(&bytes)
    }

    /// Writes `token v1 … vd` lines for every vocabulary word, using the
    /// composed vector.
    pub fn export_text(&self, path: &Path) -> Result<()> {
        let mut out = Vec::new();
        writeln!(out, "{} {}", self.words.len(), self.dim).unwrap();
        for w in &self.words {
            write!(out, "{w}").unwrap();
            for x in self.embed_name(w) {
                write!(out, " {x:.6}").unwrap();
            }
            out.push(b'\n');
        }
        fs::write(path, out).map_err(|e| Error::io(path, e))
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Result<&[u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.bytes.len())
            .ok_or_else(|| Error::Incompatible("truncated embedding table".into()))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TokenEmbedding {
        TokenEmbedding::from_parts(
            2,
            (3, 5),
            vec!["age".into(), "név".into()],
            vec![1.0, -2.5, 0.125, 3.0],
            vec!["<ag".into()],
            vec![0.5, 0.25],
        )
        .unwrap()
    }

    #[test]
    fn binary_round_trip_is_exact() {
        let e = sample();
        let back = TokenEmbedding::from_bytes(&e.to_bytes()).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.checksum(), e.checksum());
    }

    #[test]
    fn rejects_truncated_and_foreign_input() {
        let bytes = sample().to_bytes();
        assert!(TokenEmbedding::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        assert!(TokenEmbedding::from_bytes(b"hello world, not a table").is_err());
    }

    #[test]
    fn text_export_has_one_line_per_word() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("emb.txt");
        sample().export_text(&path).unwrap();
        let text = std::fs::read_to_string(path).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "2 2");
        assert_eq!(lines[1].split(' ').count(), 3);
        assert!(lines[1].starts_with("age 1.500000 -2.250000"));
    }
}
