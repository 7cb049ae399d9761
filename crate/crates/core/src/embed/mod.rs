//! Subword identifier embeddings.
//!
//! A token's vector is its own word vector (when the token was in the
//! training vocabulary) plus the mean of the vectors of its boundary-marked
//! character n-grams. Unseen identifiers still get a vector from whichever
//! of their n-grams were seen during training.

mod io;
mod tokenize;
mod train;

use std::collections::HashMap;

pub use tokenize::{tokenize_corpus, tokenize_source, LexError, TokenizedCorpus, NUM_TOKEN, STR_TOKEN};
pub use train::{train_subword_embedding, EmbedConfig, EmbedTrainReport};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TokenEmbedding {
    dim: usize,
    ngram_min: usize,
    ngram_max: usize,
    words: Vec<String>,
    word_index: HashMap<String, usize>,
    word_vecs: Vec<f64>,
    ngrams: Vec<String>,
    ngram_index: HashMap<String, usize>,
    ngram_vecs: Vec<f64>,
}

impl TokenEmbedding {
    pub(crate) fn from_parts(
        dim: usize,
        (ngram_min, ngram_max): (usize, usize),
        words: Vec<String>,
        word_vecs: Vec<f64>,
        ngrams: Vec<String>,
        ngram_vecs: Vec<f64>,
    ) -> Result<Self> {
        if dim == 0 || ngram_min == 0 || ngram_min > ngram_max {
            return Err(Error::InvalidArgument(format!(
                "bad embedding shape: dim {dim}, n-grams {ngram_min}..={ngram_max}"
            )));
        }
        if word_vecs.len() != words.len() * dim || ngram_vecs.len() != ngrams.len() * dim {
            return Err(Error::InvalidArgument("vector table size mismatch".into()));
        }
        let index = |keys: &[String]| -> HashMap<String, usize> {
            keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect()
        };
        Ok(TokenEmbedding {
            dim,
            ngram_min,
            ngram_max,
            word_index: index(&words),
            ngram_index: index(&ngrams),
            words,
            word_vecs,
            ngrams,
            ngram_vecs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ngram_range(&self) -> (usize, usize) {
        (self.ngram_min, self.ngram_max)
    }

    pub fn vocabulary(&self) -> &[String] {
        &self.words
    }

    pub fn ngram_count(&self) -> usize {
        self.ngrams.len()
    }

    pub fn contains_word(&self, token: &str) -> bool {
        self.word_index.contains_key(token)
    }

    pub(crate) fn word_ngram_ids(&self, token: &str) -> Vec<usize> {
        char_ngrams(token, self.ngram_min, self.ngram_max)
            .iter()
            .filter_map(|g| self.ngram_index.get(g).copied())
            .collect()
    }

    /// Vector for any string. Strings sharing no n-gram with the training
    /// vocabulary map to the zero vector.
    pub fn embed_name(&self, name: &str) -> Vec<f64> {
        let d = self.dim;
        let mut out = vec![0.0; d];
        let ids = self.word_ngram_ids(name);
        if !ids.is_empty() {
            let scale = 1.0 / ids.len() as f64;
            for id in ids {
                let v = &self.ngram_vecs[id * d..(id + 1) * d];
                for (o, x) in out.iter_mut().zip(v) {
                    *o += x * scale;
                }
            }
        }
        if let Some(&w) = self.word_index.get(name) {
            for (o, x) in out.iter_mut().zip(&self.word_vecs[w * d..(w + 1) * d]) {
                *o += x;
            }
        }
        out
    }
}

/// Character n-grams of `<token>` for every n in `min..=max`, in order of
/// increasing start position then length. Duplicates are kept.
pub fn char_ngrams(token: &str, min: usize, max: usize) -> Vec<String> {
    let marked: Vec<char> = std::iter::once('<')
        .chain(token.chars())
        .chain(std::iter::once('>'))
        .collect();
    let mut grams = Vec::new();
    for start in 0..marked.len() {
        for n in min..=max {
            if start + n > marked.len() {
                break;
            }
            grams.push(marked[start..start + n].iter().collect());
        }
    }
    grams
}

pub fn cosine_similarity(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: {} vs {}",
            u.len(),
            v.len()
        )));
    }
    let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let nu = u.iter().map(|a| a * a).sum::<f64>().sqrt();
    let nv = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((dot / (nu * nv)).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx_eq(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn ngrams_carry_boundary_markers() {
        let g = char_ngrams("age", 3, 5);
        assert_eq!(g, ["<ag", "<age", "<age>", "age", "age>", "ge>"]);
        assert!(char_ngrams("", 3, 5).is_empty());
    }

    #[test]
    fn cosine_basics() {
        let u = [1.0, 2.0, -3.0];
        let neg: Vec<f64> = u.iter().map(|x| -x).collect();
        assert!(approx_eq(cosine_similarity(&u, &u).unwrap(), 1.0));
        assert!(approx_eq(cosine_similarity(&u, &neg).unwrap(), -1.0));
        assert!(approx_eq(cosine_similarity(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0));
        assert!(matches!(cosine_similarity(&[0.0, 0.0], &[1.0, 0.0]), Err(Error::ZeroVector)));
    }

    #[test]
    fn composition_is_word_plus_mean_of_ngrams() {
        let words = vec!["age".to_string()];
        let grams = vec!["<ag".to_string(), "ge>".to_string()];
        let e = TokenEmbedding::from_parts(2, (3, 5), words, vec![1.0, 1.0], grams, vec![2.0, 0.0, 0.0, 4.0]).unwrap();
        assert_eq!(e.embed_name("age"), vec![2.0, 3.0]);
        // unseen token sharing "ge>" only
        assert_eq!(e.embed_name("page"), vec![0.0, 4.0]);
        assert_eq!(e.embed_name("xyz"), vec![0.0, 0.0]);
    }
}
