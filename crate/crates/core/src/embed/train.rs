//! Skip-gram with negative sampling over subword-composed input vectors.

use std::collections::{BTreeMap, HashMap};

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::{char_ngrams, TokenEmbedding};
use crate::error::{Error, Result};
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbedConfig {
    pub dim: usize,
    pub window: usize,
    pub epochs: usize,
    pub min_count: u64,
    pub negatives: usize,
    pub ngram_min: usize,
    pub ngram_max: usize,
    pub learning_rate: f64,
    pub seed: u64,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig {
            dim: 100,
            window: 5,
            epochs: 5,
            min_count: 2,
            negatives: 5,
            ngram_min: 3,
            ngram_max: 5,
            learning_rate: 0.05,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EmbedTrainReport {
    /// Mean negative-sampling loss per (center, context) pair, per epoch.
    pub epoch_losses: Vec<f64>,
    pub vocabulary: usize,
    pub ngrams: usize,
    pub tokens: usize,
    pub warnings: Vec<String>,
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Trains a subword embedding on token sequences. Single-threaded, so the
/// result is a pure function of the corpus and the configuration.
pub fn train_subword_embedding(
    sequences: &[Vec<String>],
    config: &EmbedConfig,
) -> Result<(TokenEmbedding, EmbedTrainReport)> {
    if config.dim == 0 || config.window == 0 || config.ngram_min == 0 || config.ngram_min > config.ngram_max {
        return Err(Error::InvalidArgument(format!("bad embedding config: {config:?}")));
    }
    let mut counts: HashMap<&str, u64> = HashMap::new();
    for tok in sequences.iter().flatten() {
        *counts.entry(tok.as_str()).or_default() += 1;
    }
    let mut vocab: Vec<(&str, u64)> = counts
        .into_iter()
        .filter(|&(_, c)| c >= config.min_count)
        .collect();
    if vocab.is_empty() {
        return Err(Error::Dataset(format!(
            "no token occurs at least {} times",
            config.min_count
        )));
    }
    vocab.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let word_id: HashMap<&str, usize> = vocab.iter().enumerate().map(|(i, (w, _))| (*w, i)).collect();

    // n-gram ids in first-seen order over the sorted vocabulary
    let mut ngram_id: BTreeMap<String, usize> = BTreeMap::new();
    let mut ngrams: Vec<String> = Vec::new();
    let mut word_ngrams: Vec<Vec<usize>> = Vec::with_capacity(vocab.len());
    for (w, _) in &vocab {
        let ids = char_ngrams(w, config.ngram_min, config.ngram_max)
            .into_iter()
            .map(|g| {
                *ngram_id.entry(g.clone()).or_insert_with(|| {
                    ngrams.push(g);
                    ngrams.len() - 1
                })
            })
            .collect();
        word_ngrams.push(ids);
    }

    let docs: Vec<Vec<usize>> = sequences
        .iter()
        .map(|s| s.iter().filter_map(|t| word_id.get(t.as_str()).copied()).collect())
        .collect();
    let total_tokens: usize = docs.iter().map(Vec::len).sum();

    let mut report = EmbedTrainReport {
        vocabulary: vocab.len(),
        ngrams: ngrams.len(),
        tokens: total_tokens,
        ..Default::default()
    };
    if total_tokens <= config.window {
        let msg = format!(
            "corpus of {total_tokens} tokens is not larger than the window ({}); vectors will be poor",
            config.window
        );
        log::warn!("{msg}");
        report.warnings.push(msg);
    }

    let d = config.dim;
    let mut init = rng::stream(config.seed, &[0xE3B]);
    let bound = 1.0 / d as f64;
    let mut word_vecs: Vec<f64> = (0..vocab.len() * d).map(|_| init.gen_range(-bound..bound)).collect();
    let mut ngram_vecs: Vec<f64> = (0..ngrams.len() * d).map(|_| init.gen_range(-bound..bound)).collect();
    let mut out_vecs = vec![0.0; vocab.len() * d];

    // unigram^0.75 noise distribution
    let mut noise_cdf = Vec::with_capacity(vocab.len());
    let mut acc = 0.0;
    for (_, c) in &vocab {
        acc += (*c as f64).powf(0.75);
        noise_cdf.push(acc);
    }
    let noise_total = acc;

    let total_steps = (total_tokens * config.epochs).max(1) as f64;
    let mut step = 0usize;
    let mut hidden = vec![0.0; d];
    let mut grad = vec![0.0; d];

    for epoch in 0..config.epochs {
        let mut r = rng::stream(config.seed, &[0xE3C, epoch as u64]);
        let mut loss_sum = 0.0;
        let mut loss_n = 0usize;
        for doc in &docs {
            for (pos, &center) in doc.iter().enumerate() {
                let lr = config.learning_rate * (1.0 - step as f64 / total_steps).max(1e-4);
                step += 1;
                let span = r.gen_range(1..=config.window);
                let lo = pos.saturating_sub(span);
                let hi = (pos + span).min(doc.len() - 1);
                for ctx_pos in lo..=hi {
                    if ctx_pos == pos {
                        continue;
                    }
                    let grams = &word_ngrams[center];
                    compose(&mut hidden, &word_vecs, &ngram_vecs, center, grams, d);
                    grad.iter_mut().for_each(|g| *g = 0.0);
                    let mut targets = Vec::with_capacity(config.negatives + 1);
                    targets.push((doc[ctx_pos], 1.0));
                    for _ in 0..config.negatives {
                        let u = r.gen::<f64>() * noise_total;
                        let t = noise_cdf.partition_point(|&c| c <= u).min(vocab.len() - 1);
                        if t != doc[ctx_pos] {
                            targets.push((t, 0.0));
                        }
                    }
                    for (t, label) in targets {
                        let out = &mut out_vecs[t * d..(t + 1) * d];
                        let score = sigmoid(dot(&hidden, out));
                        loss_sum -= if label > 0.5 {
                            score.max(1e-12).ln()
                        } else {
                            (1.0 - score).max(1e-12).ln()
                        };
                        let g = lr * (label - score);
                        for k in 0..d {
                            grad[k] += g * out[k];
                            out[k] += g * hidden[k];
                        }
                    }
                    loss_n += 1;
                    for (w, g) in word_vecs[center * d..(center + 1) * d].iter_mut().zip(&grad) {
                        *w += g;
                    }
                    if !grams.is_empty() {
                        let share = 1.0 / grams.len() as f64;
                        for &gid in grams {
                            for (w, g) in ngram_vecs[gid * d..(gid + 1) * d].iter_mut().zip(&grad) {
                                *w += g * share;
                            }
                        }
                    }
                }
            }
        }
        let mean = if loss_n > 0 { loss_sum / loss_n as f64 } else { 0.0 };
        log::debug!("embedding epoch {epoch}: loss {mean:.4}");
        report.epoch_losses.push(mean);
    }

    let words = vocab.iter().map(|(w, _)| w.to_string()).collect();
    let embedding = TokenEmbedding::from_parts(
        d,
        (config.ngram_min, config.ngram_max),
        words,
        word_vecs,
        ngrams,
        ngram_vecs,
    )?;
    Ok((embedding, report))
}

fn compose(out: &mut [f64], word_vecs: &[f64], ngram_vecs: &[f64], word: usize, grams: &[usize], d: usize) {
    out.copy_from_slice(&word_vecs[word * d..(word + 1) * d]);
    if grams.is_empty() {
        return;
    }
    let share = 1.0 / grams.len() as f64;
    for &g in grams {
        for (o, x) in out.iter_mut().zip(&ngram_vecs[g * d..(g + 1) * d]) {
            *o += x * share;
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus() -> Vec<Vec<String>> {
        let lines = [
            "probability = <num> if probability > <num> : print ( probability )",
            "likelihood = <num> if likelihood > <num> : print ( likelihood )",
            "file_name = <str> with open ( file_name ) as handle : text = handle . read ( )",
            "file_path = <str> with open ( file_path ) as handle : text = handle . read ( )",
        ];
        (0..30)
            .flat_map(|_| lines.iter())
            .map(|l| l.split(' ').map(String::from).collect())
            .collect()
    }

    fn small() -> EmbedConfig {
        EmbedConfig {
            dim: 24,
            epochs: 5,
            seed: 3,
            ..Default::default()
        }
    }

    #[test]
    fn vectors_have_configured_dimension() {
        let (e, report) = train_subword_embedding(&corpus(), &small()).unwrap();
        assert_eq!(e.embed_name("probability").len(), 24);
        assert!(report.vocabulary > 10);
        assert_eq!(report.epoch_losses.len(), 5);
    }

    #[test]
    fn unseen_tokens_are_embedded_through_ngrams() {
        let (e, _) = train_subword_embedding(&corpus(), &small()).unwrap();
        assert!(!e.contains_word("train_siez"));
        let v = e.embed_name("probabilities");
        assert!(v.iter().all(|x| x.is_finite()));
        assert!(v.iter().any(|&x| x != 0.0));
        assert!(e.embed_name("\u{1F600}").iter().all(|x| x.is_finite()));
    }

    #[test]
    fn loss_decreases() {
        let (_, report) = train_subword_embedding(&corpus(), &small()).unwrap();
        let l = &report.epoch_losses;
        assert!(l.last().unwrap() < l.first().unwrap(), "{l:?}");
    }

    #[test]
    fn training_is_reproducible() {
        let (a, _) = train_subword_embedding(&corpus(), &small()).unwrap();
        let (b, _) = train_subword_embedding(&corpus(), &small()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.embed_name("age"), b.embed_name("age"));
    }

    #[test]
    fn tiny_corpus_trains_with_a_warning() {
        let seq = vec![vec!["a".to_string(), "a".into(), "b".into(), "b".into()]];
        let (_, report) = train_subword_embedding(&seq, &small()).unwrap();
        assert_eq!(report.warnings.len(), 1);
    }

    #[test]
    fn empty_corpus_is_rejected() {
        assert!(train_subword_embedding(&[], &small()).is_err());
    }
}
