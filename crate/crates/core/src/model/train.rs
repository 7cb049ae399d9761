//! Mini-batch training with Adam and best-validation-F1 checkpointing.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::encode::{assemble_with_name_vec, ComponentMask, FeatureBundle};
use super::network::{backward, bce_with_logit, forward, BatchCache, Dropout, GradAccum};
use super::params::{Hyper, Params};
use crate::corpus::NameValuePair;
use crate::embed::TokenEmbedding;
use crate::error::{Error, Result};
use crate::eval::{prf_metrics, MetricsPoint};
use crate::negsample::LabeledExample;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub batch_size: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub adam_eps: f64,
    pub dropout: f64,
    pub seed: u64,
    /// Components zeroed during training and prediction.
    pub mask: ComponentMask,
    /// Threshold used for the per-epoch validation metrics.
    pub threshold: f64,
    pub hyper: Hyper,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            batch_size: 128,
            epochs: 15,
            learning_rate: 1e-3,
            beta1: 0.9,
            beta2: 0.999,
            adam_eps: 1e-8,
            dropout: 0.5,
            seed: 0,
            mask: ComponentMask::new(),
            threshold: 0.5,
            hyper: Hyper::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpochStats {
    pub epoch: usize,
    pub train_loss: f64,
    pub valid_loss: f64,
    pub valid: MetricsPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainHistory {
    pub epochs: Vec<EpochStats>,
    /// 1-based epoch whose parameters were kept.
    pub best_epoch: usize,
    pub best_valid_f1: f64,
}

impl TrainHistory {
    pub fn valid_f1_curve(&self) -> Vec<f64> {
        self.epochs.iter().map(|e| e.valid.f1.unwrap_or(0.0)).collect()
    }
}

/// A trained classifier together with everything needed to encode inputs
/// the way it was trained.
#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub params: Params,
    pub frequent_types: Vec<String>,
    pub mask: ComponentMask,
    pub embedding_checksum: String,
    pub config: TrainConfig,
}

impl Model {
    pub fn check_embedding(&self, embedding: &TokenEmbedding) -> Result<()> {
        let actual = embedding.checksum();
        if actual != self.embedding_checksum {
            return Err(Error::Incompatible(format!(
                "model was trained against embedding {} but got {}",
                self.embedding_checksum, actual
            )));
        }
        Ok(())
    }

    pub fn encoder<'a>(&'a self, embedding: &'a TokenEmbedding) -> Encoder<'a> {
        Encoder::new(embedding, &self.frequent_types, &self.mask)
    }

    /// Inconsistency probability of every pair, in input order.
    pub fn predict(&self, embedding: &TokenEmbedding, pairs: &[NameValuePair]) -> Result<Vec<f64>> {
        self.check_embedding(embedding)?;
        let mut enc = self.encoder(embedding);
        let bundles: Vec<FeatureBundle> = pairs.iter().map(|p| enc.encode(p)).collect();
        predict_bundles(&self.params, &bundles)
    }
}

/// Feature assembly with a per-name embedding cache.
pub struct Encoder<'a> {
    embedding: &'a TokenEmbedding,
    frequent_types: &'a [String],
    mask: &'a ComponentMask,
    names: HashMap<String, Vec<f64>>,
}

impl<'a> Encoder<'a> {
    pub fn new(embedding: &'a TokenEmbedding, frequent_types: &'a [String], mask: &'a ComponentMask) -> Self {
        Encoder {
            embedding,
            frequent_types,
            mask,
            names: HashMap::new(),
        }
    }

    pub fn encode(&mut self, pair: &NameValuePair) -> FeatureBundle {
        let vec = self
            .names
            .entry(pair.name.clone())
            .or_insert_with(|| self.embedding.embed_name(&pair.name))
            .clone();
        assemble_with_name_vec(pair, vec, self.frequent_types, self.mask)
    }
}

pub fn predict_bundles(params: &Params, bundles: &[FeatureBundle]) -> Result<Vec<f64>> {
    let cache = BatchCache::new(params);
    bundles
        .iter()
        .map(|b| forward(params, &cache, b, Dropout::Off).map(|t| t.prob))
        .collect()
}

struct Adam {
    m: Vec<f64>,
    v: Vec<f64>,
    step: i32,
}

impl Adam {
    fn new(n: usize) -> Self {
        Adam {
            m: vec![0.0; n],
            v: vec![0.0; n],
            step: 0,
        }
    }

    fn update(&mut self, params: &mut [f64], grad: &[f64], cfg: &TrainConfig) {
        self.step += 1;
        let c1 = 1.0 - cfg.beta1.powi(self.step);
        let c2 = 1.0 - cfg.beta2.powi(self.step);
        let lr = cfg.learning_rate * c2.sqrt() / c1;
        for i in 0..params.len() {
            let g = grad[i];
            self.m[i] = cfg.beta1 * self.m[i] + (1.0 - cfg.beta1) * g;
            self.v[i] = cfg.beta2 * self.v[i] + (1.0 - cfg.beta2) * g * g;
            params[i] -= lr * self.m[i] / (self.v[i].sqrt() + cfg.adam_eps);
        }
    }
}

/// Storage-order independent ordering key of a labeled example.
fn canonical_key(e: &LabeledExample) -> impl Ord + '_ {
    let p = &e.pair;
    (
        &p.name,
        &p.repr,
        &p.type_name,
        p.len,
        p.shape.as_deref(),
        e.label,
        e.origin,
        &p.origin,
    )
}

/// Trains a fresh model. The training set is put into a canonical order
/// before the seeded per-epoch shuffles, so the result does not depend on
/// how the examples were stored.
pub fn train_model(
    config: &TrainConfig,
    train: &[LabeledExample],
    valid: &[LabeledExample],
    embedding: &TokenEmbedding,
    frequent_types: &[String],
) -> Result<(Model, TrainHistory)> {
    if train.is_empty() || valid.is_empty() {
        return Err(Error::Dataset("training and validation sets must be nonempty".into()));
    }
    let positives = train.iter().filter(|e| !e.label.is_inconsistent()).count();
    if positives == 0 || positives == train.len() {
        return Err(Error::Dataset("training set needs both labels".into()));
    }
    if config.batch_size == 0 {
        return Err(Error::InvalidArgument("batch size must be at least 1".into()));
    }
    if !(0.0..1.0).contains(&config.dropout) {
        return Err(Error::InvalidArgument(format!("dropout {} outside [0, 1)", config.dropout)));
    }
    let mut hyper = config.hyper;
    hyper.name_dim = embedding.dim();
    if hyper.kernel == 0 || hyper.kernel > hyper.max_len {
        return Err(Error::InvalidArgument("kernel wider than the value window".into()));
    }

    let mut ordered: Vec<&LabeledExample> = train.iter().collect();
    ordered.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));

    let mut enc = Encoder::new(embedding, frequent_types, &config.mask);
    let train_x: Vec<FeatureBundle> = ordered.iter().map(|e| enc.encode(&e.pair)).collect();
    let train_y: Vec<f64> = ordered.iter().map(|e| e.label.target()).collect();
    let valid_x: Vec<FeatureBundle> = valid.iter().map(|e| enc.encode(&e.pair)).collect();
    let valid_y: Vec<bool> = valid.iter().map(|e| e.label.is_inconsistent()).collect();

    let mut params = Params::init(hyper, config.seed);
    let mut adam = Adam::new(params.data.len());
    let mut acc = GradAccum::new(&params.layout);
    let mut best: Option<(usize, f64, Params)> = None;
    let mut history = Vec::with_capacity(config.epochs);

    for epoch in 0..config.epochs {
        let mut order: Vec<usize> = (0..train_x.len()).collect();
        order.shuffle(&mut rng::stream(config.seed, &[0x5EED, epoch as u64]));
        let mut drop_rng = rng::stream(config.seed, &[0xD509, epoch as u64]);
        let mut loss_sum = 0.0;

        for batch in order.chunks(config.batch_size) {
            let cache = BatchCache::new(&params);
            acc.zero();
            let scale = 1.0 / batch.len() as f64;
            for &i in batch {
                let dropout = if config.dropout > 0.0 {
                    Dropout::Sample {
                        rate: config.dropout,
                        rng: &mut drop_rng,
                    }
                } else {
                    Dropout::Off
                };
                let tape = forward(&params, &cache, &train_x[i], dropout)?;
                loss_sum += bce_with_logit(tape.logit, train_y[i]);
                backward(&params, &train_x[i], &tape, (tape.prob - train_y[i]) * scale, &mut acc);
            }
            acc.finish(&params);
            adam.update(&mut params.data, &acc.grad, config);
        }
        if !params.is_finite() {
            return Err(Error::NonFinite { layer: "parameters" });
        }

        let probs = predict_bundles(&params, &valid_x)?;
        let valid_loss = probs
            .iter()
            .zip(&valid_y)
            .map(|(&p, &y)| {
                let p = p.clamp(1e-12, 1.0 - 1e-12);
                if y {
                    -p.ln()
                } else {
                    -(1.0 - p).ln()
                }
            })
            .sum::<f64>()
            / probs.len() as f64;
        let metrics = prf_metrics(&probs, &valid_y, config.threshold)?;
        let f1 = metrics.f1.unwrap_or(0.0);
        let stats = EpochStats {
            epoch: epoch + 1,
            train_loss: loss_sum / train_x.len() as f64,
            valid_loss,
            valid: metrics,
        };
        log::info!(
            "epoch {:>2}: train loss {:.4}, valid loss {:.4}, valid F1 {:.4}",
            stats.epoch,
            stats.train_loss,
            stats.valid_loss,
            f1
        );
        history.push(stats);
        if best.as_ref().is_none_or(|(_, b, _)| f1 > *b) {
            best = Some((epoch + 1, f1, params.clone()));
        }
    }

    let (best_epoch, best_valid_f1, best_params) = match best {
        Some(b) => b,
        None => (0, 0.0, params),
    };
    let model = Model {
        params: best_params,
        frequent_types: frequent_types.to_vec(),
        mask: config.mask.clone(),
        embedding_checksum: embedding.checksum(),
        config: TrainConfig {
            hyper,
            ..config.clone()
        },
    };
    let history = TrainHistory {
        epochs: history,
        best_epoch,
        best_valid_f1,
    };
    Ok((model, history))
}
