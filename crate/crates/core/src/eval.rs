//! Precision/recall/F1, threshold sweeps, ablations, and the comparison of
//! negative-example strategies.
//!
//! A pair is a warning when its score is at or above the threshold.
//! Precision over an empty warning set is undefined and reported as `None`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::checksum::digest_items;
use crate::corpus::DatasetSplit;
use crate::embed::TokenEmbedding;
use crate::error::{Error, Result};
use crate::model::{train_model, Component, ComponentMask, Model, TrainConfig, TrainHistory};
use crate::negsample::{build_labeled_dataset, LabeledExample, LabeledSplit, SampleConfig, Strategy};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsPoint {
    pub threshold: f64,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: Option<f64>,
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tn: usize,
}

impl MetricsPoint {
    pub fn warnings(&self) -> usize {
        self.tp + self.fp
    }
}

/// `labels[i]` is true for inconsistent pairs.
pub fn prf_metrics(scores: &[f64], labels: &[bool], threshold: f64) -> Result<MetricsPoint> {
    if scores.len() != labels.len() {
        return Err(Error::InvalidArgument(format!(
            "need equally many scores and labels, got {} and {}",
            scores.len(),
            labels.len()
        )));
    }
    if scores.is_empty() {
        return Err(Error::InvalidArgument("no scores to evaluate".into()));
    }
    let (mut tp, mut fp, mut fn_, mut tn) = (0, 0, 0, 0);
    for (&s, &inconsistent) in scores.iter().zip(labels) {
        match (s >= threshold, inconsistent) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, true) => fn_ += 1,
            (false, false) => tn += 1,
        }
    }
    let ratio = |num: usize, den: usize| (den > 0).then(|| num as f64 / den as f64);
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, tp + fn_);
    // harmonic mean of precision and recall, from the counts
    let f1 = match (precision, recall) {
        (Some(_), Some(_)) => ratio(2 * tp, 2 * tp + fp + fn_),
        _ => None,
    };
    Ok(MetricsPoint {
        threshold,
        precision,
        recall,
        f1,
        tp,
        fp,
        fn_,
        tn,
    })
}

/// 0.05, 0.10, …, 0.95.
pub fn default_thresholds() -> Vec<f64> {
    (1..20).map(|i| i as f64 / 20.0).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub points: Vec<MetricsPoint>,
    /// Index into `points` of the best F1; ties go to the lower threshold.
    pub best: Option<usize>,
}

impl Sweep {
    pub fn best_point(&self) -> Option<&MetricsPoint> {
        self.best.map(|i| &self.points[i])
    }

    pub fn best_f1(&self) -> f64 {
        self.best_point().and_then(|p| p.f1).unwrap_or(0.0)
    }

    /// Tab-separated `threshold precision recall f1` table; undefined values
    /// are written as `NA`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("threshold\tprecision\trecall\tf1\n");
        let cell = |v: Option<f64>| v.map_or("NA".to_string(), |x| format!("{x:.6}"));
        for p in &self.points {
            let _ = writeln!(
                out,
                "{:.2}\t{}\t{}\t{}",
                p.threshold,
                cell(p.precision),
                cell(p.recall),
                cell(p.f1)
            );
        }
        out
    }
}

pub fn threshold_sweep(scores: &[f64], labels: &[bool], thresholds: &[f64]) -> Result<Sweep> {
    let mut sorted = thresholds.to_vec();
    sorted.sort_by(f64::total_cmp);
    let points = sorted
        .iter()
        .map(|&t| prf_metrics(scores, labels, t))
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<usize> = None;
    for (i, p) in points.iter().enumerate() {
        if let Some(f) = p.f1 {
            if best.is_none_or(|b| f > points[b].f1.unwrap_or(f64::NEG_INFINITY)) {
                best = Some(i);
            }
        }
    }
    Ok(Sweep { points, best })
}

fn labels_of(examples: &[LabeledExample]) -> Vec<bool> {
    examples.iter().map(|e| e.label.is_inconsistent()).collect()
}

/// Scores a labeled set with a trained model and sweeps thresholds.
pub fn evaluate(model: &Model, embedding: &TokenEmbedding, examples: &[LabeledExample]) -> Result<Sweep> {
    let pairs: Vec<_> = examples.iter().map(|e| e.pair.clone()).collect();
    let scores = model.predict(embedding, &pairs)?;
    threshold_sweep(&scores, &labels_of(examples), &default_thresholds())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AblationRun {
    /// `all` for the unmasked baseline, otherwise the masked components
    /// joined with `+`.
    pub label: String,
    pub mask: ComponentMask,
    pub valid_f1: Vec<f64>,
    pub best_valid_f1: f64,
    pub test_best_f1: f64,
    pub history: TrainHistory,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AblationReport {
    pub seed: u64,
    pub dataset_checksum: String,
    pub runs: Vec<AblationRun>,
}

impl AblationReport {
    pub fn run(&self, label: &str) -> Option<&AblationRun> {
        self.runs.iter().find(|r| r.label == label)
    }

    /// Drop of the best validation F1 relative to the unmasked run.
    pub fn drop_of(&self, label: &str) -> Option<f64> {
        Some(self.run("all")?.best_valid_f1 - self.run(label)?.best_valid_f1)
    }
}

/// The unmasked baseline, every single component, and type together with
/// the value string.
pub fn ablation_masks() -> Vec<ComponentMask> {
    let mut masks = vec![ComponentMask::new()];
    masks.extend(Component::ALL.iter().map(|&c| ComponentMask::from([c])));
    masks.push(ComponentMask::from([Component::Type, Component::ValueString]));
    masks
}

pub fn mask_label(mask: &ComponentMask) -> String {
    if mask.is_empty() {
        "all".into()
    } else {
        mask.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("+")
    }
}

/// Retrains from scratch once per mask with otherwise identical settings.
pub fn run_ablation(
    base: &TrainConfig,
    data: &LabeledSplit,
    embedding: &TokenEmbedding,
    frequent_types: &[String],
    masks: &[ComponentMask],
) -> Result<AblationReport> {
    let mut runs = Vec::with_capacity(masks.len());
    for mask in masks {
        let config = TrainConfig {
            mask: mask.clone(),
            ..base.clone()
        };
        let label = mask_label(mask);
        log::info!("ablation run {label}");
        let (model, history) = train_model(&config, &data.train, &data.valid, embedding, frequent_types)?;
        let test_best_f1 = evaluate(&model, embedding, &data.test)?.best_f1();
        runs.push(AblationRun {
            label,
            mask: mask.clone(),
            valid_f1: history.valid_f1_curve(),
            best_valid_f1: history.best_valid_f1,
            test_best_f1,
            history,
        });
    }
    Ok(AblationReport {
        seed: base.seed,
        dataset_checksum: digest_items(&data.train)?,
        runs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyRun {
    pub strategy: Strategy,
    pub positives_checksum: String,
    pub sweep: Sweep,
    pub best_f1: f64,
    pub history: TrainHistory,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyComparison {
    pub seed: u64,
    pub type_guided: StrategyRun,
    pub random: StrategyRun,
}

fn positives_checksum(data: &LabeledSplit) -> Result<String> {
    let positives: Vec<_> = data
        .train
        .iter()
        .chain(&data.valid)
        .chain(&data.test)
        .filter(|e| !e.label.is_inconsistent())
        .map(|e| &e.pair)
        .collect();
    digest_items(&positives)
}

/// Trains and evaluates once per negative-example strategy on the same
/// positives and seed. Each model is evaluated on the held-out split
/// labeled with its own strategy.
pub fn compare_neg_strategies(
    split: &DatasetSplit,
    sample: &SampleConfig,
    train: &TrainConfig,
    embedding: &TokenEmbedding,
    frequent_types: &[String],
) -> Result<StrategyComparison> {
    let run = |strategy: Strategy| -> Result<StrategyRun> {
        let data = build_labeled_dataset(split, &SampleConfig { strategy, ..*sample })?;
        log::info!("strategy run {strategy:?}");
        let (model, history) = train_model(train, &data.train, &data.valid, embedding, frequent_types)?;
        let sweep = evaluate(&model, embedding, &data.test)?;
        Ok(StrategyRun {
            strategy,
            positives_checksum: positives_checksum(&data)?,
            best_f1: sweep.best_f1(),
            sweep,
            history,
        })
    };
    Ok(StrategyComparison {
        seed: sample.seed,
        type_guided: run(Strategy::TypeGuided)?,
        random: run(Strategy::Random)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perfect_predictions() {
        let m = prf_metrics(&[0.9, 0.1, 0.8, 0.2], &[true, false, true, false], 0.5).unwrap();
        assert_eq!((m.precision, m.recall, m.f1), (Some(1.0), Some(1.0), Some(1.0)));
        assert_eq!((m.tp, m.fp, m.fn_, m.tn), (2, 0, 0, 2));
    }

    #[test]
    fn no_warnings_means_undefined_precision() {
        let m = prf_metrics(&[0.1, 0.2], &[true, false], 0.5).unwrap();
        assert_eq!(m.precision, None);
        assert_eq!(m.recall, Some(0.0));
        assert_eq!(m.f1, None);
    }

    #[test]
    fn threshold_is_inclusive() {
        let m = prf_metrics(&[0.5, 0.49], &[true, true], 0.5).unwrap();
        assert_eq!((m.tp, m.fn_), (1, 1));
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        assert!(prf_metrics(&[0.5], &[true, false], 0.5).is_err());
        assert!(prf_metrics(&[], &[], 0.5).is_err());
    }

    #[test]
    fn grid_is_exact() {
        let g = default_thresholds();
        assert_eq!(g.len(), 19);
        assert_eq!(g[0], 0.05);
        assert_eq!(g[7], 0.4);
        assert_eq!(g[9], 0.5);
        assert_eq!(g[18], 0.95);
    }

    #[test]
    fn best_f1_ties_go_to_lower_threshold() {
        // every threshold in (0.2, 0.8] separates perfectly
        let scores = [0.9, 0.85, 0.1, 0.2];
        let labels = [true, true, false, false];
        let s = threshold_sweep(&scores, &labels, &default_thresholds()).unwrap();
        let best = s.best_point().unwrap();
        assert_eq!(best.f1, Some(1.0));
        assert_eq!(best.threshold, 0.25);
    }

    #[test]
    fn constant_scores_give_two_regimes() {
        let scores = [0.3; 6];
        let labels = [true, false, true, false, true, true];
        let s = threshold_sweep(&scores, &labels, &default_thresholds()).unwrap();
        let below: Vec<_> = s.points.iter().filter(|p| p.threshold <= 0.3).collect();
        let above: Vec<_> = s.points.iter().filter(|p| p.threshold > 0.3).collect();
        assert!(below.windows(2).all(|w| (w[0].tp, w[0].fp) == (w[1].tp, w[1].fp)));
        assert!(above.iter().all(|p| p.warnings() == 0 && p.precision.is_none()));
    }

    #[test]
    fn tsv_table() {
        let s = threshold_sweep(&[0.9, 0.1], &[true, false], &[0.5, 0.95]).unwrap();
        let tsv = s.to_tsv();
        let lines: Vec<_> = tsv.lines().collect();
        assert_eq!(lines[0], "threshold\tprecision\trecall\tf1");
        assert_eq!(lines[1], "0.50\t1.000000\t1.000000\t1.000000");
        assert_eq!(lines[2], "0.95\tNA\t0.000000\tNA");
    }

    #[test]
    fn ablation_mask_labels() {
        let labels: Vec<_> = ablation_masks().iter().map(mask_label).collect();
        assert_eq!(
            labels,
            ["all", "name", "value_string", "type", "length", "shape", "value_string+type"]
        );
    }

    proptest! {
        #[test]
        fn warnings_shrink_as_threshold_grows(
            data in proptest::collection::vec((0.0f64..1.0, any::<bool>()), 1..200)
        ) {
            let (scores, labels): (Vec<f64>, Vec<bool>) = data.into_iter().unzip();
            let s = threshold_sweep(&scores, &labels, &default_thresholds()).unwrap();
            for w in s.points.windows(2) {
                prop_assert!(w[1].warnings() <= w[0].warnings());
                prop_assert!(w[1].recall <= w[0].recall);
            }
            for p in &s.points {
                prop_assert_eq!(p.tp + p.fp + p.fn_ + p.tn, scores.len());
                if let (Some(pr), Some(rc), Some(f)) = (p.precision, p.recall, p.f1) {
                    if pr + rc > 0.0 {
                        prop_assert!((f - 2.0 * pr * rc / (pr + rc)).abs() < 1e-12);
                    }
                }
            }
        }
    }
}
