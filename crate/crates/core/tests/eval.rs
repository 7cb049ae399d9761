mod common;

use nvcheck_core::corpus::{split_dataset, MergeConfig};
use nvcheck_core::embed::EmbedConfig;
use nvcheck_core::eval::{
    compare_neg_strategies, default_thresholds, prf_metrics, run_ablation, threshold_sweep,
};
use nvcheck_core::checksum::digest_items;
use nvcheck_core::model::{Component, ComponentMask, TrainConfig};
use nvcheck_core::negsample::{build_labeled_dataset, SampleConfig};
use nvcheck_core::pipeline::{clean_corpus, embed_sources};
use proptest::prelude::*;

fn arb_scores() -> impl Strategy<Value = Vec<(f64, bool)>> {
    prop::collection::vec(((0u32..=20).prop_map(|k| k as f64 / 20.0), any::<bool>()), 1..120)
}

proptest! {
    #[test]
    fn warnings_never_increase_with_the_threshold(items in arb_scores()) {
        let (scores, labels): (Vec<f64>, Vec<bool>) = items.into_iter().unzip();
        let sweep = threshold_sweep(&scores, &labels, &default_thresholds()).unwrap();
        for w in sweep.points.windows(2) {
            prop_assert!(w[0].threshold < w[1].threshold);
            prop_assert!(w[0].warnings() >= w[1].warnings());
            prop_assert!(w[0].tp >= w[1].tp);
        }
        for p in &sweep.points {
            prop_assert_eq!(p.tp + p.fp + p.fn_ + p.tn, scores.len());
            prop_assert_eq!(p.precision.is_none(), p.warnings() == 0);
            if let (Some(pr), Some(re), Some(f)) = (p.precision, p.recall, p.f1) {
                if pr + re > 0.0 {
                    prop_assert!((f - 2.0 * pr * re / (pr + re)).abs() < 1e-12);
                }
            }
        }
        if let Some(b) = sweep.best {
            let best = sweep.points[b].f1.unwrap();
            prop_assert!(sweep.points.iter().all(|p| p.f1.unwrap_or(0.0) <= best));
            prop_assert!(sweep.points[..b].iter().all(|p| p.f1.is_none_or(|f| f < best)));
        }
    }
}

#[test]
fn empty_warning_set_has_no_precision() {
    let m = prf_metrics(&[0.1, 0.2], &[true, false], 0.5).unwrap();
    assert_eq!((m.tp, m.fp, m.fn_, m.tn), (0, 0, 1, 1));
    assert_eq!(m.precision, None);
    assert_eq!(m.recall, Some(0.0));
    assert_eq!(m.f1, None);
    assert!(prf_metrics(&[0.1], &[true, false], 0.5).is_err());
    assert!(prf_metrics(&[], &[], 0.5).is_err());
}

#[test]
fn experiments_record_seed_and_checksums() {
    let traces = common::trace_files();
    let (pairs, report) = clean_corpus(&traces[..50], &MergeConfig::default());
    let split = split_dataset(pairs, 150, 0.8, 6).unwrap();
    let (emb, _) = embed_sources(&common::program_files()[..50], &EmbedConfig { dim: 8, epochs: 1, seed: 6, ..Default::default() }).unwrap();
    let train = TrainConfig { epochs: 1, seed: 6, ..Default::default() };
    let sample = SampleConfig { seed: 6, ..Default::default() };

    let cmp = compare_neg_strategies(&split, &sample, &train, &emb, &report.merge.frequent).unwrap();
    assert_eq!(cmp.seed, 6);
    assert_eq!(cmp.type_guided.positives_checksum, cmp.random.positives_checksum);
    assert_eq!(cmp.type_guided.sweep.points.len(), 19);

    let data = build_labeled_dataset(&split, &sample).unwrap();
    let masks = [ComponentMask::new(), ComponentMask::from([Component::Shape])];
    let ablation = run_ablation(&train, &data, &emb, &report.merge.frequent, &masks).unwrap();
    assert_eq!(ablation.seed, 6);
    assert_eq!(ablation.dataset_checksum, digest_items(&data.train).unwrap());
    let labels: Vec<&str> = ablation.runs.iter().map(|r| r.label.as_str()).collect();
    assert_eq!(labels, ["all", "shape"]);
    assert_eq!(ablation.drop_of("all"), Some(0.0));
    assert!(ablation.runs.iter().all(|r| r.valid_f1.len() == 1));
}
