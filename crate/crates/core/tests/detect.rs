mod common;

use nvcheck_core::corpus::{merge_types_with, filter_names, split_dataset, MergeConfig, NameValuePair};
use nvcheck_core::detect::{
    apply_heuristic_filter, detect, render_report, score_pairs, suppression_reasons, Heuristic, ReportFormat,
    ScoredPair, WarningRecord,
};
use nvcheck_core::embed::EmbedConfig;
use nvcheck_core::model::TrainConfig;
use nvcheck_core::negsample::{build_labeled_dataset, SampleConfig};
use nvcheck_core::pipeline::{clean_corpus, embed_sources};
use nvcheck_core::corpus::load_traces;
use nvcheck_core::model::train_model;
use proptest::prelude::*;

const NAMES: [&str; 12] = [
    "row_count", "temp_df", "file_name", "pd_frame", "result", "x_coord", "user_names", "tmp_x",
    "__init__", "sample_rate", "weights", "password_text",
];

fn scored(items: &[(usize, f64, u32)]) -> Vec<ScoredPair> {
    items
        .iter()
        .map(|&(n, score, line)| ScoredPair {
            pair: common::at(common::pair(NAMES[n % NAMES.len()], "1", "int"), "p.py", line),
            score,
        })
        .collect()
}

fn arb_scored() -> impl Strategy<Value = Vec<(usize, f64, u32)>> {
    prop::collection::vec((0..NAMES.len(), (0u32..=20).prop_map(|k| k as f64 / 20.0), 1u32..30), 0..60)
}

proptest! {
    #[test]
    fn suppression_never_reads_the_score(items in arb_scored(), shift in 0.0f64..1.0) {
        let a = apply_heuristic_filter(scored(&items));
        let moved: Vec<_> = items.iter().map(|&(n, s, l)| (n, (s + shift) % 1.0, l)).collect();
        let b = apply_heuristic_filter(scored(&moved));
        let names = |v: &[ScoredPair]| v.iter().map(|s| s.pair.name.clone()).collect::<Vec<_>>();
        prop_assert_eq!(names(&a.kept), names(&b.kept));
        prop_assert_eq!(
            a.suppressed.iter().map(|x| x.1).collect::<Vec<_>>(),
            b.suppressed.iter().map(|x| x.1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn report_count_is_above_threshold_minus_suppressed(items in arb_scored(), k in 0u32..=20) {
        let threshold = k as f64 / 20.0;
        let d = detect(scored(&items), threshold).unwrap();
        let above = items.iter().filter(|x| x.1 >= threshold).count();
        let suppressed = items
            .iter()
            .filter(|x| x.1 >= threshold && !suppression_reasons(NAMES[x.0]).is_empty())
            .count();
        prop_assert_eq!(d.warnings.len(), above - suppressed);
        prop_assert_eq!(d.suppressed.len(), suppressed);
        prop_assert_eq!(d.below_threshold, items.len() - above);
        for (i, w) in d.warnings.iter().enumerate() {
            prop_assert_eq!(w.rank, i + 1);
            prop_assert!(w.score >= threshold && w.suppressed_by.is_none());
        }
        for pair in d.warnings.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            prop_assert!(a.score > b.score || (a.score == b.score && (&a.location, &a.pair.name) <= (&b.location, &b.pair.name)));
        }
        prop_assert!(d.suppressed.iter().all(|w| w.suppressed_by.is_some()));
    }

    #[test]
    fn heuristics_combine_as_a_disjunction(name in "[a-zA-Z_]{0,14}") {
        let reasons = suppression_reasons(&name);
        let lower = name.to_lowercase();
        let generic = ["data", "value", "result", "temp", "tmp", "str", "sample"].iter().any(|t| lower.contains(t));
        let short = name.split('_').any(|s| !s.is_empty() && s.chars().count() < 3);
        prop_assert_eq!(reasons.contains(&Heuristic::GenericTerm), generic);
        prop_assert_eq!(reasons.contains(&Heuristic::ShortSubtoken), short);
        prop_assert_eq!(reasons.is_empty(), !generic && !short);
    }
}

#[test]
fn threshold_outside_unit_interval_is_rejected() {
    assert!(detect(Vec::new(), 1.5).is_err());
    assert!(detect(Vec::new(), -0.1).is_err());
    assert!(detect(Vec::new(), f64::NAN).is_err());
}

#[test]
fn machine_report_lines_parse_back() {
    let d = detect(scored(&[(0, 0.9, 3), (2, 0.9, 1), (6, 0.7, 9)]), 0.5).unwrap();
    let text = render_report(&d.warnings, ReportFormat::Machine).unwrap();
    let records: Vec<WarningRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert_eq!((records[0].name.as_str(), records[0].line), ("file_name", 1));
    assert_eq!((records[1].name.as_str(), records[1].line), ("row_count", 3));
    assert_eq!(records[2].rank, 3);
    let human = render_report(&d.warnings, ReportFormat::Human).unwrap();
    assert_eq!(human.lines().count(), 3);
    assert!(human.contains("p.py:1"));
}

#[test]
fn golden_traces_flow_through_detection() {
    let traces = common::trace_files();
    let (pairs, report) = clean_corpus(&traces[..80], &MergeConfig::default());
    let split = split_dataset(pairs, 200, 0.8, 3).unwrap();
    let data = build_labeled_dataset(&split, &SampleConfig { seed: 3, ..Default::default() }).unwrap();
    let (emb, _) = embed_sources(&common::program_files()[..80], &EmbedConfig { dim: 16, epochs: 1, seed: 3, ..Default::default() }).unwrap();
    let config = TrainConfig { epochs: 2, seed: 3, ..Default::default() };
    let (model, _) = train_model(&config, &data.train, &data.valid, &emb, &report.merge.frequent).unwrap();

    // unseen programs, cleaned against the model's type list
    let (raw, _) = load_traces(&traces[200..]);
    let (merged, _) = merge_types_with(raw, &model.frequent_types, &MergeConfig::default());
    let (target, _): (Vec<NameValuePair>, _) = filter_names(merged);
    let scores = score_pairs(&model, &emb, &target).unwrap();
    assert_eq!(scores.len(), target.len());
    let d = detect(scores.clone(), 0.5).unwrap();
    assert_eq!(d.scored, target.len());
    assert_eq!(d.below_threshold + d.warnings.len() + d.suppressed.len(), target.len());
    assert!(!d.warnings.is_empty());
    assert!(d.warnings.iter().all(|w| suppression_reasons(&w.pair.name).is_empty()));
    assert_eq!(detect(scores, 0.5).unwrap().warnings, d.warnings);
}
