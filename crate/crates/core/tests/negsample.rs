mod common;

use std::collections::HashMap;

use nvcheck_core::corpus::{split_dataset, DatasetSplit, MergeConfig, NameValuePair};
use nvcheck_core::negsample::{
    build_labeled_dataset, generate_negative_random, ExampleOrigin, Label, SampleConfig, SampleSource, SourceScope,
    Strategy,
};
use nvcheck_core::pipeline::clean_corpus;
use nvcheck_core::rng;

fn desk_split() -> DatasetSplit {
    let (pairs, _) = clean_corpus(&common::trace_files(), &MergeConfig::default());
    split_dataset(pairs, 1000, 0.8, 4).unwrap()
}

fn share(pairs: &[NameValuePair], name: &str, ty: &str) -> f64 {
    let named: Vec<_> = pairs.iter().filter(|p| p.name == name).collect();
    named.iter().filter(|p| p.type_name == ty).count() as f64 / named.len() as f64
}

#[test]
fn every_positive_is_followed_by_its_negative() {
    let split = desk_split();
    let data = build_labeled_dataset(&split, &SampleConfig { seed: 2, ..Default::default() }).unwrap();
    for ((_, part), positives) in data.parts().iter().zip([&split.train, &split.valid, &split.test]) {
        assert_eq!(part.len(), 2 * positives.len());
        for (chunk, pos) in part.chunks(2).zip(positives.iter()) {
            assert_eq!((chunk[0].label, chunk[0].origin), (Label::Consistent, ExampleOrigin::Observed));
            assert_eq!((chunk[1].label, chunk[1].origin), (Label::Inconsistent, ExampleOrigin::TypeGuided));
            assert_eq!(&chunk[0].pair, pos);
            assert_eq!(chunk[1].pair.name, pos.name);
            assert_eq!(chunk[1].pair.origin, pos.origin);
            assert!(chunk[1].generation_seed.is_some());
        }
    }
}

#[test]
fn negative_values_come_verbatim_from_training_positives_of_a_rare_type() {
    let split = desk_split();
    let data = build_labeled_dataset(&split, &SampleConfig { seed: 2, ..Default::default() }).unwrap();
    let mut by_type: HashMap<&str, Vec<&NameValuePair>> = HashMap::new();
    for p in &split.train {
        by_type.entry(&p.type_name).or_default().push(p);
    }
    let mut fallbacks = 0;
    for (_, part) in data.parts() {
        for neg in part.iter().filter(|e| e.label == Label::Inconsistent) {
            let n = &neg.pair;
            let donors = &by_type[n.type_name.as_str()];
            assert!(
                donors.iter().any(|d| d.repr == n.repr && d.len == n.len && d.shape == n.shape),
                "{} = {} has no donor",
                n.name,
                n.repr
            );
            if split.train.iter().any(|p| p.name == n.name) && share(&split.train, &n.name, &n.type_name) > 0.03 {
                fallbacks += 1;
            }
        }
    }
    // only names whose every type is common fall back to the least common one
    assert!(fallbacks * 100 < split.len(), "{fallbacks} fallbacks");
}

#[test]
fn global_scope_draws_from_all_splits() {
    let split = desk_split();
    let train_only = build_labeled_dataset(&split, &SampleConfig { seed: 2, ..Default::default() }).unwrap();
    let global = build_labeled_dataset(
        &split,
        &SampleConfig { seed: 2, scope: SourceScope::Global, ..Default::default() },
    )
    .unwrap();
    assert_ne!(train_only.test, global.test);
    let train_reprs: std::collections::HashSet<&str> = split.train.iter().map(|p| p.repr.as_str()).collect();
    let foreign = global
        .test
        .iter()
        .chain(&global.train)
        .filter(|e| e.label == Label::Inconsistent && !train_reprs.contains(e.pair.repr.as_str()))
        .count();
    assert!(foreign > 0);
}

#[test]
fn labeling_is_deterministic_per_seed_and_strategy() {
    let split = desk_split();
    let cfg = SampleConfig { seed: 8, ..Default::default() };
    let a = build_labeled_dataset(&split, &cfg).unwrap();
    let b = build_labeled_dataset(&split, &cfg).unwrap();
    let c = build_labeled_dataset(&split, &SampleConfig { seed: 9, ..cfg }).unwrap();
    let r = build_labeled_dataset(&split, &SampleConfig { strategy: Strategy::Random, ..cfg }).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.train, c.train);
    assert!(r.train.iter().filter(|e| e.label == Label::Inconsistent).all(|e| e.origin == ExampleOrigin::Random));
    let positives = |d: &nvcheck_core::negsample::LabeledSplit| -> Vec<NameValuePair> {
        d.train.iter().filter(|e| e.label == Label::Consistent).map(|e| e.pair.clone()).collect()
    };
    assert_eq!(positives(&a), positives(&r));
}

#[test]
fn random_negatives_never_donate_to_themselves() {
    let pairs: Vec<NameValuePair> = (0..3).map(|i| common::pair("counter", &i.to_string(), "int")).collect();
    let source = SampleSource::new(&pairs);
    for seed in 0..300 {
        let mut r = rng::stream(seed, &[]);
        let own = (seed % 3) as usize;
        let neg = generate_negative_random(&pairs[own], Some(own), &source, &mut r).unwrap();
        assert_ne!(neg.pair.repr, pairs[own].repr);
    }
    let single = vec![common::pair("counter", "1", "int")];
    let mut r = rng::stream(0, &[]);
    assert!(generate_negative_random(&single[0], Some(0), &SampleSource::new(&single), &mut r).is_err());
}
