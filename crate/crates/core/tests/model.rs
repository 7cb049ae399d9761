mod common;

use nvcheck_core::corpus::NameValuePair;
use nvcheck_core::embed::{train_subword_embedding, EmbedConfig, TokenEmbedding};
use nvcheck_core::model::{train_model, Component, ComponentMask, Model, TrainConfig};
use nvcheck_core::negsample::{ExampleOrigin, Label, LabeledExample};
use rand::seq::SliceRandom;

fn embedding(seed: u64) -> TokenEmbedding {
    let sequences: Vec<Vec<String>> = (0..60)
        .map(|i| {
            let name = ["row_count", "file_name", "ratio_value", "user_names"][i % 4];
            vec![name.to_string(), "=".into(), ["NUM", "STR", "NUM", "["][i % 4].into()]
        })
        .collect();
    let config = EmbedConfig { dim: 8, epochs: 1, min_count: 1, seed, ..Default::default() };
    train_subword_embedding(&sequences, &config).unwrap().0
}

fn example(name: &str, repr: &str, ty: &str, len: Option<u64>, label: Label) -> LabeledExample {
    let mut pair = common::pair(name, repr, ty);
    pair.len = len;
    pair.shape = len.map(|l| vec![l]);
    LabeledExample {
        pair,
        label,
        origin: if label == Label::Consistent { ExampleOrigin::Observed } else { ExampleOrigin::TypeGuided },
        generation_seed: None,
    }
}

fn dataset(n: usize) -> Vec<LabeledExample> {
    (0..n)
        .flat_map(|i| {
            let count = example("row_count", &i.to_string(), "int", None, Label::Consistent);
            let path = format!("'data/file_{i}.csv'");
            let file = example("file_name", &path, "str", Some(path.len() as u64 - 2), Label::Consistent);
            let bad = if i % 2 == 0 {
                example("row_count", &path, "str", Some(path.len() as u64 - 2), Label::Inconsistent)
            } else {
                example("file_name", &format!("{i}.5"), "float", None, Label::Inconsistent)
            };
            [count, file, bad]
        })
        .collect()
}

fn frequent() -> Vec<String> {
    ["int", "str", "float"].map(String::from).to_vec()
}

fn small_config() -> TrainConfig {
    TrainConfig { epochs: 2, batch_size: 16, seed: 5, ..Default::default() }
}

#[test]
fn metrics_do_not_depend_on_training_set_storage_order() {
    let emb = embedding(1);
    let train = dataset(40);
    let valid = dataset(10);
    let mut shuffled = train.clone();
    shuffled.shuffle(&mut nvcheck_core::rng::stream(77, &[]));
    assert_ne!(shuffled, train);
    let (a, ha) = train_model(&small_config(), &train, &valid, &emb, &frequent()).unwrap();
    let (b, hb) = train_model(&small_config(), &shuffled, &valid, &emb, &frequent()).unwrap();
    assert_eq!(ha, hb);
    assert_eq!(a.params, b.params);
}

#[test]
fn training_is_deterministic_and_seeded() {
    let emb = embedding(1);
    let train = dataset(30);
    let valid = dataset(8);
    let (a, ha) = train_model(&small_config(), &train, &valid, &emb, &frequent()).unwrap();
    let (b, hb) = train_model(&small_config(), &train, &valid, &emb, &frequent()).unwrap();
    let (c, _) = train_model(&TrainConfig { seed: 6, ..small_config() }, &train, &valid, &emb, &frequent()).unwrap();
    assert_eq!(a.to_bytes().unwrap(), b.to_bytes().unwrap());
    assert_eq!(ha, hb);
    assert_ne!(a.params, c.params);
    assert_eq!(ha.epochs.len(), 2);
    assert!((1..=2).contains(&ha.best_epoch));
}

#[test]
fn prediction_ignores_a_masked_component() {
    let emb = embedding(1);
    let train = dataset(20);
    let valid = dataset(6);
    let vary = |p: &NameValuePair, c: Component| -> NameValuePair {
        let mut q = p.clone();
        match c {
            Component::Name => q.name = "completely_different".into(),
            Component::ValueString => q.repr = "{'k': [1, 2, 3]}".into(),
            Component::Type => q.type_name = "float".into(),
            Component::Length => q.len = Some(5000),
            Component::Shape => q.shape = Some(vec![40, 40]),
        }
        q
    };
    let probe = example("row_count", "[1, 2, 3]", "str", Some(3), Label::Consistent).pair;
    for c in Component::ALL {
        let mask: ComponentMask = [c].into();
        let (model, _) = train_model(&TrainConfig { mask, ..small_config() }, &train, &valid, &emb, &frequent()).unwrap();
        let scores = model.predict(&emb, &[probe.clone(), vary(&probe, c)]).unwrap();
        assert_eq!(scores[0], scores[1], "{c:?}");
    }
    let (unmasked, _) = train_model(&small_config(), &train, &valid, &emb, &frequent()).unwrap();
    let differs = Component::ALL.iter().filter(|&&c| {
        let s = unmasked.predict(&emb, &[probe.clone(), vary(&probe, c)]).unwrap();
        s[0] != s[1]
    });
    assert_eq!(differs.count(), 5);
}

#[test]
fn prediction_is_deterministic_and_bounded() {
    let emb = embedding(1);
    let (model, _) = train_model(&small_config(), &dataset(20), &dataset(5), &emb, &frequent()).unwrap();
    let pairs: Vec<NameValuePair> = dataset(5).into_iter().map(|e| e.pair).collect();
    let a = model.predict(&emb, &pairs).unwrap();
    let b = model.predict(&emb, &pairs).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().all(|s| (0.0..=1.0).contains(s)));
}

#[test]
fn checkpoint_round_trips_and_refuses_mismatches() {
    let emb = embedding(1);
    let (model, _) = train_model(&small_config(), &dataset(15), &dataset(5), &emb, &frequent()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.nvmodel");
    model.save(&path).unwrap();

    let back = Model::load_for(&path, &emb).unwrap();
    assert_eq!(back.to_bytes().unwrap(), model.to_bytes().unwrap());
    assert_eq!(back.frequent_types, model.frequent_types);
    let pairs: Vec<NameValuePair> = dataset(3).into_iter().map(|e| e.pair).collect();
    assert_eq!(back.predict(&emb, &pairs).unwrap(), model.predict(&emb, &pairs).unwrap());

    let other = embedding(2);
    assert!(Model::load_for(&path, &other).is_err());
    assert!(model.predict(&other, &pairs).is_err());

    let bytes = model.to_bytes().unwrap();
    let mut bad_magic = bytes.clone();
    bad_magic[0] ^= 0xff;
    assert!(Model::from_bytes(&bad_magic).is_err());
    let mut bad_version = bytes.clone();
    bad_version[8] = 99;
    assert!(Model::from_bytes(&bad_version).is_err());
    assert!(Model::from_bytes(&bytes[..bytes.len() - 8]).is_err());
    assert!(Model::from_bytes(&[]).is_err());
}

#[test]
fn training_rejects_degenerate_inputs() {
    let emb = embedding(1);
    let data = dataset(5);
    let positives: Vec<_> = data.iter().filter(|e| e.label == Label::Consistent).cloned().collect();
    assert!(train_model(&small_config(), &positives, &data, &emb, &frequent()).is_err());
    assert!(train_model(&small_config(), &data, &[], &emb, &frequent()).is_err());
    assert!(train_model(&TrainConfig { batch_size: 0, ..small_config() }, &data, &data, &emb, &frequent()).is_err());
    assert!(train_model(&TrainConfig { dropout: 1.0, ..small_config() }, &data, &data, &emb, &frequent()).is_err());
}
