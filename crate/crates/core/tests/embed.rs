mod common;

use nvcheck_core::embed::{cosine_similarity, train_subword_embedding, EmbedConfig, TokenEmbedding};
use nvcheck_core::pipeline::embed_sources;

fn fixture_embedding() -> TokenEmbedding {
    let (emb, report) = embed_sources(&common::program_files(), &EmbedConfig { seed: 3, ..Default::default() }).unwrap();
    assert!(report.warnings.is_empty(), "{:?}", report.warnings);
    emb
}

// (name, near, far)
const TRIPLES: [(&str, &str, &str); 20] = [
    ("num_items", "item_count", "file_path"),
    ("user_age", "person_age", "learning_rate"),
    ("start_year", "end_year", "api_key"),
    ("file_name", "filename", "probability"),
    ("learning_rate", "decay_rate", "user_name"),
    ("unit_price", "total_price", "is_valid"),
    ("input_file", "output_file", "batch_size"),
    ("first_name", "last_name", "num_epochs"),
    ("user_id", "customer_id", "temperature"),
    ("batch_size", "chunk_size", "email_address"),
    ("num_epochs", "num_steps", "file_names"),
    ("base_url", "api_url", "word_counts"),
    ("is_valid", "is_active", "unit_price"),
    ("word_counts", "token_counts", "start_index"),
    ("data_dir", "output_dir", "probability"),
    ("start_index", "end_index", "greeting"),
    ("date_string", "date_str", "hidden_size"),
    ("access_token", "api_key", "row_count"),
    ("elapsed_time", "elapsed", "column_name"),
    ("precision_score", "recall_score", "user_name"),
];

#[test]
fn synonym_neighborhoods_hold_on_the_fixture_corpus() {
    let emb = fixture_embedding();
    let mut misses = Vec::new();
    for (name, near, far) in TRIPLES {
        let v = emb.embed_name(name);
        let near_sim = cosine_similarity(&v, &emb.embed_name(near)).unwrap();
        let far_sim = cosine_similarity(&v, &emb.embed_name(far)).unwrap();
        if near_sim <= far_sim {
            misses.push(format!("{name}: {near} {near_sim:.3} vs {far} {far_sim:.3}"));
        }
    }
    assert!(misses.len() <= 4, "{} of 20 triples failed: {misses:#?}", misses.len());
}

#[test]
fn embedding_is_reproducible_and_total() {
    let sequences: Vec<Vec<String>> = (0..40)
        .map(|i| ["total_count", "=", "count", "+", &format!("item_{}", i % 4)].map(String::from).to_vec())
        .collect();
    let config = EmbedConfig { dim: 12, epochs: 2, seed: 9, ..Default::default() };
    let (a, _) = train_subword_embedding(&sequences, &config).unwrap();
    let (b, _) = train_subword_embedding(&sequences, &config).unwrap();
    assert_eq!(a.to_bytes(), b.to_bytes());
    assert_eq!(a.checksum(), b.checksum());

    for name in ["", "x", "total_count", "never_seen_before", "Überlänge", "名前", "a\u{0}b", "🦀🦀"] {
        let v = a.embed_name(name);
        assert_eq!(v.len(), 12, "{name:?}");
        assert!(v.iter().all(|x| x.is_finite()), "{name:?}");
    }
}

#[test]
fn seed_changes_the_table() {
    let sequences: Vec<Vec<String>> = (0..30).map(|i| vec![format!("token_{}", i % 5), "=".into()]).collect();
    let base = EmbedConfig { dim: 8, epochs: 1, min_count: 1, ..Default::default() };
    let (a, _) = train_subword_embedding(&sequences, &EmbedConfig { seed: 1, ..base.clone() }).unwrap();
    let (b, _) = train_subword_embedding(&sequences, &EmbedConfig { seed: 2, ..base }).unwrap();
    assert_ne!(a.checksum(), b.checksum());
}

#[test]
fn saved_embedding_loads_identically() {
    let sequences: Vec<Vec<String>> = (0..30).map(|i| vec![format!("value_{}", i % 3), "=".into(), "NUM".into()]).collect();
    let (emb, _) = train_subword_embedding(&sequences, &EmbedConfig { dim: 8, epochs: 1, min_count: 1, ..Default::default() }).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.nvemb");
    emb.save(&path).unwrap();
    let back = TokenEmbedding::load(&path).unwrap();
    assert_eq!(back, emb);
    assert_eq!(back.embed_name("value_2"), emb.embed_name("value_2"));
}
