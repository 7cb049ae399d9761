mod common;

use std::collections::{BTreeMap, HashSet};
use std::io::BufRead;

use nvcheck_core::corpus::{
    filter_names, load_traces, merge_types, merge_types_with, read_split, split_dataset, type_frequencies, write_split, MergeConfig,
};
use nvcheck_core::pipeline::clean_corpus;
use nvcheck_core::trace::TraceRecord;

#[test]
fn golden_traces_parse_and_sequence_from_zero() {
    let files = common::trace_files();
    assert!(files.len() >= 200);
    let mut total = 0;
    for path in &files {
        let reader = std::io::BufReader::new(std::fs::File::open(path).unwrap());
        for (expected_seq, line) in reader.lines().enumerate() {
            let record = TraceRecord::parse_line(&line.unwrap()).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(record.seq, expected_seq as u64, "{}", path.display());
            assert!(record.repr.chars().count() <= 1000);
            total += 1;
        }
    }
    let (pairs, report) = load_traces(&files);
    assert_eq!(report.records, total);
    assert_eq!(pairs.len(), total);
    assert_eq!((report.malformed, report.seq_violations), (0, 0));
    assert!(report.unreadable.is_empty());
}

#[test]
fn loader_skips_bad_lines_and_keeps_the_rest() {
    let dir = tempfile::tempdir().unwrap();
    let good = r#"{"name":"count","repr":"3","type":"int","bases":["object"],"len":null,"shape":null,"file":"a.py","line":1,"seq":0}"#;
    let extra_field = r#"{"name":"count","repr":"3","type":"int","bases":[],"len":null,"shape":null,"file":"a.py","line":2,"seq":1,"extra":1}"#;
    let later = good.replace("\"seq\":0", "\"seq\":2").replace("\"line\":1", "\"line\":3");
    let path = dir.path().join("t.jsonl");
    std::fs::write(&path, format!("{good}\nnot json\n{extra_field}\n{later}\n")).unwrap();
    let missing = dir.path().join("missing.jsonl");
    let (pairs, report) = load_traces(&[path.clone(), missing]);
    assert_eq!(pairs.len(), 2);
    assert_eq!(report.malformed, 2);
    assert_eq!(report.unreadable.len(), 1);
    assert_eq!(pairs[1].origin.line, 3);
}

#[test]
fn cleaning_merges_before_filtering_and_counts_merged_types() {
    let (raw, _) = load_traces(&common::trace_files());
    let (pairs, report) = clean_corpus(&common::trace_files(), &MergeConfig::default());
    assert_eq!(report.ingest.records, raw.len());
    assert_eq!(pairs.len() + report.filter.short_name + report.filter.short_subtokens, raw.len());
    assert!(pairs.len() >= 5000);
    assert!(report.merge.frequent.len() <= 10);
    assert!(!report.merge.frequent.iter().any(|t| t == "bool"), "{:?}", report.merge.frequent);

    // the frequent list is the top 10 of the raw global counts
    let mut global: BTreeMap<&str, u64> = BTreeMap::new();
    for p in &raw {
        *global.entry(&p.type_name).or_default() += 1;
    }
    let mut ranked: Vec<(&str, u64)> = global.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    let top: Vec<&str> = ranked.iter().take(10).map(|x| x.0).collect();
    assert_eq!(report.merge.frequent, top);

    // nothing from the alias table survives, and bool is never folded into int
    assert!(!pairs.iter().any(|p| ["frozenset", "defaultdict", "OrderedDict"].contains(&p.type_name.as_str())));
    assert!(pairs.iter().any(|p| p.type_name == "bool"));
    assert!(!report.merge.merged.get("bool").is_some_and(|m| m.contains_key("int")));

    let table = type_frequencies(&pairs, 10);
    for (name, counts) in &table.per_name {
        let n = pairs.iter().filter(|p| &p.name == name).count() as u64;
        assert_eq!(counts.values().sum::<u64>(), n);
    }
}

#[test]
fn merge_is_idempotent_and_filter_is_order_preserving() {
    let (raw, _) = load_traces(&common::trace_files());
    let config = MergeConfig::default();
    let (once, first) = merge_types(raw, &config);
    let (twice, second) = merge_types(once.clone(), &config);
    assert_eq!(once, twice);
    let as_set = |v: &[String]| v.iter().cloned().collect::<HashSet<_>>();
    assert_eq!(as_set(&first.frequent), as_set(&second.frequent));
    assert!(second.merged.is_empty(), "{:?}", second.merged);
    let (fixed, report) = merge_types_with(once.clone(), &first.frequent, &config);
    assert_eq!(fixed, once);
    assert_eq!(report.frequent, first.frequent);

    let (kept, _) = filter_names(once.clone());
    let mut it = once.iter();
    for k in &kept {
        assert!(it.any(|p| p == k), "filter output is not an ordered subsequence");
    }
}

#[test]
fn split_is_deterministic_disjoint_and_round_trips() {
    let (pairs, _) = clean_corpus(&common::trace_files(), &MergeConfig::default());
    let a = split_dataset(pairs.clone(), 1000, 0.8, 11).unwrap();
    let b = split_dataset(pairs.clone(), 1000, 0.8, 11).unwrap();
    let c = split_dataset(pairs.clone(), 1000, 0.8, 12).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.test, c.test);
    assert_eq!(a.test.len(), 1000);
    let rest = pairs.len() - 1000;
    assert_eq!(a.train.len(), (rest as f64 * 0.8).round() as usize);
    assert_eq!(a.len(), pairs.len());

    let origins = |v: &[nvcheck_core::corpus::NameValuePair]| -> HashSet<_> { v.iter().map(|p| p.origin.clone()).collect() };
    let (tr, va, te) = (origins(&a.train), origins(&a.valid), origins(&a.test));
    assert!(tr.is_disjoint(&va) && tr.is_disjoint(&te) && va.is_disjoint(&te));
    assert_eq!(tr.len() + va.len() + te.len(), pairs.len());

    let dir = tempfile::tempdir().unwrap();
    let frequent = vec!["int".to_string(), "str".to_string()];
    let (written, table) = write_split(dir.path(), &a, &frequent).unwrap();
    let (back, manifest) = read_split(dir.path()).unwrap();
    assert_eq!(back, a);
    assert_eq!(manifest, written);
    assert_eq!(manifest.seed, 11);
    assert_eq!(manifest.frequent_types, frequent);
    assert_eq!(table.global.values().sum::<u64>(), a.train.len() as u64);
}
