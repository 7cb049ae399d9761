use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use nvcheck_core::checksum::file_sha256;
use nvcheck_core::detect::WarningRecord;
use nvcheck_core::embed::TokenEmbedding;
use nvcheck_core::eval::evaluate;
use nvcheck_core::jsonl;
use nvcheck_core::model::{train_model, Model, TrainConfig};
use nvcheck_core::negsample::LabeledExample;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nvcheck"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus")
}

fn run(args: &[&str]) -> Output {
    let out = bin().args(args).env("NVCHECK_RUN_DIR", work().join("runs")).output().unwrap();
    if !out.status.success() && out.status.code() != Some(4) {
        eprintln!("{}", String::from_utf8_lossy(&out.stderr));
    }
    out
}

fn work() -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join("nvcheck-cli")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

struct Pipeline {
    root: PathBuf,
}

impl Pipeline {
    fn data(&self) -> PathBuf {
        self.root.join("data")
    }
    fn labeled(&self) -> PathBuf {
        self.root.join("labeled")
    }
    fn embedding(&self) -> PathBuf {
        self.root.join("emb/embedding.nvemb")
    }
    fn model(&self) -> PathBuf {
        self.root.join("model/model.nvmodel")
    }
}

/// ingest, sample, embed-train, train on a slice of the fixture corpus.
fn pipeline() -> &'static Pipeline {
    static P: OnceLock<Pipeline> = OnceLock::new();
    P.get_or_init(|| {
        let root = work().join("pipeline");
        let _ = fs::remove_dir_all(&root);
        let traces = root.join("traces");
        fs::create_dir_all(&traces).unwrap();
        for i in 0..60 {
            let name = format!("prog_{i:03}.jsonl");
            fs::copy(fixtures().join("traces").join(&name), traces.join(&name)).unwrap();
        }
        let ok = |args: &[&str]| assert!(run(args).status.success(), "{args:?}");
        ok(&["ingest", "--traces", p(&traces), "--out", p(&root.join("data")), "--seed", "5"]);
        ok(&["sample", "--data", p(&root.join("data")), "--out", p(&root.join("labeled")), "--seed", "5"]);
        ok(&[
            "embed-train",
            "--sources",
            p(&fixtures().join("programs")),
            "--out",
            p(&root.join("emb")),
            "--dim",
            "16",
            "--epochs",
            "1",
            "--export-text",
        ]);
        ok(&[
            "train",
            "--data",
            p(&root.join("labeled")),
            "--embedding",
            p(&root.join("emb/embedding.nvemb")),
            "--out",
            p(&root.join("model")),
            "--epochs",
            "2",
            "--seed",
            "7",
        ]);
        Pipeline { root }
    })
}

fn manifest(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn help_documents_the_subcommands() {
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for cmd in ["ingest", "sample", "embed-train", "train", "detect", "eval", "trace"] {
        assert!(text.contains(cmd), "{cmd} missing from help");
    }
    let out = bin().args(["detect", "--help"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("--threshold") && text.contains("--format"));
}

#[test]
fn unknown_flags_exit_with_one() {
    let out = bin().args(["train", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_inputs_exit_with_one() {
    let out = run(&["ingest", "--traces", "/nonexistent/traces", "--out", p(&work().join("never"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn every_stage_writes_a_manifest() {
    let pl = pipeline();
    for (dir, command) in [
        (pl.data(), "ingest"),
        (pl.labeled(), "sample"),
        (pl.root.join("emb"), "embed-train"),
        (pl.root.join("model"), "train"),
    ] {
        let m = manifest(&dir.join("manifest.json"));
        assert_eq!(m["command"], command);
        assert_eq!(m["version"], env!("CARGO_PKG_VERSION"));
        assert!(m["started_at"].as_str().unwrap() <= m["finished_at"].as_str().unwrap());
        assert!(!m["inputs"].as_array().unwrap().is_empty(), "{command} inputs");
        for out in m["outputs"].as_array().unwrap() {
            let path = PathBuf::from(out["path"].as_str().unwrap());
            assert_eq!(out["sha256"].as_str().unwrap(), file_sha256(&path).unwrap());
        }
    }
    let m = manifest(&pl.root.join("model/manifest.json"));
    assert_eq!(m["config"]["seed"], 7);
    assert_eq!(m["config"]["epochs"], 2);
    assert_eq!(m["config"]["batch_size"], 128);
    assert!(pl.root.join("emb/embedding.vec").is_file());
}

#[test]
fn train_is_deterministic_and_matches_the_library() {
    let pl = pipeline();
    let again = work().join("train-again");
    let out = run(&[
        "train",
        "--data",
        p(&pl.labeled()),
        "--embedding",
        p(&pl.embedding()),
        "--out",
        p(&again),
        "--epochs",
        "2",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let first = file_sha256(&pl.model()).unwrap();
    assert_eq!(first, file_sha256(&again.join("model.nvmodel")).unwrap());

    let emb = TokenEmbedding::load(&pl.embedding()).unwrap();
    let train: Vec<LabeledExample> = jsonl::read(&pl.labeled().join("train.jsonl")).unwrap();
    let valid: Vec<LabeledExample> = jsonl::read(&pl.labeled().join("valid.jsonl")).unwrap();
    let split: serde_json::Value = manifest(&pl.data().join("split.json"));
    let types: Vec<String> = serde_json::from_value(split["frequent_types"].clone()).unwrap();
    let cfg = TrainConfig {
        epochs: 2,
        seed: 7,
        ..TrainConfig::default()
    };
    let (model, _) = train_model(&cfg, &train, &valid, &emb, &types).unwrap();
    assert_eq!(model.checksum().unwrap(), first);
}

#[test]
fn sweep_table_matches_the_library() {
    let pl = pipeline();
    let out_dir = work().join("sweep");
    let out = run(&[
        "eval",
        "sweep",
        "--model",
        p(&pl.model()),
        "--embedding",
        p(&pl.embedding()),
        "--data",
        p(&pl.labeled()),
        "--out",
        p(&out_dir),
    ]);
    assert!(out.status.success());
    let emb = TokenEmbedding::load(&pl.embedding()).unwrap();
    let model = Model::load_for(&pl.model(), &emb).unwrap();
    let test: Vec<LabeledExample> = jsonl::read(&pl.labeled().join("test.jsonl")).unwrap();
    let sweep = evaluate(&model, &emb, &test).unwrap();
    assert_eq!(fs::read_to_string(out_dir.join("sweep.tsv")).unwrap(), sweep.to_tsv());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains(&format!("best F1 {:.4}", sweep.best_f1())));
    assert_eq!(manifest(&out_dir.join("manifest.json"))["command"], "eval sweep");
}

fn detect(threshold: &str, out_dir: Option<&Path>, format: &str) -> Output {
    let pl = pipeline();
    let trace = fixtures().join("traces/prog_100.jsonl");
    let (model, embedding) = (pl.model(), pl.embedding());
    let mut args = vec![
        "detect",
        "--model",
        p(&model),
        "--embedding",
        p(&embedding),
        "--traces",
        p(&trace),
        "--threshold",
        threshold,
        "--format",
        format,
    ];
    if let Some(d) = out_dir {
        args.extend(["--out", p(d)]);
    }
    run(&args)
}

#[test]
fn detect_exits_four_when_it_reports() {
    let dir = work().join("detect-all");
    let out = detect("0", Some(&dir), "machine");
    assert_eq!(out.status.code(), Some(4));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let records: Vec<WarningRecord> = stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!records.is_empty());
    for (i, r) in records.iter().enumerate() {
        assert_eq!(r.rank, i + 1);
        assert_eq!(r.category, "");
        assert!(r.suppressed_by.is_none());
    }
    assert!(records.windows(2).all(|w| w[0].score >= w[1].score));
    assert_eq!(fs::read_to_string(dir.join("warnings.jsonl")).unwrap(), stdout);
    assert_eq!(manifest(&dir.join("manifest.json"))["config"]["threshold"], 0.0);
}

#[test]
fn detect_exits_zero_without_warnings() {
    let out = detect("1", None, "human");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let runs = work().join("runs");
    assert!(fs::read_dir(runs).unwrap().any(|e| e.unwrap().file_name().to_string_lossy().starts_with("detect-")));
}

#[test]
fn detect_refuses_a_foreign_embedding() {
    let pl = pipeline();
    let other = work().join("other-emb");
    let out = run(&[
        "embed-train",
        "--sources",
        p(&fixtures().join("programs/prog_000.py")),
        "--out",
        p(&other),
        "--dim",
        "16",
        "--epochs",
        "1",
        "--min-count",
        "1",
    ]);
    assert!(out.status.success());
    let out = run(&[
        "detect",
        "--model",
        p(&pl.model()),
        "--embedding",
        p(&other.join("embedding.nvemb")),
        "--traces",
        p(&fixtures().join("traces/prog_000.jsonl")),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("embedding"));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let pl = pipeline();
    let cfg = work().join("nvcheck.toml");
    fs::write(&cfg, "[train]\nepochs = 1\nseed = 11\nmask = [\"shape\"]\n").unwrap();
    let from_file = work().join("model-from-file");
    let args = |out: &Path| {
        vec![
            "--config".to_string(),
            p(&cfg).to_string(),
            "train".into(),
            "--data".into(),
            p(&pl.labeled()).into(),
            "--embedding".into(),
            p(&pl.embedding()).into(),
            "--out".into(),
            p(out).into(),
        ]
    };
    let a: Vec<String> = args(&from_file);
    assert!(run(&a.iter().map(String::as_str).collect::<Vec<_>>()).status.success());
    let m = manifest(&from_file.join("manifest.json"));
    assert_eq!((m["config"]["epochs"].as_u64(), m["config"]["seed"].as_u64()), (Some(1), Some(11)));
    assert_eq!(m["config"]["mask"], serde_json::json!(["shape"]));

    let overridden = work().join("model-overridden");
    let mut a = args(&overridden);
    a.extend(["--seed".into(), "12".into()]);
    assert!(run(&a.iter().map(String::as_str).collect::<Vec<_>>()).status.success());
    let m = manifest(&overridden.join("manifest.json"));
    assert_eq!((m["config"]["epochs"].as_u64(), m["config"]["seed"].as_u64()), (Some(1), Some(12)));

    fs::write(&cfg, "[train]\nepoch = 1\n").unwrap();
    let a = args(&work().join("never"));
    assert_eq!(run(&a.iter().map(String::as_str).collect::<Vec<_>>()).status.code(), Some(1));
}

#[test]
fn random_strategy_is_selectable() {
    let pl = pipeline();
    let out_dir = work().join("labeled-random");
    let out = run(&["sample", "--data", p(&pl.data()), "--out", p(&out_dir), "--strategy", "random", "--seed", "5"]);
    assert!(out.status.success());
    let labels = manifest(&out_dir.join("labels.json"));
    assert_eq!(labels["sample"]["strategy"], "random");
    let bad = run(&["sample", "--data", p(&pl.data()), "--out", p(&out_dir), "--strategy", "sideways"]);
    assert_eq!(bad.status.code(), Some(1));
}

// ---------------------------------------------------------------- trace

/// A stand-in for the external tracer: writes two records and exits with
/// $STUB_EXIT.
fn stub_tracer() -> PathBuf {
    let path = work().join("stub-tracer.sh");
    fs::create_dir_all(work()).unwrap();
    fs::write(
        &path,
        r#"#!/bin/sh
[ "$1" = trace ] || exit 1
script="$2"; shift 2
while [ $# -gt 0 ]; do
  case "$1" in
    --out) out="$2"; shift 2 ;;
    --timeout) timeout="$2"; shift 2 ;;
    *) exit 1 ;;
  esac
done
printf '{"name":"age","repr":"31","type":"int","bases":[],"len":null,"shape":null,"file":"%s","line":1,"seq":0}\n' "$script" > "$out"
printf '{"name":"probability","repr":"0.5","type":"float","bases":[],"len":null,"shape":null,"file":"%s","line":2,"seq":1}\n' "$script" >> "$out"
[ -n "$STUB_SLEEP" ] && sleep "$STUB_SLEEP"
exit "${STUB_EXIT:-0}"
"#,
    )
    .unwrap();
    path
}

fn trace_with(code: &str, name: &str) -> (Output, PathBuf) {
    let stub = stub_tracer();
    let script = work().join("script.py");
    fs::write(&script, "age = 31\nprobability = 0.5\n").unwrap();
    let out = work().join(format!("{name}.jsonl"));
    let tracer = format!("sh {}", stub.display());
    let output = bin()
        .args(["trace", p(&script), "--out", p(&out), "--timeout", "5", "--tracer", &tracer])
        .env("STUB_EXIT", code)
        .output()
        .unwrap();
    (output, out)
}

#[test]
fn trace_relays_tracer_exit_codes() {
    let (out, trace) = trace_with("0", "ok");
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&trace).unwrap();
    for line in text.lines() {
        nvcheck_core::trace::TraceRecord::parse_line(line).unwrap();
    }
    let m = manifest(&PathBuf::from(format!("{}.manifest.json", trace.display())));
    assert_eq!(m["command"], "trace");
    assert_eq!(m["config"]["timeout"], 5.0);
    assert_eq!(m["outputs"][0]["sha256"].as_str().unwrap(), file_sha256(&trace).unwrap());

    assert_eq!(trace_with("2", "crash").0.status.code(), Some(2));
    assert_eq!(trace_with("3", "timeout").0.status.code(), Some(3));
    assert_eq!(trace_with("7", "broken").0.status.code(), Some(1));
}

#[test]
fn trace_reports_a_missing_tracer() {
    let script = work().join("script2.py");
    fs::create_dir_all(work()).unwrap();
    fs::write(&script, "x = 1\n").unwrap();
    let out = bin()
        .args(["trace", p(&script), "--out", p(&work().join("t.jsonl")), "--tracer", "/nonexistent/tracer"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn traced_output_feeds_detect() {
    let pl = pipeline();
    let (out, trace) = trace_with("0", "feed");
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "detect",
        "--model",
        p(&pl.model()),
        "--embedding",
        p(&pl.embedding()),
        "--traces",
        p(&trace),
        "--threshold",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 2);
    assert!(stdout.contains("age = 31  (int)"));
}

#[test]
fn ablate_and_compare_write_their_tables() {
    let pl = pipeline();
    let ablate = work().join("ablate");
    let out = run(&[
        "eval",
        "ablate",
        "--data",
        p(&pl.labeled()),
        "--embedding",
        p(&pl.embedding()),
        "--out",
        p(&ablate),
        "--epochs",
        "1",
    ]);
    assert!(out.status.success());
    let curves = fs::read_to_string(ablate.join("curves.tsv")).unwrap();
    assert_eq!(
        curves.lines().next().unwrap(),
        "epoch\tall\tname\tvalue_string\ttype\tlength\tshape\tvalue_string+type"
    );
    assert_eq!(curves.lines().count(), 2);
    let report = manifest(&ablate.join("ablation.json"));
    assert_eq!(report["runs"].as_array().unwrap().len(), 7);

    let compare = work().join("compare");
    let out = run(&[
        "eval",
        "compare",
        "--data",
        p(&pl.data()),
        "--embedding",
        p(&pl.embedding()),
        "--out",
        p(&compare),
        "--epochs",
        "1",
        "--sample-seed",
        "5",
    ]);
    assert!(out.status.success());
    let cmp = manifest(&compare.join("comparison.json"));
    assert_eq!(
        cmp["type_guided"]["positives_checksum"],
        cmp["random"]["positives_checksum"]
    );
    assert!(compare.join("type_guided.tsv").is_file() && compare.join("random.tsv").is_file());
}
