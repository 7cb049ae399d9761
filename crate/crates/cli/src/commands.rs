use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command as Process, Stdio};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use nvcheck_core::corpus::{
    filter_names, load_traces, merge_types_with, read_split, split_dataset, write_split, MergeConfig,
    SplitChecksums,
};
use nvcheck_core::detect::{detect, render_report, score_pairs, ReportFormat, DEFAULT_THRESHOLD};
use nvcheck_core::embed::{EmbedConfig, TokenEmbedding};
use nvcheck_core::eval::{ablation_masks, compare_neg_strategies, evaluate, run_ablation, Sweep};
use nvcheck_core::jsonl;
use nvcheck_core::model::{Component, ComponentMask, Model, TrainConfig};
use nvcheck_core::negsample::{build_labeled_dataset, LabeledExample, LabeledSplit, SampleConfig, SourceScope, Strategy};
use nvcheck_core::pipeline::{clean_corpus, embed_sources, files_with_extension};
use nvcheck_core::trace::TraceRecord;
use nvcheck_core::model::train_model;
use serde::{Deserialize, Serialize};

use crate::config::FileConfig;
use crate::manifest::Recorder;
use crate::{
    AblateArgs, Cli, Command, CompareArgs, DetectArgs, EmbedArgs, EvalCommand, FormatArg, IngestArgs, SampleArgs,
    SampleFlags, ScopeArg, StrategyArg, SweepArgs, TraceArgs, TrainArgs, TrainFlags,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_WARNINGS: u8 = 4;

const FULL_TEST_COUNT: usize = 10_000;
const SMALL_CORPUS_TEST_SHARE: f64 = 0.15;
const DEFAULT_TRACE_TIMEOUT: f64 = 600.0;
const TRACE_GRACE: Duration = Duration::from_secs(10);

pub const MODEL_FILE: &str = "model.nvmodel";
pub const EMBEDDING_FILE: &str = "embedding.nvemb";
pub const MANIFEST_FILE: &str = "manifest.json";

pub fn run(cli: Cli) -> Result<u8> {
    let file = FileConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Ingest(a) => ingest(a, &file),
        Command::Sample(a) => sample(a, &file),
        Command::EmbedTrain(a) => embed_train(a, &file),
        Command::Train(a) => train(a, &file),
        Command::Detect(a) => detect_cmd(a, &file),
        Command::Eval(EvalCommand::Sweep(a)) => sweep(a),
        Command::Eval(EvalCommand::Ablate(a)) => ablate(a, &file),
        Command::Eval(EvalCommand::Compare(a)) => compare(a, &file),
        Command::Trace(a) => trace(a, &file),
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))
}

fn collect_files(roots: &[PathBuf], ext: &str) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for root in roots {
        if !root.exists() {
            bail!("{} does not exist", root.display());
        }
        out.extend(files_with_extension(root, ext)?);
    }
    if out.is_empty() {
        bail!("no *.{ext} files found");
    }
    Ok(out)
}

// ---------------------------------------------------------------- ingest

#[derive(Debug, Serialize)]
struct IngestConfig {
    merge: MergeConfig,
    test_count: usize,
    train_fraction: f64,
    seed: u64,
}

fn default_test_count(pairs: usize) -> usize {
    if pairs > 2 * FULL_TEST_COUNT {
        FULL_TEST_COUNT
    } else {
        (pairs as f64 * SMALL_CORPUS_TEST_SHARE).round() as usize
    }
}

fn ingest(a: IngestArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("ingest");
    let merge = MergeConfig {
        top_k: a.top_k.or(file.corpus.top_k).unwrap_or(10),
        ..MergeConfig::default()
    };
    if merge.top_k == 0 || merge.top_k > 10 {
        bail!("--top-k must be between 1 and 10");
    }
    let traces = collect_files(&a.traces, "jsonl")?;
    let (pairs, report) = clean_corpus(&traces, &merge);
    if !report.ingest.unreadable.is_empty() {
        for (p, e) in &report.ingest.unreadable {
            log::error!("{}: {e}", p.display());
        }
        bail!("{} trace files could not be read", report.ingest.unreadable.len());
    }
    let test_count = a
        .test_count
        .or(file.corpus.test_count)
        .unwrap_or_else(|| default_test_count(pairs.len()));
    let config = IngestConfig {
        merge,
        test_count,
        train_fraction: a.train_fraction.or(file.corpus.train_fraction).unwrap_or(0.8),
        seed: a.seed.or(file.corpus.seed).unwrap_or(0),
    };
    rec.config(&config)?;
    rec.inputs(traces);

    let split = split_dataset(pairs, config.test_count, config.train_fraction, config.seed)?;
    create_dir(&a.out)?;
    let (manifest, _) = write_split(&a.out, &split, &report.merge.frequent)?;
    write_json(&a.out.join("ingest.json"), &report)?;
    for f in ["train.jsonl", "valid.jsonl", "test.jsonl", "frequencies.json", "split.json", "ingest.json"] {
        rec.output(a.out.join(f));
    }
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    eprintln!(
        "{} records, {} malformed, {} filtered; train {} / valid {} / test {}",
        report.ingest.records,
        report.ingest.malformed,
        report.filter.short_name + report.filter.short_subtokens,
        manifest.train,
        manifest.valid,
        manifest.test
    );
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- sample

/// Metadata of a labeled dataset directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelsMeta {
    pub sample: SampleConfig,
    pub frequent_types: Vec<String>,
    pub positives: SplitChecksums,
}

fn sample_config(strategy: Option<StrategyArg>, seed: Option<u64>, f: &SampleFlags, file: &FileConfig) -> Result<SampleConfig> {
    let d = SampleConfig::default();
    let strategy = match (strategy, &file.negsample.strategy) {
        (Some(StrategyArg::TypeGuided), _) => Strategy::TypeGuided,
        (Some(StrategyArg::Random), _) => Strategy::Random,
        (None, Some(s)) => s.parse()?,
        (None, None) => d.strategy,
    };
    let scope = match (f.scope, file.negsample.scope.as_deref()) {
        (Some(ScopeArg::Train), _) | (None, Some("train")) => SourceScope::Train,
        (Some(ScopeArg::Global), _) | (None, Some("global")) => SourceScope::Global,
        (None, Some(other)) => bail!("unknown negsample scope {other:?}"),
        (None, None) => d.scope,
    };
    let infreq_threshold = f.infreq_threshold.or(file.negsample.infreq_threshold).unwrap_or(d.infreq_threshold);
    if !(0.0..=1.0).contains(&infreq_threshold) {
        bail!("infrequency threshold {infreq_threshold} outside [0, 1]");
    }
    Ok(SampleConfig {
        strategy,
        infreq_threshold,
        scope,
        seed: seed.or(f.sample_seed).or(file.negsample.seed).unwrap_or(d.seed),
    })
}

fn sample(a: SampleArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("sample");
    let config = sample_config(a.strategy, a.seed, &a.flags, file)?;
    rec.config(&config)?;
    let (split, manifest) = read_split(&a.data)?;
    for f in ["train.jsonl", "valid.jsonl", "test.jsonl", "split.json"] {
        rec.input(a.data.join(f));
    }
    let labeled = build_labeled_dataset(&split, &config)?;
    write_labeled(&a.out, &labeled, &LabelsMeta {
        sample: config,
        frequent_types: manifest.frequent_types,
        positives: manifest.checksums,
    })?;
    for f in ["train.jsonl", "valid.jsonl", "test.jsonl", "labels.json"] {
        rec.output(a.out.join(f));
    }
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    eprintln!(
        "labeled train {} / valid {} / test {}",
        labeled.train.len(),
        labeled.valid.len(),
        labeled.test.len()
    );
    Ok(EXIT_OK)
}

pub fn write_labeled(dir: &Path, data: &LabeledSplit, meta: &LabelsMeta) -> Result<()> {
    create_dir(dir)?;
    for (name, part) in data.parts() {
        jsonl::write(&dir.join(format!("{name}.jsonl")), part)?;
    }
    write_json(&dir.join("labels.json"), meta)
}

fn read_labeled(dir: &Path, rec: &mut Recorder) -> Result<(LabeledSplit, LabelsMeta)> {
    let meta: LabelsMeta = read_json(&dir.join("labels.json"))?;
    let read = |name: &str| -> Result<Vec<LabeledExample>> { Ok(jsonl::read(&dir.join(format!("{name}.jsonl")))?) };
    let data = LabeledSplit {
        train: read("train")?,
        valid: read("valid")?,
        test: read("test")?,
    };
    for f in ["train.jsonl", "valid.jsonl", "test.jsonl", "labels.json"] {
        rec.input(dir.join(f));
    }
    Ok((data, meta))
}

// ---------------------------------------------------------------- embed

fn embed_train(a: EmbedArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("embed-train");
    let d = EmbedConfig::default();
    let e = &file.embed;
    let config = EmbedConfig {
        dim: a.dim.or(e.dim).unwrap_or(d.dim),
        window: a.window.or(e.window).unwrap_or(d.window),
        epochs: a.epochs.or(e.epochs).unwrap_or(d.epochs),
        min_count: a.min_count.or(e.min_count).unwrap_or(d.min_count),
        negatives: a.negatives.or(e.negatives).unwrap_or(d.negatives),
        ngram_min: a.ngram_min.or(e.ngram_min).unwrap_or(d.ngram_min),
        ngram_max: a.ngram_max.or(e.ngram_max).unwrap_or(d.ngram_max),
        learning_rate: a.learning_rate.or(e.learning_rate).unwrap_or(d.learning_rate),
        seed: a.seed.or(e.seed).unwrap_or(d.seed),
    };
    rec.config(&config)?;
    let sources = collect_files(&a.sources, "py")?;
    rec.inputs(sources.clone());
    let (emb, report) = embed_sources(&sources, &config)?;
    for w in &report.warnings {
        log::warn!("{w}");
    }
    create_dir(&a.out)?;
    let path = a.out.join(EMBEDDING_FILE);
    emb.save(&path)?;
    rec.output(&path);
    write_json(&a.out.join("embed_report.json"), &report)?;
    rec.output(a.out.join("embed_report.json"));
    if a.export_text {
        let text = a.out.join("embedding.vec");
        emb.export_text(&text)?;
        rec.output(text);
    }
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    eprintln!(
        "{} tokens, vocabulary {}, {} n-grams, checksum {}",
        report.tokens,
        report.vocabulary,
        report.ngrams,
        emb.checksum()
    );
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- train

fn parse_mask(items: &[String]) -> Result<ComponentMask> {
    items
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Component>().map_err(Into::into))
        .collect()
}

fn train_config(f: &TrainFlags, file: &FileConfig) -> Result<TrainConfig> {
    let d = TrainConfig::default();
    let t = &file.train;
    let mask = match f.mask.as_ref().or(t.mask.as_ref()) {
        Some(items) => parse_mask(items)?,
        None => d.mask.clone(),
    };
    Ok(TrainConfig {
        batch_size: f.batch_size.or(t.batch_size).unwrap_or(d.batch_size),
        epochs: f.epochs.or(t.epochs).unwrap_or(d.epochs),
        learning_rate: f.learning_rate.or(t.learning_rate).unwrap_or(d.learning_rate),
        dropout: f.dropout.or(t.dropout).unwrap_or(d.dropout),
        seed: f.seed.or(t.seed).unwrap_or(d.seed),
        mask,
        ..d
    })
}

fn load_embedding(path: &Path, rec: &mut Recorder) -> Result<TokenEmbedding> {
    rec.input(path);
    TokenEmbedding::load(path).with_context(|| format!("loading embedding {}", path.display()))
}

fn train(a: TrainArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("train");
    let config = train_config(&a.flags, file)?;
    rec.config(&config)?;
    let emb = load_embedding(&a.embedding, &mut rec)?;
    let (data, meta) = read_labeled(&a.data, &mut rec)?;
    let (model, history) = train_model(&config, &data.train, &data.valid, &emb, &meta.frequent_types)?;
    create_dir(&a.out)?;
    let path = a.out.join(MODEL_FILE);
    model.save(&path)?;
    write_json(&a.out.join("history.json"), &history)?;
    rec.output(&path);
    rec.output(a.out.join("history.json"));
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    eprintln!(
        "best epoch {} with validation F1 {:.4}; checksum {}",
        history.best_epoch,
        history.best_valid_f1,
        model.checksum()?
    );
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- detect

#[derive(Debug, Serialize)]
struct DetectConfig {
    threshold: f64,
    format: ReportFormat,
    merge: MergeConfig,
}

fn run_dir() -> PathBuf {
    std::env::var_os("NVCHECK_RUN_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".nvcheck/runs"))
}

fn detect_cmd(a: DetectArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("detect");
    let format = match (a.format, file.detect.format.as_deref()) {
        (Some(FormatArg::Human), _) => ReportFormat::Human,
        (Some(FormatArg::Machine), _) => ReportFormat::Machine,
        (None, Some(s)) => s.parse()?,
        (None, None) => ReportFormat::default(),
    };
    let config = DetectConfig {
        threshold: a.threshold.or(file.detect.threshold).unwrap_or(DEFAULT_THRESHOLD),
        format,
        merge: MergeConfig::default(),
    };
    rec.config(&config)?;
    let emb = load_embedding(&a.embedding, &mut rec)?;
    rec.input(&a.model);
    let model = Model::load_for(&a.model, &emb).with_context(|| format!("loading model {}", a.model.display()))?;
    let traces = collect_files(&a.traces, "jsonl")?;
    rec.inputs(traces.clone());

    let (pairs, ingest) = load_traces(&traces);
    if !ingest.unreadable.is_empty() {
        bail!("{} trace files could not be read", ingest.unreadable.len());
    }
    let (pairs, _) = merge_types_with(pairs, &model.frequent_types, &config.merge);
    let (pairs, _) = filter_names(pairs);
    let scored = score_pairs(&model, &emb, &pairs)?;
    let result = detect(scored, config.threshold)?;
    let report = render_report(&result.warnings, format)?;
    std::io::stdout().write_all(report.as_bytes())?;

    let manifest_path = match &a.out {
        Some(dir) => {
            create_dir(dir)?;
            let ext = if format == ReportFormat::Human { "txt" } else { "jsonl" };
            let path = dir.join(format!("warnings.{ext}"));
            fs::write(&path, &report).with_context(|| format!("writing {}", path.display()))?;
            let suppressed = dir.join("suppressed.jsonl");
            fs::write(&suppressed, render_report(&result.suppressed, ReportFormat::Machine)?)
                .with_context(|| format!("writing {}", suppressed.display()))?;
            rec.output(path);
            rec.output(suppressed);
            dir.join(MANIFEST_FILE)
        }
        None => {
            let stamp = chrono::Utc::now().format("%Y%m%dT%H%M%S%.3fZ");
            run_dir().join(format!("detect-{stamp}.json"))
        }
    };
    rec.finish(&manifest_path)?;
    eprintln!(
        "{} pairs scored, {} warnings, {} suppressed by heuristics",
        result.scored,
        result.warnings.len(),
        result.suppressed.len()
    );
    Ok(if result.warnings.is_empty() { EXIT_OK } else { EXIT_WARNINGS })
}

// ---------------------------------------------------------------- eval

fn write_sweep(dir: &Path, stem: &str, sweep: &Sweep, rec: &mut Recorder) -> Result<()> {
    let tsv = dir.join(format!("{stem}.tsv"));
    fs::write(&tsv, sweep.to_tsv()).with_context(|| format!("writing {}", tsv.display()))?;
    let points = dir.join(format!("{stem}.jsonl"));
    jsonl::write(&points, &sweep.points)?;
    rec.output(tsv);
    rec.output(points);
    Ok(())
}

fn print_best(label: &str, sweep: &Sweep) {
    match sweep.best_point() {
        Some(p) => eprintln!("{label}: best F1 {:.4} at threshold {:.2}", sweep.best_f1(), p.threshold),
        None => eprintln!("{label}: no threshold produced warnings"),
    }
}

fn sweep(a: SweepArgs) -> Result<u8> {
    let mut rec = Recorder::start("eval sweep");
    rec.config(&serde_json::json!({ "split": a.split }))?;
    let emb = load_embedding(&a.embedding, &mut rec)?;
    rec.input(&a.model);
    let model = Model::load_for(&a.model, &emb)?;
    let (data, _) = read_labeled(&a.data, &mut rec)?;
    let part = match a.split.as_str() {
        "train" => &data.train,
        "valid" => &data.valid,
        _ => &data.test,
    };
    let sweep = evaluate(&model, &emb, part)?;
    create_dir(&a.out)?;
    write_sweep(&a.out, "sweep", &sweep, &mut rec)?;
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    print_best(&a.split, &sweep);
    Ok(EXIT_OK)
}

fn ablate(a: AblateArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("eval ablate");
    let config = train_config(&a.flags, file)?;
    rec.config(&config)?;
    let emb = load_embedding(&a.embedding, &mut rec)?;
    let (data, meta) = read_labeled(&a.data, &mut rec)?;
    let report = run_ablation(&config, &data, &emb, &meta.frequent_types, &ablation_masks())?;
    create_dir(&a.out)?;
    let json = a.out.join("ablation.json");
    write_json(&json, &report)?;
    rec.output(&json);

    let mut tsv = String::from("epoch");
    for run in &report.runs {
        tsv.push('\t');
        tsv.push_str(&run.label);
    }
    tsv.push('\n');
    let epochs = report.runs.iter().map(|r| r.valid_f1.len()).max().unwrap_or(0);
    for e in 0..epochs {
        tsv.push_str(&(e + 1).to_string());
        for run in &report.runs {
            tsv.push('\t');
            if let Some(f) = run.valid_f1.get(e) {
                tsv.push_str(&format!("{f:.6}"));
            }
        }
        tsv.push('\n');
    }
    let curves = a.out.join("curves.tsv");
    fs::write(&curves, tsv).with_context(|| format!("writing {}", curves.display()))?;
    rec.output(curves);
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    for run in &report.runs {
        eprintln!(
            "{:>18}: best validation F1 {:.4} (drop {:.4})",
            run.label,
            run.best_valid_f1,
            report.drop_of(&run.label).unwrap_or(0.0)
        );
    }
    Ok(EXIT_OK)
}

fn compare(a: CompareArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("eval compare");
    let train_cfg = train_config(&a.flags, file)?;
    let sample_cfg = sample_config(None, None, &a.sample, file)?;
    rec.config(&serde_json::json!({ "train": train_cfg, "sample": sample_cfg }))?;
    let emb = load_embedding(&a.embedding, &mut rec)?;
    let (split, manifest) = read_split(&a.data)?;
    for f in ["train.jsonl", "valid.jsonl", "test.jsonl", "split.json"] {
        rec.input(a.data.join(f));
    }
    let cmp = compare_neg_strategies(&split, &sample_cfg, &train_cfg, &emb, &manifest.frequent_types)?;
    create_dir(&a.out)?;
    let json = a.out.join("comparison.json");
    write_json(&json, &cmp)?;
    rec.output(&json);
    write_sweep(&a.out, "type_guided", &cmp.type_guided.sweep, &mut rec)?;
    write_sweep(&a.out, "random", &cmp.random.sweep, &mut rec)?;
    rec.finish(&a.out.join(MANIFEST_FILE))?;
    print_best("type-guided", &cmp.type_guided.sweep);
    print_best("random", &cmp.random.sweep);
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- trace

/// Exit codes of the tracer driver that are passed through unchanged.
const TRACE_SCRIPT_ERROR: u8 = 2;
const TRACE_TIMEOUT: u8 = 3;

#[derive(Debug, Serialize)]
struct TraceConfig {
    tracer: Vec<String>,
    timeout: f64,
}

#[derive(Debug, Default, Serialize)]
struct TraceSummary {
    records: usize,
    malformed: usize,
}

fn summarize_trace(path: &Path) -> TraceSummary {
    let mut s = TraceSummary::default();
    if let Ok(text) = fs::read_to_string(path) {
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match TraceRecord::parse_line(line) {
                Ok(_) => s.records += 1,
                Err(_) => s.malformed += 1,
            }
        }
    }
    s
}

fn trace(a: TraceArgs, file: &FileConfig) -> Result<u8> {
    let mut rec = Recorder::start("trace");
    let tracer: Vec<String> = match (&a.tracer, &file.trace.command) {
        (Some(cmd), _) => cmd.split_whitespace().map(String::from).collect(),
        (None, Some(cmd)) => cmd.clone(),
        (None, None) => vec!["nvtrace".into()],
    };
    if tracer.is_empty() {
        bail!("empty tracer command");
    }
    let config = TraceConfig {
        tracer,
        timeout: a.timeout.or(file.trace.timeout).unwrap_or(DEFAULT_TRACE_TIMEOUT),
    };
    if !(config.timeout > 0.0 && config.timeout.is_finite()) {
        bail!("timeout must be a positive number of seconds");
    }
    rec.config(&config)?;
    if !a.script.is_file() {
        bail!("{} is not a file", a.script.display());
    }
    rec.input(&a.script);

    let mut child = Process::new(&config.tracer[0])
        .args(&config.tracer[1..])
        .arg("trace")
        .arg(&a.script)
        .arg("--out")
        .arg(&a.out)
        .arg("--timeout")
        .arg(config.timeout.to_string())
        .stdin(Stdio::null())
        .spawn()
        .with_context(|| format!("starting tracer {:?}", config.tracer[0]))?;

    let deadline = Instant::now() + Duration::from_secs_f64(config.timeout) + TRACE_GRACE;
    let status = loop {
        if let Some(status) = child.try_wait()? {
            break Some(status);
        }
        if Instant::now() >= deadline {
            let _ = child.kill();
            let _ = child.wait();
            break None;
        }
        std::thread::sleep(Duration::from_millis(20));
    };
    let code = match status.and_then(|s| s.code()) {
        None => {
            log::error!("tracer did not finish in time and was killed");
            TRACE_TIMEOUT
        }
        Some(0) => EXIT_OK,
        Some(c) if c == TRACE_SCRIPT_ERROR as i32 || c == TRACE_TIMEOUT as i32 => c as u8,
        Some(c) => {
            log::error!("tracer failed with exit code {c}");
            1
        }
    };
    let summary = summarize_trace(&a.out);
    if a.out.is_file() {
        rec.output(&a.out);
    }
    let mut manifest = a.out.clone().into_os_string();
    manifest.push(".manifest.json");
    rec.finish(Path::new(&manifest))?;
    eprintln!("{} records, {} malformed lines", summary.records, summary.malformed);
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpora_get_a_proportional_test_split() {
        assert_eq!(default_test_count(500_332), FULL_TEST_COUNT);
        assert_eq!(default_test_count(6_000), 900);
    }

    #[test]
    fn masks_parse_component_names() {
        let m = parse_mask(&["name".into(), " value_string ".into()]).unwrap();
        assert_eq!(m.len(), 2);
        assert!(parse_mask(&["colour".into()]).is_err());
    }

    #[test]
    fn flags_override_file() {
        let mut file = FileConfig::default();
        file.train.epochs = Some(3);
        file.train.seed = Some(9);
        let flags = TrainFlags {
            batch_size: None,
            epochs: Some(5),
            learning_rate: None,
            dropout: None,
            seed: None,
            mask: None,
        };
        let cfg = train_config(&flags, &file).unwrap();
        assert_eq!((cfg.epochs, cfg.seed, cfg.batch_size), (5, 9, 128));
    }
}
