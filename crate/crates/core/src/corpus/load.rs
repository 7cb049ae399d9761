use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::NameValuePair;
use crate::trace::TraceRecord;

/// Outcome of reading a set of trace files.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct IngestReport {
    pub files_loaded: usize,
    pub records: usize,
    pub malformed: usize,
    /// `(file, 1-based line, reason)` for the first malformed lines.
    pub malformed_samples: Vec<(PathBuf, usize, String)>,
    pub unreadable: Vec<(PathBuf, String)>,
    /// Records whose `seq` did not increase relative to the previous record.
    pub seq_violations: usize,
    pub warnings: Vec<String>,
}

const MAX_SAMPLES: usize = 20;

/// Reads trace files in the order given. Malformed lines are skipped and
/// counted; unreadable files are reported while the rest still load.
pub fn load_traces<P: AsRef<Path>>(paths: &[P]) -> (Vec<NameValuePair>, IngestReport) {
    let mut report = IngestReport::default();
    let mut pairs = Vec::new();
    if paths.is_empty() {
        report.warnings.push("no trace files given".into());
    }
    for path in paths {
        let path = path.as_ref();
        match load_one(path, &mut pairs, &mut report) {
            Ok(()) => report.files_loaded += 1,
            Err(e) => report.unreadable.push((path.to_path_buf(), e.to_string())),
        }
    }
    report.records = pairs.len();
    if report.malformed > 0 {
        log::warn!("skipped {} malformed trace lines", report.malformed);
    }
    (pairs, report)
}

fn load_one(
    path: &Path,
    pairs: &mut Vec<NameValuePair>,
    report: &mut IngestReport,
) -> std::io::Result<()> {
    let reader = BufReader::new(File::open(path)?);
    let trace = path.to_string_lossy();
    let mut file_pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match TraceRecord::parse_line(&line) {
            Ok(record) => file_pairs.push(NameValuePair::from_record(record, &trace)),
            Err(reason) => {
                report.malformed += 1;
                if report.malformed_samples.len() < MAX_SAMPLES {
                    report
                        .malformed_samples
                        .push((path.to_path_buf(), i + 1, reason));
                }
            }
        }
    }
    // Records are written in seq order; a stable sort keeps file order for
    // any out-of-order lines while still counting them.
    report.seq_violations += file_pairs
        .windows(2)
        .filter(|w| w[1].origin.seq <= w[0].origin.seq)
        .count();
    file_pairs.sort_by_key(|p| p.origin.seq);
    pairs.extend(file_pairs);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn line(name: &str, seq: u64) -> String {
        format!(
            r#"{{"name":"{name}","repr":"1","type":"int","bases":[],"len":null,"shape":null,"file":"s.py","line":1,"seq":{seq}}}"#
        )
    }

    fn write_file(dir: &Path, file: &str, lines: &[String]) -> PathBuf {
        let path = dir.join(file);
        let mut f = File::create(&path).unwrap();
        for l in lines {
            writeln!(f, "{l}").unwrap();
        }
        path
    }

    #[test]
    fn loads_two_files_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let a = write_file(
            dir.path(),
            "a.jsonl",
            &(0..3).map(|i| line(&format!("a{i}"), i)).collect::<Vec<_>>(),
        );
        let b = write_file(
            dir.path(),
            "b.jsonl",
            &(0..4).map(|i| line(&format!("b{i}"), i)).collect::<Vec<_>>(),
        );
        let (pairs, report) = load_traces(&[a, b]);
        assert_eq!(pairs.len(), 7);
        assert_eq!(report.files_loaded, 2);
        let names: Vec<_> = pairs.iter().map(|p| p.name.as_str()).collect();
        assert_eq!(names, ["a0", "a1", "a2", "b0", "b1", "b2", "b3"]);
    }

    #[test]
    fn skips_and_counts_malformed_lines() {
        let dir = tempfile::tempdir().unwrap();
        let mut lines: Vec<_> = (0..4).map(|i| line("count", i)).collect();
        lines.insert(2, "{\"name\": oops".into());
        let path = write_file(dir.path(), "m.jsonl", &lines);
        let (pairs, report) = load_traces(&[path]);
        assert_eq!(pairs.len(), 4);
        assert_eq!(report.malformed, 1);
        assert_eq!(report.malformed_samples[0].1, 3);
    }

    #[test]
    fn empty_file_list_warns() {
        let (pairs, report) = load_traces::<PathBuf>(&[]);
        assert!(pairs.is_empty());
        assert_eq!(report.warnings.len(), 1);
    }

    #[test]
    fn unreadable_file_is_reported_and_others_load() {
        let dir = tempfile::tempdir().unwrap();
        let good = write_file(dir.path(), "g.jsonl", &[line("count", 0)]);
        let missing = dir.path().join("missing.jsonl");
        let (pairs, report) = load_traces(&[missing.clone(), good]);
        assert_eq!(pairs.len(), 1);
        assert_eq!(report.unreadable.len(), 1);
        assert_eq!(report.unreadable[0].0, missing);
    }
}
