//! Scoring unseen pairs, heuristic suppression, and ranked warning reports.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::NameValuePair;
use crate::embed::TokenEmbedding;
use crate::error::{Error, Result};
use crate::model::Model;

pub const DEFAULT_THRESHOLD: f64 = 0.5;

/// Names containing one of these are too generic to judge.
pub const GENERIC_TERMS: [&str; 7] = ["data", "value", "result", "temp", "tmp", "str", "sample"];

const HUMAN_VALUE_CHARS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Heuristic {
    GenericTerm,
    ShortSubtoken,
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Heuristic::GenericTerm => "generic_term",
            Heuristic::ShortSubtoken => "short_subtoken",
        })
    }
}

/// Every heuristic that fires on `name`, in declaration order. Empty
/// fragments from leading, trailing, or doubled underscores are not
/// subtokens.
pub fn suppression_reasons(name: &str) -> Vec<Heuristic> {
    let mut out = Vec::new();
    let lower = name.to_lowercase();
    if GENERIC_TERMS.iter().any(|t| lower.contains(t)) {
        out.push(Heuristic::GenericTerm);
    }
    if name.split('_').any(|s| !s.is_empty() && s.chars().count() < 3) {
        out.push(Heuristic::ShortSubtoken);
    }
    out
}

pub fn suppressed_by(name: &str) -> Option<Heuristic> {
    suppression_reasons(name).into_iter().next()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredPair {
    pub pair: NameValuePair,
    pub score: f64,
}

/// Scores every pair with the model, in input order.
pub fn score_pairs(model: &Model, embedding: &TokenEmbedding, pairs: &[NameValuePair]) -> Result<Vec<ScoredPair>> {
    let scores = model.predict(embedding, pairs)?;
    Ok(pairs
        .iter()
        .cloned()
        .zip(scores)
        .map(|(pair, score)| ScoredPair { pair, score })
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Filtered {
    pub kept: Vec<ScoredPair>,
    pub suppressed: Vec<(ScoredPair, Heuristic)>,
}

/// Partitions pairs by the name heuristics alone. Scores are never read.
pub fn apply_heuristic_filter(scored: Vec<ScoredPair>) -> Filtered {
    let mut out = Filtered::default();
    for s in scored {
        match suppressed_by(&s.pair.name) {
            Some(h) => out.suppressed.push((s, h)),
            None => out.kept.push(s),
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Location {
    pub file: String,
    pub line: u32,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.file, self.line)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Warning {
    pub pair: NameValuePair,
    pub score: f64,
    pub rank: usize,
    pub location: Location,
    pub suppressed_by: Option<Heuristic>,
}

/// Sorts by descending score, then by file, line, and name, and assigns
/// 1-based ranks.
pub fn rank(scored: Vec<(ScoredPair, Option<Heuristic>)>) -> Vec<Warning> {
    let mut items: Vec<_> = scored
        .into_iter()
        .map(|(s, h)| {
            let location = Location {
                file: s.pair.origin.file.clone(),
                line: s.pair.origin.line,
            };
            (s, h, location)
        })
        .collect();
    items.sort_by(|a, b| {
        b.0.score
            .total_cmp(&a.0.score)
            .then_with(|| a.2.cmp(&b.2))
            .then_with(|| a.0.pair.name.cmp(&b.0.pair.name))
    });
    items
        .into_iter()
        .enumerate()
        .map(|(i, (s, h, location))| Warning {
            pair: s.pair,
            score: s.score,
            rank: i + 1,
            location,
            suppressed_by: h,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Detection {
    pub threshold: f64,
    pub scored: usize,
    pub below_threshold: usize,
    /// Reported warnings, ranked.
    pub warnings: Vec<Warning>,
    /// Pairs above the threshold that a heuristic suppressed, ranked among
    /// themselves.
    pub suppressed: Vec<Warning>,
}

/// Thresholds (inclusive), filters, and ranks scored pairs.
pub fn detect(scored: Vec<ScoredPair>, threshold: f64) -> Result<Detection> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidArgument(format!("threshold {threshold} outside [0, 1]")));
    }
    let total = scored.len();
    let above: Vec<ScoredPair> = scored.into_iter().filter(|s| s.score >= threshold).collect();
    let below_threshold = total - above.len();
    let filtered = apply_heuristic_filter(above);
    Ok(Detection {
        threshold,
        scored: total,
        below_threshold,
        warnings: rank(filtered.kept.into_iter().map(|s| (s, None)).collect()),
        suppressed: rank(filtered.suppressed.into_iter().map(|(s, h)| (s, Some(h))).collect()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Human,
    Machine,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(ReportFormat::Human),
            "machine" | "jsonl" => Ok(ReportFormat::Machine),
            other => Err(Error::InvalidArgument(format!("unknown report format {other:?}"))),
        }
    }
}

/// One line of the machine-readable report. `category` is left blank for
/// manual triage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WarningRecord {
    pub rank: usize,
    pub score: f64,
    pub name: String,
    pub repr: String,
    #[serde(rename = "type")]
    pub type_name: String,
    pub len: Option<u64>,
    pub shape: Option<Vec<u64>>,
    pub file: String,
    pub line: u32,
    pub seq: u64,
    pub suppressed_by: Option<Heuristic>,
    pub category: String,
}

impl From<&Warning> for WarningRecord {
    fn from(w: &Warning) -> Self {
        WarningRecord {
            rank: w.rank,
            score: w.score,
            name: w.pair.name.clone(),
            repr: w.pair.repr.clone(),
            type_name: w.pair.type_name.clone(),
            len: w.pair.len,
            shape: w.pair.shape.clone(),
            file: w.location.file.clone(),
            line: w.location.line,
            seq: w.pair.origin.seq,
            suppressed_by: w.suppressed_by,
            category: String::new(),
        }
    }
}

fn truncate_value(repr: &str) -> String {
    let flat: String = repr.chars().map(|c| if c.is_control() { ' ' } else { c }).collect();
    if flat.chars().count() <= HUMAN_VALUE_CHARS {
        flat
    } else {
        let mut s: String = flat.chars().take(HUMAN_VALUE_CHARS - 3).collect();
        s.push_str("...");
        s
    }
}

pub fn render_report(warnings: &[Warning], format: ReportFormat) -> Result<String> {
    let mut out = String::new();
    for w in warnings {
        match format {
            ReportFormat::Human => {
                out.push_str(&format!(
                    "{:>4}  {:.3}  {} = {}  ({})  {}\n",
                    w.rank,
                    w.score,
                    w.pair.name,
                    truncate_value(&w.pair.repr),
                    w.pair.type_name,
                    w.location
                ));
            }
            ReportFormat::Machine => {
                out.push_str(&serde_json::to_string(&WarningRecord::from(w))?);
                out.push('\n');
            }
        }
    }
    Ok(out)
}

pub fn emit_report(warnings: &[Warning], format: ReportFormat, path: &Path) -> Result<()> {
    let text = render_report(warnings, format)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair;

    fn scored(name: &str, score: f64, file: &str, line: u32) -> ScoredPair {
        let mut p = pair(name, "1", "int");
        p.origin.file = file.into();
        p.origin.line = line;
        ScoredPair { pair: p, score }
    }

    #[test]
    fn heuristic_examples() {
        assert_eq!(
            suppression_reasons("temp_df"),
            vec![Heuristic::GenericTerm, Heuristic::ShortSubtoken]
        );
        assert_eq!(suppressed_by("pd_frame"), Some(Heuristic::ShortSubtoken));
        assert_eq!(suppressed_by("password_text"), None);
        assert_eq!(suppressed_by("UserData"), Some(Heuristic::GenericTerm));
        assert_eq!(suppressed_by("_private_count"), None);
    }

    #[test]
    fn threshold_is_inclusive() {
        let d = detect(
            vec![scored("file_name", 0.5, "a.py", 1), scored("probability", 0.49, "a.py", 2)],
            0.5,
        )
        .unwrap();
        assert_eq!(d.warnings.len(), 1);
        assert_eq!(d.warnings[0].pair.name, "file_name");
        assert_eq!(d.below_threshold, 1);
    }

    #[test]
    fn ranks_break_ties_by_location() {
        let d = detect(
            vec![
                scored("count", 0.7, "b.py", 1),
                scored("total", 0.9, "z.py", 9),
                scored("index", 0.7, "a.py", 5),
                scored("width", 0.7, "a.py", 2),
            ],
            0.5,
        )
        .unwrap();
        let order: Vec<_> = d.warnings.iter().map(|w| (w.rank, w.pair.name.as_str())).collect();
        assert_eq!(order, vec![(1, "total"), (2, "width"), (3, "index"), (4, "count")]);
    }

    #[test]
    fn report_count_excludes_suppressed() {
        let d = detect(
            vec![
                scored("temp_df", 0.95, "a.py", 1),
                scored("password_text", 0.8, "a.py", 2),
                scored("file", 0.3, "a.py", 3),
            ],
            0.5,
        )
        .unwrap();
        assert_eq!(d.warnings.len(), 1);
        assert_eq!(d.suppressed.len(), 1);
        assert_eq!(d.suppressed[0].suppressed_by, Some(Heuristic::GenericTerm));
    }

    #[test]
    fn machine_report_round_trips() {
        let d = detect(vec![scored("prob", 0.8, "x.py", 4)], 0.5).unwrap();
        let text = render_report(&d.warnings, ReportFormat::Machine).unwrap();
        let rec: WarningRecord = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(rec.name, "prob");
        assert_eq!(rec.category, "");
        assert_eq!(rec.line, 4);
        let human = render_report(&d.warnings, ReportFormat::Human).unwrap();
        assert_eq!(human, "   1  0.800  prob = 1  (int)  x.py:4\n");
    }

    #[test]
    fn long_values_are_truncated_for_humans() {
        let v = truncate_value(&"x".repeat(100));
        assert_eq!(v.chars().count(), HUMAN_VALUE_CHARS);
        assert!(v.ends_with("..."));
        assert_eq!(truncate_value("a\nb"), "a b");
    }
}
