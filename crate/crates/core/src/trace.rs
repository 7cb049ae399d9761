//! Trace record schema shared with the tracer.
//!
//! A trace file is UTF-8 text with one JSON object per line. Every object
//! carries exactly the fields of [`TraceRecord`]; absent length and shape are
//! encoded as `null`.

use serde::{Deserialize, Serialize};

/// Maximum number of characters the tracer keeps of a value's string form.
pub const REPR_MAX: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceRecord {
    pub name: String,
    pub repr: String,
    #[serde(rename = "type")]
    pub type_name: String,
    pub bases: Vec<String>,
    pub len: Option<u64>,
    pub shape: Option<Vec<u64>>,
    pub file: String,
    pub line: u32,
    pub seq: u64,
}

impl TraceRecord {
    /// Checks the per-record schema invariants. Sequence ordering is a
    /// per-file property and is checked by the loader.
    pub fn validate(&self) -> Result<(), String> {
        if self.name.is_empty() {
            return Err("empty name".into());
        }
        if self.type_name.is_empty() {
            return Err("empty type".into());
        }
        if self.line == 0 {
            return Err("line numbers are 1-based".into());
        }
        if self.repr.chars().count() > REPR_MAX {
            return Err(format!("repr longer than {REPR_MAX} characters"));
        }
        if let Some(shape) = &self.shape {
            match (self.len, shape.first()) {
                (None, _) => return Err("shape present without len".into()),
                (Some(len), Some(&first)) if len != first => {
                    return Err(format!("len {len} differs from shape[0] {first}"))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn parse_line(line: &str) -> Result<Self, String> {
        let record: TraceRecord = serde_json::from_str(line).map_err(|e| e.to_string())?;
        record.validate()?;
        Ok(record)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const STOPWORDS: &str = r#"{"name":"stopwords","repr":"frozenset({'all', 'eleven'})","type":"frozenset","bases":[],"len":337,"shape":null,"file":"nlp.py","line":4,"seq":0}"#;

    #[test]
    fn parses_a_valid_line() {
        let r = TraceRecord::parse_line(STOPWORDS).unwrap();
        assert_eq!(r.type_name, "frozenset");
        assert_eq!(r.len, Some(337));
        assert_eq!(r.shape, None);
    }

    #[test]
    fn serializes_with_schema_field_names() {
        let r = TraceRecord::parse_line(STOPWORDS).unwrap();
        let back = serde_json::to_string(&r).unwrap();
        assert_eq!(back, STOPWORDS);
    }

    #[test]
    fn rejects_schema_violations() {
        let bad = [
            r#"{"name":"m","repr":"x","type":"ndarray","bases":[],"len":null,"shape":[3,4],"file":"a.py","line":1,"seq":0}"#,
            r#"{"name":"m","repr":"x","type":"ndarray","bases":[],"len":2,"shape":[3,4],"file":"a.py","line":1,"seq":0}"#,
            r#"{"name":"m","repr":"x","type":"int","bases":[],"len":null,"shape":null,"file":"a.py","line":0,"seq":0}"#,
            r#"{"name":"m","repr":"x","type":"int","bases":[],"len":null,"shape":null,"file":"a.py","line":1,"seq":0,"extra":1}"#,
            r#"{"name":"m","repr":"x","type":"int"}"#,
            "not json",
        ];
        for line in bad {
            assert!(TraceRecord::parse_line(line).is_err(), "{line}");
        }
    }

    #[test]
    fn matrix_record_is_valid() {
        let line = r#"{"name":"matrix","repr":"[[0 0 0 0]\n [0 0 0 0]\n [0 0 0 0]]","type":"ndarray","bases":[],"len":3,"shape":[3,4],"file":"m.py","line":2,"seq":5}"#;
        let r = TraceRecord::parse_line(line).unwrap();
        assert_eq!(r.shape, Some(vec![3, 4]));
    }
}
