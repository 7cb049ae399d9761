#![allow(dead_code)]

use std::path::{Path, PathBuf};

use nvcheck_core::corpus::{NameValuePair, Origin};
use nvcheck_core::pipeline::files_with_extension;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn trace_files() -> Vec<PathBuf> {
    files_with_extension(&fixtures().join("corpus/traces"), "jsonl").unwrap()
}

pub fn program_files() -> Vec<PathBuf> {
    files_with_extension(&fixtures().join("corpus/programs"), "py").unwrap()
}

pub fn pair(name: &str, repr: &str, ty: &str) -> NameValuePair {
    NameValuePair {
        name: name.into(),
        repr: repr.into(),
        type_name: ty.into(),
        len: None,
        shape: None,
        bases: Vec::new(),
        origin: Origin {
            file: "t.py".into(),
            line: 1,
            seq: 0,
            trace: String::new(),
        },
    }
}

pub fn at(mut p: NameValuePair, file: &str, line: u32) -> NameValuePair {
    p.origin.file = file.into();
    p.origin.line = line;
    p
}
