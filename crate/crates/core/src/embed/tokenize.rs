//! Lexer producing the token sequences the name embedding is trained on.
//!
//! Identifiers and keywords are kept verbatim. String and number literals
//! collapse to `<str>` and `<num>`; comments and whitespace are dropped.

use std::fmt;
use std::path::{Path, PathBuf};

pub const STR_TOKEN: &str = "<str>";
pub const NUM_TOKEN: &str = "<num>";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for LexError {}

const OPERATORS: [&str; 38] = [
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "==", "!=", "<=", ">=", "**", "//", "<<", ">>",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=", "+", "-", "*", "/", "%", "@", "&", "|",
    "^", "~", "<", ">", "=", "!",
];
const PUNCT: &str = "()[]{},:;.";

fn is_ident_start(c: char) -> bool {
    c == '_' || c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c.is_alphanumeric()
}

fn is_string_prefix(word: &str) -> bool {
    word.len() <= 2
        && word
            .chars()
            .all(|c| matches!(c.to_ascii_lowercase(), 'r' | 'b' | 'u' | 'f'))
}

/// Splits one source file into tokens.
pub fn tokenize_source(source: &str) -> Result<Vec<String>, LexError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            i += 1;
        } else if c.is_whitespace() || c == '\\' {
            i += 1;
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c == '"' || c == '\'' {
            i = skip_string(&chars, i, &mut line)?;
            tokens.push(STR_TOKEN.to_string());
        } else if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_continue(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if i < chars.len() && (chars[i] == '"' || chars[i] == '\'') && is_string_prefix(&word) {
                i = skip_string(&chars, i, &mut line)?;
                tokens.push(STR_TOKEN.to_string());
            } else {
                tokens.push(word);
            }
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            i = skip_number(&chars, i);
            tokens.push(NUM_TOKEN.to_string());
        } else if let Some(op) = OPERATORS.iter().find(|op| {
            op.chars()
                .enumerate()
                .all(|(k, oc)| chars.get(i + k) == Some(&oc))
        }) {
            i += op.chars().count();
            tokens.push(op.to_string());
        } else if PUNCT.contains(c) {
            tokens.push(c.to_string());
            i += 1;
        } else {
            return Err(LexError {
                line,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(tokens)
}

fn skip_string(chars: &[char], start: usize, line: &mut usize) -> Result<usize, LexError> {
    let quote = chars[start];
    let triple = chars.get(start + 1) == Some(&quote) && chars.get(start + 2) == Some(&quote);
    let open_line = *line;
    let mut i = start + if triple { 3 } else { 1 };
    while i < chars.len() {
        let c = chars[i];
        if c == '\\' {
            if chars.get(i + 1) == Some(&'\n') {
                *line += 1;
            }
            i += 2;
            continue;
        }
        if c == '\n' {
            if !triple {
                break;
            }
            *line += 1;
        }
        if c == quote {
            if !triple {
                return Ok(i + 1);
            }
            if chars.get(i + 1) == Some(&quote) && chars.get(i + 2) == Some(&quote) {
                return Ok(i + 3);
            }
        }
        i += 1;
    }
    Err(LexError {
        line: open_line,
        message: "unterminated string literal".into(),
    })
}

fn skip_number(chars: &[char], start: usize) -> usize {
    let mut i = start;
    while i < chars.len() {
        let c = chars[i];
        let exponent_sign = (c == '+' || c == '-')
            && i > start
            && matches!(chars[i - 1], 'e' | 'E')
            && !(chars[start] == '0' && matches!(chars.get(start + 1), Some('x' | 'X')));
        if c.is_ascii_alphanumeric() || c == '.' || c == '_' || exponent_sign {
            i += 1;
        } else {
            break;
        }
    }
    i
}

/// Token sequences of a set of source files plus the files that were skipped.
#[derive(Debug, Default)]
pub struct TokenizedCorpus {
    pub sequences: Vec<Vec<String>>,
    pub skipped: Vec<(PathBuf, String)>,
}

pub fn tokenize_corpus<P: AsRef<Path>>(files: &[P]) -> TokenizedCorpus {
    let mut corpus = TokenizedCorpus::default();
    for path in files {
        let path = path.as_ref();
        let result = std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|src| tokenize_source(&src).map_err(|e| e.to_string()));
        match result {
            Ok(tokens) => corpus.sequences.push(tokens),
            Err(reason) => {
                log::warn!("skipping {}: {reason}", path.display());
                corpus.skipped.push((path.to_path_buf(), reason));
            }
        }
    }
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<String> {
        tokenize_source(src).unwrap()
    }

    #[test]
    fn replaces_literals() {
        assert_eq!(toks("train_size = 0.9 * x"), ["train_size", "=", "<num>", "*", "x"]);
        assert_eq!(
            toks("path = f'{base}/x.csv'  # comment"),
            ["path", "=", "<str>"]
        );
        assert_eq!(toks("n = 1e-3 + 0x1F"), ["n", "=", "<num>", "+", "<num>"]);
    }

    #[test]
    fn keeps_identifiers_whole() {
        assert_eq!(toks("Xs_train, y = load()"), ["Xs_train", ",", "y", "=", "load", "(", ")"]);
    }

    #[test]
    fn empty_source() {
        assert!(toks("").is_empty());
        assert!(toks("# only a comment\n").is_empty());
    }

    #[test]
    fn multi_char_operators_and_triple_strings() {
        assert_eq!(
            toks("x **= 2\ndoc = \"\"\"a\n'b'\n\"\"\"\ny //= 3"),
            ["x", "**=", "<num>", "doc", "=", "<str>", "y", "//=", "<num>"]
        );
    }

    #[test]
    fn reports_lex_errors() {
        let err = tokenize_source("x = 1\ny = 'open").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(tokenize_source("cost = $5").is_err());
    }
}
