//! Batch input: one whitespace-separated record per line, `#` comments.

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    /// 1-based line number in the input.
    pub line: usize,
    pub fields: Vec<String>,
}

/// Splits `text` into records of exactly `arity` fields. Blank and
/// comment-only lines are skipped.
pub fn parse(text: &str, arity: usize) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<String> = body.split_whitespace().map(String::from).collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != arity {
            return Err(CliError::Batch {
                line: i + 1,
                message: format!("expected {arity} fields, found {}", fields.len()),
            });
        }
        out.push(Record { line: i + 1, fields });
    }
    Ok(out)
}
