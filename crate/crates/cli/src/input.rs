//! System files: optional `N = ...` and `field = ...` headers, then one form
//! per line. `#` starts a comment.

use std::path::Path;

use cistab::{Error, Field, HomogPolynomial};

use crate::error::{CliError, CliResult};

#[derive(Debug)]
pub struct SystemFile {
    pub n: usize,
    pub field: Field,
    pub forms: Vec<HomogPolynomial>,
}

pub fn read_system(path: &Path, field_flag: Option<&str>) -> CliResult<SystemFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_system(&text, &path.display().to_string(), field_flag)
}

fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let (k, v) = line.split_once('=')?;
    (k.trim() == key).then(|| v.trim())
}

/// Largest `i` appearing as `x<i>`.
fn max_variable(line: &str) -> Option<usize> {
    let bytes = line.as_bytes();
    let mut best = None;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' || bytes[i] == b'X' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(v) = line[start..end].parse::<usize>() {
                best = best.max(Some(v));
            }
            i = end.max(i + 1);
        } else {
            i += 1;
        }
    }
    best
}

pub fn parse_system(text: &str, name: &str, field_flag: Option<&str>) -> CliResult<SystemFile> {
    let mut n = None;
    let mut field_header = None;
    let mut body = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        if let Some(v) = header(line, "N") {
            let parsed = v
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("{name}:{lineno}:1: `N = {v}` is not a nonnegative integer")))?;
            n = Some(parsed);
        } else if let Some(v) = header(line, "field") {
            field_header = Some((v.to_string(), lineno));
        } else {
            body.push((lineno, raw, line));
        }
    }

    let field = match (field_flag, &field_header) {
        (Some(flag), Some((h, lineno))) => {
            let a = Field::parse(flag)?;
            let b = Field::parse(h).map_err(|e| CliError::Input(format!("{name}:{lineno}:1: {e}")))?;
            if a != b {
                return Err(CliError::Input(format!(
                    "{name}:{lineno}:1: file declares field {b} but --field is {a}"
                )));
            }
            a
        }
        (Some(flag), None) => Field::parse(flag)?,
        (None, Some((h, lineno))) => {
            Field::parse(h).map_err(|e| CliError::Input(format!("{name}:{lineno}:1: {e}")))?
        }
        (None, None) => Field::rationals(),
    };

    let n = match n {
        Some(n) => n,
        None => body.iter().filter_map(|(_, _, l)| max_variable(l)).max().unwrap_or(0),
    };
    let mut forms = Vec::new();
    for (lineno, raw, line) in body {
        let offset = raw.find(line).unwrap_or(0);
        let f = HomogPolynomial::parse(line, n + 1, &field).map_err(|e| match e {
            Error::Parse { column, message } => {
                CliError::Input(format!("{name}:{lineno}:{}: {message}", column + offset))
            }
            other => CliError::Input(format!("{name}:{lineno}:{}: {other}", offset + 1)),
        })?;
        forms.push(f);
    }
    if forms.is_empty() {
        return Err(CliError::Input(format!("{name}: no equations")));
    }
    Ok(SystemFile { n, field, forms })
}
