//! Line-oriented text formats for partitions, templates and search
//! checkpoints.
//!
//! ```text
//! # optional comments
//! 4 2
//! 1 4
//! 2 3
//! ```
//!
//! Line 1 is `n k`; each following line lists the members of one colour in
//! ascending order. Comment lines may carry `key = value` directives, e.g.
//! `# template colour = 2`. Checkpoints use the header `n k partial` and one
//! extra leading line for colour 0 (unassigned); an empty class is written
//! as `-`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::partition::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?} (expected \"n k\")")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: {token:?} is not a non-negative integer")]
    BadInteger { line: usize, token: String },
    #[error("expected {expected} colour lines, found {found}")]
    LineCount { expected: usize, found: usize },
    #[error("line {line}: members must be strictly ascending")]
    NotAscending { line: usize },
    #[error("missing directive \"# {key} = ...\"")]
    MissingDirective { key: &'static str },
    #[error("directive {key:?}: bad value {value:?}")]
    BadDirective { key: String, value: String },
    #[error("a partial file was given where a complete partition is expected")]
    UnexpectedPartial,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A parsed file before it is turned into a domain object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawFile {
    pub order: usize,
    pub colours: usize,
    pub partial: bool,
    /// Member lines in file order. For partial files the first line is
    /// colour 0.
    pub classes: Vec<Vec<usize>>,
    pub directives: BTreeMap<String, String>,
}

impl RawFile {
    pub fn directive(&self, key: &str) -> Option<&str> {
        self.directives.get(key).map(String::as_str)
    }
}

fn parse_int(line: usize, token: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::BadInteger {
        line,
        token: token.to_string(),
    })
}

pub(crate) fn parse_raw(text: &str) -> Result<RawFile, FormatError> {
    let mut directives = BTreeMap::new();
    let mut header = None;
    let mut classes = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((k, v)) = comment.split_once('=') {
                directives.insert(k.trim().to_lowercase(), v.trim().to_string());
            }
            continue;
        }
        if header.is_none() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let partial = match tokens.as_slice() {
                [_, _] => false,
                [_, _, "partial"] => true,
                _ => {
                    return Err(FormatError::BadHeader {
                        line: line_no,
                        text: line.to_string(),
                    })
                }
            };
            let n = parse_int(line_no, tokens[0])?;
            let k = parse_int(line_no, tokens[1])?;
            header = Some((n, k, partial));
            continue;
        }
        if line == "-" {
            classes.push(Vec::new());
            continue;
        }
        let members = line
            .split_whitespace()
            .map(|t| parse_int(line_no, t))
            .collect::<Result<Vec<_>, _>>()?;
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormatError::NotAscending { line: line_no });
        }
        classes.push(members);
    }
    let (order, colours, partial) = header.ok_or(FormatError::MissingHeader)?;
    let expected = colours + usize::from(partial);
    if classes.len() != expected {
        return Err(FormatError::LineCount {
            expected,
            found: classes.len(),
        });
    }
    Ok(RawFile {
        order,
        colours,
        partial,
        classes,
        directives,
    })
}

pub fn parse_partition(text: &str) -> Result<Partition, FormatError> {
    let raw = parse_raw(text)?;
    if raw.partial {
        return Err(FormatError::UnexpectedPartial);
    }
    Ok(Partition::from_subsets(
        raw.order,
        raw.colours,
        &raw.classes,
    )?)
}

fn push_members(out: &mut String, members: &[usize]) {
    if members.is_empty() {
        out.push('-');
    }
    for (i, x) in members.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&x.to_string());
    }
    out.push('\n');
}

/// Renders a partition, preceded by the given comment lines.
pub fn write_partition(p: &Partition, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", p.order(), p.colour_count()));
    for class in p.subsets() {
        push_members(&mut out, &class);
    }
    out
}

pub(crate) fn write_partial(
    order: usize,
    colours: usize,
    classes: &[Vec<usize>],
    comments: &[String],
) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{order} {colours} partial\n"));
    for class in classes {
        push_members(&mut out, class);
    }
    out
}
