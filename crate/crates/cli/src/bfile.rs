//! OEIS b-files: `index value` per line, `#` comments, blank lines allowed.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::{CliError, Result};

/// A contiguous run of sequence terms starting at `first_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisSequence {
    id: String,
    first_index: i64,
    values: Vec<BigInt>,
}

impl OeisSequence {
    pub fn new(id: impl Into<String>, first_index: i64, values: Vec<BigInt>) -> Self {
        Self {
            id: id.into(),
            first_index,
            values,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn first_index(&self) -> i64 {
        self.first_index
    }

    pub fn last_index(&self) -> i64 {
        self.first_index + self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let offset = usize::try_from(index - self.first_index).ok()?;
        self.values.get(offset)
    }

    /// `(index, value)` pairs in file order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        (self.first_index..).zip(&self.values)
    }

    /// Renders in b-file format, one `index value` pair per line.
    pub fn to_bfile_string(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.entries() {
            writeln!(out, "{i} {v}").unwrap();
        }
        out
    }
}

/// Reads a b-file. The id is taken from the file name, so `b006958.txt`
/// becomes `A006958`.
pub fn parse_bfile(path: impl AsRef<Path>) -> Result<OeisSequence> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    let id = match stem.strip_prefix('b') {
        Some(digits) if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
            format!("A{digits}")
        }
        _ => stem.to_string(),
    };
    parse_bfile_str(&id, &text)
}

pub fn parse_bfile_str(id: &str, text: &str) -> Result<OeisSequence> {
    let mut first_index = None;
    let mut previous: Option<i64> = None;
    let mut values = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || CliError::MalformedLine {
            line: n + 1,
            content: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigInt = value.parse().map_err(|_| malformed())?;
        if let Some(prev) = previous {
            if index != prev + 1 {
                return Err(CliError::NonContiguous {
                    line: n + 1,
                    previous: prev,
                    got: index,
                });
            }
        }
        first_index.get_or_insert(index);
        previous = Some(index);
        values.push(value);
    }
    let Some(first_index) = first_index else {
        return Err(CliError::EmptyBfile { id: id.to_string() });
    };
    Ok(OeisSequence::new(id, first_index, values))
}

/// Where our sequence sits inside a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    /// b-file index of our first term.
    pub offset: i64,
    /// Terms present on both sides.
    pub shared: usize,
    /// First disagreement inside the overlap: `(b-file index, theirs, ours)`.
    pub mismatch: Option<(i64, BigInt, BigInt)>,
}

impl Alignment {
    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlignmentError {
    #[error("need at least {window} of our terms to align, have {have}")]
    TooShort { window: usize, have: usize },

    #[error("our first {window} terms do not occur in {id}")]
    NotFound { id: String, window: usize },

    #[error("our first {window} terms occur in {id} at several offsets: {offsets:?}")]
    Ambiguous {
        id: String,
        window: usize,
        offsets: Vec<i64>,
    },
}

/// Slides our first `window` terms along the b-file. Exactly one position
/// may match; the rest of the overlap is then compared term by term.
pub fn align(
    seq: &OeisSequence,
    ours: &[BigInt],
    window: usize,
) -> std::result::Result<Alignment, AlignmentError> {
    if ours.len() < window || window == 0 {
        return Err(AlignmentError::TooShort {
            window,
            have: ours.len(),
        });
    }
    let head = &ours[..window];
    let offsets: Vec<usize> = seq
        .values()
        .windows(window)
        .enumerate()
        .filter(|(_, w)| *w == head)
        .map(|(i, _)| i)
        .collect();
    let start = match offsets.as_slice() {
        [] => {
            return Err(AlignmentError::NotFound {
                id: seq.id().to_string(),
                window,
            })
        }
        [one] => *one,
        many => {
            return Err(AlignmentError::Ambiguous {
                id: seq.id().to_string(),
                window,
                offsets: many.iter().map(|&i| seq.first_index() + i as i64).collect(),
            })
        }
    };
    let theirs = &seq.values()[start..];
    let shared = theirs.len().min(ours.len());
    let mismatch = theirs.iter().zip(ours).position(|(a, b)| a != b).map(|i| {
        (
            seq.first_index() + (start + i) as i64,
            theirs[i].clone(),
            ours[i].clone(),
        )
    });
    Ok(Alignment {
        offset: seq.first_index() + start as i64,
        shared,
        mismatch,
    })
}
