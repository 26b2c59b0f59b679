//! OEIS b-file parsing and sequence comparison.
//!
//! A b-file is a text file of `index value` lines with indices increasing by
//! one. Blank lines and lines starting with `#` are comments; whitespace
//! between and after the two fields is arbitrary.

use std::fmt;

use motzkin_shadows::chain;
use motzkin_shadows::sequence::SequenceId;
use num::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: malformed b-file line {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: index gap: expected {expected}, found {found}")]
    Gap {
        line: usize,
        expected: i64,
        found: i64,
    },
    #[error("line {line}: duplicate index {index}")]
    Duplicate { line: usize, index: i64 },
    #[error("b-file contains no entries")]
    Empty,
    #[error("b-file starts at index {found}, expected the canonical offset {expected}")]
    OffsetMismatch { expected: i64, found: i64 },
}

/// Parsed b-file: `(index, value)` entries with contiguous indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (number, raw) in text.lines().enumerate() {
            let line = number + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = || BFileError::Malformed {
                line,
                content: raw.to_owned(),
            };
            let mut fields = trimmed.split_whitespace();
            let index: i64 = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(malformed)?;
            let value: BigInt = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(malformed)?;
            if fields.next().is_some() {
                return Err(malformed());
            }
            if let Some((previous, _)) = entries.last() {
                if index == *previous {
                    return Err(BFileError::Duplicate { line, index });
                }
                if index != previous + 1 {
                    return Err(BFileError::Gap {
                        line,
                        expected: previous + 1,
                        found: index,
                    });
                }
            }
            entries.push((index, value));
        }
        if entries.is_empty() {
            return Err(BFileError::Empty);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first_index(&self) -> i64 {
        self.entries[0].0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComparisonStatus {
    Match,
    Mismatch,
    ShortReference,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub reference: BigInt,
    pub generated: BigInt,
}

/// Outcome of comparing generated terms against a reference b-file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub id: SequenceId,
    pub requested_terms: usize,
    pub terms_compared: usize,
    pub first_mismatch: Option<Mismatch>,
    pub status: ComparisonStatus,
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            ComparisonStatus::Match => write!(
                f,
                "{}: MATCH ({} terms compared)",
                self.id, self.terms_compared
            ),
            ComparisonStatus::ShortReference => write!(
                f,
                "{}: SHORT_REFERENCE ({} of {} requested terms compared, all matching)",
                self.id, self.terms_compared, self.requested_terms
            ),
            ComparisonStatus::Mismatch => {
                let m = self.first_mismatch.as_ref().expect("mismatch recorded");
                write!(
                    f,
                    "{}: MISMATCH at n={}: b-file has {}, generated {}",
                    self.id, m.index, m.reference, m.generated
                )
            }
        }
    }
}

/// Compare up to `requested_terms` generated terms against the b-file,
/// starting at the canonical offset. The b-file must start exactly there.
pub fn compare(
    id: SequenceId,
    reference: &BFile,
    requested_terms: usize,
) -> Result<ComparisonReport, BFileError> {
    if reference.first_index() != id.offset() {
        return Err(BFileError::OffsetMismatch {
            expected: id.offset(),
            found: reference.first_index(),
        });
    }
    let terms_compared = requested_terms.min(reference.len());
    let generated = chain::generate(id, terms_compared);
    let mut first_mismatch = None;
    for (index, reference_value) in reference.entries().iter().take(terms_compared) {
        let generated_value = generated.term(*index).expect("generated term in range");
        if generated_value != reference_value {
            first_mismatch = Some(Mismatch {
                index: *index,
                reference: reference_value.clone(),
                generated: generated_value.clone(),
            });
            break;
        }
    }
    let status = if first_mismatch.is_some() {
        ComparisonStatus::Mismatch
    } else if terms_compared < requested_terms {
        ComparisonStatus::ShortReference
    } else {
        ComparisonStatus::Match
    };
    Ok(ComparisonReport {
        id,
        requested_terms,
        terms_compared,
        first_mismatch,
        status,
    })
}
