//! Offset-indexed integer sequences and the nine-sequence cluster ids.

use std::fmt;
use std::str::FromStr;

use num::BigInt;
use thiserror::Error;

/// A run of consecutive terms of an integer sequence, starting at `offset`.
/// The offset may be negative: A039834 starts at index -2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSequence {
    offset: i64,
    terms: Vec<BigInt>,
}

impl IntegerSequence {
    pub fn new(offset: i64, terms: Vec<BigInt>) -> Self {
        assert!(!terms.is_empty(), "an integer sequence holds at least one term");
        Self { offset, terms }
    }

    pub fn from_i64s(offset: i64, values: &[i64]) -> Self {
        Self::new(offset, values.iter().copied().map(BigInt::from).collect())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the last stored term.
    pub fn last_index(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }

    /// Term at sequence index `n`, or `None` outside the stored range.
    pub fn term(&self, n: i64) -> Option<&BigInt> {
        if n < self.offset {
            return None;
        }
        self.terms.get((n - self.offset) as usize)
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// Iterate over `(index, term)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms
            .iter()
            .enumerate()
            .map(move |(i, t)| (self.offset + i as i64, t))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown sequence id {0:?}; expected one of A000045, A001006, A007440, A039834, A100223, A107587, A214649, A343386, A343773")]
pub struct UnknownSequenceId(pub String);

/// The nine OEIS sequences connected by the Motzkin-to-Fibonacci chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Fibonacci numbers.
    A000045,
    /// Motzkin numbers.
    A001006,
    /// Reverse of the Fibonacci generating function.
    A007440,
    /// Signed Fibonacci numbers.
    A039834,
    /// Shadow terms with two extra head terms, indexed from 0.
    A100223,
    /// Even Motzkin path counts.
    A107587,
    /// Shadow terms with two extra head terms, indexed from -1.
    A214649,
    /// Odd Motzkin path counts.
    A343386,
    /// Shadows of the Motzkin numbers.
    A343773,
}

impl SequenceId {
    pub const ALL: [SequenceId; 9] = [
        SequenceId::A000045,
        SequenceId::A001006,
        SequenceId::A007440,
        SequenceId::A039834,
        SequenceId::A100223,
        SequenceId::A107587,
        SequenceId::A214649,
        SequenceId::A343386,
        SequenceId::A343773,
    ];

    /// Canonical OEIS offset: the index of the first term.
    pub fn offset(self) -> i64 {
        match self {
            SequenceId::A007440 => 1,
            SequenceId::A214649 => -1,
            SequenceId::A039834 => -2,
            _ => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceId::A000045 => "A000045",
            SequenceId::A001006 => "A001006",
            SequenceId::A007440 => "A007440",
            SequenceId::A039834 => "A039834",
            SequenceId::A100223 => "A100223",
            SequenceId::A107587 => "A107587",
            SequenceId::A214649 => "A214649",
            SequenceId::A343386 => "A343386",
            SequenceId::A343773 => "A343773",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceId {
    type Err = UnknownSequenceId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A000045" => Ok(SequenceId::A000045),
            "A001006" => Ok(SequenceId::A001006),
            "A007440" => Ok(SequenceId::A007440),
            "A039834" => Ok(SequenceId::A039834),
            "A100223" => Ok(SequenceId::A100223),
            "A107587" => Ok(SequenceId::A107587),
            "A214649" => Ok(SequenceId::A214649),
            "A343386" => Ok(SequenceId::A343386),
            "A343773" => Ok(SequenceId::A343773),
            _ => Err(UnknownSequenceId(s.to_owned())),
        }
    }
}
