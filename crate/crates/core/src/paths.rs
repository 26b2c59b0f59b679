//! Explicit Motzkin path enumeration and parity counting.
//!
//! This module is the combinatorial ground truth the generating-function
//! machinery is checked against: paths are enumerated step by step and
//! classified by the parity of their up-step count, with a dynamic program
//! for lengths where enumeration is out of reach.

use std::fmt;

use num::{BigInt, One, Zero};
use thiserror::Error;

/// Longest length `enumerate_paths` accepts; beyond this only the dynamic
/// program is offered.
pub const ENUMERATION_CAP: usize = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("invalid step character {found:?}; expected one of U, D, H")]
    InvalidStep { found: char },
    #[error("the word is not a Motzkin path")]
    NotAPath,
    #[error("enumeration length {n} exceeds the cap of {cap}")]
    LengthOverCap { n: usize, cap: usize },
}

/// One lattice step: diagonal up, diagonal down, or horizontal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Horizontal,
}

impl Step {
    pub fn from_char(c: char) -> Result<Self, PathError> {
        match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            'H' => Ok(Step::Horizontal),
            found => Err(PathError::InvalidStep { found }),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Horizontal => 'H',
        }
    }
}

/// Path parity: even iff the number of up steps is even; the empty path is
/// even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A validated Motzkin path: never below the x-axis, ends on it. The empty
/// word is a valid path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        if is_motzkin_word(&steps) {
            Ok(Self { steps })
        } else {
            Err(PathError::NotAPath)
        }
    }

    pub fn parse(word: &str) -> Result<Self, PathError> {
        Self::new(parse_steps(word)?)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn up_steps(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Up).count()
    }

    pub fn parity(&self) -> Parity {
        if self.up_steps() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

/// Parse a word over {U, D, H}, rejecting any other character.
pub fn parse_steps(word: &str) -> Result<Vec<Step>, PathError> {
    word.chars().map(Step::from_char).collect()
}

/// True iff no prefix dips below the x-axis and the walk ends on it.
pub fn is_motzkin_word(steps: &[Step]) -> bool {
    let mut height: i64 = 0;
    for step in steps {
        match step {
            Step::Up => height += 1,
            Step::Down => {
                height -= 1;
                if height < 0 {
                    return false;
                }
            }
            Step::Horizontal => {}
        }
    }
    height == 0
}

/// String-level validity check; errors only on characters outside {U, D, H}.
pub fn is_motzkin_path(word: &str) -> Result<bool, PathError> {
    Ok(is_motzkin_word(&parse_steps(word)?))
}

/// All Motzkin paths of length n, each exactly once, in lexicographic step
/// order with D < H < U.
pub fn enumerate_paths(n: usize) -> Result<Vec<MotzkinPath>, PathError> {
    if n > ENUMERATION_CAP {
        return Err(PathError::LengthOverCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend(&mut prefix, 0, n, &mut found);
    Ok(found)
}

fn extend(prefix: &mut Vec<Step>, height: usize, remaining: usize, found: &mut Vec<MotzkinPath>) {
    if remaining == 0 {
        debug_assert_eq!(height, 0);
        found.push(MotzkinPath {
            steps: prefix.clone(),
        });
        return;
    }
    // Pruned so that height <= remaining always holds.
    if height > 0 {
        prefix.push(Step::Down);
        extend(prefix, height - 1, remaining - 1, found);
        prefix.pop();
    }
    if height <= remaining - 1 {
        prefix.push(Step::Horizontal);
        extend(prefix, height, remaining - 1, found);
        prefix.pop();
    }
    if height + 1 <= remaining - 1 {
        prefix.push(Step::Up);
        extend(prefix, height + 1, remaining - 1, found);
        prefix.pop();
    }
}

/// Even and odd path counts of length n by full enumeration.
pub fn count_by_parity_enum(n: usize) -> Result<(BigInt, BigInt), PathError> {
    let mut even = BigInt::zero();
    let mut odd = BigInt::zero();
    for path in enumerate_paths(n)? {
        match path.parity() {
            Parity::Even => even += 1,
            Parity::Odd => odd += 1,
        }
    }
    Ok((even, odd))
}

/// Even and odd path counts of length n by dynamic programming over
/// (height, up-step parity). No enumeration; works for any n.
pub fn count_by_parity_dp(n: usize) -> (BigInt, BigInt) {
    let max_height = n / 2;
    let zero_row = || vec![[BigInt::zero(), BigInt::zero()]; max_height + 1];
    let mut table = zero_row();
    table[0][0] = BigInt::one();
    for step in 0..n {
        let remaining_after = n - step - 1;
        let reachable = step.min(n - step).min(max_height);
        let mut next = zero_row();
        for height in 0..=reachable {
            for parity in 0..2 {
                let count = &table[height][parity];
                if count.is_zero() {
                    continue;
                }
                if height <= remaining_after {
                    next[height][parity] += count;
                }
                if height + 1 <= remaining_after {
                    next[height + 1][1 - parity] += count;
                }
                if height > 0 {
                    next[height - 1][parity] += count;
                }
            }
        }
        table = next;
    }
    (table[0][0].clone(), table[0][1].clone())
}
