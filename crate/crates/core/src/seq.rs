//! Degree sequences and their sorted form.
//!
//! A [`DegreeSequence`] is a nonempty list of nonnegative integers in input
//! order.  A [`SortedDegrees`] is the same multiset arranged nonincreasing,
//! carrying exact `u128` prefix sums.  Entries are capped at [`MAX_DEGREE`]
//! and lengths at [`MAX_LEN`], which gives every downstream sum provable
//! headroom: n * max degree <= 2^94 fits `u128` with room to spare, and the
//! Erdős–Gallai margin fits `i128`.

use thiserror::Error;

/// Largest admissible degree entry (2^62).
pub const MAX_DEGREE: u64 = 1 << 62;

/// Largest admissible sequence length (2^32).
pub const MAX_LEN: u64 = 1 << 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("degree sequence must contain at least one entry")]
    Empty,
    #[error("degree sequence has {0} entries, more than the supported 2^32")]
    TooLong(u64),
    #[error("degree {value} at position {index} exceeds the supported maximum 2^62")]
    DegreeTooLarge { index: usize, value: u64 },
    #[error("line {line}: {token:?} is not a nonnegative integer degree")]
    Parse { line: usize, token: String },
    #[error("values are not sorted nonincreasing at position {index}")]
    NotSorted { index: usize },
}

/// Parity of the total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        matches!(self, Parity::Even)
    }

    fn of(total: u128) -> Self {
        if total % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A degree sequence in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    values: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(values: Vec<u64>) -> Result<Self, SeqError> {
        if values.is_empty() {
            return Err(SeqError::Empty);
        }
        if values.len() as u64 > MAX_LEN {
            return Err(SeqError::TooLong(values.len() as u64));
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v > MAX_DEGREE) {
            return Err(SeqError::DegreeTooLarge { index, value });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exact sum of all entries.
    pub fn total(&self) -> u128 {
        self.values.iter().map(|&v| v as u128).sum()
    }

    pub fn sum_parity(&self) -> Parity {
        Parity::of(self.total())
    }

    /// The same multiset sorted nonincreasing.
    pub fn sorted(&self) -> SortedDegrees {
        let mut values = self.values.clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        SortedDegrees::from_sorted(values).expect("sorted copy of a valid sequence")
    }

    /// Parses the degree file format: ASCII whitespace separated nonnegative
    /// integers, `#` starts a comment running to end of line, blank lines are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self, SeqError> {
        let mut values = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            for token in line.split_ascii_whitespace() {
                let value: u64 = token.parse().map_err(|_| SeqError::Parse {
                    line: idx + 1,
                    token: token.to_owned(),
                })?;
                values.push(value);
            }
        }
        Self::new(values)
    }

    /// Renders the entries space separated on one line.
    pub fn to_line(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&v.to_string());
        }
        out
    }
}

/// A nonincreasing degree sequence with exact prefix sums.
///
/// `prefix_sum(j)` is the sum of the `j` largest entries; `prefix_sum(0)` is
/// zero and `prefix_sum(len())` is the total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedDegrees {
    values: Vec<u64>,
    prefix: Vec<u128>,
}

impl SortedDegrees {
    /// Wraps values that are already nonincreasing.
    pub fn from_sorted(values: Vec<u64>) -> Result<Self, SeqError> {
        if values.is_empty() {
            return Err(SeqError::Empty);
        }
        if values.len() as u64 > MAX_LEN {
            return Err(SeqError::TooLong(values.len() as u64));
        }
        let mut prefix = Vec::with_capacity(values.len() + 1);
        prefix.push(0u128);
        let mut acc = 0u128;
        for (index, &v) in values.iter().enumerate() {
            if v > MAX_DEGREE {
                return Err(SeqError::DegreeTooLarge { index, value: v });
            }
            if index > 0 && values[index - 1] < v {
                return Err(SeqError::NotSorted { index });
            }
            acc += v as u128;
            prefix.push(acc);
        }
        Ok(Self { values, prefix })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of the `j` largest entries, `0 <= j <= len()`.
    pub fn prefix_sum(&self, j: usize) -> u128 {
        self.prefix[j]
    }

    pub fn total(&self) -> u128 {
        self.prefix[self.values.len()]
    }

    pub fn sum_parity(&self) -> Parity {
        Parity::of(self.total())
    }

    /// Forgets the ordering, yielding a plain sequence.
    pub fn into_sequence(self) -> DegreeSequence {
        DegreeSequence {
            values: self.values,
        }
    }
}

impl From<&DegreeSequence> for SortedDegrees {
    fn from(seq: &DegreeSequence) -> Self {
        seq.sorted()
    }
}
