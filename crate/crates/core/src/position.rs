//! Canonical multi-pile positions and pile-count vectors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A position: a multiset of nonempty piles, kept sorted in nondecreasing
/// order. The empty position is terminal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Position {
    piles: Vec<u32>,
}

impl Position {
    pub fn empty() -> Self {
        Position { piles: Vec::new() }
    }

    /// Drops zero piles and sorts the rest.
    pub fn canonicalize<I: IntoIterator<Item = u32>>(raw: I) -> Self {
        let mut piles: Vec<u32> = raw.into_iter().filter(|&p| p > 0).collect();
        piles.sort_unstable();
        Position { piles }
    }

    /// Wraps a vector that is already sorted and free of zeros.
    pub(crate) fn from_sorted_unchecked(piles: Vec<u32>) -> Self {
        debug_assert!(piles.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(piles.iter().all(|&p| p > 0));
        Position { piles }
    }

    pub fn piles(&self) -> &[u32] {
        &self.piles
    }

    pub fn pile_count(&self) -> usize {
        self.piles.len()
    }

    pub fn total_tokens(&self) -> u64 {
        self.piles.iter().map(|&p| p as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.piles.is_empty()
    }

    pub fn max_pile(&self) -> Option<u32> {
        self.piles.last().copied()
    }

    /// Number of piles of exactly `size` tokens.
    pub fn multiplicity(&self, size: u32) -> usize {
        self.piles.iter().filter(|&&p| p == size).count()
    }

    /// `(even_count, odd_count)`.
    pub fn parity_census(&self) -> (usize, usize) {
        let odd = self.piles.iter().filter(|&&p| p % 2 == 1).count();
        (self.piles.len() - odd, odd)
    }

    pub fn odd_count(&self) -> usize {
        self.parity_census().1
    }

    /// Multiset union with another position.
    pub fn join(&self, other: &Position) -> Position {
        Position::canonicalize(self.piles.iter().chain(other.piles.iter()).copied())
    }

    /// `to_counts(p, n)`: how many piles of each size `1..=n`.
    pub fn to_counts(&self, n: usize) -> Result<SizeCounts, Error> {
        let mut counts = vec![0u32; n];
        for &p in &self.piles {
            if p as usize > n {
                return Err(Error::PileExceedsBound { pile: p, bound: n });
            }
            counts[p as usize - 1] += 1;
        }
        Ok(SizeCounts(counts))
    }

    /// Distinct pile sizes with their index of first occurrence.
    pub(crate) fn distinct_runs(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.piles.len()).filter(move |&i| i == 0 || self.piles[i] != self.piles[i - 1])
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.piles {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `"2,3,3,3"`; the empty string is the empty position. Input need not
/// be sorted and may contain zero piles.
impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Position::empty());
        }
        let mut raw = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::MalformedPosition(s.to_string()))?;
            raw.push(v);
        }
        Ok(Position::canonicalize(raw))
    }
}

impl TryFrom<String> for Position {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Position> for String {
    fn from(p: Position) -> String {
        p.to_string()
    }
}

impl From<&[u32]> for Position {
    fn from(raw: &[u32]) -> Self {
        Position::canonicalize(raw.iter().copied())
    }
}

impl<const N: usize> From<[u32; N]> for Position {
    fn from(raw: [u32; N]) -> Self {
        Position::canonicalize(raw)
    }
}

/// `(a_1, ..., a_n)`: `a_i` piles of size `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SizeCounts(pub Vec<u32>);

impl SizeCounts {
    pub fn new(counts: Vec<u32>) -> Self {
        SizeCounts(counts)
    }

    /// Number of size classes `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_i`, 1-based; sizes beyond `n` count as zero.
    pub fn get(&self, size: usize) -> u32 {
        if size == 0 {
            return 0;
        }
        self.0.get(size - 1).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_position(&self) -> Position {
        let mut piles = Vec::with_capacity(self.0.iter().map(|&c| c as usize).sum());
        for (i, &c) in self.0.iter().enumerate() {
            piles.extend(std::iter::repeat_n(i as u32 + 1, c as usize));
        }
        Position::from_sorted_unchecked(piles)
    }

    /// Largest size with a nonzero count.
    pub fn max_size(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c > 0).map(|i| i + 1)
    }
}

impl fmt::Display for SizeCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<&SizeCounts> for Position {
    fn from(c: &SizeCounts) -> Self {
        c.to_position()
    }
}
