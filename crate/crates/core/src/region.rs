//! Finite families of positions and their enumeration.
//!
//! Every region enumerates in shortlex order: fewer piles first, then
//! lexicographically by the sorted pile sequence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::position::{Position, SizeCounts};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    /// Exactly `piles` piles, each of size `1..=max_size`.
    PileCount { piles: usize, max_size: u32 },
    /// `min[i] <= a_{i+1} <= max[i]`.
    Counts { min: Vec<u32>, max: Vec<u32> },
    /// `k` piles of size 1 plus one pile of size `n`, `k <= max_k`, `n <= max_n`.
    OnesBig { max_k: u32, max_n: u32 },
}

impl Region {
    pub fn pile_count(piles: usize, max_size: u32) -> Self {
        Region::PileCount { piles, max_size }
    }

    pub fn counts(max: Vec<u32>) -> Self {
        Region::Counts {
            min: vec![0; max.len()],
            max,
        }
    }

    pub fn counts_between(min: Vec<u32>, max: Vec<u32>) -> Result<Self, Error> {
        if min.len() != max.len() || min.iter().zip(&max).any(|(a, b)| a > b) {
            return Err(Error::InvalidRegion(format!(
                "count bounds {min:?}..={max:?} are inconsistent"
            )));
        }
        Ok(Region::Counts { min, max })
    }

    pub fn ones_big(max_k: u32, max_n: u32) -> Self {
        Region::OnesBig { max_k, max_n }
    }

    /// Number of positions `enumerate` yields.
    pub fn len(&self) -> u128 {
        match self {
            Region::PileCount { piles, max_size } => {
                if *max_size == 0 {
                    return u128::from(*piles == 0);
                }
                binomial(*max_size as u128 + *piles as u128 - 1, *piles as u128)
            }
            Region::Counts { min, max } => min
                .iter()
                .zip(max)
                .map(|(a, b)| (b - a) as u128 + 1)
                .product(),
            Region::OnesBig { .. } => self.enumerate().count() as u128,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn enumerate(&self) -> Box<dyn Iterator<Item = Position> + '_> {
        match self {
            Region::PileCount { piles, max_size } => {
                Box::new(Multisets::new(*piles, *max_size))
            }
            Region::Counts { min, max } => {
                let mut all: Vec<Position> = CountVectors::new(min.clone(), max.clone())
                    .map(|c| SizeCounts(c).to_position())
                    .collect();
                all.sort_by(shortlex);
                Box::new(all.into_iter())
            }
            Region::OnesBig { max_k, max_n } => {
                let mut all: Vec<Position> = (0..=*max_n)
                    .flat_map(|n| {
                        (0..=*max_k).map(move |k| {
                            Position::canonicalize(
                                std::iter::repeat_n(1, k as usize).chain(std::iter::once(n)),
                            )
                        })
                    })
                    .collect();
                all.sort_by(shortlex);
                all.dedup();
                Box::new(all.into_iter())
            }
        }
    }

    /// Sub-region with every bound tightened by one where possible.
    pub fn shrink(&self) -> Region {
        match self {
            Region::PileCount { piles, max_size } => Region::PileCount {
                piles: *piles,
                max_size: max_size.saturating_sub(1).max(1),
            },
            Region::Counts { min, max } => Region::Counts {
                min: min.clone(),
                max: min
                    .iter()
                    .zip(max)
                    .map(|(&a, &b)| if b > a { b - 1 } else { b })
                    .collect(),
            },
            Region::OnesBig { max_k, max_n } => Region::OnesBig {
                max_k: max_k.saturating_sub(1),
                max_n: max_n.saturating_sub(1),
            },
        }
    }
}

/// Descriptor syntax, shared by `Display` and `FromStr`:
/// `piles:K:MAX`, `counts:B1,B2,...` (each `B` either `max` or `min-max`),
/// `ones-big:K:N`.
impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::PileCount { piles, max_size } => write!(f, "piles:{piles}:{max_size}"),
            Region::Counts { min, max } => {
                let parts: Vec<String> = min
                    .iter()
                    .zip(max)
                    .map(|(a, b)| if *a == 0 { b.to_string() } else { format!("{a}-{b}") })
                    .collect();
                write!(f, "counts:{}", parts.join(","))
            }
            Region::OnesBig { max_k, max_n } => write!(f, "ones-big:{max_k}:{max_n}"),
        }
    }
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidRegion(s.to_string());
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        match kind {
            "piles" => {
                let (k, m) = rest.split_once(':').ok_or_else(bad)?;
                Ok(Region::pile_count(num(k)? as usize, num(m)?))
            }
            "ones-big" => {
                let (k, n) = rest.split_once(':').ok_or_else(bad)?;
                Ok(Region::ones_big(num(k)?, num(n)?))
            }
            "counts" => {
                let (mut min, mut max) = (Vec::new(), Vec::new());
                if !rest.trim().is_empty() {
                    for part in rest.split(',') {
                        let (a, b) = match part.split_once('-') {
                            Some((a, b)) => (num(a)?, num(b)?),
                            None => (0, num(part)?),
                        };
                        min.push(a);
                        max.push(b);
                    }
                }
                Region::counts_between(min, max)
            }
            _ => Err(bad()),
        }
    }
}

/// Fewer piles first, then lexicographic.
pub fn shortlex(a: &Position, b: &Position) -> Ordering {
    a.pile_count()
        .cmp(&b.pile_count())
        .then_with(|| a.piles().cmp(b.piles()))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Nondecreasing sequences of length `len` over `1..=max`, in lexicographic order.
struct Multisets {
    current: Option<Vec<u32>>,
    max: u32,
}

impl Multisets {
    fn new(len: usize, max: u32) -> Self {
        let current = if len > 0 && max == 0 { None } else { Some(vec![1; len]) };
        Multisets { current, max }
    }
}

impl Iterator for Multisets {
    type Item = Position;

    fn next(&mut self) -> Option<Position> {
        let cur = self.current.as_mut()?;
        let out = Position::from_sorted_unchecked(cur.clone());
        match cur.iter().rposition(|&x| x < self.max) {
            Some(i) => {
                let v = cur[i] + 1;
                for x in &mut cur[i..] {
                    *x = v;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Odometer over count vectors with per-coordinate bounds.
struct CountVectors {
    current: Option<Vec<u32>>,
    min: Vec<u32>,
    max: Vec<u32>,
}

impl CountVectors {
    fn new(min: Vec<u32>, max: Vec<u32>) -> Self {
        CountVectors {
            current: Some(min.clone()),
            min,
            max,
        }
    }
}

impl Iterator for CountVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        let mut i = 0;
        loop {
            if i == cur.len() {
                self.current = None;
                break;
            }
            if cur[i] < self.max[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = self.min[i];
            i += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn list(r: &Region) -> Vec<String> {
        r.enumerate().map(|p| p.to_string()).collect()
    }

    #[test]
    fn descriptors_round_trip() {
        for d in ["piles:3:12", "counts:6,6,5", "counts:0,1-6", "ones-big:60:20", "counts:"] {
            assert_eq!(d.parse::<Region>().unwrap().to_string(), d);
        }
        assert_eq!("counts:1,1".parse::<Region>().unwrap(), Region::counts(vec![1, 1]));
        for bad in ["piles:3", "cube:1", "counts:3-1", "piles:x:2"] {
            assert!(bad.parse::<Region>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_regions() {
        assert_eq!(list(&Region::pile_count(2, 2)), ["1,1", "1,2", "2,2"]);
        assert_eq!(list(&Region::pile_count(1, 3)), ["1", "2", "3"]);
        assert_eq!(list(&Region::counts(vec![1, 1])), ["", "1", "2", "1,2"]);
        assert_eq!(list(&Region::counts(vec![])), [""]);
        assert!(list(&Region::pile_count(2, 0)).is_empty());
    }

    #[test]
    fn ones_big_collapses_duplicates() {
        // (k=1, n=1) and (k=2, n=0) are the same position.
        let r = Region::ones_big(2, 1);
        assert_eq!(list(&r), ["", "1", "1,1", "1,1,1"]);
    }

    proptest! {
        #[test]
        fn pile_count_enumeration(k in 0usize..6, m in 1u32..7) {
            let r = Region::pile_count(k, m);
            let all: Vec<Position> = r.enumerate().collect();
            prop_assert_eq!(all.len() as u128, r.len());
            for w in all.windows(2) {
                prop_assert_eq!(shortlex(&w[0], &w[1]), Ordering::Less);
            }
            for p in &all {
                prop_assert_eq!(p.pile_count(), k);
                prop_assert!(p.max_pile().unwrap_or(1) <= m);
            }
        }

        #[test]
        fn counts_enumeration(max in proptest::collection::vec(0u32..4, 0..4)) {
            let r = Region::counts(max.clone());
            let all: Vec<Position> = r.enumerate().collect();
            prop_assert_eq!(all.len() as u128, r.len());
            for w in all.windows(2) {
                prop_assert_eq!(shortlex(&w[0], &w[1]), Ordering::Less);
            }
            for p in &all {
                let c = p.to_counts(max.len()).unwrap();
                prop_assert!(c.0.iter().zip(&max).all(|(a, b)| a <= b));
            }
        }
    }
}
