//! Rule sets and move generation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::position::Position;

/// Which generalization is being played.
///
/// * `A`: choose any nonempty set of piles, take one token from each.
/// * `B`: take one token from any pile, or one token from every pile.
/// * `C`: take one token from any pile, or one token from each of two piles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    A,
    B,
    C,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::A, Variant::B, Variant::C];

    pub(crate) fn index(self) -> usize {
        match self {
            Variant::A => 0,
            Variant::B => 1,
            Variant::C => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "A",
            Variant::B => "B",
            Variant::C => "C",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            "C" | "c" => Ok(Variant::C),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// Normal-play outcome class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Outcome {
    /// Previous player wins.
    P,
    /// Next player wins.
    N,
}

impl Outcome {
    pub fn is_p(self) -> bool {
        self == Outcome::P
    }

    pub fn from_is_p(p: bool) -> Self {
        if p {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

impl FromStr for Outcome {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "P" => Ok(Outcome::P),
            "N" => Ok(Outcome::N),
            other => Err(Error::Table(format!("bad outcome {other:?}"))),
        }
    }
}

/// All positions reachable in one move, canonical, deduplicated and sorted.
pub fn options(variant: Variant, p: &Position) -> Vec<Position> {
    let mut out = Vec::new();
    for_each_option(variant, p, |o| out.push(o));
    out.sort_unstable();
    out.dedup();
    out
}

/// Calls `f` once per move; equal results may be reported more than once.
pub(crate) fn for_each_option<F: FnMut(Position)>(variant: Variant, p: &Position, mut f: F) {
    let piles = p.piles();
    if piles.is_empty() {
        return;
    }
    match variant {
        Variant::A => subset_options(piles, &mut f),
        Variant::B => {
            for i in p.distinct_runs() {
                f(decrement(piles, &[i]));
            }
            if piles.len() > 1 {
                let all: Vec<u32> = piles.iter().filter(|&&x| x > 1).map(|&x| x - 1).collect();
                f(Position::from_sorted_unchecked(all));
            }
        }
        Variant::C => {
            let runs: Vec<usize> = p.distinct_runs().collect();
            for (ri, &i) in runs.iter().enumerate() {
                f(decrement(piles, &[i]));
                if i + 1 < piles.len() && piles[i + 1] == piles[i] {
                    f(decrement(piles, &[i, i + 1]));
                }
                for &j in &runs[ri + 1..] {
                    f(decrement(piles, &[i, j]));
                }
            }
        }
    }
}

/// Takes a token from each listed index. Indices must be the leading
/// entries of their runs of equal sizes so sortedness is preserved.
fn decrement(piles: &[u32], idx: &[usize]) -> Position {
    let mut v = piles.to_vec();
    for &i in idx {
        v[i] -= 1;
    }
    v.retain(|&x| x > 0);
    Position::from_sorted_unchecked(v)
}

/// Version A: for each run of equal piles choose how many of them lose a
/// token; every nonzero choice vector gives a distinct option.
fn subset_options<F: FnMut(Position)>(piles: &[u32], f: &mut F) {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for (i, &x) in piles.iter().enumerate() {
        match runs.last_mut() {
            Some((start, len)) if piles[*start] == x => *len += 1,
            _ => runs.push((i, 1)),
        }
    }
    let mut take = vec![0usize; runs.len()];
    loop {
        let mut r = 0;
        while r < runs.len() {
            if take[r] < runs[r].1 {
                take[r] += 1;
                break;
            }
            take[r] = 0;
            r += 1;
        }
        if r == runs.len() {
            return;
        }
        let mut v = piles.to_vec();
        for (&(start, _), &t) in runs.iter().zip(&take) {
            for x in &mut v[start..start + t] {
                *x -= 1;
            }
        }
        v.retain(|&x| x > 0);
        f(Position::from_sorted_unchecked(v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pos<const N: usize>(a: [u32; N]) -> Position {
        Position::from(a)
    }

    #[test]
    fn version_b_two_equal_piles() {
        assert_eq!(options(Variant::B, &pos([2, 2])), vec![pos([1, 1]), pos([1, 2])]);
    }

    #[test]
    fn version_a_subsets() {
        assert_eq!(
            options(Variant::A, &pos([1, 2])),
            vec![pos([1]), pos([1, 1]), pos([2])]
        );
    }

    #[test]
    fn version_c_three_ones() {
        assert_eq!(options(Variant::C, &pos([1, 1, 1])), vec![pos([1]), pos([1, 1])]);
    }

    #[test]
    fn single_pile_and_terminal() {
        for v in Variant::ALL {
            assert!(options(v, &Position::empty()).is_empty());
            assert_eq!(options(v, &pos([3])), vec![pos([2])]);
        }
    }

    #[test]
    fn version_c_pairs_of_distinct_sizes() {
        assert_eq!(
            options(Variant::C, &pos([1, 2, 3])),
            vec![
                pos([1, 1, 2]),
                pos([1, 1, 3]),
                pos([1, 2, 2]),
                pos([1, 3]),
                pos([2, 2]),
                pos([2, 3]),
            ]
        );
    }

    /// Brute-force move generation over pile indices, independent of the
    /// run-based generator above.
    fn naive_options(v: Variant, p: &Position) -> Vec<Position> {
        let piles = p.piles();
        let k = piles.len();
        let mut out = Vec::new();
        let apply = |mask: u32| {
            let raw = piles
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { x - 1 } else { x });
            Position::canonicalize(raw)
        };
        for mask in 1u32..(1 << k) {
            let n = mask.count_ones() as usize;
            let legal = match v {
                Variant::A => true,
                Variant::B => n == 1 || n == k,
                Variant::C => n == 1 || n == 2,
            };
            if legal {
                out.push(apply(mask));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    proptest! {
        #[test]
        fn matches_naive_generator(raw in proptest::collection::vec(0u32..6, 0..7)) {
            let p = Position::canonicalize(raw);
            for v in Variant::ALL {
                prop_assert_eq!(options(v, &p), naive_options(v, &p));
            }
        }

        #[test]
        fn option_invariants(raw in proptest::collection::vec(0u32..6, 0..7)) {
            let p = Position::canonicalize(raw);
            let k = p.pile_count();
            let distinct = p.distinct_runs().count();
            for v in Variant::ALL {
                let opts = options(v, &p);
                for o in &opts {
                    prop_assert!(o.total_tokens() < p.total_tokens());
                    prop_assert_eq!(o, &Position::canonicalize(o.piles().iter().copied()));
                }
                let cap = match v {
                    Variant::A => (1usize << k) - 1,
                    Variant::B => distinct + 1,
                    Variant::C => distinct + k * k.saturating_sub(1) / 2,
                };
                prop_assert!(opts.len() <= cap);
            }
            if k == 2 {
                prop_assert_eq!(options(Variant::B, &p), options(Variant::C, &p));
            }
        }
    }
}
