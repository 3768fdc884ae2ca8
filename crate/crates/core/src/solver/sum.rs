//! Nim piles combined so that a move plays in some number of components at
//! once. With arities `{1}` this is the ordinary disjunctive sum; with
//! `{1, 2}` it is "play in G, in H, or in both" for two components.

use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use super::search::{self, Rules};
use crate::error::Error;
use crate::game::Outcome;
use crate::position::Position;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumPosition {
    components: Vec<u32>,
    arities: BTreeSet<usize>,
}

impl SumPosition {
    /// `arities` lists how many components one move may change at once.
    pub fn new(components: Vec<u32>, arities: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let arities: BTreeSet<usize> = arities.into_iter().collect();
        if arities.is_empty() || arities.contains(&0) {
            return Err(Error::InvalidRegion(
                "sum arities must be a nonempty set of positive integers".into(),
            ));
        }
        Ok(SumPosition { components, arities })
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    pub fn arities(&self) -> &BTreeSet<usize> {
        &self.arities
    }

    fn state(&self) -> Position {
        Position::canonicalize(self.components.iter().copied())
    }
}

struct SumRules<'a> {
    arities: &'a BTreeSet<usize>,
}

impl Rules for SumRules<'_> {
    type State = Position;

    fn options(&self, s: &Position) -> Vec<Position> {
        let piles = s.piles();
        let mut out = Vec::new();
        for &a in self.arities {
            if a > piles.len() {
                continue;
            }
            let mut chosen = Vec::with_capacity(a);
            choose(piles.len(), a, 0, &mut chosen, &mut |idx| {
                reductions(piles, idx, &mut out);
            });
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn choose(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for i in start..n {
        acc.push(i);
        choose(n, k, i + 1, acc, f);
        acc.pop();
    }
}

/// Every way to take a positive number of tokens from each chosen pile.
fn reductions(piles: &[u32], idx: &[usize], out: &mut Vec<Position>) {
    let mut take: Vec<u32> = vec![1; idx.len()];
    loop {
        let mut v = piles.to_vec();
        for (&i, &t) in idx.iter().zip(&take) {
            v[i] -= t;
        }
        out.push(Position::canonicalize(v));
        let mut j = 0;
        while j < take.len() {
            if take[j] < piles[idx[j]] {
                take[j] += 1;
                break;
            }
            take[j] = 1;
            j += 1;
        }
        if j == take.len() {
            return;
        }
    }
}

/// Memo for sums; one table per arity set.
#[derive(Default)]
pub struct SumMemo {
    tables: FxHashMap<Vec<usize>, FxHashMap<Position, Outcome>>,
}

impl SumMemo {
    pub fn new() -> Self {
        Self::default()
    }

    fn table(&mut self, arities: &BTreeSet<usize>) -> &mut FxHashMap<Position, Outcome> {
        self.tables
            .entry(arities.iter().copied().collect())
            .or_default()
    }
}

pub fn outcome_sum(s: &SumPosition, memo: &mut SumMemo) -> Outcome {
    let rules = SumRules { arities: &s.arities };
    search::outcome(&rules, &s.state(), memo.table(&s.arities), None).expect("unbudgeted")
}

/// All options of `s` that are P-positions, as sorted component multisets.
pub fn sum_p_options(s: &SumPosition, memo: &mut SumMemo) -> Vec<Position> {
    let rules = SumRules { arities: &s.arities };
    let table = memo.table(&s.arities);
    rules
        .options(&s.state())
        .into_iter()
        .filter(|o| search::outcome(&rules, o, table, None).expect("unbudgeted") == Outcome::P)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum(c: &[u32], a: &[usize]) -> SumPosition {
        SumPosition::new(c.to_vec(), a.iter().copied()).unwrap()
    }

    #[test]
    fn play_in_one_or_two_components() {
        let mut m = SumMemo::new();
        assert_eq!(outcome_sum(&sum(&[3, 1, 1], &[1, 2]), &mut m), Outcome::N);
        assert_eq!(outcome_sum(&sum(&[1, 1, 1], &[1, 2]), &mut m), Outcome::P);
        assert_eq!(outcome_sum(&sum(&[], &[1]), &mut m), Outcome::P);
        let p_opts = sum_p_options(&sum(&[3, 1, 1], &[1, 2]), &mut m);
        assert!(p_opts.contains(&Position::from([1, 1, 1])));
    }

    #[test]
    fn arity_one_is_nim() {
        let mut m = SumMemo::new();
        for a in 0..6u32 {
            for b in 0..6u32 {
                for c in 0..6u32 {
                    let o = outcome_sum(&sum(&[a, b, c], &[1]), &mut m);
                    assert_eq!(o.is_p(), a ^ b ^ c == 0, "{a},{b},{c}");
                }
            }
        }
    }

    #[test]
    fn rejects_empty_arities() {
        assert!(SumPosition::new(vec![1], []).is_err());
        assert!(SumPosition::new(vec![1], [0]).is_err());
    }
}
