//! Exact outcome computation.
//!
//! Positions are solved by a memoized search keyed on the canonical pile
//! multiset, so permutations of the same piles share one entry.

mod search;
pub mod sum;
pub mod vector;

use std::io::Write;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::Error;
use crate::game::{options, Outcome, Variant};
use crate::position::Position;
use crate::region::Region;

pub use sum::{outcome_sum, sum_p_options, SumMemo, SumPosition};
pub use vector::{VectorGame, VectorMemo};

struct VariantRules(Variant);

impl search::Rules for VariantRules {
    type State = Position;

    fn options(&self, s: &Position) -> Vec<Position> {
        options(self.0, s)
    }
}

/// Solved states, one table per variant. Entries are written once and never
/// change. An optional state budget turns runaway searches into errors.
#[derive(Default)]
pub struct MemoTable {
    outcomes: [FxHashMap<Position, Outcome>; 3],
    grundy: [FxHashMap<Position, u32>; 3],
    budget: Option<usize>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// At most `budget` solved states per variant and value kind.
    pub fn with_budget(budget: usize) -> Self {
        MemoTable {
            budget: Some(budget),
            ..Self::default()
        }
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    pub fn get(&self, v: Variant, p: &Position) -> Option<Outcome> {
        self.outcomes[v.index()].get(p).copied()
    }

    /// Number of solved outcome entries for `v`.
    pub fn len(&self, v: Variant) -> usize {
        self.outcomes[v.index()].len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.iter().all(|m| m.is_empty())
    }

    pub fn entries(&self, v: Variant) -> impl Iterator<Item = (&Position, Outcome)> {
        self.outcomes[v.index()].iter().map(|(p, &o)| (p, o))
    }

    pub fn try_outcome(&mut self, v: Variant, p: &Position) -> Result<Outcome, Error> {
        search::outcome(&VariantRules(v), p, &mut self.outcomes[v.index()], self.budget)
    }

    /// Panics when the table has a budget and it runs out; use
    /// [`MemoTable::try_outcome`] for budgeted tables.
    pub fn outcome(&mut self, v: Variant, p: &Position) -> Outcome {
        self.try_outcome(v, p).expect("solver state budget exceeded")
    }

    pub fn try_grundy(&mut self, v: Variant, p: &Position) -> Result<u32, Error> {
        search::grundy(&VariantRules(v), p, &mut self.grundy[v.index()], self.budget)
    }

    pub fn grundy(&mut self, v: Variant, p: &Position) -> u32 {
        self.try_grundy(v, p).expect("solver state budget exceeded")
    }

    /// The lexicographically smallest P-option, or `None` when `p` is a
    /// P-position.
    pub fn try_p_option(&mut self, v: Variant, p: &Position) -> Result<Option<Position>, Error> {
        if self.try_outcome(v, p)? == Outcome::P {
            return Ok(None);
        }
        for o in options(v, p) {
            if self.try_outcome(v, &o)? == Outcome::P {
                return Ok(Some(o));
            }
        }
        unreachable!("N-position {p} without a P-option")
    }

    pub fn p_option(&mut self, v: Variant, p: &Position) -> Option<Position> {
        self.try_p_option(v, p).expect("solver state budget exceeded")
    }

    /// Re-derives every stored outcome from the stored outcomes of its
    /// options. Returns the number of entries checked, or the first state
    /// that breaks the normal-play recursion.
    pub fn rewalk(&self, v: Variant) -> Result<usize, Position> {
        search::rewalk(&VariantRules(v), &self.outcomes[v.index()])
    }
}

/// `outcome(v, p)` with a fresh unbudgeted table.
pub fn outcome(v: Variant, p: &Position) -> Outcome {
    MemoTable::new().outcome(v, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvedEntry {
    pub position: Position,
    pub outcome: Outcome,
}

/// Outcome of every position in `region`, in the region's shortlex order.
///
/// Positions are solved in increasing total-token order so options are
/// normally already in the table when a position is reached.
pub fn solve_region(
    v: Variant,
    region: &Region,
    memo: &mut MemoTable,
) -> Result<Vec<SolvedEntry>, Error> {
    if let Some(budget) = memo.budget() {
        if region.len() > budget as u128 {
            return Err(Error::BudgetExceeded { budget });
        }
    }
    let positions: Vec<Position> = region.enumerate().collect();
    let mut by_tokens: Vec<usize> = (0..positions.len()).collect();
    by_tokens.sort_by_key(|&i| positions[i].total_tokens());
    for i in by_tokens {
        memo.try_outcome(v, &positions[i])?;
    }
    Ok(positions
        .into_iter()
        .map(|p| {
            let outcome = memo.get(v, &p).expect("solved above");
            SolvedEntry { position: p, outcome }
        })
        .collect())
}

/// `position,outcome` rows with a header line.
pub fn write_csv<W: Write>(entries: &[SolvedEntry], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["position", "outcome"])?;
    for e in entries {
        w.write_record([e.position.to_string(), e.outcome.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// One `{"position": "...", "outcome": "P"}` object per line.
pub fn write_jsonl<W: Write>(entries: &[SolvedEntry], mut out: W) -> std::io::Result<()> {
    for e in entries {
        serde_json::to_writer(&mut out, e)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
