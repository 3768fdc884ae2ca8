//! Vector subtraction games on `N^d`.

use rustc_hash::FxHashMap;

use super::search::{self, Rules};
use crate::error::Error;
use crate::game::Outcome;

/// A move adds one of `moves` to the current point; the result must stay
/// componentwise nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorGame {
    dimension: usize,
    moves: Vec<Vec<i64>>,
}

impl VectorGame {
    pub fn new(moves: Vec<Vec<i64>>) -> Result<Self, Error> {
        let dimension = moves
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidVectorGame("empty move set".into()))?;
        if dimension == 0 {
            return Err(Error::InvalidVectorGame("dimension must be at least 1".into()));
        }
        for m in &moves {
            if m.len() != dimension {
                return Err(Error::InvalidVectorGame(format!("{m:?} has the wrong dimension")));
            }
            if m.iter().any(|&c| c > 0) || m.iter().all(|&c| c == 0) {
                return Err(Error::InvalidVectorGame(format!(
                    "{m:?} must be nonpositive and nonzero"
                )));
            }
        }
        Ok(VectorGame { dimension, moves })
    }

    /// Two-pile one-or-one-or-one-of-both: `{(-1,0),(0,-1),(-1,-1)}`.
    pub fn classic() -> Self {
        VectorGame::new(vec![vec![-1, 0], vec![0, -1], vec![-1, -1]]).expect("valid")
    }

    /// Ones-plus-one-big-pile under version C, as `(ones, big)`:
    /// `{(0,-1),(-1,0),(-2,0),(-1,-1)}`.
    pub fn ones_big() -> Self {
        VectorGame::new(vec![vec![0, -1], vec![-1, 0], vec![-2, 0], vec![-1, -1]])
            .expect("valid")
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn moves(&self) -> &[Vec<i64>] {
        &self.moves
    }

    pub fn options(&self, x: &[u64]) -> Vec<Vec<u64>> {
        self.moves
            .iter()
            .filter_map(|m| {
                x.iter()
                    .zip(m)
                    .map(|(&xi, &mi)| xi.checked_sub(mi.unsigned_abs()))
                    .collect()
            })
            .collect()
    }
}

impl Rules for VectorGame {
    type State = Vec<u64>;

    fn options(&self, s: &Vec<u64>) -> Vec<Vec<u64>> {
        VectorGame::options(self, s)
    }
}

#[derive(Default)]
pub struct VectorMemo {
    table: FxHashMap<Vec<u64>, Outcome>,
    budget: Option<usize>,
}

impl VectorMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: usize) -> Self {
        VectorMemo {
            table: FxHashMap::default(),
            budget: Some(budget),
        }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Outcome of the point `x`. The memo must only ever be used with one game.
    pub fn outcome(&mut self, g: &VectorGame, x: &[u64]) -> Result<Outcome, Error> {
        if x.len() != g.dimension {
            return Err(Error::DimensionMismatch {
                expected: g.dimension,
                found: x.len(),
            });
        }
        search::outcome(g, &x.to_vec(), &mut self.table, self.budget)
    }

    pub fn rewalk(&self, g: &VectorGame) -> Result<usize, Vec<u64>> {
        search::rewalk(g, &self.table)
    }
}
