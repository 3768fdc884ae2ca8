//! The published P-position grids, transcribed cell by cell, for
//! comparison with emitted grids.

use super::grid::{Grid, GridBounds, GridKind};

/// Piles of size at most 3: one page per `a3 = 0..=5`, one string per
/// `a2 = 0..=6`, one character per `a1 = 0..=6`; `P` marks a P cell.
pub const SMALL_PILES: [[&str; 7]; 6] = [
    ["P..P..P", "P...P..", "P....P.", "P..P..P", "P...P..", "P....P.", "P..P..P"],
    ["..P...P", "....P..", "..P..P.", "...P..P", "....P..", "..P..P.", "...P..P"],
    [".P....P", "....P..", "..P..P.", "...P..P", ".P..P..", "..P..P.", "...P..P"],
    ["P..P..P", "P...P..", "P....PP", "P..P...", ".P..P..", "..P..P.", "P..P..P"],
    ["...P..P", "....P..", "..P..P.", "P..P..P", ".P..P..", "..P..P.", "P..P..P"],
    [".P....P", "....P..", "..P..P.", "P..P..P", ".P..P..", "..P..P.", "P..P..P"],
];

/// `k` ones plus a pile of `n`: the P columns `k <= 12` for rows `n = 0..=6`.
pub const ONES_BIG: [&[u32]; 7] = [
    &[0, 3, 6, 9, 12],
    &[2, 5, 8, 11],
    &[0, 4, 7, 10],
    &[2, 6, 9, 12],
    &[0, 4, 8, 11],
    &[2, 6, 10],
    &[0, 4, 8, 12],
];

pub fn published_small_piles() -> Grid {
    Grid::from_fn(GridKind::SmallPiles, GridBounds::new(6, 6, 5), |page, row, col| {
        SMALL_PILES[page as usize][row as usize].as_bytes()[col as usize] == b'P'
    })
}

pub fn published_ones_big() -> Grid {
    Grid::from_fn(GridKind::OnesBig, GridBounds::new(12, 6, 0), |_, row, col| {
        ONES_BIG[row as usize].contains(&col)
    })
}
