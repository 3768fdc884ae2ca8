//! Version B: take one token from any pile, or one token from every pile.

use std::sync::OnceLock;

use super::basecase::BaseCaseTable;
use super::Applicability;
use crate::game::{Outcome, Variant};
use crate::pattern::{pat, ParityPattern};
use crate::position::{Position, SizeCounts};

/// Removes pairs of 1-piles while something else remains. Under Version B
/// `1,1,G` and `G` have the same outcome for nonempty `G`.
pub fn b_strip_ones(p: &Position) -> Position {
    strip_pairs(p, 1, |rest| !rest.is_empty())
}

/// Removes pairs of 2-piles while a pile of at least 2 remains. Under
/// Version B `2,2,G` and `G` have the same outcome when `G` has such a pile.
pub fn b_strip_twos(p: &Position) -> Position {
    strip_pairs(p, 2, |rest| rest.max_pile().is_some_and(|m| m >= 2))
}

fn strip_pairs(p: &Position, size: u32, keep: impl Fn(&Position) -> bool) -> Position {
    let mut removable = p.multiplicity(size) / 2;
    let others: Vec<u32> = p.piles().iter().copied().filter(|&x| x != size).collect();
    let mult = p.multiplicity(size);
    loop {
        if removable == 0 {
            return p.clone();
        }
        let left = mult - 2 * removable;
        let rest = Position::canonicalize(
            others.iter().copied().chain(std::iter::repeat_n(size, left)),
        );
        if keep(&rest) {
            return rest;
        }
        removable -= 1;
    }
}

struct PileLemma {
    patterns: Vec<ParityPattern>,
    exceptions: Vec<ParityPattern>,
}

fn pile_lemmas() -> &'static [PileLemma; 4] {
    static LEMMAS: OnceLock<[PileLemma; 4]> = OnceLock::new();
    LEMMAS.get_or_init(|| {
        let mk = |ps: &[&str], ex: &[&str]| PileLemma {
            patterns: ps.iter().map(|s| pat(s)).collect(),
            exceptions: ex.iter().map(|s| pat(s)).collect(),
        };
        [
            mk(&["e2,e2,e2", "e2,o1,o1"], &[]),
            mk(&["1,1,e2,e2", "e2,e2,e2,e2", "e2,o3,o3,o3"], &[]),
            mk(
                &[
                    "1,1,e2,e2,e2",
                    "1,1,e2,o1,o1",
                    "1,2,e2,e2,o3",
                    "1,e4,e4,o5,o5",
                    "e2,e2,e2,e2,e2",
                    "e2,o3,o3,o3,o3",
                    "e2,e2,e2,o3,o3",
                ],
                &["2,e4,e4,o5,o5"],
            ),
            mk(
                &[
                    "1,1,1,1,e2,e2",
                    "1,1,e2,e2,e2,e2",
                    "1,1,e2,o3,o3,o3",
                    "1,2,e4,e4,e4,o3",
                    "1,3,e6,e6,o5,o5",
                    "2,3,e6,e6,e6,o5",
                    "2,e2,e2,o3,o3,o3",
                    "e2,e2,e2,e2,e2,e2",
                    "e4,e4,e4,e4,o3,o3",
                    "e2,o3,o3,o3,o3,o3",
                ],
                &["2,3,e6,e6,o5,o5"],
            ),
        ]
    })
}

/// The listed P-patterns for 3 to 6 piles, with their stated exceptions.
pub fn b_k_piles(p: &Position) -> Applicability {
    let k = p.pile_count();
    if !(3..=6).contains(&k) {
        return Applicability::NotApplicable;
    }
    let lemma = &pile_lemmas()[k - 3];
    let is_p = lemma.patterns.iter().any(|q| q.matches(p))
        && !lemma.exceptions.iter().any(|q| q.matches(p));
    Applicability::Applicable(Outcome::from_is_p(is_p))
}

/// The P-patterns `b_k_piles` uses for `k` piles, for display.
pub fn b_k_pile_patterns(k: usize) -> Option<(Vec<String>, Vec<String>)> {
    let lemma = pile_lemmas().get(k.checked_sub(3)?)?;
    let show = |v: &[ParityPattern]| v.iter().map(|q| q.to_string()).collect();
    Some((show(&lemma.patterns), show(&lemma.exceptions)))
}

/// Conjectured rule for `k >= 3` piles that all exceed `ceil(k/3)`: the
/// outcome depends only on `k` and the number of odd piles.
pub fn conjecture_b_parity(p: &Position) -> Applicability {
    let k = p.pile_count();
    if k < 3 {
        return Applicability::NotApplicable;
    }
    let m = k.div_ceil(3) as u32;
    if p.piles()[0] <= m {
        return Applicability::NotApplicable;
    }
    Applicability::Applicable(Outcome::from_is_p(parity_rule_is_p(k, p.odd_count())))
}

/// Whether `odd` odd piles out of `k` is a P-count under the conjecture.
pub fn parity_rule_is_p(k: usize, odd: usize) -> bool {
    if k % 2 == 1 {
        return odd.is_multiple_of(2);
    }
    // Even odd-counts up to a cutoff below k/2, odd odd-counts from just above k/2.
    let (even_max, odd_min) = if k.is_multiple_of(4) {
        (k / 2 - 2, k / 2 + 1)
    } else {
        (k / 2 - 1, k / 2 + 2)
    };
    if odd.is_multiple_of(2) {
        odd <= even_max
    } else {
        odd >= odd_min && odd < k
    }
}

/// Positions whose piles are all small, by their size counts.
///
/// * largest pile at most 3: closed form;
/// * largest pile 4 or 5: shipped oracle table;
/// * largest pile 6 with `a6 >= 8`: parity rule on `a5 + a3`, `a2`, `a1`;
/// * anything else: not applicable.
pub fn b_bounded_size(c: &SizeCounts) -> Applicability {
    let Some(n) = c.max_size() else {
        return Applicability::Applicable(Outcome::P);
    };
    let a = |i| c.get(i);
    let verdict = match n {
        1..=3 => {
            let (a1, a2, a3) = (a(1), a(2), a(3));
            let is_p = (a1 % 2 == 0 && a2 >= 1 && a3 == 0)
                || (a1 % 2 == 1 && a2 % 2 == 1 && a3 == 1)
                || (a1 % 2 == 0 && a2 % 2 == 1 && a3 >= 2);
            Some(Outcome::from_is_p(is_p))
        }
        4 | 5 => BaseCaseTable::shipped().lookup(Variant::B, c),
        6 if a(6) >= 8 => {
            let s = a(5) + a(3);
            let is_p = (s % 2 == 0 && a(1) % 2 == 0) || (s % 2 == 1 && a(2) % 2 == 1 && a(1) % 2 == 1);
            Some(Outcome::from_is_p(is_p))
        }
        _ => None,
    };
    verdict.map_or(Applicability::NotApplicable, Applicability::Applicable)
}

/// Hypothesis of the parity-function conjecture: `n >= 3` and `a_n >= 2n - 4`.
pub fn conjecture_b_parity_function_hypothesis(n: usize, c: &SizeCounts) -> bool {
    n >= 3 && c.get(n) as usize >= 2 * n - 4
}
