//! Version C: take one token from any pile, or one token from each of two piles.

use std::sync::OnceLock;

use super::Applicability;
use crate::game::Outcome;
use crate::pattern::{pat, ParityPattern};
use crate::position::{Position, SizeCounts};

fn pile_lists() -> &'static [Vec<ParityPattern>; 3] {
    static LISTS: OnceLock<[Vec<ParityPattern>; 3]> = OnceLock::new();
    LISTS.get_or_init(|| {
        let mk = |ps: &[&str]| ps.iter().map(|s| pat(s)).collect();
        [
            mk(&["<e,e,e>", "<o,o,o>"]),
            mk(&["<e,e,e,e>", "<e,o,o,o>"]),
            mk(&["<e,e,e,e,e>", "<e,e,o,o,o>", "<o,o,e,e,o>", "<o,o,o,o,e>"]),
        ]
    })
}

/// 3, 4 or 5 piles: P iff the parities of the sorted piles form a listed vector.
pub fn c_345(p: &Position) -> Applicability {
    let k = p.pile_count();
    if !(3..=5).contains(&k) {
        return Applicability::NotApplicable;
    }
    let is_p = pile_lists()[k - 3].iter().any(|q| q.matches(p));
    Applicability::Applicable(Outcome::from_is_p(is_p))
}

/// The P-families for six piles with at least two 1s, over sorted piles
/// `1,1,p2,p3,p4,p5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SixFamily {
    /// `<1,1,1,1,1,1>`
    AllOnes,
    /// `<1,1,1,1,e,o>`
    FourOnesEvenOdd,
    /// `<1,1,1,x,y,y>`, `x >= 2` with the parity of `y`
    ThreeOnesPair,
    /// `<1,1,e,e,o,o>`, last two not equal
    EvenEvenOddOdd,
    /// `<1,1,x,x,y,y+1>`, `x` odd, `y` even
    OddPairStep,
    /// `<1,1,e,o,e,e>`, last two not equal
    EvenOddEvenEven,
    /// `<1,1,x,y,z,z>`, `x` odd, `x != y`, `y` and `z` the same parity
    OddThenPair,
    /// `<1,1,x,x,y,y>`, `x` even, `y` odd
    EvenPairOddPair,
}

impl SixFamily {
    pub const ALL: [SixFamily; 8] = [
        SixFamily::AllOnes,
        SixFamily::FourOnesEvenOdd,
        SixFamily::ThreeOnesPair,
        SixFamily::EvenEvenOddOdd,
        SixFamily::OddPairStep,
        SixFamily::EvenOddEvenEven,
        SixFamily::OddThenPair,
        SixFamily::EvenPairOddPair,
    ];

    /// Whether the family appears in the published list (the last one was
    /// found by the oracle).
    pub fn is_published(self) -> bool {
        self != SixFamily::EvenPairOddPair
    }

    /// Membership under the shipped reading. `q` is the sorted piles.
    pub fn contains(self, q: &[u32]) -> bool {
        self.contains_as(q, false)
    }

    /// Membership with `<1,1,1,x,y,y>` read literally, allowing `x = 1`.
    pub fn contains_as_printed(self, q: &[u32]) -> bool {
        self.contains_as(q, true)
    }

    fn contains_as(self, q: &[u32], literal_x: bool) -> bool {
        if q.len() != 6 || q[0] != 1 || q[1] != 1 {
            return false;
        }
        let even = |x: u32| x.is_multiple_of(2);
        let [p2, p3, p4, p5] = [q[2], q[3], q[4], q[5]];
        match self {
            SixFamily::AllOnes => p5 == 1,
            SixFamily::FourOnesEvenOdd => p2 == 1 && p3 == 1 && even(p4) && !even(p5),
            SixFamily::ThreeOnesPair => {
                p2 == 1 && p4 == p5 && even(p3) == even(p4) && (literal_x || p3 >= 2)
            }
            SixFamily::EvenEvenOddOdd => even(p2) && even(p3) && !even(p4) && !even(p5) && p4 != p5,
            SixFamily::OddPairStep => p2 == p3 && !even(p2) && even(p4) && p5 == p4 + 1,
            SixFamily::EvenOddEvenEven => even(p2) && !even(p3) && even(p4) && even(p5) && p4 != p5,
            SixFamily::OddThenPair => !even(p2) && p2 != p3 && p4 == p5 && even(p3) == even(p4),
            SixFamily::EvenPairOddPair => p2 == p3 && even(p2) && p4 == p5 && !even(p4),
        }
    }
}

/// Six piles, at least two of size 1.
pub fn c_six_with_ones(p: &Position) -> Applicability {
    if p.pile_count() != 6 || p.multiplicity(1) < 2 {
        return Applicability::NotApplicable;
    }
    let is_p = SixFamily::ALL.iter().any(|f| f.contains(p.piles()));
    Applicability::Applicable(Outcome::from_is_p(is_p))
}

const SPORADIC_P: [(u32, u32, u32); 5] = [(0, 1, 3), (0, 2, 3), (1, 0, 2), (1, 0, 5), (2, 0, 1)];

const DAGGER: [(u32, u32, u32); 10] = [
    (0, 0, 4),
    (0, 0, 5),
    (1, 1, 2),
    (1, 1, 3),
    (1, 1, 4),
    (1, 1, 5),
    (2, 2, 3),
    (3, 0, 1),
    (3, 0, 2),
    (3, 0, 5),
];

/// Cell annotation for the max-pile-3 rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bounded3Class {
    /// `a1 = a3 = 0`.
    NoOddSizes,
    /// One of the five listed sporadic P-positions.
    Sporadic,
    /// `a1 + 2 a2 = 0 mod 3`, not excepted.
    Residue,
    /// Periodic exception to the residue rule (N).
    Star,
    /// Finite exception to the residue rule (N).
    Dagger,
    /// Everything else (N).
    Other,
}

impl Bounded3Class {
    pub fn outcome(self) -> Outcome {
        Outcome::from_is_p(matches!(
            self,
            Bounded3Class::NoOddSizes | Bounded3Class::Sporadic | Bounded3Class::Residue
        ))
    }
}

pub fn bounded3_class(a1: u32, a2: u32, a3: u32) -> Bounded3Class {
    if a1 == 0 && a3 == 0 {
        return Bounded3Class::NoOddSizes;
    }
    if SPORADIC_P.contains(&(a1, a2, a3)) {
        return Bounded3Class::Sporadic;
    }
    if !(a1 + 2 * a2).is_multiple_of(3) {
        return Bounded3Class::Other;
    }
    let star = (a1 == 0 && a2.is_multiple_of(3) && (a3 == 1 || a3 == 2))
        || (a1 == 1 && a2 % 3 == 1 && a3 <= 1)
        || (a1 == 2 && a2 % 3 == 2 && a3 == 0);
    if star {
        Bounded3Class::Star
    } else if DAGGER.contains(&(a1, a2, a3)) {
        Bounded3Class::Dagger
    } else {
        Bounded3Class::Residue
    }
}

/// All piles at most 3, by size counts.
pub fn c_bounded3(c: &SizeCounts) -> Applicability {
    if c.len() > 3 && c.as_slice()[3..].iter().any(|&a| a > 0) {
        return Applicability::NotApplicable;
    }
    Applicability::Applicable(bounded3_class(c.get(1), c.get(2), c.get(3)).outcome())
}

/// Conjecture: every size `1..=n` occurs at least twice and `n` is the
/// largest pile; then P iff the token total is a multiple of 3. The
/// position `1,1,2,2,3,3,3` is excluded.
pub fn conjecture_c_mod3(p: &Position, n: usize) -> Applicability {
    if n == 0 || p.max_pile() != Some(n as u32) {
        return Applicability::NotApplicable;
    }
    if (1..=n as u32).any(|i| p.multiplicity(i) < 2) || p.piles() == [1, 1, 2, 2, 3, 3, 3] {
        return Applicability::NotApplicable;
    }
    Applicability::Applicable(Outcome::from_is_p(p.total_tokens().is_multiple_of(3)))
}

/// `k` piles of size 1 and one pile of size `n`.
pub fn c_ones_big(k: u32, n: u32) -> Outcome {
    let is_p = if k >= 2 * n { (k + n).is_multiple_of(3) } else { (k + 2 * n).is_multiple_of(4) };
    Outcome::from_is_p(is_p)
}

/// Reads `p` as `k` ones plus one pile `n`. All-ones positions read as
/// `n = 1`; the empty position as `(0, 0)`.
pub fn ones_big_shape(p: &Position) -> Option<(u32, u32)> {
    match p.piles() {
        [] => Some((0, 0)),
        [ones @ .., big] if ones.iter().all(|&x| x == 1) => Some((ones.len() as u32, *big)),
        _ => None,
    }
}
