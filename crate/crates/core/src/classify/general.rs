//! Rules that hold across versions: the classic two-pile game, Version A,
//! the all-even rule and its odd-count consequences.

use super::Applicability;
use crate::game::{Outcome, Variant};
use crate::position::Position;

/// Two piles: P iff both are even.
pub fn classic_two_pile(p: &Position) -> Applicability {
    if p.pile_count() != 2 {
        return Applicability::NotApplicable;
    }
    Applicability::Applicable(Outcome::from_is_p(p.odd_count() == 0))
}

/// Version A: P iff every pile is even.
pub fn version_a_rule(p: &Position) -> Applicability {
    Applicability::Applicable(Outcome::from_is_p(p.odd_count() == 0))
}

/// Versions B and C: all-even positions are P. Silent otherwise.
pub fn all_even_rule(v: Variant, p: &Position) -> Applicability {
    match v {
        Variant::B | Variant::C if p.odd_count() == 0 => Applicability::Applicable(Outcome::P),
        _ => Applicability::NotApplicable,
    }
}

/// One odd pile is N in B and C; all-odd is N in B; two odd piles is N in C.
pub fn odd_count_rule(v: Variant, p: &Position) -> Applicability {
    let odd = p.odd_count();
    let n = match v {
        Variant::B => odd == 1 || (odd > 0 && odd == p.pile_count()),
        Variant::C => odd == 1 || odd == 2,
        Variant::A => false,
    };
    if n {
        Applicability::Applicable(Outcome::N)
    } else {
        Applicability::NotApplicable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Applicability::*;

    fn pos<const N: usize>(a: [u32; N]) -> Position {
        Position::from(a)
    }

    #[test]
    fn two_piles() {
        assert_eq!(classic_two_pile(&pos([2, 4])), Applicable(Outcome::P));
        assert_eq!(classic_two_pile(&pos([1, 2])), Applicable(Outcome::N));
        assert_eq!(classic_two_pile(&pos([1, 2, 3])), NotApplicable);
        assert_eq!(classic_two_pile(&pos([2, 0])), NotApplicable);
    }

    #[test]
    fn version_a() {
        assert_eq!(version_a_rule(&pos([2, 4, 6])), Applicable(Outcome::P));
        assert_eq!(version_a_rule(&pos([2, 3])), Applicable(Outcome::N));
        assert_eq!(version_a_rule(&Position::empty()), Applicable(Outcome::P));
    }

    #[test]
    fn all_even() {
        assert_eq!(all_even_rule(Variant::B, &pos([2, 2, 4])), Applicable(Outcome::P));
        assert_eq!(all_even_rule(Variant::C, &Position::empty()), Applicable(Outcome::P));
        assert_eq!(all_even_rule(Variant::B, &pos([2, 3])), NotApplicable);
    }

    #[test]
    fn odd_counts() {
        assert_eq!(odd_count_rule(Variant::B, &pos([1, 2, 2])), Applicable(Outcome::N));
        assert_eq!(odd_count_rule(Variant::B, &pos([1, 3, 5])), Applicable(Outcome::N));
        assert_eq!(odd_count_rule(Variant::C, &pos([1, 3, 2])), Applicable(Outcome::N));
        assert_eq!(odd_count_rule(Variant::C, &pos([1, 3, 5])), NotApplicable);
        assert_eq!(odd_count_rule(Variant::B, &Position::empty()), NotApplicable);
        assert_eq!(odd_count_rule(Variant::B, &pos([1, 3, 2, 2])), NotApplicable);
    }
}
