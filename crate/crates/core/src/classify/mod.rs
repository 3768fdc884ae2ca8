//! Closed-form outcome rules. Each rule is total: it either commits to an
//! outcome inside its hypothesis or declines with [`Applicability::NotApplicable`].

pub mod basecase;
pub mod general;
pub mod notation;
pub mod version_b;
pub mod version_c;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::game::{Outcome, Variant};
use crate::position::{Position, SizeCounts};

pub use general::{all_even_rule, classic_two_pile, odd_count_rule, version_a_rule};
pub use version_b::{
    b_bounded_size, b_k_piles, b_strip_ones, b_strip_twos, conjecture_b_parity,
    conjecture_b_parity_function_hypothesis,
};
pub use version_c::{c_345, c_bounded3, c_ones_big, c_six_with_ones, conjecture_c_mod3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Applicability {
    Applicable(Outcome),
    NotApplicable,
}

impl Applicability {
    pub fn outcome(self) -> Option<Outcome> {
        match self {
            Applicability::Applicable(o) => Some(o),
            Applicability::NotApplicable => None,
        }
    }

    pub fn is_applicable(self) -> bool {
        matches!(self, Applicability::Applicable(_))
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Applicable(o) => write!(f, "{o}"),
            Applicability::NotApplicable => f.write_str("n/a"),
        }
    }
}

/// What a classifier produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Commits to an outcome (or declines).
    Rule,
    /// Rewrites a position into a smaller one of the same outcome.
    Reduction,
    /// Only states a hypothesis; checked by grouping oracle outcomes.
    Hypothesis,
}

macro_rules! classifier_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum ClassifierId { $(#[serde(rename = $name)] $variant,)* }

        impl ClassifierId {
            pub const ALL: &'static [ClassifierId] = &[$(ClassifierId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(ClassifierId::$variant => $name,)* }
            }
        }

        impl FromStr for ClassifierId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self, Error> {
                match s.trim() {
                    $($name => Ok(ClassifierId::$variant),)*
                    other => Err(Error::UnknownClassifier(other.to_string())),
                }
            }
        }
    };
}

classifier_ids! {
    ClassicTwoPile => "classic_two_pile",
    VersionARule => "version_a_rule",
    AllEvenRule => "all_even_rule",
    OddCountRule => "odd_count_rule",
    BStripOnes => "b_strip_ones",
    BStripTwos => "b_strip_twos",
    BKPiles => "b_k_piles",
    ConjectureBParity => "conjecture_b_parity",
    BBoundedSize => "b_bounded_size",
    ConjectureBParityFunction => "conjecture_b_parity_function",
    C345 => "c_345",
    CSixWithOnes => "c_six_with_ones",
    CBounded3 => "c_bounded3",
    ConjectureCMod3 => "conjecture_c_mod3",
    COnesBig => "c_ones_big",
}

impl fmt::Display for ClassifierId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl ClassifierId {
    pub fn variants(self) -> &'static [Variant] {
        use ClassifierId::*;
        match self {
            ClassicTwoPile => &Variant::ALL,
            VersionARule => &[Variant::A],
            AllEvenRule | OddCountRule => &[Variant::B, Variant::C],
            BStripOnes | BStripTwos | BKPiles | ConjectureBParity | BBoundedSize
            | ConjectureBParityFunction => &[Variant::B],
            C345 | CSixWithOnes | CBounded3 | ConjectureCMod3 | COnesBig => &[Variant::C],
        }
    }

    /// The variant a sweep uses when none is given.
    pub fn default_variant(self) -> Variant {
        self.variants()[0]
    }

    pub fn supports(self, v: Variant) -> bool {
        self.variants().contains(&v)
    }

    pub fn kind(self) -> Kind {
        match self {
            ClassifierId::BStripOnes | ClassifierId::BStripTwos => Kind::Reduction,
            ClassifierId::ConjectureBParityFunction => Kind::Hypothesis,
            _ => Kind::Rule,
        }
    }

    /// Whether the rule is conjectural rather than proved.
    pub fn is_conjecture(self) -> bool {
        matches!(
            self,
            ClassifierId::ConjectureBParity
                | ClassifierId::ConjectureBParityFunction
                | ClassifierId::ConjectureCMod3
        )
    }

    fn check_variant(self, v: Variant) -> Result<(), Error> {
        if self.supports(v) {
            Ok(())
        } else {
            Err(Error::UnsupportedVariant { classifier: self.name().to_string(), variant: v.to_string() })
        }
    }
}

/// Counts by size up to the largest pile, or `None` if that exceeds `limit`.
fn counts_upto(p: &Position, limit: u32) -> Option<SizeCounts> {
    let n = p.max_pile().unwrap_or(0);
    if n > limit {
        return None;
    }
    p.to_counts(n as usize).ok()
}

/// Runs rule `id` on `p` under `v`. Reductions and hypotheses never commit
/// to an outcome; see [`reduce`] and [`hypothesis_holds`].
pub fn classify(id: ClassifierId, v: Variant, p: &Position) -> Result<Applicability, Error> {
    use ClassifierId::*;
    id.check_variant(v)?;
    Ok(match id {
        ClassicTwoPile => classic_two_pile(p),
        VersionARule => version_a_rule(p),
        AllEvenRule => all_even_rule(v, p),
        OddCountRule => odd_count_rule(v, p),
        BKPiles => b_k_piles(p),
        ConjectureBParity => conjecture_b_parity(p),
        BBoundedSize => match counts_upto(p, 6) {
            Some(c) => b_bounded_size(&c),
            None => Applicability::NotApplicable,
        },
        C345 => c_345(p),
        CSixWithOnes => c_six_with_ones(p),
        CBounded3 => match counts_upto(p, 3) {
            Some(c) => c_bounded3(&c),
            None => Applicability::NotApplicable,
        },
        ConjectureCMod3 => conjecture_c_mod3(p, p.max_pile().unwrap_or(0) as usize),
        COnesBig => match version_c::ones_big_shape(p) {
            Some((k, n)) => Applicability::Applicable(c_ones_big(k, n)),
            None => Applicability::NotApplicable,
        },
        BStripOnes | BStripTwos | ConjectureBParityFunction => Applicability::NotApplicable,
    })
}

/// The reduced position for a reduction rule, if it changes `p`.
pub fn reduce(id: ClassifierId, p: &Position) -> Option<Position> {
    let r = match id {
        ClassifierId::BStripOnes => b_strip_ones(p),
        ClassifierId::BStripTwos => b_strip_twos(p),
        _ => return None,
    };
    (r != *p).then_some(r)
}

/// Whether a hypothesis-only rule's hypothesis holds for `p`.
pub fn hypothesis_holds(id: ClassifierId, p: &Position) -> bool {
    match id {
        ClassifierId::ConjectureBParityFunction => {
            let n = p.max_pile().unwrap_or(0) as usize;
            p.to_counts(n).is_ok_and(|c| conjecture_b_parity_function_hypothesis(n, &c))
        }
        _ => false,
    }
}

/// Every committed verdict under `v` for `p`, in id order.
pub fn applicable(v: Variant, p: &Position) -> Vec<(ClassifierId, Outcome)> {
    ClassifierId::ALL
        .iter()
        .filter(|id| id.supports(v))
        .filter_map(|&id| classify(id, v, p).ok()?.outcome().map(|o| (id, o)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for &id in ClassifierId::ALL {
            assert_eq!(id.name().parse::<ClassifierId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert!("nope".parse::<ClassifierId>().is_err());
    }

    #[test]
    fn rejects_unsupported_variant() {
        let p = Position::from([1, 2, 3]);
        assert!(classify(ClassifierId::C345, Variant::B, &p).is_err());
        assert!(classify(ClassifierId::C345, Variant::C, &p).is_ok());
    }

    #[test]
    fn applicable_verdicts_agree() {
        let p = Position::from([2, 2, 4]);
        let all = applicable(Variant::B, &p);
        assert!(all.iter().any(|&(id, _)| id == ClassifierId::AllEvenRule));
        assert!(all.iter().all(|&(_, o)| o == Outcome::P));
    }

    #[test]
    fn reductions() {
        let p = Position::from([1, 1, 5]);
        assert_eq!(reduce(ClassifierId::BStripOnes, &p), Some(Position::from([5])));
        assert_eq!(reduce(ClassifierId::BStripTwos, &p), None);
        assert!(hypothesis_holds(ClassifierId::ConjectureBParityFunction, &Position::from([1, 2, 3, 3])));
    }
}
