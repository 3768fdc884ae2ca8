//! Parity patterns such as `e2,o3,o3,o3` or `<o,o,e,e,o>`.
//!
//! A slot constrains one pile: an even pile of at least `k` tokens, an odd
//! pile of at least `k` tokens, or a pile of exactly `c` tokens. Patterns
//! written with subscripted symbols match as multisets (some assignment of
//! piles to slots works); bracketed patterns match slot `i` against the
//! `i`-th smallest pile.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::position::Position;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    EvenAtLeast(u32),
    OddAtLeast(u32),
    Exactly(u32),
}

impl Slot {
    pub fn accepts(self, pile: u32) -> bool {
        match self {
            Slot::EvenAtLeast(k) => pile.is_multiple_of(2) && pile >= k,
            Slot::OddAtLeast(k) => pile % 2 == 1 && pile >= k,
            Slot::Exactly(c) => pile == c,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Slot::EvenAtLeast(k) if k <= 2 => f.write_str("e"),
            Slot::OddAtLeast(k) if k <= 1 => f.write_str("o"),
            Slot::EvenAtLeast(k) => write!(f, "e{k}"),
            Slot::OddAtLeast(k) => write!(f, "o{k}"),
            Slot::Exactly(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchMode {
    Multiset,
    Positional,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParityPattern {
    slots: Vec<Slot>,
    mode: MatchMode,
}

impl ParityPattern {
    pub fn new(slots: Vec<Slot>, mode: MatchMode) -> Self {
        ParityPattern { slots, mode }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn mode(&self) -> MatchMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn matches(&self, p: &Position) -> bool {
        let piles = p.piles();
        if piles.len() != self.slots.len() {
            return false;
        }
        match self.mode {
            MatchMode::Positional => self.slots.iter().zip(piles).all(|(s, &x)| s.accepts(x)),
            MatchMode::Multiset => {
                let mut used = vec![false; piles.len()];
                assign(&self.slots, piles, &mut used)
            }
        }
    }
}

fn assign(slots: &[Slot], piles: &[u32], used: &mut [bool]) -> bool {
    let Some((&slot, rest)) = slots.split_first() else {
        return true;
    };
    let mut last_tried = None;
    for i in 0..piles.len() {
        if used[i] || last_tried == Some(piles[i]) || !slot.accepts(piles[i]) {
            continue;
        }
        last_tried = Some(piles[i]);
        used[i] = true;
        if assign(rest, piles, used) {
            used[i] = false;
            return true;
        }
        used[i] = false;
    }
    false
}

/// Accepts `e2,o3,1` (multiset) and `<e,o,o,o>` (positional). Bare `e`
/// and `o` mean any even or odd pile.
impl FromStr for ParityPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (body, mode) = match s.strip_prefix('<').and_then(|b| b.strip_suffix('>')) {
            Some(b) => (b, MatchMode::Positional),
            None => (s, MatchMode::Multiset),
        };
        let bad = || Error::InvalidPattern(s.to_string());
        let mut slots = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let slot = if let Some(k) = tok.strip_prefix('e') {
                Slot::EvenAtLeast(if k.is_empty() { 2 } else { k.parse().map_err(|_| bad())? })
            } else if let Some(k) = tok.strip_prefix('o') {
                Slot::OddAtLeast(if k.is_empty() { 1 } else { k.parse().map_err(|_| bad())? })
            } else {
                Slot::Exactly(tok.parse().map_err(|_| bad())?)
            };
            slots.push(slot);
        }
        Ok(ParityPattern { slots, mode })
    }
}

impl fmt::Display for ParityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.slots.iter().map(|s| s.to_string()).collect();
        match self.mode {
            MatchMode::Multiset => f.write_str(&body.join(",")),
            MatchMode::Positional => write!(f, "<{}>", body.join(",")),
        }
    }
}

/// Parses a pattern literal known to be valid.
pub(crate) fn pat(s: &str) -> ParityPattern {
    s.parse().expect("pattern literal")
}
