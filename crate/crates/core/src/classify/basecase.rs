//! Oracle-generated outcome tables for Version B positions whose largest
//! pile is 4 or 5.
//!
//! A section covers positions with `a_n >= 1` and no pile above `n`. Along
//! each coordinate `i` the outcome is periodic with period 2 from
//! `periodic_from[i]` on, so a finite table of representatives decides every
//! such position. The table is generated by exhaustive search over
//! `bounds` and shipped as a text file:
//!
//! ```text
//! format 1
//! section B 4 bounds=10,10,10,10 periodic_from=0,0,3,4
//! B 4 0,0,0,1 N
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::Error;
use crate::game::{Outcome, Variant};
use crate::position::SizeCounts;
use crate::region::Region;
use crate::solver::MemoTable;

/// The table shipped with the crate.
pub const SHIPPED_TABLE: &str = include_str!("../../data/basecase_b_v1.txt");

/// Sections the shipped table was generated with: `(variant, n, bound)`.
pub const SHIPPED_SECTIONS: [(Variant, usize, u32); 2] = [(Variant::B, 4, 10), (Variant::B, 5, 10)];

const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub variant: Variant,
    pub n: usize,
    pub bounds: Vec<u32>,
    pub periodic_from: Vec<u32>,
    pub entries: BTreeMap<Vec<u32>, Outcome>,
}

impl Section {
    fn lower(&self, i: usize) -> u32 {
        u32::from(i + 1 == self.n)
    }

    /// Representative count vector for `counts`, or `None` if the counts are
    /// outside this section (wrong largest size).
    pub fn representative(&self, counts: &[u32]) -> Option<Vec<u32>> {
        if counts.len() != self.n || counts[self.n - 1] == 0 {
            return None;
        }
        Some(
            counts
                .iter()
                .zip(&self.periodic_from)
                .map(|(&v, &s)| if v < s + 2 { v } else { s + (v - s) % 2 })
                .collect(),
        )
    }

    pub fn lookup(&self, counts: &[u32]) -> Option<Outcome> {
        self.entries.get(&self.representative(counts)?).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BaseCaseTable {
    sections: Vec<Section>,
}

impl BaseCaseTable {
    /// The shipped table, parsed once.
    pub fn shipped() -> &'static BaseCaseTable {
        static TABLE: OnceLock<BaseCaseTable> = OnceLock::new();
        TABLE.get_or_init(|| BaseCaseTable::parse(SHIPPED_TABLE).expect("shipped base-case table"))
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn section(&self, v: Variant, n: usize) -> Option<&Section> {
        self.sections.iter().find(|s| s.variant == v && s.n == n)
    }

    /// Outcome for `counts`, where `counts.max_size()` selects the section.
    pub fn lookup(&self, v: Variant, counts: &SizeCounts) -> Option<Outcome> {
        let n = counts.max_size()?;
        self.section(v, n)?.lookup(&counts.as_slice()[..n])
    }

    /// Solves every count vector with `a_n` in `1..=bound` and the other
    /// counts in `0..=bound`, then keeps one representative per periodic class.
    pub fn generate(specs: &[(Variant, usize, u32)]) -> Result<Self, Error> {
        let mut sections = Vec::new();
        for &(variant, n, bound) in specs {
            sections.push(generate_section(variant, n, bound)?);
        }
        Ok(BaseCaseTable { sections })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("# Outcome classes of Version B positions by pile-size counts a1..an,\n");
        out.push_str("# generated by exhaustive search. Counts at or above periodic_from\n");
        out.push_str("# repeat with period 2. Lines: variant n counts outcome.\n");
        let _ = writeln!(out, "format {FORMAT_VERSION}");
        for s in &self.sections {
            let _ = writeln!(
                out,
                "section {} {} bounds={} periodic_from={}",
                s.variant,
                s.n,
                join(&s.bounds),
                join(&s.periodic_from)
            );
            for (c, o) in &s.entries {
                let _ = writeln!(out, "{} {} {} {}", s.variant, s.n, join(c), o);
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let err = |line: usize, msg: &str| Error::Table(format!("line {}: {msg}", line + 1));
        let mut sections: Vec<Section> = Vec::new();
        let mut saw_format = false;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["format", v] => {
                    if v.parse::<u32>().ok() != Some(FORMAT_VERSION) {
                        return Err(err(ln, "unsupported format version"));
                    }
                    saw_format = true;
                }
                ["section", v, n, bounds, periodic] => {
                    let variant: Variant = v.parse()?;
                    let n: usize = n.parse().map_err(|_| err(ln, "bad n"))?;
                    let bounds = parse_list(bounds.strip_prefix("bounds=").ok_or_else(|| err(ln, "bounds"))?)
                        .ok_or_else(|| err(ln, "bad bounds"))?;
                    let periodic_from = parse_list(
                        periodic.strip_prefix("periodic_from=").ok_or_else(|| err(ln, "periodic_from"))?,
                    )
                    .ok_or_else(|| err(ln, "bad periodic_from"))?;
                    if bounds.len() != n || periodic_from.len() != n {
                        return Err(err(ln, "section vectors must have n entries"));
                    }
                    sections.push(Section {
                        variant,
                        n,
                        bounds,
                        periodic_from,
                        entries: BTreeMap::new(),
                    });
                }
                [v, n, counts, o] => {
                    if !saw_format {
                        return Err(err(ln, "missing format header"));
                    }
                    let s = sections.last_mut().ok_or_else(|| err(ln, "entry before section"))?;
                    let variant: Variant = v.parse()?;
                    let n: usize = n.parse().map_err(|_| err(ln, "bad n"))?;
                    if variant != s.variant || n != s.n {
                        return Err(err(ln, "entry does not match its section"));
                    }
                    let c = parse_list(counts).ok_or_else(|| err(ln, "bad counts"))?;
                    if c.len() != n {
                        return Err(err(ln, "counts must have n entries"));
                    }
                    s.entries.insert(c, o.parse()?);
                }
                _ => return Err(err(ln, "unrecognized line")),
            }
        }
        for s in &sections {
            let expected: usize = (0..s.n)
                .map(|i| (s.periodic_from[i] + 2 - s.lower(i)) as usize)
                .product();
            if s.entries.len() != expected {
                return Err(Error::Table(format!(
                    "section {} {} has {} entries, expected {expected}",
                    s.variant,
                    s.n,
                    s.entries.len()
                )));
            }
        }
        Ok(BaseCaseTable { sections })
    }
}

fn generate_section(variant: Variant, n: usize, bound: u32) -> Result<Section, Error> {
    let mut min = vec![0; n];
    min[n - 1] = 1;
    let region = Region::counts_between(min.clone(), vec![bound; n])?;
    let mut memo = MemoTable::new();
    let mut solved: BTreeMap<Vec<u32>, Outcome> = BTreeMap::new();
    let mut positions: Vec<_> = region.enumerate().collect();
    positions.sort_by_key(|p| p.total_tokens());
    for p in positions {
        let o = memo.try_outcome(variant, &p)?;
        solved.insert(p.to_counts(n)?.0, o);
    }

    let mut periodic_from = min.clone();
    for (c, o) in &solved {
        for i in 0..n {
            if c[i] >= min[i] + 2 {
                let mut d = c.clone();
                d[i] -= 2;
                if solved[&d] != *o {
                    periodic_from[i] = periodic_from[i].max(c[i] - 1);
                }
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| periodic_from[i] + 2 > bound) {
        return Err(Error::Table(format!(
            "bound {bound} too small to observe periodicity of a{}",
            i + 1
        )));
    }

    let mut section = Section {
        variant,
        n,
        bounds: vec![bound; n],
        periodic_from,
        entries: BTreeMap::new(),
    };
    for (c, o) in &solved {
        if section.representative(c).as_ref() == Some(c) {
            section.entries.insert(c.clone(), *o);
        }
    }
    Ok(section)
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Option<Vec<u32>> {
    s.split(',').map(|t| t.parse().ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table_parses() {
        let t = BaseCaseTable::shipped();
        assert_eq!(t.sections().len(), 2);
        assert_eq!(t.render(), SHIPPED_TABLE);
    }

    #[test]
    fn lookups_follow_periodicity() {
        let t = BaseCaseTable::shipped();
        let s = t.section(Variant::B, 4).unwrap();
        let big = vec![12, 13, 20, 31];
        let rep = s.representative(&big).unwrap();
        assert!(rep.iter().zip(&s.periodic_from).all(|(&r, &p)| r < p + 2));
        assert_eq!(rep.iter().zip(&big).filter(|(a, b)| (*a + *b) % 2 == 1).count(), 0);
        assert_eq!(s.lookup(&[1, 1, 1, 0]), None);
    }

    #[test]
    fn small_generation_matches_solver() {
        let t = BaseCaseTable::generate(&[(Variant::B, 3, 7)]).unwrap();
        let s = t.section(Variant::B, 3).unwrap();
        let mut memo = MemoTable::new();
        for a1 in 0..10 {
            for a2 in 0..10 {
                for a3 in 1..10 {
                    let c = SizeCounts(vec![a1, a2, a3]);
                    assert_eq!(
                        t.lookup(Variant::B, &c),
                        Some(memo.outcome(Variant::B, &c.to_position())),
                        "{c}"
                    );
                }
            }
        }
        assert_eq!(BaseCaseTable::parse(&t.render()).unwrap(), t);
        assert!(s.entries.len() < 100);
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(BaseCaseTable::parse("B 4 0,0,0,1 N").is_err());
        assert!(BaseCaseTable::parse("format 2\n").is_err());
        assert!(BaseCaseTable::parse("format 1\nsection B 2 bounds=3,3 periodic_from=0,1\n").is_err());
        assert!(BaseCaseTable::generate(&[(Variant::B, 4, 3)]).is_err());
    }
}
