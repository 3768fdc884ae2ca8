//! Oracle-versus-rule sweeps over finite regions.
//!
//! Every check enumerates a [`Region`], solves what it needs with the
//! search oracle and records disagreements in a [`VerificationReport`].
//! Sweeps split the enumeration into contiguous chunks, one per worker, each
//! with its own memo table; results are concatenated in enumeration order so
//! reports do not depend on the number of workers.

pub mod figures;
pub mod grid;
pub mod profile;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::num::NonZeroUsize;

use serde::{Deserialize, Serialize};

use crate::classify::notation::published_lines;
use crate::classify::version_c::SixFamily;
use crate::classify::{self, c_345, c_ones_big, c_six_with_ones, Applicability, ClassifierId, Kind};
use crate::error::Error;
use crate::game::{Outcome, Variant};
use crate::position::Position;
use crate::region::Region;
use crate::solver::{outcome_sum, sum_p_options, MemoTable, SumMemo, SumPosition, VectorGame, VectorMemo};

pub const DEFAULT_BUDGET: usize = 10_000_000;
pub const DEFAULT_MISMATCH_CAP: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// The shipped rule agrees with the oracle but a published reading does not.
    Partial,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Partial => "PARTIAL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub position: Position,
    pub claimed: Outcome,
    pub oracle: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub classifier: String,
    pub variant: Variant,
    pub region: String,
    pub states_checked: u64,
    pub applicable: u64,
    pub mismatch_count: u64,
    pub mismatches: Vec<Mismatch>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<Assertion>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(classifier: impl Into<String>, variant: Variant, region: impl Into<String>) -> Self {
        VerificationReport {
            classifier: classifier.into(),
            variant,
            region: region.into(),
            states_checked: 0,
            applicable: 0,
            mismatch_count: 0,
            mismatches: Vec::new(),
            status: Status::Pass,
            assertions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn record(&mut self, m: Mismatch, cap: usize) {
        self.mismatch_count += 1;
        if self.mismatches.len() < cap {
            self.mismatches.push(m);
        }
    }

    /// Sets the status from the mismatch count and assertions.
    fn settle(mut self) -> Self {
        let ok = self.mismatch_count == 0 && self.assertions.iter().all(|a| a.passed);
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One summary line, then one indented line per listed mismatch,
    /// assertion and note.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {}: checked {}, applicable {}, mismatches {}\n",
            self.status,
            self.classifier,
            self.variant,
            self.region,
            self.states_checked,
            self.applicable,
            self.mismatch_count
        );
        for m in &self.mismatches {
            let _ = write!(out, "  ({}) claimed {} oracle {}", m.position, m.claimed, m.oracle);
            if let Some(n) = &m.note {
                let _ = write!(out, " [{n}]");
            }
            out.push('\n');
        }
        if self.mismatches.len() as u64 != self.mismatch_count {
            let _ = writeln!(out, "  ... {} more", self.mismatch_count - self.mismatches.len() as u64);
        }
        for a in &self.assertions {
            let _ = writeln!(out, "  {} {}: {}", if a.passed { "ok" } else { "FAILED" }, a.name, a.detail);
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub jobs: usize,
    /// Cap on memo entries per worker and on region size.
    pub budget: Option<usize>,
    pub mismatch_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
            budget: Some(DEFAULT_BUDGET),
            mismatch_cap: DEFAULT_MISMATCH_CAP,
        }
    }
}

impl SweepOptions {
    fn memo(&self) -> MemoTable {
        self.budget.map_or_else(MemoTable::new, MemoTable::with_budget)
    }

    fn positions(&self, r: &Region) -> Result<Vec<Position>, Error> {
        if let Some(b) = self.budget {
            if r.len() > b as u128 {
                return Err(Error::BudgetExceeded { budget: b });
            }
        }
        Ok(r.enumerate().collect())
    }
}

/// Applies `f` to every position, chunked across workers with one memo each.
/// Results come back in input order.
fn par_map<T, F>(positions: &[Position], opts: &SweepOptions, f: F) -> Result<Vec<(usize, T)>, Error>
where
    T: Send,
    F: Fn(&mut MemoTable, &Position) -> Result<Option<T>, Error> + Sync,
{
    let jobs = opts.jobs.max(1).min(positions.len().max(1));
    let chunk = positions.len().div_ceil(jobs).max(1);
    let run = |start: usize, part: &[Position]| -> Result<Vec<(usize, T)>, Error> {
        let mut memo = opts.memo();
        let mut out = Vec::new();
        for (i, p) in part.iter().enumerate() {
            if let Some(t) = f(&mut memo, p)? {
                out.push((start + i, t));
            }
        }
        Ok(out)
    };
    if jobs == 1 {
        return run(0, positions);
    }
    let parts: Vec<Result<Vec<(usize, T)>, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = positions
            .chunks(chunk)
            .enumerate()
            .map(|(i, part)| {
                let run = &run;
                s.spawn(move || run(i * chunk, part))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(all)
}

enum Verdict {
    Agree,
    Disagree(Mismatch),
}

fn collect(
    mut report: VerificationReport,
    states: usize,
    verdicts: Vec<(usize, Verdict)>,
    cap: usize,
) -> VerificationReport {
    report.states_checked = states as u64;
    report.applicable = verdicts.len() as u64;
    for (_, v) in verdicts {
        if let Verdict::Disagree(m) = v {
            report.record(m, cap);
        }
    }
    report.settle()
}

/// Compares classifier `id` with the oracle on every position of `r`.
///
/// Rules are checked where they apply; reductions are checked by comparing
/// the outcome of the reduced position; the parity-function hypothesis is
/// checked by grouping, as in [`check_parity_function`].
pub fn check_classifier(
    id: ClassifierId,
    v: Variant,
    r: &Region,
    opts: &SweepOptions,
) -> Result<VerificationReport, Error> {
    if !id.supports(v) {
        return Err(Error::UnsupportedVariant { classifier: id.to_string(), variant: v.to_string() });
    }
    let positions = opts.positions(r)?;
    let report = VerificationReport::new(id.name(), v, r.to_string());
    match id.kind() {
        Kind::Rule => {
            let verdicts = par_map(&positions, opts, |memo, p| {
                let Applicability::Applicable(claimed) = classify::classify(id, v, p)? else {
                    return Ok(None);
                };
                let oracle = memo.try_outcome(v, p)?;
                Ok(Some(if claimed == oracle {
                    Verdict::Agree
                } else {
                    Verdict::Disagree(Mismatch { position: p.clone(), claimed, oracle, note: None })
                }))
            })?;
            Ok(collect(report, positions.len(), verdicts, opts.mismatch_cap))
        }
        Kind::Reduction => {
            let verdicts = par_map(&positions, opts, |memo, p| {
                let Some(r) = classify::reduce(id, p) else { return Ok(None) };
                let claimed = memo.try_outcome(v, &r)?;
                let oracle = memo.try_outcome(v, p)?;
                Ok(Some(if claimed == oracle {
                    Verdict::Agree
                } else {
                    Verdict::Disagree(Mismatch {
                        position: p.clone(),
                        claimed,
                        oracle,
                        note: Some(format!("reduces to ({r})")),
                    })
                }))
            })?;
            Ok(collect(report, positions.len(), verdicts, opts.mismatch_cap))
        }
        Kind::Hypothesis => {
            let hyp = |p: &Position| {
                classify::hypothesis_holds(id, p).then(|| p.max_pile().unwrap_or(0) as usize)
            };
            parity_groups(report, &positions, opts, hyp)
        }
    }
}

/// Checks that, among positions with largest pile `n` and `a_n >= 2n - 4`,
/// the outcome depends only on the parities of `a_1, ..., a_{n-1}`.
/// A group holding both outcomes is reported as mismatches against the
/// group's first member.
pub fn check_parity_function(n: usize, bounds: &Region, opts: &SweepOptions) -> Result<VerificationReport, Error> {
    let positions = opts.positions(bounds)?;
    let mut report = VerificationReport::new("conjecture_b_parity_function", Variant::B, bounds.to_string());
    report.notes.push(format!("n={n}, hypothesis a{n} >= {}", (2 * n).saturating_sub(4)));
    let hyp = |p: &Position| {
        (p.max_pile() == Some(n as u32)
            && p.to_counts(n).is_ok_and(|c| classify::conjecture_b_parity_function_hypothesis(n, &c)))
        .then_some(n)
    };
    parity_groups(report, &positions, opts, hyp)
}

fn parity_groups(
    mut report: VerificationReport,
    positions: &[Position],
    opts: &SweepOptions,
    hypothesis: impl Fn(&Position) -> Option<usize> + Sync,
) -> Result<VerificationReport, Error> {
    let solved = par_map(positions, opts, |memo, p| {
        let Some(n) = hypothesis(p) else { return Ok(None) };
        let parities: Vec<u32> = (1..n as u32).map(|i| p.multiplicity(i) as u32 % 2).collect();
        Ok(Some((n, parities, memo.try_outcome(Variant::B, p)?)))
    })?;
    report.states_checked = positions.len() as u64;
    report.applicable = solved.len() as u64;
    let mut first: BTreeMap<(usize, Vec<u32>), (usize, Outcome)> = BTreeMap::new();
    for (i, (n, parities, o)) in solved {
        let &mut (j, o0) = first.entry((n, parities)).or_insert((i, o));
        if o != o0 {
            report.record(
                Mismatch {
                    position: positions[i].clone(),
                    claimed: o0,
                    oracle: o,
                    note: Some(format!("same parity class as ({})", positions[j])),
                },
                opts.mismatch_cap,
            );
        }
    }
    report.notes.push(format!("{} parity classes", first.len()));
    Ok(report.settle())
}

/// The ones-plus-big-pile rule against the two-dimensional vector game
/// with moves `(0,-1), (-1,0), (-2,0), (-1,-1)` on `(ones, big)`.
pub fn check_ones_big_vector(max_k: u32, max_n: u32, opts: &SweepOptions) -> Result<VerificationReport, Error> {
    let g = VectorGame::ones_big();
    let mut memo = opts.budget.map_or_else(VectorMemo::new, VectorMemo::with_budget);
    let mut report = VerificationReport::new("c_ones_big", Variant::C, format!("vector:{max_k}:{max_n}"));
    report.notes.push("oracle is the vector subtraction game on (k, n)".into());
    for n in 0..=max_n {
        for k in 0..=max_k {
            let claimed = c_ones_big(k, n);
            let oracle = memo.outcome(&g, &[k as u64, n as u64])?;
            report.states_checked += 1;
            report.applicable += 1;
            if claimed != oracle {
                let position = Position::canonicalize(std::iter::repeat_n(1, k as usize).chain([n]));
                let note = Some(format!("k={k} n={n}"));
                report.record(Mismatch { position, claimed, oracle, note }, opts.mismatch_cap);
            }
        }
    }
    Ok(report.settle())
}

/// Naive decomposition fails: `3,1,1` is a P-position of Version C, yet
/// in the nim sum where a move touches one or two components, `3,1,1` is
/// an N-position with `1,1,1` as a P-option.
pub fn check_sum_counterexample() -> VerificationReport {
    let mut report = VerificationReport::new("sum_counterexample", Variant::C, "sum:3,1,1:arities=1,2");
    let target = Position::from([1, 1, 3]);
    let small = Position::from([1, 1, 1]);

    let mut memo = MemoTable::new();
    let rule = c_345(&target);
    let oracle_target = memo.outcome(Variant::C, &target);
    let oracle_small = memo.outcome(Variant::C, &small);
    report.states_checked += 2;
    report.applicable += 1;
    report.assertions.push(Assertion {
        name: "version_c_is_p".into(),
        passed: rule == Applicability::Applicable(Outcome::P) && oracle_target.is_p() && oracle_small.is_p(),
        detail: format!(
            "c_345(3,1,1) = {rule}, oracle (3,1,1) = {oracle_target}, oracle (1,1,1) = {oracle_small}"
        ),
    });

    let mut sums = SumMemo::new();
    let s = SumPosition::new(vec![3, 1, 1], [1, 2]).expect("valid sum");
    let o = outcome_sum(&s, &mut sums);
    let p_options = sum_p_options(&s, &mut sums);
    let small_sum = outcome_sum(&SumPosition::new(vec![1, 1, 1], [1, 2]).expect("valid sum"), &mut sums);
    report.states_checked += 2;
    report.applicable += 1;
    let listed: Vec<String> = p_options.iter().map(|p| format!("({p})")).collect();
    report.assertions.push(Assertion {
        name: "sum_game_is_n".into(),
        passed: o == Outcome::N && p_options.contains(&small) && small_sum.is_p(),
        detail: format!("sum (3,1,1) = {o}, P-options [{}], sum (1,1,1) = {small_sum}", listed.join(" ")),
    });
    report.settle()
}

/// Compares the literal reading of the published count-vector lists for
/// largest pile `n` (4 or 5) with the oracle over `a_n` in `1..=bound`,
/// other counts in `0..=bound`. PARTIAL when the shipped table is right
/// but some lines are not.
pub fn check_published_notation(n: usize, bound: u32, opts: &SweepOptions) -> Result<VerificationReport, Error> {
    let lines = published_lines(n);
    if lines.is_empty() {
        return Err(Error::InvalidRegion(format!("no published list for largest pile {n}")));
    }
    let mut min = vec![0; n];
    min[n - 1] = 1;
    let region = Region::counts_between(min, vec![bound; n])?;
    let positions = opts.positions(&region)?;
    let mut report = VerificationReport::new("b_bounded_size_notation", Variant::B, region.to_string());

    let rows = par_map(&positions, opts, |memo, p| {
        let c = p.to_counts(n)?;
        let oracle = memo.try_outcome(Variant::B, p)?;
        let table = classify::b_bounded_size(&c).outcome();
        let hits: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].matches(c.as_slice())).collect();
        Ok(Some((oracle, table, hits)))
    })?;

    let mut table_wrong = 0u64;
    let mut line_false: BTreeMap<usize, u64> = BTreeMap::new();
    report.states_checked = positions.len() as u64;
    report.applicable = rows.len() as u64;
    for (i, (oracle, table, hits)) in rows {
        if table != Some(oracle) {
            table_wrong += 1;
        }
        let claimed = Outcome::from_is_p(!hits.is_empty());
        if claimed != oracle {
            let note = if hits.is_empty() {
                "no line covers it".to_string()
            } else {
                hits.iter().map(|&h| lines[h].text).collect::<Vec<_>>().join(" | ")
            };
            for &h in &hits {
                *line_false.entry(h).or_default() += 1;
            }
            report.record(
                Mismatch { position: positions[i].clone(), claimed, oracle, note: Some(note) },
                opts.mismatch_cap,
            );
        }
    }
    report.assertions.push(Assertion {
        name: "shipped_table_matches_oracle".into(),
        passed: table_wrong == 0,
        detail: format!("{table_wrong} disagreements"),
    });
    for (h, count) in line_false {
        report.notes.push(format!("line {} claims {count} N-positions", lines[h].text));
    }
    report.status = match (table_wrong, report.mismatch_count) {
        (0, 0) => Status::Pass,
        (0, _) => Status::Partial,
        _ => Status::Fail,
    };
    Ok(report)
}

/// Compares the six-pile families exactly as printed (without the
/// `x >= 2` reading and without the oracle-found family) against the
/// oracle over six piles of size at most `max_size` with at least two 1s.
pub fn check_published_six(max_size: u32, opts: &SweepOptions) -> Result<VerificationReport, Error> {
    let region = Region::pile_count(6, max_size);
    let positions = opts.positions(&region)?;
    let mut report = VerificationReport::new("c_six_with_ones_as_printed", Variant::C, region.to_string());
    let rows = par_map(&positions, opts, |memo, p| {
        if p.multiplicity(1) < 2 {
            return Ok(None);
        }
        let printed = SixFamily::ALL
            .iter()
            .filter(|f| f.is_published())
            .any(|f| f.contains_as_printed(p.piles()));
        let shipped = c_six_with_ones(p).outcome();
        Ok(Some((Outcome::from_is_p(printed), shipped, memo.try_outcome(Variant::C, p)?)))
    })?;
    let mut shipped_wrong = 0u64;
    report.states_checked = positions.len() as u64;
    report.applicable = rows.len() as u64;
    for (i, (claimed, shipped, oracle)) in rows {
        if shipped != Some(oracle) {
            shipped_wrong += 1;
        }
        if claimed != oracle {
            let p = &positions[i];
            let note = SixFamily::ALL
                .iter()
                .find(|f| f.contains(p.piles()) != f.contains_as_printed(p.piles()) || !f.is_published() && f.contains(p.piles()))
                .map(|f| format!("{f:?}"));
            report.record(Mismatch { position: p.clone(), claimed, oracle, note }, opts.mismatch_cap);
        }
    }
    report.assertions.push(Assertion {
        name: "shipped_families_match_oracle".into(),
        passed: shipped_wrong == 0,
        detail: format!("{shipped_wrong} disagreements"),
    });
    report.status = match (shipped_wrong, report.mismatch_count) {
        (0, 0) => Status::Pass,
        (0, _) => Status::Partial,
        _ => Status::Fail,
    };
    Ok(report)
}

/// Direct check of the pair-stripping equivalences: for every `G` with
/// `1..=max_piles` piles of size at most `max_size`, `size,size,G` and `G`
/// have the same Version B outcome. For `size = 2`, `G` must have a pile of
/// at least 2; for `size = 1`, `G` must be nonempty.
pub fn check_pair_strip(size: u32, max_piles: usize, max_size: u32, opts: &SweepOptions) -> Result<VerificationReport, Error> {
    let id = match size {
        1 => ClassifierId::BStripOnes,
        2 => ClassifierId::BStripTwos,
        _ => return Err(Error::InvalidRegion(format!("no pair rule for size {size}"))),
    };
    let mut positions = Vec::new();
    for k in 1..=max_piles {
        positions.extend(opts.positions(&Region::pile_count(k, max_size))?);
    }
    let mut report = VerificationReport::new(id.name(), Variant::B, format!("G in piles:1-{max_piles}:{max_size}"));
    let verdicts = par_map(&positions, opts, |memo, g| {
        if size == 2 && g.max_pile() < Some(2) {
            return Ok(None);
        }
        let bigger = g.join(&Position::from([size, size]));
        let claimed = memo.try_outcome(Variant::B, g)?;
        let oracle = memo.try_outcome(Variant::B, &bigger)?;
        Ok(Some(if claimed == oracle {
            Verdict::Agree
        } else {
            Verdict::Disagree(Mismatch {
                position: bigger,
                claimed,
                oracle,
                note: Some(format!("G = ({g})")),
            })
        }))
    })?;
    report = collect(report, positions.len(), verdicts, opts.mismatch_cap);
    Ok(report)
}

/// Harness self-test: a PASS over `r` must also be a PASS over `r.shrink()`.
pub fn check_monotone(id: ClassifierId, v: Variant, r: &Region, opts: &SweepOptions) -> Result<bool, Error> {
    let outer = check_classifier(id, v, r, opts)?;
    let inner = check_classifier(id, v, &r.shrink(), opts)?;
    Ok(!outer.passed() || inner.passed())
}
