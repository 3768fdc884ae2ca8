//! Acceptance suite: one line per criterion, PASS or FAIL with the evidence.
//! Runs as a plain binary so the lines always print; exits nonzero if any
//! criterion fails.

use std::time::Instant;

use oooooob::classify::basecase::{BaseCaseTable, SHIPPED_SECTIONS, SHIPPED_TABLE};
use oooooob::classify::{self, ClassifierId};
use oooooob::verify::figures::{published_ones_big, published_small_piles};
use oooooob::verify::grid::{emit_grid, GridBounds, GridKind, GridSource};
use oooooob::verify::{self, check_classifier, check_pair_strip, check_parity_function};
use oooooob::{MemoTable, Outcome, Position, Region, SweepOptions, Variant, VerificationReport};
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Check = Result<String, String>;

fn opts() -> SweepOptions {
    SweepOptions { mismatch_cap: 10, ..SweepOptions::default() }
}

/// Runs one sweep; `Err` carries the first mismatches.
fn sweep(id: ClassifierId, v: Variant, r: &Region) -> Result<VerificationReport, String> {
    let rep = check_classifier(id, v, r, &opts()).map_err(|e| format!("{id} {v} {r}: {e}"))?;
    require(rep)
}

fn require(rep: VerificationReport) -> Result<VerificationReport, String> {
    if rep.passed() {
        Ok(rep)
    } else {
        let first: Vec<String> = rep
            .mismatches
            .iter()
            .take(3)
            .map(|m| format!("({}) claimed {} oracle {}", m.position, m.claimed, m.oracle))
            .collect();
        Err(format!(
            "{} {} {}: {} mismatches, e.g. {}",
            rep.classifier,
            rep.variant,
            rep.region,
            rep.mismatch_count,
            first.join("; ")
        ))
    }
}

fn two_pile_and_version_a() -> Check {
    let mut checked = 0;
    for k in 0..=6 {
        checked += sweep(ClassifierId::VersionARule, Variant::A, &Region::pile_count(k, 10))?.applicable;
    }
    for v in Variant::ALL {
        checked += sweep(ClassifierId::ClassicTwoPile, v, &Region::pile_count(2, 30))?.applicable;
    }
    Ok(format!("{checked} positions, no mismatches"))
}

fn even_and_odd_rules() -> Check {
    let mut memo = MemoTable::new();
    let regions = [
        Region::pile_count(3, 10),
        Region::pile_count(4, 10),
        Region::pile_count(5, 8),
        Region::counts(vec![6, 6, 6, 6]),
    ];
    for v in [Variant::B, Variant::C] {
        for r in &regions {
            for p in r.enumerate() {
                memo.outcome(v, &p);
            }
        }
    }
    let mut entries = 0;
    for v in [Variant::B, Variant::C] {
        for (p, o) in memo.entries(v) {
            entries += 1;
            for rule in [classify::all_even_rule(v, p), classify::odd_count_rule(v, p)] {
                if let Some(claimed) = rule.outcome() {
                    if claimed != o {
                        return Err(format!("{v} ({p}): rule says {claimed}, oracle {o}"));
                    }
                }
            }
        }
    }
    Ok(format!("{entries} solved states of B and C, no violations"))
}

fn pair_stripping() -> Check {
    let ones = require(check_pair_strip(1, 5, 8, &opts()).map_err(|e| e.to_string())?)?;
    let twos = require(check_pair_strip(2, 5, 8, &opts()).map_err(|e| e.to_string())?)?;
    let mut memo = MemoTable::new();
    if memo.outcome(Variant::B, &Position::from([1, 1])) != Outcome::N {
        return Err("(1,1) should be N".into());
    }
    Ok(format!("1,1,G: {} cases; 2,2,G: {} cases", ones.applicable, twos.applicable))
}

fn b_pile_lists() -> Check {
    let mut n = 0;
    for k in 3..=6 {
        n += sweep(ClassifierId::BKPiles, Variant::B, &Region::pile_count(k, 12))?.applicable;
    }
    let mut memo = MemoTable::new();
    for s in ["2,4,4,5,5", "2,3,5,5,6,6"] {
        let p: Position = s.parse().unwrap();
        let rule = classify::b_k_piles(&p).outcome();
        let oracle = memo.outcome(Variant::B, &p);
        if rule != Some(Outcome::N) || oracle != Outcome::N {
            return Err(format!("exception ({p}): rule {rule:?}, oracle {oracle}"));
        }
    }
    Ok(format!("{n} positions over 3..6 piles <= 12, both exceptions N"))
}

fn b_bounded_sizes() -> Check {
    let regions = ["counts:6,6,6", "counts:6,6,6,1-6", "counts:6,6,6,6,1-6", "counts:4,4,4,4,4,8-12"];
    let mut n = 0;
    for r in regions {
        n += sweep(ClassifierId::BBoundedSize, Variant::B, &r.parse().unwrap())?.applicable;
    }
    let regenerated = BaseCaseTable::generate(&SHIPPED_SECTIONS).map_err(|e| e.to_string())?.render();
    if regenerated != SHIPPED_TABLE {
        return Err("regenerated base-case table differs from the shipped file".into());
    }
    Ok(format!("{n} positions; regenerated table byte-identical ({} bytes)", regenerated.len()))
}

fn odd_pile_parity() -> Check {
    let mut n = 0;
    for k in 3..=11 {
        n += sweep(ClassifierId::ConjectureBParity, Variant::B, &Region::pile_count(k, 10))?.applicable;
    }
    Ok(format!("{n} positions with 3..11 piles <= 10 in scope, no counterexample"))
}

fn parity_function() -> Check {
    let mut parts = Vec::new();
    for n in 3..=5usize {
        let rep = require(check_parity_function(n, &Region::counts(vec![5; n]), &opts()).map_err(|e| e.to_string())?)?;
        parts.push(format!("n={n}: {}", rep.applicable));
    }
    // With every count at most 5 the n = 5 hypothesis (a5 >= 6) is empty; widen a5.
    let wide = Region::counts_between(vec![0, 0, 0, 0, 6], vec![5, 5, 5, 5, 10]).unwrap();
    let rep = require(check_parity_function(5, &wide, &opts()).map_err(|e| e.to_string())?)?;
    parts.push(format!("n=5 with a5 in 6..=10: {}", rep.applicable));
    Ok(format!("constant on parity classes ({})", parts.join(", ")))
}

fn version_c_lemmas() -> Check {
    let mut n = 0;
    for k in 3..=5 {
        n += sweep(ClassifierId::C345, Variant::C, &Region::pile_count(k, 12))?.applicable;
    }
    let six = sweep(ClassifierId::CSixWithOnes, Variant::C, &Region::pile_count(6, 10))?.applicable;
    let b3 = sweep(ClassifierId::CBounded3, Variant::C, &Region::counts(vec![12, 12, 12]))?.applicable;
    let rule = emit_grid(GridKind::SmallPiles, GridBounds::new(6, 6, 5), GridSource::Classifier, &mut MemoTable::new())
        .map_err(|e| e.to_string())?;
    let diff = rule.diff(&published_small_piles());
    if !diff.is_empty() {
        let cells: Vec<String> = diff
            .iter()
            .map(|&(a3, a2, a1)| format!("(a1,a2,a3)=({a1},{a2},{a3}) rule {}", if rule.is_p(a3, a2, a1) { "P" } else { "N" }))
            .collect();
        return Err(format!(
            "sweeps pass (c_345 {n}, six-pile {six}, max-3 {b3}), but the max-3 grid differs from the published one at {}",
            cells.join(", ")
        ));
    }
    Ok(format!("c_345 {n}, six-pile {six}, max-3 {b3} positions; grid identical"))
}

fn mod3() -> Check {
    let mut n = 0;
    for k in 1..=5 {
        let region = Region::counts_between(vec![2; k], vec![5; k]).unwrap();
        n += sweep(ClassifierId::ConjectureCMod3, Variant::C, &region)?.applicable;
    }
    Ok(format!("{n} positions, no counterexample"))
}

fn ones_big() -> Check {
    let r = sweep(ClassifierId::COnesBig, Variant::C, &Region::ones_big(60, 20))?;
    let vec = require(verify::check_ones_big_vector(60, 20, &opts()).map_err(|e| e.to_string())?)?;
    let grid = emit_grid(GridKind::OnesBig, GridBounds::new(12, 6, 0), GridSource::Classifier, &mut MemoTable::new())
        .map_err(|e| e.to_string())?;
    let diff = grid.diff(&published_ones_big());
    if !diff.is_empty() {
        return Err(format!("grid differs at {diff:?}"));
    }
    Ok(format!("{} positions vs oracle, {} vs vector game, grid identical", r.applicable, vec.applicable))
}

fn sum_counterexample() -> Check {
    let rep = require(verify::check_sum_counterexample())?;
    let lines: Vec<String> = rep.assertions.iter().map(|a| a.detail.clone()).collect();
    Ok(lines.join("; "))
}

fn self_consistency() -> Check {
    let mut memo = MemoTable::new();
    for k in 1..=6 {
        for p in Region::pile_count(k, 9).enumerate() {
            for v in Variant::ALL {
                memo.outcome(v, &p);
            }
        }
    }
    for p in Region::counts(vec![6, 6, 6, 6]).enumerate() {
        memo.outcome(Variant::B, &p);
        memo.outcome(Variant::C, &p);
    }
    let mut walked = 0;
    for v in Variant::ALL {
        walked += memo.rewalk(v).map_err(|p| format!("{v} ({p}) breaks the recursion"))?;
    }
    let mut states: Vec<(Variant, Position, Outcome)> = Variant::ALL
        .iter()
        .flat_map(|&v| memo.entries(v).map(move |(p, o)| (v, p.clone(), o)).collect::<Vec<_>>())
        .collect();
    states.sort_by(|a, b| (a.0, a.1.piles()).cmp(&(b.0, b.1.piles())));
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x0b0b);
    if states.len() < 10_000 {
        return Err(format!("only {} solved states to sample from", states.len()));
    }
    let sample: Vec<_> = states.choose_multiple(&mut rng, 10_000).cloned().collect();
    let mut grundy = MemoTable::new();
    for (v, p, o) in &sample {
        if (grundy.grundy(*v, p) == 0) != o.is_p() {
            return Err(format!("{v} ({p}): grundy disagrees with {o}"));
        }
    }
    Ok(format!("{walked} memo entries re-walked, {} Grundy samples", sample.len()))
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 12] = [
        ("two-pile and Version A rules", two_pile_and_version_a),
        ("all-even and odd-count rules", even_and_odd_rules),
        ("stripping pairs of 1s and 2s", pair_stripping),
        ("Version B 3-6 pile lists", b_pile_lists),
        ("Version B bounded pile sizes", b_bounded_sizes),
        ("odd-pile parity conjecture", odd_pile_parity),
        ("parity-function conjecture", parity_function),
        ("Version C pile-count and max-3 rules", version_c_lemmas),
        ("tokens mod 3 conjecture", mod3),
        ("ones plus one big pile", ones_big),
        ("nim-sum counterexample", sum_counterexample),
        ("solver self-consistency", self_consistency),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name} [{secs:.1}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{secs:.1}s]: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
