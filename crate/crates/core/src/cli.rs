//! The `oooooob` command line. [`run`] takes the full argument vector and
//! returns the exit code and both output streams, so the binary is a thin
//! shell around it and tests can drive it directly.
//!
//! Exit codes: 0 success (including PARTIAL reports), 1 a sweep found a
//! mismatch, 2 usage error, 3 resource budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{self, ClassifierId, Kind};
use crate::error::Error;
use crate::game::Variant;
use crate::position::Position;
use crate::region::Region;
use crate::solver::{self, MemoTable};
use crate::verify::grid::{emit_grid, GridBounds, GridFormat, GridKind, GridSource};
use crate::verify::profile::Profile;
use crate::verify::{self, Status, SweepOptions, VerificationReport, DEFAULT_BUDGET};

/// Environment variable overriding the default state budget.
pub const BUDGET_ENV: &str = "OOOOOOB_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "oooooob", version, about = "Solve, classify and verify multi-pile OOOOOOB positions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Maximum number of solver states (default 10000000, or $OOOOOOB_BUDGET).
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Worker threads for sweeps (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Ascii,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the outcome class (P or N) of a position.
    Outcome(PositionArgs),
    /// Print a winning move (the smallest P-option), or "none" from a P-position.
    BestMove(PositionArgs),
    /// Print every rule that applies to a position and its verdict.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        position: String,
        /// Restrict to one variant (default: all three).
        #[arg(long)]
        variant: Option<Variant>,
        /// Also print the search outcome.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a rule against the search oracle.
    Verify {
        /// Rule id, or one of: sum_counterexample, b_bounded_size_notation,
        /// c_six_with_ones_as_printed, b_pair_strip.
        #[arg(long)]
        lemma: String,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Sweep this region instead of the profile's regions.
        #[arg(long)]
        region: Option<Region>,
        /// Variant for --region (default: the rule's own).
        #[arg(long)]
        variant: Option<Variant>,
        /// Write the reports here instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// List the positions of a region, optionally solved.
    Enumerate {
        /// piles:K:MAX, counts:B1,B2,... or ones-big:K:N
        #[arg(long)]
        region: Region,
        /// Attach outcomes under this variant.
        #[arg(long)]
        variant: Option<Variant>,
    },
    /// Print a P-position grid.
    Grid {
        #[arg(long)]
        kind: GridKind,
        /// Largest k (ones-big columns).
        #[arg(long, value_parser = parse_bound)]
        max_k: Option<Bound>,
        /// Largest n (ones-big rows).
        #[arg(long, value_parser = parse_bound)]
        max_n: Option<Bound>,
        /// Largest a1 (small-piles columns).
        #[arg(long, value_parser = parse_bound)]
        max_a1: Option<Bound>,
        /// Largest a2 (small-piles rows).
        #[arg(long, value_parser = parse_bound)]
        max_a2: Option<Bound>,
        /// Largest a3 (small-piles pages).
        #[arg(long, value_parser = parse_bound)]
        max_a3: Option<Bound>,
        #[arg(long, default_value = "oracle")]
        source: GridSource,
        /// Include the exception legend (json only).
        #[arg(long)]
        legend: bool,
    },
    /// Run every conjecture sweep of a profile.
    Conjectures {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Args, Debug)]
struct PositionArgs {
    #[arg(long)]
    variant: Variant,
    /// Comma-separated pile sizes, in any order.
    #[arg(long, allow_hyphen_values = true)]
    position: String,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value = "default")]
    profile: String,
    /// TOML file with profiles, replacing the shipped ones.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
}

/// An inclusive axis maximum; `none` empties the axis.
#[derive(Clone, Copy, Debug)]
struct Bound(Option<u32>);

fn parse_bound(s: &str) -> Result<Bound, String> {
    if s == "none" {
        return Ok(Bound(None));
    }
    s.parse().map(|v| Bound(Some(v))).map_err(|_| format!("expected a number or \"none\", got {s:?}"))
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Ctx {
    format: Format,
    budget: usize,
    jobs: Option<usize>,
    out: String,
    err: String,
    failed: bool,
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return CliOutput { code, stdout, stderr };
        }
    };
    let env_budget = std::env::var(BUDGET_ENV).ok();
    let budget = match (cli.budget, env_budget.as_deref().map(str::parse::<usize>)) {
        (Some(b), _) => b,
        (None, Some(Ok(b))) => b,
        (None, Some(Err(_))) => {
            return CliOutput { code: 2, stdout: String::new(), stderr: format!("error: {BUDGET_ENV} must be a number\n") }
        }
        (None, None) => DEFAULT_BUDGET,
    };
    let mut ctx = Ctx { format: cli.format, budget, jobs: cli.jobs, out: String::new(), err: String::new(), failed: false };
    match dispatch(&mut ctx, cli.command) {
        Ok(()) => CliOutput { code: if ctx.failed { 1 } else { 0 }, stdout: ctx.out, stderr: ctx.err },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            let _ = writeln!(ctx.err, "error: {msg}");
            CliOutput { code, stdout: ctx.out, stderr: ctx.err }
        }
    }
}

fn parse_position(s: &str) -> Result<Position, Failure> {
    Ok(s.parse::<Position>()?)
}

fn dispatch(ctx: &mut Ctx, cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Outcome(a) => outcome(ctx, a),
        Command::BestMove(a) => best_move(ctx, a),
        Command::Classify { position, variant, oracle } => classify_cmd(ctx, &position, variant, oracle),
        Command::Verify { lemma, sweep, region, variant, out } => {
            let reports = verify_cmd(ctx, &lemma, &sweep, region, variant)?;
            emit_reports(ctx, &reports, out.as_deref())
        }
        Command::Enumerate { region, variant } => enumerate(ctx, &region, variant),
        Command::Grid { kind, max_k, max_n, max_a1, max_a2, max_a3, source, legend } => {
            let pick = |b: Option<Bound>, d: u32| b.map_or(Some(d), |b| b.0);
            let bounds = match kind {
                GridKind::OnesBig => GridBounds { max_col: pick(max_k, 12), max_row: pick(max_n, 6), max_page: Some(0) },
                GridKind::SmallPiles => {
                    GridBounds { max_col: pick(max_a1, 6), max_row: pick(max_a2, 6), max_page: pick(max_a3, 5) }
                }
            };
            let format = match ctx.format {
                Format::Text | Format::Ascii => GridFormat::Ascii,
                Format::Csv => GridFormat::Csv,
                Format::Json => GridFormat::Json,
            };
            let mut memo = MemoTable::with_budget(ctx.budget);
            let grid = emit_grid(kind, bounds, source, &mut memo)?;
            ctx.out.push_str(&grid.render(format, legend));
            Ok(())
        }
        Command::Conjectures { sweep } => {
            let profile = load_profile(&sweep)?;
            let mut reports = Vec::new();
            for &id in ClassifierId::ALL.iter().filter(|id| id.is_conjecture()) {
                reports.extend(run_profile_sweeps(ctx, &profile, id)?);
            }
            emit_reports(ctx, &reports, None)
        }
    }
}

fn outcome(ctx: &mut Ctx, a: PositionArgs) -> Result<(), Failure> {
    let p = parse_position(&a.position)?;
    let o = MemoTable::with_budget(ctx.budget).try_outcome(a.variant, &p)?;
    match ctx.format {
        Format::Json => {
            let doc = json!({ "variant": a.variant, "position": p, "outcome": o });
            let _ = writeln!(ctx.out, "{doc}");
        }
        Format::Csv => {
            let _ = writeln!(ctx.out, "variant,position,outcome\n{},\"{p}\",{o}", a.variant);
        }
        _ => {
            let _ = writeln!(ctx.out, "{o}");
        }
    }
    Ok(())
}

fn best_move(ctx: &mut Ctx, a: PositionArgs) -> Result<(), Failure> {
    let p = parse_position(&a.position)?;
    let mut memo = MemoTable::with_budget(ctx.budget);
    let mv = memo.try_p_option(a.variant, &p)?;
    match ctx.format {
        Format::Json => {
            let o = memo.try_outcome(a.variant, &p)?;
            let doc = json!({ "variant": a.variant, "position": p, "outcome": o, "move": mv });
            let _ = writeln!(ctx.out, "{doc}");
        }
        _ => match mv {
            Some(m) => {
                let _ = writeln!(ctx.out, "{m}");
            }
            None => ctx.out.push_str("none\n"),
        },
    }
    Ok(())
}

fn classify_cmd(ctx: &mut Ctx, position: &str, variant: Option<Variant>, oracle: bool) -> Result<(), Failure> {
    let p = parse_position(position)?;
    let variants: Vec<Variant> = variant.map_or_else(|| Variant::ALL.to_vec(), |v| vec![v]);
    let mut memo = MemoTable::with_budget(ctx.budget);
    let mut rows = Vec::new();
    for v in variants {
        for &id in ClassifierId::ALL.iter().filter(|id| id.supports(v)) {
            let (verdict, detail) = match id.kind() {
                Kind::Rule => match classify::classify(id, v, &p)?.outcome() {
                    Some(o) => (o.to_string(), None),
                    None => continue,
                },
                Kind::Reduction => match classify::reduce(id, &p) {
                    Some(r) => ("reduces".to_string(), Some(r.to_string())),
                    None => continue,
                },
                Kind::Hypothesis if classify::hypothesis_holds(id, &p) => ("hypothesis".to_string(), None),
                Kind::Hypothesis => continue,
            };
            rows.push((v, id.name().to_string(), verdict, detail));
        }
        if oracle {
            rows.push((v, "oracle".to_string(), memo.try_outcome(v, &p)?.to_string(), None));
        }
    }
    match ctx.format {
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(v, id, verdict, detail)| json!({ "variant": v, "classifier": id, "verdict": verdict, "to": detail }))
                .collect();
            let _ = writeln!(ctx.out, "{}", json!({ "position": p, "results": list }));
        }
        Format::Csv => {
            ctx.out.push_str("variant,classifier,verdict,to\n");
            for (v, id, verdict, detail) in &rows {
                let _ = writeln!(ctx.out, "{v},{id},{verdict},\"{}\"", detail.as_deref().unwrap_or(""));
            }
        }
        _ => {
            let _ = writeln!(ctx.out, "position ({p})");
            for (v, id, verdict, detail) in &rows {
                match detail {
                    Some(d) => {
                        let _ = writeln!(ctx.out, "{v} {id} {verdict} ({d})");
                    }
                    None => {
                        let _ = writeln!(ctx.out, "{v} {id} {verdict}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn sweep_options(ctx: &Ctx, cap: usize) -> SweepOptions {
    let mut o = SweepOptions { budget: Some(ctx.budget), mismatch_cap: cap, ..SweepOptions::default() };
    if let Some(j) = ctx.jobs {
        o.jobs = j.max(1);
    }
    o
}

fn load_profile(sweep: &SweepArgs) -> Result<Profile, Failure> {
    let text = match &sweep.config {
        Some(path) => Some(
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    Ok(Profile::load(&sweep.profile, text.as_deref())?)
}

fn run_profile_sweeps(ctx: &Ctx, profile: &Profile, id: ClassifierId) -> Result<Vec<VerificationReport>, Failure> {
    let opts = sweep_options(ctx, profile.mismatch_cap);
    let mut reports = Vec::new();
    for s in profile.sweeps_for(id) {
        for r in &s.regions {
            reports.push(verify::check_classifier(id, s.variant, r, &opts)?);
            if let (ClassifierId::COnesBig, Region::OnesBig { max_k, max_n }) = (id, r) {
                reports.push(verify::check_ones_big_vector(*max_k, *max_n, &opts)?);
            }
        }
    }
    if reports.is_empty() {
        return Err(Failure::Usage(format!("profile {:?} has no sweep for {id}", profile.name)));
    }
    Ok(reports)
}

fn verify_cmd(
    ctx: &Ctx,
    lemma: &str,
    sweep: &SweepArgs,
    region: Option<Region>,
    variant: Option<Variant>,
) -> Result<Vec<VerificationReport>, Failure> {
    let opts = sweep_options(ctx, verify::DEFAULT_MISMATCH_CAP);
    match lemma {
        "sum_counterexample" => return Ok(vec![verify::check_sum_counterexample()]),
        "b_bounded_size_notation" => {
            return Ok(vec![
                verify::check_published_notation(4, 6, &opts)?,
                verify::check_published_notation(5, 6, &opts)?,
            ])
        }
        "c_six_with_ones_as_printed" => return Ok(vec![verify::check_published_six(10, &opts)?]),
        "b_pair_strip" => {
            return Ok(vec![verify::check_pair_strip(1, 5, 8, &opts)?, verify::check_pair_strip(2, 5, 8, &opts)?])
        }
        _ => {}
    }
    let id: ClassifierId = lemma.parse()?;
    match region {
        Some(r) => {
            let v = variant.unwrap_or_else(|| id.default_variant());
            Ok(vec![verify::check_classifier(id, v, &r, &opts)?])
        }
        None => {
            let profile = load_profile(sweep)?;
            let mut reports = run_profile_sweeps(ctx, &profile, id)?;
            if let Some(v) = variant {
                reports.retain(|r| r.variant == v);
            }
            Ok(reports)
        }
    }
}

fn emit_reports(ctx: &mut Ctx, reports: &[VerificationReport], out: Option<&std::path::Path>) -> Result<(), Failure> {
    ctx.failed |= reports.iter().any(|r| r.status == Status::Fail);
    let mut doc = String::new();
    match ctx.format {
        Format::Json => {
            for r in reports {
                doc.push_str(&r.to_json());
                doc.push('\n');
            }
        }
        Format::Csv => {
            doc.push_str("classifier,variant,region,states_checked,applicable,mismatch_count,status\n");
            for r in reports {
                let _ = writeln!(
                    doc,
                    "{},{},\"{}\",{},{},{},{}",
                    r.classifier, r.variant, r.region, r.states_checked, r.applicable, r.mismatch_count, r.status
                );
            }
        }
        _ => {
            for r in reports {
                doc.push_str(&r.to_text());
            }
        }
    }
    match out {
        Some(path) => {
            std::fs::write(path, doc).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            for r in reports {
                let _ = writeln!(ctx.err, "{} {} {} {}", r.status, r.classifier, r.variant, r.region);
            }
        }
        None => ctx.out.push_str(&doc),
    }
    Ok(())
}

fn enumerate(ctx: &mut Ctx, region: &Region, variant: Option<Variant>) -> Result<(), Failure> {
    match variant {
        Some(v) => {
            let mut memo = MemoTable::with_budget(ctx.budget);
            let entries = solver::solve_region(v, region, &mut memo)?;
            let mut buf = Vec::new();
            match ctx.format {
                Format::Json => solver::write_jsonl(&entries, &mut buf).expect("in-memory write"),
                Format::Csv => solver::write_csv(&entries, &mut buf).expect("in-memory write"),
                _ => {
                    for e in &entries {
                        let _ = writeln!(ctx.out, "{} {}", e.position, e.outcome);
                    }
                }
            }
            ctx.out.push_str(&String::from_utf8(buf).expect("utf-8 output"));
        }
        None => {
            if region.len() > ctx.budget as u128 {
                return Err(Error::BudgetExceeded { budget: ctx.budget }.into());
            }
            if ctx.format == Format::Csv {
                ctx.out.push_str("position\n");
            }
            for p in region.enumerate() {
                let _ = match ctx.format {
                    Format::Json => writeln!(ctx.out, "{}", json!({ "position": p })),
                    Format::Csv => writeln!(ctx.out, "\"{p}\""),
                    _ => writeln!(ctx.out, "{p}"),
                };
            }
        }
    }
    Ok(())
}
