//! Stack-based normal-play search shared by every game in the crate.

use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::error::Error;
use crate::game::Outcome;

/// A finite impartial game under normal play.
pub(crate) trait Rules {
    type State: Clone + Eq + Hash;

    /// Options of `s`, in the order the search should try them.
    fn options(&self, s: &Self::State) -> Vec<Self::State>;
}

struct Frame<S> {
    state: S,
    options: Vec<S>,
    next: usize,
}

/// Solves `root`, recording every finished state in `memo`. The search keeps
/// its own stack, so depth is limited only by memory. N-states stop at their
/// first P-option; P-states have every option recorded as N.
pub(crate) fn outcome<R: Rules>(
    rules: &R,
    root: &R::State,
    memo: &mut FxHashMap<R::State, Outcome>,
    budget: Option<usize>,
) -> Result<Outcome, Error> {
    if let Some(&o) = memo.get(root) {
        return Ok(o);
    }
    let mut stack = vec![Frame {
        options: rules.options(root),
        state: root.clone(),
        next: 0,
    }];
    loop {
        let top = stack.last_mut().expect("nonempty stack");
        let mut resolved = None;
        while top.next < top.options.len() {
            match memo.get(&top.options[top.next]) {
                Some(Outcome::P) => {
                    resolved = Some(Outcome::N);
                    break;
                }
                Some(Outcome::N) => top.next += 1,
                None => break,
            }
        }
        if resolved.is_none() && top.next == top.options.len() {
            resolved = Some(Outcome::P);
        }
        match resolved {
            Some(o) => {
                let frame = stack.pop().expect("nonempty stack");
                insert(memo, frame.state, o, budget)?;
                if stack.is_empty() {
                    return Ok(o);
                }
            }
            None => {
                let child = top.options[top.next].clone();
                let options = rules.options(&child);
                stack.push(Frame {
                    state: child,
                    options,
                    next: 0,
                });
            }
        }
    }
}

fn insert<K: Eq + Hash, V>(
    memo: &mut FxHashMap<K, V>,
    k: K,
    v: V,
    budget: Option<usize>,
) -> Result<(), Error> {
    if let Some(b) = budget {
        if memo.len() >= b {
            return Err(Error::BudgetExceeded { budget: b });
        }
    }
    memo.insert(k, v);
    Ok(())
}

/// Grundy value by the same stack discipline; every option is evaluated.
pub(crate) fn grundy<R: Rules>(
    rules: &R,
    root: &R::State,
    memo: &mut FxHashMap<R::State, u32>,
    budget: Option<usize>,
) -> Result<u32, Error> {
    if let Some(&g) = memo.get(root) {
        return Ok(g);
    }
    let mut stack = vec![Frame {
        options: rules.options(root),
        state: root.clone(),
        next: 0,
    }];
    loop {
        let top = stack.last_mut().expect("nonempty stack");
        while top.next < top.options.len() && memo.contains_key(&top.options[top.next]) {
            top.next += 1;
        }
        if top.next == top.options.len() {
            let frame = stack.pop().expect("nonempty stack");
            let mut seen: Vec<u32> = frame.options.iter().map(|o| memo[o]).collect();
            seen.sort_unstable();
            seen.dedup();
            let mex = seen
                .iter()
                .enumerate()
                .find(|&(i, &g)| i as u32 != g)
                .map_or(seen.len() as u32, |(i, _)| i as u32);
            insert(memo, frame.state, mex, budget)?;
            if stack.is_empty() {
                return Ok(mex);
            }
        } else {
            let child = top.options[top.next].clone();
            let options = rules.options(&child);
            stack.push(Frame {
                state: child,
                options,
                next: 0,
            });
        }
    }
}

/// Checks every memo entry against the normal-play recursion using only
/// entries already in the table. Returns the first offending state.
pub(crate) fn rewalk<R: Rules>(
    rules: &R,
    memo: &FxHashMap<R::State, Outcome>,
) -> Result<usize, R::State> {
    for (s, &o) in memo {
        let opts = rules.options(s);
        let ok = match o {
            Outcome::P => opts.iter().all(|x| memo.get(x) == Some(&Outcome::N)),
            Outcome::N => opts.iter().any(|x| memo.get(x) == Some(&Outcome::P)),
        };
        if !ok {
            return Err(s.clone());
        }
    }
    Ok(memo.len())
}
