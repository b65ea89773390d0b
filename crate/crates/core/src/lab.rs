// SPDX-License-Identifier: Apache-2.0

//! Exhaustive searches for sumset decompositions of finite sets.
//!
//! Given a finite target `C` containing 0, find sets `A, B` with at least two
//! elements each such that `A + B` equals `C` (uniquely, or not), or is
//! contained in or contains `C` up to a slack of `k` elements, and the same
//! questions for `A + A`. The size of a near miss is the number of elements
//! in the symmetric difference with `C`.
//!
//! Candidates are subsets of `[0, max C]` containing 0, widened to
//! `[0, max C + k]` for the modes where `A + B` may exceed `C`. An exhausted
//! search has visited that whole space.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Candidate elements must stay below this so that sums fit in 128 bits.
pub const MAX_CANDIDATE: u64 = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// `A + B = C` with every sum unique.
    DirectSum,
    /// `A + B = C`.
    Sumset,
    /// `A + A = C`.
    Square,
    /// `A + B` inside `C`, missing at most `slack` elements.
    SubsetSlack,
    /// `A + B` contains `C`, with at most `slack` extra elements.
    SupersetSlack,
    /// `A + A` inside `C`, missing at most `slack` elements.
    SquareSubsetSlack,
    /// `A + A` contains `C`, with at most `slack` extra elements.
    SquareSupersetSlack,
}

impl SearchMode {
    pub const ALL: [SearchMode; 7] = [
        SearchMode::DirectSum,
        SearchMode::Sumset,
        SearchMode::Square,
        SearchMode::SubsetSlack,
        SearchMode::SupersetSlack,
        SearchMode::SquareSubsetSlack,
        SearchMode::SquareSupersetSlack,
    ];

    pub fn is_square(self) -> bool {
        matches!(
            self,
            SearchMode::Square | SearchMode::SquareSubsetSlack | SearchMode::SquareSupersetSlack
        )
    }

    fn allows_missing(self) -> bool {
        matches!(self, SearchMode::SubsetSlack | SearchMode::SquareSubsetSlack)
    }

    fn allows_extra(self) -> bool {
        matches!(self, SearchMode::SupersetSlack | SearchMode::SquareSupersetSlack)
    }

    pub fn name(self) -> &'static str {
        match self {
            SearchMode::DirectSum => "direct-sum",
            SearchMode::Sumset => "sumset",
            SearchMode::Square => "square",
            SearchMode::SubsetSlack => "subset-slack",
            SearchMode::SupersetSlack => "superset-slack",
            SearchMode::SquareSubsetSlack => "square-subset-slack",
            SearchMode::SquareSupersetSlack => "square-superset-slack",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchMode {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SearchMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| SearchError::UnknownMode(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchProblem {
    target: BTreeSet<u64>,
    mode: SearchMode,
    slack: usize,
}

impl SearchProblem {
    pub fn new(
        target: impl IntoIterator<Item = u64>,
        mode: SearchMode,
        slack: usize,
    ) -> Result<Self, SearchError> {
        let target: BTreeSet<u64> = target.into_iter().collect();
        if !target.contains(&0) {
            return Err(SearchError::InvalidTarget("target must contain 0".into()));
        }
        Ok(SearchProblem {
            target,
            mode,
            slack,
        })
    }

    pub fn target(&self) -> &BTreeSet<u64> {
        &self.target
    }

    pub fn mode(&self) -> SearchMode {
        self.mode
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    /// Largest candidate element.
    pub fn candidate_limit(&self) -> u64 {
        let top = *self.target.last().expect("contains 0");
        if self.mode.allows_extra() {
            top + self.slack as u64
        } else {
            top
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub a: Vec<u64>,
    /// `None` for the square modes.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<Vec<u64>>,
}

impl Witness {
    pub fn pair(a: impl IntoIterator<Item = u64>, b: impl IntoIterator<Item = u64>) -> Self {
        Witness {
            a: a.into_iter().collect(),
            b: Some(b.into_iter().collect()),
        }
    }

    pub fn square(a: impl IntoIterator<Item = u64>) -> Self {
        Witness {
            a: a.into_iter().collect(),
            b: None,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[u64]| {
            let items: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("{{{}}}", items.join(","))
        };
        match &self.b {
            Some(b) => write!(f, "{} + {}", show(&self.a), show(b)),
            None => write!(f, "{} + {}", show(&self.a), show(&self.a)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Sorted; for pairs `a <= b` lexicographically.
    pub witnesses: Vec<Witness>,
    pub exhausted: bool,
    pub nodes_explored: u64,
    pub candidate_limit: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Limits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits::default()
    }

    pub fn nodes(n: u64) -> Self {
        Limits {
            max_nodes: Some(n),
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("candidates reach {limit}, the search supports at most {MAX_CANDIDATE}")]
    WindowTooLarge { limit: u64 },
    #[error("unknown search mode {0:?}")]
    UnknownMode(String),
    #[error("budget exceeded after {} nodes with {} witnesses", .partial.nodes_explored, .partial.witnesses.len())]
    BudgetExceeded { partial: SearchOutcome },
}

type Mask = u128;

fn mask_of(elements: impl IntoIterator<Item = u64>) -> Mask {
    elements.into_iter().fold(0, |m, e| m | 1 << e)
}

fn elements_of(mask: Mask) -> Vec<u64> {
    (0..128).filter(|i| mask >> i & 1 == 1).collect()
}

/// `x + {shifts}` as a mask.
fn shift_sum(base: Mask, x: u64) -> Mask {
    base << x
}

struct Budget {
    limits: Limits,
    start: Instant,
    nodes: u64,
    blown: bool,
}

impl Budget {
    fn tick(&mut self) -> bool {
        if self.blown {
            return false;
        }
        if self.limits.max_nodes.is_some_and(|m| self.nodes >= m) {
            self.blown = true;
            return false;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.limits.max_time.is_some_and(|t| self.start.elapsed() > t) {
            self.blown = true;
        }
        !self.blown
    }
}

struct Search<'a> {
    problem: &'a SearchProblem,
    target: Mask,
    candidates: Vec<u64>,
    budget: Budget,
    witnesses: Vec<Witness>,
}

/// State of the set being grown: its elements and the sums built so far.
#[derive(Clone, Copy)]
struct Partial {
    set: Mask,
    sums: Mask,
    /// Some sum occurred twice.
    repeated: bool,
}

impl Search<'_> {
    fn slack(&self) -> u32 {
        self.problem.slack as u32
    }

    /// Whether a partial state, with every candidate `<= decided` fixed, can
    /// still be completed.
    fn viable(&self, p: &Partial, decided: u64) -> bool {
        let mode = self.problem.mode;
        if mode == SearchMode::DirectSum && p.repeated {
            return false;
        }
        let extra = (p.sums & !self.target).count_ones();
        let allowed_extra = if mode.allows_extra() { self.slack() } else { 0 };
        if extra > allowed_extra {
            return false;
        }
        // sums never shrink, and a target element x can only come from parts <= x
        let settled: Mask = if decided >= 127 {
            Mask::MAX
        } else {
            (1 << (decided + 1)) - 1
        };
        let missing = (self.target & settled & !p.sums).count_ones();
        let allowed_missing = if mode.allows_missing() { self.slack() } else { 0 };
        missing <= allowed_missing
    }

    /// Extends `p` with `x`. In square mode `x` pairs with the grown set
    /// itself; repeats are only tracked for pairs, the direct-sum mode.
    fn add(&self, p: &Partial, x: u64, partner: Option<Mask>) -> Partial {
        let set = p.set | 1 << x;
        let fresh = match partner {
            Some(other) => shift_sum(other, x),
            None => shift_sum(set, x),
        };
        Partial {
            set,
            sums: p.sums | fresh,
            repeated: p.repeated || p.sums & fresh != 0,
        }
    }

    /// Depth-first over `candidates[idx..]`, deciding each in turn.
    fn grow(&mut self, idx: usize, p: Partial, partner: Option<Mask>, on_leaf: &mut dyn FnMut(&mut Self, Mask)) {
        if !self.budget.tick() {
            return;
        }
        if idx == self.candidates.len() {
            on_leaf(self, p.set);
            return;
        }
        let x = self.candidates[idx];
        let with = self.add(&p, x, partner);
        if self.viable(&with, x) {
            self.grow(idx + 1, with, partner, on_leaf);
        }
        if self.viable(&p, x) {
            self.grow(idx + 1, p, partner, on_leaf);
        }
    }

    fn start(&self, partner: Option<Mask>) -> Partial {
        let set = 1;
        Partial {
            set,
            sums: partner.unwrap_or(set),
            repeated: false,
        }
    }

    fn run(&mut self) {
        if self.problem.mode.is_square() {
            let p = self.start(None);
            self.grow(1, p, None, &mut |s, a| {
                if a.count_ones() >= 2 {
                    s.witnesses.push(Witness::square(elements_of(a)));
                }
            });
            return;
        }
        // first part: contains 0, at least two elements
        let mut firsts = Vec::new();
        self.enumerate_first(1, 1, &mut firsts);
        for a in firsts {
            if self.budget.blown {
                return;
            }
            let p = self.start(Some(a));
            self.grow(1, p, Some(a), &mut |s, b| {
                if b.count_ones() < 2 {
                    return;
                }
                let (av, bv) = (elements_of(a), elements_of(b));
                if av <= bv {
                    s.witnesses.push(Witness::pair(av, bv));
                }
            });
        }
    }

    /// Subsets containing 0 with at least two elements, pruned by the rule
    /// that `A` itself appears among the sums `A + B` when `0 in B`.
    fn enumerate_first(&mut self, idx: usize, set: Mask, out: &mut Vec<Mask>) {
        if !self.budget.tick() {
            return;
        }
        if idx == self.candidates.len() {
            if set.count_ones() >= 2 {
                out.push(set);
            }
            return;
        }
        let x = self.candidates[idx];
        let with = set | 1 << x;
        let extra = (with & !self.target).count_ones();
        let allowed = if self.problem.mode.allows_extra() { self.slack() } else { 0 };
        if extra <= allowed {
            self.enumerate_first(idx + 1, with, out);
        }
        self.enumerate_first(idx + 1, set, out);
    }
}

/// All witnesses of the problem within the candidate space, or the partial
/// list when the budget runs out.
pub fn search(problem: &SearchProblem, limits: Limits) -> Result<SearchOutcome, SearchError> {
    let limit = problem.candidate_limit();
    if limit > MAX_CANDIDATE {
        return Err(SearchError::WindowTooLarge { limit });
    }
    let mut s = Search {
        problem,
        target: mask_of(problem.target.iter().copied()),
        candidates: (0..=limit).collect(),
        budget: Budget {
            limits,
            start: Instant::now(),
            nodes: 0,
            blown: false,
        },
        witnesses: Vec::new(),
    };
    s.run();
    let mut witnesses = s.witnesses;
    debug_assert!(witnesses.iter().all(|w| validate_witness(problem, w)));
    witnesses.sort();
    let outcome = SearchOutcome {
        witnesses,
        exhausted: !s.budget.blown,
        nodes_explored: s.budget.nodes,
        candidate_limit: limit,
    };
    if s.budget.blown {
        Err(SearchError::BudgetExceeded { partial: outcome })
    } else {
        Ok(outcome)
    }
}

/// Recomputes the defining relation of the mode from scratch.
pub fn validate_witness(problem: &SearchProblem, w: &Witness) -> bool {
    let a: BTreeSet<u64> = w.a.iter().copied().collect();
    let b: BTreeSet<u64> = match (&w.b, problem.mode.is_square()) {
        (None, true) => a.clone(),
        (Some(b), false) => b.iter().copied().collect(),
        _ => return false,
    };
    if a.len() < 2 || b.len() < 2 || a.len() != w.a.len() {
        return false;
    }
    let mut all = Vec::new();
    for x in &a {
        for y in &b {
            all.push(x + y);
        }
    }
    let sums: BTreeSet<u64> = all.iter().copied().collect();
    let c = &problem.target;
    let k = problem.slack;
    match problem.mode {
        SearchMode::DirectSum => sums.len() == all.len() && sums == *c,
        SearchMode::Sumset | SearchMode::Square => sums == *c,
        SearchMode::SubsetSlack | SearchMode::SquareSubsetSlack => {
            sums.is_subset(c) && c.difference(&sums).count() <= k
        }
        SearchMode::SupersetSlack | SearchMode::SquareSupersetSlack => {
            sums.is_superset(c) && sums.difference(c).count() <= k
        }
    }
}
