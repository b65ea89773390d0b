// SPDX-License-Identifier: Apache-2.0

//! Mixed-radix systems and the classification of additive systems.
//!
//! Every additive system with more than one member has a unique member
//! containing 1. If `g` is the least positive integer missing from it, then
//! `B_i = {k : kg in A_i}` is again an additive system, the pivot member
//! splits as `[0, g) + g * B_pivot` and every other member is `g * B_i`.
//! Repeating the step yields radices `g_1, g_2, ...`, and member `A_i` is
//! the direct sum of the digit sets `G_{n-1} * [0, g_n)` over the steps `n`
//! at which `A_i` was the pivot.
//!
//! The classical statement has the pivot equal to `[0, g - 1)` when its
//! quotient is `{0}`; the decomposition above forces `[0, g)`, which is what
//! is implemented.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::Label;
use crate::nat::{is_prime, least_prime_factor};
use crate::radix::{RadixError, Radices};
use crate::sets::{Bound, SetError, StructuredSet};
use crate::systems::{AdditiveSystem, Member, SystemError};
use crate::transforms::{dilate_family, ContractionWitness, IndexPartition, PartitionClass, TransformError};

/// Label of the closing member `G_r * N0` of a truncated mixed-radix system.
pub const REST_LABEL: &str = "rest";

/// Largest finite set searched exhaustively for a decomposition.
pub const MAX_DECOMPOSITION_SEARCH: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Radix(#[from] RadixError),
    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),
    #[error("schedule has {available} radices, {needed} needed")]
    InsufficientSchedule { needed: usize, available: usize },
    #[error("a mixed-radix system needs an infinite tail rule")]
    FiniteSchedule,
    #[error("the system has a single member")]
    SingletonSystem,
    #[error("no member contains 1")]
    NoPivot,
    #[error("the least absent element of {pivot} is not below {bound}")]
    BoundTooSmall { pivot: Label, bound: Bound },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// How the radix sequence continues after the explicit prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailRule {
    None,
    Constant {
        #[serde(with = "crate::nat::serde_nat")]
        radix: BigUint,
    },
    Periodic { pattern: Radices },
}

impl TailRule {
    pub fn constant(g: impl Into<BigUint>) -> Result<Self, ClassifyError> {
        let radix = g.into();
        Radices::new(vec![radix.clone()])?;
        Ok(TailRule::Constant { radix })
    }

    pub fn periodic(pattern: Radices) -> Result<Self, ClassifyError> {
        if pattern.is_empty() {
            return Err(ClassifyError::InvalidSchedule("empty periodic pattern".into()));
        }
        Ok(TailRule::Periodic { pattern })
    }

    fn period(&self) -> usize {
        match self {
            TailRule::None => 0,
            TailRule::Constant { .. } => 1,
            TailRule::Periodic { pattern } => pattern.len(),
        }
    }
}

/// Radix sequence `g_1, g_2, ...`: a finite prefix and a tail rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSchedule {
    prefix: Radices,
    tail: TailRule,
}

impl<'de> Deserialize<'de> for GeneratorSchedule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            prefix: Radices,
            tail: TailRule,
        }
        let raw = Raw::deserialize(d)?;
        GeneratorSchedule::new(raw.prefix, raw.tail).map_err(serde::de::Error::custom)
    }
}

impl GeneratorSchedule {
    pub fn new(prefix: Radices, tail: TailRule) -> Result<Self, ClassifyError> {
        match &tail {
            TailRule::Constant { radix } => {
                Radices::new(vec![radix.clone()])?;
            }
            TailRule::Periodic { pattern } if pattern.is_empty() => {
                return Err(ClassifyError::InvalidSchedule("empty periodic pattern".into()));
            }
            _ => {}
        }
        Ok(GeneratorSchedule { prefix, tail })
    }

    pub fn finite(prefix: Radices) -> Self {
        GeneratorSchedule {
            prefix,
            tail: TailRule::None,
        }
    }

    pub fn prefix(&self) -> &Radices {
        &self.prefix
    }

    pub fn tail(&self) -> &TailRule {
        &self.tail
    }

    pub fn is_infinite(&self) -> bool {
        self.tail != TailRule::None
    }

    /// `g_i` for `i >= 1`, or `None` past the end of a finite schedule.
    pub fn radix(&self, i: usize) -> Option<BigUint> {
        assert!(i >= 1, "radices are indexed from 1");
        if i <= self.prefix.len() {
            return Some(self.prefix[i - 1].clone());
        }
        let k = i - self.prefix.len() - 1;
        match &self.tail {
            TailRule::None => None,
            TailRule::Constant { radix } => Some(radix.clone()),
            TailRule::Periodic { pattern } => Some(pattern[k % pattern.len()].clone()),
        }
    }

    /// `g_1, ..., g_r`.
    pub fn radices(&self, r: usize) -> Result<Radices, ClassifyError> {
        let v = (1..=r)
            .map(|i| self.radix(i))
            .collect::<Option<Vec<_>>>()
            .ok_or(ClassifyError::InsufficientSchedule {
                needed: r,
                available: self.prefix.len(),
            })?;
        Ok(Radices::new(v)?)
    }

    /// `G_0, ..., G_r`.
    pub fn partial_products(&self, r: usize) -> Result<Vec<BigUint>, ClassifyError> {
        Ok(self.radices(r)?.partial_products())
    }
}

impl fmt::Display for GeneratorSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)?;
        let sep = if self.prefix.is_empty() { "" } else { "," };
        match &self.tail {
            TailRule::None => Ok(()),
            TailRule::Constant { radix } => write!(f, "{sep}({radix})..."),
            TailRule::Periodic { pattern } => write!(f, "{sep}({pattern})..."),
        }
    }
}

/// The system `(G_{i-1} * [0, g_i))_{i >= 1}` of an infinite schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BritishNumberSystem {
    schedule: GeneratorSchedule,
}

impl<'de> Deserialize<'de> for BritishNumberSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            schedule: GeneratorSchedule,
        }
        BritishNumberSystem::new(Raw::deserialize(d)?.schedule).map_err(serde::de::Error::custom)
    }
}

impl BritishNumberSystem {
    pub fn new(schedule: GeneratorSchedule) -> Result<Self, ClassifyError> {
        if !schedule.is_infinite() {
            return Err(ClassifyError::FiniteSchedule);
        }
        Ok(BritishNumberSystem { schedule })
    }

    pub fn schedule(&self) -> &GeneratorSchedule {
        &self.schedule
    }

    /// Members `1..=r` followed by the closing member `G_r * N0`.
    pub fn truncation(&self, r: usize) -> AdditiveSystem {
        build_bns(&self.schedule, r).expect("infinite schedule")
    }
}

impl fmt::Display for BritishNumberSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.schedule.fmt(f)
    }
}

/// Members `G_{i-1} * [0, g_i)` at positions `1..=r` and `G_r * N0` labelled
/// [`REST_LABEL`].
pub fn build_bns(schedule: &GeneratorSchedule, r: usize) -> Result<AdditiveSystem, ClassifyError> {
    let radices = schedule.radices(r)?;
    let (sys, _) = dilate_family(&AdditiveSystem::singleton(REST_LABEL), &radices)?;
    Ok(sys)
}

/// Equality of the generated systems, decided on the radix sequences.
pub fn bns_equal(x: &BritishNumberSystem, y: &BritishNumberSystem) -> bool {
    let (sx, sy) = (&x.schedule, &y.schedule);
    // both sequences are periodic from max(prefix) on, with a period dividing the lcm
    let period = sx.tail.period().lcm(&sy.tail.period());
    let horizon = sx.prefix.len().max(sy.prefix.len()) + period;
    (1..=horizon).all(|i| sx.radix(i) == sy.radix(i))
}

/// Whether every radix of the sequence is prime.
pub fn is_indecomposable_system(bns: &BritishNumberSystem) -> bool {
    let s = &bns.schedule;
    s.prefix.iter().all(is_prime)
        && match &s.tail {
            TailRule::None => true,
            TailRule::Constant { radix } => is_prime(radix),
            TailRule::Periodic { pattern } => pattern.iter().all(is_prime),
        }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepCase {
    /// The pivot's quotient is `{0}`: the pivot is exactly `[0, g)`.
    Dilation,
    /// The pivot is `[0, g) + g * B` with `B` nontrivial.
    Contraction,
}

impl fmt::Display for StepCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepCase::Dilation => "dilation",
            StepCase::Contraction => "contraction",
        })
    }
}

/// One extraction: the input equals the quotient dilated by `radix` and
/// then contracted by merging the pivot with `[0, radix)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionStep {
    pub pivot: Label,
    #[serde(with = "crate::nat::serde_nat")]
    pub radix: BigUint,
    pub quotient: AdditiveSystem,
    pub case: StepCase,
    /// Every quotient member was derived from the set structure.
    pub symbolic: bool,
    /// Bound up to which the quotient is established.
    pub quotient_bound: Bound,
    pub source_labels: Vec<Label>,
}

impl ExtractionStep {
    /// Contraction witness exhibiting the input over the quotient.
    pub fn witness(&self) -> ContractionWitness {
        let classes = self
            .source_labels
            .iter()
            .map(|l| {
                let mut members = BTreeSet::new();
                if *l == self.pivot {
                    members.insert(Label::Position(1));
                    if self.case == StepCase::Contraction {
                        members.insert(l.shifted(1));
                    }
                } else {
                    members.insert(l.shifted(1));
                }
                PartitionClass {
                    label: l.clone(),
                    members,
                }
            })
            .collect();
        ContractionWitness {
            partition: IndexPartition::new(classes).expect("labels are distinct"),
            radices: Radices::new(vec![self.radix.clone()]).expect("radix >= 2"),
        }
    }

    /// Rebuilds the input system from the quotient.
    pub fn reconstruct(&self, bound: Bound) -> Result<AdditiveSystem, ClassifyError> {
        Ok(self.witness().apply(&self.quotient, bound)?)
    }
}

/// One extraction step on a system assumed valid below `bound`.
pub fn debruijn_step(sys: &AdditiveSystem, bound: Bound) -> Result<ExtractionStep, ClassifyError> {
    if sys.len() == 1 {
        return Err(ClassifyError::SingletonSystem);
    }
    let one = BigUint::one();
    let pivot = sys
        .members()
        .iter()
        .find(|m| m.set.contains(&one))
        .ok_or(ClassifyError::NoPivot)?;
    let too_small = || ClassifyError::BoundTooSmall {
        pivot: pivot.label.clone(),
        bound,
    };
    let g = pivot.set.least_absent_positive(bound).ok_or_else(too_small)?;
    if g.to_usize().is_none_or(|x| x >= bound.n_max()) {
        return Err(too_small());
    }
    let quotient_bound = bound.divided(&g).ok_or_else(too_small)?;

    let mut symbolic = true;
    let mut case = StepCase::Contraction;
    let mut members = Vec::with_capacity(sys.len());
    for m in sys.members() {
        let q = match m.set.quotient(&g) {
            Some(q) => q,
            None => {
                symbolic = false;
                quotient_by_window(&m.set, &g, quotient_bound)
            }
        };
        if m.label == pivot.label && q.is_zero_set() {
            case = StepCase::Dilation;
            continue;
        }
        members.push(Member::new(m.label.clone(), q));
    }
    let quotient = AdditiveSystem::new(members)?;
    Ok(ExtractionStep {
        pivot: pivot.label.clone(),
        radix: g,
        quotient,
        case,
        symbolic,
        quotient_bound,
        source_labels: sys.labels().cloned().collect(),
    })
}

fn quotient_by_window(set: &StructuredSet, g: &BigUint, bound: Bound) -> StructuredSet {
    let g = g.to_usize().expect("radix below the bound");
    let limit = bound.n_max().saturating_mul(g);
    let elements: Vec<BigUint> = set
        .window(limit)
        .into_iter()
        .filter(|x| x % g == 0)
        .map(|x| BigUint::from(x / g))
        .collect();
    StructuredSet::Finite(elements)
}

/// Positions assigned to each class; positions beyond the classified depth
/// belong to the `rest` class when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub classes: Vec<PositionClass>,
    pub rest: Option<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionClass {
    pub label: Label,
    pub positions: BTreeSet<u64>,
}

impl PartitionSpec {
    pub fn positions_of(&self, label: &Label) -> Option<&BTreeSet<u64>> {
        self.classes
            .iter()
            .find(|c| c.label == *label)
            .map(|c| &c.positions)
    }

    /// Class of position `n`, if the partition determines it.
    pub fn class_of(&self, n: u64) -> Option<&Label> {
        self.classes
            .iter()
            .find(|c| c.positions.contains(&n))
            .map(|c| &c.label)
            .or_else(|| {
                let assigned = self.classes.iter().flat_map(|c| c.positions.iter()).max();
                match (assigned, &self.rest) {
                    (Some(&top), Some(rest)) if n > top => Some(rest),
                    (None, Some(rest)) => Some(rest),
                    _ => None,
                }
            })
    }
}

/// Compact record of one step, kept in classification results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSummary {
    pub pivot: Label,
    #[serde(with = "crate::nat::serde_nat")]
    pub radix: BigUint,
    pub case: StepCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub bns: BritishNumberSystem,
    pub partition: PartitionSpec,
    pub depth: usize,
    /// The steps reached a single member equal to `N0`.
    pub terminated: bool,
    /// What is left after `depth` steps, keyed by the input labels.
    pub residual: AdditiveSystem,
    pub steps: Vec<StepSummary>,
    pub bound: Bound,
    /// Bound up to which expansion reproduces the input.
    pub certification_bound: Bound,
}

impl ClassificationResult {
    pub fn prefix(&self) -> &Radices {
        self.bns.schedule().prefix()
    }

    /// Witness exhibiting the input as a contraction of the first `r >= depth`
    /// members of the mixed-radix system, closed by `G_r * N0`.
    pub fn witness(&self, r: usize) -> Result<ContractionWitness, ClassifyError> {
        let Some(rest) = &self.partition.rest else {
            return Err(ClassifyError::Unsupported(
                "classification did not terminate".into(),
            ));
        };
        if r < self.depth {
            return Err(ClassifyError::InsufficientSchedule {
                needed: self.depth,
                available: r,
            });
        }
        let classes = self
            .partition
            .classes
            .iter()
            .map(|c| {
                let mut members: BTreeSet<Label> =
                    c.positions.iter().map(|&n| Label::Position(n)).collect();
                if c.label == *rest {
                    members.extend((self.depth as u64 + 1..=r as u64).map(Label::Position));
                    members.insert(Label::name(REST_LABEL));
                }
                PartitionClass {
                    label: c.label.clone(),
                    members,
                }
            })
            .collect();
        Ok(ContractionWitness {
            partition: IndexPartition::new(classes)?,
            radices: self.bns.schedule().radices(r)?,
        })
    }
}

/// Runs up to `max_depth` extraction steps.
///
/// Stops early with `terminated = false` when the bound no longer
/// determines the next radix. Position `n` goes to the member that was the
/// pivot at step `n`, which is the member containing `G_{n-1}`.
pub fn classify(
    sys: &AdditiveSystem,
    max_depth: usize,
    bound: Bound,
) -> Result<ClassificationResult, ClassifyError> {
    let mut current = sys.clone();
    let mut current_bound = bound;
    let mut radices = Vec::new();
    let mut steps = Vec::new();
    let mut exact = true;
    let mut positions: BTreeMap<Label, BTreeSet<u64>> =
        sys.labels().map(|l| (l.clone(), BTreeSet::new())).collect();

    while current.len() > 1 && steps.len() < max_depth {
        let step = match debruijn_step(&current, current_bound) {
            Ok(step) => step,
            Err(ClassifyError::BoundTooSmall { .. }) => break,
            Err(e) => return Err(e),
        };
        let n = steps.len() as u64 + 1;
        positions
            .get_mut(&step.pivot)
            .expect("quotients keep the input labels")
            .insert(n);
        exact &= step.symbolic;
        radices.push(step.radix.clone());
        steps.push(StepSummary {
            pivot: step.pivot.clone(),
            radix: step.radix.clone(),
            case: step.case,
        });
        current_bound = step.quotient_bound;
        current = step.quotient;
    }

    let depth = steps.len();
    let terminated = current.len() == 1 && current.members()[0].set == StructuredSet::Tail;
    let prefix = Radices::new(radices)?;
    let g_depth = prefix.product();

    let rest = terminated.then(|| current.members()[0].label.clone());
    let classes = sys
        .labels()
        .map(|l| PositionClass {
            label: l.clone(),
            positions: positions.remove(l).unwrap_or_default(),
        })
        .collect();

    let certification_bound = if terminated && exact {
        bound
    } else {
        let reach = g_depth * BigUint::from(current_bound.n_max());
        match reach.to_usize() {
            Some(x) if x < bound.n_max() => Bound::new(x)?,
            _ => bound,
        }
    };

    Ok(ClassificationResult {
        bns: BritishNumberSystem::new(GeneratorSchedule::new(prefix, TailRule::constant(2u32)?)?)?,
        partition: PartitionSpec { classes, rest },
        depth,
        terminated,
        residual: current,
        steps,
        bound,
        certification_bound,
    })
}

/// Member for each class: the direct sum of its digit sets
/// `G_{n-1} * [0, g_n)`, plus `G_depth` times its residual member.
pub fn expand(result: &ClassificationResult, bound: Bound) -> Result<AdditiveSystem, ClassifyError> {
    let prefix = result.prefix();
    let products = prefix.partial_products();
    let g_depth = &products[prefix.len()];
    let mut members = Vec::with_capacity(result.partition.classes.len());
    for class in &result.partition.classes {
        let mut parts = Vec::new();
        for &n in &class.positions {
            let n = n as usize;
            if n == 0 || n > prefix.len() {
                return Err(ClassifyError::Inconsistent(format!(
                    "position {n} outside the classified prefix"
                )));
            }
            parts.push(StructuredSet::dilated(
                products[n - 1].clone(),
                StructuredSet::Interval(prefix[n - 1].clone()),
            )?);
        }
        if let Some(r) = result.residual.get(&class.label) {
            parts.push(StructuredSet::dilated(g_depth.clone(), r.clone())?);
        }
        if parts.is_empty() {
            return Err(ClassifyError::Inconsistent(format!(
                "class {} has no positions and no residual",
                class.label
            )));
        }
        members.push(Member::new(
            class.label.clone(),
            StructuredSet::direct_sum(parts, bound)?,
        ));
    }
    Ok(AdditiveSystem::new(members)?)
}

/// A split `left + right` of a set into two parts with at least two elements
/// each and unique sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub left: StructuredSet,
    pub right: StructuredSet,
}

/// Finds a decomposition, or `None` when the set is indecomposable.
///
/// Dilated intervals and `N0` are decided from the radix: `[0, uv)` splits as
/// `[0, u) + u * [0, v)`. Direct sums split at their first part. Finite sets
/// up to [`MAX_DECOMPOSITION_SEARCH`] elements are searched exhaustively.
pub fn is_decomposable_set(
    set: &StructuredSet,
    bound: Bound,
) -> Result<Option<Decomposition>, ClassifyError> {
    let two = BigUint::from(2u32);
    match set.normalize() {
        StructuredSet::Interval(g) => {
            if g < BigUint::from(4u32) || is_prime(&g) {
                return Ok(None);
            }
            let u = least_prime_factor(&g);
            let v = &g / &u;
            Ok(Some(Decomposition {
                left: StructuredSet::Interval(u.clone()),
                right: StructuredSet::dilated(u, StructuredSet::Interval(v))?,
            }))
        }
        StructuredSet::Tail => Ok(Some(Decomposition {
            left: StructuredSet::Interval(two.clone()),
            right: StructuredSet::dilated(two, StructuredSet::Tail)?,
        })),
        StructuredSet::Dilated { scale, inner } => {
            let inner_bound = bound.divided(&scale).unwrap_or(Bound::new(1)?);
            Ok(is_decomposable_set(&inner, inner_bound)?.map(|d| Decomposition {
                left: StructuredSet::dilated(scale.clone(), d.left).expect("scale >= 1"),
                right: StructuredSet::dilated(scale, d.right).expect("scale >= 1"),
            }))
        }
        StructuredSet::DirectSum(mut parts) => {
            let left = parts.remove(0);
            let right = if parts.len() == 1 {
                parts.pop().unwrap()
            } else {
                StructuredSet::DirectSum(parts)
            };
            Ok(Some(Decomposition { left, right }))
        }
        StructuredSet::Finite(elements) => {
            if elements.len() > MAX_DECOMPOSITION_SEARCH {
                return Err(ClassifyError::Unsupported(format!(
                    "finite set with {} elements exceeds the search limit of {}",
                    elements.len(),
                    MAX_DECOMPOSITION_SEARCH
                )));
            }
            Ok(search_finite(&elements).map(|(l, r)| Decomposition {
                left: StructuredSet::Finite(l),
                right: StructuredSet::Finite(r),
            }))
        }
    }
}

/// The part holding the least positive element is enumerated; the other part
/// is forced, since its next element is always the least element not yet
/// covered.
fn search_finite(elements: &[BigUint]) -> Option<(Vec<BigUint>, Vec<BigUint>)> {
    let n = elements.len();
    if n < 4 {
        return None;
    }
    let free = &elements[2..];
    for mask in 0u64..(1u64 << free.len()) {
        let mut left = vec![elements[0].clone(), elements[1].clone()];
        left.extend(
            free.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone()),
        );
        if left.len() > n / 2 || !n.is_multiple_of(left.len()) {
            continue;
        }
        if let Some(right) = complete_tiling(elements, &left) {
            if right.len() >= 2 {
                return Some((left, right));
            }
        }
    }
    None
}

fn complete_tiling(elements: &[BigUint], left: &[BigUint]) -> Option<Vec<BigUint>> {
    let target: BTreeSet<&BigUint> = elements.iter().collect();
    let mut covered: BTreeSet<BigUint> = BTreeSet::new();
    let mut right = Vec::new();
    for x in elements {
        if covered.contains(x) {
            continue;
        }
        // x must be the next element of the right part
        for a in left {
            let s = a + x;
            if !target.contains(&s) || !covered.insert(s) {
                return None;
            }
        }
        right.push(x.clone());
    }
    Some(right)
}
