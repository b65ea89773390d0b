// SPDX-License-Identifier: Apache-2.0

//! Symbolic sets of nonnegative integers that contain 0.
//!
//! A [`StructuredSet`] is built from finite sets, intervals `[0, g)`, the
//! whole of `N0`, dilations `g * X` and direct sums. Membership is exact.
//! Everything that enumerates works on a window `[0, n_max)` given by a
//! [`Bound`], and equality of denoted sets is only ever checked on such a
//! window.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nat::to_window;
use crate::window;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("set does not contain 0")]
    MissingZero,
    #[error("interval [0, 0) is empty")]
    EmptyInterval,
    #[error("dilation scale must be at least 1")]
    ZeroScale,
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error("a direct sum needs at least one part")]
    EmptySum,
    #[error("{n} has two representations: {first:?} and {second:?}")]
    DuplicateRepresentation {
        n: BigUint,
        first: Vec<BigUint>,
        second: Vec<BigUint>,
    },
}

/// Truncation window `[0, n_max)` for every "up to a bound" statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Bound(usize);

impl Bound {
    pub fn new(n_max: usize) -> Result<Self, SetError> {
        if n_max == 0 {
            Err(SetError::ZeroBound)
        } else {
            Ok(Bound(n_max))
        }
    }

    pub fn n_max(self) -> usize {
        self.0
    }

    /// `[0, n_max / g)`, or `None` when that window would be empty.
    pub fn divided(self, g: &BigUint) -> Option<Bound> {
        let q = match to_window(g) {
            Some(g) if g > 0 => self.0 / g,
            _ => 0,
        };
        Bound::new(q).ok()
    }
}

impl TryFrom<usize> for Bound {
    type Error = SetError;

    fn try_from(n: usize) -> Result<Self, SetError> {
        Bound::new(n)
    }
}

impl From<Bound> for usize {
    fn from(b: Bound) -> usize {
        b.0
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuredSet {
    /// Sorted, duplicate free, containing 0.
    Finite(#[serde(with = "crate::nat::serde_nat_vec")] Vec<BigUint>),
    /// `[0, g)` with `g >= 1`.
    Interval(#[serde(with = "crate::nat::serde_nat")] BigUint),
    /// All of `N0`.
    Tail,
    /// `scale * inner` with `scale >= 1`.
    Dilated {
        #[serde(with = "crate::nat::serde_nat")]
        scale: BigUint,
        inner: Box<StructuredSet>,
    },
    /// Direct sum of the parts; uniqueness was checked when it was built.
    DirectSum(Vec<StructuredSet>),
}

impl StructuredSet {
    /// `{0}`, the identity of the direct sum.
    pub fn zero() -> Self {
        StructuredSet::Finite(vec![BigUint::zero()])
    }

    pub fn finite<I, T>(elements: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut v: Vec<BigUint> = elements.into_iter().map(Into::into).collect();
        v.sort();
        v.dedup();
        if v.first().is_none_or(|x| !x.is_zero()) {
            return Err(SetError::MissingZero);
        }
        Ok(StructuredSet::Finite(v))
    }

    pub fn interval(g: impl Into<BigUint>) -> Result<Self, SetError> {
        let g = g.into();
        if g.is_zero() {
            return Err(SetError::EmptyInterval);
        }
        Ok(StructuredSet::Interval(g).normalize())
    }

    pub fn tail() -> Self {
        StructuredSet::Tail
    }

    pub fn dilated(scale: impl Into<BigUint>, inner: StructuredSet) -> Result<Self, SetError> {
        let scale = scale.into();
        if scale.is_zero() {
            return Err(SetError::ZeroScale);
        }
        Ok(StructuredSet::Dilated {
            scale,
            inner: Box::new(inner),
        }
        .normalize())
    }

    /// Direct sum of `parts`, checked for unique representation of every
    /// integer below the bound.
    ///
    /// A duplicate is reported at its least value; the two representations
    /// list one element per given part, in colexicographic order.
    pub fn direct_sum(parts: Vec<StructuredSet>, bound: Bound) -> Result<Self, SetError> {
        if parts.is_empty() {
            return Err(SetError::EmptySum);
        }
        if parts.iter().any(|p| !p.contains(&BigUint::zero())) {
            return Err(SetError::MissingZero);
        }
        let limit = bound.n_max();
        let windows: Vec<Vec<usize>> = parts.iter().map(|p| p.window(limit)).collect();
        let counts = window::count_representations(&windows, limit);
        if let Some(n) = counts.iter().position(|&c| c >= 2) {
            let reps = window::representations(&windows, n, 2);
            let lift = |r: &Vec<usize>| r.iter().map(|&x| BigUint::from(x)).collect();
            return Err(SetError::DuplicateRepresentation {
                n: BigUint::from(n),
                first: lift(&reps[0]),
                second: lift(&reps[1]),
            });
        }
        Ok(StructuredSet::DirectSum(parts).normalize())
    }

    pub fn is_zero_set(&self) -> bool {
        matches!(self, StructuredSet::Finite(v) if v.len() == 1 && v[0].is_zero())
    }

    /// Normal form: unit dilations vanish, nested dilations multiply,
    /// direct sums are flat and free of `{0}` parts.
    pub fn normalize(&self) -> StructuredSet {
        match self {
            StructuredSet::Finite(v) => {
                let mut v = v.clone();
                v.sort();
                v.dedup();
                StructuredSet::Finite(v)
            }
            StructuredSet::Interval(g) if g.is_one() => StructuredSet::zero(),
            StructuredSet::Interval(g) => StructuredSet::Interval(g.clone()),
            StructuredSet::Tail => StructuredSet::Tail,
            StructuredSet::Dilated { scale, inner } => {
                let inner = inner.normalize();
                if scale.is_zero() || inner.is_zero_set() {
                    return StructuredSet::zero();
                }
                if scale.is_one() {
                    return inner;
                }
                match inner {
                    StructuredSet::Dilated {
                        scale: s2,
                        inner: x,
                    } => StructuredSet::Dilated {
                        scale: scale * s2,
                        inner: x,
                    },
                    other => StructuredSet::Dilated {
                        scale: scale.clone(),
                        inner: Box::new(other),
                    },
                }
            }
            StructuredSet::DirectSum(parts) => {
                let mut flat = Vec::with_capacity(parts.len());
                for p in parts {
                    match p.normalize() {
                        StructuredSet::DirectSum(inner) => flat.extend(inner),
                        q if q.is_zero_set() => {}
                        q => flat.push(q),
                    }
                }
                match flat.len() {
                    0 => StructuredSet::zero(),
                    1 => flat.pop().unwrap(),
                    _ => StructuredSet::DirectSum(flat),
                }
            }
        }
    }

    /// Exact membership.
    pub fn contains(&self, n: &BigUint) -> bool {
        match self {
            StructuredSet::Finite(v) => v.iter().any(|x| x == n),
            StructuredSet::Interval(g) => n < g,
            StructuredSet::Tail => true,
            StructuredSet::Dilated { scale, inner } => {
                if scale.is_zero() {
                    return n.is_zero();
                }
                let (q, r) = n.div_rem(scale);
                r.is_zero() && inner.contains(&q)
            }
            StructuredSet::DirectSum(parts) => sum_contains(parts, n),
        }
    }

    /// Elements below `bound.n_max()`, ascending.
    pub fn enumerate(&self, bound: Bound) -> Vec<BigUint> {
        self.window(bound.n_max())
            .into_iter()
            .map(BigUint::from)
            .collect()
    }

    /// Bounded extensional equality. Agreement on a window says nothing
    /// about the denoted sets beyond it.
    pub fn bounded_eq(&self, other: &StructuredSet, bound: Bound) -> bool {
        self.window(bound.n_max()) == other.window(bound.n_max())
    }

    /// Elements below `limit`, ascending.
    pub(crate) fn window(&self, limit: usize) -> Vec<usize> {
        match self {
            StructuredSet::Finite(v) => {
                let mut out: Vec<usize> = v
                    .iter()
                    .filter_map(to_window)
                    .filter(|&x| x < limit)
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            }
            StructuredSet::Interval(g) => {
                let top = to_window(g).map_or(limit, |g| g.min(limit));
                (0..top).collect()
            }
            StructuredSet::Tail => (0..limit).collect(),
            StructuredSet::Dilated { scale, inner } => match to_window(scale) {
                Some(0) => {
                    if limit > 0 {
                        vec![0]
                    } else {
                        vec![]
                    }
                }
                Some(s) => inner
                    .window(limit.div_ceil(s))
                    .into_iter()
                    .map(|x| x * s)
                    .collect(),
                // scale beyond the window: only 0 survives
                None => inner.window(limit.min(1)),
            },
            StructuredSet::DirectSum(parts) => {
                let windows: Vec<Vec<usize>> = parts.iter().map(|p| p.window(limit)).collect();
                window::count_representations(&windows, limit)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(n, _)| n)
                    .collect()
            }
        }
    }

    /// Least positive element, computed from the structure.
    pub fn least_positive(&self) -> Option<BigUint> {
        match self {
            StructuredSet::Finite(v) => v.iter().filter(|x| !x.is_zero()).min().cloned(),
            StructuredSet::Interval(g) => (*g >= BigUint::from(2u32)).then(BigUint::one),
            StructuredSet::Tail => Some(BigUint::one()),
            StructuredSet::Dilated { scale, inner } => {
                if scale.is_zero() {
                    None
                } else {
                    inner.least_positive().map(|x| x * scale)
                }
            }
            StructuredSet::DirectSum(parts) => {
                parts.iter().filter_map(|p| p.least_positive()).min()
            }
        }
    }

    /// Least positive integer not in the set.
    ///
    /// Exact for intervals, finite sets and proper dilations; direct sums are
    /// scanned below the bound. `None` means not found (always so for `N0`).
    pub fn least_absent_positive(&self, bound: Bound) -> Option<BigUint> {
        match self.normalize() {
            StructuredSet::Finite(v) => {
                let mut expect = BigUint::one();
                for x in v.iter().filter(|x| !x.is_zero()) {
                    if *x != expect {
                        break;
                    }
                    expect += 1u32;
                }
                Some(expect)
            }
            StructuredSet::Interval(g) => Some(g),
            StructuredSet::Tail => None,
            StructuredSet::Dilated { .. } => Some(BigUint::one()),
            s @ StructuredSet::DirectSum(_) => {
                let w = s.window(bound.n_max());
                (1..bound.n_max())
                    .find(|n| w.binary_search(n).is_err())
                    .map(BigUint::from)
            }
        }
    }

    /// Largest element, when the denoted set is finite.
    pub fn max_element(&self) -> Option<BigUint> {
        match self {
            StructuredSet::Finite(v) => v.iter().max().cloned(),
            StructuredSet::Interval(g) => Some(g - 1u32),
            StructuredSet::Tail => None,
            StructuredSet::Dilated { scale, inner } => inner.max_element().map(|m| m * scale),
            StructuredSet::DirectSum(parts) => parts
                .iter()
                .map(|p| p.max_element())
                .sum::<Option<BigUint>>(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.max_element().is_some()
    }

    /// Whether every element is a multiple of `g`, judged from the structure
    /// alone. `false` can be a missed fact but `true` is always correct.
    pub fn divisible_by(&self, g: &BigUint) -> bool {
        if g.is_one() {
            return true;
        }
        match self {
            StructuredSet::Finite(v) => v.iter().all(|x| x.is_multiple_of(g)),
            StructuredSet::Interval(h) => *h <= BigUint::one(),
            StructuredSet::Tail => false,
            StructuredSet::Dilated { scale, inner } => {
                let d = scale.gcd(g);
                inner.divisible_by(&(g / d))
            }
            StructuredSet::DirectSum(parts) => parts.iter().all(|p| p.divisible_by(g)),
        }
    }

    /// `{k : k * g in self}` computed from the structure, when possible.
    ///
    /// A direct sum is handled when at most one of its parts is not
    /// structurally divisible by `g`.
    pub fn quotient(&self, g: &BigUint) -> Option<StructuredSet> {
        if g.is_zero() {
            return None;
        }
        let q = match self {
            StructuredSet::Finite(v) => StructuredSet::Finite(
                v.iter()
                    .filter(|x| x.is_multiple_of(g))
                    .map(|x| x / g)
                    .collect(),
            ),
            StructuredSet::Interval(h) => StructuredSet::Interval(h.div_ceil(g)),
            StructuredSet::Tail => StructuredSet::Tail,
            StructuredSet::Dilated { scale, inner } => {
                let d = scale.gcd(g);
                StructuredSet::Dilated {
                    scale: scale / &d,
                    inner: Box::new(inner.quotient(&(g / &d))?),
                }
            }
            StructuredSet::DirectSum(parts) => {
                let rough = parts.iter().filter(|p| !p.divisible_by(g)).count();
                if rough > 1 {
                    return None;
                }
                StructuredSet::DirectSum(
                    parts
                        .iter()
                        .map(|p| p.quotient(g))
                        .collect::<Option<Vec<_>>>()?,
                )
            }
        };
        Some(q.normalize())
    }

    fn needs_parens_as_term(&self) -> bool {
        matches!(self, StructuredSet::DirectSum(_))
    }
}

fn sum_contains(parts: &[StructuredSet], n: &BigUint) -> bool {
    match parts {
        [] => n.is_zero(),
        [last] => last.contains(n),
        [first, rest @ ..] => {
            // only elements <= n of the first part can take part
            let Some(limit) = n.to_usize().and_then(|x| x.checked_add(1)) else {
                return first_part_scan_big(first, rest, n);
            };
            first
                .window(limit)
                .into_iter()
                .any(|e| sum_contains(rest, &(n - BigUint::from(e))))
        }
    }
}

fn first_part_scan_big(first: &StructuredSet, rest: &[StructuredSet], n: &BigUint) -> bool {
    // n exceeds the machine window; walk candidates one at a time
    let mut e = BigUint::zero();
    while e <= *n {
        if first.contains(&e) && sum_contains(rest, &(n - &e)) {
            return true;
        }
        e += 1u32;
    }
    false
}

impl fmt::Display for StructuredSet {
    /// Renders in the system-description syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuredSet::Finite(v) => {
                f.write_str("{")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
            StructuredSet::Interval(g) => write!(f, "[0,{g})"),
            StructuredSet::Tail => f.write_str("N0"),
            StructuredSet::Dilated { scale, inner } => {
                if inner.needs_parens_as_term() {
                    write!(f, "{scale} * ({inner})")
                } else {
                    write!(f, "{scale} * {inner}")
                }
            }
            StructuredSet::DirectSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    if p.needs_parens_as_term() {
                        write!(f, "({p})")?;
                    } else {
                        write!(f, "{p}")?;
                    }
                }
                Ok(())
            }
        }
    }
}
