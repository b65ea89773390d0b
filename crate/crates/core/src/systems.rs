// SPDX-License-Identifier: Apache-2.0

//! Additive systems and the exhaustive unique-representation verifier.
//!
//! An additive system is a family `(A_i)` of sets, each containing 0 and at
//! least one positive element, such that every nonnegative integer is
//! uniquely a finite sum with one element from each set. Verification is
//! exhaustive on a window `[0, n_max)` and every verdict carries its bound.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::Label;
use crate::sets::{Bound, StructuredSet};
use crate::window;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("an additive system needs at least one member")]
    Empty,
    #[error("label {0} is used twice")]
    DuplicateLabel(Label),
    #[error("member {0} does not contain 0")]
    MissingZero(Label),
    #[error("member {0} has fewer than two elements")]
    TooFewElements(Label),
    #[error("member {0} is all of N0, which only a one-member system allows")]
    FullMember(Label),
    #[error("no member labelled {0}")]
    UnknownLabel(Label),
    #[error("bound {bound} does not exceed {needed}")]
    BoundTooSmall { needed: BigUint, bound: Bound },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub label: Label,
    pub set: StructuredSet,
}

impl Member {
    pub fn new(label: impl Into<Label>, set: StructuredSet) -> Self {
        Member {
            label: label.into(),
            set,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditiveSystem {
    members: Vec<Member>,
}

impl<'de> Deserialize<'de> for AdditiveSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            members: Vec<Member>,
        }
        let raw = Raw::deserialize(d)?;
        AdditiveSystem::new(raw.members).map_err(serde::de::Error::custom)
    }
}

impl AdditiveSystem {
    pub fn new(members: Vec<Member>) -> Result<Self, SystemError> {
        if members.is_empty() {
            return Err(SystemError::Empty);
        }
        let mut seen = BTreeSet::new();
        for m in &members {
            if !seen.insert(&m.label) {
                return Err(SystemError::DuplicateLabel(m.label.clone()));
            }
            if !m.set.contains(&BigUint::zero()) {
                return Err(SystemError::MissingZero(m.label.clone()));
            }
            if m.set.least_positive().is_none() {
                return Err(SystemError::TooFewElements(m.label.clone()));
            }
            if members.len() > 1 && m.set.normalize() == StructuredSet::Tail {
                return Err(SystemError::FullMember(m.label.clone()));
            }
        }
        Ok(AdditiveSystem { members })
    }

    pub fn from_pairs<L: Into<Label>>(
        pairs: impl IntoIterator<Item = (L, StructuredSet)>,
    ) -> Result<Self, SystemError> {
        Self::new(pairs.into_iter().map(|(l, s)| Member::new(l, s)).collect())
    }

    /// The one-member system `(N0)`.
    pub fn singleton(label: impl Into<Label>) -> Self {
        AdditiveSystem {
            members: vec![Member::new(label, StructuredSet::Tail)],
        }
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.members.iter().map(|m| &m.label)
    }

    pub fn get(&self, label: &Label) -> Option<&StructuredSet> {
        self.members
            .iter()
            .find(|m| &m.label == label)
            .map(|m| &m.set)
    }

    /// Every way of writing `n` with one element per member; only nonzero
    /// terms are listed.
    pub fn representations_of(&self, n: usize) -> Vec<Representation> {
        representations_in(&self.members, n, usize::MAX)
    }

    pub fn verify(&self, bound: Bound) -> VerificationReport {
        verify_family(&self.members, bound)
    }

    /// Verifies the family with `drop` removed. For a valid system the
    /// verdict is a missing representation at the least positive element of
    /// the dropped set.
    pub fn subfamily_rigidity_check(
        &self,
        drop: &Label,
        bound: Bound,
    ) -> Result<VerificationReport, SystemError> {
        let set = self
            .get(drop)
            .ok_or_else(|| SystemError::UnknownLabel(drop.clone()))?;
        let least = set
            .least_positive()
            .ok_or_else(|| SystemError::TooFewElements(drop.clone()))?;
        if least >= BigUint::from(bound.n_max()) {
            return Err(SystemError::BoundTooSmall {
                needed: least,
                bound,
            });
        }
        let rest: Vec<Member> = self
            .members
            .iter()
            .filter(|m| &m.label != drop)
            .cloned()
            .collect();
        Ok(verify_family(&rest, bound))
    }
}

impl fmt::Display for AdditiveSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            writeln!(f, "{} = {}", m.label, m.set)?;
        }
        Ok(())
    }
}

/// The nonzero summands of one representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub label: Label,
    #[serde(with = "crate::nat::serde_nat")]
    pub element: BigUint,
}

impl Representation {
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|t| &t.element).sum()
    }

    pub fn element_for(&self, label: &Label) -> BigUint {
        self.terms
            .iter()
            .find(|t| &t.label == label)
            .map_or_else(BigUint::zero, |t| t.element.clone())
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}[{}]", t.element, t.label)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    MissingRepresentation {
        #[serde(with = "crate::nat::serde_nat")]
        n: BigUint,
    },
    DuplicateRepresentation {
        #[serde(with = "crate::nat::serde_nat")]
        n: BigUint,
        first: Representation,
        second: Representation,
    },
    OverlapViolation {
        first: Label,
        second: Label,
        #[serde(with = "crate::nat::serde_nat")]
        n: BigUint,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("Valid"),
            Verdict::MissingRepresentation { n } => write!(f, "MissingRepresentation({n})"),
            Verdict::DuplicateRepresentation { n, first, second } => {
                write!(f, "DuplicateRepresentation({n}: {first} | {second})")
            }
            Verdict::OverlapViolation { first, second, n } => {
                write!(f, "OverlapViolation({first}, {second}, {n})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub bound: Bound,
    pub verdict: Verdict,
    /// Integers examined before the verdict was reached.
    pub checked: usize,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.verdict.is_valid()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} up to {}", self.verdict, self.bound)
    }
}

fn windows(members: &[Member], limit: usize) -> Vec<Vec<usize>> {
    members.iter().map(|m| m.set.window(limit)).collect()
}

fn lift(members: &[Member], choice: &[usize]) -> Representation {
    Representation {
        terms: members
            .iter()
            .zip(choice)
            .filter(|(_, &e)| e != 0)
            .map(|(m, &e)| Term {
                label: m.label.clone(),
                element: BigUint::from(e),
            })
            .collect(),
    }
}

pub(crate) fn representations_in(members: &[Member], n: usize, max: usize) -> Vec<Representation> {
    let limit = n.saturating_add(1);
    window::representations(&windows(members, limit), n, max)
        .iter()
        .map(|c| lift(members, c))
        .collect()
}

/// Verifies an arbitrary family, including an empty one.
pub(crate) fn verify_family(members: &[Member], bound: Bound) -> VerificationReport {
    let limit = bound.n_max();
    let ws = windows(members, limit);
    let counts = window::count_representations(&ws, limit);
    let Some(n) = counts.iter().position(|&c| c != 1) else {
        return VerificationReport {
            bound,
            verdict: Verdict::Valid,
            checked: limit,
        };
    };
    let nb = BigUint::from(n);
    let verdict = if counts[n] == 0 {
        Verdict::MissingRepresentation { n: nb }
    } else {
        let holders: Vec<&Member> = members.iter().filter(|m| m.set.contains(&nb)).collect();
        if holders.len() >= 2 {
            Verdict::OverlapViolation {
                first: holders[0].label.clone(),
                second: holders[1].label.clone(),
                n: nb,
            }
        } else {
            let reps = window::representations(&ws, n, 2);
            Verdict::DuplicateRepresentation {
                n: nb,
                first: lift(members, &reps[0]),
                second: lift(members, &reps[1]),
            }
        }
    };
    VerificationReport {
        bound,
        verdict,
        checked: n + 1,
    }
}

/// Pairwise intersections below the bound, restricted to positive elements.
pub fn overlaps(system: &AdditiveSystem, bound: Bound) -> Vec<(Label, Label, BigUint)> {
    let ws = windows(system.members(), bound.n_max());
    let mut out = Vec::new();
    for i in 0..ws.len() {
        for j in i + 1..ws.len() {
            if let Some(&x) = ws[i][1..]
                .iter()
                .find(|x| ws[j].binary_search(x).is_ok())
            {
                out.push((
                    system.members[i].label.clone(),
                    system.members[j].label.clone(),
                    BigUint::from(x),
                ));
            }
        }
    }
    out
}

impl Representation {
    /// Elements as machine integers, for window-sized values.
    pub fn to_u64_terms(&self) -> Vec<(Label, u64)> {
        self.terms
            .iter()
            .map(|t| (t.label.clone(), t.element.to_u64().unwrap_or(u64::MAX)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn b(x: usize) -> Bound {
        Bound::new(x).unwrap()
    }

    fn missing(n: u64) -> Verdict {
        Verdict::MissingRepresentation {
            n: BigUint::from(n),
        }
    }

    #[test]
    fn monetary_835() {
        let sys = fixtures::british_monetary();
        let reps = sys.representations_of(835);
        assert_eq!(reps.len(), 1);
        assert_eq!(
            reps[0].to_u64_terms(),
            vec![
                (Label::name("M1"), 7),
                (Label::name("M2"), 108),
                (Label::name("M3"), 720)
            ]
        );
    }

    #[test]
    fn zero_has_the_empty_representation() {
        for sys in [fixtures::british_monetary(), fixtures::example_one(10)] {
            assert_eq!(
                sys.representations_of(0),
                vec![Representation { terms: vec![] }]
            );
        }
    }

    #[test]
    fn two_coins_represent_one_twice() {
        let sys = AdditiveSystem::from_pairs([
            ("a", StructuredSet::finite([0u32, 1]).unwrap()),
            ("b", StructuredSet::finite([0u32, 1]).unwrap()),
        ])
        .unwrap();
        assert_eq!(sys.representations_of(1).len(), 2);
        let report = sys.verify(b(10));
        assert_eq!(
            report.verdict,
            Verdict::OverlapViolation {
                first: Label::name("a"),
                second: Label::name("b"),
                n: BigUint::from(1u32)
            }
        );
        assert_eq!(report.checked, 2);
    }

    #[test]
    fn duplicate_without_overlap() {
        // 3 = 1 + 2 = 0 + 3, and only b holds 3
        let sys = AdditiveSystem::from_pairs([
            ("a", StructuredSet::finite([0u32, 1]).unwrap()),
            ("b", StructuredSet::finite([0u32, 2, 3]).unwrap()),
        ])
        .unwrap();
        match sys.verify(b(20)).verdict {
            Verdict::DuplicateRepresentation { n, first, second } => {
                assert_eq!(n, BigUint::from(3u32));
                assert_eq!(first.value(), n);
                assert_eq!(second.value(), n);
                assert_ne!(first, second);
            }
            v => panic!("unexpected {v}"),
        }
    }

    #[test]
    fn verify_examples() {
        assert!(fixtures::british_monetary().verify(b(480)).is_valid());
        assert!(fixtures::example_one(10).verify(b(10_000)).is_valid());
        let without_m2 = AdditiveSystem::new(
            fixtures::british_monetary()
                .members()
                .iter()
                .filter(|m| m.label != Label::name("M2"))
                .cloned()
                .collect(),
        )
        .unwrap();
        assert_eq!(without_m2.verify(b(480)).verdict, missing(12));
        assert_eq!(without_m2.verify(b(480)).checked, 13);
    }

    #[test]
    fn report_text() {
        let r = fixtures::british_monetary().verify(b(480));
        assert_eq!(r.to_string(), "Valid up to 480");
    }

    #[test]
    fn rigidity_examples() {
        let one = fixtures::example_one(10);
        let r = one.subfamily_rigidity_check(&Label::name("A2"), b(100)).unwrap();
        assert_eq!(r.verdict, missing(10));

        let bin = fixtures::binary_truncation(3);
        let r = bin.subfamily_rigidity_check(&Label::Position(1), b(8)).unwrap();
        assert_eq!(r.verdict, missing(1));

        let m = fixtures::british_monetary();
        let r = m.subfamily_rigidity_check(&Label::name("M3"), b(480)).unwrap();
        assert_eq!(r.verdict, missing(240));

        assert!(matches!(
            m.subfamily_rigidity_check(&Label::name("M3"), b(240)),
            Err(SystemError::BoundTooSmall { .. })
        ));
        assert!(matches!(
            m.subfamily_rigidity_check(&Label::name("nope"), b(240)),
            Err(SystemError::UnknownLabel(_))
        ));
    }

    #[test]
    fn dropping_the_only_member() {
        let sys = AdditiveSystem::singleton("N");
        let r = sys.subfamily_rigidity_check(&Label::name("N"), b(5)).unwrap();
        assert_eq!(r.verdict, missing(1));
    }

    #[test]
    fn constructor_rules() {
        let iv = |g: u32| StructuredSet::interval(g).unwrap();
        assert_eq!(AdditiveSystem::new(vec![]), Err(SystemError::Empty));
        assert_eq!(
            AdditiveSystem::from_pairs([("a", iv(2)), ("a", iv(3))]),
            Err(SystemError::DuplicateLabel(Label::name("a")))
        );
        assert_eq!(
            AdditiveSystem::from_pairs([("a", StructuredSet::zero())]),
            Err(SystemError::TooFewElements(Label::name("a")))
        );
        assert_eq!(
            AdditiveSystem::from_pairs([(
                "a",
                StructuredSet::Finite(vec![BigUint::from(1u32), BigUint::from(2u32)])
            )]),
            Err(SystemError::MissingZero(Label::name("a")))
        );
        assert_eq!(
            AdditiveSystem::from_pairs([("a", iv(2)), ("b", StructuredSet::Tail)]),
            Err(SystemError::FullMember(Label::name("b")))
        );
        assert!(AdditiveSystem::from_pairs([("a", StructuredSet::Tail)]).is_ok());
    }

    #[test]
    fn valid_systems_have_disjoint_members() {
        for sys in [fixtures::british_monetary(), fixtures::contraction_fixture()] {
            assert!(overlaps(&sys, b(2000)).is_empty());
        }
    }

    #[test]
    fn oracle_consistency() {
        for sys in fixtures::corpus() {
            let bound = b(600);
            let report = sys.verify(bound);
            let all_unique = (0..bound.n_max()).all(|n| sys.representations_of(n).len() == 1);
            assert_eq!(report.is_valid(), all_unique);
            for n in (0..bound.n_max()).step_by(37) {
                let reps = sys.representations_of(n);
                let r = &reps[0];
                assert_eq!(r.value(), BigUint::from(n));
                let labels: BTreeSet<_> = r.terms.iter().map(|t| &t.label).collect();
                assert_eq!(labels.len(), r.terms.len());
                for t in &r.terms {
                    assert!(sys.get(&t.label).unwrap().contains(&t.element));
                }
            }
        }
    }

    #[test]
    fn deleting_any_member_breaks_coverage() {
        for sys in fixtures::corpus() {
            if sys.len() < 2 {
                continue;
            }
            for m in sys.members() {
                let least = m.set.least_positive().unwrap();
                let Some(l) = least.to_usize() else { continue };
                if l >= 2000 {
                    continue;
                }
                let r = sys.subfamily_rigidity_check(&m.label, b(2000)).unwrap();
                assert_eq!(r.verdict, Verdict::MissingRepresentation { n: least });
            }
        }
    }

    #[test]
    fn json_roundtrip_validates() {
        let sys = fixtures::british_monetary();
        let text = serde_json::to_string(&sys).unwrap();
        let back: AdditiveSystem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sys);
        let bad = r#"{"members":[{"label":"a","set":{"finite":[0]}}]}"#;
        assert!(serde_json::from_str::<AdditiveSystem>(bad).is_err());
    }
}
