// SPDX-License-Identifier: Apache-2.0

//! Dilation and contraction of additive systems, and composition of the
//! partition witnesses that certify them.
//!
//! Dilating by `(g_1, ..., g_r)` introduces the sets `G_{i-1} * [0, g_i)` at
//! positions `1..=r` and scales every existing member by `G_r`; existing
//! position labels move up by `r`. A contraction replaces each class of an
//! [`IndexPartition`] by the direct sum of its members.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::Label;
use crate::radix::{RadixError, Radices};
use crate::sets::{Bound, SetError, StructuredSet};
use crate::systems::{AdditiveSystem, Member, SystemError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Radix(#[from] RadixError),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("witness labels do not line up: {0}")]
    LabelMismatch(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    System(#[from] SystemError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionClass {
    pub label: Label,
    pub members: BTreeSet<Label>,
}

/// Disjoint nonempty classes of labels, each with its own label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexPartition {
    classes: Vec<PartitionClass>,
}

impl<'de> Deserialize<'de> for IndexPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            classes: Vec<PartitionClass>,
        }
        IndexPartition::new(Raw::deserialize(d)?.classes).map_err(serde::de::Error::custom)
    }
}

impl IndexPartition {
    pub fn new(classes: Vec<PartitionClass>) -> Result<Self, TransformError> {
        let mut names = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for c in &classes {
            if !names.insert(&c.label) {
                return Err(TransformError::NotAPartition(format!(
                    "class label {} repeated",
                    c.label
                )));
            }
            if c.members.is_empty() {
                return Err(TransformError::NotAPartition(format!(
                    "class {} is empty",
                    c.label
                )));
            }
            for m in &c.members {
                if !seen.insert(m) {
                    return Err(TransformError::NotAPartition(format!(
                        "{m} is in two classes"
                    )));
                }
            }
        }
        Ok(IndexPartition { classes })
    }

    pub fn from_classes<L, M, I>(classes: impl IntoIterator<Item = (L, I)>) -> Result<Self, TransformError>
    where
        L: Into<Label>,
        M: Into<Label>,
        I: IntoIterator<Item = M>,
    {
        Self::new(
            classes
                .into_iter()
                .map(|(l, ms)| PartitionClass {
                    label: l.into(),
                    members: ms.into_iter().map(Into::into).collect(),
                })
                .collect(),
        )
    }

    /// Every label in its own class of the same name.
    pub fn singletons<'a>(labels: impl IntoIterator<Item = &'a Label>) -> Self {
        IndexPartition {
            classes: labels
                .into_iter()
                .map(|l| PartitionClass {
                    label: l.clone(),
                    members: BTreeSet::from([l.clone()]),
                })
                .collect(),
        }
    }

    pub fn classes(&self) -> &[PartitionClass] {
        &self.classes
    }

    pub fn class_labels(&self) -> impl Iterator<Item = &Label> {
        self.classes.iter().map(|c| &c.label)
    }

    pub fn covered(&self) -> BTreeSet<Label> {
        self.classes
            .iter()
            .flat_map(|c| c.members.iter().cloned())
            .collect()
    }

    pub fn class_of(&self, member: &Label) -> Option<&Label> {
        self.classes
            .iter()
            .find(|c| c.members.contains(member))
            .map(|c| &c.label)
    }
}

/// Bookkeeping for a dilation by a finite radix sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilationRecord {
    pub radices: Radices,
    /// `G_0 = 1, G_1, ..., G_r`.
    #[serde(with = "crate::nat::serde_nat_vec")]
    pub partial_products: Vec<BigUint>,
    pub introduced_labels: Vec<Label>,
}

pub fn dilate(sys: &AdditiveSystem, g: &BigUint) -> Result<(AdditiveSystem, DilationRecord), TransformError> {
    dilate_family(sys, &Radices::new(vec![g.clone()])?)
}

/// Dilation by `(g_1, ..., g_r)`, the same as dilating by `g_r` first and
/// `g_1` last.
pub fn dilate_family(
    sys: &AdditiveSystem,
    radices: &Radices,
) -> Result<(AdditiveSystem, DilationRecord), TransformError> {
    let r = radices.len();
    let products = radices.partial_products();
    let mut members = Vec::with_capacity(r + sys.len());
    let mut introduced = Vec::with_capacity(r);
    for i in 1..=r {
        let label = Label::Position(i as u64);
        let set = StructuredSet::dilated(
            products[i - 1].clone(),
            StructuredSet::Interval(radices[i - 1].clone()),
        )?;
        introduced.push(label.clone());
        members.push(Member::new(label, set));
    }
    let scale = &products[r];
    for m in sys.members() {
        members.push(Member::new(
            m.label.shifted(r as u64),
            StructuredSet::dilated(scale.clone(), m.set.clone())?,
        ));
    }
    let out = AdditiveSystem::new(members)?;
    Ok((
        out,
        DilationRecord {
            radices: radices.clone(),
            partial_products: products,
            introduced_labels: introduced,
        },
    ))
}

/// Replaces each class by the direct sum of its members, checked at `bound`.
pub fn contract(
    sys: &AdditiveSystem,
    partition: &IndexPartition,
    bound: Bound,
) -> Result<AdditiveSystem, TransformError> {
    let labels: BTreeSet<Label> = sys.labels().cloned().collect();
    let covered = partition.covered();
    if let Some(extra) = covered.difference(&labels).next() {
        return Err(TransformError::NotAPartition(format!(
            "{extra} is not a member of the system"
        )));
    }
    if let Some(missing) = labels.difference(&covered).next() {
        return Err(TransformError::NotAPartition(format!(
            "{missing} is not in any class"
        )));
    }
    let mut members = Vec::with_capacity(partition.classes().len());
    for class in partition.classes() {
        let parts: Vec<StructuredSet> = sys
            .members()
            .iter()
            .filter(|m| class.members.contains(&m.label))
            .map(|m| m.set.clone())
            .collect();
        members.push(Member::new(
            class.label.clone(),
            StructuredSet::direct_sum(parts, bound)?,
        ));
    }
    Ok(AdditiveSystem::new(members)?)
}

/// Certificate that one system is a contraction of another dilated by
/// `radices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionWitness {
    pub partition: IndexPartition,
    pub radices: Radices,
}

impl ContractionWitness {
    /// Witness that a system is a contraction of itself.
    pub fn identity(sys: &AdditiveSystem) -> Self {
        ContractionWitness {
            partition: IndexPartition::singletons(sys.labels()),
            radices: Radices::empty(),
        }
    }

    /// Dilates `base` and contracts the result.
    pub fn apply(&self, base: &AdditiveSystem, bound: Bound) -> Result<AdditiveSystem, TransformError> {
        let (dilated, _) = dilate_family(base, &self.radices)?;
        contract(&dilated, &self.partition, bound)
    }
}

/// Contraction of a contraction: class `i` of the result is the union of
/// the inner classes named in outer class `i`.
pub fn compose_contractions(
    outer: &IndexPartition,
    inner: &IndexPartition,
) -> Result<IndexPartition, TransformError> {
    let inner_labels: BTreeSet<Label> = inner.class_labels().cloned().collect();
    let outer_members = outer.covered();
    if inner_labels != outer_members {
        return Err(TransformError::LabelMismatch(format!(
            "outer partition covers {} labels, inner partition has {} classes",
            outer_members.len(),
            inner_labels.len()
        )));
    }
    let by_label: BTreeMap<&Label, &BTreeSet<Label>> = inner
        .classes()
        .iter()
        .map(|c| (&c.label, &c.members))
        .collect();
    let classes = outer
        .classes()
        .iter()
        .map(|c| PartitionClass {
            label: c.label.clone(),
            members: c
                .members
                .iter()
                .flat_map(|j| by_label[j].iter().cloned())
                .collect(),
        })
        .collect();
    IndexPartition::new(classes)
}

/// Contraction of a dilation of a contraction of a dilation.
///
/// `outer` exhibits `A` as a contraction of `B` dilated by `g_1..g_r`, and
/// `inner` exhibits `B` as a contraction of `C` dilated by `g'_1..g'_s`. The
/// result exhibits `A` as a contraction of `C` dilated by the concatenation.
/// Class `i` of the result is
///
/// ```text
/// (J'_i ∩ [1,r])  ∪  ⋃_{j ∈ J'_i \ [1,r]} r + (K'_j ∩ [1,s])  ∪  ⋃_{j ∈ J'_i \ [1,r]} (K'_j \ [1,s])
/// ```
///
/// where `J'_i` are the outer classes and `K'_j` the inner ones. Base
/// labels that are themselves positions move up by `r` along with the rest.
pub fn compose_contraction_dilation(
    outer: &ContractionWitness,
    inner: &ContractionWitness,
) -> Result<ContractionWitness, TransformError> {
    let r = outer.radices.len() as u64;
    let s = inner.radices.len() as u64;

    let inner_classes: BTreeMap<&Label, &BTreeSet<Label>> = inner
        .partition
        .classes()
        .iter()
        .map(|c| (&c.label, &c.members))
        .collect();

    // outer must cover exactly [1, r] and the inner class labels moved up by r
    let mut expected: BTreeSet<Label> = (1..=r).map(Label::Position).collect();
    expected.extend(inner_classes.keys().map(|l| l.shifted(r)));
    if outer.partition.covered() != expected {
        return Err(TransformError::LabelMismatch(
            "outer classes must cover [1,r] and the inner class labels".into(),
        ));
    }
    let inner_covered = inner.partition.covered();
    if let Some(k) = (1..=s).find(|k| !inner_covered.contains(&Label::Position(*k))) {
        return Err(TransformError::LabelMismatch(format!(
            "inner classes do not cover dilation position {k}"
        )));
    }

    let mut classes = Vec::with_capacity(outer.partition.classes().len());
    for class in outer.partition.classes() {
        let mut merged = BTreeSet::new();
        let mut from_base = Vec::new();
        for label in &class.members {
            match label {
                Label::Position(k) if *k <= r => {
                    merged.insert(label.clone());
                }
                _ => from_base.push(label.unshifted(r).expect("beyond [1, r]")),
            }
        }
        for j in &from_base {
            for k in inner_classes[j].iter() {
                if let Label::Position(p) = k {
                    if *p <= s {
                        merged.insert(Label::Position(r + p));
                    }
                }
            }
        }
        for j in &from_base {
            for k in inner_classes[j].iter() {
                if !matches!(k, Label::Position(p) if *p <= s) {
                    merged.insert(k.shifted(r));
                }
            }
        }
        classes.push(PartitionClass {
            label: class.label.clone(),
            members: merged,
        });
    }
    Ok(ContractionWitness {
        partition: IndexPartition::new(classes)?,
        radices: outer.radices.concat(&inner.radices),
    })
}

/// Folds a chain `A_0 <- A_1 <- ... <- A_n` of single-step witnesses, outermost
/// first, into one witness for `A_0` over `A_n`.
pub fn compose_chain(witnesses: &[ContractionWitness]) -> Result<Option<ContractionWitness>, TransformError> {
    let mut iter = witnesses.iter();
    let Some(first) = iter.next() else {
        return Ok(None);
    };
    let mut acc = first.clone();
    for w in iter {
        acc = compose_contraction_dilation(&acc, w)?;
    }
    Ok(Some(acc))
}
