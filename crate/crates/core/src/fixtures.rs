// SPDX-License-Identifier: Apache-2.0

//! Standard example systems.

use num_bigint::BigUint;
use num_traits::One;

use crate::label::Label;
use crate::sets::StructuredSet;
use crate::systems::{AdditiveSystem, Member};

fn dilated(scale: BigUint, inner: StructuredSet) -> StructuredSet {
    StructuredSet::dilated(scale, inner).expect("positive scale")
}

/// `A1 = [0, g)`, `A2 = g * N0`.
pub fn example_one(g: u64) -> AdditiveSystem {
    AdditiveSystem::from_pairs([
        ("A1", StructuredSet::interval(g).expect("g >= 1")),
        ("A2", dilated(BigUint::from(g), StructuredSet::Tail)),
    ])
    .expect("valid for g >= 2")
}

/// `M1 = [0,12)`, `M2 = 12 * [0,20)`, `M3 = 240 * N0`: pence, shillings, pounds.
pub fn british_monetary() -> AdditiveSystem {
    AdditiveSystem::from_pairs([
        ("M1", StructuredSet::interval(12u32).unwrap()),
        ("M2", dilated(BigUint::from(12u32), StructuredSet::interval(20u32).unwrap())),
        ("M3", dilated(BigUint::from(240u32), StructuredSet::Tail)),
    ])
    .unwrap()
}

/// First `k` digits of the `g`-adic system closed by `g^k * N0`.
///
/// Digit sets get positions `1..=k`, the closing set is labelled `tail`.
pub fn g_adic_truncation(g: u64, k: usize) -> AdditiveSystem {
    let g = BigUint::from(g);
    let mut power = BigUint::one();
    let mut members = Vec::with_capacity(k + 1);
    for i in 1..=k {
        members.push(Member::new(
            Label::Position(i as u64),
            dilated(power.clone(), StructuredSet::Interval(g.clone())),
        ));
        power *= &g;
    }
    members.push(Member::new(Label::name("tail"), dilated(power, StructuredSet::Tail)));
    AdditiveSystem::new(members).expect("g >= 2")
}

pub fn binary_truncation(k: usize) -> AdditiveSystem {
    g_adic_truncation(2, k)
}

/// `A1 = {0,1,4,5}`, `A2 = {0,2}`, `A3 = 8 * N0`: a proper contraction of
/// the binary system.
pub fn contraction_fixture() -> AdditiveSystem {
    AdditiveSystem::from_pairs([
        ("A1", StructuredSet::finite([0u32, 1, 4, 5]).unwrap()),
        ("A2", StructuredSet::finite([0u32, 2]).unwrap()),
        ("A3", dilated(BigUint::from(8u32), StructuredSet::Tail)),
    ])
    .unwrap()
}

/// The reference corpus used across the test suites.
pub fn corpus() -> Vec<AdditiveSystem> {
    vec![
        example_one(2),
        example_one(10),
        binary_truncation(6),
        g_adic_truncation(10, 3),
        british_monetary(),
        contraction_fixture(),
        AdditiveSystem::singleton("N"),
    ]
}
