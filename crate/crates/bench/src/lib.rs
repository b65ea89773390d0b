// SPDX-License-Identifier: Apache-2.0

//! Inputs shared by the benchmarks.

use addsys_core::{build_bns, AdditiveSystem, GeneratorSchedule, Radices, TailRule};
use num_bigint::BigUint;

/// Truncation of the mixed-radix system with the given prefix, closed by a
/// dilated copy of the nonnegative integers.
pub fn truncation(prefix: &[u64]) -> AdditiveSystem {
    let radices = Radices::from_u64s(prefix).expect("radices >= 2");
    let schedule =
        GeneratorSchedule::new(radices, TailRule::constant(2u32).expect("2 >= 2")).expect("schedule");
    build_bns(&schedule, prefix.len()).expect("truncation")
}

/// A number with `digits` decimal digits, all nines.
pub fn nines(digits: usize) -> BigUint {
    BigUint::from(10u32).pow(digits as u32) - 1u32
}

/// `{0, 1, ..., n - 1}`.
pub fn interval(n: u64) -> Vec<u64> {
    (0..n).collect()
}
