// SPDX-License-Identifier: Apache-2.0

//! Helpers for unbounded nonnegative integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Converts a value to `usize` when it fits, used for window arithmetic.
pub(crate) fn to_window(n: &BigUint) -> Option<usize> {
    n.to_usize()
}

/// Deterministic trial division.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += &two;
    }
    true
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Least prime factor of `n >= 2`.
pub fn least_prime_factor(n: &BigUint) -> BigUint {
    debug_assert!(*n >= BigUint::from(2u32));
    let mut d = BigUint::from(2u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return d;
        }
        d += BigUint::one();
    }
    n.clone()
}

/// Serde adapter: small values as JSON numbers, large ones as decimal strings.
pub mod serde_nat {
    use super::*;
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match n.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&n.to_str_radix(10)),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        d.deserialize_any(NatVisitor)
    }

    pub(crate) struct NatVisitor;

    impl<'de> Visitor<'de> for NatVisitor {
        type Value = BigUint;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a nonnegative integer or a decimal string")
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigUint, E> {
            Ok(BigUint::from(v))
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigUint, E> {
            u64::try_from(v)
                .map(BigUint::from)
                .map_err(|_| E::custom("negative integer"))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigUint, E> {
            BigUint::parse_bytes(v.as_bytes(), 10).ok_or_else(|| E::custom("invalid decimal"))
        }
    }
}

/// Serde adapter for sequences of unbounded integers.
pub mod serde_nat_vec {
    use super::*;
    use serde::de::{SeqAccess, Visitor};
    use serde::ser::SerializeSeq;
    use serde::{Deserializer, Serializer};
    use std::fmt;

    struct Wrap<'a>(&'a BigUint);

    impl serde::Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            super::serde_nat::serialize(self.0, s)
        }
    }

    struct Owned(BigUint);

    impl<'de> serde::Deserialize<'de> for Owned {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            d.deserialize_any(super::serde_nat::NatVisitor).map(Owned)
        }
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for n in v {
            seq.serialize_element(&Wrap(n))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        struct SeqVisitor;
        impl<'de> Visitor<'de> for SeqVisitor {
            type Value = Vec<BigUint>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sequence of nonnegative integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<BigUint>, A::Error> {
                let mut out = Vec::new();
                while let Some(Owned(n)) = seq.next_element()? {
                    out.push(n);
                }
                Ok(out)
            }
        }
        d.deserialize_seq(SeqVisitor)
    }
}
