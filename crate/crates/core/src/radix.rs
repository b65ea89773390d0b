// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::Deref;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadixError {
    #[error("radix {value} at position {position} is less than 2")]
    InvalidRadix { position: usize, value: BigUint },
}

/// A finite sequence of radices `g_1, ..., g_r`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Radices(Vec<BigUint>);

impl Radices {
    pub fn new(radices: Vec<BigUint>) -> Result<Self, RadixError> {
        let two = BigUint::from(2u32);
        for (i, g) in radices.iter().enumerate() {
            if *g < two {
                return Err(RadixError::InvalidRadix {
                    position: i + 1,
                    value: g.clone(),
                });
            }
        }
        Ok(Radices(radices))
    }

    pub fn from_u64s(radices: &[u64]) -> Result<Self, RadixError> {
        Self::new(radices.iter().map(|&g| BigUint::from(g)).collect())
    }

    pub fn empty() -> Self {
        Radices(Vec::new())
    }

    /// `G_0 = 1, G_i = G_{i-1} * g_i`; length `r + 1`.
    pub fn partial_products(&self) -> Vec<BigUint> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut acc = BigUint::one();
        out.push(acc.clone());
        for g in &self.0 {
            acc *= g;
            out.push(acc.clone());
        }
        out
    }

    /// `G_r`.
    pub fn product(&self) -> BigUint {
        self.0.iter().product()
    }

    /// Concatenation, the free-monoid product on radix sequences.
    pub fn concat(&self, other: &Radices) -> Radices {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Radices(v)
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<BigUint> {
        self.0
    }
}

impl Deref for Radices {
    type Target = [BigUint];

    fn deref(&self) -> &[BigUint] {
        &self.0
    }
}

impl fmt::Display for Radices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Serialize for Radices {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::nat::serde_nat_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Radices {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = crate::nat::serde_nat_vec::deserialize(d)?;
        Radices::new(v).map_err(serde::de::Error::custom)
    }
}
