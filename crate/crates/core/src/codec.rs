// SPDX-License-Identifier: Apache-2.0

//! Mixed-radix digits.
//!
//! For radices `g_1, ..., g_r` every `n` is uniquely
//! `x_1 + G_1 x_2 + ... + G_{r-1} x_r + G_r x_{r+1}` with `x_i < g_i` and an
//! unbounded overflow `x_{r+1}`. Digits are stored least significant first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::radix::{RadixError, Radices};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error(transparent)]
    Radix(#[from] RadixError),
    #[error("digit {position} is {digit}, radix is {radix}")]
    DigitOutOfRange {
        position: usize,
        digit: BigUint,
        radix: BigUint,
    },
    #[error("{digits} digits for {radices} radices")]
    LengthMismatch { digits: usize, radices: usize },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("malformed digits {0:?}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedRadixDigits {
    /// `x_1, ..., x_r`.
    #[serde(with = "crate::nat::serde_nat_vec")]
    pub digits: Vec<BigUint>,
    /// `x_{r+1}`, zero exactly when the number is below `G_r`.
    #[serde(with = "crate::nat::serde_nat")]
    pub overflow: BigUint,
}

impl MixedRadixDigits {
    pub fn new(digits: Vec<BigUint>, overflow: BigUint) -> Self {
        MixedRadixDigits { digits, overflow }
    }

    pub fn from_u64s(digits: &[u64], overflow: u64) -> Self {
        MixedRadixDigits {
            digits: digits.iter().map(|&d| BigUint::from(d)).collect(),
            overflow: BigUint::from(overflow),
        }
    }

    /// Text with the most significant part first: `"3+9,7"`.
    pub fn display_msd(&self) -> String {
        let mut out = String::new();
        if !self.overflow.is_zero() {
            out.push_str(&format!("{}+", self.overflow));
        }
        let rev: Vec<String> = self.digits.iter().rev().map(ToString::to_string).collect();
        out.push_str(&rev.join(","));
        out
    }

    /// Parses the most-significant-first text written by [`Self::display_msd`].
    pub fn parse_msd(s: &str) -> Result<Self, CodecError> {
        let (overflow, digits) = match s.split_once('+') {
            Some((o, d)) => (parse_nat(o, s)?, d),
            None => (BigUint::zero(), s),
        };
        let mut digits = parse_digit_list(digits, s)?;
        digits.reverse();
        Ok(MixedRadixDigits { digits, overflow })
    }
}

/// `"7,9+3"`: digits least significant first, then the overflow if nonzero.
impl fmt::Display for MixedRadixDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))?;
        if !self.overflow.is_zero() {
            write!(f, "+{}", self.overflow)?;
        }
        Ok(())
    }
}

impl FromStr for MixedRadixDigits {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, overflow) = match s.split_once('+') {
            Some((d, o)) => (d, parse_nat(o, s)?),
            None => (s, BigUint::zero()),
        };
        Ok(MixedRadixDigits {
            digits: parse_digit_list(digits, s)?,
            overflow,
        })
    }
}

fn parse_nat(part: &str, whole: &str) -> Result<BigUint, CodecError> {
    let t = part.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CodecError::Malformed(whole.to_string()));
    }
    t.parse().map_err(|_| CodecError::Malformed(whole.to_string()))
}

fn parse_digit_list(part: &str, whole: &str) -> Result<Vec<BigUint>, CodecError> {
    if part.trim().is_empty() {
        return Ok(Vec::new());
    }
    part.split(',').map(|d| parse_nat(d, whole)).collect()
}

/// Repeated division: `x_i` is the remainder of `n / G_{i-1}` by `g_i`.
pub fn encode(n: &BigUint, radices: &Radices) -> MixedRadixDigits {
    let mut rest = n.clone();
    let mut digits = Vec::with_capacity(radices.len());
    for g in radices.iter() {
        let (q, r) = rest.div_rem(g);
        digits.push(r);
        rest = q;
    }
    MixedRadixDigits {
        digits,
        overflow: rest,
    }
}

pub fn decode(d: &MixedRadixDigits, radices: &Radices) -> Result<BigUint, CodecError> {
    if d.digits.len() != radices.len() {
        return Err(CodecError::LengthMismatch {
            digits: d.digits.len(),
            radices: radices.len(),
        });
    }
    for (i, (x, g)) in d.digits.iter().zip(radices.iter()).enumerate() {
        if x >= g {
            return Err(CodecError::DigitOutOfRange {
                position: i + 1,
                digit: x.clone(),
                radix: g.clone(),
            });
        }
    }
    // Horner from the overflow down
    let mut n = d.overflow.clone();
    for (x, g) in d.digits.iter().zip(radices.iter()).rev() {
        n = n * g + x;
    }
    Ok(n)
}

/// Named radix sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    /// Pence in a shilling, shillings in a pound.
    BritishMonetary,
    Binary(usize),
    GAdic { radix: u64, digits: usize },
    /// Radices `2, 3, ..., k + 1`.
    Factorial(usize),
}

impl Preset {
    pub fn radices(&self) -> Result<Radices, CodecError> {
        let v: Vec<u64> = match *self {
            Preset::BritishMonetary => vec![12, 20],
            Preset::Binary(k) => vec![2; k],
            Preset::GAdic { radix, digits } => vec![radix; digits],
            Preset::Factorial(k) => (2..k as u64 + 2).collect(),
        };
        Ok(Radices::from_u64s(&v)?)
    }
}

impl FromStr for Preset {
    type Err = CodecError;

    /// `british-monetary`, `binary-K`, `g-adic(G,K)` or `factorial-K`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CodecError::UnknownPreset(s.to_string());
        let count = |t: &str| t.trim().parse::<usize>().map_err(|_| unknown());
        let name = s.trim();
        if name == "british-monetary" {
            return Ok(Preset::BritishMonetary);
        }
        if let Some(k) = name.strip_prefix("binary-") {
            return Ok(Preset::Binary(count(k)?));
        }
        if let Some(k) = name.strip_prefix("factorial-") {
            return Ok(Preset::Factorial(count(k)?));
        }
        if let Some(args) = name
            .strip_prefix("g-adic(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let (g, k) = args.split_once(',').ok_or_else(unknown)?;
            let radix = g.trim().parse::<u64>().map_err(|_| unknown())?;
            return Ok(Preset::GAdic {
                radix,
                digits: count(k)?,
            });
        }
        Err(unknown())
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::BritishMonetary => f.write_str("british-monetary"),
            Preset::Binary(k) => write!(f, "binary-{k}"),
            Preset::GAdic { radix, digits } => write!(f, "g-adic({radix},{digits})"),
            Preset::Factorial(k) => write!(f, "factorial-{k}"),
        }
    }
}

pub fn preset(name: &str) -> Result<Radices, CodecError> {
    name.parse::<Preset>()?.radices()
}
