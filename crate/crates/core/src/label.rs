// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Index of a member of an additive system.
///
/// User-supplied indices are opaque names. Positions `1, 2, ...` are reserved
/// for the sets introduced by dilation; dilating by `r` radices shifts every
/// existing position by `r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Position(u64),
    Name(String),
}

impl Label {
    pub fn name(s: impl Into<String>) -> Self {
        Label::Name(s.into())
    }

    pub fn is_position(&self) -> bool {
        matches!(self, Label::Position(_))
    }

    pub fn position(&self) -> Option<u64> {
        match self {
            Label::Position(k) => Some(*k),
            Label::Name(_) => None,
        }
    }

    /// The label after `r` further dilation positions are prepended.
    pub fn shifted(&self, r: u64) -> Self {
        match self {
            Label::Position(k) => Label::Position(k + r),
            Label::Name(n) => Label::Name(n.clone()),
        }
    }

    /// Inverse of [`Label::shifted`]; `None` for one of the first `r` positions.
    pub fn unshifted(&self, r: u64) -> Option<Self> {
        match self {
            Label::Position(k) if *k > r => Some(Label::Position(k - r)),
            Label::Position(_) => None,
            Label::Name(n) => Some(Label::Name(n.clone())),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Position(k) => write!(f, "_{k}"),
            Label::Name(n) => f.write_str(n),
        }
    }
}

impl FromStr for Label {
    type Err = std::convert::Infallible;

    /// `_<digits>` denotes a position, anything else a name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix('_') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(k) = rest.parse::<u64>() {
                    return Ok(Label::Position(k));
                }
            }
        }
        Ok(Label::Name(s.to_string()))
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        s.parse().unwrap()
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        s.as_str().into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_roundtrip() {
        for l in [Label::Position(3), Label::name("M1"), Label::name("_x")] {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
    }

    #[test]
    fn shifting() {
        assert_eq!(Label::Position(2).shifted(3), Label::Position(5));
        assert_eq!(Label::name("a").shifted(3), Label::name("a"));
        assert_eq!(Label::Position(2).unshifted(2), None);
        assert_eq!(Label::Position(5).unshifted(2), Some(Label::Position(3)));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_string(&vec![Label::Position(1), Label::name("M2")]).unwrap();
        assert_eq!(v, r#"[1,"M2"]"#);
        let back: Vec<Label> = serde_json::from_str(&v).unwrap();
        assert_eq!(back, vec![Label::Position(1), Label::name("M2")]);
    }
}
