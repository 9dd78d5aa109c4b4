//! Supported reflection group families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite irreducible crystallographic reflection group with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl GroupType {
    /// Checks the rank bounds: A and B need rank at least 1, D at least 2.
    pub fn validated(self) -> Result<Self> {
        match self {
            GroupType::A(n) | GroupType::B(n) if n >= 1 => Ok(self),
            GroupType::D(n) if n >= 2 => Ok(self),
            GroupType::E6 | GroupType::E7 | GroupType::E8 => Ok(self),
            _ => Err(Error::UnsupportedGroup(format!(
                "{self} (rank out of range)"
            ))),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            GroupType::A(n) | GroupType::B(n) | GroupType::D(n) => n,
            GroupType::E6 => 6,
            GroupType::E7 => 7,
            GroupType::E8 => 8,
        }
    }

    /// Dimension of the coordinate space the roots live in.
    pub fn ambient_dim(self) -> usize {
        match self {
            GroupType::A(n) => n + 1,
            GroupType::B(n) | GroupType::D(n) => n,
            GroupType::E6 | GroupType::E7 | GroupType::E8 => 8,
        }
    }

    /// Group order, the product of the basic degrees.
    pub fn order(self) -> u128 {
        crate::polynomial::degrees(self)
            .map(|d| d.product())
            .unwrap_or(0)
    }

    /// Caveats about degenerate small ranks.
    pub fn warnings(self) -> Vec<String> {
        match self {
            GroupType::D(2) => vec!["D2 is reducible (A1 x A1)".to_string()],
            GroupType::D(3) => vec!["D3 is isomorphic to A3".to_string()],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::A(n) => write!(f, "A{n}"),
            GroupType::B(n) => write!(f, "B{n}"),
            GroupType::D(n) => write!(f, "D{n}"),
            GroupType::E6 => f.write_str("E6"),
            GroupType::E7 => f.write_str("E7"),
            GroupType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for GroupType {
    type Err = Error;

    /// Parses labels such as `B3`, `a5`, `D(4)` or `E8`.
    fn from_str(s: &str) -> Result<Self> {
        let label: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | '_' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        let unsupported = || Error::UnsupportedGroup(s.trim().to_string());
        let mut chars = label.chars();
        let family = chars.next().ok_or_else(unsupported)?;
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        let g = match (family, rank) {
            ('A', n) => GroupType::A(n),
            ('B' | 'C', n) => GroupType::B(n),
            ('D', n) => GroupType::D(n),
            ('E', 6) => GroupType::E6,
            ('E', 7) => GroupType::E7,
            ('E', 8) => GroupType::E8,
            ('F', 4) => {
                return Err(Error::UnsupportedGroup(
                    "F4: the symmetric group is not a maximal parabolic subgroup of F4, \
                     so the net generating function quotient does not apply"
                        .to_string(),
                ))
            }
            ('H', _) | ('I', _) | ('G', _) => {
                return Err(Error::UnsupportedGroup(format!(
                    "{}: only types A, B, D, E6, E7, E8 are supported",
                    s.trim()
                )))
            }
            _ => return Err(unsupported()),
        };
        g.validated()
    }
}
