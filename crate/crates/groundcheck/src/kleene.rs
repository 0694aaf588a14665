//! Strong Kleene three-valued logic.
//!
//! `Unknown` absorbs conjunction and disjunction unless the other operand
//! decides the result on its own (`False & _ = False`, `True | _ = True`).

use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use serde::{Deserialize, Serialize};

/// A three-valued truth value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Kleene {
    False,
    Unknown,
    True,
}

impl Kleene {
    pub fn is_true(self) -> bool {
        self == Kleene::True
    }

    pub fn is_false(self) -> bool {
        self == Kleene::False
    }

    pub fn is_unknown(self) -> bool {
        self == Kleene::Unknown
    }

    /// Conjunction over an iterator; `True` on empty input.
    pub fn all(values: impl IntoIterator<Item = Kleene>) -> Kleene {
        values.into_iter().fold(Kleene::True, |acc, v| acc & v)
    }

    /// Disjunction over an iterator; `False` on empty input.
    pub fn any(values: impl IntoIterator<Item = Kleene>) -> Kleene {
        values.into_iter().fold(Kleene::False, |acc, v| acc | v)
    }
}

impl From<bool> for Kleene {
    fn from(b: bool) -> Self {
        if b {
            Kleene::True
        } else {
            Kleene::False
        }
    }
}

impl Not for Kleene {
    type Output = Kleene;

    fn not(self) -> Kleene {
        match self {
            Kleene::True => Kleene::False,
            Kleene::False => Kleene::True,
            Kleene::Unknown => Kleene::Unknown,
        }
    }
}

impl BitAnd for Kleene {
    type Output = Kleene;

    fn bitand(self, rhs: Kleene) -> Kleene {
        use Kleene::*;
        match (self, rhs) {
            (False, _) | (_, False) => False,
            (True, True) => True,
            _ => Unknown,
        }
    }
}

impl BitOr for Kleene {
    type Output = Kleene;

    fn bitor(self, rhs: Kleene) -> Kleene {
        use Kleene::*;
        match (self, rhs) {
            (True, _) | (_, True) => True,
            (False, False) => False,
            _ => Unknown,
        }
    }
}

impl fmt::Display for Kleene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kleene::True => "TRUE",
            Kleene::False => "FALSE",
            Kleene::Unknown => "UNKNOWN",
        };
        f.write_str(s)
    }
}
