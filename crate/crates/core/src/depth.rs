use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// A value in `ℕ ∪ {∞}`.
///
/// Variant order gives the total order with `Infinite` on top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Depth {
    Finite(u32),
    Infinite,
}

pub use Depth::Infinite as INF;

impl Depth {
    pub fn is_finite(self) -> bool {
        matches!(self, Depth::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Depth::Finite(n) => Some(n),
            Depth::Infinite => None,
        }
    }

    /// `min(self, cap)` for a finite cap.
    pub fn capped(self, cap: u32) -> Depth {
        self.min(Depth::Finite(cap))
    }
}

impl From<u32> for Depth {
    fn from(n: u32) -> Self {
        Depth::Finite(n)
    }
}

impl Add<u32> for Depth {
    type Output = Depth;

    fn add(self, rhs: u32) -> Depth {
        match self {
            Depth::Finite(n) => Depth::Finite(n.saturating_add(rhs)),
            Depth::Infinite => Depth::Infinite,
        }
    }
}

impl Add for Depth {
    type Output = Depth;

    fn add(self, rhs: Depth) -> Depth {
        match rhs {
            Depth::Finite(n) => self + n,
            Depth::Infinite => Depth::Infinite,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(n) => write!(f, "{n}"),
            Depth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDepthError(String);

impl fmt::Display for ParseDepthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid depth `{}`: expected a nonnegative integer or \"inf\"", self.0)
    }
}

impl std::error::Error for ParseDepthError {}

impl FromStr for Depth {
    type Err = ParseDepthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Depth::Infinite);
        }
        s.parse::<u32>()
            .map(Depth::Finite)
            .map_err(|_| ParseDepthError(s.to_owned()))
    }
}

impl Serialize for Depth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Depth::Finite(n) => serializer.serialize_u32(*n),
            Depth::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Depth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct DepthVisitor;

        impl Visitor<'_> for DepthVisitor {
            type Value = Depth;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Depth, E> {
                u32::try_from(v)
                    .map(Depth::Finite)
                    .map_err(|_| E::custom(format!("depth {v} out of range")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Depth, E> {
                u64::try_from(v)
                    .map_err(|_| E::custom(format!("negative depth {v}")))
                    .and_then(|v| self.visit_u64(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Depth, E> {
                if v == "inf" {
                    Ok(Depth::Infinite)
                } else {
                    Err(E::custom(format!("unknown depth `{v}`; \"inf\" is the only symbol")))
                }
            }
        }

        deserializer.deserialize_any(DepthVisitor)
    }
}
