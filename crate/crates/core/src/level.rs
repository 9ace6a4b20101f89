use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position in the monotone hierarchy: `Finite(1)` is monotone independence,
/// `Infinite` is freeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    Finite(u32),
    Infinite,
}

impl Level {
    pub const MONOTONE: Level = Level::Finite(1);
    pub const FREE: Level = Level::Infinite;

    pub fn finite(m: u32) -> Result<Level> {
        if m == 0 {
            return Err(Error::InvalidArgument("hierarchy level must be at least 1".into()));
        }
        Ok(Level::Finite(m))
    }

    pub fn as_finite(self) -> Option<u32> {
        match self {
            Level::Finite(m) => Some(m),
            Level::Infinite => None,
        }
    }

    /// `true` when a block at `depth` is subject to the monotone coloring rule.
    pub fn constrains_depth(self, depth: usize) -> bool {
        match self {
            Level::Finite(m) => depth >= m as usize,
            Level::Infinite => false,
        }
    }

    /// `true` when positions `1..=pos` still lie in the unrestricted (free) window.
    pub fn covers(self, pos: usize) -> bool {
        match self {
            Level::Finite(m) => pos <= m as usize,
            Level::Infinite => true,
        }
    }

    /// The level one step shallower; `Infinite` stays `Infinite`.
    pub fn pred(self) -> Option<Level> {
        match self {
            Level::Finite(1) | Level::Finite(0) => None,
            Level::Finite(m) => Some(Level::Finite(m - 1)),
            Level::Infinite => Some(Level::Infinite),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(m) => write!(f, "{m}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Level> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "free" | "∞" => Ok(Level::Infinite),
            other => {
                let m: u32 = other
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid level `{s}`")))?;
                Level::finite(m)
            }
        }
    }
}
