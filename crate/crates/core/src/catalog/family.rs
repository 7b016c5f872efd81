use std::fmt;

use serde::{Deserialize, Serialize};

/// Lie types, untwisted and twisted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LieFamily {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    TrialityD4,
    G2,
    ReeG2,
    F4,
    ReeF4,
    E6,
    TwistedE6,
    E7,
    E8,
    SuzukiB2,
}

/// Which field sizes a family is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldRestriction {
    AnyPrimePower,
    /// `q = p^(2m+1)`.
    OddPowerOf(u64),
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::A,
        LieFamily::TwistedA,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::TwistedD,
        LieFamily::TrialityD4,
        LieFamily::G2,
        LieFamily::ReeG2,
        LieFamily::F4,
        LieFamily::ReeF4,
        LieFamily::E6,
        LieFamily::TwistedE6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::SuzukiB2,
    ];

    pub const CLASSICAL: [LieFamily; 6] = [
        LieFamily::A,
        LieFamily::TwistedA,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::TwistedD,
    ];

    pub fn is_classical(self) -> bool {
        Self::CLASSICAL.contains(&self)
    }

    pub fn is_exceptional(self) -> bool {
        !self.is_classical()
    }

    pub fn is_suzuki_ree(self) -> bool {
        matches!(self, LieFamily::SuzukiB2 | LieFamily::ReeG2 | LieFamily::ReeF4)
    }

    /// Rank of an exceptional type; `None` for the classical series.
    pub fn fixed_rank(self) -> Option<u32> {
        use LieFamily::*;
        match self {
            G2 | ReeG2 | SuzukiB2 => Some(2),
            TrialityD4 | F4 | ReeF4 => Some(4),
            E6 | TwistedE6 => Some(6),
            E7 => Some(7),
            E8 => Some(8),
            A | TwistedA | B | C | D | TwistedD => None,
        }
    }

    /// Smallest rank in the series as listed in the classical table
    /// (`A_n, n >= 1`; `2A_n, B_n, n >= 2`; `C_n, n >= 3`; `D_n, 2D_n, n >= 4`).
    pub fn min_rank(self) -> u32 {
        use LieFamily::*;
        match self {
            A => 1,
            TwistedA | B => 2,
            C => 3,
            D | TwistedD => 4,
            other => other.fixed_rank().unwrap(),
        }
    }

    /// Smallest rank accepted as an identifier. Below [`min_rank`](Self::min_rank)
    /// these are aliases: `C_2 = B_2`, `D_3 = A_3`, `2D_3 = 2A_3`.
    pub fn min_alias_rank(self) -> u32 {
        use LieFamily::*;
        match self {
            C => 2,
            D | TwistedD => 3,
            other => other.min_rank(),
        }
    }

    pub fn field_restriction(self) -> FieldRestriction {
        match self {
            LieFamily::SuzukiB2 | LieFamily::ReeF4 => FieldRestriction::OddPowerOf(2),
            LieFamily::ReeG2 => FieldRestriction::OddPowerOf(3),
            _ => FieldRestriction::AnyPrimePower,
        }
    }

    /// Token used in names: `A`, `2A`, `3D`, `2B`, ...
    pub fn symbol(self) -> &'static str {
        use LieFamily::*;
        match self {
            A => "A",
            TwistedA => "2A",
            B => "B",
            C => "C",
            D => "D",
            TwistedD => "2D",
            TrialityD4 => "3D",
            G2 => "G",
            ReeG2 => "2G",
            F4 => "F",
            ReeF4 => "2F",
            E6 | E7 | E8 => "E",
            TwistedE6 => "2E",
            SuzukiB2 => "2B",
        }
    }

    /// Inverse of [`symbol`](Self::symbol) given the rank (needed for the `E` series).
    pub fn from_symbol(symbol: &str, rank: u32) -> Option<LieFamily> {
        use LieFamily::*;
        let fam = match (symbol, rank) {
            ("A", _) => A,
            ("2A", _) => TwistedA,
            ("B", _) => B,
            ("C", _) => C,
            ("D", _) => D,
            ("2D", _) => TwistedD,
            ("3D", 4) => TrialityD4,
            ("G", 2) => G2,
            ("2G", 2) => ReeG2,
            ("F", 4) => F4,
            ("2F", 4) => ReeF4,
            ("E", 6) => E6,
            ("2E", 6) => TwistedE6,
            ("E", 7) => E7,
            ("E", 8) => E8,
            ("2B", 2) => SuzukiB2,
            _ => return None,
        };
        Some(fam)
    }

    pub fn is_fixed_rank_symbol(symbol: &str) -> bool {
        matches!(symbol, "3D" | "G" | "2G" | "F" | "2F" | "E" | "2E" | "2B")
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fixed_rank() {
            Some(r) => write!(f, "{}_{}", self.symbol(), r),
            None => f.write_str(self.symbol()),
        }
    }
}

/// Adjoint (centreless) or universal (simply connected) version.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Version {
    Adjoint,
    Universal,
}
