//! Truth-value arithmetic and the catalog of many-valued connective systems.
//!
//! Every relational product is parameterized by a [`ConnectiveSystem`]: a
//! named bundle of implication, derived equivalence, negation and (where one
//! exists) the residuated t-norm paired with the implication. All functions
//! here are pure and stateless.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LogicError {
    #[error("truth value {0} outside the closed unit interval [0, 1]")]
    OutOfRange(f64),
    #[error("unknown connective system `{0}` (expected one of L, KD, KDL, S, S#, G43, G43c)")]
    UnknownSystem(String),
    #[error("system {0} has no residuated pairing")]
    NoResiduatedPairing(ConnectiveSystem),
}

/// A degree of truth in the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TruthValue(f64);

impl TruthValue {
    pub const ZERO: TruthValue = TruthValue(0.0);
    pub const ONE: TruthValue = TruthValue(1.0);

    /// Validates `v` into `[0, 1]`; NaN and out-of-range values are rejected.
    pub fn new(v: f64) -> Result<Self, LogicError> {
        if (0.0..=1.0).contains(&v) {
            Ok(TruthValue(v))
        } else {
            Err(LogicError::OutOfRange(v))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_crisp(self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }

    /// Wraps a value the caller has already established to be in range.
    pub(crate) fn new_unchecked(v: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&v), "truth value {v} out of range");
        TruthValue(v)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for TruthValue {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        serializer.serialize_f64(self.0)
    }
}

/// Clamp tiny floating-point overshoots back into the unit interval.
#[inline]
fn unit(v: f64) -> f64 {
    v.clamp(0.0, 1.0)
}

/// A t-norm paired with a residuated implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TNorm {
    /// min(a, b); residuum partner of the Gödel implication.
    Minimum,
    /// max(0, a + b - 1); residuum partner of the Łukasiewicz implication.
    Lukasiewicz,
}

impl TNorm {
    pub fn apply(self, a: TruthValue, b: TruthValue) -> TruthValue {
        TruthValue::new_unchecked(self.apply_f64(a.0, b.0))
    }

    #[inline]
    pub(crate) fn apply_f64(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Minimum => a.min(b),
            TNorm::Lukasiewicz => unit(a + b - 1.0),
        }
    }
}

/// A named system of many-valued connectives.
///
/// Canonical identifiers, accepted by `FromStr` and used in file headers and
/// CLI flags: `L`, `KD`, `KDL`, `S`, `S#`, `G43`, `G43c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectiveSystem {
    /// `L` — Łukasiewicz: a → b = min(1, 1 − a + b).
    Lukasiewicz,
    /// `KD` — Kleene-Dienes: a → b = max(1 − a, b).
    KleeneDienes,
    /// `KDL` — Reichenbach: a → b = 1 − a + a·b.
    Reichenbach,
    /// `S` — Gödel (standard): a → b = 1 if a ≤ b, else b.
    Standard,
    /// `S#` — sharp: a → b = 1 if a ≤ b, else 0.
    StandardSharp,
    /// `G43` — Gaines (Goguen): a → b = 1 if a = 0, else min(1, b/a).
    Gaines,
    /// `G43c` — contrapositive Gaines: a → b = 1 if b = 1, else min(1, (1−a)/(1−b)).
    GainesContrapositive,
}

impl ConnectiveSystem {
    pub const ALL: [ConnectiveSystem; 7] = [
        ConnectiveSystem::Lukasiewicz,
        ConnectiveSystem::KleeneDienes,
        ConnectiveSystem::Reichenbach,
        ConnectiveSystem::Standard,
        ConnectiveSystem::StandardSharp,
        ConnectiveSystem::Gaines,
        ConnectiveSystem::GainesContrapositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConnectiveSystem::Lukasiewicz => "L",
            ConnectiveSystem::KleeneDienes => "KD",
            ConnectiveSystem::Reichenbach => "KDL",
            ConnectiveSystem::Standard => "S",
            ConnectiveSystem::StandardSharp => "S#",
            ConnectiveSystem::Gaines => "G43",
            ConnectiveSystem::GainesContrapositive => "G43c",
        }
    }

    /// The system's implication a → b.
    pub fn implication(self, a: TruthValue, b: TruthValue) -> TruthValue {
        TruthValue::new_unchecked(self.imp_f64(a.0, b.0))
    }

    /// Degree of equivalence: min(a → b, b → a). For `L` this equals
    /// 1 − |a − b| exactly.
    pub fn equivalence(self, a: TruthValue, b: TruthValue) -> TruthValue {
        TruthValue::new_unchecked(self.eq_f64(a.0, b.0))
    }

    /// Negation, fixed to 1 − a for all systems.
    pub fn negation(self, a: TruthValue) -> TruthValue {
        TruthValue::new_unchecked(1.0 - a.0)
    }

    /// The t-norm residuated with this system's implication, where one
    /// exists (`L` and `S` only).
    pub fn residuum_tnorm(self) -> Result<TNorm, LogicError> {
        match self {
            ConnectiveSystem::Lukasiewicz => Ok(TNorm::Lukasiewicz),
            ConnectiveSystem::Standard => Ok(TNorm::Minimum),
            other => Err(LogicError::NoResiduatedPairing(other)),
        }
    }

    #[inline]
    pub(crate) fn imp_f64(self, a: f64, b: f64) -> f64 {
        match self {
            // Written as 1 - (a - b) so that the L equivalence degree comes
            // out bit-identical to 1 - |a - b|.
            ConnectiveSystem::Lukasiewicz => {
                if a <= b {
                    1.0
                } else {
                    unit(1.0 - (a - b))
                }
            }
            ConnectiveSystem::KleeneDienes => (1.0 - a).max(b),
            ConnectiveSystem::Reichenbach => unit(1.0 - a + a * b),
            ConnectiveSystem::Standard => {
                if a <= b {
                    1.0
                } else {
                    b
                }
            }
            ConnectiveSystem::StandardSharp => {
                if a <= b {
                    1.0
                } else {
                    0.0
                }
            }
            // Division-by-zero guards return 1 (limit convention, keeps the
            // boundary law).
            ConnectiveSystem::Gaines => {
                if a == 0.0 {
                    1.0
                } else {
                    unit(b / a)
                }
            }
            ConnectiveSystem::GainesContrapositive => {
                if b == 1.0 {
                    1.0
                } else {
                    unit((1.0 - a) / (1.0 - b))
                }
            }
        }
    }

    #[inline]
    pub(crate) fn eq_f64(self, a: f64, b: f64) -> f64 {
        self.imp_f64(a, b).min(self.imp_f64(b, a))
    }
}

impl fmt::Display for ConnectiveSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConnectiveSystem {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "L" => Ok(ConnectiveSystem::Lukasiewicz),
            "KD" => Ok(ConnectiveSystem::KleeneDienes),
            "KDL" => Ok(ConnectiveSystem::Reichenbach),
            "S" => Ok(ConnectiveSystem::Standard),
            "S#" => Ok(ConnectiveSystem::StandardSharp),
            "G43" => Ok(ConnectiveSystem::Gaines),
            "G43c" => Ok(ConnectiveSystem::GainesContrapositive),
            other => Err(LogicError::UnknownSystem(other.to_string())),
        }
    }
}

impl Serialize for ConnectiveSystem {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
    {
        serializer.serialize_str(self.name())
    }
}
