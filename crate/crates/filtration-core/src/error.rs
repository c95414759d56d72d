//! Strict-fail input validation: out-of-domain values produce typed errors
//! naming the offending symbol instead of propagating NaN.

use core::fmt;

/// The constraint a value failed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Requirement {
    /// Strictly positive.
    Positive,
    /// Zero or positive.
    NonNegative,
    /// Inside the open interval (0, 1).
    OpenUnit,
    /// Inside the closed interval [0, 1].
    ClosedUnit,
    /// At least the given value.
    AtLeast(f64),
    /// Strictly less than another named quantity.
    Below {
        other: &'static str,
        bound: f64,
    },
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Requirement::Positive => write!(f, "must be > 0"),
            Requirement::NonNegative => write!(f, "must be >= 0"),
            Requirement::OpenUnit => write!(f, "must lie in (0, 1)"),
            Requirement::ClosedUnit => write!(f, "must lie in [0, 1]"),
            Requirement::AtLeast(n) => write!(f, "must be >= {n}"),
            Requirement::Below { other, bound } => write!(f, "must be < {other} (= {bound})"),
        }
    }
}

/// A named input violated its domain. NaN fails every comparison, so it is
/// rejected by the same checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainError {
    /// Symbol of the offending quantity, e.g. `solidity_alpha`.
    pub symbol: &'static str,
    /// The rejected value.
    pub value: f64,
    /// What the value was required to satisfy.
    pub requirement: Requirement,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {} is out of domain: {}",
            self.symbol, self.value, self.requirement
        )
    }
}

impl core::error::Error for DomainError {}

pub(crate) fn require_positive(symbol: &'static str, value: f64) -> Result<f64, DomainError> {
    if value > 0.0 {
        Ok(value)
    } else {
        Err(DomainError {
            symbol,
            value,
            requirement: Requirement::Positive,
        })
    }
}

pub(crate) fn require_non_negative(symbol: &'static str, value: f64) -> Result<f64, DomainError> {
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(DomainError {
            symbol,
            value,
            requirement: Requirement::NonNegative,
        })
    }
}

pub(crate) fn require_open_unit(symbol: &'static str, value: f64) -> Result<f64, DomainError> {
    if value > 0.0 && value < 1.0 {
        Ok(value)
    } else {
        Err(DomainError {
            symbol,
            value,
            requirement: Requirement::OpenUnit,
        })
    }
}

pub(crate) fn require_closed_unit(symbol: &'static str, value: f64) -> Result<f64, DomainError> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(DomainError {
            symbol,
            value,
            requirement: Requirement::ClosedUnit,
        })
    }
}

pub(crate) fn require_below(
    symbol: &'static str,
    value: f64,
    other: &'static str,
    bound: f64,
) -> Result<f64, DomainError> {
    if value < bound {
        Ok(value)
    } else {
        Err(DomainError {
            symbol,
            value,
            requirement: Requirement::Below { other, bound },
        })
    }
}

/// Diagnostic attached to a result; never fatal on its own.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Warning {
    /// The empirical J factor went negative (high solidity together with an
    /// interception ratio near the branch threshold). The impaction term then
    /// lowers the mechanism sum and lifts penetration above its no-impaction
    /// value.
    NegativeImpactionJ { j: f64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NegativeImpactionJ { j } => write!(
                f,
                "negative J: impaction factor J = {j} lowers the mechanism sum"
            ),
        }
    }
}
