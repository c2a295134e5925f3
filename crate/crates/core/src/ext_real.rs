//! Extended reals: finite values plus the two infinities, with NaN ruled out.
//!
//! Divergences take values in [0, ∞] and relative information in [−∞, ∞],
//! so the whole crate computes with a tagged extended-real type instead of
//! letting IEEE infinities and NaNs travel through bare `f64`s. Any
//! operation that would produce NaN (∞ − ∞, 0 · ∞, ∞/∞) either returns an
//! error or is resolved by an explicit, documented convention at the call
//! site — NaN is never a legal value.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A real number extended with ±∞. `Finite` never holds NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

pub use ExtReal::{Finite, NegInf, PosInf};

impl ExtReal {
    pub const ZERO: ExtReal = Finite(0.0);

    /// Wraps a float, rejecting NaN. Infinite floats map to the tagged
    /// infinities.
    pub fn new(x: f64) -> Result<ExtReal> {
        if x.is_nan() {
            return Err(Error::UndefinedOperation("NaN is not an extended real".into()));
        }
        Ok(if x == f64::INFINITY {
            PosInf
        } else if x == f64::NEG_INFINITY {
            NegInf
        } else {
            Finite(x)
        })
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_pos_inf(self) -> bool {
        matches!(self, PosInf)
    }

    /// The finite payload, if any.
    pub fn finite(self) -> Option<f64> {
        match self {
            Finite(x) => Some(x),
            _ => None,
        }
    }

    /// Collapses to `f64`, mapping the tags to IEEE infinities.
    pub fn to_f64(self) -> f64 {
        match self {
            NegInf => f64::NEG_INFINITY,
            Finite(x) => x,
            PosInf => f64::INFINITY,
        }
    }

    /// Checked addition; errors on ∞ + (−∞).
    pub fn add(self, other: ExtReal) -> Result<ExtReal> {
        match (self, other) {
            (Finite(a), Finite(b)) => ExtReal::new(a + b),
            (PosInf, NegInf) | (NegInf, PosInf) => {
                Err(Error::UndefinedOperation("∞ + (−∞)".into()))
            }
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
        }
    }

    /// Checked subtraction; errors on ∞ − ∞ of the same sign.
    pub fn sub(self, other: ExtReal) -> Result<ExtReal> {
        self.add(other.neg())
    }

    /// Checked multiplication; errors on 0 · ∞.
    pub fn mul(self, other: ExtReal) -> Result<ExtReal> {
        match (self, other) {
            (Finite(a), Finite(b)) => ExtReal::new(a * b),
            (Finite(0.0), _) | (_, Finite(0.0)) => {
                Err(Error::UndefinedOperation("0 · ∞".into()))
            }
            (a, b) => {
                let neg = (a < ExtReal::ZERO) != (b < ExtReal::ZERO);
                Ok(if neg { NegInf } else { PosInf })
            }
        }
    }

    pub fn neg(self) -> ExtReal {
        match self {
            NegInf => PosInf,
            Finite(x) => Finite(-x),
            PosInf => NegInf,
        }
    }

    pub fn min(self, other: ExtReal) -> ExtReal {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: ExtReal) -> ExtReal {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Scales a (presentation-layer) value by a positive finite factor.
    pub fn scale(self, factor: f64) -> ExtReal {
        debug_assert!(factor.is_finite() && factor > 0.0);
        match self {
            Finite(x) => Finite(x * factor),
            inf => inf,
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_total(other))
    }
}

impl ExtReal {
    fn cmp_total(&self, other: &Self) -> Ordering {
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.total_cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => write!(f, "-inf"),
            Finite(x) => write!(f, "{x}"),
            PosInf => write!(f, "inf"),
        }
    }
}

// Wire format: finite values are JSON numbers, infinities the strings
// "inf" / "-inf" (JSON has no literal for them).
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Finite(x) => serializer.serialize_f64(*x),
            PosInf => serializer.serialize_str("inf"),
            NegInf => serializer.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtRealVisitor;

        impl<'de> Visitor<'de> for ExtRealVisitor {
            type Value = ExtReal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a finite number or \"inf\"/\"-inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtReal, E> {
                ExtReal::new(v).map_err(|_| E::custom("NaN is not an extended real"))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtReal, E> {
                Ok(Finite(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtReal, E> {
                Ok(Finite(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtReal, E> {
                match v {
                    "inf" => Ok(PosInf),
                    "-inf" => Ok(NegInf),
                    other => Err(E::custom(format!("unrecognized extended real `{other}`"))),
                }
            }
        }

        deserializer.deserialize_any(ExtRealVisitor)
    }
}
