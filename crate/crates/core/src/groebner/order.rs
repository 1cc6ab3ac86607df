use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GroebnerError;
use crate::poly::{ExponentVector, WeightVector};

/// Term order used to break ties between monomials of equal weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieBreak {
    Grlex,
    Lex,
    Grevlex,
}

impl TieBreak {
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            TieBreak::Lex => a.lex_cmp(b),
            TieBreak::Grlex => a.cmp(b),
            TieBreak::Grevlex => a.total_degree().cmp(&b.total_degree()).then_with(|| {
                for (x, y) in a.entries().iter().zip(b.entries()).rev() {
                    if x != y {
                        // Smaller exponent in the last differing variable wins.
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TieBreak::Grlex => "grlex",
            TieBreak::Lex => "lex",
            TieBreak::Grevlex => "grevlex",
        })
    }
}

impl FromStr for TieBreak {
    type Err = GroebnerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grlex" => Ok(TieBreak::Grlex),
            "lex" => Ok(TieBreak::Lex),
            "grevlex" => Ok(TieBreak::Grevlex),
            other => Err(GroebnerError::UnknownOrder(other.to_string())),
        }
    }
}

/// Compare by `wᵀa` first, then by the tie-break order.
///
/// Only nonnegative weights give a well-order; others are rejected by
/// Buchberger with a request to homogenize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    weight: WeightVector,
    int_weight: Vec<i64>,
    tiebreak: TieBreak,
}

impl MonomialOrder {
    pub fn new(weight: WeightVector, tiebreak: TieBreak) -> Result<Self, GroebnerError> {
        let int_weight = weight.primitive_i64()?;
        Ok(MonomialOrder {
            weight,
            int_weight,
            tiebreak,
        })
    }

    pub fn tiebreak_only(n: usize, tiebreak: TieBreak) -> Self {
        MonomialOrder {
            weight: WeightVector::zero(n),
            int_weight: vec![0; n],
            tiebreak,
        }
    }

    pub fn grlex(n: usize) -> Self {
        Self::tiebreak_only(n, TieBreak::Grlex)
    }

    pub fn lex(n: usize) -> Self {
        Self::tiebreak_only(n, TieBreak::Lex)
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn tiebreak(&self) -> TieBreak {
        self.tiebreak
    }

    pub fn dim(&self) -> usize {
        self.int_weight.len()
    }

    /// Terminating iff the weight is nonnegative.
    pub fn is_well_order(&self) -> bool {
        self.weight.is_all_nonnegative()
    }

    /// Cache key: proportional weights induce the same comparison.
    pub fn key(&self) -> (Vec<i64>, TieBreak) {
        (self.int_weight.clone(), self.tiebreak)
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let wa: i128 = self
            .int_weight
            .iter()
            .zip(a.entries())
            .map(|(w, &e)| *w as i128 * e as i128)
            .sum();
        let wb: i128 = self
            .int_weight
            .iter()
            .zip(b.entries())
            .map(|(w, &e)| *w as i128 * e as i128)
            .sum();
        wa.cmp(&wb).then_with(|| self.tiebreak.cmp(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight {} refined by {}", self.weight, self.tiebreak)
    }
}
