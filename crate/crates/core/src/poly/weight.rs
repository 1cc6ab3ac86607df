use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExponentVector, PolyError, Rational};

/// Rational weight vector `w ∈ ℚⁿ` defining a grading.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<Rational>,
    all_positive: bool,
    all_nonnegative: bool,
}

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        let all_positive = entries.iter().all(|e| e.is_positive());
        let all_nonnegative = entries.iter().all(|e| !e.is_negative());
        WeightVector {
            entries,
            all_positive,
            all_nonnegative,
        }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&e| Rational::from_integer(e.into())).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rational::zero(); n])
    }

    pub fn ones(n: usize) -> Self {
        Self::new(vec![Rational::one(); n])
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_all_positive(&self) -> bool {
        self.all_positive
    }

    pub fn is_all_nonnegative(&self) -> bool {
        self.all_nonnegative
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `wᵀa`.
    pub fn dot(&self, a: &ExponentVector) -> Rational {
        let mut acc = Rational::zero();
        for (w, &e) in self.entries.iter().zip(a.entries()) {
            if e != 0 && !w.is_zero() {
                acc += w * Rational::from_integer(e.into());
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.entries.iter().map(|a| a * c).collect())
    }

    /// Positive rescaling to a primitive integer vector (gcd of entries 1).
    /// The zero vector maps to itself.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|e| e / &g).collect()
    }

    /// [`primitive_integer`](Self::primitive_integer) as machine integers.
    pub fn primitive_i64(&self) -> Result<Vec<i64>, PolyError> {
        self.primitive_integer()
            .iter()
            .map(|e| e.to_i64().ok_or(PolyError::WeightOverflow))
            .collect()
    }

    pub fn max_entry(&self) -> Option<&Rational> {
        self.entries.iter().max()
    }

    pub fn min_entry(&self) -> Option<&Rational> {
        self.entries.iter().min()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse {
        pos: 0,
        msg: format!("invalid rational `{s}`"),
    };
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(PolyError::Parse {
                    pos: 0,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_tuple(s: &str) -> Result<Vec<&str>, PolyError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| PolyError::Parse {
            pos: 0,
            msg: format!("expected `(w1,...,wn)`, got `{t}`"),
        })?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').collect())
}

impl FromStr for WeightVector {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_tuple(s)?
            .into_iter()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WeightVector::new(entries))
    }
}

/// Orthant sign vector `π ∈ {−1, +1}ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self, PolyError> {
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(PolyError::InvalidSign);
        }
        Ok(SignVector(entries))
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Sign of `π^a`.
    pub fn sign_of(&self, a: &ExponentVector) -> i8 {
        let odd_neg = self
            .0
            .iter()
            .zip(a.entries())
            .filter(|(&p, &e)| p < 0 && e % 2 == 1)
            .count();
        if odd_neg % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl FromStr for SignVector {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_tuple(s)?
            .into_iter()
            .map(|p| match p.trim() {
                "1" | "+1" => Ok(1),
                "-1" => Ok(-1),
                _ => Err(PolyError::InvalidSign),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SignVector::new(entries)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
