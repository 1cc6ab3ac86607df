use num_traits::{Signed, Zero};

use super::{RootsError, UnivariatePolynomial};
use crate::poly::Rational;

/// Signed remainder chain `p₀ = u, p₁ = u′, p_{i+1} = -rem(p_{i-1}, p_i)`.
///
/// Terms from `p₂` on are rescaled by positive constants to coprime
/// integer coefficients, which leaves every sign unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmSequence {
    seq: Vec<UnivariatePolynomial>,
}

impl SturmSequence {
    pub fn new(u: &UnivariatePolynomial) -> Result<Self, RootsError> {
        if u.is_zero() {
            return Err(RootsError::ZeroPolynomial);
        }
        if u.is_constant() {
            return Err(RootsError::Constant);
        }
        let mut seq = vec![u.clone(), u.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_positive());
        }
        Ok(SturmSequence { seq })
    }

    pub fn polys(&self) -> &[UnivariatePolynomial] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Number of sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the open interval `(a, b)`; `a` and `b` must not be roots.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a < b);
        self.variations(a) - self.variations(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootRange {
    All,
    Positive,
    Negative,
    Closed(Rational, Rational),
}

/// Number of distinct real roots of `u` in `range`.
pub fn count_real_roots(u: &UnivariatePolynomial, range: &RootRange) -> Result<usize, RootsError> {
    if u.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    if u.is_constant() {
        return Ok(0);
    }
    Ok(match range {
        RootRange::All => {
            let b = u.cauchy_bound();
            SturmSequence::new(u)?.count_open(&-b.clone(), &b)
        }
        RootRange::Positive => {
            let w = u.strip_zero_roots();
            if w.is_constant() {
                0
            } else {
                let b = w.cauchy_bound();
                SturmSequence::new(&w)?.count_open(&Rational::zero(), &b)
            }
        }
        RootRange::Negative => {
            let w = u.strip_zero_roots();
            if w.is_constant() {
                0
            } else {
                let b = w.cauchy_bound();
                SturmSequence::new(&w)?.count_open(&-b, &Rational::zero())
            }
        }
        RootRange::Closed(a, b) => {
            if a > b {
                0
            } else if a == b {
                usize::from(u.eval(a).is_zero())
            } else {
                let mut w = u.clone();
                let mut count = 0;
                for e in [a, b] {
                    if w.eval(e).is_zero() {
                        count += 1;
                        let lin = UnivariatePolynomial::linear_root(e);
                        while w.eval(e).is_zero() {
                            w = w.div_exact(&lin).expect("root divides");
                        }
                    }
                }
                if !w.is_constant() {
                    count += SturmSequence::new(&w)?.count_open(a, b);
                }
                count
            }
        }
    })
}

/// `u / gcd(u, u′)` with coprime integer coefficients and positive leading coefficient.
pub fn squarefree_part(u: &UnivariatePolynomial) -> Result<UnivariatePolynomial, RootsError> {
    if u.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let g = u.gcd(&u.derivative());
    let q = if g.is_zero() { u.clone() } else { u.div_exact(&g).expect("gcd divides") };
    let q = q.primitive_positive();
    Ok(if q.lead().is_some_and(|l| l.is_negative()) { -&q } else { q })
}

/// All roots real and pairwise distinct.
pub fn is_univariate_real_radical(u: &UnivariatePolynomial) -> Result<bool, RootsError> {
    if u.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let d = u.degree().unwrap();
    if d == 0 {
        return Err(RootsError::Constant);
    }
    if !u.gcd(&u.derivative()).is_constant() {
        return Ok(false);
    }
    Ok(count_real_roots(u, &RootRange::All)? == d)
}

/// Whether `x^b·u(x^v)` vanishes somewhere in `(ℝ*)ⁿ`. The monomial `x^v`
/// sweeps all of `(0, ∞)`, and also `(-∞, 0)` exactly when some `vᵢ` is odd.
pub fn edge_has_rstar_zero(u: &UnivariatePolynomial, v: &[i64]) -> Result<bool, RootsError> {
    let pos = count_real_roots(u, &RootRange::Positive)? > 0;
    if pos {
        return Ok(true);
    }
    let odd = v.iter().any(|x| x % 2 != 0);
    Ok(odd && count_real_roots(u, &RootRange::Negative)? > 0)
}
