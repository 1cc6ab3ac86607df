use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, PolyError, Rational, SignVector, WeightVector};

/// Ordered list of variable names shared by all polynomials of a session.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            if !is_valid_name(n) {
                return Err(PolyError::InvalidVariable(n.to_string()));
            }
            if out.iter().any(|o| o == n) {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Ring { names: out.into() })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, ExponentVector::unit(self.nvars(), i), Rational::one())
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial, PolyError> {
        super::parse::parse_polynomial(self, s)
    }

    /// Ring with a fresh homogenizing variable in front (`x0`, or a
    /// suffixed variant if the name is taken).
    pub fn with_front_var(&self) -> Ring {
        let mut name = "x0".to_string();
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        self.with_front_named(&name)
    }

    pub(crate) fn with_front_named(&self, name: &str) -> Ring {
        let mut names = Vec::with_capacity(self.nvars() + 1);
        names.push(name.to_string());
        names.extend(self.names.iter().cloned());
        Ring { names: names.into() }
    }

    pub fn without_var(&self, idx: usize) -> Ring {
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, n)| n.clone())
            .collect();
        Ring { names: names.into() }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &*self.names)
    }
}

fn is_valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, ExponentVector::zero(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, exp: ExponentVector, c: Rational) -> Self {
        assert_eq!(exp.dim(), ring.nvars(), "exponent dimension mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from (possibly repeated) terms, combining like terms.
    pub fn from_terms<I>(ring: &Ring, iter: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut terms: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (e, c) in iter {
            assert_eq!(e.dim(), ring.nvars(), "exponent dimension mismatch");
            add_term(&mut terms, e, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_constant())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn assert_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &ExponentVector, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `deg_w(f) = max{wᵀa : f_a ≠ 0}`.
    pub fn w_degree(&self, w: &WeightVector) -> Result<Rational, PolyError> {
        self.check_weight(w)?;
        self.terms
            .keys()
            .map(|e| w.dot(e))
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Sum of the terms attaining the `w`-degree.
    pub fn initial_form(&self, w: &WeightVector) -> Result<Polynomial, PolyError> {
        let d = self.w_degree(w)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| w.dot(e) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn is_w_homogeneous(&self, w: &WeightVector) -> bool {
        let mut degs = self.terms.keys().map(|e| w.dot(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn check_weight(&self, w: &WeightVector) -> Result<(), PolyError> {
        if w.dim() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                got: w.dim(),
            });
        }
        Ok(())
    }

    /// `x₀^{deg f} f(x₁/x₀, …, xₙ/x₀)` in the ring with `x₀` prepended.
    pub fn homogenize(&self) -> Result<Polynomial, PolyError> {
        self.homogenize_in(&self.ring.with_front_var())
    }

    pub(crate) fn homogenize_in(&self, ring: &Ring) -> Result<Polynomial, PolyError> {
        let d = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.insert_front((d - e.total_degree()) as u32), c.clone()))
                .collect(),
        })
    }

    /// `x₀^{deg_w f} f(x₁/x₀^{w₁}, …, xₙ/x₀^{wₙ})` for positive integer `w`.
    pub fn weighted_homogenize(&self, w: &WeightVector) -> Result<Polynomial, PolyError> {
        self.check_weight(w)?;
        if !w.is_all_positive() || w.entries().iter().any(|e| !e.is_integer()) {
            return Err(PolyError::InvalidWeight(
                "weighted homogenization needs positive integer weights".into(),
            ));
        }
        let d = self.w_degree(w)?;
        let ring = self.ring.with_front_var();
        let terms = self.terms.iter().map(|(e, c)| {
            let gap = (&d - w.dot(e)).to_integer();
            let gap: u32 = u32::try_from(gap).expect("weighted degree gap fits in u32");
            (e.insert_front(gap), c.clone())
        });
        Ok(Polynomial::from_terms(&ring, terms))
    }

    /// Substitute `x_idx = value` and drop the variable from the ring.
    pub fn specialize(&self, idx: usize, value: &Rational) -> Polynomial {
        let ring = self.ring.without_var(idx);
        let terms = self.terms.iter().map(|(e, c)| {
            let (k, rest) = e.remove(idx);
            (rest, c * pow_rational(value, k))
        });
        Polynomial::from_terms(&ring, terms)
    }

    /// Set the front homogenizing variable to one.
    pub fn dehomogenize(&self) -> Polynomial {
        self.specialize(0, &Rational::one())
    }

    /// `f(π₁x₁, …, πₙxₙ)`.
    pub fn orthant_flip(&self, pi: &SignVector) -> Result<Polynomial, PolyError> {
        if pi.dim() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                got: pi.dim(),
            });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let c = if pi.sign_of(e) < 0 { -c } else { c.clone() };
                    (e.clone(), c)
                })
                .collect(),
        })
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(e, c)| {
            let k = e.entries()[i];
            if k == 0 {
                return None;
            }
            let mut v = e.entries().to_vec();
            v[i] -= 1;
            Some((ExponentVector::new(v), c * Rational::from_integer(k.into())))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.entries()) {
                if k > 0 {
                    t *= pow_rational(x, k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients (ascending) if `f` only involves variable `idx`.
    pub fn as_univariate(&self, idx: usize) -> Option<Vec<Rational>> {
        let mut out: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            for (j, &k) in e.entries().iter().enumerate() {
                if j != idx && k != 0 {
                    return None;
                }
            }
            let k = e.entries()[idx] as usize;
            if out.len() <= k {
                out.resize(k + 1, Rational::zero());
            }
            out[k] = c.clone();
        }
        Some(out)
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|e| e.entries()[i] > 0))
            .collect()
    }

    /// Scaled so the graded-lexicographic leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Integer coefficients with unit content and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
        let mut s = Rational::new(lcm, gcd);
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            s = -s;
        }
        self.scale(&s)
    }

    /// Nonzero scalar multiples of each other.
    pub fn is_proportional(&self, other: &Polynomial) -> bool {
        self.ring == other.ring && self.monic() == other.monic()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        self.assert_ring(d);
        let (dl, dc) = d.leading_term()?;
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        while let Some((rl, rc)) = rem.leading_term() {
            if !dl.divides(rl) {
                return None;
            }
            let m = dl.quotient_of(rl);
            let c = rc / &dc;
            rem = &rem - &d.mul_term(&m, &c);
            add_term(&mut quot, m, c);
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Rebuild over another ring with the same number of variables.
    pub fn with_ring(&self, ring: &Ring) -> Result<Polynomial, PolyError> {
        if ring.nvars() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: ring.nvars(),
                got: self.nvars(),
            });
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Embed into `ring`, whose variables are those of `self` with one extra
    /// inserted at `pos`.
    pub(crate) fn embed_with_var(&self, ring: &Ring, pos: usize) -> Polynomial {
        assert_eq!(ring.nvars(), self.nvars() + 1);
        Polynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.entries().to_vec();
                    v.insert(pos, 0);
                    (ExponentVector::new(v), c.clone())
                })
                .collect(),
        }
    }
}

pub(crate) fn add_term(
    terms: &mut BTreeMap<ExponentVector, Rational>,
    e: ExponentVector,
    c: Rational,
) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn pow_rational(x: &Rational, k: u32) -> Rational {
    num_traits::pow::pow(x.clone(), k as usize)
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ring(rhs);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ring(rhs);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            add_term(&mut terms, e.clone(), -c);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ring(rhs);
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                add_term(&mut terms, a.mul(b), ca * cb);
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mono = format_monomial(self.ring.names(), e);
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub(crate) fn format_monomial(names: &[String], e: &ExponentVector) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(e.entries())
        .filter(|(_, &k)| k > 0)
        .map(|(n, &k)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
        .collect();
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names).unwrap()
    }

    fn w(s: &str) -> WeightVector {
        s.parse().unwrap()
    }

    #[test]
    fn w_degree_examples() {
        let r = ring(&["x", "y"]);
        let f = r.parse("x^2+y^2-4*x-4*y+7").unwrap();
        assert_eq!(f.w_degree(&w("(0,-1)")).unwrap(), Rational::zero());
        let one = Polynomial::one(&r);
        assert_eq!(one.w_degree(&w("(3,-7/2)")).unwrap(), Rational::zero());
        let g = r.parse("x^5-x^4*y^2+x^3*y^4-x^2*y^6").unwrap();
        assert_eq!(g.w_degree(&w("(2,1)")).unwrap(), Rational::from_integer(10.into()));
        assert_eq!(
            Polynomial::zero(&r).w_degree(&w("(1,1)")),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn initial_form_examples() {
        let r = ring(&["x", "y", "z"]);
        let f = r.parse("(x-y-z)^4+(x-y-1)^2").unwrap();
        let got = f.initial_form(&w("(0,0,-1)")).unwrap();
        assert_eq!(got, r.parse("(x-y)^4+(x-y-1)^2").unwrap());
        assert_eq!(f.initial_form(&WeightVector::zero(3)).unwrap(), f);

        let r2 = ring(&["x", "y"]);
        let g = r2.parse("x^4+x^2*y^2-1").unwrap();
        assert_eq!(
            g.initial_form(&w("(-1,1)")).unwrap(),
            r2.parse("x^2*y^2-1").unwrap()
        );
        assert!(Polynomial::zero(&r2).initial_form(&w("(1,1)")).is_err());
    }

    #[test]
    fn homogenize_examples() {
        let r = ring(&["x"]);
        let h = r.parse("x+1").unwrap().homogenize().unwrap();
        assert_eq!(h.to_string(), "x0 + x");

        let r2 = ring(&["x", "y"]);
        let h = r2.parse("x^2+y^2-1").unwrap().homogenize().unwrap();
        let hr = h.ring().clone();
        assert_eq!(h, hr.parse("x^2+y^2-x0^2").unwrap());
        let h = r2.parse("x^4+x^2*y^2-1").unwrap().homogenize().unwrap();
        assert_eq!(h, hr.parse("x^4+x^2*y^2-x0^4").unwrap());
        assert!(h.is_w_homogeneous(&WeightVector::ones(3)));
        assert_eq!(h.dehomogenize(), r2.parse("x^4+x^2*y^2-1").unwrap());
    }

    #[test]
    fn weighted_homogenize_examples() {
        let r = ring(&["x", "y"]);
        let f = r.parse("x-y^2").unwrap();
        let h = f.weighted_homogenize(&w("(2,1)")).unwrap();
        assert_eq!(h, h.ring().parse("x-y^2").unwrap());

        let r1 = ring(&["x"]);
        let h = r1.parse("x+1").unwrap().weighted_homogenize(&w("(1)")).unwrap();
        assert_eq!(h, h.ring().parse("x+x0").unwrap());

        let g = r.parse("x^2+y^2-1").unwrap();
        let h = g.weighted_homogenize(&w("(1,1)")).unwrap();
        assert_eq!(h, h.ring().parse("x^2+y^2-x0^2").unwrap());
        assert_eq!(
            h.specialize(0, &Rational::zero()),
            g.initial_form(&w("(1,1)")).unwrap()
        );

        assert!(g.weighted_homogenize(&w("(1,0)")).is_err());
        assert!(g.weighted_homogenize(&w("(1/2,1)")).is_err());
    }

    #[test]
    fn orthant_flip_examples() {
        let r = ring(&["x", "y"]);
        let f = r.parse("x+y").unwrap();
        assert_eq!(f.orthant_flip(&"(1,1)".parse().unwrap()).unwrap(), f);
        assert_eq!(
            f.orthant_flip(&"(-1,1)".parse().unwrap()).unwrap(),
            r.parse("-x+y").unwrap()
        );
        let g = r.parse("x^2*y").unwrap();
        assert_eq!(
            g.orthant_flip(&"(-1,-1)".parse().unwrap()).unwrap(),
            r.parse("-x^2*y").unwrap()
        );
        assert!(f.orthant_flip(&"(1)".parse().unwrap()).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["x", "y"]);
        let x = r.var(0);
        assert!((&x + &(-&x)).is_zero());
        let p = r.parse("x-y").unwrap() * r.parse("x+y").unwrap();
        assert_eq!(p, r.parse("x^2-y^2").unwrap());
        let r1 = ring(&["x"]);
        assert_eq!(r1.parse("x^3").unwrap().derivative(0), r1.parse("3*x^2").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let a = r.parse("x^2-y^2").unwrap();
        let b = r.parse("x-y").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), r.parse("x+y").unwrap());
        assert!(r.parse("x^2+y").unwrap().div_exact(&b).is_none());
    }

    #[test]
    #[should_panic(expected = "different variable lists")]
    fn ring_mismatch_panics_in_operators() {
        let a = ring(&["x"]).var(0);
        let b = ring(&["y"]).var(0);
        let _ = &a + &b;
    }

    #[test]
    fn display_is_canonical() {
        let r = ring(&["x", "y"]);
        let f = r.parse("-1 + x^2*y^2 + x^4").unwrap();
        assert_eq!(f.to_string(), "x^4 + x^2*y^2 - 1");
        let g = r.parse("3/2*x - 2/3").unwrap();
        assert_eq!(g.to_string(), "3/2*x - 2/3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(r.parse("-x").unwrap().to_string(), "-x");
    }
}
