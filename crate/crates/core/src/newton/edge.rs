use num_integer::Integer;
use serde::Serialize;

use super::{newton_polytope, NewtonError};
use crate::poly::{ExponentVector, Polynomial, Rational};
use crate::realroots::UnivariatePolynomial;

/// Lattice data of an edge `[b, a]`: `In(f) = x^b · Σ γ_k (x^v)^k` with
/// `v = (a − b)/d` and `d` the lattice length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeData {
    pub a: ExponentVector,
    pub b: ExponentVector,
    pub v: Vec<i64>,
    pub d: u32,
    #[serde(serialize_with = "crate::ser::rationals")]
    pub gamma: Vec<Rational>,
    /// Some coordinate has both endpoint exponents at least two, so
    /// `x_i²` divides the form.
    pub squared_variable: Option<usize>,
    /// Some coordinate has `min(a_i, b_i) = 1`; the monomial factor
    /// `x^b` then carries a simple factor `x_i`.
    pub flagged: bool,
}

impl EdgeData {
    /// Read the edge coefficients off `f`. The endpoints are reordered so
    /// that `b` is lexicographically smaller.
    pub(crate) fn from_endpoints(f: &Polynomial, p: &ExponentVector, q: &ExponentVector) -> Self {
        let (a, b) = if p.lex_cmp(q).is_gt() {
            (p.clone(), q.clone())
        } else {
            (q.clone(), p.clone())
        };
        let diff: Vec<i64> = a
            .entries()
            .iter()
            .zip(b.entries())
            .map(|(&x, &y)| x as i64 - y as i64)
            .collect();
        let d = diff.iter().fold(0i64, |g, x| g.gcd(x)).max(1);
        let v: Vec<i64> = diff.iter().map(|x| x / d).collect();
        let gamma = (0..=d)
            .map(|k| {
                let e: Vec<u32> = b
                    .entries()
                    .iter()
                    .zip(&v)
                    .map(|(&bi, &vi)| (bi as i64 + k * vi) as u32)
                    .collect();
                f.coeff(&ExponentVector::new(e))
            })
            .collect();
        let squared_variable = a
            .entries()
            .iter()
            .zip(b.entries())
            .position(|(&x, &y)| x >= 2 && y >= 2);
        let flagged = a
            .entries()
            .iter()
            .zip(b.entries())
            .any(|(&x, &y)| x.min(y) == 1);
        EdgeData {
            a,
            b,
            v,
            d: d as u32,
            gamma,
            squared_variable,
            flagged,
        }
    }

    /// `u(t) = Σ γ_k t^k`.
    pub fn univariate(&self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.gamma.clone())
    }

    pub fn lattice_points(&self) -> u32 {
        self.d + 1
    }

    /// `x^b · u(x^v)` as a polynomial in the ring of `like`.
    pub fn reconstruct(&self, like: &Polynomial) -> Polynomial {
        let terms = self.gamma.iter().enumerate().map(|(k, g)| {
            let e: Vec<u32> = self
                .b
                .entries()
                .iter()
                .zip(&self.v)
                .map(|(&bi, &vi)| (bi as i64 + k as i64 * vi) as u32)
                .collect();
            (ExponentVector::new(e), g.clone())
        });
        Polynomial::from_terms(like.ring(), terms)
    }

    /// Whether `x^v` takes negative values on the torus: some `v_i` is odd.
    pub fn direction_has_odd_entry(&self) -> bool {
        self.v.iter().any(|x| x % 2 != 0)
    }
}

/// Edge data for the edge of `NP(f)` joining `p` and `q`.
pub fn edge_univariate(f: &Polynomial, p: &ExponentVector, q: &ExponentVector) -> Result<EdgeData, NewtonError> {
    let np = newton_polytope(f)?;
    let ip = np.vertices().iter().position(|v| v == p);
    let iq = np.vertices().iter().position(|v| v == q);
    let not_edge = || NewtonError::NotAnEdge(p.entries().to_vec(), q.entries().to_vec());
    let (Some(ip), Some(iq)) = (ip, iq) else {
        return Err(not_edge());
    };
    let mut want = vec![ip, iq];
    want.sort_unstable();
    if !np.faces().iter().any(|f| f.dim == 1 && f.vertices == want) {
        return Err(not_edge());
    }
    Ok(EdgeData::from_endpoints(f, p, q))
}
