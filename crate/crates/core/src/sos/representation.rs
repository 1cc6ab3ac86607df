use serde::Serialize;

use super::SosError;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, Rational, Ring, WeightVector};

/// `Σ_i g_i Σ_j y_ij² + h` with `g_0 = 1`: `squares[0]` belongs to `σ_0`
/// and `squares[i]` to `generators[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QMRepresentation {
    #[serde(serialize_with = "crate::ser::polynomials")]
    pub generators: Vec<Polynomial>,
    #[serde(serialize_with = "squares")]
    pub squares: Vec<Vec<Polynomial>>,
    #[serde(serialize_with = "crate::ser::polynomial")]
    pub h: Polynomial,
}

fn squares<S: serde::Serializer>(sq: &[Vec<Polynomial>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(sq.iter().map(|l| l.iter().map(|p| p.to_string()).collect::<Vec<_>>()))
}

impl QMRepresentation {
    pub fn new(
        generators: Vec<Polynomial>,
        squares: Vec<Vec<Polynomial>>,
        h: Polynomial,
    ) -> Result<Self, SosError> {
        if squares.len() != generators.len() + 1 {
            return Err(SosError::ShapeMismatch(squares.len(), generators.len()));
        }
        for p in generators.iter().chain(squares.iter().flatten()) {
            p.same_ring(&h)?;
        }
        Ok(QMRepresentation { generators, squares, h })
    }

    /// Only `σ_0` and `h`.
    pub fn sos(squares: Vec<Polynomial>, h: Polynomial) -> Self {
        QMRepresentation {
            generators: Vec::new(),
            squares: vec![squares],
            h,
        }
    }

    pub fn ring(&self) -> &Ring {
        self.h.ring()
    }

    /// `g_i`, with `g_0 = 1`.
    pub fn generator(&self, i: usize) -> Polynomial {
        if i == 0 {
            Polynomial::one(self.ring())
        } else {
            self.generators[i - 1].clone()
        }
    }

    pub fn sigma(&self, i: usize) -> Polynomial {
        self.squares[i]
            .iter()
            .fold(Polynomial::zero(self.ring()), |acc, y| &acc + &(y * y))
    }

    /// The represented polynomial.
    pub fn evaluate(&self) -> Polynomial {
        (0..self.squares.len()).fold(self.h.clone(), |acc, i| {
            &acc + &(&self.generator(i) * &self.sigma(i))
        })
    }

    /// Indices `(i, j)` of nonzero squares.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.squares
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().enumerate().filter(|(_, y)| !y.is_zero()).map(move |(j, _)| (i, j)))
    }

    /// `deg_w(g_i y_ij²)`.
    pub fn term_w_degree(&self, i: usize, j: usize, w: &WeightVector) -> Result<Rational, SosError> {
        let y = &self.squares[i][j];
        Ok(self.generator(i).w_degree(w)? + y.w_degree(w)? * Rational::from_integer(2.into()))
    }

    /// `max_i deg_w(σ_i g_i)` over nonzero squares, `None` if there are none.
    pub fn max_w_degree(&self, w: &WeightVector) -> Result<Option<Rational>, SosError> {
        let mut best: Option<Rational> = None;
        for (i, j) in self.terms() {
            let d = self.term_w_degree(i, j, w)?;
            if best.as_ref().is_none_or(|b| d > *b) {
                best = Some(d);
            }
        }
        Ok(best)
    }

    /// `max_i deg(σ_i g_i)` in the standard grading.
    pub fn max_total_degree(&self) -> Option<u64> {
        self.terms()
            .map(|(i, j)| {
                self.generator(i).total_degree().unwrap_or(0) + 2 * self.squares[i][j].total_degree().unwrap_or(0)
            })
            .max()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub passed: bool,
    pub identity_holds: bool,
    pub h_in_ideal: bool,
    /// `f − Σ g_i σ_i − h`.
    #[serde(serialize_with = "crate::ser::polynomial")]
    pub discrepancy: Polynomial,
}

/// Check `f = Σ g_i σ_i + h` exactly and `h ∈ I` by normal form.
pub fn verify_representation(f: &Polynomial, rep: &QMRepresentation, ideal: &Ideal) -> Result<Verification, SosError> {
    f.same_ring(&rep.h)?;
    let discrepancy = f - &rep.evaluate();
    let identity_holds = discrepancy.is_zero();
    let h_in_ideal = rep.h.is_zero() || ideal.contains(&rep.h)?;
    Ok(Verification {
        passed: identity_holds && h_in_ideal,
        identity_holds,
        h_in_ideal,
        discrepancy,
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verification_examples() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let i = Ideal::principal(p("x-y")).unwrap();
        let one = QMRepresentation::sos(vec![p("1")], p("0"));
        assert!(verify_representation(&p("1"), &one, &i).unwrap().passed);

        let rep = QMRepresentation::sos(vec![p("x-y+1")], p("-(x-y)^2"));
        let v = verify_representation(&p("2*x-2*y+1"), &rep, &i).unwrap();
        assert!(v.passed);

        let j = Ideal::principal(p("x*y")).unwrap();
        let bad = QMRepresentation::sos(vec![], p("0"));
        let v = verify_representation(&p("x"), &bad, &j).unwrap();
        assert!(!v.passed);
        assert_eq!(v.discrepancy, p("x"));

        let not_in = QMRepresentation::sos(vec![], p("x"));
        let v = verify_representation(&p("x"), &not_in, &j).unwrap();
        assert!(v.identity_holds && !v.h_in_ideal);
    }

    #[test]
    fn shape_and_degrees() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        assert!(QMRepresentation::new(vec![p("x")], vec![vec![]], p("0")).is_err());
        let rep = QMRepresentation::new(vec![p("x")], vec![vec![p("y")], vec![p("x+1"), p("0")]], p("0")).unwrap();
        let w = WeightVector::from_ints(&[2, 1]);
        assert_eq!(rep.max_w_degree(&w).unwrap(), Some(Rational::from_integer(6.into())));
        assert_eq!(rep.max_total_degree(), Some(3));
        assert_eq!(rep.evaluate(), p("y^2 + x^3 + 2*x^2 + x"));
    }
}
