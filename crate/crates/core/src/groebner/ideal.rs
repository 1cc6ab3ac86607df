use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use super::{buchberger, GroebnerBasis, GroebnerError, MonomialOrder, TieBreak};
use crate::poly::{ExponentVector, Polynomial, Rational, Ring, WeightVector};

type CacheKey = (Vec<i64>, TieBreak);

/// Polynomial ideal given by generators, with Gröbner bases cached per order.
///
/// Concurrent callers may compute the same basis twice; both results are
/// equal because reduced bases are unique.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<CacheKey, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().map(|c| c.clone()).unwrap_or_default();
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(cache),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped; an ideal with none left is rejected.
    pub fn new(generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let first = generators.first().ok_or(GroebnerError::ZeroIdeal)?;
        let ring = first.ring().clone();
        for g in &generators {
            g.same_ring(first)?;
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(GroebnerError::ZeroIdeal);
        }
        Ok(Ideal {
            ring,
            generators,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn principal(f: Polynomial) -> Result<Self, GroebnerError> {
        Self::new(vec![f])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        let key = order.key();
        if let Some(gb) = self.cache.read().ok().and_then(|c| c.get(&key).cloned()) {
            return Ok(gb);
        }
        let gb = Arc::new(buchberger(&self.generators, order)?);
        debug_assert!(self.generators.iter().all(|g| gb.contains(g)));
        if !self.generators.iter().all(|g| gb.contains(g)) {
            // A basis that fails to reduce its own generators is never cached.
            return Ok(gb);
        }
        if let Ok(mut c) = self.cache.write() {
            c.entry(key).or_insert_with(|| gb.clone());
        }
        Ok(gb)
    }

    pub fn grlex_basis(&self) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        self.groebner_basis(&MonomialOrder::grlex(self.nvars()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        f.same_ring(&self.generators[0])?;
        Ok(self.grlex_basis()?.contains(f))
    }

    pub fn is_unit(&self) -> Result<bool, GroebnerError> {
        Ok(self.grlex_basis()?.is_unit_ideal())
    }

    /// Principal iff the reduced basis has a single element.
    pub fn is_principal(&self) -> Result<bool, GroebnerError> {
        if self.generators.len() == 1 {
            return Ok(true);
        }
        Ok(self.grlex_basis()?.len() == 1)
    }

    pub fn is_monomial_ideal(&self) -> Result<bool, GroebnerError> {
        Ok(self.grlex_basis()?.elements().iter().all(|g| g.is_monomial()))
    }

    /// Reduced generators of `In_w(I)` under the graded-lex tie-break.
    pub fn initial_ideal(&self, w: &WeightVector) -> Result<Vec<Polynomial>, GroebnerError> {
        self.initial_ideal_with(w, TieBreak::Grlex)
    }

    /// `In_w(I)`, reported as the reduced basis for `tiebreak`. Nonnegative
    /// weights use a direct `w`-Gröbner basis; others go through
    /// homogenization.
    pub fn initial_ideal_with(&self, w: &WeightVector, tiebreak: TieBreak) -> Result<Vec<Polynomial>, GroebnerError> {
        self.check_weight(w)?;
        if w.is_all_nonnegative() {
            let gb = self.groebner_basis(&MonomialOrder::new(w.clone(), tiebreak)?)?;
            let forms = gb
                .elements()
                .iter()
                .map(|g| g.initial_form(w))
                .collect::<Result<Vec<_>, _>>()?;
            canonicalize(&forms, tiebreak)
        } else {
            self.initial_ideal_homogenized(w, tiebreak)
        }
    }

    /// `In_w(I)` via `In_{(0,w)+b·1}` of the homogenized ideal with
    /// `b = max(0, −min w)`, then `x₀ = 1`. Valid for every `w`.
    pub fn initial_ideal_homogenized(&self, w: &WeightVector, tiebreak: TieBreak) -> Result<Vec<Polynomial>, GroebnerError> {
        self.check_weight(w)?;
        let hring = self.ring.with_front_var();
        let gb = self.grlex_basis()?;
        let hgens = gb
            .elements()
            .iter()
            .map(|g| g.homogenize_in(&hring))
            .collect::<Result<Vec<_>, _>>()?;
        let b = w
            .min_entry()
            .map(|m| if m < &Rational::zero() { -m.clone() } else { Rational::zero() })
            .unwrap_or_else(Rational::zero);
        let mut lifted = Vec::with_capacity(w.dim() + 1);
        lifted.push(b.clone());
        lifted.extend(w.entries().iter().map(|e| e + &b));
        let v = WeightVector::new(lifted);
        let hgb = buchberger(&hgens, &MonomialOrder::new(v.clone(), tiebreak)?)?;
        let forms = hgb
            .elements()
            .iter()
            .map(|g| g.initial_form(&v).map(|f| f.dehomogenize().with_ring(&self.ring)))
            .collect::<Result<Result<Vec<_>, _>, _>>()??;
        canonicalize(&forms, tiebreak)
    }

    /// `gens ⊆ I` and their `w`-initial forms generate `In_w(I)`.
    pub fn is_w_groebner_basis(&self, gens: &[Polynomial], w: &WeightVector) -> Result<bool, GroebnerError> {
        for g in gens {
            if !self.contains(g)? {
                return Err(GroebnerError::NotInIdeal(g.to_string()));
            }
        }
        let forms = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.initial_form(w))
            .collect::<Result<Vec<_>, _>>()?;
        if forms.is_empty() {
            return Ok(false);
        }
        let target = self.initial_ideal(w)?;
        let ours = buchberger(&forms, &MonomialOrder::grlex(self.nvars()))?;
        Ok(target.iter().all(|t| ours.contains(t)))
    }

    /// Whether `I` contains a monomial, decided by saturating with respect
    /// to the product of all variables: `I : (x₁⋯xₙ)^∞ = ⟨1⟩`.
    pub fn contains_monomial(&self) -> Result<bool, GroebnerError> {
        let n = self.nvars();
        let sring = self.ring.with_front_var();
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.embed_with_var(&sring, 0))
            .collect();
        let e = vec![1u32; n + 1];
        let tx = Polynomial::monomial(&sring, ExponentVector::new(e), Rational::one());
        gens.push(&tx - &Polynomial::one(&sring));
        Ok(buchberger(&gens, &MonomialOrder::grlex(n + 1))?.is_unit_ideal())
    }

    fn check_weight(&self, w: &WeightVector) -> Result<(), GroebnerError> {
        if w.dim() != self.nvars() {
            return Err(GroebnerError::DimensionMismatch {
                expected: self.nvars(),
                got: w.dim(),
            });
        }
        Ok(())
    }
}

fn canonicalize(forms: &[Polynomial], tiebreak: TieBreak) -> Result<Vec<Polynomial>, GroebnerError> {
    let n = forms.first().map(|f| f.nvars()).ok_or(GroebnerError::ZeroIdeal)?;
    let gb = buchberger(forms, &MonomialOrder::tiebreak_only(n, tiebreak))?;
    Ok(gb.elements().to_vec())
}

/// Whether the monomial ideal generated by `gens` is squarefree: every
/// minimal generator has all exponents at most one.
pub fn monomial_squarefree_test(gens: &[Polynomial]) -> Result<bool, GroebnerError> {
    let mut exps: Vec<&ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_monomial() {
            return Err(GroebnerError::NotMonomial(g.to_string()));
        }
        exps.push(g.support().next().expect("monomial has one term"));
    }
    let minimal = exps.iter().enumerate().filter(|(i, e)| {
        !exps
            .iter()
            .enumerate()
            .any(|(j, d)| d.divides(e) && (*d != **e || j < *i))
    });
    Ok(minimal.into_iter().all(|(_, e)| e.is_squarefree()))
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
    fn circle_initial_ideal_negative_weight() {
        let r = ring(&["x", "y"]);
        let i = Ideal::principal(r.parse("(x-2)^2+(y-2)^2-1").unwrap()).unwrap();
        let got = i.initial_ideal(&w("(0,-1)")).unwrap();
        assert_eq!(got, vec![r.parse("(x-2)^2+3").unwrap()]);
    }

    #[test]
    fn weighted_leading_block() {
        let r = ring(&["x", "y"]);
        let i = Ideal::principal(r.parse("x^5-x^4*y^2+x^3*y^4-x^2*y^6+1").unwrap()).unwrap();
        let got = i.initial_ideal(&w("(2,1)")).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got[0].is_proportional(&r.parse("x^5-x^4*y^2+x^3*y^4-x^2*y^6").unwrap()));
    }

    #[test]
    fn zero_weight_is_identity() {
        let r = ring(&["x", "y"]);
        let i = Ideal::new(vec![r.parse("x-y").unwrap(), r.parse("y^2-1").unwrap()]).unwrap();
        let got = i.initial_ideal(&WeightVector::zero(2)).unwrap();
        assert_eq!(got, i.grlex_basis().unwrap().elements());
    }

    #[test]
    fn routes_agree_on_nonnegative_weights() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::new(vec![r.parse("x^2-y").unwrap(), r.parse("x*y-z+1").unwrap()]).unwrap();
        for s in ["(1,1,1)", "(2,1,0)", "(0,0,1)", "(3,1,2)"] {
            let a = i.initial_ideal_with(&w(s), TieBreak::Grlex).unwrap();
            let b = i.initial_ideal_homogenized(&w(s), TieBreak::Grlex).unwrap();
            assert_eq!(a, b, "weight {s}");
        }
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        let i = Ideal::principal(r.parse("x-y").unwrap()).unwrap();
        assert!(i.contains(&r.parse("x-y").unwrap()).unwrap());
        assert!(i.contains(&r.parse("-(x-y)^2").unwrap()).unwrap());
        let j = Ideal::principal(r.parse("x*y").unwrap()).unwrap();
        assert!(!j.contains(&r.parse("x").unwrap()).unwrap());
    }

    #[test]
    fn squarefree_monomials() {
        let r = ring(&["x", "y", "z"]);
        let p = |s: &str| r.parse(s).unwrap();
        assert!(monomial_squarefree_test(&[p("x*y"), p("y*z")]).unwrap());
        assert!(!monomial_squarefree_test(&[p("x^2")]).unwrap());
        assert!(monomial_squarefree_test(&[p("x^2"), p("x")]).unwrap());
        let f = Ideal::principal(p("x^4-x^3+y^2+z^2")).unwrap();
        let init = f.initial_ideal(&w("(1,1,1)")).unwrap();
        assert_eq!(init, vec![p("x^4")]);
        assert!(!monomial_squarefree_test(&init).unwrap());
        assert!(matches!(
            monomial_squarefree_test(&[p("x+y")]),
            Err(GroebnerError::NotMonomial(_))
        ));
    }

    #[test]
    fn w_groebner_checks() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        let i = Ideal::new(vec![p("x"), p("y")]).unwrap();
        assert!(i.is_w_groebner_basis(&[p("x+y"), p("x")], &w("(1,2)")).unwrap());
        assert!(!i.is_w_groebner_basis(&[p("x+y")], &w("(1,2)")).unwrap_or(false));
        assert!(matches!(
            i.is_w_groebner_basis(&[p("x+1")], &w("(1,2)")),
            Err(GroebnerError::NotInIdeal(_))
        ));
        let f = Ideal::principal(p("x^2+y^2-1")).unwrap();
        assert!(f.is_w_groebner_basis(&[p("x^2+y^2-1")], &w("(-1,3)")).unwrap());
    }

    #[test]
    fn monomial_containment() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        assert!(Ideal::principal(p("x^2")).unwrap().contains_monomial().unwrap());
        assert!(!Ideal::principal(p("x+y")).unwrap().contains_monomial().unwrap());
        assert!(Ideal::new(vec![p("x+y"), p("x-y")]).unwrap().contains_monomial().unwrap());
    }

    #[test]
    fn cache_shares_proportional_weights() {
        let r = ring(&["x", "y"]);
        let i = Ideal::new(vec![r.parse("x^2-y").unwrap(), r.parse("y^2-x").unwrap()]).unwrap();
        let a = i.groebner_basis(&MonomialOrder::new(w("(1,2)"), TieBreak::Grlex).unwrap()).unwrap();
        let b = i.groebner_basis(&MonomialOrder::new(w("(2,4)"), TieBreak::Grlex).unwrap()).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
