use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::{GroebnerError, MonomialOrder};
use crate::poly::{ExponentVector, Polynomial, Rational, Ring};

/// Terms sorted ascending in a monomial order, so the leading term is last.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    pub(crate) terms: Vec<(ExponentVector, Rational)>,
}

impl Sorted {
    pub(crate) fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Self {
        let mut terms: Vec<(ExponentVector, Rational)> =
            p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> &(ExponentVector, Rational) {
        self.terms.last().expect("nonzero polynomial")
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.last() {
            let inv = c.recip();
            for t in self.terms.iter_mut() {
                t.1 *= &inv;
            }
        }
        self
    }

    /// `self - c·x^m·g`.
    fn sub_scaled(&self, c: &Rational, m: &ExponentVector, g: &Sorted, ord: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| (g.terms[k].0.mul(m), -(c * &g.terms[k].1));
        let mut next_g = if g.terms.is_empty() { None } else { Some(shifted(0)) };
        while i < self.terms.len() || next_g.is_some() {
            match (&self.terms.get(i), &next_g) {
                (Some(a), Some(b)) => match ord.cmp(&a.0, &b.0) {
                    Ordering::Less => {
                        out.push((*a).clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push(next_g.take().unwrap());
                        j += 1;
                        next_g = (j < g.terms.len()).then(|| shifted(j));
                    }
                    Ordering::Equal => {
                        let s = &a.1 + &b.1;
                        if !s.is_zero() {
                            out.push((a.0.clone(), s));
                        }
                        i += 1;
                        j += 1;
                        next_g = (j < g.terms.len()).then(|| shifted(j));
                    }
                },
                (Some(a), None) => {
                    out.push((*a).clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next_g.take().unwrap());
                    j += 1;
                    next_g = (j < g.terms.len()).then(|| shifted(j));
                }
                (None, None) => unreachable!(),
            }
        }
        Sorted { terms: out }
    }
}

/// Full reduction of `f` modulo `basis`.
pub(crate) fn reduce(f: &Sorted, basis: &[Sorted], ord: &MonomialOrder) -> Sorted {
    let mut p = f.clone();
    let mut rem: Vec<(ExponentVector, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        if let Some(g) = basis.iter().find(|g| g.lead().0.divides(lm)) {
            let m = g.lead().0.quotient_of(lm);
            let c = lc / &g.lead().1;
            p = p.sub_scaled(&c, &m, g, ord);
        } else {
            rem.push(p.terms.pop().unwrap());
        }
    }
    rem.reverse();
    Sorted { terms: rem }
}

/// Multivariate division of `f` by `divisors`: returns quotients `q_k` and
/// remainder `r` with `f = Σ q_k d_k + r` and no term of `r` divisible by a
/// leading monomial. Divisors are tried in the given order.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    ord: &MonomialOrder,
) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring().clone();
    let ds: Vec<Sorted> = divisors.iter().map(|d| Sorted::from_poly(d, ord)).collect();
    let mut quot: Vec<Vec<(ExponentVector, Rational)>> = vec![Vec::new(); ds.len()];
    let mut p = Sorted::from_poly(f, ord);
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        match ds.iter().position(|g| !g.is_zero() && g.lead().0.divides(lm)) {
            Some(k) => {
                let g = &ds[k];
                let m = g.lead().0.quotient_of(lm);
                let c = lc / &g.lead().1;
                p = p.sub_scaled(&c, &m, g, ord);
                quot[k].push((m, c));
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    (
        quot.into_iter()
            .map(|q| Polynomial::from_terms(&ring, q))
            .collect(),
        Polynomial::from_terms(&ring, rem),
    )
}

fn spoly(a: &Sorted, b: &Sorted, ord: &MonomialOrder) -> Sorted {
    let (la, ca) = a.lead();
    let (lb, cb) = b.lead();
    let l = la.lcm(lb);
    let ma = la.quotient_of(&l);
    let mb = lb.quotient_of(&l);
    let mut sa = Sorted {
        terms: a.terms.iter().map(|(e, c)| (e.mul(&ma), c / ca)).collect(),
    };
    sa = sa.sub_scaled(&cb.recip(), &mb, b, ord);
    sa
}

/// Reduced Gröbner basis for a monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.sorted.iter().map(|s| s.lead().0.clone()).collect()
    }

    /// Remainder of multivariate division; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let r = reduce(&Sorted::from_poly(f, &self.order), &self.sorted, &self.order);
        r.to_poly(&self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

pub fn is_monomial_order_valid(order: &MonomialOrder) -> Result<(), GroebnerError> {
    if !order.is_well_order() {
        return Err(GroebnerError::NeedsHomogenization(order.weight().to_string()));
    }
    Ok(())
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria. The result is reduced, monic and sorted by
/// leading monomial.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let first = gens.first().ok_or(GroebnerError::ZeroIdeal)?;
    let ring = first.ring().clone();
    for g in gens {
        g.same_ring(first)?;
    }
    if order.dim() != ring.nvars() {
        return Err(GroebnerError::DimensionMismatch {
            expected: ring.nvars(),
            got: order.dim(),
        });
    }
    is_monomial_order_valid(order)?;

    let mut basis: Vec<Sorted> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let s = reduce(&Sorted::from_poly(g, order), &basis, order);
        if !s.is_zero() {
            basis.push(s.monic());
        }
    }
    if basis.is_empty() {
        return Err(GroebnerError::ZeroIdeal);
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let is_pending = |pending: &[(usize, usize)], a: usize, b: usize| {
        let key = if a < b { (a, b) } else { (b, a) };
        pending.contains(&key)
    };

    while !pending.is_empty() {
        if basis.iter().any(|g| g.lead().0.is_constant()) {
            break;
        }
        let (pos, _) = pending
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| {
                let lp = basis[p.0].lead().0.lcm(&basis[p.1].lead().0);
                let lq = basis[q.0].lead().0.lcm(&basis[q.1].lead().0);
                order.cmp(&lp, &lq).then_with(|| p.cmp(q))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(pos);
        let (li, lj) = (&basis[i].lead().0, &basis[j].lead().0);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().0.divides(&l)
                && !is_pending(&pending, i, k)
                && !is_pending(&pending, j, k)
        });
        if chain {
            continue;
        }
        let r = reduce(&spoly(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            basis.push(r.monic());
            let n = basis.len() - 1;
            for k in 0..n {
                pending.push((k, n));
            }
        }
    }

    if let Some(unit) = basis.iter().find(|g| g.lead().0.is_constant()) {
        let one = Sorted {
            terms: vec![(unit.lead().0.clone(), Rational::one())],
        };
        return Ok(finish(&ring, vec![one], order));
    }

    // Minimalize, then interreduce.
    let mut minimal: Vec<Sorted> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = &g.lead().0;
        let redundant = basis.iter().enumerate().any(|(m, h)| {
            m != k && h.lead().0.divides(lg) && (h.lead().0 != *lg || m < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(&minimal[k], &others, order).monic());
    }
    reduced.sort_by(|a, b| order.cmp(&a.lead().0, &b.lead().0));
    Ok(finish(&ring, reduced, order))
}

fn finish(ring: &Ring, sorted: Vec<Sorted>, order: &MonomialOrder) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        elements: sorted.iter().map(|s| s.to_poly(ring)).collect(),
        order: order.clone(),
        reduced: true,
        sorted,
    }
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner_basis(elements: &[Polynomial], order: &MonomialOrder) -> bool {
    let sorted: Vec<Sorted> = elements
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_poly(p, order))
        .collect();
    for j in 0..sorted.len() {
        for i in 0..j {
            if !reduce(&spoly(&sorted[i], &sorted[j], order), &sorted, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::TieBreak;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names).unwrap()
    }

    #[test]
    fn principal_monomial() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&[r.parse("x").unwrap()], &MonomialOrder::grlex(2)).unwrap();
        assert_eq!(g.elements(), &[r.parse("x").unwrap()]);
    }

    #[test]
    fn linear_system_lex() {
        let r = ring(&["x", "y"]);
        let gens = [r.parse("x-y").unwrap(), r.parse("y-1").unwrap()];
        let g = buchberger(&gens, &MonomialOrder::lex(2)).unwrap();
        let mut got: Vec<String> = g.elements().iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x - 1", "y - 1"]);
    }

    #[test]
    fn principal_is_its_own_basis() {
        let r = ring(&["x", "y", "z"]);
        let f = r.parse("(x-y-z)^4+(x-y-1)^2").unwrap();
        for tb in [TieBreak::Grlex, TieBreak::Lex, TieBreak::Grevlex] {
            let g = buchberger(std::slice::from_ref(&f), &MonomialOrder::tiebreak_only(3, tb)).unwrap();
            assert_eq!(g.len(), 1);
            assert!(g.elements()[0].is_proportional(&f));
        }
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&[r.parse("x").unwrap()], &MonomialOrder::grlex(2)).unwrap();
        assert!(g.normal_form(&r.parse("x^2").unwrap()).is_zero());
        let g = buchberger(&[r.parse("x-y").unwrap()], &MonomialOrder::lex(2)).unwrap();
        assert_eq!(g.normal_form(&r.parse("x+y").unwrap()), r.parse("2*y").unwrap());
        let g = buchberger(&[r.parse("x*y-1").unwrap(), r.parse("x^2").unwrap()], &MonomialOrder::grlex(2))
            .unwrap();
        assert!(g.is_unit_ideal());
        let g = buchberger(&[r.parse("x*y").unwrap()], &MonomialOrder::grlex(2)).unwrap();
        assert_eq!(g.normal_form(&Polynomial::one(&r)), Polynomial::one(&r));
    }

    #[test]
    fn negative_weight_is_rejected() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::new("(0,-1)".parse().unwrap(), TieBreak::Grlex).unwrap();
        assert!(matches!(
            buchberger(&[r.parse("x+y").unwrap()], &o),
            Err(GroebnerError::NeedsHomogenization(_))
        ));
    }

    #[test]
    fn twisted_cubic_is_groebner() {
        let r = ring(&["x", "y", "z"]);
        let gens = [r.parse("x^2-y").unwrap(), r.parse("x^3-z").unwrap()];
        for tb in [TieBreak::Grlex, TieBreak::Lex, TieBreak::Grevlex] {
            let o = MonomialOrder::tiebreak_only(3, tb);
            let g = buchberger(&gens, &o).unwrap();
            assert!(is_groebner_basis(g.elements(), &o));
            for f in &gens {
                assert!(g.contains(f));
            }
        }
    }

    #[test]
    fn division_with_quotients() {
        let r = ring(&["x", "y"]);
        let f = r.parse("x^2*y + x*y^2 + y^2").unwrap();
        let ds = [r.parse("x*y-1").unwrap(), r.parse("y^2-1").unwrap()];
        let o = MonomialOrder::lex(2);
        let (q, rem) = divide(&f, &ds, &o);
        let back = &(&(&q[0] * &ds[0]) + &(&q[1] * &ds[1])) + &rem;
        assert_eq!(back, f);
        assert_eq!(rem, r.parse("x+y+1").unwrap());
    }
}
