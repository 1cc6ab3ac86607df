use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{buchberger, GroebnerError, MonomialOrder};
use crate::poly::{Polynomial, Rational, WeightVector};
use crate::realroots::UnivariatePolynomial;

fn single_var(f: &Polynomial, g: &Polynomial) -> Option<usize> {
    let mut vars = f.variables();
    vars.extend(g.variables());
    vars.sort_unstable();
    vars.dedup();
    match vars.as_slice() {
        [v] => Some(*v),
        _ => None,
    }
}

/// Least common multiple, monic in graded-lex. Computed as the generator of
/// `⟨t·f, (1−t)·g⟩ ∩ ℚ[x]` under an order eliminating `t`.
pub fn lcm(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GroebnerError> {
    f.same_ring(g)?;
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()));
    }
    if f.is_constant() {
        return Ok(g.monic());
    }
    if g.is_constant() {
        return Ok(f.monic());
    }
    if let Some(v) = single_var(f, g) {
        let uf = UnivariatePolynomial::from_polynomial(f, v).expect("univariate");
        let ug = UnivariatePolynomial::from_polynomial(g, v).expect("univariate");
        let l = (&uf * &ug).div_exact(&uf.gcd(&ug)).expect("gcd divides product");
        return Ok(l.to_polynomial(f.ring(), v).monic());
    }
    let n = f.nvars();
    let ring = f.ring().with_front_var();
    let t = ring.var(0);
    let one = Polynomial::one(&ring);
    let fe = f.embed_with_var(&ring, 0);
    let ge = g.embed_with_var(&ring, 0);
    let gens = [&t * &fe, &(&one - &t) * &ge];
    let mut w = vec![0i64; n + 1];
    w[0] = 1;
    let order = MonomialOrder::new(WeightVector::from_ints(&w), super::TieBreak::Grlex)?;
    let gb = buchberger(&gens, &order)?;
    let l = gb
        .elements()
        .iter()
        .filter(|p| p.support().all(|e| e.entries()[0] == 0))
        .min_by(|a, b| a.total_degree().cmp(&b.total_degree()))
        .expect("intersection of principal ideals is nonzero");
    Ok(l.dehomogenize_front().with_ring(f.ring())?.monic())
}

/// Greatest common divisor, monic in graded-lex (`1` for coprime inputs).
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GroebnerError> {
    f.same_ring(g)?;
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(f.ring()));
    }
    if let Some(v) = single_var(f, g) {
        let uf = UnivariatePolynomial::from_polynomial(f, v).expect("univariate");
        let ug = UnivariatePolynomial::from_polynomial(g, v).expect("univariate");
        return Ok(uf.gcd(&ug).to_polynomial(f.ring(), v).monic());
    }
    let l = lcm(f, g)?;
    let q = (f * g).div_exact(&l).expect("lcm divides the product");
    Ok(q.monic())
}

/// A nonconstant common factor of `f` and all its partial derivatives, which
/// exists iff `f` has a repeated factor. `None` when `f` is squarefree.
pub fn repeated_factor(f: &Polynomial) -> Result<Option<Polynomial>, GroebnerError> {
    if f.is_zero() {
        return Err(crate::poly::PolyError::ZeroPolynomial.into());
    }
    if f.is_constant() {
        return Ok(None);
    }
    if squarefree_on_random_line(f) {
        return Ok(None);
    }
    let mut h = f.clone();
    for i in f.variables() {
        h = gcd(&h, &f.derivative(i))?;
        if h.is_constant() {
            return Ok(None);
        }
    }
    Ok(Some(h))
}

pub fn is_squarefree(f: &Polynomial) -> Result<bool, GroebnerError> {
    Ok(repeated_factor(f)?.is_none())
}

/// Sufficient test: if `f` restricted to a line keeps its full degree and
/// the restriction is squarefree, then so is `f` (a square factor `g²` would
/// restrict to the square of a nonconstant polynomial).
fn squarefree_on_random_line(f: &Polynomial) -> bool {
    let deg = match f.total_degree() {
        Some(d) => d as usize,
        None => return false,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ f.num_terms() as u64);
    for _ in 0..4 {
        let p: Vec<Rational> = (0..f.nvars())
            .map(|_| Rational::from_integer(rng.gen_range(-50i64..=50).into()))
            .collect();
        let d: Vec<Rational> = (0..f.nvars())
            .map(|_| Rational::from_integer(rng.gen_range(-50i64..=50).into()))
            .collect();
        let u = UnivariatePolynomial::restrict_to_line(f, &p, &d);
        if u.degree() != Some(deg) {
            continue;
        }
        if u.gcd(&u.derivative()).is_constant() {
            return true;
        }
    }
    false
}

impl Polynomial {
    /// Drop a front variable known not to occur.
    fn dehomogenize_front(&self) -> Polynomial {
        debug_assert!(self.support().all(|e| e.entries()[0] == 0));
        self.specialize(0, &Rational::zero())
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn multivariate_gcd_and_lcm() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let g = gcd(&p("(x-y)^2*(x+y^2)"), &p("(x-y)*(x*y+1)")).unwrap();
        assert_eq!(g, p("x-y"));
        let l = lcm(&p("x*y"), &p("x^2")).unwrap();
        assert_eq!(l, p("x^2*y"));
        assert!(gcd(&p("x+y"), &p("x-y")).unwrap().is_constant());
        assert_eq!(gcd(&p("x^2-1"), &p("x^2+2*x+1")).unwrap(), p("x+1"));
    }

    #[test]
    fn squarefree_detection() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        assert!(is_squarefree(&p("x^2+y^2-1")).unwrap());
        assert!(is_squarefree(&p("x*y*z")).unwrap());
        assert!(!is_squarefree(&p("(x-y)^4")).unwrap());
        let w = repeated_factor(&p("(x-y)^2*(z+1)")).unwrap().unwrap();
        assert!(w.is_proportional(&p("x-y")));
        assert!(!is_squarefree(&p("z^2*(x+y)")).unwrap());
    }
}
