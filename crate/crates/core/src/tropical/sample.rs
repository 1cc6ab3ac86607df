use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Evidence;
use crate::poly::{Polynomial, Rational};
use crate::realroots::{count_real_roots, RootRange, UnivariatePolynomial};

/// One attempt: fix every variable but `j` at `point` and count nonzero
/// real roots of the restriction in `x_j`.
pub(crate) fn probe(g: &Polynomial, point: &[Rational], j: usize) -> Option<Evidence> {
    let n = g.nvars();
    let mut base = point.to_vec();
    base[j] = Rational::zero();
    let mut dir = vec![Rational::zero(); n];
    dir[j] = Rational::one();
    let u = UnivariatePolynomial::restrict_to_line(g, &base, &dir);
    let names = g.ring().names();
    let coords: Vec<String> = (0..n)
        .map(|i| if i == j { "t".to_string() } else { point[i].to_string() })
        .collect();
    if u.is_zero() {
        return Some(Evidence::RstarSample {
            variable: names[j].clone(),
            point: coords,
            positive_roots: 0,
            negative_roots: 0,
            vanishes_on_line: true,
        });
    }
    if u.is_constant() {
        return None;
    }
    let pos = count_real_roots(&u, &RootRange::Positive).ok()?;
    let neg = count_real_roots(&u, &RootRange::Negative).ok()?;
    (pos + neg > 0).then(|| Evidence::RstarSample {
        variable: names[j].clone(),
        point: coords,
        positive_roots: pos,
        negative_roots: neg,
        vanishes_on_line: false,
    })
}

/// Look for a zero of `g` in the torus along coordinate lines through
/// sample points with nonzero rational coordinates. Sign patterns of ±1 are
/// tried first, then `samples` random points.
pub(crate) fn search_rstar_zero(g: &Polynomial, samples: usize, rng: &mut ChaCha8Rng) -> Option<Evidence> {
    let vars = g.variables();
    if vars.is_empty() {
        return None;
    }
    let n = g.nvars();
    let others = n.saturating_sub(1).min(10);
    for mask in 0u32..(1u32 << others) {
        let point: Vec<Rational> = (0..n)
            .map(|i| {
                if i < others && (mask >> i) & 1 == 1 {
                    -Rational::one()
                } else {
                    Rational::one()
                }
            })
            .collect();
        for &j in &vars {
            if let Some(e) = probe(g, &point, j) {
                return Some(e);
            }
        }
    }
    for s in 0..samples {
        let point: Vec<Rational> = (0..n)
            .map(|_| {
                let p: i64 = rng.gen_range(1..=12);
                let q: i64 = rng.gen_range(1..=6);
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                Rational::new((sign * p).into(), q.into())
            })
            .collect();
        let j = vars[s % vars.len()];
        if let Some(e) = probe(g, &point, j) {
            return Some(e);
        }
    }
    None
}

/// Recheck a sampling witness exactly.
pub(crate) fn replay_sample(g: &Polynomial, variable: &str, point: &[String]) -> bool {
    let Some(j) = g.ring().index_of(variable) else {
        return false;
    };
    let mut coords = Vec::with_capacity(point.len());
    for (i, s) in point.iter().enumerate() {
        if i == j {
            coords.push(Rational::zero());
            continue;
        }
        match crate::poly::parse_rational(s) {
            Ok(q) if !q.is_zero() => coords.push(q),
            _ => return false,
        }
    }
    coords.len() == g.nvars() && probe(g, &coords, j).is_some()
}
