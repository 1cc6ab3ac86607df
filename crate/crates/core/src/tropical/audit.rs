use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::TropicalError;
use crate::groebner::Ideal;
use crate::poly::{ExponentVector, Polynomial, Rational, Ring, WeightVector};

#[derive(Clone, Debug, Serialize)]
pub struct SpotCheck {
    pub weight: Vec<i64>,
    pub w_groebner_basis: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub assertion: String,
    pub passed: bool,
    pub offending_terms: Vec<String>,
    pub conclusion: Option<String>,
    pub inference: Vec<String>,
    pub spot_checks: Vec<SpotCheck>,
}

/// Under the recorded assertion that `gens` form a universal Gröbner basis,
/// check that every term of every generator is a squarefree monomial. Then
/// every monomial initial ideal is squarefree, hence real radical, and every
/// initial ideal has such a refinement, so the real-radical fan covers
/// everything. `spot_checks` random weights are tested against the
/// assertion.
pub fn universal_gb_squarefree_audit(
    gens: &[Polynomial],
    spot_checks: usize,
    seed: u64,
) -> Result<AuditReport, TropicalError> {
    let mut offending = Vec::new();
    for g in gens {
        for (e, _) in g.terms() {
            if !e.is_squarefree() {
                let m = Polynomial::monomial(g.ring(), e.clone(), Rational::one());
                offending.push(format!("{m} in {g}"));
            }
        }
    }
    let passed = offending.is_empty() && !gens.is_empty();
    let mut checks = Vec::new();
    if spot_checks > 0 && !gens.is_empty() {
        let ideal = Ideal::new(gens.to_vec())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..spot_checks {
            let w: Vec<i64> = (0..ideal.nvars()).map(|_| rng.gen_range(-9..=9)).collect();
            let ok = ideal.is_w_groebner_basis(gens, &WeightVector::from_ints(&w))?;
            checks.push(SpotCheck {
                weight: w,
                w_groebner_basis: ok,
            });
        }
    }
    let (conclusion, inference) = if passed {
        (
            Some("|Delta_Rad(I)| = R^n".to_string()),
            vec![
                "every term of every generator is a squarefree monomial".to_string(),
                "for generic w the universal basis gives In_w(I) generated by squarefree monomials, which is real radical".to_string(),
                "every initial ideal has a monomial further initial ideal at a nonnegative weight (the ideal is homogeneous)".to_string(),
                "a real radical further initial ideal makes the initial ideal real radical".to_string(),
            ],
        )
    } else {
        (None, Vec::new())
    };
    Ok(AuditReport {
        assertion: "the generators are asserted to form a universal Groebner basis; this is not verified in general".into(),
        passed,
        offending_terms: offending,
        conclusion,
        inference,
        spot_checks: checks,
    })
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // Inserting the largest element before `len - pos` others.
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// The `d × d` minors of a generic `d × n` matrix with entries `x{i}{j}`.
pub fn maximal_minors(d: usize, n: usize) -> (Ring, Vec<Polynomial>) {
    let names: Vec<String> = (1..=d)
        .flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}")))
        .collect();
    let ring = Ring::new(&names).expect("valid generated names");
    let nv = d * n;
    let perms = permutations(d);
    let mut cols: Vec<usize> = (0..d).collect();
    let mut out = Vec::new();
    if d == 0 || d > n {
        return (ring, out);
    }
    loop {
        let terms = perms.iter().map(|(p, s)| {
            let mut e = vec![0u32; nv];
            for (row, &k) in p.iter().enumerate() {
                e[row * n + cols[k]] = 1;
            }
            (ExponentVector::new(e), Rational::from_integer((*s).into()))
        });
        out.push(Polynomial::from_terms(&ring, terms));
        let Some(i) = (0..d).rev().find(|&i| cols[i] < n - d + i) else {
            break;
        };
        cols[i] += 1;
        for j in i + 1..d {
            cols[j] = cols[j - 1] + 1;
        }
    }
    (ring, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minors_counts_and_shape() {
        let (r, g) = maximal_minors(2, 3);
        assert_eq!(r.nvars(), 6);
        assert_eq!(g.len(), 3);
        assert_eq!(g[0], r.parse("x11*x22 - x12*x21").unwrap());
        assert_eq!(maximal_minors(2, 4).1.len(), 6);
        let (r3, g3) = maximal_minors(3, 3);
        assert_eq!(g3.len(), 1);
        assert_eq!(g3[0].num_terms(), 6);
        let id = r3
            .parse("x11*x22*x33 - x11*x23*x32 - x12*x21*x33 + x12*x23*x31 + x13*x21*x32 - x13*x22*x31")
            .unwrap();
        assert_eq!(g3[0], id);
    }

    #[test]
    fn audits() {
        let (_, g) = maximal_minors(2, 3);
        let a = universal_gb_squarefree_audit(&g, 2, 7).unwrap();
        assert!(a.passed);
        assert!(a.spot_checks.iter().all(|c| c.w_groebner_basis));
        let r = Ring::new(&["x", "y"]).unwrap();
        let b = universal_gb_squarefree_audit(&[r.parse("x^2-y").unwrap()], 0, 0).unwrap();
        assert!(!b.passed);
        assert_eq!(b.offending_terms, vec!["x^2 in x^2 - y"]);
    }
}
