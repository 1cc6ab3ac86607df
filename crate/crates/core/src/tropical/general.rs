use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classify::{classify_principal, ClassifyOptions, ConeReport, Evidence, RealRadical, RstarVerdict};
use super::TropicalError;
use crate::groebner::{monomial_squarefree_test, Ideal, TieBreak};
use crate::poly::WeightVector;

#[derive(Clone, Debug)]
pub struct GeneralOptions {
    pub seed: u64,
    pub samples: usize,
    /// Random positive weights tried when looking for a squarefree
    /// monomial further initial ideal.
    pub refinement_tries: usize,
    /// The user asserts the input ideal is real radical (used only for
    /// binomial ideals, whose initial ideals on Trop equal the ideal).
    pub assume_real_radical: bool,
    pub tiebreak: TieBreak,
}

impl Default for GeneralOptions {
    fn default() -> Self {
        GeneralOptions {
            seed: 1,
            samples: 1000,
            refinement_tries: 24,
            assume_real_radical: false,
            tiebreak: TieBreak::Grlex,
        }
    }
}

fn is_binomial(gens: &[crate::poly::Polynomial]) -> bool {
    gens.iter().all(|g| g.num_terms() <= 2)
}

/// Classify `In_w(I)` for a single weight of an arbitrary ideal.
///
/// Monomial initial ideals are decided by the squarefree test, principal
/// ones through the classification of their generator. Otherwise random
/// positive weights are tried for a squarefree monomial further initial
/// ideal, which certifies real radicality.
pub fn classify_weight(ideal: &Ideal, w: &WeightVector, opts: &GeneralOptions) -> Result<ConeReport, TropicalError> {
    let forms = ideal.initial_ideal_with(w, opts.tiebreak)?;
    let j = Ideal::new(forms.clone())?;
    let in_trop = !j.contains_monomial()?;
    let is_monomial = forms.iter().all(|g| g.is_monomial());
    let mut r = ConeReport {
        cone_id: None,
        dim: None,
        rays: vec![],
        lineality: vec![],
        dual_face_dim: None,
        dual_face_vertices: vec![],
        weight: w.clone(),
        initial_forms: forms.clone(),
        is_monomial,
        squarefree_monomial: None,
        in_trop,
        in_trop_rstar: if in_trop {
            RstarVerdict::Unknown
        } else {
            RstarVerdict::Out
        },
        real_radical: RealRadical::Unknown,
        trop_rad: RealRadical::Unknown,
        edge_flagged: false,
        evidence: vec![],
        notes: vec![],
    };

    if is_monomial {
        let sq = monomial_squarefree_test(&forms)?;
        r.squarefree_monomial = Some(sq);
        r.real_radical = if sq { RealRadical::Yes } else { RealRadical::No };
        for g in &forms {
            r.evidence.push(Evidence::Monomial {
                exponent: g.support().next().expect("monomial").clone(),
                squarefree: g.support().all(|e| e.is_squarefree()),
            });
        }
    } else if forms.len() == 1 {
        let pc = classify_principal(
            &forms[0],
            &ClassifyOptions {
                seed: opts.seed,
                samples: opts.samples,
            },
        )?;
        let origin = pc.report_at(&WeightVector::zero(ideal.nvars()));
        r.real_radical = origin.real_radical;
        if in_trop {
            r.in_trop_rstar = origin.in_trop_rstar;
        }
        r.evidence.extend(origin.evidence.iter().cloned());
        r.notes.push(format!(
            "principal initial ideal; verdicts from cone {} of its own normal fan",
            origin.cone_id.unwrap_or(0)
        ));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x0051_ab1e);
        for _ in 0..opts.refinement_tries {
            let v: Vec<i64> = (0..ideal.nvars()).map(|_| rng.gen_range(1..=997)).collect();
            let further = j.initial_ideal(&WeightVector::from_ints(&v))?;
            if further.iter().all(|g| g.is_monomial()) && monomial_squarefree_test(&further)? {
                r.real_radical = RealRadical::Yes;
                r.evidence.push(Evidence::SquarefreeMonomialRefinement {
                    weight: v,
                    initial_ideal: further,
                });
                break;
            }
        }
        if r.real_radical == RealRadical::Unknown && is_binomial(&forms) {
            let same = ideal.grlex_basis()?.elements() == j.grlex_basis()?.elements();
            if opts.assume_real_radical && same && in_trop && is_binomial(ideal.grlex_basis()?.elements()) {
                r.real_radical = RealRadical::Yes;
                r.evidence.push(Evidence::Assertion {
                    text: "binomial ideal asserted real radical; its initial ideals on Trop equal the ideal".into(),
                });
            } else {
                r.notes.push(
                    "binomial initial ideal: deciding real radicality needs the binomial real-radical algorithm of Becker et al., which is not implemented; assert real radicality to proceed".into(),
                );
            }
        }
    }
    if in_trop && r.in_trop_rstar == RstarVerdict::Unknown && r.real_radical != RealRadical::Yes {
        r.notes.push("torus zeros of a non-principal initial ideal are not searched".into());
    }
    r.settle_trop_rad();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::tropical::maximal_minors;

    #[test]
    fn minors_are_real_radical_at_all_ones() {
        let (ring, gens) = maximal_minors(2, 3);
        let i = Ideal::new(gens).unwrap();
        let r = classify_weight(&i, &WeightVector::ones(ring.nvars()), &GeneralOptions::default()).unwrap();
        assert_eq!(r.real_radical, RealRadical::Yes);
        assert!(r.in_trop);
        assert_eq!(r.in_trop_rstar, RstarVerdict::In);
    }

    #[test]
    fn monomial_initial_ideal() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let i = Ideal::principal(r.parse("x^4-x^3+y^2+z^2").unwrap()).unwrap();
        let rep = classify_weight(&i, &"(1,1,1)".parse().unwrap(), &GeneralOptions::default()).unwrap();
        assert_eq!(rep.real_radical, RealRadical::No);
        assert!(!rep.in_trop);
        assert_eq!(rep.in_trop_rstar, RstarVerdict::Out);
    }

    #[test]
    fn binomial_needs_assertion() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let i = Ideal::new(vec![r.parse("x^2-y^2").unwrap(), r.parse("y^2-z^2").unwrap()]).unwrap();
        let w = WeightVector::ones(3);
        let opts = GeneralOptions {
            refinement_tries: 4,
            ..Default::default()
        };
        let rep = classify_weight(&i, &w, &opts).unwrap();
        assert_eq!(rep.real_radical, RealRadical::Unknown);
        assert!(rep.notes.iter().any(|n| n.contains("binomial")));
        let opts = GeneralOptions {
            assume_real_radical: true,
            ..opts
        };
        let rep = classify_weight(&i, &w, &opts).unwrap();
        assert_eq!(rep.real_radical, RealRadical::Yes);
        assert_eq!(rep.in_trop_rstar, RstarVerdict::In);
    }
}
