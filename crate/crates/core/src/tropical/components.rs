use num_traits::One;
use serde::Serialize;

use super::classify::{edge_evidence, edge_verdicts, Evidence};
use super::TropicalError;
use crate::groebner::gcd;
use crate::newton::{newton_polytope, EdgeData};
use crate::poly::{Polynomial, Rational, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ComponentVerdict {
    RealRadical,
    NotRealRadical,
    /// Multiplicity at least two.
    NotReduced,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    #[serde(serialize_with = "crate::ser::polynomial")]
    pub polynomial: Polynomial,
    pub multiplicity: u32,
    pub verdict: ComponentVerdict,
    /// The real zero set meets the torus `(ℝ*)ⁿ`; `None` when undecided.
    pub meets_torus: Option<bool>,
    pub evidence: Vec<Evidence>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentClassification {
    #[serde(serialize_with = "crate::ser::polynomial")]
    pub target: Polynomial,
    pub weight: Option<String>,
    pub product_verified: bool,
    /// `target = unit · Π components^multiplicity`.
    #[serde(serialize_with = "crate::ser::rational")]
    pub unit: Rational,
    pub pairwise_coprime: bool,
    pub components: Vec<Component>,
    pub conclusion: Option<String>,
    pub notes: Vec<String>,
}

fn classify_one(g: &Polynomial, mult: u32) -> Result<Component, TropicalError> {
    let mut c = Component {
        polynomial: g.clone(),
        multiplicity: mult,
        verdict: ComponentVerdict::Unknown,
        meets_torus: None,
        evidence: Vec::new(),
        notes: Vec::new(),
    };
    if g.is_monomial() {
        let e = g.support().next().expect("nonzero").clone();
        let sq = e.is_squarefree();
        c.verdict = if sq {
            ComponentVerdict::RealRadical
        } else {
            ComponentVerdict::NotRealRadical
        };
        c.meets_torus = Some(e.is_constant());
        c.evidence.push(Evidence::Monomial {
            exponent: e,
            squarefree: sq,
        });
    } else if g.total_degree() == Some(1) {
        c.verdict = ComponentVerdict::RealRadical;
        c.meets_torus = Some(true);
        c.evidence.push(Evidence::LinearForm);
    } else {
        let np = newton_polytope(g)?;
        if np.dim() == 1 {
            let vs = np.vertices();
            let edge = EdgeData::from_endpoints(g, &vs[0], &vs[1]);
            let (distinct, torus) = edge_verdicts(&edge)?;
            c.verdict = match edge.squared_variable {
                Some(i) => {
                    c.notes.push(format!("{}^2 divides the component", g.ring().names()[i]));
                    ComponentVerdict::NotRealRadical
                }
                None if distinct => ComponentVerdict::RealRadical,
                None => ComponentVerdict::NotRealRadical,
            };
            c.meets_torus = Some(torus);
            if edge.flagged {
                c.notes.push(
                    "an endpoint exponent equals 1; the univariate criterion is applied as stated"
                        .into(),
                );
            }
            c.evidence.push(edge_evidence(edge)?);
        } else {
            c.notes
                .push("Newton polytope is not a segment; no decidable criterion applies".into());
        }
    }
    if mult >= 2 {
        c.notes.push(format!("multiplicity {mult}: the primary component is not reduced"));
        c.verdict = ComponentVerdict::NotReduced;
    }
    Ok(c)
}

/// Check that `target` factors as the given components with multiplicities
/// and classify each one. With a weight `w`, a reduced real-radical
/// component meeting the torus and coprime to the others yields the
/// conclusion `w ∈ LL(V_ℝ*(I))`.
pub fn classify_components(
    target: &Polynomial,
    components: &[(Polynomial, u32)],
    weight: Option<&WeightVector>,
) -> Result<ComponentClassification, TropicalError> {
    let ring = target.ring();
    let mut product = Polynomial::one(ring);
    for (g, m) in components {
        g.same_ring(target)?;
        product = &product * &g.pow(*m);
    }
    let mut notes = Vec::new();
    let unit = if &product == target {
        Rational::one()
    } else if !product.is_zero() && product.is_proportional(target) {
        let (e, c) = target.leading_term().expect("nonzero");
        let u = c / product.coeff(e);
        notes.push(format!("product agrees with the target up to the unit {u}"));
        u
    } else {
        return Err(TropicalError::ProductMismatch {
            discrepancy: (target - &product).to_string(),
        });
    };
    let mut pairwise_coprime = true;
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            let d = gcd(&components[i].0, &components[j].0)?;
            if !d.is_constant() {
                pairwise_coprime = false;
                notes.push(format!(
                    "components {} and {} share the factor {d}",
                    components[i].0, components[j].0
                ));
            }
        }
    }
    let classified = components
        .iter()
        .map(|(g, m)| classify_one(g, *m))
        .collect::<Result<Vec<_>, _>>()?;
    let witness = classified.iter().find(|c| {
        c.verdict == ComponentVerdict::RealRadical && c.meets_torus == Some(true) && c.multiplicity == 1
    });
    let conclusion = match (weight, witness) {
        (Some(w), Some(c)) if pairwise_coprime && !w.is_zero() => {
            Some(format!("{w} ∈ LL(V_ℝ*(I)) via the component {}", c.polynomial))
        }
        (Some(_), Some(_)) if !pairwise_coprime => {
            notes.push("components are not coprime; no conclusion drawn".into());
            None
        }
        _ => None,
    };
    Ok(ComponentClassification {
        target: target.clone(),
        weight: weight.map(|w| w.to_string()),
        product_verified: true,
        unit,
        pairwise_coprime,
        components: classified,
        conclusion,
        notes,
    })
}
