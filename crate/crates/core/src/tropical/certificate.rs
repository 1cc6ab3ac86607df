use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::classify::{classify_principal, ClassifyOptions, Evidence, PrincipalClassification, RealRadical, RstarVerdict};
use super::components::classify_components;
use super::general::{classify_weight, GeneralOptions};
use super::TropicalError;
use crate::groebner::{monomial_squarefree_test, Ideal};
use crate::linalg;
use crate::lp;
use crate::newton::{newton_polytope, normal_fan, EdgeData};
use crate::poly::{Polynomial, Rational, Ring, WeightVector};
use crate::realroots::{edge_has_rstar_zero, is_univariate_real_radical, UnivariatePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateKind {
    CompactRstar,
    NoncompactRstar,
    NoncompactR,
    Stable,
    Inconclusive,
}

impl std::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CertificateKind::CompactRstar => "COMPACT_RSTAR",
            CertificateKind::NoncompactRstar => "NONCOMPACT_RSTAR",
            CertificateKind::NoncompactR => "NONCOMPACT_R",
            CertificateKind::Stable => "STABLE",
            CertificateKind::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Inference rule applied at one step. Each carries what replay needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Rule {
    /// The initial ideal is generated by monomials, so it has no torus zero.
    MonomialForm,
    /// Generated by squarefree monomials, hence real radical.
    SquarefreeMonomial,
    /// Edge form whose univariate polynomial has no root giving a torus zero.
    EdgeNoTorusZero {
        #[serde(serialize_with = "crate::ser::polynomial")]
        u: Polynomial,
    },
    /// Edge form whose univariate polynomial has distinct real roots only.
    EdgeRealRadical {
        #[serde(serialize_with = "crate::ser::polynomial")]
        u: Polynomial,
    },
    LinearForm,
    /// `In_v` of this initial ideal equals the one established at step
    /// `from_step`, which is real radical; `v` is nonnegative.
    FurtherInitialRealRadical { v: Vec<i64>, from_step: usize },
    /// `In_v` of this initial ideal is generated by squarefree monomials.
    SquarefreeMonomialRefinement {
        v: Vec<i64>,
        #[serde(serialize_with = "crate::ser::polynomials")]
        initial_ideal: Vec<Polynomial>,
    },
    /// The principal initial ideal is real radical by its own classification.
    PrincipalInitialIdeal { seed: u64, samples: usize },
    /// Accepted from the user without proof.
    Assertion { text: String },
    /// The initial ideal contains no monomial.
    InTrop,
    /// The weight has a positive coordinate.
    PositiveCoordinate { coordinate: usize },
    /// All coordinates of the weight are positive.
    PositiveWeight,
    /// A reduced real-radical component meeting the torus.
    ComponentLimit {
        #[serde(serialize_with = "crate::ser::polynomials")]
        components: Vec<Polynomial>,
        multiplicities: Vec<u32>,
        conclusion: String,
    },
    /// Every nonzero cone of the normal fan has a step above.
    Coverage { cones: Vec<usize> },
}

impl Rule {
    fn name(&self) -> &'static str {
        match self {
            Rule::MonomialForm => "monomial_form",
            Rule::SquarefreeMonomial => "squarefree_monomial",
            Rule::EdgeNoTorusZero { .. } => "edge_no_torus_zero",
            Rule::EdgeRealRadical { .. } => "edge_real_radical",
            Rule::LinearForm => "linear_form",
            Rule::FurtherInitialRealRadical { .. } => "further_initial_real_radical",
            Rule::SquarefreeMonomialRefinement { .. } => "squarefree_monomial_refinement",
            Rule::PrincipalInitialIdeal { .. } => "principal_initial_ideal",
            Rule::Assertion { .. } => "assertion",
            Rule::InTrop => "in_trop",
            Rule::PositiveCoordinate { .. } => "positive_coordinate",
            Rule::PositiveWeight => "positive_weight",
            Rule::ComponentLimit { .. } => "component_limit",
            Rule::Coverage { .. } => "coverage",
        }
    }

    fn proves_real_radical(&self) -> bool {
        matches!(
            self,
            Rule::SquarefreeMonomial
                | Rule::EdgeRealRadical { .. }
                | Rule::LinearForm
                | Rule::FurtherInitialRealRadical { .. }
                | Rule::SquarefreeMonomialRefinement { .. }
                | Rule::PrincipalInitialIdeal { .. }
                | Rule::Assertion { .. }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub cone: Option<usize>,
    pub weight: Vec<i64>,
    #[serde(serialize_with = "crate::ser::polynomials")]
    pub initial_forms: Vec<Polynomial>,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    #[serde(serialize_with = "crate::ser::rational")]
    pub ratio: Rational,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub witnesses: Vec<Vec<i64>>,
    pub provenance: Vec<usize>,
    pub rules: Vec<String>,
    pub steps: Vec<Step>,
    pub bound: Option<Bound>,
    pub seed: u64,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("step {step}: {reason}")]
    Failed { step: usize, reason: String },
    #[error(transparent)]
    Tropical(#[from] TropicalError),
}

impl Certificate {
    fn new(kind: CertificateKind, seed: u64) -> Self {
        Certificate {
            kind,
            witnesses: Vec::new(),
            provenance: Vec::new(),
            rules: Vec::new(),
            steps: Vec::new(),
            bound: None,
            seed,
            notes: Vec::new(),
        }
    }

    fn push(&mut self, step: Step) -> usize {
        if let Some(c) = step.cone {
            if !self.provenance.contains(&c) {
                self.provenance.push(c);
            }
        }
        let name = step.rule.name().to_string();
        if !self.rules.contains(&name) {
            self.rules.push(name);
        }
        self.steps.push(step);
        self.steps.len() - 1
    }

    /// Recheck every step against `ideal` with exact arithmetic.
    pub fn replay(&self, ideal: &Ideal) -> Result<(), ReplayError> {
        let mut real_radical = vec![false; self.steps.len()];
        for (k, step) in self.steps.iter().enumerate() {
            let fail = |reason: String| ReplayError::Failed { step: k, reason };
            let w = WeightVector::from_ints(&step.weight);
            if !matches!(step.rule, Rule::Coverage { .. }) {
                let forms = ideal.initial_ideal(&w).map_err(TropicalError::from)?;
                if !same_ideal(&forms, &step.initial_forms)? {
                    return Err(fail("recorded initial forms do not generate the initial ideal".into()));
                }
            }
            let forms = &step.initial_forms;
            match &step.rule {
                Rule::MonomialForm => {
                    if !forms.iter().all(|g| g.is_monomial()) {
                        return Err(fail("initial ideal is not monomial".into()));
                    }
                }
                Rule::SquarefreeMonomial => {
                    if !(forms.iter().all(|g| g.is_monomial())
                        && monomial_squarefree_test(forms).map_err(TropicalError::from)?)
                    {
                        return Err(fail("initial ideal is not squarefree monomial".into()));
                    }
                }
                Rule::EdgeNoTorusZero { u } | Rule::EdgeRealRadical { u } => {
                    let [g] = forms.as_slice() else {
                        return Err(fail("edge rule needs a single form".into()));
                    };
                    let edge = single_edge(g).ok_or_else(|| fail("form is not an edge form".into()))?;
                    let uu = edge.univariate();
                    let stored = UnivariatePolynomial::from_polynomial(u, 0)
                        .ok_or_else(|| fail("stored u is not univariate".into()))?;
                    if !proportional(&uu, &stored) {
                        return Err(fail(format!("edge polynomial differs from {u}")));
                    }
                    let ok = match step.rule {
                        Rule::EdgeNoTorusZero { .. } => {
                            !edge_has_rstar_zero(&uu, &edge.v).map_err(TropicalError::from)?
                        }
                        _ => {
                            edge.squared_variable.is_none()
                                && is_univariate_real_radical(&uu).map_err(TropicalError::from)?
                        }
                    };
                    if !ok {
                        return Err(fail("edge criterion does not hold".into()));
                    }
                }
                Rule::LinearForm => {
                    if !(forms.len() == 1 && forms[0].total_degree() == Some(1)) {
                        return Err(fail("not a single linear form".into()));
                    }
                }
                Rule::FurtherInitialRealRadical { v, from_step } => {
                    if *from_step >= k || !real_radical[*from_step] {
                        return Err(fail("refinement does not point to an earlier real radical step".into()));
                    }
                    if v.iter().any(|&x| x < 0) {
                        return Err(fail("refining weight has a negative entry".into()));
                    }
                    let j = Ideal::new(forms.clone()).map_err(TropicalError::from)?;
                    let further = j.initial_ideal(&WeightVector::from_ints(v)).map_err(TropicalError::from)?;
                    if !same_ideal(&further, &self.steps[*from_step].initial_forms)? {
                        return Err(fail("further initial ideal differs from the cited one".into()));
                    }
                }
                Rule::SquarefreeMonomialRefinement { v, initial_ideal } => {
                    if v.iter().any(|&x| x < 0) {
                        return Err(fail("refining weight has a negative entry".into()));
                    }
                    let j = Ideal::new(forms.clone()).map_err(TropicalError::from)?;
                    let further = j.initial_ideal(&WeightVector::from_ints(v)).map_err(TropicalError::from)?;
                    if !same_ideal(&further, initial_ideal)?
                        || !further.iter().all(|g| g.is_monomial())
                        || !monomial_squarefree_test(&further).map_err(TropicalError::from)?
                    {
                        return Err(fail("refinement is not a squarefree monomial ideal".into()));
                    }
                }
                Rule::PrincipalInitialIdeal { seed, samples } => {
                    let [g] = forms.as_slice() else {
                        return Err(fail("expected a principal initial ideal".into()));
                    };
                    let pc = classify_principal(g, &ClassifyOptions { seed: *seed, samples: *samples })?;
                    let origin = pc.report_at(&WeightVector::zero(g.nvars()));
                    if origin.real_radical != RealRadical::Yes {
                        return Err(fail("principal initial ideal is not certified real radical".into()));
                    }
                }
                Rule::Assertion { .. } => {}
                Rule::InTrop => {
                    let j = Ideal::new(forms.clone()).map_err(TropicalError::from)?;
                    if j.contains_monomial().map_err(TropicalError::from)? {
                        return Err(fail("initial ideal contains a monomial".into()));
                    }
                }
                Rule::PositiveCoordinate { coordinate } => {
                    if step.weight.get(*coordinate).copied().unwrap_or(0) <= 0 {
                        return Err(fail("coordinate is not positive".into()));
                    }
                }
                Rule::PositiveWeight => {
                    if step.weight.iter().any(|&x| x <= 0) {
                        return Err(fail("weight is not positive".into()));
                    }
                }
                Rule::ComponentLimit {
                    components,
                    multiplicities,
                    conclusion,
                } => {
                    let [g] = forms.as_slice() else {
                        return Err(fail("components need a principal initial ideal".into()));
                    };
                    let comps: Vec<(Polynomial, u32)> =
                        components.iter().cloned().zip(multiplicities.iter().copied()).collect();
                    let c = classify_components(g, &comps, Some(&w))?;
                    if c.conclusion.as_deref() != Some(conclusion.as_str()) {
                        return Err(fail("component classification does not reach the conclusion".into()));
                    }
                }
                Rule::Coverage { cones } => {
                    let f = principal_generator(ideal)?.ok_or_else(|| fail("coverage needs a principal ideal".into()))?;
                    let fan = normal_fan(&newton_polytope(&f).map_err(TropicalError::from)?);
                    let mut seen = BTreeSet::new();
                    for s in &self.steps[..k] {
                        seen.insert(fan.cone_containing(&WeightVector::from_ints(&s.weight)).id);
                    }
                    let want: BTreeSet<usize> = fan.cones().iter().filter(|c| c.dim > 0).map(|c| c.id).collect();
                    let listed: BTreeSet<usize> = cones.iter().copied().collect();
                    if !want.is_subset(&seen) || listed != want {
                        return Err(fail("steps do not cover every nonzero cone".into()));
                    }
                }
            }
            if step.rule.proves_real_radical() {
                real_radical[k] = true;
            }
            if matches!(step.rule, Rule::InTrop | Rule::PositiveCoordinate { .. } | Rule::PositiveWeight) {
                let prev = (0..k).rev().find(|&i| self.steps[i].weight == step.weight && real_radical[i]);
                if prev.is_none() {
                    return Err(fail("no earlier real radical step at this weight".into()));
                }
                real_radical[k] = true;
            }
        }
        Ok(())
    }
}

fn principal_generator(ideal: &Ideal) -> Result<Option<Polynomial>, TropicalError> {
    let gb = ideal.grlex_basis()?;
    Ok((gb.len() == 1).then(|| gb.elements()[0].clone()))
}

fn same_ideal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool, TropicalError> {
    let (Some(x), Some(y)) = (a.first(), b.first()) else {
        return Ok(a.is_empty() && b.is_empty());
    };
    if x.ring() != y.ring() {
        return Ok(false);
    }
    let ia = Ideal::new(a.to_vec())?;
    let ib = Ideal::new(b.to_vec())?;
    Ok(ia.grlex_basis()?.elements() == ib.grlex_basis()?.elements())
}

fn proportional(a: &UnivariatePolynomial, b: &UnivariatePolynomial) -> bool {
    !a.is_zero() && a.monic() == b.monic()
}

/// Edge data of a form whose Newton polytope is a segment.
fn single_edge(g: &Polynomial) -> Option<EdgeData> {
    let np = newton_polytope(g).ok()?;
    if np.dim() != 1 {
        return None;
    }
    let vs = np.vertices();
    Some(EdgeData::from_endpoints(g, &vs[0], &vs[1]))
}

fn u_polynomial(edge: &EdgeData) -> Polynomial {
    edge.univariate().to_polynomial(&Ring::new(&["t"]).expect("valid name"), 0)
}

/// A nonzero primitive point in the relative interior of the cone of `r`.
fn cone_weight(pc: &PrincipalClassification, id: usize) -> Vec<i64> {
    let r = &pc.reports[id];
    if !r.rays.is_empty() {
        r.weight.primitive_i64().expect("small weight")
    } else if let Some(l) = r.lineality.first() {
        l.clone()
    } else {
        vec![0; pc.ambient_dim()]
    }
}

/// Steps proving the initial ideal of cone `id` real radical at weight `w`.
fn justify(
    pc: &PrincipalClassification,
    id: usize,
    w: &[i64],
    cert: &mut Certificate,
    memo: &mut HashMap<usize, usize>,
) -> Result<Option<usize>, TropicalError> {
    if let Some(&k) = memo.get(&id) {
        if cert.steps[k].weight == w {
            return Ok(Some(k));
        }
    }
    let f = &pc.polynomial;
    let form = f.initial_form(&WeightVector::from_ints(w))?;
    let r = &pc.reports[id];
    let mut rule = None;
    for e in &r.evidence {
        rule = match e {
            Evidence::Edge { edge, distinct_real: true, .. } if edge.squared_variable.is_none() => {
                Some(Rule::EdgeRealRadical { u: u_polynomial(edge) })
            }
            Evidence::LinearForm => Some(Rule::LinearForm),
            Evidence::Monomial { squarefree: true, .. } => Some(Rule::SquarefreeMonomial),
            Evidence::FurtherInitialRealRadical {
                from_cone: Some(c),
                weight: v,
            } => {
                let cw = cone_weight(pc, *c);
                justify(pc, *c, &cw, cert, memo)?
                    .map(|from_step| Rule::FurtherInitialRealRadical { v: v.clone(), from_step })
            }
            _ => None,
        };
        if rule.is_some() {
            break;
        }
    }
    let Some(rule) = rule else {
        return Ok(None);
    };
    let k = cert.push(Step {
        cone: Some(id),
        weight: w.to_vec(),
        initial_forms: vec![form],
        rule,
    });
    memo.insert(id, k);
    Ok(Some(k))
}

fn in_trop_step(pc: &PrincipalClassification, id: usize, w: &[i64], cert: &mut Certificate) -> Result<(), TropicalError> {
    let form = pc.polynomial.initial_form(&WeightVector::from_ints(w))?;
    cert.push(Step {
        cone: Some(id),
        weight: w.to_vec(),
        initial_forms: vec![form],
        rule: Rule::InTrop,
    });
    Ok(())
}

/// A point in the relative interior of cone `id` with coordinate `i` at
/// least one.
fn positive_point(pc: &PrincipalClassification, id: usize, i: usize) -> Option<Vec<i64>> {
    let r = &pc.reports[id];
    let strict: Vec<Vec<Rational>> = r.rays.iter().map(|v| linalg::from_i64(v)).collect();
    let free: Vec<Vec<Rational>> = r.lineality.iter().map(|v| linalg::from_i64(v)).collect();
    let mut lower = vec![None; pc.ambient_dim()];
    lower[i] = Some(Rational::from_integer(1.into()));
    let p = lp::cone_point(&strict, &free, &lower, true)?;
    linalg::primitive_i64(&p)
}

/// Decide compactness of the real zero set of a principal ideal from its
/// cone classification.
///
/// A real-radical tropical cone with a point having a positive coordinate
/// shows the real zero set is unbounded; any nonzero real-radical tropical
/// cone shows the torus part is not compact; all nonzero cones without
/// torus zeros show it is compact. Optionally, user-supplied components of
/// `In_w(f)` can give a direction in the logarithmic limit set.
pub fn compactness_certificate(
    pc: &PrincipalClassification,
    components: Option<(&[(Polynomial, u32)], &WeightVector)>,
) -> Result<Certificate, TropicalError> {
    let nonzero: Vec<usize> = pc
        .reports
        .iter()
        .filter(|r| r.dim.unwrap_or(0) > 0)
        .filter_map(|r| r.cone_id)
        .collect();
    let yes: Vec<usize> = nonzero
        .iter()
        .copied()
        .filter(|&id| pc.reports[id].trop_rad == RealRadical::Yes)
        .collect();
    let mut memo = HashMap::new();

    for &id in &yes {
        for i in 0..pc.ambient_dim() {
            let Some(w) = positive_point(pc, id, i) else {
                continue;
            };
            let mut cert = Certificate::new(CertificateKind::NoncompactR, pc.seed);
            if justify(pc, id, &w, &mut cert, &mut memo)?.is_none() {
                break;
            }
            in_trop_step(pc, id, &w, &mut cert)?;
            let form = pc.polynomial.initial_form(&WeightVector::from_ints(&w))?;
            cert.push(Step {
                cone: Some(id),
                weight: w.clone(),
                initial_forms: vec![form],
                rule: Rule::PositiveCoordinate { coordinate: i },
            });
            cert.witnesses.push(w);
            return Ok(cert);
        }
    }

    if !yes.is_empty() {
        let mut cert = Certificate::new(CertificateKind::NoncompactRstar, pc.seed);
        let mut memo = HashMap::new();
        for &id in &yes {
            let w = cone_weight(pc, id);
            if justify(pc, id, &w, &mut cert, &mut memo)?.is_some() {
                in_trop_step(pc, id, &w, &mut cert)?;
                cert.witnesses.push(w);
            }
        }
        if !cert.witnesses.is_empty() {
            return Ok(cert);
        }
    }

    if nonzero.iter().all(|&id| pc.reports[id].in_trop_rstar == RstarVerdict::Out) {
        let mut cert = Certificate::new(CertificateKind::CompactRstar, pc.seed);
        let mut all_out = true;
        for &id in &nonzero {
            let w = cone_weight(pc, id);
            let form = pc.polynomial.initial_form(&WeightVector::from_ints(&w))?;
            let rule = if form.is_monomial() {
                Rule::MonomialForm
            } else if let Some(edge) = single_edge(&form) {
                Rule::EdgeNoTorusZero { u: u_polynomial(&edge) }
            } else {
                all_out = false;
                break;
            };
            if pc.reports[id].in_trop {
                cert.witnesses.push(w.clone());
            }
            cert.push(Step {
                cone: Some(id),
                weight: w,
                initial_forms: vec![form],
                rule,
            });
        }
        if all_out {
            cert.push(Step {
                cone: None,
                weight: vec![0; pc.ambient_dim()],
                initial_forms: Vec::new(),
                rule: Rule::Coverage { cones: nonzero.clone() },
            });
            return Ok(cert);
        }
    }

    let mut cert = Certificate::new(CertificateKind::Inconclusive, pc.seed);
    if let Some((comps, w)) = components {
        if !w.is_zero() {
            let wi = w.primitive_i64()?;
            let form = pc.polynomial.initial_form(w)?;
            let cc = classify_components(&form, comps, Some(w))?;
            if let Some(conclusion) = cc.conclusion {
                cert.kind = if wi.iter().any(|&x| x > 0) {
                    CertificateKind::NoncompactR
                } else {
                    CertificateKind::NoncompactRstar
                };
                cert.push(Step {
                    cone: Some(pc.fan.cone_containing(w).id),
                    weight: wi.clone(),
                    initial_forms: vec![form],
                    rule: Rule::ComponentLimit {
                        components: comps.iter().map(|c| c.0.clone()).collect(),
                        multiplicities: comps.iter().map(|c| c.1).collect(),
                        conclusion,
                    },
                });
                cert.witnesses.push(wi);
                return Ok(cert);
            }
            cert.notes.push("the supplied components give no limit direction".into());
        }
    }
    if !pc.trop_rstar_unknown.is_empty() {
        cert.notes.push(format!(
            "cones with undecided torus zeros: {:?}",
            pc.trop_rstar_unknown
        ));
    }
    cert.notes.push("no compactness rule applies".into());
    Ok(cert)
}

/// Compactness for a non-principal ideal from per-weight classifications.
/// Only non-compactness can be certified this way.
pub fn compactness_general(
    ideal: &Ideal,
    weights: &[WeightVector],
    opts: &GeneralOptions,
) -> Result<Certificate, TropicalError> {
    let mut cert = Certificate::new(CertificateKind::Inconclusive, opts.seed);
    let mut best: Option<(CertificateKind, Vec<Step>, Vec<i64>)> = None;
    for w in weights.iter().filter(|w| !w.is_zero()) {
        let r = classify_weight(ideal, w, opts)?;
        if r.trop_rad != RealRadical::Yes {
            continue;
        }
        let wi = w.primitive_i64()?;
        let Some(rule) = general_rule(&r.evidence, opts) else {
            continue;
        };
        let mut steps = vec![
            Step {
                cone: None,
                weight: wi.clone(),
                initial_forms: r.initial_forms.clone(),
                rule,
            },
            Step {
                cone: None,
                weight: wi.clone(),
                initial_forms: r.initial_forms.clone(),
                rule: Rule::InTrop,
            },
        ];
        let kind = match wi.iter().position(|&x| x > 0) {
            Some(i) => {
                steps.push(Step {
                    cone: None,
                    weight: wi.clone(),
                    initial_forms: r.initial_forms.clone(),
                    rule: Rule::PositiveCoordinate { coordinate: i },
                });
                CertificateKind::NoncompactR
            }
            None => CertificateKind::NoncompactRstar,
        };
        let better = match &best {
            None => true,
            Some((k, _, _)) => *k == CertificateKind::NoncompactRstar && kind == CertificateKind::NoncompactR,
        };
        if better {
            best = Some((kind, steps, wi));
        }
    }
    match best {
        Some((kind, steps, w)) => {
            cert.kind = kind;
            for s in steps {
                cert.push(s);
            }
            cert.witnesses.push(w);
        }
        None => cert.notes.push(
            "no supplied weight is certified in the real-radical tropical variety; compactness is never certified for non-principal ideals".into(),
        ),
    }
    Ok(cert)
}

fn general_rule(evidence: &[Evidence], opts: &GeneralOptions) -> Option<Rule> {
    evidence.iter().find_map(|e| match e {
        Evidence::SquarefreeMonomialRefinement { weight, initial_ideal } => Some(Rule::SquarefreeMonomialRefinement {
            v: weight.clone(),
            initial_ideal: initial_ideal.clone(),
        }),
        Evidence::Monomial { squarefree: true, .. } => Some(Rule::SquarefreeMonomial),
        Evidence::Assertion { text } => Some(Rule::Assertion { text: text.clone() }),
        Evidence::Edge { .. } | Evidence::LinearForm | Evidence::FurtherInitialRealRadical { .. } => {
            Some(Rule::PrincipalInitialIdeal {
                seed: opts.seed,
                samples: opts.samples,
            })
        }
        _ => None,
    })
}

/// `l(d) = ⌈(w_max / w_min) · d⌉` for a positive weight.
pub fn stability_bound(w: &WeightVector, d: u64) -> Result<u64, TropicalError> {
    let ratio = weight_ratio(w)?;
    let v = ratio * Rational::from_integer(d.into());
    Ok(u64::try_from(v.ceil().to_integer()).expect("bound fits"))
}

fn weight_ratio(w: &WeightVector) -> Result<Rational, TropicalError> {
    if w.dim() == 0 || !w.is_all_positive() {
        return Err(TropicalError::NonPositiveWeight(w.to_string()));
    }
    Ok(w.max_entry().expect("nonempty") / w.min_entry().expect("nonempty"))
}

fn bound_for(w: &[i64]) -> Result<Bound, TropicalError> {
    let ratio = weight_ratio(&WeightVector::from_ints(w))?;
    let formula = if ratio.is_integer() {
        match ratio.to_integer() {
            n if n == 1.into() => "l(d) = d".to_string(),
            n => format!("l(d) = {n}d"),
        }
    } else {
        format!("l(d) = ceil({ratio} d)")
    };
    Ok(Bound { ratio, formula })
}

/// Stability of `Σℝ[x]² + ⟨f⟩` from a positive weight in a cone whose
/// initial ideal is certified real radical. Tropical cones are preferred,
/// then the smallest ratio `w_max / w_min`.
pub fn stability_principal(pc: &PrincipalClassification) -> Result<Certificate, TropicalError> {
    let n = pc.ambient_dim();
    let mut candidates = Vec::new();
    for r in &pc.reports {
        let Some(id) = r.cone_id else { continue };
        if r.real_radical != RealRadical::Yes {
            continue;
        }
        let strict: Vec<Vec<Rational>> = r.rays.iter().map(|v| linalg::from_i64(v)).collect();
        let free: Vec<Vec<Rational>> = r.lineality.iter().map(|v| linalg::from_i64(v)).collect();
        let lower = vec![Some(Rational::from_integer(1.into())); n];
        let Some(p) = lp::cone_point(&strict, &free, &lower, true) else {
            continue;
        };
        let Some(w) = linalg::primitive_i64(&p) else { continue };
        let ratio = weight_ratio(&WeightVector::from_ints(&w))?;
        candidates.push((!r.in_trop, ratio, id, w));
    }
    candidates.sort();
    let mut memo = HashMap::new();
    for (_, _, id, w) in candidates {
        let mut cert = Certificate::new(CertificateKind::Stable, pc.seed);
        if justify(pc, id, &w, &mut cert, &mut memo)?.is_none() {
            memo.clear();
            continue;
        }
        let form = pc.polynomial.initial_form(&WeightVector::from_ints(&w))?;
        cert.push(Step {
            cone: Some(id),
            weight: w.clone(),
            initial_forms: vec![form],
            rule: Rule::PositiveWeight,
        });
        cert.bound = Some(bound_for(&w)?);
        cert.witnesses.push(w);
        return Ok(cert);
    }
    let mut cert = Certificate::new(CertificateKind::Inconclusive, pc.seed);
    cert.notes
        .push("no cone meeting the positive orthant is certified real radical; this does not show instability".into());
    Ok(cert)
}

/// Stability of `Σℝ[x]² + I` from per-weight classifications: the given
/// positive weights, else the all-ones weight and seeded random positive
/// weights.
pub fn stability_general(
    ideal: &Ideal,
    weights: &[WeightVector],
    opts: &GeneralOptions,
) -> Result<Certificate, TropicalError> {
    let n = ideal.nvars();
    let mut cert = Certificate::new(CertificateKind::Inconclusive, opts.seed);
    let mut tries: Vec<WeightVector> = Vec::new();
    for w in weights {
        if w.is_all_positive() {
            tries.push(w.clone());
        } else {
            cert.notes.push(format!("weight {w} is not positive and is skipped"));
        }
    }
    if weights.is_empty() {
        tries.push(WeightVector::ones(n));
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x57ab);
        for _ in 0..opts.refinement_tries.min(8) {
            let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
            tries.push(WeightVector::from_ints(&w));
        }
    }
    for w in &tries {
        let r = classify_weight(ideal, w, opts)?;
        if r.real_radical != RealRadical::Yes {
            continue;
        }
        let Some(rule) = general_rule(&r.evidence, opts) else {
            continue;
        };
        let wi = w.primitive_i64()?;
        for rule in [rule, Rule::PositiveWeight] {
            cert.push(Step {
                cone: None,
                weight: wi.clone(),
                initial_forms: r.initial_forms.clone(),
                rule,
            });
        }
        cert.kind = CertificateKind::Stable;
        cert.bound = Some(bound_for(&wi)?);
        cert.witnesses.push(wi);
        return Ok(cert);
    }
    cert.notes.push(format!(
        "none of {} positive weights gave a certified real radical initial ideal; this does not show instability",
        tries.len()
    ));
    Ok(cert)
}

/// Dispatch: principal ideals without explicit weights use their full
/// normal fan, everything else the per-weight search.
pub fn stability_certificate(
    ideal: &Ideal,
    weights: &[WeightVector],
    opts: &GeneralOptions,
) -> Result<Certificate, TropicalError> {
    if weights.is_empty() {
        if let Some(f) = principal_generator(ideal)? {
            let pc = classify_principal(
                &f,
                &ClassifyOptions {
                    seed: opts.seed,
                    samples: opts.samples,
                },
            )?;
            return stability_principal(&pc);
        }
    }
    stability_general(ideal, weights, opts)
}
