use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::chain::{verify_chain, ChainCheck};
use super::sample::{replay_sample, search_rstar_zero};
use super::TropicalError;
use crate::groebner::repeated_factor;
use crate::linalg;
use crate::lp;
use crate::newton::{newton_polytope, normal_fan, Cone, EdgeData, Fan};
use crate::poly::{ExponentVector, Polynomial, Rational, WeightVector};
use crate::realroots::{count_real_roots, edge_has_rstar_zero, is_univariate_real_radical, RootRange};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RealRadical {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RstarVerdict {
    In,
    Out,
    Unknown,
}

impl fmt::Display for RealRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealRadical::Yes => "YES",
            RealRadical::No => "NO",
            RealRadical::Unknown => "UNKNOWN",
        })
    }
}

impl fmt::Display for RstarVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RstarVerdict::In => "IN",
            RstarVerdict::Out => "OUT",
            RstarVerdict::Unknown => "UNKNOWN",
        })
    }
}

/// Why a verdict was reached. Every variant can be rechecked exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// The initial form is a single term.
    Monomial { exponent: ExponentVector, squarefree: bool },
    /// Edge of the Newton polytope with its univariate polynomial.
    Edge {
        edge: EdgeData,
        #[serde(serialize_with = "crate::ser::polynomial")]
        u: Polynomial,
        real_roots: usize,
        positive_roots: usize,
        negative_roots: usize,
        distinct_real: bool,
    },
    /// Total degree one: the ideal of a hyperplane.
    LinearForm,
    /// A nonconstant common factor of the form and all its partials.
    RepeatedFactor {
        #[serde(serialize_with = "crate::ser::polynomial")]
        factor: Polynomial,
    },
    /// A further initial ideal at a nonnegative weight is real radical.
    FurtherInitialRealRadical { from_cone: Option<usize>, weight: Vec<i64> },
    /// The ideal contains no monomial and is real radical, so its cone lies
    /// in the real tropical variety.
    RealRadicalInTrop,
    /// A cone having this one as a face is in the real tropical variety.
    InheritedFromCone { cone: usize },
    /// Nonzero real roots of the restriction to a coordinate line.
    RstarSample {
        variable: String,
        point: Vec<String>,
        positive_roots: usize,
        negative_roots: usize,
        vanishes_on_line: bool,
    },
    /// No witness found within the sampling budget.
    SearchExhausted { samples: usize },
    /// A squarefree monomial further initial ideal.
    SquarefreeMonomialRefinement {
        weight: Vec<i64>,
        #[serde(serialize_with = "crate::ser::polynomials")]
        initial_ideal: Vec<Polynomial>,
    },
    /// A user assertion accepted without proof.
    Assertion { text: String },
}

impl Evidence {
    /// Recheck a sampled torus zero against `form`; `None` for other kinds.
    pub fn recheck_sample(&self, form: &Polynomial) -> Option<bool> {
        match self {
            Evidence::RstarSample { variable, point, .. } => Some(replay_sample(form, variable, point)),
            _ => None,
        }
    }
}

/// Classification of one cone (or one weight) of the Gröbner fan.
#[derive(Clone, Debug, Serialize)]
pub struct ConeReport {
    pub cone_id: Option<usize>,
    pub dim: Option<usize>,
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
    pub dual_face_dim: Option<usize>,
    pub dual_face_vertices: Vec<ExponentVector>,
    #[serde(serialize_with = "crate::ser::weight")]
    pub weight: WeightVector,
    #[serde(serialize_with = "crate::ser::polynomials")]
    pub initial_forms: Vec<Polynomial>,
    pub is_monomial: bool,
    pub squarefree_monomial: Option<bool>,
    pub in_trop: bool,
    pub in_trop_rstar: RstarVerdict,
    pub real_radical: RealRadical,
    /// Membership in the real-radical part of the tropical variety.
    pub trop_rad: RealRadical,
    pub edge_flagged: bool,
    pub evidence: Vec<Evidence>,
    pub notes: Vec<String>,
}

impl ConeReport {
    pub(crate) fn settle_trop_rad(&mut self) {
        self.trop_rad = if !self.in_trop {
            RealRadical::No
        } else {
            self.real_radical
        };
        if self.trop_rad == RealRadical::Yes && self.in_trop_rstar != RstarVerdict::In {
            self.in_trop_rstar = RstarVerdict::In;
            self.evidence.push(Evidence::RealRadicalInTrop);
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { seed: 1, samples: 1000 }
    }
}

/// Reports for every cone of the normal fan of a principal generator.
#[derive(Clone, Debug, Serialize)]
pub struct PrincipalClassification {
    #[serde(serialize_with = "crate::ser::polynomial")]
    pub polynomial: Polynomial,
    pub seed: u64,
    pub samples: usize,
    pub reports: Vec<ConeReport>,
    pub trop: Vec<usize>,
    pub trop_rstar: Vec<usize>,
    pub trop_rstar_unknown: Vec<usize>,
    pub trop_rad: Vec<usize>,
    pub trop_rad_unknown: Vec<usize>,
    pub chain: ChainCheck,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub fan: Fan,
}

impl PrincipalClassification {
    pub fn report(&self, id: usize) -> Option<&ConeReport> {
        self.reports.get(id)
    }

    pub fn ambient_dim(&self) -> usize {
        self.polynomial.nvars()
    }

    /// Report of the cone containing `w` in its relative interior.
    pub fn report_at(&self, w: &WeightVector) -> &ConeReport {
        &self.reports[self.fan.cone_containing(w).id]
    }
}

fn base_report(f: &Polynomial, cone: &Cone) -> Result<ConeReport, TropicalError> {
    let n = f.nvars();
    let w = cone.interior_point(n);
    let form = f.initial_form(&w)?;
    let mut r = ConeReport {
        cone_id: Some(cone.id),
        dim: Some(cone.dim),
        rays: cone.rays.clone(),
        lineality: cone.lineality.clone(),
        dual_face_dim: Some(cone.dual_face_dim()),
        dual_face_vertices: cone.dual_face_vertices.clone(),
        weight: w,
        initial_forms: vec![form.clone()],
        is_monomial: form.is_monomial(),
        squarefree_monomial: None,
        in_trop: cone.dual_face_dim() >= 1,
        in_trop_rstar: RstarVerdict::Unknown,
        real_radical: RealRadical::Unknown,
        trop_rad: RealRadical::Unknown,
        edge_flagged: false,
        evidence: Vec::new(),
        notes: Vec::new(),
    };
    match cone.dual_face_dim() {
        0 => {
            let e = form.support().next().expect("nonzero form").clone();
            let sq = e.is_squarefree();
            r.squarefree_monomial = Some(sq);
            r.real_radical = if sq { RealRadical::Yes } else { RealRadical::No };
            r.in_trop_rstar = RstarVerdict::Out;
            r.evidence.push(Evidence::Monomial {
                exponent: e,
                squarefree: sq,
            });
        }
        1 => {
            let (p, q) = (&cone.dual_face_vertices[0], &cone.dual_face_vertices[1]);
            let edge = EdgeData::from_endpoints(f, p, q);
            let (distinct_real, has_rstar) = edge_verdicts(&edge)?;
            r.real_radical = match edge.squared_variable {
                Some(i) => {
                    r.notes.push(format!(
                        "{}^2 divides the initial form",
                        f.ring().names()[i]
                    ));
                    RealRadical::No
                }
                None if distinct_real => RealRadical::Yes,
                None => RealRadical::No,
            };
            r.in_trop_rstar = if has_rstar {
                RstarVerdict::In
            } else {
                RstarVerdict::Out
            };
            if edge.flagged {
                r.edge_flagged = true;
                r.notes.push(
                    "an endpoint exponent equals 1; the univariate criterion is applied as stated"
                        .into(),
                );
            }
            r.evidence.push(edge_evidence(edge)?);
        }
        _ => {
            if form.total_degree() == Some(1) {
                r.real_radical = RealRadical::Yes;
                r.evidence.push(Evidence::LinearForm);
            } else if let Some(factor) = repeated_factor(&form)? {
                r.real_radical = RealRadical::No;
                r.evidence.push(Evidence::RepeatedFactor { factor });
            }
        }
    }
    Ok(r)
}

/// Whether `u` has distinct real roots only, and whether the edge form has a
/// zero in the real torus.
pub(crate) fn edge_verdicts(edge: &EdgeData) -> Result<(bool, bool), TropicalError> {
    let u = edge.univariate();
    Ok((is_univariate_real_radical(&u)?, edge_has_rstar_zero(&u, &edge.v)?))
}

pub(crate) fn edge_evidence(edge: EdgeData) -> Result<Evidence, TropicalError> {
    let u = edge.univariate();
    Ok(Evidence::Edge {
        u: u.to_polynomial(&crate::poly::Ring::new(&["t"]).expect("valid name"), 0),
        real_roots: count_real_roots(&u, &RootRange::All)?,
        positive_roots: count_real_roots(&u, &RootRange::Positive)?,
        negative_roots: count_real_roots(&u, &RootRange::Negative)?,
        distinct_real: is_univariate_real_radical(&u)?,
        edge,
    })
}

/// Classify a single cone of the normal fan of `f` from its own data:
/// vertex and edge cones are decided outright, higher faces only by the
/// linear-form and repeated-factor rules.
pub fn classify_cone(f: &Polynomial, cone: &Cone) -> Result<ConeReport, TropicalError> {
    let np = newton_polytope(f)?;
    let fan = normal_fan(&np);
    let ours = fan.cones().get(cone.id).filter(|c| *c == cone);
    let Some(c) = ours else {
        return Err(TropicalError::ForeignCone(cone.id));
    };
    let mut r = base_report(f, c)?;
    r.settle_trop_rad();
    Ok(r)
}

/// A nonnegative `v` whose face on the dual face of `small` is exactly the
/// dual face of `big`, where `small` is a face of `big`.
pub(crate) fn nonnegative_refinement(fan: &Fan, small: &Cone, big: &Cone) -> Option<Vec<i64>> {
    let strict: Vec<Vec<Rational>> = big.rays.iter().map(|r| linalg::from_i64(r)).collect();
    let mut free: Vec<Vec<Rational>> = small.rays.iter().map(|r| linalg::from_i64(r)).collect();
    free.extend(small.lineality.iter().map(|r| linalg::from_i64(r)));
    let n = fan.ambient_dim();
    let lower = vec![Some(Rational::from_integer(0.into())); n];
    let v = lp::cone_point(&strict, &free, &lower, true)?;
    let v = linalg::primitive_i64(&v)?;
    let vw = WeightVector::from_ints(&v);
    let verts = fan.polytope().vertices();
    let vals: Vec<Rational> = small.dual_face.vertices.iter().map(|&i| vw.dot(&verts[i])).collect();
    let best = vals.iter().max()?;
    let argmax: Vec<usize> = small
        .dual_face
        .vertices
        .iter()
        .zip(&vals)
        .filter(|(_, x)| *x == best)
        .map(|(i, _)| *i)
        .collect();
    (argmax == big.dual_face.vertices).then_some(v)
}

/// Classify every cone of the normal fan of `f`.
///
/// Vertex and edge cones are decided in parallel first. Higher faces are
/// then settled in order of increasing face dimension: real radicality by a
/// real-radical further initial ideal at a nonnegative weight, membership
/// in the real tropical variety by inheritance from a cone containing this
/// one, and otherwise by a seeded search for torus zeros.
pub fn classify_principal(f: &Polynomial, opts: &ClassifyOptions) -> Result<PrincipalClassification, TropicalError> {
    let np = newton_polytope(f)?;
    let fan = normal_fan(&np);
    let mut reports: Vec<ConeReport> = fan
        .cones()
        .par_iter()
        .map(|c| base_report(f, c))
        .collect::<Result<_, _>>()?;
    for r in reports.iter_mut().filter(|r| r.dual_face_dim.unwrap_or(0) <= 1) {
        r.settle_trop_rad();
    }

    let max_face_dim = fan.cones().iter().map(|c| c.dual_face_dim()).max().unwrap_or(0);
    for level in 2..=max_face_dim {
        let ids: Vec<usize> = fan
            .cones()
            .iter()
            .filter(|c| c.dual_face_dim() == level)
            .map(|c| c.id)
            .collect();
        let mut to_search = Vec::new();
        for &id in &ids {
            let cone = &fan.cones()[id];
            let containing: Vec<&Cone> = fan
                .cones()
                .iter()
                .filter(|d| d.faces.contains(&id))
                .collect();
            if reports[id].real_radical == RealRadical::Unknown {
                for d in &containing {
                    if reports[d.id].real_radical != RealRadical::Yes {
                        continue;
                    }
                    if let Some(v) = nonnegative_refinement(&fan, cone, d) {
                        reports[id].real_radical = RealRadical::Yes;
                        reports[id].evidence.push(Evidence::FurtherInitialRealRadical {
                            from_cone: Some(d.id),
                            weight: v,
                        });
                        break;
                    }
                }
            }
            reports[id].settle_trop_rad();
            if reports[id].in_trop_rstar == RstarVerdict::Unknown {
                if let Some(d) = containing
                    .iter()
                    .find(|d| reports[d.id].in_trop_rstar == RstarVerdict::In)
                {
                    reports[id].in_trop_rstar = RstarVerdict::In;
                    reports[id].evidence.push(Evidence::InheritedFromCone { cone: d.id });
                } else {
                    to_search.push(id);
                }
            }
        }
        let found: Vec<(usize, Option<Evidence>)> = to_search
            .par_iter()
            .map(|&id| {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                (id, search_rstar_zero(&reports[id].initial_forms[0], opts.samples, &mut rng))
            })
            .collect();
        for (id, ev) in found {
            match ev {
                Some(e) => {
                    reports[id].in_trop_rstar = RstarVerdict::In;
                    reports[id].evidence.push(e);
                }
                None => {
                    reports[id].evidence.push(Evidence::SearchExhausted { samples: opts.samples });
                    reports[id]
                        .notes
                        .push("no torus zero found; faces of dimension two or more are never declared OUT".into());
                }
            }
        }
    }

    let pick = |pred: &dyn Fn(&ConeReport) -> bool| -> Vec<usize> {
        reports
            .iter()
            .filter(|r| pred(r))
            .filter_map(|r| r.cone_id)
            .collect()
    };
    let trop = pick(&|r| r.in_trop);
    let trop_rstar = pick(&|r| r.in_trop_rstar == RstarVerdict::In);
    let trop_rstar_unknown = pick(&|r| r.in_trop_rstar == RstarVerdict::Unknown);
    let trop_rad = pick(&|r| r.trop_rad == RealRadical::Yes);
    let trop_rad_unknown = pick(&|r| r.trop_rad == RealRadical::Unknown);
    let chain = verify_chain(&reports);
    let mut notes = Vec::new();
    if trop.is_empty() {
        notes.push("the input is a monomial, so its tropical variety is empty".into());
    }
    Ok(PrincipalClassification {
        polynomial: f.clone(),
        seed: opts.seed,
        samples: opts.samples,
        reports,
        trop,
        trop_rstar,
        trop_rstar_unknown,
        trop_rad,
        trop_rad_unknown,
        chain,
        notes,
        fan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn classify(vars: &[&str], s: &str) -> PrincipalClassification {
        let r = Ring::new(vars).unwrap();
        classify_principal(&r.parse(s).unwrap(), &ClassifyOptions::default()).unwrap()
    }

    fn ray_ids(c: &PrincipalClassification, ids: &[usize]) -> Vec<Vec<Vec<i64>>> {
        ids.iter().map(|&i| c.reports[i].rays.clone()).collect()
    }

    #[test]
    fn circle_through_origin() {
        let c = classify(&["x", "y"], "x^2+y^2-1");
        assert_eq!(ray_ids(&c, &c.trop_rad), vec![vec![vec![-1, 0]], vec![vec![0, -1]]]);
        assert!(c.chain.passed);
    }

    #[test]
    fn shifted_circle_is_out_away_from_origin() {
        let c = classify(&["x", "y"], "(x-2)^2+(y-2)^2-1");
        for r in &c.reports {
            if r.dim != Some(0) {
                assert_eq!(r.in_trop_rstar, RstarVerdict::Out, "cone {:?}", r.cone_id);
            }
        }
        assert_eq!(c.trop_rstar.len(), 1);
    }

    #[test]
    fn quartic_curve() {
        let c = classify(&["x", "y"], "x^4+x^2*y^2-1");
        assert_eq!(ray_ids(&c, &c.trop_rad), vec![vec![vec![-1, 1]]]);
    }

    #[test]
    fn binomial_with_real_zeros() {
        let c = classify(&["x", "y"], "x^2*y^2-1");
        for &id in &c.trop {
            assert_eq!(c.reports[id].in_trop_rstar, RstarVerdict::In);
        }
    }

    #[test]
    fn monomial_has_empty_trop() {
        let c = classify(&["x", "y"], "x*y^2");
        assert!(c.trop.is_empty());
        assert_eq!(c.notes.len(), 1);
    }

    #[test]
    fn line_through_diagonal() {
        let c = classify(&["x", "y"], "x+y");
        assert_eq!(c.trop.len(), 1);
        let r = &c.reports[c.trop[0]];
        assert!(r.rays.is_empty());
        assert_eq!(r.lineality, vec![vec![1, 1]]);
        assert_eq!(r.trop_rad, RealRadical::Yes);
    }

    #[test]
    fn single_cone_classification() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let f = r.parse("(x-y-z)^4+(x-y-1)^2").unwrap();
        let fan = normal_fan(&newton_polytope(&f).unwrap());
        let s23 = fan
            .cones()
            .iter()
            .find(|c| c.rays == vec![vec![-1, 0, 0], vec![0, -1, 0]])
            .unwrap();
        let rep = classify_cone(&f, s23).unwrap();
        assert_eq!(rep.initial_forms[0], r.parse("z^4+1").unwrap());
        assert_eq!(rep.in_trop_rstar, RstarVerdict::Out);
        let other = normal_fan(&newton_polytope(&r.parse("x+y+z").unwrap()).unwrap());
        assert!(classify_cone(&f, &other.cones()[1]).is_err());
    }
}
