use serde::Serialize;

use super::representation::{verify_representation, QMRepresentation};
use super::SosError;
use crate::groebner::{divide, Ideal, MonomialOrder, TieBreak};
use crate::poly::{Polynomial, Rational, WeightVector};
use crate::tropical::{classify_weight, stability_bound, Evidence, GeneralOptions, RealRadical};

/// What licenses cancelling top-degree squares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisAssertion {
    /// `In_w(I)` is certified real radical by the classifier; only valid
    /// without inequality generators.
    RealRadicalInitialIdeal,
    /// The user asserts that the `In_w(g_i)` form a quadratic-module basis
    /// modulo `In_w(I)`. Not verified; the rewriter may falsify it.
    QmBasis { text: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Iteration {
    #[serde(serialize_with = "crate::ser::rational")]
    pub max_w_degree: Rational,
    pub active: Vec<(usize, usize)>,
    #[serde(serialize_with = "crate::ser::polynomial")]
    pub top_sum: Polynomial,
    /// `In_w(y_ij)` for the active pairs.
    #[serde(serialize_with = "crate::ser::polynomials")]
    pub cancelled: Vec<Polynomial>,
    /// Ideal elements `z_ij` with `In_w(z_ij) = In_w(y_ij)`.
    #[serde(serialize_with = "crate::ser::polynomials")]
    pub lifts: Vec<Polynomial>,
    #[serde(serialize_with = "crate::ser::opt_rational")]
    pub new_max_w_degree: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    #[serde(serialize_with = "crate::ser::weight")]
    pub weight: WeightVector,
    pub assertion: BasisAssertion,
    /// Classifier evidence for the real-radical assertion; empty for a
    /// user assertion.
    pub certification: Vec<Evidence>,
    /// `deg_w(f)`; `None` for `f = 0`.
    #[serde(serialize_with = "crate::ser::opt_rational")]
    pub target_w_degree: Option<Rational>,
    pub iterations: Vec<Iteration>,
    #[serde(serialize_with = "crate::ser::opt_rational")]
    pub final_max_w_degree: Option<Rational>,
    pub final_max_total_degree: Option<u64>,
    /// `⌈(w_max / w_min) · deg f⌉`.
    pub total_degree_bound: u64,
}

/// Rewrite a verified representation of `f` modulo `I` until every
/// `deg_w(g_i y_ij²)` is at most `deg_w(f)`.
///
/// Each round takes the pairs of maximal `w`-degree, checks that the sum of
/// their top parts lies in `In_w(I)`, lifts each `In_w(y_ij)` to an ideal
/// element `z_ij` over a `w`-Gröbner basis and replaces `y_ij` by
/// `y_ij − z_ij`, moving the difference into `h`.
pub fn reduce_degree(
    f: &Polynomial,
    rep: &QMRepresentation,
    ideal: &Ideal,
    w: &WeightVector,
    assertion: &BasisAssertion,
) -> Result<(QMRepresentation, ReductionTrace), SosError> {
    if w.dim() != f.nvars() || !w.is_all_positive() {
        return Err(SosError::NonPositiveWeight(w.to_string()));
    }
    let v = verify_representation(f, rep, ideal)?;
    if !v.passed {
        return Err(SosError::NotVerified {
            discrepancy: v.discrepancy.to_string(),
            h_in_ideal: v.h_in_ideal,
        });
    }
    let mut certification = Vec::new();
    match assertion {
        BasisAssertion::RealRadicalInitialIdeal => {
            if !rep.generators.is_empty() {
                return Err(SosError::NotCertified(format!(
                    "{w} (real radicality covers σ_0 only; {} generators present)",
                    rep.generators.len()
                )));
            }
            let report = classify_weight(ideal, w, &GeneralOptions::default())?;
            if report.real_radical != RealRadical::Yes {
                return Err(SosError::NotCertified(w.to_string()));
            }
            certification = report.evidence;
        }
        BasisAssertion::QmBasis { .. } => {}
    }

    let order = MonomialOrder::new(w.clone(), TieBreak::Grlex)?;
    let gb = ideal.groebner_basis(&order)?;
    let basis: Vec<Polynomial> = gb.elements().to_vec();
    let initial: Vec<Polynomial> = basis.iter().map(|b| b.initial_form(w)).collect::<Result<_, _>>()?;
    let in_ideal = |p: &Polynomial| divide(p, &initial, &order).1;

    let target = if f.is_zero() { None } else { Some(f.w_degree(w)?) };
    let mut cur = rep.clone();
    let mut iterations = Vec::new();
    while let Some(d) = cur.max_w_degree(w)? {
        if target.as_ref().is_some_and(|t| d <= *t) {
            break;
        }
        let mut active = Vec::new();
        for (i, j) in cur.terms().collect::<Vec<_>>() {
            if cur.term_w_degree(i, j, w)? == d {
                active.push((i, j));
            }
        }
        let mut top_sum = Polynomial::zero(f.ring());
        let mut tops = Vec::new();
        for &(i, j) in &active {
            let t = cur.squares[i][j].initial_form(w)?;
            top_sum = &top_sum + &(&cur.generator(i).initial_form(w)? * &(&t * &t));
            tops.push(t);
        }
        if !in_ideal(&top_sum).is_zero() {
            return Err(SosError::IdentityInconsistent {
                top_sum: top_sum.to_string(),
                degree: d.to_string(),
            });
        }
        let mut lifts = Vec::new();
        for (&(i, j), t) in active.iter().zip(&tops) {
            let (quotients, rem) = divide(t, &initial, &order);
            if !rem.is_zero() {
                return Err(SosError::BasisViolation {
                    top_sum: top_sum.to_string(),
                    i,
                    j,
                    initial_form: t.to_string(),
                });
            }
            let z = quotients
                .iter()
                .zip(&basis)
                .fold(Polynomial::zero(f.ring()), |acc, (m, b)| &acc + &(m * b));
            let y = cur.squares[i][j].clone();
            let y_new = &y - &z;
            let correction = &cur.generator(i) * &(&(&y * &y) - &(&y_new * &y_new));
            cur.h = &cur.h + &correction;
            cur.squares[i][j] = y_new;
            lifts.push(z);
        }
        let new_max = cur.max_w_degree(w)?;
        if new_max.as_ref().is_some_and(|n| *n >= d) {
            return Err(SosError::IdentityInconsistent {
                top_sum: top_sum.to_string(),
                degree: d.to_string(),
            });
        }
        iterations.push(Iteration {
            max_w_degree: d,
            active,
            top_sum,
            cancelled: tops,
            lifts,
            new_max_w_degree: new_max,
        });
    }
    for l in cur.squares.iter_mut() {
        l.retain(|y| !y.is_zero());
    }
    let trace = ReductionTrace {
        weight: w.clone(),
        assertion: assertion.clone(),
        certification,
        target_w_degree: target,
        iterations,
        final_max_w_degree: cur.max_w_degree(w)?,
        final_max_total_degree: cur.max_total_degree(),
        total_degree_bound: stability_bound(w, f.total_degree().unwrap_or(0))?,
    };
    Ok((cur, trace))
}
