//! Derived values checked against independent computations (evaluation,
//! direct degree comparison) rather than the code paths that produce them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropreal::groebner::Ideal;
use tropreal::sos::{verify_representation, QMRepresentation};
use tropreal::tropical::{
    classify_principal, maximal_minors, stability_bound, stability_principal, CertificateKind, ClassifyOptions,
    Evidence, RstarVerdict,
};
use tropreal::{Rational, Ring, WeightVector};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[test]
fn line_trop_is_the_tie_locus() {
    let r = Ring::new(&["x", "y"]).unwrap();
    let pc = classify_principal(&r.parse("x+y").unwrap(), &ClassifyOptions::default()).unwrap();
    assert_eq!(pc.trop.len(), 1);
    let cone = &pc.fan.cones()[pc.trop[0]];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let a = rng.gen_range(-5..=5);
        let b = if rng.gen_bool(0.3) { a } else { rng.gen_range(-5..=5) };
        // Both terms attain the maximum exactly when a = b.
        assert_eq!(cone.contains_in_relint(&WeightVector::from_ints(&[a, b])), a == b);
    }
    assert_eq!(pc.reports[pc.trop[0]].lineality, vec![vec![1, 1]]);
}

#[test]
fn binomial_with_real_zero_is_in() {
    let r = Ring::new(&["x", "y"]).unwrap();
    let f = r.parse("x^2*y^2-1").unwrap();
    assert_eq!(f.eval(&[q(1), q(1)]), q(0));
    let pc = classify_principal(&f, &ClassifyOptions::default()).unwrap();
    for &id in &pc.trop {
        assert_eq!(pc.reports[id].in_trop_rstar, RstarVerdict::In);
    }
}

#[test]
fn parabola_witness() {
    let r = Ring::new(&["x", "y"]).unwrap();
    let f = r.parse("x - y^2").unwrap();
    // w = (2,1): deg x = 2 = deg y^2, so both terms survive.
    let w = WeightVector::from_ints(&[2, 1]);
    assert_eq!(f.initial_form(&w).unwrap(), f);
    let pc = classify_principal(&f, &ClassifyOptions::default()).unwrap();
    let c = stability_principal(&pc).unwrap();
    assert_eq!(c.kind, CertificateKind::Stable);
    assert_eq!(c.witnesses, vec![vec![2, 1]]);
    let report = pc.report_at(&w);
    let u = report
        .evidence
        .iter()
        .find_map(|e| match e {
            Evidence::Edge { u, .. } => Some(u.clone()),
            _ => None,
        })
        .unwrap();
    // u(t) = t − 1 vanishes at 1 only, and is linear.
    assert_eq!(u.eval(&[q(1)]), q(0));
    assert_eq!(u.total_degree(), Some(1));
}

#[test]
fn quartic_all_ones_form_is_x4() {
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    let f = r.parse("x^4 - x^3 + y^2 + z^2").unwrap();
    // Degrees 4, 3, 2, 2 under (1,1,1).
    assert_eq!(f.initial_form(&WeightVector::ones(3)).unwrap(), r.parse("x^4").unwrap());
    let pc = classify_principal(&f, &ClassifyOptions::default()).unwrap();
    assert_eq!(stability_principal(&pc).unwrap().kind, CertificateKind::Inconclusive);
}

#[test]
fn bound_values() {
    assert_eq!(stability_bound(&WeightVector::ones(3), 6).unwrap(), 6);
    assert_eq!(stability_bound(&WeightVector::from_ints(&[2, 1]), 3).unwrap(), 6);
    assert_eq!(stability_bound(&WeightVector::from_ints(&[3, 2]), 4).unwrap(), 6);
}

#[test]
fn linear_representation_by_evaluation() {
    let r = Ring::new(&["x", "y"]).unwrap();
    let p = |s: &str| r.parse(s).unwrap();
    let rep = QMRepresentation::sos(vec![p("x-y+1")], p("-(x-y)^2"));
    let f = p("2*x-2*y+1");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let (a, b) = (q(rng.gen_range(-20..=20)), q(rng.gen_range(-20..=20)));
        let s = &a - &b + q(1);
        let lhs = &s * &s - (&a - &b) * (&a - &b);
        assert_eq!(lhs, f.eval(&[a, b]));
    }
    let i = Ideal::principal(p("x-y")).unwrap();
    assert!(verify_representation(&f, &rep, &i).unwrap().passed);
}

#[test]
fn minors_match_determinants_numerically() {
    let (r, g) = maximal_minors(2, 4);
    assert_eq!(g.len(), 6);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let m: Vec<Rational> = (0..8).map(|_| q(rng.gen_range(-9..=9))).collect();
    let mut k = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            let det = &m[a] * &m[4 + b] - &m[b] * &m[4 + a];
            assert_eq!(g[k].eval(&m), det, "columns {a},{b}");
            assert!(g[k].support().all(|e| e.is_squarefree()));
            k += 1;
        }
    }
    assert_eq!(r.nvars(), 8);
}
