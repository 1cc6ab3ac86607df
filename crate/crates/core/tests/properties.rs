//! Randomized invariants with fixed case counts.

use proptest::prelude::*;
use tropreal::groebner::Ideal;
use tropreal::newton::{newton_polytope, normal_fan};
use tropreal::realroots::{count_real_roots, RootRange, UnivariatePolynomial};
use tropreal::tropical::{classify_principal, verify_chain, ClassifyOptions, RealRadical, RstarVerdict};
use tropreal::{ExponentVector, Polynomial, Rational, Ring, SignVector, WeightVector};

fn ring(n: usize) -> Ring {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    Ring::new(&names).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), (-5i64..=5).prop_filter("nonzero", |c| *c != 0)),
        1..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            &ring(n),
            terms.into_iter().map(|(e, c)| (ExponentVector::new(e), q(c))),
        )
    })
    .prop_filter("nonzero", |p| !p.is_zero())
}

fn weight(n: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec((-6i64..=6, 1i64..=3), n)
        .prop_map(|v| WeightVector::new(v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect()))
}

fn int_weight(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, n)
}

/// Count sign changes of `u` on a rational grid with spacing `h` over
/// `[lo, hi]`, skipping exact zeros. Correct for squarefree `u` when the
/// grid is finer than the gap between roots and contains none of them.
fn grid_sign_changes(u: &UnivariatePolynomial, lo: &Rational, hi: &Rational, h: &Rational) -> usize {
    let mut changes = 0;
    let mut prev = 0i8;
    let mut x = lo.clone();
    while &x <= hi {
        let s = u.sign_at(&x);
        if s != 0 {
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        x += h;
    }
    changes
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn initial_form_is_multiplicative(f in poly(3, 3, 4), g in poly(3, 3, 4), w in weight(3)) {
        let lhs = (&f * &g).initial_form(&w).unwrap();
        let rhs = &f.initial_form(&w).unwrap() * &g.initial_form(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_round_trip(f in poly(3, 4, 6)) {
        let back = f.ring().parse(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Roots are distinct integers `r_i` placed on a grid of half-integers,
    /// with multiplicities, times a positive quadratic `(t − a)² + b`.
    #[test]
    fn sturm_counts_match_grid_oracle(
        roots in prop::collection::btree_set(-8i64..=8, 0..5),
        mults in prop::collection::vec(1u32..=3, 5),
        a in -4i64..=4,
        b in 1i64..=5,
        with_quadratic in any::<bool>(),
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let mut u = UnivariatePolynomial::one();
        let mut simple = UnivariatePolynomial::one();
        for (r, m) in roots.iter().zip(&mults) {
            let lin = UnivariatePolynomial::from_i64(&[-r, 1]);
            u = &u * &lin.pow(*m);
            simple = &simple * &lin;
        }
        if with_quadratic {
            let quad = UnivariatePolynomial::from_i64(&[a * a + b, -2 * a, 1]);
            u = &u * &quad;
            simple = &simple * &quad;
        }
        let lo = q(-10) + Rational::new(1.into(), 3.into());
        let hi = q(10);
        let h = Rational::new(1.into(), 2.into());
        let oracle = grid_sign_changes(&simple, &lo, &hi, &h);
        prop_assert_eq!(oracle, roots.len());
        prop_assert_eq!(count_real_roots(&u, &RootRange::All).unwrap(), oracle);
        let pos = roots.iter().filter(|&&r| r > 0).count();
        let neg = roots.iter().filter(|&&r| r < 0).count();
        prop_assert_eq!(count_real_roots(&u, &RootRange::Positive).unwrap(), pos);
        prop_assert_eq!(count_real_roots(&u, &RootRange::Negative).unwrap(), neg);
    }

    /// Every weight lies in the relative interior of exactly one cone, and
    /// that cone is dual to the face the weight selects.
    #[test]
    fn normal_fan_is_complete(f in poly(3, 3, 5), w in int_weight(3)) {
        let np = newton_polytope(&f).unwrap();
        let fan = normal_fan(&np);
        let wv = WeightVector::from_ints(&w);
        let hits: Vec<usize> = fan.cones().iter().filter(|c| c.contains_in_relint(&wv)).map(|c| c.id).collect();
        prop_assert_eq!(hits.len(), 1, "w = {:?}, hits {:?}", w, hits);
        prop_assert_eq!(hits[0], fan.cone_containing(&wv).id);
        let form = f.initial_form(&wv).unwrap();
        let expected: Vec<ExponentVector> = np.support_on(&np.face_of(&wv));
        let mut got: Vec<ExponentVector> = form.support().cloned().collect();
        got.sort();
        let mut expected = expected;
        expected.sort();
        prop_assert_eq!(got, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// `In_v(In_w(I)) = In_{w+εv}(I)` for `ε` below the smallest gap of
    /// `w`-degrees divided by the largest change in `v`-degree.
    #[test]
    fn initial_ideals_compose(f in poly(2, 3, 4), w in int_weight(2), v in int_weight(2)) {
        let i = Ideal::principal(f.clone()).unwrap();
        let inner = Ideal::new(i.initial_ideal(&WeightVector::from_ints(&w)).unwrap()).unwrap();
        let lhs = inner.initial_ideal(&WeightVector::from_ints(&v)).unwrap();
        let vmax = v.iter().map(|x| x.abs()).max().unwrap_or(0);
        let eps = Rational::new(1.into(), (1 + 2 * 2 * 3 * 2 * vmax).into());
        let combined = WeightVector::from_ints(&w).add(&WeightVector::from_ints(&v).scale(&eps));
        let rhs = i.initial_ideal(&combined).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        // Principal case: both equal the twice-taken initial form, up to scaling.
        let direct = f.initial_form(&WeightVector::from_ints(&w)).unwrap().initial_form(&WeightVector::from_ints(&v)).unwrap();
        prop_assert_eq!(lhs.len(), 1);
        prop_assert!(lhs[0].is_proportional(&direct));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn chain_invariant_holds(f in poly(2, 4, 5)) {
        prop_assume!(!f.is_monomial());
        let pc = classify_principal(&f, &ClassifyOptions { seed: 7, samples: 60 }).unwrap();
        prop_assert!(pc.chain.passed, "{:?}", pc.chain.violations);
        for r in &pc.reports {
            if r.trop_rad == RealRadical::Yes {
                prop_assert_eq!(r.in_trop_rstar, RstarVerdict::In);
            }
            if r.in_trop_rstar == RstarVerdict::In {
                prop_assert!(r.in_trop);
            }
            if !r.in_trop {
                prop_assert_eq!(r.in_trop_rstar, RstarVerdict::Out);
            }
        }
        prop_assert!(verify_chain(&pc.reports).passed);
    }

    /// Flipping signs of coordinates maps torus zeros onto torus zeros, so
    /// the decided verdicts of vertex and edge cones do not change.
    #[test]
    fn orthant_flip_keeps_edge_verdicts(f in poly(2, 4, 5), signs in prop::collection::vec(any::<bool>(), 2)) {
        prop_assume!(!f.is_monomial());
        let pi = SignVector::new(signs.iter().map(|&s| if s { 1 } else { -1 }).collect()).unwrap();
        let g = f.orthant_flip(&pi).unwrap();
        let opts = ClassifyOptions { seed: 3, samples: 30 };
        let a = classify_principal(&f, &opts).unwrap();
        let b = classify_principal(&g, &opts).unwrap();
        prop_assert_eq!(a.reports.len(), b.reports.len());
        for (x, y) in a.reports.iter().zip(&b.reports) {
            if x.dual_face_dim.unwrap_or(0) <= 1 {
                prop_assert_eq!(x.in_trop_rstar, y.in_trop_rstar);
            }
        }
    }

    #[test]
    fn groebner_basis_contains_generators(f in poly(2, 3, 3), g in poly(2, 3, 3)) {
        let i = Ideal::new(vec![f.clone(), g.clone()]).unwrap();
        prop_assert!(i.contains(&f).unwrap());
        prop_assert!(i.contains(&g).unwrap());
        prop_assert!(i.contains(&(&f * &g)).unwrap());
    }
}
