use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tropreal::groebner::{Ideal, MonomialOrder, TieBreak};
use tropreal::newton::{newton_polytope, normal_fan};
use tropreal::realroots::{count_real_roots, RootRange, UnivariatePolynomial};
use tropreal::tropical::{classify_principal, maximal_minors, stability_certificate, ClassifyOptions, GeneralOptions};
use tropreal::{Ring, WeightVector};

fn dissonance(c: &mut Criterion) {
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    let f = r.parse("(x-y-z)^4 + (x-y-1)^2").unwrap();
    c.bench_function("normal_fan/dissonance", |b| {
        b.iter(|| normal_fan(&newton_polytope(black_box(&f)).unwrap()))
    });
    c.bench_function("classify_principal/dissonance", |b| {
        b.iter(|| classify_principal(black_box(&f), &ClassifyOptions::default()).unwrap())
    });
}

fn groebner(c: &mut Criterion) {
    for n in [3, 4] {
        let (_, g) = maximal_minors(2, n);
        let order = MonomialOrder::new(WeightVector::ones(2 * n), TieBreak::Grlex).unwrap();
        c.bench_function(&format!("buchberger/minors_2x{n}"), |b| {
            // A fresh ideal each time so the basis cache does not hide the work.
            b.iter(|| Ideal::new(g.clone()).unwrap().groebner_basis(&order).unwrap())
        });
        c.bench_function(&format!("stability/minors_2x{n}"), |b| {
            b.iter(|| stability_certificate(&Ideal::new(g.clone()).unwrap(), &[], &GeneralOptions::default()).unwrap())
        });
    }
}

fn sturm(c: &mut Criterion) {
    let mut u = UnivariatePolynomial::one();
    for r in -6..=6 {
        u = &u * &UnivariatePolynomial::from_i64(&[-r, 1]);
    }
    c.bench_function("sturm/degree_13", |b| {
        b.iter(|| count_real_roots(black_box(&u), &RootRange::All).unwrap())
    });
}

criterion_group!(benches, dissonance, groebner, sturm);
criterion_main!(benches);
