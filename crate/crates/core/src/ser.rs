//! Serde helpers that write exact values as their canonical text.

use serde::Serializer;

use crate::poly::{Polynomial, Rational};

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub fn rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

pub fn polynomial<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

pub fn polynomials<S: Serializer>(ps: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

pub fn weight<S: Serializer>(w: &crate::poly::WeightVector, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(w)
}

pub fn opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}
