#![allow(dead_code)]

use proptest::prelude::*;

use promislow::algebra::{Coeff, LaurentPoly, Modulus, Monomial};
use promislow::group::{PElement, QElement};
use promislow::groupring::RingElemP;

pub fn modulus() -> impl Strategy<Value = Modulus> {
    prop_oneof![Just(2u32), Just(3), Just(5)].prop_map(|p| Modulus::new(p).unwrap())
}

pub fn pelement(bound: i64) -> impl Strategy<Value = PElement> {
    (-bound..=bound, -bound..=bound, -bound..=bound, 0usize..4)
        .prop_map(|(m, n, k, g)| PElement::new(m, n, k, QElement::from_index(g)))
}

pub fn ring_element(m: Modulus, max_terms: usize) -> impl Strategy<Value = RingElemP> {
    prop::collection::vec((pelement(2), 1..m.get()), 0..=max_terms).prop_map(move |terms| {
        RingElemP::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (e, Coeff::new(c as i128, m))),
            m,
        )
    })
}

/// Polynomial in v, w, z (half-integer x, y exponents allowed).
pub fn half_poly(m: Modulus, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        ((-4i64..=4, -4i64..=4, -3i64..=3), 0..m.get()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|((i, j, k), c)| (Monomial::new(i, j, k), c as i128)),
            m,
        )
    })
}

/// `(modulus, elements...)` with all elements over the same field.
pub fn triple(max_terms: usize) -> impl Strategy<Value = (RingElemP, RingElemP, RingElemP)> {
    modulus().prop_flat_map(move |m| {
        (
            ring_element(m, max_terms),
            ring_element(m, max_terms),
            ring_element(m, max_terms),
        )
    })
}
