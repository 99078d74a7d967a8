mod common;

use proptest::prelude::*;

use common::{half_poly, modulus, pelement};
use promislow::algebra::{Coeff, LaurentPoly, Modulus, TPoly};
use promislow::group::{
    dihedral_word_length, dihedral_word_length_bfs, elements_in_box, DElement, DihedralGenerators,
    PElement, QElement,
};

fn poly_triple() -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    modulus().prop_flat_map(|m| (half_poly(m, 6), half_poly(m, 6), half_poly(m, 6)))
}

fn q() -> impl Strategy<Value = QElement> {
    (0usize..4).prop_map(QElement::from_index)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomials_form_a_commutative_ring((f, g, h) in poly_triple()) {
        let m = f.modulus();
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &LaurentPoly::one(m), f.clone());
        prop_assert!((&f - &f).is_zero());
        prop_assert!((&f * &LaurentPoly::zero(m)).is_zero());
    }

    #[test]
    fn canonical_form_has_no_zero_terms((f, g, _) in poly_triple()) {
        let sum = &f + &g;
        prop_assert!(sum.terms().all(|(_, c)| !c.is_zero()));
        let exps: Vec<_> = sum.exponents().collect();
        prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn action_is_a_ring_automorphism((f, g, _) in poly_triple(), s in q()) {
        prop_assert_eq!((&f * &g).act(s), &f.act(s) * &g.act(s));
        prop_assert_eq!((&f + &g).act(s), &f.act(s) + &g.act(s));
        prop_assert_eq!(f.act(s).act(s), f.clone());
    }

    #[test]
    fn action_composes((f, _, _) in poly_triple(), s in q(), t in q()) {
        prop_assert_eq!(f.act(s).act(t), f.act(s * t));
    }

    #[test]
    fn monomials_are_the_ring_units((f, _, _) in poly_triple()) {
        match f.ring_inverse() {
            Some(inv) => prop_assert!((&f * &inv).is_one()),
            None => prop_assert!(f.as_monomial().is_none()),
        }
    }

    #[test]
    fn group_inverse_and_powers(g in pelement(4), n in -4i64..=4) {
        prop_assert!((g * g.inv()).is_identity());
        prop_assert!((g.inv() * g).is_identity());
        prop_assert_eq!(g.pow(n) * g, g.pow(n + 1));
        prop_assert_eq!(g.pow(-n), g.pow(n).inv());
    }

    #[test]
    fn projections_are_homomorphisms(g in pelement(4), h in pelement(4)) {
        prop_assert_eq!((g * h).project_dihedral(), g.project_dihedral() * h.project_dihedral());
        prop_assert_eq!((g * h).project_mod_xy(), g.project_mod_xy() * h.project_mod_xy());
    }

    #[test]
    fn conjugation_is_an_automorphism(g in pelement(3), h in pelement(3), w in pelement(3)) {
        prop_assert_eq!((g * h).conjugate(w), g.conjugate(w) * h.conjugate(w));
    }

    #[test]
    fn tpoly_reflection(c in prop::collection::vec((-6i64..=6, 0i128..3), 0..6)) {
        let m = Modulus::new(3).unwrap();
        let f = TPoly::from_terms(c, m);
        prop_assert_eq!(f.reflect().reflect(), f.clone());
        prop_assert_eq!(f.reflect().len(), f.len());
    }
}

#[test]
fn associativity_on_the_unit_box() {
    let elems = elements_in_box(1);
    assert_eq!(elems.len(), 108);
    let mut triples = 0u64;
    for &g in &elems {
        for &h in &elems {
            let gh = g * h;
            for &k in &elems {
                assert_eq!(gh * k, g * (h * k), "{g} {h} {k}");
                triples += 1;
            }
        }
    }
    assert_eq!(triples, 1_259_712);
}

#[test]
fn presentation_relations() {
    let (a, b) = (PElement::a(), PElement::b());
    assert_eq!(b.inv() * a.pow(2) * b, a.pow(-2));
    assert_eq!(a.inv() * b.pow(2) * a, b.pow(-2));
    assert_eq!(a.pow(2), PElement::lattice(1, 0, 0));
    assert_eq!(b.pow(2), PElement::lattice(0, 1, 0));
    assert_eq!((a * b).pow(2), PElement::lattice(0, 0, 1));
}

#[test]
fn conjugating_the_lattice_applies_the_action() {
    for g in elements_in_box(1) {
        for u in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            let t = PElement::lattice(u[0], u[1], u[2]);
            let [m, n, k] = g.g.act(u);
            assert_eq!(g * t * g.inv(), PElement::lattice(m, n, k));
        }
    }
}

#[test]
fn dihedral_lengths_match_search() {
    for n in -12..=12 {
        for flip in [false, true] {
            let d = DElement { n, flip };
            for gens in [
                DihedralGenerators::Reflections,
                DihedralGenerators::RotationAndReflection,
            ] {
                assert_eq!(
                    dihedral_word_length(d, gens),
                    dihedral_word_length_bfs(d, gens)
                );
            }
        }
    }
}

#[test]
fn coefficients_in_odd_characteristic() {
    let m = Modulus::new(7).unwrap();
    for v in 1..7 {
        let c = Coeff::new(v, m);
        assert!(c.try_mul(c.inverse().unwrap()).unwrap() == Coeff::one(m));
    }
    assert!(Coeff::zero(m).inverse().is_none());
    assert_eq!(Coeff::new(-1, m).value(), 6);
}
