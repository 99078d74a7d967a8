mod common;

use proptest::prelude::*;

use common::{modulus, pelement, ring_element, triple};
use promislow::algebra::{Coeff, Modulus};
use promislow::groupring::{RingElemD, RingElemP};
use promislow::matembed::{det4, embed, Mat4};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn structured_product_matches_convolution((x, y, _) in triple(8)) {
        prop_assert_eq!(x.try_mul(&y).unwrap(), x.try_mul_convolution(&y).unwrap());
    }

    #[test]
    fn associativity((x, y, z) in triple(5)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn distributivity((x, y, z) in triple(6)) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&y + &z) * &x, &(&y * &x) + &(&z * &x));
    }

    #[test]
    fn additive_group((x, y, _) in triple(6)) {
        let m = x.modulus();
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x + &RingElemP::zero(m), x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
    }

    #[test]
    fn identity_element((x, _, _) in triple(6)) {
        let one = RingElemP::one(x.modulus());
        prop_assert_eq!(&one * &x, x.clone());
        prop_assert_eq!(&x * &one, x.clone());
    }

    #[test]
    fn augmentation_is_multiplicative((x, y, _) in triple(6)) {
        let lhs = (&x * &y).augmentation();
        prop_assert_eq!(lhs, x.augmentation().try_mul(y.augmentation()).unwrap());
        prop_assert_eq!((&x + &y).augmentation(), x.augmentation().try_add(y.augmentation()).unwrap());
    }

    #[test]
    fn projection_is_a_ring_map((x, y, _) in triple(6)) {
        let prod: RingElemD = (&x * &y).project();
        prop_assert_eq!(prod, &x.project() * &y.project());
        prop_assert_eq!((&x + &y).project(), &x.project() + &y.project());
        prop_assert!(RingElemP::one(x.modulus()).project().is_one());
    }

    #[test]
    fn embedding_is_a_ring_map((x, y, _) in triple(5)) {
        prop_assert_eq!(embed(&(&x * &y)), &embed(&x) * &embed(&y));
        prop_assert!(embed(&RingElemP::one(x.modulus())).is_identity());
    }

    #[test]
    fn embedding_is_injective((x, y, _) in triple(5)) {
        prop_assert_eq!(embed(&x) == embed(&y), x == y);
    }

    #[test]
    fn determinant_is_multiplicative((x, y, _) in triple(3)) {
        let lhs = det4(&embed(&(&x * &y)));
        prop_assert_eq!(lhs, &det4(&embed(&x)) * &det4(&embed(&y)));
    }

    #[test]
    fn adjugate_identity((x, _, _) in triple(4)) {
        let m = embed(&x);
        let d = det4(&m);
        let scaled = Mat4::from_entries(
            Mat4::identity(x.modulus()).entries().clone().map(|row| row.map(|e| &e * &d)),
        );
        prop_assert_eq!(&m * &m.adjugate(), scaled.clone());
        prop_assert_eq!(&m.adjugate() * &m, scaled);
    }

    #[test]
    fn terms_round_trip((x, _, _) in triple(8)) {
        let terms = x.terms();
        prop_assert_eq!(terms.len(), x.support_size());
        prop_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        prop_assert_eq!(RingElemP::from_terms(terms, x.modulus()), x);
    }

    #[test]
    fn scalar_multiples(m in modulus(), c in 1u32..5, x in pelement(2)) {
        let c = Coeff::new(c as i128, m);
        let e = RingElemP::from_term(x, c);
        prop_assert_eq!(e.is_zero(), c.is_zero());
        prop_assert_eq!(e.is_trivial_unit(), !c.is_zero());
    }

    #[test]
    fn group_elements_embed_multiplicatively(g in pelement(3), h in pelement(3)) {
        let m = Modulus::TWO;
        let prod = &RingElemP::from_group(g, m) * &RingElemP::from_group(h, m);
        prop_assert_eq!(prod, RingElemP::from_group(g * h, m));
    }

    #[test]
    fn translation_and_conjugation(x in ring_element(Modulus::TWO, 6), g in pelement(2)) {
        let m = Modulus::TWO;
        let gx = x.translate(g, g.inv());
        let expected = &(&RingElemP::from_group(g, m) * &x) * &RingElemP::from_group(g.inv(), m);
        prop_assert_eq!(&gx, &expected);
        prop_assert_eq!(x.conjugate(g), x.translate(g.inv(), g));
        prop_assert_eq!(gx.support_size(), x.support_size());
    }
}
