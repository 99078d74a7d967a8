//! Group-element convolution; the reference product for `K[P]`.

use std::collections::BTreeMap;

use super::RingElemP;
use crate::algebra::Coeff;
use crate::group::PElement;

pub(super) fn multiply(left: &RingElemP, right: &RingElemP) -> RingElemP {
    let modulus = left.modulus();
    let lhs = left.terms();
    let rhs = right.terms();
    let mut acc: BTreeMap<PElement, Coeff> = BTreeMap::new();
    for &(g, c) in &lhs {
        for &(h, d) in &rhs {
            let prod = c.try_mul(d).expect("checked by caller");
            let slot = acc.entry(g * h).or_insert_with(|| Coeff::zero(modulus));
            *slot = slot.try_add(prod).expect("checked by caller");
        }
    }
    RingElemP::from_terms(acc.into_iter().filter(|(_, c)| !c.is_zero()), modulus)
}
