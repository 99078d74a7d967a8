use std::collections::{BTreeMap, BTreeSet};

use super::AnalysisError;
use crate::group::PElement;

/// How often each element of `A·B` arises as a product `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub entries: BTreeMap<PElement, usize>,
    pub unique_elements: BTreeSet<PElement>,
}

impl MultiplicityReport {
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, e: PElement) -> usize {
        self.entries.get(&e).copied().unwrap_or(0)
    }
}

pub fn unique_products(
    a: &[PElement],
    b: &[PElement],
) -> Result<MultiplicityReport, AnalysisError> {
    if a.is_empty() || b.is_empty() {
        return Err(AnalysisError::EmptyInput);
    }
    let a: BTreeSet<_> = a.iter().copied().collect();
    let b: BTreeSet<_> = b.iter().copied().collect();
    let mut entries = BTreeMap::new();
    for &g in &a {
        for &h in &b {
            *entries.entry(g * h).or_insert(0) += 1;
        }
    }
    let unique_elements = entries
        .iter()
        .filter(|(_, &n)| n == 1)
        .map(|(&e, _)| e)
        .collect();
    Ok(MultiplicityReport {
        entries,
        unique_elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singletons() {
        let r = unique_products(&[PElement::IDENTITY], &[PElement::IDENTITY]).unwrap();
        assert_eq!(r.unique_elements, BTreeSet::from([PElement::IDENTITY]));
    }

    #[test]
    fn one_and_a() {
        let s = [PElement::IDENTITY, PElement::a()];
        let r = unique_products(&s, &s).unwrap();
        assert_eq!(r.total(), 4);
        assert_eq!(r.multiplicity(PElement::a()), 2);
        assert_eq!(
            r.unique_elements,
            BTreeSet::from([PElement::IDENTITY, PElement::lattice(1, 0, 0)])
        );
    }

    #[test]
    fn empty_input() {
        assert_eq!(
            unique_products(&[], &[PElement::IDENTITY]),
            Err(AnalysisError::EmptyInput)
        );
    }
}
