use std::collections::HashSet;

use serde::Serialize;

use super::AnalysisError;
use crate::algebra::{Modulus, TPoly};
use crate::groupring::RingElemD;

/// `e_ij = t^-i + 1 + t^i + t^j (t^-i + t^i) b̄` in `F_2[D∞]`.
pub fn mirowicz_e(i: i64, j: i64) -> Result<RingElemD, AnalysisError> {
    if i < 1 {
        return Err(AnalysisError::BadIndex(i));
    }
    let m = Modulus::TWO;
    let u = TPoly::from_terms([(-i, 1), (0, 1), (i, 1)], m);
    let v = TPoly::from_terms([(j - i, 1), (j + i, 1)], m);
    Ok(RingElemD::new(u, v).expect("same modulus"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FreeProductReport {
    pub all_nontrivial: bool,
    pub all_distinct: bool,
    /// Number of non-empty reduced words evaluated.
    pub count: u64,
}

/// Evaluate every reduced word (no generator index repeated consecutively) of
/// length `1..=max_len` in the involutions `gens`.
pub fn check_free_product_words(
    gens: &[RingElemD],
    max_len: usize,
) -> Result<FreeProductReport, AnalysisError> {
    for (i, g) in gens.iter().enumerate() {
        if !(g * g).is_one() {
            return Err(AnalysisError::NotInvolution(i));
        }
    }
    let Some(first) = gens.first() else {
        return Ok(FreeProductReport {
            all_nontrivial: true,
            all_distinct: true,
            count: 0,
        });
    };
    let mut seen: HashSet<RingElemD> = HashSet::from([RingElemD::one(first.modulus())]);
    let mut report = FreeProductReport {
        all_nontrivial: true,
        all_distinct: true,
        count: 0,
    };
    // layer of (value, last generator index)
    let mut layer: Vec<(RingElemD, usize)> = vec![(RingElemD::one(first.modulus()), usize::MAX)];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * gens.len());
        for (value, last) in &layer {
            for (idx, g) in gens.iter().enumerate() {
                if idx == *last {
                    continue;
                }
                let word = value * g;
                report.count += 1;
                if word.is_one() {
                    report.all_nontrivial = false;
                }
                if !seen.insert(word.clone()) {
                    report.all_distinct = false;
                }
                next.push((word, idx));
            }
        }
        layer = next;
    }
    Ok(report)
}
