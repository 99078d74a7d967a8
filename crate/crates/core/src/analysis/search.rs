//! Bounded exhaustive search for non-trivial units.
//!
//! Candidates are enumerated in a fixed order and split into contiguous chunks;
//! chunks are decided in parallel and their results concatenated in chunk
//! order, so the output does not depend on the worker count.
//!
//! In [`SearchMode::EnumerateSupports`] every candidate contains the identity
//! with coefficient 1. Any unit can be brought to that shape by multiplying with
//! a trivial unit, so this only removes translates and scalar multiples.

use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use super::AnalysisError;
use crate::algebra::{Coeff, Modulus};
use crate::group::{elements_in_box, PElement};
use crate::groupring::RingElemP;
use crate::matembed::{decide_unit, Decision};
use crate::parse::parse_pelement;
use crate::units::UnitCertificate;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// All supports of size `1..=max_support` inside the exponent box that
    /// contain the identity, with every nonzero coefficient vector.
    EnumerateSupports,
    /// Every nonzero coefficient vector on a fixed support, optionally
    /// restricted to one Hamming weight.
    CoefficientsOnFixedSupport {
        support: Vec<PElement>,
        weight: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub max_support: usize,
    pub exponent_box: i64,
    pub modulus: Modulus,
    pub mode: SearchMode,
    /// Refuse to start if the candidate count exceeds this.
    pub budget: u128,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
}

pub const DEFAULT_BUDGET: u128 = 200_000;

impl Default for SearchSpec {
    fn default() -> Self {
        SearchSpec {
            max_support: 2,
            exponent_box: 1,
            modulus: Modulus::TWO,
            mode: SearchMode::EnumerateSupports,
            budget: DEFAULT_BUDGET,
            workers: 0,
        }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl SearchSpec {
    /// Parse `key = value` lines. Keys: `mode` (`enumerate-supports` or
    /// `coefficients-on-fixed-support`), `max_support`, `box`, `modulus`,
    /// `budget`, `workers`, `weight`, and `support` (one group element per
    /// line, repeatable). `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, AnalysisError> {
        let mut spec = SearchSpec::default();
        let mut fixed = false;
        let mut support = Vec::new();
        let mut weight = None;
        let bad =
            |line: usize, msg: String| AnalysisError::InvalidSpec(format!("line {line}: {msg}"));
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(line_no, "expected key = value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| -> Result<u128, AnalysisError> {
                v.parse()
                    .map_err(|_| bad(line_no, format!("{key}: not a number: {v:?}")))
            };
            match key {
                "mode" => {
                    fixed = match value {
                        "enumerate-supports" => false,
                        "coefficients-on-fixed-support" => true,
                        other => return Err(bad(line_no, format!("unknown mode {other:?}"))),
                    }
                }
                "max_support" => spec.max_support = num(value)? as usize,
                "box" | "exponent_box" => spec.exponent_box = num(value)? as i64,
                "modulus" => {
                    spec.modulus =
                        Modulus::new(num(value)? as u32).map_err(|e| bad(line_no, e.to_string()))?
                }
                "budget" => spec.budget = num(value)?,
                "workers" => spec.workers = num(value)? as usize,
                "weight" => weight = Some(num(value)? as usize),
                "support" => {
                    support.push(parse_pelement(value).map_err(|e| bad(line_no, e.to_string()))?)
                }
                other => return Err(bad(line_no, format!("unknown key {other:?}"))),
            }
        }
        if fixed {
            spec.mode = SearchMode::CoefficientsOnFixedSupport { support, weight };
        } else if !support.is_empty() || weight.is_some() {
            return Err(AnalysisError::InvalidSpec(
                "support/weight only apply to coefficients-on-fixed-support".into(),
            ));
        }
        Ok(spec)
    }

    fn box_elements(&self) -> Vec<PElement> {
        elements_in_box(self.exponent_box)
    }

    fn allowed_weights(&self, n: usize) -> Vec<usize> {
        match &self.mode {
            SearchMode::CoefficientsOnFixedSupport {
                weight: Some(w), ..
            } => {
                if *w >= 1 && *w <= n {
                    vec![*w]
                } else {
                    vec![]
                }
            }
            _ => (1..=n.min(self.max_support)).collect(),
        }
    }

    /// Number of candidates the search would decide.
    pub fn cardinality(&self) -> u128 {
        let units = (self.modulus.get() - 1) as u128;
        match &self.mode {
            SearchMode::EnumerateSupports => {
                let others = self.box_elements().len() as u128 - 1;
                (1..=self.max_support as u128)
                    .map(|s| {
                        binomial(others, s - 1).saturating_mul(units.saturating_pow(s as u32 - 1))
                    })
                    .fold(0u128, u128::saturating_add)
            }
            SearchMode::CoefficientsOnFixedSupport { support, .. } => {
                let n = support.len();
                self.allowed_weights(n)
                    .into_iter()
                    .map(|w| {
                        binomial(n as u128, w as u128)
                            .saturating_mul(units.saturating_pow(w as u32))
                    })
                    .fold(0u128, u128::saturating_add)
            }
        }
    }

    /// Candidates as `(index into pool, coefficient)` lists, in enumeration order.
    fn candidates(&self) -> (Vec<PElement>, Vec<Vec<(usize, u32)>>) {
        let p = self.modulus.get();
        match &self.mode {
            SearchMode::EnumerateSupports => {
                let mut pool = self.box_elements();
                let id = pool.iter().position(|e| e.is_identity()).unwrap();
                pool.swap(0, id);
                let others: Vec<usize> = (1..pool.len()).collect();
                let mut out = Vec::new();
                for size in 1..=self.max_support.min(pool.len()) {
                    for combo in others.iter().copied().combinations(size - 1) {
                        for coeffs in nonzero_vectors(p, size - 1) {
                            let mut cand = vec![(0usize, 1u32)];
                            cand.extend(combo.iter().copied().zip(coeffs));
                            out.push(cand);
                        }
                    }
                }
                (pool, out)
            }
            SearchMode::CoefficientsOnFixedSupport { support, .. } => {
                let pool: Vec<PElement> = support.iter().copied().sorted().dedup().collect();
                let n = pool.len();
                let weights = self.allowed_weights(n);
                let mut out = Vec::new();
                if p == 2 && n < 64 {
                    for mask in 1u64..(1u64 << n) {
                        if weights.contains(&(mask.count_ones() as usize)) {
                            out.push(
                                (0..n)
                                    .filter(|i| mask >> i & 1 == 1)
                                    .map(|i| (i, 1))
                                    .collect(),
                            );
                        }
                    }
                } else {
                    for w in weights {
                        for combo in (0..n).combinations(w) {
                            for coeffs in nonzero_vectors(p, w) {
                                out.push(combo.iter().copied().zip(coeffs).collect());
                            }
                        }
                    }
                }
                (pool, out)
            }
        }
    }
}

/// All vectors in `(F_p^*)^len` in lexicographic order.
fn nonzero_vectors(p: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len).map(|_| 1..p).multi_cartesian_product().collect()
}

pub fn search_units(spec: &SearchSpec) -> Result<Vec<UnitCertificate>, AnalysisError> {
    search_units_with_progress(spec, &|_, _| {})
}

/// As [`search_units`], calling `progress(done, total)` after each chunk.
pub fn search_units_with_progress(
    spec: &SearchSpec,
    progress: &(dyn Fn(u64, u64) + Sync),
) -> Result<Vec<UnitCertificate>, AnalysisError> {
    if let SearchMode::CoefficientsOnFixedSupport { support, .. } = &spec.mode {
        if support.is_empty() {
            return Err(AnalysisError::InvalidSpec("fixed support is empty".into()));
        }
    }
    let cardinality = spec.cardinality();
    if cardinality > spec.budget {
        return Err(AnalysisError::BudgetExceeded {
            cardinality,
            budget: spec.budget,
        });
    }
    let (pool, candidates) = spec.candidates();
    debug_assert_eq!(candidates.len() as u128, cardinality);
    let total = candidates.len() as u64;
    let done = AtomicU64::new(0);
    let m = spec.modulus;

    let decide_chunk =
        |chunk: &[Vec<(usize, u32)>]| -> Result<Vec<UnitCertificate>, AnalysisError> {
            let mut found = Vec::new();
            for cand in chunk {
                let alpha = RingElemP::from_terms(
                    cand.iter()
                        .map(|&(i, c)| (pool[i], Coeff::new(c as i128, m))),
                    m,
                );
                if alpha.is_trivial_unit() {
                    continue;
                }
                match decide_unit(&alpha) {
                    Ok(Decision::Unit(cert)) => found.push(*cert),
                    Ok(Decision::NonUnit { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            let now = done.fetch_add(chunk.len() as u64, Ordering::Relaxed) + chunk.len() as u64;
            progress(now, total);
            Ok(found)
        };

    let chunk_size = 256;
    let pool_threads = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .map_err(|e| AnalysisError::InvalidSpec(e.to_string()))?;
    let chunks: Vec<Result<Vec<UnitCertificate>, AnalysisError>> = pool_threads.install(|| {
        candidates
            .par_chunks(chunk_size)
            .map(decide_chunk)
            .collect()
    });
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}
