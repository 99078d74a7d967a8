//! The acceptance checks, runnable from the library, the CLI and the test suite.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Coeff, LaurentPoly, Modulus};
use crate::analysis::{
    check_free_product_words, mirowicz_e, search_units, unique_products, SearchMode, SearchSpec,
};
use crate::group::{elements_in_box, DElement, PElement, QElement};
use crate::groupring::RingElemP;
use crate::matembed::{decide_unit, det4, embed, Decision};
use crate::parse::{format_ring_element, parse_ring_element};
use crate::units::{check_lemma_criterion, counterexample, family_alpha, SymmetricQuadruple};

pub const COUNTEREXAMPLE_TEXT: &str = "(1+x)*(1+y)*(1+z^-1) + (x^-1*y^-1 + x + y^-1*z + z)*a \
     + (1 + x + y^-1*z + x*y*z)*b + (1 + (x + x^-1 + y + y^-1)*z^-1)*a*b";

/// `α_k` written out with the exponents substituted.
pub fn family_text(k: u32) -> String {
    let k = k as i64;
    let (lo, hi, lo2, hi2) = (-k, k + 1, -2 * k - 1, 2 * k + 1);
    format!(
        "(x^{lo} + x^{hi})*(1 + y)*(1 + z^-1) + (x^{lo2}*y^-1 + x^{hi2} + (y^-1 + 1)*z)*a \
         + (x^{lo} + x^{hi} + (x^{lo}*y^-1 + x^{hi}*y)*z)*b \
         + (1 + (x^{lo2} + x^{hi2} + y^-1 + y)*z^-1)*a*b"
    )
}

/// A random element with up to `max_terms` terms, exponents in `[-bound, bound]`.
pub fn random_ring_element<R: Rng>(
    rng: &mut R,
    modulus: Modulus,
    max_terms: usize,
    bound: i64,
) -> RingElemP {
    let n = rng.gen_range(0..=max_terms);
    let terms = (0..n).map(|_| {
        let e = PElement::new(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            QElement::from_index(rng.gen_range(0..4)),
        );
        (
            e,
            Coeff::new(rng.gen_range(1..modulus.get()) as i128, modulus),
        )
    });
    RingElemP::from_terms(terms, modulus)
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Check = fn() -> Result<String, String>;

const CRITERIA: [(&str, Check); 14] = [
    ("counterexample verification", counterexample_verifies),
    ("support sizes", support_sizes),
    ("symmetric criterion and mutation sweep", lemma_criterion),
    ("determinant condition", determinant_condition),
    ("family", family),
    ("projection identities", projection_identities),
    ("mirowicz relations", mirowicz_relations),
    ("free-product witness", free_product_witness),
    ("oracle equivalence", oracle_equivalence),
    ("group table fidelity", group_table),
    ("unique-products census", unique_products_census),
    ("non-self-inverse", non_self_inverse),
    ("bounded search", bounded_search),
    ("torsion shadow", torsion_shadow),
];

pub fn criteria_count() -> usize {
    CRITERIA.len()
}

/// Run criterion `id` (1-based).
pub fn run_criterion(id: u8) -> Option<Outcome> {
    let (name, check) = *CRITERIA.get((id as usize).checked_sub(1)?)?;
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
    })
}

pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA.len() as u8)
        .filter_map(run_criterion)
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn counterexample_verifies() -> Result<String, String> {
    let start = Instant::now();
    let cert = counterexample();
    let displayed =
        parse_ring_element(COUNTEREXAMPLE_TEXT, Modulus::TWO).map_err(|e| e.to_string())?;
    ensure(cert.alpha() == &displayed, || {
        "α differs from the displayed unit".into()
    })?;
    let (alpha, inv) = (cert.alpha(), cert.alpha_inv());
    ensure((inv * alpha).is_one(), || "α'α ≠ 1".into())?;
    ensure((alpha * inv).is_one(), || "αα' ≠ 1".into())?;
    within(start, Duration::from_secs(1))?;
    Ok("both sides".into())
}

fn support_sizes() -> Result<String, String> {
    let cert = counterexample();
    let sizes = (cert.alpha().support_size(), cert.alpha_inv().support_size());
    ensure(sizes == (21, 21), || format!("sizes {sizes:?}"))?;
    Ok("21/21".into())
}

fn lemma_criterion() -> Result<String, String> {
    let sq = SymmetricQuadruple::counterexample_data(Modulus::TWO);
    let report = check_lemma_criterion(&sq).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{report:?}"))?;
    let mut mutants = 0;
    for slot in 0..4 {
        let part =
            |q: &SymmetricQuadruple| -> LaurentPoly { [&q.p0, &q.q0, &q.r0, &q.s0][slot].clone() };
        for (mono, c) in part(&sq).terms() {
            let mut m = sq.clone();
            let reduced =
                &part(&sq) - &LaurentPoly::monomial(mono, c.value() as i128, Modulus::TWO);
            *[&mut m.p0, &mut m.q0, &mut m.r0, &mut m.s0][slot] = reduced;
            let r = check_lemma_criterion(&m).map_err(|e| e.to_string())?;
            ensure(!r.passed(), || {
                format!("deleting {mono:?} from slot {slot} still passes")
            })?;
            mutants += 1;
        }
    }
    ensure(mutants == 21, || format!("{mutants} mutants, expected 21"))?;
    Ok("criterion holds; all 21 single-term deletions fail".into())
}

fn determinant_condition() -> Result<String, String> {
    let cert = counterexample();
    let det = det4(&embed(cert.alpha()));
    ensure(det.as_monomial().is_some(), || {
        "det is not a monomial".into()
    })?;
    match decide_unit(cert.alpha()).map_err(|e| e.to_string())? {
        Decision::Unit(c) => ensure(c.alpha_inv() == cert.alpha_inv(), || {
            "adjugate inverse differs from the constructed inverse".into()
        })?,
        Decision::NonUnit { .. } => return Err("decided as non-unit".into()),
    }
    let m = Modulus::TWO;
    let one_plus_x = &RingElemP::one(m) + &RingElemP::from_group(PElement::lattice(1, 0, 0), m);
    let d = det4(&embed(&one_plus_x));
    ensure(d.as_monomial().is_none(), || {
        "det(1+x) is a monomial".into()
    })?;
    Ok(format!("det = {}", crate::parse::format_poly(&det)))
}

fn family() -> Result<String, String> {
    let start = Instant::now();
    for k in 0..=4 {
        let cert = family_alpha(k);
        ensure((cert.alpha_inv() * cert.alpha()).is_one(), || {
            format!("k={k}: left")
        })?;
        ensure((cert.alpha() * cert.alpha_inv()).is_one(), || {
            format!("k={k}: right")
        })?;
        let displayed =
            parse_ring_element(&family_text(k), Modulus::TWO).map_err(|e| e.to_string())?;
        let (got, want) = (
            format_ring_element(cert.alpha()),
            format_ring_element(&displayed),
        );
        ensure(got == want, || format!("k={k}: {got} != {want}"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("k = 0..4".into())
}

fn projection_identities() -> Result<String, String> {
    for k in 0..=4u32 {
        let alpha = family_alpha(k).alpha().clone();
        let image = alpha
            .translate(PElement::a().inv(), PElement::b())
            .project();
        let e = mirowicz_e(4 * k as i64 + 2, 0).map_err(|e| e.to_string())?;
        ensure(image == e, || {
            format!("k={k}: image is not e_{{{},0}}", 4 * k + 2)
        })?;
    }
    Ok("k = 0..4".into())
}

fn mirowicz_relations() -> Result<String, String> {
    let (b, t) = (DElement::REFLECTION, DElement::rotation(1));
    let mut triples = 0;
    for i in 1..=6 {
        for j in -6..=6 {
            let e = mirowicz_e(i, j).map_err(|e| e.to_string())?;
            let ok = (&e * &e).is_one()
                && e.conjugate(b) == mirowicz_e(i, -j).unwrap()
                && e.conjugate(t) == mirowicz_e(i, j - 2).unwrap();
            ensure(ok, || format!("fails at i={i}, j={j}"))?;
            triples += 1;
        }
    }
    Ok(format!("{triples} triples"))
}

fn free_product_witness() -> Result<String, String> {
    let start = Instant::now();
    let gens = [2, 0, -2].map(|j| mirowicz_e(2, j).unwrap());
    let r = check_free_product_words(&gens, 8).map_err(|e| e.to_string())?;
    ensure(r.all_nontrivial && r.all_distinct, || format!("{r:?}"))?;
    ensure(r.count == 765, || format!("{} words", r.count))?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("{} words", r.count))
}

fn oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pairs = 0;
    for p in [2, 3] {
        let m = Modulus::new(p).unwrap();
        for _ in 0..200 {
            let x = random_ring_element(&mut rng, m, 8, 3);
            let y = random_ring_element(&mut rng, m, 8, 3);
            let fast = x.try_mul(&y).unwrap();
            let slow = x.try_mul_convolution(&y).unwrap();
            ensure(fast == slow, || {
                format!(
                    "mismatch over F_{p}: ({}) * ({})",
                    format_ring_element(&x),
                    format_ring_element(&y)
                )
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn group_table() -> Result<String, String> {
    let (a, b) = (PElement::a(), PElement::b());
    let relations = [
        ("a^2 = x", a.pow(2), PElement::lattice(1, 0, 0)),
        ("b^2 = y", b.pow(2), PElement::lattice(0, 1, 0)),
        ("(ab)^2 = z", (a * b).pow(2), PElement::lattice(0, 0, 1)),
        (
            "b^-1 a^2 b a^2 = 1",
            b.inv() * a.pow(2) * b * a.pow(2),
            PElement::IDENTITY,
        ),
        (
            "a^-1 b^2 a b^2 = 1",
            a.inv() * b.pow(2) * a * b.pow(2),
            PElement::IDENTITY,
        ),
        (
            "b a b^-1 a^-1 = x^-1 y z^-1",
            b * a * b.inv() * a.inv(),
            PElement::lattice(-1, 1, -1),
        ),
    ];
    for (name, got, want) in relations {
        ensure(got == want, || format!("{name}: got {got}"))?;
    }
    let mut bracketings = 0;
    for g in QElement::ALL {
        for h in QElement::ALL {
            for k in QElement::ALL {
                let (sg, sh, sk) = (
                    PElement::section(g),
                    PElement::section(h),
                    PElement::section(k),
                );
                ensure((sg * sh) * sk == sg * (sh * sk), || {
                    format!("cocycle fails at {g},{h},{k}")
                })?;
                bracketings += 1;
            }
        }
    }
    Ok(format!("6 relations, {bracketings} bracketings"))
}

fn unique_products_census() -> Result<String, String> {
    let cert = counterexample();
    let r = unique_products(&cert.alpha().support(), &cert.alpha_inv().support())
        .map_err(|e| e.to_string())?;
    for (&e, &n) in &r.entries {
        if e.is_identity() {
            ensure(n % 2 == 1, || format!("identity has multiplicity {n}"))?;
        } else {
            ensure(n % 2 == 0, || format!("{e} has multiplicity {n}"))?;
        }
    }
    ensure(r.unique_elements.iter().all(|e| e.is_identity()), || {
        "a non-identity product is unique".into()
    })?;
    Ok(format!(
        "{} products, {} distinct, identity multiplicity {}",
        r.total(),
        r.entries.len(),
        r.multiplicity(PElement::IDENTITY)
    ))
}

fn non_self_inverse() -> Result<String, String> {
    let cert = counterexample();
    ensure(!(cert.alpha() * cert.alpha()).is_one(), || "α² = 1".into())?;
    Ok("α² ≠ 1".into())
}

fn bounded_search() -> Result<String, String> {
    let start = Instant::now();
    let spec = SearchSpec {
        max_support: 2,
        exponent_box: 1,
        ..SearchSpec::default()
    };
    let found = search_units(&spec).map_err(|e| e.to_string())?;
    ensure(found.is_empty(), || format!("{} units found", found.len()))?;
    within(start, Duration::from_secs(60))?;

    let alpha = counterexample().alpha().clone();
    let fixed = SearchSpec {
        mode: SearchMode::CoefficientsOnFixedSupport {
            support: alpha.support(),
            weight: Some(21),
        },
        ..SearchSpec::default()
    };
    let found = search_units(&fixed).map_err(|e| e.to_string())?;
    ensure(found.len() == 1 && found[0].alpha() == &alpha, || {
        "α not recovered".into()
    })?;
    Ok(format!(
        "{} candidates, none; α recovered",
        spec.cardinality()
    ))
}

fn torsion_shadow() -> Result<String, String> {
    let elements: Vec<_> = elements_in_box(2)
        .into_iter()
        .filter(|e| !e.is_identity())
        .collect();
    ensure(elements.len() == 499, || {
        format!("{} elements", elements.len())
    })?;
    if let Some(e) = elements.iter().find(|e| (**e * **e).is_identity()) {
        return Err(format!("{e} squares to 1"));
    }
    Ok(format!("{} non-identity elements", elements.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_text_at_zero_is_the_counterexample() {
        let a = parse_ring_element(&family_text(0), Modulus::TWO).unwrap();
        let b = parse_ring_element(COUNTEREXAMPLE_TEXT, Modulus::TWO).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_elements_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = Modulus::new(5).unwrap();
        for _ in 0..50 {
            let e = random_ring_element(&mut rng, m, 4, 1);
            assert!(e.support_size() <= 4);
            assert!(e
                .support()
                .iter()
                .all(|g| g.translation().iter().all(|c| c.abs() <= 1)));
        }
    }

    #[test]
    fn out_of_range_ids() {
        assert!(run_criterion(0).is_none());
        assert!(run_criterion(15).is_none());
        assert_eq!(criteria_count(), 14);
    }
}
