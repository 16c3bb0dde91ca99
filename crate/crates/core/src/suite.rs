//! Seeded property suites that cross-check independent routes through the
//! engine. Each suite reports a `failures` claim that must be empty.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::families::{lemma_suite, random_f_family, random_ideal};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialIdeal, VarContext};
use crate::oracle;
use crate::poly::Poly;
use crate::pullback::conductor;
use crate::report::Report;
use crate::s2::{s2_membership, QuotientRing};
use crate::simplicial::{complex_of, depth_by_skeleta, graded_betti};

pub const DEFAULT_TRIALS: usize = 200;

/// The four suites, in a fixed order. They run in parallel; each draws from
/// its own stream seeded by `seed`.
pub fn run_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let suites: [fn(u64, usize) -> Result<Report>; 4] =
        [lemma_suite, conductor_suite, auslander_buchsbaum_suite, s2_oracle_suite];
    use rayon::prelude::*;
    suites.par_iter().map(|f| f(seed, trials)).collect()
}

/// `A:B` by the closed form `ΣJ_i` against degree-wise kernels, on random
/// F-families with `n ≤ 5`, `ℓ ≤ 4`.
pub fn conductor_suite(seed: u64, trials: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0);
    let mut r = Report::new("conductor-routes", "closed-form conductor against direct kernels", FieldSpec::Rationals);
    let mut failures = Vec::new();
    for t in 0..trials {
        let spec = random_f_family(&mut rng, 5, 4);
        if conductor(&spec.family()?, None).is_err() {
            failures.push(t);
        }
    }
    r.record("trials", "trials run", trials);
    r.check("failures", "A:B = sum of J_i", Vec::<usize>::new(), failures);
    Ok(r)
}

/// `depth + pd = n` where the depth comes from the skeleton criterion and
/// `pd` from the Hochster Betti sweep, on random squarefree ideals.
pub fn auslander_buchsbaum_suite(seed: u64, trials: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xAB);
    let mut r = Report::new("auslander-buchsbaum", "skeleton depth plus Betti pd equals n", FieldSpec::Rationals);
    let mut failures = Vec::new();
    for t in 0..trials {
        let n = rng.gen_range(1..=6);
        let field = if rng.gen_bool(0.5) { FieldSpec::Rationals } else { FieldSpec::Prime(2) };
        let i = random_squarefree(&mut rng, n)?;
        let pd = graded_betti(&i, field)?.quotient_projective_dimension();
        let d = depth_by_skeleta(&complex_of(&i)?, field)?;
        if d + pd != n {
            failures.push(t);
        }
    }
    r.record("trials", "trials run", trials);
    r.check("failures", "depth + pd = n", Vec::<usize>::new(), failures);
    Ok(r)
}

/// `m ∈ U(aA)` against the conductor search of
/// [`oracle::s2_membership_by_search`] on random `A = T/𝔞`, `n ≤ 4`.
pub fn s2_oracle_suite(seed: u64, trials: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x52);
    let mut r = Report::new("s2-oracle", "U(aA) membership against conductor search", FieldSpec::Rationals);
    let mut failures = Vec::new();
    let mut members = 0usize;
    for t in 0..trials {
        let (n, ring, a) = loop {
            let n = rng.gen_range(2..=4);
            let ctx = VarContext::indexed("x", n)?;
            let ring = QuotientRing::new(random_ideal(&mut rng, &ctx)?)?;
            let a = random_monomial(&mut rng, n, 1, 2);
            if ring.is_nonzerodivisor(&a)? {
                break (n, ring, a);
            }
        };
        let m = random_monomial(&mut rng, n, 0, 3);
        let fast = s2_membership(&ring, &Poly::monomial(m.clone()), &a)?;
        let slow = oracle::s2_membership_by_search(ring.defining_ideal(), &m, &a)?;
        members += usize::from(fast);
        if fast != slow {
            failures.push(t);
        }
    }
    r.record("trials", "trials run", trials);
    r.record("members", "trials with m/a in the S2-ification", members);
    r.check("failures", "m/a in S2-ification iff m in U(aA)", Vec::<usize>::new(), failures);
    Ok(r)
}

fn random_monomial(rng: &mut impl Rng, n: usize, lo: u32, hi: u32) -> Monomial {
    loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=hi)).collect();
        let d: u32 = e.iter().sum();
        if (lo..=hi).contains(&d) {
            return Monomial::new(e);
        }
    }
}

/// A proper squarefree ideal with one to five generators of degree one to three.
fn random_squarefree(rng: &mut impl Rng, n: usize) -> Result<MonomialIdeal> {
    let ctx = VarContext::indexed("x", n)?;
    let k = rng.gen_range(1..=5);
    let gens = (0..k)
        .map(|_| loop {
            let mask: u64 = rng.gen_range(1..1u64 << n);
            if mask.count_ones() <= 3 {
                break Monomial::new((0..n).map(|j| (mask >> j & 1) as u32).collect());
            }
        })
        .collect();
    MonomialIdeal::new(ctx, gens)
}
