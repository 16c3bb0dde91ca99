//! Brute-force reference computations used to cross-check the main engine.
//!
//! Nothing here is clever: primes are found by enumerating every subset of
//! variables, and ideal equality is decided by testing every monomial up to
//! a degree bound. Only meant for a handful of variables.

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal};

/// Largest number of variables the subset enumeration accepts.
pub const MAX_ORACLE_VARS: usize = 12;

/// Degree cap for the conductor search in [`s2_membership_by_search`].
pub const SEARCH_DEGREE: u32 = 4;

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ORACLE_VARS {
        return Err(Error::TooManyVariables { n, cap: MAX_ORACLE_VARS });
    }
    Ok(())
}

fn prime_contains(mask: u64, i: &MonomialIdeal) -> bool {
    i.gens().iter().all(|g| g.support() & mask != 0)
}

/// Supports of the minimal monomial primes over `i`, by enumeration.
pub fn minimal_primes(i: &MonomialIdeal) -> Result<Vec<u64>> {
    let n = i.nvars();
    check_size(n)?;
    if i.is_unit() {
        return Ok(Vec::new());
    }
    let over: Vec<u64> = (0..1u64 << n).filter(|&m| prime_contains(m, i)).collect();
    let mut out: Vec<u64> = over
        .iter()
        .copied()
        .filter(|&p| !over.iter().any(|&q| q != p && q & p == q))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `ht_A(J)` for `A = T/𝔞`: the least height, in `A`, of a monomial prime
/// containing `J + 𝔞`; the height of `Q/𝔞` is the longest drop `|Q| − |P|`
/// to a minimal prime `P ⊆ Q` of `𝔞`. `None` for the unit ideal.
pub fn height_in_quotient(j: &MonomialIdeal, a: &MonomialIdeal) -> Result<Option<usize>> {
    let n = j.nvars();
    check_size(n)?;
    if j.ctx() != a.ctx() {
        return Err(Error::ContextMismatch);
    }
    let base = minimal_primes(a)?;
    let mut best: Option<usize> = None;
    for q in 0..1u64 << n {
        if !prime_contains(q, j) || !prime_contains(q, a) {
            continue;
        }
        let h = base
            .iter()
            .filter(|&&p| p & q == p)
            .map(|&p| (q.count_ones() - p.count_ones()) as usize)
            .max()
            .expect("a prime over 𝔞 contains a minimal one");
        best = Some(best.map_or(h, |b| b.min(h)));
    }
    Ok(best)
}

/// Whether `m/a ∈ Ã` for `A = T/𝔞`, by looking for a conductor of height at
/// least two: `J = 𝔞 + (u : deg u ≤ 4, u·m ∈ (a) + 𝔞)`.
pub fn s2_membership_by_search(a_ideal: &MonomialIdeal, m: &Monomial, a: &Monomial) -> Result<bool> {
    let n = a_ideal.nvars();
    if n > 5 {
        return Err(Error::TooManyVariables { n, cap: 5 });
    }
    let ctx = a_ideal.ctx().clone();
    let target = MonomialIdeal::new(ctx.clone(), vec![a.clone()])?.sum(a_ideal)?;
    let mut gens = a_ideal.gens().to_vec();
    for d in 0..=SEARCH_DEGREE {
        for u in monomials_of_degree(n, ctx.all_mask(), d) {
            if target.contains_monomial(&u.mul(m)) {
                gens.push(u);
            }
        }
    }
    let j = MonomialIdeal::new(ctx, gens)?;
    Ok(height_in_quotient(&j, a_ideal)?.map_or(true, |h| h >= 2))
}

/// Whether two membership predicates agree on every monomial of degree at
/// most `bound`. For monomial ideals whose generators have degree at most
/// `bound`, this decides equality.
pub fn agree_up_to(
    n: usize,
    bound: u32,
    lhs: impl Fn(&Monomial) -> bool,
    rhs: impl Fn(&Monomial) -> bool,
) -> Option<Monomial> {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..=bound)
        .flat_map(|d| monomials_of_degree(n, all, d))
        .find(|u| lhs(u) != rhs(u))
}
