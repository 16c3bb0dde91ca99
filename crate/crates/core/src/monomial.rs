//! Monomial ideals in a polynomial ring `k[x_1, ..., x_n]`.
//!
//! Everything here is exponent arithmetic: membership is divisibility,
//! intersections are lcms, colons are quotients by gcds. No term orders or
//! division algorithms are involved.
//!
//! The ambient rings of interest are local (power series); all ideals handled
//! here are monomial, so heights, colons and decompositions computed in the
//! graded polynomial ring agree with the local ones.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest variable count; primes and supports are stored as `u64` bitsets.
pub const MAX_VARS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Arc<[String]>,
}

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("no variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { n: names.len(), cap: MAX_VARS });
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidContext("variable names are not distinct".into()));
        }
        if names.iter().any(|s| s.is_empty()) {
            return Err(Error::InvalidContext("empty variable name".into()));
        }
        Ok(VarContext { names: names.into() })
    }

    /// `prefix1, ..., prefix{n}`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn all_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn mask_of(&self, names: &[impl AsRef<str>]) -> Result<u64> {
        let mut mask = 0u64;
        for n in names {
            let i = self
                .index_of(n.as_ref())
                .ok_or_else(|| Error::Parse(format!("unknown variable `{}`", n.as_ref())))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn names_of_mask(&self, mask: u64) -> Vec<String> {
        (0..self.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.names[i].clone())
            .collect()
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarContext{:?}", &*self.names)
    }
}

/// An exponent vector. Ordered by degree reverse lexicographic order with
/// `x_1 > x_2 > ... > x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn pure_power(n: usize, i: usize, a: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = a;
        Monomial(e)
    }

    /// The squarefree monomial on the variables of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Monomial((0..n).map(|i| (mask >> i & 1) as u32).collect())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// `Some(i)` when this is `x_i^a` with `a >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        self.colon(other)
    }

    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn format(&self, ctx: &VarContext) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ctx.names()[i].clone()),
                _ => parts.push(format!("{}^{}", ctx.names()[i], e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // smaller trailing exponent is the larger monomial
                o => return o.reverse(),
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in the variables of `mask`.
pub fn monomials_of_degree(n: usize, mask: u64, d: u32) -> Vec<Monomial> {
    let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial(exps.clone()));
                }
            }
            Some((&v, rest)) => {
                if rest.is_empty() {
                    exps[v] = left;
                    out.push(Monomial(exps.clone()));
                    exps[v] = 0;
                    return;
                }
                for e in (0..=left).rev() {
                    exps[v] = e;
                    rec(rest, left - e, exps, out);
                }
                exps[v] = 0;
            }
        }
    }
    if vars.is_empty() {
        if d == 0 {
            out.push(Monomial(exps));
        }
        return out;
    }
    rec(&vars, d, &mut exps, &mut out);
    out
}

/// A monomial ideal, stored by its unique minimal generating set in
/// ascending degrevlex order. The zero ideal has no generators; the unit
/// ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: VarContext,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    pub fn new(ctx: VarContext, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.nvars() != ctx.len()) {
            return Err(Error::ContextMismatch);
        }
        Ok(MonomialIdeal { ctx, gens: minimalize(gens) })
    }

    fn from_raw(ctx: &VarContext, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ctx: ctx.clone(), gens: minimalize(gens) }
    }

    pub fn from_exponents(ctx: VarContext, gens: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(ctx, gens.into_iter().map(Monomial).collect())
    }

    pub fn zero(ctx: VarContext) -> Self {
        MonomialIdeal { ctx, gens: Vec::new() }
    }

    pub fn unit(ctx: VarContext) -> Self {
        let n = ctx.len();
        MonomialIdeal { ctx, gens: vec![Monomial::one(n)] }
    }

    /// The prime generated by the variables of `mask`.
    pub fn from_support(ctx: VarContext, mask: u64) -> Self {
        let n = ctx.len();
        let gens = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| Monomial::var(n, i)).collect();
        MonomialIdeal { ctx, gens: minimalize(gens) }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ctx: VarContext) -> Self {
        let m = ctx.all_mask();
        Self::from_support(ctx, m)
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(&self.ctx, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Self::from_raw(&self.ctx, gens))
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.ctx.clone());
        for _ in 0..k {
            acc = acc.product(self).expect("same context");
        }
        acc
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_raw(&self.ctx, gens))
    }

    pub fn intersect_all<'a>(
        ctx: &VarContext,
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(ctx.clone());
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    pub fn sum_all<'a>(
        ctx: &VarContext,
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = Self::zero(ctx.clone());
        for i in ideals {
            acc = acc.sum(i)?;
        }
        Ok(acc)
    }

    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Self::from_raw(&self.ctx, gens)
    }

    /// `I : J = ⋂_{g ∈ gens(J)} I : g`. `I : (0)` is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut acc = Self::unit(self.ctx.clone());
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g))?;
        }
        Ok(acc)
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::from_raw(&self.ctx, self.gens.iter().map(Monomial::radical).collect())
    }

    /// Minimal primes, as minimal vertex covers of the supports of the
    /// radical's generators. Sorted by (height, support). The zero ideal has
    /// the zero prime as its only minimal prime.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let edges: Vec<u64> = self.radical().gens.iter().map(Monomial::support).collect();
        let covers = minimal_vertex_covers(&edges);
        let mut primes: Vec<MonomialPrime> = covers
            .into_iter()
            .map(|support| MonomialPrime { ctx: self.ctx.clone(), support })
            .collect();
        primes.sort();
        Ok(primes)
    }

    /// `(height, dim)` of `T / I`.
    pub fn height_and_dim(&self) -> Result<(usize, usize)> {
        let h = self
            .minimal_primes()?
            .iter()
            .map(MonomialPrime::height)
            .min()
            .unwrap_or(0);
        Ok((h, self.nvars() - h))
    }

    /// Height of `(J + a) / a` in the quotient `T / a`:
    /// the minimum over minimal primes `Q` of `J + a` of the largest
    /// `ht Q - ht P` over minimal primes `P ⊆ Q` of `a`.
    pub fn height_in_quotient(&self, a: &MonomialIdeal) -> Result<usize> {
        self.check(a)?;
        let total = self.sum(a)?;
        let qs = total.minimal_primes()?;
        let ps = a.minimal_primes()?;
        Ok(qs
            .iter()
            .map(|q| {
                ps.iter()
                    .filter(|p| p.support & !q.support == 0)
                    .map(|p| q.height() - p.height())
                    .max()
                    .expect("a minimal prime of a lies under every prime containing a")
            })
            .min()
            .expect("proper ideal has a minimal prime"))
    }

    /// Irredundant decomposition into irreducible (pure-power generated)
    /// ideals, by the standard splitting `(I + x^a) ∩ (I + m')` of a
    /// generator `x^a m'`.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut memo: HashMap<Vec<Monomial>, Vec<Vec<Monomial>>> = HashMap::new();
        let raw = split(self.gens.clone(), &mut memo);
        let mut comps: Vec<MonomialIdeal> = raw
            .into_iter()
            .map(|g| Self::from_raw(&self.ctx, g))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // irreducible ideals are meet-prime in the lattice of monomial ideals,
        // so redundancy means containing another component
        let snapshot = comps.clone();
        comps.retain(|c| !snapshot.iter().any(|d| d != c && c.contains(d)));
        Ok(comps)
    }

    /// Intersection of the primary components whose radical is a minimal
    /// prime. The unit ideal is returned unchanged.
    pub fn unmixed_part(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Ok(self.clone());
        }
        let comps = self.irreducible_decomposition()?;
        let mins: Vec<u64> = self.minimal_primes()?.iter().map(|p| p.support).collect();
        let keep = comps.iter().filter(|c| mins.contains(&c.radical_support()));
        Self::intersect_all(&self.ctx, keep)
    }

    /// Support of the radical of an ideal generated by pure powers.
    fn radical_support(&self) -> u64 {
        self.gens.iter().fold(0, |m, g| m | g.support())
    }

    /// Associated primes: radicals of the irreducible components.
    pub fn associated_primes(&self) -> Result<Vec<MonomialPrime>> {
        if self.is_zero() {
            return Ok(vec![MonomialPrime { ctx: self.ctx.clone(), support: 0 }]);
        }
        let set: BTreeSet<u64> = self
            .irreducible_decomposition()?
            .iter()
            .map(MonomialIdeal::radical_support)
            .collect();
        let mut out: Vec<MonomialPrime> = set
            .into_iter()
            .map(|support| MonomialPrime { ctx: self.ctx.clone(), support })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Polarization into a squarefree ideal; `x_i^a` becomes
    /// `x_i x_i' x_i'' ...`.
    pub fn polarize(&self) -> Result<Polarization> {
        let n = self.nvars();
        let max_exp: Vec<u32> = (0..n)
            .map(|i| self.gens.iter().map(|g| g.exps()[i]).max().unwrap_or(0).max(1))
            .collect();
        let mut names = Vec::new();
        let mut offset = Vec::with_capacity(n);
        for i in 0..n {
            offset.push(names.len());
            for k in 0..max_exp[i] {
                names.push(format!("{}{}", self.ctx.names()[i], "'".repeat(k as usize)));
            }
        }
        let added = names.len() - n;
        let ctx = VarContext::new(names)?;
        let big = ctx.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; big];
                for i in 0..n {
                    for k in 0..g.exps()[i] as usize {
                        e[offset[i] + k] = 1;
                    }
                }
                Monomial(e)
            })
            .collect();
        Ok(Polarization { ideal: Self::from_raw(&ctx, gens), added })
    }

    pub fn format(&self) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.format(&self.ctx)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gens.cmp(&other.gens)
    }
}

fn split(
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, Vec<Vec<Monomial>>>,
) -> Vec<Vec<Monomial>> {
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let pos = gens.iter().position(|g| g.pure_power_var().is_none() && !g.is_one());
    let result = match pos {
        None => vec![gens.clone()],
        Some(p) => {
            let g = &gens[p];
            let n = g.nvars();
            let i = g.exps().iter().position(|&e| e > 0).expect("non-pure-power has support");
            let xa = Monomial::pure_power(n, i, g.exps()[i]);
            let rest = g.div(&xa);
            let mut left = gens.clone();
            left.push(xa);
            let mut right = gens.clone();
            right.push(rest);
            let mut out = split(minimalize(left), memo);
            out.extend(split(minimalize(right), memo));
            out
        }
    };
    memo.insert(gens, result.clone());
    result
}

/// Minimal vertex covers (transversals) of a hypergraph given by edge masks.
pub(crate) fn minimal_vertex_covers(edges: &[u64]) -> Vec<u64> {
    let mut found: BTreeSet<u64> = BTreeSet::new();
    fn rec(edges: &[u64], chosen: u64, found: &mut BTreeSet<u64>) {
        if found.iter().any(|&f| f & !chosen == 0) {
            return;
        }
        match edges.iter().find(|&&e| e & chosen == 0) {
            None => {
                found.retain(|&f| chosen & !f != 0);
                found.insert(chosen);
            }
            Some(&e) => {
                let mut bits = e;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    rec(edges, chosen | v, found);
                    bits &= bits - 1;
                }
            }
        }
    }
    rec(edges, 0, &mut found);
    // a later, smaller cover may have superseded an earlier one
    let all: Vec<u64> = found.iter().copied().collect();
    all.iter()
        .copied()
        .filter(|&c| !all.iter().any(|&d| d != c && d & !c == 0))
        .collect()
}

/// A prime generated by a set of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ctx: VarContext,
    support: u64,
}

impl MonomialPrime {
    pub fn new(ctx: VarContext, support: u64) -> Result<Self> {
        if support & !ctx.all_mask() != 0 {
            return Err(Error::ContextMismatch);
        }
        Ok(MonomialPrime { ctx, support })
    }

    pub fn from_names(ctx: VarContext, names: &[impl AsRef<str>]) -> Result<Self> {
        let support = ctx.mask_of(names)?;
        Ok(MonomialPrime { ctx, support })
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn height(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        m.support() & self.support != 0
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_support(self.ctx.clone(), self.support)
    }

    pub fn var_names(&self) -> Vec<String> {
        self.ctx.names_of_mask(self.support)
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.var_names().join(", "))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.support.reverse_bits().cmp(&other.support.reverse_bits()).reverse())
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub added: usize,
}

/// Wire form `{"vars": [...], "gens": [[e1, ..., en], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            vars: i.ctx.names().to_vec(),
            gens: i.gens.iter().map(|g| g.0.clone()).collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        let ctx = VarContext::new(j.vars)?;
        MonomialIdeal::from_exponents(ctx, j.gens)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IdealJson::deserialize(d)?;
        MonomialIdeal::try_from(j).map_err(serde::de::Error::custom)
    }
}
