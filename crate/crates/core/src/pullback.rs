//! Pullback rings `A ⊆ B` with exact graded linear algebra over ℚ.
//!
//! Two presentations are supported:
//!
//! * **intersection**: `A = T/(P_1 ∩ ... ∩ P_ℓ)` inside `B = ⊕ T/P_i`, where
//!   each `P_i` is generated by a set of variables `F_i`;
//! * **congruence**: `A = {(x, y) ∈ S × S : x ≡ y mod 𝔮}` inside `B = S × S`,
//!   with `S = T` and `𝔮` a monomial ideal.
//!
//! Everything is graded with the variables in degree 1 and `B` generated over
//! `A` in degree 0, so each question reduces to finite-dimensional linear
//! algebra in one degree at a time. An element of `B` is a sparse vector over
//! the keys `(component, monomial)`, where the monomial is a standard monomial
//! of that component.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::monomial::{monomials_of_degree, IdealJson, Monomial, MonomialIdeal, MonomialPrime, VarContext};
use crate::poly::Poly;

pub type BKey = (usize, Monomial);
pub type BVec = SparseVec<BKey, BigRational>;
pub type Piece = Echelon<BKey, Rationals>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PullbackKind {
    Intersection { primes: Vec<MonomialPrime> },
    Congruence { q: MonomialIdeal },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Intersection,
    Congruence,
}

/// `A ⊆ B` together with a per-degree cache of the pieces `A_D`.
pub struct PullbackFamily {
    ctx: VarContext,
    kind: PullbackKind,
    a_cache: Mutex<BTreeMap<u32, Arc<Piece>>>,
}

impl Clone for PullbackFamily {
    fn clone(&self) -> Self {
        Self::raw(self.ctx.clone(), self.kind.clone())
    }
}

impl fmt::Debug for PullbackFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PullbackFamily").field("ctx", &self.ctx).field("kind", &self.kind).finish()
    }
}

impl PullbackFamily {
    fn raw(ctx: VarContext, kind: PullbackKind) -> Self {
        PullbackFamily { ctx, kind, a_cache: Mutex::new(BTreeMap::new()) }
    }

    /// `ℓ ≥ 2` nonzero primes, none containing another.
    pub fn intersection(ctx: VarContext, primes: Vec<MonomialPrime>) -> Result<Self> {
        if primes.len() < 2 {
            return Err(Error::InvalidFamily(format!("need at least two components, got {}", primes.len())));
        }
        Self::check_primes(&ctx, &primes)?;
        Ok(Self::raw(ctx, PullbackKind::Intersection { primes }))
    }

    /// The degenerate one-component case `A = B = T/P`.
    pub fn single_component(ctx: VarContext, prime: MonomialPrime) -> Result<Self> {
        let primes = vec![prime];
        Self::check_primes(&ctx, &primes)?;
        Ok(Self::raw(ctx, PullbackKind::Intersection { primes }))
    }

    fn check_primes(ctx: &VarContext, primes: &[MonomialPrime]) -> Result<()> {
        for (i, p) in primes.iter().enumerate() {
            if p.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
            if p.support() == 0 {
                return Err(Error::InvalidFamily(format!("component {} is the zero prime", i + 1)));
            }
            for (j, q) in primes.iter().enumerate() {
                if i != j && p.support() & !q.support() == 0 {
                    return Err(Error::InvalidFamily(format!(
                        "component {} is contained in component {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `S ×_{S/𝔮} S` for a proper monomial ideal `𝔮`.
    pub fn congruence(q: MonomialIdeal) -> Result<Self> {
        if q.is_unit() {
            return Err(Error::InvalidFamily("the congruence ideal must be proper".into()));
        }
        Ok(Self::raw(q.ctx().clone(), PullbackKind::Congruence { q }))
    }

    /// The degenerate congruence `𝔮 = S`, where `A = B = S × S`.
    pub fn trivial_congruence(ctx: VarContext) -> Self {
        Self::raw(ctx.clone(), PullbackKind::Congruence { q: MonomialIdeal::unit(ctx) })
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn kind(&self) -> &PullbackKind {
        &self.kind
    }

    pub fn mode(&self) -> Mode {
        match self.kind {
            PullbackKind::Intersection { .. } => Mode::Intersection,
            PullbackKind::Congruence { .. } => Mode::Congruence,
        }
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    /// Number of components of `B`.
    pub fn ell(&self) -> usize {
        match &self.kind {
            PullbackKind::Intersection { primes } => primes.len(),
            PullbackKind::Congruence { .. } => 2,
        }
    }

    /// Variables killed in component `i`.
    pub fn killed(&self, i: usize) -> u64 {
        match &self.kind {
            PullbackKind::Intersection { primes } => primes[i].support(),
            PullbackKind::Congruence { .. } => 0,
        }
    }

    pub fn survives(&self, i: usize, u: &Monomial) -> bool {
        u.support() & self.killed(i) == 0
    }

    /// The defining ideal `𝔞` of `A` in `T`: `⋂ P_i`, or `(0)` in congruence mode.
    pub fn defining_ideal(&self) -> MonomialIdeal {
        match &self.kind {
            PullbackKind::Intersection { primes } => {
                let ideals: Vec<MonomialIdeal> = primes.iter().map(MonomialPrime::ideal).collect();
                MonomialIdeal::intersect_all(&self.ctx, ideals.iter()).expect("same context")
            }
            PullbackKind::Congruence { .. } => MonomialIdeal::zero(self.ctx.clone()),
        }
    }

    /// `J_i = ⋂_{j ≠ i} P_j` (intersection mode only).
    pub fn j_ideals(&self) -> Vec<MonomialIdeal> {
        match &self.kind {
            PullbackKind::Intersection { primes } => (0..primes.len())
                .map(|i| {
                    let others: Vec<MonomialIdeal> = primes
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, p)| p.ideal())
                        .collect();
                    MonomialIdeal::intersect_all(&self.ctx, others.iter()).expect("same context")
                })
                .collect(),
            PullbackKind::Congruence { .. } => Vec::new(),
        }
    }

    /// Closed form of the conductor `A:B`: `Σ J_i` in intersection mode and
    /// `𝔮` (meaning `𝔮 × 𝔮 = 𝔮B`) in congruence mode.
    pub fn conductor_closed_form(&self) -> MonomialIdeal {
        match &self.kind {
            PullbackKind::Intersection { .. } => {
                let js = self.j_ideals();
                MonomialIdeal::sum_all(&self.ctx, js.iter()).expect("same context")
            }
            PullbackKind::Congruence { q } => q.clone(),
        }
    }

    /// Standard monomial basis of `B_D`.
    pub fn b_basis(&self, d: u32) -> Vec<BKey> {
        let all = self.ctx.all_mask();
        let n = self.nvars();
        (0..self.ell())
            .flat_map(|i| {
                monomials_of_degree(n, all & !self.killed(i), d).into_iter().map(move |u| (i, u))
            })
            .collect()
    }

    /// Image of `f ∈ T` under the diagonal map `T → B`.
    pub fn diag(&self, f: &Poly) -> BVec {
        let mut out = BVec::new();
        for i in 0..self.ell() {
            for (u, c) in f.terms() {
                if self.survives(i, u) {
                    out.insert((i, u.clone()), c.clone());
                }
            }
        }
        out
    }

    pub fn diag_monomial(&self, u: &Monomial) -> BVec {
        self.diag(&Poly::monomial(u.clone()))
    }

    /// `f·e_j`: `f` placed in component `j` only.
    pub fn placed(&self, f: &Poly, j: usize) -> BVec {
        f.terms()
            .iter()
            .filter(|(u, _)| self.survives(j, u))
            .map(|(u, c)| ((j, u.clone()), c.clone()))
            .collect()
    }

    pub fn idempotent(&self, j: usize) -> BVec {
        [((j, Monomial::one(self.nvars())), BigRational::one())].into_iter().collect()
    }

    /// Componentwise product in `B`.
    pub fn mul(&self, x: &BVec, y: &BVec) -> BVec {
        let mut out = BVec::new();
        for ((i, u), c) in x {
            for ((j, v), d) in y {
                if i != j {
                    continue;
                }
                let key = (*i, u.mul(v));
                let t = c * d;
                let slot = out.entry(key.clone()).or_insert_with(BigRational::zero);
                *slot += t;
                if slot.is_zero() {
                    out.remove(&key);
                }
            }
        }
        out
    }

    /// A spanning set of `A_D` inside `B_D` (in fact a basis).
    pub fn a_spanning(&self, d: u32) -> Vec<BVec> {
        let n = self.nvars();
        match &self.kind {
            PullbackKind::Intersection { .. } => {
                let all = self.ctx.all_mask();
                let mut seen = BTreeSet::new();
                for i in 0..self.ell() {
                    seen.extend(monomials_of_degree(n, all & !self.killed(i), d));
                }
                seen.iter().map(|u| self.diag_monomial(u)).collect()
            }
            PullbackKind::Congruence { q } => {
                let mons = monomials_of_degree(n, self.ctx.all_mask(), d);
                let mut out: Vec<BVec> = mons.iter().map(|u| self.diag_monomial(u)).collect();
                out.extend(
                    mons.iter()
                        .filter(|u| q.contains_monomial(u))
                        .map(|u| self.placed(&Poly::monomial(u.clone()), 0)),
                );
                out
            }
        }
    }

    /// Row-reduced basis of `A_D`, cached.
    pub fn a_piece(&self, d: u32) -> Arc<Piece> {
        if let Some(p) = self.a_cache.lock().expect("cache lock").get(&d) {
            return p.clone();
        }
        let mut e = Piece::new(Rationals);
        for v in self.a_spanning(d) {
            e.insert(v);
        }
        let p = Arc::new(e);
        self.a_cache.lock().expect("cache lock").entry(d).or_insert(p).clone()
    }

    /// `dim_k (B/A)_D`.
    pub fn cokernel_dim(&self, d: u32) -> usize {
        self.b_basis(d).len() - self.a_piece(d).dim()
    }

    /// Homogeneous generators of the maximal ideal of `A`, as elements of `B`.
    pub fn maximal_ideal_generators(&self) -> Vec<(u32, BVec)> {
        let n = self.nvars();
        let mut out: Vec<(u32, BVec)> = (0..n)
            .map(|j| (1, self.diag_monomial(&Monomial::var(n, j))))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        if let PullbackKind::Congruence { q } = &self.kind {
            if !q.is_unit() {
                for g in q.gens() {
                    out.push((g.degree(), self.placed(&Poly::monomial(g.clone()), 0)));
                }
            }
        }
        out
    }

    /// Homogeneous generators of the closed-form conductor, as elements of `B`.
    pub fn conductor_generators(&self) -> Vec<(u32, BVec)> {
        let c = self.conductor_closed_form();
        match &self.kind {
            PullbackKind::Intersection { .. } => c
                .gens()
                .iter()
                .map(|g| (g.degree(), self.diag_monomial(g)))
                .filter(|(_, v)| !v.is_empty())
                .collect(),
            PullbackKind::Congruence { .. } => c
                .gens()
                .iter()
                .flat_map(|g| {
                    let p = Poly::monomial(g.clone());
                    [(g.degree(), self.placed(&p, 0)), (g.degree(), self.placed(&p, 1))]
                })
                .collect(),
        }
    }

    pub fn element(&self, coords: Vec<Poly>) -> Result<BElement> {
        if coords.len() != self.ell() {
            return Err(Error::MalformedElement(format!(
                "expected {} coordinates, got {}",
                self.ell(),
                coords.len()
            )));
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, f)| f.filter(|u| self.survives(i, u)))
            .collect();
        Ok(BElement { coords })
    }

    pub fn to_vec(&self, b: &BElement) -> Result<BVec> {
        self.check_element(b)?;
        let mut out = BVec::new();
        for (i, f) in b.coords.iter().enumerate() {
            for (u, c) in f.terms() {
                out.insert((i, u.clone()), c.clone());
            }
        }
        Ok(out)
    }

    pub fn from_vec(&self, v: &BVec) -> BElement {
        let mut coords = vec![Poly::zero(); self.ell()];
        for ((i, u), c) in v {
            coords[*i].add_term(u.clone(), c.clone());
        }
        BElement { coords }
    }

    fn check_element(&self, b: &BElement) -> Result<()> {
        if b.coords.len() != self.ell() {
            return Err(Error::MalformedElement(format!(
                "expected {} coordinates, got {}",
                self.ell(),
                b.coords.len()
            )));
        }
        for (i, f) in b.coords.iter().enumerate() {
            if f.terms().keys().any(|u| u.nvars() != self.nvars()) {
                return Err(Error::ContextMismatch);
            }
            if let Some(u) = f.terms().keys().find(|u| !self.survives(i, u)) {
                return Err(Error::MalformedElement(format!(
                    "coordinate {} contains {}, which is zero in that component",
                    i + 1,
                    u.format(&self.ctx)
                )));
            }
        }
        Ok(())
    }
}

/// An element of `B`: one reduced polynomial per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BElement {
    pub coords: Vec<Poly>,
}

/// Proof that an element of `B` lies in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Intersection mode: `g ∈ T` whose diagonal image is the element.
    Lift(Poly),
    /// Congruence mode: the element is `(y, y) + (d, 0)` with `d ∈ 𝔮`.
    Split { diagonal: Poly, difference: Poly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<Witness>,
}

/// Decides whether `b ∈ B` lies in `A`.
pub fn image_membership(fam: &PullbackFamily, b: &BElement) -> Result<Membership> {
    fam.check_element(b)?;
    match fam.kind() {
        PullbackKind::Intersection { .. } => {
            let mons: BTreeSet<&Monomial> = b.coords.iter().flat_map(|f| f.terms().keys()).collect();
            let mut lift = Poly::zero();
            for u in mons {
                let mut coef: Option<BigRational> = None;
                for (i, f) in b.coords.iter().enumerate() {
                    if !fam.survives(i, u) {
                        continue;
                    }
                    let c = f.terms().get(u).cloned().unwrap_or_else(BigRational::zero);
                    match &coef {
                        None => coef = Some(c),
                        Some(prev) if *prev != c => return Ok(Membership { member: false, witness: None }),
                        Some(_) => {}
                    }
                }
                lift.add_term(u.clone(), coef.expect("monomial survives where it appears"));
            }
            Ok(Membership { member: true, witness: Some(Witness::Lift(lift)) })
        }
        PullbackKind::Congruence { q } => {
            let diff = b.coords[0].sub(&b.coords[1]);
            let member = diff.terms().keys().all(|u| q.contains_monomial(u));
            Ok(Membership {
                member,
                witness: member.then(|| Witness::Split { diagonal: b.coords[1].clone(), difference: diff }),
            })
        }
    }
}

/// A graded `A`-submodule of `B` given by homogeneous generators.
pub struct GradedSubmodule {
    gens: Vec<(u32, BVec)>,
    bound: Option<u32>,
    cache: Mutex<BTreeMap<u32, Arc<Piece>>>,
}

impl Clone for GradedSubmodule {
    fn clone(&self) -> Self {
        GradedSubmodule::new(self.gens.clone(), self.bound)
    }
}

impl fmt::Debug for GradedSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedSubmodule")
            .field("generators", &self.gens.len())
            .field("bound", &self.bound)
            .finish()
    }
}

fn homogeneous_degree(v: &BVec) -> Option<u32> {
    let mut it = v.keys().map(|(_, u)| u.degree());
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

impl GradedSubmodule {
    fn new(gens: Vec<(u32, BVec)>, bound: Option<u32>) -> Self {
        GradedSubmodule { gens, bound, cache: Mutex::new(BTreeMap::new()) }
    }

    /// The submodule generated by homogeneous elements of `B`.
    pub fn generated_by(gens: Vec<BVec>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if g.is_empty() {
                continue;
            }
            let d = homogeneous_degree(&g).ok_or(Error::Inhomogeneous)?;
            out.push((d, g));
        }
        Ok(Self::new(out, None))
    }

    /// `A` itself.
    pub fn ring_a(fam: &PullbackFamily) -> Self {
        let one = Monomial::one(fam.nvars());
        Self::new(vec![(0, fam.diag_monomial(&one))], None)
    }

    /// `B` itself.
    pub fn ring_b(fam: &PullbackFamily) -> Self {
        Self::new((0..fam.ell()).map(|j| (0, fam.idempotent(j))).collect(), None)
    }

    /// The ideal of `A` generated by the images of the generators of `I`.
    pub fn a_ideal(fam: &PullbackFamily, i: &MonomialIdeal) -> Result<Self> {
        if i.ctx() != fam.ctx() {
            return Err(Error::ContextMismatch);
        }
        Self::generated_by(i.gens().iter().map(|g| fam.diag_monomial(g)).collect())
    }

    /// The extended ideal `IB`.
    pub fn b_ideal(fam: &PullbackFamily, i: &MonomialIdeal) -> Result<Self> {
        if i.ctx() != fam.ctx() {
            return Err(Error::ContextMismatch);
        }
        let mut gens = Vec::new();
        for g in i.gens() {
            for j in 0..fam.ell() {
                gens.push(fam.placed(&Poly::monomial(g.clone()), j));
            }
        }
        Self::generated_by(gens)
    }

    /// `Σ a_i B` for homogeneous `a_i ∈ T`.
    pub fn extended_principal_sum(fam: &PullbackFamily, elems: &[Poly]) -> Result<Self> {
        let mut gens = Vec::new();
        for a in elems {
            if a.homogeneous_degree().is_none() {
                return Err(Error::Inhomogeneous);
            }
            for j in 0..fam.ell() {
                gens.push(fam.placed(a, j));
            }
        }
        Self::generated_by(gens)
    }

    pub fn generators(&self) -> &[(u32, BVec)] {
        &self.gens
    }

    /// Degree up to which this module was computed, when it came from a
    /// bounded computation.
    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    /// The degree-`d` piece, row-reduced.
    pub fn piece(&self, fam: &PullbackFamily, d: u32) -> Arc<Piece> {
        if let Some(p) = self.cache.lock().expect("cache lock").get(&d) {
            return p.clone();
        }
        let mut e = Piece::new(Rationals);
        for (gd, g) in &self.gens {
            if *gd > d {
                continue;
            }
            for a in fam.a_spanning(d - gd) {
                e.insert(fam.mul(&a, g));
            }
        }
        let p = Arc::new(e);
        self.cache.lock().expect("cache lock").entry(d).or_insert(p).clone()
    }

    pub fn contains(&self, fam: &PullbackFamily, v: &BVec) -> Result<bool> {
        if v.is_empty() {
            return Ok(true);
        }
        let d = homogeneous_degree(v).ok_or(Error::Inhomogeneous)?;
        Ok(self.piece(fam, d).contains(v))
    }

    /// Degree-wise equality in degrees `0..=bound`.
    pub fn equal_up_to(&self, other: &GradedSubmodule, fam: &PullbackFamily, bound: u32) -> bool {
        (0..=bound).all(|d| self.piece(fam, d).same_span(&other.piece(fam, d)))
    }

    /// Degree-wise containment `self ⊆ other` in degrees `0..=bound`.
    pub fn contained_up_to(&self, other: &GradedSubmodule, fam: &PullbackFamily, bound: u32) -> bool {
        (0..=bound).all(|d| self.piece(fam, d).is_subspace_of(&other.piece(fam, d)))
    }
}

/// Result of [`conductor`].
#[derive(Clone, Debug)]
pub struct Conductor {
    pub ideal: MonomialIdeal,
    /// Degrees `0..=bound` were compared between the two routes.
    pub bound: u32,
    /// `(degree, dim of the conductor piece inside A_D)`.
    pub piece_dims: Vec<(u32, usize)>,
}

/// `{a ∈ A_D : a·e_j ∈ A for every j}`, as a subspace of `B_D`.
pub fn conductor_piece_direct(fam: &PullbackFamily, d: u32) -> Piece {
    let span = fam.a_spanning(d);
    let a_d = fam.a_piece(d);
    let images: Vec<SparseVec<(usize, BKey), BigRational>> = span
        .iter()
        .map(|a| {
            let mut img = SparseVec::new();
            for j in 0..fam.ell() {
                for (k, c) in a_d.reduce(fam.mul(a, &fam.idempotent(j))) {
                    img.insert((j, k), c);
                }
            }
            img
        })
        .collect();
    let mut out = Piece::new(Rationals);
    for kv in kernel(&Rationals, &images) {
        let mut v = BVec::new();
        for (idx, c) in kv {
            for (k, x) in &span[idx] {
                let slot = v.entry(k.clone()).or_insert_with(BigRational::zero);
                *slot += c.clone() * x;
            }
        }
        v.retain(|_, c| !c.is_zero());
        out.insert(v);
    }
    out
}

/// The conductor `A:B`, computed by the closed form and by degree-wise
/// kernels in degrees `0..=bound`; any disagreement is an error. The default
/// bound is one more than the largest generator degree of the closed form.
pub fn conductor(fam: &PullbackFamily, bound: Option<u32>) -> Result<Conductor> {
    let closed = fam.conductor_closed_form();
    let bound = bound.unwrap_or(closed.max_degree() + 1);
    let closed_mod = GradedSubmodule::new(fam.conductor_generators(), None);
    let mut piece_dims = Vec::new();
    for d in 0..=bound {
        let direct = conductor_piece_direct(fam, d);
        let expected = closed_mod.piece(fam, d);
        if !direct.same_span(&expected) {
            return Err(Error::MethodDisagreement(format!(
                "conductor in degree {d}: direct dimension {}, closed form dimension {}",
                direct.dim(),
                expected.dim()
            )));
        }
        piece_dims.push((d, direct.dim()));
    }
    Ok(Conductor { ideal: closed, bound, piece_dims })
}

/// Whether an ideal of `T` is primary to the homogeneous maximal ideal.
pub fn is_maximal_primary(i: &MonomialIdeal) -> bool {
    let n = i.nvars();
    (0..n).all(|j| i.gens().iter().any(|g| g.pure_power_var() == Some(j)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CokernelProfile {
    pub length: usize,
    /// `dim (B/A)_D` for `D = 0, 1, ...` up to the last nonzero degree.
    pub hilbert_function: Vec<usize>,
    pub socle_dim: usize,
    pub socle_by_degree: Vec<usize>,
    pub conductor_annihilates: bool,
    pub maximal_ideal_annihilates: bool,
}

/// Whether every homogeneous element in `gens` kills `B/A`.
pub fn annihilates_cokernel(fam: &PullbackFamily, gens: &[(u32, BVec)], top: u32) -> bool {
    (0..=top).all(|d| {
        let a_d = fam.a_piece(d);
        fam.b_basis(d).into_iter().filter(|k| !a_d.is_pivot(k)).all(|k| {
            let e: BVec = [(k, BigRational::one())].into_iter().collect();
            gens.iter().all(|(gd, g)| fam.a_piece(d + gd).contains(&fam.mul(g, &e)))
        })
    })
}

/// Hilbert function, length and socle of `B/A`. Requires the conductor to be
/// primary to the maximal ideal; otherwise `B/A` has infinite length.
pub fn cokernel_profile(fam: &PullbackFamily) -> Result<CokernelProfile> {
    let c = fam.conductor_closed_form();
    if !c.is_unit() && !is_maximal_primary(&c) {
        return Err(Error::InfiniteLength);
    }
    let mut hilbert = Vec::new();
    let mut d = 0u32;
    loop {
        let h = fam.cokernel_dim(d);
        if h == 0 {
            break;
        }
        hilbert.push(h);
        d += 1;
    }
    // B is generated over A in degree 0 and A is standard graded, so one
    // vanishing degree forces all later ones to vanish
    if fam.cokernel_dim(d + 1) != 0 {
        return Err(Error::MethodDisagreement(format!(
            "(B/A) vanishes in degree {d} but not in degree {}",
            d + 1
        )));
    }
    let mgens = fam.maximal_ideal_generators();
    let mut socle_by_degree = Vec::new();
    for (deg, _) in hilbert.iter().enumerate() {
        let deg = deg as u32;
        let a_d = fam.a_piece(deg);
        let reps: Vec<BKey> = fam.b_basis(deg).into_iter().filter(|k| !a_d.is_pivot(k)).collect();
        let images: Vec<SparseVec<(usize, BKey), BigRational>> = reps
            .iter()
            .map(|k| {
                let e: BVec = [(k.clone(), BigRational::one())].into_iter().collect();
                let mut img = SparseVec::new();
                for (gi, (gd, g)) in mgens.iter().enumerate() {
                    for (kk, cc) in fam.a_piece(deg + gd).reduce(fam.mul(g, &e)) {
                        img.insert((gi, kk), cc);
                    }
                }
                img
            })
            .collect();
        // reps are reduced modulo A_D already, so the kernel is the socle piece
        socle_by_degree.push(kernel(&Rationals, &images).len());
    }
    let top = hilbert.len() as u32;
    Ok(CokernelProfile {
        length: hilbert.iter().sum(),
        socle_dim: socle_by_degree.iter().sum(),
        socle_by_degree,
        conductor_annihilates: annihilates_cokernel(fam, &fam.conductor_generators(), top),
        maximal_ideal_annihilates: annihilates_cokernel(fam, &mgens, top),
        hilbert_function: hilbert,
    })
}

/// `{b ∈ B : b·I ⊆ X}` in degrees `0..=bound`, with `I` acting through the
/// diagonal. The default bound is the largest generator degree of `I` plus
/// the number of variables. The result is stamped with its bound.
pub fn colon_in_b(
    fam: &PullbackFamily,
    x: &GradedSubmodule,
    i: &MonomialIdeal,
    bound: Option<u32>,
) -> Result<GradedSubmodule> {
    if i.ctx() != fam.ctx() {
        return Err(Error::ContextMismatch);
    }
    let bound = bound.unwrap_or(i.max_degree() + fam.nvars() as u32);
    let igens: Vec<(u32, BVec)> = i
        .gens()
        .iter()
        .map(|g| (g.degree(), fam.diag_monomial(g)))
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let mut result = GradedSubmodule::new(Vec::new(), Some(bound));
    for d in 0..=bound {
        let basis = fam.b_basis(d);
        let images: Vec<SparseVec<(usize, BKey), BigRational>> = basis
            .iter()
            .map(|k| {
                let e: BVec = [(k.clone(), BigRational::one())].into_iter().collect();
                let mut img = SparseVec::new();
                for (gi, (gd, g)) in igens.iter().enumerate() {
                    for (kk, cc) in x.piece(fam, d + gd).reduce(fam.mul(g, &e)) {
                        img.insert((gi, kk), cc);
                    }
                }
                img
            })
            .collect();
        let generated = result.piece(fam, d);
        let mut fresh = Vec::new();
        let mut span = (*generated).clone();
        for kv in kernel(&Rationals, &images) {
            let v: BVec = kv.into_iter().map(|(idx, c)| (basis[idx].clone(), c)).collect();
            if span.insert(v.clone()).is_some() {
                fresh.push((d, v));
            }
        }
        if !fresh.is_empty() {
            let mut gens = result.gens;
            gens.extend(fresh);
            result = GradedSubmodule::new(gens, Some(bound));
        }
    }
    Ok(result)
}

/// Outcome of [`verify_generation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationCheck {
    pub holds: bool,
    /// Every `a_i e_j` lies in `A` and in the target ideal.
    pub forward: bool,
    /// Every generator of the target lies in `Σ a_i B`.
    pub backward: bool,
    /// `(degree, dim (Σ a_i B)_D, dim of the target in degree D)`.
    pub degree_dims: Vec<(u32, usize, usize)>,
}

/// Whether `Σ a_i B` equals the ideal of `A` generated by `target` (taken as
/// `target·B` in congruence mode, which is what the conductor is there).
pub fn verify_generation(fam: &PullbackFamily, target: &MonomialIdeal, elems: &[Poly]) -> Result<GenerationCheck> {
    if target.ctx() != fam.ctx() {
        return Err(Error::ContextMismatch);
    }
    for a in elems {
        if a.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous);
        }
    }
    let sum = GradedSubmodule::extended_principal_sum(fam, elems)?;
    let tgt = match fam.kind() {
        PullbackKind::Intersection { .. } => GradedSubmodule::a_ideal(fam, target)?,
        PullbackKind::Congruence { .. } => GradedSubmodule::b_ideal(fam, target)?,
    };
    let mut forward = true;
    for a in elems {
        for j in 0..fam.ell() {
            let v = fam.placed(a, j);
            let b = fam.from_vec(&v);
            if !image_membership(fam, &b)?.member || !tgt.contains(fam, &v)? {
                forward = false;
            }
        }
    }
    let mut backward = true;
    for (_, g) in tgt.generators() {
        if !sum.contains(fam, g)? {
            backward = false;
        }
    }
    let top = target.max_degree().max(elems.iter().filter_map(Poly::homogeneous_degree).max().unwrap_or(0));
    let degree_dims = (0..=top)
        .map(|d| (d, sum.piece(fam, d).dim(), tgt.piece(fam, d).dim()))
        .collect();
    Ok(GenerationCheck { holds: forward && backward, forward, backward, degree_dims })
}

/// Whether `a_1, ..., a_r` is a regular sequence on `B`, checked in degrees
/// `0..=bound`: multiplication by `a_k` is injective on `(B/(a_1..a_{k-1})B)_D`.
pub fn is_b_regular_sequence(fam: &PullbackFamily, elems: &[Poly], bound: u32) -> Result<bool> {
    for k in 0..elems.len() {
        let a = &elems[k];
        let da = a.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
        let prev = GradedSubmodule::extended_principal_sum(fam, &elems[..k])?;
        let diag = fam.diag(a);
        for d in 0..=bound {
            let basis = fam.b_basis(d);
            let target = prev.piece(fam, d + da);
            let images: Vec<BVec> = basis
                .iter()
                .map(|key| {
                    let e: BVec = [(key.clone(), BigRational::one())].into_iter().collect();
                    target.reduce(fam.mul(&diag, &e))
                })
                .collect();
            let here = prev.piece(fam, d);
            for kv in kernel(&Rationals, &images) {
                let v: BVec = kv.into_iter().map(|(idx, c)| (basis[idx].clone(), c)).collect();
                if !here.contains(&v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Input form of a family: `{"vars": [...], "F": [["x1", "x2"], ...]}` or
/// `{"mode": "congruence", "q": {"vars": [...], "gens": [...]}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<IdealJson>,
}

impl TryFrom<FamilyJson> for PullbackFamily {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Self> {
        match j.mode.unwrap_or(Mode::Intersection) {
            Mode::Intersection => {
                let vars = j.vars.ok_or_else(|| Error::InvalidFamily("missing `vars`".into()))?;
                let ctx = VarContext::new(vars)?;
                let f = j.f.ok_or_else(|| Error::InvalidFamily("missing `F`".into()))?;
                let primes = f
                    .iter()
                    .map(|s| MonomialPrime::from_names(ctx.clone(), s))
                    .collect::<Result<Vec<_>>>()?;
                PullbackFamily::intersection(ctx, primes)
            }
            Mode::Congruence => {
                let q = j.q.ok_or_else(|| Error::InvalidFamily("missing `q`".into()))?;
                PullbackFamily::congruence(MonomialIdeal::try_from(q)?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn f_family(n: usize, sets: &[&[usize]]) -> PullbackFamily {
        let ctx = VarContext::indexed("x", n).unwrap();
        let primes = sets
            .iter()
            .map(|s| MonomialPrime::new(ctx.clone(), s.iter().fold(0, |m, v| m | 1 << (v - 1))).unwrap())
            .collect();
        PullbackFamily::intersection(ctx, primes).unwrap()
    }

    fn n6m4() -> PullbackFamily {
        f_family(6, &[&[1, 2, 3, 4], &[3, 4, 5, 6], &[5, 6, 1, 2]])
    }

    fn xyzw() -> PullbackFamily {
        let ctx = VarContext::new(["x", "y", "z", "w"]).unwrap();
        let p1 = MonomialPrime::from_names(ctx.clone(), &["x", "y"]).unwrap();
        let p2 = MonomialPrime::from_names(ctx.clone(), &["z", "w"]).unwrap();
        PullbackFamily::intersection(ctx, vec![p1, p2]).unwrap()
    }

    #[test]
    fn constructor_checks() {
        let ctx = VarContext::indexed("x", 3).unwrap();
        let p = |m| MonomialPrime::new(ctx.clone(), m).unwrap();
        assert!(PullbackFamily::intersection(ctx.clone(), vec![p(1)]).is_err());
        assert!(PullbackFamily::intersection(ctx.clone(), vec![p(1), p(3)]).is_err());
        assert!(PullbackFamily::intersection(ctx.clone(), vec![p(1), p(2)]).is_ok());
        assert!(PullbackFamily::congruence(MonomialIdeal::unit(ctx)).is_err());
    }

    #[test]
    fn diagonal_is_in_a() {
        let fam = n6m4();
        let x1 = parse_poly(fam.ctx(), "x1").unwrap();
        let b = fam.from_vec(&fam.diag(&x1));
        let m = image_membership(&fam, &b).unwrap();
        assert!(m.member);
        assert_eq!(m.witness, Some(Witness::Lift(x1)));
    }

    #[test]
    fn x5_in_first_component_only_is_in_a() {
        let fam = n6m4();
        let x5 = parse_poly(fam.ctx(), "x5").unwrap();
        let b = fam.element(vec![x5.clone(), Poly::zero(), Poly::zero()]).unwrap();
        let m = image_membership(&fam, &b).unwrap();
        assert!(m.member);
        assert_eq!(m.witness, Some(Witness::Lift(x5)));
        // x1 survives in the second component only, so (0, x1, 0) is the diagonal of x1
        let x1 = parse_poly(fam.ctx(), "x1").unwrap();
        let c = fam.element(vec![Poly::zero(), x1, Poly::zero()]).unwrap();
        assert!(image_membership(&fam, &c).unwrap().member);
    }

    #[test]
    fn malformed_tuples_rejected() {
        let fam = n6m4();
        let bad = BElement { coords: vec![Poly::zero(); 2] };
        assert!(matches!(image_membership(&fam, &bad), Err(Error::MalformedElement(_))));
        let x1 = parse_poly(fam.ctx(), "x1").unwrap();
        let unreduced = BElement { coords: vec![x1, Poly::zero(), Poly::zero()] };
        assert!(matches!(image_membership(&fam, &unreduced), Err(Error::MalformedElement(_))));
    }

    #[test]
    fn congruence_membership() {
        let ctx = VarContext::indexed("x", 2).unwrap();
        let q = MonomialIdeal::from_exponents(ctx.clone(), vec![vec![2, 0], vec![0, 1]]).unwrap();
        let fam = PullbackFamily::congruence(q).unwrap();
        let one = Poly::monomial(Monomial::one(2));
        let b = fam.element(vec![one, Poly::zero()]).unwrap();
        assert!(!image_membership(&fam, &b).unwrap().member);
        let x2 = parse_poly(&ctx, "x2").unwrap();
        let c = fam.element(vec![x2, Poly::zero()]).unwrap();
        assert!(image_membership(&fam, &c).unwrap().member);
    }

    #[test]
    fn conductor_of_two_planes_is_maximal() {
        let fam = xyzw();
        let c = conductor(&fam, None).unwrap();
        assert_eq!(c.ideal, MonomialIdeal::maximal(fam.ctx().clone()));
    }

    #[test]
    fn conductor_of_n6m4_is_maximal() {
        let fam = n6m4();
        let c = conductor(&fam, None).unwrap();
        assert_eq!(c.ideal, MonomialIdeal::maximal(fam.ctx().clone()));
    }

    #[test]
    fn cokernel_of_n6m4() {
        let fam = n6m4();
        let p = cokernel_profile(&fam).unwrap();
        assert_eq!(p.length, 2);
        assert_eq!(p.hilbert_function, vec![2]);
        assert_eq!(p.socle_dim, 2);
        assert!(p.conductor_annihilates);
        assert!(p.maximal_ideal_annihilates);
    }

    #[test]
    fn infinite_length_detected() {
        let fam = f_family(3, &[&[1], &[2]]);
        assert!(matches!(cokernel_profile(&fam), Err(Error::InfiniteLength)));
    }

    #[test]
    fn degenerate_pullbacks_have_trivial_cokernel() {
        let ctx = VarContext::indexed("x", 2).unwrap();
        let fam = PullbackFamily::trivial_congruence(ctx.clone());
        assert_eq!(cokernel_profile(&fam).unwrap().length, 0);
        let single = PullbackFamily::single_component(ctx.clone(), MonomialPrime::new(ctx, 1).unwrap()).unwrap();
        assert_eq!(cokernel_profile(&single).unwrap().length, 0);
    }

    #[test]
    fn fiber_product_x1_squared() {
        let ctx = VarContext::indexed("x", 2).unwrap();
        let q = MonomialIdeal::from_exponents(ctx.clone(), vec![vec![2, 0], vec![0, 1]]).unwrap();
        let fam = PullbackFamily::congruence(q.clone()).unwrap();
        let c = conductor(&fam, None).unwrap();
        assert_eq!(c.ideal, q);
        let p = cokernel_profile(&fam).unwrap();
        assert_eq!((p.length, p.socle_dim), (2, 1));
        let elems = vec![parse_poly(&ctx, "x1^2").unwrap(), parse_poly(&ctx, "x2").unwrap()];
        assert!(verify_generation(&fam, &q, &elems).unwrap().holds);
    }

    #[test]
    fn maximal_ideal_generated_by_two_linear_forms() {
        let fam = n6m4();
        let m = MonomialIdeal::maximal(fam.ctx().clone());
        let a = parse_poly(fam.ctx(), "x1 + x3 + x5").unwrap();
        let b = parse_poly(fam.ctx(), "x2 + x4 + x6").unwrap();
        let ok = verify_generation(&fam, &m, &[a.clone(), b.clone()]).unwrap();
        assert!(ok.holds);
        let only_a = verify_generation(&fam, &m, &[a.clone()]).unwrap();
        assert!(!only_a.holds);
        assert_eq!(only_a.degree_dims[1], (1, 3, 6));
        let x1 = parse_poly(fam.ctx(), "x1").unwrap();
        let only_x1 = verify_generation(&fam, &m, &[x1]).unwrap();
        assert!(!only_x1.holds);
        assert_eq!(only_x1.degree_dims[1], (1, 1, 6));
        assert!(is_b_regular_sequence(&fam, &[a, b], 3).unwrap());
    }

    #[test]
    fn inhomogeneous_generation_rejected() {
        let fam = n6m4();
        let m = MonomialIdeal::maximal(fam.ctx().clone());
        let bad = parse_poly(fam.ctx(), "x1 + x2^2").unwrap();
        assert!(matches!(verify_generation(&fam, &m, &[bad]), Err(Error::Inhomogeneous)));
    }

    #[test]
    fn colon_of_a_by_unit_is_a() {
        let fam = xyzw();
        let a = GradedSubmodule::ring_a(&fam);
        let unit = MonomialIdeal::unit(fam.ctx().clone());
        let c = colon_in_b(&fam, &a, &unit, Some(4)).unwrap();
        assert_eq!(c.bound(), Some(4));
        assert!(c.equal_up_to(&a, &fam, 4));
    }

    #[test]
    fn powers_of_maximal_ideal_have_endomorphism_ring_b() {
        let fam = xyzw();
        let b = GradedSubmodule::ring_b(&fam);
        let m = MonomialIdeal::maximal(fam.ctx().clone());
        for l in 1..=3 {
            let ml = m.power(l);
            let x = GradedSubmodule::a_ideal(&fam, &ml).unwrap();
            let c = colon_in_b(&fam, &x, &ml, None).unwrap();
            let bound = c.bound().unwrap();
            assert!(c.equal_up_to(&b, &fam, bound), "l = {l}");
        }
    }

    #[test]
    fn family_json() {
        let j: FamilyJson = serde_json::from_str(r#"{"vars":["a","b","c"],"F":[["a"],["b","c"]]}"#).unwrap();
        let fam = PullbackFamily::try_from(j).unwrap();
        assert_eq!(fam.ell(), 2);
        let k: FamilyJson =
            serde_json::from_str(r#"{"mode":"congruence","q":{"vars":["a","b"],"gens":[[2,0],[0,1]]}}"#).unwrap();
        assert_eq!(PullbackFamily::try_from(k).unwrap().mode(), Mode::Congruence);
    }
}
