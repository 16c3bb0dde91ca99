//! Simplicial complexes, reduced homology over a field, Hochster's formula
//! and depth of Stanley–Reisner rings.
//!
//! # Betti indexing
//!
//! [`graded_betti`] returns the multigraded Betti numbers of the *ideal* `I`
//! (not of `T/I`):
//!
//! ```text
//! β_{i,σ}(I) = dim_k H̃_{|σ|-i-2}(Δ_σ),   i ≥ 0,
//! ```
//!
//! so `β_{0,σ}` counts minimal generators. The term `i = -1, σ = ∅` (the
//! copy of `T` in a resolution of `T/I`) is not stored. Consequently
//! `pd(T/I) = 1 + max{i : β_{i,σ} ≠ 0}` for a nonzero ideal, and
//! `depth T/I = n - pd(T/I)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField};
use crate::linalg::{rank_dense, rank_fraction_free};
use crate::monomial::{minimal_vertex_covers, MonomialIdeal, VarContext};

/// Largest vertex count accepted by the `2^n` subset sweep.
pub const MAX_SWEEP_VARS: usize = 16;

/// A simplicial complex on the vertex set of a [`VarContext`], stored by
/// facets. No facets at all is the void complex; the single empty facet is
/// the irrelevant complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VarContext,
    facets: Vec<u64>,
}

fn sort_masks(masks: &mut [u64]) {
    // by size, then lexicographically on the sorted vertex lists
    masks.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
}

fn maximal_only(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable();
    masks.dedup();
    let all = masks.clone();
    masks.retain(|&m| !all.iter().any(|&o| o != m && m & !o == 0));
    sort_masks(&mut masks);
    masks
}

fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & mask) };
        Some(c)
    })
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary generating faces; non-maximal ones are dropped.
    pub fn from_faces(vertices: VarContext, faces: Vec<u64>) -> Result<Self> {
        if faces.iter().any(|&f| f & !vertices.all_mask() != 0) {
            return Err(Error::ContextMismatch);
        }
        Ok(SimplicialComplex { vertices, facets: maximal_only(faces) })
    }

    pub fn void(vertices: VarContext) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn irrelevant(vertices: VarContext) -> Self {
        SimplicialComplex { vertices, facets: vec![0] }
    }

    pub fn simplex(vertices: VarContext) -> Self {
        let all = vertices.all_mask();
        SimplicialComplex { vertices, facets: vec![all] }
    }

    pub fn vertices(&self) -> &VarContext {
        &self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Every face, sorted by size and then vertex order.
    pub fn faces(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.facets.iter().flat_map(|&f| subsets_of(f)).collect();
        let mut out: Vec<u64> = set.into_iter().collect();
        sort_masks(&mut out);
        out
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(d) = self.dim() else { return Vec::new() };
        let mut out = vec![0usize; (d + 2) as usize];
        for f in self.faces() {
            out[f.count_ones() as usize] += 1;
        }
        out
    }

    /// Induced subcomplex on the vertex subset `sigma`.
    pub fn restrict(&self, sigma: u64) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: maximal_only(self.facets.iter().map(|&f| f & sigma).collect()),
        }
    }

    /// Link of a face; void when `sigma` is not a face.
    pub fn link(&self, sigma: u64) -> SimplicialComplex {
        let faces: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| sigma & !f == 0)
            .map(|&f| f & !sigma)
            .collect();
        SimplicialComplex { vertices: self.vertices.clone(), facets: maximal_only(faces) }
    }

    /// Faces of dimension at most `i`.
    pub fn skeleton(&self, i: i32) -> SimplicialComplex {
        let faces: Vec<u64> = self
            .faces()
            .into_iter()
            .filter(|f| (f.count_ones() as i32) <= i + 1)
            .collect();
        SimplicialComplex { vertices: self.vertices.clone(), facets: maximal_only(faces) }
    }

    /// Cone over a new apex vertex.
    pub fn cone(&self, apex: &str) -> Result<SimplicialComplex> {
        let mut names = self.vertices.names().to_vec();
        names.push(apex.to_string());
        let ctx = VarContext::new(names)?;
        let bit = 1u64 << (ctx.len() - 1);
        let facets = self.facets.iter().map(|&f| f | bit).collect();
        Ok(SimplicialComplex { vertices: ctx, facets: maximal_only(facets) })
    }

    /// The Stanley–Reisner ideal: generated by the minimal non-faces.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let all = self.vertices.all_mask();
        let comps: Vec<MonomialIdeal> = self
            .facets
            .iter()
            .map(|&f| MonomialIdeal::from_support(self.vertices.clone(), all & !f))
            .collect();
        MonomialIdeal::intersect_all(&self.vertices, comps.iter())
    }
}

/// Stanley–Reisner complex of a squarefree monomial ideal: its faces are the
/// supports of the monomials outside `I`, and its facets are the complements
/// of the minimal primes. The unit ideal gives the void complex.
pub fn complex_of(i: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let ctx = i.ctx().clone();
    if i.is_unit() {
        return Ok(SimplicialComplex::void(ctx));
    }
    let edges: Vec<u64> = i.gens().iter().map(|g| g.support()).collect();
    let all = ctx.all_mask();
    let facets = minimal_vertex_covers(&edges).into_iter().map(|c| all & !c).collect();
    Ok(SimplicialComplex { vertices: ctx, facets: maximal_only(facets) })
}

/// Ranks of reduced homology, indexed from dimension `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn rank(&self, dim: i32) -> usize {
        usize::try_from(dim + 1).ok().and_then(|k| self.ranks.get(k)).copied().unwrap_or(0)
    }

    /// `(dim, rank)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as i32 - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

fn matrix_rank(field: FieldSpec, m: &[Vec<i64>]) -> Result<usize> {
    if m.is_empty() || m[0].is_empty() {
        return Ok(0);
    }
    match field {
        FieldSpec::Rationals => Ok(rank_fraction_free(m)),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            let dense = m.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            Ok(rank_dense(&f, dense))
        }
    }
}

/// Reduced simplicial homology over `field`.
pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec) -> Result<ReducedHomology> {
    field.validate()?;
    let Some(d) = c.dim() else { return Err(Error::VoidComplex) };
    let top = (d + 1) as usize;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in c.faces() {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank of the boundary from faces of size k to faces of size k-1
    let mut bd_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let rows: BTreeMap<u64, usize> =
            by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0i64; by_size[k].len()]; rows.len()];
        for (j, &face) in by_size[k].iter().enumerate() {
            let mut sign = 1i64;
            let mut bits = face;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                m[rows[&(face & !v)]][j] = sign;
                sign = -sign;
                bits &= bits - 1;
            }
        }
        bd_rank[k] = matrix_rank(field, &m)?;
    }
    let ranks = (0..=top)
        .map(|k| by_size[k].len() - bd_rank[k] - bd_rank[k + 1])
        .collect();
    Ok(ReducedHomology { ranks })
}

/// Reisner's criterion: every link (including the link of `∅`, the complex
/// itself) has vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    for face in c.faces() {
        let lk = c.link(face);
        let d = lk.dim().expect("link of a face is not void");
        let h = reduced_homology(&lk, field)?;
        if h.nonzero().any(|(i, _)| i < d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multigraded Betti numbers of a squarefree ideal (see the module docs for
/// the indexing). Entries are sorted by `(i, |σ|, σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    vertices: VarContext,
    entries: BTreeMap<(i32, u32, u64), usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BettiEntryJson {
    pub i: i32,
    pub subset: Vec<String>,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BettiTableJson {
    pub vertices: Vec<String>,
    pub entries: Vec<BettiEntryJson>,
}

impl BettiTable {
    pub fn get(&self, i: i32, sigma: u64) -> usize {
        self.entries.get(&(i, sigma.count_ones(), sigma)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i32, u64, usize)> + '_ {
        self.entries.iter().map(|(&(i, _, s), &r)| (i, s, r))
    }

    /// Total Betti number `β_i = Σ_σ β_{i,σ}`.
    pub fn total(&self, i: i32) -> usize {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<i32> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `pd(T/I)`; zero for the zero ideal.
    pub fn quotient_projective_dimension(&self) -> usize {
        self.max_index().map_or(0, |i| i as usize + 1)
    }

    pub fn to_json(&self) -> BettiTableJson {
        BettiTableJson {
            vertices: self.vertices.names().to_vec(),
            entries: self
                .entries()
                .map(|(i, s, rank)| BettiEntryJson { i, subset: self.vertices.names_of_mask(s), rank })
                .collect(),
        }
    }

    /// `homological_index,subset,rank`, subset names separated by spaces.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("homological_index,subset,rank\n");
        for (i, s, r) in self.entries() {
            let _ = writeln!(out, "{},{},{}", i, self.vertices.names_of_mask(s).join(" "), r);
        }
        out
    }
}

fn check_sweep(n: usize) -> Result<()> {
    if n > MAX_SWEEP_VARS {
        Err(Error::TooManyVariables { n, cap: MAX_SWEEP_VARS })
    } else {
        Ok(())
    }
}

/// Hochster's formula over every vertex subset. The sweep runs on the
/// current rayon pool; the result does not depend on the pool size.
pub fn graded_betti(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    field.validate()?;
    let c = complex_of(i)?;
    if c.is_void() {
        return Err(Error::UnitIdeal);
    }
    let n = i.nvars();
    check_sweep(n)?;
    let per_subset: Vec<Result<Vec<((i32, u32, u64), usize)>>> = (0..1u64 << n)
        .into_par_iter()
        .map(|sigma| {
            let size = sigma.count_ones() as i32;
            let h = reduced_homology(&c.restrict(sigma), field)?;
            Ok(h.nonzero()
                .map(|(j, r)| ((size - j - 2, sigma.count_ones(), sigma), r))
                .filter(|((idx, _, _), _)| *idx >= 0)
                .collect())
        })
        .collect();
    let mut entries = BTreeMap::new();
    for r in per_subset {
        entries.extend(r?);
    }
    Ok(BettiTable { vertices: i.ctx().clone(), entries })
}

/// Depth and projective dimension of `T/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub nvars: usize,
    pub depth: usize,
    pub projective_dimension: usize,
    pub dim: usize,
    pub polarization_added: usize,
}

/// Depth of `T/I` by Hochster's formula and Auslander–Buchsbaum. A
/// non-squarefree ideal is polarized first; polarization preserves the
/// projective dimension.
pub fn depth_report(i: &MonomialIdeal, field: FieldSpec) -> Result<DepthReport> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = i.nvars();
    let (_, dim) = i.height_and_dim()?;
    if i.is_zero() {
        return Ok(DepthReport { nvars: n, depth: n, projective_dimension: 0, dim, polarization_added: 0 });
    }
    let pol = i.polarize()?;
    let table = graded_betti(&pol.ideal, field)?;
    let pd = table.quotient_projective_dimension();
    Ok(DepthReport { nvars: n, depth: n - pd, projective_dimension: pd, dim, polarization_added: pol.added })
}

pub fn depth(i: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(depth_report(i, field)?.depth)
}

/// Depth of `⊕ T/I_j`, the minimum over the summands.
pub fn depth_of_direct_sum(ideals: &[MonomialIdeal], field: FieldSpec) -> Result<usize> {
    let mut best: Option<usize> = None;
    for i in ideals {
        let d = depth(i, field)?;
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    best.ok_or_else(|| Error::InvalidContext("empty direct sum".into()))
}

/// Depth of `k[Δ]` from skeleta: `1 + max{i : the i-skeleton is Cohen–Macaulay}`.
/// Independent of the Betti sweep; used to cross-check it.
pub fn depth_by_skeleta(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    let Some(d) = c.dim() else { return Err(Error::VoidComplex) };
    let mut best = -1;
    for i in 0..=d {
        if is_cohen_macaulay(&c.skeleton(i), field)? {
            best = i;
        } else {
            // skeleta of a Cohen–Macaulay complex are Cohen–Macaulay
            break;
        }
    }
    Ok((best + 1) as usize)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            vertices: c.vertices.names().to_vec(),
            facets: c.facets.iter().map(|&f| c.vertices.names_of_mask(f)).collect(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<Self> {
        let ctx = VarContext::new(j.vertices)?;
        let facets = j.facets.iter().map(|f| ctx.mask_of(f)).collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_faces(ctx, facets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ctx(n: usize) -> VarContext {
        VarContext::indexed("x", n).unwrap()
    }

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, v| m | 1 << (v - 1))
    }

    pub(crate) fn rp2() -> SimplicialComplex {
        let tri = [
            [1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
            [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6],
        ];
        SimplicialComplex::from_faces(ctx(6), tri.iter().map(|t| mask(t)).collect()).unwrap()
    }

    #[test]
    fn complex_of_xy_is_two_points() {
        let c = VarContext::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::new(c, vec![Monomial::new(vec![1, 1])]).unwrap();
        let k = complex_of(&i).unwrap();
        assert_eq!(k.facets(), &[0b01, 0b10]);
        assert_eq!(k.ideal().unwrap(), i);
    }

    #[test]
    fn complex_of_rejects_squares() {
        let c = VarContext::new(["x"]).unwrap();
        let i = MonomialIdeal::new(c, vec![Monomial::new(vec![2])]).unwrap();
        assert!(matches!(complex_of(&i), Err(Error::NotSquarefree)));
    }

    #[test]
    fn hollow_triangle_homology() {
        let c = SimplicialComplex::from_faces(ctx(3), vec![0b011, 0b101, 0b110]).unwrap();
        let h = reduced_homology(&c, FieldSpec::Rationals).unwrap();
        assert_eq!(h.rank(1), 1);
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(-1), 0);
    }

    #[test]
    fn simplex_and_irrelevant_complex() {
        let s = SimplicialComplex::simplex(ctx(4));
        assert!(reduced_homology(&s, FieldSpec::Rationals).unwrap().is_acyclic());
        let e = SimplicialComplex::irrelevant(ctx(2));
        assert_eq!(reduced_homology(&e, FieldSpec::Rationals).unwrap().rank(-1), 1);
        let v = SimplicialComplex::void(ctx(2));
        assert!(matches!(reduced_homology(&v, FieldSpec::Rationals), Err(Error::VoidComplex)));
        assert!(matches!(is_cohen_macaulay(&v, FieldSpec::Rationals), Err(Error::VoidComplex)));
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let c = rp2();
        let q = reduced_homology(&c, FieldSpec::Rationals).unwrap();
        let f2 = reduced_homology(&c, FieldSpec::Prime(2)).unwrap();
        assert_eq!((q.rank(1), q.rank(2)), (0, 0));
        assert_eq!((f2.rank(1), f2.rank(2)), (1, 1));
        assert!(is_cohen_macaulay(&c, FieldSpec::Rationals).unwrap());
        assert!(!is_cohen_macaulay(&c, FieldSpec::Prime(2)).unwrap());
    }

    #[test]
    fn koszul_pattern_for_two_variables() {
        let c = VarContext::new(["x", "y"]).unwrap();
        let m = MonomialIdeal::maximal(c);
        let b = graded_betti(&m, FieldSpec::Rationals).unwrap();
        assert_eq!(b.total(0), 2);
        assert_eq!(b.total(1), 1);
        assert_eq!(b.get(1, 0b11), 1);
        assert_eq!(b.quotient_projective_dimension(), 2);
        assert_eq!(b.to_csv(), "homological_index,subset,rank\n0,x,1\n0,y,1\n1,x y,1\n");
    }

    #[test]
    fn principal_ideal_single_betti() {
        let c = VarContext::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::new(c, vec![Monomial::new(vec![1, 1])]).unwrap();
        let b = graded_betti(&i, FieldSpec::Rationals).unwrap();
        let all: Vec<_> = b.entries().collect();
        assert_eq!(all, vec![(0, 0b11, 1)]);
    }

    #[test]
    fn depth_of_zero_ideal_is_n() {
        let z = MonomialIdeal::zero(ctx(3));
        assert_eq!(depth(&z, FieldSpec::Rationals).unwrap(), 3);
        assert!(matches!(depth(&MonomialIdeal::unit(ctx(3)), FieldSpec::Rationals), Err(Error::UnitIdeal)));
    }

    #[test]
    fn two_disjoint_edges_not_cm() {
        let c = SimplicialComplex::from_faces(ctx(4), vec![mask(&[3, 4]), mask(&[1, 2])]).unwrap();
        assert!(!is_cohen_macaulay(&c, FieldSpec::Rationals).unwrap());
        let i = c.ideal().unwrap();
        assert_eq!(depth(&i, FieldSpec::Rationals).unwrap(), 1);
        assert_eq!(depth_by_skeleta(&c, FieldSpec::Rationals).unwrap(), 1);
    }

    #[test]
    fn projective_plane_depths() {
        let c = rp2();
        let i = c.ideal().unwrap();
        assert_eq!(depth(&i, FieldSpec::Rationals).unwrap(), 3);
        assert_eq!(depth(&i, FieldSpec::Prime(2)).unwrap(), 2);
        assert_eq!(depth_by_skeleta(&c, FieldSpec::Rationals).unwrap(), 3);
        assert_eq!(depth_by_skeleta(&c, FieldSpec::Prime(2)).unwrap(), 2);
    }

    #[test]
    fn polarized_depth_of_artinian_ideal() {
        // T/(x^2, xy, y^3) has finite length, so depth 0
        let c = VarContext::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::from_exponents(c, vec![vec![2, 0], vec![1, 1], vec![0, 3]]).unwrap();
        let r = depth_report(&i, FieldSpec::Rationals).unwrap();
        assert_eq!(r.polarization_added, 3);
        assert_eq!(r.depth, 0);
        assert_eq!(r.projective_dimension, 2);
    }

    #[test]
    fn json_round_trip() {
        let c = rp2();
        let j = ComplexJson::from(&c);
        let s = serde_json::to_string(&j).unwrap();
        let back: ComplexJson = serde_json::from_str(&s).unwrap();
        assert_eq!(SimplicialComplex::try_from(back).unwrap(), c);
    }

    #[test]
    fn sweep_is_independent_of_pool_size() {
        let i = rp2().ideal().unwrap();
        let run = |t: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .unwrap()
                .install(|| graded_betti(&i, FieldSpec::Prime(2)).unwrap())
        };
        assert_eq!(run(1).to_csv(), run(4).to_csv());
    }
}
