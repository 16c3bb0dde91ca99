//! Worked families: intersections of linear primes `A = T/⋂(F_i)`, Artinian
//! monomial quotients, the rings `k + 𝔮`, fiber products `S ×_{S/𝔮} S`, and
//! the seeded identity suite for `⋂(I_i + J_i) = Σ J_i`.
//!
//! Pullback computations (conductor, `B/A`, generation) run over `ℚ`; the
//! field argument selects the coefficients for simplicial homology, which is
//! where depth comes from.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal, MonomialPrime, VarContext};
use crate::oracle;
use crate::poly::{parse_poly, Poly};
use crate::pullback::{
    cokernel_profile, conductor, is_b_regular_sequence, is_maximal_primary, verify_generation, PullbackFamily,
};
use crate::report::{outcome, Report};
use crate::s2::{s2_equals_b_test, trace_ideal_check, S2Probe, Verdict};
use crate::simplicial::{complex_of, depth, depth_by_skeleta, depth_of_direct_sum};

/// Subsets `F_1, ..., F_ℓ` of `{1, ..., n}`; variable `i` is named `x{i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FFamilySpec {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl FFamilySpec {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let spec = FFamilySpec { n, sets };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sets.len() < 2 {
            return Err(Error::InvalidFamily("need at least two subsets".into()));
        }
        for (i, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidFamily(format!("F{} is empty", i + 1)));
            }
            if let Some(v) = s.iter().find(|&&v| v == 0 || v > self.n) {
                return Err(Error::InvalidFamily(format!("F{} has {v}, outside 1..={}", i + 1, self.n)));
            }
        }
        let masks = self.masks();
        for i in 0..masks.len() {
            for j in 0..masks.len() {
                if i != j && masks[i] & !masks[j] == 0 {
                    return Err(Error::InvalidFamily(format!("F{} is contained in F{}", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Three subsets of size `m` on `n` variables with `I = A:B` of height
    /// `2m − n`; requires `m ≥ 4`, `n ≥ 6`, `2n/3 ≥ m ≥ n/2 + 1`.
    pub fn depth_one(n: usize, m: usize) -> Result<Self> {
        if m < 4 || n < 6 || 3 * m > 2 * n || 2 * m < n + 2 {
            return Err(Error::InvalidFamily(format!("no depth-one family for n = {n}, m = {m}")));
        }
        let f1 = (1..=m).collect();
        let f2 = (n - m + 1..=n).collect();
        let f3 = (m + 1..=n).chain(1..=2 * m - n).collect();
        Self::new(n, vec![f1, f2, f3])
    }

    /// `ℓ` disjoint blocks of `m` variables.
    pub fn blocks(ell: usize, m: usize) -> Result<Self> {
        if ell < 2 || m < 1 {
            return Err(Error::InvalidFamily(format!("no block family for l = {ell}, m = {m}")));
        }
        Self::new(ell * m, (0..ell).map(|i| (i * m + 1..=(i + 1) * m).collect()).collect())
    }

    /// `{1..m}`, `{q..m+q−1}`, `{m+1..2m}` on `n = 2m` variables, `3 ≤ q < m`.
    pub fn overlapping(q: usize, m: usize) -> Result<Self> {
        if q < 3 || q >= m {
            return Err(Error::InvalidFamily(format!("no overlapping family for q = {q}, m = {m}")));
        }
        Self::new(2 * m, vec![(1..=m).collect(), (q..=m + q - 1).collect(), (m + 1..=2 * m).collect()])
    }

    pub fn ell(&self) -> usize {
        self.sets.len()
    }

    pub fn masks(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.iter().fold(0u64, |m, &v| m | 1 << (v - 1))).collect()
    }

    pub fn ctx(&self) -> Result<VarContext> {
        VarContext::indexed("x", self.n)
    }

    pub fn primes(&self) -> Result<Vec<MonomialPrime>> {
        let ctx = self.ctx()?;
        self.masks().into_iter().map(|m| MonomialPrime::new(ctx.clone(), m)).collect()
    }

    pub fn family(&self) -> Result<PullbackFamily> {
        self.validate()?;
        PullbackFamily::intersection(self.ctx()?, self.primes()?)
    }

    pub fn equal_sizes(&self) -> bool {
        self.sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `min |F_i ∖ F_j|` over `i ≠ j`.
    pub fn min_difference(&self) -> usize {
        let m = self.masks();
        let mut best = usize::MAX;
        for i in 0..m.len() {
            for j in 0..m.len() {
                if i != j {
                    best = best.min((m[i] & !m[j]).count_ones() as usize);
                }
            }
        }
        best
    }

    /// `|F_i|` constant and `|F_i ∖ F_j| ≥ 2` for all `i ≠ j`.
    pub fn theorem_hypotheses(&self) -> bool {
        self.equal_sizes() && self.min_difference() >= 2
    }
}

/// Random valid family on `2..=max_n` variables with `2..=max_ell` subsets.
pub fn random_f_family(rng: &mut impl Rng, max_n: usize, max_ell: usize) -> FFamilySpec {
    loop {
        let n = rng.gen_range(2..=max_n);
        let ell = rng.gen_range(2..=max_ell);
        let sets: Vec<Vec<usize>> = (0..ell)
            .map(|_| {
                let mask: u64 = rng.gen_range(1..1u64 << n);
                (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect()
            })
            .collect();
        if let Ok(spec) = FFamilySpec::new(n, sets) {
            return spec;
        }
    }
}

/// Optional inputs for [`f_family_report`].
#[derive(Clone, Debug, Default)]
pub struct FFamilyOptions {
    /// Homogeneous elements `a_1, ..., a_r` to test `I = Σ a_i B` with.
    pub probes: Vec<Poly>,
    pub degree_bound: Option<u32>,
}

/// Computes the invariants of `A = T/⋂(F_i)` and `I = A:B` and cross-checks
/// them along independent routes.
pub fn f_family_report(id: &str, spec: &FFamilySpec, field: FieldSpec, opts: &FFamilyOptions) -> Result<Report> {
    let fam = spec.family()?;
    let ctx = fam.ctx().clone();
    let a = fam.defining_ideal();
    let primes = spec.primes()?;
    let mut r = Report::new(id, format!("intersection of {} linear primes in {} variables", spec.ell(), spec.n), field);

    let i = fam.conductor_closed_form();
    r.record("ideal_i", "I = sum of J_i", i.format());
    r.record("i_is_maximal", "I = m", i == MonomialIdeal::maximal(ctx.clone()));
    let two_routes = match conductor(&fam, opts.degree_bound) {
        Ok(_) => true,
        Err(Error::MethodDisagreement(_)) => false,
        Err(e) => return Err(e),
    };
    r.check("conductor_two_routes", "A:B = sum of J_i", true, two_routes);

    let ht = i.height_in_quotient(&a)?;
    r.record("height_i", "ht_A I", ht);
    let mut pairwise = usize::MAX;
    for x in 0..primes.len() {
        for y in x + 1..primes.len() {
            let s = primes[x].ideal().sum(&primes[y].ideal())?;
            pairwise = pairwise.min(s.height_in_quotient(&a)?);
        }
    }
    r.check("height_i_pairwise", "ht_A I = min ht_A(p_i + p_j)", ht, pairwise);
    let brute = oracle::height_in_quotient(&i, &a).ok().flatten();
    if let Some(h) = brute {
        r.check("height_i_enumerated", "ht_A I by prime enumeration", ht, h);
    }
    if spec.equal_sizes() {
        r.check("height_i_differences", "ht_A I = min |F_i - F_j|", ht, spec.min_difference());
    }

    let (_, dim_a) = a.height_and_dim()?;
    r.record("dim_a", "dim A", dim_a);
    let depth_a = depth(&a, field)?;
    r.record("depth_a", "depth A", depth_a);
    r.check("depth_a_skeleta", "depth A by skeleta", depth_a, depth_by_skeleta(&complex_of(&a)?, field)?);
    let components: Vec<MonomialIdeal> = primes.iter().map(|p| p.ideal().sum(&i)).collect::<Result<_>>()?;
    let per_component = components.iter().map(|c| depth(c, field)).collect::<Result<Vec<_>>>()?;
    r.record("depth_a_mod_i_plus_p", "depth A/(I + p_i)", &per_component);
    r.record("depth_b_mod_i", "depth_A B/I", depth_of_direct_sum(&components, field)?);
    r.record("depth_a_mod_i", "depth A/I", depth(&i, field)?);
    r.record("dim_a_mod_i", "dim A/I", i.height_and_dim()?.1);
    let b_ideals: Vec<MonomialIdeal> = primes.iter().map(MonomialPrime::ideal).collect();
    r.record("depth_b", "depth_A B", depth_of_direct_sum(&b_ideals, field)?);

    let hyp = spec.theorem_hypotheses();
    r.record("theorem_hypotheses", "|F_i| constant, |F_i - F_j| >= 2", hyp);
    if hyp {
        r.check("height_at_least_two", "ht_A I >= 2", true, ht >= 2);
        r.check("dim_formula", "d = n - |F_i| >= 2", dim_a, spec.n - spec.sets[0].len());
        r.check("depth_strictly_between", "0 < depth A < d", true, depth_a > 0 && depth_a < dim_a);
        r.check("depth_b_is_d", "depth_A B = d", dim_a, depth_of_direct_sum(&b_ideals, field)?);
        r.implied("canonical_module_is_b", "K_A = B", "follows from B = I:I with IC = 0; not recomputed");
    }

    r.record("s2_equals_b", "A~ = B iff ht_A(A:B) >= 2", ht >= 2);
    if ht >= 2 {
        let v = trace_ideal_check(&fam, &i, opts.degree_bound)?;
        r.record_bounded("trace_verdict", "I:I = A:I", v.verdict, Some(format!("degree <= {}", v.bound)));
        r.record("endo_ring_is_b", "B = I:I", v.endo_ring_is_b);
        if hyp {
            r.check("trace_certificate", "I trace, B = I:I", Verdict::Pass, v.verdict);
        }
    }

    if is_maximal_primary(&i) {
        let p = cokernel_profile(&fam)?;
        r.record("length_b_over_a", "length B/A", p.length);
        r.record("hilbert_b_over_a", "Hilbert function of B/A", &p.hilbert_function);
        r.record("socle_dim_b_over_a", "dim soc(B/A)", p.socle_dim);
        r.record("m_kills_b_over_a", "m(B/A) = 0", p.maximal_ideal_annihilates);
    }

    if !opts.probes.is_empty() {
        let g = verify_generation(&fam, &i, &opts.probes)?;
        r.record("generation_by_probes", "I = sum a_i B", g.holds);
        let bound = opts.degree_bound.unwrap_or(3);
        let reg = is_b_regular_sequence(&fam, &opts.probes, bound)?;
        r.record_bounded("probes_regular_on_b", "a_i regular on B", reg, Some(format!("degree <= {bound}")));
        let s2 = s2_equals_b_test(&fam, &S2Probe::LinearSystem(opts.probes.clone()));
        r.record("s2_by_probes", "A:B = sum a_i B = sum U(a_i A)", outcome(s2.map(|v| v.equal)));
    }
    Ok(r)
}

/// Parses probe polynomials in `x1..xn`.
pub fn parse_probes(spec: &FFamilySpec, src: &[String]) -> Result<Vec<Poly>> {
    let ctx = spec.ctx()?;
    src.iter().map(|s| parse_poly(&ctx, s)).collect()
}

/// `S/𝔮` with `𝔮` primary to the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianQuotient {
    q: MonomialIdeal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SocleType {
    pub length: usize,
    pub socle_dim: usize,
}

impl ArtinianQuotient {
    pub fn new(q: MonomialIdeal) -> Result<Self> {
        if !is_maximal_primary(&q) {
            return Err(Error::NotArtinian);
        }
        Ok(ArtinianQuotient { q })
    }

    /// `(x_1^{a_1}, ..., x_d^{a_d})` in `x1..xd`.
    pub fn pure_powers(exps: &[u32]) -> Result<Self> {
        let d = exps.len();
        let ctx = VarContext::indexed("x", d)?;
        let gens = exps.iter().enumerate().map(|(i, &a)| Monomial::pure_power(d, i, a)).collect();
        Self::new(MonomialIdeal::new(ctx, gens)?)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.q
    }

    pub fn is_parameter_ideal(&self) -> bool {
        self.q.gens().len() == self.q.nvars()
    }

    fn top_exponents(&self) -> Vec<u32> {
        let n = self.q.nvars();
        (0..n)
            .map(|j| {
                self.q
                    .gens()
                    .iter()
                    .filter(|g| g.pure_power_var() == Some(j))
                    .map(|g| g.exps()[j])
                    .min()
                    .expect("Artinian")
            })
            .collect()
    }

    /// Monomials outside `𝔮`.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        let tops = self.top_exponents();
        let mut out = Vec::new();
        let mut e = vec![0u32; tops.len()];
        loop {
            let m = Monomial::new(e.clone());
            if !self.q.contains_monomial(&m) {
                out.push(m);
            }
            let mut k = 0;
            loop {
                if k == e.len() {
                    return out;
                }
                e[k] += 1;
                if e[k] < tops[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    pub fn socle_and_type(&self) -> SocleType {
        let std = self.standard_monomials();
        let n = self.q.nvars();
        let socle_dim = std
            .iter()
            .filter(|m| (0..n).all(|i| self.q.contains_monomial(&m.mul(&Monomial::var(n, i)))))
            .count();
        SocleType { length: std.len(), socle_dim }
    }

    /// `ℓ_A(S/A)` for `A = k + 𝔮`, counted degree by degree.
    pub fn colength_of_k_plus_q(&self) -> usize {
        let n = self.q.nvars();
        let top: u32 = self.top_exponents().iter().sum();
        (1..=top)
            .map(|d| {
                monomials_of_degree(n, self.q.ctx().all_mask(), d)
                    .iter()
                    .filter(|u| !self.q.contains_monomial(u))
                    .count()
            })
            .sum()
    }
}

/// Hypothesis and invariants for `A = k + 𝔮 ⊆ S`.
pub fn k_plus_q_report(id: &str, q: &ArtinianQuotient) -> Result<Report> {
    if !q.is_parameter_ideal() {
        return Err(Error::NotParameterIdeal(q.ideal().format()));
    }
    let st = q.socle_and_type();
    let mut r = Report::new(id, format!("k + q for q = {}", q.ideal().format()), FieldSpec::Rationals);
    r.record("length_s_mod_q", "length S/q", st.length);
    r.record("socle_type", "r(S/q)", st.socle_dim);
    let hyp = st.length == 2;
    r.record("hypothesis_length_two", "length S/q = 2", hyp);
    r.check("length_s_over_a", "length_A S/A = length S/q - 1", st.length - 1, q.colength_of_k_plus_q());
    let qq = q.ideal();
    r.check("m_colon_m_is_s", "q :_S q = S", true, qq.colon(qq)?.is_unit());
    let fam = PullbackFamily::congruence(qq.clone())?;
    let two_routes = match conductor(&fam, None) {
        Ok(c) => c.ideal == *qq,
        Err(Error::MethodDisagreement(_)) => false,
        Err(e) => return Err(e),
    };
    r.check("conductor_is_q", "A:S = q", true, two_routes);
    if hyp {
        r.implied("rees_gorenstein", "R_A(Q^d) Gorenstein", "follows from length S/q = 2; not recomputed");
    }
    Ok(r)
}

/// Checks for the fiber product `A = S ×_{S/𝔮} S ⊆ B = S × S`.
pub fn fiber_product_report(id: &str, q: &ArtinianQuotient) -> Result<Report> {
    let qq = q.ideal();
    let st = q.socle_and_type();
    let fam = PullbackFamily::congruence(qq.clone())?;
    let mut r = Report::new(id, format!("fiber product over S/q, q = {}", qq.format()), FieldSpec::Rationals);
    let two_routes = match conductor(&fam, None) {
        Ok(c) => c.ideal == *qq,
        Err(Error::MethodDisagreement(_)) => false,
        Err(e) => return Err(e),
    };
    r.check("conductor_is_qb", "A:B = qB", true, two_routes);
    let p = cokernel_profile(&fam)?;
    r.record("length_b_over_a", "length B/A", p.length);
    r.check("length_matches_t", "length B/A = length T", st.length, p.length);
    r.record("type_t", "r(T)", st.socle_dim);
    r.record("socle_dim_b_over_a", "r_A(B/A)", p.socle_dim);
    r.check("socle_matches_t", "r_A(B/A) = r(T)", st.socle_dim, p.socle_dim);
    let alphas: Vec<Poly> = qq.gens().iter().map(|g| Poly::monomial(g.clone())).collect();
    let g = verify_generation(&fam, qq, &alphas)?;
    r.check("generation_qb", "qB = sum alpha_i B", true, g.holds);
    let hyp = st.socle_dim == 1 && q.is_parameter_ideal();
    r.record("hypothesis_type_one", "r(T) = 1", st.socle_dim == 1);
    r.record("hypothesis_parameter_ideal", "q a parameter ideal", q.is_parameter_ideal());
    if hyp {
        r.implied("rees_gorenstein", "R_A(Q^d) Gorenstein", "follows from r_A(B/A) = 1 and A:B = QB; not recomputed");
    }
    if qq == &MonomialIdeal::maximal(qq.ctx().clone()) {
        let d = qq.nvars();
        let spec = FFamilySpec::new(2 * d, vec![(1..=d).collect(), (d + 1..=2 * d).collect()])?;
        let other = cokernel_profile(&spec.family()?)?;
        r.check(
            "matches_two_component_family",
            "S x_k S = k[X,Y]/((X) cap (Y))",
            [p.length, p.socle_dim],
            [other.length, other.socle_dim],
        );
    }
    Ok(r)
}

pub(crate) fn random_ideal(rng: &mut impl Rng, ctx: &VarContext) -> Result<MonomialIdeal> {
    let n = ctx.len();
    let k = rng.gen_range(1..=4);
    let gens = (0..k)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let d: u32 = e.iter().sum();
            if (1..=3).contains(&d) {
                break Monomial::new(e);
            }
        })
        .collect();
    MonomialIdeal::new(ctx.clone(), gens)
}

/// `⋂(I_i + J_i) = Σ J_i` with `J_i = ⋂_{j≠i} I_j`, on random monomial
/// ideals (`ℓ ≤ 4`, `n ≤ 5`, at most 4 generators of degree at most 3).
/// Each trial is decided twice: by ideal arithmetic, and by testing every
/// monomial up to the largest generator degree against the raw generators.
pub fn lemma_suite(seed: u64, trials: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("lemma-identity", "intersection of I_i + J_i equals sum of J_i", FieldSpec::Rationals);
    let mut failures = Vec::new();
    for t in 0..trials {
        let n = rng.gen_range(1..=5);
        let ell = rng.gen_range(2..=4);
        let ctx = VarContext::indexed("x", n)?;
        let ideals = (0..ell).map(|_| random_ideal(&mut rng, &ctx)).collect::<Result<Vec<_>>>()?;
        let js: Vec<MonomialIdeal> = (0..ell)
            .map(|i| MonomialIdeal::intersect_all(&ctx, ideals.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, x)| x)))
            .collect::<Result<_>>()?;
        let sums = ideals.iter().zip(&js).map(|(x, j)| x.sum(j)).collect::<Result<Vec<_>>>()?;
        let lhs = MonomialIdeal::intersect_all(&ctx, sums.iter())?;
        let rhs = MonomialIdeal::sum_all(&ctx, js.iter())?;
        let in_raw = |x: &MonomialIdeal, u: &Monomial| x.gens().iter().any(|g| g.divides(u));
        let in_j = |i: usize, u: &Monomial| (0..ell).filter(|&j| j != i).all(|j| in_raw(&ideals[j], u));
        let bound = lhs.max_degree().max(rhs.max_degree());
        let mismatch = oracle::agree_up_to(
            n,
            bound,
            |u| (0..ell).all(|i| in_raw(&ideals[i], u) || in_j(i, u)),
            |u| (0..ell).any(|i| in_j(i, u)),
        );
        if lhs != rhs || mismatch.is_some() {
            failures.push(t);
        }
    }
    r.record("trials", "trials run", trials);
    r.check("failures", "identity holds on every trial", Vec::<usize>::new(), failures);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(spec: &FFamilySpec, probes: &[&str]) -> Report {
        let probes = parse_probes(spec, &probes.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap();
        f_family_report("t", spec, FieldSpec::Rationals, &FFamilyOptions { probes, degree_bound: None }).unwrap()
    }

    fn value(r: &Report, c: &str) -> serde_json::Value {
        r.claim(c).unwrap_or_else(|| panic!("missing {c}")).computed.clone()
    }

    #[test]
    fn constructors() {
        let s = FFamilySpec::depth_one(6, 4).unwrap();
        assert_eq!(s.sets, vec![vec![1, 2, 3, 4], vec![3, 4, 5, 6], vec![5, 6, 1, 2]]);
        let s = FFamilySpec::overlapping(3, 4).unwrap();
        assert_eq!(s.sets, vec![vec![1, 2, 3, 4], vec![3, 4, 5, 6], vec![5, 6, 7, 8]]);
        assert_eq!(FFamilySpec::blocks(3, 2).unwrap().sets[2], vec![5, 6]);
        assert!(FFamilySpec::new(3, vec![vec![1], vec![1, 2]]).is_err());
        assert!(FFamilySpec::new(3, vec![vec![1], vec![4]]).is_err());
        assert!(FFamilySpec::depth_one(6, 5).is_err());
    }

    #[test]
    fn depth_one_instance() {
        let r = run(&FFamilySpec::depth_one(6, 4).unwrap(), &["x1+x3+x5", "x2+x4+x6"]);
        assert!(r.ok, "{}", r.to_table());
        assert_eq!(value(&r, "i_is_maximal"), true);
        assert_eq!(value(&r, "height_i"), 2);
        assert_eq!(value(&r, "dim_a"), 2);
        assert_eq!(value(&r, "depth_a"), 1);
        assert_eq!(value(&r, "length_b_over_a"), 2);
        assert_eq!(value(&r, "socle_dim_b_over_a"), 2);
        assert_eq!(value(&r, "m_kills_b_over_a"), true);
        assert_eq!(value(&r, "generation_by_probes"), true);
    }

    #[test]
    fn artinian_quotients() {
        let q = ArtinianQuotient::pure_powers(&[2, 1, 1]).unwrap();
        assert_eq!(q.socle_and_type(), SocleType { length: 2, socle_dim: 1 });
        let q = ArtinianQuotient::pure_powers(&[1, 1]).unwrap();
        assert_eq!(q.socle_and_type(), SocleType { length: 1, socle_dim: 1 });
        let ctx = VarContext::indexed("x", 2).unwrap();
        let q = ArtinianQuotient::new(MonomialIdeal::from_exponents(ctx.clone(), vec![vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap()).unwrap();
        assert_eq!(q.socle_and_type(), SocleType { length: 3, socle_dim: 2 });
        let x = MonomialIdeal::from_exponents(ctx, vec![vec![1, 0]]).unwrap();
        assert!(matches!(ArtinianQuotient::new(x), Err(Error::NotArtinian)));
    }

    #[test]
    fn k_plus_q() {
        let r = k_plus_q_report("t", &ArtinianQuotient::pure_powers(&[2, 1, 1]).unwrap()).unwrap();
        assert!(r.ok);
        assert_eq!(value(&r, "hypothesis_length_two"), true);
        assert_eq!(r.claim("length_s_over_a").unwrap().computed, 1);
        let r = k_plus_q_report("t", &ArtinianQuotient::pure_powers(&[3, 1]).unwrap()).unwrap();
        assert_eq!(value(&r, "hypothesis_length_two"), false);
    }

    #[test]
    fn fiber_products() {
        let r = fiber_product_report("t", &ArtinianQuotient::pure_powers(&[2, 1]).unwrap()).unwrap();
        assert!(r.ok, "{}", r.to_table());
        assert_eq!(value(&r, "length_b_over_a"), 2);
        assert_eq!(value(&r, "socle_dim_b_over_a"), 1);
        let r = fiber_product_report("t", &ArtinianQuotient::pure_powers(&[1, 1]).unwrap()).unwrap();
        assert!(r.ok, "{}", r.to_table());
        let ctx = VarContext::indexed("x", 2).unwrap();
        let q = MonomialIdeal::from_exponents(ctx, vec![vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap();
        let r = fiber_product_report("t", &ArtinianQuotient::new(q).unwrap()).unwrap();
        assert!(r.ok);
        assert_eq!(value(&r, "type_t"), 2);
        assert_eq!(value(&r, "hypothesis_type_one"), false);
        assert!(r.claim("rees_gorenstein").is_none());
    }

    #[test]
    fn lemma_small_run() {
        let r = lemma_suite(0, 30).unwrap();
        assert!(r.ok, "{}", r.to_table());
    }
}
