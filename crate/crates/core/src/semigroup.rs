//! Numerical semigroups and subalgebras of truncated power series rings.
//!
//! A subalgebra `P = k[[g_1, ..., g_r]] ⊆ V = k[[t]]` is modelled by its
//! image in `k[t]/(t^N)`. Since every generator has positive valuation, that
//! image is spanned by products of generators, and its pivot valuations are
//! exactly `v(P) ∩ [0, N)`. Once the window holds a run of `m` consecutive
//! valuations (`m` the multiplicity), every later value is present too, which
//! certifies the conductor.

use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::monomial::VarContext;
use crate::poly::{parse_poly, Poly};
use crate::report::Report;
use crate::with_field;

pub const DEFAULT_PRECISION: usize = 40;
pub const DEFAULT_MARGIN: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    apery: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupInvariants {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub gaps: Vec<u64>,
    pub genus: usize,
    /// `-1` for the full semigroup `ℕ`.
    pub frobenius: i64,
    pub conductor: u64,
    pub apery: Vec<u64>,
    pub symmetric: bool,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`; the stored generating set is minimal.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::Parse("semigroup generators must be positive".into()));
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for &x in &sorted {
            if !representable(&minimal, x) {
                minimal.push(x);
            }
        }
        let apery = apery_set(&minimal);
        Ok(NumericalSemigroup { gens: minimal, apery })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    /// `w(r)`: the least element congruent to `r` modulo the multiplicity.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn contains(&self, s: u64) -> bool {
        let m = self.multiplicity();
        s >= self.apery[(s % m) as usize]
    }

    pub fn frobenius(&self) -> i64 {
        *self.apery.iter().max().expect("nonempty") as i64 - self.multiplicity() as i64
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius() + 1) as u64
    }

    /// Gaps by a sieve up to the bound `(a − 1)(b − 1)` for the least and
    /// largest generators `a ≤ b`.
    pub fn gaps(&self) -> Vec<u64> {
        let a = self.gens[0];
        let b = *self.gens.last().expect("nonempty");
        if a == 1 {
            return Vec::new();
        }
        let bound = ((a - 1) * (b - 1)) as usize;
        let reach = sieve(&self.gens, bound);
        (0..bound).filter(|&s| !reach[s]).map(|s| s as u64).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        self.gaps().len() as i64 * 2 == f + 1
    }

    /// `s ∈ H ⇔ F − s ∉ H` for `0 ≤ s ≤ F`.
    pub fn is_symmetric_direct(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|s| self.contains(s as u64) != self.contains((f - s) as u64))
    }

    pub fn invariants(&self) -> SemigroupInvariants {
        let gaps = self.gaps();
        SemigroupInvariants {
            generators: self.gens.clone(),
            multiplicity: self.multiplicity(),
            genus: gaps.len(),
            gaps,
            frobenius: self.frobenius(),
            conductor: self.conductor(),
            apery: self.apery.clone(),
            symmetric: self.is_symmetric(),
        }
    }
}

fn sieve(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for s in 1..=bound {
        reach[s] = gens.iter().any(|&g| g as usize <= s && reach[s - g as usize]);
    }
    reach
}

fn representable(gens: &[u64], x: u64) -> bool {
    !gens.is_empty() && sieve(gens, x as usize)[x as usize]
}

fn apery_set(gens: &[u64]) -> Vec<u64> {
    let m = gens[0] as usize;
    let mut w = vec![u64::MAX; m];
    w[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..m {
            if w[r] == u64::MAX {
                continue;
            }
            for &g in &gens[1..] {
                let t = w[r] + g;
                let rr = (t % m as u64) as usize;
                if t < w[rr] {
                    w[rr] = t;
                    changed = true;
                }
            }
        }
    }
    w
}

type Vector<F> = SparseVec<usize, <F as Field>::Elem>;

fn closure<F: Field>(
    field: &F,
    one: Vector<F>,
    gens: &[Vector<F>],
    mul: impl Fn(&Vector<F>, &Vector<F>) -> Vector<F>,
) -> Echelon<usize, F> {
    let mut basis = Echelon::new(field.clone());
    let mut queue = VecDeque::new();
    basis.insert(one.clone());
    queue.push_back(one);
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = mul(&v, g);
            if basis.insert(w.clone()).is_some() {
                queue.push_back(w);
            }
        }
    }
    basis
}

fn add_into<F: Field>(field: &F, out: &mut Vector<F>, k: usize, c: F::Elem) {
    let v = match out.get(&k) {
        Some(old) => field.add(old, &c),
        None => c,
    };
    if field.is_zero(&v) {
        out.remove(&k);
    } else {
        out.insert(k, v);
    }
}

fn mul_truncated<F: Field>(field: &F, a: &Vector<F>, b: &Vector<F>, prec: usize) -> Vector<F> {
    let mut out = SparseVec::new();
    for (i, x) in a {
        for (j, y) in b {
            if i + j < prec {
                add_into(field, &mut out, i + j, field.mul(x, y));
            }
        }
    }
    out
}

/// Coefficients of a polynomial in one variable, mapped into `field`.
pub fn univariate<F: Field>(field: &F, p: &Poly) -> Result<Vector<F>> {
    let mut out = SparseVec::new();
    for (m, c) in p.terms() {
        let e = m.exps().first().copied().unwrap_or(0) as usize;
        let num = c.numer().to_i64().ok_or_else(|| Error::Parse("coefficient too large".into()))?;
        let den = c.denom().to_i64().ok_or_else(|| Error::Parse("coefficient too large".into()))?;
        let d = field.from_i64(den);
        if field.is_zero(&d) {
            return Err(Error::Parse(format!("denominator {den} vanishes in this field")));
        }
        add_into(field, &mut out, e, field.mul(&field.from_i64(num), &field.inv(&d)));
    }
    Ok(out)
}

/// Parses comma-separated polynomials in `t`.
pub fn parse_t_polys(src: &str) -> Result<Vec<Poly>> {
    let ctx = VarContext::new(["t"])?;
    src.split(',').map(|s| parse_poly(&ctx, s)).collect()
}

/// The image of `k[[g_1, ..., g_r]]` in `k[t]/(t^N)`.
#[derive(Clone, Debug)]
pub struct TruncatedSubalgebra<F: Field> {
    field: F,
    prec: usize,
    gens: Vec<Vector<F>>,
    basis: Echelon<usize, F>,
}

impl<F: Field> TruncatedSubalgebra<F> {
    pub fn new(field: F, gens: Vec<Vector<F>>, prec: usize) -> Result<Self> {
        if prec < 2 {
            return Err(Error::PrecisionExhausted { window: prec });
        }
        if gens.iter().any(|g| g.contains_key(&0)) {
            return Err(Error::Unsupported("generators must have positive valuation".into()));
        }
        let gens: Vec<Vector<F>> = gens
            .into_iter()
            .map(|g| g.into_iter().filter(|(k, _)| *k < prec).collect())
            .collect();
        let one: Vector<F> = [(0, field.one())].into_iter().collect();
        let basis = closure(&field, one, &gens, |a, b| mul_truncated(&field, a, b, prec));
        Ok(TruncatedSubalgebra { field, prec, gens, basis })
    }

    pub fn from_polys(field: F, gens: &[Poly], prec: usize) -> Result<Self> {
        let gens = gens.iter().map(|p| univariate(&field, p)).collect::<Result<Vec<_>>>()?;
        Self::new(field, gens, prec)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &Echelon<usize, F> {
        &self.basis
    }

    /// `v(P) ∩ [0, N)`.
    pub fn valuations(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.basis.pivots().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, v: &Vector<F>) -> bool {
        self.basis.contains(v)
    }

    pub fn contains_power(&self, j: usize) -> bool {
        j >= self.prec || self.contains(&[(j, self.field.one())].into_iter().collect())
    }

    fn multiplicity(&self) -> Option<usize> {
        self.valuations().into_iter().find(|&v| v > 0)
    }

    /// Least `c` with `t^c V ⊆ P`, certified by a run of `m` consecutive
    /// valuations inside the window.
    pub fn conductor_exponent(&self) -> Result<usize> {
        let m = self.multiplicity().ok_or(Error::PrecisionExhausted { window: self.prec })?;
        let vals = self.valuations();
        let present = |j: usize| vals.binary_search(&j).is_ok();
        (0..self.prec)
            .find(|&c| c + m <= self.prec && (c..c + m).all(present))
            .ok_or(Error::PrecisionExhausted { window: self.prec })
    }

    /// The value semigroup, read off the certified window.
    pub fn value_semigroup(&self) -> Result<NumericalSemigroup> {
        let c = self.conductor_exponent()?;
        let m = self.multiplicity().expect("conductor certified");
        let small: Vec<u64> = self
            .valuations()
            .into_iter()
            .filter(|&v| v > 0 && v < c + m)
            .map(|v| v as u64)
            .collect();
        NumericalSemigroup::new(&small)
    }

    /// The maximal ideal `𝔫`: basis rows without constant term.
    fn maximal_ideal_rows(&self) -> Vec<Vector<F>> {
        self.basis.rows().filter(|r| !r.contains_key(&0)).cloned().collect()
    }

    /// `dim_k soc(V/P)`, with `𝔫` acting through the generators.
    pub fn socle_dim_of_quotient(&self) -> Result<usize> {
        self.conductor_exponent()?;
        let images: Vec<SparseVec<(usize, usize), F::Elem>> = (0..self.prec)
            .map(|j| {
                let e: Vector<F> = [(j, self.field.one())].into_iter().collect();
                let mut img = SparseVec::new();
                for (gi, g) in self.gens.iter().enumerate() {
                    for (k, c) in self.basis.reduce(mul_truncated(&self.field, g, &e, self.prec)) {
                        img.insert((gi, k), c);
                    }
                }
                img
            })
            .collect();
        Ok(kernel(&self.field, &images).len() - self.dim())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraSummary {
    pub precision: usize,
    pub window: usize,
    pub valuations: Vec<usize>,
    pub conductor_exponent: Option<usize>,
    pub value_semigroup: Option<Vec<u64>>,
}

/// Report for `P = k[[gens]]`: the valuation window, the conductor exponent
/// and the requested membership probes (`t^j ∈ P`, `j ∈ v(P)`).
pub fn subalgebra_report(
    id: &str,
    gens: &[Poly],
    spec: FieldSpec,
    prec: usize,
    margin: usize,
    power_probes: &[usize],
    valuation_probes: &[usize],
) -> Result<Report> {
    with_field!(spec, |f| {
        let p = TruncatedSubalgebra::from_polys(f, gens, prec)?;
        let window = prec.saturating_sub(margin);
        let bound = Some(format!("t-window [0, {window})"));
        let mut r = Report::new(id, "value semigroup of a power series subalgebra", spec);
        let vals: Vec<usize> = p.valuations().into_iter().filter(|&v| v < window).collect();
        r.record_bounded("valuations", "v(P) in window", &vals, bound.clone());
        match p.value_semigroup() {
            Ok(h) => {
                r.record("value_semigroup", "v(P) generators", h.generators());
                r.record("conductor_exponent", "c with P:V = t^c V", p.conductor_exponent()?);
                r.record("socle_dim", "dim soc(V/P)", p.socle_dim_of_quotient()?);
                let agree = vals.iter().all(|&v| h.contains(v as u64))
                    && (0..window).filter(|&v| h.contains(v as u64)).count() == vals.len();
                r.check_bounded("window_matches_semigroup", "v(P) = <gens> on window", true, agree, bound.clone());
            }
            Err(e) => r.record("conductor_exponent", "c with P:V = t^c V", e.to_string()),
        }
        for &j in power_probes {
            r.record(&format!("power_{j}_in_p"), &format!("t^{j} in P"), p.contains_power(j));
        }
        for &j in valuation_probes {
            r.record(&format!("valuation_{j}"), &format!("{j} in v(P)"), vals.contains(&j));
        }
        Ok(r)
    })
}

/// Report for a numerical semigroup.
pub fn semigroup_report(id: &str, gens: &[u64]) -> Result<Report> {
    let h = NumericalSemigroup::new(gens)?;
    let inv = h.invariants();
    let mut r = Report::new(id, "numerical semigroup invariants", FieldSpec::Rationals);
    r.record("generators", "minimal generators", &inv.generators);
    r.record("gaps", "gaps", &inv.gaps);
    r.record("frobenius", "Frobenius number", inv.frobenius);
    r.record("conductor", "conductor", inv.conductor);
    r.record("apery", "Apery set w.r.t. multiplicity", &inv.apery);
    r.record("symmetric", "H symmetric", inv.symmetric);
    r.check("symmetry_routes_agree", "#gaps = (F+1)/2 iff pairing", inv.symmetric, h.is_symmetric_direct());
    let sieve_frob = inv.gaps.last().map_or(-1, |&g| g as i64);
    r.check("frobenius_routes_agree", "max gap = max Apery - m", inv.frobenius, sieve_frob);
    Ok(r)
}

/// `k = k₀[α]/(α² − cα − e)` together with `P = k₀[[t, αt]] ⊆ V = k[[t]]`,
/// all as `k₀`-vector spaces truncated at `t^N`. Key `2j + b` stands for
/// `α^b t^j`.
#[derive(Clone, Debug)]
pub struct QuadraticExtensionModel<F: Field> {
    field: F,
    c: F::Elem,
    e: F::Elem,
    prec: usize,
}

impl<F: Field> QuadraticExtensionModel<F> {
    fn mul(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        let f = &self.field;
        let mut out = SparseVec::new();
        for (ka, x) in a {
            for (kb, y) in b {
                let j = ka / 2 + kb / 2;
                if j >= self.prec {
                    continue;
                }
                let xy = f.mul(x, y);
                match ka % 2 + kb % 2 {
                    0 => add_into(f, &mut out, 2 * j, xy),
                    1 => add_into(f, &mut out, 2 * j + 1, xy),
                    _ => {
                        add_into(f, &mut out, 2 * j, f.mul(&xy, &self.e));
                        add_into(f, &mut out, 2 * j + 1, f.mul(&xy, &self.c));
                    }
                }
            }
        }
        out
    }

    fn unit(&self, key: usize) -> Vector<F> {
        [(key, self.field.one())].into_iter().collect()
    }
}

/// Whether `x² − cx − e` has no root in the prime field or in `ℚ`.
pub fn quadratic_is_irreducible(spec: FieldSpec, c: i64, e: i64) -> bool {
    match spec {
        FieldSpec::Rationals => {
            let d = c as i128 * c as i128 + 4 * e as i128;
            if d < 0 {
                return true;
            }
            let r = (d as f64).sqrt() as i128;
            !(r.saturating_sub(2)..=r + 2).any(|s| s >= 0 && s * s == d)
        }
        FieldSpec::Prime(p) => {
            let p = p as i128;
            let (c, e) = ((c as i128).rem_euclid(p), (e as i128).rem_euclid(p));
            if p == 2 {
                return (0..2).all(|x| (x * x - c * x - e).rem_euclid(2) != 0);
            }
            let d = (c * c + 4 * e).rem_euclid(p);
            d != 0 && pow_mod(d, (p - 1) / 2, p) != 1
        }
    }
}

fn pow_mod(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut acc = 1i128;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Checks for `P = k₀[[t, αt]] ⊆ V = k[[t]]` with `[k : k₀] = 2`:
/// `V = P + αP`, `𝔫V ⊆ P`, `α ∉ P`, `P:V = 𝔫` and `dim soc(V/P) = 1`.
pub fn quadratic_extension_report(id: &str, spec: FieldSpec, c: i64, e: i64, prec: usize) -> Result<Report> {
    if !quadratic_is_irreducible(spec, c, e) {
        return Err(Error::DegenerateExtension(format!("x^2 - ({c})x - ({e}) splits over {spec}")));
    }
    with_field!(spec, |f| quadratic_checks(id, spec, f, c, e, prec))
}

fn quadratic_checks<F: Field>(id: &str, spec: FieldSpec, f: F, c: i64, e: i64, prec: usize) -> Result<Report> {
    {
        let model = QuadraticExtensionModel { c: f.from_i64(c), e: f.from_i64(e), field: f.clone(), prec };
        let gens = vec![model.unit(2), model.unit(3)];
        let p = closure(&f, model.unit(0), &gens, |a, b| model.mul(a, b));
        let alpha = model.unit(1);
        let full = 2 * prec;
        let bound = Some(format!("t-window [0, {prec})"));
        let mut r = Report::new(id, "quadratic residue field extension", spec);
        let mut sum = p.clone();
        for row in p.rows() {
            sum.insert(model.mul(row, &alpha));
        }
        r.check_bounded("v_equals_p_plus_alpha_p", "V = P + aP", full, sum.dim(), bound.clone());
        let n_rows: Vec<Vector<F>> = p.rows().filter(|row| !row.contains_key(&0) && !row.contains_key(&1)).cloned().collect();
        let nv_inside = n_rows.iter().all(|n| p.contains(n) && p.contains(&model.mul(n, &alpha)));
        r.check_bounded("nv_inside_p", "nV in P", true, nv_inside, bound.clone());
        r.check("alpha_not_in_p", "a not in P", false, p.contains(&alpha));
        // P:V = {x ∈ P : xα ∈ P}
        let images: Vec<SparseVec<usize, F::Elem>> = p.rows().map(|x| p.reduce(model.mul(x, &alpha))).collect();
        let conductor_dim = kernel(&f, &images).len();
        r.check_bounded("conductor_is_n", "P:V = n", n_rows.len(), conductor_dim, bound.clone());
        let socle_images: Vec<SparseVec<(usize, usize), F::Elem>> = (0..full)
            .map(|k| {
                let v = model.unit(k);
                let mut img = SparseVec::new();
                for (gi, g) in gens.iter().enumerate() {
                    for (kk, cc) in p.reduce(model.mul(g, &v)) {
                        img.insert((gi, kk), cc);
                    }
                }
                img
            })
            .collect();
        let socle = kernel(&f, &socle_images).len() - p.dim();
        r.check_bounded("length_v_over_p", "dim V/P = 1", 1, full - p.dim(), bound.clone());
        r.check_bounded("socle_dim", "r_P(V/P) = 1", 1, socle, bound);
        Ok(r)
    }
}

/// `A = P + sB ⊆ B = V[[s]]`, truncated at `t^N` and `s^M`. Checks
/// `A:B = 𝔠 + sB` with `𝔠 = t^c V` and compares `r_A(B/A)` with `r_P(V/P)`.
pub fn cone_extension_report(id: &str, gens: &[Poly], spec: FieldSpec, prec: usize, s_prec: usize) -> Result<Report> {
    if s_prec < 2 {
        return Err(Error::PrecisionExhausted { window: s_prec });
    }
    with_field!(spec, |f| cone_checks(id, gens, spec, f, prec, s_prec))
}

fn cone_checks<F: Field>(id: &str, gens: &[Poly], spec: FieldSpec, f: F, prec: usize, s_prec: usize) -> Result<Report> {
    {
        let p = TruncatedSubalgebra::from_polys(f.clone(), gens, prec)?;
        let c = p.conductor_exponent()?;
        let n = prec;
        let key = |k: usize, j: usize| k * n + j;
        let total = n * s_prec;
        let unit = |k: usize| -> Vector<F> { [(k, f.one())].into_iter().collect() };
        let mul = |a: &Vector<F>, b: &Vector<F>| -> Vector<F> {
            let mut out = SparseVec::new();
            for (ka, x) in a {
                for (kb, y) in b {
                    let (j, s) = (ka % n + kb % n, ka / n + kb / n);
                    if j < n && s < s_prec {
                        add_into(&f, &mut out, key(s, j), f.mul(x, y));
                    }
                }
            }
            out
        };
        let mut a = Echelon::new(f.clone());
        for row in p.basis().rows() {
            a.insert(row.clone());
        }
        for k in n..total {
            a.insert(unit(k));
        }
        let reduce_all = |x: &Vector<F>, ys: &[Vector<F>]| -> SparseVec<(usize, usize), F::Elem> {
            let mut img = SparseVec::new();
            for (yi, y) in ys.iter().enumerate() {
                for (kk, cc) in a.reduce(mul(x, y)) {
                    img.insert((yi, kk), cc);
                }
            }
            img
        };
        let b_basis: Vec<Vector<F>> = (0..total).map(unit).collect();
        let conductor_images: Vec<_> = b_basis.iter().map(|x| reduce_all(x, &b_basis)).collect();
        let mut computed = Echelon::new(f.clone());
        for v in kernel(&f, &conductor_images) {
            computed.insert(v);
        }
        let mut expected = Echelon::new(f.clone());
        for k in (c..n).chain(n..total) {
            expected.insert(unit(k));
        }
        let bound = Some(format!("t-window [0, {n}), s-window [0, {s_prec})"));
        let mut r = Report::new(id, "cone over a power series subalgebra", spec);
        r.record("conductor_exponent", "c with P:V = t^c V", c);
        r.check_bounded("conductor_is_c_plus_sb", "A:B = c + sB", true, computed.same_span(&expected), bound.clone());
        r.check("conductor_primary", "c + sB is m-primary", true, c < n);
        let mut m_span = p.maximal_ideal_rows();
        m_span.extend((n..total).map(unit));
        let socle_images: Vec<_> = b_basis.iter().map(|x| reduce_all(x, &m_span)).collect();
        let r_a = kernel(&f, &socle_images).len() - a.dim();
        let r_p = p.socle_dim_of_quotient()?;
        r.record_bounded("socle_dim_b_over_a", "r_A(B/A)", r_a, bound.clone());
        r.record_bounded("socle_dim_v_over_p", "r_P(V/P)", r_p, bound.clone());
        r.check_bounded("socle_dims_agree", "r_A(B/A) = r_P(V/P)", r_p, r_a, bound);
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn small_semigroups() {
        let h = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(h.gaps(), vec![1]);
        assert_eq!(h.frobenius(), 1);
        assert!(h.is_symmetric());
        let h = NumericalSemigroup::new(&[3, 4]).unwrap();
        assert_eq!(h.gaps(), vec![1, 2, 5]);
        assert_eq!(h.conductor(), 6);
        assert!(h.is_symmetric() && h.is_symmetric_direct());
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert!(n.gaps().is_empty());
        assert_eq!(n.conductor(), 0);
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert!(!h.is_symmetric() && !h.is_symmetric_direct());
        assert!(matches!(NumericalSemigroup::new(&[4, 6]), Err(Error::GcdNotOne(2))));
        assert_eq!(NumericalSemigroup::new(&[3, 6, 4, 7]).unwrap().generators(), &[3, 4]);
    }

    fn case_two() -> Vec<Poly> {
        parse_t_polys("t^2+t^3, t^4, t^6").unwrap()
    }

    #[test]
    fn characteristic_split() {
        let p2 = TruncatedSubalgebra::from_polys(PrimeField::new(2).unwrap(), &case_two(), 40).unwrap();
        assert!(p2.contains_power(7));
        assert!(!p2.valuations().contains(&5) && !p2.valuations().contains(&3));
        assert_eq!(p2.value_semigroup().unwrap().generators(), &[2, 7]);
        assert_eq!(p2.conductor_exponent().unwrap(), 6);
        let q = TruncatedSubalgebra::from_polys(Rationals, &case_two(), 40).unwrap();
        assert!(!q.contains_power(3));
        assert_eq!(q.value_semigroup().unwrap().generators(), &[2, 5]);
        assert_eq!(q.conductor_exponent().unwrap(), 4);
        assert_eq!(q.socle_dim_of_quotient().unwrap(), 1);
        assert_eq!(p2.socle_dim_of_quotient().unwrap(), 1);
    }

    #[test]
    fn monomial_generators_give_the_semigroup_ring() {
        let gens = parse_t_polys("t^3, t^4").unwrap();
        let p = TruncatedSubalgebra::from_polys(Rationals, &gens, 20).unwrap();
        let h = NumericalSemigroup::new(&[3, 4]).unwrap();
        let expect: Vec<usize> = (0..20).filter(|&s| h.contains(s as u64)).collect();
        assert_eq!(p.valuations(), expect);
        assert_eq!(p.conductor_exponent().unwrap(), 6);
        let v = TruncatedSubalgebra::from_polys(Rationals, &parse_t_polys("t").unwrap(), 10).unwrap();
        assert_eq!(v.conductor_exponent().unwrap(), 0);
    }

    #[test]
    fn short_window_is_reported() {
        let gens = parse_t_polys("t^3, t^4").unwrap();
        let p = TruncatedSubalgebra::from_polys(Rationals, &gens, 8).unwrap();
        assert!(matches!(p.conductor_exponent(), Err(Error::PrecisionExhausted { window: 8 })));
        assert!(TruncatedSubalgebra::from_polys(Rationals, &parse_t_polys("1+t").unwrap(), 8).is_err());
    }

    #[test]
    fn quadratic_extensions() {
        let r = quadratic_extension_report("qi", FieldSpec::Rationals, 0, -1, 12).unwrap();
        assert!(r.ok, "{}", r.to_table());
        let r = quadratic_extension_report("f9", FieldSpec::Prime(3), 0, -1, 12).unwrap();
        assert!(r.ok, "{}", r.to_table());
        let r = quadratic_extension_report("f4", FieldSpec::Prime(2), 1, 1, 8).unwrap();
        assert!(r.ok, "{}", r.to_table());
        assert!(matches!(
            quadratic_extension_report("bad", FieldSpec::Rationals, 0, 4, 8),
            Err(Error::DegenerateExtension(_))
        ));
        assert!(!quadratic_is_irreducible(FieldSpec::Prime(5), 0, -1));
    }

    #[test]
    fn cone_reports() {
        let gens = parse_t_polys("t^3, t^4").unwrap();
        let r = cone_extension_report("c34", &gens, FieldSpec::Rationals, 20, 3).unwrap();
        assert!(r.ok, "{}", r.to_table());
        assert_eq!(r.claim("conductor_exponent").unwrap().computed, serde_json::json!(6));
        let r = cone_extension_report("v", &parse_t_polys("t").unwrap(), FieldSpec::Rationals, 10, 3).unwrap();
        assert!(r.ok);
        assert_eq!(r.claim("socle_dim_b_over_a").unwrap().computed, serde_json::json!(0));
        let r = cone_extension_report("c2", &case_two(), FieldSpec::Rationals, 20, 3).unwrap();
        assert_eq!(r.claim("socle_dim_b_over_a").unwrap().computed, serde_json::json!(1));
    }
}
