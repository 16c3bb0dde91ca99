//! Unmixed components of principal ideals, membership in the
//! (S₂)-ification, the finite-generation test `aÃ = U(aA)` and trace-ideal
//! verdicts.
//!
//! For a non-zerodivisor `a` of `A = T/𝔞`, `U(aA)` is the intersection of the
//! primary components of `aA` at its minimal primes, and a fraction `m/a`
//! lies in the (S₂)-ification `Ã` exactly when `m ∈ U(aA)`. Everything here
//! is monomial; linear-form probes go through the conductor identity
//! `𝔞 = Σ a_i B` instead of a decomposition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime, VarContext};
use crate::poly::Poly;
use crate::pullback::{
    colon_in_b, image_membership, verify_generation, GradedSubmodule, PullbackFamily, PullbackKind,
};

/// `T/𝔞` for a proper monomial ideal `𝔞` (possibly zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    ideal: MonomialIdeal,
}

impl QuotientRing {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(QuotientRing { ideal })
    }

    pub fn ambient(ctx: VarContext) -> Self {
        QuotientRing { ideal: MonomialIdeal::zero(ctx) }
    }

    pub fn ctx(&self) -> &VarContext {
        self.ideal.ctx()
    }

    pub fn defining_ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn associated_primes(&self) -> Result<Vec<MonomialPrime>> {
        self.ideal.associated_primes()
    }

    /// A monomial is a non-zerodivisor iff it avoids every associated prime.
    pub fn is_nonzerodivisor(&self, a: &Monomial) -> Result<bool> {
        if a.nvars() != self.ctx().len() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.associated_primes()?.iter().all(|p| !p.contains_monomial(a)))
    }

    /// A homogeneous linear form is a non-zerodivisor iff it lies in no
    /// associated prime, i.e. it involves a variable outside each of them.
    pub fn is_nonzerodivisor_linear(&self, f: &Poly) -> Result<bool> {
        if f.homogeneous_degree() != Some(1) {
            return Err(Error::Unsupported("only linear forms are tested here".into()));
        }
        let support = f.terms().keys().fold(0u64, |m, u| m | u.support());
        Ok(self.associated_primes()?.iter().all(|p| support & !p.support() != 0))
    }
}

/// `U(aA)`, lifted to `T` (so it contains `𝔞`). The unit ideal when `aA = A`.
pub fn unmixed_component_principal(a_ring: &QuotientRing, a: &Monomial) -> Result<MonomialIdeal> {
    if !a_ring.is_nonzerodivisor(a)? {
        return Err(Error::ZeroDivisor(a.format(a_ring.ctx())));
    }
    let principal = MonomialIdeal::new(a_ring.ctx().clone(), vec![a.clone()])?;
    let lifted = principal.sum(a_ring.defining_ideal())?;
    lifted.unmixed_part()
}

/// Whether `m/a ∈ Ã`, decided as `m ∈ U(aA)`.
pub fn s2_membership(a_ring: &QuotientRing, m: &Poly, a: &Monomial) -> Result<bool> {
    let u = unmixed_component_principal(a_ring, a)?;
    Ok(m.terms().keys().all(|t| u.contains_monomial(t)))
}

/// Probe element for [`s2_equals_b_test`].
#[derive(Clone, Debug)]
pub enum S2Probe {
    /// A single monomial `a`; both `aB` and `U(aA)` are computed.
    Monomial(Monomial),
    /// Homogeneous elements `a_1, ..., a_d`; checked through `Σ a_i B = A:B`.
    LinearSystem(Vec<Poly>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S2Verdict {
    pub equal: bool,
    /// `(degree, dim (aB)_D or (Σ a_i B)_D, dim of the other side)` where computed.
    pub degree_dims: Vec<(u32, usize, usize)>,
}

fn quotient_of(fam: &PullbackFamily) -> Result<QuotientRing> {
    QuotientRing::new(fam.defining_ideal())
}

/// Whether `B = Ã` is witnessed by the probe: `aB = U(aA)` for a monomial,
/// or `A:B = Σ a_i B` for a system of homogeneous elements. The probe must
/// consist of non-zerodivisors lying in the conductor.
pub fn s2_equals_b_test(fam: &PullbackFamily, probe: &S2Probe) -> Result<S2Verdict> {
    let ring = quotient_of(fam)?;
    let conductor = fam.conductor_closed_form();
    match probe {
        S2Probe::Monomial(a) => {
            if matches!(fam.kind(), PullbackKind::Congruence { .. }) {
                return Err(Error::Unsupported("monomial probes need the intersection presentation".into()));
            }
            if !ring.is_nonzerodivisor(a)? {
                return Err(Error::ZeroDivisor(a.format(fam.ctx())));
            }
            if !conductor.contains_monomial(a) {
                return Err(Error::NotInConductor(a.format(fam.ctx())));
            }
            let u = unmixed_component_principal(&ring, a)?;
            let ab = GradedSubmodule::extended_principal_sum(fam, &[Poly::monomial(a.clone())])?;
            let u_mod = GradedSubmodule::a_ideal(fam, &u)?;
            let mut equal = true;
            for (_, g) in ab.generators() {
                equal &= u_mod.contains(fam, g)?;
            }
            for (_, g) in u_mod.generators() {
                equal &= ab.contains(fam, g)?;
            }
            let top = u.max_degree().max(a.degree());
            let degree_dims = (0..=top)
                .map(|d| (d, ab.piece(fam, d).dim(), u_mod.piece(fam, d).dim()))
                .collect();
            Ok(S2Verdict { equal, degree_dims })
        }
        S2Probe::LinearSystem(elems) => {
            for a in elems {
                let nzd = match a.homogeneous_degree() {
                    Some(1) => ring.is_nonzerodivisor_linear(a)?,
                    Some(_) if a.terms().len() == 1 => {
                        ring.is_nonzerodivisor(a.terms().keys().next().expect("one term"))?
                    }
                    Some(_) => return Err(Error::Unsupported("probe must be linear or a monomial".into())),
                    None => return Err(Error::Inhomogeneous),
                };
                if !nzd {
                    return Err(Error::ZeroDivisor(a.format(fam.ctx())));
                }
                if !a.terms().keys().all(|t| conductor.contains_monomial(t)) {
                    return Err(Error::NotInConductor(a.format(fam.ctx())));
                }
            }
            let g = verify_generation(fam, &conductor, elems)?;
            Ok(S2Verdict { equal: g.holds, degree_dims: g.degree_dims })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// No counterexample up to the stated degree bound, no certificate either.
    UpToBound,
}

/// The finite certificate for `I` being a trace ideal with `I:I = B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCertificate {
    pub height_of_conductor: usize,
    pub equal_component_sizes: bool,
    pub inside_conductor: bool,
    pub b_stable: bool,
}

impl TraceCertificate {
    pub fn holds(&self) -> bool {
        self.height_of_conductor >= 2 && self.equal_component_sizes && self.inside_conductor && self.b_stable
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceVerdict {
    pub verdict: Verdict,
    pub is_trace: Option<bool>,
    pub endo_ring_is_b: Option<bool>,
    pub height: usize,
    pub certificate: Option<TraceCertificate>,
    /// `A:I` and `I:I`, computed inside `B`, agree in degrees `0..=bound`.
    pub colons_agree: bool,
    /// `I:I = B` in degrees `0..=bound`.
    pub endo_equals_b_up_to_bound: bool,
    pub bound: u32,
}

/// Trace-ideal verdict for a monomial ideal `I` of `A` (given by its lift to
/// `T`). Requires `ht_A I ≥ 2` and a non-zerodivisor in `I`; under these,
/// `A:I` and `I:I` both live inside `B`, so the degree-wise colons are exact
/// in every degree they reach.
pub fn trace_ideal_check(fam: &PullbackFamily, i: &MonomialIdeal, bound: Option<u32>) -> Result<TraceVerdict> {
    if i.ctx() != fam.ctx() {
        return Err(Error::ContextMismatch);
    }
    let primes = match fam.kind() {
        PullbackKind::Intersection { primes } => primes.clone(),
        PullbackKind::Congruence { .. } => {
            return Err(Error::Unsupported("trace verdicts need the intersection presentation".into()))
        }
    };
    let a_ideal = fam.defining_ideal();
    if primes.iter().any(|p| i.gens().iter().all(|g| p.contains_monomial(g))) {
        return Err(Error::NoNonZeroDivisor);
    }
    let height = if i.is_unit() { usize::MAX } else { i.height_in_quotient(&a_ideal)? };
    if height < 2 {
        return Err(Error::HeightTooSmall(height));
    }
    let conductor = fam.conductor_closed_form();
    let height_of_conductor =
        if conductor.is_unit() { usize::MAX } else { conductor.height_in_quotient(&a_ideal)? };
    let sizes: Vec<usize> = primes.iter().map(MonomialPrime::height).collect();
    let i_mod = GradedSubmodule::a_ideal(fam, i)?;
    let mut inside_conductor = true;
    let mut b_stable = true;
    for g in i.gens() {
        for j in 0..fam.ell() {
            let v = fam.placed(&Poly::monomial(g.clone()), j);
            inside_conductor &= image_membership(fam, &fam.from_vec(&v))?.member;
            b_stable &= i_mod.contains(fam, &v)?;
        }
    }
    let cert = TraceCertificate {
        height_of_conductor,
        equal_component_sizes: sizes.windows(2).all(|w| w[0] == w[1]),
        inside_conductor,
        b_stable,
    };
    let bound = bound.unwrap_or(i.max_degree() + fam.nvars() as u32);
    let a_mod = GradedSubmodule::ring_a(fam);
    let b_mod = GradedSubmodule::ring_b(fam);
    let a_colon = colon_in_b(fam, &a_mod, i, Some(bound))?;
    let i_colon = colon_in_b(fam, &i_mod, i, Some(bound))?;
    let colons_agree = a_colon.equal_up_to(&i_colon, fam, bound);
    let endo_equals_b_up_to_bound = i_colon.equal_up_to(&b_mod, fam, bound);
    let (verdict, is_trace, endo) = if cert.holds() {
        if !colons_agree || !endo_equals_b_up_to_bound {
            return Err(Error::MethodDisagreement(
                "trace certificate holds but the degree-wise colons disagree".into(),
            ));
        }
        (Verdict::Pass, Some(true), Some(true))
    } else if !colons_agree {
        (Verdict::Fail, Some(false), Some(endo_equals_b_up_to_bound).filter(|e| !e))
    } else {
        (Verdict::UpToBound, None, None)
    };
    Ok(TraceVerdict {
        verdict,
        is_trace,
        endo_ring_is_b: endo,
        height,
        certificate: Some(cert),
        colons_agree,
        endo_equals_b_up_to_bound,
        bound,
    })
}

/// Trace test in the polynomial ring itself: with `a` a generator of `I`,
/// `I` is a trace ideal iff `aT : I = aI : I`.
pub fn trace_ideal_check_ambient(i: &MonomialIdeal) -> Result<TraceVerdict> {
    if i.is_zero() {
        return Err(Error::NoNonZeroDivisor);
    }
    let ctx = i.ctx().clone();
    let a = i.gens()[0].clone();
    let at = MonomialIdeal::new(ctx, vec![a.clone()])?;
    let ai = i.product(&at)?;
    let lhs = at.colon(i)?;
    let rhs = ai.colon(i)?;
    let is_trace = lhs == rhs;
    let (height, _) = if i.is_unit() { (usize::MAX, 0) } else { i.height_and_dim()? };
    Ok(TraceVerdict {
        verdict: if is_trace { Verdict::Pass } else { Verdict::Fail },
        is_trace: Some(is_trace),
        endo_ring_is_b: None,
        height,
        certificate: None,
        colons_agree: is_trace,
        endo_equals_b_up_to_bound: false,
        bound: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn five() -> VarContext {
        VarContext::new(["x", "y", "z", "w", "u"]).unwrap()
    }

    fn two_planes_plus_u() -> QuotientRing {
        let c = five();
        let p = MonomialIdeal::from_support(c.clone(), 0b00011);
        let q = MonomialIdeal::from_support(c, 0b01100);
        QuotientRing::new(p.intersect(&q).unwrap()).unwrap()
    }

    fn u() -> Monomial {
        Monomial::var(5, 4)
    }

    #[test]
    fn principal_ideals_in_polynomial_ring_are_unmixed() {
        let r = QuotientRing::ambient(VarContext::new(["x", "y"]).unwrap());
        let a = Monomial::new(vec![2, 1]);
        let i = unmixed_component_principal(&r, &a).unwrap();
        assert_eq!(i.gens(), &[a]);
    }

    #[test]
    fn unit_principal_ideal() {
        let r = two_planes_plus_u();
        assert!(unmixed_component_principal(&r, &Monomial::one(5)).unwrap().is_unit());
    }

    #[test]
    fn u_over_two_planes() {
        let r = two_planes_plus_u();
        let i = unmixed_component_principal(&r, &u()).unwrap();
        let expected = MonomialIdeal::new(r.ctx().clone(), vec![u()]).unwrap().sum(r.defining_ideal()).unwrap();
        assert_eq!(i, expected);
        let ux = parse_poly(r.ctx(), "u*x").unwrap();
        assert!(s2_membership(&r, &ux, &u()).unwrap());
        let x = parse_poly(r.ctx(), "x").unwrap();
        assert!(!s2_membership(&r, &x, &u()).unwrap());
    }

    #[test]
    fn zerodivisors_rejected() {
        let r = two_planes_plus_u();
        let x = Monomial::var(5, 0);
        assert!(matches!(unmixed_component_principal(&r, &x), Err(Error::ZeroDivisor(_))));
    }

    #[test]
    fn ambient_trace_examples() {
        let c = VarContext::new(["x", "y"]).unwrap();
        let x = MonomialIdeal::new(c.clone(), vec![Monomial::var(2, 0)]).unwrap();
        assert_eq!(trace_ideal_check_ambient(&x).unwrap().is_trace, Some(false));
        let unit = MonomialIdeal::unit(c.clone());
        assert_eq!(trace_ideal_check_ambient(&unit).unwrap().is_trace, Some(true));
        let m = MonomialIdeal::maximal(c);
        assert_eq!(trace_ideal_check_ambient(&m).unwrap().is_trace, Some(true));
    }

    fn xyzw_family(extra_u: bool) -> PullbackFamily {
        let names: Vec<&str> = if extra_u { vec!["x", "y", "z", "w", "u"] } else { vec!["x", "y", "z", "w"] };
        let ctx = VarContext::new(names).unwrap();
        let p1 = MonomialPrime::from_names(ctx.clone(), &["x", "y"]).unwrap();
        let p2 = MonomialPrime::from_names(ctx.clone(), &["z", "w"]).unwrap();
        PullbackFamily::intersection(ctx, vec![p1, p2]).unwrap()
    }

    #[test]
    fn powers_of_maximal_ideal_are_trace() {
        let fam = xyzw_family(false);
        let m = MonomialIdeal::maximal(fam.ctx().clone());
        assert_eq!(fam.conductor_closed_form(), m);
        for l in 1..=3 {
            let v = trace_ideal_check(&fam, &m.power(l), None).unwrap();
            assert_eq!(v.verdict, Verdict::Pass, "l = {l}");
            assert_eq!(v.is_trace, Some(true));
            assert_eq!(v.endo_ring_is_b, Some(true));
            assert!(v.colons_agree);
        }
    }

    #[test]
    fn trace_preconditions() {
        let fam = xyzw_family(false);
        let c = fam.ctx().clone();
        let x = MonomialIdeal::new(c.clone(), vec![Monomial::var(4, 0)]).unwrap();
        assert!(matches!(trace_ideal_check(&fam, &x, None), Err(Error::NoNonZeroDivisor)));
        let xz = MonomialIdeal::new(c, vec![Monomial::var(4, 0), Monomial::var(4, 2)]).unwrap();
        assert!(matches!(trace_ideal_check(&fam, &xz, None), Err(Error::HeightTooSmall(1))));
    }

    #[test]
    fn u_probe_is_outside_conductor() {
        let fam = xyzw_family(true);
        let r = test_ring(&fam);
        let err = s2_equals_b_test(&fam, &S2Probe::Monomial(u())).unwrap_err();
        assert!(matches!(err, Error::NotInConductor(_)));
        // U(uA) = uA, while uB is not even inside A
        let uu = unmixed_component_principal(&r, &u()).unwrap();
        let ua = GradedSubmodule::a_ideal(&fam, &uu).unwrap();
        let ub = GradedSubmodule::extended_principal_sum(&fam, &[Poly::monomial(u())]).unwrap();
        let outside = ub.generators().iter().any(|(_, g)| !image_membership(&fam, &fam.from_vec(g)).unwrap().member);
        assert!(outside);
        assert!(!ub.contained_up_to(&ua, &fam, 2));
    }

    fn test_ring(fam: &PullbackFamily) -> QuotientRing {
        QuotientRing::new(fam.defining_ideal()).unwrap()
    }

    #[test]
    fn degenerate_family_is_already_s2() {
        let ctx = VarContext::new(["x", "y", "z"]).unwrap();
        let p = MonomialPrime::from_names(ctx.clone(), &["x"]).unwrap();
        let fam = PullbackFamily::single_component(ctx, p).unwrap();
        let y = Monomial::var(3, 1);
        assert!(s2_equals_b_test(&fam, &S2Probe::Monomial(y.clone())).unwrap().equal);
        assert!(s2_equals_b_test(&fam, &S2Probe::Monomial(y.mul(&Monomial::var(3, 2)))).unwrap().equal);
    }

    #[test]
    fn linear_probe_on_three_component_family() {
        let ctx = VarContext::indexed("x", 6).unwrap();
        let primes = [0b001111u64, 0b111100, 0b110011]
            .iter()
            .map(|m| MonomialPrime::new(ctx.clone(), *m).unwrap())
            .collect();
        let fam = PullbackFamily::intersection(ctx.clone(), primes).unwrap();
        let a = parse_poly(&ctx, "x1 + x3 + x5").unwrap();
        let b = parse_poly(&ctx, "x2 + x4 + x6").unwrap();
        assert!(s2_equals_b_test(&fam, &S2Probe::LinearSystem(vec![a.clone(), b])).unwrap().equal);
        assert!(!s2_equals_b_test(&fam, &S2Probe::LinearSystem(vec![a])).unwrap().equal);
        let x1 = parse_poly(&ctx, "x1").unwrap();
        assert!(matches!(
            s2_equals_b_test(&fam, &S2Probe::LinearSystem(vec![x1])),
            Err(Error::ZeroDivisor(_))
        ));
    }
}
