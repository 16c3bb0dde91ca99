//! The registry of worked examples and the runner that turns an entry into a
//! checked [`Report`].
//!
//! Each entry names a verifier (`kind`), its input, and the expected values
//! of selected claims. Expected values live only in the registry file; the
//! verifiers compute, the registry judges.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::families::{
    f_family_report, fiber_product_report, k_plus_q_report, parse_probes, ArtinianQuotient, FFamilyOptions,
    FFamilySpec,
};
use crate::field::FieldSpec;
use crate::monomial::{IdealJson, Monomial, MonomialIdeal, VarContext};
use crate::poly::Poly;
use crate::pullback::{image_membership, FamilyJson, GradedSubmodule, PullbackFamily};
use crate::report::Report;
use crate::s2::{s2_equals_b_test, trace_ideal_check, unmixed_component_principal, QuotientRing, S2Probe};
use crate::semigroup::{
    cone_extension_report, parse_t_polys, quadratic_extension_report, semigroup_report, subalgebra_report,
    DEFAULT_MARGIN, DEFAULT_PRECISION,
};
use crate::simplicial::{complex_of, depth, depth_by_skeleta, ComplexJson, SimplicialComplex};

/// The registry shipped with the crate.
pub const EMBEDDED_REGISTRY: &str = include_str!("../data/families.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Registry {
    pub schema_version: u32,
    pub examples: Vec<Example>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Example {
    pub id: String,
    pub title: String,
    #[serde(flatten)]
    pub input: ExampleInput,
    #[serde(default)]
    pub expect: Vec<Expectation>,
    #[serde(default)]
    pub notes: Vec<Note>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub claim: String,
    pub anchor: String,
    pub value: Value,
}

/// A statement carried along in the report but never checked.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Note {
    pub claim: String,
    pub anchor: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "input", rename_all = "snake_case")]
pub enum ExampleInput {
    FFamily {
        n: usize,
        sets: Vec<Vec<usize>>,
        #[serde(default)]
        probes: Vec<String>,
    },
    TracePowers {
        #[serde(flatten)]
        family: FamilyJson,
        powers: Vec<u32>,
    },
    MonomialProbe {
        #[serde(flatten)]
        family: FamilyJson,
        probe: Vec<u32>,
    },
    KPlusQ {
        exponents: Vec<u32>,
    },
    FiberProduct {
        d: usize,
        gens: Vec<Vec<u32>>,
    },
    Subalgebra {
        gens: String,
        field: FieldSpec,
        #[serde(default)]
        power_probes: Vec<usize>,
        #[serde(default)]
        valuation_probes: Vec<usize>,
    },
    Semigroup {
        gens: Vec<u64>,
    },
    Cone {
        gens: String,
        field: FieldSpec,
        s_prec: usize,
    },
    Quadratic {
        field: FieldSpec,
        c: i64,
        e: i64,
    },
    ComplexDepth {
        #[serde(flatten)]
        complex: ComplexJson,
        fields: Vec<FieldSpec>,
    },
}

/// Run-time settings shared by every example.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    /// Overrides the coefficient field of examples that have one.
    pub field: Option<FieldSpec>,
    pub degree_bound: Option<u32>,
    /// Truncation `N` in `t`.
    pub precision: Option<usize>,
}

impl Registry {
    pub fn embedded() -> Self {
        Self::from_json(EMBEDDED_REGISTRY).expect("embedded registry parses")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let r: Registry = serde_json::from_str(src)?;
        let mut seen = std::collections::BTreeSet::new();
        for e in &r.examples {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::Parse(format!("duplicate example id `{}`", e.id)));
            }
        }
        Ok(r)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.examples.iter().map(|e| e.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Result<&Example> {
        self.examples
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownExample(id.to_string()))
    }

    /// Runs the named examples (or all of them for `["all"]`) in parallel;
    /// reports come back in request order.
    pub fn run(&self, ids: &[String], cfg: &RunConfig) -> Result<Vec<Report>> {
        let selected: Vec<&Example> = if ids.iter().any(|i| i == "all") {
            self.examples.iter().collect()
        } else {
            ids.iter().map(|i| self.get(i)).collect::<Result<_>>()?
        };
        selected.par_iter().map(|e| run_example(e, cfg)).collect()
    }
}

/// Runs one registry entry and applies its expectations.
pub fn run_example(ex: &Example, cfg: &RunConfig) -> Result<Report> {
    let mut r = compute(ex, cfg)?;
    r.title = ex.title.clone();
    for e in &ex.expect {
        r.expect(&e.claim, &e.anchor, e.value.clone());
    }
    for n in &ex.notes {
        r.record(&n.claim, &n.anchor, &n.note);
    }
    Ok(r)
}

fn compute(ex: &Example, cfg: &RunConfig) -> Result<Report> {
    let id = ex.id.as_str();
    let prec = cfg.precision.unwrap_or(DEFAULT_PRECISION);
    match &ex.input {
        ExampleInput::FFamily { n, sets, probes } => {
            let spec = FFamilySpec::new(*n, sets.clone())?;
            let opts = FFamilyOptions { probes: parse_probes(&spec, probes)?, degree_bound: cfg.degree_bound };
            f_family_report(id, &spec, cfg.field.unwrap_or_default(), &opts)
        }
        ExampleInput::TracePowers { family, powers } => {
            trace_powers_report(id, &PullbackFamily::try_from(family.clone())?, powers, cfg.degree_bound)
        }
        ExampleInput::MonomialProbe { family, probe } => {
            monomial_probe_report(id, &PullbackFamily::try_from(family.clone())?, &Monomial::new(probe.clone()))
        }
        ExampleInput::KPlusQ { exponents } => k_plus_q_report(id, &ArtinianQuotient::pure_powers(exponents)?),
        ExampleInput::FiberProduct { d, gens } => {
            let ctx = VarContext::indexed("x", *d)?;
            let q = MonomialIdeal::try_from(IdealJson { vars: ctx.names().to_vec(), gens: gens.clone() })?;
            fiber_product_report(id, &ArtinianQuotient::new(q)?)
        }
        ExampleInput::Subalgebra { gens, field, power_probes, valuation_probes } => subalgebra_report(
            id,
            &parse_t_polys(gens)?,
            cfg.field.unwrap_or(*field),
            prec,
            DEFAULT_MARGIN,
            power_probes,
            valuation_probes,
        ),
        ExampleInput::Semigroup { gens } => semigroup_report(id, gens),
        ExampleInput::Cone { gens, field, s_prec } => {
            cone_extension_report(id, &parse_t_polys(gens)?, cfg.field.unwrap_or(*field), prec.min(24), *s_prec)
        }
        ExampleInput::Quadratic { field, c, e } => {
            quadratic_extension_report(id, cfg.field.unwrap_or(*field), *c, *e, prec.min(16))
        }
        ExampleInput::ComplexDepth { complex, fields } => complex_depth_report(id, complex, fields),
    }
}

/// Trace verdicts for `m^k`, `k` in `powers`.
pub fn trace_powers_report(id: &str, fam: &PullbackFamily, powers: &[u32], bound: Option<u32>) -> Result<Report> {
    let m = MonomialIdeal::maximal(fam.ctx().clone());
    let mut r = Report::new(id, "trace verdicts for powers of m", FieldSpec::Rationals);
    r.record("conductor_is_maximal", "A:B = m", fam.conductor_closed_form() == m);
    for &k in powers {
        let v = trace_ideal_check(fam, &m.power(k), bound)?;
        let b = Some(format!("degree <= {}", v.bound));
        r.record_bounded(&format!("m{k}.verdict"), "I:I = A:I", v.verdict, b.clone());
        r.record(&format!("m{k}.endo_ring_is_b"), "I:I = B", v.endo_ring_is_b);
        r.check_bounded(&format!("m{k}.colons_agree"), "A:I = I:I up to bound", true, v.colons_agree, b);
    }
    Ok(r)
}

/// `U(aA)` against `aB` for a monomial non-zerodivisor `a`.
pub fn monomial_probe_report(id: &str, fam: &PullbackFamily, a: &Monomial) -> Result<Report> {
    let ring = QuotientRing::new(fam.defining_ideal())?;
    let ctx = fam.ctx();
    let mut r = Report::new(id, "monomial probe", FieldSpec::Rationals);
    let u = unmixed_component_principal(&ring, a)?;
    let principal = MonomialIdeal::new(ctx.clone(), vec![a.clone()])?.sum(ring.defining_ideal())?;
    r.record("unmixed_component", "U(aA)", u.format());
    r.record("unmixed_is_principal", "U(aA) = aA", u == principal);
    r.record("probe_in_conductor", "a in A:B", fam.conductor_closed_form().contains_monomial(a));
    let ab = GradedSubmodule::extended_principal_sum(fam, &[Poly::monomial(a.clone())])?;
    let mut inside = true;
    for (_, g) in ab.generators() {
        inside &= image_membership(fam, &fam.from_vec(g))?.member;
    }
    r.record("ub_inside_a", "aB in A", inside);
    let test = s2_equals_b_test(fam, &S2Probe::Monomial(a.clone()));
    r.record("s2_equals_b_test", "aB = U(aA)", crate::report::outcome(test.map(|v| v.equal)));
    Ok(r)
}

/// Depth of a Stanley–Reisner ring over several fields, by Hochster's
/// formula and by the skeleton criterion.
pub fn complex_depth_report(id: &str, complex: &ComplexJson, fields: &[FieldSpec]) -> Result<Report> {
    let c = SimplicialComplex::try_from(complex.clone())?;
    let i = c.ideal()?;
    let mut r = Report::new(id, "Stanley-Reisner depth", fields.first().copied().unwrap_or_default());
    for &f in fields {
        let d = depth(&i, f)?;
        r.record(&format!("depth.{f}"), "depth k[Delta]", d);
        let sk = depth_by_skeleta(&complex_of(&i)?, f)?;
        r.check(&format!("skeleta_agree.{f}"), "depth = 1 + max CM skeleton", d, sk);
    }
    Ok(r)
}
