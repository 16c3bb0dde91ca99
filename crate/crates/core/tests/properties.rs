use proptest::prelude::*;

use s2kit::families::{fiber_product_report, ArtinianQuotient, FFamilySpec};
use s2kit::field::{FieldSpec, Rationals};
use s2kit::monomial::{Monomial, MonomialIdeal, MonomialPrime, VarContext};
use s2kit::oracle;
use s2kit::pullback::{annihilates_cokernel, PullbackFamily};
use s2kit::s2::{s2_equals_b_test, trace_ideal_check, S2Probe, Verdict};
use s2kit::semigroup::{parse_t_polys, NumericalSemigroup, TruncatedSubalgebra};
use s2kit::simplicial::{complex_of, depth, is_cohen_macaulay, reduced_homology};

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)];

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_exp, n).prop_filter("degree 1..=3", |e| (1..=3).contains(&e.iter().sum::<u32>()))
}

fn ideal_in(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(n, 3), 1..=4)
        .prop_map(move |g| MonomialIdeal::from_exponents(VarContext::indexed("x", n).unwrap(), g).unwrap())
}

fn ideals(k: usize) -> impl Strategy<Value = Vec<MonomialIdeal>> {
    (1usize..=5).prop_flat_map(move |n| prop::collection::vec(ideal_in(n), k))
}

fn squarefree() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(monomial(n, 1), 1..=5)
            .prop_map(move |g| MonomialIdeal::from_exponents(VarContext::indexed("x", n).unwrap(), g).unwrap())
    })
}

fn is_minimal(i: &MonomialIdeal) -> bool {
    let g = i.gens();
    (0..g.len()).all(|a| (0..g.len()).all(|b| a == b || !g[a].divides(&g[b])))
}

/// Random `k`-subsets of `{1..n}`, `ℓ` of them.
fn equal_size_family() -> impl Strategy<Value = FFamilySpec> {
    (4usize..=7)
        .prop_flat_map(|n| (Just(n), 2..n - 1, 2usize..=3))
        .prop_flat_map(|(n, k, ell)| {
            let set = prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k);
            (Just(n), prop::collection::vec(set, ell))
        })
        .prop_filter_map("valid spec", |(n, sets)| FFamilySpec::new(n, sets).ok())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn outputs_are_minimal(v in ideals(2)) {
        let (i, j) = (&v[0], &v[1]);
        prop_assert!(is_minimal(&i.intersect(j).unwrap()));
        prop_assert!(is_minimal(&i.sum(j).unwrap()));
        prop_assert!(is_minimal(&i.colon(j).unwrap()));
    }

    #[test]
    fn colon_distributes_over_intersection(v in ideals(3)) {
        let (i, j, k) = (&v[0], &v[1], &v[2]);
        let lhs = i.intersect(j).unwrap().colon(k).unwrap();
        let rhs = i.colon(k).unwrap().intersect(&j.colon(k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn irreducible_decomposition_is_sound(v in ideals(1)) {
        let i = &v[0];
        let comps = i.irreducible_decomposition().unwrap();
        prop_assert!(comps.iter().all(|c| c.gens().iter().all(|g| g.pure_power_var().is_some())));
        let back = MonomialIdeal::intersect_all(i.ctx(), comps.iter()).unwrap();
        prop_assert_eq!(&back, i);
        let bad = oracle::agree_up_to(i.nvars(), 1 + i.max_degree(), |u| i.contains_monomial(u), |u| {
            comps.iter().all(|c| c.contains_monomial(u))
        });
        prop_assert!(bad.is_none(), "{:?}", bad);
    }

    #[test]
    fn radicals_and_minimal_primes(v in ideals(1), s in squarefree()) {
        let i = &v[0];
        prop_assert_eq!(s.radical(), s.clone());
        prop_assert_eq!(i.minimal_primes().unwrap(), i.radical().minimal_primes().unwrap());
        let mut mine: Vec<u64> = i.minimal_primes().unwrap().iter().map(|p| p.support()).collect();
        mine.sort_unstable();
        prop_assert_eq!(mine, oracle::minimal_primes(i).unwrap());
    }

    #[test]
    fn unmixed_part_contains_and_is_idempotent(v in ideals(1)) {
        let i = &v[0];
        let u = i.unmixed_part().unwrap();
        prop_assert!(u.contains(i));
        prop_assert_eq!(u.unmixed_part().unwrap(), u.clone());
        prop_assert_eq!(u.minimal_primes().unwrap(), i.minimal_primes().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn depth_bounded_by_dim_with_equality_iff_cm(i in squarefree()) {
        let (_, dim) = i.height_and_dim().unwrap();
        let c = complex_of(&i).unwrap();
        for f in FIELDS {
            let d = depth(&i, f).unwrap();
            prop_assert!(d <= dim);
            prop_assert_eq!(d == dim, is_cohen_macaulay(&c, f).unwrap());
        }
    }

    #[test]
    fn coning_adds_one_to_depth_and_dim(i in squarefree()) {
        let c = complex_of(&i).unwrap();
        let j = c.cone("apex").unwrap().ideal().unwrap();
        let (_, dim) = i.height_and_dim().unwrap();
        let (_, dim_c) = j.height_and_dim().unwrap();
        prop_assert_eq!(dim_c, dim + 1);
        for f in FIELDS {
            prop_assert_eq!(depth(&j, f).unwrap(), depth(&i, f).unwrap() + 1);
        }
    }

    #[test]
    fn euler_characteristic_matches_face_counts(i in squarefree()) {
        let c = complex_of(&i).unwrap();
        let chi: i64 = c.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) }).sum();
        for f in FIELDS {
            prop_assert_eq!(reduced_homology(&c, f).unwrap().euler_characteristic(), chi);
        }
    }

    #[test]
    fn equal_size_families(spec in equal_size_family()) {
        let fam = spec.family().unwrap();
        let a = fam.defining_ideal();
        let i = fam.conductor_closed_form();
        let ht = i.height_in_quotient(&a).unwrap();
        prop_assert_eq!(ht, spec.min_difference());
        prop_assert_eq!(Some(ht), oracle::height_in_quotient(&i, &a).unwrap());
        if spec.theorem_hypotheses() {
            let k = spec.sets[0].len();
            let (_, dim) = a.height_and_dim().unwrap();
            prop_assert!(ht >= 2);
            prop_assert_eq!(dim, spec.n - k);
            let d = depth(&a, FieldSpec::Rationals).unwrap();
            prop_assert!(0 < d && d < dim, "depth {} dim {}", d, dim);
        }
    }

    #[test]
    fn conductor_kills_cokernel(spec in equal_size_family()) {
        let fam = spec.family().unwrap();
        let top = fam.conductor_closed_form().max_degree() + 1;
        prop_assert!(annihilates_cokernel(&fam, &fam.conductor_generators(), top));
    }

    #[test]
    fn fiber_product_length_is_length_of_t(exps in prop::collection::vec(1u32..=3, 1..=2), mixed in any::<bool>()) {
        let d = exps.len();
        let ctx = VarContext::indexed("x", d).unwrap();
        let mut gens: Vec<Vec<u32>> = (0..d).map(|j| { let mut e = vec![0; d]; e[j] = exps[j]; e }).collect();
        if mixed && d == 2 && exps.iter().all(|&e| e >= 2) {
            gens.push(vec![1, 1]);
        }
        let q = ArtinianQuotient::new(MonomialIdeal::from_exponents(ctx, gens).unwrap()).unwrap();
        let r = fiber_product_report("p", &q).unwrap();
        let len = r.claim("length_b_over_a").unwrap().computed.as_u64().unwrap() as usize;
        prop_assert_eq!(len, q.socle_and_type().length);
        prop_assert!(r.ok, "{}", r.to_table());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn trace_verdicts_come_with_agreeing_colons(spec in equal_size_family(), k in 1u32..=2) {
        prop_assume!(spec.theorem_hypotheses());
        let fam = spec.family().unwrap();
        let i = fam.conductor_closed_form().power(k);
        let v = trace_ideal_check(&fam, &i, None).unwrap();
        if v.verdict != Verdict::Fail {
            prop_assert!(v.colons_agree);
        }
    }

    #[test]
    fn s2_test_is_stable_under_multiplication(e in prop::collection::vec(0u32..=2, 2), f in prop::collection::vec(0u32..=2, 2)) {
        // A = k[x1,x2,y1,y2]/(x1,x2) has B = A; every monomial in y is a non-zerodivisor
        let ctx = VarContext::indexed("x", 4).unwrap();
        let fam = PullbackFamily::single_component(ctx.clone(), MonomialPrime::new(ctx, 0b0011).unwrap()).unwrap();
        let a = Monomial::new(vec![0, 0, e[0], e[1]]);
        let b = Monomial::new(vec![0, 0, f[0], f[1]]);
        let one = s2_equals_b_test(&fam, &S2Probe::Monomial(a.clone())).unwrap().equal;
        let two = s2_equals_b_test(&fam, &S2Probe::Monomial(a.mul(&b))).unwrap().equal;
        prop_assert!(one && two);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn symmetry_routes_agree(g in prop::collection::vec(2u64..=12, 2..=3)) {
        prop_assume!(g.iter().fold(0, |a, &b| gcd(a, b)) == 1);
        let h = NumericalSemigroup::new(&g).unwrap();
        prop_assert_eq!(h.is_symmetric(), h.is_symmetric_direct());
        let f = h.frobenius();
        prop_assert!(f < 0 || !h.contains(f as u64));
        prop_assert!((h.conductor()..h.conductor() + 20).all(|s| h.contains(s)));
    }

    #[test]
    fn monomial_subalgebra_window_is_the_semigroup(g in prop::collection::vec(2usize..=7, 2..=3)) {
        prop_assume!(g.iter().fold(0, |a, &b| gcd(a as u64, b as u64)) == 1);
        let src: Vec<String> = g.iter().map(|e| format!("t^{e}")).collect();
        let polys = parse_t_polys(&src.join(",")).unwrap();
        let p = TruncatedSubalgebra::from_polys(Rationals, &polys, 40).unwrap();
        let h = NumericalSemigroup::new(&g.iter().map(|&e| e as u64).collect::<Vec<_>>()).unwrap();
        let expect: Vec<usize> = (0..40).filter(|&v| h.contains(v as u64)).collect();
        prop_assert_eq!(p.valuations(), expect);
        // truncation monotonicity
        let small = TruncatedSubalgebra::from_polys(Rationals, &polys, 25).unwrap();
        let restricted: Vec<usize> = p.valuations().into_iter().filter(|&v| v < 25).collect();
        prop_assert_eq!(small.valuations(), restricted);
    }
}

#[test]
fn characteristic_split_over_several_fields() {
    // (t^2+t^3)^2 - t^4 - t^6 = 2t^5, so 5 is a value exactly when 2 is invertible
    let polys = parse_t_polys("t^2+t^3, t^4, t^6").unwrap();
    for p in [2u64, 3, 5, 7, 11] {
        let f = s2kit::field::PrimeField::new(p).unwrap();
        let v = TruncatedSubalgebra::from_polys(f, &polys, 30).unwrap().valuations();
        assert_eq!(v.contains(&5), p != 2, "p = {p}: {v:?}");
        assert!(v.contains(&7) && !v.contains(&3), "p = {p}: {v:?}");
    }
    let v = TruncatedSubalgebra::from_polys(Rationals, &polys, 30).unwrap().valuations();
    assert!(v.contains(&5) && v.contains(&7) && !v.contains(&3));
}
