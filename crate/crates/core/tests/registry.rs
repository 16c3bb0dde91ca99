use s2kit::field::FieldSpec;
use s2kit::registry::{run_example, Registry, RunConfig};
use s2kit::report::Status;

#[test]
fn every_embedded_example_passes() {
    let reg = Registry::embedded();
    let ids: Vec<String> = vec!["all".into()];
    let reports = reg.run(&ids, &RunConfig::default()).unwrap();
    assert_eq!(reports.len(), reg.examples.len());
    for (r, ex) in reports.iter().zip(&reg.examples) {
        assert_eq!(r.id, ex.id);
        assert!(r.ok, "{}", r.to_table());
    }
}

#[test]
fn anchors_come_from_the_registry_verbatim() {
    let reg = Registry::embedded();
    for ex in &reg.examples {
        let r = run_example(ex, &RunConfig::default()).unwrap();
        for e in &ex.expect {
            let c = r.claim(&e.claim).unwrap_or_else(|| panic!("{}: {}", ex.id, e.claim));
            assert_eq!(c.anchor, e.anchor);
            assert_eq!(c.expected.as_ref(), Some(&e.value));
            assert_eq!(c.status, Status::Pass, "{}: {}", ex.id, e.claim);
        }
        for n in &ex.notes {
            let c = r.claim(&n.claim).unwrap();
            assert_eq!(c.anchor, n.anchor);
            assert_eq!(c.status, Status::Informational);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let reg = Registry::embedded();
    let ids: Vec<String> = vec!["all".into()];
    let a: Vec<String> = reg.run(&ids, &RunConfig::default()).unwrap().iter().map(|r| r.to_json()).collect();
    let b: Vec<String> = reg.run(&ids, &RunConfig::default()).unwrap().iter().map(|r| r.to_json()).collect();
    assert_eq!(a, b);
}

#[test]
fn field_override_reaches_the_subalgebra_engine() {
    // over Q the closure of t^2+t^3, t^4, t^6 has 5 as a value, so the F_2 expectations must fail
    let reg = Registry::embedded();
    let cfg = RunConfig { field: Some(FieldSpec::Rationals), ..RunConfig::default() };
    let r = run_example(reg.get("subalgebra-case2-f2").unwrap(), &cfg).unwrap();
    assert!(!r.ok);
    assert_eq!(r.claim("valuation_5").unwrap().status, Status::Fail);
}

#[test]
fn unknown_ids_are_errors() {
    let reg = Registry::embedded();
    assert!(reg.get("missing").is_err());
    assert!(reg.run(&["depth1-n6m4".into(), "missing".into()], &RunConfig::default()).is_err());
}
