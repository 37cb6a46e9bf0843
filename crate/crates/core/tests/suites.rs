use std::collections::BTreeSet;

use framoid::verify::{self, Status, SuiteConfig};
use framoid::registry;

#[test]
fn every_schema_is_checked() {
    let report = verify::lookup("presentations")
        .unwrap()
        .run(&SuiteConfig::default())
        .unwrap();
    let seen: BTreeSet<(&str, &str)> = report
        .entries
        .iter()
        .map(|e| (e.family.as_str(), e.identity.as_str()))
        .collect();
    for s in registry() {
        for schema in s.schemas() {
            assert!(seen.contains(&(s.key(), schema.name)), "{} {}", s.key(), schema.name);
        }
        assert!(seen.contains(&(s.key(), "g = 1")), "{} has no control", s.key());
    }
    assert!(report.passed());
}

#[test]
fn controls_fail_as_expected() {
    let report = verify::lookup("presentations")
        .unwrap()
        .run(&SuiteConfig {
            families: vec!["jdn".into(), "trprimen".into()],
            ns: Some(vec![3]),
            ..SuiteConfig::default()
        })
        .unwrap();
    let controls: Vec<_> = report.entries.iter().filter(|e| e.identity == "g = 1").collect();
    assert!(!controls.is_empty());
    assert!(controls.iter().all(|e| e.status == Status::ExpectedFail));
}

#[test]
fn suites_are_registered_by_name() {
    let names: Vec<&str> = verify::registry().iter().map(|s| s.name()).collect();
    assert_eq!(names, ["cardinalities", "presentations", "bridges", "tl", "tied", "hom"]);
    assert!(verify::lookup("nope").is_err());
}

#[test]
fn overrides_restrict_the_grid() {
    let cfg = SuiteConfig {
        families: vec!["jones".into()],
        ds: Some(vec![2]),
        ..SuiteConfig::default()
    };
    let report = verify::lookup("bridges").unwrap().run(&cfg).unwrap();
    assert!(report.entries.iter().all(|e| e.family == "jdn" && e.d == 2 && e.n == 4));
    assert!(report.passed());
    let csv = report.to_csv();
    assert!(csv.starts_with("suite,family,d,n,identity,status,ms\n"));
    assert_eq!(csv.lines().count(), report.entries.len() + 1);
}

#[test]
fn seeds_change_samples_not_verdicts() {
    let run = |seed| {
        let cfg = SuiteConfig { seed, families: vec!["cdn".into()], samples: 50, ..SuiteConfig::default() };
        verify::lookup("hom").unwrap().run(&cfg).unwrap()
    };
    let (a, b) = (run(1), run(2));
    assert!(a.passed() && b.passed());
    assert_eq!(a, run(1));
}
