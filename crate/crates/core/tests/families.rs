use framoid::closure::{closure, DEFAULT_CAP};
use framoid::presentation::{check_relations, negative_control};
use framoid::{registry, MonoidFamily};

#[test]
fn enumeration_matches_counting_formula_on_grid() {
    for strat in registry() {
        for (d, n) in strat.default_grid() {
            let fam = MonoidFamily::new(*strat, d, n).unwrap();
            let got = closure(&fam, DEFAULT_CAP).unwrap().len();
            let want = fam.predicted_cardinality();
            assert_eq!(got.to_string(), want.to_string(), "{fam:?}");
        }
    }
}

#[test]
fn relations_hold_on_grid() {
    for strat in registry() {
        for (d, n) in strat.default_grid() {
            let fam = MonoidFamily::new(*strat, d, n).unwrap();
            let rep = check_relations(&fam);
            assert!(rep.passed(), "{fam:?}: {:#?}", &rep.failures[..rep.failures.len().min(4)]);
        }
    }
}

#[test]
fn false_relations_are_caught() {
    for strat in registry() {
        let (d, n) = *strat.default_grid().last().unwrap();
        let fam = MonoidFamily::new(*strat, d, n).unwrap();
        let rep = negative_control(&fam);
        assert!(rep.instances() > 0);
        assert_eq!(rep.failures.len(), rep.instances(), "{fam:?}");
    }
}

#[test]
fn counting_formulas_beyond_enumeration() {
    let table: [(&str, u32, [&str; 3]); 4] = [
        ("rdn", 2, ["19091", "291793", "5129307"]),
        ("rprimedn", 2, ["184064", "3748864", "85960704"]),
        ("trn", 1, ["18666", "464737", "14813324"]),
        ("trprimen", 1, ["2126890", "157874467", "14928602309"]),
    ];
    for (key, d, values) in table {
        for (n, want) in (5..=7).zip(values) {
            let got = MonoidFamily::by_key(key, d, n).unwrap().predicted_cardinality();
            assert_eq!(got.to_string(), want, "{key} n={n}");
        }
    }
}

#[test]
fn tied_rook_lines_at_five_strands() {
    let fam = MonoidFamily::by_key("trn", 1, 5).unwrap();
    assert_eq!(closure(&fam, DEFAULT_CAP).unwrap().len(), 18666);
}
