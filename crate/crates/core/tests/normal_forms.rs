use framoid::closure::{closure, DEFAULT_CAP};
use framoid::normalform::{
    brauer_nf, gaps, jones_nf, min_length_oracle, rook_nf, vertical_lines, NormalFormWord,
    RookVariant,
};
use framoid::MonoidFamily;

fn elements(key: &str, d: u32, n: usize) -> Vec<framoid::Diagram> {
    closure(&MonoidFamily::by_key(key, d, n).unwrap(), DEFAULT_CAP).unwrap()
}

#[test]
fn jones_round_trip() {
    for d in 1..=3 {
        for n in 1..=5 {
            for x in elements("jdn", d, n) {
                let nf = jones_nf(&x).unwrap();
                assert_eq!(nf.evaluate().unwrap(), x, "{nf}");
            }
        }
    }
}

#[test]
fn brauer_round_trip() {
    for d in 1..=2 {
        for n in 1..=4 {
            for x in elements("brdn", d, n) {
                let nf = brauer_nf(&x).unwrap();
                assert_eq!(nf.evaluate().unwrap(), x, "{nf}");
            }
        }
    }
}

#[test]
fn rook_round_trip() {
    for d in 1..=3 {
        for n in 1..=4 {
            for x in elements("rdn", d, n) {
                let nf = rook_nf(&x, RookVariant::First).unwrap();
                assert_eq!(nf.evaluate().unwrap(), x, "{nf}");
            }
            for x in elements("rprimedn", d, n) {
                let nf = rook_nf(&x, RookVariant::Prime).unwrap();
                assert_eq!(nf.evaluate().unwrap(), x, "{nf}");
            }
        }
    }
}

#[test]
fn jones_tangle_count_is_minimal() {
    for n in 1..=5 {
        let fam = MonoidFamily::by_key("jn", 1, n).unwrap();
        for x in elements("jn", 1, n) {
            let nf = jones_nf(&x).unwrap();
            assert_eq!(nf.tangle_count(), min_length_oracle(&x, &fam).unwrap(), "{nf}");
        }
    }
}

#[test]
fn gap_criteria_agree() {
    for n in 1..=6 {
        for x in elements("jn", 1, n) {
            assert_eq!(gaps(&x).unwrap(), vertical_lines(&x).unwrap(), "{x}");
        }
    }
}

#[test]
fn bead_slots_add_up_to_n() {
    for n in 1..=5 {
        for x in elements("jn", 1, n) {
            let NormalFormWord::JonesAbacus {
                gap_beads,
                top_beads,
                bottom_beads,
                ..
            } = jones_nf(&x).unwrap()
            else {
                unreachable!()
            };
            assert_eq!(gap_beads.len() + top_beads.len() + bottom_beads.len(), n);
        }
    }
}

#[test]
fn normal_forms_are_distinct() {
    let xs = elements("brdn", 2, 3);
    let mut words: Vec<String> = xs.iter().map(|x| brauer_nf(x).unwrap().to_string()).collect();
    words.sort();
    words.dedup();
    assert_eq!(words.len(), xs.len());
}
