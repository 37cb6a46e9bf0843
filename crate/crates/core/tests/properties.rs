use proptest::prelude::*;

use framoid::algebra::{AlgebraElement, Ambient, LoopPolicy, Poly, Specialization};
use framoid::normalform::normal_form;
use framoid::{format_word, parse_word, Diagram, GenSymbol, MonoidFamily};

const KEYS: [&str; 8] = ["cdn", "sdn", "pdn", "jdn", "brdn", "rdn", "rprimedn", "tbrn"];

/// A family with small parameters and its generators.
fn family() -> impl Strategy<Value = (MonoidFamily, Vec<GenSymbol>)> {
    (0..KEYS.len(), 1..=3u32, 1..=4usize).prop_map(|(k, d, n)| {
        let d = if KEYS[k].starts_with('t') { 1 } else { d };
        let fam = MonoidFamily::by_key(KEYS[k], d, n).unwrap();
        let gens = fam.generator_symbols();
        (fam, gens)
    })
}

fn word(gens: &[GenSymbol], picks: &[usize]) -> Vec<GenSymbol> {
    if gens.is_empty() {
        return Vec::new();
    }
    picks.iter().map(|&p| gens[p % gens.len()]).collect()
}

fn element(fam: &MonoidFamily, gens: &[GenSymbol], picks: &[usize]) -> Diagram {
    fam.evaluate_word(&word(gens, picks)).unwrap().0
}

fn picks() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..64usize, 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_is_associative(
        (fam, gens) in family(), a in picks(), b in picks(), c in picks()
    ) {
        let (x, y, z) = (element(&fam, &gens, &a), element(&fam, &gens, &b), element(&fam, &gens, &c));
        let xy = fam.compose(&x, &y).unwrap().0;
        let yz = fam.compose(&y, &z).unwrap().0;
        prop_assert_eq!(fam.compose(&xy, &z).unwrap().0, fam.compose(&x, &yz).unwrap().0);
    }

    #[test]
    fn identity_is_neutral((fam, gens) in family(), a in picks()) {
        let x = element(&fam, &gens, &a);
        let id = fam.identity();
        prop_assert_eq!(&fam.compose(&id, &x).unwrap().0, &x);
        prop_assert_eq!(&fam.compose(&x, &id).unwrap().0, &x);
    }

    #[test]
    fn encoding_round_trips((fam, gens) in family(), a in picks()) {
        let x = element(&fam, &gens, &a);
        let back: Diagram = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn words_round_trip((_fam, gens) in family(), a in picks()) {
        let w = word(&gens, &a);
        prop_assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
    }

    #[test]
    fn normal_forms_are_canonical(k in 0..4usize, d in 1..=3u32, n in 1..=4usize, a in picks()) {
        let key = ["jdn", "brdn", "rdn", "rprimedn"][k];
        let fam = MonoidFamily::by_key(key, d, n).unwrap();
        let gens = fam.generator_symbols();
        let x = element(&fam, &gens, &a);
        let nf = normal_form(&fam, &x).unwrap();
        let y = fam.evaluate_word(&nf.word()).unwrap().0;
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(normal_form(&fam, &y).unwrap(), nf);
    }
}

fn algebra_element(amb: Ambient, gens: &[GenSymbol], terms: &[(i64, Vec<usize>)]) -> AlgebraElement {
    let mut acc = AlgebraElement::zero(amb);
    for (c, p) in terms {
        let t = AlgebraElement::word(amb, &word(gens, p)).unwrap().scale(&Poly::int(*c));
        acc = acc.add(&t).unwrap();
    }
    acc
}

fn terms() -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-3..=3i64, picks()), 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_is_associative_and_bilinear(
        k in 0..3usize, d in 2..=3u32, n in 2..=4usize,
        a in terms(), b in terms(), c in terms()
    ) {
        let key = ["jdn", "brdn", "rprimedn"][k];
        let amb = Ambient::new(key, d, n, LoopPolicy::Alpha).unwrap();
        let gens = amb.family.generator_symbols();
        let (x, y, z) = (
            algebra_element(amb, &gens, &a),
            algebra_element(amb, &gens, &b),
            algebra_element(amb, &gens, &c),
        );
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let distributed = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), distributed);
    }

    #[test]
    fn deframing_is_multiplicative(
        k in 0..4usize, d in 2..=4u32, n in 2..=4usize, a in terms(), b in terms()
    ) {
        let key = ["jdn", "brdn", "sdn", "rprimedn"][k];
        let amb = Ambient::new(key, d, n, LoopPolicy::Alpha).unwrap();
        let target = Ambient::new(key, 1, n, LoopPolicy::Neglect).unwrap();
        let map = Specialization::deframe(d);
        let gens = amb.family.generator_symbols();
        let (x, y) = (algebra_element(amb, &gens, &a), algebra_element(amb, &gens, &b));
        let lhs = x.mul(&y).unwrap().specialize(&map, target).unwrap();
        let rhs = x
            .specialize(&map, target)
            .unwrap()
            .mul(&y.specialize(&map, target).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
