//! Monoid families as named strategies.
//!
//! Each family is a unit struct implementing [`FamilyStrategy`]; [`registry`] lists them
//! all and [`lookup`] selects one by its command-line key.

use num_bigint::BigUint;

use crate::combinatorics::{
    bell, catalan, factorial, fuss_catalan_41, odd_double_factorial, pow, rook_sum, stirling2,
};
use crate::diagram::{BeadPolicy, ComposePolicy, Diagram, FamilyTag, LoopRecord, TiePolicy};
use crate::error::{FramoidError, Result};
use crate::presentation::{self as pr, RelationSchema};
use crate::word::GenSymbol;

pub trait FamilyStrategy: Send + Sync {
    /// Command-line key, e.g. `jdn`.
    fn key(&self) -> &'static str;
    /// Conventional name, e.g. `J_{d,n}`.
    fn label(&self) -> &'static str;
    /// Generator kinds accepted in words, as their leading letters.
    fn kinds(&self) -> &'static str;
    fn tag(&self) -> FamilyTag;
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol>;
    fn predicted(&self, n: usize, d: u32) -> BigUint;
    fn schemas(&self) -> Vec<RelationSchema>;

    fn framed(&self) -> bool {
        self.kinds().contains('o')
    }

    fn tied(&self) -> bool {
        false
    }

    fn policy(&self) -> ComposePolicy {
        ComposePolicy::KEEP
    }

    fn realize(&self, sym: GenSymbol, n: usize, d: u32) -> Result<Diagram> {
        let g = Diagram::generator(sym, n, d)?;
        Ok(if self.tied() { g.with_trivial_ties() } else { g })
    }

    /// (d, n) pairs exercised by the verification suites.
    fn default_grid(&self) -> Vec<(u32, usize)>;
}

fn grid(ds: std::ops::RangeInclusive<u32>, ns: std::ops::RangeInclusive<usize>) -> Vec<(u32, usize)> {
    ds.flat_map(|d| ns.clone().map(move |n| (d, n))).collect()
}

fn adjacent(n: usize, f: impl Fn(usize) -> GenSymbol) -> Vec<GenSymbol> {
    (1..n).map(f).collect()
}

fn strands(n: usize, f: impl Fn(usize) -> GenSymbol) -> Vec<GenSymbol> {
    (1..=n).map(f).collect()
}

fn beads(n: usize, d: u32) -> Vec<GenSymbol> {
    if d > 1 {
        strands(n, GenSymbol::o)
    } else {
        Vec::new()
    }
}

fn all_ties(n: usize) -> Vec<GenSymbol> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| GenSymbol::E(i, j)))
        .collect()
}

fn concat(parts: Vec<Vec<GenSymbol>>) -> Vec<GenSymbol> {
    parts.into_iter().flatten().collect()
}

fn schemas(groups: &[Vec<RelationSchema>]) -> Vec<RelationSchema> {
    groups.iter().flatten().cloned().collect()
}

pub struct Cdn;
pub struct Sdn;
pub struct Pn;
pub struct Pdn;
pub struct Jn;
pub struct Jdn;
pub struct Brn;
pub struct Brdn;
pub struct Rn;
pub struct Rdn;
pub struct RPrimeDn;
pub struct TSn;
pub struct TJn;
pub struct TBrn;
pub struct TRn;
pub struct TRPrimeN;

const DROP_BEADS: ComposePolicy = ComposePolicy {
    beads: BeadPolicy::DropOnSingletons,
    ties: TiePolicy::Keep,
};

const UNTIE_SINGLETONS: ComposePolicy = ComposePolicy {
    beads: BeadPolicy::Keep,
    ties: TiePolicy::UntieSingletons,
};

impl FamilyStrategy for Cdn {
    fn key(&self) -> &'static str {
        "cdn"
    }
    fn label(&self) -> &'static str {
        "C_d^n"
    }
    fn kinds(&self) -> &'static str {
        "o"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Permutation
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        beads(n, d)
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        pow(d as u64, n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        pr::beads()
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=3, 1..=5)
    }
}

impl FamilyStrategy for Sdn {
    fn key(&self) -> &'static str {
        "sdn"
    }
    fn label(&self) -> &'static str {
        "S_{d,n}"
    }
    fn kinds(&self) -> &'static str {
        "so"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Permutation
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        concat(vec![adjacent(n, GenSymbol::S), beads(n, d)])
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        pow(d as u64, n as u64) * factorial(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::coxeter(), pr::beads(), pr::beads_cross()])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=3, 1..=5)
    }
}

impl FamilyStrategy for Pn {
    fn key(&self) -> &'static str {
        "pn"
    }
    fn label(&self) -> &'static str {
        "P_n"
    }
    fn kinds(&self) -> &'static str {
        "e"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::GenericPartition
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        all_ties(n)
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        bell(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        pr::set_partitions()
    }
    fn realize(&self, sym: GenSymbol, n: usize, d: u32) -> Result<Diagram> {
        realize_partition(sym, n, d)
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=5)
    }
}

/// In the set-partition monoids a tie lets beads pass between its strands, so a tie
/// class behaves as one block: `e_{i,j}` is realized by fusing the two strands.
fn realize_partition(sym: GenSymbol, n: usize, d: u32) -> Result<Diagram> {
    match sym {
        GenSymbol::E(i, j) => Diagram::merged_strands(i, j, n, d),
        other => Diagram::generator(other, n, d),
    }
}

impl FamilyStrategy for Pdn {
    fn key(&self) -> &'static str {
        "pdn"
    }
    fn label(&self) -> &'static str {
        "P_{d,n}"
    }
    fn kinds(&self) -> &'static str {
        "eo"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::GenericPartition
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        concat(vec![all_ties(n), beads(n, d)])
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        (0..=n as u64)
            .map(|k| stirling2(n as u64, k) * pow(d as u64, k))
            .sum()
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::set_partitions(), pr::beads(), pr::framed_set_partitions()])
    }
    fn realize(&self, sym: GenSymbol, n: usize, d: u32) -> Result<Diagram> {
        realize_partition(sym, n, d)
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=3, 1..=5)
    }
}

impl FamilyStrategy for Jn {
    fn key(&self) -> &'static str {
        "jn"
    }
    fn label(&self) -> &'static str {
        "J_n"
    }
    fn kinds(&self) -> &'static str {
        "t"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::PlanarMatching
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        adjacent(n, GenSymbol::T)
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        catalan(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        pr::jones()
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=5)
    }
}

impl FamilyStrategy for Jdn {
    fn key(&self) -> &'static str {
        "jdn"
    }
    fn label(&self) -> &'static str {
        "J_{d,n}"
    }
    fn kinds(&self) -> &'static str {
        "to"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::PlanarMatching
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        concat(vec![adjacent(n, GenSymbol::T), beads(n, d)])
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        pow(d as u64, n as u64) * catalan(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::jones(), pr::beads(), pr::beads_tangle()])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=3, 1..=5)
    }
}

impl FamilyStrategy for Brn {
    fn key(&self) -> &'static str {
        "brn"
    }
    fn label(&self) -> &'static str {
        "Br_n"
    }
    fn kinds(&self) -> &'static str {
        "st"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![adjacent(n, GenSymbol::S), adjacent(n, GenSymbol::T)])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        odd_double_factorial(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::coxeter(), pr::jones(), pr::brauer_mixed()])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

impl FamilyStrategy for Brdn {
    fn key(&self) -> &'static str {
        "brdn"
    }
    fn label(&self) -> &'static str {
        "Br_{d,n}"
    }
    fn kinds(&self) -> &'static str {
        "sto"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::S),
            adjacent(n, GenSymbol::T),
            beads(n, d),
        ])
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        pow(d as u64, n as u64) * odd_double_factorial(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[
            pr::coxeter(),
            pr::jones(),
            pr::brauer_mixed(),
            pr::beads(),
            pr::beads_tangle(),
            pr::beads_cross(),
        ])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=2, 1..=4)
    }
}

impl FamilyStrategy for Rn {
    fn key(&self) -> &'static str {
        "rn"
    }
    fn label(&self) -> &'static str {
        "R_n"
    }
    fn kinds(&self) -> &'static str {
        "srp"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![adjacent(n, GenSymbol::S), strands(n, GenSymbol::P)])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        rook_sum(n as u64, |_| BigUint::from(1u32))
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::coxeter(), pr::rook_p(), pr::rook_r()])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

impl FamilyStrategy for Rdn {
    fn key(&self) -> &'static str {
        "rdn"
    }
    fn label(&self) -> &'static str {
        "R_{d,n}"
    }
    fn kinds(&self) -> &'static str {
        "srpo"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn policy(&self) -> ComposePolicy {
        DROP_BEADS
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::S),
            strands(n, GenSymbol::P),
            beads(n, d),
        ])
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        rook_sum(n as u64, |k| pow(d as u64, k))
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[
            pr::coxeter(),
            pr::rook_p(),
            pr::rook_r(),
            pr::beads(),
            pr::beads_cross(),
            pr::rook_beads_dropped(),
        ])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=2, 1..=4)
    }
}

impl FamilyStrategy for RPrimeDn {
    fn key(&self) -> &'static str {
        "rprimedn"
    }
    fn label(&self) -> &'static str {
        "R'_{d,n}"
    }
    fn kinds(&self) -> &'static str {
        "srpo"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn generators(&self, n: usize, d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::S),
            strands(n, GenSymbol::P),
            beads(n, d),
        ])
    }
    fn predicted(&self, n: usize, d: u32) -> BigUint {
        rook_sum(n as u64, |k| pow(d as u64, 2 * n as u64 - k))
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[
            pr::coxeter(),
            pr::rook_p(),
            pr::rook_r(),
            pr::beads(),
            pr::beads_cross(),
            pr::rook_beads_kept(),
        ])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=2, 1..=4)
    }
}

impl FamilyStrategy for TSn {
    fn key(&self) -> &'static str {
        "tsn"
    }
    fn label(&self) -> &'static str {
        "tS_n"
    }
    fn kinds(&self) -> &'static str {
        "se"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Permutation
    }
    fn tied(&self) -> bool {
        true
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![adjacent(n, GenSymbol::S), adjacent(n, GenSymbol::e)])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        factorial(n as u64) * bell(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::coxeter(), pr::tied_symmetric()])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

impl FamilyStrategy for TJn {
    fn key(&self) -> &'static str {
        "tjn"
    }
    fn label(&self) -> &'static str {
        "tJ_n"
    }
    fn kinds(&self) -> &'static str {
        "tef"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::PlanarMatching
    }
    fn tied(&self) -> bool {
        true
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::T),
            adjacent(n, GenSymbol::e),
            adjacent(n, GenSymbol::F),
        ])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        fuss_catalan_41(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[pr::jones(), pr::ties_commute(), pr::tied_jones()])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

impl FamilyStrategy for TBrn {
    fn key(&self) -> &'static str {
        "tbrn"
    }
    fn label(&self) -> &'static str {
        "tBr_n"
    }
    fn kinds(&self) -> &'static str {
        "stef"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn tied(&self) -> bool {
        true
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::S),
            adjacent(n, GenSymbol::T),
            adjacent(n, GenSymbol::e),
            adjacent(n, GenSymbol::F),
        ])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        odd_double_factorial(n as u64) * bell(n as u64)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[
            pr::coxeter(),
            pr::jones(),
            pr::brauer_mixed(),
            pr::tied_symmetric(),
            pr::tied_jones(),
            pr::tied_brauer(),
        ])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

impl FamilyStrategy for TRn {
    fn key(&self) -> &'static str {
        "trn"
    }
    fn label(&self) -> &'static str {
        "tR_n"
    }
    fn kinds(&self) -> &'static str {
        "spre"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn tied(&self) -> bool {
        true
    }
    fn policy(&self) -> ComposePolicy {
        UNTIE_SINGLETONS
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::S),
            strands(n, GenSymbol::P),
            adjacent(n, GenSymbol::e),
        ])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        rook_sum(n as u64, bell)
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[
            pr::coxeter(),
            pr::rook_p(),
            pr::rook_r(),
            pr::tied_symmetric(),
            pr::tied_rook_lines(),
        ])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

impl FamilyStrategy for TRPrimeN {
    fn key(&self) -> &'static str {
        "trprimen"
    }
    fn label(&self) -> &'static str {
        "tR'_n"
    }
    fn kinds(&self) -> &'static str {
        "sreqpw"
    }
    fn tag(&self) -> FamilyTag {
        FamilyTag::Matching
    }
    fn tied(&self) -> bool {
        true
    }
    fn generators(&self, n: usize, _d: u32) -> Vec<GenSymbol> {
        concat(vec![
            adjacent(n, GenSymbol::S),
            adjacent(n, GenSymbol::e),
            strands(n, GenSymbol::R),
            strands(n, GenSymbol::Q),
        ])
    }
    fn predicted(&self, n: usize, _d: u32) -> BigUint {
        rook_sum(n as u64, |k| bell(2 * n as u64 - k))
    }
    fn schemas(&self) -> Vec<RelationSchema> {
        schemas(&[
            pr::coxeter(),
            pr::rook_r(),
            pr::tied_symmetric(),
            pr::tied_rook_points(),
        ])
    }
    fn default_grid(&self) -> Vec<(u32, usize)> {
        grid(1..=1, 1..=4)
    }
}

static REGISTRY: [&dyn FamilyStrategy; 16] = [
    &Cdn, &Sdn, &Pn, &Pdn, &Jn, &Jdn, &Brn, &Brdn, &Rn, &Rdn, &RPrimeDn, &TSn, &TJn, &TBrn,
    &TRn, &TRPrimeN,
];

pub fn registry() -> &'static [&'static dyn FamilyStrategy] {
    &REGISTRY
}

pub fn lookup(key: &str) -> Result<&'static dyn FamilyStrategy> {
    let key = key.to_ascii_lowercase();
    registry()
        .iter()
        .copied()
        .find(|f| f.key() == key)
        .ok_or(FramoidError::UnknownFamily(key))
}

/// A family strategy bound to concrete parameters.
#[derive(Clone, Copy)]
pub struct MonoidFamily {
    pub strategy: &'static dyn FamilyStrategy,
    pub d: u32,
    pub n: usize,
}

impl std::fmt::Debug for MonoidFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}(d={}, n={})", self.strategy.key(), self.d, self.n)
    }
}

impl MonoidFamily {
    pub fn new(strategy: &'static dyn FamilyStrategy, d: u32, n: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(FramoidError::InvalidParameters("n and d must be positive".into()));
        }
        if strategy.tied() && d != 1 {
            return Err(FramoidError::InvalidParameters(format!(
                "{} is tied and requires d = 1",
                strategy.key()
            )));
        }
        if d > 255 || n > 100 {
            return Err(FramoidError::InvalidParameters(format!("d={d}, n={n} too large")));
        }
        Ok(MonoidFamily { strategy, d, n })
    }

    pub fn by_key(key: &str, d: u32, n: usize) -> Result<Self> {
        Self::new(lookup(key)?, d, n)
    }

    pub fn key(&self) -> &'static str {
        self.strategy.key()
    }

    pub fn policy(&self) -> ComposePolicy {
        self.strategy.policy()
    }

    pub fn tied(&self) -> bool {
        self.strategy.tied()
    }

    pub fn identity(&self) -> Diagram {
        Diagram::identity(self.n, self.d, self.tied())
    }

    pub fn generator_symbols(&self) -> Vec<GenSymbol> {
        self.strategy.generators(self.n, self.d)
    }

    pub fn generating_set(&self) -> Result<Vec<Diagram>> {
        self.generator_symbols()
            .into_iter()
            .map(|s| self.realize(s))
            .collect()
    }

    pub fn accepts(&self, sym: GenSymbol) -> bool {
        let lead = sym.to_string().chars().next().unwrap_or(' ');
        self.strategy.kinds().contains(lead)
    }

    pub fn realize(&self, sym: GenSymbol) -> Result<Diagram> {
        if !self.accepts(sym) {
            return Err(FramoidError::InvalidParameters(format!(
                "generator {sym} is not available in {}",
                self.key()
            )));
        }
        self.strategy.realize(sym, self.n, self.d)
    }

    pub fn predicted_cardinality(&self) -> BigUint {
        self.strategy.predicted(self.n, self.d)
    }

    pub fn compose(&self, a: &Diagram, b: &Diagram) -> Result<(Diagram, LoopRecord)> {
        a.compose_with(b, self.policy())
    }

    /// Left-to-right product of a word, starting from the identity.
    pub fn evaluate_word(&self, word: &[GenSymbol]) -> Result<(Diagram, LoopRecord)> {
        let mut acc = self.identity();
        let mut loops = LoopRecord::new();
        for &sym in word {
            let g = self.realize(sym)?;
            let (next, l) = self.compose(&acc, &g)?;
            loops.merge(&l);
            acc = next;
        }
        Ok((acc, loops))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_keys_unique() {
        let mut keys: Vec<_> = registry().iter().map(|f| f.key()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 16);
        assert!(lookup("JDN").is_ok());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn generating_sets() {
        let f = MonoidFamily::by_key("jdn", 2, 3).unwrap();
        let names: Vec<String> = f.generator_symbols().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["t1", "t2", "o1", "o2", "o3"]);
        let f = MonoidFamily::by_key("tsn", 1, 3).unwrap();
        let names: Vec<String> = f.generator_symbols().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["s1", "s2", "e1,2", "e2,3"]);
        let f = MonoidFamily::by_key("pn", 1, 3).unwrap();
        let names: Vec<String> = f.generator_symbols().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["e1,2", "e1,3", "e2,3"]);
    }

    #[test]
    fn tied_families_need_unit_modulus() {
        assert!(MonoidFamily::by_key("tjn", 2, 3).is_err());
        assert!(MonoidFamily::by_key("tjn", 1, 3).is_ok());
    }

    #[test]
    fn predicted_sequences() {
        let seq = |key: &str, d: u32| -> Vec<String> {
            (1..=4)
                .map(|n| MonoidFamily::by_key(key, d, n).unwrap().predicted_cardinality().to_string())
                .collect()
        };
        assert_eq!(seq("rdn", 2), ["3", "17", "139", "1473"]);
        assert_eq!(seq("rprimedn", 2), ["6", "56", "688", "10368"]);
        assert_eq!(seq("trprimen", 1), ["3", "39", "971", "38140"]);
        assert_eq!(seq("trn", 1), ["2", "9", "76", "1001"]);
        let trn5 = MonoidFamily::by_key("trn", 1, 5).unwrap().predicted_cardinality();
        assert_eq!(trn5.to_string(), "18666");
        let tbr3 = MonoidFamily::by_key("tbrn", 1, 3).unwrap().predicted_cardinality();
        assert_eq!(tbr3.to_string(), "75");
    }

    #[test]
    fn words_respect_family_alphabet() {
        let f = MonoidFamily::by_key("jdn", 2, 3).unwrap();
        assert!(f.evaluate_word(&[GenSymbol::S(1)]).is_err());
        let (x, l) = f
            .evaluate_word(&crate::word::parse_word("t1 o1 t1").unwrap())
            .unwrap();
        assert_eq!(x, f.realize(GenSymbol::T(1)).unwrap());
        assert_eq!(l.count(1), 1);
    }
}
