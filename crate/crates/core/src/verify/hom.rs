//! Forgetting the beads: specializing loop weights to 1 and erasing beads must be an
//! algebra homomorphism onto the unframed algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::identities::Ctx;
use super::{entry, Suite, SuiteConfig, SuiteReport};
use crate::algebra::{AlgebraElement, Ambient, LoopPolicy, Poly, Specialization};
use crate::closure::closure;
use crate::diagram::Diagram;
use crate::error::Result;

pub const DEFAULT_PAIRS: usize = 1_000;

const FAMILIES: [(&str, u32, usize); 7] = [
    ("cdn", 3, 4),
    ("sdn", 3, 4),
    ("pdn", 3, 4),
    ("jdn", 3, 4),
    ("brdn", 3, 4),
    ("rdn", 2, 4),
    ("rprimedn", 2, 4),
];

fn random_element(amb: Ambient, basis: &[Diagram], rng: &mut ChaCha8Rng) -> AlgebraElement {
    let mut x = AlgebraElement::zero(amb);
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let term = AlgebraElement::term(amb, basis[rng.gen_range(0..basis.len())].clone(), Poly::int(c));
        x = x.add(&term).expect("same ambient");
    }
    x
}

/// The deframing map for `amb`, with its target ambient.
pub fn deframing(amb: Ambient) -> Result<(Specialization, Ambient)> {
    let target = Ambient::new(amb.family.key(), 1, amb.n(), LoopPolicy::Neglect)?;
    Ok((Specialization::deframe(amb.d()), target))
}

pub fn is_multiplicative(
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> std::result::Result<(), String> {
    let run = || -> Result<Option<String>> {
        let (map, target) = deframing(a.ambient())?;
        let lhs = a.mul(b)?.specialize(&map, target)?;
        let rhs = a.specialize(&map, target)?.mul(&b.specialize(&map, target)?)?;
        Ok((lhs != rhs).then(|| format!("a = {a}, b = {b}: {lhs} vs {rhs}")))
    };
    match run() {
        Ok(None) => Ok(()),
        Ok(Some(w)) => Err(w),
        Err(e) => Err(e.to_string()),
    }
}

pub struct HomSuite;

impl Suite for HomSuite {
    fn name(&self) -> &'static str {
        "hom"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let pairs = cfg.samples_or(DEFAULT_PAIRS);
        let mut entries = Vec::new();
        for (k, &(key, d0, n0)) in FAMILIES.iter().enumerate() {
            if !cfg.families.is_empty() && !cfg.families.iter().any(|f| f == key) {
                continue;
            }
            for (d, n) in cfg.grid(vec![(d0, n0)]) {
                let amb = Ambient::new(key, d, n, LoopPolicy::Alpha)?;
                let basis = closure(&amb.family, cfg.cap)?;
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
                let samples: Vec<(AlgebraElement, AlgebraElement)> = (0..pairs)
                    .map(|_| {
                        let a = random_element(amb, &basis, &mut rng);
                        (a, random_element(amb, &basis, &mut rng))
                    })
                    .collect();
                let name = format!("deframing is multiplicative on {pairs} random pairs");
                entries.push(entry(cfg, self.name(), key, (d, n), name, || {
                    match samples
                        .par_iter()
                        .map(|(a, b)| is_multiplicative(a, b))
                        .find_first(|r| r.is_err())
                    {
                        Some(r) => r,
                        None => Ok(()),
                    }
                }));
                if matches!(key, "jdn" | "brdn") && n >= 3 {
                    let ctx = Ctx { amb };
                    for (x, y) in [("F1", "E2"), ("E2", "F1")] {
                        let name = format!("deframing is multiplicative on {x} {y}");
                        entries.push(entry(cfg, self.name(), key, (d, n), name, || {
                            let a = ctx.x(x).map_err(|e| e.to_string())?;
                            let b = ctx.x(y).map_err(|e| e.to_string())?;
                            is_multiplicative(&a, &b)
                        }));
                    }
                }
            }
        }
        if cfg.families.is_empty() || cfg.families.iter().any(|f| f == "jdn") {
            let amb = Ambient::new("jdn", 1, 4, LoopPolicy::Alpha)?;
            let basis = closure(&amb.family, cfg.cap)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let xs: Vec<AlgebraElement> =
                (0..pairs).map(|_| random_element(amb, &basis, &mut rng)).collect();
            let name = "deframing is the identity map at d = 1";
            entries.push(entry(cfg, self.name(), "jdn", (1, 4), name, || {
                let (map, target) = deframing(amb).map_err(|e| e.to_string())?;
                for x in &xs {
                    let y = x.specialize(&map, target).map_err(|e| e.to_string())?;
                    if !y.terms().eq(x.terms()) {
                        return Err(format!("{x} maps to {y}"));
                    }
                }
                Ok(())
            }));
        }
        Ok(SuiteReport {
            suite: self.name().into(),
            entries,
        })
    }
}
