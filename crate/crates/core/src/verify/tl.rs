//! The framed Temperley-Lieb algebra: J_{d,n} with loops weighted by x and y_k.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::identities::{Check, Ctx};
use super::{entry, Suite, SuiteConfig, SuiteReport};
use crate::algebra::{AlgebraElement, Ambient, LoopPolicy, Poly, Var};
use crate::closure::closure;
use crate::error::Result;

pub struct TlSuite;

pub const DEFAULT_TRIPLES: usize = 10_000;

/// `lhs = c * rhs` for a scalar `c`.
fn scaled(ctx: Ctx, lhs: String, rhs: String, c: Poly) -> Check<'static> {
    let name = format!("{lhs} = ({c}) {rhs}");
    Check::new(name, move || Ok(vec![ctx.x(&lhs)?, ctx.x(&rhs)?.scale(&c)]))
}

fn loop_weight(k: u32) -> Poly {
    let x = Poly::var(Var::X);
    if k == 0 {
        x
    } else {
        &x * &Poly::var(Var::Y(k))
    }
}

pub fn relation_checks(d: u32, n: usize) -> Result<Vec<Check<'static>>> {
    let c = Ctx {
        amb: Ambient::new("jdn", d, n, LoopPolicy::Xy)?,
    };
    let mut out = Vec::new();
    let chain = |sides: Vec<String>| Check::chain(c, sides);
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push(chain(vec![format!("t{i} t{j}"), format!("t{j} t{i}")]));
            }
            if i.abs_diff(j) == 1 {
                out.push(chain(vec![format!("t{i} t{j} t{i}"), format!("t{i}")]));
            }
        }
        for k in 0..d {
            for strand in [i, i + 1] {
                let lhs = if k == 0 {
                    format!("t{i} t{i}")
                } else {
                    format!("t{i} o{strand}^{k} t{i}")
                };
                out.push(scaled(c, lhs, format!("t{i}"), loop_weight(k)));
                if k == 0 {
                    break;
                }
            }
        }
    }
    if d > 1 {
        for i in 1..=n {
            let power = vec![format!("o{i}"); d as usize].join(" ");
            out.push(chain(vec![power, String::new()]));
            for j in i + 1..=n {
                out.push(chain(vec![format!("o{i} o{j}"), format!("o{j} o{i}")]));
            }
            for j in 1..n {
                if i != j && i != j + 1 {
                    out.push(chain(vec![format!("o{i} t{j}"), format!("t{j} o{i}")]));
                }
            }
        }
        for i in 1..n {
            let k = i + 1;
            out.push(chain(vec![format!("t{i} o{i}"), format!("t{i} o{k}")]));
            out.push(chain(vec![format!("o{i} t{i}"), format!("o{k} t{i}")]));
        }
    }
    Ok(out)
}

/// Below this many triples associativity is checked exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 100_000;

/// `(ab)c = a(bc)` on all triples of basis diagrams when there are few, otherwise on
/// random ones. Returns the label of the check and its outcome.
fn associativity(
    amb: Ambient,
    seed: u64,
    triples: usize,
) -> (String, std::result::Result<(), String>) {
    let basis = match closure(&amb.family, usize::MAX) {
        Ok(b) => b,
        Err(e) => return ("associativity".into(), Err(e.to_string())),
    };
    let m = basis.len();
    let exhaustive = m * m * m < EXHAUSTIVE_LIMIT;
    let picks: Vec<[usize; 3]> = if exhaustive {
        (0..m * m * m).map(|k| [k / (m * m), k / m % m, k % m]).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..triples).map(|_| [(); 3].map(|_| rng.gen_range(0..m))).collect()
    };
    let label = if exhaustive {
        format!("associativity on all {} triples", picks.len())
    } else {
        format!("associativity on {triples} random triples")
    };
    let check = |&[i, j, k]: &[usize; 3]| -> std::result::Result<(), String> {
        let [a, b, c] = [i, j, k].map(|p| AlgebraElement::from_diagram(amb, basis[p].clone()));
        let left = a.mul(&b).and_then(|ab| ab.mul(&c)).map_err(|e| e.to_string())?;
        let right = b.mul(&c).and_then(|bc| a.mul(&bc)).map_err(|e| e.to_string())?;
        if left != right {
            return Err(format!("a = {a}, b = {b}, c = {c}: {left} vs {right}"));
        }
        Ok(())
    };
    let outcome = picks
        .par_iter()
        .map(check)
        .find_first(|r| r.is_err())
        .unwrap_or(Ok(()));
    (label, outcome)
}

impl Suite for TlSuite {
    fn name(&self) -> &'static str {
        "tl"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let grid: Vec<(u32, usize)> =
            (1..=3).flat_map(|d| (1..=4).map(move |n| (d, n))).collect();
        let grid = cfg.grid(grid);
        let triples = cfg.samples_or(DEFAULT_TRIPLES);
        let mut entries = Vec::new();
        for &(d, n) in &grid {
            let amb = Ambient::new("jdn", d, n, LoopPolicy::Xy)?;
            let predicted = amb.family.predicted_cardinality();
            entries.push(entry(cfg, self.name(), "jdn", (d, n), format!("basis size {predicted}"), || {
                let got = closure(&amb.family, cfg.cap).map_err(|e| e.to_string())?.len();
                if got.to_string() == predicted.to_string() {
                    Ok(())
                } else {
                    Err(format!("basis has {got} diagrams"))
                }
            }));
            let checks = relation_checks(d, n)?;
            entries.extend(checks.into_par_iter().map(|check| {
                let name = check.name.clone();
                entry(cfg, self.name(), "jdn", (d, n), name, || check.run())
            }).collect::<Vec<_>>());
            let seed = cfg.seed ^ ((d as u64) << 32) ^ n as u64;
            let mut outcome = None;
            let mut e = entry(cfg, self.name(), "jdn", (d, n), "", || {
                let (label, result) = associativity(amb, seed, triples);
                outcome = Some(label);
                result
            });
            e.identity = outcome.unwrap_or_default();
            entries.push(e);
        }
        Ok(SuiteReport {
            suite: self.name().into(),
            entries,
        })
    }
}
