//! Relations of the deformed tied algebras, specialized into the tied monoids.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::identities::{all_equal, Ctx};
use super::{control_entry, entry, Suite, SuiteConfig, SuiteReport};
use crate::algebra::{AlgebraElement, Ambient, LoopPolicy, Poly, Var};
use crate::error::Result;

/// A linear combination of template words; tokens are `t e f s g G` plus an index,
/// with `G` the inverse of `g`.
#[derive(Debug, Clone)]
pub struct Lin(pub Vec<(Poly, String)>);

impl Lin {
    pub fn word(s: impl Into<String>) -> Lin {
        Lin(vec![(Poly::one(), s.into())])
    }

    pub fn scaled(c: Poly, s: impl Into<String>) -> Lin {
        Lin(vec![(c, s.into())])
    }

    pub fn plus(mut self, other: Lin) -> Lin {
        self.0.extend(other.0);
        self
    }

    fn render(&self) -> String {
        self.0
            .iter()
            .map(|(c, w)| {
                let w = if w.is_empty() { "1" } else { w.as_str() };
                if c.as_constant() == Some(BigRational::one()) {
                    w.to_string()
                } else {
                    format!("({c}) {w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone)]
pub struct TiedRelation {
    pub name: String,
    pub sides: Vec<Lin>,
}

fn rel(label: &str, sides: Vec<Lin>) -> TiedRelation {
    let body = sides.iter().map(Lin::render).collect::<Vec<_>>().join(" = ");
    TiedRelation {
        name: format!("{label}: {body}"),
        sides,
    }
}

fn words(label: &str, sides: &[String]) -> TiedRelation {
    rel(label, sides.iter().map(|s| Lin::word(s.clone())).collect())
}

/// A specialization from a deformed algebra onto a tied monoid algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiedSpecialization {
    /// tied Temperley-Lieb onto tJ_n at x = y = 1
    TemperleyLieb,
    /// tied BMW onto tBr_n at a = q = x = 1
    Bmw,
    /// bt-algebra onto tS_n at v = 1
    BraidsTies,
}

impl TiedSpecialization {
    pub const ALL: [TiedSpecialization; 3] = [
        TiedSpecialization::TemperleyLieb,
        TiedSpecialization::Bmw,
        TiedSpecialization::BraidsTies,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TiedSpecialization::TemperleyLieb => "tTL",
            TiedSpecialization::Bmw => "tBMW",
            TiedSpecialization::BraidsTies => "bt",
        }
    }

    pub fn target(self) -> &'static str {
        match self {
            TiedSpecialization::TemperleyLieb => "tjn",
            TiedSpecialization::Bmw => "tbrn",
            TiedSpecialization::BraidsTies => "tsn",
        }
    }

    fn values(self) -> BTreeMap<Var, BigRational> {
        let vars: &[Var] = match self {
            TiedSpecialization::TemperleyLieb => &[Var::X, Var::Y(1)],
            TiedSpecialization::Bmw => &[Var::A, Var::Q, Var::X],
            TiedSpecialization::BraidsTies => &[Var::V],
        };
        vars.iter().map(|&v| (v, BigRational::one())).collect()
    }

    pub fn relations(self, n: usize) -> Vec<TiedRelation> {
        match self {
            TiedSpecialization::TemperleyLieb => tied_tl(n),
            TiedSpecialization::Bmw => tied_bmw(n),
            TiedSpecialization::BraidsTies => braids_ties(n),
        }
    }

    /// A false relation in the target, to show that the check can fail.
    pub fn control(self, n: usize) -> Option<TiedRelation> {
        if n < 2 {
            return None;
        }
        Some(match self {
            TiedSpecialization::TemperleyLieb => words("control", &["f1".into(), "t1".into()]),
            TiedSpecialization::Bmw => words("control", &["g1".into(), String::new()]),
            TiedSpecialization::BraidsTies => words("control", &["e1".into(), String::new()]),
        })
    }

    /// Evaluates every side in the target monoid algebra after substituting the
    /// parameter values, and compares.
    pub fn check(self, n: usize, r: &TiedRelation) -> std::result::Result<(), String> {
        let ctx = Ctx {
            amb: Ambient::new(self.target(), 1, n, LoopPolicy::Neglect)
                .map_err(|e| e.to_string())?,
        };
        let values = self.values();
        let eval = |side: &Lin| -> Result<AlgebraElement> {
            let mut acc = AlgebraElement::zero(ctx.amb);
            for (c, w) in &side.0 {
                let c = c.substitute(&values);
                acc = acc.add(&ctx.x(&map_word(w))?.scale(&c))?;
            }
            Ok(acc)
        };
        let sides = r
            .sides
            .iter()
            .map(eval)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| format!("evaluation error: {e}"))?;
        all_equal(&sides)
    }
}

/// `g_i` and `g_i^{-1}` both go to the crossing `s_i`.
fn map_word(w: &str) -> String {
    w.split_whitespace()
        .map(|tok| match tok.as_bytes()[0] {
            b'g' | b'G' => format!("s{}", &tok[1..]),
            _ => tok.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |i| (1..n).map(move |j| (i, j)))
}

fn commuting(label: &str, gens: &str, n: usize, out: &mut Vec<TiedRelation>) {
    for (i, j) in pairs(n).filter(|(i, j)| i.abs_diff(*j) != 1) {
        for a in gens.chars() {
            for b in gens.chars() {
                if (i, a) < (j, b) {
                    out.push(words(label, &[format!("{a}{i} {b}{j}"), format!("{b}{j} {a}{i}")]));
                }
            }
        }
    }
}

fn tied_tl(n: usize) -> Vec<TiedRelation> {
    let x = Poly::var(Var::X);
    let y = Poly::var(Var::Y(1));
    let mut out = Vec::new();
    commuting("commute", "tef", n, &mut out);
    for (i, j) in pairs(n).filter(|(i, j)| i.abs_diff(*j) == 1) {
        out.push(words("adjacent", &[format!("e{i} e{j}"), format!("e{j} e{i}")]));
        out.push(words("adjacent", &[format!("t{i} t{j} t{i}"), format!("t{i}")]));
        out.push(words("adjacent", &[format!("t{i} e{j} t{i}"), format!("t{i}")]));
        out.push(words(
            "adjacent",
            &[format!("f{i} e{j}"), format!("e{j} f{i}"), format!("e{j} t{i} e{j}")],
        ));
    }
    for i in 1..n {
        let t = format!("t{i}");
        out.push(rel("quadratic", vec![Lin::word(format!("t{i} t{i}")), Lin::scaled(x.clone(), &t)]));
        out.push(words("quadratic", &[format!("e{i} e{i}"), format!("e{i}")]));
        out.push(rel(
            "quadratic",
            vec![Lin::word(format!("f{i} f{i}")), Lin::scaled(y.clone(), format!("f{i}"))],
        ));
        out.push(words("absorb", &[format!("t{i} e{i}"), t.clone()]));
        out.push(words("absorb", &[format!("f{i} e{i}"), format!("f{i}")]));
        out.push(rel("absorb", vec![Lin::word(format!("f{i} t{i}")), Lin::scaled(y.clone(), &t)]));
    }
    out
}

fn braid_and_ties(n: usize, out: &mut Vec<TiedRelation>) {
    for (i, j) in pairs(n) {
        let d = i.abs_diff(j);
        if d > 1 {
            out.push(words("bt1", &[format!("g{i} g{j}"), format!("g{j} g{i}")]));
        }
        if d == 1 {
            out.push(words("bt1", &[format!("g{i} g{j} g{i}"), format!("g{j} g{i} g{j}")]));
        }
        if i < j {
            out.push(words("bt2", &[format!("e{i} e{j}"), format!("e{j} e{i}")]));
        }
        if d != 1 {
            out.push(words("bt3", &[format!("e{i} g{j}"), format!("g{j} e{i}")]));
        } else {
            out.push(words("bt4", &[format!("e{i} g{j} g{i}"), format!("g{j} g{i} e{j}")]));
            out.push(words(
                "bt4",
                &[format!("e{i} e{j} g{i}"), format!("e{j} g{i} e{j}"), format!("g{i} e{i} e{j}")],
            ));
        }
    }
    for i in 1..n {
        out.push(words("bt2", &[format!("e{i} e{i}"), format!("e{i}")]));
    }
}

fn braids_ties(n: usize) -> Vec<TiedRelation> {
    let v = Poly::var(Var::V);
    let deform = &v - &Poly::var_pow(Var::V, -1);
    let mut out = Vec::new();
    braid_and_ties(n, &mut out);
    for i in 1..n {
        out.push(rel(
            "bt5",
            vec![
                Lin::word(format!("g{i} g{i}")),
                Lin::word("").plus(Lin::scaled(deform.clone(), format!("e{i} g{i}"))),
            ],
        ));
    }
    out
}

fn tied_bmw(n: usize) -> Vec<TiedRelation> {
    let a = Poly::var(Var::A);
    let a_inv = Poly::var_pow(Var::A, -1);
    let x = Poly::var(Var::X);
    let q = &Poly::var(Var::Q) - &Poly::var_pow(Var::Q, -1);
    let mut out = Vec::new();
    commuting("commute", "gGtef", n, &mut out);
    braid_and_ties(n, &mut out);
    for (i, j) in pairs(n).filter(|(i, j)| i.abs_diff(*j) == 1) {
        out.push(words("adjacent", &[format!("t{i} t{j} t{i}"), format!("t{i}")]));
        out.push(words("adjacent", &[format!("t{i} e{j} t{i}"), format!("t{i}")]));
        out.push(words(
            "adjacent",
            &[format!("f{i} e{j}"), format!("e{j} f{i}"), format!("e{j} t{i} e{j}")],
        ));
        out.push(rel(
            "tBMW1",
            vec![Lin::word(format!("t{i} g{j} t{i}")), Lin::scaled(a.clone(), format!("t{i}"))],
        ));
        out.push(words(
            "tBMW2",
            &[format!("g{i} g{j} t{i}"), format!("t{j} g{i} g{j}"), format!("t{j} t{i}")],
        ));
        out.push(words("tBMW3", &[format!("g{i} t{j} g{i}"), format!("G{j} t{i} G{j}")]));
        out.push(words("tBMW3", &[format!("g{i} f{j} g{i}"), format!("G{j} f{i} G{j}")]));
        out.push(words("tBMW4", &[format!("g{i} t{j} t{i}"), format!("G{j} t{i}")]));
        out.push(words("tBMW4", &[format!("t{i} t{j} g{i}"), format!("t{i} G{j}")]));
    }
    for i in 1..n {
        out.push(words("inverse", &[format!("g{i} G{i}"), String::new()]));
        out.push(rel(
            "quadratic",
            vec![Lin::word(format!("t{i} t{i}")), Lin::scaled(x.clone(), format!("t{i}"))],
        ));
        out.push(words("absorb", &[format!("t{i} e{i}"), format!("t{i}")]));
        out.push(words("absorb", &[format!("f{i} e{i}"), format!("f{i}")]));
        out.push(rel(
            "tBMW5",
            vec![Lin::word(format!("g{i} t{i}")), Lin::scaled(a_inv.clone(), format!("t{i}"))],
        ));
        out.push(rel(
            "tBMW5",
            vec![Lin::word(format!("f{i} g{i}")), Lin::scaled(a_inv.clone(), format!("f{i}"))],
        ));
        let minus = Poly::int(-1);
        out.push(rel(
            "tBMW6, both sides 0 at q = 1",
            vec![
                Lin::word(format!("g{i}")).plus(Lin::scaled(minus.clone(), format!("G{i}"))),
                Lin::scaled(q.clone(), format!("e{i}"))
                    .plus(Lin::scaled(&q * &minus, format!("f{i}"))),
            ],
        ));
    }
    out
}

pub struct TiedSuite;

impl Suite for TiedSuite {
    fn name(&self) -> &'static str {
        "tied"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let ns = cfg.ns.clone().unwrap_or_else(|| (1..=4).collect());
        let specs: Vec<TiedSpecialization> = TiedSpecialization::ALL
            .into_iter()
            .filter(|s| {
                cfg.families.is_empty()
                    || cfg.families.iter().any(|f| f == s.name() || f == s.target())
            })
            .collect();
        let mut jobs = Vec::new();
        for &s in &specs {
            for &n in &ns {
                jobs.extend(s.relations(n).into_iter().map(|r| (s, n, r, false)));
                jobs.extend(s.control(n).map(|r| (s, n, r, true)));
            }
        }
        let entries = jobs
            .into_par_iter()
            .map(|(s, n, r, control)| {
                let name = format!("{} -> {} {}", s.name(), s.target(), r.name);
                let check = || s.check(n, &r);
                if control {
                    control_entry(cfg, self.name(), s.target(), (1, n), name, check)
                } else {
                    entry(cfg, self.name(), s.target(), (1, n), name, check)
                }
            })
            .collect();
        Ok(SuiteReport {
            suite: self.name().into(),
            entries,
        })
    }
}
