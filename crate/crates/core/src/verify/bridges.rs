//! Bridge-element identities: the relations of each tied monoid, realized inside the
//! algebra of the corresponding framed monoid.

use rayon::prelude::*;

use super::identities::{Check, Ctx};
use super::{control_entry, entry, Suite, SuiteConfig, SuiteReport};
use crate::algebra::{Ambient, LoopPolicy};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeTarget {
    /// set partitions from beads on strands, in C_d^n
    Partition,
    /// tied permutations, in S_{d,n}
    Symmetric,
    /// tied rook monoid with lines only, in R_{d,n}
    RookR,
    /// tied rook monoid with free points, in R'_{d,n} with loop weights
    RookRprime,
    /// tied Jones, in J_{d,n} with loop weights
    Jones,
    /// tied Brauer, in Br_{d,n} with loop weights
    Brauer,
}

impl BridgeTarget {
    pub const ALL: [BridgeTarget; 6] = [
        BridgeTarget::Partition,
        BridgeTarget::Symmetric,
        BridgeTarget::RookR,
        BridgeTarget::RookRprime,
        BridgeTarget::Jones,
        BridgeTarget::Brauer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BridgeTarget::Partition => "partition",
            BridgeTarget::Symmetric => "symmetric",
            BridgeTarget::RookR => "rookR",
            BridgeTarget::RookRprime => "rookRprime",
            BridgeTarget::Jones => "jones",
            BridgeTarget::Brauer => "brauer",
        }
    }

    pub fn family_key(self) -> &'static str {
        match self {
            BridgeTarget::Partition => "cdn",
            BridgeTarget::Symmetric => "sdn",
            BridgeTarget::RookR => "rdn",
            BridgeTarget::RookRprime => "rprimedn",
            BridgeTarget::Jones => "jdn",
            BridgeTarget::Brauer => "brdn",
        }
    }

    pub fn loops(self) -> LoopPolicy {
        match self {
            BridgeTarget::Partition | BridgeTarget::Symmetric | BridgeTarget::RookR => {
                LoopPolicy::Neglect
            }
            _ => LoopPolicy::Alpha,
        }
    }

    pub fn checks(self, d: u32, n: usize) -> Result<Vec<Check<'static>>> {
        let ctx = Ctx {
            amb: Ambient::new(self.family_key(), d, n, self.loops())?,
        };
        let mut out = Vec::new();
        match self {
            BridgeTarget::Partition => partition(ctx, n, &mut out),
            BridgeTarget::Symmetric => symmetric(ctx, n, &mut out),
            BridgeTarget::RookR => {
                symmetric(ctx, n, &mut out);
                rook_lines(ctx, n, &mut out);
            }
            BridgeTarget::RookRprime => {
                symmetric(ctx, n, &mut out);
                rook_points(ctx, n, &mut out);
            }
            BridgeTarget::Jones => jones(ctx, n, &mut out),
            BridgeTarget::Brauer => {
                symmetric(ctx, n, &mut out);
                jones(ctx, n, &mut out);
                brauer(ctx, n, &mut out);
            }
        }
        Ok(out)
    }

    /// Identities that must fail; they show the loop-weight correction is needed.
    pub fn controls(self, d: u32, n: usize) -> Result<Vec<Check<'static>>> {
        let ctx = Ctx {
            amb: Ambient::new(self.family_key(), d, n, self.loops())?,
        };
        Ok(match self {
            BridgeTarget::Jones if n >= 2 && d >= 2 => vec![chain(ctx, &["F1 F1", "F1"])],
            BridgeTarget::RookRprime if d >= 2 => vec![chain(ctx, &["Q1 Q1", "Q1"])],
            _ => Vec::new(),
        })
    }
}

fn chain(ctx: Ctx, sides: &[&str]) -> Check<'static> {
    Check::chain(ctx, sides.iter().map(|s| s.to_string()).collect())
}

macro_rules! push {
    ($out:expr, $ctx:expr, $($side:expr),+ $(,)?) => {
        $out.push(Check::chain($ctx, vec![$($side),+]))
    };
}

fn swap(i: usize, j: usize) -> usize {
    if j == i {
        i + 1
    } else if j == i + 1 {
        i
    } else {
        j
    }
}

fn partition(c: Ctx, n: usize, out: &mut Vec<Check<'static>>) {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    for &(i, j) in &pairs {
        push!(out, c, format!("E{i},{j} E{i},{j}"), format!("E{i},{j}"));
        push!(
            out,
            c,
            format!("o{i} E{i},{j}"),
            format!("o{j} E{i},{j}"),
            format!("E{i},{j} o{i}"),
            format!("E{i},{j} o{j}")
        );
    }
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(r, s) in &pairs[a + 1..] {
            push!(out, c, format!("E{i},{j} E{r},{s}"), format!("E{r},{s} E{i},{j}"));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                push!(
                    out,
                    c,
                    format!("E{i},{j} E{i},{k}"),
                    format!("E{i},{j} E{j},{k}"),
                    format!("E{i},{k} E{j},{k}")
                );
            }
        }
    }
}

fn symmetric(c: Ctx, n: usize, out: &mut Vec<Check<'static>>) {
    for i in 1..n {
        push!(out, c, format!("E{i} E{i}"), format!("E{i}"));
        push!(
            out,
            c,
            format!("o{i} E{i}"),
            format!("o{} E{i}", i + 1),
            format!("E{i} o{i}"),
            format!("E{i} o{}", i + 1)
        );
        for j in 1..n {
            if i < j {
                push!(out, c, format!("E{i} E{j}"), format!("E{j} E{i}"));
            }
            if i.abs_diff(j) != 1 {
                push!(out, c, format!("s{i} E{j}"), format!("E{j} s{i}"));
            } else {
                push!(out, c, format!("E{i} s{j} s{i}"), format!("s{j} s{i} E{j}"));
                push!(
                    out,
                    c,
                    format!("E{i} E{j} s{i}"),
                    format!("E{j} s{i} E{j}"),
                    format!("s{i} E{i} E{j}")
                );
            }
        }
    }
}

fn rook_lines(c: Ctx, n: usize, out: &mut Vec<Check<'static>>) {
    for i in 1..n {
        for j in 1..=n {
            if i < j {
                push!(out, c, format!("E{i} p{j}"), format!("p{j} E{i}"), format!("p{j}"));
            } else if i == j {
                push!(out, c, format!("E{i} p{i}"), format!("U{} p{i}", i + 1));
                push!(out, c, format!("p{i} E{i}"), format!("p{i} U{}", i + 1));
            } else {
                push!(out, c, format!("E{i} p{j}"), format!("p{j} E{i}"));
            }
        }
    }
    for i in 1..=n {
        // beads on free points vanish, so these bridges collapse
        push!(out, c, format!("Q{i}"), format!("r{i}"));
        push!(out, c, format!("W{i}"), format!("p{i}"));
    }
}

fn rook_points(c: Ctx, n: usize, out: &mut Vec<Check<'static>>) {
    for i in 1..=n {
        push!(out, c, format!("Q{i} Q{i}"), format!("Q{i} Z{i}"));
        push!(out, c, format!("o{i} Q{i}"), format!("Q{i} o{i}"));
        push!(out, c, format!("Q{i} r{i}"), format!("Z{i} r{i}"));
        push!(out, c, format!("r{i} Q{i}"), format!("r{i} Z{i}"));
        let prefix: Vec<String> = (1..i).map(|k| format!("r{k}")).collect();
        push!(out, c, format!("W{i}"), format!("{} Q{i}", prefix.join(" ")));
        for j in 1..=i {
            for h in 1..=i {
                push!(out, c, format!("o{j} W{i}:{j},{h}"), format!("W{i}:{j},{h} o{h}"));
            }
        }
        for j in 1..=n {
            if i < j {
                push!(out, c, format!("Q{i} Q{j}"), format!("Q{j} Q{i}"));
            }
            if i != j {
                push!(out, c, format!("r{i} Q{j}"), format!("Q{j} r{i}"));
            }
            if j < n {
                push!(out, c, format!("Q{i} E{j}"), format!("E{j} Q{i}"));
            }
        }
    }
    for i in 1..n {
        for j in 1..=n {
            push!(out, c, format!("s{i} Q{j}"), format!("Q{} s{i}", swap(i, j)));
            if j == i || j == i + 1 {
                push!(
                    out,
                    c,
                    format!("E{i} r{j} E{i}"),
                    format!("Q{j} E{i}"),
                    format!("E{i} Q{j}")
                );
            } else {
                push!(out, c, format!("E{i} r{j}"), format!("r{j} E{i}"));
            }
        }
        let k = i + 1;
        push!(out, c, format!("r{i} E{i} r{i}"), format!("r{i} Z{k}"));
        push!(out, c, format!("r{k} E{i} r{k}"), format!("Z{i} r{k}"));
        push!(out, c, format!("r{i} E{i} r{k}"), format!("s{i} Q{i} r{k}"));
    }
}

fn jones(c: Ctx, n: usize, out: &mut Vec<Check<'static>>) {
    for i in 1..n {
        let k = i + 1;
        push!(out, c, format!("E{i} E{i}"), format!("E{i}"));
        push!(out, c, format!("F{i} F{i}"), format!("F{i} Z{i}"), format!("Z{i} F{i}"));
        push!(out, c, format!("E{i} t{i}"), format!("t{i} E{i}"), format!("t{i}"));
        push!(out, c, format!("F{i} E{i}"), format!("E{i} F{i}"), format!("F{i}"));
        push!(out, c, format!("t{i} F{i}"), format!("t{i} Z{i}"));
        push!(out, c, format!("F{i} t{i}"), format!("Z{i} t{i}"));
        push!(
            out,
            c,
            format!("o{i} F{i}"),
            format!("o{k} F{i}"),
            format!("F{i} o{i}"),
            format!("F{i} o{k}")
        );
        for j in 1..n {
            if i < j {
                push!(out, c, format!("E{i} E{j}"), format!("E{j} E{i}"));
            }
            push!(out, c, format!("E{i} F{j}"), format!("F{j} E{i}"));
            if i.abs_diff(j) > 1 {
                push!(out, c, format!("F{i} F{j}"), format!("F{j} F{i}"));
                push!(out, c, format!("t{i} E{j}"), format!("E{j} t{i}"));
                push!(out, c, format!("t{i} F{j}"), format!("F{j} t{i}"));
            }
            if j == i + 1 {
                push!(out, c, format!("t{i} E{j} t{i}"), format!("t{i} Z{}", i + 2));
            }
            if j + 1 == i {
                push!(out, c, format!("t{i} E{j} t{i}"), format!("Z{j} t{i}"));
            }
            if i.abs_diff(j) == 1 {
                push!(out, c, format!("F{i} E{j}"), format!("E{j} t{i} E{j}"));
            }
        }
    }
}

fn brauer(c: Ctx, n: usize, out: &mut Vec<Check<'static>>) {
    for i in 1..n {
        push!(out, c, format!("F{i} s{i}"), format!("s{i} F{i}"), format!("F{i}"));
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                push!(out, c, format!("F{i} s{j}"), format!("s{j} F{i}"));
            }
            if i.abs_diff(j) == 1 {
                push!(out, c, format!("s{i} F{j} s{i}"), format!("s{j} F{i} s{j}"));
            }
        }
    }
}

pub struct BridgesSuite;

impl Suite for BridgesSuite {
    fn name(&self) -> &'static str {
        "bridges"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let targets: Vec<BridgeTarget> = BridgeTarget::ALL
            .into_iter()
            .filter(|t| {
                cfg.families.is_empty()
                    || cfg
                        .families
                        .iter()
                        .any(|f| f == t.name() || f == t.family_key())
            })
            .collect();
        let grid = cfg.grid(vec![(2, 4), (3, 4), (4, 4)]);
        let mut jobs = Vec::new();
        for t in &targets {
            for &(d, n) in &grid {
                for check in t.checks(d, n)? {
                    jobs.push((*t, d, n, check, false));
                }
                for check in t.controls(d, n)? {
                    jobs.push((*t, d, n, check, true));
                }
            }
        }
        let entries = jobs
            .into_par_iter()
            .map(|(t, d, n, check, control)| {
                let name = format!("{}: {}", t.name(), check.name);
                if control {
                    control_entry(cfg, self.name(), t.family_key(), (d, n), name, || check.run())
                } else {
                    entry(cfg, self.name(), t.family_key(), (d, n), name, || check.run())
                }
            })
            .collect();
        Ok(SuiteReport {
            suite: self.name().into(),
            entries,
        })
    }
}
