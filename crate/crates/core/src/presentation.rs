//! Relation schemas and the relation checker.
//!
//! A schema is a named family of word equalities indexed by strand positions; it is
//! instantiated for a concrete (d, n) and each instance is checked by evaluating both
//! sides in the diagram model.

use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::Result;
use crate::family::MonoidFamily;
use crate::word::{format_word, GenSymbol, Word};

use GenSymbol::{F, P, Q, R, S, T, W};

pub type Instances = Vec<(Word, Word)>;

#[derive(Clone)]
pub struct RelationSchema {
    pub name: &'static str,
    pub instantiate: fn(usize, u32) -> Instances,
}

impl std::fmt::Debug for RelationSchema {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

/// Generators plus relation schemas.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<GenSymbol>,
    pub schemas: Vec<RelationSchema>,
}

impl Presentation {
    pub fn of(fam: &MonoidFamily) -> Presentation {
        Presentation {
            generators: fam.generator_symbols(),
            schemas: fam.strategy.schemas(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RelationFailure {
    pub schema: String,
    pub lhs: String,
    pub rhs: String,
    pub lhs_value: String,
    pub rhs_value: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SchemaResult {
    pub schema: String,
    pub instances: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RelationReport {
    pub family: String,
    pub d: u32,
    pub n: usize,
    pub schemas: Vec<SchemaResult>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn instances(&self) -> usize {
        self.schemas.iter().map(|s| s.instances).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_relations(fam: &MonoidFamily) -> RelationReport {
    check_schemas(fam, &fam.strategy.schemas())
}

/// Checks arbitrary schemas against a family; words that cannot be evaluated count as
/// failures.
pub fn check_schemas(fam: &MonoidFamily, schemas: &[RelationSchema]) -> RelationReport {
    let mut report = RelationReport {
        family: fam.key().to_string(),
        d: fam.d,
        n: fam.n,
        schemas: Vec::new(),
        failures: Vec::new(),
    };
    for schema in schemas {
        let inst = (schema.instantiate)(fam.n, fam.d);
        check_instances(fam, schema.name, &inst, &mut report);
    }
    report
}

fn check_instances(fam: &MonoidFamily, name: &str, inst: &Instances, report: &mut RelationReport) {
    let eval = |w: &Word| fam.evaluate_word(w).map(|(x, _)| x);
    let text = |v: &Result<Diagram>| match v {
        Ok(x) => x.to_string(),
        Err(e) => format!("error: {e}"),
    };
    let mut failed = 0;
    for (lhs, rhs) in inst {
        let (l, r) = (eval(lhs), eval(rhs));
        if !matches!((&l, &r), (Ok(a), Ok(b)) if a == b) {
            failed += 1;
            report.failures.push(RelationFailure {
                schema: name.to_string(),
                lhs: format_word(lhs),
                rhs: format_word(rhs),
                lhs_value: text(&l),
                rhs_value: text(&r),
            });
        }
    }
    report.schemas.push(SchemaResult {
        schema: name.to_string(),
        instances: inst.len(),
        failures: failed,
    });
}

fn e(i: usize) -> GenSymbol {
    GenSymbol::e(i)
}

fn o(i: usize) -> GenSymbol {
    GenSymbol::O(i, 1)
}

fn ok(i: usize, k: u32) -> GenSymbol {
    GenSymbol::O(i, k)
}

/// Position of `j` after the transposition (i, i+1).
fn swap(i: usize, j: usize) -> usize {
    if j == i {
        i + 1
    } else if j == i + 1 {
        i
    } else {
        j
    }
}

fn adjacent_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                out.push((i, j));
            }
        }
    }
    out
}

fn distant_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Pairs of tangle positions with |i-j| != 1, including i = j.
fn non_adjacent_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                out.push((i, j));
            }
        }
    }
    out
}

fn schema(name: &'static str, instantiate: fn(usize, u32) -> Instances) -> RelationSchema {
    RelationSchema { name, instantiate }
}

pub fn coxeter() -> Vec<RelationSchema> {
    vec![
        schema("s_i^2 = 1", |n, _| (1..n).map(|i| (vec![S(i), S(i)], vec![])).collect()),
        schema("s_i s_j = s_j s_i, |i-j|>1", |n, _| {
            distant_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![S(i), S(j)], vec![S(j), S(i)]))
                .collect()
        }),
        schema("s_i s_j s_i = s_j s_i s_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![S(i), S(j), S(i)], vec![S(j), S(i), S(j)]))
                .collect()
        }),
    ]
}

pub fn jones() -> Vec<RelationSchema> {
    vec![
        schema("t_i^2 = t_i", |n, _| (1..n).map(|i| (vec![T(i), T(i)], vec![T(i)])).collect()),
        schema("t_i t_j = t_j t_i, |i-j|>1", |n, _| {
            distant_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![T(i), T(j)], vec![T(j), T(i)]))
                .collect()
        }),
        schema("t_i t_j t_i = t_i, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![T(i), T(j), T(i)], vec![T(i)]))
                .collect()
        }),
    ]
}

pub fn beads() -> Vec<RelationSchema> {
    vec![
        schema("o_i^d = 1", |n, d| {
            (1..=n).map(|i| (vec![o(i); d as usize], vec![])).collect()
        }),
        schema("o_i o_j = o_j o_i", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push((vec![o(i), o(j)], vec![o(j), o(i)]));
                }
            }
            out
        }),
    ]
}

pub fn beads_tangle() -> Vec<RelationSchema> {
    vec![
        schema("t_i o_i = t_i o_{i+1}", |n, _| {
            (1..n).map(|i| (vec![T(i), o(i)], vec![T(i), o(i + 1)])).collect()
        }),
        schema("o_i t_i = o_{i+1} t_i", |n, _| {
            (1..n).map(|i| (vec![o(i), T(i)], vec![o(i + 1), T(i)])).collect()
        }),
        schema("o_i t_j = t_j o_i, i != j,j+1", |n, _| {
            let mut out = Vec::new();
            for j in 1..n {
                for i in 1..=n {
                    if i != j && i != j + 1 {
                        out.push((vec![o(i), T(j)], vec![T(j), o(i)]));
                    }
                }
            }
            out
        }),
        schema("t_i o_i^k t_i = t_i", |n, d| {
            let mut out = Vec::new();
            for i in 1..n {
                for k in 0..d {
                    out.push((vec![T(i), ok(i, k), T(i)], vec![T(i)]));
                }
            }
            out
        }),
    ]
}

pub fn beads_cross() -> Vec<RelationSchema> {
    vec![schema("o_j s_i = s_i o_{s_i(j)}", |n, _| {
        let mut out = Vec::new();
        for i in 1..n {
            for j in 1..=n {
                out.push((vec![o(j), S(i)], vec![S(i), o(swap(i, j))]));
            }
        }
        out
    })]
}

pub fn brauer_mixed() -> Vec<RelationSchema> {
    vec![
        schema("t_i s_i = s_i t_i = t_i", |n, _| {
            (1..n)
                .flat_map(|i| [(vec![T(i), S(i)], vec![T(i)]), (vec![S(i), T(i)], vec![T(i)])])
                .collect()
        }),
        schema("t_i s_j = s_j t_i, |i-j|>1", |n, _| {
            distant_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![T(i), S(j)], vec![S(j), T(i)]))
                .collect()
        }),
        schema("s_i t_j t_i = s_j t_i, t_i t_j s_i = t_i s_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    [
                        (vec![S(i), T(j), T(i)], vec![S(j), T(i)]),
                        (vec![T(i), T(j), S(i)], vec![T(i), S(j)]),
                    ]
                })
                .collect()
        }),
        schema("s_i t_j s_i = s_j t_i s_j, t_i s_j t_i = t_i, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    [
                        (vec![S(i), T(j), S(i)], vec![S(j), T(i), S(j)]),
                        (vec![T(i), S(j), T(i)], vec![T(i)]),
                    ]
                })
                .collect()
        }),
        schema("t_i t_j = t_i s_j s_i = s_j s_i t_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    [
                        (vec![T(i), T(j)], vec![T(i), S(j), S(i)]),
                        (vec![T(i), T(j)], vec![S(j), S(i), T(j)]),
                    ]
                })
                .collect()
        }),
    ]
}

pub fn rook_p() -> Vec<RelationSchema> {
    vec![
        schema("p_i^2 = p_i", |n, _| (1..=n).map(|i| (vec![P(i), P(i)], vec![P(i)])).collect()),
        schema("p_i p_j = p_j p_i", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push((vec![P(i), P(j)], vec![P(j), P(i)]));
                }
            }
            out
        }),
        schema("p_i s_j = s_j p_i, j>i", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + 1..n {
                    out.push((vec![P(i), S(j)], vec![S(j), P(i)]));
                }
            }
            out
        }),
        schema("p_i s_j = p_i, j<i", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in 1..i {
                    out.push((vec![P(i), S(j)], vec![P(i)]));
                }
            }
            out
        }),
        schema("p_i s_i p_i = p_{i+1}", |n, _| {
            (1..n).map(|i| (vec![P(i), S(i), P(i)], vec![P(i + 1)])).collect()
        }),
    ]
}

/// `s_{i-1} ... s_1 p_1 s_1 ... s_{i-1}`
pub fn r_as_p(i: usize) -> Word {
    let mut w: Word = (1..i).rev().map(S).collect();
    w.push(P(1));
    w.extend((1..i).map(S));
    w
}

pub fn rook_r() -> Vec<RelationSchema> {
    vec![
        schema("r_i^2 = r_i", |n, _| (1..=n).map(|i| (vec![R(i), R(i)], vec![R(i)])).collect()),
        schema("r_i r_j = r_j r_i", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push((vec![R(i), R(j)], vec![R(j), R(i)]));
                }
            }
            out
        }),
        schema("r_j s_i = s_i r_j, j != i,i+1", |n, _| {
            let mut out = Vec::new();
            for i in 1..n {
                for j in 1..=n {
                    if j != i && j != i + 1 {
                        out.push((vec![R(j), S(i)], vec![S(i), R(j)]));
                    }
                }
            }
            out
        }),
        schema("r_i s_i = s_i r_{i+1}, r_{i+1} s_i = s_i r_i", |n, _| {
            (1..n)
                .flat_map(|i| {
                    [
                        (vec![R(i), S(i)], vec![S(i), R(i + 1)]),
                        (vec![R(i + 1), S(i)], vec![S(i), R(i)]),
                    ]
                })
                .collect()
        }),
        schema("r_i s_i r_i = r_i r_{i+1}", |n, _| {
            (1..n).map(|i| (vec![R(i), S(i), R(i)], vec![R(i), R(i + 1)])).collect()
        }),
        schema("r_i = s_{i-1}..s_1 p_1 s_1..s_{i-1}", |n, _| {
            (1..=n).map(|i| (vec![R(i)], r_as_p(i))).collect()
        }),
        schema("p_i = r_1 .. r_i", |n, _| {
            (1..=n).map(|i| (vec![P(i)], (1..=i).map(R).collect())).collect()
        }),
    ]
}

/// Beads on a free point are invisible.
pub fn rook_beads_dropped() -> Vec<RelationSchema> {
    vec![
        schema("p_i o_j = o_j p_i, i<j", p_bead_commute),
        schema("p_i o_j = o_j p_i = p_i, j<=i", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in 1..=i {
                    out.push((vec![P(i), o(j)], vec![P(i)]));
                    out.push((vec![o(j), P(i)], vec![P(i)]));
                }
            }
            out
        }),
        schema("r_i o_j = o_j r_i, i != j", r_bead_commute),
        schema("r_i o_i = o_i r_i = r_i", |n, _| {
            (1..=n)
                .flat_map(|i| [(vec![R(i), o(i)], vec![R(i)]), (vec![o(i), R(i)], vec![R(i)])])
                .collect()
        }),
    ]
}

fn p_bead_commute(n: usize, _d: u32) -> Instances {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((vec![P(i), o(j)], vec![o(j), P(i)]));
        }
    }
    out
}

fn r_bead_commute(n: usize, _d: u32) -> Instances {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((vec![R(i), o(j)], vec![o(j), R(i)]));
            }
        }
    }
    out
}

/// All exponent vectors in [0, d)^len, in lexicographic order.
fn exponent_vectors(len: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..d).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// Beads on a free point survive.
pub fn rook_beads_kept() -> Vec<RelationSchema> {
    vec![
        schema("p_i o_j = o_j p_i, i<j", p_bead_commute),
        schema("p_i o_1^m1..o_i^mi p_j = p_j o^m p_i = p_j, i<=j", |n, d| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i..=n {
                    for m in exponent_vectors(i, d) {
                        let z: Word = m.iter().enumerate().map(|(k, &e)| ok(k + 1, e)).collect();
                        let mut left = vec![P(i)];
                        left.extend(z.iter().copied());
                        left.push(P(j));
                        let mut right = vec![P(j)];
                        right.extend(z.iter().copied());
                        right.push(P(i));
                        out.push((left, vec![P(j)]));
                        out.push((right, vec![P(j)]));
                    }
                }
            }
            out
        }),
        schema("r_i o_j = o_j r_i, i != j", r_bead_commute),
        schema("r_i o_i^k r_i = r_i", |n, d| {
            let mut out = Vec::new();
            for i in 1..=n {
                for k in 0..d {
                    out.push((vec![R(i), ok(i, k), R(i)], vec![R(i)]));
                }
            }
            out
        }),
    ]
}

pub fn set_partitions() -> Vec<RelationSchema> {
    vec![
        schema("e_ij^2 = e_ij", |n, _| {
            pairs(n).into_iter().map(|(i, j)| (vec![E(i, j), E(i, j)], vec![E(i, j)])).collect()
        }),
        schema("e_ij e_rs = e_rs e_ij", |n, _| {
            let ps = pairs(n);
            let mut out = Vec::new();
            for (a, &(i, j)) in ps.iter().enumerate() {
                for &(r, s) in &ps[a + 1..] {
                    out.push((vec![E(i, j), E(r, s)], vec![E(r, s), E(i, j)]));
                }
            }
            out
        }),
        schema("e_ij e_ik = e_ij e_jk = e_ik e_jk, i<j<k", |n, _| {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        out.push((vec![E(i, j), E(i, k)], vec![E(i, j), E(j, k)]));
                        out.push((vec![E(i, j), E(j, k)], vec![E(i, k), E(j, k)]));
                    }
                }
            }
            out
        }),
    ]
}

use GenSymbol::E;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

pub fn framed_set_partitions() -> Vec<RelationSchema> {
    vec![
        schema("o_k e_ij = e_ij o_k", |n, _| {
            let mut out = Vec::new();
            for (i, j) in pairs(n) {
                for k in 1..=n {
                    out.push((vec![o(k), E(i, j)], vec![E(i, j), o(k)]));
                }
            }
            out
        }),
        schema("o_i e_ij = o_j e_ij", |n, _| {
            pairs(n).into_iter().map(|(i, j)| (vec![o(i), E(i, j)], vec![o(j), E(i, j)])).collect()
        }),
    ]
}

pub fn ties_commute() -> Vec<RelationSchema> {
    vec![
        schema("e_i^2 = e_i", |n, _| (1..n).map(|i| (vec![e(i), e(i)], vec![e(i)])).collect()),
        schema("e_i e_j = e_j e_i", |n, _| {
            let mut out = Vec::new();
            for i in 1..n {
                for j in i + 1..n {
                    out.push((vec![e(i), e(j)], vec![e(j), e(i)]));
                }
            }
            out
        }),
    ]
}

pub fn tied_symmetric() -> Vec<RelationSchema> {
    let mut v = ties_commute();
    v.extend([
        schema("s_i e_j = e_j s_i, |i-j|!=1", |n, _| {
            non_adjacent_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![S(i), e(j)], vec![e(j), S(i)]))
                .collect()
        }),
        schema("e_i s_j s_i = s_j s_i e_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![e(i), S(j), S(i)], vec![S(j), S(i), e(j)]))
                .collect()
        }),
        schema("e_i e_j s_i = e_j s_i e_j = s_i e_i e_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    [
                        (vec![e(i), e(j), S(i)], vec![e(j), S(i), e(j)]),
                        (vec![e(j), S(i), e(j)], vec![S(i), e(i), e(j)]),
                    ]
                })
                .collect()
        }),
    ]);
    v
}

pub fn tied_jones() -> Vec<RelationSchema> {
    vec![
        schema("f_i^2 = f_i, f_i f_j = f_j f_i (|i-j|>1)", |n, _| {
            let mut out: Instances = (1..n).map(|i| (vec![F(i), F(i)], vec![F(i)])).collect();
            for (i, j) in distant_pairs(n) {
                out.push((vec![F(i), F(j)], vec![F(j), F(i)]));
            }
            out
        }),
        schema("e_i t_i = t_i e_i = t_i, f_i e_i = f_i", |n, _| {
            (1..n)
                .flat_map(|i| {
                    [
                        (vec![e(i), T(i)], vec![T(i)]),
                        (vec![T(i), e(i)], vec![T(i)]),
                        (vec![F(i), e(i)], vec![F(i)]),
                    ]
                })
                .collect()
        }),
        schema("e_i f_j = f_j e_i, t_i f_i = f_i t_i = t_i", |n, _| {
            let mut out = Instances::new();
            for i in 1..n {
                for j in 1..n {
                    out.push((vec![e(i), F(j)], vec![F(j), e(i)]));
                }
                out.push((vec![T(i), F(i)], vec![T(i)]));
                out.push((vec![F(i), T(i)], vec![T(i)]));
            }
            out
        }),
        schema("t_i e_j = e_j t_i, t_i f_j = f_j t_i, |i-j|>1", |n, _| {
            distant_pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    [
                        (vec![T(i), e(j)], vec![e(j), T(i)]),
                        (vec![T(i), F(j)], vec![F(j), T(i)]),
                    ]
                })
                .collect()
        }),
        schema("t_i e_j t_i = t_i, f_i e_j = e_j t_i e_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .flat_map(|(i, j)| {
                    [
                        (vec![T(i), e(j), T(i)], vec![T(i)]),
                        (vec![F(i), e(j)], vec![e(j), T(i), e(j)]),
                    ]
                })
                .collect()
        }),
        schema("f_i f_j f_i = e_j f_i e_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![F(i), F(j), F(i)], vec![e(j), F(i), e(j)]))
                .collect()
        }),
    ]
}

pub fn tied_brauer() -> Vec<RelationSchema> {
    vec![
        schema("f_i s_j = s_j f_i, |i-j|>1", |n, _| {
            distant_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![F(i), S(j)], vec![S(j), F(i)]))
                .collect()
        }),
        schema("f_i s_i = s_i f_i = f_i", |n, _| {
            (1..n)
                .flat_map(|i| [(vec![F(i), S(i)], vec![F(i)]), (vec![S(i), F(i)], vec![F(i)])])
                .collect()
        }),
        schema("s_i f_j s_i = s_j f_i s_j, |i-j|=1", |n, _| {
            adjacent_pairs(n)
                .into_iter()
                .map(|(i, j)| (vec![S(i), F(j), S(i)], vec![S(j), F(i), S(j)]))
                .collect()
        }),
    ]
}

/// Ties between through lines of rook diagrams.
pub fn tied_rook_lines() -> Vec<RelationSchema> {
    vec![
        schema("e_i p_j = p_j e_i = p_j, i<=j", |n, _| {
            let mut out = Instances::new();
            for i in 1..n {
                for j in i..=n {
                    out.push((vec![e(i), P(j)], vec![P(j)]));
                    out.push((vec![P(j), e(i)], vec![P(j)]));
                }
            }
            out
        }),
        schema("e_i p_j = p_j e_i, i>j", |n, _| {
            let mut out = Instances::new();
            for i in 1..n {
                for j in 1..i {
                    out.push((vec![e(i), P(j)], vec![P(j), e(i)]));
                }
            }
            out
        }),
    ]
}

/// Ties that may also join free points of rook diagrams.
pub fn tied_rook_points() -> Vec<RelationSchema> {
    vec![
        schema("q_i^2 = q_i, q_i q_j = q_j q_i", |n, _| {
            let mut out: Instances = (1..=n).map(|i| (vec![Q(i), Q(i)], vec![Q(i)])).collect();
            for (i, j) in pairs(n) {
                out.push((vec![Q(i), Q(j)], vec![Q(j), Q(i)]));
            }
            out
        }),
        schema("q_i e_j = e_j q_i", |n, _| {
            let mut out = Instances::new();
            for i in 1..=n {
                for j in 1..n {
                    out.push((vec![Q(i), e(j)], vec![e(j), Q(i)]));
                }
            }
            out
        }),
        schema("s_i q_j = q_{s_i(j)} s_i", |n, _| {
            let mut out = Instances::new();
            for i in 1..n {
                for j in 1..=n {
                    out.push((vec![S(i), Q(j)], vec![Q(swap(i, j)), S(i)]));
                }
            }
            out
        }),
        schema("e_i r_j e_i = e_i q_j (j=i,i+1), e_i r_j = r_j e_i (j!=i,i+1)", |n, _| {
            let mut out = Instances::new();
            for i in 1..n {
                for j in 1..=n {
                    if j == i || j == i + 1 {
                        out.push((vec![e(i), R(j), e(i)], vec![e(i), Q(j)]));
                    } else {
                        out.push((vec![e(i), R(j)], vec![R(j), e(i)]));
                    }
                }
            }
            out
        }),
        schema("r_i q_j = q_j r_i, q_i r_i = r_i", |n, _| {
            let mut out = Instances::new();
            for i in 1..=n {
                for j in 1..=n {
                    out.push((vec![R(i), Q(j)], vec![Q(j), R(i)]));
                }
                out.push((vec![Q(i), R(i)], vec![R(i)]));
            }
            out
        }),
        schema("r_j e_i r_j = r_j, j=i,i+1", |n, _| {
            let mut out = Instances::new();
            for i in 1..n {
                for j in [i, i + 1] {
                    out.push((vec![R(j), e(i), R(j)], vec![R(j)]));
                }
            }
            out
        }),
        schema("r_i e_i r_{i+1} = s_i q_i r_{i+1}", |n, _| {
            (1..n)
                .map(|i| (vec![R(i), e(i), R(i + 1)], vec![S(i), Q(i), R(i + 1)]))
                .collect()
        }),
        schema("w_i = r_1 .. r_{i-1} q_i, p_i = r_1 .. r_i", |n, _| {
            let mut out = Instances::new();
            for i in 1..=n {
                let mut w: Word = (1..i).map(R).collect();
                w.push(Q(i));
                out.push((vec![W(i)], w));
                out.push((vec![P(i)], (1..=i).map(R).collect()));
            }
            out
        }),
    ]
}

/// Checks the false relations `g = 1` for every generator `g`; each instance should be
/// reported as a failure.
pub fn negative_control(fam: &MonoidFamily) -> RelationReport {
    let inst: Instances = fam
        .generator_symbols()
        .into_iter()
        .map(|g| (vec![g], vec![]))
        .collect();
    let mut report = RelationReport {
        family: fam.key().to_string(),
        d: fam.d,
        n: fam.n,
        schemas: Vec::new(),
        failures: Vec::new(),
    };
    check_instances(fam, "g = 1", &inst, &mut report);
    report
}
