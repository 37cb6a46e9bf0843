use std::collections::BTreeSet;

use super::{partners, BeadList, NormalFormWord};
use crate::diagram::{Diagram, Pt};
use crate::error::{FramoidError, Result};
use crate::family::MonoidFamily;
use crate::word::{GenSymbol, Word};

/// Anchor points of a planar matching: where the beads of each arc are collected.
struct Anchors {
    verticals: Vec<usize>,
    /// left points of up-brackets and upper points of nw-lines
    top: Vec<usize>,
    /// left points of down-brackets and lower points of ne-lines
    bottom: Vec<usize>,
}

fn anchors(x: &Diagram) -> Result<Anchors> {
    if x.is_tied() || x.block_sizes().iter().any(|&s| s != 2) || !x.is_planar() {
        return Err(FramoidError::NotPlanar);
    }
    let n = x.n();
    let part = partners(x);
    let mut a = Anchors {
        verticals: Vec::new(),
        top: Vec::new(),
        bottom: Vec::new(),
    };
    for p in 1..=n {
        let q = Pt::from_index(part[Pt::Top(p).index(n)].unwrap(), n);
        match q {
            Pt::Top(q) if q > p => a.top.push(p),
            Pt::Bot(q) if q == p => a.verticals.push(p),
            Pt::Bot(q) if q > p => a.top.push(p),
            _ => {}
        }
        let q = Pt::from_index(part[Pt::Bot(p).index(n)].unwrap(), n);
        match q {
            Pt::Bot(q) if q > p => a.bottom.push(p),
            Pt::Top(q) if q > p => a.bottom.push(p),
            _ => {}
        }
    }
    Ok(a)
}

/// Strand positions joined by a vertical line.
pub fn vertical_lines(x: &Diagram) -> Result<BTreeSet<usize>> {
    Ok(anchors(x)?.verticals.into_iter().collect())
}

fn monomial_word(monomials: &[(usize, usize)]) -> Word {
    monomials
        .iter()
        .flat_map(|&(i, j)| (j..=i).rev().map(GenSymbol::T))
        .collect()
}

/// Increasing sequences i_1 < .. < i_k with j_m <= i_m <= n-1.
fn candidates(js: &[usize], n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let m = prefix.len();
    if m == js.len() {
        out.push(prefix.clone());
        return;
    }
    let lo = js[m].max(prefix.last().map_or(0, |&i| i + 1));
    // leave room for the remaining indices
    let hi = (n - 1).saturating_sub(js.len() - m - 1);
    for i in lo..=hi {
        prefix.push(i);
        candidates(js, n, prefix, out);
        prefix.pop();
    }
}

/// Tangle monomials `U_{i_1 j_1} .. U_{i_k j_k}` reproducing the bead-free diagram.
fn tangle_part(x: &Diagram, js: &[usize]) -> Result<Vec<(usize, usize)>> {
    let n = x.n();
    let plain = x.erase_beads();
    let fam = MonoidFamily::by_key("jn", x.d(), n)?;
    let mut all = Vec::new();
    candidates(js, n, &mut Vec::new(), &mut all);
    let mut found: Option<Vec<(usize, usize)>> = None;
    for is in all {
        let mono: Vec<(usize, usize)> = is.into_iter().zip(js.iter().copied()).collect();
        if fam.evaluate_word(&monomial_word(&mono))?.0 == plain {
            if found.is_some() {
                return Err(FramoidError::Mismatch(format!(
                    "two tangle words reproduce {x}"
                )));
            }
            found = Some(mono);
        }
    }
    found.ok_or_else(|| FramoidError::Mismatch(format!("no tangle word reproduces {x}")))
}

pub fn jones_nf(x: &Diagram) -> Result<NormalFormWord> {
    let a = anchors(x)?;
    let n = x.n();
    let bead_at = |p: Pt| x.bead(x.block_of(p));
    let gap_beads: BeadList = a.verticals.iter().map(|&g| (g, bead_at(Pt::Top(g)))).collect();
    let top_beads: BeadList = a.top.iter().rev().map(|&i| (i, bead_at(Pt::Top(i)))).collect();
    let bottom_beads: BeadList = a.bottom.iter().map(|&j| (j, bead_at(Pt::Bot(j)))).collect();
    let monomials = tangle_part(x, &a.bottom)?;
    Ok(NormalFormWord::JonesAbacus {
        n,
        d: x.d(),
        gap_beads,
        top_beads,
        monomials,
        bottom_beads,
    })
}

/// Indices g such that neither t_g nor t_{g-1} occurs in the tangle part of the normal
/// form.
pub fn gaps(x: &Diagram) -> Result<BTreeSet<usize>> {
    let NormalFormWord::JonesAbacus { n, monomials, .. } = jones_nf(x)? else {
        unreachable!()
    };
    let used: BTreeSet<usize> = monomials.iter().flat_map(|&(i, j)| j..=i).collect();
    Ok((1..=n)
        .filter(|g| !used.contains(g) && !used.contains(&(g - 1)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{format_word, parse_word};

    fn eval(key: &str, d: u32, n: usize, w: &str) -> Diagram {
        let fam = MonoidFamily::by_key(key, d, n).unwrap();
        fam.evaluate_word(&parse_word(w).unwrap()).unwrap().0
    }

    #[test]
    fn example_word_is_reproduced() {
        let w = "o2 t2 t1 t3 t2 t4 o1^2 o4";
        let x = eval("jdn", 4, 5, w);
        let nf = jones_nf(&x).unwrap();
        assert_eq!(nf.to_string(), w);
        assert_eq!(nf.tangle_count(), 5);
    }

    #[test]
    fn dual_form_has_the_expected_top_indices() {
        let x = eval("jn", 1, 5, "t2 t1 t3 t2 t4");
        let a = anchors(&x).unwrap();
        assert_eq!(a.bottom, [1, 2, 4]);
        // in descending order these are the first indices of the dual form
        assert_eq!(a.top, [1, 2]);
        assert!(gaps(&x).unwrap().is_empty());
        assert_eq!(eval("jn", 1, 5, "t2 t3 t4 t1 t2"), x);
    }

    #[test]
    fn small_gap_cases() {
        let id = Diagram::identity(3, 2, false);
        assert_eq!(gaps(&id).unwrap(), BTreeSet::from([1, 2, 3]));
        let t1 = eval("jn", 1, 4, "t1");
        assert_eq!(gaps(&t1).unwrap(), BTreeSet::from([3, 4]));
        assert_eq!(vertical_lines(&t1).unwrap(), BTreeSet::from([3, 4]));
    }

    #[test]
    fn bead_on_identity() {
        let x = eval("jdn", 2, 3, "o2");
        let nf = jones_nf(&x).unwrap();
        assert_eq!(format_word(&nf.word()), "o2");
        assert_eq!(nf.tangle_count(), 0);
    }

    #[test]
    fn crossings_are_rejected() {
        let x = eval("brn", 1, 3, "s1");
        assert_eq!(jones_nf(&x), Err(FramoidError::NotPlanar));
    }
}
