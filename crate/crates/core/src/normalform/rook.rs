use super::{permutation_word, BeadList, NormalFormWord};
use crate::diagram::{Diagram, Pt};
use crate::error::{FramoidError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RookVariant {
    /// beads only on lines (singleton beads are dropped)
    First,
    /// beads on lines and on free points
    Prime,
}

/// `o · r_{i_1} .. r_{i_{n-k}} · s`, with a bead suffix on bottom free points for
/// the `Prime` variant.
pub fn rook_nf(x: &Diagram, variant: RookVariant) -> Result<NormalFormWord> {
    let n = x.n();
    let blocks = x.blocks();
    if x.is_tied() || blocks.iter().any(|b| b.len() > 2 || (b.len() == 2 && b[0].is_top() == b[1].is_top())) {
        return Err(FramoidError::VariantMismatch("not a rook diagram".into()));
    }
    let bead_at = |p: Pt| x.bead(x.block_of(p));
    let mut line_to = vec![None; n + 1];
    let mut r_list = Vec::new();
    let mut free_bottom = vec![true; n + 1];
    for b in &blocks {
        if let [Pt::Top(p), Pt::Bot(q)] = b[..] {
            line_to[p] = Some(q);
            free_bottom[q] = false;
        }
    }
    for (p, l) in line_to.iter().enumerate().skip(1) {
        if l.is_none() {
            r_list.push(p);
        }
    }
    let free_bottom: Vec<usize> = (1..=n).filter(|&q| free_bottom[q]).collect();
    let mut f = vec![0; n];
    let mut rest = free_bottom.iter();
    for p in 1..=n {
        f[p - 1] = match line_to[p] {
            Some(q) => q,
            None => *rest.next().unwrap(),
        };
    }
    let s = permutation_word(&f);
    let d = x.d();
    match variant {
        RookVariant::First => {
            let singleton_bead = blocks
                .iter()
                .enumerate()
                .any(|(i, b)| b.len() == 1 && x.bead(i) != 0);
            if singleton_bead {
                return Err(FramoidError::VariantMismatch(
                    "beads on free points have no place in this form".into(),
                ));
            }
            let prefix: BeadList = (1..=n)
                .filter(|&p| line_to[p].is_some())
                .map(|p| (p, bead_at(Pt::Top(p))))
                .collect();
            Ok(NormalFormWord::RookFirst { n, d, prefix, r_list, s })
        }
        RookVariant::Prime => {
            let prefix: BeadList = (1..=n).map(|p| (p, bead_at(Pt::Top(p)))).collect();
            let suffix: BeadList = free_bottom.iter().map(|&q| (q, bead_at(Pt::Bot(q)))).collect();
            Ok(NormalFormWord::RookPrime { n, d, prefix, r_list, s, suffix })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::MonoidFamily;
    use crate::word::parse_word;

    #[test]
    fn line_bead_in_first_form() {
        let fam = MonoidFamily::by_key("rdn", 3, 3).unwrap();
        let x = fam.evaluate_word(&parse_word("o1^2").unwrap()).unwrap().0;
        assert_eq!(rook_nf(&x, RookVariant::First).unwrap().to_string(), "o1^2");
    }

    #[test]
    fn free_points_and_permutation() {
        let fam = MonoidFamily::by_key("rdn", 1, 5).unwrap();
        // lines 1->2, 3->5, 4->1; free tops 2, 5
        let x = fam.evaluate_word(&parse_word("r2 r5 s1 s4 s3 s2 s1").unwrap()).unwrap().0;
        let nf = rook_nf(&x, RookVariant::First).unwrap();
        let NormalFormWord::RookFirst { r_list, .. } = &nf else { panic!() };
        assert_eq!(r_list, &[2, 5]);
        assert_eq!(nf.evaluate().unwrap(), x);
    }

    #[test]
    fn singleton_bead_needs_prime_form() {
        let fam = MonoidFamily::by_key("rprimedn", 2, 2).unwrap();
        let x = fam.evaluate_word(&parse_word("r1 o1").unwrap()).unwrap().0;
        assert!(rook_nf(&x, RookVariant::First).is_err());
        let nf = rook_nf(&x, RookVariant::Prime).unwrap();
        assert_eq!(nf.to_string(), "r1 o1");
        assert_eq!(nf.evaluate().unwrap(), x);
    }
}
