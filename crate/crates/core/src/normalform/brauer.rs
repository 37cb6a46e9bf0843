use super::{partners, permutation_word, BeadList, NormalFormWord};
use crate::diagram::{Diagram, Pt};
use crate::error::{FramoidError, Result};

/// `o · s · t_1 t_3 .. t_{2k-1} · s' · o'` for a beaded Brauer diagram.
pub fn brauer_nf(x: &Diagram) -> Result<NormalFormWord> {
    if x.is_tied() || x.block_sizes().iter().any(|&s| s != 2) {
        return Err(FramoidError::VariantMismatch("not a Brauer diagram".into()));
    }
    let n = x.n();
    let part = partners(x);
    let partner = |p: Pt| Pt::from_index(part[p.index(n)].unwrap(), n);
    let (mut a, mut b, mut c, mut c_low) = (vec![], vec![], vec![], vec![]);
    let (mut a2, mut b2) = (vec![], vec![]);
    for p in 1..=n {
        match partner(Pt::Top(p)) {
            Pt::Top(q) if q > p => {
                a.push(p);
                b.push(q);
            }
            Pt::Bot(q) => {
                c.push(p);
                c_low.push(q);
            }
            _ => {}
        }
        if let Pt::Bot(q) = partner(Pt::Bot(p)) {
            if q > p {
                a2.push(p);
                b2.push(q);
            }
        }
    }
    let k = a.len();
    let mut f = vec![0; n];
    let mut f2 = vec![0; n];
    for i in 0..k {
        f[a[i] - 1] = 2 * i + 1;
        f[b[i] - 1] = 2 * i + 2;
        f2[2 * i] = a2[i];
        f2[2 * i + 1] = b2[i];
    }
    for (i, (&top, &low)) in c.iter().zip(&c_low).enumerate() {
        f[top - 1] = 2 * k + i + 1;
        f2[2 * k + i] = low;
    }
    let mut anchors: Vec<usize> = a.iter().chain(&c).copied().collect();
    anchors.sort_unstable();
    let bead_at = |p: Pt| x.bead(x.block_of(p));
    let prefix: BeadList = anchors.iter().map(|&p| (p, bead_at(Pt::Top(p)))).collect();
    let suffix: BeadList = a2.iter().map(|&p| (p, bead_at(Pt::Bot(p)))).collect();
    Ok(NormalFormWord::BrauerAbacus {
        n,
        d: x.d(),
        prefix,
        s: permutation_word(&f),
        k,
        s_prime: permutation_word(&f2),
        suffix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::MonoidFamily;
    use crate::word::parse_word;

    #[test]
    fn example_word_is_reproduced() {
        // the same element as the abacus Jones example, read in the Brauer monoid
        let fam = MonoidFamily::by_key("brdn", 4, 5).unwrap();
        let w = parse_word("o2 t2 t1 t3 t2 t4 o1^2 o4").unwrap();
        let x = fam.evaluate_word(&w).unwrap().0;
        let nf = brauer_nf(&x).unwrap();
        assert_eq!(nf.to_string(), "o2 o5^2 s3 s2 t1 t3 s4 s3 s2 s1 o4");
        assert_eq!(nf.evaluate().unwrap(), x);
    }

    #[test]
    fn permutations_have_no_tangles() {
        let fam = MonoidFamily::by_key("brdn", 1, 3).unwrap();
        let x = fam.evaluate_word(&parse_word("s1 s2").unwrap()).unwrap().0;
        let nf = brauer_nf(&x).unwrap();
        assert!(matches!(nf, NormalFormWord::BrauerAbacus { k: 0, .. }));
        assert_eq!(nf.tangle_count(), 0);
        assert_eq!(nf.evaluate().unwrap(), x);
    }
}
