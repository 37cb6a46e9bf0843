//! Normal forms for abacus Jones, Brauer and rook diagrams, plus a brute-force
//! minimal-length oracle.

mod brauer;
mod jones;
mod oracle;
mod rook;

use std::fmt;

use crate::diagram::{Diagram, LoopRecord};
use crate::error::Result;
use crate::family::MonoidFamily;
use crate::word::{format_word, GenSymbol, Word};

pub use brauer::brauer_nf;
pub use jones::{gaps, jones_nf, vertical_lines};
pub use oracle::min_length_oracle;
pub use rook::{rook_nf, RookVariant};

/// (position, exponent) pairs; zero exponents are kept here and dropped from words.
pub type BeadList = Vec<(usize, u32)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFormWord {
    JonesAbacus {
        n: usize,
        d: u32,
        gap_beads: BeadList,
        top_beads: BeadList,
        /// (i, j) pairs of the monomials `t_i t_{i-1} .. t_j`
        monomials: Vec<(usize, usize)>,
        bottom_beads: BeadList,
    },
    BrauerAbacus {
        n: usize,
        d: u32,
        prefix: BeadList,
        s: Word,
        k: usize,
        s_prime: Word,
        suffix: BeadList,
    },
    RookFirst {
        n: usize,
        d: u32,
        prefix: BeadList,
        r_list: Vec<usize>,
        s: Word,
    },
    RookPrime {
        n: usize,
        d: u32,
        prefix: BeadList,
        r_list: Vec<usize>,
        s: Word,
        suffix: BeadList,
    },
}

fn bead_word(list: &BeadList) -> Word {
    list.iter().map(|&(i, k)| GenSymbol::O(i, k)).collect()
}

impl NormalFormWord {
    pub fn word(&self) -> Word {
        let mut w = Word::new();
        match self {
            NormalFormWord::JonesAbacus {
                gap_beads,
                top_beads,
                monomials,
                bottom_beads,
                ..
            } => {
                w.extend(bead_word(gap_beads));
                w.extend(bead_word(top_beads));
                for &(i, j) in monomials {
                    w.extend((j..=i).rev().map(GenSymbol::T));
                }
                w.extend(bead_word(bottom_beads));
            }
            NormalFormWord::BrauerAbacus {
                prefix,
                s,
                k,
                s_prime,
                suffix,
                ..
            } => {
                w.extend(bead_word(prefix));
                w.extend(s.iter().copied());
                w.extend((1..=*k).map(|m| GenSymbol::T(2 * m - 1)));
                w.extend(s_prime.iter().copied());
                w.extend(bead_word(suffix));
            }
            NormalFormWord::RookFirst { prefix, r_list, s, .. } => {
                w.extend(bead_word(prefix));
                w.extend(r_list.iter().map(|&i| GenSymbol::R(i)));
                w.extend(s.iter().copied());
            }
            NormalFormWord::RookPrime {
                prefix,
                r_list,
                s,
                suffix,
                ..
            } => {
                w.extend(bead_word(prefix));
                w.extend(r_list.iter().map(|&i| GenSymbol::R(i)));
                w.extend(s.iter().copied());
                w.extend(bead_word(suffix));
            }
        }
        w.retain(|g| !matches!(g, GenSymbol::O(_, 0)));
        w
    }

    /// Family in which the word is evaluated.
    pub fn family(&self) -> Result<MonoidFamily> {
        let (key, n, d) = match *self {
            NormalFormWord::JonesAbacus { n, d, .. } => ("jdn", n, d),
            NormalFormWord::BrauerAbacus { n, d, .. } => ("brdn", n, d),
            NormalFormWord::RookFirst { n, d, .. } => ("rdn", n, d),
            NormalFormWord::RookPrime { n, d, .. } => ("rprimedn", n, d),
        };
        MonoidFamily::by_key(key, d, n)
    }

    pub fn evaluate(&self) -> Result<Diagram> {
        evaluate_word(&self.word(), &self.family()?).map(|(x, _)| x)
    }

    /// Number of tangle generators in the word.
    pub fn tangle_count(&self) -> usize {
        self.word()
            .iter()
            .filter(|g| matches!(g, GenSymbol::T(_)))
            .count()
    }
}

impl fmt::Display for NormalFormWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word()))
    }
}

/// The normal form of `x` for the kind of family that `fam` belongs to.
pub fn normal_form(fam: &MonoidFamily, x: &Diagram) -> Result<NormalFormWord> {
    match fam.key() {
        "jn" | "jdn" => jones_nf(x),
        "brn" | "brdn" => brauer_nf(x),
        "rn" | "rdn" => rook_nf(x, RookVariant::First),
        "rprimedn" => rook_nf(x, RookVariant::Prime),
        key => Err(crate::error::FramoidError::InvalidParameters(format!(
            "no normal form for {key}"
        ))),
    }
}

pub fn evaluate_word(word: &[GenSymbol], fam: &MonoidFamily) -> Result<(Diagram, LoopRecord)> {
    fam.evaluate_word(word)
}

/// A reduced word for the permutation sending top point `p` to bottom point `f[p-1]`.
///
/// The inverse arrangement is bubble sorted with left-to-right passes and the recorded
/// adjacent swaps are emitted in reverse.
pub fn permutation_word(f: &[usize]) -> Word {
    let n = f.len();
    let mut arr = vec![0; n];
    for (p, &q) in f.iter().enumerate() {
        arr[q - 1] = p + 1;
    }
    let mut swaps = Vec::new();
    loop {
        let mut changed = false;
        for i in 1..n {
            if arr[i - 1] > arr[i] {
                arr.swap(i - 1, i);
                swaps.push(i);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    swaps.into_iter().rev().map(GenSymbol::S).collect()
}

/// Partner of every point in a diagram whose blocks have at most two points; `None`
/// marks a singleton. Indexed by `Pt::index`.
pub(crate) fn partners(x: &Diagram) -> Vec<Option<usize>> {
    let n = x.n();
    let mut out = vec![None; 2 * n];
    for pts in x.blocks() {
        if let [a, b] = pts[..] {
            out[a.index(n)] = Some(b.index(n));
            out[b.index(n)] = Some(a.index(n));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn permutation_words_match_known_examples() {
        assert_eq!(format_word(&permutation_word(&[1, 3, 4, 2, 5])), "s3 s2");
        assert_eq!(format_word(&permutation_word(&[2, 3, 4, 5, 1])), "s4 s3 s2 s1");
        assert!(permutation_word(&[1, 2, 3]).is_empty());
    }

    #[test]
    fn permutation_words_evaluate_back() {
        let fam = MonoidFamily::by_key("sdn", 1, 4).unwrap();
        for x in crate::closure::closure(&fam, 100).unwrap() {
            let f: Vec<usize> = (1..=4)
                .map(|p| {
                    let b = x.block_of(crate::Pt::Top(p));
                    x.blocks()[b][1].position()
                })
                .collect();
            let w = permutation_word(&f);
            assert_eq!(fam.evaluate_word(&w).unwrap().0, x);
            // reduced: length equals the number of inversions
            let inv = (0..4)
                .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
                .filter(|&(a, b)| f[a] > f[b])
                .count();
            assert_eq!(w.len(), inv);
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let fam = MonoidFamily::by_key("jdn", 2, 3).unwrap();
        let (x, l) = evaluate_word(&parse_word("").unwrap(), &fam).unwrap();
        assert_eq!(x, fam.identity());
        assert!(l.is_empty());
    }
}
