//! Generator symbols and the word grammar `t1 s2 o3^2 r1 p2 q1 w3 e1,3 f2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{FramoidError, Result};

/// A generator symbol with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenSymbol {
    /// tangle on strands i, i+1
    T(usize),
    /// crossing of strands i, i+1
    S(usize),
    /// bead generator on strand i with an exponent
    O(usize, u32),
    /// strand i broken into two free points
    R(usize),
    /// strands 1..=i broken
    P(usize),
    /// tie between strands i < j
    E(usize, usize),
    /// tangle with its two brackets tied
    F(usize),
    /// broken strand with its two free points tied
    Q(usize),
    /// strands 1..=i broken, the two points of strand i tied
    W(usize),
}

pub type Word = Vec<GenSymbol>;

impl GenSymbol {
    pub fn e(i: usize) -> GenSymbol {
        GenSymbol::E(i, i + 1)
    }

    pub fn o(i: usize) -> GenSymbol {
        GenSymbol::O(i, 1)
    }

    pub fn is_tie_kind(self) -> bool {
        matches!(
            self,
            GenSymbol::E(..) | GenSymbol::F(_) | GenSymbol::Q(_) | GenSymbol::W(_)
        )
    }

    pub fn is_bead(self) -> bool {
        matches!(self, GenSymbol::O(..))
    }

    pub fn check_range(self, n: usize) -> Result<()> {
        let ok = match self {
            GenSymbol::T(i) | GenSymbol::S(i) | GenSymbol::F(i) => i >= 1 && i < n,
            GenSymbol::O(i, _)
            | GenSymbol::R(i)
            | GenSymbol::P(i)
            | GenSymbol::Q(i)
            | GenSymbol::W(i) => i >= 1 && i <= n,
            GenSymbol::E(i, j) => i >= 1 && i < j && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(FramoidError::IndexOutOfRange {
                symbol: self.to_string(),
                n,
            })
        }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenSymbol::T(i) => write!(f, "t{i}"),
            GenSymbol::S(i) => write!(f, "s{i}"),
            GenSymbol::O(i, 1) => write!(f, "o{i}"),
            GenSymbol::O(i, k) => write!(f, "o{i}^{k}"),
            GenSymbol::R(i) => write!(f, "r{i}"),
            GenSymbol::P(i) => write!(f, "p{i}"),
            GenSymbol::E(i, j) => write!(f, "e{i},{j}"),
            GenSymbol::F(i) => write!(f, "f{i}"),
            GenSymbol::Q(i) => write!(f, "q{i}"),
            GenSymbol::W(i) => write!(f, "w{i}"),
        }
    }
}

impl FromStr for GenSymbol {
    type Err = FramoidError;

    fn from_str(tok: &str) -> Result<GenSymbol> {
        let bad = || FramoidError::Parse(format!("bad generator token `{tok}`"));
        let mut chars = tok.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let sym = match head {
            't' => GenSymbol::T(num(rest)?),
            's' => GenSymbol::S(num(rest)?),
            'r' => GenSymbol::R(num(rest)?),
            'p' => GenSymbol::P(num(rest)?),
            'f' => GenSymbol::F(num(rest)?),
            'q' => GenSymbol::Q(num(rest)?),
            'w' => GenSymbol::W(num(rest)?),
            'o' | 'z' => match rest.split_once('^') {
                Some((i, k)) => GenSymbol::O(num(i)?, k.parse().map_err(|_| bad())?),
                None => GenSymbol::O(num(rest)?, 1),
            },
            'e' => match rest.split_once(',') {
                Some((i, j)) => GenSymbol::E(num(i)?, num(j)?),
                None => GenSymbol::e(num(rest)?),
            },
            _ => return Err(bad()),
        };
        Ok(sym)
    }
}

pub fn parse_word(src: &str) -> Result<Word> {
    src.split_whitespace().map(str::parse).collect()
}

/// Space-separated rendering; bead symbols with exponent 0 are dropped.
pub fn format_word(word: &[GenSymbol]) -> String {
    word.iter()
        .filter(|s| !matches!(s, GenSymbol::O(_, 0)))
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trip() {
        let w = parse_word("t1 s2 o3^2 r1 p2 q1 w3 e1,3 f2").unwrap();
        assert_eq!(w.len(), 9);
        assert_eq!(w[2], GenSymbol::O(3, 2));
        assert_eq!(w[7], GenSymbol::E(1, 3));
        assert_eq!(format_word(&w), "t1 s2 o3^2 r1 p2 q1 w3 e1,3 f2");
        assert_eq!(parse_word("e2").unwrap(), vec![GenSymbol::E(2, 3)]);
        assert!(parse_word("").unwrap().is_empty());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_word("x1").is_err());
        assert!(parse_word("t").is_err());
        assert!(parse_word("o1^").is_err());
    }

    #[test]
    fn ranges() {
        assert!(GenSymbol::T(3).check_range(3).is_err());
        assert!(GenSymbol::T(2).check_range(3).is_ok());
        assert!(GenSymbol::R(3).check_range(3).is_ok());
        assert!(GenSymbol::E(2, 2).check_range(3).is_err());
        assert!(GenSymbol::E(1, 3).check_range(3).is_ok());
    }
}
