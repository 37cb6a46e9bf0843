//! Formal linear combinations of diagrams with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use super::poly::{Monomial, Poly, Var};
use crate::diagram::{Diagram, LoopRecord};
use crate::error::{FramoidError, Result};
use crate::family::MonoidFamily;
use crate::word::GenSymbol;

/// How a closed loop removed by a product turns into a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopPolicy {
    /// every loop contributes 1
    Neglect,
    /// a loop carrying bead residue p contributes alpha_p (alpha_0 = 1)
    Alpha,
    /// every loop contributes x, times y_p for residue p (y_0 = 1)
    Xy,
}

impl LoopPolicy {
    pub fn weight(self, loops: &LoopRecord) -> Poly {
        let mut m = Monomial::one();
        match self {
            LoopPolicy::Neglect => {}
            LoopPolicy::Alpha => {
                for (p, c) in loops.iter() {
                    if p != 0 {
                        m = m.mul(&Monomial::var(Var::Alpha(p), c as i32));
                    }
                }
            }
            LoopPolicy::Xy => {
                m = m.mul(&Monomial::var(Var::X, loops.total() as i32));
                for (p, c) in loops.iter() {
                    if p != 0 {
                        m = m.mul(&Monomial::var(Var::Y(p), c as i32));
                    }
                }
            }
        }
        Poly::term(m, BigRational::one())
    }
}

/// The monoid family whose diagrams span the algebra, and the loop rule.
#[derive(Debug, Clone, Copy)]
pub struct Ambient {
    pub family: MonoidFamily,
    pub loops: LoopPolicy,
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.family.key() == other.family.key()
            && self.family.d == other.family.d
            && self.family.n == other.family.n
            && self.loops == other.loops
    }
}

impl Eq for Ambient {}

impl Ambient {
    pub fn new(key: &str, d: u32, n: usize, loops: LoopPolicy) -> Result<Ambient> {
        Ok(Ambient {
            family: MonoidFamily::by_key(key, d, n)?,
            loops,
        })
    }

    pub fn d(&self) -> u32 {
        self.family.d
    }

    pub fn n(&self) -> usize {
        self.family.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    amb: Ambient,
    terms: BTreeMap<Diagram, Poly>,
}

impl AlgebraElement {
    pub fn zero(amb: Ambient) -> Self {
        AlgebraElement {
            amb,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(amb: Ambient) -> Self {
        Self::from_diagram(amb, amb.family.identity())
    }

    pub fn from_diagram(amb: Ambient, x: Diagram) -> Self {
        Self::term(amb, x, Poly::one())
    }

    pub fn term(amb: Ambient, x: Diagram, c: Poly) -> Self {
        let mut e = Self::zero(amb);
        e.add_term(x, c);
        e
    }

    pub fn scalar(amb: Ambient, c: Poly) -> Self {
        Self::term(amb, amb.family.identity(), c)
    }

    /// Product of generators, left to right, with loop weights.
    pub fn word(amb: Ambient, word: &[GenSymbol]) -> Result<Self> {
        let mut acc = amb.family.identity();
        let mut loops = LoopRecord::new();
        for &g in word {
            let (next, l) = amb.family.compose(&acc, &amb.family.realize(g)?)?;
            loops.merge(&l);
            acc = next;
        }
        Ok(Self::term(amb, acc, amb.loops.weight(&loops)))
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Poly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x: &Diagram) -> Poly {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, x: Diagram, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&x);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.amb != other.amb {
            return Err(FramoidError::Mismatch(format!(
                "algebra ambients differ: {:?} vs {:?}",
                self.amb, other.amb
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Poly::int(-1)))
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.amb);
        for (x, k) in &self.terms {
            out.add_term(x.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let policy = self.amb.family.policy();
        let mut out = Self::zero(self.amb);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut loops = LoopRecord::new();
                let c = a.compose_raw(b, policy, &mut |r| loops.add(r));
                let w = self.amb.loops.weight(&loops);
                out.add_term(c, &(ca * cb) * &w);
            }
        }
        Ok(out)
    }

    /// Product of several factors, left to right.
    pub fn product(factors: &[&Self]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| FramoidError::InvalidParameters("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| acc.mul(f))
    }

    /// Maps every coefficient and diagram into `target`.
    pub fn specialize(&self, map: &Specialization, target: Ambient) -> Result<Self> {
        let mut out = Self::zero(target);
        for (x, c) in &self.terms {
            let mut y = x.clone();
            if map.erase_beads {
                y = y.erase_beads();
            }
            if map.erase_ties {
                y = y.erase_ties();
            }
            if y.d() != target.d() {
                y = y.with_modulus(target.d())?;
            }
            out.add_term(y, c.substitute(&map.values));
        }
        Ok(out)
    }
}

/// Variable values plus the two diagram maps: bead erasure (z -> 1) and tie erasure.
#[derive(Debug, Clone, Default)]
pub struct Specialization {
    pub values: BTreeMap<Var, BigRational>,
    pub erase_beads: bool,
    pub erase_ties: bool,
}

impl Specialization {
    /// All loop weights alpha_1..alpha_{d-1} set to 1, beads erased.
    pub fn deframe(d: u32) -> Self {
        Specialization {
            values: (1..d).map(|k| (Var::Alpha(k), BigRational::one())).collect(),
            erase_beads: true,
            erase_ties: false,
        }
    }

    pub fn set(mut self, v: Var, value: BigRational) -> Self {
        self.values.insert(v, value);
        self
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| format!("({c}) * [{x}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(amb: Ambient, s: &str) -> AlgebraElement {
        AlgebraElement::word(amb, &parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn loop_policies() {
        for (policy, expect) in [
            (LoopPolicy::Xy, "x*y1"),
            (LoopPolicy::Alpha, "a1"),
            (LoopPolicy::Neglect, "1"),
        ] {
            let amb = Ambient::new("jdn", 2, 2, policy).unwrap();
            let p = w(amb, "t1").mul(&w(amb, "o1 t1")).unwrap();
            let t1 = amb.family.realize(GenSymbol::T(1)).unwrap();
            assert_eq!(p.num_terms(), 1);
            assert_eq!(p.coefficient(&t1).to_string(), expect);
        }
        let amb = Ambient::new("jdn", 2, 2, LoopPolicy::Xy).unwrap();
        let p = w(amb, "t1").mul(&w(amb, "t1")).unwrap();
        assert_eq!(p, w(amb, "t1").scale(&Poly::var(Var::X)));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let amb = Ambient::new("brn", 1, 3, LoopPolicy::Neglect).unwrap();
        let t = w(amb, "t1");
        let s = w(amb, "s1");
        let sum = t.add(&s.scale(&Poly::zero())).unwrap();
        assert_eq!(sum, t);
        assert!(t.sub(&t).unwrap().is_zero());
    }

    #[test]
    fn mismatched_ambients() {
        let a = Ambient::new("jdn", 2, 2, LoopPolicy::Xy).unwrap();
        let b = Ambient::new("jdn", 2, 2, LoopPolicy::Alpha).unwrap();
        assert!(w(a, "t1").mul(&w(b, "t1")).is_err());
    }
}
