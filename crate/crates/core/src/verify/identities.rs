//! Exact identity checks between algebra elements.

use crate::algebra::{
    bridge_e, bridge_f, bridge_q, bridge_w, cap_z, cap_z_unit, AlgebraElement, Ambient,
};
use crate::error::Result;
use crate::word::parse_word;

/// A named chain `x_1 = x_2 = ...`, built lazily.
pub struct Check<'a> {
    pub name: String,
    pub sides: Box<dyn FnOnce() -> Result<Vec<AlgebraElement>> + Send + 'a>,
}

impl<'a> Check<'a> {
    pub fn new(
        name: impl Into<String>,
        sides: impl FnOnce() -> Result<Vec<AlgebraElement>> + Send + 'a,
    ) -> Self {
        Check {
            name: name.into(),
            sides: Box::new(sides),
        }
    }

    pub fn run(self) -> std::result::Result<(), String> {
        let sides = (self.sides)().map_err(|e| format!("evaluation error: {e}"))?;
        all_equal(&sides)
    }
}

pub fn all_equal(sides: &[AlgebraElement]) -> std::result::Result<(), String> {
    for (k, pair) in sides.windows(2).enumerate() {
        if pair[0] != pair[1] {
            return Err(format!(
                "side {} = {} ; side {} = {}",
                k + 1,
                pair[0],
                k + 2,
                pair[1]
            ));
        }
    }
    Ok(())
}

/// Builders for generator words and bridge elements in one ambient algebra.
#[derive(Clone, Copy)]
pub struct Ctx {
    pub amb: Ambient,
}

impl Ctx {
    pub fn w(&self, src: &str) -> Result<AlgebraElement> {
        AlgebraElement::word(self.amb, &parse_word(src)?)
    }

    pub fn e(&self, i: usize) -> Result<AlgebraElement> {
        bridge_e(i, i + 1, self.amb)
    }

    pub fn eij(&self, i: usize, j: usize) -> Result<AlgebraElement> {
        bridge_e(i, j, self.amb)
    }

    pub fn f(&self, i: usize) -> Result<AlgebraElement> {
        bridge_f(i, self.amb)
    }

    pub fn q(&self, i: usize) -> Result<AlgebraElement> {
        bridge_q(i, self.amb)
    }

    pub fn wbar(&self, i: usize, j: usize, h: usize) -> Result<AlgebraElement> {
        bridge_w(i, j, h, self.amb)
    }

    /// `Z_i` with loop weights α_k
    pub fn z(&self, i: usize) -> Result<AlgebraElement> {
        cap_z(i, self.amb)
    }

    /// `Z_i` with α_k = 1
    pub fn z1(&self, i: usize) -> Result<AlgebraElement> {
        cap_z_unit(i, self.amb)
    }
}

impl Ctx {
    /// Evaluates a product written with generator tokens (`t1 s2 o3^2 r1 p2`) and
    /// bridge tokens: `E1` = ē_1, `E1,3` = ē_{1,3}, `F1` = f̄_1, `Q1` = q̄_1, `W3` = w̄_3,
    /// `W3:1,2` = w̄_3^{(1,2)}, `Z1` = Z_1, `U1` = Z_1 at α = 1. The empty string is 1.
    pub fn x(&self, src: &str) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one(self.amb);
        let mut pending = String::new();
        let flush = |acc: &mut AlgebraElement, pending: &mut String| -> Result<()> {
            if !pending.is_empty() {
                *acc = acc.mul(&self.w(pending)?)?;
                pending.clear();
            }
            Ok(())
        };
        for tok in src.split_whitespace() {
            let head = tok.chars().next().unwrap();
            if head.is_ascii_lowercase() {
                pending.push(' ');
                pending.push_str(tok);
                continue;
            }
            flush(&mut acc, &mut pending)?;
            let bad = || crate::error::FramoidError::Parse(format!("bad bridge token `{tok}`"));
            let rest = &tok[1..];
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
            let factor = match head {
                'E' => match rest.split_once(',') {
                    Some((i, j)) => self.eij(num(i)?, num(j)?)?,
                    None => self.e(num(rest)?)?,
                },
                'F' => self.f(num(rest)?)?,
                'Q' => self.q(num(rest)?)?,
                'W' => match rest.split_once(':') {
                    Some((i, jh)) => {
                        let (j, h) = jh.split_once(',').ok_or_else(bad)?;
                        self.wbar(num(i)?, num(j)?, num(h)?)?
                    }
                    None => {
                        let i = num(rest)?;
                        self.wbar(i, i, i)?
                    }
                },
                'Z' => self.z(num(rest)?)?,
                'U' => self.z1(num(rest)?)?,
                _ => return Err(bad()),
            };
            acc = acc.mul(&factor)?;
        }
        flush(&mut acc, &mut pending)?;
        Ok(acc)
    }
}

impl Check<'static> {
    /// `sides[0] = sides[1] = ...`, each side in the notation of [`Ctx::x`].
    pub fn chain(ctx: Ctx, sides: Vec<String>) -> Self {
        let name = sides
            .iter()
            .map(|s| if s.is_empty() { "1".to_string() } else { s.clone() })
            .collect::<Vec<_>>()
            .join(" = ");
        Check::new(name, move || sides.iter().map(|s| ctx.x(s)).collect())
    }
}
