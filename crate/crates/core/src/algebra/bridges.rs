//! Bridge elements: averages of generators conjugated by beads.

use num_rational::BigRational;
use num_traits::One;

use super::element::{AlgebraElement, Ambient};
use super::poly::{rational, Poly, Var};
use crate::error::Result;
use crate::word::GenSymbol;

fn bead(i: usize, k: u32) -> GenSymbol {
    GenSymbol::O(i, k)
}

fn inverse(k: u32, d: u32) -> u32 {
    (d - k % d) % d
}

/// `(1/d) Σ_k c_k · word_k`
fn average(
    amb: Ambient,
    coeff: impl Fn(u32) -> Poly,
    word: impl Fn(u32) -> Vec<GenSymbol>,
) -> Result<AlgebraElement> {
    let d = amb.d();
    let mut acc = AlgebraElement::zero(amb);
    for k in 0..d {
        acc = acc.add(&AlgebraElement::word(amb, &word(k))?.scale(&coeff(k)))?;
    }
    Ok(acc.scale(&Poly::constant(rational(1, d as i64))))
}

fn unit(_: u32) -> Poly {
    Poly::one()
}

/// `ē_{i,j} = (1/d) Σ z_i^k z_j^{-k}`
pub fn bridge_e(i: usize, j: usize, amb: Ambient) -> Result<AlgebraElement> {
    let d = amb.d();
    average(amb, unit, |k| vec![bead(i, k), bead(j, inverse(k, d))])
}

/// `f̄_i = (1/d) Σ z_i^k t_i z_i^{-k}`
pub fn bridge_f(i: usize, amb: Ambient) -> Result<AlgebraElement> {
    let d = amb.d();
    average(amb, unit, |k| vec![bead(i, k), GenSymbol::T(i), bead(i, inverse(k, d))])
}

/// `q̄_i = (1/d) Σ z_i^k r_i z_i^{-k}`
pub fn bridge_q(i: usize, amb: Ambient) -> Result<AlgebraElement> {
    let d = amb.d();
    average(amb, unit, |k| vec![bead(i, k), GenSymbol::R(i), bead(i, inverse(k, d))])
}

/// `w̄_i^{(j,h)} = (1/d) Σ z_j^k p_i z_h^{-k}`, for j, h <= i
pub fn bridge_w(i: usize, j: usize, h: usize, amb: Ambient) -> Result<AlgebraElement> {
    let d = amb.d();
    average(amb, unit, |k| vec![bead(j, k), GenSymbol::P(i), bead(h, inverse(k, d))])
}

/// `Z_i = (1/d) Σ α_k z_i^{-k}` with α_0 = 1.
pub fn cap_z(i: usize, amb: Ambient) -> Result<AlgebraElement> {
    let d = amb.d();
    average(amb, alpha, |k| vec![bead(i, inverse(k, d))])
}

/// `Z_i` with every α_k = 1, the form that appears when loops carry no weight.
pub fn cap_z_unit(i: usize, amb: Ambient) -> Result<AlgebraElement> {
    let d = amb.d();
    average(amb, unit, |k| vec![bead(i, inverse(k, d))])
}

fn alpha(k: u32) -> Poly {
    if k == 0 {
        Poly::constant(BigRational::one())
    } else {
        Poly::var(Var::Alpha(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::element::{LoopPolicy, Specialization};
    use crate::word::parse_word;

    fn w(amb: Ambient, s: &str) -> AlgebraElement {
        AlgebraElement::word(amb, &parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn e_bar_expansion() {
        let amb = Ambient::new("sdn", 2, 3, LoopPolicy::Neglect).unwrap();
        let e = bridge_e(1, 2, amb).unwrap();
        let half = Poly::constant(rational(1, 2));
        let expect = w(amb, "").add(&w(amb, "o1 o2")).unwrap().scale(&half);
        assert_eq!(e, expect);
        assert_eq!(e.mul(&e).unwrap(), e);
        let z1 = w(amb, "o1");
        let z2 = w(amb, "o2");
        assert_eq!(z1.mul(&e).unwrap(), z2.mul(&e).unwrap());
    }

    #[test]
    fn z_cap_at_unit_alpha() {
        let amb = Ambient::new("jdn", 2, 3, LoopPolicy::Alpha).unwrap();
        let z = cap_z(1, amb).unwrap();
        let map = Specialization::deframe(2);
        let mut map_keep = map.clone();
        map_keep.erase_beads = false;
        let half = Poly::constant(rational(1, 2));
        let expect = w(amb, "").add(&w(amb, "o1")).unwrap().scale(&half);
        assert_eq!(z.specialize(&map_keep, amb).unwrap(), expect);
        let jn = Ambient::new("jdn", 1, 3, LoopPolicy::Neglect).unwrap();
        assert_eq!(z.specialize(&map, jn).unwrap(), AlgebraElement::one(jn));
    }

    #[test]
    fn f_bar_square_needs_z() {
        let amb = Ambient::new("jdn", 3, 3, LoopPolicy::Alpha).unwrap();
        let f = bridge_f(1, amb).unwrap();
        let ff = f.mul(&f).unwrap();
        assert_eq!(ff, f.mul(&cap_z(1, amb).unwrap()).unwrap());
        assert_ne!(ff, f);
        let jn = Ambient::new("jdn", 1, 3, LoopPolicy::Neglect).unwrap();
        let t1 = w(jn, "t1");
        assert_eq!(f.specialize(&Specialization::deframe(3), jn).unwrap(), t1);
    }

    #[test]
    fn bead_transport() {
        let amb = Ambient::new("jdn", 3, 3, LoopPolicy::Alpha).unwrap();
        let f = bridge_f(1, amb).unwrap();
        let (z1, z2) = (w(amb, "o1"), w(amb, "o2"));
        let a = z1.mul(&f).unwrap();
        assert_eq!(a, z2.mul(&f).unwrap());
        assert_eq!(a, f.mul(&z1).unwrap());
        assert_eq!(a, f.mul(&z2).unwrap());
    }
}
