//! Monoid algebras over Laurent polynomial coefficients.

pub mod bridges;
pub mod element;
pub mod poly;

pub use bridges::{bridge_e, bridge_f, bridge_q, bridge_w, cap_z, cap_z_unit};
pub use element::{AlgebraElement, Ambient, LoopPolicy, Specialization};
pub use poly::{rational, Monomial, Poly, Var};
