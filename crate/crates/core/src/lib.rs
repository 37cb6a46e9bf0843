//! Framed, tied and partition monoids realized as diagrams, with presentations, normal
//! forms, diagram algebras and verification suites.

pub mod algebra;
pub mod cli;
pub mod closure;
pub mod combinatorics;
pub mod diagram;
pub mod error;
pub mod family;
pub mod normalform;
pub mod verify;
pub mod presentation;
pub mod word;

pub use diagram::{Diagram, LoopRecord, Pt};
pub use error::{FramoidError, Result};
pub use family::{lookup, registry, FamilyStrategy, MonoidFamily};
pub use word::{format_word, parse_word, GenSymbol, Word};
