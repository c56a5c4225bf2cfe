//! Graded polynomial arithmetic over the two-element field in
//! Stiefel–Whitney generators `w_i` of degree `i`.
//!
//! A [`SWRing`] fixes which generators exist: the oriented model
//! `Z_2[w_2, ..., w_m]` of `H^*(BSO(m); Z_2)` or the unoriented model
//! `Z_2[w_1, ..., w_m]` of `H^*(BO(m); Z_2)`. Generators above the
//! truncation rank are the zero class, `w_0` is the unit.
//!
//! Coefficients are set-membership bits: a [`Mod2Poly`] is a set of
//! [`Monomial`]s and addition is symmetric difference.

mod basis;
mod binom;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use basis::{basis_of_degree, basis_size};
pub use binom::binom_parity;
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::Mod2Poly;
pub use ring::SWRing;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharClassError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator w{index} is outside the ring range {ring}")]
    GeneratorOutOfRange { index: u32, ring: SWRing },
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: SWRing, right: SWRing },
    #[error("ring {0} is unbounded; a truncation rank is required")]
    UnboundedRing(SWRing),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
}
