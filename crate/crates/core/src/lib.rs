//! Exact tools for composition irreducibility of univariate polynomials.
//!
//! The crate builds reducing substitutions `g` that make `f(g(x))` factor,
//! certifies or refutes 2-superirreducibility for binomial quartic families,
//! and checks the weak 2-superirreducibility of the trinomials
//! `x^(2k+1) + 2x + 1`. Every claim it makes carries a witness that is
//! re-verified with exact integer or rational arithmetic.

pub mod certificates;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod factor;
pub mod numfield;
pub mod parse;
pub mod poly;
pub mod search;
pub mod weak;

pub use error::{Error, Result};
pub use factor::{factor_over_integers, factor_over_rationals, is_irreducible_over_rationals, Factorization};
pub use poly::{IntPoly, Integer, RatPoly, Rational};
