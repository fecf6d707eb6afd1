//! Goldbach summatory functions, explicit bound evaluation and empirical
//! verification of the zero-sum and prime-sum lemmas that feed them.
//!
//! * [`arith`]: von Mangoldt sieve, factorization, Dirichlet characters,
//!   singular series and constants.
//! * [`goldbach`]: G(n), g(n), S(x) and their congruence and character
//!   twisted forms.
//! * [`zeros`]: zeta-zero tables, counts, zero sums and the truncated
//!   explicit formula.
//! * [`bounds`]: high-precision evaluation of every explicit constant, the
//!   bound functions f1..f8 and the theorem, proposition and threshold forms.
//! * [`verify`]: the check registry and report writer.

pub mod arith;
pub mod bounds;
pub mod error;
pub mod goldbach;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
