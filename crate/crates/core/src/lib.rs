//! Exact Hankel determinants over Laurent polynomial rings.
//!
//! The crate computes Hankel determinants of Bernoulli-type and
//! q-binomial-transformed sequences exactly and checks the closed forms and
//! leading-coefficient theorems known for them.
//!
//! - [`rational`]: arbitrary-precision integers and rationals.
//! - [`poly`]: sparse Laurent polynomials ([`MultiPoly`]) and reduced
//!   rational functions in `q` ([`RatFuncQ`]).
//! - [`hankel`]: Hankel matrices, Bareiss/Gaussian/cofactor determinants,
//!   the Heilermann product and the scaling lemmas.
//! - [`bernoulli`], [`qtools`], [`qtransforms`], [`orthopoly`]: the
//!   sequence families and their identity checks.
//! - [`family`]: named sequence families for on-demand determinants.
//! - [`suite`] and [`tables`]: the full verification schedule and table
//!   reproduction used by the command-line front end.

pub mod bernoulli;
pub mod error;
pub mod family;
pub mod hankel;
pub mod orthopoly;
pub mod poly;
pub mod qtools;
pub mod qtransforms;
pub mod random;
pub mod rational;
pub mod report;
pub mod ring;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};
pub use poly::{MultiPoly, RatFuncQ, Symbol};
pub use rational::{Integer, Rational};
