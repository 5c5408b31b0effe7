//! The coefficient rings: sparse Laurent polynomials over the rationals and
//! reduced rational functions in `q`.

mod monomial;
mod multipoly;
mod parse;
mod ratfunc;
mod symbol;

pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use parse::parse_poly;
pub use ratfunc::{gcd_q, lcm_q, RatFuncQ};
pub use symbol::Symbol;
