use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Named indeterminates, in registry order. Registry position fixes the
/// monomial order; the generic sequence symbols `alpha_0, alpha_1, ...`
/// follow all named ones, ordered by index.
const NAMED: [&str; 12] = ["q", "x", "u", "v", "a", "b", "c", "w", "s", "t", "y", "z"];

/// An indeterminate of the polynomial ring, identified by registry position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u16);

impl Symbol {
    pub const Q: Symbol = Symbol(0);
    pub const X: Symbol = Symbol(1);
    pub const U: Symbol = Symbol(2);
    pub const V: Symbol = Symbol(3);
    pub const A: Symbol = Symbol(4);
    pub const B: Symbol = Symbol(5);
    pub const C: Symbol = Symbol(6);
    pub const W: Symbol = Symbol(7);
    pub const S: Symbol = Symbol(8);
    pub const T: Symbol = Symbol(9);
    pub const Y: Symbol = Symbol(10);
    pub const Z: Symbol = Symbol(11);

    /// The generic sequence symbol `alpha_k`.
    pub fn alpha(k: usize) -> Symbol {
        Symbol((NAMED.len() + k) as u16)
    }

    /// `Some(k)` when this is `alpha_k`.
    pub fn alpha_index(self) -> Option<usize> {
        (self.0 as usize).checked_sub(NAMED.len())
    }

    pub fn index(self) -> u16 {
        self.0
    }

    pub fn name(self) -> String {
        match self.alpha_index() {
            None => NAMED[self.0 as usize].to_string(),
            Some(k) => format!("alpha_{k}"),
        }
    }

    pub fn latex(self) -> String {
        match self.alpha_index() {
            None => NAMED[self.0 as usize].to_string(),
            Some(k) => format!("\\alpha_{{{k}}}"),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(pos) = NAMED.iter().position(|n| *n == s) {
            return Ok(Symbol(pos as u16));
        }
        if let Some(idx) = s.strip_prefix("alpha_") {
            if !idx.is_empty() && idx.bytes().all(|b| b.is_ascii_digit()) && idx.len() < 5 {
                if let Ok(k) = idx.parse::<usize>() {
                    return Ok(Symbol::alpha(k));
                }
            }
        }
        Err(Error::UnknownSymbol(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in NAMED {
            assert_eq!(name.parse::<Symbol>().unwrap().name(), name);
        }
        assert_eq!("alpha_7".parse::<Symbol>().unwrap(), Symbol::alpha(7));
        assert_eq!(Symbol::alpha(12).name(), "alpha_12");
        assert!("beta".parse::<Symbol>().is_err());
        assert!("alpha_".parse::<Symbol>().is_err());
    }

    #[test]
    fn registry_order() {
        assert!(Symbol::Q < Symbol::X);
        assert!(Symbol::Z < Symbol::alpha(0));
        assert!(Symbol::alpha(2) < Symbol::alpha(10));
    }
}
