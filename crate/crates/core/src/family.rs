//! Named sequence families with on-demand Hankel determinants and, where
//! one is known, the closed product for them.

use std::fmt;

use crate::bernoulli::{
    bernoulli_seq, closed_h_b2k_half, closed_h_bk, closed_h_odd, even_at_half_seq, even_half_seq,
    odd_half_seq,
};
use crate::error::{Error, Result};
use crate::hankel::Sequence;
use crate::hankel::{hankel_det, hankel_det_field};
use crate::orthopoly::{alpha_uv_seq, final_example_closed};
use crate::poly::{MultiPoly, RatFuncQ};
use crate::qtools::{closed_h_qbernoulli, q_bernoulli_seq};
use crate::qtransforms::{qk2_seq, transform_seq, vandermonde_q_closed, GenericSeq, Transform};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `B_k`.
    Bernoulli,
    /// `B_{2k}((1+x)/2)`.
    BernoulliEvenHalf,
    /// `B_{2k}(1/2)`.
    BernoulliEvenAtHalf,
    /// `B_{2k+1}((1+x)/2)`.
    BernoulliOddHalf,
    /// `q^{C(k,2)}`.
    QBinomK2,
    /// Carlitz q-Bernoulli numbers.
    QBernoulli,
    /// `alpha_k(x)` over generic `alpha_0, alpha_1, ...`.
    AlphaGeneric,
    /// `alpha~_k(x)` over generic `alpha_0, alpha_1, ...`.
    AlphaTildeGeneric,
    /// `alpha~^{u,v}_k(x)`.
    AlphaUv,
}

pub const FAMILIES: [Family; 9] = [
    Family::Bernoulli,
    Family::BernoulliEvenHalf,
    Family::BernoulliEvenAtHalf,
    Family::BernoulliOddHalf,
    Family::QBinomK2,
    Family::QBernoulli,
    Family::AlphaGeneric,
    Family::AlphaTildeGeneric,
    Family::AlphaUv,
];

/// A determinant or closed form: a Laurent polynomial, or a rational
/// function of `q`.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Poly(MultiPoly),
    Ratio(RatFuncQ),
}

impl Value {
    pub fn to_latex(&self) -> String {
        match self {
            Value::Poly(p) => p.to_latex(),
            Value::Ratio(r) => r.to_latex(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => write!(f, "{p}"),
            Value::Ratio(r) => write!(f, "{r}"),
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::BernoulliEvenHalf => "bernoulli-even-half",
            Family::BernoulliEvenAtHalf => "bernoulli-even-at-half",
            Family::BernoulliOddHalf => "bernoulli-odd-half",
            Family::QBinomK2 => "q-binom-k2",
            Family::QBernoulli => "q-bernoulli",
            Family::AlphaGeneric => "alpha-generic",
            Family::AlphaTildeGeneric => "alpha-tilde-generic",
            Family::AlphaUv => "alpha-uv",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        FAMILIES
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    /// Largest order `n` accepted by [`Family::hankel`].
    pub fn max_n(self) -> usize {
        match self {
            Family::Bernoulli | Family::BernoulliEvenAtHalf => 12,
            Family::QBinomK2 => 10,
            Family::BernoulliEvenHalf | Family::BernoulliOddHalf => 6,
            Family::QBernoulli | Family::AlphaUv => 5,
            Family::AlphaGeneric | Family::AlphaTildeGeneric => 3,
        }
    }

    fn guard(self, n: usize) -> Result<()> {
        if n > self.max_n() {
            return Err(Error::CostGuardExceeded {
                what: format!("hankel determinant of {}", self.name()),
                requested: n,
                limit: self.max_n(),
            });
        }
        Ok(())
    }

    fn poly_seq(self, n: usize) -> Option<Sequence<MultiPoly>> {
        Some(match self {
            Family::Bernoulli => bernoulli_seq(),
            Family::BernoulliEvenHalf => even_half_seq(),
            Family::BernoulliEvenAtHalf => even_at_half_seq(),
            Family::BernoulliOddHalf => odd_half_seq(),
            Family::QBinomK2 => qk2_seq(),
            Family::AlphaGeneric => transform_seq(Transform::Plain, &GenericSeq::symbolic(2 * n)),
            Family::AlphaTildeGeneric => {
                transform_seq(Transform::Tilde, &GenericSeq::symbolic(2 * n))
            }
            Family::AlphaUv => Sequence::new("alpha~uv", |k| Ok(alpha_uv_seq(k))),
            Family::QBernoulli => return None,
        })
    }

    /// `H_n` of the family.
    pub fn hankel(self, n: usize) -> Result<Value> {
        self.guard(n)?;
        match self.poly_seq(n) {
            Some(seq) => hankel_det(&seq, n).map(Value::Poly),
            None => hankel_det_field(&q_bernoulli_seq(), n).map(Value::Ratio),
        }
    }

    /// The closed product for `H_n`; families without one are rejected.
    pub fn closed_form(self, n: usize) -> Result<Value> {
        self.guard(n)?;
        let constant = |r| Value::Poly(MultiPoly::constant(r));
        match self {
            Family::Bernoulli => Ok(constant(closed_h_bk(n))),
            Family::BernoulliEvenAtHalf => Ok(constant(closed_h_b2k_half(n))),
            Family::BernoulliOddHalf => Ok(Value::Poly(closed_h_odd(n))),
            Family::QBinomK2 => Ok(Value::Poly(vandermonde_q_closed(n, 3))),
            Family::QBernoulli => closed_h_qbernoulli(n).map(Value::Ratio),
            Family::AlphaUv => Ok(Value::Poly(final_example_closed(n))),
            Family::BernoulliEvenHalf | Family::AlphaGeneric | Family::AlphaTildeGeneric => Err(
                Error::DomainError(format!("no closed form is known for {}", self.name())),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn small_determinants() {
        assert_eq!(Family::Bernoulli.hankel(1).unwrap().to_string(), "-1/12");
        assert_eq!(Family::QBinomK2.hankel(1).unwrap().to_string(), "q - 1");
        assert_eq!(
            Family::AlphaUv.hankel(1).unwrap(),
            Value::Poly(parse_poly("v*(u*v-x)*(1-u)*(1-q)").unwrap())
        );
    }

    #[test]
    fn names_round_trip() {
        for f in FAMILIES {
            assert_eq!(Family::parse(f.name()).unwrap(), f);
        }
        assert_eq!(
            Family::parse("fibonacci"),
            Err(Error::UnknownFamily("fibonacci".into()))
        );
    }

    #[test]
    fn closed_forms_agree_with_determinants() {
        for f in FAMILIES {
            for n in 0..=2 {
                if let Ok(c) = f.closed_form(n) {
                    assert_eq!(f.hankel(n).unwrap(), c, "{} n={n}", f.name());
                }
            }
        }
        assert!(Family::AlphaGeneric.closed_form(1).is_err());
    }

    #[test]
    fn cost_guard() {
        assert!(matches!(
            Family::AlphaGeneric.hankel(4),
            Err(Error::CostGuardExceeded {
                requested: 4,
                limit: 3,
                ..
            })
        ));
    }
}
