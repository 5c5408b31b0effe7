use std::fmt;

use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use super::symbol::Symbol;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense univariate polynomial in `q`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly(Vec<Rational>);

impl UniPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub(crate) fn from_multi(p: &MultiPoly) -> Result<Self> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in p.terms() {
            let mut e = 0i32;
            for (s, k) in m.iter() {
                if s != Symbol::Q {
                    return Err(Error::NotUnivariate(p.to_string()));
                }
                e = k;
            }
            if e < 0 {
                return Err(Error::NotPolynomial(p.to_string()));
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Ok(UniPoly(coeffs).trim())
    }

    pub(crate) fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(Symbol::Q, e as i32), c.clone())),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    fn monic(&self) -> Result<Self> {
        let inv = self.lead().inv()?;
        Ok(UniPoly(self.0.iter().map(|c| c * &inv).collect()))
    }

    fn rem(&self, d: &Self) -> Result<Self> {
        let mut r = self.0.clone();
        let dl = d.0.len();
        let inv = d.lead().inv()?;
        while r.len() >= dl {
            let top = r.last().expect("nonempty").clone();
            if top.is_zero() {
                r.pop();
                continue;
            }
            let f = &top * &inv;
            let shift = r.len() - dl;
            for (i, dc) in d.0.iter().enumerate() {
                r[shift + i] -= &(dc * &f);
            }
            r.pop();
        }
        Ok(UniPoly(r).trim())
    }

    /// Monic gcd by the Euclidean algorithm, normalising each remainder.
    pub(crate) fn gcd(a: &Self, b: &Self) -> Result<Self> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = if r.is_zero() { r } else { r.monic()? };
        }
        if x.is_zero() {
            Ok(x)
        } else {
            x.monic()
        }
    }
}

/// Univariate gcd of two polynomials in `q`, made monic.
pub fn gcd_q(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    Ok(UniPoly::gcd(&UniPoly::from_multi(a)?, &UniPoly::from_multi(b)?)?.to_multi())
}

/// Monic least common multiple of two polynomials in `q`.
pub fn lcm_q(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    let g = gcd_q(a, b)?;
    let l = a.div_exact(&g)?.mul(b);
    let lc = l.leading_term().ok_or(Error::ZeroPolynomial)?.1.inv()?;
    Ok(l.scale(&lc))
}

/// Reduced quotient of two polynomials in `q` with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFuncQ {
    /// Normalises `num / den`: clears negative powers of `q`, cancels the
    /// gcd and makes the denominator monic.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        for p in [&num, &den] {
            if p.symbols().iter().any(|s| *s != Symbol::Q) {
                return Err(Error::NotUnivariate(p.to_string()));
            }
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let low = num.val_in(Symbol::Q)?.min(den.val_in(Symbol::Q)?).min(0);
        let (num, den) = if low < 0 {
            let m = Monomial::var(Symbol::Q, -low);
            (
                num.mul_term(&m, &Rational::one()),
                den.mul_term(&m, &Rational::one()),
            )
        } else {
            (num, den)
        };
        let (n, d) = (UniPoly::from_multi(&num)?, UniPoly::from_multi(&den)?);
        let g = UniPoly::gcd(&n, &d)?.to_multi();
        let (num, den) = (num.div_exact(&g)?, den.div_exact(&g)?);
        let lc = den.leading_term().expect("nonzero").1.inv()?;
        Ok(RatFuncQ {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        RatFuncQ {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one()).expect("constant")
    }

    pub fn from_poly(p: MultiPoly) -> Result<Self> {
        Self::new(p, MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFuncQ {
            num: MultiPoly::constant(c),
            den: MultiPoly::one(),
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFuncQ {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inv()?)
    }

    /// Value at a rational `q`. A vanishing reduced denominator is an error;
    /// no limit is attempted.
    pub fn eval(&self, q: &Rational) -> Result<Rational> {
        let d = self.den.eval_all(&[(Symbol::Q, q.clone())])?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        self.num
            .eval_all(&[(Symbol::Q, q.clone())])?
            .checked_div(&d)
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.to_latex(),
                self.den.to_latex()
            )
        }
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
