use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::symbol::Symbol;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients and no repeated monomials, so equal polynomials have equal
/// representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_int(c))
    }

    pub fn var(sym: Symbol) -> Self {
        Self::monomial(Rational::one(), Monomial::var(sym, 1))
    }

    /// `sym^exp`, negative exponents allowed.
    pub fn var_pow(sym: Symbol, exp: i32) -> Self {
        Self::monomial(Rational::one(), Monomial::var(sym, exp))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: vec![(m, c)],
        }
    }

    /// Canonicalizes an arbitrary term list.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The coefficient of the monomial `1`.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn single_term(&self) -> Option<(&Monomial, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| !m.has_negative())
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.iter().map(|p| p.0))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplication by `c * m`; order is preserved because the monomial
    /// order is compatible with multiplication.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other {
                        -&b[j].1
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MultiPoly { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = other.single_term() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.single_term() {
            return other.mul_term(m, c);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        acc.reserve(large.len() * 2);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Integer power; negative exponents require a single nonzero term.
    pub fn pow_laurent(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        match self.single_term() {
            Some((m, c)) => Ok(Self::monomial(c.pow(k)?, m.pow(k))),
            None if self.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::NotDivisible(format!(
                "negative power of the non-monomial {self}"
            ))),
        }
    }

    /// For each symbol present, the minimum exponent across terms (absent
    /// counts as zero). Dividing by it leaves a polynomial with no monomial
    /// content.
    fn lowest_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.symbols().into_iter().map(|s| {
            let min = self
                .terms
                .iter()
                .map(|(m, _)| m.exponent(s))
                .min()
                .unwrap_or(0);
            (s, min)
        }))
    }

    /// Exact quotient `self / d` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = d.single_term() {
            return Ok(self.mul_term(&m.inv(), &c.inv()?));
        }
        let shift_p = self.lowest_monomial();
        let shift_d = d.lowest_monomial();
        let one = Rational::one();
        let dividend = self.mul_term(&shift_p.inv(), &one);
        let divisor = d.mul_term(&shift_d.inv(), &one);

        let (lead_m, lead_c) = divisor.leading_term().expect("nonzero divisor");
        let lead_inv = lead_c.inv()?;
        let mut rem: BTreeMap<Monomial, Rational> = dividend.terms.into_iter().collect();
        let mut quotient: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((top_m, top_c)) = rem.pop_last() {
            let Some(qm) = top_m.div_poly(lead_m) else {
                return Err(Error::NotDivisible(format!("{self} by {d}")));
            };
            let qc = &top_c * &lead_inv;
            for (dm, dc) in divisor.terms.iter().skip(1) {
                let m = dm.mul(&qm);
                let c = dc * &qc;
                match rem.get_mut(&m) {
                    Some(v) => {
                        *v -= &c;
                        if v.is_zero() {
                            rem.remove(&m);
                        }
                    }
                    None => {
                        rem.insert(m, -c);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        // Quotient terms were produced in strictly descending order.
        let q = MultiPoly { terms: quotient };
        Ok(q.mul_term(&shift_p.mul(&shift_d.inv()), &one))
    }

    /// Replaces `sym` by `val`. Negative powers of `sym` need `val` to be a
    /// single nonzero term.
    pub fn substitute(&self, sym: Symbol, val: &Self) -> Result<Self> {
        let mut groups: BTreeMap<i32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.exponent(sym))
                .or_default()
                .push((m.without(sym), c.clone()));
        }
        if !groups.keys().any(|&e| e != 0) {
            return Ok(self.clone());
        }
        if groups.keys().any(|&e| e < 0) && (val.single_term().is_none()) {
            return Err(Error::NegativeExponentSubstitution { symbol: sym.name() });
        }
        let mut acc = Self::zero();
        for (e, terms) in groups {
            let coeff = Self::from_terms(terms);
            let power = val
                .pow_laurent(e)
                .map_err(|_| Error::NegativeExponentSubstitution { symbol: sym.name() })?;
            acc = acc.add(&coeff.mul(&power));
        }
        Ok(acc)
    }

    /// Substitutes several symbols in sequence.
    pub fn substitute_all(&self, assignments: &[(Symbol, Self)]) -> Result<Self> {
        let mut p = self.clone();
        for (s, v) in assignments {
            p = p.substitute(*s, v)?;
        }
        Ok(p)
    }

    /// Evaluates `sym` at a rational point.
    pub fn eval(&self, sym: Symbol, val: &Rational) -> Result<Self> {
        self.substitute(sym, &Self::constant(val.clone()))
    }

    /// Full evaluation; every symbol of `self` must be assigned.
    pub fn eval_all(&self, point: &[(Symbol, Rational)]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.iter() {
                let x = point
                    .iter()
                    .find(|p| p.0 == s)
                    .ok_or_else(|| Error::UnknownSymbol(s.name()))?;
                v = &v * &x.1.pow(e)?;
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// The coefficient of `sym^k`, a polynomial in the remaining symbols.
    pub fn coeff(&self, sym: Symbol, k: i32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(sym) == k)
                .map(|(m, c)| (m.without(sym), c.clone()))
                .collect(),
        }
        .resorted()
    }

    fn resorted(mut self) -> Self {
        self.terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        self
    }

    /// Maximum exponent of `sym` (0 when absent).
    pub fn degree_in(&self, sym: Symbol) -> Result<i32> {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(sym))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Minimum exponent of `sym` (0 when absent).
    pub fn val_in(&self, sym: Symbol) -> Result<i32> {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(sym))
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Coefficients of `sym^k` for every exponent present, ascending.
    pub fn coefficients_in(&self, sym: Symbol) -> BTreeMap<i32, Self> {
        let mut groups: BTreeMap<i32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.exponent(sym))
                .or_default()
                .push((m.without(sym), c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, ts)| (k, MultiPoly { terms: ts }.resorted()))
            .collect()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let coef = if a.is_integer() {
                a.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            if m.is_one() {
                out.push_str(&coef);
                continue;
            }
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() {
                parts.push(coef);
            }
            for (s, e) in m.iter() {
                if e == 1 {
                    parts.push(s.latex());
                } else {
                    parts.push(format!("{}^{{{}}}", s.latex(), e));
                }
            }
            out.push_str(&parts.join(" "));
        }
        out
    }
}

/// Canonical text: terms in stored order, e.g. `-1/12*x^2 + 1/45`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
                continue;
            }
            let mut first = true;
            if !a.is_one() {
                write!(f, "{a}")?;
                first = false;
            }
            for (s, e) in m.iter() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{s}")?;
                } else {
                    write!(f, "{s}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Symbol> for MultiPoly {
    fn from(s: Symbol) -> Self {
        MultiPoly::var(s)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
