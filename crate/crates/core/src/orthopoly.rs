//! Terminating basic hypergeometric series, big q-Jacobi recurrences, the
//! moment sequence of the specialized family and the explicit Hankel
//! evaluation it yields.
//!
//! Rational coefficients are never reduced: they are carried as a
//! numerator with an explicit list of denominator factors ([`Cleared`]) and
//! identities are compared after multiplying through by those factors.

use std::fmt;

use crate::error::{Error, Result};
use crate::hankel::{hankel_det, heilermann_det, Sequence};
use crate::poly::{MultiPoly, Symbol};
use crate::qtools::{q_binom, q_pochhammer};
use crate::qtransforms::{alpha_tilde_poly, GenericSeq};
use crate::rational::{binomial, Rational};
use crate::report::VerifyReport;

fn q_pow(e: i64) -> MultiPoly {
    MultiPoly::var_pow(Symbol::Q, e as i32)
}

fn var(s: Symbol) -> MultiPoly {
    MultiPoly::var(s)
}

fn c2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

fn c3(k: usize) -> i64 {
    binomial(k as u32, 3).to_i64().expect("small")
}

fn one_minus(p: &MultiPoly) -> MultiPoly {
    MultiPoly::one().sub(p)
}

/// `num / prod(dens)` with the denominator kept as a factor list.
#[derive(Clone, Debug, PartialEq)]
pub struct Cleared {
    pub num: MultiPoly,
    pub dens: Vec<MultiPoly>,
}

impl Cleared {
    pub fn new(num: MultiPoly, dens: Vec<MultiPoly>) -> Result<Self> {
        if dens.iter().any(|d| d.is_zero()) {
            return Err(Error::ZeroDenominator);
        }
        Ok(Cleared {
            num,
            dens: dens.into_iter().filter(|d| !d.is_one()).collect(),
        })
    }

    pub fn poly(num: MultiPoly) -> Self {
        Cleared {
            num,
            dens: Vec::new(),
        }
    }

    fn den_product(&self) -> MultiPoly {
        self.dens.iter().fold(MultiPoly::one(), |acc, d| acc.mul(d))
    }

    /// Smallest factor list containing both lists as sub-multisets.
    fn merge(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
        let mut out = a.to_vec();
        let mut used = vec![false; a.len()];
        for f in b {
            match (0..a.len()).find(|&i| !used[i] && a[i] == *f) {
                Some(i) => used[i] = true,
                None => out.push(f.clone()),
            }
        }
        out
    }

    /// `target / dens` as a polynomial, for a `target` containing `dens`.
    fn cofactor(&self, target: &[MultiPoly]) -> MultiPoly {
        let mut remaining: Vec<Option<&MultiPoly>> = target.iter().map(Some).collect();
        for d in &self.dens {
            let slot = remaining
                .iter_mut()
                .find(|r| r.is_some_and(|t| t == d))
                .expect("target contains every factor");
            *slot = None;
        }
        remaining
            .into_iter()
            .flatten()
            .fold(MultiPoly::one(), |acc, f| acc.mul(f))
    }

    /// Numerator over the factor list `target`.
    pub fn numerator_over(&self, target: &[MultiPoly]) -> MultiPoly {
        self.num.mul(&self.cofactor(target))
    }

    pub fn add(&self, o: &Self) -> Self {
        let dens = Self::merge(&self.dens, &o.dens);
        Cleared {
            num: self.numerator_over(&dens).add(&o.numerator_over(&dens)),
            dens,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Cleared {
            num: self.num.neg(),
            dens: self.dens.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut dens = self.dens.clone();
        dens.extend(o.dens.iter().cloned());
        Cleared {
            num: self.num.mul(&o.num),
            dens,
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Cleared {
            num: self.num.mul(p),
            dens: self.dens.clone(),
        }
    }

    /// Exact polynomial value; fails if the denominator does not divide.
    pub fn to_poly(&self) -> Result<MultiPoly> {
        self.num
            .div_exact(&self.den_product())
            .map_err(|e| Error::DivisionFailure(e.to_string()))
    }

    pub fn substitute_all(&self, assignments: &[(Symbol, MultiPoly)]) -> Result<Self> {
        Cleared::new(
            self.num.substitute_all(assignments)?,
            self.dens
                .iter()
                .map(|d| d.substitute_all(assignments))
                .collect::<Result<_>>()?,
        )
    }

    /// Numerators of `a` and `b` over the merged factor list.
    pub fn cross(a: &Self, b: &Self) -> (MultiPoly, MultiPoly) {
        let dens = Self::merge(&a.dens, &b.dens);
        (a.numerator_over(&dens), b.numerator_over(&dens))
    }
}

impl fmt::Display for Cleared {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dens.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})", self.num)?;
        for d in &self.dens {
            write!(f, "/({d})")?;
        }
        Ok(())
    }
}

fn cleared_report(id: &str, n: usize, lhs: &Cleared, rhs: &Cleared) -> VerifyReport {
    let (l, r) = Cleared::cross(lhs, rhs);
    VerifyReport::compare(id, n, l, r)
}

/// A terminating `3phi2(q^{-n}, a2, a3; b1, b2; q, z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Phi32 {
    pub n: usize,
    pub upper: [MultiPoly; 2],
    pub lower: [MultiPoly; 2],
    pub arg: MultiPoly,
}

impl Phi32 {
    /// Fails with `NonTerminating` unless `first` is `q^{-n}` for some `n ≥ 0`.
    pub fn new(
        first: &MultiPoly,
        upper: [MultiPoly; 2],
        lower: [MultiPoly; 2],
        arg: MultiPoly,
    ) -> Result<Self> {
        let n = match first.single_term() {
            Some((m, c)) if c.is_one() && m.iter().all(|(s, _)| s == Symbol::Q) => {
                -m.exponent(Symbol::Q)
            }
            _ => return Err(Error::NonTerminating),
        };
        if n < 0 {
            return Err(Error::NonTerminating);
        }
        Ok(Phi32 {
            n: n as usize,
            upper,
            lower,
            arg,
        })
    }

    /// Denominator factors `(b1, b2; q)_n`, unit factors dropped.
    fn den_factors(&self, upto: usize) -> Vec<MultiPoly> {
        let mut out = Vec::new();
        for b in &self.lower {
            for i in 0..upto {
                let f = one_minus(&b.mul(&q_pow(i as i64)));
                if !f.is_one() {
                    out.push(f);
                }
            }
        }
        out
    }

    /// The sum over the common denominator `(b1, b2; q)_n`, using
    /// `(q^{-n};q)_l / (q;q)_l = (-1)^l q^{C(l,2) - nl} [n, l]`.
    pub fn cleared(&self) -> Result<Cleared> {
        let n = self.n;
        let dens = self.den_factors(n);
        if dens.iter().any(|d| d.is_zero()) {
            return Err(Error::DivisionFailure(
                "vanishing lower parameter factor".into(),
            ));
        }
        let mut num = MultiPoly::zero();
        for l in 0..=n {
            let sign = if l % 2 == 0 {
                Rational::one()
            } else {
                Rational::from_int(-1)
            };
            let mut term = q_binom(n, l as i64)
                .mul(&q_pow(c2(l) - (n * l) as i64))
                .scale(&sign)
                .mul(&self.arg.pow(l as u32));
            for a in &self.upper {
                term = term.mul(&q_pochhammer(a, l));
            }
            for b in &self.lower {
                for i in l..n {
                    term = term.mul(&one_minus(&b.mul(&q_pow(i as i64))));
                }
            }
            num = num.add(&term);
        }
        Cleared::new(num, dens)
    }

    /// The sum as a ring element; the common denominator must divide exactly.
    pub fn terminating(&self) -> Result<MultiPoly> {
        self.cleared()?.to_poly()
    }
}

fn params() -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    (
        var(Symbol::A),
        var(Symbol::B),
        var(Symbol::C),
        var(Symbol::Z),
    )
}

/// `P_n(z; a, b, c; q)` with all parameters symbolic, over `(aq, cq; q)_n`.
pub fn big_q_jacobi(n: usize) -> Result<Cleared> {
    let (a, b, c, z) = params();
    let series = Phi32::new(
        &q_pow(-(n as i64)),
        [a.mul(&b).mul(&q_pow(n as i64 + 1)), z],
        [a.mul(&q_pow(1)), c.mul(&q_pow(1))],
        q_pow(1),
    )?;
    series.cleared()
}

/// Recurrence coefficients `A_n`, `C_n` with factored numerators where a
/// reciprocal is needed.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiCoeffs {
    pub a_factors: Vec<MultiPoly>,
    pub a_dens: Vec<MultiPoly>,
    pub c: Cleared,
}

impl JacobiCoeffs {
    pub fn a(&self) -> Cleared {
        Cleared {
            num: self
                .a_factors
                .iter()
                .fold(MultiPoly::one(), |acc, f| acc.mul(f)),
            dens: self.a_dens.clone(),
        }
    }

    pub fn a_inv(&self) -> Result<Cleared> {
        Cleared::new(
            self.a_dens
                .iter()
                .fold(MultiPoly::one(), |acc, f| acc.mul(f)),
            self.a_factors.clone(),
        )
    }
}

pub fn jacobi_coeffs(n: usize) -> JacobiCoeffs {
    let (a, b, c, _) = params();
    let ab = a.mul(&b);
    let qn = |k: usize| q_pow(k as i64);
    let a_factors = vec![
        one_minus(&a.mul(&qn(n + 1))),
        one_minus(&c.mul(&qn(n + 1))),
        one_minus(&ab.mul(&qn(n + 1))),
    ];
    let a_dens = vec![
        one_minus(&ab.mul(&qn(2 * n + 1))),
        one_minus(&ab.mul(&qn(2 * n + 2))),
    ];
    let c_inv = MultiPoly::var_pow(Symbol::C, -1);
    let c_num = a
        .mul(&c)
        .mul(&qn(n + 1))
        .mul(&one_minus(&qn(n)))
        .mul(&one_minus(&b.mul(&qn(n))))
        .mul(&one_minus(&ab.mul(&c_inv).mul(&qn(n))))
        .neg();
    let c_dens = vec![
        one_minus(&ab.mul(&qn(2 * n))),
        one_minus(&ab.mul(&qn(2 * n + 1))),
    ];
    JacobiCoeffs {
        a_factors,
        a_dens,
        c: Cleared {
            num: c_num,
            dens: c_dens,
        },
    }
}

/// `(z-1) P_n = A_n P_{n+1} - (A_n + C_n) P_n + C_n P_{n-1}` for `n ≥ 1`.
pub fn jacobi_recurrence_check(n: usize) -> VerifyReport {
    let id = "big-q-jacobi.recurrence";
    let run = || -> Result<VerifyReport> {
        if n == 0 {
            return Err(Error::DomainError("recurrence needs n >= 1".into()));
        }
        let (p_prev, p, p_next) = (big_q_jacobi(n - 1)?, big_q_jacobi(n)?, big_q_jacobi(n + 1)?);
        let co = jacobi_coeffs(n);
        let (a, c) = (co.a(), co.c.clone());
        let z1 = var(Symbol::Z).sub(&MultiPoly::one());
        let lhs = p.mul_poly(&z1);
        let rhs = a.mul(&p_next).sub(&a.add(&c).mul(&p)).add(&c.mul(&p_prev));
        Ok(cleared_report(id, n, &lhs, &rhs))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, n, e))
}

/// `P_{n+1}` from `P_n`, `P_{n-1}` by solving the recurrence for it.
pub fn big_q_jacobi_by_recurrence(n: usize) -> Result<Cleared> {
    let mut prev = Cleared::poly(MultiPoly::one());
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = big_q_jacobi(1)?;
    let z1 = var(Symbol::Z).sub(&MultiPoly::one());
    for m in 1..n {
        let co = jacobi_coeffs(m);
        let (a, c) = (co.a(), co.c.clone());
        let rest = cur
            .mul_poly(&z1)
            .add(&a.add(&c).mul(&cur))
            .sub(&c.mul(&prev));
        let next = rest.mul(&co.a_inv()?);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `Q_n = (aq, cq; q)_n / (abq^{n+1}; q)_n P_n`.
pub fn normalized_q(n: usize) -> Result<Cleared> {
    let (a, b, _, _) = params();
    let p = big_q_jacobi(n)?;
    let ab = a.mul(&b);
    let dens = (n + 1..=2 * n)
        .map(|k| one_minus(&ab.mul(&q_pow(k as i64))))
        .collect();
    Cleared::new(p.num, dens)
}

/// `Q_{n+1} = (z + A_n + C_n - 1) Q_n - A_{n-1} C_n Q_{n-1}` and
/// monicity of `Q_n` in `z`.
pub fn normalized_q_check(n: usize) -> Vec<VerifyReport> {
    let id = "big-q-jacobi.normalized";
    let run = || -> Result<Vec<VerifyReport>> {
        if n == 0 {
            return Err(Error::DomainError("recurrence needs n >= 1".into()));
        }
        let (q_prev, q_cur, q_next) =
            (normalized_q(n - 1)?, normalized_q(n)?, normalized_q(n + 1)?);
        let co = jacobi_coeffs(n);
        let prev_a = jacobi_coeffs(n - 1).a();
        let shift = Cleared::poly(var(Symbol::Z).sub(&MultiPoly::one()));
        let rhs = shift
            .add(&co.a())
            .add(&co.c)
            .mul(&q_cur)
            .sub(&prev_a.mul(&co.c).mul(&q_prev));
        let lead = q_cur.num.coeff(Symbol::Z, n as i32);
        Ok(vec![
            cleared_report(id, n, &q_next, &rhs),
            VerifyReport::compare("big-q-jacobi.monic", n, q_cur.num.degree_in(Symbol::Z)?, n),
            VerifyReport::compare("big-q-jacobi.monic-leading", n, lead, q_cur.den_product()),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e)])
}

/// At `a = b = c = 0`: `A_n = 1`, `C_n = 0` and `P_n = z^n`.
pub fn jacobi_degenerate_check(n: usize) -> Vec<VerifyReport> {
    let id = "big-q-jacobi.degenerate";
    let run = || -> Result<Vec<VerifyReport>> {
        let zero = MultiPoly::zero();
        // `C_n` carries `c^{-1}` only next to `ab`, so `a` and `b` go first.
        let at = [
            (Symbol::A, zero.clone()),
            (Symbol::B, zero.clone()),
            (Symbol::C, zero),
        ];
        let co = jacobi_coeffs(n);
        let a = co.a().substitute_all(&at)?.to_poly()?;
        let c = co.c.substitute_all(&at)?.to_poly()?;
        let p = big_q_jacobi(n)?.substitute_all(&at)?.to_poly()?;
        let q = normalized_q(n)?.substitute_all(&at)?.to_poly()?;
        Ok(vec![
            VerifyReport::compare(&format!("{id}.q"), n, q, &p),
            VerifyReport::compare(&format!("{id}.a"), n, a, 1),
            VerifyReport::compare(&format!("{id}.c"), n, c, 0),
            VerifyReport::compare(
                &format!("{id}.p"),
                n,
                p,
                MultiPoly::var_pow(Symbol::Z, n as i32),
            ),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e)])
}

/// `(a, b, c) = (uv/(xq), 0, u/q)`.
pub fn moment_specialization() -> Vec<(Symbol, MultiPoly)> {
    let (u, v) = (var(Symbol::U), var(Symbol::V));
    vec![
        (Symbol::B, MultiPoly::zero()),
        (
            Symbol::A,
            u.mul(&v)
                .mul(&MultiPoly::var_pow(Symbol::X, -1))
                .mul(&q_pow(-1)),
        ),
        (Symbol::C, u.mul(&q_pow(-1))),
    ]
}

fn uv_over_x() -> MultiPoly {
    var(Symbol::U)
        .mul(&var(Symbol::V))
        .mul(&MultiPoly::var_pow(Symbol::X, -1))
}

/// `A_j = (1 - uvq^j/x)(1 - uq^j)`.
pub fn specialized_a(j: usize) -> MultiPoly {
    one_minus(&uv_over_x().mul(&q_pow(j as i64)))
        .mul(&one_minus(&var(Symbol::U).mul(&q_pow(j as i64))))
}

/// `C_j = -u^2 v q^{j-1} (1 - q^j) / x`.
pub fn specialized_c(j: usize) -> MultiPoly {
    var(Symbol::U)
        .pow(2)
        .mul(&var(Symbol::V))
        .mul(&q_pow(j as i64 - 1))
        .mul(&one_minus(&q_pow(j as i64)))
        .mul(&MultiPoly::var_pow(Symbol::X, -1))
        .neg()
}

/// The general `A_j`, `C_j` under the moment specialization agree with the
/// displayed products.
pub fn check_specialized_coeffs(j: usize) -> Vec<VerifyReport> {
    let id = "moments.coefficients";
    let run = || -> Result<Vec<VerifyReport>> {
        let at = moment_specialization();
        let co = jacobi_coeffs(j);
        let a = co.a().substitute_all(&at)?.to_poly()?;
        let c = co.c.substitute_all(&at)?.to_poly()?;
        Ok(vec![
            VerifyReport::compare(&format!("{id}.a"), j, a, specialized_a(j)),
            VerifyReport::compare(&format!("{id}.c"), j, c, specialized_c(j)),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, j, e)])
}

/// `mu_k = 3phi2(q^{-k}, uv/x, u; 0, 0; q, q)`.
pub fn moments_mu(k: usize) -> Result<MultiPoly> {
    Phi32::new(
        &q_pow(-(k as i64)),
        [uv_over_x(), var(Symbol::U)],
        [MultiPoly::zero(), MultiPoly::zero()],
        q_pow(1),
    )?
    .terminating()
}

pub fn moments_seq() -> Sequence<MultiPoly> {
    Sequence::new("mu_k", moments_mu)
}

/// Moments of the monic family `p_{n+1} = (z - b_n) p_n - l_n p_{n-1}`,
/// obtained by expanding `z^k` in that basis: `mu_k` is the `p_0` coefficient.
pub fn moments_from_recurrence(
    b: &[MultiPoly],
    l: &[MultiPoly],
    k: usize,
) -> Result<Vec<MultiPoly>> {
    if b.len() < k || l.len() < k {
        return Err(Error::Dimension(format!(
            "need {k} recurrence coefficients"
        )));
    }
    let mut coeffs = vec![MultiPoly::one()];
    let mut out = vec![MultiPoly::one()];
    for _ in 0..k {
        // z p_m = p_{m+1} + b_m p_m + l_m p_{m-1}
        let mut next = vec![MultiPoly::zero(); coeffs.len() + 1];
        for (m, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[m + 1] = next[m + 1].add(c);
            next[m] = next[m].add(&c.mul(&b[m]));
            if m > 0 {
                next[m - 1] = next[m - 1].add(&c.mul(&l[m]));
            }
        }
        coeffs = next;
        out.push(coeffs[0].clone());
    }
    Ok(out)
}

/// `mu_0 .. mu_k` from the specialized recurrence data: level weights
/// `1 - A_n - C_n`, down weights `A_{n-1} C_n`.
pub fn moments_by_paths(k: usize) -> Result<Vec<MultiPoly>> {
    let b: Vec<MultiPoly> = (0..k)
        .map(|n| {
            let c = if n == 0 {
                MultiPoly::zero()
            } else {
                specialized_c(n)
            };
            MultiPoly::one().sub(&specialized_a(n)).sub(&c)
        })
        .collect();
    let l: Vec<MultiPoly> = (0..k)
        .map(|n| {
            if n == 0 {
                MultiPoly::zero()
            } else {
                specialized_a(n - 1).mul(&specialized_c(n))
            }
        })
        .collect();
    moments_from_recurrence(&b, &l, k)
}

/// `V_k^{(a)}(x; q) = (-1)^k q^{-C(k,2)} sum_l [k, l] a^l (x; q)_{k-l}`.
pub fn al_salam_carlitz_v(k: usize, a: &MultiPoly, x: &MultiPoly) -> MultiPoly {
    let sum = (0..=k).fold(MultiPoly::zero(), |acc, l| {
        acc.add(
            &q_binom(k, l as i64)
                .mul(&a.pow(l as u32))
                .mul(&q_pochhammer(x, k - l)),
        )
    });
    let s = if k.is_multiple_of(2) {
        Rational::one()
    } else {
        Rational::from_int(-1)
    };
    sum.mul(&q_pow(-c2(k))).scale(&s)
}

/// `alpha_k^{u,v} = q^{-C(k,2)} (u; q)_k v^k`.
pub fn alpha_uv_raw(k: usize) -> MultiPoly {
    q_pochhammer(&var(Symbol::U), k)
        .mul(&var(Symbol::V).pow(k as u32))
        .mul(&q_pow(-c2(k)))
}

/// `alpha~_k^{u,v}(x) = sum_l [k, l] (u; q)_l v^l x^{k-l}`.
pub fn alpha_uv_seq(k: usize) -> MultiPoly {
    (0..=k).fold(MultiPoly::zero(), |acc, l| {
        let t = q_binom(k, l as i64)
            .mul(&q_pochhammer(&var(Symbol::U), l))
            .mul(&var(Symbol::V).pow(l as u32))
            .mul(&MultiPoly::var_pow(Symbol::X, (k - l) as i32));
        acc.add(&t)
    })
}

/// The mirrored summation `sum_l [k, l] (u; q)_{k-l} v^{k-l} x^l`.
pub fn alpha_uv_mirrored(k: usize) -> MultiPoly {
    (0..=k).fold(MultiPoly::zero(), |acc, l| {
        let t = q_binom(k, l as i64)
            .mul(&q_pochhammer(&var(Symbol::U), k - l))
            .mul(&var(Symbol::V).pow((k - l) as u32))
            .mul(&MultiPoly::var_pow(Symbol::X, l as i32));
        acc.add(&t)
    })
}

/// Both summation forms agree and equal the second q-binomial transform of
/// the raw sequence.
pub fn alpha_uv_symmetry_check(k: usize) -> Vec<VerifyReport> {
    let id = "alpha-uv.symmetry";
    let raw = GenericSeq::from_polys("alpha^{u,v}", (0..=k).map(alpha_uv_raw).collect());
    let transformed = alpha_tilde_poly(k, &raw);
    vec![
        VerifyReport::compare(id, k, alpha_uv_seq(k), alpha_uv_mirrored(k)),
        match transformed {
            Ok(t) => VerifyReport::compare("alpha-uv.transform", k, alpha_uv_seq(k), t),
            Err(e) => VerifyReport::error("alpha-uv.transform", k, e),
        },
    ]
}

/// Links `mu_k`, `alpha~^{u,v}_k(x)` and the Al-Salam–Carlitz polynomials:
/// `(x/u)^k mu_k = alpha~_k`, path moments equal `mu_k`, `val_x(mu_k) ≥ -k`
/// and `V_k^{(x/v)}(u; q) q^{C(k,2)} (-v)^k = alpha~_k`.
pub fn check_moment_bridge(k: usize) -> Vec<VerifyReport> {
    let id = "moments.bridge";
    let run = || -> Result<Vec<VerifyReport>> {
        let mu = moments_mu(k)?;
        let target = alpha_uv_seq(k);
        let scale = MultiPoly::var_pow(Symbol::X, k as i32)
            .mul(&MultiPoly::var_pow(Symbol::U, -(k as i32)));
        let paths = moments_by_paths(k)?.pop().expect("nonempty");
        let val = if mu.is_zero() {
            0
        } else {
            mu.val_in(Symbol::X)?
        };
        let x_over_v = var(Symbol::X).mul(&MultiPoly::var_pow(Symbol::V, -1));
        let v = al_salam_carlitz_v(k, &x_over_v, &var(Symbol::U));
        let minus_v = var(Symbol::V).neg().pow(k as u32);
        Ok(vec![
            VerifyReport::compare(id, k, mu.mul(&scale), &target),
            VerifyReport::compare("moments.paths", k, &mu, paths),
            VerifyReport::compare("moments.valuation", k, val >= -(k as i32), true),
            VerifyReport::compare(
                "moments.al-salam-carlitz",
                k,
                v.mul(&q_pow(c2(k))).mul(&minus_v),
                &target,
            ),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, k, e)])
}

/// `v^{C(n+1,2)} q^{C(n+1,3)} prod_{j=1}^n (uvq^{j-1} - x)^{n+1-j} (u, q; q)_{n+1-j}`.
pub fn final_example_closed(n: usize) -> MultiPoly {
    let (u, v, x) = (var(Symbol::U), var(Symbol::V), var(Symbol::X));
    let mut acc = v.pow(c2(n + 1) as u32).mul(&q_pow(c3(n + 1)));
    for j in 1..=n {
        let e = n + 1 - j;
        let lin = u.mul(&v).mul(&q_pow(j as i64 - 1)).sub(&x);
        acc = acc
            .mul(&lin.pow(e as u32))
            .mul(&q_pochhammer(&u, e))
            .mul(&q_pochhammer(&q_pow(1), e));
    }
    acc
}

/// Values for `u` and `v`, or `None` to keep them symbolic.
pub type UvPoint = Option<(Rational, Rational)>;

fn specialize(p: &MultiPoly, point: &UvPoint) -> Result<MultiPoly> {
    match point {
        None => Ok(p.clone()),
        Some((u, v)) => p.substitute_all(&[
            (Symbol::U, MultiPoly::constant(u.clone())),
            (Symbol::V, MultiPoly::constant(v.clone())),
        ]),
    }
}

/// Route 2 alone: Heilermann's product over `v_j = A_{j-1} C_j`, scaled by
/// `(x/u)^{n(n+1)}`.
pub fn final_example_route2(n: usize, point: &UvPoint) -> Result<MultiPoly> {
    let vs: Vec<MultiPoly> = (1..=n)
        .map(|j| specialize(&specialized_a(j - 1).mul(&specialized_c(j)), point))
        .collect::<Result<_>>()?;
    let h_mu = heilermann_det(&MultiPoly::one(), &vs, n)?;
    let e = (n * (n + 1)) as i32;
    let scale = specialize(
        &MultiPoly::var_pow(Symbol::X, e).mul(&MultiPoly::var_pow(Symbol::U, -e)),
        point,
    )?;
    Ok(h_mu.mul(&scale))
}

/// Route 1 (direct determinant) and route 2 (Heilermann) against the
/// closed product, and against each other.
pub fn check_final_example(n: usize, point: &UvPoint) -> Vec<VerifyReport> {
    let id = "alpha-uv.hankel";
    let label = match point {
        None => "symbolic".to_string(),
        Some((u, v)) => format!("{u},{v}"),
    };
    let run = || -> Result<Vec<VerifyReport>> {
        let pt = point.clone();
        let seq = Sequence::new("alpha~uv", move |k| specialize(&alpha_uv_seq(k), &pt));
        let route1 = hankel_det(&seq, n)?;
        let route2 = final_example_route2(n, point)?;
        let closed = specialize(&final_example_closed(n), point)?;
        Ok(vec![
            VerifyReport::compare(&format!("{id}.direct"), n, &route1, &closed)
                .with_param("uv", &label),
            VerifyReport::compare(&format!("{id}.heilermann"), n, &route2, &closed)
                .with_param("uv", &label),
            VerifyReport::compare(&format!("{id}.routes"), n, &route1, &route2)
                .with_param("uv", &label),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e).with_param("uv", &label)])
}

/// `H_n(mu_k)` directly against the Heilermann product.
pub fn check_moment_hankel(n: usize) -> VerifyReport {
    let id = "moments.hankel";
    let run = || -> Result<VerifyReport> {
        let direct = hankel_det(&moments_seq(), n)?;
        let vs: Vec<MultiPoly> = (1..=n)
            .map(|j| specialized_a(j - 1).mul(&specialized_c(j)))
            .collect();
        Ok(VerifyReport::compare(
            id,
            n,
            direct,
            heilermann_det(&MultiPoly::one(), &vs, n)?,
        ))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, n, e))
}

/// `prod_{j=1}^{n+1} (q, u; q)_{n+1-j}`.
fn staircase_pochhammers(n: usize) -> MultiPoly {
    (1..=n + 1).fold(MultiPoly::one(), |acc, j| {
        acc.mul(&q_pochhammer(&q_pow(1), n + 1 - j))
            .mul(&q_pochhammer(&var(Symbol::U), n + 1 - j))
    })
}

/// `H_n((u;q)_k)`, `H_n(q^{C(k,2)} alpha_k^{u,v})` and the ratio identity
/// against `H_n(alpha~^{u,v}_k(x))`, cross-multiplied.
pub fn check_remark_specialization(n: usize) -> Vec<VerifyReport> {
    let id = "alpha-uv.specialization";
    let run = || -> Result<Vec<VerifyReport>> {
        let (u, v, x) = (var(Symbol::U), var(Symbol::V), var(Symbol::X));
        let pochs = Sequence::new("(u;q)_k", |k| {
            Ok(q_pochhammer(&MultiPoly::var(Symbol::U), k))
        });
        let h_poch = hankel_det(&pochs, n)?;
        let rhs_poch = u
            .pow(c2(n + 1) as u32)
            .mul(&q_pow(2 * c3(n + 1)))
            .mul(&staircase_pochhammers(n));
        let scaled = Sequence::new("q^C(k,2) alpha^{u,v}_k", |k| {
            Ok(alpha_uv_raw(k).mul(&q_pow(c2(k))))
        });
        let h_scaled = hankel_det(&scaled, n)?;
        let rhs_scaled = rhs_poch.mul(&v.pow((n * (n + 1)) as u32));
        let h_tilde = hankel_det(&Sequence::new("alpha~uv", |k| Ok(alpha_uv_seq(k))), n)?;
        let lin = (0..=n).fold(MultiPoly::one(), |acc, j| {
            acc.mul(&u.mul(&v).mul(&q_pow(j as i64)).sub(&x).pow((n - j) as u32))
        });
        let ratio_lhs = h_tilde
            .mul(&u.mul(&v).pow(c2(n + 1) as u32))
            .mul(&q_pow(c3(n + 1)));
        let ratio_rhs = h_scaled.mul(&lin);
        Ok(vec![
            VerifyReport::compare(&format!("{id}.pochhammer"), n, h_poch, rhs_poch),
            VerifyReport::compare(&format!("{id}.scaled"), n, h_scaled, rhs_scaled),
            VerifyReport::compare(&format!("{id}.ratio"), n, ratio_lhs, ratio_rhs),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e)])
}

/// Heilermann's formula on moments generated from seeded rational
/// recurrence data.
pub fn check_synthetic_heilermann(n: usize, seed: u64) -> VerifyReport {
    let id = "heilermann.synthetic";
    let run = || -> Result<VerifyReport> {
        let mut rng = crate::random::SeededRationals::new(seed);
        let b: Vec<MultiPoly> = (0..=2 * n)
            .map(|_| MultiPoly::constant(rng.rational_signed()))
            .collect();
        let l: Vec<MultiPoly> = (0..=2 * n)
            .map(|m| {
                if m == 0 {
                    MultiPoly::zero()
                } else {
                    MultiPoly::constant(rng.rational())
                }
            })
            .collect();
        let mu = moments_from_recurrence(&b, &l, 2 * n)?;
        let direct = hankel_det(&Sequence::from_values("synthetic", mu), n)?;
        let product = heilermann_det(&MultiPoly::one(), &l[1..], n)?;
        Ok(VerifyReport::compare(id, n, direct, product).with_param("seed", seed))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, n, e))
}
