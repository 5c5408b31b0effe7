//! q-integers, q-factorials, q-binomials, q-Pochhammer symbols and the
//! Carlitz q-Bernoulli numbers.

use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::hankel::{det_bareiss, det_gauss, hankel_matrix, ring_pow, Sequence};
use crate::poly::{lcm_q, Monomial, MultiPoly, RatFuncQ, Symbol};
use crate::rational::{binomial, Rational};
use crate::report::VerifyReport;

fn q() -> MultiPoly {
    MultiPoly::var(Symbol::Q)
}

fn q_pow(e: i64) -> MultiPoly {
    MultiPoly::var_pow(Symbol::Q, e as i32)
}

/// `[m]_q = 1 + q + ... + q^{m-1}` for `m ≥ 1`.
pub fn q_int(m: i64) -> Result<MultiPoly> {
    if m <= 0 {
        return Err(Error::DomainError(format!(
            "q-integer [{m}]_q needs m >= 1"
        )));
    }
    Ok(MultiPoly::from_terms((0..m).map(|i| {
        (Monomial::var(Symbol::Q, i as i32), Rational::one())
    })))
}

/// `[M]_q! = [1]_q [2]_q ... [M]_q`.
pub fn q_factorial(m: usize) -> MultiPoly {
    (1..=m as i64).fold(MultiPoly::one(), |acc, j| {
        acc.mul(&q_int(j).expect("positive index"))
    })
}

fn pascal_rows() -> &'static Mutex<Vec<Vec<MultiPoly>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<MultiPoly>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![MultiPoly::one()]]))
}

/// Gaussian binomial by the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`; zero outside `0 ≤ k ≤ n`.
pub fn q_binom(n: usize, k: i64) -> MultiPoly {
    if k < 0 || k as usize > n {
        return MultiPoly::zero();
    }
    let mut rows = pascal_rows().lock().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("seeded");
        let m = prev.len();
        let row: Vec<MultiPoly> = (0..=m)
            .map(|j| {
                let left = if j == 0 {
                    MultiPoly::zero()
                } else {
                    prev[j - 1].clone()
                };
                let right = if j < m {
                    prev[j].mul(&q_pow(j as i64))
                } else {
                    MultiPoly::zero()
                };
                left.add(&right)
            })
            .collect();
        rows.push(row);
    }
    rows[n][k as usize].clone()
}

/// `(A; q)_N = prod_{k<N} (1 - A q^k)`.
pub fn q_pochhammer(a: &MultiPoly, n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 0..n {
        acc = acc.mul(&MultiPoly::one().sub(&a.mul(&q_pow(k as i64))));
    }
    acc
}

/// `(A_1, ..., A_r; q)_N`.
pub fn q_pochhammer_multi(params: &[MultiPoly], n: usize) -> MultiPoly {
    params
        .iter()
        .fold(MultiPoly::one(), |acc, a| acc.mul(&q_pochhammer(a, n)))
}

/// Gaussian binomial as the quotient `(q;q)_n / ((q;q)_k (q;q)_{n-k})`.
pub fn q_binom_quotient(n: usize, k: i64) -> Result<MultiPoly> {
    if k < 0 || k as usize > n {
        return Ok(MultiPoly::zero());
    }
    let k = k as usize;
    let den = q_pochhammer(&q(), k).mul(&q_pochhammer(&q(), n - k));
    q_pochhammer(&q(), n).div_exact(&den)
}

/// `prod_{k<n} (a + q^k x) = sum_k q^{C(k,2)} [n, k] a^{n-k} x^k`.
pub fn check_q_binomial_theorem(n: usize) -> VerifyReport {
    let a = MultiPoly::var(Symbol::A);
    let x = MultiPoly::var(Symbol::X);
    let lhs = (0..n).fold(MultiPoly::one(), |acc, k| {
        acc.mul(&a.add(&x.mul(&q_pow(k as i64))))
    });
    let rhs = (0..=n).fold(MultiPoly::zero(), |acc, k| {
        let term = q_binom(n, k as i64)
            .mul(&q_pow((k * k.saturating_sub(1) / 2) as i64))
            .mul(&a.pow((n - k) as u32))
            .mul(&x.pow(k as u32));
        acc.add(&term)
    });
    VerifyReport::compare("q-binomial-theorem", n, lhs, rhs)
}

/// Carlitz `β_k = (1-q)^{-k} sum_j (-1)^j C(k,j) (j+1) / [j+1]_q`, summed
/// over the common denominator `(1-q)^k lcm_j [j+1]_q` and reduced once.
pub fn q_bernoulli(k: usize) -> Result<RatFuncQ> {
    let ints: Vec<MultiPoly> = (1..=k as i64 + 1).map(q_int).collect::<Result<_>>()?;
    let mut l = MultiPoly::one();
    for qi in &ints {
        l = lcm_q(&l, qi)?;
    }
    let mut num = MultiPoly::zero();
    for (j, qi) in ints.iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = &Rational::from_integer(&binomial(k as u32, j as i64))
            * &Rational::from_int(sign * (j as i64 + 1));
        num = num.add(&l.div_exact(qi)?.scale(&c));
    }
    let one_minus_q = MultiPoly::one().sub(&q());
    RatFuncQ::new(num, one_minus_q.pow(k as u32).mul(&l))
}

pub fn q_bernoulli_seq() -> Sequence<RatFuncQ> {
    Sequence::new("beta_k", q_bernoulli)
}

/// `(-1)^{C(n+1,2)} q^{C(n+1,3)} prod_{j=1}^n ([j]_q!)^6 / ([2j]_q! [2j+1]_q!)`.
pub fn closed_h_qbernoulli(n: usize) -> Result<RatFuncQ> {
    let mut num = q_pow(binomial(n as u32 + 1, 3).to_i64().expect("small"));
    if (n * (n + 1) / 2) % 2 == 1 {
        num = num.neg();
    }
    let mut den = MultiPoly::one();
    for j in 1..=n {
        num = num.mul(&q_factorial(j).pow(6));
        den = den.mul(&q_factorial(2 * j).mul(&q_factorial(2 * j + 1)));
    }
    RatFuncQ::new(num, den)
}

/// `H_n(β_k)` by field elimination and by Bareiss on cleared numerators,
/// both compared with the closed product.
pub fn check_chapoton_zeng(n: usize) -> Vec<VerifyReport> {
    let id = "q-bernoulli.hankel";
    let run = || -> Result<Vec<VerifyReport>> {
        let m = hankel_matrix(&q_bernoulli_seq(), n)?;
        let rhs = closed_h_qbernoulli(n)?;
        let field = det_gauss(m.rows())?;

        let betas: Vec<RatFuncQ> = (0..=2 * n).map(q_bernoulli).collect::<Result<_>>()?;
        let mut common = MultiPoly::one();
        for b in &betas {
            common = lcm_q(&common, b.den())?;
        }
        let cleared: Vec<MultiPoly> = betas
            .iter()
            .map(|b| Ok(b.num().mul(&common.div_exact(b.den())?)))
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<MultiPoly>> = (0..=n)
            .map(|i| (0..=n).map(|j| cleared[i + j].clone()).collect())
            .collect();
        let scaled = det_bareiss(rows)?;
        let bareiss = RatFuncQ::new(scaled, ring_pow(&common, n as u32 + 1))?;
        Ok(vec![
            VerifyReport::compare(id, n, &field, &rhs),
            VerifyReport::compare("q-bernoulli.hankel-cleared", n, &bareiss, &rhs),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e)])
}

/// `β_k` at `q = 1` against `B_k`.
pub fn check_q_bernoulli_limit(k: usize) -> VerifyReport {
    let id = "q-bernoulli.limit";
    match q_bernoulli(k).and_then(|b| b.eval(&Rational::one())) {
        Ok(v) => VerifyReport::compare(id, k, v, crate::bernoulli::bernoulli_number(k)),
        Err(e) => VerifyReport::error(id, k, e),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::bernoulli::bernoulli_number;
    use crate::poly::parse_poly;
    use crate::random::SeededRationals;
    use crate::rational::factorial;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1).unwrap(), p("1"));
        assert_eq!(q_int(2).unwrap(), p("1 + q"));
        assert_eq!(q_int(5).unwrap().mul(&p("1 - q")), p("1 - q^5"));
        assert!(matches!(q_int(0), Err(Error::DomainError(_))));
        assert!(matches!(q_int(-3), Err(Error::DomainError(_))));
        assert_eq!(q_factorial(0), p("1"));
        assert_eq!(q_factorial(3), p("(1+q)*(1+q+q^2)"));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binom(2, 1), p("1 + q"));
        assert_eq!(q_binom(4, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(q_binom(3, 5).is_zero());
        assert!(q_binom(3, -1).is_zero());
        for n in 0..=10 {
            for k in 0..=n as i64 {
                assert_eq!(q_binom(n, k), q_binom_quotient(n, k).unwrap());
                assert_eq!(q_binom(n, k), q_binom(n, n as i64 - k));
                let at_one = q_binom(n, k)
                    .eval_all(&[(Symbol::Q, Rational::one())])
                    .unwrap();
                assert_eq!(at_one, Rational::from_integer(&binomial(n as u32, k)));
                assert!(q_binom(n, k)
                    .terms()
                    .iter()
                    .all(|(_, c)| c.is_integer() && !c.is_negative()));
            }
        }
    }

    #[test]
    fn pascal_type_relation() {
        for n in 1..=12usize {
            for m in 0..=n as i64 {
                let lhs = q_binom(n, m).sub(&q_binom(n - 1, m));
                let rhs = q_pow(n as i64 - m).mul(&q_binom(n - 1, m - 1));
                assert_eq!(lhs, rhs, "N = {n}, M = {m}");
            }
        }
    }

    #[test]
    fn pochhammer() {
        assert_eq!(q_pochhammer(&p("a"), 0), p("1"));
        assert_eq!(q_pochhammer(&p("u"), 2), p("(1-u)*(1-u*q)"));
        assert_eq!(q_pochhammer(&p("q"), 3), p("(1-q)*(1-q^2)*(1-q^3)"));
        for m in 0..4 {
            for n in 0..4 {
                let a = p("a*x");
                let split = q_pochhammer(&a, m).mul(&q_pochhammer(&a.mul(&q_pow(m as i64)), n));
                assert_eq!(q_pochhammer(&a, m + n), split);
            }
        }
        let one = Rational::one();
        for m in 0..=7 {
            let v = q_factorial(m)
                .eval_all(&[(Symbol::Q, one.clone())])
                .unwrap();
            assert_eq!(v, Rational::from_integer(&factorial(m as u32)));
        }
    }

    #[test]
    fn binomial_theorem() {
        for n in 0..=8 {
            let rep = check_q_binomial_theorem(n);
            assert!(rep.pass, "{}", rep.line());
        }
        assert_eq!(
            check_q_binomial_theorem(2).lhs,
            p("a^2 + (1+q)*a*x + q*x^2").to_string()
        );
        // With the q-powers on the other factor the x^k weights move to a.
        let swapped = p("(a + x)*(q*a + x)");
        assert_ne!(swapped.to_string(), check_q_binomial_theorem(2).rhs);
    }

    /// Direct evaluation of the defining sum at a rational point.
    fn carlitz_at(k: usize, q: &Rational) -> Rational {
        let mut s = Rational::zero();
        for j in 0..=k {
            let mut qint = Rational::zero();
            let mut pw = Rational::one();
            for _ in 0..=j {
                qint += &pw;
                pw *= q;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let c = &Rational::from_integer(&binomial(k as u32, j as i64))
                * &Rational::from_int(sign * (j as i64 + 1));
            s += &c.checked_div(&qint).unwrap();
        }
        let base = &Rational::one() - q;
        s.checked_div(&base.pow(k as i32).unwrap()).unwrap()
    }

    #[test]
    fn carlitz_numbers() {
        assert_eq!(q_bernoulli(0).unwrap(), RatFuncQ::one());
        assert_eq!(
            q_bernoulli(1).unwrap(),
            RatFuncQ::new(p("-1"), p("1 + q")).unwrap()
        );
        let mut rng = SeededRationals::new(5);
        for k in 0..=5 {
            let b = q_bernoulli(k).unwrap();
            for _ in 0..20 {
                let mut pt = rng.rational_signed();
                if pt.abs().is_one() {
                    pt = Rational::new(1, 3).unwrap();
                }
                assert_eq!(b.eval(&pt).unwrap(), carlitz_at(k, &pt));
            }
        }
        for k in 0..=8 {
            assert_eq!(
                q_bernoulli(k).unwrap().eval(&Rational::one()).unwrap(),
                bernoulli_number(k)
            );
            assert!(check_q_bernoulli_limit(k).pass);
        }
    }

    #[test]
    fn hankel_of_carlitz_numbers() {
        for n in 0..=3 {
            for rep in check_chapoton_zeng(n) {
                assert!(rep.pass, "{}", rep.line());
            }
        }
        let n1 = closed_h_qbernoulli(1).unwrap();
        assert_eq!(n1, RatFuncQ::new(p("-1"), p("(1+q)^2*(1+q+q^2)")).unwrap());
    }

    proptest! {
        #[test]
        fn pochhammer_factorial_link(m in 0usize..8) {
            // (q;q)_m = (1-q)^m [m]_q!
            let lhs = q_pochhammer(&q(), m);
            let rhs = p("1 - q").pow(m as u32).mul(&q_factorial(m));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
