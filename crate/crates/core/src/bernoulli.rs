//! Bernoulli numbers and polynomials, the binomial transform, median
//! Bernoulli numbers and the Hankel determinant identities built on them.

use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::hankel::{hankel_det, Sequence};
use crate::poly::{MultiPoly, Symbol};
use crate::rational::{binomial, factorial, Integer, Rational};
use crate::report::VerifyReport;

fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

fn binom_r(n: usize, k: usize) -> Rational {
    Rational::from_integer(&binomial(n as u32, k as i64))
}

/// `B_k`, with `B_1 = -1/2`.
pub fn bernoulli_number(k: usize) -> Rational {
    let mut table = cache().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= k {
        // Solve sum_{j<=m} C(m+1, j) B_j = 0 for B_m.
        let m = table.len();
        let mut s = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            s += &(&binom_r(m + 1, j) * b);
        }
        let lead = binom_r(m + 1, m);
        let next = (-&s).checked_div(&lead).expect("nonzero binomial");
        table.push(next);
    }
    table[k].clone()
}

/// `B_k(x) = sum_l C(k, l) B_{k-l} x^l`.
pub fn bernoulli_poly(k: usize) -> MultiPoly {
    MultiPoly::from_terms((0..=k).map(|l| {
        (
            crate::poly::Monomial::var(Symbol::X, l as i32),
            &binom_r(k, l) * &bernoulli_number(k - l),
        )
    }))
}

/// `B_k(arg)`.
pub fn bernoulli_poly_at(k: usize, arg: &MultiPoly) -> Result<MultiPoly> {
    bernoulli_poly(k).substitute(Symbol::X, arg)
}

/// `(1 + x) / 2`.
pub fn half_shift() -> MultiPoly {
    let half = MultiPoly::constant(Rational::new(1, 2).expect("nonzero"));
    half.add(&MultiPoly::var(Symbol::X).mul(&half))
}

pub fn bernoulli_seq() -> Sequence<MultiPoly> {
    Sequence::new("B_k", |k| Ok(MultiPoly::constant(bernoulli_number(k))))
}

/// `B_{2k}((1+x)/2)`.
pub fn even_half_seq() -> Sequence<MultiPoly> {
    Sequence::new("B_2k((1+x)/2)", |k| bernoulli_poly_at(2 * k, &half_shift()))
}

/// `B_{2k+1}((1+x)/2)`.
pub fn odd_half_seq() -> Sequence<MultiPoly> {
    Sequence::new("B_2k+1((1+x)/2)", |k| {
        bernoulli_poly_at(2 * k + 1, &half_shift())
    })
}

/// `B_{2k}(1/2)`.
pub fn even_at_half_seq() -> Sequence<MultiPoly> {
    let half = MultiPoly::constant(Rational::new(1, 2).expect("nonzero"));
    Sequence::new("B_2k(1/2)", move |k| bernoulli_poly_at(2 * k, &half))
}

/// `k ↦ sum_l C(k, l) a_{k-l} t^l`.
pub fn binomial_transform(seq: &Sequence<MultiPoly>, t: Symbol) -> Sequence<MultiPoly> {
    let inner = seq.clone();
    Sequence::new(format!("{}({t})", seq.name()), move |k| {
        let mut acc = MultiPoly::zero();
        for l in 0..=k {
            let term = inner
                .at(k - l)?
                .mul(&MultiPoly::var_pow(t, l as i32))
                .scale(&binom_r(k, l));
            acc = acc.add(&term);
        }
        Ok(acc)
    })
}

/// `H_n(a_k(x)) = H_n(a_k)` with `x` symbolic.
pub fn check_binomial_invariance(seq: &Sequence<MultiPoly>, n: usize) -> VerifyReport {
    let run = || -> Result<VerifyReport> {
        let lhs = hankel_det(&binomial_transform(seq, Symbol::X), n)?;
        let rhs = hankel_det(seq, n)?;
        Ok(VerifyReport::compare("binomial-invariance", n, lhs, rhs).with_param("seq", seq.name()))
    };
    run().unwrap_or_else(|e| VerifyReport::error("binomial-invariance", n, e))
}

fn sign_c2(n: usize) -> Rational {
    if (n * (n + 1) / 2).is_multiple_of(2) {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

fn int_ratio(num: &Integer, den: &Integer) -> Rational {
    Rational::from_integers(num, den).expect("nonzero factorial")
}

/// `(-1)^{C(n+1,2)} prod_{j=1}^n (j!)^6 / ((2j)! (2j+1)!)`.
pub fn closed_h_bk(n: usize) -> Rational {
    let mut acc = sign_c2(n);
    for j in 1..=n as u32 {
        let num = factorial(j).pow(6);
        let den = &factorial(2 * j) * &factorial(2 * j + 1);
        acc *= &int_ratio(&num, &den);
    }
    acc
}

/// `prod_{j=1}^n ((2j)!)^6 / ((4j)! (4j+1)!)`.
pub fn closed_h_b2k_half(n: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 1..=n as u32 {
        let num = factorial(2 * j).pow(6);
        let den = &factorial(4 * j) * &factorial(4 * j + 1);
        acc *= &int_ratio(&num, &den);
    }
    acc
}

/// `(-1)^{C(n+1,2)} (x/2)^{n+1} prod_{j=1}^n (j^4 (x^2 - j^2) / (4 (2j+1) (2j-1)))^{n+1-j}`.
pub fn closed_h_odd(n: usize) -> MultiPoly {
    let x = MultiPoly::var(Symbol::X);
    let half = Rational::new(1, 2).expect("nonzero");
    let mut acc = x.scale(&half).pow(n as u32 + 1).scale(&sign_c2(n));
    for j in 1..=n as i64 {
        let c = Rational::new(j.pow(4), 4 * (2 * j + 1) * (2 * j - 1)).expect("nonzero");
        let factor = x.mul(&x).sub(&MultiPoly::int(j * j)).scale(&c);
        acc = acc.mul(&factor.pow((n as i64 + 1 - j) as u32));
    }
    acc
}

/// `H_n(B_k)` and `H_n(B_{2k}(1/2))` against their closed products.
pub fn check_closed_forms(n: usize) -> Vec<VerifyReport> {
    let one = |id: &str, seq: Sequence<MultiPoly>, closed: Rational| {
        hankel_det(&seq, n)
            .map(|d| VerifyReport::compare(id, n, d, closed))
            .unwrap_or_else(|e| VerifyReport::error(id, n, e))
    };
    vec![
        one("bernoulli.hankel", bernoulli_seq(), closed_h_bk(n)),
        one(
            "bernoulli-even-half.hankel",
            even_at_half_seq(),
            closed_h_b2k_half(n),
        ),
    ]
}

/// `H_n(B_{2k+1}((1+x)/2))` against its closed product, `x` symbolic.
pub fn check_odd_closed(n: usize) -> VerifyReport {
    let id = "bernoulli-odd.hankel";
    hankel_det(&odd_half_seq(), n)
        .map(|d| VerifyReport::compare(id, n, d, closed_h_odd(n)))
        .unwrap_or_else(|e| VerifyReport::error(id, n, e))
}

/// Degree, leading coefficient and parity of `H_n(B_{2k}((1+x)/2))`.
pub fn check_even_theorem(n: usize) -> Vec<VerifyReport> {
    let id = "bernoulli-even.leading";
    let p = match hankel_det(&even_half_seq(), n) {
        Ok(p) => p,
        Err(e) => return vec![VerifyReport::error(id, n, e)],
    };
    let d = (n * (n + 1)) as i32;
    let degree = p
        .degree_in(Symbol::X)
        .map(|v| v.to_string())
        .unwrap_or_else(|e| e.to_string());
    let odd_part = p
        .coefficients_in(Symbol::X)
        .into_iter()
        .filter(|(k, _)| k % 2 != 0)
        .fold(MultiPoly::zero(), |acc, (k, c)| {
            acc.add(&c.mul(&MultiPoly::var_pow(Symbol::X, k)))
        });
    vec![
        VerifyReport::compare("bernoulli-even.degree", n, degree, d),
        VerifyReport::compare(id, n, p.coeff(Symbol::X, d), closed_h_bk(n)),
        match hankel_det(&bernoulli_seq(), n) {
            Ok(direct) => VerifyReport::compare(
                "bernoulli-even.leading-direct",
                n,
                p.coeff(Symbol::X, d),
                direct,
            ),
            Err(e) => VerifyReport::error("bernoulli-even.leading-direct", n, e),
        },
        VerifyReport::compare("bernoulli-even.parity", n, odd_part, 0),
    ]
}

/// `sum_k C(n,k) B_{2k}(ax+b) (-b^2)^{n-k} = sum_k C(n,k) B_{n+k}(ax) (2b)^{n-k}`.
pub fn umbral_identity_check(n: usize) -> VerifyReport {
    let id = "bernoulli.umbral";
    let run = || -> Result<VerifyReport> {
        let a = MultiPoly::var(Symbol::A);
        let b = MultiPoly::var(Symbol::B);
        let ax = a.mul(&MultiPoly::var(Symbol::X));
        let shifted = ax.add(&b);
        let minus_b2 = b.mul(&b).neg();
        let two_b = b.scale(&Rational::from_int(2));
        let mut lhs = MultiPoly::zero();
        let mut rhs = MultiPoly::zero();
        for k in 0..=n {
            let c = binom_r(n, k);
            let e = (n - k) as u32;
            lhs = lhs.add(
                &bernoulli_poly_at(2 * k, &shifted)?
                    .mul(&minus_b2.pow(e))
                    .scale(&c),
            );
            rhs = rhs.add(&bernoulli_poly_at(n + k, &ax)?.mul(&two_b.pow(e)).scale(&c));
        }
        Ok(VerifyReport::compare(id, n, lhs, rhs))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, n, e))
}

/// Median Bernoulli number `K_k = -1/2 sum_l C(k,l) B_{k+l}`.
pub fn median_bernoulli(k: usize) -> Rational {
    let mut s = Rational::zero();
    for l in 0..=k {
        s += &(&binom_r(k, l) * &bernoulli_number(k + l));
    }
    &s * &Rational::new(-1, 2).expect("nonzero")
}

/// `K^{a,b}_k(x) = sum_l C(k,l) B_{k+l}(ax) (2b)^{k-l}` with `a`, `b`, `x` symbolic.
pub fn k_ab(k: usize) -> Result<MultiPoly> {
    let ax = MultiPoly::var(Symbol::A).mul(&MultiPoly::var(Symbol::X));
    let two_b = MultiPoly::var(Symbol::B).scale(&Rational::from_int(2));
    let mut acc = MultiPoly::zero();
    for l in 0..=k {
        let term = bernoulli_poly_at(k + l, &ax)?
            .mul(&two_b.pow((k - l) as u32))
            .scale(&binom_r(k, l));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `B_{2k}(ax+b)` with `a`, `b`, `x` symbolic.
pub fn even_shifted_seq() -> Sequence<MultiPoly> {
    let arg = MultiPoly::var(Symbol::A)
        .mul(&MultiPoly::var(Symbol::X))
        .add(&MultiPoly::var(Symbol::B));
    Sequence::new("B_2k(ax+b)", move |k| bernoulli_poly_at(2 * k, &arg))
}

/// `H_n(K_k) = (-1/2)^{n+1} H_n(B_{2k}(1/2))` and
/// `H_n(K^{a,b}_k(x)) = H_n(B_{2k}(ax+b))`.
pub fn check_kb_relations(n: usize) -> Vec<VerifyReport> {
    let median = Sequence::new("K_k", |k| Ok(MultiPoly::constant(median_bernoulli(k))));
    let first = (|| -> Result<VerifyReport> {
        let lhs = hankel_det(&median, n)?;
        let scale = Rational::new(-1, 2).expect("nonzero").pow(n as i32 + 1)?;
        let rhs = hankel_det(&even_at_half_seq(), n)?.scale(&scale);
        Ok(VerifyReport::compare("median-bernoulli", n, lhs, rhs))
    })()
    .unwrap_or_else(|e| VerifyReport::error("median-bernoulli", n, e));
    let second = (|| -> Result<VerifyReport> {
        let lhs = hankel_det(&Sequence::new("K^{a,b}_k(x)", k_ab), n)?;
        let rhs = hankel_det(&even_shifted_seq(), n)?;
        Ok(VerifyReport::compare("median-bernoulli.ab", n, lhs, rhs))
    })()
    .unwrap_or_else(|e| VerifyReport::error("median-bernoulli.ab", n, e));
    vec![first, second]
}

/// `sum_l C(k,l) B_{k+l}(1/2) x^l`.
pub fn reflected_even_seq() -> Sequence<MultiPoly> {
    Sequence::new("sum C(k,l) B_k+l(1/2) x^l", |k| {
        let half = MultiPoly::constant(Rational::new(1, 2).expect("nonzero"));
        let mut acc = MultiPoly::zero();
        for l in 0..=k {
            let c = bernoulli_poly_at(k + l, &half)?.scale(&binom_r(k, l));
            acc = acc.add(&c.mul(&MultiPoly::var_pow(Symbol::X, l as i32)));
        }
        Ok(acc)
    })
}

/// Replays the `x ↦ 1/x` argument for the even case:
/// `x^{n(n+1)} H_n(B_{2k}((1+x^{-1})/2)) = H_n(sum_l C(k,l) B_{k+l}(1/2) x^l)`,
/// the right side is a genuine polynomial and its constant term is `H_n(B_k)`.
pub fn check_even_reflection(n: usize) -> Vec<VerifyReport> {
    let id = "bernoulli-even.reflection";
    let run = || -> Result<Vec<VerifyReport>> {
        let half = Rational::new(1, 2).expect("nonzero");
        let arg =
            MultiPoly::constant(half.clone()).add(&MultiPoly::var_pow(Symbol::X, -1).scale(&half));
        let laurent = Sequence::new("B_2k((1+1/x)/2)", move |k| bernoulli_poly_at(2 * k, &arg));
        let lhs =
            hankel_det(&laurent, n)?.mul(&MultiPoly::var_pow(Symbol::X, (n * (n + 1)) as i32));
        let rhs = hankel_det(&reflected_even_seq(), n)?;
        let polynomial = rhs.is_zero() || rhs.val_in(Symbol::X)? >= 0;
        let constant = rhs.coeff(Symbol::X, 0);
        Ok(vec![
            VerifyReport::compare(id, n, &lhs, &rhs),
            VerifyReport::compare("bernoulli-even.reflection-polynomial", n, polynomial, true),
            VerifyReport::compare(
                "bernoulli-even.reflection-constant",
                n,
                constant,
                hankel_det(&bernoulli_seq(), n)?,
            ),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e)])
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::hankel::hankel_det_cofactor;
    use crate::poly::parse_poly;
    use crate::random::SeededRationals;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Coefficients of `(e^t - 1)/t` times `sum B_k t^k / k!` must vanish
    /// beyond degree zero.
    fn generating_function_product(k: usize) -> Rational {
        let mut s = Rational::zero();
        for j in 0..=k {
            let inv_fact = Rational::from_integers(
                &Integer::one(),
                &(&factorial(j as u32) * &factorial((k - j + 1) as u32)),
            )
            .unwrap();
            s += &(&bernoulli_number(j) * &inv_fact);
        }
        s
    }

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0), r(1, 1));
        assert_eq!(bernoulli_number(1), r(-1, 2));
        assert_eq!(bernoulli_number(2), r(1, 6));
        assert_eq!(bernoulli_number(12), r(-691, 2730));
        for m in 1..20 {
            assert!(bernoulli_number(2 * m + 1).is_zero());
        }
        assert_eq!(generating_function_product(0), Rational::one());
        for k in 1..=24 {
            assert!(generating_function_product(k).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_poly(0), p("1"));
        assert_eq!(bernoulli_poly(1), p("x - 1/2"));
        assert_eq!(bernoulli_poly(2), p("x^2 - x + 1/6"));
        assert_eq!(
            bernoulli_poly_at(2, &half_shift()).unwrap(),
            p("x^2/4 - 1/12")
        );
        for k in 0..=10 {
            let b = bernoulli_poly(k);
            assert_eq!(b.degree_in(Symbol::X).unwrap(), k as i32);
            assert!(b.coeff(Symbol::X, k as i32).is_one());
        }
    }

    #[test]
    fn difference_property() {
        let shifted = p("x + 1");
        for k in 0..=12 {
            let diff = bernoulli_poly_at(k, &shifted)
                .unwrap()
                .sub(&bernoulli_poly(k));
            let expected = if k == 0 {
                MultiPoly::zero()
            } else {
                MultiPoly::var_pow(Symbol::X, k as i32 - 1).scale(&Rational::from_int(k as i64))
            };
            assert_eq!(diff, expected, "k = {k}");
        }
    }

    #[test]
    fn transform() {
        let bx = binomial_transform(&bernoulli_seq(), Symbol::X);
        for k in 0..=10 {
            assert_eq!(bx.at(k).unwrap(), bernoulli_poly(k));
        }
        let ones = Sequence::new("1", |_| Ok(MultiPoly::one()));
        let t = binomial_transform(&ones, Symbol::X);
        for k in 0..=6 {
            assert_eq!(t.at(k).unwrap(), p("1 + x").pow(k as u32));
        }
    }

    #[test]
    fn invariance_for_bernoulli() {
        for n in 0..=3 {
            let rep = check_binomial_invariance(&bernoulli_seq(), n);
            assert!(rep.pass, "{}", rep.line());
        }
        let h = hankel_det(&binomial_transform(&bernoulli_seq(), Symbol::X), 2).unwrap();
        assert!(h.symbols().is_empty());
    }

    #[test]
    fn invariance_for_random_sequences() {
        let mut rng = SeededRationals::new(7);
        for trial in 0..5 {
            let vals: Vec<MultiPoly> = (0..9)
                .map(|_| MultiPoly::constant(rng.rational_signed()))
                .collect();
            let seq = Sequence::from_values(format!("random{trial}"), vals);
            let rep = check_binomial_invariance(&seq, 3);
            assert!(rep.pass, "{}", rep.line());
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_h_bk(0), Rational::one());
        assert_eq!(closed_h_bk(1), r(-1, 12));
        assert_eq!(closed_h_b2k_half(0), Rational::one());
        assert_eq!(closed_h_b2k_half(1), r(1, 45));
        assert_eq!(closed_h_odd(0), p("x/2"));
        assert_eq!(closed_h_odd(1), p("-x^4/48 + x^2/48"));
        for n in 0..=4 {
            assert_eq!(
                hankel_det(&bernoulli_seq(), n).unwrap(),
                MultiPoly::constant(closed_h_bk(n))
            );
            assert_eq!(
                hankel_det(&even_at_half_seq(), n).unwrap(),
                MultiPoly::constant(closed_h_b2k_half(n))
            );
        }
        for n in 0..=2 {
            assert_eq!(hankel_det(&odd_half_seq(), n).unwrap(), closed_h_odd(n));
            assert!(check_odd_closed(n).pass);
            assert!(check_closed_forms(n).iter().all(|r| r.pass));
        }
    }

    #[test]
    fn even_case_table_rows() {
        assert_eq!(
            hankel_det(&even_half_seq(), 1).unwrap(),
            p("-1/12*x^2 + 1/45")
        );
        assert_eq!(
            hankel_det_cofactor(&even_half_seq(), 2).unwrap(),
            p("-1/540*x^6 + 97/18900*x^4 - 11/4725*x^2 + 16/55125")
        );
        for n in 0..=3 {
            for rep in check_even_theorem(n) {
                assert!(rep.pass, "{}", rep.line());
            }
        }
        assert_eq!(check_even_theorem(3)[1].lhs, "1/42000");
    }

    #[test]
    fn umbral_identity() {
        for n in 0..=4 {
            let rep = umbral_identity_check(n);
            assert!(rep.pass, "{}", rep.line());
        }
    }

    #[test]
    fn median_numbers() {
        assert_eq!(median_bernoulli(0), r(-1, 2));
        assert_eq!(median_bernoulli(1), r(1, 6));
        assert_eq!(k_ab(0).unwrap(), MultiPoly::one());
        for n in 0..=2 {
            for rep in check_kb_relations(n) {
                assert!(rep.pass, "{}", rep.line());
            }
        }
    }

    #[test]
    fn reflection_replay() {
        for n in 0..=2 {
            for rep in check_even_reflection(n) {
                assert!(rep.pass, "{}", rep.line());
            }
        }
    }

    proptest! {
        #[test]
        fn symmetry_under_reflection(k in 0usize..12) {
            // B_k(1 - x) = (-1)^k B_k(x)
            let lhs = bernoulli_poly_at(k, &p("1 - x")).unwrap();
            let rhs = if k % 2 == 0 { bernoulli_poly(k) } else { bernoulli_poly(k).neg() };
            prop_assert_eq!(lhs, rhs);
        }
    }
}
