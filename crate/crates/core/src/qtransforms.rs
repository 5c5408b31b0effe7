//! The two q-binomial transforms of a generic sequence, their reflections,
//! the modified difference operators and the leading-coefficient theorems.

use crate::error::{Error, Result};
use crate::hankel::{det_bareiss, hankel_det, Sequence};
use crate::poly::{MultiPoly, Symbol};
use crate::qtools::{q_binom, q_pochhammer};
use crate::random::SeededRationals;
use crate::rational::{binomial, Rational};
use crate::report::VerifyReport;

fn q_pow(e: i64) -> MultiPoly {
    MultiPoly::var_pow(Symbol::Q, e as i32)
}

fn x_pow(e: i64) -> MultiPoly {
    MultiPoly::var_pow(Symbol::X, e as i32)
}

fn c2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

fn c3(k: usize) -> i64 {
    binomial(k as u32, 3).to_i64().expect("small")
}

/// A sequence `alpha_0, ..., alpha_bound`, either the generic ring symbols
/// or numeric values.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericSeq {
    values: Vec<MultiPoly>,
    label: String,
}

impl GenericSeq {
    pub fn symbolic(bound: usize) -> Self {
        GenericSeq {
            values: (0..=bound)
                .map(|k| MultiPoly::var(Symbol::alpha(k)))
                .collect(),
            label: "alpha".into(),
        }
    }

    pub fn numeric(values: Vec<Rational>) -> Self {
        GenericSeq {
            label: format!(
                "[{}]",
                values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            values: values.into_iter().map(MultiPoly::constant).collect(),
        }
    }

    pub fn from_polys(label: impl Into<String>, values: Vec<MultiPoly>) -> Self {
        GenericSeq {
            values,
            label: label.into(),
        }
    }

    /// Seeded rationals `p/q` with `1 ≤ p, q ≤ 9`.
    pub fn random(seed: u64, bound: usize) -> Self {
        let mut rng = SeededRationals::new(seed);
        Self::numeric((0..=bound).map(|_| rng.rational()).collect())
    }

    pub fn bound(&self) -> usize {
        self.values.len() - 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn at(&self, k: usize) -> Result<MultiPoly> {
        self.values.get(k).cloned().ok_or(Error::IndexBeyondBound {
            index: k,
            bound: self.bound(),
        })
    }

    pub fn as_sequence(&self) -> Sequence<MultiPoly> {
        Sequence::from_values(self.label.clone(), self.values.clone())
    }

    fn require(&self, top: usize) -> Result<()> {
        if top > self.bound() {
            return Err(Error::IndexBeyondBound {
                index: top,
                bound: self.bound(),
            });
        }
        Ok(())
    }
}

/// Which of the two q-binomial transforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `alpha_k(x) = sum_l q^{C(l,2)} [k,l] alpha_{k-l} x^l`.
    Plain,
    /// `alpha~_k(x) = sum_l q^{C(l,2)} [k,l] alpha_l x^{k-l}`.
    Tilde,
}

impl Transform {
    fn name(self) -> &'static str {
        match self {
            Transform::Plain => "alpha",
            Transform::Tilde => "alpha-tilde",
        }
    }
}

fn weight(k: usize, l: usize) -> MultiPoly {
    q_binom(k, l as i64).mul(&q_pow(c2(l)))
}

pub fn alpha_poly(k: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    seq.require(k)?;
    (0..=k).try_fold(MultiPoly::zero(), |acc, l| {
        Ok(acc.add(&weight(k, l).mul(&seq.at(k - l)?).mul(&x_pow(l as i64))))
    })
}

pub fn alpha_tilde_poly(k: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    seq.require(k)?;
    (0..=k).try_fold(MultiPoly::zero(), |acc, l| {
        Ok(acc.add(&weight(k, l).mul(&seq.at(l)?).mul(&x_pow((k - l) as i64))))
    })
}

pub fn transform_poly(kind: Transform, k: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    match kind {
        Transform::Plain => alpha_poly(k, seq),
        Transform::Tilde => alpha_tilde_poly(k, seq),
    }
}

pub fn transform_seq(kind: Transform, seq: &GenericSeq) -> Sequence<MultiPoly> {
    let s = seq.clone();
    Sequence::new(format!("{}_k(x)", kind.name()), move |k| {
        transform_poly(kind, k, &s)
    })
}

/// `x^k T_k(x^{-1})` computed in the Laurent ring; fails with
/// `NotPolynomial` if a negative power of `x` survives.
pub fn reflect(kind: Transform, k: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    let t = transform_poly(kind, k, seq)?;
    let r = t.substitute(Symbol::X, &x_pow(-1))?.mul(&x_pow(k as i64));
    if !r.is_zero() && r.val_in(Symbol::X)? < 0 {
        return Err(Error::NotPolynomial(r.to_string()));
    }
    Ok(r)
}

/// The summation form of the reflected transform.
pub fn reflect_closed(kind: Transform, k: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    seq.require(k)?;
    (0..=k).try_fold(MultiPoly::zero(), |acc, l| {
        let term = match kind {
            Transform::Plain => seq.at(k - l)?.mul(&x_pow((k - l) as i64)),
            Transform::Tilde => seq.at(l)?.mul(&x_pow(l as i64)),
        };
        Ok(acc.add(&weight(k, l).mul(&term)))
    })
}

/// `H_n(T'_k(x)) = x^{n(n+1)} H_n(T_k(x^{-1}))` in the Laurent ring.
pub fn check_reflection_dets(kind: Transform, n: usize, seq: &GenericSeq) -> VerifyReport {
    let id = format!("{}.reflection", kind.name());
    let run = || -> Result<VerifyReport> {
        seq.require(2 * n)?;
        let s = seq.clone();
        let reflected = Sequence::new("T'_k", move |k| reflect(kind, k, &s));
        let lhs = hankel_det(&reflected, n)?;
        let s = seq.clone();
        let inverted = Sequence::new("T_k(1/x)", move |k| {
            transform_poly(kind, k, &s)?.substitute(Symbol::X, &x_pow(-1))
        });
        let rhs = hankel_det(&inverted, n)?.mul(&x_pow((n * (n + 1)) as i64));
        Ok(VerifyReport::compare(&id, n, lhs, rhs).with_param("seq", seq.label()))
    };
    run().unwrap_or_else(|e| VerifyReport::error(&id, n, e))
}

/// `Δ_i(s_k) = s_k - q^{i-1} s_{k-1}` on a finite window, `s_{-1} = 0`;
/// `Δ_0` is the identity.
pub fn delta_apply(i: usize, window: &[MultiPoly]) -> Vec<MultiPoly> {
    if i == 0 {
        return window.to_vec();
    }
    let f = q_pow(i as i64 - 1);
    (0..window.len())
        .map(|k| {
            if k == 0 {
                window[0].clone()
            } else {
                window[k].sub(&window[k - 1].mul(&f))
            }
        })
        .collect()
}

/// `Δ_m ... Δ_0` applied to `(alpha~'_j(x))_{j ≤ k}`, read at index `k`.
pub fn delta_chain(k: usize, m: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    let mut window: Vec<MultiPoly> = (0..=k)
        .map(|j| reflect(Transform::Tilde, j, seq))
        .collect::<Result<_>>()?;
    for i in 0..=m {
        window = delta_apply(i, &window);
    }
    Ok(window[k].clone())
}

/// `sum_{l=m}^k q^{(k-l)m + C(l,2)} [k-m, l-m] alpha_l x^l`.
pub fn delta_chain_closed(k: usize, m: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    (m..=k).try_fold(MultiPoly::zero(), |acc, l| {
        let c = q_binom(k - m, (l - m) as i64).mul(&q_pow(((k - l) * m) as i64 + c2(l)));
        Ok(acc.add(&c.mul(&seq.at(l)?).mul(&x_pow(l as i64))))
    })
}

pub fn delta_chain_check(k: usize, m: usize, seq: &GenericSeq) -> VerifyReport {
    let id = "delta-chain";
    let run = || -> Result<VerifyReport> {
        if m > k {
            return Err(Error::DomainError(format!(
                "need m <= k, got m = {m}, k = {k}"
            )));
        }
        Ok(VerifyReport::compare(
            id,
            k,
            delta_chain(k, m, seq)?,
            delta_chain_closed(k, m, seq)?,
        )
        .with_param("m", m))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, k, e).with_param("m", m))
}

pub fn qk2_seq() -> Sequence<MultiPoly> {
    Sequence::new("q^C(k,2)", |k| Ok(q_pow(c2(k))))
}

/// `prod_{j=1}^n (1 - q^j)^{n+1-j}`.
fn staircase(n: usize) -> MultiPoly {
    (1..=n).fold(MultiPoly::one(), |acc, j| {
        acc.mul(&q_pochhammer(&q_pow(j as i64), 1).pow((n + 1 - j) as u32))
    })
}

fn sign(n: usize) -> Rational {
    if c2(n + 1) % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

/// `(-1)^{C(n+1,2)} q^{e C(n+1,3)} prod_{j=1}^n (1 - q^j)^{n+1-j}`.
pub fn vandermonde_q_closed(n: usize, e: i64) -> MultiPoly {
    staircase(n).mul(&q_pow(e * c3(n + 1))).scale(&sign(n))
}

/// `H_n(q^{C(k,2)})` against its closed product.
pub fn vandermonde_q_check(n: usize) -> VerifyReport {
    let id = "q-binomial-k2.hankel";
    match hankel_det(&qk2_seq(), n) {
        Ok(h) => VerifyReport::compare(id, n, h, vandermonde_q_closed(n, 3)),
        Err(e) => VerifyReport::error(id, n, e),
    }
}

/// Expected leading coefficient of `H_n(alpha_k(x))`.
pub fn lc_plain(n: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    Ok(seq
        .at(0)?
        .pow(n as u32 + 1)
        .mul(&vandermonde_q_closed(n, 3)))
}

/// Expected leading coefficient of `H_n(alpha~_k(x))`.
pub fn lc_tilde(n: usize, seq: &GenericSeq) -> Result<MultiPoly> {
    let prod = (0..=n).try_fold(MultiPoly::one(), |acc, i| {
        Ok::<_, Error>(acc.mul(&seq.at(i)?))
    })?;
    Ok(prod.mul(&vandermonde_q_closed(n, 2)))
}

fn leading_reports(
    id: &str,
    n: usize,
    seq: &GenericSeq,
    d: &MultiPoly,
    degree: usize,
    expected: MultiPoly,
) -> Result<Vec<VerifyReport>> {
    let deg = if d.is_zero() {
        -1
    } else {
        d.degree_in(Symbol::X)?
    };
    Ok(vec![
        VerifyReport::compare(&format!("{id}.degree"), n, deg, degree)
            .with_param("seq", seq.label()),
        VerifyReport::compare(
            &format!("{id}.leading"),
            n,
            d.coeff(Symbol::X, degree as i32),
            expected,
        )
        .with_param("seq", seq.label()),
    ])
}

/// Degree `n(n+1)` and leading coefficient of `H_n(alpha_k(x))`.
pub fn check_theorem_qalpha(n: usize, seq: &GenericSeq) -> Vec<VerifyReport> {
    let run = || -> Result<Vec<VerifyReport>> {
        seq.require(2 * n)?;
        let d = hankel_det(&transform_seq(Transform::Plain, seq), n)?;
        leading_reports("alpha.theorem", n, seq, &d, n * (n + 1), lc_plain(n, seq)?)
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error("alpha.theorem", n, e)])
}

/// Degree `n(n+1)/2` and leading coefficient of `H_n(alpha~_k(x))`.
pub fn check_theorem_qalpha_tilde(n: usize, seq: &GenericSeq) -> Vec<VerifyReport> {
    let run = || -> Result<Vec<VerifyReport>> {
        seq.require(2 * n)?;
        let d = hankel_det(&transform_seq(Transform::Tilde, seq), n)?;
        leading_reports(
            "alpha-tilde.theorem",
            n,
            seq,
            &d,
            n * (n + 1) / 2,
            lc_tilde(n, seq)?,
        )
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error("alpha-tilde.theorem", n, e)])
}

/// At `q = 1` the transform is the ordinary binomial transform, so
/// `H_n(alpha_k(x))|_{q=1} = H_n(alpha_k)`.
pub fn check_q_to_one(n: usize, seq: &GenericSeq) -> VerifyReport {
    let id = "alpha.q-to-one";
    let run = || -> Result<VerifyReport> {
        seq.require(2 * n)?;
        let s = seq.clone();
        let at_one = Sequence::new("alpha_k(x)|q=1", move |k| {
            alpha_poly(k, &s)?.substitute(Symbol::Q, &MultiPoly::one())
        });
        let lhs = hankel_det(&at_one, n)?;
        let rhs = hankel_det(&seq.as_sequence(), n)?;
        Ok(VerifyReport::compare(id, n, lhs, rhs))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, n, e))
}

/// `alpha_k(x)` as the umbral product `prod_{j<k} (A + q^j x)` with
/// `A^m ↦ alpha_m`.
pub fn check_umbral_product(k: usize, seq: &GenericSeq) -> VerifyReport {
    let id = "alpha.umbral-product";
    let run = || -> Result<VerifyReport> {
        let umbra = Symbol::W;
        let prod = (0..k).fold(MultiPoly::one(), |acc, j| {
            acc.mul(&MultiPoly::var(umbra).add(&x_pow(1).mul(&q_pow(j as i64))))
        });
        let mut evaluated = MultiPoly::zero();
        for (m, c) in prod.coefficients_in(umbra) {
            evaluated = evaluated.add(&c.mul(&seq.at(m as usize)?));
        }
        Ok(VerifyReport::compare(id, k, evaluated, alpha_poly(k, seq)?))
    };
    run().unwrap_or_else(|e| VerifyReport::error(id, k, e))
}

/// Replays the staged row operations on `(alpha~'_{i+j}(x))`: after them
/// row `i` is divisible by `x^i`, its entries match the Δ-chain closed form,
/// the determinant is unchanged, and at `x = 0` the row-reduced matrix is
/// `(q^{ij + C(i,2)} alpha_i)`.
pub fn check_row_transformation(n: usize, seq: &GenericSeq) -> Vec<VerifyReport> {
    let id = "alpha-tilde.row-transformation";
    let run = || -> Result<Vec<VerifyReport>> {
        seq.require(2 * n)?;
        let original: Vec<Vec<MultiPoly>> = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| reflect(Transform::Tilde, i + j, seq))
                    .collect()
            })
            .collect::<Result<_>>()?;
        let mut m = original.clone();
        for step in 1..=n {
            let f = q_pow(step as i64 - 1);
            for i in (step..=n).rev() {
                let above = m[i - 1].clone();
                for (e, a) in m[i].iter_mut().zip(&above) {
                    *e = e.sub(&a.mul(&f));
                }
            }
        }
        let mut entries_ok = true;
        let mut valuation_ok = true;
        let mut reduced = Vec::new();
        let mut at_zero = Vec::new();
        for (i, row) in m.iter().enumerate() {
            let mut rrow = Vec::new();
            let mut zrow = Vec::new();
            for (j, e) in row.iter().enumerate() {
                entries_ok &= *e == delta_chain_closed(i + j, i, seq)?;
                valuation_ok &= e.is_zero() || e.val_in(Symbol::X)? >= i as i32;
                let r = e.mul(&x_pow(-(i as i64)));
                zrow.push(r.coeff(Symbol::X, 0));
                rrow.push(r);
                let expected = q_pow((i * j) as i64 + c2(i)).mul(&seq.at(i)?);
                entries_ok &= *zrow.last().expect("pushed") == expected;
            }
            reduced.push(rrow);
            at_zero.push(zrow);
        }
        let before = det_bareiss(original)?;
        let after = det_bareiss(reduced)?.mul(&x_pow((n * (n + 1) / 2) as i64));
        let constant = det_bareiss(at_zero)?;
        Ok(vec![
            VerifyReport::compare(&format!("{id}.entries"), n, entries_ok, true),
            VerifyReport::compare(&format!("{id}.valuation"), n, valuation_ok, true),
            VerifyReport::compare(&format!("{id}.determinant"), n, before, after),
            VerifyReport::compare(&format!("{id}.constant"), n, constant, lc_tilde(n, seq)?),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error(id, n, e)])
}

/// `[x^d] H_n(T_k(x))` for every `d`, highest first, with generic symbols.
pub fn coefficient_rows(kind: Transform, n: usize) -> Result<Vec<(i32, MultiPoly)>> {
    let seq = GenericSeq::symbolic(2 * n);
    let d = hankel_det(&transform_seq(kind, &seq), n)?;
    let top = match kind {
        Transform::Plain => n * (n + 1),
        Transform::Tilde => n * (n + 1) / 2,
    } as i32;
    Ok((0..=top)
        .rev()
        .map(|k| (k, d.coeff(Symbol::X, k)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::hankel_det_cofactor;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn all_pass(reports: &[VerifyReport]) {
        for r in reports {
            assert!(r.pass, "{}", r.line());
        }
    }

    #[test]
    fn transforms() {
        let s = GenericSeq::symbolic(6);
        assert_eq!(alpha_poly(0, &s).unwrap(), p("alpha_0"));
        assert_eq!(alpha_poly(1, &s).unwrap(), p("alpha_1 + alpha_0*x"));
        assert_eq!(
            alpha_poly(2, &s).unwrap(),
            p("alpha_2 + (1+q)*alpha_1*x + q*alpha_0*x^2")
        );
        assert_eq!(alpha_tilde_poly(0, &s).unwrap(), p("alpha_0"));
        assert_eq!(alpha_tilde_poly(1, &s).unwrap(), p("alpha_0*x + alpha_1"));
        assert_eq!(
            alpha_tilde_poly(2, &s).unwrap(),
            p("alpha_0*x^2 + (1+q)*alpha_1*x + q*alpha_2")
        );
        assert!(matches!(
            alpha_poly(7, &s),
            Err(Error::IndexBeyondBound { index: 7, bound: 6 })
        ));
    }

    #[test]
    fn reflections() {
        let s = GenericSeq::symbolic(6);
        assert_eq!(
            reflect(Transform::Plain, 1, &s).unwrap(),
            p("alpha_1*x + alpha_0")
        );
        assert_eq!(reflect(Transform::Tilde, 0, &s).unwrap(), p("alpha_0"));
        assert_eq!(
            reflect(Transform::Tilde, 2, &s).unwrap(),
            p("alpha_0 + (1+q)*alpha_1*x + q*alpha_2*x^2")
        );
        for kind in [Transform::Plain, Transform::Tilde] {
            for k in 0..=6 {
                assert_eq!(
                    reflect(kind, k, &s).unwrap(),
                    reflect_closed(kind, k, &s).unwrap()
                );
            }
            for n in 0..=2 {
                let rep = check_reflection_dets(kind, n, &s);
                assert!(rep.pass, "{}", rep.line());
            }
        }
    }

    #[test]
    fn delta_operators() {
        let w = vec![p("a"), p("b"), p("c")];
        assert_eq!(delta_apply(0, &w), w);
        assert_eq!(delta_apply(2, &w), vec![p("a"), p("b - q*a"), p("c - q*b")]);
        let s = GenericSeq::symbolic(6);
        assert_eq!(
            delta_chain(2, 0, &s).unwrap(),
            reflect(Transform::Tilde, 2, &s).unwrap()
        );
        assert_eq!(
            delta_chain(2, 1, &s).unwrap(),
            p("q*alpha_1*x + q*alpha_2*x^2")
        );
        for k in 0..=6 {
            for m in 0..=k {
                let rep = delta_chain_check(k, m, &s);
                assert!(rep.pass, "{}", rep.line());
            }
        }
        assert!(!delta_chain_check(1, 2, &s).pass);
    }

    #[test]
    fn vandermonde() {
        assert_eq!(hankel_det(&qk2_seq(), 1).unwrap(), p("q - 1"));
        for n in 0..=6 {
            let rep = vandermonde_q_check(n);
            assert!(rep.pass, "{}", rep.line());
        }
    }

    #[test]
    fn leading_coefficients_small() {
        let s = GenericSeq::symbolic(6);
        assert_eq!(lc_plain(1, &s).unwrap(), p("-(1-q)*alpha_0^2"));
        let t1 = hankel_det(&transform_seq(Transform::Tilde, &s), 1).unwrap();
        assert_eq!(
            t1,
            p("x*(q-1)*alpha_0*alpha_1 + q*alpha_0*alpha_2 - alpha_1^2")
        );
        for n in 0..=2 {
            all_pass(&check_theorem_qalpha(n, &s));
            all_pass(&check_theorem_qalpha_tilde(n, &s));
        }
        let r = GenericSeq::random(1, 8);
        all_pass(&check_theorem_qalpha(3, &r));
        all_pass(&check_theorem_qalpha_tilde(3, &r));
    }

    #[test]
    fn h2_rows_have_expected_leading_entries() {
        let rows = coefficient_rows(Transform::Plain, 2).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0].1, p("-q^3*(1-q)^3*(1+q)*alpha_0^3"));
        assert_eq!(
            rows[6].1,
            p("alpha_0*alpha_2*alpha_4 - alpha_0*alpha_3^2 + 2*alpha_1*alpha_2*alpha_3 - alpha_1^2*alpha_4 - alpha_2^3")
        );
        let tilde = coefficient_rows(Transform::Tilde, 2).unwrap();
        assert_eq!(tilde.len(), 4);
        assert_eq!(tilde[0].1, p("-q^2*(1-q)^3*(1+q)*alpha_0*alpha_1*alpha_2"));
        let s = GenericSeq::symbolic(4);
        assert_eq!(
            hankel_det(&transform_seq(Transform::Plain, &s), 2).unwrap(),
            hankel_det_cofactor(&transform_seq(Transform::Plain, &s), 2).unwrap()
        );
    }

    #[test]
    fn degenerations_and_umbral_form() {
        let s = GenericSeq::symbolic(8);
        for n in 0..=2 {
            let rep = check_q_to_one(n, &s);
            assert!(rep.pass, "{}", rep.line());
        }
        for k in 0..=8 {
            let rep = check_umbral_product(k, &s);
            assert!(rep.pass, "{}", rep.line());
        }
    }

    #[test]
    fn row_transformation_replay() {
        let s = GenericSeq::symbolic(6);
        for n in 0..=2 {
            all_pass(&check_row_transformation(n, &s));
        }
    }

    #[test]
    fn random_sequences_are_seeded() {
        assert_eq!(GenericSeq::random(9, 4), GenericSeq::random(9, 4));
        assert_ne!(GenericSeq::random(9, 4), GenericSeq::random(10, 4));
    }
}
