//! Hankel matrices and exact determinants.
//!
//! [`det_bareiss`] is the production algorithm over integral domains,
//! [`det_gauss`] handles fields, and [`det_cofactor`] (Laplace expansion) is
//! kept as an independent oracle for small orders.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Symbol};
use crate::report::VerifyReport;
use crate::ring::{ExactDiv, Field, Ring};

type Generator<T> = dyn Fn(usize) -> Result<T> + Send + Sync;

/// An indexed sequence `k ↦ a_k` of ring elements.
#[derive(Clone)]
pub struct Sequence<T> {
    name: String,
    generator: Arc<Generator<T>>,
}

impl<T: 'static> Sequence<T> {
    pub fn new<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(usize) -> Result<T> + Send + Sync + 'static,
    {
        Sequence {
            name: name.into(),
            generator: Arc::new(f),
        }
    }

    /// A sequence given by a finite list; indices past the end fail.
    pub fn from_values(name: impl Into<String>, values: Vec<T>) -> Self
    where
        T: Clone + Send + Sync,
    {
        let bound = values.len();
        Sequence::new(name, move |k| {
            values
                .get(k)
                .cloned()
                .ok_or(Error::IndexBeyondBound { index: k, bound })
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn at(&self, k: usize) -> Result<T> {
        (self.generator)(k)
    }

    /// `k ↦ f(k, a_k)`.
    pub fn map<U: 'static, F>(&self, name: impl Into<String>, f: F) -> Sequence<U>
    where
        F: Fn(usize, T) -> Result<U> + Send + Sync + 'static,
    {
        let inner = self.generator.clone();
        Sequence::new(name, move |k| f(k, inner(k)?))
    }
}

impl<T> fmt::Debug for Sequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Sequence")
            .field("name", &self.name)
            .finish()
    }
}

/// The `(n+1)×(n+1)` matrix `(a_{i+j})`, stored by its anti-diagonals.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelMatrix<T> {
    order: usize,
    diagonals: Vec<T>,
}

impl<T: Clone> HankelMatrix<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.order + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.diagonals[i + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }
}

pub fn hankel_matrix<T: Clone + 'static>(seq: &Sequence<T>, n: usize) -> Result<HankelMatrix<T>> {
    let diagonals = (0..=2 * n).map(|k| seq.at(k)).collect::<Result<Vec<_>>>()?;
    Ok(HankelMatrix {
        order: n,
        diagonals,
    })
}

fn check_square<T>(rows: &[Vec<T>]) -> Result<()> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!(
            "matrix with {n} rows is not square"
        )));
    }
    Ok(())
}

/// Swaps in the first lower row with a nonzero entry in column `k`.
/// Returns false when the whole column below the diagonal is zero.
fn pivot<T: Ring>(m: &mut [Vec<T>], k: usize, negate: &mut bool) -> bool {
    if !m[k][k].is_zero() {
        return true;
    }
    match (k + 1..m.len()).find(|&i| !m[i][k].is_zero()) {
        Some(i) => {
            m.swap(k, i);
            *negate = !*negate;
            true
        }
        None => false,
    }
}

/// Fraction-free (Bareiss) elimination. Every intermediate division is
/// exact; a failing division indicates a kernel bug.
pub fn det_bareiss<T: ExactDiv>(mut m: Vec<Vec<T>>) -> Result<T> {
    check_square(&m)?;
    let n = m.len();
    if n == 0 {
        return Ok(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if !pivot(&mut m, k, &mut negate) {
            return Ok(T::zero());
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let num = pivot_row[k].mul(&row[j]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = num.div_exact(&prev)?;
            }
            row[k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Gaussian elimination with field division.
pub fn det_gauss<T: Field>(mut m: Vec<Vec<T>>) -> Result<T> {
    check_square(&m)?;
    let n = m.len();
    let mut negate = false;
    let mut det = T::one();
    for k in 0..n {
        if !pivot(&mut m, k, &mut negate) {
            return Ok(T::zero());
        }
        let inv = m[k][k].inv()?;
        det = det.mul(&m[k][k]);
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = row[k].mul(&inv);
            for j in k + 1..n {
                row[j] = row[j].sub(&f.mul(&pivot_row[j]));
            }
            row[k] = T::zero();
        }
    }
    Ok(if negate { det.neg() } else { det })
}

/// Largest matrix dimension accepted by [`det_cofactor`].
pub const COFACTOR_MAX_DIM: usize = 7;

/// Laplace expansion along the first row.
pub fn det_cofactor<T: Ring>(m: &[Vec<T>]) -> Result<T> {
    check_square(m)?;
    let n = m.len();
    if n > COFACTOR_MAX_DIM {
        return Err(Error::CostGuardExceeded {
            what: "cofactor expansion dimension".into(),
            requested: n,
            limit: COFACTOR_MAX_DIM,
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace<T: Ring>(m: &[Vec<T>], row: usize, cols: &[usize]) -> T {
    if cols.is_empty() {
        return T::one();
    }
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = T::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&laplace(m, row + 1, &rest));
        acc = if pos % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// `H_n(a_k)` by Bareiss elimination.
pub fn hankel_det<T: ExactDiv + 'static>(seq: &Sequence<T>, n: usize) -> Result<T> {
    det_bareiss(hankel_matrix(seq, n)?.rows())
}

/// `H_n(a_k)` by Gaussian elimination over a field.
pub fn hankel_det_field<T: Field + 'static>(seq: &Sequence<T>, n: usize) -> Result<T> {
    det_gauss(hankel_matrix(seq, n)?.rows())
}

/// Order bound of [`hankel_det_cofactor`].
pub const COFACTOR_MAX_ORDER: usize = COFACTOR_MAX_DIM - 1;

/// `H_n(a_k)` by Laplace expansion; `n ≤ 6`.
pub fn hankel_det_cofactor<T: Ring + 'static>(seq: &Sequence<T>, n: usize) -> Result<T> {
    if n > COFACTOR_MAX_ORDER {
        return Err(Error::CostGuardExceeded {
            what: "cofactor Hankel order".into(),
            requested: n,
            limit: COFACTOR_MAX_ORDER,
        });
    }
    det_cofactor(&hankel_matrix(seq, n)?.rows())
}

/// `a0^{n+1} v_1^n v_2^{n-1} ··· v_n`.
pub fn heilermann_det<T: Ring>(a0: &T, v: &[T], n: usize) -> Result<T> {
    if v.len() < n {
        return Err(Error::Dimension(format!(
            "need {n} recurrence coefficients, got {}",
            v.len()
        )));
    }
    let mut acc = ring_pow(a0, n as u32 + 1);
    for (j, vj) in v.iter().take(n).enumerate() {
        acc = acc.mul(&ring_pow(vj, (n - j) as u32));
    }
    Ok(acc)
}

pub fn ring_pow<T: Ring>(base: &T, e: u32) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// Row/column scaling: `H_n(t a_k) = t^{n+1} H_n(a_k)` and
/// `H_n(t^k a_k) = t^{n(n+1)} H_n(a_k)`.
pub fn check_scaling_lemmas(seq: &Sequence<MultiPoly>, n: usize, t: Symbol) -> Vec<VerifyReport> {
    let run = || -> Result<Vec<VerifyReport>> {
        let base = hankel_det(seq, n)?;
        let tv = MultiPoly::var(t);
        let scaled = seq.map("t*a_k", move |_, a| Ok(a.mul(&tv)));
        let lhs1 = hankel_det(&scaled, n)?;
        let rhs1 = MultiPoly::var_pow(t, n as i32 + 1).mul(&base);
        let powered = seq.map("t^k*a_k", move |k, a| {
            Ok(a.mul(&MultiPoly::var_pow(t, k as i32)))
        });
        let lhs2 = hankel_det(&powered, n)?;
        let rhs2 = MultiPoly::var_pow(t, (n * (n + 1)) as i32).mul(&base);
        Ok(vec![
            VerifyReport::compare("hankel.scale-constant", n, lhs1, rhs1)
                .with_param("seq", seq.name()),
            VerifyReport::compare("hankel.scale-power", n, lhs2, rhs2)
                .with_param("seq", seq.name()),
        ])
    };
    run().unwrap_or_else(|e| vec![VerifyReport::error("hankel.scaling", n, e)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::random::SeededRationals;
    use crate::rational::Rational;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn bernoulli_prefix() -> Sequence<MultiPoly> {
        Sequence::from_values(
            "B_k",
            ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"]
                .iter()
                .map(|s| p(s))
                .collect(),
        )
    }

    #[test]
    fn matrix_construction() {
        let m = hankel_matrix(&bernoulli_prefix(), 1).unwrap();
        assert_eq!(
            m.rows(),
            vec![vec![p("1"), p("-1/2")], vec![p("-1/2"), p("1/6")]]
        );
        let m0 = hankel_matrix(&bernoulli_prefix(), 0).unwrap();
        assert_eq!(m0.rows(), vec![vec![p("1")]]);
        let qk2 = Sequence::new("q^C(k,2)", |k| {
            Ok(MultiPoly::var_pow(
                Symbol::Q,
                (k * k.saturating_sub(1) / 2) as i32,
            ))
        });
        assert_eq!(
            hankel_matrix(&qk2, 1).unwrap().rows(),
            vec![vec![p("1"), p("1")], vec![p("1"), p("q")]]
        );
        let m3 = hankel_matrix(&bernoulli_prefix(), 3).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i + j < 6 && i > 0 && j < 3 {
                    assert_eq!(m3.entry(i, j), m3.entry(i - 1, j + 1));
                }
            }
        }
    }

    #[test]
    fn small_determinants() {
        assert_eq!(hankel_det(&bernoulli_prefix(), 1).unwrap(), p("-1/12"));
        assert_eq!(hankel_det(&bernoulli_prefix(), 0).unwrap(), p("1"));
        assert_eq!(hankel_det_cofactor(&bernoulli_prefix(), 0).unwrap(), p("1"));
        let generic = Sequence::new("alpha", |k| Ok(MultiPoly::var(Symbol::alpha(k))));
        assert_eq!(hankel_det(&generic, 0).unwrap(), p("alpha_0"));
        assert_eq!(
            hankel_det(&generic, 1).unwrap(),
            p("alpha_0*alpha_2 - alpha_1^2")
        );
        assert_eq!(
            hankel_det(&generic, 2).unwrap(),
            hankel_det_cofactor(&generic, 2).unwrap()
        );
    }

    #[test]
    fn unit_bernoulli_agreement_through_order_three() {
        for n in 0..=3 {
            assert_eq!(
                hankel_det(&bernoulli_prefix(), n).unwrap(),
                hankel_det_cofactor(&bernoulli_prefix(), n).unwrap()
            );
        }
    }

    #[test]
    fn zero_pivots_swap_rows() {
        // a_0 = 0 forces a swap at the first step.
        let seq = Sequence::from_values(
            "s",
            ["0", "1", "2", "x", "5"].iter().map(|s| p(s)).collect(),
        );
        for n in 1..=2 {
            assert_eq!(
                hankel_det(&seq, n).unwrap(),
                hankel_det_cofactor(&seq, n).unwrap()
            );
        }
        let zeros = Sequence::from_values("0", vec![MultiPoly::zero(); 5]);
        assert!(hankel_det(&zeros, 2).unwrap().is_zero());
    }

    #[test]
    fn equal_rows_give_zero() {
        let rows = vec![
            vec![p("x+q"), p("1"), p("u")],
            vec![p("3"), p("x^2"), p("q*u")],
            vec![p("x+q"), p("1"), p("u")],
        ];
        assert!(det_bareiss(rows.clone()).unwrap().is_zero());
        assert!(det_cofactor(&rows).unwrap().is_zero());
    }

    #[test]
    fn cost_guard() {
        let s = Sequence::new("one", |_| Ok(MultiPoly::one()));
        assert!(matches!(
            hankel_det_cofactor(&s, 7),
            Err(Error::CostGuardExceeded { .. })
        ));
    }

    #[test]
    fn non_square_rejected() {
        let rows = vec![vec![p("1"), p("2")], vec![p("3")]];
        assert!(matches!(det_bareiss(rows), Err(Error::Dimension(_))));
    }

    #[test]
    fn generator_failure_propagates() {
        let short = Sequence::from_values("short", vec![p("1"), p("2")]);
        assert!(matches!(
            hankel_det(&short, 1),
            Err(Error::IndexBeyondBound { index: 2, bound: 2 })
        ));
    }

    #[test]
    fn heilermann_product() {
        let a0 = p("a");
        assert_eq!(heilermann_det(&a0, &[], 0).unwrap(), a0);
        assert_eq!(heilermann_det(&p("1"), &[p("v")], 1).unwrap(), p("v"));
        assert_eq!(
            heilermann_det(&p("2"), &[p("u"), p("w")], 2).unwrap(),
            p("8*u^2*w")
        );
        assert!(heilermann_det(&p("1"), &[p("u")], 2).is_err());
    }

    #[test]
    fn scaling_lemmas_hold() {
        for n in 0..=2 {
            assert!(check_scaling_lemmas(&bernoulli_prefix(), n, Symbol::T)
                .iter()
                .all(|r| r.pass));
        }
        let mut rng = SeededRationals::new(3);
        let vals: Vec<MultiPoly> = (0..7)
            .map(|_| MultiPoly::constant(rng.rational()))
            .collect();
        let seq = Sequence::from_values("random", vals);
        let reports = check_scaling_lemmas(&seq, 3, Symbol::T);
        assert!(reports.iter().all(|r| r.pass), "{reports:?}");
    }

    #[test]
    fn gauss_matches_bareiss_on_rationals() {
        use crate::poly::RatFuncQ;
        let mut rng = SeededRationals::new(11);
        for n in 1..=4 {
            let rows: Vec<Vec<MultiPoly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| MultiPoly::constant(rng.rational_signed()))
                        .collect()
                })
                .collect();
            let as_field: Vec<Vec<RatFuncQ>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| RatFuncQ::from_poly(c.clone()).unwrap())
                        .collect()
                })
                .collect();
            let b = det_bareiss(rows.clone()).unwrap();
            let g = det_gauss(as_field).unwrap();
            assert_eq!(g, RatFuncQ::from_poly(b.clone()).unwrap());
            assert_eq!(det_cofactor(&rows).unwrap(), b);
            let _ = Rational::one();
        }
    }
}
