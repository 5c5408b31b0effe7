use std::cmp::Ordering;

use smallvec::SmallVec;

use super::symbol::Symbol;

/// A Laurent monomial: a sparse map from symbols to nonzero signed exponents,
/// stored sorted by registry position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(Symbol, i32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(sym: Symbol, exp: i32) -> Self {
        let mut exps = SmallVec::new();
        if exp != 0 {
            exps.push((sym, exp));
        }
        Monomial { exps }
    }

    /// Builds a monomial from arbitrary `(symbol, exponent)` pairs, combining
    /// repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Symbol, i32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(Symbol, i32); 4]> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut exps: SmallVec<[(Symbol, i32); 4]> = SmallVec::new();
        for (s, e) in v {
            match exps.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => exps.push((s, e)),
            }
        }
        exps.retain(|p| p.1 != 0);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, sym: Symbol) -> i32 {
        self.exps
            .iter()
            .find(|p| p.0 == sym)
            .map(|p| p.1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|p| p.1 as i64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.exps.is_empty() {
            return self.clone();
        }
        if self.exps.is_empty() {
            return other.clone();
        }
        let (a, b) = (&self.exps, &other.exps);
        let mut out: SmallVec<[(Symbol, i32); 4]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(s, e)| (s, e * k)).collect(),
        }
    }

    /// `self / other` when the quotient has no negative exponents.
    pub fn div_poly(&self, other: &Monomial) -> Option<Monomial> {
        let q = self.mul(&other.inv());
        if q.exps.iter().all(|p| p.1 > 0) {
            Some(q)
        } else {
            None
        }
    }

    /// Same monomial with `sym` removed.
    pub fn without(&self, sym: Symbol) -> Monomial {
        Monomial {
            exps: self.exps.iter().copied().filter(|p| p.0 != sym).collect(),
        }
    }

    pub fn has_negative(&self) -> bool {
        self.exps.iter().any(|p| p.1 < 0)
    }

    /// Lexicographic comparison in registry order, ignoring total degree.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Graded lexicographic order under registry order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
