//! Sparse polynomials over terms with exact rational coefficients, and the
//! action of permutations on generator indices.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::term::{OpSymbol, Term};

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Coefficient = BigRational;

pub fn coef(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coefficient {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` text form used by the structured outputs (`q` omitted when 1).
pub fn format_coefficient(c: &Coefficient) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Finite formal sum of terms. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Term, Coefficient>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn from_term(term: Term) -> Self {
        Polynomial::from_terms([(coef(1), term)])
    }

    pub fn from_terms(items: impl IntoIterator<Item = (Coefficient, Term)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, t) in items {
            p.add_term(t, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in term order with their coefficients.
    pub fn iter(&self) -> btree_map::Iter<'_, Term, Coefficient> {
        self.terms.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.keys()
    }

    pub fn coefficient(&self, term: &Term) -> Coefficient {
        self.terms.get(term).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, term: Term, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }

    /// Largest degree among the terms (0 for the zero polynomial).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Term::degree).max().unwrap_or(0)
    }

    /// Checks that every term is multilinear of degree `n` in `x1..xn`.
    pub fn check_multilinear(&self, n: usize) -> Result<()> {
        for t in self.terms.keys() {
            if t.degree() != n || !t.is_multilinear() {
                return Err(Error::NotMultilinear {
                    expected: n,
                    detail: format!("term {t}"),
                });
            }
        }
        Ok(())
    }

    /// Bilinear product `op(self, other)`.
    pub fn product(op: OpSymbol, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ta, ca) in &a.terms {
            for (tb, cb) in &b.terms {
                out.add_term(Term::node(op, ta.clone(), tb.clone()), ca * cb);
            }
        }
        out
    }

    /// Linear extension of a term map.
    pub fn map_linear(&self, mut f: impl FnMut(&Term) -> Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (t, c) in &self.terms {
            out.add_scaled(&f(t), c);
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<Term, Coefficient> {
        self.terms
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &coef(1));
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &coef(-1));
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&coef(-1))
    }
}

impl FromIterator<(Coefficient, Term)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Coefficient, Term)>>(iter: I) -> Self {
        Polynomial::from_terms(iter)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(t, c)| (c, t)))
    }
}

/// Writes `c1 m1 + c2 m2 - ...`, omitting unit coefficients; `0` when empty.
pub(crate) fn write_sum<'a, M: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = (&'a Coefficient, M)>,
) -> fmt::Result {
    let mut empty = true;
    for (i, (c, m)) in items.enumerate() {
        empty = false;
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let a = c.abs();
        if !a.is_one() {
            write!(f, "{} ", format_coefficient(&a))?;
        }
        write!(f, "{m}")?;
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

/// A bijection on `{1..n}`, stored as `images[i-1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i as usize > n || seen[i as usize - 1] {
                return Err(Error::Permutation(format!("{images:?} is not a bijection on 1..={n}")));
            }
            seen[i as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n: usize, i: u32, j: u32) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i as usize - 1, j as usize - 1);
        p
    }

    /// The cycle `1 -> 2 -> ... -> n -> 1`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).map(|i| (i + 1) % n as u32 + 1).collect(),
        }
    }

    /// Permutation from a single cycle on `{1..n}`, e.g. `[1, 2, 3]` for `(1 2 3)`.
    pub fn from_cycle(n: usize, cycle: &[u32]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        for (k, &c) in cycle.iter().enumerate() {
            if c == 0 || c as usize > n {
                return Err(Error::Permutation(format!("cycle entry {c} outside 1..={n}")));
            }
            images[c as usize - 1] = cycle[(k + 1) % cycle.len()];
        }
        Permutation::new(images)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&i| self.image(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }
}

/// Substitute `x_i -> x_σ(i)` in every term.
pub fn apply_permutation(p: &Polynomial, sigma: &Permutation) -> Result<Polynomial> {
    for t in p.terms() {
        for l in t.leaves() {
            if l as usize > sigma.size() {
                return Err(Error::IndexOutOfRange {
                    index: l,
                    size: sigma.size(),
                });
            }
        }
    }
    Ok(p.map_linear(|t| Polynomial::from_term(t.map_leaves(&|i| sigma.image(i)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Term;

    fn x(i: u32) -> Term {
        Term::var(i)
    }

    #[test]
    fn permutation_examples() {
        let p = Polynomial::from_term(Term::star(x(1), x(2)));
        let swap = Permutation::transposition(2, 1, 2);
        assert_eq!(
            apply_permutation(&p, &swap).unwrap(),
            Polynomial::from_term(Term::star(x(2), x(1)))
        );
        assert_eq!(apply_permutation(&p, &Permutation::identity(2)).unwrap(), p);

        let q = Polynomial::from_term(Term::star(x(2), Term::star(x(1), x(3))));
        let cyc = Permutation::from_cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(
            apply_permutation(&q, &cyc).unwrap(),
            Polynomial::from_term(Term::star(x(3), Term::star(x(2), x(1))))
        );
        assert_eq!(cyc, Permutation::long_cycle(3));
    }

    #[test]
    fn out_of_range_generator() {
        let p = Polynomial::from_term(Term::star(x(1), x(4)));
        assert!(matches!(
            apply_permutation(&p, &Permutation::identity(3)),
            Err(Error::IndexOutOfRange { index: 4, size: 3 })
        ));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = Polynomial::from_term(x(1));
        p.add_term(x(1), coef(-1));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn display_signs_and_fractions() {
        let p = Polynomial::from_terms([
            (ratio(1, 2), Term::bracket(x(1), x(2))),
            (ratio(-3, 2), Term::brace(x(1), x(2))),
        ]);
        assert_eq!(p.to_string(), "1/2 [x1,x2] - 3/2 {x1,x2}");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }
}
