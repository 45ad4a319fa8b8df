//! The free metabelian (right) Novikov algebra.
//!
//! Basis monomials by degree:
//!
//! * `x_i`, `x_i x_j`
//! * degree 3: `(x_h x_a) x_b` with `a <= b`, and `x_o (x_m x_i)` with `m <= o`
//! * degree 4: `((x_h x_a) x_b) x_c` with `a <= b <= c`, and the fully sorted
//!   right comb `x_a (x_b (x_c x_d))`
//! * degree `n >= 5`: left combs with a sorted tail
//!
//! Left combs of every degree share one variant.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{coef, Coefficient, Polynomial};
use crate::term::{OpSymbol, Term};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NovMonomial {
    Gen(u32),
    Pair(u32, u32),
    /// `x_outer (x_middle x_inner)`, `middle <= outer`.
    RightComb3 { outer: u32, middle: u32, inner: u32 },
    /// `x_a (x_b (x_c x_d))`, indices sorted.
    RightComb4([u32; 4]),
    /// `(..((x_head x_t1) x_t2)..) x_tk`, tail sorted, `k >= 2`.
    LeftComb { head: u32, tail: Vec<u32> },
}

impl NovMonomial {
    fn left_comb(head: u32, mut tail: Vec<u32>) -> Self {
        tail.sort_unstable();
        NovMonomial::LeftComb { head, tail }
    }

    fn right_comb3(a: u32, b: u32, inner: u32) -> Self {
        NovMonomial::RightComb3 {
            outer: a.max(b),
            middle: a.min(b),
            inner,
        }
    }

    fn right_comb4(mut v: [u32; 4]) -> Self {
        v.sort_unstable();
        NovMonomial::RightComb4(v)
    }

    pub fn degree(&self) -> usize {
        match self {
            NovMonomial::Gen(_) => 1,
            NovMonomial::Pair(..) => 2,
            NovMonomial::RightComb3 { .. } => 3,
            NovMonomial::RightComb4(_) => 4,
            NovMonomial::LeftComb { tail, .. } => tail.len() + 1,
        }
    }

    /// Whether the ordering constraints of the basis hold.
    pub fn is_valid(&self) -> bool {
        match self {
            NovMonomial::Gen(i) => *i >= 1,
            NovMonomial::Pair(a, b) => *a >= 1 && *b >= 1,
            NovMonomial::RightComb3 { outer, middle, inner } => *middle >= 1 && *inner >= 1 && middle <= outer,
            NovMonomial::RightComb4(v) => v[0] >= 1 && v.windows(2).all(|w| w[0] <= w[1]),
            NovMonomial::LeftComb { head, tail } => {
                *head >= 1 && tail.len() >= 2 && tail[0] >= 1 && tail.windows(2).all(|w| w[0] <= w[1])
            }
        }
    }

    pub fn to_term(&self) -> Term {
        let x = Term::var;
        match self {
            NovMonomial::Gen(i) => x(*i),
            NovMonomial::Pair(a, b) => Term::star(x(*a), x(*b)),
            NovMonomial::RightComb3 { outer, middle, inner } => Term::star(x(*outer), Term::star(x(*middle), x(*inner))),
            NovMonomial::RightComb4(v) => Term::right_normed(&[OpSymbol::Star; 3], v),
            NovMonomial::LeftComb { head, tail } => {
                let mut leaves = vec![*head];
                leaves.extend(tail);
                Term::left_comb(&leaves)
            }
        }
    }

    /// Read a term that is literally a basis monomial.
    pub fn from_term(t: &Term) -> Option<Self> {
        let m = match nov_nf_term(t).ok()?.single()? {
            (m, c) if c.is_one() => m,
            _ => return None,
        };
        (m.to_term() == *t).then_some(m)
    }
}

impl fmt::Display for NovMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

/// Linear combination of basis monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NovPolynomial {
    terms: BTreeMap<NovMonomial, Coefficient>,
}

impl NovPolynomial {
    pub fn zero() -> Self {
        NovPolynomial::default()
    }

    pub fn monomial(m: NovMonomial) -> Self {
        let mut p = NovPolynomial::zero();
        p.add_term(m, Coefficient::one());
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

    pub fn iter(&self) -> impl Iterator<Item = (&NovMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &NovMonomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    fn single(&self) -> Option<(NovMonomial, Coefficient)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (m.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: NovMonomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &NovPolynomial, c: &Coefficient) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Coefficient) -> NovPolynomial {
        let mut out = NovPolynomial::zero();
        out.add_scaled(self, c);
        out
    }

    /// The same element as a polynomial over Star terms.
    pub fn to_polynomial(&self) -> Polynomial {
        self.terms.iter().map(|(m, c)| (c.clone(), m.to_term())).collect()
    }
}

impl fmt::Display for NovPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

fn single(m: NovMonomial) -> NovPolynomial {
    NovPolynomial::monomial(m)
}

/// Normal form of the product of two basis monomials.
fn product_nf(u: &NovMonomial, v: &NovMonomial) -> NovPolynomial {
    use NovMonomial::*;
    match (u, v) {
        (Gen(a), Gen(b)) => single(Pair(*a, *b)),
        // a(bc) = b(ac)
        (Gen(a), Pair(b, c)) => single(NovMonomial::right_comb3(*a, *b, *c)),
        // a(b(cd)) is symmetric in all four letters
        (Gen(a), RightComb3 { outer, middle, inner }) => single(NovMonomial::right_comb4([*a, *outer, *middle, *inner])),
        // a(Y c) = Y(a c) = 0 for compound Y; a(b(c(de))) = 0
        (Gen(_), LeftComb { .. }) | (Gen(_), RightComb4(_)) => NovPolynomial::zero(),
        (Pair(a, b), Gen(c)) => {
            if b <= c {
                single(NovMonomial::left_comb(*a, vec![*b, *c]))
            } else {
                // (ab)c = (ac)b + a(bc) - a(cb)
                let mut p = single(NovMonomial::left_comb(*a, vec![*c, *b]));
                p.add_term(NovMonomial::right_comb3(*a, *b, *c), coef(1));
                p.add_term(NovMonomial::right_comb3(*a, *c, *b), coef(-1));
                p
            }
        }
        // (o(mi))d = -o(d(mi))
        (RightComb3 { outer, middle, inner }, Gen(d)) => {
            let mut p = NovPolynomial::zero();
            p.add_term(NovMonomial::right_comb4([*outer, *d, *middle, *inner]), coef(-1));
            p
        }
        (RightComb4(_), Gen(_)) => NovPolynomial::zero(),
        (LeftComb { head, tail }, Gen(j)) => {
            let mut t = tail.clone();
            let pos = t.partition_point(|&x| x <= *j);
            t.insert(pos, *j);
            single(LeftComb { head: *head, tail: t })
        }
        // both factors compound: (ab)(cd) = 0
        _ => NovPolynomial::zero(),
    }
}

fn bilinear(u: &NovPolynomial, v: &NovPolynomial, f: impl Fn(&NovMonomial, &NovMonomial) -> NovPolynomial) -> NovPolynomial {
    let mut out = NovPolynomial::zero();
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            out.add_scaled(&f(a, b), &(ca * cb));
        }
    }
    out
}

/// Normal form of a single Star term.
pub fn nov_nf_term(t: &Term) -> Result<NovPolynomial> {
    match t {
        Term::Leaf(g) => Ok(single(NovMonomial::Gen(g.index()))),
        Term::Node(OpSymbol::Star, l, r) => {
            let a = nov_nf_term(l)?;
            if a.is_zero() {
                return Ok(a);
            }
            let b = nov_nf_term(r)?;
            Ok(bilinear(&a, &b, product_nf))
        }
        Term::Node(..) => Err(Error::SignatureMismatch {
            expected: "{*}",
            found: "{[,], {,}}",
        }),
    }
}

/// Image of a Star polynomial in the free metabelian Novikov algebra,
/// written in the basis.
pub fn nov_nf(p: &Polynomial) -> Result<NovPolynomial> {
    let mut out = NovPolynomial::zero();
    for (t, c) in p.iter() {
        out.add_scaled(&nov_nf_term(t)?, c);
    }
    Ok(out)
}

fn table_product(u: &NovMonomial, v: &NovMonomial) -> NovPolynomial {
    use NovMonomial::*;
    match (u, v) {
        _ if u.degree() > 1 && v.degree() > 1 => NovPolynomial::zero(),
        (Gen(_), LeftComb { tail, .. }) if tail.len() + 1 > 4 => NovPolynomial::zero(),
        (LeftComb { head, tail }, Gen(j)) if tail.len() + 1 > 4 => {
            let k = tail.partition_point(|&x| x <= *j);
            let mut t = Vec::with_capacity(tail.len() + 1);
            t.extend_from_slice(&tail[..k]);
            t.push(*j);
            t.extend_from_slice(&tail[k..]);
            single(LeftComb { head: *head, tail: t })
        }
        _ => nov_nf_term(&Term::star(u.to_term(), v.to_term())).expect("basis monomials are Star terms"),
    }
}

/// Multiplication of basis polynomials by the monomial table: products of
/// two compound monomials vanish, generators annihilate long left combs from
/// the left, generators are inserted into the sorted tail from the right,
/// and every remaining low-degree product is the normal form of the raw
/// product.
pub fn nov_mul(u: &NovPolynomial, v: &NovPolynomial) -> NovPolynomial {
    bilinear(u, v, table_product)
}

/// All basis monomials of degree `n` over `x1..xm`, in term order.
pub fn nov_basis(n: usize, m: usize) -> Vec<NovMonomial> {
    assert!(n >= 1 && m >= 1);
    let m = m as u32;
    let mut out: Vec<NovMonomial> = Vec::new();
    let gens = 1..=m;
    match n {
        1 => out.extend(gens.map(NovMonomial::Gen)),
        2 => {
            for a in 1..=m {
                for b in 1..=m {
                    out.push(NovMonomial::Pair(a, b));
                }
            }
        }
        _ => {
            for head in 1..=m {
                for tail in sorted_tuples(n - 1, m) {
                    out.push(NovMonomial::LeftComb { head, tail });
                }
            }
            if n == 3 {
                for outer in 1..=m {
                    for middle in 1..=outer {
                        for inner in 1..=m {
                            out.push(NovMonomial::RightComb3 { outer, middle, inner });
                        }
                    }
                }
            }
            if n == 4 {
                for t in sorted_tuples(4, m) {
                    out.push(NovMonomial::RightComb4([t[0], t[1], t[2], t[3]]));
                }
            }
        }
    }
    out.sort_by_cached_key(NovMonomial::to_term);
    out.dedup();
    out
}

/// Basis monomials of degree `n` using each of `x1..xn` once.
pub fn nov_basis_multilinear(n: usize) -> Vec<NovMonomial> {
    nov_basis(n, n)
        .into_iter()
        .filter(|b| b.to_term().is_multilinear())
        .collect()
}

fn sorted_tuples(k: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < m {
                let v = cur[i] + 1;
                for x in &mut cur[i..] {
                    *x = v;
                }
                break;
            }
        }
    }
}

/// Number of multilinear basis monomials of degree `n`.
pub fn nov_dims(n: usize) -> usize {
    nov_basis_multilinear(n).len()
}

/// The seven degree-5 monomials that vanish in the free metabelian Novikov
/// algebra.
pub fn lemma_expressions() -> Vec<Term> {
    let x = Term::var;
    let s = Term::star;
    vec![
        s(s(s(x(1), s(x(2), x(3))), x(4)), x(5)),
        s(s(x(1), s(s(x(2), x(3)), x(4))), x(5)),
        s(s(x(1), s(x(2), s(x(3), x(4)))), x(5)),
        s(x(1), s(s(s(x(2), x(3)), x(4)), x(5))),
        s(x(1), s(s(x(2), s(x(3), x(4))), x(5))),
        s(x(1), s(x(2), s(s(x(3), x(4)), x(5)))),
        s(x(1), s(x(2), s(x(3), s(x(4), x(5))))),
    ]
}

/// Each vanishing expression with its computed normal form.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub entries: Vec<(Term, NovPolynomial)>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|(_, nf)| nf.is_zero())
    }
}

pub fn nov_lemma_suite() -> LemmaReport {
    LemmaReport {
        entries: lemma_expressions()
            .into_iter()
            .map(|t| {
                let nf = nov_nf_term(&t).expect("Star term");
                (t, nf)
            })
            .collect(),
    }
}

fn combinations(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A named symmetric polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymGenerator {
    pub label: String,
    pub poly: Polynomial,
}

/// The symmetric generators of the degree-`n` multilinear part, built from
/// their defining sums over `x1..xn`.
pub fn nov_sym_generators(n: usize) -> Vec<SymGenerator> {
    assert!(n >= 1);
    let x = Term::var;
    let s = Term::star;
    let all: Vec<u32> = (1..=n as u32).collect();
    let others = |i: u32| all.iter().copied().filter(|&j| j != i).collect::<Vec<u32>>();
    let sum = |label: &str, terms: Vec<Term>| SymGenerator {
        label: label.to_string(),
        poly: terms.into_iter().map(|t| (coef(1), t)).collect(),
    };
    match n {
        1 => vec![sum("p_1", vec![x(1)])],
        2 => vec![sum("p_2", vec![s(x(1), x(2)), s(x(2), x(1))])],
        3 => {
            let mut p31 = Vec::new();
            let mut p32 = Vec::new();
            for &i in &all {
                for j in combinations(&others(i), 2) {
                    p31.push(s(x(j[1]), s(x(j[0]), x(i))));
                    p32.push(s(s(x(i), x(j[0])), x(j[1])));
                }
            }
            vec![sum("p_3,1", p31), sum("p_3,2", p32)]
        }
        4 => {
            let p41 = combinations(&all, 4)
                .into_iter()
                .map(|j| Term::right_normed(&[OpSymbol::Star; 3], &j))
                .collect();
            let mut p42 = Vec::new();
            for &i in &all {
                for j in combinations(&others(i), 3) {
                    p42.push(Term::left_comb(&[i, j[0], j[1], j[2]]));
                }
            }
            vec![sum("p_4,1", p41), sum("p_4,2", p42)]
        }
        _ => {
            let mut pn = Vec::new();
            for &i in &all {
                for j in combinations(&others(i), n - 1) {
                    let mut leaves = vec![i];
                    leaves.extend(j);
                    pn.push(Term::left_comb(&leaves));
                }
            }
            vec![sum(&format!("p_{n}"), pn)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_term};
    use crate::term::Signature;

    fn nf(text: &str) -> String {
        nov_nf_term(&parse_term(text, Signature::Star).unwrap()).unwrap().to_string()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(nf("(x1*(x2*x3))"), "(x2*(x1*x3))");
        assert_eq!(nf("(x1*(x2*(x3*(x4*x5))))"), "0");
        assert_eq!(nf("((x1*x2)*(x3*x4))"), "0");
        let want = parse_poly("((x1*x2)*x3) + (x3*(x1*x2)) - (x2*(x1*x3))", None).unwrap();
        let got = nov_nf_term(&parse_term("((x1*x3)*x2)", Signature::Star).unwrap()).unwrap();
        assert_eq!(got.to_polynomial(), want);
    }

    #[test]
    fn basis_counts() {
        assert_eq!(nov_basis_multilinear(3).len(), 6);
        assert_eq!(nov_basis_multilinear(4).len(), 5);
        assert_eq!((1..=7).map(nov_dims).collect::<Vec<_>>(), vec![1, 2, 6, 5, 5, 6, 7]);
        let b = nov_basis(2, 1);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "(x1*x1)");
        assert!(nov_basis(4, 3).iter().all(NovMonomial::is_valid));
    }

    #[test]
    fn basis_is_sorted_and_fixed_by_nf() {
        for n in 1..=5 {
            let b = nov_basis(n, 3);
            assert!(b.windows(2).all(|w| w[0].to_term() < w[1].to_term()));
            for m in &b {
                assert_eq!(nov_nf_term(&m.to_term()).unwrap(), NovPolynomial::monomial(m.clone()));
                assert_eq!(NovMonomial::from_term(&m.to_term()).as_ref(), Some(m));
            }
        }
    }

    #[test]
    fn table_rows() {
        let lc = |h: u32, t: &[u32]| NovPolynomial::monomial(NovMonomial::LeftComb { head: h, tail: t.to_vec() });
        let g = |i: u32| NovPolynomial::monomial(NovMonomial::Gen(i));
        assert_eq!(nov_mul(&lc(1, &[2, 3, 3, 4]), &g(1)), lc(1, &[1, 2, 3, 3, 4]));
        assert!(nov_mul(&g(5), &lc(1, &[2, 3, 3, 4])).is_zero());
        let pair = |a, b| NovPolynomial::monomial(NovMonomial::Pair(a, b));
        assert!(nov_mul(&pair(1, 2), &pair(3, 4)).is_zero());
    }

    #[test]
    fn lemma_suite_vanishes() {
        let r = nov_lemma_suite();
        assert_eq!(r.entries.len(), 7);
        assert!(r.passed());
    }

    #[test]
    fn symmetric_generators_literal() {
        let g3 = nov_sym_generators(3);
        assert_eq!(
            g3[0].poly,
            parse_poly("(x2*(x1*x3)) + (x3*(x2*x1)) + (x3*(x1*x2))", None).unwrap()
        );
        assert_eq!(
            g3[1].poly,
            parse_poly("((x1*x2)*x3) + ((x2*x1)*x3) + ((x3*x1)*x2)", None).unwrap()
        );
        let g4 = nov_sym_generators(4);
        assert_eq!(g4[0].poly, parse_poly("(x1*(x2*(x3*x4)))", None).unwrap());
        assert_eq!(g4[1].poly.len(), 4);
        assert_eq!(nov_sym_generators(5)[0].poly.len(), 5);
    }
}
