//! Commutative algebra with a derivation, and the embedding of the free
//! metabelian Novikov algebra into its weight `-1` part via
//! `u ∘ v = D(u) v`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rank, SparseVec};
use crate::poly::{coef, write_sum, Coefficient};
use crate::term::{OpSymbol, Term};

/// Commutative monomial: factors `(generator, derivative order)` sorted by
/// generator, then order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffMonomial {
    factors: Vec<(u32, u32)>,
}

impl DiffMonomial {
    pub fn new(mut factors: Vec<(u32, u32)>) -> Self {
        assert!(!factors.is_empty(), "a differential monomial has at least one factor");
        factors.sort_unstable();
        DiffMonomial { factors }
    }

    pub fn var(i: u32) -> Self {
        DiffMonomial { factors: vec![(i, 0)] }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn weight(&self) -> i64 {
        self.factors.iter().map(|&(_, d)| d as i64 - 1).sum()
    }

    fn times(&self, other: &DiffMonomial) -> DiffMonomial {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        DiffMonomial::new(f)
    }

    /// Whether each of `x1..xn` occurs exactly once.
    pub fn is_multilinear(&self) -> bool {
        self.factors.iter().enumerate().all(|(k, &(i, _))| i as usize == k + 1)
    }
}

impl fmt::Display for DiffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut shown = self.factors.clone();
        shown.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (k, (i, d)) in shown.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            match d {
                0..=3 => write!(f, "x{i}{}", "'".repeat(*d as usize))?,
                _ => write!(f, "x{i}^({d})")?,
            }
        }
        Ok(())
    }
}

/// Weight of a monomial: total derivative order minus number of factors.
pub fn weight(m: &DiffMonomial) -> i64 {
    m.weight()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffPolynomial {
    terms: BTreeMap<DiffMonomial, Coefficient>,
}

impl DiffPolynomial {
    pub fn zero() -> Self {
        DiffPolynomial::default()
    }

    pub fn monomial(m: DiffMonomial) -> Self {
        let mut p = DiffPolynomial::zero();
        p.add_term(m, Coefficient::one());
        p
    }

    pub fn var(i: u32) -> Self {
        DiffPolynomial::monomial(DiffMonomial::var(i))
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

    pub fn iter(&self) -> impl Iterator<Item = (&DiffMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &DiffMonomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, m: DiffMonomial, c: Coefficient) {
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

    pub fn add_scaled(&mut self, other: &DiffPolynomial, c: &Coefficient) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    /// Commutative product.
    pub fn mul(&self, other: &DiffPolynomial) -> DiffPolynomial {
        let mut out = DiffPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.times(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for DiffPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(m, c)| (c, m)))
    }
}

/// Leibniz rule, extended linearly.
pub fn derive(p: &DiffPolynomial) -> DiffPolynomial {
    let mut out = DiffPolynomial::zero();
    for (m, c) in &p.terms {
        for k in 0..m.factors.len() {
            let mut f = m.factors.clone();
            f[k].1 += 1;
            out.add_term(DiffMonomial::new(f), c.clone());
        }
    }
    out
}

/// `u ∘ v = D(u) v`.
pub fn circ(u: &DiffPolynomial, v: &DiffPolynomial) -> DiffPolynomial {
    derive(u).mul(v)
}

/// Image of a Star term under `x_i -> x_i`, `uv -> u ∘ v`.
pub fn embed(t: &Term) -> Result<DiffPolynomial> {
    match t {
        Term::Leaf(g) => Ok(DiffPolynomial::var(g.index())),
        Term::Node(OpSymbol::Star, l, r) => Ok(circ(&embed(l)?, &embed(r)?)),
        Term::Node(..) => Err(Error::SignatureMismatch {
            expected: "{*}",
            found: "{[,], {,}}",
        }),
    }
}

fn reduce_monomial(m: &DiffMonomial) -> DiffPolynomial {
    let n = m.degree();
    if n <= 3 {
        return DiffPolynomial::monomial(m.clone());
    }
    if n >= 5 {
        let top = m.factors.iter().filter(|f| f.1 == n as u32 - 1).count();
        return if top == 1 {
            DiffPolynomial::monomial(m.clone())
        } else {
            DiffPolynomial::zero()
        };
    }
    let mut orders: Vec<u32> = m.factors.iter().map(|f| f.1).collect();
    orders.sort_unstable();
    match orders.as_slice() {
        [0, 0, 0, 3] => DiffPolynomial::monomial(m.clone()),
        [0, 1, 1, 1] => DiffPolynomial::monomial(canonical_primed_triple(m)),
        [0, 0, 1, 2] => {
            // x''_a x'_b x_c x_d = -x'_a x'_b x'_c x_d, promoting the smaller plain index
            let plain = m.factors.iter().filter(|f| f.1 == 0).map(|f| f.0).min().unwrap();
            let mut f = m.factors.clone();
            let mut promoted = false;
            for x in &mut f {
                if x.1 == 2 {
                    x.1 = 1;
                } else if x.1 == 0 && x.0 == plain && !promoted {
                    x.1 = 1;
                    promoted = true;
                }
            }
            let mut p = DiffPolynomial::zero();
            p.add_term(canonical_primed_triple(&DiffMonomial::new(f)), coef(-1));
            p
        }
        _ => unreachable!("weight -1 in degree 4"),
    }
}

/// `a'b'c'd = a'b'd'c`: the unprimed factor is moved to the largest index.
fn canonical_primed_triple(m: &DiffMonomial) -> DiffMonomial {
    let last = m.factors.len() - 1;
    let mut f: Vec<(u32, u32)> = m.factors.iter().map(|&(i, _)| (i, 1)).collect();
    f[last].1 = 0;
    DiffMonomial::new(f)
}

/// Rewrite weight `-1` monomials by the metabelian relations: unchanged up
/// to degree 3; in degree 4 `x''x'xx` becomes `-x'x'x'x` and `x'x'x'x`
/// keeps its plain factor on the largest index; from degree 5 on only
/// `x_i^(n-1) x_j1 .. x_j(n-1)` survives.
pub fn metabelian_reduce(p: &DiffPolynomial) -> Result<DiffPolynomial> {
    let mut out = DiffPolynomial::zero();
    for (m, c) in &p.terms {
        if m.weight() != -1 {
            return Err(Error::Weight {
                monomial: m.to_string(),
                weight: m.weight(),
            });
        }
        if let Some(&(i, d)) = m.factors.iter().find(|f| f.1 as usize >= m.degree()) {
            return Err(Error::Unsupported(format!(
                "derivative order {d} on x{i} exceeds degree - 1 in {m}"
            )));
        }
        out.add_scaled(&reduce_monomial(m), c);
    }
    Ok(out)
}

/// All multilinear weight `-1` monomials of degree `n`.
pub fn weight_monomials(n: usize) -> Vec<DiffMonomial> {
    let mut out = Vec::new();
    let mut orders = vec![0u32; n];
    compositions(n - 1, 0, &mut orders, &mut |o| {
        out.push(DiffMonomial::new(
            o.iter().enumerate().map(|(k, &d)| (k as u32 + 1, d)).collect(),
        ));
    });
    out
}

fn compositions(left: usize, pos: usize, orders: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if pos == orders.len() {
        if left == 0 {
            f(orders);
        }
        return;
    }
    for d in 0..=left {
        orders[pos] = d as u32;
        compositions(left - d, pos + 1, orders, f);
    }
    orders[pos] = 0;
}

/// Dimension of the span of the reduced multilinear weight `-1` monomials
/// of degree `n`.
pub fn diff_dims(n: usize) -> usize {
    let images: Vec<DiffPolynomial> = weight_monomials(n)
        .iter()
        .map(|m| metabelian_reduce(&DiffPolynomial::monomial(m.clone())).expect("weight -1"))
        .collect();
    diff_rank(&images)
}

/// Rank of a family of differential polynomials.
pub fn diff_rank(family: &[DiffPolynomial]) -> usize {
    let mut columns: HashMap<DiffMonomial, u32> = HashMap::new();
    let vectors: Vec<SparseVec> = family
        .iter()
        .map(|p| {
            SparseVec::from_pairs(
                p.iter()
                    .map(|(m, c)| {
                        let next = columns.len() as u32;
                        (*columns.entry(m.clone()).or_insert(next), c.clone())
                    })
                    .collect(),
            )
        })
        .collect();
    rank(&vectors, columns.len())
}
