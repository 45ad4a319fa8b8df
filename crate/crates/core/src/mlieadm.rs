//! The free metabelian Lie-admissible algebra in the commutator (`[,]`,
//! black) and anticommutator (`{,}`, white) presentation.
//!
//! Basis monomials are right-normed: `x_i1 * (x_i2 * (... (x_i(n-1) * x_in)))`
//! with a type sequence of `n - 1` colours, subject to
//!
//! 1. leaves of a black run followed by a white vertex weakly decrease;
//! 2. if the last vertex is white, `i(n-1) <= in`;
//! 3. a trailing black run of length `k > 2` has `ik >= ... >= i(n-1) < in`;
//! 4. trailing black runs of length 1 or 2 follow the free Lie basis
//!    `[a,b]` with `a < b` and `[a,[b,c]]` with `a >= b < c`.
//!
//! Every condition is a constraint between adjacent leaves.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{coef, ratio, Coefficient, Polynomial};
use crate::term::{OpSymbol, Term};

/// Colours of the vertices of a right-normed monomial, outermost first.
pub type TypeSequence = Vec<OpSymbol>;

/// A right-normed polarized monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeMonomial {
    ops: TypeSequence,
    leaves: Vec<u32>,
}

/// Which basis condition a right-normed monomial breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Interior black run not weakly decreasing.
    InteriorRun = 1,
    /// Trailing white pair out of order.
    WhiteTail = 2,
    /// Long trailing black run not of the metabelian Lie basis shape.
    LongBlackTail = 3,
    /// Short trailing black run not of the free Lie basis shape.
    ShortBlackTail = 4,
}

impl TreeMonomial {
    pub fn new(ops: TypeSequence, leaves: Vec<u32>) -> Result<Self> {
        if leaves.is_empty() || ops.len() + 1 != leaves.len() {
            return Err(Error::Unsupported(format!(
                "a right-normed monomial with {} leaves needs {} vertices, got {}",
                leaves.len(),
                leaves.len().saturating_sub(1),
                ops.len()
            )));
        }
        if ops.contains(&OpSymbol::Star) {
            return Err(Error::SignatureMismatch {
                expected: "{[,], {,}}",
                found: "{*}",
            });
        }
        Ok(TreeMonomial { ops, leaves })
    }

    pub fn gen(i: u32) -> Self {
        TreeMonomial {
            ops: Vec::new(),
            leaves: vec![i],
        }
    }

    pub fn ops(&self) -> &[OpSymbol] {
        &self.ops
    }

    pub fn leaves(&self) -> &[u32] {
        &self.leaves
    }

    pub fn degree(&self) -> usize {
        self.leaves.len()
    }

    pub fn to_term(&self) -> Term {
        Term::right_normed(&self.ops, &self.leaves)
    }

    /// Read a right-normed polarized term.
    pub fn from_term(t: &Term) -> Option<Self> {
        let mut ops = Vec::new();
        let mut leaves = Vec::new();
        let mut cur = t;
        loop {
            match cur {
                Term::Leaf(g) => {
                    leaves.push(g.index());
                    break;
                }
                Term::Node(op, l, r) => {
                    let Term::Leaf(g) = l.as_ref() else {
                        return None;
                    };
                    if *op == OpSymbol::Star {
                        return None;
                    }
                    ops.push(*op);
                    leaves.push(g.index());
                    cur = r;
                }
            }
        }
        Some(TreeMonomial { ops, leaves })
    }

    /// Length of the black run that reaches the last vertex.
    fn trailing_black(&self) -> usize {
        self.ops.iter().rev().take_while(|&&o| o == OpSymbol::Bracket).count()
    }

    /// The first violated condition, if any.
    pub fn check_conditions(&self) -> std::result::Result<(), Condition> {
        let n = self.leaves.len();
        if n == 1 {
            return Ok(());
        }
        let tail = self.trailing_black();
        let last = n - 2;
        for p in 0..=last {
            if !adjacent_ok(&self.ops, p, self.leaves[p], self.leaves[p + 1]) {
                let in_tail = p + tail > last;
                return Err(match (p == last, self.ops[p], in_tail) {
                    (true, OpSymbol::Brace, _) => Condition::WhiteTail,
                    (_, _, true) if tail > 2 => Condition::LongBlackTail,
                    (_, _, true) => Condition::ShortBlackTail,
                    _ => Condition::InteriorRun,
                });
            }
        }
        Ok(())
    }

    pub fn is_basis(&self) -> bool {
        self.check_conditions().is_ok()
    }
}

impl fmt::Display for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

/// The constraint between leaves `p` and `p + 1`.
fn adjacent_ok(ops: &[OpSymbol], p: usize, a: u32, b: u32) -> bool {
    let last = ops.len() - 1;
    if p == last {
        match ops[p] {
            OpSymbol::Brace => a <= b,
            _ => a < b,
        }
    } else if ops[p] == OpSymbol::Bracket && ops[p + 1] == OpSymbol::Bracket {
        a >= b
    } else {
        true
    }
}

/// Text label of a type sequence with its degree, e.g. `p_(•,○,3)`.
pub fn sequence_label(ops: &[OpSymbol]) -> String {
    let dots: Vec<&str> = ops.iter().map(|o| o.dot()).collect();
    format!("p_({},{})", dots.join(","), ops.len() + 1)
}

/// All `2^(n-1)` type sequences of degree `n`, black before white.
pub fn type_sequences(n: usize) -> Vec<TypeSequence> {
    assert!(n >= 1);
    let k = n - 1;
    (0..1usize << k)
        .map(|code| {
            (0..k)
                .map(|i| {
                    if code >> (k - 1 - i) & 1 == 0 {
                        OpSymbol::Bracket
                    } else {
                        OpSymbol::Brace
                    }
                })
                .collect()
        })
        .collect()
}

/// Backtracking over leaf assignments allowed by the adjacent constraints.
fn for_each_leaves(ops: &[OpSymbol], m: u32, multilinear: bool, f: &mut impl FnMut(&[u32])) {
    let n = ops.len() + 1;
    let mut leaves = vec![0u32; n];
    let mut used = vec![false; m as usize + 1];
    fill(ops, m, multilinear, 0, &mut leaves, &mut used, f);
}

fn fill(
    ops: &[OpSymbol],
    m: u32,
    multilinear: bool,
    pos: usize,
    leaves: &mut Vec<u32>,
    used: &mut Vec<bool>,
    f: &mut impl FnMut(&[u32]),
) {
    if pos == leaves.len() {
        f(leaves);
        return;
    }
    for v in 1..=m {
        if multilinear && used[v as usize] {
            continue;
        }
        if pos > 0 && !adjacent_ok(ops, pos - 1, leaves[pos - 1], v) {
            continue;
        }
        leaves[pos] = v;
        used[v as usize] = true;
        fill(ops, m, multilinear, pos + 1, leaves, used, f);
        used[v as usize] = false;
    }
}

fn basis_of(n: usize, m: usize, multilinear: bool) -> Vec<TreeMonomial> {
    assert!(n >= 1 && m >= 1);
    let mut out = Vec::new();
    for ops in type_sequences(n) {
        if n == 1 {
            for i in 1..=m as u32 {
                out.push(TreeMonomial::gen(i));
            }
            continue;
        }
        for_each_leaves(&ops, m as u32, multilinear, &mut |l| {
            out.push(TreeMonomial {
                ops: ops.clone(),
                leaves: l.to_vec(),
            })
        });
    }
    // right-normed monomials of one degree sort like their terms
    out.sort();
    out
}

/// All basis monomials of degree `n` over `x1..xm`, in term order.
pub fn mla_basis(n: usize, m: usize) -> Vec<TreeMonomial> {
    basis_of(n, m, false)
}

/// Basis monomials of degree `n` using each of `x1..xn` once.
pub fn mla_basis_multilinear(n: usize) -> Vec<TreeMonomial> {
    basis_of(n, n, true)
}

/// Multilinear basis monomials of one type sequence.
pub fn mla_component(ops: &[OpSymbol]) -> Vec<TreeMonomial> {
    let n = ops.len() + 1;
    let mut out = Vec::new();
    for_each_leaves(ops, n as u32, true, &mut |l| {
        out.push(TreeMonomial {
            ops: ops.to_vec(),
            leaves: l.to_vec(),
        })
    });
    out.sort();
    out
}

/// Dimension of the degree-`n` multilinear component, by counting basis
/// monomials.
pub fn mla_dims(n: usize) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let counts: Vec<u64> = type_sequences(n)
        .par_iter()
        .map(|ops| {
            let mut c = 0u64;
            for_each_leaves(ops, n as u32, true, &mut |_| c += 1);
            c
        })
        .collect();
    counts.iter().sum()
}

/// `uv -> 1/2 [u,v] + 1/2 {u,v}`, recursively.
pub fn polarize(p: &Polynomial) -> Result<Polynomial> {
    let half = ratio(1, 2);
    let mut out = Polynomial::zero();
    for (t, c) in p.iter() {
        out.add_scaled(&polarize_term(t, &half)?, c);
    }
    Ok(out)
}

fn polarize_term(t: &Term, half: &Coefficient) -> Result<Polynomial> {
    match t {
        Term::Leaf(_) => Ok(Polynomial::from_term(t.clone())),
        Term::Node(OpSymbol::Star, l, r) => {
            let a = polarize_term(l, half)?;
            let b = polarize_term(r, half)?;
            let mut out = Polynomial::product(OpSymbol::Bracket, &a, &b).scale(half);
            out.add_scaled(&Polynomial::product(OpSymbol::Brace, &a, &b), half);
            Ok(out)
        }
        Term::Node(..) => Err(Error::SignatureMismatch {
            expected: "{*}",
            found: "{[,], {,}}",
        }),
    }
}

/// `[u,v] -> uv - vu`, `{u,v} -> uv + vu`, recursively.
pub fn depolarize(p: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (t, c) in p.iter() {
        out.add_scaled(&depolarize_term(t)?, c);
    }
    Ok(out)
}

pub fn depolarize_term(t: &Term) -> Result<Polynomial> {
    match t {
        Term::Leaf(_) => Ok(Polynomial::from_term(t.clone())),
        Term::Node(OpSymbol::Star, ..) => Err(Error::SignatureMismatch {
            expected: "{[,], {,}}",
            found: "{*}",
        }),
        Term::Node(op, l, r) => {
            let a = depolarize_term(l)?;
            let b = depolarize_term(r)?;
            let ab = Polynomial::product(OpSymbol::Star, &a, &b);
            let ba = Polynomial::product(OpSymbol::Star, &b, &a);
            Ok(if *op == OpSymbol::Bracket { &ab - &ba } else { &ab + &ba })
        }
    }
}

/// Right-normed form of a term up to sign, using only anticommutativity,
/// commutativity and the vanishing of products of two compound factors.
fn right_norm(t: &Term) -> Result<Option<(i64, TreeMonomial)>> {
    match t {
        Term::Leaf(g) => Ok(Some((1, TreeMonomial::gen(g.index())))),
        Term::Node(OpSymbol::Star, ..) => Err(Error::SignatureMismatch {
            expected: "{[,], {,}}",
            found: "{*}",
        }),
        Term::Node(op, l, r) => {
            let Some((sl, ml)) = right_norm(l)? else {
                return Ok(None);
            };
            let Some((sr, mr)) = right_norm(r)? else {
                return Ok(None);
            };
            let (mut sign, head, rest) = match (ml.degree(), mr.degree()) {
                (1, _) => (sl * sr, ml.leaves[0], mr),
                (_, 1) => {
                    let flip = if *op == OpSymbol::Bracket { -1 } else { 1 };
                    (sl * sr * flip, mr.leaves[0], ml)
                }
                _ => return Ok(None),
            };
            let mut ops = vec![*op];
            ops.extend(rest.ops);
            let mut leaves = vec![head];
            leaves.extend(rest.leaves);
            if ops.len() == 1 && ops[0] == OpSymbol::Bracket && leaves[0] == leaves[1] {
                sign = 0;
            }
            if sign == 0 {
                return Ok(None);
            }
            Ok(Some((sign, TreeMonomial { ops, leaves })))
        }
    }
}

/// Free metabelian Lie normal form of the right-normed pure-bracket monomial
/// with the given leaves: prefix weakly decreasing, then `mu < d` with `mu`
/// not above any prefix letter.
fn mlie_leaves(leaves: &[u32]) -> Vec<(i64, Vec<u32>)> {
    let m = leaves.len();
    assert!(m >= 2);
    let (mut c, mut d) = (leaves[m - 2], leaves[m - 1]);
    if c == d {
        return Vec::new();
    }
    let mut sign = 1;
    if c > d {
        std::mem::swap(&mut c, &mut d);
        sign = -1;
    }
    let mut prefix = leaves[..m - 2].to_vec();
    prefix.sort_unstable_by(|a, b| b.cmp(a));
    let build = |mut prefix: Vec<u32>, a: u32, b: u32| {
        prefix.sort_unstable_by(|x, y| y.cmp(x));
        prefix.push(a);
        prefix.push(b);
        prefix
    };
    match prefix.last() {
        Some(&mu) if mu < c => {
            // [mu,[c,d]] = [c,[mu,d]] - [d,[mu,c]] under a symmetric prefix
            prefix.pop();
            let mut with_c = prefix.clone();
            with_c.push(c);
            let mut with_d = prefix;
            with_d.push(d);
            vec![(sign, build(with_c, mu, d)), (-sign, build(with_d, mu, c))]
        }
        _ => vec![(sign, build(prefix, c, d))],
    }
}

fn normalize(sign: i64, m: TreeMonomial, out: &mut Polynomial) {
    let n = m.degree();
    if n == 1 {
        out.add_term(m.to_term(), coef(sign));
        return;
    }
    let TreeMonomial { ops, mut leaves } = m;
    let last = n - 2;
    // interior black runs: [a,[b,C]] = [b,[a,C]] for compound C
    let mut p = 0;
    while p <= last {
        if ops[p] == OpSymbol::Bracket {
            let s = p;
            while p <= last && ops[p] == OpSymbol::Bracket {
                p += 1;
            }
            if p <= last {
                leaves[s..p].sort_unstable_by(|a, b| b.cmp(a));
            }
        } else {
            p += 1;
        }
    }
    if ops[last] == OpSymbol::Brace {
        if leaves[last] > leaves[last + 1] {
            leaves.swap(last, last + 1);
        }
        out.add_term(Term::right_normed(&ops, &leaves), coef(sign));
        return;
    }
    let tail = ops.iter().rev().take_while(|&&o| o == OpSymbol::Bracket).count();
    let s = n - 1 - tail;
    for (c, t) in mlie_leaves(&leaves[s..]) {
        let mut full = leaves[..s].to_vec();
        full.extend(t);
        out.add_term(Term::right_normed(&ops, &full), coef(sign * c));
    }
}

/// Normal form in the free metabelian Lie-admissible algebra.
pub fn mla_nf(p: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (t, c) in p.iter() {
        let mut q = Polynomial::zero();
        if let Some((sign, m)) = right_norm(t)? {
            normalize(sign, m, &mut q);
        }
        out.add_scaled(&q, c);
    }
    Ok(out)
}

pub fn mla_nf_term(t: &Term) -> Result<Polynomial> {
    mla_nf(&Polynomial::from_term(t.clone()))
}

/// Normal form in the free metabelian Lie algebra; every operation must be
/// a bracket.
pub fn mlie_nf(p: &Polynomial) -> Result<Polynomial> {
    for t in p.terms() {
        if t.ops_preorder().iter().any(|&o| o != OpSymbol::Bracket) {
            return Err(Error::SignatureMismatch {
                expected: "[,]",
                found: "{,} or *",
            });
        }
    }
    mla_nf(p)
}

fn basis_monomial(t: &Term) -> Result<TreeMonomial> {
    TreeMonomial::from_term(t)
        .filter(TreeMonomial::is_basis)
        .ok_or_else(|| Error::Unsupported(format!("{t} is not a basis monomial")))
}

fn term_of(ops: Vec<OpSymbol>, leaves: Vec<u32>) -> Term {
    Term::right_normed(&ops, &leaves)
}

/// `x_j • W` for a basis monomial `W` of degree at least 2.
fn bracket_gen_left(j: u32, w: &TreeMonomial, out: &mut Polynomial, c: &Coefficient) {
    let mut ops = vec![OpSymbol::Bracket];
    ops.extend(&w.ops);
    if w.ops[0] == OpSymbol::Brace {
        let mut leaves = vec![j];
        leaves.extend(&w.leaves);
        out.add_term(term_of(ops, leaves), c.clone());
    } else if w.ops.contains(&OpSymbol::Brace) {
        // sorted insertion into the leading black run
        let run = w.ops.iter().take_while(|&&o| o == OpSymbol::Bracket).count();
        let k = w.leaves[..run].partition_point(|&x| x > j);
        let mut leaves = w.leaves[..k].to_vec();
        leaves.push(j);
        leaves.extend(&w.leaves[k..]);
        out.add_term(term_of(ops, leaves), c.clone());
    } else {
        let mut leaves = vec![j];
        leaves.extend(&w.leaves);
        for (s, l) in mlie_leaves(&leaves) {
            out.add_term(term_of(ops.clone(), l), c * coef(s));
        }
    }
}

fn table_product(op: OpSymbol, u: &TreeMonomial, v: &TreeMonomial, c: &Coefficient, out: &mut Polynomial) {
    match (u.degree(), v.degree()) {
        (1, 1) => {
            let (a, b) = (u.leaves[0], v.leaves[0]);
            match op {
                OpSymbol::Brace => out.add_term(term_of(vec![op], vec![a.min(b), a.max(b)]), c.clone()),
                _ if a < b => out.add_term(term_of(vec![op], vec![a, b]), c.clone()),
                _ if a > b => out.add_term(term_of(vec![op], vec![b, a]), -c.clone()),
                _ => {}
            }
        }
        (1, _) | (_, 1) => {
            let (j, w, right) = if u.degree() == 1 {
                (u.leaves[0], v, false)
            } else {
                (v.leaves[0], u, true)
            };
            match op {
                OpSymbol::Brace => {
                    let mut ops = vec![OpSymbol::Brace];
                    ops.extend(&w.ops);
                    let mut leaves = vec![j];
                    leaves.extend(&w.leaves);
                    out.add_term(term_of(ops, leaves), c.clone());
                }
                _ => {
                    let sign = if right { -c.clone() } else { c.clone() };
                    bracket_gen_left(j, w, out, &sign);
                }
            }
        }
        // products of two compound monomials vanish
        _ => {}
    }
}

/// Product of two normal-form polynomials by the multiplication table.
pub fn mla_mul(u: &Polynomial, v: &Polynomial, op: OpSymbol) -> Result<Polynomial> {
    if op == OpSymbol::Star {
        return Err(Error::SignatureMismatch {
            expected: "{[,], {,}}",
            found: "{*}",
        });
    }
    let us: Vec<(TreeMonomial, &Coefficient)> = u
        .iter()
        .map(|(t, c)| basis_monomial(t).map(|m| (m, c)))
        .collect::<Result<_>>()?;
    let vs: Vec<(TreeMonomial, &Coefficient)> = v
        .iter()
        .map(|(t, c)| basis_monomial(t).map(|m| (m, c)))
        .collect::<Result<_>>()?;
    let mut out = Polynomial::zero();
    for (a, ca) in &us {
        for (b, cb) in &vs {
            table_product(op, a, b, &(*ca * *cb), &mut out);
        }
    }
    Ok(out)
}

/// The type sequence of a polynomial all of whose terms are right-normed
/// with one type sequence.
pub fn component_of(p: &Polynomial) -> Option<TypeSequence> {
    let mut seq = None;
    for t in p.terms() {
        let m = TreeMonomial::from_term(t)?;
        match &seq {
            None => seq = Some(m.ops),
            Some(s) if *s != m.ops => return None,
            _ => {}
        }
    }
    seq
}

/// A named symmetric-polynomial candidate of one type sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MlaSymGenerator {
    pub label: String,
    pub sequence: TypeSequence,
    pub poly: Polynomial,
}

/// Candidate symmetric polynomials of degree `n`: `p_(1) = x1`,
/// `p_(2) = 2{x1,x2}`, and for `n >= 3` one polynomial per type sequence,
/// the sum of the multilinear basis monomials of that sequence (black runs
/// descending, white runs free, the trailing white pair ascending, the
/// trailing black run in the metabelian Lie basis shape).
pub fn mla_sym_generators(n: usize) -> Vec<MlaSymGenerator> {
    assert!(n >= 1);
    match n {
        1 => vec![MlaSymGenerator {
            label: "p_(1)".into(),
            sequence: Vec::new(),
            poly: Polynomial::from_term(Term::var(1)),
        }],
        2 => vec![MlaSymGenerator {
            label: "p_(2)".into(),
            sequence: vec![OpSymbol::Brace],
            poly: Polynomial::from_terms([(coef(2), Term::brace(Term::var(1), Term::var(2)))]),
        }],
        _ => type_sequences(n)
            .into_iter()
            .map(|seq| MlaSymGenerator {
                label: sequence_label(&seq),
                poly: mla_component(&seq)
                    .into_iter()
                    .map(|m| (coef(1), m.to_term()))
                    .collect(),
                sequence: seq,
            })
            .collect(),
    }
}

/// Whether every term of `p` is a basis monomial.
pub fn is_normal_form(p: &Polynomial) -> bool {
    p.terms().all(|t| TreeMonomial::from_term(t).is_some_and(|m| m.is_basis()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_term};
    use crate::term::Signature;

    const B: OpSymbol = OpSymbol::Bracket;
    const W: OpSymbol = OpSymbol::Brace;

    fn nf(text: &str) -> String {
        mla_nf_term(&parse_term(text, Signature::Polarized).unwrap()).unwrap().to_string()
    }

    fn tm(ops: &[OpSymbol], leaves: &[u32]) -> TreeMonomial {
        TreeMonomial::new(ops.to_vec(), leaves.to_vec()).unwrap()
    }

    #[test]
    fn conditions() {
        assert!(tm(&[B, B, W], &[2, 1, 3, 4]).is_basis());
        assert_eq!(tm(&[B, B, W], &[1, 2, 3, 4]).check_conditions(), Err(Condition::InteriorRun));
        assert!(tm(&[B, B, B], &[3, 2, 1, 4]).is_basis());
        assert_eq!(tm(&[B, B, B], &[3, 1, 2, 4]).check_conditions(), Err(Condition::LongBlackTail));
        assert_eq!(tm(&[W, W], &[1, 3, 2]).check_conditions(), Err(Condition::WhiteTail));
        assert_eq!(tm(&[W, B], &[1, 3, 2]).check_conditions(), Err(Condition::ShortBlackTail));
    }

    #[test]
    fn dimension_table() {
        assert_eq!(mla_basis_multilinear(2).len(), 2);
        assert_eq!(mla_basis_multilinear(3).len(), 11);
        assert_eq!(mla_basis_multilinear(4).len(), 77);
        assert_eq!((1..=6).map(mla_dims).collect::<Vec<_>>(), vec![1, 2, 11, 77, 679, 7184]);
    }

    #[test]
    fn polarization_round_trip() {
        let p = parse_poly("(x1*(x2*x3))", None).unwrap();
        let q = polarize(&p).unwrap();
        assert_eq!(q.len(), 4);
        assert_eq!(depolarize(&q).unwrap(), p);
        assert_eq!(depolarize(&parse_poly("{[x1,x2],{x3,x4}}", None).unwrap()).unwrap().len(), 8);
        assert_eq!(
            depolarize(&parse_poly("[x1,x2]", None).unwrap()).unwrap(),
            parse_poly("(x1*x2) - (x2*x1)", None).unwrap()
        );
    }

    #[test]
    fn normal_forms() {
        assert_eq!(nf("{[x1,x2],[x3,x4]}"), "0");
        assert_eq!(nf("[[x1,x2],x3]"), "-[x3,[x1,x2]]");
        assert_eq!(nf("[x1,[x2,[x3,x4]]]"), "[x3,[x2,[x1,x4]]] - [x4,[x2,[x1,x3]]]");
        assert_eq!(nf("[x3,[x2,[x1,x4]]]"), "[x3,[x2,[x1,x4]]]");
        assert_eq!(nf("[x1,[x2,{x3,x4}]]"), "[x2,[x1,{x3,x4}]]");
        assert_eq!(nf("{x2,x1}"), "{x1,x2}");
        assert_eq!(nf("[x1,x1]"), "0");
    }

    #[test]
    fn table() {
        let p = |s: &str| parse_poly(s, Some(Signature::Polarized)).unwrap();
        assert_eq!(mla_mul(&p("[x2,[x1,x3]]"), &p("x4"), W).unwrap(), p("{x4,[x2,[x1,x3]]}"));
        assert_eq!(mla_mul(&p("{x1,x2}"), &p("x3"), B).unwrap(), p("-[x3,{x1,x2}]"));
        assert!(mla_mul(&p("{x1,x2}"), &p("[x3,x4]"), W).unwrap().is_zero());
        assert_eq!(mla_mul(&p("[x3,[x1,{x2,x4}]]"), &p("x5"), B).unwrap(), p("-[x5,[x3,[x1,{x2,x4}]]]"));
        assert!(mla_mul(&p("[x2,x1]"), &p("x3"), B).is_err());
    }

    #[test]
    fn sym_generator_examples() {
        let g = mla_sym_generators(3);
        assert_eq!(g.len(), 4);
        let find = |label: &str| g.iter().find(|x| x.label == label).unwrap().poly.clone();
        assert_eq!(
            find("p_(•,○,3)"),
            parse_poly("[x1,{x2,x3}] + [x2,{x1,x3}] + [x3,{x1,x2}]", None).unwrap()
        );
        assert_eq!(
            find("p_(○,○,3)"),
            parse_poly("{x1,{x2,x3}} + {x2,{x1,x3}} + {x3,{x1,x2}}", None).unwrap()
        );
        let g4 = mla_sym_generators(4);
        let p = &g4.iter().find(|x| x.label == "p_(•,•,○,4)").unwrap().poly;
        assert_eq!(
            *p,
            parse_poly(
                "[x2,[x1,{x3,x4}]] + [x3,[x1,{x2,x4}]] + [x4,[x1,{x2,x3}]] \
                 + [x3,[x2,{x1,x4}]] + [x4,[x2,{x1,x3}]] + [x4,[x3,{x1,x2}]]",
                None
            )
            .unwrap()
        );
    }
}
