//! Compact preorder encoding of terms and a ranking of the degree-`n`
//! multilinear terms onto `0..count`, consistent with the term order.

use std::collections::HashMap;

use crate::enumerate::{decode_ops, factorial, shapes, Shape};
use crate::term::{OpSymbol, Signature, Term};

/// Preorder token stream: operation tokens, leaf labels below `0xF0`, or
/// the context hole.
pub(crate) type Flat = Vec<u8>;

pub(crate) const HOLE: u8 = 0xFF;
const OP_BASE: u8 = 0xF0;

pub(crate) fn op_token(op: OpSymbol) -> u8 {
    OP_BASE
        + match op {
            OpSymbol::Star => 0,
            OpSymbol::Bracket => 1,
            OpSymbol::Brace => 2,
        }
}

fn token_op(tok: u8) -> OpSymbol {
    match tok - OP_BASE {
        0 => OpSymbol::Star,
        1 => OpSymbol::Bracket,
        _ => OpSymbol::Brace,
    }
}

pub(crate) fn is_op(tok: u8) -> bool {
    (OP_BASE..HOLE).contains(&tok)
}

pub(crate) fn flatten(term: &Term, out: &mut Flat) {
    match term {
        Term::Leaf(g) => out.push(g.index() as u8),
        Term::Node(op, l, r) => {
            out.push(op_token(*op));
            flatten(l, out);
            flatten(r, out);
        }
    }
}

/// Rank of `perm` (a permutation of `1..=n`) in lexicographic order.
fn lehmer_rank(perm: &[u8], fact: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&p| p < perm[i]).count();
        rank += smaller * fact[n - 1 - i];
    }
    rank
}

fn lehmer_unrank(mut rank: usize, n: usize, fact: &[usize]) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = fact[n - 1 - i];
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

/// Bijection between degree-`n` multilinear terms of a signature and
/// `0..count()`, increasing in term order.
#[derive(Clone, Debug)]
pub struct TermIndexer {
    signature: Signature,
    degree: usize,
    shapes: Vec<Shape>,
    shape_rank: HashMap<u64, usize>,
    op_count: usize,
    fact: Vec<usize>,
}

impl TermIndexer {
    pub fn new(signature: Signature, degree: usize) -> Self {
        let shapes = shapes(degree);
        let shape_rank = shapes.iter().enumerate().map(|(i, s)| (s.bits, i)).collect();
        TermIndexer {
            signature,
            degree,
            shapes,
            shape_rank,
            op_count: signature.ops().len().pow(degree as u32 - 1),
            fact: (0..=degree).map(|k| factorial(k) as usize).collect(),
        }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn count(&self) -> usize {
        self.shapes.len() * self.op_count * self.fact[self.degree]
    }

    /// Index of a flat multilinear term of this degree and signature.
    pub(crate) fn index_flat(&self, flat: &[u8]) -> usize {
        let base = self.signature.ops().len();
        let mut bits = 0u64;
        let mut code = 0usize;
        let mut leaves = [0u8; 32];
        let mut nl = 0;
        for &tok in flat {
            bits <<= 1;
            if is_op(tok) {
                bits |= 1;
                code = code * base + self.signature.op_digit(token_op(tok));
            } else {
                leaves[nl] = tok;
                nl += 1;
            }
        }
        let shape = self.shape_rank[&bits];
        (shape * self.op_count + code) * self.fact[self.degree] + lehmer_rank(&leaves[..nl], &self.fact)
    }

    /// Index of `term`, or `None` if it is not a multilinear term of this
    /// degree in this signature.
    pub fn index(&self, term: &Term) -> Option<usize> {
        if term.degree() != self.degree || !term.is_multilinear() || !term.conforms_to(self.signature) {
            return None;
        }
        let mut flat = Vec::with_capacity(2 * self.degree);
        flatten(term, &mut flat);
        Some(self.index_flat(&flat))
    }

    pub fn term(&self, index: usize) -> Term {
        let perm_rank = index % self.fact[self.degree];
        let rest = index / self.fact[self.degree];
        let code = rest % self.op_count;
        let shape = rest / self.op_count;
        let ops = decode_ops(self.signature, code, self.degree - 1);
        let leaves = lehmer_unrank(perm_rank, self.degree, &self.fact);
        self.shapes[shape].build(&ops, &leaves)
    }
}
