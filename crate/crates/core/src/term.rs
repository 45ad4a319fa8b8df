//! Binary term trees over the generators `x1, x2, ...`.
//!
//! A [`Term`] is either a generator or a product of two terms under one of
//! three operations: the single Novikov product `*`, or the two polarized
//! products `[a,b]` and `{a,b}`. A term never mixes `*` with the polarized
//! pair; [`Signature`] names the two admissible operation sets.
//!
//! Terms are totally ordered by [`Ord`], which implements the deterministic
//! term order used for every sorted listing and every matrix column order:
//! degree first, then tree shape (larger left subtrees first, recursively),
//! then operation tags in preorder, then leaf indices left to right.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A generator `x_i` of the countable generating set, `i >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u32);

impl Generator {
    pub fn new(index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroGenerator { offset: 0 });
        }
        Ok(Generator(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// Binary operation tags. `Star` is the Novikov product; `Bracket` and
/// `Brace` are the commutator and anticommutator of the polarized side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpSymbol {
    Star,
    Bracket,
    Brace,
}

impl OpSymbol {
    pub fn signature(self) -> Signature {
        match self {
            OpSymbol::Star => Signature::Star,
            OpSymbol::Bracket | OpSymbol::Brace => Signature::Polarized,
        }
    }

    /// Glyph used in tree-monomial type sequences.
    pub fn dot(self) -> &'static str {
        match self {
            OpSymbol::Star => "*",
            OpSymbol::Bracket => "•",
            OpSymbol::Brace => "○",
        }
    }
}

/// The two operation sets a term may draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    /// `{Star}`
    Star,
    /// `{Bracket, Brace}`
    Polarized,
}

impl Signature {
    pub fn ops(self) -> &'static [OpSymbol] {
        match self {
            Signature::Star => &[OpSymbol::Star],
            Signature::Polarized => &[OpSymbol::Bracket, OpSymbol::Brace],
        }
    }

    pub fn contains(self, op: OpSymbol) -> bool {
        op.signature() == self
    }

    pub fn name(self) -> &'static str {
        match self {
            Signature::Star => "{*}",
            Signature::Polarized => "{[,], {,}}",
        }
    }

    /// Position of `op` among this signature's operations.
    pub(crate) fn op_digit(self, op: OpSymbol) -> usize {
        self.ops().iter().position(|&o| o == op).unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(Generator),
    Node(OpSymbol, Box<Term>, Box<Term>),
}

impl Term {
    /// Leaf `x_index`. Panics on index 0; use [`Generator::new`] for checked input.
    pub fn var(index: u32) -> Term {
        assert!(index >= 1, "generator indices start at 1");
        Term::Leaf(Generator(index))
    }

    pub fn node(op: OpSymbol, left: Term, right: Term) -> Term {
        Term::Node(op, Box::new(left), Box::new(right))
    }

    pub fn star(left: Term, right: Term) -> Term {
        Term::node(OpSymbol::Star, left, right)
    }

    pub fn bracket(left: Term, right: Term) -> Term {
        Term::node(OpSymbol::Bracket, left, right)
    }

    pub fn brace(left: Term, right: Term) -> Term {
        Term::node(OpSymbol::Brace, left, right)
    }

    /// Right-normed product `x_{l1} op1 (x_{l2} op2 (... (x_{l(n-1)} op(n-1) x_{ln})))`.
    pub fn right_normed(ops: &[OpSymbol], leaves: &[u32]) -> Term {
        assert_eq!(ops.len() + 1, leaves.len());
        let mut acc = Term::var(leaves[leaves.len() - 1]);
        for (op, &leaf) in ops.iter().zip(leaves).rev() {
            acc = Term::node(*op, Term::var(leaf), acc);
        }
        acc
    }

    /// Left-normed Star product `((x_{l1} x_{l2}) x_{l3}) ... x_{ln}`.
    pub fn left_comb(leaves: &[u32]) -> Term {
        let mut acc = Term::var(leaves[0]);
        for &leaf in &leaves[1..] {
            acc = Term::star(acc, Term::var(leaf));
        }
        acc
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Term::Leaf(_))
    }

    pub fn degree(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    /// Leaf indices from left to right.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(8);
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Term::Leaf(g) => out.push(g.0),
            Term::Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Operation tags in preorder.
    pub fn ops_preorder(&self) -> Vec<OpSymbol> {
        let mut out = Vec::new();
        self.collect_ops(&mut out);
        out
    }

    fn collect_ops(&self, out: &mut Vec<OpSymbol>) {
        if let Term::Node(op, l, r) = self {
            out.push(*op);
            l.collect_ops(out);
            r.collect_ops(out);
        }
    }

    /// The signature of the operations used, or `None` for a generator.
    /// Fails if the term mixes `*` with the polarized operations.
    pub fn signature(&self) -> Result<Option<Signature>> {
        let mut found: Option<Signature> = None;
        for op in self.ops_preorder() {
            match found {
                None => found = Some(op.signature()),
                Some(s) if s != op.signature() => {
                    return Err(Error::MixedSignature { offset: 0 })
                }
                _ => {}
            }
        }
        Ok(found)
    }

    /// True if every operation belongs to `sig`.
    pub fn conforms_to(&self, sig: Signature) -> bool {
        match self {
            Term::Leaf(_) => true,
            Term::Node(op, l, r) => sig.contains(*op) && l.conforms_to(sig) && r.conforms_to(sig),
        }
    }

    /// True if the leaves are exactly `x1..xn`, each once, where `n` is the degree.
    pub fn is_multilinear(&self) -> bool {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        leaves.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    /// Replace every leaf index through `f`.
    pub fn map_leaves(&self, f: &impl Fn(u32) -> u32) -> Term {
        match self {
            Term::Leaf(g) => Term::Leaf(Generator(f(g.0))),
            Term::Node(op, l, r) => Term::node(*op, l.map_leaves(f), r.map_leaves(f)),
        }
    }

    /// Replace every operation through `f`.
    pub fn map_ops(&self, f: &impl Fn(OpSymbol) -> OpSymbol) -> Term {
        match self {
            Term::Leaf(g) => Term::Leaf(*g),
            Term::Node(op, l, r) => Term::node(f(*op), l.map_ops(f), r.map_ops(f)),
        }
    }
}

/// Compare only the bracketing shapes of two terms of equal degree.
fn shape_cmp(a: &Term, b: &Term) -> Ordering {
    match (a, b) {
        (Term::Leaf(_), Term::Leaf(_)) => Ordering::Equal,
        (Term::Node(_, al, ar), Term::Node(_, bl, br)) => bl
            .degree()
            .cmp(&al.degree())
            .then_with(|| shape_cmp(al, bl))
            .then_with(|| shape_cmp(ar, br)),
        // unequal degrees never reach here from `term_order`
        (Term::Leaf(_), Term::Node(..)) => Ordering::Less,
        (Term::Node(..), Term::Leaf(_)) => Ordering::Greater,
    }
}

/// The deterministic strict total order on terms.
pub fn term_order(a: &Term, b: &Term) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| shape_cmp(a, b))
        .then_with(|| a.ops_preorder().cmp(&b.ops_preorder()))
        .then_with(|| a.leaves().cmp(&b.leaves()))
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        term_order(self, other)
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(g) => write!(f, "x{}", g.0),
            Term::Node(OpSymbol::Star, l, r) => write!(f, "({l}*{r})"),
            Term::Node(OpSymbol::Bracket, l, r) => write!(f, "[{l},{r}]"),
            Term::Node(OpSymbol::Brace, l, r) => write!(f, "{{{l},{r}}}"),
        }
    }
}

/// Fully parenthesized canonical text of a term.
pub fn format_term(term: &Term) -> String {
    term.to_string()
}
