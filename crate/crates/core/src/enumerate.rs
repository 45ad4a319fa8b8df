//! Enumeration of bracketing shapes and multilinear monomials.

use crate::error::{Error, Result};
use crate::term::{OpSymbol, Signature, Term};

/// Degree caps guarding the Catalan-times-factorial growth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest degree for explicit enumeration.
    pub enumeration: usize,
    /// Largest degree for consequence-space (oracle) computations.
    pub oracle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 8,
            oracle: 6,
        }
    }
}

impl Limits {
    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        if n > self.enumeration {
            return Err(Error::DegreeCap {
                degree: n,
                cap: self.enumeration,
            });
        }
        Ok(())
    }

    pub fn check_oracle(&self, n: usize) -> Result<()> {
        if n > self.oracle {
            return Err(Error::DegreeCap {
                degree: n,
                cap: self.oracle,
            });
        }
        Ok(())
    }
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `|ops|^(n-1) * C_(n-1) * n!`
pub fn multilinear_count(signature: Signature, n: usize) -> u64 {
    assert!(n >= 1);
    (signature.ops().len() as u64).pow(n as u32 - 1) * catalan(n - 1) * factorial(n)
}

/// A bracketing shape, encoded as its preorder node/leaf bit string
/// (1 = internal node, 0 = leaf), most significant bit first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub(crate) bits: u64,
    pub(crate) len: u8,
}

impl Shape {
    const LEAF: Shape = Shape { bits: 0, len: 1 };

    fn join(l: Shape, r: Shape) -> Shape {
        let len = 1 + l.len + r.len;
        Shape {
            bits: (1u64 << (len - 1)) | (l.bits << r.len) | r.bits,
            len,
        }
    }

    /// Term with this shape, the given preorder ops and the given leaves.
    pub fn build(&self, ops: &[OpSymbol], leaves: &[u32]) -> Term {
        let mut pos = 0usize;
        let mut op_i = 0usize;
        let mut leaf_i = 0usize;
        self.build_rec(&mut pos, ops, &mut op_i, leaves, &mut leaf_i)
    }

    fn bit(&self, pos: usize) -> bool {
        (self.bits >> (self.len as usize - 1 - pos)) & 1 == 1
    }

    fn build_rec(
        &self,
        pos: &mut usize,
        ops: &[OpSymbol],
        op_i: &mut usize,
        leaves: &[u32],
        leaf_i: &mut usize,
    ) -> Term {
        let is_node = self.bit(*pos);
        *pos += 1;
        if is_node {
            let op = ops[*op_i];
            *op_i += 1;
            let l = self.build_rec(pos, ops, op_i, leaves, leaf_i);
            let r = self.build_rec(pos, ops, op_i, leaves, leaf_i);
            Term::node(op, l, r)
        } else {
            let t = Term::var(leaves[*leaf_i]);
            *leaf_i += 1;
            t
        }
    }
}

/// All shapes with `n` leaves, in term order.
pub fn shapes(n: usize) -> Vec<Shape> {
    assert!((1..=32).contains(&n), "shape degree out of range");
    let mut table: Vec<Vec<Shape>> = vec![Vec::new(), vec![Shape::LEAF]];
    for d in 2..=n {
        let mut out = Vec::with_capacity(catalan(d - 1) as usize);
        for left in (1..d).rev() {
            for &l in &table[left] {
                for &r in &table[d - left] {
                    out.push(Shape::join(l, r));
                }
            }
        }
        table.push(out);
    }
    table.swap_remove(n)
}

/// Advance `perm` to the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(perm: &mut [T]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Op assignment number `code` for `slots` internal nodes, most significant
/// digit first.
pub(crate) fn decode_ops(signature: Signature, code: usize, slots: usize) -> Vec<OpSymbol> {
    let ops = signature.ops();
    let base = ops.len();
    let mut out = vec![ops[0]; slots];
    let mut c = code;
    for k in (0..slots).rev() {
        out[k] = ops[c % base];
        c /= base;
    }
    out
}

/// Visit every multilinear term of degree `n` over `labels` (each label used
/// once), in term order when `labels` is sorted.
pub fn for_each_term_over(signature: Signature, labels: &[u32], mut f: impl FnMut(Term)) {
    let n = labels.len();
    let op_count = signature.ops().len().pow(n as u32 - 1);
    for shape in shapes(n) {
        for code in 0..op_count {
            let ops = decode_ops(signature, code, n - 1);
            let mut perm = labels.to_vec();
            perm.sort_unstable();
            loop {
                f(shape.build(&ops, &perm));
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
}

/// Visit every multilinear term of degree `n` in `x1..xn`, in term order.
pub fn for_each_multilinear(signature: Signature, n: usize, f: impl FnMut(Term)) {
    let labels: Vec<u32> = (1..=n as u32).collect();
    for_each_term_over(signature, &labels, f)
}

/// All multilinear terms of degree `n`, sorted by term order.
pub fn enumerate_multilinear(signature: Signature, n: usize, limits: &Limits) -> Result<Vec<Term>> {
    if n == 0 {
        return Err(Error::Unsupported("degree must be at least 1".into()));
    }
    limits.check_enumeration(n)?;
    let mut out = Vec::with_capacity(multilinear_count(signature, n) as usize);
    for_each_multilinear(signature, n, |t| out.push(t));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn counts_match_formula() {
        let lim = Limits::default();
        let star2 = enumerate_multilinear(Signature::Star, 2, &lim).unwrap();
        assert_eq!(
            star2.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            vec!["(x1*x2)", "(x2*x1)"]
        );
        assert_eq!(enumerate_multilinear(Signature::Star, 3, &lim).unwrap().len(), 12);
        assert_eq!(enumerate_multilinear(Signature::Polarized, 3, &lim).unwrap().len(), 48);
        for n in 1..=6 {
            for sig in [Signature::Star, Signature::Polarized] {
                let terms = enumerate_multilinear(sig, n, &lim).unwrap();
                assert_eq!(terms.len() as u64, multilinear_count(sig, n));
            }
        }
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let lim = Limits::default();
        for sig in [Signature::Star, Signature::Polarized] {
            let terms = enumerate_multilinear(sig, 4, &lim).unwrap();
            assert!(terms.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn degree_cap() {
        let lim = Limits {
            enumeration: 3,
            oracle: 3,
        };
        assert!(matches!(
            enumerate_multilinear(Signature::Star, 4, &lim),
            Err(Error::DegreeCap { degree: 4, cap: 3 })
        ));
    }

    #[test]
    fn shapes_in_order() {
        let s3: Vec<String> = shapes(3)
            .iter()
            .map(|s| s.build(&[OpSymbol::Star; 2], &[1, 2, 3]).to_string())
            .collect();
        assert_eq!(s3, vec!["((x1*x2)*x3)", "(x1*(x2*x3))"]);
    }
}
