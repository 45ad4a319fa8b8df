//! Consequence generation: identity instances with monomials substituted
//! into the slots, placed in every monomial context with a hole.

use crate::enumerate::{for_each_multilinear, Limits};
use crate::error::Result;
use crate::linalg::SparseVec;
use crate::poly::{Coefficient, Polynomial};
use crate::term::Signature;

use super::index::{flatten, is_op, Flat, TermIndexer};
use super::IdentitySet;

/// Flat multilinear terms over `1..=b`, per size `b`.
pub(crate) struct Templates {
    by_size: Vec<Vec<Flat>>,
}

impl Templates {
    pub(crate) fn new(signature: Signature, max: usize) -> Self {
        let mut by_size = vec![Vec::new()];
        for b in 1..=max {
            let mut v = Vec::new();
            for_each_multilinear(signature, b, |t| {
                let mut f = Flat::new();
                flatten(&t, &mut f);
                v.push(f);
            });
            by_size.push(v);
        }
        Templates { by_size }
    }

    fn of_size(&self, b: usize) -> &[Flat] {
        &self.by_size[b]
    }
}

struct FlatIdentity {
    arity: usize,
    body: Vec<(Coefficient, Flat)>,
}

fn flat_identities(ids: &IdentitySet, n: usize) -> Vec<FlatIdentity> {
    let mut out: Vec<FlatIdentity> = ids
        .identities()
        .iter()
        .filter(|id| id.arity() <= n)
        .map(|id| FlatIdentity {
            arity: id.arity(),
            body: id
                .body()
                .iter()
                .map(|(t, c)| {
                    let mut f = Flat::new();
                    flatten(t, &mut f);
                    (c.clone(), f)
                })
                .collect(),
        })
        .collect();
    // short rows first keep the echelon form sparse
    out.sort_by_key(|id| id.body.len());
    out
}

/// Stream every consequence row of degree `n` as a sparse vector over the
/// indexer's columns. Rows are emitted in a fixed order.
pub(crate) fn for_each_row(ids: &IdentitySet, n: usize, indexer: &TermIndexer, mut emit: impl FnMut(SparseVec)) {
    let templates = Templates::new(ids.signature(), n);
    let all: Vec<u8> = (1..=n as u8).collect();
    let mut buf = Flat::with_capacity(2 * n);
    for id in flat_identities(ids, n) {
        let k = id.arity;
        for s in (0..=n - k).rev() {
            let contexts = templates.of_size(s + 1);
            let hole = (s + 1) as u8;
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != s {
                    continue;
                }
                let ctx_labels: Vec<u8> = all.iter().copied().filter(|&l| mask & (1 << (l - 1)) != 0).collect();
                let rest: Vec<u8> = all.iter().copied().filter(|&l| mask & (1 << (l - 1)) == 0).collect();
                for_each_ordered_partition(&rest, k, |blocks| {
                    let choices: Vec<&[Flat]> = blocks.iter().map(|b| templates.of_size(b.len())).collect();
                    let mut pick = vec![0usize; k];
                    loop {
                        for ctx in contexts {
                            let mut pairs = Vec::with_capacity(id.body.len());
                            for (c, body) in &id.body {
                                buf.clear();
                                for &tok in ctx {
                                    if is_op(tok) {
                                        buf.push(tok);
                                    } else if tok == hole {
                                        for &bt in body {
                                            if is_op(bt) {
                                                buf.push(bt);
                                            } else {
                                                let j = bt as usize - 1;
                                                for &mt in &choices[j][pick[j]] {
                                                    buf.push(if is_op(mt) { mt } else { blocks[j][mt as usize - 1] });
                                                }
                                            }
                                        }
                                    } else {
                                        buf.push(ctx_labels[tok as usize - 1]);
                                    }
                                }
                                pairs.push((indexer.index_flat(&buf) as u32, c.clone()));
                            }
                            emit(SparseVec::from_pairs(pairs));
                        }
                        if !advance(&mut pick, &choices) {
                            break;
                        }
                    }
                });
            }
        }
    }
}

fn advance(pick: &mut [usize], choices: &[&[Flat]]) -> bool {
    for j in (0..pick.len()).rev() {
        pick[j] += 1;
        if pick[j] < choices[j].len() {
            return true;
        }
        pick[j] = 0;
    }
    false
}

/// Every assignment of `items` to `k` nonempty ordered blocks; each block
/// keeps the items in their original order.
fn for_each_ordered_partition(items: &[u8], k: usize, mut f: impl FnMut(&[Vec<u8>])) {
    let m = items.len();
    if m < k {
        return;
    }
    let total = k.pow(m as u32);
    let mut blocks: Vec<Vec<u8>> = vec![Vec::new(); k];
    for code in 0..total {
        for b in &mut blocks {
            b.clear();
        }
        let mut c = code;
        for &it in items {
            blocks[c % k].push(it);
            c /= k;
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            f(&blocks);
        }
    }
}

/// Spanning set of the degree-`n` multilinear consequences of `ids`, as
/// polynomials. Duplicates are kept.
pub fn generate_consequences(ids: &IdentitySet, n: usize, limits: &Limits) -> Result<Vec<Polynomial>> {
    limits.check_oracle(n)?;
    let indexer = TermIndexer::new(ids.signature(), n);
    let mut out = Vec::new();
    for_each_row(ids, n, &indexer, |row| {
        out.push(
            row.entries()
                .iter()
                .map(|(c, v)| (v.clone(), indexer.term(*c as usize)))
                .collect::<Polynomial>(),
        );
    });
    Ok(out)
}
