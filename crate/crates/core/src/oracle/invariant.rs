//! Fixed vectors of the symmetric-group action on multilinear quotients.

use num_traits::Zero;

use crate::enumerate::Limits;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{apply_permutation, Coefficient, Permutation, Polynomial};

use super::basis::{consequence_basis, ColumnRanking, ConsequenceBasis};
use super::IdentitySet;

/// Basis of the `S_n`-invariant subspace of the degree-`n` multilinear
/// quotient, each vector reduced against the consequences.
pub fn invariant_basis(ids: &IdentitySet, n: usize, limits: &Limits) -> Result<Vec<Polynomial>> {
    let basis = consequence_basis(ids, n, &ColumnRanking::Default, limits)?;
    let family: Vec<Polynomial> = basis.free_terms().into_iter().map(Polynomial::from_term).collect();
    invariant_basis_of(&basis, &family)
}

/// Invariant vectors inside the span of `family`, which must be independent
/// modulo the consequences and closed under the action. Computed as the
/// joint kernel of `(1 2) - 1` and `(1 2 .. n) - 1`.
pub fn invariant_basis_of(basis: &ConsequenceBasis, family: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let n = basis.degree();
    let coords = basis.coordinatizer(family)?;
    if !coords.independent() {
        return Err(Error::Unsupported(
            "invariant computation needs a family independent in the quotient".into(),
        ));
    }
    let size = family.len();
    let mut generators = Vec::new();
    if n >= 2 {
        generators.push(Permutation::transposition(n, 1, 2));
    }
    if n >= 3 {
        generators.push(Permutation::long_cycle(n));
    }
    let mut constraints = Echelon::new(size);
    for sigma in &generators {
        // column j of the action matrix
        let mut columns = Vec::with_capacity(size);
        for p in family {
            let image = apply_permutation(p, sigma)?;
            let c = coords
                .express(basis, &image)?
                .ok_or_else(|| Error::Unsupported("family is not closed under the symmetric group".into()))?;
            columns.push(c);
        }
        for i in 0..size {
            let mut pairs: Vec<(u32, Coefficient)> = Vec::new();
            for (j, col) in columns.iter().enumerate() {
                let mut v = col[i].clone();
                if i == j {
                    v -= Coefficient::from_integer(1.into());
                }
                if !v.is_zero() {
                    pairs.push((j as u32, v));
                }
            }
            constraints.insert(&SparseVec::from_pairs(pairs));
        }
    }
    constraints
        .nullspace()
        .iter()
        .map(|v| {
            let mut p = Polynomial::zero();
            for (j, c) in v.entries() {
                p.add_scaled(&family[*j as usize], c);
            }
            basis.reduce(&p)
        })
        .collect()
}
