//! Row-reduced consequence spaces and queries against them.

use num_traits::Zero;

use crate::enumerate::Limits;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{Coefficient, Polynomial};
use crate::term::{Signature, Term};

use super::generate::for_each_row;
use super::index::TermIndexer;
use super::IdentitySet;

/// Order in which columns are preferred as pivots. Pivots are taken from
/// the front, so the columns ranked last survive as the quotient basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ColumnRanking {
    /// Term order.
    #[default]
    Default,
    /// Every column not listed, in term order, then the listed ones in
    /// term order.
    Targeted(Vec<Term>),
}

/// The reduced row-echelon form of the degree-`n` multilinear consequences
/// of an identity set, under a column ranking.
#[derive(Clone, Debug)]
pub struct ConsequenceBasis {
    indexer: TermIndexer,
    /// term index -> column position
    position: Vec<u32>,
    /// column position -> term index
    column: Vec<u32>,
    echelon: Echelon,
}

impl ConsequenceBasis {
    fn empty(signature: Signature, degree: usize, ranking: &ColumnRanking) -> Result<Self> {
        let indexer = TermIndexer::new(signature, degree);
        let count = indexer.count();
        let column: Vec<u32> = match ranking {
            ColumnRanking::Default => (0..count as u32).collect(),
            ColumnRanking::Targeted(preferred) => {
                let mut marked = vec![false; count];
                for t in preferred {
                    let i = indexer.index(t).ok_or_else(|| Error::NotMultilinear {
                        expected: degree,
                        detail: format!("preferred column {t}"),
                    })?;
                    marked[i] = true;
                }
                (0..count as u32)
                    .filter(|&i| !marked[i as usize])
                    .chain((0..count as u32).filter(|&i| marked[i as usize]))
                    .collect()
            }
        };
        let mut position = vec![0u32; count];
        for (p, &i) in column.iter().enumerate() {
            position[i as usize] = p as u32;
        }
        Ok(ConsequenceBasis {
            indexer,
            position,
            column,
            echelon: Echelon::new(count),
        })
    }

    fn insert_indexed(&mut self, row: &SparseVec) {
        let v = SparseVec::from_pairs(
            row.entries()
                .iter()
                .map(|(i, c)| (self.position[*i as usize], c.clone()))
                .collect(),
        );
        self.echelon.insert(&v);
    }

    pub fn degree(&self) -> usize {
        self.indexer.degree()
    }

    pub fn signature(&self) -> Signature {
        self.indexer.signature()
    }

    /// Number of multilinear terms of this degree.
    pub fn ncols(&self) -> usize {
        self.indexer.count()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Dimension of the multilinear quotient.
    pub fn quotient_dim(&self) -> usize {
        self.ncols() - self.rank()
    }

    /// Terms whose classes form the canonical quotient basis (the non-pivot
    /// columns), in column-ranking order.
    pub fn free_terms(&self) -> Vec<Term> {
        self.echelon
            .free_columns()
            .into_iter()
            .map(|p| self.indexer.term(self.column[p as usize] as usize))
            .collect()
    }

    /// The reduced rows, in pivot order.
    pub fn rows(&self) -> Vec<Polynomial> {
        self.echelon.rows().into_iter().map(|r| self.to_poly(r)).collect()
    }

    fn to_poly(&self, v: &SparseVec) -> Polynomial {
        v.entries()
            .iter()
            .map(|(p, c)| (c.clone(), self.indexer.term(self.column[*p as usize] as usize)))
            .collect()
    }

    fn to_vec(&self, p: &Polynomial) -> Result<SparseVec> {
        let n = self.degree();
        let mut pairs = Vec::with_capacity(p.len());
        for (t, c) in p.iter() {
            if t.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: t.degree(),
                });
            }
            if !t.conforms_to(self.signature()) {
                return Err(Error::SignatureMismatch {
                    expected: self.signature().name(),
                    found: t.signature().ok().flatten().map_or("no operations", |s| s.name()),
                });
            }
            let i = self.indexer.index(t).ok_or_else(|| Error::NotMultilinear {
                expected: n,
                detail: format!("term {t}"),
            })?;
            pairs.push((self.position[i], c.clone()));
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    /// Canonical representative of `p` modulo the consequences, supported on
    /// `free_terms()`.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let v = self.to_vec(p)?;
        Ok(self.to_poly(&self.echelon.reduce(&v)))
    }

    pub fn is_consequence(&self, p: &Polynomial) -> Result<bool> {
        let v = self.to_vec(p)?;
        Ok(self.echelon.reduce(&v).is_zero())
    }

    /// Coordinates of `p` in the free-term basis, in `free_terms()` order.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Coefficient>> {
        let v = self.echelon.reduce(&self.to_vec(p)?);
        let free = self.echelon.free_columns();
        let mut out = vec![Coefficient::zero(); free.len()];
        for (col, c) in v.entries() {
            let k = free.binary_search(col).expect("reduced vectors live on free columns");
            out[k] = c.clone();
        }
        Ok(out)
    }

    /// Coordinates of the quotient relative to a chosen spanning family.
    pub fn coordinatizer(&self, family: &[Polynomial]) -> Result<QuotientCoordinates> {
        QuotientCoordinates::new(self, family)
    }
}

/// Expresses quotient classes as combinations of a fixed family of
/// polynomials, for families that are linearly independent modulo the
/// consequences.
#[derive(Clone, Debug)]
pub struct QuotientCoordinates {
    free: Vec<u32>,
    size: usize,
    echelon: Echelon,
    independent: bool,
}

impl QuotientCoordinates {
    fn new(basis: &ConsequenceBasis, family: &[Polynomial]) -> Result<Self> {
        let free = basis.echelon.free_columns();
        let d = free.len();
        let size = family.len();
        let mut echelon = Echelon::new(d + size);
        let mut independent = true;
        for (j, p) in family.iter().enumerate() {
            let v = basis.echelon.reduce(&basis.to_vec(p)?);
            let mut pairs: Vec<(u32, Coefficient)> = v
                .entries()
                .iter()
                .map(|(c, x)| (free.binary_search(c).unwrap() as u32, x.clone()))
                .collect();
            pairs.push(((d + j) as u32, Coefficient::from_integer(1.into())));
            let pivot = echelon.insert(&SparseVec::from_pairs(pairs));
            if pivot.is_none_or(|c| c as usize >= d) {
                independent = false;
            }
        }
        Ok(QuotientCoordinates {
            free,
            size,
            echelon,
            independent,
        })
    }

    /// True if the family is linearly independent modulo the consequences.
    pub fn independent(&self) -> bool {
        self.independent
    }

    /// Dimension of the span of the family in the quotient.
    pub fn span_dim(&self) -> usize {
        (0..self.free.len() as u32).filter(|&c| self.echelon.is_pivot(c)).count()
    }

    /// Coefficients `c` with `p = sum c_j family_j` modulo consequences, or
    /// `None` if `p` is outside the span. Requires an independent family for
    /// uniqueness.
    pub fn express(&self, basis: &ConsequenceBasis, p: &Polynomial) -> Result<Option<Vec<Coefficient>>> {
        let v = basis.echelon.reduce(&basis.to_vec(p)?);
        let pairs: Vec<(u32, Coefficient)> = v
            .entries()
            .iter()
            .map(|(c, x)| (self.free.binary_search(c).unwrap() as u32, x.clone()))
            .collect();
        let r = self.echelon.reduce(&SparseVec::from_pairs(pairs));
        let d = self.free.len() as u32;
        if r.entries().first().is_some_and(|(c, _)| *c < d) {
            return Ok(None);
        }
        let mut out = vec![Coefficient::zero(); self.size];
        for (c, x) in r.entries() {
            out[(c - d) as usize] = -x.clone();
        }
        Ok(Some(out))
    }
}

/// Row-reduce explicit rows over the degree-`n` multilinear terms of a
/// signature.
pub fn row_reduce(rows: &[Polynomial], ranking: &ColumnRanking, signature: Signature, n: usize) -> Result<ConsequenceBasis> {
    let mut basis = ConsequenceBasis::empty(signature, n, ranking)?;
    for r in rows {
        let v = basis.to_vec(r)?;
        basis.echelon.insert(&v);
    }
    Ok(basis)
}

/// The consequence basis of `ids` in degree `n`, built by streaming the
/// generated rows straight into the elimination.
pub fn consequence_basis(ids: &IdentitySet, n: usize, ranking: &ColumnRanking, limits: &Limits) -> Result<ConsequenceBasis> {
    if n == 0 {
        return Err(Error::Unsupported("degree must be at least 1".into()));
    }
    limits.check_oracle(n)?;
    let mut basis = ConsequenceBasis::empty(ids.signature(), n, ranking)?;
    let indexer = basis.indexer.clone();
    for_each_row(ids, n, &indexer, |row| {
        if row.is_zero() {
            return;
        }
        // a row whose support is one already-pivoted column adds nothing
        if row.len() == 1 && basis.echelon.is_pivot(basis.position[row.entries()[0].0 as usize]) {
            return;
        }
        basis.insert_indexed(&row);
    });
    Ok(basis)
}

/// Dimension of the degree-`n` multilinear component of the free algebra
/// of the variety.
pub fn dim_multilinear(ids: &IdentitySet, n: usize, limits: &Limits) -> Result<usize> {
    Ok(consequence_basis(ids, n, &ColumnRanking::Default, limits)?.quotient_dim())
}

/// Whether a multilinear `p` vanishes in the free algebra of the variety.
pub fn is_consequence(ids: &IdentitySet, p: &Polynomial, limits: &Limits) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    let n = p.max_degree();
    p.check_multilinear(n)?;
    consequence_basis(ids, n, &ColumnRanking::Default, limits)?.is_consequence(p)
}
