//! Exact sparse reduced row-echelon form over the rationals.
//!
//! Columns are plain indices; callers map their column keys (terms,
//! differential monomials, quotient coordinates) to indices in the order
//! they want pivots chosen: the pivot of a row is its smallest column.
//! The stored form is always fully reduced with pivot 1, so it depends only
//! on the row space and the column order, never on insertion order.

use num_traits::{One, Zero};

use crate::poly::Coefficient;

const NONE: u32 = u32::MAX;

/// Sparse vector, entries sorted by column with no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(u32, Coefficient)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Build from arbitrary `(column, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(u32, Coefficient)>) -> Self {
        pairs.sort_by_key(|e| e.0);
        let mut entries: Vec<(u32, Coefficient)> = Vec::with_capacity(pairs.len());
        for (c, v) in pairs {
            match entries.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => {
                    if let Some(last) = entries.last() {
                        if last.1.is_zero() {
                            entries.pop();
                        }
                    }
                    entries.push((c, v));
                }
            }
        }
        if entries.last().is_some_and(|e| e.1.is_zero()) {
            entries.pop();
        }
        SparseVec { entries }
    }

    pub fn entries(&self) -> &[(u32, Coefficient)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, col: u32) -> Option<&Coefficient> {
        self.entries
            .binary_search_by_key(&col, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn scale(&mut self, c: &Coefficient) {
        for e in &mut self.entries {
            e.1 *= c;
        }
    }

    /// `self + c * other`, returning the columns of `other` that were absent
    /// from `self`.
    fn axpy(&mut self, c: &Coefficient, other: &[(u32, Coefficient)], added: &mut Vec<u32>) {
        let mut out = Vec::with_capacity(self.entries.len() + other.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    let (col, mut v) = a.next().unwrap();
                    v += c * &b.next().unwrap().1;
                    if !v.is_zero() {
                        out.push((col, v));
                    }
                }
                (Some(x), Some(y)) if x.0 < y.0 => out.push(a.next().unwrap()),
                (Some(_), Some(_)) | (None, Some(_)) => {
                    let (col, v) = b.next().unwrap();
                    added.push(*col);
                    out.push((*col, c * v));
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, None) => break,
            }
        }
        self.entries = out;
    }
}

/// Incrementally maintained reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_row: Vec<u32>,
    rows: Vec<SparseVec>,
    occurrences: Vec<Vec<u32>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_row: vec![NONE; ncols],
            rows: Vec::new(),
            occurrences: vec![Vec::new(); ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_row[col as usize] != NONE
    }

    /// The reduced row whose pivot is `col`.
    pub fn pivot_row(&self, col: u32) -> Option<&SparseVec> {
        match self.pivot_row[col as usize] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<u32> {
        (0..self.ncols as u32).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Rows sorted by pivot column.
    pub fn rows(&self) -> Vec<&SparseVec> {
        (0..self.ncols)
            .filter_map(|c| match self.pivot_row[c] {
                NONE => None,
                r => Some(&self.rows[r as usize]),
            })
            .collect()
    }

    /// Canonical representative of `v` modulo the row space: supported on
    /// free columns only.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if v.entries.iter().all(|(c, _)| !self.is_pivot(*c)) {
            return v.clone();
        }
        let mut pairs = Vec::with_capacity(v.len() * 4);
        for (c, a) in &v.entries {
            match self.pivot_row[*c as usize] {
                NONE => pairs.push((*c, a.clone())),
                r => {
                    for (col, x) in &self.rows[r as usize].entries[1..] {
                        pairs.push((*col, -(a * x)));
                    }
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Add a row to the spanned space. Returns the new pivot column if the
    /// rank increased.
    pub fn insert(&mut self, v: &SparseVec) -> Option<u32> {
        let mut r = self.reduce(v);
        let (pivot, lead) = r.entries.first().cloned()?;
        if !lead.is_one() {
            let inv = lead.recip();
            r.scale(&inv);
        }
        let new_id = self.rows.len() as u32;
        let tail: Vec<(u32, Coefficient)> = r.entries[1..].to_vec();
        let users = std::mem::take(&mut self.occurrences[pivot as usize]);
        let mut added = Vec::new();
        for id in users {
            let row = &mut self.rows[id as usize];
            let Some(a) = row.get(pivot).cloned() else {
                continue;
            };
            let pos = row.entries.binary_search_by_key(&pivot, |e| e.0).unwrap();
            row.entries.remove(pos);
            added.clear();
            row.axpy(&-a, &tail, &mut added);
            for &c in &added {
                self.occurrences[c as usize].push(id);
            }
        }
        for (c, _) in &tail {
            self.occurrences[*c as usize].push(new_id);
        }
        self.pivot_row[pivot as usize] = new_id;
        self.rows.push(r);
        Some(pivot)
    }

    /// Basis of `{x : row · x = 0 for every row}`, one vector per free column
    /// (that column set to 1).
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let free = self.free_columns();
        let mut by_free: Vec<Vec<(u32, Coefficient)>> = vec![Vec::new(); free.len()];
        let free_pos = |c: u32| free.binary_search(&c).ok();
        for row in &self.rows {
            let p = row.entries[0].0;
            for (c, x) in &row.entries[1..] {
                if let Some(k) = free_pos(*c) {
                    by_free[k].push((p, -x.clone()));
                }
            }
        }
        free.iter()
            .zip(by_free)
            .map(|(&f, mut pairs)| {
                pairs.push((f, Coefficient::one()));
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }
}

/// Rank of a set of vectors over `ncols` columns.
pub fn rank(vectors: &[SparseVec], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
