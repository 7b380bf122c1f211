use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Eliminator, Rational, SparseVec, Subspace};

/// Sparse matrix over the rationals. No zero entries are stored and all
/// indices are checked against the declared shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            entries: BTreeMap::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Set an entry, dropping explicit zeros.
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.nrows && c < self.ncols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// Add to an entry.
    pub fn add(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.nrows && c < self.ncols, "index out of bounds");
        if v.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry((r, c))
            .or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Assemble a matrix from columns.
    pub fn from_columns(nrows: usize, columns: &[SparseVec]) -> Self {
        let mut m = SparseMatrix::new(nrows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::new(self.ncols, self.nrows);
        for ((r, c), v) in &self.entries {
            t.entries.insert((*c, *r), v.clone());
        }
        t
    }

    pub fn identity(n: usize) -> SparseMatrix {
        let mut m = SparseMatrix::new(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    /// Rows as sparse vectors, in row order (empty rows included).
    pub fn rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.nrows];
        for ((r, c), v) in &self.entries {
            rows[*r].push((*c, v.clone()));
        }
        rows
    }

    /// Columns as sparse vectors, in column order (empty columns included).
    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols = vec![SparseVec::new(); self.ncols];
        for ((r, c), v) in &self.entries {
            cols[*c].push((*r, v.clone()));
        }
        cols
    }

    /// Matrix-vector product (vector indexed by columns).
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for ((r, c), a) in &self.entries {
            if let Ok(idx) = v.binary_search_by(|(i, _)| i.cmp(c)) {
                let slot = acc.entry(*r).or_insert_with(Rational::zero);
                *slot += a * &v[idx].1;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.eliminated().rank()
    }

    /// Reduced echelon basis of the right kernel; `dim = ncols − rank`.
    pub fn kernel_basis(&self) -> Subspace {
        let elim = self.eliminated();
        let rref = elim.clone().into_rref();
        let pivot_of_row: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut kernel: Vec<SparseVec> = Vec::new();
        for f in 0..self.ncols {
            if elim.is_pivot(f) {
                continue;
            }
            let mut v: SparseVec = Vec::new();
            for (row, pivot) in rref.iter().zip(&pivot_of_row) {
                if let Some((_, c)) = row.iter().find(|(i, _)| *i == f) {
                    v.push((*pivot, -c.clone()));
                }
            }
            v.push((f, Rational::from_integer(1.into())));
            v.sort_by_key(|(i, _)| *i);
            kernel.push(v);
        }
        Subspace::from_spanning(self.ncols, kernel)
    }

    /// Run elimination on the rows, sparsest first within each leading
    /// column (the pivoting rule everything downstream relies on being
    /// deterministic).
    fn eliminated(&self) -> Eliminator {
        let mut rows = self.rows();
        rows.retain(|r| !r.is_empty());
        rows.sort_by_key(|r| (r[0].0, r.len()));
        let mut elim = Eliminator::new();
        for row in &rows {
            elim.insert(row);
        }
        elim
    }
}
