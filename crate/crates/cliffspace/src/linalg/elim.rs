use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{normalize_int_row, to_int_row, IntRow, Rational, SparseVec};

/// Incremental fraction-free row elimination.
///
/// Rows are kept integer-scaled in forward echelon form, keyed by pivot
/// column. Row combinations are cross-multiplications followed by a content
/// gcd, so no rational arithmetic happens until [`Eliminator::into_rref`]
/// normalizes pivots to 1.
///
/// The echelon span is insertion-order independent and the reduced echelon
/// basis of a subspace is unique, so every consumer of this type sees
/// canonical output regardless of thread count or feature flags.
#[derive(Debug, Clone, Default)]
pub struct Eliminator {
    rows: BTreeMap<usize, IntRow>,
}

impl Eliminator {
    pub fn new() -> Self {
        Eliminator {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Insert a rational vector into the row space. Returns true when the
    /// rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_int(to_int_row(v))
    }

    pub(crate) fn insert_int(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some(&(lead, ref lv)) = row.first() else {
                return false;
            };
            match self.rows.get(&lead) {
                None => {
                    let lv = lv.clone();
                    self.rows.insert(lead, normalize_int_row(row));
                    debug_assert!(!lv.is_zero());
                    return true;
                }
                Some(pivot_row) => {
                    row = eliminate_lead(row, pivot_row);
                }
            }
        }
    }

    /// Reduce a rational vector modulo the row space; the result is supported
    /// on non-pivot coordinates and is the canonical coset representative.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        loop {
            let Some(hit) = v.iter().find(|(i, _)| self.rows.contains_key(i)) else {
                return v;
            };
            let (col, coeff) = (hit.0, hit.1.clone());
            let row = &self.rows[&col];
            let lead = Rational::from_integer(row[0].1.clone());
            let factor = -coeff / lead;
            let row_rat: SparseVec = row
                .iter()
                .map(|(i, c)| (*i, Rational::from_integer(c.clone())))
                .collect();
            v = super::sparse_add_scaled(&v, &factor, &row_rat);
        }
    }

    /// Finish elimination: back-substitute and scale pivots to 1, producing
    /// the reduced echelon basis of the row space.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows: Vec<(usize, SparseVec)> = self
            .rows
            .into_iter()
            .map(|(p, row)| {
                let lead = Rational::from_integer(row[0].1.clone());
                let v: SparseVec = row
                    .into_iter()
                    .map(|(i, c)| (i, Rational::from_integer(c) / &lead))
                    .collect();
                (p, v)
            })
            .collect();
        // Back-substitution from the bottom pivot up.
        for i in (0..rows.len()).rev() {
            for j in (i + 1)..rows.len() {
                let pivot_col = rows[j].0;
                let coeff = rows[i]
                    .1
                    .iter()
                    .find(|(c, _)| *c == pivot_col)
                    .map(|(_, v)| v.clone());
                if let Some(c) = coeff {
                    let lower = rows[j].1.clone();
                    rows[i].1 = super::sparse_add_scaled(&rows[i].1, &(-c), &lower);
                }
            }
        }
        rows.into_iter().map(|(_, v)| v).collect()
    }
}

/// One fraction-free elimination step: cancel `row`'s leading entry against
/// `pivot_row` (same leading column) and renormalize the content.
fn eliminate_lead(row: IntRow, pivot_row: &IntRow) -> IntRow {
    let a = &pivot_row[0].1; // pivot leading coefficient
    let b = &row[0].1;
    let mut out: IntRow = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot_row.len() {
        match (row.get(i), pivot_row.get(j)) {
            (Some((ri, rv)), Some((pj, pv))) if ri == pj => {
                let v: BigInt = a * rv - b * pv;
                if !v.is_zero() {
                    out.push((*ri, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ri, rv)), Some((pj, _))) if ri < pj => {
                out.push((*ri, a * rv));
                i += 1;
            }
            (Some(_), Some((pj, pv))) => {
                out.push((*pj, -(b * pv)));
                j += 1;
            }
            (Some((ri, rv)), None) => {
                out.push((*ri, a * rv));
                i += 1;
            }
            (None, Some((pj, pv))) => {
                out.push((*pj, -(b * pv)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    normalize_int_row(out)
}
