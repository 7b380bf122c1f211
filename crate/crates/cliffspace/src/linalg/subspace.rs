use num_traits::One;

use super::{Eliminator, Rational, SparseMatrix, SparseVec};
use crate::{Error, Result};

/// A linear subspace given by its reduced echelon basis.
///
/// The basis is canonical: pivot entries are 1, pivot columns are strictly
/// increasing and eliminated from all other basis vectors. Two `Subspace`
/// values are equal iff they describe the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| vec![(i, Rational::one())])
            .collect();
        Subspace { ambient, basis }
    }

    /// Span of the given vectors, reduced to the canonical echelon basis.
    pub fn from_spanning(ambient: usize, vectors: Vec<SparseVec>) -> Self {
        let mut elim = Eliminator::new();
        for v in &vectors {
            debug_assert!(v.last().map_or(true, |(i, _)| *i < ambient));
            elim.insert(v);
        }
        Subspace {
            ambient,
            basis: elim.into_rref(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn eliminator(&self) -> Eliminator {
        let mut elim = Eliminator::new();
        for v in &self.basis {
            elim.insert(v);
        }
        elim
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.eliminator().reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let elim = self.eliminator();
        other.basis.iter().all(|v| elim.reduce(v).is_empty())
    }

    /// Sum of subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::from_spanning(self.ambient, vectors))
    }

    /// Intersection, computed through annihilators:
    /// `(a ∩ b)^⊥ = a^⊥ + b^⊥` under the coordinate pairing.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Annihilator in the dual space, pairing dual coordinates against
    /// coordinates by the dot product.
    pub fn annihilator(&self) -> Subspace {
        let rows: Vec<SparseVec> = self.basis.clone();
        let m = SparseMatrix::from_columns(self.ambient, &rows).transpose();
        debug_assert_eq!(m.ncols(), self.ambient);
        m.kernel_basis()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

impl Subspace {
    /// Canonical coset representative of `v` modulo this subspace
    /// (supported on non-pivot coordinates).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.eliminator().reduce(v)
    }
}

/// Dense helper for tests: build a sparse vector from `i64` entries.
#[cfg(test)]
pub fn vec_from_ints(entries: &[i64]) -> SparseVec {
    entries
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0)
        .map(|(i, v)| (i, Rational::from_integer((*v).into())))
        .collect()
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "subspace(dim {} of {})", self.dim(), self.ambient)?;
        if f.alternate() {
            for b in &self.basis {
                write!(f, "\n  {b:?}")?;
            }
        }
        Ok(())
    }
}
