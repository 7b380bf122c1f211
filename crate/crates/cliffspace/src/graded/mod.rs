//! Generic engine for connected graded algebras generated in degree 1.
//!
//! Two realizations are provided: [`PresentedAlgebra`] builds the graded
//! components of `T(V)/⟨R⟩` degree by degree as explicit ambient quotients
//! (no noncommutative Gröbner machinery — the degrees in play keep ambient
//! dimensions tractable), and [`SectionAlgebra`] wraps a quadric family with
//! its Clifford section product. Everything downstream (Hilbert series,
//! minimal relations, quadratic duals, Koszul and Frobenius certificates)
//! works through the [`GradedAlgebra`] trait.

mod hilbert;
mod presented;
mod relations;
mod section;

pub use hilbert::{koszul_series_check, HilbertSeries};
pub use presented::{AlgebraPresentation, PresentedAlgebra};
pub use relations::{
    kernel_character, minimal_relations, word_multiplication_matrix, DegreeRelations,
};
pub use section::SectionAlgebra;

use crate::linalg::{SparseMatrix, Subspace};
use crate::{Error, Result};

/// A connected graded algebra with a chosen basis in each degree, generated
/// in degree 1 by a basis matching the generator order.
pub trait GradedAlgebra: Sync {
    fn ngens(&self) -> usize;

    /// Largest degree this table knows about.
    fn max_degree(&self) -> usize;

    fn dim(&self, d: usize) -> usize;

    /// Torus weights of the degree-`d` basis elements, when a torus action
    /// is declared.
    fn weights(&self, d: usize) -> Option<Vec<Vec<u8>>>;

    /// Multiplication structure constants on the chosen bases: the column
    /// `i1 * dim(d2) + i2` holds the coordinates of `b_{i1} · b_{i2}` in the
    /// degree `d1 + d2` basis.
    fn mult_matrix(&self, d1: usize, d2: usize) -> SparseMatrix;

    fn hilbert(&self, cap: usize) -> HilbertSeries {
        HilbertSeries::new((0..=cap.min(self.max_degree())).map(|d| self.dim(d) as i64).collect())
    }
}

/// Quadratic dual relation space: the annihilator of `r ⊂ V⊗V` inside
/// `V∨⊗V∨` under the coordinate pairing. `dim r + dim r^⊥ = n²`.
pub fn quadratic_dual(r: &Subspace, n: usize) -> Result<Subspace> {
    if r.ambient_dim() != n * n {
        return Err(Error::DimensionMismatch(r.ambient_dim(), n * n));
    }
    Ok(r.annihilator())
}

/// Frobenius certificate: the algebra must vanish strictly above `topdeg`,
/// have a one-dimensional top component, mirror-symmetric dimensions, and a
/// multiplication pairing `A_i × A_{topdeg−i} → A_topdeg` of full rank.
pub fn frobenius_check(alg: &impl GradedAlgebra, topdeg: usize) -> Result<bool> {
    if alg.dim(topdeg) != 1 {
        return Err(Error::NotFrobeniusShaped(format!(
            "top degree {topdeg} has dimension {} (want 1)",
            alg.dim(topdeg)
        )));
    }
    if alg.max_degree() <= topdeg {
        return Err(Error::NotFrobeniusShaped(format!(
            "table stops at degree {}; cannot confirm vanishing above {topdeg}",
            alg.max_degree()
        )));
    }
    for d in (topdeg + 1)..=alg.max_degree() {
        if alg.dim(d) != 0 {
            return Err(Error::NotFrobeniusShaped(format!(
                "degree {d} has dimension {} above the top degree",
                alg.dim(d)
            )));
        }
    }
    for i in 0..=topdeg {
        let j = topdeg - i;
        if alg.dim(i) != alg.dim(j) {
            return Ok(false);
        }
        let pairing = alg.mult_matrix(i, j);
        // one row per top-degree coordinate; reshape to dim_i × dim_j
        let mut reshaped = SparseMatrix::new(alg.dim(i), alg.dim(j));
        for r in 0..alg.dim(i) {
            for c in 0..alg.dim(j) {
                reshaped.set(r, c, pairing.get(0, r * alg.dim(j) + c));
            }
        }
        if reshaped.rank() != alg.dim(i).min(alg.dim(j)) {
            return Ok(false);
        }
    }
    Ok(true)
}
