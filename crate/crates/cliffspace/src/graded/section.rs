use std::collections::BTreeMap;
use std::sync::Arc;

use crate::clifford::{section_basis, CliffordElement, QuadricFamily, SectionIndex};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::par;

use super::GradedAlgebra;

/// The graded section algebra of a quadric family, with the section basis
/// `(subset, coefficient monomial)` in each degree and Clifford products as
/// structure constants.
pub struct SectionAlgebra {
    family: Arc<QuadricFamily>,
    bases: Vec<Vec<SectionIndex>>,
    indexes: Vec<BTreeMap<SectionIndex, usize>>,
}

impl SectionAlgebra {
    pub fn new(family: Arc<QuadricFamily>, max_degree: usize) -> Self {
        let bases: Vec<Vec<SectionIndex>> = (0..=max_degree)
            .map(|d| section_basis(&family, d as i64))
            .collect();
        let indexes = bases
            .iter()
            .map(|b| {
                b.iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect()
            })
            .collect();
        SectionAlgebra {
            family,
            bases,
            indexes,
        }
    }

    pub fn family(&self) -> &Arc<QuadricFamily> {
        &self.family
    }

    pub fn basis(&self, d: usize) -> &[SectionIndex] {
        &self.bases[d]
    }

    pub fn element(&self, d: usize, i: usize) -> CliffordElement {
        let b = &self.bases[d][i];
        CliffordElement::basis_element(&self.family, b.subset, b.coeffs.clone())
    }

    /// Coordinates of a homogeneous element in the degree-`d` section basis.
    pub fn coordinates(&self, d: usize, element: &CliffordElement) -> SparseVec {
        element.coordinates(&self.indexes[d])
    }
}

impl GradedAlgebra for SectionAlgebra {
    fn ngens(&self) -> usize {
        self.family.n()
    }

    fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    fn dim(&self, d: usize) -> usize {
        self.bases.get(d).map_or(0, |b| b.len())
    }

    fn weights(&self, d: usize) -> Option<Vec<Vec<u8>>> {
        let cw = self.family.coefficient_weights()?;
        Some(
            self.bases[d]
                .iter()
                .map(|b| b.weight(self.family.n(), &cw))
                .collect(),
        )
    }

    fn mult_matrix(&self, d1: usize, d2: usize) -> SparseMatrix {
        assert!(d1 + d2 <= self.max_degree());
        let dim2 = self.dim(d2);
        let pairs: Vec<(usize, usize)> = (0..self.dim(d1))
            .flat_map(|i1| (0..dim2).map(move |i2| (i1, i2)))
            .collect();
        let columns: Vec<SparseVec> = par::map_collect(pairs, |(i1, i2)| {
            let product = self
                .element(d1, i1)
                .mul(&self.element(d2, i2))
                .expect("same family");
            self.coordinates(d1 + d2, &product)
        });
        SparseMatrix::from_columns(self.dim(d1 + d2), &columns)
    }
}
