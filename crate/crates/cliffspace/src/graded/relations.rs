use std::collections::BTreeMap;

use crate::linalg::{SparseMatrix, SparseVec, Subspace};
use crate::partitions::{decompose_character, SchurMultiset, SymmetricPolynomial};
use crate::{Error, Result};

use super::GradedAlgebra;

/// Relation data in one degree: the full kernel of `V^{⊗d} → A_d` and its
/// quotient by the placements of lower-degree kernels.
#[derive(Debug)]
pub struct DegreeRelations {
    pub degree: usize,
    pub kernel_dim: usize,
    pub new_dim: usize,
    /// Echelon representatives of the new relations inside `V^{⊗degree}`.
    pub new_relations: Subspace,
    /// Character of the full kernel, when a torus action is declared.
    pub kernel_character: Option<SchurMultiset>,
}

/// Columns of the composed multiplication `V^{⊗d} → A_d`, indexed by words
/// in lex order, built by iterating `mult_matrix(1, ℓ−1)`.
pub fn word_multiplication_matrix(alg: &impl GradedAlgebra, d: usize) -> SparseMatrix {
    SparseMatrix::from_columns(alg.dim(d), &word_columns(alg, d))
}

fn word_columns(alg: &impl GradedAlgebra, d: usize) -> Vec<SparseVec> {
    let n = alg.ngens();
    let mut cols: Vec<SparseVec> = vec![vec![(0, num_traits::One::one())]];
    for level in 1..=d {
        let step = alg.mult_matrix(1, level - 1);
        let step_cols = step.columns();
        let prev_dim = alg.dim(level - 1);
        let mut next = Vec::with_capacity(cols.len() * n);
        for a in 0..n {
            for col in &cols {
                let mut acc: BTreeMap<usize, crate::linalg::Rational> = BTreeMap::new();
                for (j, c) in col {
                    for (r, x) in &step_cols[a * prev_dim + j] {
                        let slot = acc.entry(*r).or_insert_with(num_traits::Zero::zero);
                        *slot += c * x;
                    }
                }
                next.push(
                    acc.into_iter()
                        .filter(|(_, v)| !num_traits::Zero::is_zero(v))
                        .collect(),
                );
            }
        }
        cols = next;
    }
    cols
}

/// Kernels of `B_1^{⊗d} → B_d` for `d = 2..=dmax`, with the space of new
/// relations per degree (the kernel modulo `V·K_{d−1} + K_{d−1}·V`).
/// Fails when some multiplication `V^{⊗d} → B_d` is not surjective.
pub fn minimal_relations(
    alg: &impl GradedAlgebra,
    dmax: usize,
) -> Result<Vec<DegreeRelations>> {
    let n = alg.ngens();
    if alg.dim(1) != n {
        return Err(Error::NotGenerated { degree: 1 });
    }
    let mut out = Vec::new();
    let mut prev_kernel: Option<Subspace> = None;
    for d in 2..=dmax {
        let matrix = word_multiplication_matrix(alg, d);
        if matrix.rank() != alg.dim(d) {
            return Err(Error::NotGenerated { degree: d });
        }
        let kernel = matrix.kernel_basis();

        // placements of the lower-degree kernel
        let mut old = crate::linalg::Eliminator::new();
        if let Some(k_prev) = &prev_kernel {
            let prev_ambient = n.pow((d - 1) as u32);
            for v in k_prev.basis() {
                for a in 0..n {
                    let left: SparseVec = v
                        .iter()
                        .map(|(i, c)| (a * prev_ambient + i, c.clone()))
                        .collect();
                    old.insert(&left);
                    let right: SparseVec =
                        v.iter().map(|(i, c)| (i * n + a, c.clone())).collect();
                    old.insert(&right);
                }
            }
        }
        let old_dim = old.rank();
        let mut representatives = Vec::new();
        for v in kernel.basis() {
            let reduced = old.reduce(v);
            if !reduced.is_empty() {
                representatives.push(v.clone());
            }
        }
        let new_relations = Subspace::from_spanning(matrix.ncols(), representatives);
        let new_dim = kernel.dim() - old_dim;
        debug_assert_eq!(new_relations.dim(), new_dim);

        let kernel_character = kernel_character(alg, d, kernel.dim());
        out.push(DegreeRelations {
            degree: d,
            kernel_dim: kernel.dim(),
            new_dim,
            new_relations,
            kernel_character,
        });
        prev_kernel = Some(kernel);
    }
    Ok(out)
}

/// Character of `ker(V^{⊗d} → B_d)` computed weight block by weight block
/// (the multiplication preserves torus weight, so the kernel splits). The
/// blocked dimensions must sum to `expected_total` and must be symmetric
/// under variable permutations to define a character; a torus-graded kernel
/// that is not Weyl-symmetric yields `None`.
pub fn kernel_character(
    alg: &impl GradedAlgebra,
    d: usize,
    expected_total: usize,
) -> Option<SchurMultiset> {
    let n = alg.ngens();
    let row_weights = alg.weights(d)?;
    if alg.weights(1)? != (0..n).map(|a| unit_weight(n, a)).collect::<Vec<_>>() {
        return None;
    }
    let columns = word_columns(alg, d);
    let words = crate::clifford::all_words(n, d);

    // group columns by content, rows by weight
    let mut col_blocks: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        col_blocks
            .entry(crate::clifford::word_content(n, w))
            .or_default()
            .push(i);
    }
    let mut row_blocks: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (r, w) in row_weights.iter().enumerate() {
        row_blocks.entry(w.clone()).or_default().push(r);
    }

    let blocks: Vec<(Vec<u8>, Vec<usize>)> = col_blocks.into_iter().collect();
    let block_dims: Vec<(Vec<u8>, usize)> = crate::par::map_collect(blocks, |(content, cols)| {
        let rows = row_blocks.get(&content).cloned().unwrap_or_default();
        let row_index: BTreeMap<usize, usize> =
            rows.iter().copied().enumerate().map(|(i, r)| (r, i)).collect();
        let mut m = SparseMatrix::new(rows.len(), cols.len());
        for (c_local, &c_global) in cols.iter().enumerate() {
            for (r_global, v) in &columns[c_global] {
                m.set(row_index[r_global], c_local, v.clone());
            }
        }
        let nullity = cols.len() - m.rank();
        (content, nullity)
    });

    let mut total = 0usize;
    let mut monomials: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    for (content, nullity) in block_dims {
        total += nullity;
        if nullity > 0 {
            monomials.insert(content, nullity as i64);
        }
    }
    if total != expected_total {
        return None;
    }
    let character = SymmetricPolynomial::from_monomials(n, d, &monomials).ok()?;
    debug_assert_eq!(character.eval_at_ones(), expected_total as i64);
    Some(decompose_character(&character))
}

fn unit_weight(n: usize, a: usize) -> Vec<u8> {
    let mut w = vec![0u8; n];
    w[a] = 1;
    w
}
