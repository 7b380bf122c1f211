use num_traits::{One, Zero};

use crate::linalg::{Rational, SparseMatrix};
use crate::{Error, Result};

/// A symmetric matrix of rationals, stored dense (n stays small).
pub type SymmetricMatrix = Vec<Vec<Rational>>;

/// A k-dimensional space of quadratic forms on an n-dimensional space,
/// given by a basis of symmetric matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricFamily {
    n: usize,
    k: usize,
    basis: Vec<SymmetricMatrix>,
}

impl QuadricFamily {
    /// Validating constructor: every matrix must be symmetric `n × n` and the
    /// flattenings must be linearly independent, with `1 ≤ k ≤ n(n+1)/2`.
    pub fn new(n: usize, basis: Vec<SymmetricMatrix>) -> Result<Self> {
        let k = basis.len();
        if n == 0 || k == 0 || k > n * (n + 1) / 2 {
            return Err(Error::InvalidInput(format!(
                "family must have 1 ≤ k ≤ n(n+1)/2 quadrics (got n = {n}, k = {k})"
            )));
        }
        for (idx, m) in basis.iter().enumerate() {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(Error::InvalidInput(format!(
                    "matrix {idx} is not {n}×{n}"
                )));
            }
            for a in 0..n {
                for b in (a + 1)..n {
                    if m[a][b] != m[b][a] {
                        return Err(Error::AsymmetricMatrix { index: idx });
                    }
                }
            }
        }
        // Independence of the flattenings (upper triangle coordinates).
        let mut flat = SparseMatrix::new(k, n * (n + 1) / 2);
        for (idx, m) in basis.iter().enumerate() {
            let mut col = 0;
            for a in 0..n {
                for b in a..n {
                    flat.set(idx, col, m[a][b].clone());
                    col += 1;
                }
            }
        }
        if flat.rank() < k {
            let dependency = flat
                .transpose()
                .kernel_basis()
                .basis()
                .first()
                .map(|v| {
                    let mut dense = vec![Rational::zero(); k];
                    for (i, c) in v {
                        dense[*i] = c.clone();
                    }
                    dense.iter().map(|c| c.to_string()).collect()
                })
                .unwrap_or_default();
            return Err(Error::DependentMatrices { dependency });
        }
        Ok(QuadricFamily { n, k, basis })
    }

    /// Constructor without validation. Degenerate families (for instance the
    /// zero family used to exercise the exterior-product limit) are allowed
    /// here and only here.
    #[doc(hidden)]
    pub fn new_unchecked(n: usize, basis: Vec<SymmetricMatrix>) -> Self {
        let k = basis.len();
        QuadricFamily { n, k, basis }
    }

    /// The complete family of all quadrics: `k = n(n+1)/2`, with the
    /// elementary symmetric matrices as basis — diagonal `E_ii` first, then
    /// `E_ij + E_ji` for `i < j` in lex order.
    pub fn universal(n: usize) -> Self {
        let mut basis = Vec::new();
        for i in 0..n {
            let mut m = zero_matrix(n);
            m[i][i] = Rational::one();
            basis.push(m);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let mut m = zero_matrix(n);
                m[i][j] = Rational::one();
                m[j][i] = Rational::one();
                basis.push(m);
            }
        }
        QuadricFamily { n, k: n * (n + 1) / 2, basis }
    }

    /// The toric family `⟨f_1², …, f_n²⟩`: diagonal unit matrices.
    pub fn toric(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut m = zero_matrix(n);
                m[i][i] = Rational::one();
                m
            })
            .collect();
        QuadricFamily { n, k: n, basis }
    }

    /// The zero family on `n` generators with `k` coefficient variables;
    /// multiplication degenerates to the exterior product. Test-only escape
    /// hatch: bypasses the independence requirement.
    #[doc(hidden)]
    pub fn zero_family(n: usize, k: usize) -> Self {
        QuadricFamily {
            n,
            k,
            basis: vec![zero_matrix(n); k],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> &[SymmetricMatrix] {
        &self.basis
    }

    /// Coordinates of `q(e_a, e_b)` in the dual basis of the family:
    /// component `c` is `q^{(c)}_{ab}`. Symmetric in `(a, b)`.
    pub fn q_pair(&self, a: usize, b: usize) -> Vec<Rational> {
        assert!(a < self.n && b < self.n, "basis index out of range");
        self.basis.iter().map(|m| m[a][b].clone()).collect()
    }

    /// Torus weights of the dual coefficient variables, available when every
    /// basis quadric is a single monomial `x_a x_b` (the universal and toric
    /// bases are; random families are not).
    pub fn coefficient_weights(&self) -> Option<Vec<Vec<u8>>> {
        let mut weights = Vec::with_capacity(self.k);
        for m in &self.basis {
            let mut support = Vec::new();
            for a in 0..self.n {
                for b in a..self.n {
                    if !m[a][b].is_zero() {
                        support.push((a, b));
                    }
                }
            }
            match support.as_slice() {
                [(a, b)] => {
                    let mut w = vec![0u8; self.n];
                    w[*a] += 1;
                    w[*b] += 1;
                    weights.push(w);
                }
                _ => return None,
            }
        }
        Some(weights)
    }

    /// Apply an invertible change of basis `new_j = Σ_i t[j][i] · old_i` to
    /// the family (used to confirm reports are basis-independent).
    pub fn change_basis(&self, t: &[Vec<Rational>]) -> Result<Self> {
        if t.len() != self.k || t.iter().any(|row| row.len() != self.k) {
            return Err(Error::InvalidInput("change of basis must be k × k".into()));
        }
        let mut basis = Vec::with_capacity(self.k);
        for row in t {
            let mut m = zero_matrix(self.n);
            for (c, coeff) in row.iter().enumerate() {
                for a in 0..self.n {
                    for b in 0..self.n {
                        let term = coeff * &self.basis[c][a][b];
                        m[a][b] += term;
                    }
                }
            }
            basis.push(m);
        }
        QuadricFamily::new(self.n, basis)
    }
}

fn zero_matrix(n: usize) -> SymmetricMatrix {
    vec![vec![Rational::zero(); n]; n]
}
