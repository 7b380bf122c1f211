//! Quadric families and the exact Clifford multiplication of graded sections.
//!
//! A family is a k-dimensional space `U` of quadratic forms on an
//! n-dimensional space `V`, given by a basis of symmetric matrices. The
//! graded sections in degree `i` are spanned by pairs `(S, e)` of a subset
//! `S ⊆ {1..n}` (a wedge of basis vectors) and a degree-`s` monomial `e` in
//! `k` commuting coefficient variables, with `|S| + 2s = i`. Multiplication
//! is the Clifford contraction product: for a vector `v`,
//!
//! `v · (w_1∧…∧w_m) = v∧w_1∧…∧w_m + Σ_i (−1)^{i−1} q(v,w_i)·w_1∧…ŵ_i…∧w_m`
//!
//! extended to wedges through `e_S = e_{s_1}∧rest = e_{s_1}·rest − ι_{s_1}(rest)`,
//! which pins the sign convention and keeps the product associative (this is
//! re-verified exactly by the law tests).

mod element;
mod family;
pub mod laws;

pub use element::CliffordElement;
pub use family::QuadricFamily;

use crate::linalg::{SparseMatrix, SparseVec};
use crate::par;

/// Index of a section basis element: wedge subset bits over `{0..n-1}` plus
/// the exponent vector of the coefficient monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectionIndex {
    pub subset: u32,
    pub coeffs: Vec<u8>,
}

impl SectionIndex {
    pub fn wedge_degree(&self) -> usize {
        self.subset.count_ones() as usize
    }

    pub fn coeff_degree(&self) -> usize {
        self.coeffs.iter().map(|&e| e as usize).sum()
    }

    /// Total degree `|S| + 2s`.
    pub fn degree(&self) -> usize {
        self.wedge_degree() + 2 * self.coeff_degree()
    }

    /// Torus weight, given weights for the coefficient variables.
    pub fn weight(&self, n: usize, coeff_weights: &[Vec<u8>]) -> Vec<u8> {
        let mut w = vec![0u8; n];
        for a in 0..n {
            if self.subset & (1 << a) != 0 {
                w[a] += 1;
            }
        }
        for (c, &e) in self.coeffs.iter().enumerate() {
            for (i, x) in coeff_weights[c].iter().enumerate() {
                w[i] += e * x;
            }
        }
        w
    }
}

/// All exponent vectors of length `k` and total degree `s`, lex order with
/// the first variable largest first.
pub(crate) fn compositions(s: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(k);
    fn rec(s: usize, k: usize, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == 0 {
            if s == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for first in (0..=s).rev() {
            acc.push(first as u8);
            rec(s - first, k - 1, acc, out);
            acc.pop();
        }
    }
    rec(s, k, &mut acc, &mut out);
    out
}

/// The ordered section basis of degree `i`: coefficient degree ascending,
/// subsets in increasing bitmask order, monomials in lex order.
pub fn section_basis(family: &QuadricFamily, i: i64) -> Vec<SectionIndex> {
    let n = family.n();
    let k = family.k();
    let mut out = Vec::new();
    if i < 0 {
        return out;
    }
    let i = i as usize;
    let mut s = 0;
    while 2 * s <= i {
        let wedge = i - 2 * s;
        if wedge <= n {
            for subset in 0u32..(1 << n) {
                if subset.count_ones() as usize != wedge {
                    continue;
                }
                for coeffs in compositions(s, k) {
                    out.push(SectionIndex { subset, coeffs });
                }
            }
        }
        s += 1;
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of the degree-`p` cohomology of the degree-`i` section module:
/// `Σ_s C(n, i−2s)·C(k+s−1, s)` for `p = 0, i ≥ 0`;
/// `Σ_s C(n, i+2k+2s)·C(k+s−1, s)` for `p = k, i ≤ n−2k`; otherwise 0.
pub fn section_dim(family: &QuadricFamily, i: i64, p: usize) -> usize {
    let n = family.n() as i64;
    let k = family.k() as i64;
    let mut total: u64 = 0;
    if p == 0 && i >= 0 {
        let mut s = 0i64;
        while i - 2 * s >= 0 {
            total += binomial(n as u64, (i - 2 * s) as u64)
                * binomial((k + s - 1) as u64, s as u64);
            s += 1;
        }
    } else if p == family.k() && i <= n - 2 * k {
        let mut s = 0i64;
        while i + 2 * k + 2 * s <= n {
            if i + 2 * k + 2 * s >= 0 {
                total += binomial(n as u64, (i + 2 * k + 2 * s) as u64)
                    * binomial((k + s - 1) as u64, s as u64);
            }
            s += 1;
        }
    }
    total as usize
}

/// Cohomology table of the pairwise section modules: entry `(i, j)` lists
/// the nonzero `(p, dim)` pairs of the degree `j − i` module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtTable {
    pub lo: i64,
    pub hi: i64,
    pub entries: std::collections::BTreeMap<(i64, i64), Vec<(usize, usize)>>,
}

pub fn ext_table(family: &QuadricFamily, lo: i64, hi: i64) -> ExtTable {
    let mut entries = std::collections::BTreeMap::new();
    for i in lo..=hi {
        for j in lo..=hi {
            let mut dims = Vec::new();
            for p in [0, family.k()] {
                let d = section_dim(family, j - i, p);
                if d > 0 {
                    dims.push((p, d));
                }
            }
            dims.dedup();
            entries.insert((i, j), dims);
        }
    }
    ExtTable { lo, hi, entries }
}

/// Matrix of the `d`-fold product of degree-1 generators: columns indexed by
/// words over the generator alphabet in lex order, rows by the section basis
/// of degree `d`. Columns are independent and are built in parallel.
pub fn multiplication_matrix(family: &std::sync::Arc<QuadricFamily>, d: usize) -> SparseMatrix {
    let basis = section_basis(family, d as i64);
    let index: std::collections::BTreeMap<SectionIndex, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let words = all_words(family.n(), d);
    let columns: Vec<SparseVec> = par::map_collect(words, |w| {
        let product = CliffordElement::generator_product(family, &w);
        product.coordinates(&index)
    });
    SparseMatrix::from_columns(basis.len(), &columns)
}

/// All words of the given length over `{0..n-1}`, lex order.
pub fn all_words(n: usize, d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(n.pow(d as u32));
    let mut acc = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if acc.len() == d {
            out.push(acc.clone());
            return;
        }
        for a in 0..n {
            acc.push(a as u8);
            rec(n, d, acc, out);
            acc.pop();
        }
    }
    rec(n, d, &mut acc, &mut out);
    out
}

/// Content (exponent-vector weight) of a word.
pub fn word_content(n: usize, w: &[u8]) -> Vec<u8> {
    let mut c = vec![0u8; n];
    for &a in w {
        c[a as usize] += 1;
    }
    c
}

#[cfg(test)]
mod tests;
