//! Young diagram combinatorics and Schur calculus.
//!
//! Representations are realized by their torus characters (symmetric
//! polynomials with integer coefficients), so every isomorphism claim
//! downstream becomes an exact identity of characters; see [`symfunc`].

mod symfunc;

pub use symfunc::{decompose_character, schur_polynomial, SymmetricPolynomial};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::{Error, Result};

/// A partition drawn as a Young diagram: weakly decreasing positive rows.
/// The empty diagram is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram(Vec<usize>);

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.iter().any(|&r| r == 0) {
            return Err(Error::InvalidInput(format!(
                "not weakly decreasing positive rows: {rows:?}"
            )));
        }
        Ok(YoungDiagram(rows))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    /// Builds from any weakly decreasing list, dropping trailing zeros.
    pub fn from_parts(parts: &[usize]) -> Self {
        let rows: Vec<usize> = parts.iter().copied().take_while(|&r| r > 0).collect();
        YoungDiagram::new(rows).expect("weakly decreasing input")
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Row length with the `0` convention past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> YoungDiagram {
        let cols = self.row(0);
        let rows = (0..cols)
            .map(|c| self.0.iter().filter(|&&r| r > c).count())
            .collect();
        YoungDiagram(rows)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Length of the main diagonal: `max { t : α_t ≥ t }` (1-based).
    pub fn diag_length(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &r)| r >= i + 1)
            .count()
    }

    /// Containment of diagrams (row-wise).
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        (0..other.num_rows()).all(|i| self.row(i) >= other.row(i))
    }

    /// Row-doubled diagram `2β`.
    pub fn doubled(&self) -> YoungDiagram {
        YoungDiagram(self.0.iter().map(|r| 2 * r).collect())
    }

    /// The nested symmetric hooks of a symmetric diagram, largest first.
    /// Hook `t` has arm `α_t − t`, hence `2(α_t − t) + 1` boxes.
    pub fn hooks(&self) -> Result<Vec<YoungDiagram>> {
        if !self.is_symmetric() {
            return Err(Error::InvalidInput(format!(
                "hooks of a non-symmetric diagram {self}"
            )));
        }
        Ok((0..self.diag_length())
            .map(|t| {
                let arm = self.0[t] - (t + 1);
                hook_diagram(arm)
            })
            .collect())
    }

    /// The unique `(β, p)` with `2β ≤ α ≤ 2β + 1` row-wise:
    /// `β_t = ⌊α_t/2⌋` and `p = |α| − 2|β|`.
    pub fn halving(&self) -> (YoungDiagram, usize) {
        let beta = YoungDiagram::from_parts(
            &self.0.iter().map(|r| r / 2).collect::<Vec<_>>(),
        );
        let p = self.size() - 2 * beta.size();
        (beta, p)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Symmetric hook with the given arm length: `(arm+1, 1^arm)`.
fn hook_diagram(arm: usize) -> YoungDiagram {
    let mut rows = vec![arm + 1];
    rows.extend(std::iter::repeat(1).take(arm));
    YoungDiagram(rows)
}

/// All diagrams with at most `n` rows and `boxes` boxes, in decreasing
/// lexicographic order on the row lists (so `(3)` before `(2,1)`).
pub fn diagrams(n: usize, boxes: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(boxes, usize::MAX, n, &mut current, &mut out);
    out
}

fn fill(
    left: usize,
    max_part: usize,
    rows_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<YoungDiagram>,
) {
    if left == 0 {
        out.push(YoungDiagram(current.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    let hi = left.min(max_part);
    // Largest first part first gives decreasing lex output order.
    let lo = left.div_ceil(rows_left);
    for part in (lo..=hi).rev() {
        current.push(part);
        fill(left - part, part, rows_left - 1, current, out);
        current.pop();
    }
}

/// All symmetric diagrams fitting in the `n × n` box, built from their
/// Frobenius coordinates (one hook per chosen arm length), ordered by
/// size and then lexicographically. There are exactly `2^n` of them.
pub fn symmetric_diagrams(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let arms: Vec<usize> = (0..n).rev().filter(|a| mask & (1 << a) != 0).collect();
        out.push(from_frobenius_arms(&arms));
    }
    out.sort_by_key(|d| (d.size(), d.rows().to_vec()));
    out
}

/// Rebuild a symmetric diagram from strictly decreasing diagonal arm lengths.
fn from_frobenius_arms(arms: &[usize]) -> YoungDiagram {
    let l = arms.len();
    if l == 0 {
        return YoungDiagram::empty();
    }
    let nrows = arms[0] + 1;
    let mut rows = Vec::with_capacity(nrows);
    for i in 1..=nrows {
        let len = if i <= l {
            i + arms[i - 1]
        } else {
            // Vertical legs reaching this row: reaches t + a_t are weakly decreasing.
            (1..=l).filter(|&t| t + arms[t - 1] >= i).count()
        };
        rows.push(len);
    }
    YoungDiagram(rows)
}

/// `dim Σ^α(k^n)` by the Weyl dimension formula; 0 when the diagram has
/// more than `n` rows.
pub fn schur_dim(alpha: &YoungDiagram, n: usize) -> usize {
    if alpha.num_rows() > n {
        return 0;
    }
    let a: Vec<i64> = (0..n).map(|i| alpha.row(i) as i64 + (n - i) as i64).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(a[i] - a[j]);
            den *= BigInt::from((j - i) as i64);
        }
    }
    (num / den).to_usize().expect("schur dimension fits usize")
}

/// Multiset of diagrams with integer (possibly negative) multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurMultiset(BTreeMap<YoungDiagram, i64>);

impl SchurMultiset {
    pub fn new() -> Self {
        SchurMultiset(BTreeMap::new())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (YoungDiagram, i64)>) -> Self {
        let mut s = SchurMultiset::new();
        for (d, m) in pairs {
            s.add(d, m);
        }
        s
    }

    pub fn add(&mut self, diagram: YoungDiagram, mult: i64) {
        if mult == 0 {
            return;
        }
        let slot = self.0.entry(diagram).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.0.retain(|_, m| *m != 0);
        }
    }

    pub fn multiplicity(&self, diagram: &YoungDiagram) -> i64 {
        self.0.get(diagram).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YoungDiagram, i64)> {
        self.0.iter().map(|(d, m)| (d, *m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total dimension over `k^n`.
    pub fn dim(&self, n: usize) -> i64 {
        self.iter()
            .map(|(d, m)| m * schur_dim(d, n) as i64)
            .sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.0.values().all(|&m| m == 1)
    }
}

impl fmt::Display for SchurMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, m)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{m}*{d}")?;
            }
        }
        Ok(())
    }
}

/// Tensoring with the `k`-th exterior power: add a vertical strip of `k`
/// boxes (no two in one row), staying within `n` rows. Multiplicity-free.
pub fn pieri_column(alpha: &YoungDiagram, k: usize, n: usize) -> SchurMultiset {
    let mut out = SchurMultiset::new();
    if k > n {
        return out;
    }
    // Choose the set of rows (among the first n) receiving one box each.
    let masks = 1u32 << n;
    for mask in 0..masks {
        if (mask.count_ones() as usize) != k {
            continue;
        }
        let parts: Vec<usize> = (0..n)
            .map(|i| alpha.row(i) + ((mask >> i) & 1) as usize)
            .collect();
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            let d = YoungDiagram::from_parts(&parts);
            if d.size() == alpha.size() + k {
                out.add(d, 1);
            }
        }
    }
    out
}

/// `Sym^s(Sym^2 V)` decomposes as one copy of `Σ^{2β}V` per `β` with
/// `|β| = s` and at most `n` rows.
pub fn plethysm_sym_sym2(s: usize, n: usize) -> SchurMultiset {
    SchurMultiset::from_pairs(diagrams(n, s).into_iter().map(|b| (b.doubled(), 1)))
}
