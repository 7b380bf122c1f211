//! Exact arbitrary-precision rational sparse linear algebra.
//!
//! Ranks, kernels and subspace arithmetic for everything in this crate.
//! The elimination engine works on integer-scaled rows (fraction-free row
//! combinations with gcd normalization) and only divides when producing the
//! final reduced echelon basis, which keeps intermediate entry growth down
//! at the ambient dimensions we care about (up to a few thousand).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be called freely from parallel code.

mod elim;
mod matrix;
mod subspace;

pub use elim::Eliminator;
pub use matrix::SparseMatrix;
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms (enforced by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics on `q = 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p/q"` or `"p"` with optional sign. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidInput(format!("malformed rational {s:?}")))?;
    let q: BigInt = match den {
        Some(q) => q
            .parse()
            .map_err(|_| Error::InvalidInput(format!("malformed rational {s:?}")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::InvalidInput(format!(
            "zero denominator in rational {s:?}"
        )));
    }
    Ok(Rational::new(p, q))
}

/// Sparse coordinate vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// Build a sparse vector from (index, value) pairs in any order, dropping
/// zeros and summing duplicates.
pub fn sparse_from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut map = std::collections::BTreeMap::<usize, Rational>::new();
    for (i, v) in pairs {
        if v.is_zero() {
            continue;
        }
        let slot = map.entry(i).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            map.remove(&i);
        }
    }
    map.into_iter().collect()
}

/// `x + c * y` for sparse vectors.
pub fn sparse_add_scaled(x: &SparseVec, c: &Rational, y: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return x.clone();
    }
    let mut out = SparseVec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        match (x.get(i), y.get(j)) {
            (Some((xi, xv)), Some((yj, yv))) if xi == yj => {
                let v = xv + c * yv;
                if !v.is_zero() {
                    out.push((*xi, v));
                }
                i += 1;
                j += 1;
            }
            (Some((xi, xv)), Some((yj, _))) if xi < yj => {
                out.push((*xi, xv.clone()));
                i += 1;
            }
            (Some(_), Some((yj, yv))) => {
                out.push((*yj, c * yv));
                j += 1;
            }
            (Some((xi, xv)), None) => {
                out.push((*xi, xv.clone()));
                i += 1;
            }
            (None, Some((yj, yv))) => {
                out.push((*yj, c * yv));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Coordinate dot product of two sparse vectors.
pub fn sparse_dot(x: &SparseVec, y: &SparseVec) -> Rational {
    let mut acc = Rational::zero();
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &x[i].1 * &y[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Integer-scaled row used inside the eliminator.
pub(crate) type IntRow = Vec<(usize, BigInt)>;

/// Clear denominators and divide out the content, fixing the leading sign.
pub(crate) fn to_int_row(v: &SparseVec) -> IntRow {
    if v.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::one();
    for (_, val) in v {
        lcm = num_integer::lcm(lcm, val.denom().clone());
    }
    let row: IntRow = v
        .iter()
        .map(|(i, val)| (*i, val.numer() * (&lcm / val.denom())))
        .collect();
    normalize_int_row(row)
}

/// Divide by the gcd of the entries and make the leading entry positive.
pub(crate) fn normalize_int_row(mut row: IntRow) -> IntRow {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return row;
    }
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = num_integer::gcd(g, v.abs());
        if g.is_one() {
            break;
        }
    }
    let negate = row[0].1.is_negative();
    if !g.is_one() || negate {
        for (_, v) in &mut row {
            *v = &*v / &g;
            if negate {
                *v = -&*v;
            }
        }
    }
    row
}

#[cfg(test)]
mod tests;
