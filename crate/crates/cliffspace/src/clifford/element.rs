use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::linalg::{Rational, SparseVec};
use crate::{Error, Result};

use super::{QuadricFamily, SectionIndex};

/// A graded section element: a rational linear combination of
/// (wedge subset, coefficient monomial) basis pairs over a fixed family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    family: Arc<QuadricFamily>,
    terms: BTreeMap<(u32, Vec<u8>), Rational>,
}

impl CliffordElement {
    pub fn zero(family: &Arc<QuadricFamily>) -> Self {
        CliffordElement {
            family: family.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The unit section.
    pub fn one(family: &Arc<QuadricFamily>) -> Self {
        CliffordElement::basis_element(family, 0, vec![0; family.k()])
    }

    /// The degree-1 generator `e_a`.
    pub fn generator(family: &Arc<QuadricFamily>, a: usize) -> Self {
        assert!(a < family.n(), "generator index out of range");
        CliffordElement::basis_element(family, 1 << a, vec![0; family.k()])
    }

    /// A single basis section `(S, e)`.
    pub fn basis_element(family: &Arc<QuadricFamily>, subset: u32, coeffs: Vec<u8>) -> Self {
        assert_eq!(coeffs.len(), family.k());
        assert!(subset < (1u32 << family.n()));
        let mut terms = BTreeMap::new();
        terms.insert((subset, coeffs), Rational::from_integer(1.into()));
        CliffordElement {
            family: family.clone(),
            terms,
        }
    }

    pub fn family(&self) -> &Arc<QuadricFamily> {
        &self.family
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Vec<u8>), &Rational)> {
        self.terms.iter()
    }

    /// Total degree when homogeneous, `None` otherwise (or for zero).
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|(s, e)| {
            s.count_ones() as usize + 2 * e.iter().map(|&x| x as usize).sum::<usize>()
        });
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, subset: u32, coeffs: Vec<u8>, value: Rational) {
        if value.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry((subset, coeffs))
            .or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &CliffordElement) -> Result<CliffordElement> {
        self.check_family(other)?;
        let mut out = self.clone();
        for ((s, e), v) in &other.terms {
            out.add_term(*s, e.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CliffordElement) -> Result<CliffordElement> {
        self.check_family(other)?;
        let mut out = self.clone();
        for ((s, e), v) in &other.terms {
            out.add_term(*s, e.clone(), -v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> CliffordElement {
        if c.is_zero() {
            return CliffordElement::zero(&self.family);
        }
        CliffordElement {
            family: self.family.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    fn check_family(&self, other: &CliffordElement) -> Result<()> {
        if !Arc::ptr_eq(&self.family, &other.family) && self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        Ok(())
    }

    /// The Clifford product.
    pub fn mul(&self, other: &CliffordElement) -> Result<CliffordElement> {
        self.check_family(other)?;
        let mut out = CliffordElement::zero(&self.family);
        for ((subset, coeffs), value) in &self.terms {
            let word: Vec<u8> = (0..self.family.n() as u8)
                .filter(|a| subset & (1 << a) != 0)
                .collect();
            let partial = mul_wedge_word(&self.family, &word, other);
            for ((s, e), v) in partial.terms {
                let mono: Vec<u8> = e.iter().zip(coeffs).map(|(x, y)| x + y).collect();
                out.add_term(s, mono, v * value);
            }
        }
        Ok(out)
    }

    /// Left action of the generator `e_a`: wedge plus signed contraction.
    pub fn act_generator(&self, a: usize) -> CliffordElement {
        let family = &self.family;
        let n = family.n();
        assert!(a < n);
        let bit = 1u32 << a;
        let below = bit - 1;
        let mut out = CliffordElement::zero(family);
        for ((subset, coeffs), value) in &self.terms {
            if subset & bit == 0 {
                let sign = if (subset & below).count_ones() % 2 == 0 {
                    value.clone()
                } else {
                    -value.clone()
                };
                out.add_term(subset | bit, coeffs.clone(), sign);
            }
            let mut position = 0u32;
            for t in 0..n {
                if subset & (1 << t) == 0 {
                    continue;
                }
                position += 1;
                let q = family.q_pair(a, t);
                if q.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let sign_pos = position % 2 == 1; // (−1)^{i−1}
                for (c, coeff) in q.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut mono = coeffs.clone();
                    mono[c] += 1;
                    let v = if sign_pos {
                        value * coeff
                    } else {
                        -(value * coeff)
                    };
                    out.add_term(subset & !(1 << t), mono, v);
                }
            }
        }
        out
    }

    /// Product of degree-1 generators `e_{w_1}·…·e_{w_d}` (right to left).
    pub fn generator_product(family: &Arc<QuadricFamily>, word: &[u8]) -> CliffordElement {
        let mut acc = CliffordElement::one(family);
        for &a in word.iter().rev() {
            acc = acc.act_generator(a as usize);
        }
        acc
    }

    /// A random homogeneous element of the given degree: a few section basis
    /// elements with small random rational coefficients.
    pub fn random_homogeneous(
        family: &Arc<QuadricFamily>,
        degree: usize,
        rng: &mut impl rand::Rng,
    ) -> CliffordElement {
        let basis = super::section_basis(family, degree as i64);
        let mut out = CliffordElement::zero(family);
        if basis.is_empty() {
            return out;
        }
        let picks = rng.gen_range(1..=3.min(basis.len()));
        for _ in 0..picks {
            let b = &basis[rng.gen_range(0..basis.len())];
            let num = rng.gen_range(-4i64..=4);
            let den = rng.gen_range(1i64..=3);
            out.add_term(
                b.subset,
                b.coeffs.clone(),
                Rational::new(num.into(), den.into()),
            );
        }
        out
    }

    /// Coordinates in a section basis indexed by the given map.
    pub fn coordinates(&self, index: &BTreeMap<SectionIndex, usize>) -> SparseVec {
        let mut coords: Vec<(usize, Rational)> = self
            .terms
            .iter()
            .map(|((subset, coeffs), v)| {
                let key = SectionIndex {
                    subset: *subset,
                    coeffs: coeffs.clone(),
                };
                let row = *index
                    .get(&key)
                    .expect("element term outside the indexed basis");
                (row, v.clone())
            })
            .collect();
        coords.sort_by_key(|(i, _)| *i);
        coords
    }
}

/// `e_S · y` for a wedge word `S = {s_1 < … < s_m}`, through
/// `e_S = e_{s_1}∧rest = e_{s_1}·rest − ι_{s_1}(rest)`:
/// `e_S · y = L_{s_1}(e_rest · y) − ι_{s_1}(e_rest) · y`.
fn mul_wedge_word(
    family: &Arc<QuadricFamily>,
    word: &[u8],
    y: &CliffordElement,
) -> CliffordElement {
    let Some((&head, rest)) = word.split_first() else {
        return y.clone();
    };
    let tail = mul_wedge_word(family, rest, y);
    let mut out = tail.act_generator(head as usize);
    // correction: ι_head applied to the wedge of `rest`, then multiplied by y
    let correction = iota_on_wedge(family, head as usize, rest);
    if !correction.is_zero() {
        out = out
            .sub(&correction.mul(y).expect("same family"))
            .expect("same family");
    }
    out
}

/// Signed q-contraction of a generator into a wedge word:
/// `ι_a(e_T) = Σ_i (−1)^{i−1} q(a, t_i) e_{T∖t_i}`.
fn iota_on_wedge(family: &Arc<QuadricFamily>, a: usize, word: &[u8]) -> CliffordElement {
    let mut out = CliffordElement::zero(family);
    for (i, &t) in word.iter().enumerate() {
        let q = family.q_pair(a, t as usize);
        if q.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut subset = 0u32;
        for (j, &s) in word.iter().enumerate() {
            if j != i {
                subset |= 1 << s;
            }
        }
        for (c, coeff) in q.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mut mono = vec![0u8; family.k()];
            mono[c] += 1;
            let v = if i % 2 == 0 {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            out.add_term(subset, mono, v);
        }
    }
    out
}

impl std::fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((subset, coeffs), v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}")?;
            for a in 0..self.family.n() {
                if subset & (1 << a) != 0 {
                    write!(f, "·e{}", a + 1)?;
                }
            }
            for (c, &e) in coeffs.iter().enumerate() {
                if e > 0 {
                    write!(f, "·u{}^{e}", c + 1)?;
                }
            }
        }
        Ok(())
    }
}
