//! Symmetric polynomials as torus characters, and their decomposition into
//! Schur polynomials by leading-term subtraction in the dominance order.

use std::collections::BTreeMap;

use crate::{Error, Result};

use super::{SchurMultiset, YoungDiagram};

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u8>;

/// A symmetric polynomial with integer coefficients in `nvars` variables,
/// stored by dominant orbit representative (weakly decreasing exponents).
/// Monomial degrees above `degree_cap` are truncated away by arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    nvars: usize,
    degree_cap: usize,
    terms: BTreeMap<Exponents, i64>,
}

impl SymmetricPolynomial {
    pub fn zero(nvars: usize, degree_cap: usize) -> Self {
        SymmetricPolynomial {
            nvars,
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, degree_cap: usize) -> Self {
        let mut p = Self::zero(nvars, degree_cap);
        p.terms.insert(vec![0; nvars], 1);
        p
    }

    /// Build from a full monomial-to-coefficient map, validating symmetry:
    /// every orbit must carry one constant coefficient.
    pub fn from_monomials(
        nvars: usize,
        degree_cap: usize,
        monomials: &BTreeMap<Exponents, i64>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars, degree_cap);
        for (exp, &coeff) in monomials {
            if exp.len() != nvars {
                return Err(Error::InvalidInput(format!(
                    "exponent vector {exp:?} has wrong arity (expected {nvars})"
                )));
            }
            if coeff == 0 {
                continue;
            }
            let mut dom = exp.clone();
            dom.sort_unstable_by(|a, b| b.cmp(a));
            let expected = monomials.get(&dom).copied().unwrap_or(0);
            if expected != coeff {
                return Err(Error::InvalidInput(
                    "polynomial is not symmetric under variable permutations".into(),
                ));
            }
            if degree(exp) as usize <= degree_cap && dom == *exp {
                p.terms.insert(dom, coeff);
            }
        }
        // Second pass: every dominant term's full orbit must be present.
        for (dom, &coeff) in &p.terms {
            for perm in orbit(dom) {
                if monomials.get(&perm).copied().unwrap_or(0) != coeff {
                    return Err(Error::InvalidInput(
                        "polynomial is not symmetric under variable permutations".into(),
                    ));
                }
            }
        }
        Ok(p)
    }

    /// Build directly from dominant representatives (trusted symmetric data).
    pub fn from_dominant(
        nvars: usize,
        degree_cap: usize,
        dominant: impl IntoIterator<Item = (Exponents, i64)>,
    ) -> Self {
        let mut p = Self::zero(nvars, degree_cap);
        for (exp, coeff) in dominant {
            debug_assert_eq!(exp.len(), nvars);
            debug_assert!(exp.windows(2).all(|w| w[0] >= w[1]));
            if coeff != 0 && (degree(&exp) as usize) <= degree_cap {
                let slot = p.terms.entry(exp).or_insert(0);
                *slot += coeff;
                if *slot == 0 {
                    p.terms.retain(|_, c| *c != 0);
                }
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dominant_terms(&self) -> impl Iterator<Item = (&Exponents, i64)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    /// Expand to the full monomial map (all orbit members).
    pub fn expand(&self) -> BTreeMap<Exponents, i64> {
        let mut full = BTreeMap::new();
        for (dom, &coeff) in &self.terms {
            for perm in orbit(dom) {
                full.insert(perm, coeff);
            }
        }
        full
    }

    pub fn add_scaled(&self, other: &SymmetricPolynomial, scale: i64) -> SymmetricPolynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let cap = self.degree_cap.min(other.degree_cap);
        let mut terms = self.terms.clone();
        terms.retain(|e, _| (degree(e) as usize) <= cap);
        for (e, c) in &other.terms {
            if (degree(e) as usize) > cap {
                continue;
            }
            let slot = terms.entry(e.clone()).or_insert(0);
            *slot += scale * c;
        }
        terms.retain(|_, c| *c != 0);
        SymmetricPolynomial {
            nvars: self.nvars,
            degree_cap: cap,
            terms,
        }
    }

    /// Product, truncated at the smaller degree cap.
    pub fn mul(&self, other: &SymmetricPolynomial) -> SymmetricPolynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let cap = self.degree_cap.min(other.degree_cap);
        let a = self.expand();
        let b = other.expand();
        let mut full: BTreeMap<Exponents, i64> = BTreeMap::new();
        for (ea, ca) in &a {
            let da = degree(ea) as usize;
            if da > cap {
                continue;
            }
            for (eb, cb) in &b {
                if da + degree(eb) as usize > cap {
                    continue;
                }
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *full.entry(e).or_insert(0) += ca * cb;
            }
        }
        let mut p = SymmetricPolynomial::zero(self.nvars, cap);
        for (e, c) in full {
            if c != 0 && e.windows(2).all(|w| w[0] >= w[1]) {
                p.terms.insert(e, c);
            }
        }
        p
    }

    /// Value at `x = (1, …, 1)`: total coefficient mass with orbit sizes.
    pub fn eval_at_ones(&self) -> i64 {
        self.terms
            .iter()
            .map(|(e, c)| c * orbit_size(e))
            .sum()
    }

    /// Restrict to the homogeneous part of the given degree.
    pub fn homogeneous_part(&self, d: usize) -> SymmetricPolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| degree(e) as usize == d)
            .map(|(e, c)| (e.clone(), *c))
            .collect();
        SymmetricPolynomial {
            nvars: self.nvars,
            degree_cap: self.degree_cap,
            terms,
        }
    }
}

fn degree(e: &[u8]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// All distinct permutations of an exponent vector.
fn orbit(dom: &[u8]) -> Vec<Exponents> {
    let mut sorted = dom.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    permute_distinct(&mut sorted, 0, &mut out);
    out
}

fn permute_distinct(v: &mut Exponents, start: usize, out: &mut Vec<Exponents>) {
    if start == v.len() {
        out.push(v.clone());
        return;
    }
    let mut seen = [false; 256];
    for i in start..v.len() {
        let x = v[i] as usize;
        if seen[x] {
            continue;
        }
        seen[x] = true;
        v.swap(start, i);
        permute_distinct(v, start + 1, out);
        v.swap(start, i);
    }
}

/// Number of distinct permutations of the exponent vector.
fn orbit_size(e: &[u8]) -> i64 {
    let mut counts: BTreeMap<u8, u64> = BTreeMap::new();
    for &x in e {
        *counts.entry(x).or_insert(0) += 1;
    }
    let mut size: u64 = 1;
    let mut used = 0u64;
    // multinomial computed incrementally to stay in u64
    for (_, c) in counts {
        for i in 1..=c {
            used += 1;
            size = size * used / i;
        }
    }
    size as i64
}

/// The Schur polynomial of `alpha` in `n` variables, by the branching rule
/// `s_α(x_1..x_n) = Σ_{μ ≺ α} s_μ(x_1..x_{n−1}) · x_n^{|α|−|μ|}`
/// over diagrams `μ` interlacing `α`. Zero when `alpha` has more than `n`
/// rows (matching the vanishing convention for exterior powers).
pub fn schur_polynomial(alpha: &YoungDiagram, n: usize, degree_cap: usize) -> SymmetricPolynomial {
    if alpha.num_rows() > n || alpha.size() > degree_cap {
        return SymmetricPolynomial::zero(n, degree_cap);
    }
    let full = schur_monomials(alpha.rows(), n);
    let mut p = SymmetricPolynomial::zero(n, degree_cap);
    for (e, c) in full {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            p.terms.insert(e, c);
        }
    }
    p
}

fn schur_monomials(alpha: &[usize], n: usize) -> BTreeMap<Exponents, i64> {
    let mut out = BTreeMap::new();
    if n == 0 {
        if alpha.is_empty() {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    let boxes: usize = alpha.iter().sum();
    let mut mu = Vec::new();
    each_interlacing(alpha, n - 1, 0, &mut mu, &mut |mu| {
        let sub = schur_monomials(mu, n - 1);
        let last = (boxes - mu.iter().sum::<usize>()) as u8;
        for (e, c) in sub {
            let mut e2 = e;
            e2.push(last);
            *out.entry(e2).or_insert(0) += c;
        }
    });
    out
}

/// Visit all `μ` with at most `rows` rows interlacing `alpha`:
/// `α_1 ≥ μ_1 ≥ α_2 ≥ μ_2 ≥ …`. Requires `alpha` to have at most
/// `rows + 1` parts, which makes the chain of constraints exhaustive.
fn each_interlacing(
    alpha: &[usize],
    rows: usize,
    i: usize,
    mu: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    debug_assert!(alpha.len() <= rows + 1);
    if i == rows {
        let trimmed: Vec<usize> = mu.iter().copied().take_while(|&r| r > 0).collect();
        visit(&trimmed);
        return;
    }
    let hi = alpha.get(i).copied().unwrap_or(0);
    let lo = alpha.get(i + 1).copied().unwrap_or(0);
    for part in lo..=hi {
        mu.push(part);
        each_interlacing(alpha, rows, i + 1, mu, visit);
        mu.pop();
    }
}

/// Decompose a symmetric polynomial in the Schur basis by repeatedly
/// subtracting the Schur polynomial of the dominance-greatest surviving
/// exponent vector (the lex-greatest term of each homogeneous part is
/// dominance-maximal). Handles virtual characters: multiplicities may be
/// negative. Terminates because the leading term strictly decreases.
pub fn decompose_character(p: &SymmetricPolynomial) -> SchurMultiset {
    let n = p.nvars;
    let mut result = SchurMultiset::new();
    let degrees: std::collections::BTreeSet<usize> = p
        .terms
        .keys()
        .map(|e| degree(e) as usize)
        .collect();
    for d in degrees {
        let mut rest = p.homogeneous_part(d);
        while let Some((lead, coeff)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), *c))
        {
            let lambda = YoungDiagram::from_parts(
                &lead.iter().map(|&x| x as usize).collect::<Vec<_>>(),
            );
            let s = schur_polynomial(&lambda, n, d);
            rest = rest.add_scaled(&s, -coeff);
            result.add(lambda, coeff);
        }
    }
    result
}

impl SchurMultiset {
    /// The character of this (virtual) sum of Schur functors.
    pub fn character(&self, n: usize, degree_cap: usize) -> SymmetricPolynomial {
        let mut p = SymmetricPolynomial::zero(n, degree_cap);
        for (d, m) in self.iter() {
            p = p.add_scaled(&schur_polynomial(d, n, degree_cap), m);
        }
        p
    }
}
