//! Minimal families of quadrics (`k = n`): base-point-freeness certification,
//! the section algebra and its quadratic presentation, the toric deformation
//! family, and the Hilbert/Koszul/Frobenius/helix checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;

use crate::clifford::{ext_table, section_dim, CliffordElement, QuadricFamily};
use crate::graded::{
    frobenius_check, koszul_series_check, quadratic_dual, AlgebraPresentation, GradedAlgebra,
    HilbertSeries, PresentedAlgebra, SectionAlgebra,
};
use crate::linalg::{rat_int, Rational, SparseMatrix, SparseVec, Subspace};
use crate::report::{Report, Status};
use crate::{Error, Result};

/// Outcome of the base-locus saturation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertStatus {
    /// `U · Sym^{d−2}V∨ → Sym^d V∨` became surjective at this degree, so the
    /// quadrics have no common zero over the algebraic closure.
    EmptyIntersection { witness_degree: usize },
    /// The cap was reached without surjectivity. Not a disproof.
    Inconclusive { cap: usize },
    /// A common zero was exhibited by the candidate probe.
    CommonZeroPossible { witness: Vec<Rational> },
}

#[derive(Debug, Clone)]
pub struct BasepointCertificate {
    pub n: usize,
    pub status: CertStatus,
}

impl BasepointCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self.status, CertStatus::EmptyIntersection { .. })
    }
}

/// Monomial exponent vectors of total degree `d` in `n` variables, lex order.
fn monomials(n: usize, d: usize) -> Vec<Vec<u8>> {
    crate::clifford::compositions(d, n)
}

/// Saturation check: find the first `d ≤ dcap` at which multiplying the
/// family by all forms of degree `d−2` spans every degree-`d` form.
pub fn basepoint_check(family: &QuadricFamily, dcap: usize) -> Result<BasepointCertificate> {
    let n = family.n();
    if family.k() != n {
        return Err(Error::WrongFamilyShape {
            n,
            k: family.k(),
        });
    }
    // quadric polynomials: coefficient of x_a x_b is M_aa on the diagonal
    // and 2·M_ab off it
    let quadrics: Vec<BTreeMap<Vec<u8>, Rational>> = family
        .basis()
        .iter()
        .map(|m| {
            let mut poly = BTreeMap::new();
            for a in 0..n {
                for b in a..n {
                    let coeff = if a == b {
                        m[a][b].clone()
                    } else {
                        &m[a][b] * rat_int(2)
                    };
                    if !coeff.is_zero() {
                        let mut e = vec![0u8; n];
                        e[a] += 1;
                        e[b] += 1;
                        poly.insert(e, coeff);
                    }
                }
            }
            poly
        })
        .collect();

    for d in 2..=dcap {
        let target = monomials(n, d);
        let index: BTreeMap<Vec<u8>, usize> = target
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut elim = crate::linalg::Eliminator::new();
        let mut rank = 0;
        'outer: for q in &quadrics {
            for m in monomials(n, d - 2) {
                let vector: SparseVec = crate::linalg::sparse_from_pairs(q.iter().map(
                    |(e, c)| {
                        let prod: Vec<u8> = e.iter().zip(&m).map(|(x, y)| x + y).collect();
                        (index[&prod], c.clone())
                    },
                ));
                if elim.insert(&vector) {
                    rank += 1;
                    if rank == target.len() {
                        break 'outer;
                    }
                }
            }
        }
        if rank == target.len() {
            return Ok(BasepointCertificate {
                n,
                status: CertStatus::EmptyIntersection { witness_degree: d },
            });
        }
    }
    Ok(BasepointCertificate {
        n,
        status: CertStatus::Inconclusive { cap: dcap },
    })
}

/// Cheap probe for a rational common zero: coordinate points and common
/// kernel vectors of the family matrices. `Some` proves the base locus is
/// nonempty; `None` proves nothing.
pub fn common_zero_probe(family: &QuadricFamily) -> Option<Vec<Rational>> {
    let n = family.n();
    let evaluates_to_zero = |v: &[Rational]| {
        family.basis().iter().all(|m| {
            let mut acc = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    acc += &m[a][b] * &v[a] * &v[b];
                }
            }
            acc.is_zero()
        })
    };
    for a in 0..n {
        let mut v = vec![Rational::zero(); n];
        v[a] = Rational::one();
        if evaluates_to_zero(&v) {
            return Some(v);
        }
    }
    // common kernel of the matrices
    let mut rows = Vec::new();
    for m in family.basis() {
        for a in 0..n {
            let row: SparseVec = (0..n)
                .filter(|b| !m[a][*b].is_zero())
                .map(|b| (b, m[a][b].clone()))
                .collect();
            rows.push(row);
        }
    }
    let stacked = SparseMatrix::from_columns(n, &rows).transpose();
    let kernel = stacked.kernel_basis();
    kernel.basis().first().map(|v| {
        let mut dense = vec![Rational::zero(); n];
        for (i, c) in v {
            dense[*i] = c.clone();
        }
        dense
    })
}

/// Saturation check plus the common-zero probe on the inconclusive branch.
pub fn certify_with_probe(family: &QuadricFamily, dcap: usize) -> Result<BasepointCertificate> {
    let cert = basepoint_check(family, dcap)?;
    if cert.is_certified() {
        return Ok(cert);
    }
    if let Some(witness) = common_zero_probe(family) {
        return Ok(BasepointCertificate {
            n: family.n(),
            status: CertStatus::CommonZeroPossible { witness },
        });
    }
    Ok(cert)
}

/// The section algebra of a certified minimal family. Pass
/// `allow_uncertified = true` to bypass the certificate (tests only).
pub fn build_bu(
    family: &Arc<QuadricFamily>,
    max_degree: usize,
    certificate: &BasepointCertificate,
    allow_uncertified: bool,
) -> Result<SectionAlgebra> {
    if !certificate.is_certified() && !allow_uncertified {
        return Err(Error::NotCertified(format!("{:?}", certificate.status)));
    }
    Ok(SectionAlgebra::new(family.clone(), max_degree))
}

/// `U^⊥ = Ker(Sym²V → U∨)` embedded into `V ⊗ V` as symmetric tensors.
/// The symmetric tensor `e_a⊗e_b + e_b⊗e_a` pairs with a quadric through
/// both slots, hence the factor 2 on the mixed columns.
pub fn u_perp(family: &QuadricFamily) -> Subspace {
    let n = family.n();
    let k = family.k();
    // pairs (a ≤ b) index Sym²V
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .collect();
    let mut map = SparseMatrix::new(k, pairs.len());
    for (col, &(a, b)) in pairs.iter().enumerate() {
        for (c, coeff) in family.q_pair(a, b).iter().enumerate() {
            let coeff = if a == b {
                coeff.clone()
            } else {
                coeff * rat_int(2)
            };
            map.set(c, col, coeff);
        }
    }
    let kernel = map.kernel_basis();
    // symmetric embedding e_a·e_b ↦ e_a⊗e_b + e_b⊗e_a
    let vectors = kernel
        .basis()
        .iter()
        .map(|v| {
            crate::linalg::sparse_from_pairs(v.iter().flat_map(|(i, c)| {
                let (a, b) = pairs[*i];
                if a == b {
                    vec![(a * n + b, c.clone())]
                } else {
                    vec![(a * n + b, c.clone()), (b * n + a, c.clone())]
                }
            }))
        })
        .collect();
    Subspace::from_spanning(n * n, vectors)
}

/// The quadratic presentation `T(V)/⟨U^⊥⟩`.
pub fn bu_presentation(family: &QuadricFamily) -> AlgebraPresentation {
    AlgebraPresentation::new(family.n(), vec![(2, u_perp(family))])
        .expect("U^⊥ is a valid quadratic relation space")
}

/// Compare the quadratic presentation against the Clifford-section pipeline:
/// relation vanishing, dimension agreement, and structure constants under
/// the degree-1 identification (all basis-word products through `sc_cap`).
pub fn presentation_match(
    family: &Arc<QuadricFamily>,
    cap: usize,
    sc_cap: usize,
) -> Result<Report> {
    let n = family.n();
    let mut report = Report::new(format!("presentation-match n={n}"));
    let perp = u_perp(family);
    report.check(
        "dim U^⊥",
        perp.dim() == n * (n + 1) / 2 - family.k(),
        format!("{}", perp.dim()),
        format!("{}", n * (n + 1) / 2 - family.k()),
        "cor:bbu",
    );

    // (a) the quadratic relations hold among the Clifford sections
    let relations_vanish = perp.basis().iter().all(|v| {
        let mut acc = CliffordElement::zero(family);
        for (idx, c) in v {
            let (a, b) = (idx / n, idx % n);
            let prod = CliffordElement::generator(family, a)
                .mul(&CliffordElement::generator(family, b))
                .expect("same family");
            acc = acc.add(&prod.scale(c)).expect("same family");
        }
        acc.is_zero()
    });
    report.check(
        "U^⊥ vanishes under Clifford multiplication",
        relations_vanish,
        if relations_vanish { "all relations vanish" } else { "nonzero image" }.to_string(),
        "all relations vanish".to_string(),
        "cor:bbu",
    );

    // (b) dimensions agree degree by degree
    let presented = PresentedAlgebra::build(bu_presentation(family), cap)?;
    let presented_dims: Vec<usize> = (0..=cap).map(|d| presented.dim(d)).collect();
    let section_dims: Vec<usize> =
        (0..=cap).map(|d| section_dim(family, d as i64, 0)).collect();
    report.check(
        format!("T(V)/⟨U^⊥⟩ dims through degree {cap}"),
        presented_dims == section_dims,
        format!("{presented_dims:?}"),
        format!("{section_dims:?}"),
        "cor:bbu",
    );

    // (c) the section algebra is generated in degree 1 ...
    let alg = SectionAlgebra::new(family.clone(), cap);
    let generated = (1..=cap).all(|d| {
        crate::graded::word_multiplication_matrix(&alg, d).rank() == alg.dim(d)
    });
    report.check(
        "section algebra generated in degree 1",
        generated,
        if generated { "surjective" } else { "not surjective" }.to_string(),
        "surjective".to_string(),
        "cor:intro-generation",
    );

    // ... so with equal dimensions the identity on V induces a graded
    // isomorphism; structure constants must transport along it
    let mut product_checks = 0usize;
    let mut product_failures = 0usize;
    let mut word_elements: BTreeMap<Vec<u8>, CliffordElement> = BTreeMap::new();
    let mut element_of = |w: &[u8], family: &Arc<QuadricFamily>| -> CliffordElement {
        word_elements
            .entry(w.to_vec())
            .or_insert_with(|| CliffordElement::generator_product(family, w))
            .clone()
    };
    for d1 in 1..sc_cap {
        for d2 in 1..=(sc_cap - d1) {
            let words1: Vec<Vec<u8>> = presented.basis_words(d1).to_vec();
            let words2: Vec<Vec<u8>> = presented.basis_words(d2).to_vec();
            for w1 in &words1 {
                for w2 in &words2 {
                    let mut concat = w1.clone();
                    concat.extend_from_slice(w2);
                    let nf = presented.normal_form(&concat).clone();
                    // left side: product of the section images
                    let left = element_of(w1, family)
                        .mul(&element_of(w2, family))
                        .expect("same family");
                    // right side: the normal form pushed through the images
                    let mut right = CliffordElement::zero(family);
                    for (j, c) in &nf {
                        let word = presented.basis_words(d1 + d2)[*j].clone();
                        right = right
                            .add(&element_of(&word, family).scale(c))
                            .expect("same family");
                    }
                    product_checks += 1;
                    if left != right {
                        product_failures += 1;
                    }
                }
            }
        }
    }
    report.check(
        format!("structure constants agree ({product_checks} products)"),
        product_failures == 0,
        format!("{product_failures} mismatches"),
        "0 mismatches".to_string(),
        "cor:bbu",
    );
    Ok(report)
}

/// Parameters of the quantum-plane family: `v_i v_j = q · v_j v_i` for i < j.
#[derive(Debug, Clone)]
pub struct ToricParameters {
    pub n: usize,
    pub q: Rational,
}

/// Relation space `⟨v_i⊗v_j − q·v_j⊗v_i⟩_{i<j}`.
pub fn toric_relations(n: usize, q: &Rational) -> Subspace {
    let mut vectors = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            vectors.push(vec![(i * n + j, rat_int(1)), (j * n + i, -q.clone())]);
        }
    }
    Subspace::from_spanning(n * n, vectors)
}

pub fn toric_presentation(p: &ToricParameters) -> AlgebraPresentation {
    AlgebraPresentation::new(p.n, vec![(2, toric_relations(p.n, &p.q))])
        .expect("valid quadratic relations")
}

/// The deformation member: presentation, Hilbert series through `cap`, and
/// the graded dimensions of its quadratic dual (computed through `n + 1` so
/// the vanishing in degree `n + 1` is observed, not assumed).
pub fn toric_family(
    p: &ToricParameters,
    cap: usize,
) -> Result<(AlgebraPresentation, HilbertSeries, Vec<usize>)> {
    let presentation = toric_presentation(p);
    let hilbert = presentation.hilbert(cap)?;
    let dual_relations = quadratic_dual(&toric_relations(p.n, &p.q), p.n)?;
    let dual_presentation = AlgebraPresentation::new(p.n, vec![(2, dual_relations)])?;
    let dual_table = PresentedAlgebra::build(dual_presentation, p.n + 1)?;
    let dual_dims = (0..=p.n + 1).map(|d| dual_table.dim(d)).collect();
    Ok((presentation, hilbert, dual_dims))
}

/// PBW certificate: the sorted monomials of each degree map to a basis.
/// Needs `q ≠ 0` (the sorting rewrite divides by `q`).
pub fn pbw_check(p: &ToricParameters, cap: usize) -> Result<bool> {
    if p.q.is_zero() {
        return Err(Error::NotApplicable(
            "PBW monomial basis is undefined at q = 0".into(),
        ));
    }
    let table = PresentedAlgebra::build(toric_presentation(p), cap)?;
    pbw_check_table(&table, p.n, cap)
}

/// Shared PBW core: images of sorted monomials must be independent and
/// exactly fill each component.
fn pbw_check_table(table: &PresentedAlgebra, n: usize, cap: usize) -> Result<bool> {
    for d in 1..=cap {
        let expected = monomials(n, d).len();
        if table.dim(d) != expected {
            return Ok(false);
        }
        let mut elim = crate::linalg::Eliminator::new();
        let mut rank = 0;
        for e in monomials(n, d) {
            // sorted word v_1^{e_1} … v_n^{e_n}
            let mut word = Vec::with_capacity(d);
            for (letter, &count) in e.iter().enumerate() {
                word.extend(std::iter::repeat(letter as u8).take(count as usize));
            }
            if elim.insert(table.normal_form(&word)) {
                rank += 1;
            }
        }
        if rank != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Geometric-helix numerical conditions through the cohomology table:
/// `(i, i−n)` one-dimensional concentrated in degree `n`, forward entries
/// concentrated in degree 0, strictly intermediate entries vanish.
pub fn helix_ext_check(family: &QuadricFamily, window: i64) -> Report {
    let n = family.n() as i64;
    let mut report = Report::new(format!("helix-ext n={n}"));
    let table = ext_table(family, -n - window, n + window);
    let mut serre_ok = true;
    let mut forward_ok = true;
    let mut gap_ok = true;
    for i in (-window)..=(n + window) {
        if let Some(dims) = table.entries.get(&(i, i - n)) {
            serre_ok &= dims == &vec![(family.k(), 1)];
        }
        for j in i..=(n + window) {
            if let Some(dims) = table.entries.get(&(i, j)) {
                forward_ok &= dims.iter().all(|(p, _)| *p == 0);
            }
        }
        for j in (i - n + 1)..i {
            if let Some(dims) = table.entries.get(&(i, j)) {
                gap_ok &= dims.is_empty();
            }
        }
    }
    report.check(
        "Ext(B_i, B_{i−n}) is k in cohomological degree n",
        serre_ok,
        if serre_ok { "dim 1 at degree n" } else { "unexpected shape" }.to_string(),
        "dim 1 at degree n".to_string(),
        "def:helix-geometric",
    );
    report.check(
        "forward Ext concentrated in degree 0",
        forward_ok,
        if forward_ok { "degree 0 only" } else { "higher cohomology present" }.to_string(),
        "degree 0 only".to_string(),
        "def:helix-geometric",
    );
    report.check(
        "strictly intermediate Ext vanish",
        gap_ok,
        if gap_ok { "all zero" } else { "nonzero entry" }.to_string(),
        "all zero".to_string(),
        "lem:cohomology-clifford",
    );
    report
}

/// `(1 − z)^n · h_{B_U}(z) ≡ 1` with `h` taken from the section dimensions.
pub fn mck_identity(family: &QuadricFamily, cap: usize) -> bool {
    let n = family.n();
    let h = HilbertSeries::new(
        (0..=cap)
            .map(|i| section_dim(family, i as i64, 0) as i64)
            .collect(),
    );
    let one_minus_z_pow = HilbertSeries::binomial_power(n, cap).alternate();
    one_minus_z_pow.mul_trunc(&h).is_one()
}

/// A random certified family: the toric family plus a small random symmetric
/// perturbation, re-certified before use.
pub fn random_certified_family(n: usize, rng: &mut impl Rng) -> QuadricFamily {
    loop {
        let basis: Vec<Vec<Vec<Rational>>> = (0..n)
            .map(|c| {
                let mut m = vec![vec![Rational::zero(); n]; n];
                m[c][c] = Rational::one();
                for a in 0..n {
                    for b in a..n {
                        let num = rng.gen_range(-2i64..=2);
                        let den = rng.gen_range(2i64..=4);
                        let delta = Rational::new(num.into(), den.into());
                        m[a][b] += delta.clone();
                        if a != b {
                            m[b][a] += delta;
                        }
                    }
                }
                m
            })
            .collect();
        let Ok(family) = QuadricFamily::new(n, basis) else {
            continue;
        };
        if let Ok(cert) = basepoint_check(&family, 2 * n + 2) {
            if cert.is_certified() {
                return family;
            }
        }
    }
}

/// The full minimal-family suite at one family.
pub fn suite(family: &Arc<QuadricFamily>, cap: usize, sc_cap: usize) -> Report {
    let n = family.n();
    let mut report = Report::new(format!("minimal n={n}"));
    let cert = match basepoint_check(family, 2 * n + 2) {
        Ok(c) => c,
        Err(e) => {
            report.push(
                "family shape",
                Status::Fail,
                e.to_string(),
                "k = n",
                "eq:empty",
            );
            return report;
        }
    };
    match &cert.status {
        CertStatus::EmptyIntersection { witness_degree } => {
            report.push(
                "base locus empty",
                Status::Pass,
                format!("witness degree {witness_degree}"),
                format!("witness degree ≤ {}", 2 * n + 2),
                "eq:empty",
            );
        }
        status => {
            let observed = match status {
                CertStatus::CommonZeroPossible { witness } => {
                    let w: Vec<String> = witness.iter().map(|c| c.to_string()).collect();
                    format!("common zero candidate ({})", w.join(", "))
                }
                _ => format!("inconclusive at cap {}", 2 * n + 2),
            };
            report.push(
                "base locus empty",
                Status::Inconclusive,
                observed,
                "surjective saturation".to_string(),
                "eq:empty",
            );
            report.note("family not certified; minimal suite skipped".to_string());
            return report;
        }
    }

    // Hilbert series of the quadratic presentation vs the polynomial algebra
    match bu_presentation(family).hilbert(cap) {
        Ok(h) => {
            let expected = HilbertSeries::inverse_power(n, cap);
            report.check(
                format!("h_(B_U) = (1−z)^(−n) through degree {cap}"),
                h == expected,
                h.to_string(),
                expected.to_string(),
                "lem:helix-min-cs",
            );
        }
        Err(e) => report.push(
            "presentation table",
            Status::Fail,
            e.to_string(),
            "a graded table",
            "plumbing",
        ),
    }

    // binomial identity for the section dimensions
    let binomial_cap = 12;
    let binomial_ok = (0..=binomial_cap).all(|i| {
        section_dim(family, i as i64, 0)
            == HilbertSeries::inverse_power(n, binomial_cap).coeff(i) as usize
    });
    report.check(
        format!("section dims are binomials through degree {binomial_cap}"),
        binomial_ok,
        "all degrees match".to_string(),
        "C(n+i−1, i)".to_string(),
        "eq:binomial",
    );

    match presentation_match(family, cap.min(6), sc_cap) {
        Ok(r) => report.merge(r),
        Err(e) => report.push(
            "presentation match",
            Status::Fail,
            e.to_string(),
            "a report",
            "plumbing",
        ),
    }

    // Koszul certificate with the dual table
    let dual_report = (|| -> Result<()> {
        let dual_relations = quadratic_dual(&u_perp(family), n)?;
        report.check(
            "dim U^⊥ dual",
            dual_relations.dim() == n * (n - 1) / 2 + n,
            format!("{}", dual_relations.dim()),
            format!("{}", n * (n - 1) / 2 + n),
            "thm:bbu",
        );
        let dual = PresentedAlgebra::build(
            AlgebraPresentation::new(n, vec![(2, dual_relations)])?,
            n + 1,
        )?;
        let dual_dims: Vec<usize> = (0..=n + 1).map(|d| dual.dim(d)).collect();
        let expected_dims: Vec<usize> = (0..=n + 1)
            .map(|d| HilbertSeries::binomial_power(n, n).coeff(d) as usize)
            .collect();
        report.check(
            "dual dims are C(n, i) and vanish above n",
            dual_dims == expected_dims,
            format!("{dual_dims:?}"),
            format!("{expected_dims:?}"),
            "thm:bbu",
        );
        let h_primal = bu_presentation(family).hilbert(cap)?;
        let h_dual = GradedAlgebra::hilbert(&dual, n + 1).truncate(cap);
        report.check(
            format!("h(z)·h^!(−z) ≡ 1 through degree {cap}"),
            koszul_series_check(&h_primal, &h_dual),
            "product ≡ 1".to_string(),
            "product ≡ 1".to_string(),
            "thm:bbu",
        );
        let frob = frobenius_check(&dual, n)?;
        report.check(
            "dual algebra is Frobenius with top degree n",
            frob,
            format!("{frob}"),
            "true".to_string(),
            "thm:bbu",
        );
        Ok(())
    })();
    if let Err(e) = dual_report {
        report.push(
            "dual algebra",
            Status::Fail,
            e.to_string(),
            "Koszul/Frobenius data",
            "thm:bbu",
        );
    }

    report.check(
        format!("(1−z)^n · h ≡ 1 through degree {cap}"),
        mck_identity(family, cap),
        "product ≡ 1".to_string(),
        "product ≡ 1".to_string(),
        "eq:mck",
    );

    report.merge(helix_ext_check(family, 2));
    report
}

/// The toric deformation suite at one parameter value.
pub fn toric_suite(n: usize, q: &Rational, cap: usize) -> Report {
    let mut report = Report::new(format!("toric n={n} q={q}"));
    let params = ToricParameters { n, q: q.clone() };
    match toric_family(&params, cap) {
        Ok((presentation, hilbert, dual_dims)) => {
            let expected = HilbertSeries::inverse_power(n, cap);
            report.check(
                format!("dims equal the polynomial algebra through degree {cap}"),
                hilbert == expected,
                hilbert.to_string(),
                expected.to_string(),
                "eq:utq",
            );
            let expected_dual: Vec<usize> = (0..=n + 1)
                .map(|d| HilbertSeries::binomial_power(n, n).coeff(d) as usize)
                .collect();
            report.check(
                "dual dims are C(n, i)",
                dual_dims == expected_dual,
                format!("{dual_dims:?}"),
                format!("{expected_dual:?}"),
                "cor:bbu-generation",
            );
            if q == &rat_int(-1) {
                let toric = QuadricFamily::toric(n);
                let matches = presentation.relations()[0].1 == u_perp(&toric);
                report.check(
                    "q = −1 relations equal the toric U^⊥",
                    matches,
                    format!("{matches}"),
                    "true".to_string(),
                    "cor:bbu-generation",
                );
            }
            if q == &rat_int(1) {
                report.note("q = 1 is the polynomial algebra itself".to_string());
            }
        }
        Err(e) => report.push(
            "toric family",
            Status::Fail,
            e.to_string(),
            "a graded table",
            "eq:utq",
        ),
    }
    match pbw_check(&params, cap) {
        Ok(ok) => report.check(
            format!("PBW basis through degree {cap}"),
            ok,
            format!("{ok}"),
            "true".to_string(),
            "cor:bbu-generation",
        ),
        Err(Error::NotApplicable(msg)) => report.push(
            "PBW basis",
            Status::Inconclusive,
            msg,
            "q ≠ 0".to_string(),
            "cor:bbu-generation",
        ),
        Err(e) => report.push(
            "PBW basis",
            Status::Fail,
            e.to_string(),
            "true".to_string(),
            "cor:bbu-generation",
        ),
    }
    report
}
