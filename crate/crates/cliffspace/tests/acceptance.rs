//! Acceptance suite: every criterion is exact (no tolerances, rational
//! arithmetic throughout) and prints one pass/fail line.
//!
//! Run with `cargo test -p cliffspace --test acceptance -- --nocapture`.

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use cliffspace::clifford::{self, QuadricFamily};
use cliffspace::graded::{
    frobenius_check, koszul_series_check, minimal_relations, quadratic_dual,
    AlgebraPresentation, GradedAlgebra, HilbertSeries, PresentedAlgebra,
};
use cliffspace::linalg::{rat, rat_int};
use cliffspace::maximal;
use cliffspace::minimal::{
    self, basepoint_check, pbw_check, random_certified_family, toric_family, u_perp,
    ToricParameters,
};
use cliffspace::partitions::{
    symmetric_diagrams, SchurMultiset,
    YoungDiagram,
};

struct Outcome {
    id: usize,
    name: &'static str,
    pass: bool,
    details: String,
}

fn yd(rows: &[usize]) -> YoungDiagram {
    YoungDiagram::new(rows.to_vec()).unwrap()
}

/// 1. Multiplicity-free decomposition of B_i for n ∈ {2,3}, i ≤ 6.
fn criterion_1() -> (bool, String) {
    let mut ok = true;
    for n in [2usize, 3] {
        let report = maximal::verify_decomposition(n, 6);
        ok &= report.passed();
    }
    (ok, "characters of B_0..B_6 decompose multiplicity-free at n = 2, 3".into())
}

/// 2. Quadratic relations vanish; cubic relations are Σ^{2,1}V.
fn criterion_2() -> (bool, String) {
    let mut ok = true;
    let mut details = Vec::new();
    let expected_cubic = [0usize, 0, 2, 8, 20];
    for n in 2..=4usize {
        let alg = maximal::build_b(n, 3);
        let rels = match minimal_relations(&alg, 3) {
            Ok(r) => r,
            Err(_) => {
                ok = false;
                continue;
            }
        };
        ok &= rels[0].kernel_dim == 0;
        ok &= rels[1].kernel_dim == expected_cubic[n];
        let character = rels[1].kernel_character.clone().unwrap_or_default();
        ok &= character == SchurMultiset::from_pairs([(yd(&[2, 1]), 1)]);
        details.push(format!("n={n}: d2 = {}, d3 = {}", rels[0].kernel_dim, rels[1].kernel_dim));
    }
    (ok, details.join("; "))
}

/// 3. Quartic kernel at n = 3: dim 42 = 2·15 + 6 + 2·3 with the stated character.
fn criterion_3() -> (bool, String) {
    let alg = maximal::build_b(3, 4);
    let rels = match minimal_relations(&alg, 4) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string()),
    };
    let quartic = &rels[2];
    let expected = SchurMultiset::from_pairs([
        (yd(&[3, 1]), 2),
        (yd(&[2, 2]), 1),
        (yd(&[2, 1, 1]), 2),
    ]);
    let character = quartic.kernel_character.clone().unwrap_or_default();
    let ok = quartic.kernel_dim == 42 && character == expected;
    (
        ok,
        format!("kernel dim {} with character {}", quartic.kernel_dim, character),
    )
}

/// 4. Presentation equivalence: T(V)/⟨Σ^{2,1}⟩ dims equal dim B_i through 6.
fn criterion_4() -> (bool, String) {
    let mut ok = true;
    for n in [2usize, 3] {
        let report = maximal::presentation_equivalence_report(n, 6);
        ok &= report.passed();
    }
    (ok, "cubic-quotient dimensions match the section algebra at n = 2, 3".into())
}

/// 5. Euler identity through degree 8 for n ∈ {1,2,3}; explicit n=2 polynomial.
fn criterion_5() -> (bool, String) {
    let mut ok = true;
    for n in 1..=3usize {
        ok &= maximal::euler_identity_check(n, 8);
    }
    let p2 = maximal::alternating_polynomial(2, 8);
    let expected = {
        let mut c = vec![0i64; 9];
        c[0] = 1;
        c[1] = -2;
        c[3] = 2;
        c[4] = -1;
        HilbertSeries::new(c)
    };
    ok &= p2 == expected;
    (ok, format!("n=2 alternating polynomial {p2}"))
}

/// 6. Resolution term tables reproduce the displayed small cases; |SYD_n| = 2^n.
fn criterion_6() -> (bool, String) {
    let t2 = maximal::resolution_terms(2);
    let expected2 = vec![
        vec![(YoungDiagram::empty(), 0)],
        vec![(yd(&[1]), 1)],
        vec![(yd(&[2, 1]), 3)],
        vec![(yd(&[2, 2]), 4)],
    ];
    let mut ok = t2.shape() == expected2;

    let t3 = maximal::resolution_terms(3);
    let expected3 = vec![
        vec![(YoungDiagram::empty(), 0)],
        vec![(yd(&[1]), 1)],
        vec![(yd(&[2, 1]), 3)],
        vec![(yd(&[2, 2]), 4), (yd(&[3, 1, 1]), 5)],
        vec![(yd(&[3, 2, 1]), 6)],
        vec![(yd(&[3, 3, 2]), 8)],
        vec![(yd(&[3, 3, 3]), 9)],
    ];
    ok &= t3.shape() == expected3;

    for n in 1..=6usize {
        ok &= symmetric_diagrams(n).len() == 1 << n;
    }
    (ok, "n=2 and n=3 term tables match; symmetric diagram counts are 2^n".into())
}

/// 7. n = 2 cross-check: dim B_i = (⌈i/2⌉+1)(⌊i/2⌋+1) for i ≤ 8.
fn criterion_7() -> (bool, String) {
    let dims: Vec<usize> = (0..=8usize).map(|i| maximal::b_dim(2, i)).collect();
    let expected: Vec<usize> = (0..=8usize).map(|i| (i.div_ceil(2) + 1) * (i / 2 + 1)).collect();
    (dims == expected, format!("dims {dims:?}"))
}

/// 8. Minimal-family Hilbert series through degree 8 (toric n ∈ {2,3,4} and
/// three random certified n = 3 families) plus the binomial identity.
fn criterion_8() -> (bool, String) {
    let mut ok = true;
    let mut details = Vec::new();
    for n in 2..=4usize {
        let h = minimal::bu_presentation(&QuadricFamily::toric(n))
            .hilbert(8)
            .unwrap();
        let pass = h == HilbertSeries::inverse_power(n, 8);
        ok &= pass;
        details.push(format!("toric n={n}: {}", if pass { "match" } else { "MISMATCH" }));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    for idx in 0..3 {
        let family = random_certified_family(3, &mut rng);
        let h = minimal::bu_presentation(&family).hilbert(8).unwrap();
        let pass = h == HilbertSeries::inverse_power(3, 8);
        ok &= pass;
        details.push(format!("random #{idx}: {}", if pass { "match" } else { "MISMATCH" }));
    }
    for n in 1..=6usize {
        let family = QuadricFamily::toric(n);
        for i in 0..=12usize {
            ok &= clifford::section_dim(&family, i as i64, 0)
                == HilbertSeries::inverse_power(n, 12).coeff(i) as usize;
        }
    }
    (ok, details.join("; "))
}

/// 9. Quadratic presentation of B_U matches the section pipeline (dims and
/// structure constants through degree 6) for toric and random n = 3 families.
fn criterion_9() -> (bool, String) {
    let mut ok = true;
    let mut details = Vec::new();
    let toric = Arc::new(QuadricFamily::toric(3));
    let report = minimal::presentation_match(&toric, 6, 6).unwrap();
    ok &= report.passed();
    details.push("toric n=3".to_string());
    let mut rng = ChaCha20Rng::seed_from_u64(77);
    for idx in 0..2 {
        let family = Arc::new(random_certified_family(3, &mut rng));
        let report = minimal::presentation_match(&family, 6, 6).unwrap();
        ok &= report.passed();
        details.push(format!("random #{idx}"));
    }
    (ok, format!("structure constants agree: {}", details.join(", ")))
}

/// 10. Koszul and Frobenius certificates for the toric duals, n ≤ 4.
fn criterion_10() -> (bool, String) {
    let mut ok = true;
    for n in 2..=4usize {
        let family = QuadricFamily::toric(n);
        let h = minimal::bu_presentation(&family).hilbert(8).unwrap();
        let dual_relations = quadratic_dual(&u_perp(&family), n).unwrap();
        let dual = PresentedAlgebra::build(
            AlgebraPresentation::new(n, vec![(2, dual_relations)]).unwrap(),
            n + 1,
        )
        .unwrap();
        let dual_dims: Vec<usize> = (0..=n).map(|d| dual.dim(d)).collect();
        let expected: Vec<usize> = (0..=n)
            .map(|d| HilbertSeries::binomial_power(n, n).coeff(d) as usize)
            .collect();
        ok &= dual_dims == expected && dual.dim(n + 1) == 0;
        ok &= koszul_series_check(&h, &GradedAlgebra::hilbert(&dual, n + 1).truncate(8));
        ok &= frobenius_check(&dual, n).unwrap();
    }
    (ok, "h·h^!(−z) ≡ 1, dual dims C(n,i), Frobenius pairing perfect (n ≤ 4)".into())
}

/// 11. The toric deformation family over q ∈ {1, −1, 5, −1/2}, n ∈ {2,3}.
fn criterion_11() -> (bool, String) {
    let mut ok = true;
    for n in [2usize, 3] {
        for q in [rat_int(1), rat_int(-1), rat_int(5), rat(-1, 2)] {
            let params = ToricParameters { n, q: q.clone() };
            let (_, h, dual_dims) = toric_family(&params, 6).unwrap();
            ok &= h == HilbertSeries::inverse_power(n, 6);
            let expected_dual: Vec<usize> = (0..=n + 1)
                .map(|d| HilbertSeries::binomial_power(n, n).coeff(d) as usize)
                .collect();
            ok &= dual_dims == expected_dual;
            ok &= pbw_check(&params, 6).unwrap();
        }
    }
    (ok, "flat dims, PBW bases, and dual dims across the q-family".into())
}

/// 12. Algebra-law suite: ≥ 200 associativity triples, the Clifford
/// relation, and the q = 0 wedge degeneration.
fn criterion_12() -> (bool, String) {
    let mut rng = ChaCha20Rng::seed_from_u64(314);
    let families: Vec<Arc<QuadricFamily>> = vec![
        Arc::new(QuadricFamily::universal(2)),
        Arc::new(QuadricFamily::universal(3)),
        Arc::new(QuadricFamily::universal(4)),
        Arc::new(QuadricFamily::toric(2)),
        Arc::new(QuadricFamily::toric(3)),
        Arc::new(QuadricFamily::toric(4)),
        Arc::new(random_certified_family(3, &mut rng)),
        Arc::new(QuadricFamily::zero_family(3, 2)),
    ];
    let report = clifford::laws::law_report(&families, 2718, 208);
    (report.passed(), "associativity, Clifford relation, wedge degeneration".into())
}

/// 13. Helix cohomology table for minimal families, n ∈ {2,3}.
fn criterion_13() -> (bool, String) {
    let mut ok = true;
    for n in [2usize, 3] {
        let toric = QuadricFamily::toric(n);
        ok &= minimal::helix_ext_check(&toric, 3).passed();
        // certification is part of the hypothesis
        ok &= basepoint_check(&toric, 2 * n + 2).unwrap().is_certified();
    }
    let mut rng = ChaCha20Rng::seed_from_u64(99);
    let random = random_certified_family(3, &mut rng);
    ok &= minimal::helix_ext_check(&random, 3).passed();
    (ok, "Ext(B_i, B_{i−n}) = k in degree n; forward Ext in degree 0".into())
}

#[test]
fn acceptance() {
    let criteria: Vec<(usize, &'static str, fn() -> (bool, String))> = vec![
        (1, "multiplicity-free decomposition", criterion_1),
        (2, "quadratic and cubic relation spaces", criterion_2),
        (3, "quartic kernel", criterion_3),
        (4, "presentation equivalence", criterion_4),
        (5, "Euler identity", criterion_5),
        (6, "resolution term tables", criterion_6),
        (7, "n=2 closed-form dimensions", criterion_7),
        (8, "minimal-family Hilbert series", criterion_8),
        (9, "quadratic presentation of B_U", criterion_9),
        (10, "Koszul and Frobenius certificates", criterion_10),
        (11, "toric flat family", criterion_11),
        (12, "Clifford algebra law suite", criterion_12),
        (13, "helix cohomology table", criterion_13),
    ];

    let mut outcomes = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let (pass, details) = run();
        let elapsed = start.elapsed();
        println!(
            "criterion {id:>2} [{}] {name} ({elapsed:.2?}) — {details}",
            if pass { "pass" } else { "FAIL" }
        );
        outcomes.push(Outcome {
            id,
            name,
            pass,
            details,
        });
    }

    let failed: Vec<&Outcome> = outcomes.iter().filter(|o| !o.pass).collect();
    assert!(
        failed.is_empty(),
        "failed criteria: {}",
        failed
            .iter()
            .map(|o| format!("{} ({}): {}", o.id, o.name, o.details))
            .collect::<Vec<_>>()
            .join("; ")
    );
}
