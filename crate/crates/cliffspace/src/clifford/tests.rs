use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::*;
use crate::linalg::{rat, rat_int};
use crate::partitions::{diagrams, schur_dim};

fn universal(n: usize) -> Arc<QuadricFamily> {
    Arc::new(QuadricFamily::universal(n))
}

fn toric(n: usize) -> Arc<QuadricFamily> {
    Arc::new(QuadricFamily::toric(n))
}

#[test]
fn universal_family_shapes() {
    let f1 = QuadricFamily::universal(1);
    assert_eq!((f1.n(), f1.k()), (1, 1));
    assert_eq!(f1.basis()[0][0][0], rat_int(1));

    assert_eq!(QuadricFamily::universal(2).k(), 3);

    // n = 3: k = 6 and the flattenings have full rank (`new` accepts them)
    let f3 = QuadricFamily::universal(3);
    assert_eq!(f3.k(), 6);
    assert!(QuadricFamily::new(3, f3.basis().to_vec()).is_ok());
}

#[test]
fn family_validation_errors() {
    // asymmetric matrix
    let bad = vec![vec![
        vec![rat_int(0), rat_int(1)],
        vec![rat_int(0), rat_int(0)],
    ]];
    assert!(matches!(
        QuadricFamily::new(2, bad),
        Err(crate::Error::AsymmetricMatrix { index: 0 })
    ));

    // duplicated matrix → dependence with a certificate
    let m = vec![
        vec![rat_int(1), rat_int(0)],
        vec![rat_int(0), rat_int(0)],
    ];
    let err = QuadricFamily::new(2, vec![m.clone(), m]).unwrap_err();
    match err {
        crate::Error::DependentMatrices { dependency } => {
            assert_eq!(dependency.len(), 2);
        }
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn q_pair_toric() {
    let f = QuadricFamily::toric(3);
    assert_eq!(f.q_pair(0, 0), vec![rat_int(1), rat_int(0), rat_int(0)]);
    assert_eq!(f.q_pair(0, 1), vec![rat_int(0); 3]);
    assert_eq!(f.q_pair(1, 0), f.q_pair(0, 1));
}

#[test]
fn q_pair_universal_mixed() {
    // universal n=2 basis order: E11, E22, E12+E21
    let f = QuadricFamily::universal(2);
    assert_eq!(f.q_pair(0, 1), vec![rat_int(0), rat_int(0), rat_int(1)]);
    assert_eq!(f.q_pair(0, 0), vec![rat_int(1), rat_int(0), rat_int(0)]);
}

#[test]
fn coefficient_weights_of_monomial_families() {
    assert_eq!(
        QuadricFamily::universal(2).coefficient_weights(),
        Some(vec![vec![2, 0], vec![0, 2], vec![1, 1]])
    );
    assert_eq!(
        QuadricFamily::toric(2).coefficient_weights(),
        Some(vec![vec![2, 0], vec![0, 2]])
    );
    // a rotated family is no longer monomial
    let t = vec![
        vec![rat_int(1), rat_int(1)],
        vec![rat_int(0), rat_int(1)],
    ];
    let rotated = QuadricFamily::toric(2).change_basis(&t).unwrap();
    assert_eq!(rotated.coefficient_weights(), None);
}

#[test]
fn product_of_two_generators() {
    // v1 · v2 = v1∧v2 + q(v1, v2)
    let f = universal(2);
    let e1 = CliffordElement::generator(&f, 0);
    let e2 = CliffordElement::generator(&f, 1);
    let got = e1.mul(&e2).unwrap();

    let wedge = CliffordElement::basis_element(&f, 0b11, vec![0, 0, 0]);
    let q12 = CliffordElement::basis_element(&f, 0, vec![0, 0, 1]);
    assert_eq!(got, wedge.add(&q12).unwrap());
}

#[test]
fn square_of_a_vector_is_its_quadric() {
    let f = universal(2);
    let e1 = CliffordElement::generator(&f, 0);
    let got = e1.mul(&e1).unwrap();
    assert_eq!(got, CliffordElement::basis_element(&f, 0, vec![1, 0, 0]));
}

#[test]
fn triple_product_formula() {
    // v1·v2·v3 = v1∧v2∧v3 + v1 q(v2,v3) − v2 q(v1,v3) + v3 q(v1,v2)
    let f = universal(3);
    // coefficient variables: u1..u3 = squares, u4 = (1,2), u5 = (1,3), u6 = (2,3)
    let mono = |c: usize| {
        let mut e = vec![0u8; 6];
        e[c] = 1;
        e
    };
    let got = CliffordElement::generator_product(&f, &[0, 1, 2]);
    let mut expected = CliffordElement::basis_element(&f, 0b111, vec![0; 6]);
    expected = expected
        .add(&CliffordElement::basis_element(&f, 0b001, mono(5)))
        .unwrap();
    expected = expected
        .sub(&CliffordElement::basis_element(&f, 0b010, mono(4)))
        .unwrap();
    expected = expected
        .add(&CliffordElement::basis_element(&f, 0b100, mono(3)))
        .unwrap();
    assert_eq!(got, expected);

    // and the same through the general product
    let e: Vec<_> = (0..3).map(|a| CliffordElement::generator(&f, a)).collect();
    let via_mul = e[0].mul(&e[1].mul(&e[2]).unwrap()).unwrap();
    assert_eq!(via_mul, expected);
    let left_assoc = e[0].mul(&e[1]).unwrap().mul(&e[2]).unwrap();
    assert_eq!(left_assoc, expected);
}

#[test]
fn family_mismatch_is_an_error() {
    let f = universal(2);
    let g = toric(2);
    let x = CliffordElement::generator(&f, 0);
    let y = CliffordElement::generator(&g, 0);
    assert!(matches!(x.mul(&y), Err(crate::Error::FamilyMismatch)));
}

#[test]
fn clifford_relation() {
    // v·w + w·v = 2 q(v,w) · 1 on basis vectors, for several family kinds
    for f in [universal(3), toric(3), Arc::new(QuadricFamily::zero_family(3, 2))] {
        for a in 0..3 {
            for b in 0..3 {
                let x = CliffordElement::generator(&f, a);
                let y = CliffordElement::generator(&f, b);
                let anti = x.mul(&y).unwrap().add(&y.mul(&x).unwrap()).unwrap();
                let mut expected = CliffordElement::zero(&f);
                for (c, coeff) in f.q_pair(a, b).iter().enumerate() {
                    let mut mono = vec![0u8; f.k()];
                    mono[c] = 1;
                    expected = expected
                        .add(
                            &CliffordElement::basis_element(&f, 0, mono)
                                .scale(&(coeff * rat_int(2))),
                        )
                        .unwrap();
                }
                assert_eq!(anti, expected, "a = {a}, b = {b}");
            }
        }
    }
}

#[test]
fn zero_family_degenerates_to_exterior_product() {
    let f = Arc::new(QuadricFamily::zero_family(3, 1));
    let e0 = CliffordElement::generator(&f, 0);
    let e1 = CliffordElement::generator(&f, 1);
    assert!(e0.mul(&e0).unwrap().is_zero());
    assert_eq!(
        e0.mul(&e1).unwrap(),
        CliffordElement::basis_element(&f, 0b011, vec![0])
    );
    assert_eq!(
        e1.mul(&e0).unwrap(),
        CliffordElement::basis_element(&f, 0b011, vec![0]).scale(&rat_int(-1))
    );
    // wedge products of longer words carry shuffle signs
    let even = CliffordElement::generator_product(&f, &[2, 0, 1]); // two inversions
    assert_eq!(even, CliffordElement::basis_element(&f, 0b111, vec![0]));
    let odd = CliffordElement::generator_product(&f, &[1, 0, 2]); // one inversion
    assert_eq!(
        odd,
        CliffordElement::basis_element(&f, 0b111, vec![0]).scale(&rat_int(-1))
    );
}

#[test]
fn associativity_on_random_homogeneous_triples() {
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    let families: Vec<Arc<QuadricFamily>> = vec![
        universal(2),
        universal(3),
        toric(3),
        toric(4),
        Arc::new(QuadricFamily::zero_family(3, 2)),
    ];
    for family in &families {
        for _ in 0..12 {
            let dx = rng.gen_range(0..=3);
            let dy = rng.gen_range(0..=3);
            let dz = rng.gen_range(0..=3);
            let x = CliffordElement::random_homogeneous(family, dx, &mut rng);
            let y = CliffordElement::random_homogeneous(family, dy, &mut rng);
            let z = CliffordElement::random_homogeneous(family, dz, &mut rng);
            let left = x.mul(&y).unwrap().mul(&z).unwrap();
            let right = x.mul(&y.mul(&z).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn degree_additivity_and_bilinearity() {
    let f = universal(3);
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    for _ in 0..20 {
        let dx = rng.gen_range(0..=3);
        let dy = rng.gen_range(0..=3);
        let x = CliffordElement::random_homogeneous(&f, dx, &mut rng);
        let x2 = CliffordElement::random_homogeneous(&f, dx, &mut rng);
        let y = CliffordElement::random_homogeneous(&f, dy, &mut rng);
        let xy = x.mul(&y).unwrap();
        if !xy.is_zero() {
            assert_eq!(xy.degree(), Some(dx + dy));
        }
        let lhs = x.add(&x2).unwrap().mul(&y).unwrap();
        let rhs = xy.add(&x2.mul(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let c = rat(3, 2);
        assert_eq!(x.scale(&c).mul(&y).unwrap(), x.mul(&y).unwrap().scale(&c));
    }
}

#[test]
fn section_dims_examples() {
    // maximal n=2, i=1, p=0 → 2
    assert_eq!(section_dim(&QuadricFamily::universal(2), 1, 0), 2);
    // minimal family: H^n of degree −n is one-dimensional
    for n in 2..=4 {
        let f = QuadricFamily::toric(n);
        assert_eq!(section_dim(&f, -(n as i64), n), 1);
    }
    // degree 0 sections are the scalars
    assert_eq!(section_dim(&QuadricFamily::universal(3), 0, 0), 1);
    assert_eq!(section_dim(&QuadricFamily::toric(3), 0, 0), 1);
}

#[test]
fn section_dim_matches_basis_enumeration() {
    for f in [QuadricFamily::universal(2), QuadricFamily::universal(3), QuadricFamily::toric(3)] {
        for i in 0..=6i64 {
            assert_eq!(
                section_basis(&f, i).len(),
                section_dim(&f, i, 0),
                "degree {i}"
            );
        }
    }
}

#[test]
fn maximal_section_dims_sum_schur_dims() {
    for n in 1..=4usize {
        let f = QuadricFamily::universal(n);
        for i in 0..=6usize {
            let expected: usize = diagrams(n, i).iter().map(|d| schur_dim(d, n)).sum();
            assert_eq!(section_dim(&f, i as i64, 0), expected, "n = {n}, i = {i}");
        }
    }
}

#[test]
fn minimal_section_dims_are_binomials() {
    for n in 1..=6usize {
        let f = QuadricFamily::toric(n);
        for i in 0..=12usize {
            let expected = binomial((n + i - 1) as u64, i as u64) as usize;
            assert_eq!(section_dim(&f, i as i64, 0), expected, "n = {n}, i = {i}");
        }
    }
}

#[test]
fn ext_table_shapes() {
    // minimal family: (i, i−n) is one-dimensional in cohomological degree n
    let f = QuadricFamily::toric(3);
    let t = ext_table(&f, -4, 4);
    for i in -1..=4i64 {
        assert_eq!(t.entries[&(i, i - 3)], vec![(3, 1)]);
    }
    // forward entries concentrate in degree 0
    for i in -4..=4i64 {
        for j in i..=4i64 {
            for (p, d) in &t.entries[&(i, j)] {
                assert!(*p == 0 && *d > 0);
            }
        }
    }
    // maximal n=2: entry (0,1) is two-dimensional in degree 0
    let m = ext_table(&QuadricFamily::universal(2), 0, 1);
    assert_eq!(m.entries[&(0, 1)], vec![(0, 2)]);
}

#[test]
fn multiplication_matrix_degree_one_is_identity() {
    let f = universal(3);
    let m = multiplication_matrix(&f, 1);
    assert_eq!(m, crate::linalg::SparseMatrix::identity(3));
}

#[test]
fn multiplication_matrix_small_maximal_cases() {
    // n=2, d=2: 4×4 of full rank (no quadratic relations)
    let f2 = universal(2);
    let m = multiplication_matrix(&f2, 2);
    assert_eq!((m.nrows(), m.ncols()), (4, 4));
    assert_eq!(m.rank(), 4);

    // n=3, d=3: rank = dim B_3 = 19, kernel dim 8 = dim Σ^{2,1}V
    let f3 = universal(3);
    let m = multiplication_matrix(&f3, 3);
    assert_eq!(m.ncols(), 27);
    assert_eq!(m.nrows(), 19);
    assert_eq!(m.rank(), 19);
    let kernel = m.kernel_basis();
    assert_eq!(kernel.dim(), 8);
    assert_eq!(kernel.dim(), schur_dim(&crate::partitions::YoungDiagram::new(vec![2, 1]).unwrap(), 3));

    // n=2, d=3: kernel dim 2 = dim Σ^{2,1} at n=2
    let m = multiplication_matrix(&f2, 3);
    assert_eq!(m.ncols() - m.rank(), 2);
}

#[test]
fn basis_change_keeps_family_valid() {
    let t = vec![
        vec![rat_int(1), rat_int(2), rat_int(0)],
        vec![rat_int(0), rat_int(1), rat_int(0)],
        vec![rat(1, 2), rat_int(0), rat_int(1)],
    ];
    let f = QuadricFamily::universal(2).change_basis(&t).unwrap();
    assert_eq!(f.k(), 3);
    // singular change of basis is rejected
    let singular = vec![
        vec![rat_int(1), rat_int(1), rat_int(0)],
        vec![rat_int(1), rat_int(1), rat_int(0)],
        vec![rat_int(0), rat_int(0), rat_int(1)],
    ];
    assert!(QuadricFamily::universal(2).change_basis(&singular).is_err());
}
