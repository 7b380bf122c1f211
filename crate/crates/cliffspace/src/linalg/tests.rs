use super::subspace::vec_from_ints;
use super::*;

fn matrix_from_rows(ncols: usize, rows: &[&[i64]]) -> SparseMatrix {
    let mut m = SparseMatrix::new(rows.len(), ncols);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.set(r, c, rat_int(*v));
        }
    }
    m
}

#[test]
fn rank_identity() {
    assert_eq!(SparseMatrix::identity(2).rank(), 2);
}

#[test]
fn rank_zero_matrix() {
    assert_eq!(SparseMatrix::new(3, 5).rank(), 0);
}

#[test]
fn rank_dependent_rows() {
    // rows (1,2,3),(2,4,6),(0,1,1): hand row-reduction gives rank 2
    let m = matrix_from_rows(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
    assert_eq!(m.rank(), 2);
}

#[test]
fn kernel_of_identity_is_zero() {
    let k = SparseMatrix::identity(4).kernel_basis();
    assert_eq!(k.dim(), 0);
    assert_eq!(k.ambient_dim(), 4);
}

#[test]
fn kernel_of_sum_functional() {
    // (1,1) has kernel spanned by (1,-1)
    let m = matrix_from_rows(2, &[&[1, 1]]);
    let k = m.kernel_basis();
    assert_eq!(k.dim(), 1);
    assert_eq!(k.basis()[0], vec_from_ints(&[1, -1]));
}

#[test]
fn kernel_dimension_law() {
    let m = matrix_from_rows(4, &[&[1, 2, 0, 1], &[0, 0, 1, 1], &[1, 2, 1, 2]]);
    assert_eq!(m.rank() + m.kernel_basis().dim(), m.ncols());
}

#[test]
fn subspace_sum_and_intersection() {
    let a = Subspace::from_spanning(2, vec![vec_from_ints(&[1, 0])]);
    let b = Subspace::from_spanning(2, vec![vec_from_ints(&[0, 1])]);
    let s = a.sum(&b).unwrap();
    let i = a.intersection(&b).unwrap();
    assert_eq!(s.dim(), 2);
    assert_eq!(i.dim(), 0);
}

#[test]
fn subspace_self_sum() {
    let a = Subspace::from_spanning(3, vec![vec_from_ints(&[1, 2, 0]), vec_from_ints(&[0, 0, 1])]);
    assert_eq!(a.sum(&a).unwrap(), a);
    assert_eq!(a.intersection(&a).unwrap(), a);
}

#[test]
fn annihilator_of_diagonal() {
    // span{e1+e2} in dim 2 has annihilator span{e1-e2} in dual coordinates
    let a = Subspace::from_spanning(2, vec![vec_from_ints(&[1, 1])]);
    let ann = a.annihilator();
    assert_eq!(ann.dim(), 1);
    assert_eq!(ann.basis()[0], vec_from_ints(&[1, -1]));
}

#[test]
fn ambient_mismatch_is_an_error() {
    let a = Subspace::zero(2);
    let b = Subspace::zero(3);
    assert!(matches!(
        a.sum(&b),
        Err(crate::Error::DimensionMismatch(2, 3))
    ));
}

#[test]
fn grassmann_dimension_identity() {
    let a = Subspace::from_spanning(4, vec![vec_from_ints(&[1, 1, 0, 0]), vec_from_ints(&[0, 0, 1, 1])]);
    let b = Subspace::from_spanning(4, vec![vec_from_ints(&[1, 1, 1, 1]), vec_from_ints(&[1, 0, 0, 0])]);
    let s = a.sum(&b).unwrap();
    let i = a.intersection(&b).unwrap();
    assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
}

#[test]
fn parse_rationals() {
    assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
    assert_eq!(parse_rational("-5").unwrap(), rat_int(-5));
    assert_eq!(parse_rational(" 7 / -2 ").unwrap(), rat(-7, 2));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
}

#[test]
fn reduce_is_canonical_projection() {
    let a = Subspace::from_spanning(3, vec![vec_from_ints(&[1, 1, 0])]);
    let r = a.reduce(&vec_from_ints(&[2, 0, 1]));
    // e0 is the pivot; representative is supported on {e1, e2}
    assert_eq!(r, vec![(1, rat_int(-2)), (2, rat_int(1))]);
    assert!(a.reduce(&vec_from_ints(&[5, 5, 0])).is_empty());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..5, r * c).prop_map(move |vals| {
                let mut m = SparseMatrix::new(r, c);
                for (k, v) in vals.into_iter().enumerate() {
                    m.set(k / c, k % c, rat_int(v));
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.ncols());
        }

        #[test]
        fn rank_equals_transpose_rank(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn double_annihilator(m in arb_matrix()) {
            let a = Subspace::from_spanning(m.ncols(), m.rows());
            prop_assert_eq!(a.annihilator().annihilator(), a);
        }

        #[test]
        fn kernel_vectors_are_killed(m in arb_matrix()) {
            for v in m.kernel_basis().basis() {
                prop_assert!(m.apply(v).is_empty());
            }
        }
    }
}
