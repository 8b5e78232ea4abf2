mod common;

use common::gf;
use proptest::prelude::*;
use stabforge::fmatrix::FqMatrix;

fn matrix(q: usize, rows: usize, cols: usize) -> impl Strategy<Value = FqMatrix> {
    proptest::collection::vec(proptest::collection::vec(0..q as u8, cols), rows)
        .prop_map(move |r| FqMatrix::from_rows(&gf(q), cols, &r).unwrap())
}

fn any_matrix() -> impl Strategy<Value = FqMatrix> {
    (prop::sample::select(vec![2usize, 3, 4, 5, 8, 9]), 0usize..7, 1usize..9)
        .prop_flat_map(|(q, r, c)| matrix(q, r, c))
}

fn contained(a: &FqMatrix, b: &FqMatrix) -> bool {
    a.iter_rows().all(|r| b.spans(r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rank(), r.rank);
        prop_assert_eq!(m.rank() + m.kernel().rows(), m.cols());
        prop_assert_eq!(r.pivots.len(), r.rank);
    }

    #[test]
    fn kernel_is_annihilated(m in any_matrix()) {
        let k = m.kernel();
        for v in k.iter_rows() {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rref_is_canonical(m in any_matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert!(contained(&m, &r.matrix) && contained(&r.matrix, &m));
        prop_assert_eq!(m.rref_generic().matrix, r.matrix);
    }

    #[test]
    fn transpose_and_product(m in any_matrix()) {
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        let id = FqMatrix::identity(m.field(), m.cols());
        prop_assert_eq!(m.mul(&id).unwrap(), m);
    }

    #[test]
    fn intersection_commutes_and_is_monotone(
        (a, b, c) in (prop::sample::select(vec![2usize, 3, 4]), 1usize..7)
            .prop_flat_map(|(q, n)| (matrix(q, 3, n), matrix(q, 2, n), matrix(q, 3, n)))
    ) {
        let ab = a.intersect(&c).unwrap();
        let ba = c.intersect(&a).unwrap();
        prop_assert!(contained(&ab, &ba) && contained(&ba, &ab));
        prop_assert!(contained(&ab, &a) && contained(&ab, &c));
        let big = a.vstack(&b).unwrap();
        let big_c = big.intersect(&c).unwrap();
        prop_assert!(contained(&ab, &big_c));
    }
}
