//! Property tests for the exact matrix routines, checked against naive
//! rational elimination and cofactor expansion.

use num_traits::Zero;
use proptest::prelude::*;

use qforms::linalg::{bareiss_det, cofactor_det, RationalMatrix};
use qforms::rat::{int, Rational};

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-6i64..=6, rows * cols).prop_map(move |data| {
        RationalMatrix::new(rows, cols, data.into_iter().map(int).collect()).unwrap()
    })
}

/// Plain rational Gaussian elimination, as an independent rank oracle.
fn naive_rank(m: &RationalMatrix) -> usize {
    let mut rows = m.to_rows();
    let mut rank = 0usize;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &pivot;
            for j in col..m.cols() {
                let v = &rows[i][j] - &factor * &rows[rank][j];
                rows[i][j] = v;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix_strategy(r, c))) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn fraction_free_rank_matches_naive_elimination(m in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| matrix_strategy(r, c))) {
        prop_assert_eq!(m.rank(), naive_rank(&m));
    }

    #[test]
    fn det_nonzero_iff_full_rank(m in (2usize..=5).prop_flat_map(|n| matrix_strategy(n, n))) {
        let det = m.det().unwrap();
        prop_assert_eq!(det.is_zero(), m.rank() < m.rows());
    }

    #[test]
    fn elimination_det_matches_cofactor_det(m in (1usize..=4).prop_flat_map(|n| matrix_strategy(n, n))) {
        let rows = m.to_rows();
        prop_assert_eq!(bareiss_det(rows.clone()).unwrap(), cofactor_det(&rows).unwrap());
    }

    #[test]
    fn kernel_vectors_annihilate_and_count(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix_strategy(r, c))) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            let image = m.mul_vec(v).unwrap();
            prop_assert!(image.iter().all(Zero::is_zero));
            prop_assert!(v.iter().any(|x| !x.is_zero()));
            // normalized: integer entries, content 1, positive first entry
            prop_assert!(v.iter().all(|x| x.is_integer()));
            let first = v.iter().find(|x| !x.is_zero()).unwrap();
            prop_assert!(*first > Rational::zero());
        }
        // kernel vectors are linearly independent
        if !kernel.is_empty() {
            let stacked = RationalMatrix::from_rows(kernel.clone()).unwrap();
            prop_assert_eq!(stacked.rank(), kernel.len());
        }
    }

    #[test]
    fn permanent_of_diag_matches_det(d in prop::collection::vec(-5i64..=5, 3)) {
        // diagonal 3x3: permanent and determinant agree
        let mut data = vec![int(0); 9];
        for (i, x) in d.iter().enumerate() {
            data[i * 3 + i] = int(*x);
        }
        let m = RationalMatrix::new(3, 3, data).unwrap();
        prop_assert_eq!(m.permanent3().unwrap(), m.det().unwrap());
    }
}
