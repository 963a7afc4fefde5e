//! SNF and HNF checked on random small matrices against determinantal divisors
//! (gcd of k x k minors), computed by permutation expansion.

mod common;

use autz::linalg::{hermite_normal_form, smith_normal_form, IntMatrix};
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn snf_random(a in matrix()) {
        check_snf(&a)?;
    }

    #[test]
    fn snf_low_rank(a in product_matrix()) {
        check_snf(&a)?;
    }

    #[test]
    fn hnf_random(a in matrix()) {
        check_hnf(&a)?;
    }

    #[test]
    fn hnf_low_rank(a in product_matrix()) {
        check_hnf(&a)?;
    }
}

#[test]
fn oracle_sanity() {
    assert_eq!(leibniz(&[vec![1, 2], vec![3, 4]]), -2);
    assert_eq!(leibniz(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]), 30);
    assert_eq!(leibniz(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]), -1);
    let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    assert_eq!(determinantal_divisor(&a, 1), 2);
    assert_eq!(determinantal_divisor(&a, 2), 12);
    assert_eq!(determinantal_divisor(&a, 3).abs(), 144);
}

#[test]
fn hnf_examples() {
    // same column lattice as [[2,2],[0,2]]
    let h = hermite_normal_form(&IntMatrix::from_rows(2, &[[2, 2], [0, 2]]));
    assert_eq!(to_rows(&h), vec![vec![2, 0], vec![0, 2]]);
    let h = hermite_normal_form(&IntMatrix::from_rows(2, &[[1, 0], [3, 0]]));
    assert_eq!(to_rows(&h), vec![vec![1, 0], vec![3, 0]]);
}

#[test]
fn large_entries_stay_exact() {
    let big = 1i64 << 40;
    let a = vec![vec![big, big + 1], vec![big - 1, big]];
    let m = IntMatrix::from_rows(2, &a);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(1)]);
    assert_eq!(&(&snf.u * &m) * &snf.v, snf.d);
}
