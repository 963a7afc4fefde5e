//! Smith and Hermite normal forms over Z, and reading off an abelian group
//! from a relation matrix.

use autz::linalg::{abelian_invariants, hermite_normal_form, smith_normal_form, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(3, &[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("A =\n{a:?}");
    println!("diagonal of D: {:?}", snf.diagonal());
    assert_eq!(&(&snf.u * &a) * &snf.v, snf.d);
    println!("U A V = D checked, det U = {}, det V = {}", snf.u.determinant(), snf.v.determinant());

    println!("HNF(A) = {:?}", hermite_normal_form(&a));

    // Z^3 / <rows of A>
    println!("Z^3 / rowspace(A) = {}", abelian_invariants(3, &a));

    // The relation module of a closed genus-2 surface is zero: H_1 = Z^4.
    let zero = IntMatrix::zeros(1, 4);
    println!("H_1(genus 2) = {}", abelian_invariants(4, &zero));
}
