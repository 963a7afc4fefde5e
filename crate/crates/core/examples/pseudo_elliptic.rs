//! Surfaces where G acts on E by translations only: H_1 from the lifted
//! translations, and the detector for the exceptional monodromies.

use autz::invariants::{pseudo_elliptic_exception, pseudo_elliptic_h1, PseudoEllipticDatum};
use num_rational::Rational64;

fn main() {
    let q = Rational64::new;
    for m in [3i64, 5, 7] {
        // Two points of order 2 and two of order m over P^1; the lifts are
        // given in coordinates of a basis of the lattice.
        let p = PseudoEllipticDatum::new(
            0,
            vec![[q(1, 2), q(0, 1)], [q(1, 2), q(0, 1)], [q(0, 1), q(1, m)], [q(-1, 1), q(-1, m)]],
            vec![2, 2, m as u32, m as u32],
        );
        p.validate().unwrap();
        println!("m = {m}: H_1 = {}", pseudo_elliptic_h1(&p).unwrap());
    }

    for (n, h, mon) in [(10, 0, vec![2, 5, 8, 5]), (6, 0, vec![3, 3, 2, 4]), (6, 1, vec![3, 3, 2, 4]), (4, 0, vec![2, 2, 2, 2])] {
        println!("n = {n}, h = {h}, monodromy {mon:?}: exceptional = {}", pseudo_elliptic_exception(n, h, &mon));
    }
}
