//! Groups T ⋊ μ_r acting on an elliptic curve: construction from a lattice,
//! centers, and the abelianization of the affine group.

use autz::elliptic::{from_index_data, gcal_ab, make_group, EllipticGroupSpec, GroupPreset};
use autz::fpgroup::FiniteGroup;

fn main() {
    for p in GroupPreset::ALL {
        let g = p.group();
        let center: Vec<String> = g.center().iter().map(|x| x.to_string()).collect();
        println!(
            "{:<10} r={} |G|={:<2} T={:<10} abelian={:<5} Z(G)={{{}}}",
            p.name(),
            g.r(),
            g.order(),
            g.spec().translation_invariants().to_string(),
            g.is_abelian(),
            center.join(", ")
        );
    }

    // Invariant lattices for r = 3 built from (m1, m2, a, b), with m1 = m2 * (a^2 - ab + b^2).
    for (m1, m2, a, b) in [(3, 1, 2, 1), (7, 1, 3, 1), (6, 2, 2, 1), (3, 1, 1, 1)] {
        match from_index_data(3, m1, m2, a, b) {
            Ok(spec) => {
                let g = make_group(&spec);
                println!("r=3 m1={m1} m2={m2} (a,b)=({a},{b}): T = {}, |Z(G)| = {}", spec.translation_invariants(), g.center().len());
            }
            Err(e) => println!("r=3 m1={m1} m2={m2} (a,b)=({a},{b}): {e}"),
        }
    }

    // A lattice that is not μ_4-invariant.
    println!("r=4 lattice (2,0),(0,1): {:?}", EllipticGroupSpec::new(4, [[2, 0], [0, 1]]).err());

    for r in [2, 3, 4, 6] {
        println!("affine group for r={r}: abelianization {}", gcal_ab(r).unwrap());
    }
}
