//! H_1(S, Z) of S = (C x E)/G from the fundamental group, and the decision on
//! the group of automorphisms acting trivially on integral cohomology.

use autz::catalog::{element_name, mon_e_preset, named_element};
use autz::elliptic::GroupPreset;
use autz::invariants::aut_z_report;
use autz::monodromy::MonodromyDatum;

fn main() {
    for p in [GroupPreset::Z3xMu3, GroupPreset::Z2xMu4] {
        let g = p.group();
        let el = |s: &str| named_element(&g, p, s);
        let d = MonodromyDatum::new(&g, 2, vec![el("e"), el("t"), el("0"), el("0")], vec![]);
        let e = mon_e_preset(p);
        let r = aut_z_report(&d, &e).unwrap();
        let names = |v: &[autz::elliptic::GElement]| v.iter().map(|x| element_name(&g, p, x)).collect::<Vec<_>>().join(", ");
        println!("{p}: C -> C/G given by {d}, E -> E/G by {e}");
        println!("  H_1(S, Z) = {}", r.h1_s);
        println!("  K = {{{}}}", names(&r.trivial_on_h1));
        println!("  Aut_Z(S) = {{{}}}, {:?} via {:?}", names(&r.candidates), r.certainty, r.rules);
    }
}
