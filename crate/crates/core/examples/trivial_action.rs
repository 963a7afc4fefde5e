//! Central elements acting trivially on H_1(C, Z)_G: the coinvariants of the
//! curve computed from the orbifold group, in one step and in two steps.

use autz::catalog::{element_name, named_element};
use autz::elliptic::GroupPreset;
use autz::invariants::{trivial_action_in, CoinvariantSpace};
use autz::monodromy::MonodromyDatum;

fn main() {
    let p = GroupPreset::Z2xMu4;
    let g = p.group();
    let el = |s: &str| named_element(&g, p, s);
    let d = MonodromyDatum::new(&g, 1, vec![el("e"), el("0")], vec![el("t"), el("t")]);

    let space = CoinvariantSpace::new(&d).unwrap();
    println!("datum {d}, genus(C) = {}", d.genus_c().unwrap());
    println!("H_1(C, Z) = {}", space.h1_c_invariants());
    println!("H_1(C, Z)_G = {}", space.invariants());
    println!("two-step computation: {}", space.two_step().invariants());

    let k = trivial_action_in(&d, &space);
    let names = |v: &[autz::elliptic::GElement]| v.iter().map(|x| element_name(&g, p, x)).collect::<Vec<_>>().join(", ");
    println!("accepted central elements: {{{}}}", names(&k.accepted));
    println!("K = {{{}}}", names(&k.subgroup));
}
