//! Generating vectors: validation, genus, moves, normal-form labels and
//! simplification to a minimal datum.

use autz::catalog::{element_name, named_element};
use autz::elliptic::GroupPreset;
use autz::monodromy::{apply_move, classify, simplify, MonodromyDatum, Move};

fn main() {
    let p = GroupPreset::Z3xMu3;
    let g = p.group();
    let el = |s: &str| named_element(&g, p, s);

    let show = |d: &MonodromyDatum| {
        let names = |v: &[autz::elliptic::GElement]| {
            v.iter().map(|x| element_name(d.group(), d_preset(d), x)).collect::<Vec<_>>().join(", ")
        };
        format!("({}; {})", names(d.ab_images()), names(d.gamma_images()))
    };

    let d = MonodromyDatum::new(&g, 1, vec![el("e"), el("0")], vec![el("t"), el("2t")]);
    d.validate().unwrap();
    println!("{}: genus(C) = {}, label {}", show(&d), d.genus_c().unwrap(), classify(&d));

    // The relator fails if the gammas do not multiply to the inverse commutator.
    let bad = MonodromyDatum::new(&g, 1, vec![el("e"), el("0")], vec![el("t"), el("t")]);
    println!("{}: {}", show(&bad), bad.validate().unwrap_err());

    // Moves keep the genus and produce another valid datum.
    let moved = apply_move(&d, &Move::B { handle: 0, on_beta: true, inverse: false }).unwrap();
    println!("after b-move: {}, genus {}", show(&moved), moved.genus_c().unwrap());
    let moved = apply_move(&d, &Move::PermuteGammas(vec![1, 0])).unwrap();
    println!("after swapping gammas: {}, label {}", show(&moved), classify(&moved));

    // Simplification removes cancelling pairs of branch points.
    let q = GroupPreset::Z2xMu2;
    let h = q.group();
    let t = named_element(&h, q, "t");
    let long = MonodromyDatum::new(&h, 1, vec![h.epsilon(), named_element(&h, q, "0")], vec![t; 4]);
    let s = simplify(&long).unwrap();
    for (step, d, label) in &s.steps {
        println!("{step}: {} [{label}]", show(d));
    }
    println!("minimal: {} [{}]", show(&s.minimal), s.label);
}

fn d_preset(d: &MonodromyDatum) -> GroupPreset {
    if d.group().r() == 3 {
        GroupPreset::Z3xMu3
    } else {
        GroupPreset::Z2xMu2
    }
}
