use std::collections::HashSet;

use autz::catalog::{catalog_all, catalog_list1};
use autz::fpgroup::{
    abelianization, check_homomorphism, orbifold_presentation, rewrite_subgroup, rewrite_subgroup_with_order,
    CyclicGroup, FiniteGroup, Subgroup, Word,
};
use autz::invariants::{trivial_action_in, CoinvariantSpace};
use autz::monodromy::MonodromyDatum;
use proptest::prelude::*;

/// 2g - 2 = |G| (2h - 2 + sum (1 - 1/m_j)), with m_j from repeated multiplication.
fn genus_oracle(d: &MonodromyDatum) -> i64 {
    let g = d.group();
    let order = |x: &autz::elliptic::GElement| {
        let mut y = x.clone();
        let mut n = 1i64;
        while y != g.identity() {
            y = g.multiply(&y, x);
            n += 1;
        }
        n
    };
    let n = g.elements().len() as i64;
    let mut twice = n * (2 * d.h() as i64 - 2);
    for x in d.gamma_images() {
        let m = order(x);
        assert_eq!(n % m, 0);
        twice += n - n / m;
    }
    assert_eq!(twice % 2, 0);
    twice / 2 + 1
}

#[test]
fn kernel_homology_is_free_of_rank_twice_the_genus() {
    for e in catalog_all() {
        let f = e.datum.quotient_map();
        let sd = rewrite_subgroup(&f, &Subgroup::trivial(&f.target));
        assert_eq!(sd.index(), f.target.order(), "{} {}", e.group, e.name);
        let h1 = abelianization(&sd.subgroup_presentation).invariants;
        let g = genus_oracle(&e.datum);
        assert!(g >= 2);
        assert_eq!(g, e.datum.genus_c().unwrap());
        assert!(h1.is_torsion_free(), "{} {}: {h1}", e.group, e.name);
        assert_eq!(h1.free_rank as i64, 2 * g, "{} {}", e.group, e.name);
    }
}

#[test]
fn transversal_is_prefix_closed() {
    for e in catalog_all() {
        let f = e.datum.quotient_map();
        let sd = rewrite_subgroup(&f, &Subgroup::trivial(&f.target));
        assert!(sd.transversal[0].is_empty());
        let set: HashSet<Vec<_>> = sd.transversal.iter().map(|w| w.letters().to_vec()).collect();
        for w in &sd.transversal {
            for k in 0..w.len() {
                assert!(set.contains(&w.letters()[..k].to_vec()), "prefix of {w} missing");
            }
        }
    }
}

fn generator_orders(n: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let rev: Vec<usize> = (0..n).rev().collect();
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut inter: Vec<usize> = (0..n).step_by(2).collect();
    inter.extend((1..n).step_by(2));
    vec![id, rev, rot, inter]
}

#[test]
fn counts_do_not_depend_on_the_transversal() {
    for e in catalog_list1().into_iter().chain(autz::catalog::catalog_list2()) {
        let f = e.datum.quotient_map();
        let n = f.source.n_generators;
        let mut seen = None;
        for order in generator_orders(n) {
            let sd = rewrite_subgroup_with_order(&f, &Subgroup::trivial(&f.target), &order);
            let h1 = abelianization(&sd.subgroup_presentation).invariants;
            let space = CoinvariantSpace::with_generator_order(&e.datum, &order).unwrap();
            let k = trivial_action_in(&e.datum, &space);
            let here = (h1, space.invariants(), k.accepted, k.subgroup);
            match &seen {
                None => seen = Some(here),
                Some(s) => assert_eq!(s, &here, "{} {} order {order:?}", e.group, e.name),
            }
        }
    }
}

#[test]
fn cyclic_cover_of_three_cone_points() {
    // Fermat cubic: degree 3 cover of P^1 branched at three points, genus 1.
    let p = orbifold_presentation(0, &[3, 3, 3]);
    let f = check_homomorphism(&p, CyclicGroup(3), vec![1, 1, 1]).unwrap();
    let sd = rewrite_subgroup(&f, &Subgroup::trivial(&f.target));
    assert_eq!(abelianization(&sd.subgroup_presentation).invariants.to_string(), "Z^2");
}

fn random_word(n_gens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n_gens as i32, any::<bool>()), 0..14).prop_map(|v| {
        let signed: Vec<i32> = v.into_iter().map(|(g, inv)| if inv { -(g + 1) } else { g + 1 }).collect();
        Word::from_signed(&signed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rewrite_then_expand_is_freely_equal(case in 0usize..31, w in random_word(8)) {
        let e = &catalog_all()[case];
        let f = e.datum.quotient_map();
        let n = f.source.n_generators;
        let w = Word::from_signed(
            &w.letters()
                .iter()
                .filter(|l| l.generator < n)
                .map(|l| if l.inverse { -(l.generator as i32 + 1) } else { l.generator as i32 + 1 })
                .collect::<Vec<_>>(),
        );
        let sd = rewrite_subgroup(&f, &Subgroup::trivial(&f.target));
        // close w up into the subgroup with the inverse representative of its coset
        let c = sd.coset_of(&w);
        let u = w.concat(&sd.transversal[c].inverse());
        prop_assert_eq!(f.image(&u), f.target.identity());
        let r = sd.rewrite_word(&u).unwrap();
        prop_assert!(sd.expand(&r).freely_equal(&u));
        if c != 0 {
            prop_assert!(sd.rewrite_word(&w).is_err());
        }
    }
}
