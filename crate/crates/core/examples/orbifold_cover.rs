//! Reidemeister–Schreier: the kernel of an orbifold group onto a finite group,
//! presented and abelianized.

use autz::fpgroup::{
    abelianization, check_homomorphism, orbifold_presentation, rewrite_subgroup, CyclicGroup, Subgroup, Word,
};

fn main() {
    // Orbifold group of genus 0 with three cone points of order 3, mapped onto Z/3:
    // the kernel is the fundamental group of the Fermat cubic, a genus 1 curve.
    let p = orbifold_presentation(0, &[3, 3, 3]);
    println!("presentation: {} generators, relators:", p.n_generators);
    for r in &p.relators {
        println!("  {r}");
    }
    let target = CyclicGroup(3);
    let f = check_homomorphism(&p, target.clone(), vec![1, 1, 1]).expect("valid epimorphism");
    let kernel = rewrite_subgroup(&f, &Subgroup::trivial(&target));
    println!("index {}, {} Schreier generators", kernel.index(), kernel.n_schreier_generators());
    println!("H_1(kernel) = {}", abelianization(&kernel.subgroup_presentation).invariants);

    // Rewriting: c1^3 lies in the kernel; expand(rewrite(w)) is freely equal to w.
    let w = Word::gen(0).pow(3);
    let rw = kernel.rewrite_word(&w).unwrap();
    println!("c1^3 -> {rw}  (expands to {})", kernel.expand(&rw).free_reduce());

    // A non-surjective map is rejected.
    let err = check_homomorphism(&p, CyclicGroup(3), vec![0, 0, 0]).unwrap_err();
    println!("constant map: {err}");
}
