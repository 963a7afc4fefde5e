//! Finitely presented groups, maps onto finite groups, and Reidemeister–Schreier
//! rewriting.
//!
//! All subgroups handled here have finite index: they are preimages `f^-1(D)`
//! of a subgroup `D` of a finite group under a surjection `f`, so the coset
//! table is obtained by a breadth-first walk over the finite group itself and no
//! coset enumeration is needed.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::{AbelianInvariants, AbelianQuotient};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Self {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Self {
            generator,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A word in the free group. Not reduced unless [`Word::free_reduce`] is called.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn gen(generator: usize) -> Self {
        Self(vec![Letter::gen(generator)])
    }

    pub fn inv(generator: usize) -> Self {
        Self(vec![Letter::inv(generator)])
    }

    /// Builds a word from signed 1-based indices: `k > 0` is generator `k-1`,
    /// `k < 0` its inverse.
    pub fn from_signed(letters: &[i32]) -> Self {
        Self(
            letters
                .iter()
                .map(|&k| {
                    assert!(k != 0, "signed generator index 0 is not allowed");
                    let g = k.unsigned_abs() as usize - 1;
                    if k > 0 {
                        Letter::gen(g)
                    } else {
                        Letter::inv(g)
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn pow(&self, n: u32) -> Word {
        Word(
            std::iter::repeat_n(self.0.iter().copied(), n as usize)
                .flatten()
                .collect(),
        )
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn freely_equal(&self, other: &Word) -> bool {
        self.free_reduce() == other.free_reduce()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Exponent sums per generator.
    pub fn exponent_vector(&self, n_generators: usize) -> Vec<BigInt> {
        let mut v = vec![0i64; n_generators];
        for l in &self.0 {
            v[l.generator] += if l.inverse { -1 } else { 1 };
        }
        v.into_iter().map(BigInt::from).collect()
    }

    /// Substitutes a word for every generator.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let w = &images[l.generator];
            if l.inverse {
                out.extend(w.inverse().0);
            } else {
                out.extend_from_slice(&w.0);
            }
        }
        Word(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("x{}^-1", l.generator)
                } else {
                    format!("x{}", l.generator)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub n_generators: usize,
    pub relators: Vec<Word>,
    pub labels: Vec<String>,
}

impl Presentation {
    pub fn new(n_generators: usize, relators: Vec<Word>) -> Self {
        let labels = (0..n_generators).map(|i| format!("x{i}")).collect();
        Self::with_labels(n_generators, relators, labels)
    }

    pub fn with_labels(n_generators: usize, relators: Vec<Word>, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), n_generators);
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                assert!(
                    g < n_generators,
                    "relator {i} uses generator {g} but only {n_generators} exist"
                );
            }
        }
        Self {
            n_generators,
            relators,
            labels,
        }
    }

    /// Relation matrix of the abelianization, one row per relator.
    pub fn relation_rows(&self) -> Vec<Vec<BigInt>> {
        self.relators
            .iter()
            .map(|r| r.exponent_vector(self.n_generators))
            .collect()
    }
}

/// Orbifold fundamental group of a genus `h` curve with cone points of the given orders:
/// generators `a_1, b_1, ..., a_h, b_h, c_1, ..., c_k`, relators
/// `[a_1,b_1]...[a_h,b_h] c_1...c_k` and `c_j^{m_j}`.
pub fn orbifold_presentation(h: usize, local_orders: &[u32]) -> Presentation {
    for &m in local_orders {
        assert!(m >= 2, "local orders must be at least 2");
    }
    let n = 2 * h + local_orders.len();
    let mut long = Word::empty();
    let mut labels = Vec::with_capacity(n);
    for i in 0..h {
        long = long.concat(&Word::commutator(&Word::gen(2 * i), &Word::gen(2 * i + 1)));
        labels.push(format!("a{}", i + 1));
        labels.push(format!("b{}", i + 1));
    }
    let mut relators = Vec::new();
    for j in 0..local_orders.len() {
        long = long.concat(&Word::gen(2 * h + j));
        labels.push(format!("c{}", j + 1));
    }
    relators.push(long);
    for (j, &m) in local_orders.iter().enumerate() {
        relators.push(Word::gen(2 * h + j).pow(m));
    }
    Presentation::with_labels(n, relators, labels)
}

/// Generators of `p2` are shifted by `p1.n_generators`; all cross commutators are added.
pub fn direct_product(p1: &Presentation, p2: &Presentation) -> Presentation {
    let shift = p1.n_generators;
    let shifted: Vec<Word> = (0..p2.n_generators).map(|i| Word::gen(i + shift)).collect();
    let mut relators = p1.relators.clone();
    relators.extend(p2.relators.iter().map(|r| r.substitute(&shifted)));
    for i in 0..p1.n_generators {
        for j in 0..p2.n_generators {
            relators.push(Word::commutator(&Word::gen(i), &Word::gen(j + shift)));
        }
    }
    let mut labels = p1.labels.clone();
    labels.extend(p2.labels.iter().map(|l| format!("{l}'")));
    Presentation::with_labels(p1.n_generators + p2.n_generators, relators, labels)
}

/// Abelianization together with the coordinate map of the generators.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub invariants: AbelianInvariants,
    pub quotient: AbelianQuotient,
}

impl Abelianization {
    /// Image of generator `i` in canonical coordinates.
    pub fn generator_image(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); self.quotient.n_generators()];
        v[i] = BigInt::from(1);
        self.quotient.coordinates(&v)
    }

    pub fn word_image(&self, w: &Word) -> Vec<BigInt> {
        self.quotient
            .coordinates(&w.exponent_vector(self.quotient.n_generators()))
    }
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let quotient = AbelianQuotient::from_rows(p.n_generators, p.relation_rows());
    Abelianization {
        invariants: quotient.invariants(),
        quotient,
    }
}

/// The interface a finite target group has to offer.
pub trait FiniteGroup {
    type Element: Clone + Eq + Ord + Hash + fmt::Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    /// All elements in a fixed deterministic order.
    fn elements(&self) -> Vec<Self::Element>;

    fn order(&self) -> usize {
        self.elements().len()
    }

    fn element_order(&self, a: &Self::Element) -> usize {
        let id = self.identity();
        let mut x = a.clone();
        let mut n = 1;
        while x != id {
            x = self.multiply(&x, a);
            n += 1;
        }
        n
    }

    fn commutes(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    fn center(&self) -> Vec<Self::Element> {
        let all = self.elements();
        all.iter()
            .filter(|z| all.iter().all(|g| self.commutes(z, g)))
            .cloned()
            .collect()
    }

    fn is_abelian(&self) -> bool {
        let all = self.elements();
        all.iter()
            .all(|a| all.iter().all(|b| self.commutes(a, b)))
    }

    /// Subgroup generated by the given elements, sorted.
    fn generated_subgroup(&self, gens: &[Self::Element]) -> Vec<Self::Element> {
        let mut seen: BTreeSet<Self::Element> = BTreeSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.multiply(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn evaluate(&self, images: &[Self::Element], w: &Word) -> Self::Element {
        let mut x = self.identity();
        for l in w.letters() {
            let g = &images[l.generator];
            x = if l.inverse {
                self.multiply(&x, &self.inverse(g))
            } else {
                self.multiply(&x, g)
            };
        }
        x
    }
}

/// Direct product of two finite groups with componentwise multiplication.
#[derive(Clone, Debug)]
pub struct ProductGroup<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: FiniteGroup, B: FiniteGroup> FiniteGroup for ProductGroup<A, B> {
    type Element = (A::Element, B::Element);

    fn identity(&self) -> Self::Element {
        (self.left.identity(), self.right.identity())
    }

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (
            self.left.multiply(&a.0, &b.0),
            self.right.multiply(&a.1, &b.1),
        )
    }

    fn inverse(&self, a: &Self::Element) -> Self::Element {
        (self.left.inverse(&a.0), self.right.inverse(&a.1))
    }

    fn elements(&self) -> Vec<Self::Element> {
        let rs = self.right.elements();
        self.left
            .elements()
            .into_iter()
            .flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

/// Cyclic group `Z/n`, written additively on `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicGroup(pub u64);

impl FiniteGroup for CyclicGroup {
    type Element = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn multiply(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }

    fn inverse(&self, a: &u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.0).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpGroupError {
    #[error("expected {expected} generator images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("relator {index} does not map to the identity")]
    RelatorViolation { index: usize },
    #[error("images generate a subgroup of index {index} (order {generated} of {total})")]
    NotSurjective {
        generated: usize,
        total: usize,
        index: usize,
    },
    #[error("given elements do not form a subgroup")]
    NotASubgroup,
    #[error("word does not map into the subgroup")]
    NotInSubgroup,
}

/// A homomorphism from a finitely presented group onto a finite group.
#[derive(Clone, Debug)]
pub struct FiniteQuotientMap<G: FiniteGroup> {
    pub source: Presentation,
    pub target: G,
    pub images: Vec<G::Element>,
}

impl<G: FiniteGroup> FiniteQuotientMap<G> {
    pub fn image(&self, w: &Word) -> G::Element {
        self.target.evaluate(&self.images, w)
    }
}

/// Checks that every relator maps to the identity and that the images generate the target.
pub fn check_homomorphism<G: FiniteGroup>(
    p: &Presentation,
    target: G,
    images: Vec<G::Element>,
) -> Result<FiniteQuotientMap<G>, FpGroupError> {
    if images.len() != p.n_generators {
        return Err(FpGroupError::WrongImageCount {
            expected: p.n_generators,
            got: images.len(),
        });
    }
    let id = target.identity();
    for (index, r) in p.relators.iter().enumerate() {
        if target.evaluate(&images, r) != id {
            return Err(FpGroupError::RelatorViolation { index });
        }
    }
    let generated = target.generated_subgroup(&images).len();
    let total = target.order();
    if generated != total {
        return Err(FpGroupError::NotSurjective {
            generated,
            total,
            index: total / generated,
        });
    }
    Ok(FiniteQuotientMap {
        source: p.clone(),
        target,
        images,
    })
}

/// A subgroup of a finite group, stored as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup<E: Ord> {
    elements: Vec<E>,
}

impl<E: Clone + Ord> Subgroup<E> {
    /// Verifies closure under multiplication and inverses.
    pub fn new<G: FiniteGroup<Element = E>>(group: &G, elements: Vec<E>) -> Result<Self, FpGroupError> {
        let set: BTreeSet<E> = elements.into_iter().collect();
        if !set.contains(&group.identity()) {
            return Err(FpGroupError::NotASubgroup);
        }
        for a in &set {
            if !set.contains(&group.inverse(a)) {
                return Err(FpGroupError::NotASubgroup);
            }
            for b in &set {
                if !set.contains(&group.multiply(a, b)) {
                    return Err(FpGroupError::NotASubgroup);
                }
            }
        }
        Ok(Self {
            elements: set.into_iter().collect(),
        })
    }

    pub fn trivial<G: FiniteGroup<Element = E>>(group: &G) -> Self {
        Self {
            elements: vec![group.identity()],
        }
    }

    pub fn whole<G: FiniteGroup<Element = E>>(group: &G) -> Self {
        let mut elements = group.elements();
        elements.sort();
        Self { elements }
    }

    pub fn generated_by<G: FiniteGroup<Element = E>>(group: &G, gens: &[E]) -> Self {
        Self {
            elements: group.generated_subgroup(gens),
        }
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Diagonal `{(g, g)}` inside `G x G`.
pub fn diagonal_subgroup<G: FiniteGroup + Clone>(
    product: &ProductGroup<G, G>,
) -> Subgroup<(G::Element, G::Element)> {
    let mut elements: Vec<_> = product
        .left
        .elements()
        .into_iter()
        .map(|g| (g.clone(), g))
        .collect();
    elements.sort();
    Subgroup { elements }
}

/// Coset table and Schreier transversal for `f^-1(D)`, plus the rewritten
/// presentation of that subgroup.
#[derive(Clone, Debug)]
pub struct SchreierData {
    /// Representative word of each right coset; index 0 is the subgroup itself.
    pub transversal: Vec<Word>,
    /// `coset_action[c][x]` is the coset of `rep(c) * x`.
    pub coset_action: Vec<Vec<usize>>,
    /// Source generators in the order used by the breadth-first search.
    pub generator_order: Vec<usize>,
    /// Surviving Schreier generators `rep(c) x rep(cx)^-1`, as `(c, x)` pairs.
    pub schreier_pairs: Vec<(usize, usize)>,
    /// Index into `schreier_pairs` for each `(c, x)`, or `None` for tree edges.
    pair_index: Vec<Vec<Option<usize>>>,
    pub subgroup_presentation: Presentation,
}

impl SchreierData {
    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn n_schreier_generators(&self) -> usize {
        self.schreier_pairs.len()
    }

    /// The Schreier generator `i` written in the source generators.
    pub fn schreier_generator_word(&self, i: usize) -> Word {
        let (c, x) = self.schreier_pairs[i];
        let target = self.coset_action[c][x];
        self.transversal[c]
            .concat(&Word::gen(x))
            .concat(&self.transversal[target].inverse())
    }

    /// Traces `w` through the coset table starting at coset `start`; returns the
    /// rewritten word and the final coset.
    fn trace(&self, start: usize, w: &Word) -> (Word, usize) {
        let mut out = Vec::new();
        let mut c = start;
        for l in w.letters() {
            if l.inverse {
                let prev = self.coset_action_inverse(c, l.generator);
                if let Some(i) = self.pair_index[prev][l.generator] {
                    out.push(Letter::inv(i));
                }
                c = prev;
            } else {
                if let Some(i) = self.pair_index[c][l.generator] {
                    out.push(Letter::gen(i));
                }
                c = self.coset_action[c][l.generator];
            }
        }
        (Word(out), c)
    }

    fn coset_action_inverse(&self, c: usize, x: usize) -> usize {
        // index is at most a few hundred; a linear scan is fine
        self.coset_action
            .iter()
            .position(|row| row[x] == c)
            .expect("coset action is a permutation")
    }

    /// Rewrites a word lying in the subgroup as a word in the Schreier generators.
    pub fn rewrite_word(&self, w: &Word) -> Result<Word, FpGroupError> {
        let (out, end) = self.trace(0, w);
        if end != 0 {
            return Err(FpGroupError::NotInSubgroup);
        }
        Ok(out)
    }

    /// Expands a word over Schreier generators back into source generators.
    pub fn expand(&self, w: &Word) -> Word {
        let images: Vec<Word> = (0..self.n_schreier_generators())
            .map(|i| self.schreier_generator_word(i))
            .collect();
        w.substitute(&images)
    }

    /// Exponent vector of the rewritten word, i.e. its image in the abelianized subgroup
    /// before relations are applied.
    pub fn rewrite_vector(&self, w: &Word) -> Result<Vec<BigInt>, FpGroupError> {
        Ok(self
            .rewrite_word(w)?
            .exponent_vector(self.n_schreier_generators()))
    }

    /// Coset index of the element represented by `w`.
    pub fn coset_of(&self, w: &Word) -> usize {
        self.trace(0, w).1
    }
}

/// Builds the Schreier transversal of `f^-1(D)` by breadth-first search over
/// right cosets `D q`, visiting generators in index order.
pub fn schreier_transversal<G: FiniteGroup>(
    f: &FiniteQuotientMap<G>,
    d: &Subgroup<G::Element>,
) -> SchreierData {
    let order: Vec<usize> = (0..f.source.n_generators).collect();
    schreier_transversal_with_order(f, d, &order)
}

/// As [`schreier_transversal`], visiting generators in the given order.
pub fn schreier_transversal_with_order<G: FiniteGroup>(
    f: &FiniteQuotientMap<G>,
    d: &Subgroup<G::Element>,
    generator_order: &[usize],
) -> SchreierData {
    let n = f.source.n_generators;
    {
        let mut check = generator_order.to_vec();
        check.sort_unstable();
        assert_eq!(check, (0..n).collect::<Vec<_>>(), "generator order must be a permutation");
    }
    let g = &f.target;
    // canonical label of D q: the least element of the coset
    let coset_key = |q: &G::Element| -> G::Element {
        d.elements()
            .iter()
            .map(|x| g.multiply(x, q))
            .min()
            .expect("subgroup is nonempty")
    };

    let mut index_of: HashMap<G::Element, usize> = HashMap::new();
    let mut reps: Vec<G::Element> = Vec::new();
    let mut words: Vec<Word> = Vec::new();
    let id = g.identity();
    index_of.insert(coset_key(&id), 0);
    reps.push(id);
    words.push(Word::empty());
    let mut action: Vec<Vec<usize>> = Vec::new();
    let mut tree: Vec<Vec<bool>> = Vec::new();

    let mut c = 0;
    while c < reps.len() {
        let mut row = vec![usize::MAX; n];
        let mut tree_row = vec![false; n];
        for &x in generator_order {
            let q = g.multiply(&reps[c], &f.images[x]);
            let key = coset_key(&q);
            let next = match index_of.get(&key) {
                Some(&i) => i,
                None => {
                    let i = reps.len();
                    index_of.insert(key, i);
                    reps.push(q);
                    words.push(words[c].concat(&Word::gen(x)));
                    tree_row[x] = true;
                    i
                }
            };
            row[x] = next;
        }
        action.push(row);
        tree.push(tree_row);
        c += 1;
    }

    let mut pairs = Vec::new();
    let mut pair_index = vec![vec![None; n]; reps.len()];
    for c in 0..reps.len() {
        for x in 0..n {
            if !tree[c][x] {
                pair_index[c][x] = Some(pairs.len());
                pairs.push((c, x));
            }
        }
    }

    let labels = pairs.iter().map(|(c, x)| format!("s[{c},{x}]")).collect();
    SchreierData {
        transversal: words,
        coset_action: action,
        generator_order: generator_order.to_vec(),
        schreier_pairs: pairs.clone(),
        pair_index,
        subgroup_presentation: Presentation::with_labels(pairs.len(), Vec::new(), labels),
    }
}

/// Reidemeister–Schreier presentation of `f^-1(D)`.
pub fn rewrite_subgroup<G: FiniteGroup>(
    f: &FiniteQuotientMap<G>,
    d: &Subgroup<G::Element>,
) -> SchreierData {
    let order: Vec<usize> = (0..f.source.n_generators).collect();
    rewrite_subgroup_with_order(f, d, &order)
}

pub fn rewrite_subgroup_with_order<G: FiniteGroup>(
    f: &FiniteQuotientMap<G>,
    d: &Subgroup<G::Element>,
    generator_order: &[usize],
) -> SchreierData {
    let mut sd = schreier_transversal_with_order(f, d, generator_order);
    let mut relators = Vec::with_capacity(sd.index() * f.source.relators.len());
    for c in 0..sd.index() {
        for r in &f.source.relators {
            let (w, end) = sd.trace(c, r);
            debug_assert_eq!(end, c, "relator does not close up at coset {c}");
            let w = w.free_reduce();
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    sd.subgroup_presentation.relators = relators;
    sd
}
