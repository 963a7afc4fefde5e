//! Homology computations for `S = (C × E)/G`: `H_1(C)` and its coinvariants,
//! the subgroup of `Z(G)` acting trivially on `H_1(S)`, `π_1(S)` and `H_1(S)`,
//! the pseudo-elliptic formula, and the final report on `Aut_Z(S)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elliptic::GElement;
use crate::fpgroup::{
    abelianization, check_homomorphism, diagonal_subgroup, direct_product, orbifold_presentation,
    rewrite_subgroup_with_order, FiniteGroup, ProductGroup, SchreierData, Subgroup, Word,
};
use crate::linalg::{AbelianInvariants, AbelianQuotient};
use crate::monodromy::{EllipticBranchDatum, MonodromyDatum, MonodromyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error("the two monodromies are for different groups")]
    GroupMismatch,
    #[error("inconsistent fractional translations: {0}")]
    InconsistentFractions(String),
}

/// `(Z^{2h} ⊕ ⊕ Z/m_j γ_j) / (Σ γ_j)`.
pub fn h1_orb(h: usize, local_orders: &[u32]) -> AbelianInvariants {
    abelianization(&orbifold_presentation(h, local_orders)).invariants
}

/// `H_1(C, Z)` from the Reidemeister–Schreier presentation of `ker(π^orb → G)`,
/// together with the coinvariants `H_1(C, Z)_G`.
#[derive(Clone, Debug)]
pub struct CoinvariantSpace {
    pub schreier: SchreierData,
    /// `H_1(C, Z)` over the Schreier generators.
    pub h1_c: AbelianQuotient,
    /// Coinvariants, built in one step from subgroup relators and conjugation differences.
    pub coinvariants: AbelianQuotient,
    conjugation_rows: Vec<Vec<BigInt>>,
    lifts: HashMap<GElement, Word>,
}

impl CoinvariantSpace {
    pub fn new(d: &MonodromyDatum) -> Result<Self, InvariantsError> {
        let order: Vec<usize> = (0..d.presentation().n_generators).collect();
        Self::with_generator_order(d, &order)
    }

    /// As [`CoinvariantSpace::new`], with the coset search visiting generators in `order`.
    pub fn with_generator_order(d: &MonodromyDatum, order: &[usize]) -> Result<Self, InvariantsError> {
        d.validate()?;
        let f = d.quotient_map();
        let g = d.group();
        let sd = rewrite_subgroup_with_order(&f, &Subgroup::trivial(g), order);
        let n = sd.n_schreier_generators();
        let relator_rows = sd.subgroup_presentation.relation_rows();
        let h1_c = AbelianQuotient::from_rows(n, relator_rows.clone());

        let mut conjugation_rows = Vec::new();
        for i in 0..n {
            let u = sd.schreier_generator_word(i);
            for x in 0..f.source.n_generators {
                let conj = Word::gen(x).concat(&u).concat(&Word::inv(x));
                let mut row = sd.rewrite_vector(&conj).expect("kernel is normal");
                row[i] -= 1;
                conjugation_rows.push(row);
            }
        }
        let mut all = relator_rows;
        all.extend(conjugation_rows.iter().cloned());
        let coinvariants = AbelianQuotient::from_rows(n, all);

        let lifts = sd
            .transversal
            .iter()
            .map(|w| (f.image(w), w.clone()))
            .collect();
        Ok(Self {
            schreier: sd,
            h1_c,
            coinvariants,
            conjugation_rows,
            lifts,
        })
    }

    /// Transversal word mapping to `g`.
    pub fn lift(&self, g: &GElement) -> &Word {
        &self.lifts[g]
    }

    pub fn h1_c_invariants(&self) -> AbelianInvariants {
        self.h1_c.invariants()
    }

    pub fn invariants(&self) -> AbelianInvariants {
        self.coinvariants.invariants()
    }

    /// Coinvariants computed as a quotient of `H_1(C)` in its own coordinates.
    pub fn two_step(&self) -> TwoStepCoinvariants {
        let moduli = self.h1_c.coordinate_moduli();
        let dim = moduli.len();
        let mut rows: Vec<Vec<BigInt>> = self
            .conjugation_rows
            .iter()
            .map(|r| self.h1_c.coordinates(r))
            .collect();
        for (i, m) in moduli.iter().enumerate() {
            if !m.is_zero() {
                let mut row = vec![BigInt::zero(); dim];
                row[i] = m.clone();
                rows.push(row);
            }
        }
        TwoStepCoinvariants {
            h1_c: self.h1_c.clone(),
            quotient: AbelianQuotient::from_rows(dim, rows),
        }
    }

    /// Image in the coinvariants of a word lying in `π_1(C)`.
    pub fn coordinates_of_word(&self, w: &Word) -> Vec<BigInt> {
        let v = self.schreier.rewrite_vector(w).expect("word lies in the kernel");
        self.coinvariants.coordinates(&v)
    }

    pub fn word_is_zero(&self, w: &Word) -> bool {
        let v = self.schreier.rewrite_vector(w).expect("word lies in the kernel");
        self.coinvariants.is_zero(&v)
    }
}

/// `H_1(C)` first, then the quotient by the conjugation differences.
#[derive(Clone, Debug)]
pub struct TwoStepCoinvariants {
    pub h1_c: AbelianQuotient,
    pub quotient: AbelianQuotient,
}

impl TwoStepCoinvariants {
    pub fn invariants(&self) -> AbelianInvariants {
        self.quotient.invariants()
    }

    /// Coordinates of a vector over the Schreier generators.
    pub fn coordinates(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.quotient.coordinates(&self.h1_c.coordinates(v))
    }

    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        self.quotient.is_zero(&self.h1_c.coordinates(v))
    }
}

/// Elements of `Z(G)` whose lifted commutators vanish in `H_1(C)_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialAction {
    /// Central elements passing the test, identity excluded.
    pub accepted: Vec<GElement>,
    /// Subgroup generated by `accepted`.
    pub subgroup: Vec<GElement>,
}

impl TrivialAction {
    pub fn order(&self) -> usize {
        self.subgroup.len()
    }
}

pub fn trivial_action_subgroup(d: &MonodromyDatum) -> Result<TrivialAction, InvariantsError> {
    Ok(trivial_action_in(d, &CoinvariantSpace::new(d)?))
}

pub fn trivial_action_in(d: &MonodromyDatum, space: &CoinvariantSpace) -> TrivialAction {
    let g = d.group();
    let id = g.identity();
    let elements = g.elements();
    let accepted: Vec<GElement> = g
        .center()
        .into_iter()
        .filter(|z| *z != id)
        .filter(|z| {
            let l1 = space.lift(z);
            elements
                .iter()
                .all(|x| space.word_is_zero(&Word::commutator(l1, space.lift(x))))
        })
        .collect();
    TrivialAction {
        subgroup: g.generated_subgroup(&accepted),
        accepted,
    }
}

fn check_same_group(d: &MonodromyDatum, e: &EllipticBranchDatum) -> Result<(), InvariantsError> {
    if d.group().spec() != e.group().spec() {
        return Err(InvariantsError::GroupMismatch);
    }
    d.validate()?;
    e.validate()?;
    Ok(())
}

/// `π_1(S)` as the preimage of the diagonal under `π^orb(C/G) × π^orb(E/G) → G × G`.
pub fn pi1_s_presentation(d: &MonodromyDatum, e: &EllipticBranchDatum) -> Result<SchreierData, InvariantsError> {
    let p1 = d.presentation();
    let p2 = e.presentation();
    let order: Vec<usize> = (0..p1.n_generators + p2.n_generators).collect();
    pi1_s_with_generator_order(d, e, &order)
}

pub fn pi1_s_with_generator_order(
    d: &MonodromyDatum,
    e: &EllipticBranchDatum,
    order: &[usize],
) -> Result<SchreierData, InvariantsError> {
    check_same_group(d, e)?;
    let g = d.group();
    let p = direct_product(&d.presentation(), &e.presentation());
    let id = g.identity();
    let mut images: Vec<(GElement, GElement)> = d.images().into_iter().map(|x| (x, id)).collect();
    images.extend(e.gamma_images().iter().map(|y| (id, *y)));
    let product = ProductGroup {
        left: g.clone(),
        right: g.clone(),
    };
    let diag = diagonal_subgroup(&product);
    let f = check_homomorphism(&p, product, images).expect("product of surjections onto G × G");
    Ok(rewrite_subgroup_with_order(&f, &diag, order))
}

pub fn h1_s(d: &MonodromyDatum, e: &EllipticBranchDatum) -> Result<AbelianInvariants, InvariantsError> {
    Ok(abelianization(&pi1_s_presentation(d, e)?.subgroup_presentation).invariants)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Certainty {
    Exact,
    UpperBound,
}

/// Steps of the decision on `Aut_Z(S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecisionRule {
    /// For `h ≥ 2` only translations can act trivially on cohomology.
    RestrictToTranslations,
    /// No candidate besides the identity.
    NoCandidates,
    /// `h = 1`, `T` cyclic and generated by a local monodromy: trivial on `H^2` as well.
    CyclicTranslationsLocallyGenerated,
    /// `H_1(S, Z)` torsion-free, so rational and integral triviality agree.
    TorsionFreeHomology,
    /// None of the exactness rules applies.
    NoExactRule,
}

#[derive(Clone, Debug)]
pub struct AutZReport {
    /// `K`: central elements acting trivially on `H_1(S, Z)`.
    pub trivial_on_h1: Vec<GElement>,
    /// `C`: what remains after the decision rules.
    pub candidates: Vec<GElement>,
    pub certainty: Certainty,
    pub rules: Vec<DecisionRule>,
    pub h1_s: AbelianInvariants,
}

impl AutZReport {
    pub fn trivial_action_order(&self) -> usize {
        self.trivial_on_h1.len()
    }

    pub fn aut_z_order(&self) -> usize {
        self.candidates.len()
    }
}

pub fn aut_z_report(d: &MonodromyDatum, e: &EllipticBranchDatum) -> Result<AutZReport, InvariantsError> {
    check_same_group(d, e)?;
    let k = trivial_action_subgroup(d)?;
    let h1 = h1_s(d, e)?;
    Ok(decide(d, k.subgroup, h1))
}

/// Applies the decision rules to a precomputed `K` and `H_1(S)`.
pub fn decide(d: &MonodromyDatum, trivial_on_h1: Vec<GElement>, h1: AbelianInvariants) -> AutZReport {
    let g = d.group();
    let mut rules = Vec::new();
    let candidates: Vec<GElement> = if d.h() >= 2 {
        rules.push(DecisionRule::RestrictToTranslations);
        trivial_on_h1.iter().filter(|x| x.is_translation()).copied().collect()
    } else {
        trivial_on_h1.clone()
    };
    let certainty = if candidates.len() == 1 {
        rules.push(DecisionRule::NoCandidates);
        Certainty::Exact
    } else if d.h() == 1 && d.gamma_images().iter().any(|x| g.generates_translations(x)) {
        rules.push(DecisionRule::CyclicTranslationsLocallyGenerated);
        Certainty::Exact
    } else if d.h() >= 2 && h1.is_torsion_free() {
        rules.push(DecisionRule::TorsionFreeHomology);
        Certainty::Exact
    } else {
        rules.push(DecisionRule::NoExactRule);
        Certainty::UpperBound
    };
    AutZReport {
        trivial_on_h1,
        candidates,
        certainty,
        rules,
        h1_s: h1,
    }
}

/// Pseudo-elliptic data: `G` acts on `E` by translations, and `γ_j` lifts to the
/// translation by `x_j ∈ (1/m_j) Λ`. Coordinates are taken in a basis of `Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoEllipticDatum {
    pub h: usize,
    pub x: Vec<[Rational64; 2]>,
    pub orders: Vec<u32>,
}

impl PseudoEllipticDatum {
    pub fn new(h: usize, x: Vec<[Rational64; 2]>, orders: Vec<u32>) -> Self {
        Self { h, x, orders }
    }

    pub fn validate(&self) -> Result<(), InvariantsError> {
        if self.x.len() != self.orders.len() {
            return Err(InvariantsError::InconsistentFractions(format!(
                "{} translations but {} orders",
                self.x.len(),
                self.orders.len()
            )));
        }
        let mut sum = [Rational64::zero(), Rational64::zero()];
        for (i, (x, &m)) in self.x.iter().zip(&self.orders).enumerate() {
            let minimal = x[0].denom().lcm(x[1].denom());
            if minimal != i64::from(m) || m < 2 {
                return Err(InvariantsError::InconsistentFractions(format!(
                    "x_{} = ({}, {}) has order {minimal}, recorded {m}",
                    i + 1,
                    x[0],
                    x[1]
                )));
            }
            sum[0] += x[0];
            sum[1] += x[1];
        }
        if !sum[0].is_zero() || !sum[1].is_zero() {
            return Err(InvariantsError::InconsistentFractions(format!(
                "translations sum to ({}, {})",
                sum[0], sum[1]
            )));
        }
        Ok(())
    }
}

/// `(Z^{2h} ⊕ Λ ⊕ ⊕ Z γ_j) / ⟨Σ γ_j, m_j γ_j - m_j x_j⟩`.
pub fn pseudo_elliptic_h1(p: &PseudoEllipticDatum) -> Result<AbelianInvariants, InvariantsError> {
    p.validate()?;
    let k = p.x.len();
    let n = 2 * p.h + 2 + k;
    let lambda = 2 * p.h;
    let gamma = lambda + 2;
    let mut rows = Vec::new();
    let mut sum = vec![BigInt::zero(); n];
    for j in 0..k {
        sum[gamma + j] = BigInt::from(1);
    }
    rows.push(sum);
    for (j, (x, &m)) in p.x.iter().zip(&p.orders).enumerate() {
        let m = i64::from(m);
        let mut row = vec![BigInt::zero(); n];
        row[gamma + j] = BigInt::from(m);
        for c in 0..2 {
            let mx = x[c] * m;
            debug_assert!(mx.is_integer());
            row[lambda + c] = -BigInt::from(mx.to_integer());
        }
        rows.push(row);
    }
    Ok(AbelianQuotient::from_rows(n, rows).invariants())
}

/// Detects the one pseudo-elliptic pattern where `Aut_Z / Aut^0` has order 2:
/// `G = Z/2m` with `m` odd, `C/G = P^1` and four branch points with local
/// monodromies `{a, a, g, -g}`, `a` of order 2 and `g` of order `m`.
pub fn pseudo_elliptic_exception(n: u64, h: usize, monodromy: &[u64]) -> bool {
    if h != 0 || monodromy.len() != 4 || n < 6 || n % 2 != 0 || (n / 2) % 2 == 0 {
        return false;
    }
    let v: Vec<u64> = monodromy.iter().map(|x| x % n).collect();
    if v.contains(&0) || v.iter().sum::<u64>() % n != 0 {
        return false;
    }
    let gcd = v.iter().fold(n, |acc, x| acc.gcd(x));
    if gcd != 1 {
        return false;
    }
    let m = n / 2;
    let order = |x: u64| n / x.gcd(&n);
    let pairs = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
    let fits = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        v[a] == v[b] && order(v[a]) == 2 && (v[c] + v[d]) % n == 0 && order(v[c]) == m
    };
    pairs.iter().any(|&(p, q)| fits(p, q) || fits(q, p))
}
