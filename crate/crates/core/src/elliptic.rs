//! Finite groups `G = T ⋊ μ_r` of affine automorphisms `z ↦ ε^k z + t` of an
//! elliptic curve, in the formal lattice model `Λ ⊂ Λ_T = Z[x]/P_r(x)`.
//!
//! Coordinates of `Λ_T` are taken in the basis `{1, x}`; `μ_r` acts through
//! multiplication by `x`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpgroup::{abelianization, FiniteGroup, Presentation, Word};
use crate::linalg::{abelian_invariants, hermite_normal_form, AbelianInvariants, IntMatrix};

pub type Mat2 = [[i64; 2]; 2];
pub type Vec2 = [i64; 2];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EllipticError {
    #[error("r = {0} is not one of 2, 3, 4, 6")]
    UnsupportedR(u32),
    #[error("lattice has determinant 0")]
    DegenerateLattice,
    #[error("lattice is not invariant under multiplication by x")]
    LatticeNotInvariant,
    #[error("inconsistent lattice data: {0}")]
    InconsistentIndex(String),
}

fn mat_vec(m: &Mat2, v: Vec2) -> Vec2 {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

const IDENTITY: Mat2 = [[1, 0], [0, 1]];

/// Multiplication by `x` on `Z[x]/P_r(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicAction {
    r: u32,
    m: Mat2,
}

impl CyclotomicAction {
    pub fn new(r: u32) -> Result<Self, EllipticError> {
        let m = match r {
            2 => [[-1, 0], [0, -1]],
            // x^2 = -1 - x
            3 => [[0, -1], [1, -1]],
            // x^2 = -1
            4 => [[0, -1], [1, 0]],
            // x^2 = x - 1
            6 => [[0, -1], [1, 1]],
            _ => return Err(EllipticError::UnsupportedR(r)),
        };
        Ok(Self { r, m })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn matrix(&self) -> Mat2 {
        self.m
    }

    pub fn power(&self, k: u32) -> Mat2 {
        (0..k % self.r).fold(IDENTITY, |acc, _| mat_mul(&self.m, &acc))
    }

    pub fn apply(&self, k: u32, v: Vec2) -> Vec2 {
        mat_vec(&self.power(k), v)
    }

    /// `Λ_T / (M - 1) Λ_T`, the coinvariants of the full translation lattice.
    pub fn lattice_coinvariants(&self) -> AbelianInvariants {
        let m = self.m;
        let rows = [[m[0][0] - 1, m[1][0]], [m[0][1], m[1][1] - 1]];
        abelian_invariants(2, &IntMatrix::from_rows(2, &rows))
    }
}

/// A `μ_r`-invariant full-rank sublattice `Λ ⊂ Λ_T`, given by spanning columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticGroupSpec {
    action: CyclotomicAction,
    columns: [Vec2; 2],
    // lower triangular HNF basis (a, b), (0, d) with 0 <= b < d
    a: i64,
    b: i64,
    d: i64,
}

impl EllipticGroupSpec {
    pub fn new(r: u32, columns: [Vec2; 2]) -> Result<Self, EllipticError> {
        let action = CyclotomicAction::new(r)?;
        let det = columns[0][0] * columns[1][1] - columns[1][0] * columns[0][1];
        if det == 0 {
            return Err(EllipticError::DegenerateLattice);
        }
        let mat = IntMatrix::from_rows(2, &[[columns[0][0], columns[1][0]], [columns[0][1], columns[1][1]]]);
        let h = hermite_normal_form(&mat);
        let get = |i, j| -> i64 { i64::try_from(&h[(i, j)]).expect("lattice entries fit in i64") };
        let spec = Self {
            action,
            columns,
            a: get(0, 0),
            b: get(1, 0),
            d: get(1, 1),
        };
        debug_assert_eq!(get(0, 1), 0);
        debug_assert_eq!(spec.a * spec.d, det.abs());
        for c in &columns {
            if spec.reduce(mat_vec(&action.m, *c)) != [0, 0] {
                return Err(EllipticError::LatticeNotInvariant);
            }
        }
        Ok(spec)
    }

    pub fn action(&self) -> &CyclotomicAction {
        &self.action
    }

    pub fn r(&self) -> u32 {
        self.action.r
    }

    pub fn columns(&self) -> [Vec2; 2] {
        self.columns
    }

    /// Canonical basis `(a, b), (0, d)` of `Λ`.
    pub fn hnf_columns(&self) -> [Vec2; 2] {
        [[self.a, self.b], [0, self.d]]
    }

    /// `|T| = [Λ_T : Λ]`.
    pub fn translation_order(&self) -> usize {
        (self.a * self.d) as usize
    }

    /// Canonical residue of `v` modulo `Λ`: first coordinate in `[0, a)`, second in `[0, d)`.
    pub fn reduce(&self, v: Vec2) -> Vec2 {
        let q = v[0].div_euclid(self.a);
        let v1 = v[1] - q * self.b;
        [v[0] - q * self.a, v1.rem_euclid(self.d)]
    }

    pub fn contains(&self, v: Vec2) -> bool {
        self.reduce(v) == [0, 0]
    }

    /// Invariant factors of `T`.
    pub fn translation_invariants(&self) -> AbelianInvariants {
        let [c0, c1] = self.columns;
        abelian_invariants(2, &IntMatrix::from_rows(2, &[c0, c1]))
    }

    /// `(M - 1) Λ_T ⊆ Λ`.
    pub fn is_abelian(&self) -> bool {
        let m = self.action.m;
        (0..2).all(|j| self.contains([m[0][j] - i64::from(j == 0), m[1][j] - i64::from(j == 1)]))
    }
}

/// `(t, k)` stands for `z ↦ ε^k z + t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GElement {
    pub t: Vec2,
    pub k: u32,
}

impl GElement {
    pub fn new(t: Vec2, k: u32) -> Self {
        Self { t, k }
    }

    pub fn is_translation(&self) -> bool {
        self.k == 0
    }
}

impl fmt::Display for GElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.t, self.k) {
            ([0, 0], 0) => write!(f, "1"),
            ([0, 0], 1) => write!(f, "e"),
            ([0, 0], k) => write!(f, "e^{k}"),
            ([a, b], 0) => write!(f, "({a},{b})"),
            ([a, b], 1) => write!(f, "({a},{b})e"),
            ([a, b], k) => write!(f, "({a},{b})e^{k}"),
        }
    }
}

/// The group `T ⋊ μ_r` with all elements enumerated.
#[derive(Clone, Debug)]
pub struct EllipticGroup {
    spec: EllipticGroupSpec,
    powers: Vec<Mat2>,
    elements: Vec<GElement>,
}

pub fn make_group(spec: &EllipticGroupSpec) -> EllipticGroup {
    let r = spec.r();
    let powers = (0..r).map(|k| spec.action.power(k)).collect();
    let mut elements = Vec::with_capacity(spec.translation_order() * r as usize);
    for x in 0..spec.a {
        for y in 0..spec.d {
            for k in 0..r {
                elements.push(GElement::new([x, y], k));
            }
        }
    }
    EllipticGroup {
        spec: spec.clone(),
        powers,
        elements,
    }
}

impl EllipticGroup {
    pub fn spec(&self) -> &EllipticGroupSpec {
        &self.spec
    }

    pub fn r(&self) -> u32 {
        self.spec.r()
    }

    /// Canonical element for the translation part `t` (any representative) and rotation `k`.
    pub fn element(&self, t: Vec2, k: i64) -> GElement {
        GElement::new(self.spec.reduce(t), k.rem_euclid(i64::from(self.r())) as u32)
    }

    pub fn translation(&self, t: Vec2) -> GElement {
        self.element(t, 0)
    }

    pub fn epsilon(&self) -> GElement {
        self.element([0, 0], 1)
    }

    pub fn translations(&self) -> Vec<GElement> {
        self.elements.iter().filter(|g| g.is_translation()).copied().collect()
    }

    pub fn is_canonical(&self, g: &GElement) -> bool {
        g.k < self.r() && self.spec.reduce(g.t) == g.t
    }

    /// Image of `g` in the rotation quotient `μ_r`.
    pub fn rotation(&self, g: &GElement) -> u32 {
        g.k
    }

    /// `T` is cyclic and `g` generates it.
    pub fn generates_translations(&self, g: &GElement) -> bool {
        g.is_translation() && self.element_order(g) == self.spec.translation_order()
    }
}

impl FiniteGroup for EllipticGroup {
    type Element = GElement;

    fn identity(&self) -> GElement {
        GElement::new([0, 0], 0)
    }

    fn multiply(&self, a: &GElement, b: &GElement) -> GElement {
        let mt = mat_vec(&self.powers[a.k as usize], b.t);
        GElement::new(
            self.spec.reduce([a.t[0] + mt[0], a.t[1] + mt[1]]),
            (a.k + b.k) % self.r(),
        )
    }

    fn inverse(&self, a: &GElement) -> GElement {
        // (t, k)^-1 = (-M^{-k} t, -k)
        let k = (self.r() - a.k) % self.r();
        let mt = mat_vec(&self.powers[k as usize], a.t);
        GElement::new(self.spec.reduce([-mt[0], -mt[1]]), k)
    }

    fn elements(&self) -> Vec<GElement> {
        self.elements.clone()
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn is_abelian(&self) -> bool {
        self.spec.is_abelian()
    }
}

/// `m_1 / m_2` for the generator `a' + b'x` of `Λ / m_2`.
pub fn index_m(r: u32, a: i64, b: i64) -> Result<i64, EllipticError> {
    match r {
        3 => Ok(a * a - a * b + b * b),
        4 => Ok(a * a + b * b),
        6 => Ok(a * a + a * b + b * b),
        2 => Err(EllipticError::UnsupportedR(2)),
        _ => Err(EllipticError::UnsupportedR(r)),
    }
}

/// Builds `Λ` from the invariants `m_1, m_2` and, for `r >= 3`, the primitive generator `a' + b'x`.
pub fn from_index_data(r: u32, m1: i64, m2: i64, a: i64, b: i64) -> Result<EllipticGroupSpec, EllipticError> {
    if m1 <= 0 || m2 <= 0 {
        return Err(EllipticError::InconsistentIndex(format!("m1 = {m1}, m2 = {m2} must be positive")));
    }
    if r == 2 {
        if m1 % m2 != 0 {
            return Err(EllipticError::InconsistentIndex(format!("m2 = {m2} does not divide m1 = {m1}")));
        }
        return EllipticGroupSpec::new(2, [[m1, 0], [0, m2]]);
    }
    let action = CyclotomicAction::new(r)?;
    if a.gcd(&b) != 1 {
        return Err(EllipticError::InconsistentIndex(format!("{a} + {b}x is not primitive")));
    }
    let m = index_m(r, a, b)?;
    if m1 != m2 * m {
        return Err(EllipticError::InconsistentIndex(format!(
            "m1 = {m1} but m2 * index = {m2} * {m}"
        )));
    }
    let v = [m2 * a, m2 * b];
    let xv = mat_vec(&action.m, v);
    EllipticGroupSpec::new(r, [v, xv])
}

/// Invariants of the abelianization of `Λ_T ⋊ μ_r`.
pub fn gcal_ab(r: u32) -> Result<AbelianInvariants, EllipticError> {
    let action = CyclotomicAction::new(r)?;
    Ok(action
        .lattice_coinvariants()
        .direct_sum(&AbelianInvariants::new(0, &[u64::from(r)])))
}

/// `⟨e1, e2, ε | [e1,e2], ε^r, ε e_j ε^-1 = M e_j⟩`.
pub fn gcal_presentation(r: u32) -> Result<Presentation, EllipticError> {
    let action = CyclotomicAction::new(r)?;
    let m = action.m;
    let lattice_word = |v: Vec2| -> Word {
        let part = |g: usize, n: i64| {
            if n >= 0 {
                Word::gen(g).pow(n as u32)
            } else {
                Word::inv(g).pow((-n) as u32)
            }
        };
        part(0, v[0]).concat(&part(1, v[1]))
    };
    let eps = Word::gen(2);
    let mut relators = vec![Word::commutator(&Word::gen(0), &Word::gen(1)), eps.pow(r)];
    for j in 0..2 {
        let conj = eps.concat(&Word::gen(j)).concat(&eps.inverse());
        relators.push(conj.concat(&lattice_word([m[0][j], m[1][j]]).inverse()));
    }
    Ok(Presentation::with_labels(
        3,
        relators,
        vec!["e1".into(), "e2".into(), "eps".into()],
    ))
}

/// Cross-check of [`gcal_ab`] through the presentation.
pub fn gcal_ab_from_presentation(r: u32) -> Result<AbelianInvariants, EllipticError> {
    Ok(abelianization(&gcal_presentation(r)?).invariants)
}

/// The five groups occurring in the tables of cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupPreset {
    Z3xMu3,
    Z2xMu4,
    Z22xMu2,
    Z2xMu2,
    Sporadic16,
}

impl GroupPreset {
    pub const ALL: [GroupPreset; 5] = [
        GroupPreset::Z3xMu3,
        GroupPreset::Z2xMu4,
        GroupPreset::Z22xMu2,
        GroupPreset::Z2xMu2,
        GroupPreset::Sporadic16,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GroupPreset::Z3xMu3 => "Z3xMu3",
            GroupPreset::Z2xMu4 => "Z2xMu4",
            GroupPreset::Z22xMu2 => "Z22xMu2",
            GroupPreset::Z2xMu2 => "Z2xMu2",
            GroupPreset::Sporadic16 => "Sporadic16",
        }
    }

    pub fn spec(&self) -> EllipticGroupSpec {
        let (r, cols) = match self {
            GroupPreset::Z3xMu3 => (3, [[1, -1], [1, 2]]),
            GroupPreset::Z2xMu4 => (4, [[1, 1], [-1, 1]]),
            GroupPreset::Z22xMu2 => (2, [[2, 0], [0, 2]]),
            GroupPreset::Z2xMu2 => (2, [[2, 0], [0, 1]]),
            GroupPreset::Sporadic16 => (4, [[2, 0], [0, 2]]),
        };
        EllipticGroupSpec::new(r, cols).expect("preset lattices are valid")
    }

    pub fn group(&self) -> EllipticGroup {
        make_group(&self.spec())
    }

    /// Named translations: `t`, and `s` when `T` has two generators.
    pub fn named_translations(&self) -> Vec<(&'static str, Vec2)> {
        match self {
            GroupPreset::Z22xMu2 | GroupPreset::Sporadic16 => vec![("t", [1, 0]), ("s", [0, 1])],
            _ => vec![("t", [1, 0])],
        }
    }
}

impl fmt::Display for GroupPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupPreset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GroupPreset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group preset `{s}`"))
    }
}
