//! Monodromy data of `C → C/G = B`, the normal-form moves, case labels and
//! simplification to minimal data.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::elliptic::{make_group, EllipticGroup, EllipticGroupSpec, GElement};
use crate::fpgroup::{check_homomorphism, orbifold_presentation, FiniteGroup, FiniteQuotientMap, Presentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("expected {expected} images for alpha/beta (h = {h}), got {got}")]
    WrongImageCount { h: usize, expected: usize, got: usize },
    #[error("{gammas} gamma images but {orders} recorded orders")]
    OrderCountMismatch { gammas: usize, orders: usize },
    #[error("gamma_{index} maps to {element}, which is not a translation")]
    GammaNotTranslation { index: usize, element: String },
    #[error("gamma_{index} has order {actual}, recorded order is {expected}")]
    GammaWrongOrder { index: usize, expected: u32, actual: u32 },
    #[error("gamma_{index} maps to the identity")]
    TrivialGamma { index: usize },
    #[error("product relator evaluates to {0}, not the identity")]
    RelatorFails(String),
    #[error("images generate a subgroup of index {index}")]
    NotSurjective { index: usize },
    #[error("Riemann-Hurwitz gives genus {0} for C, need at least 2")]
    GenusTooSmall(i64),
    #[error("Riemann-Hurwitz gives a non-integral genus")]
    NonIntegralGenus,
    #[error("branch orders {0:?} do not give a genus one cover of P^1")]
    NotGenusOne(Vec<u32>),
    #[error("invalid move: {0}")]
    InvalidParams(String),
    #[error("cannot reach a minimal normal form: {0}")]
    NotNormalizable(String),
}

fn element_order(g: &EllipticGroup, x: &GElement) -> u32 {
    g.element_order(x) as u32
}

/// Images of `α_1, β_1, ..., α_h, β_h, γ_1, ..., γ_k` in `G = T ⋊ μ_r`.
#[derive(Clone, Debug)]
pub struct MonodromyDatum {
    group: EllipticGroup,
    h: usize,
    ab_images: Vec<GElement>,
    gamma_images: Vec<GElement>,
    gamma_orders: Vec<u32>,
}

impl PartialEq for MonodromyDatum {
    fn eq(&self, other: &Self) -> bool {
        self.group.spec() == other.group.spec()
            && self.h == other.h
            && self.ab_images == other.ab_images
            && self.gamma_images == other.gamma_images
            && self.gamma_orders == other.gamma_orders
    }
}

impl Eq for MonodromyDatum {}

impl MonodromyDatum {
    /// Local orders are read off from the gamma images.
    pub fn new(group: &EllipticGroup, h: usize, ab_images: Vec<GElement>, gamma_images: Vec<GElement>) -> Self {
        let orders = gamma_images.iter().map(|x| element_order(group, x)).collect();
        Self::with_orders(group, h, ab_images, gamma_images, orders)
    }

    /// Images are canonicalized; nothing is validated yet.
    pub fn with_orders(
        group: &EllipticGroup,
        h: usize,
        ab_images: Vec<GElement>,
        gamma_images: Vec<GElement>,
        gamma_orders: Vec<u32>,
    ) -> Self {
        let canon = |v: Vec<GElement>| -> Vec<GElement> {
            v.into_iter()
                .map(|x| group.element(x.t, i64::from(x.k)))
                .collect()
        };
        Self {
            group: group.clone(),
            h,
            ab_images: canon(ab_images),
            gamma_images: canon(gamma_images),
            gamma_orders,
        }
    }

    pub fn from_spec(spec: &EllipticGroupSpec, h: usize, ab_images: Vec<GElement>, gamma_images: Vec<GElement>) -> Self {
        Self::new(&make_group(spec), h, ab_images, gamma_images)
    }

    pub fn group(&self) -> &EllipticGroup {
        &self.group
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn k(&self) -> usize {
        self.gamma_images.len()
    }

    pub fn ab_images(&self) -> &[GElement] {
        &self.ab_images
    }

    pub fn gamma_images(&self) -> &[GElement] {
        &self.gamma_images
    }

    pub fn gamma_orders(&self) -> &[u32] {
        &self.gamma_orders
    }

    pub fn alpha(&self, i: usize) -> GElement {
        self.ab_images[2 * i]
    }

    pub fn beta(&self, i: usize) -> GElement {
        self.ab_images[2 * i + 1]
    }

    /// All generator images in presentation order.
    pub fn images(&self) -> Vec<GElement> {
        let mut v = self.ab_images.clone();
        v.extend_from_slice(&self.gamma_images);
        v
    }

    pub fn presentation(&self) -> Presentation {
        orbifold_presentation(self.h, &self.gamma_orders)
    }

    pub fn validate(&self) -> Result<(), MonodromyError> {
        let g = &self.group;
        if self.ab_images.len() != 2 * self.h {
            return Err(MonodromyError::WrongImageCount {
                h: self.h,
                expected: 2 * self.h,
                got: self.ab_images.len(),
            });
        }
        if self.gamma_orders.len() != self.gamma_images.len() {
            return Err(MonodromyError::OrderCountMismatch {
                gammas: self.gamma_images.len(),
                orders: self.gamma_orders.len(),
            });
        }
        for (index, (x, &m)) in self.gamma_images.iter().zip(&self.gamma_orders).enumerate() {
            if !x.is_translation() {
                return Err(MonodromyError::GammaNotTranslation {
                    index: index + 1,
                    element: x.to_string(),
                });
            }
            let actual = element_order(g, x);
            if actual == 1 {
                return Err(MonodromyError::TrivialGamma { index: index + 1 });
            }
            if actual != m {
                return Err(MonodromyError::GammaWrongOrder {
                    index: index + 1,
                    expected: m,
                    actual,
                });
            }
        }
        let p = self.presentation();
        let value = g.evaluate(&self.images(), &p.relators[0]);
        if value != g.identity() {
            return Err(MonodromyError::RelatorFails(value.to_string()));
        }
        let generated = g.generated_subgroup(&self.images()).len();
        if generated != g.order() {
            return Err(MonodromyError::NotSurjective {
                index: g.order() / generated,
            });
        }
        let genus = self.genus_c()?;
        if genus < 2 {
            return Err(MonodromyError::GenusTooSmall(genus));
        }
        Ok(())
    }

    /// Riemann–Hurwitz: `2g - 2 = |G| (2h - 2 + Σ (1 - 1/m_j))`.
    pub fn genus_c(&self) -> Result<i64, MonodromyError> {
        riemann_hurwitz(self.group.order() as i64, self.h as i64, &self.gamma_orders)
    }

    pub fn quotient_map(&self) -> FiniteQuotientMap<EllipticGroup> {
        check_homomorphism(&self.presentation(), self.group.clone(), self.images())
            .expect("validated monodromy is a surjective homomorphism")
    }

    fn rebuild(&self, h: usize, ab: Vec<GElement>, gammas: Vec<GElement>, orders: Vec<u32>) -> Self {
        Self {
            group: self.group.clone(),
            h,
            ab_images: ab,
            gamma_images: gammas,
            gamma_orders: orders,
        }
    }
}

impl fmt::Display for MonodromyDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ab: Vec<String> = self.ab_images.iter().map(|x| x.to_string()).collect();
        let gs: Vec<String> = self.gamma_images.iter().map(|x| x.to_string()).collect();
        if gs.is_empty() {
            write!(f, "({})", ab.join(", "))
        } else {
            write!(f, "({}; {})", ab.join(", "), gs.join(", "))
        }
    }
}

pub fn riemann_hurwitz(order: i64, h: i64, local_orders: &[u32]) -> Result<i64, MonodromyError> {
    let mut twice = order * (2 * h - 2);
    for &m in local_orders {
        let m = i64::from(m);
        if m == 0 || order % m != 0 {
            return Err(MonodromyError::NonIntegralGenus);
        }
        twice += order - order / m;
    }
    if twice.is_odd() {
        return Err(MonodromyError::NonIntegralGenus);
    }
    Ok(twice / 2 + 1)
}

/// Monodromy of `E → E/G ≅ P^1`: images of `γ_1, ..., γ_n` with `γ_1 ⋯ γ_n = 1`.
#[derive(Clone, Debug)]
pub struct EllipticBranchDatum {
    group: EllipticGroup,
    gamma_images: Vec<GElement>,
    orders: Vec<u32>,
}

impl EllipticBranchDatum {
    pub fn new(group: &EllipticGroup, gamma_images: Vec<GElement>) -> Self {
        let gamma_images: Vec<GElement> = gamma_images
            .into_iter()
            .map(|x| group.element(x.t, i64::from(x.k)))
            .collect();
        let orders = gamma_images.iter().map(|x| element_order(group, x)).collect();
        Self {
            group: group.clone(),
            gamma_images,
            orders,
        }
    }

    pub fn group(&self) -> &EllipticGroup {
        &self.group
    }

    pub fn gamma_images(&self) -> &[GElement] {
        &self.gamma_images
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn presentation(&self) -> Presentation {
        orbifold_presentation(0, &self.orders)
    }

    pub fn validate(&self) -> Result<(), MonodromyError> {
        let g = &self.group;
        if let Some(index) = self.orders.iter().position(|&m| m == 1) {
            return Err(MonodromyError::TrivialGamma { index: index + 1 });
        }
        let value = g.evaluate(&self.gamma_images, &self.presentation().relators[0]);
        if value != g.identity() {
            return Err(MonodromyError::RelatorFails(value.to_string()));
        }
        let generated = g.generated_subgroup(&self.gamma_images).len();
        if generated != g.order() {
            return Err(MonodromyError::NotSurjective {
                index: g.order() / generated,
            });
        }
        if riemann_hurwitz(g.order() as i64, 0, &self.orders)? != 1 {
            return Err(MonodromyError::NotGenusOne(self.orders.clone()));
        }
        Ok(())
    }

    pub fn quotient_map(&self) -> FiniteQuotientMap<EllipticGroup> {
        check_homomorphism(&self.presentation(), self.group.clone(), self.gamma_images.clone())
            .expect("validated branch datum is a surjective homomorphism")
    }
}

impl fmt::Display for EllipticBranchDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.gamma_images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", gs.join(", "))
    }
}

/// Changes of geometric generators. Handles and gammas are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `α_i ↦ α_i γ_j^{±1}`, or the same on `β_i`.
    A {
        handle: usize,
        on_beta: bool,
        gamma: usize,
        inverse: bool,
    },
    /// `α_i ↦ α_i β_i^{±1}`, or `β_i ↦ β_i α_i^{±1}`.
    B {
        handle: usize,
        on_beta: bool,
        inverse: bool,
    },
    /// New handle `i` is old handle `perm[i]`.
    PermuteHandles(Vec<usize>),
    /// New gamma `j` is old gamma `perm[j]`.
    PermuteGammas(Vec<usize>),
    /// `b_i ↦ b_i b_{i+1} a_{i+1}`, `b_{i+1} ↦ b_{i+1} a_i^-1`, `a_{i+1} ↦ a_{i+1} a_i^-1`.
    D { handle: usize },
}

fn check_permutation(perm: &[usize], n: usize) -> Result<(), MonodromyError> {
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(MonodromyError::InvalidParams(format!("{perm:?} is not a permutation of 0..{n}")));
    }
    Ok(())
}

pub fn apply_move(d: &MonodromyDatum, mv: &Move) -> Result<MonodromyDatum, MonodromyError> {
    let g = &d.group;
    let mut ab = d.ab_images.clone();
    let mut gammas = d.gamma_images.clone();
    let mut orders = d.gamma_orders.clone();
    let handle_ok = |i: usize| {
        if i < d.h {
            Ok(())
        } else {
            Err(MonodromyError::InvalidParams(format!("handle {i} out of range for h = {}", d.h)))
        }
    };
    let pow = |x: &GElement, inverse: bool| if inverse { g.inverse(x) } else { *x };
    match mv {
        Move::A {
            handle,
            on_beta,
            gamma,
            inverse,
        } => {
            handle_ok(*handle)?;
            let c = d.gamma_images.get(*gamma).ok_or_else(|| {
                MonodromyError::InvalidParams(format!("gamma {gamma} out of range for k = {}", d.k()))
            })?;
            let slot = 2 * handle + usize::from(*on_beta);
            ab[slot] = g.multiply(&ab[slot], &pow(c, *inverse));
        }
        Move::B {
            handle,
            on_beta,
            inverse,
        } => {
            handle_ok(*handle)?;
            let (a, b) = (2 * handle, 2 * handle + 1);
            if *on_beta {
                ab[b] = g.multiply(&ab[b], &pow(&ab[a], *inverse));
            } else {
                ab[a] = g.multiply(&ab[a], &pow(&ab[b], *inverse));
            }
        }
        Move::PermuteHandles(perm) => {
            check_permutation(perm, d.h)?;
            ab = perm
                .iter()
                .flat_map(|&p| [d.ab_images[2 * p], d.ab_images[2 * p + 1]])
                .collect();
        }
        Move::PermuteGammas(perm) => {
            check_permutation(perm, d.k())?;
            gammas = perm.iter().map(|&p| d.gamma_images[p]).collect();
            orders = perm.iter().map(|&p| d.gamma_orders[p]).collect();
        }
        Move::D { handle } => {
            let i = *handle;
            if i + 1 >= d.h {
                return Err(MonodromyError::InvalidParams(format!(
                    "move d needs handles {i} and {} but h = {}",
                    i + 1,
                    d.h
                )));
            }
            let (ai, bi, aj, bj) = (ab[2 * i], ab[2 * i + 1], ab[2 * i + 2], ab[2 * i + 3]);
            let ai_inv = g.inverse(&ai);
            ab[2 * i + 1] = g.multiply(&g.multiply(&bi, &bj), &aj);
            ab[2 * i + 3] = g.multiply(&bj, &ai_inv);
            ab[2 * i + 2] = g.multiply(&aj, &ai_inv);
        }
    }
    let out = d.rebuild(d.h, ab, gammas, orders);
    out.validate()
        .map_err(|e| MonodromyError::InvalidParams(format!("move {mv:?} gives an invalid monodromy: {e}")))?;
    Ok(out)
}

/// Normal-form labels for abelian and sporadic groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    I1,
    I2,
    I3,
    II,
    II1,
    II2,
    II3,
    III,
    /// Sporadic `III-k`, carrying `k`.
    SporadicIII(usize),
    IV(usize),
    V(usize),
    VStar(usize),
    VStar2(usize),
    VStar3(usize),
    VI,
    VIStar,
    VIStar2,
    VII,
    VIIStar,
    VIII,
    NotNormal,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::I1 => write!(f, "I-1"),
            CaseLabel::I2 => write!(f, "I-2"),
            CaseLabel::I3 => write!(f, "I-3"),
            CaseLabel::II => write!(f, "II"),
            CaseLabel::II1 => write!(f, "II-1"),
            CaseLabel::II2 => write!(f, "II-2"),
            CaseLabel::II3 => write!(f, "II-3"),
            CaseLabel::III => write!(f, "III"),
            CaseLabel::SporadicIII(k) => write!(f, "III-{k}"),
            CaseLabel::IV(k) => write!(f, "IV-{k}"),
            CaseLabel::V(k) => write!(f, "V-{k}"),
            CaseLabel::VStar(k) => write!(f, "V*-{k}"),
            CaseLabel::VStar2(k) => write!(f, "V**-{k}"),
            CaseLabel::VStar3(k) => write!(f, "V***-{k}"),
            CaseLabel::VI => write!(f, "VI"),
            CaseLabel::VIStar => write!(f, "VI*"),
            CaseLabel::VIStar2 => write!(f, "VI**"),
            CaseLabel::VII => write!(f, "VII"),
            CaseLabel::VIIStar => write!(f, "VII*"),
            CaseLabel::VIII => write!(f, "VIII"),
            CaseLabel::NotNormal => write!(f, "not normal"),
        }
    }
}

fn is_zero(x: &GElement) -> bool {
    x.t == [0, 0] && x.k == 0
}

fn add(g: &EllipticGroup, x: &GElement, y: &GElement) -> GElement {
    g.multiply(x, y)
}

/// `T ≅ (Z/2)^2`.
fn is_klein(g: &EllipticGroup) -> bool {
    let t = g.translations();
    t.len() == 4 && t.iter().all(|x| element_order(g, x) <= 2)
}

fn generates_t(g: &EllipticGroup, xs: &[GElement]) -> bool {
    g.generated_subgroup(xs).len() == g.spec().translation_order()
}

fn is_cyclic_t(g: &EllipticGroup) -> bool {
    let n = g.spec().translation_order();
    n > 1 && g.translations().iter().any(|x| element_order(g, x) as usize == n)
}

pub fn is_sporadic(g: &EllipticGroup) -> bool {
    g.r() == 4 && is_klein(g) && !g.spec().is_abelian()
}

pub fn classify(d: &MonodromyDatum) -> CaseLabel {
    if d.validate().is_err() || d.h == 0 {
        return CaseLabel::NotNormal;
    }
    let g = &d.group;
    let a1 = d.alpha(0);
    if a1.t != [0, 0] || a1.k.gcd(&g.r()) != 1 {
        return CaseLabel::NotNormal;
    }
    if d.ab_images[1..].iter().any(|x| !x.is_translation()) {
        return CaseLabel::NotNormal;
    }
    if g.spec().is_abelian() {
        classify_abelian(d)
    } else if is_sporadic(g) {
        classify_sporadic(d)
    } else {
        CaseLabel::NotNormal
    }
}

fn classify_abelian(d: &MonodromyDatum) -> CaseLabel {
    let g = &d.group;
    if g.r() == 6 || g.spec().translation_order() == 1 || d.h > 2 {
        return CaseLabel::NotNormal;
    }
    let b1 = d.beta(0);
    let k = d.k();
    let ts = &d.gamma_images;
    let klein = g.r() == 2 && is_klein(g);
    let cyclic = is_cyclic_t(g);
    let second_trivial = d.h == 1 || (is_zero(&d.alpha(1)) && is_zero(&d.beta(1)));
    if second_trivial {
        if is_zero(&b1) && k >= 2 && generates_t(g, &ts[..2]) {
            return CaseLabel::I1;
        }
        if k == 0 && d.h == 2 && cyclic && generates_t(g, &[b1]) {
            return CaseLabel::I2;
        }
        if klein && k >= 2 && !is_zero(&b1) && ts.iter().all(|t| *t == ts[0]) && ts[0] != b1 {
            return CaseLabel::I3;
        }
        return CaseLabel::NotNormal;
    }
    let (a2, b2) = (d.alpha(1), d.beta(1));
    if k == 0 {
        if klein {
            if !is_zero(&b1) && !is_zero(&a2) && a2 != b1 && (is_zero(&b2) || b2 == b1) {
                return CaseLabel::II;
            }
            if is_zero(&b1) && !is_zero(&a2) && !is_zero(&b2) && a2 != b2 {
                return CaseLabel::II1;
            }
        }
        if cyclic {
            if is_zero(&b1) && generates_t(g, &[a2]) && is_zero(&b2) {
                return CaseLabel::II2;
            }
            if generates_t(g, &[b1]) && !is_zero(&a2) && is_zero(&b2) {
                return CaseLabel::II3;
            }
        }
        return CaseLabel::NotNormal;
    }
    if klein && k % 2 == 0 {
        let e2 = ts[0];
        let e1 = a2;
        if ts.iter().all(|t| *t == e2)
            && !is_zero(&e1)
            && e1 != e2
            && (is_zero(&b1) || b1 == e1)
            && is_zero(&b2)
        {
            return CaseLabel::III;
        }
    }
    CaseLabel::NotNormal
}

fn classify_sporadic(d: &MonodromyDatum) -> CaseLabel {
    let g = &d.group;
    let eps = g.epsilon();
    // t and s are the translations not fixed by ε; t + s is fixed
    let moved: Vec<GElement> = g
        .translations()
        .into_iter()
        .filter(|x| g.multiply(&g.multiply(&eps, x), &g.inverse(&eps)) != *x)
        .collect();
    debug_assert_eq!(moved.len(), 2);
    for (e1, e2) in [(moved[0], moved[1]), (moved[1], moved[0])] {
        let label = classify_sporadic_with(d, e1, e2);
        if label != CaseLabel::NotNormal {
            return label;
        }
    }
    CaseLabel::NotNormal
}

fn classify_sporadic_with(d: &MonodromyDatum, e1: GElement, e2: GElement) -> CaseLabel {
    let g = &d.group;
    let f = add(g, &e1, &e2);
    let zero = g.identity();
    let ts = &d.gamma_images;
    let k = d.k();
    let all = |x: GElement| ts.iter().all(|t| *t == x);
    let b1 = d.beta(0);
    let rest_trivial = |from: usize| d.ab_images[from..].iter().all(is_zero);

    if k >= 1 && d.h <= 2 && rest_trivial(2) {
        if b1 == zero && k >= 3 && ts[0] == e1 && ts[1] == e2 {
            let tail = ts[2..].iter().fold(zero, |acc, x| add(g, &acc, x));
            if tail == f {
                return CaseLabel::SporadicIII(k);
            }
        }
        if b1 == zero && k % 2 == 0 && all(e2) {
            return CaseLabel::IV(k);
        }
        if b1 == e1 && k % 2 == 1 && all(f) {
            return CaseLabel::V(k);
        }
    }
    if k >= 1 && d.h == 2 && d.alpha(1) == zero && d.beta(1) == e1 {
        if b1 == zero && k % 2 == 0 && all(e2) {
            return CaseLabel::VStar(k);
        }
        if b1 == zero && k % 2 == 0 && all(f) {
            return CaseLabel::VStar2(k);
        }
        if b1 == e1 && k % 2 == 1 && all(f) {
            return CaseLabel::VStar3(k);
        }
    }
    if k == 0 && d.h == 2 {
        let (a2, b2) = (d.alpha(1), d.beta(1));
        if b1 == zero && a2 == e1 && b2 == e2 {
            return CaseLabel::VI;
        }
        if b1 == f && a2 == e1 && b2 == zero {
            return CaseLabel::VIStar;
        }
        if b1 == f && a2 == e1 && b2 == e2 {
            return CaseLabel::VIStar2;
        }
        if b1 == zero && a2 == e1 && b2 == zero {
            return CaseLabel::VIII;
        }
    }
    if k == 0 && d.h == 3 && b1 == zero && d.beta(1) == zero && d.beta(2) == zero && d.alpha(2) == e2 {
        if d.alpha(1) == f {
            return CaseLabel::VII;
        }
        if d.alpha(1) == e1 {
            return CaseLabel::VIIStar;
        }
    }
    CaseLabel::NotNormal
}

/// Whether `d`, carrying `label`, is one of the minimal normal forms.
pub fn is_minimal(d: &MonodromyDatum, label: CaseLabel) -> bool {
    let r = d.group.r();
    let k = d.k();
    match (d.h, label) {
        (2, CaseLabel::I2 | CaseLabel::II | CaseLabel::II1 | CaseLabel::II2 | CaseLabel::II3) => k == 0,
        (2, CaseLabel::III) => k == 2,
        (1, CaseLabel::I1) => (k == 2 && matches!(r, 2..=4)) || (k == 3 && r == 2),
        (1, CaseLabel::I3) => k == 2,
        (_, CaseLabel::IV(2) | CaseLabel::V(1) | CaseLabel::VStar(2) | CaseLabel::VStar2(2)) => true,
        (_, CaseLabel::VStar3(1)) => true,
        (
            _,
            CaseLabel::VI
            | CaseLabel::VIStar
            | CaseLabel::VIStar2
            | CaseLabel::VII
            | CaseLabel::VIIStar
            | CaseLabel::VIII,
        ) => true,
        _ => false,
    }
}

/// One simplification step. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplifyStep {
    /// Remove `γ_i, γ_j` whose images cancel.
    CancelPair(usize, usize),
    /// Replace the last two gammas by one with the product image.
    MergeLast,
    /// Remove handle `i`, whose images are trivial.
    DropHandle(usize),
}

impl fmt::Display for SimplifyStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplifyStep::CancelPair(i, j) => write!(f, "cancel gamma_{} and gamma_{}", i + 1, j + 1),
            SimplifyStep::MergeLast => write!(f, "merge the last two gammas"),
            SimplifyStep::DropHandle(i) => write!(f, "drop trivial handle {}", i + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Simplification {
    pub steps: Vec<(SimplifyStep, MonodromyDatum, CaseLabel)>,
    pub minimal: MonodromyDatum,
    pub label: CaseLabel,
}

fn without_pair<T: Copy>(v: &[T], i: usize, j: usize) -> Vec<T> {
    v.iter()
        .enumerate()
        .filter(|(n, _)| *n != i && *n != j)
        .map(|(_, x)| *x)
        .collect()
}

fn step_candidates(d: &MonodromyDatum) -> Vec<(SimplifyStep, MonodromyDatum)> {
    let g = &d.group;
    let k = d.k();
    let mut out = Vec::new();
    // cancelling pairs, last pair first
    for j in (1..k).rev() {
        for i in (0..j).rev() {
            if is_zero(&add(g, &d.gamma_images[i], &d.gamma_images[j])) {
                let nd = d.rebuild(
                    d.h,
                    d.ab_images.clone(),
                    without_pair(&d.gamma_images, i, j),
                    without_pair(&d.gamma_orders, i, j),
                );
                out.push((SimplifyStep::CancelPair(i, j), nd));
            }
        }
    }
    if k >= 3 {
        let merged = add(g, &d.gamma_images[k - 2], &d.gamma_images[k - 1]);
        if !is_zero(&merged) {
            let mut gammas = d.gamma_images[..k - 2].to_vec();
            let mut orders = d.gamma_orders[..k - 2].to_vec();
            gammas.push(merged);
            orders.push(element_order(g, &merged));
            out.push((SimplifyStep::MergeLast, d.rebuild(d.h, d.ab_images.clone(), gammas, orders)));
        }
    }
    for i in (1..d.h).rev() {
        if is_zero(&d.alpha(i)) && is_zero(&d.beta(i)) {
            let mut ab = d.ab_images.clone();
            ab.drain(2 * i..2 * i + 2);
            out.push((
                SimplifyStep::DropHandle(i),
                d.rebuild(d.h - 1, ab, d.gamma_images.clone(), d.gamma_orders.clone()),
            ));
            break;
        }
    }
    out
}

/// Applies simplification steps until a minimal normal form is reached.
///
/// Each round takes the first candidate (cancelling pair, then merge, then
/// dropping a handle) that is again a valid monodromy in normal form; failing
/// that, the first one that is merely valid.
pub fn simplify(d: &MonodromyDatum) -> Result<Simplification, MonodromyError> {
    d.validate()?;
    let mut current = d.clone();
    let mut steps = Vec::new();
    loop {
        let label = classify(&current);
        if label == CaseLabel::NotNormal {
            return Err(MonodromyError::NotNormalizable(format!("{current} is not in a normal form")));
        }
        if is_minimal(&current, label) {
            return Ok(Simplification {
                steps,
                minimal: current,
                label,
            });
        }
        let candidates: Vec<_> = step_candidates(&current)
            .into_iter()
            .filter(|(_, nd)| nd.validate().is_ok())
            .collect();
        let pick = candidates
            .iter()
            .position(|(_, nd)| classify(nd) != CaseLabel::NotNormal)
            .or(if candidates.is_empty() { None } else { Some(0) });
        match pick {
            Some(i) => {
                let (step, nd) = candidates.into_iter().nth(i).expect("index in range");
                let l = classify(&nd);
                steps.push((step, nd.clone(), l));
                current = nd;
            }
            None => {
                return Err(MonodromyError::NotNormalizable(format!(
                    "{current} ({label}) admits no simplification step"
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::GroupPreset;

    fn el(t: [i64; 2], k: u32) -> GElement {
        GElement::new(t, k)
    }

    fn z3() -> EllipticGroup {
        GroupPreset::Z3xMu3.group()
    }

    const E: GElement = GElement { t: [0, 0], k: 1 };
    const O: GElement = GElement { t: [0, 0], k: 0 };

    #[test]
    fn big_case_is_valid() {
        let g = z3();
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![el([1, 0], 0), el([2, 0], 0)]);
        assert_eq!(d.validate(), Ok(()));
        assert_eq!(d.gamma_orders(), &[3, 3]);
        assert_eq!(d.genus_c(), Ok(7));
        assert_eq!(classify(&d), CaseLabel::I1);
    }

    #[test]
    fn relator_failure() {
        let g = z3();
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![el([1, 0], 0), el([1, 0], 0)]);
        assert!(matches!(d.validate(), Err(MonodromyError::RelatorFails(_))));
    }

    #[test]
    fn rotation_only_group_has_genus_one() {
        let g = make_group(&EllipticGroupSpec::new(3, [[1, 0], [0, 1]]).unwrap());
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![]);
        assert_eq!(d.validate(), Err(MonodromyError::GenusTooSmall(1)));
    }

    #[test]
    fn gamma_must_be_translation_with_recorded_order() {
        let g = z3();
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![el([0, 0], 1), el([0, 0], 2)]);
        assert!(matches!(d.validate(), Err(MonodromyError::GammaNotTranslation { index: 1, .. })));
        let d = MonodromyDatum::with_orders(&g, 1, vec![E, O], vec![el([1, 0], 0), el([2, 0], 0)], vec![3, 6]);
        assert_eq!(
            d.validate(),
            Err(MonodromyError::GammaWrongOrder {
                index: 2,
                expected: 6,
                actual: 3
            })
        );
    }

    #[test]
    fn not_surjective() {
        let g = z3();
        let d = MonodromyDatum::new(&g, 2, vec![E, O, O, O], vec![]);
        assert_eq!(d.validate(), Err(MonodromyError::NotSurjective { index: 3 }));
    }

    #[test]
    fn genus_values() {
        let g = GroupPreset::Z2xMu2.group();
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![el([1, 0], 0), el([1, 0], 0)]);
        assert_eq!(d.genus_c(), Ok(3));
        let d = MonodromyDatum::new(&z3(), 2, vec![E, el([1, 0], 0), O, O], vec![]);
        assert_eq!(d.genus_c(), Ok(10));
        assert_eq!(riemann_hurwitz(4, 0, &[3]), Err(MonodromyError::NonIntegralGenus));
    }

    #[test]
    fn moves() {
        let g = z3();
        let t = el([1, 0], 0);
        let t2 = el([2, 0], 0);
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![t, t2]);

        let swapped = apply_move(&d, &Move::PermuteGammas(vec![1, 0])).unwrap();
        assert_eq!(swapped.gamma_images(), &[g.element(t2.t, 0), g.element(t.t, 0)]);

        let a = apply_move(
            &d,
            &Move::A {
                handle: 0,
                on_beta: false,
                gamma: 0,
                inverse: false,
            },
        )
        .unwrap();
        assert_eq!(a.alpha(0), g.multiply(&E, &g.element(t.t, 0)));
        assert_eq!(a.genus_c(), d.genus_c());

        // three b-moves: (a, b) -> (b^-1, b a b^-1)
        let h = GroupPreset::Sporadic16.group();
        let ts = h.translation([1, 1]);
        let d = MonodromyDatum::new(&h, 1, vec![h.epsilon(), h.translation([1, 0])], vec![ts]);
        assert_eq!(d.validate(), Ok(()));
        let seq = [(false, true), (true, false), (false, true)];
        let mut cur = d.clone();
        for (on_beta, inverse) in seq {
            cur = apply_move(
                &cur,
                &Move::B {
                    handle: 0,
                    on_beta,
                    inverse,
                },
            )
            .unwrap();
        }
        let (a0, b0) = (d.alpha(0), d.beta(0));
        assert_eq!(cur.alpha(0), h.inverse(&b0));
        assert_eq!(cur.beta(0), h.multiply(&h.multiply(&b0, &a0), &h.inverse(&b0)));
    }

    #[test]
    fn move_errors() {
        let g = z3();
        let d = MonodromyDatum::new(&g, 2, vec![E, el([1, 0], 0), O, O], vec![]);
        assert!(matches!(apply_move(&d, &Move::D { handle: 1 }), Err(MonodromyError::InvalidParams(_))));
        assert!(matches!(
            apply_move(&d, &Move::PermuteHandles(vec![0, 0])),
            Err(MonodromyError::InvalidParams(_))
        ));
        let moved = apply_move(&d, &Move::D { handle: 0 }).unwrap();
        assert_eq!(moved.validate(), Ok(()));
        assert_eq!(moved.genus_c(), d.genus_c());
    }

    #[test]
    fn classify_examples() {
        let g = z3();
        let t = el([1, 0], 0);
        assert_eq!(classify(&MonodromyDatum::new(&g, 2, vec![E, t, O, O], vec![])), CaseLabel::I2);
        let k = GroupPreset::Z22xMu2.group();
        let (t, s) = (k.translation([1, 0]), k.translation([0, 1]));
        assert_eq!(classify(&MonodromyDatum::new(&k, 1, vec![E, t], vec![s, s])), CaseLabel::I3);
        let h = GroupPreset::Sporadic16.group();
        let (t, s, ts) = (h.translation([1, 0]), h.translation([0, 1]), h.translation([1, 1]));
        assert_eq!(
            classify(&MonodromyDatum::new(&h, 2, vec![h.epsilon(), ts, t, O], vec![])),
            CaseLabel::VIStar
        );
        assert_eq!(classify(&MonodromyDatum::new(&h, 2, vec![h.epsilon(), O, s, O], vec![])), CaseLabel::VIII);
    }

    #[test]
    fn simplify_abelian_four_points() {
        let g = GroupPreset::Z2xMu2.group();
        let t = g.translation([1, 0]);
        let d = MonodromyDatum::new(&g, 1, vec![E, O], vec![t, t, t, t]);
        assert_eq!(classify(&d), CaseLabel::I1);
        let s = simplify(&d).unwrap();
        assert_eq!(s.steps.len(), 1);
        assert_eq!(s.steps[0].0, SimplifyStep::CancelPair(2, 3));
        assert_eq!(s.label, CaseLabel::I1);
        assert_eq!(s.minimal.k(), 2);
    }

    #[test]
    fn simplify_sporadic_iii4() {
        let h = GroupPreset::Sporadic16.group();
        let (t, s) = (h.translation([1, 0]), h.translation([0, 1]));
        let d = MonodromyDatum::new(&h, 1, vec![h.epsilon(), O], vec![t, s, t, s]);
        assert_eq!(classify(&d), CaseLabel::SporadicIII(4));
        let out = simplify(&d).unwrap();
        assert_eq!(out.label, CaseLabel::IV(2));
        for (_, nd, _) in &out.steps {
            assert_eq!(nd.validate(), Ok(()));
        }
    }

    #[test]
    fn simplify_already_minimal() {
        let g = z3();
        let d = MonodromyDatum::new(&g, 2, vec![E, el([1, 0], 0), O, O], vec![]);
        let out = simplify(&d).unwrap();
        assert!(out.steps.is_empty());
        assert_eq!(out.label, CaseLabel::I2);
    }

    #[test]
    fn simplify_rejects_non_normal() {
        let g = z3();
        // α_1 is not a pure rotation
        let d = MonodromyDatum::new(&g, 2, vec![el([1, 0], 1), el([1, 0], 0), O, O], vec![]);
        assert_eq!(d.validate(), Ok(()));
        assert!(matches!(simplify(&d), Err(MonodromyError::NotNormalizable(_))));
    }

    #[test]
    fn elliptic_branch_data() {
        let g = z3();
        let e = EllipticBranchDatum::new(&g, vec![E, el([1, 0], 1), el([2, 0], 1)]);
        assert_eq!(e.validate(), Ok(()));
        let bad = EllipticBranchDatum::new(&g, vec![E, E, E]);
        assert_eq!(bad.validate(), Err(MonodromyError::NotSurjective { index: 3 }));
    }
}
