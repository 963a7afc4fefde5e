//! Oracles shared by the property tests and the acceptance run.
#![allow(dead_code)]

use autz::elliptic::{from_index_data, index_m, make_group, EllipticGroup, EllipticGroupSpec, GElement};
use autz::fpgroup::FiniteGroup;
use autz::linalg::{abelian_invariants, hermite_normal_form, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

pub const CASES: u32 = 1000;

pub fn leibniz(m: &[Vec<i128>]) -> i128 {
    fn perms(n: usize) -> Vec<(Vec<usize>, i128)> {
        if n == 0 {
            return vec![(vec![], 1)];
        }
        let mut out = Vec::new();
        for (p, s) in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // inserting n-1 at pos moves it past (n-1-pos) elements
                let sign = if (n - 1 - pos) % 2 == 0 { s } else { -s };
                out.push((q, sign));
            }
        }
        out
    }
    perms(m.len())
        .into_iter()
        .map(|(p, s)| s * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<i128>())
        .sum()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all k x k minors; 0 when they all vanish.
pub fn determinantal_divisor(a: &[Vec<i64>], k: usize) -> i128 {
    let (r, c) = (a.len(), a.first().map_or(0, Vec::len));
    let mut g = 0i128;
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let minor: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect()).collect();
            g = g.gcd(&leibniz(&minor));
        }
    }
    g
}

pub fn rank(a: &[Vec<i64>]) -> usize {
    let n = a.len().min(a.first().map_or(0, Vec::len));
    (1..=n).rev().find(|&k| determinantal_divisor(a, k) != 0).unwrap_or(0)
}

pub fn to_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}

pub fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

/// Matrices of low rank built as products, to exercise repeated and large invariant factors.
pub fn product_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=3, 1usize..=4).prop_flat_map(|(r, k, c)| {
        (
            prop::collection::vec(prop::collection::vec(-4i64..=4, k), r),
            prop::collection::vec(prop::collection::vec(-4i64..=4, c), k),
        )
            .prop_map(|(x, y)| {
                x.iter()
                    .map(|row| (0..y[0].len()).map(|j| row.iter().zip(&y).map(|(a, yr)| a * yr[j]).sum()).collect())
                    .collect()
            })
    })
}

pub fn check_snf(a: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let m = IntMatrix::from_rows(a[0].len(), a);
    let snf = smith_normal_form(&m);
    prop_assert_eq!(&(&snf.u * &m) * &snf.v, snf.d.clone());
    prop_assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
    prop_assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
    for i in 0..snf.d.rows() {
        for j in 0..snf.d.cols() {
            if i != j {
                prop_assert!(snf.d[(i, j)].is_zero());
            }
        }
    }
    let diag = snf.diagonal();
    for w in diag.windows(2) {
        prop_assert!(!w[0].is_negative() && !w[1].is_negative());
        if w[0].is_zero() {
            prop_assert!(w[1].is_zero());
        } else {
            prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
        }
    }
    // d_1 ... d_k equals the k-th determinantal divisor
    let mut prod = BigInt::from(1);
    for (k, d) in diag.iter().enumerate() {
        prod *= d;
        prop_assert_eq!(prod.clone(), BigInt::from(determinantal_divisor(a, k + 1)));
    }
    // Z^cols / rowspace: free rank cols - rank, torsion the non-unit factors
    let inv = abelian_invariants(a[0].len(), &m);
    prop_assert_eq!(inv.free_rank, a[0].len() - rank(a));
    let torsion: Vec<BigInt> = diag.into_iter().filter(|d| *d > BigInt::from(1)).collect();
    prop_assert_eq!(inv.torsion, torsion);
    Ok(())
}

pub fn check_hnf(a: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let m = IntMatrix::from_rows(a[0].len(), a);
    let h = hermite_normal_form(&m);
    prop_assert_eq!(h.rows(), m.rows());
    let hr = to_rows(&h);
    // echelon shape: each nonzero column's first nonzero row strictly increases
    let mut last: Option<usize> = None;
    let mut seen_zero = false;
    for j in 0..h.cols() {
        match (0..h.rows()).find(|&i| hr[i][j] != 0) {
            None => seen_zero = true,
            Some(p) => {
                prop_assert!(!seen_zero, "zero column before a pivot column");
                prop_assert!(last.is_none_or(|l| p > l));
                prop_assert!(hr[p][j] > 0);
                for jj in 0..j {
                    prop_assert!((0..hr[p][j]).contains(&hr[p][jj]), "entry left of pivot not reduced");
                }
                last = Some(p);
            }
        }
    }
    // same column lattice: equal rank and equal top divisor for m, h and [m | h]
    let joined: Vec<Vec<i64>> = a.iter().zip(&hr).map(|(x, y)| x.iter().chain(y).copied().collect()).collect();
    let k = rank(a);
    prop_assert_eq!(rank(&hr), k);
    prop_assert_eq!(rank(&joined), k);
    if k > 0 {
        let g = determinantal_divisor(a, k);
        prop_assert_eq!(determinantal_divisor(&hr, k), g);
        prop_assert_eq!(determinantal_divisor(&joined, k), g);
    }
    // idempotent
    prop_assert_eq!(hermite_normal_form(&h), h);
    Ok(())
}

pub struct Sample {
    pub r: u32,
    pub m1: i64,
    pub m2: i64,
    pub a: i64,
    pub b: i64,
    pub spec: EllipticGroupSpec,
}

pub fn sweep() -> Vec<Sample> {
    let mut out = Vec::new();
    for r in [3u32, 4, 6] {
        for m2 in 1..=3i64 {
            for a in -2..=3i64 {
                for b in -2..=2i64 {
                    if a.gcd(&b) != 1 {
                        continue;
                    }
                    let m1 = m2 * index_m(r, a, b).unwrap();
                    if r as i64 * m1 * m2 > 400 {
                        continue;
                    }
                    let spec = from_index_data(r, m1, m2, a, b).unwrap();
                    out.push(Sample { r, m1, m2, a, b, spec });
                }
            }
        }
    }
    for m1 in 1..=6i64 {
        for m2 in (1..=m1).filter(|m2| m1 % m2 == 0) {
            let spec = from_index_data(2, m1, m2, 0, 0).unwrap();
            out.push(Sample { r: 2, m1, m2, a: 0, b: 0, spec });
        }
    }
    out
}

pub fn center_in_t(g: &EllipticGroup) -> Vec<GElement> {
    g.center().into_iter().filter(GElement::is_translation).collect()
}

pub fn exponent(g: &EllipticGroup, xs: &[GElement]) -> u64 {
    xs.iter().map(|x| g.element_order(x) as u64).fold(1, |a, b| a.lcm(&b))
}


impl Sample {
    pub fn tag(&self) -> String {
        format!("r={} m1={} m2={} ({},{})", self.r, self.m1, self.m2, self.a, self.b)
    }
}

/// Bounds on Z(G), |Z| > 4 only for abelian G, the sporadic case, and for
/// nonabelian r = 3, 4 the divisibility criterion for Z(G) ∩ T.
/// Returns `Some(true/false)` for which branch of that criterion applied.
pub fn check_center(s: &Sample) -> Result<Option<bool>, String> {
    let g = make_group(&s.spec);
    let z = g.center();
    let zt = center_in_t(&g);
    let tag = s.tag();
    let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(format!("{tag}: {what}")) };
    ensure(g.is_abelian() == s.spec.is_abelian(), "abelian test disagrees")?;
    // Z(G) ∩ T inside (Z/2)^2, Z/3, Z/2, 0 for r = 2, 3, 4, 6
    let (max_t, max_exp) = match s.r {
        2 => (4, 2),
        3 => (3, 3),
        4 => (2, 2),
        _ => (1, 1),
    };
    if !g.is_abelian() {
        ensure(zt.len() <= max_t, "Z ∩ T too large")?;
        ensure(max_exp % exponent(&g, &zt) == 0, "Z ∩ T has the wrong exponent")?;
    }
    ensure(z.len() <= max_t * s.r as usize, "Z too large")?;
    ensure(z.len() <= 4 || g.is_abelian(), "|Z| > 4 for nonabelian G")?;
    let sporadic = s.r == 4 && z.iter().any(|x| !x.is_translation()) && !g.is_abelian();
    if sporadic {
        ensure(g.order() == 16 && z.len() == 4, "sporadic center")?;
    } else if !g.is_abelian() && s.r != 6 {
        ensure(z.len() == zt.len(), "center leaves T")?;
    }
    if g.is_abelian() || s.r == 2 {
        return Ok(None);
    }
    let (predicted, branch) = match s.r {
        3 => {
            let b = (s.m2 * (s.a + s.b)) % 3 == 0;
            (if b { 3 } else { 1 }, Some(b))
        }
        4 => {
            let b = s.m1 % 2 == 0;
            (if b { 2 } else { 1 }, Some(b))
        }
        _ => (1, None),
    };
    ensure(zt.len() == predicted, &format!("|Z ∩ T| = {}, predicted {predicted}", zt.len()))?;
    Ok(branch)
}
