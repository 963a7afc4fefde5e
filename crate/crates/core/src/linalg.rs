//! Exact integer matrix algebra.
//!
//! Everything here works over arbitrary-precision integers: pivots in a Smith
//! normal form computation can grow quickly, and silent overflow would corrupt
//! the torsion part of every homology group computed downstream.
//!
//! The main entry points are [`smith_normal_form`], [`hermite_normal_form`],
//! [`abelian_invariants`] and [`AbelianQuotient`], which turns a relation matrix
//! into canonical coordinates on the quotient `Z^n / rowspan(R)`.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have length `cols`.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "row {i} has length {} != {cols}", row.len());
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has length {} != {cols}", row.len());
            data.extend(row);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Entry of largest absolute value (zero for an empty matrix).
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Determinant by fraction-free Bareiss elimination. Panics if not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += vi * a;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let add = s * factor;
                self.data[dst * self.cols + j] += add;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let add = s * factor;
                self.data[i * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal in Smith form.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// The diagonal of `D` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let (d, u, v) = snf_core(m.clone(), true, true);
    SnfDecomposition {
        u: u.expect("left transform requested"),
        d,
        v: v.expect("right transform requested"),
    }
}

fn pivot_search(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => x.magnitude() < a[b].magnitude(),
            };
            if better {
                best = Some((i, j));
                if x.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Core Smith normal form loop. Row operations are mirrored into `U`, column
/// operations into `V`, each only when requested.
fn snf_core(
    mut a: IntMatrix,
    want_u: bool,
    want_v: bool,
) -> (IntMatrix, Option<IntMatrix>, Option<IntMatrix>) {
    let (m, n) = (a.rows, a.cols);
    let mut u = want_u.then(|| IntMatrix::identity(m));
    let mut v = want_v.then(|| IntMatrix::identity(n));

    for t in 0..m.min(n) {
        'pivot: loop {
            let Some((pi, pj)) = pivot_search(&a, t) else {
                return (a, u, v);
            };
            a.swap_rows(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            a.swap_cols(t, pj);
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }

            let mut clean = true;
            let p = a[(t, t)].clone();
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&p);
                a.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&p);
                a.add_col_multiple(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }

            // Row and column are cleared; enforce divisibility of the remaining block.
            for i in t + 1..m {
                for j in t + 1..n {
                    if !a[(i, j)].is_multiple_of(&p) {
                        let one = BigInt::one();
                        a.add_row_multiple(t, i, &one);
                        if let Some(u) = u.as_mut() {
                            u.add_row_multiple(t, i, &one);
                        }
                        continue 'pivot;
                    }
                }
            }
            if p.is_negative() {
                a.negate_row(t);
                if let Some(u) = u.as_mut() {
                    u.negate_row(t);
                }
            }
            break;
        }
    }
    (a, u, v)
}

/// Column-style Hermite normal form.
///
/// The result has the same column lattice as `m`. Pivot rows strictly increase
/// from left to right, pivots are positive, entries left of a pivot in its row
/// are reduced into `[0, pivot)`, and all zero columns sit at the right.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut p = 0;
    for i in 0..rows {
        if p == cols {
            break;
        }
        // Euclid on row i over columns p.. until only column p is nonzero.
        loop {
            let mut best: Option<usize> = None;
            for j in p..cols {
                if !a[(i, j)].is_zero()
                    && best.is_none_or(|b| a[(i, j)].magnitude() < a[(i, b)].magnitude())
                {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            a.swap_cols(p, b);
            let piv = a[(i, p)].clone();
            let mut done = true;
            for j in p + 1..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let q = -a[(i, j)].div_floor(&piv);
                a.add_col_multiple(j, p, &q);
                if !a[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(i, p)].is_zero() {
            continue;
        }
        if a[(i, p)].is_negative() {
            a.negate_col(p);
        }
        let piv = a[(i, p)].clone();
        for j in 0..p {
            let q = -a[(i, j)].div_floor(&piv);
            a.add_col_multiple(j, p, &q);
        }
        p += 1;
    }
    a
}

/// Free rank plus invariant factors `d_1 | d_2 | ...`, each at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        Self {
            free_rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, &[])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Torsion factors as machine integers; panics on factors that do not fit.
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| u64::try_from(d).expect("invariant factor exceeds u64"))
            .collect()
    }

    /// Invariants of the direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.torsion.len() + other.torsion.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, d) in self.torsion.iter().chain(&other.torsion).enumerate() {
            m[(i, i)] = d.clone();
        }
        let mut out = abelian_invariants(n, &m);
        out.free_rank = self.free_rank + other.free_rank;
        out
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The quotient `Z^n / rowspan(R)` together with canonical coordinates.
///
/// With `U R V = D`, a vector `v` maps to `w = v V`; the component `w_i` is
/// read modulo `d_i` for the torsion factors and kept as is for free factors.
/// Components with `d_i = 1` are dropped. Two vectors are equal in the
/// quotient iff their coordinates coincide.
#[derive(Clone, Debug)]
pub struct AbelianQuotient {
    n: usize,
    right: IntMatrix,
    /// One entry per original coordinate: 0 for free, 1 for killed, d >= 2 for torsion.
    moduli: Vec<BigInt>,
}

impl AbelianQuotient {
    pub fn new(n_generators: usize, relations: &IntMatrix) -> Self {
        assert_eq!(
            relations.cols(),
            n_generators,
            "relation matrix has {} columns for {} generators",
            relations.cols(),
            n_generators
        );
        let pruned = prune_rows(relations);
        let (d, _, v) = snf_core(pruned, false, true);
        let mut moduli = vec![BigInt::zero(); n_generators];
        for (i, m) in moduli.iter_mut().enumerate().take(d.rows().min(d.cols())) {
            *m = d[(i, i)].clone();
        }
        Self {
            n: n_generators,
            right: v.expect("right transform requested"),
            moduli,
        }
    }

    pub fn from_rows(n_generators: usize, rows: Vec<Vec<BigInt>>) -> Self {
        Self::new(n_generators, &IntMatrix::from_big_rows(n_generators, rows))
    }

    pub fn n_generators(&self) -> usize {
        self.n
    }

    pub fn invariants(&self) -> AbelianInvariants {
        let free_rank = self.moduli.iter().filter(|m| m.is_zero()).count();
        let torsion = self
            .moduli
            .iter()
            .filter(|m| !m.is_zero() && !m.is_one())
            .cloned()
            .collect();
        AbelianInvariants { free_rank, torsion }
    }

    /// Number of coordinates (= free rank + number of torsion factors).
    pub fn dimension(&self) -> usize {
        self.moduli.iter().filter(|m| !m.is_one()).count()
    }

    /// Moduli of the coordinates returned by [`coordinates`](Self::coordinates); 0 marks a free one.
    pub fn coordinate_moduli(&self) -> Vec<BigInt> {
        self.moduli.iter().filter(|m| !m.is_one()).cloned().collect()
    }

    pub fn coordinates(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n, "vector length does not match generator count");
        let w = self.right.left_mul_vec(v);
        w.into_iter()
            .zip(&self.moduli)
            .filter(|(_, m)| !m.is_one())
            .map(|(x, m)| if m.is_zero() { x } else { x.mod_floor(m) })
            .collect()
    }

    pub fn coordinates_i64(&self, v: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.coordinates(&v)
    }

    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).iter().all(Zero::is_zero)
    }
}

/// Drops zero and repeated rows; the row span is unchanged.
fn prune_rows(m: &IntMatrix) -> IntMatrix {
    let mut seen = std::collections::HashSet::new();
    let mut rows = Vec::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        // a row and its negative span the same line
        let canon: Vec<BigInt> = match row.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => row.iter().map(|x| -x).collect(),
            _ => row.to_vec(),
        };
        if seen.insert(canon.clone()) {
            rows.push(canon);
        }
    }
    IntMatrix::from_big_rows(m.cols(), rows)
}

/// Invariants of `Z^n / rowspan(relations)`.
pub fn abelian_invariants(n_generators: usize, relations: &IntMatrix) -> AbelianInvariants {
    AbelianQuotient::new(n_generators, relations).invariants()
}

/// Canonical coordinates of `v` in `Z^n / rowspan(relations)`.
pub fn quotient_coordinates(relations: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    AbelianQuotient::new(relations.cols(), relations).coordinates(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(m: &IntMatrix) -> SnfDecomposition {
        let snf = smith_normal_form(m);
        assert_eq!(&(&snf.u * m) * &snf.v, snf.d, "U M V != D for {m:?}");
        assert!(snf.u.determinant().magnitude().is_one());
        assert!(snf.v.determinant().magnitude().is_one());
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        snf
    }

    #[test]
    fn snf_identity() {
        let snf = check_snf(&IntMatrix::identity(2));
        assert_eq!(snf.d, IntMatrix::identity(2));
        assert_eq!(snf.u, IntMatrix::identity(2));
        assert_eq!(snf.v, IntMatrix::identity(2));
    }

    #[test]
    fn snf_rank_deficient() {
        let snf = check_snf(&IntMatrix::from_rows(2, &[[2, 4], [4, 8]]));
        assert_eq!(snf.diagonal(), big(&[2, 0]));
    }

    #[test]
    fn snf_coprime_diagonal() {
        let snf = check_snf(&IntMatrix::from_rows(2, &[[2, 0], [0, 3]]));
        assert_eq!(snf.diagonal(), big(&[1, 6]));
    }

    #[test]
    fn snf_zero_and_empty() {
        let snf = check_snf(&IntMatrix::zeros(3, 2));
        assert!(snf.d.is_zero());
        let e = IntMatrix::zeros(0, 4);
        assert_eq!(abelian_invariants(4, &e), AbelianInvariants::free(4));
    }

    #[test]
    fn snf_large_entries_do_not_overflow() {
        let huge = i64::MAX;
        let m = IntMatrix::from_rows(2, &[[huge, huge - 1], [huge - 1, huge - 2]]);
        check_snf(&m);
        let sq = &m * &m;
        let snf = check_snf(&sq);
        assert_eq!(snf.diagonal()[0], BigInt::one());
    }

    #[test]
    fn invariants_of_free_group() {
        assert_eq!(
            abelian_invariants(4, &IntMatrix::zeros(0, 4)),
            AbelianInvariants::free(4)
        );
    }

    #[test]
    fn invariants_of_surface_homology_example() {
        // generators (xi, b, eta, eta2, y)
        let rel = IntMatrix::from_rows(
            5,
            &[
                [2, 0, 2, 0, -1],
                [0, 0, 4, 0, 0],
                [0, 0, 0, 2, 0],
                [4, 0, 0, 0, -2],
            ],
        );
        assert_eq!(abelian_invariants(5, &rel), AbelianInvariants::new(2, &[2, 4]));
    }

    #[test]
    fn invariants_of_triangle_orbifold() {
        let rel = IntMatrix::from_rows(3, &[[1, 1, 1], [3, 0, 0], [0, 3, 0], [0, 0, 3]]);
        assert_eq!(abelian_invariants(3, &rel), AbelianInvariants::new(0, &[3, 3]));
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(
            hermite_normal_form(&IntMatrix::identity(2)),
            IntMatrix::identity(2)
        );
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_rows(2, &[[2, 2], [0, 2]])),
            IntMatrix::from_rows(2, &[[2, 0], [0, 2]])
        );
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_rows(2, &[[1, 0], [3, 0]])),
            IntMatrix::from_rows(2, &[[1, 0], [3, 0]])
        );
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_rows(2, &[[0, 1], [3, 0]])),
            IntMatrix::from_rows(2, &[[1, 0], [0, 3]])
        );
    }

    #[test]
    fn quotient_coordinates_examples() {
        let rel = IntMatrix::from_rows(2, &[[2, 0]]);
        assert_eq!(quotient_coordinates(&rel, &big(&[4, 1])), big(&[0, 1]));

        let rel = IntMatrix::from_rows(2, &[[3, -3]]);
        assert_eq!(
            quotient_coordinates(&rel, &big(&[3, 0])),
            quotient_coordinates(&rel, &big(&[0, 3]))
        );
        assert_ne!(
            quotient_coordinates(&rel, &big(&[1, 0])),
            quotient_coordinates(&rel, &big(&[0, 1]))
        );

        let empty = IntMatrix::zeros(0, 3);
        assert_eq!(quotient_coordinates(&empty, &big(&[5, -2, 7])), big(&[5, -2, 7]));
        let q = AbelianQuotient::new(3, &empty);
        assert!(q.is_zero(&big(&[0, 0, 0])));
    }

    #[test]
    fn display_invariants() {
        assert_eq!(AbelianInvariants::new(2, &[2, 4]).to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(AbelianInvariants::default().to_string(), "0");
    }

    #[test]
    fn direct_sum_recombines_factors() {
        let a = AbelianInvariants::new(1, &[2]);
        let b = AbelianInvariants::new(0, &[3]);
        assert_eq!(a.direct_sum(&b), AbelianInvariants::new(1, &[6]));
    }
}
