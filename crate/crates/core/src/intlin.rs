//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: Smith and
//! Hermite normal forms, saturated kernels, cokernel invariants, lattice
//! membership and integer system solving. The remaining modules express
//! their lattice questions in terms of these primitives.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An integer vector, used for rays, characters and exponent vectors.
pub type IntVector = Vec<BigInt>;

/// Builds an [`IntVector`] from machine integers.
pub fn ivec(entries: &[i64]) -> IntVector {
    entries.iter().map(|&x| BigInt::from(x)).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("zero vector does not span a ray")]
    ZeroVector,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. `cols` fixes the width, which matters for
    /// matrices with no rows.
    pub fn from_rows(cols: usize, rows: Vec<IntVector>) -> Result<Self, LinError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinError::Ragged {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[IntVector]) -> Result<Self, LinError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinError::Ragged {
                    row: j,
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor from machine-integer rows.
    ///
    /// Panics on ragged input; intended for literals in tests and examples.
    pub fn from_slices(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| ivec(r)).collect()).expect("ragged literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<IntVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<IntVector, LinError> {
        if self.cols != v.len() {
            return Err(LinError::Shape(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Columns with the given indices, in that order.
    pub fn select_columns(&self, indices: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, indices.len());
        for i in 0..self.rows {
            for (jj, &j) in indices.iter().enumerate() {
                m.data[i * indices.len() + jj] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix, LinError> {
        if self.rows != other.rows {
            return Err(LinError::Shape(format!(
                "cannot stack {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut cols = self.column_vectors();
        cols.extend(other.column_vectors());
        IntMatrix::from_columns(self.rows, &cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
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
            let delta = factor * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }

    /// Replaces columns (k, j) by (s·k + t·j, u·k + v·j).
    fn combine_cols(&mut self, k: usize, j: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for i in 0..self.rows {
            let a = self.data[i * self.cols + k].clone();
            let b = self.data[i * self.cols + j].clone();
            self.data[i * self.cols + k] = s * &a + t * &b;
            self.data[i * self.cols + j] = u * &a + v * &b;
        }
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.clone()).0
    }

    /// Determinant of a square matrix (Bareiss elimination).
    pub fn det(&self) -> Result<BigInt, LinError> {
        if self.rows != self.cols {
            return Err(LinError::Shape(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let (rank, det) = bareiss(self.clone());
        Ok(if rank == self.rows {
            det
        } else {
            BigInt::zero()
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntMatrix{}x{}{:?}",
            self.rows,
            self.cols,
            self.row_vectors()
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        if self.rows == 0 {
            return write!(f, "[] ({}x{})", self.rows, self.cols);
        }
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nonnegative gcd of all entries; zero for the zero vector.
pub fn vector_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// The primitive lattice vector on the ray spanned by `v`.
pub fn primitive_vector(v: &[BigInt]) -> Result<IntVector, LinError> {
    let g = vector_gcd(v);
    if g.is_zero() {
        return Err(LinError::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Returns (rank, last pivot) after fraction-free elimination. For a square
/// full-rank matrix the last pivot is the determinant.
fn bareiss(mut m: IntMatrix) -> (usize, BigInt) {
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            m.swap_rows(p, r);
            sign = -sign;
        }
        let pivot = m.get(r, c).clone();
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&pivot * m.get(i, j) - m.get(i, c) * m.get(r, j)) / &prev;
                m.set(i, j, v);
            }
            m.set(i, c, BigInt::zero());
        }
        prev = pivot;
        r += 1;
    }
    (r, sign * prev)
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries d₁ | d₂ | … in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn min_abs_entry(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows {
        for j in from..m.cols {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < m.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form by gcd-driven row and column reduction, always pivoting
/// on an entry of minimal absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = d.get(t, t).clone();
            let mut leftover = false;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                leftover |= !d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                leftover |= !d.get(t, j).is_zero();
            }
            if leftover {
                // A remainder smaller than the pivot survived; move the
                // smallest entry of row t / column t into position.
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !d.get(i, t).is_zero() && d.get(i, t).abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !d.get(t, j).is_zero() && d.get(t, j).abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, d, v }
}

/// Free rank and torsion invariant factors (all ≥ 2) of ℤ^rows / im(A).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CokernelInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl CokernelInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

pub fn cokernel_invariants(a: &IntMatrix) -> CokernelInvariants {
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    CokernelInvariants {
        free_rank: a.rows - factors.len(),
        torsion: factors.into_iter().filter(|x| !x.is_one()).collect(),
    }
}

/// Column-style Hermite normal form `H = A·V`, `V` unimodular.
///
/// `H` is in column echelon form: the k-th pivot sits in row
/// `pivot_rows[k]`, is positive, and the entries left of it in that row are
/// reduced into `[0, pivot)`. Columns from `rank` on are zero.
#[derive(Clone, Debug)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub v: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

pub fn column_hnf(a: &IntMatrix) -> HnfResult {
    let (rows, cols) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut v = IntMatrix::identity(cols);
    let mut pivot_rows = Vec::new();
    let mut k = 0;
    for i in 0..rows {
        if k == cols {
            break;
        }
        for j in k + 1..cols {
            if h.get(i, j).is_zero() {
                continue;
            }
            let a = h.get(i, k).clone();
            let b = h.get(i, j).clone();
            let e = a.extended_gcd(&b);
            let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
            if g.is_negative() {
                g = -g;
                s = -s;
                t = -t;
            }
            let u = -(&b / &g);
            let w = &a / &g;
            h.combine_cols(k, j, &s, &t, &u, &w);
            v.combine_cols(k, j, &s, &t, &u, &w);
        }
        if h.get(i, k).is_zero() {
            continue;
        }
        if h.get(i, k).is_negative() {
            h.negate_col(k);
            v.negate_col(k);
        }
        let pivot = h.get(i, k).clone();
        for j in 0..k {
            let q = -h.get(i, j).div_floor(&pivot);
            h.add_col_multiple(j, k, &q);
            v.add_col_multiple(j, k, &q);
        }
        pivot_rows.push(i);
        k += 1;
    }
    HnfResult { h, v, pivot_rows }
}

/// Canonical basis of the saturated lattice `ker(A) ∩ ℤ^cols`.
///
/// The basis is returned in row-Hermite form: leading entries positive and
/// strictly increasing in position. Empty iff `A` is injective.
pub fn kernel_basis(a: &IntMatrix) -> Vec<IntVector> {
    let hnf = column_hnf(a);
    let raw: Vec<IntVector> = (hnf.rank()..a.cols).map(|j| hnf.v.column(j)).collect();
    canonical_basis(a.cols, &raw)
}

/// Row-Hermite normal form of a list of linearly independent vectors; any
/// two bases of the same lattice give the same output.
pub fn canonical_basis(dim: usize, vectors: &[IntVector]) -> Vec<IntVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_columns(dim, vectors).expect("vectors have length dim");
    let hnf = column_hnf(&m);
    (0..hnf.rank()).map(|j| hnf.h.column(j)).collect()
}

/// One integer solution of `A·x = b`, or `None` if there is none.
///
/// The solution comes from Hermite back-substitution with every free
/// parameter set to zero.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<IntVector> {
    if b.len() != a.rows {
        return None;
    }
    let hnf = column_hnf(a);
    let mut y = vec![BigInt::zero(); a.cols];
    for (k, &i) in hnf.pivot_rows.iter().enumerate() {
        let mut residual = b[i].clone();
        for (j, yj) in y.iter().enumerate().take(k) {
            residual -= hnf.h.get(i, j) * yj;
        }
        let pivot = hnf.h.get(i, k);
        if !residual.is_multiple_of(pivot) {
            return None;
        }
        y[k] = residual / pivot;
    }
    if hnf.h.mul_vec(&y).ok()? != b {
        return None;
    }
    let x = hnf.v.mul_vec(&y).ok()?;
    debug_assert_eq!(a.mul_vec(&x).ok()?, b);
    Some(x)
}

/// Whether `v` lies in the lattice generated by the columns of `lattice`.
pub fn lattice_membership(lattice: &IntMatrix, v: &[BigInt]) -> bool {
    solve_integer(lattice, v).is_some()
}

/// Smallest `d ≥ 1` with `d·v` in the column lattice of `lattice`; `None`
/// when `v` is not even in its rational span.
pub fn divisibility_index(lattice: &IntMatrix, v: &[BigInt]) -> Option<BigInt> {
    if v.len() != lattice.rows {
        return None;
    }
    let snf = smith_normal_form(lattice);
    let w = snf.u.mul_vec(v).ok()?;
    let factors = snf.invariant_factors();
    if w[factors.len()..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(factors.iter().zip(&w).fold(BigInt::one(), |acc, (di, wi)| {
        let need = di / di.gcd(wi);
        acc.lcm(&need)
    }))
}

/// Basis of the saturation `(im(A) ⊗ ℚ) ∩ ℤ^rows` of the column lattice.
pub fn saturation(a: &IntMatrix) -> Vec<IntVector> {
    let equations = kernel_basis(&a.transpose());
    let eq = IntMatrix::from_rows(a.rows, equations).expect("equations have length rows");
    kernel_basis(&eq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_slices(rows)
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.det().unwrap().abs().is_one());
        assert!(s.v.det().unwrap().abs().is_one());
        s
    }

    #[test]
    fn snf_identity() {
        let s = check_snf(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn snf_diag_2_3() {
        let s = check_snf(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, m(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn snf_tall() {
        let s = check_snf(&m(&[&[1, 0], &[0, 1], &[-1, -1]]));
        assert_eq!(s.d, m(&[&[1, 0], &[0, 1], &[0, 0]]));
    }

    #[test]
    fn snf_empty() {
        let a = IntMatrix::zeros(0, 3);
        let s = check_snf(&a);
        assert_eq!(s.rank(), 0);
        assert_eq!(s.v, IntMatrix::identity(3));
        assert_eq!(cokernel_invariants(&IntMatrix::zeros(2, 0)).free_rank, 2);
    }

    #[test]
    fn cokernels() {
        let c = cokernel_invariants(&m(&[&[1, 0], &[1, 2]]));
        assert_eq!((c.free_rank, c.torsion), (0, ivec(&[2])));
        assert!(cokernel_invariants(&IntMatrix::identity(2)).is_trivial());
        let c = cokernel_invariants(&m(&[&[1, 0], &[0, 1], &[-1, -1]]));
        assert_eq!((c.free_rank, c.torsion.len()), (1, 0));
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel_basis(&m(&[&[1, -1]])), vec![ivec(&[1, 1])]);
        assert!(kernel_basis(&IntMatrix::identity(2)).is_empty());
        assert_eq!(
            kernel_basis(&m(&[&[1, 0, -1], &[0, 1, -2]])),
            vec![ivec(&[1, 2, 1])]
        );
        // 0 x 2 matrix: everything is in the kernel
        assert_eq!(kernel_basis(&IntMatrix::zeros(0, 2)).len(), 2);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 4y = 0 has kernel generated by (2, 1), not (4, 2)
        assert_eq!(kernel_basis(&m(&[&[2, -4]])), vec![ivec(&[2, 1])]);
    }

    #[test]
    fn primitive() {
        assert_eq!(primitive_vector(&ivec(&[2, 4])).unwrap(), ivec(&[1, 2]));
        assert_eq!(primitive_vector(&ivec(&[0, -3])).unwrap(), ivec(&[0, -1]));
        assert_eq!(
            primitive_vector(&ivec(&[6, 10, 15])).unwrap(),
            ivec(&[6, 10, 15])
        );
        assert_eq!(primitive_vector(&ivec(&[0, 0])), Err(LinError::ZeroVector));
    }

    #[test]
    fn membership_and_index() {
        let l = m(&[&[1, 1], &[0, 2]]);
        assert!(!lattice_membership(&l, &ivec(&[0, 1])));
        assert_eq!(
            divisibility_index(&l, &ivec(&[0, 1])),
            Some(BigInt::from(2))
        );
        let id = IntMatrix::identity(2);
        assert!(lattice_membership(&id, &ivec(&[5, -7])));
        assert_eq!(
            divisibility_index(&id, &ivec(&[5, -7])),
            Some(BigInt::one())
        );
        let axis = m(&[&[2], &[0]]);
        assert!(!lattice_membership(&axis, &ivec(&[1, 1])));
        assert_eq!(divisibility_index(&axis, &ivec(&[1, 1])), None);
    }

    #[test]
    fn solving() {
        assert_eq!(
            solve_integer(&IntMatrix::identity(2), &ivec(&[3, 4])),
            Some(ivec(&[3, 4]))
        );
        assert_eq!(solve_integer(&m(&[&[2]]), &ivec(&[1])), None);
        assert_eq!(
            solve_integer(&m(&[&[1, 1], &[0, 2]]), &ivec(&[0, 2])),
            Some(ivec(&[-1, 1]))
        );
    }

    #[test]
    fn solve_inconsistent_rows() {
        // x = 1 and x = 2 at once
        assert_eq!(solve_integer(&m(&[&[1], &[1]]), &ivec(&[1, 2])), None);
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(
            m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).det().unwrap(),
            BigInt::from(4)
        );
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::one());
    }

    #[test]
    fn saturation_of_sublattice() {
        let sat = saturation(&m(&[&[2], &[4]]));
        assert_eq!(sat, vec![ivec(&[1, 2])]);
        assert_eq!(saturation(&IntMatrix::identity(2)).len(), 2);
    }

    #[test]
    fn huge_entries_do_not_overflow() {
        let big = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let a = IntMatrix::from_rows(
            2,
            vec![
                vec![big.clone(), BigInt::zero()],
                vec![BigInt::zero(), big.clone() * 2],
            ],
        )
        .unwrap();
        let s = check_snf(&a);
        assert_eq!(s.invariant_factors(), vec![big.clone(), big * 2]);
    }
}
