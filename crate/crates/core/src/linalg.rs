//! Exact elimination and determinant routines used to check the closed forms.
//!
//! [`lu_generic`] is Doolittle elimination over the fraction field and knows
//! nothing about λ. [`det_cofactor`] expands along the band (the continuant
//! recurrence). [`det_bareiss`] ignores the band entirely and runs
//! fraction-free elimination on the dense matrix.

use alloc::vec::Vec;
use core::fmt;

use crate::banded::{BandedFactors, TriMatrix};
use crate::poly::{Poly2, PolyError, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// Elimination hit a zero pivot at this 0-based row.
    ZeroPivot(usize),
    /// A Bareiss step did not divide exactly.
    InexactDivision {
        step: usize,
        source: PolyError,
    },
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::ZeroPivot(i) => write!(f, "zero pivot in row {}", i + 1),
            LinalgError::InexactDivision { step, source } => {
                write!(f, "fraction-free elimination step {}: {source}", step + 1)
            }
            LinalgError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, not square")
            }
        }
    }
}

/// Row-major square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T> DenseMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        DenseMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(DenseMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.n + j] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }
}

impl DenseMatrix<RatFunc> {
    pub fn mul(&self, rhs: &DenseMatrix<RatFunc>) -> Result<DenseMatrix<RatFunc>, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(DenseMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(RatFunc::zero(), |acc, k| {
                &acc + &(self.get(i, k) * rhs.get(k, j))
            })
        }))
    }
}

impl From<&TriMatrix> for DenseMatrix<Poly2> {
    fn from(m: &TriMatrix) -> Self {
        DenseMatrix::from_fn(m.n(), |i, j| m.get(i, j))
    }
}

impl From<&TriMatrix> for DenseMatrix<RatFunc> {
    fn from(m: &TriMatrix) -> Self {
        DenseMatrix::from_fn(m.n(), |i, j| RatFunc::from(m.get(i, j)))
    }
}

impl BandedFactors {
    pub fn l_dense(&self) -> DenseMatrix<RatFunc> {
        DenseMatrix::from_fn(self.n(), |i, j| self.l(i, j))
    }

    pub fn u_dense(&self) -> DenseMatrix<RatFunc> {
        DenseMatrix::from_fn(self.n(), |i, j| self.u(i, j))
    }

    /// det(L U) = Π U[j][j], left unreduced.
    pub fn det(&self) -> RatFunc {
        self.u_diag.iter().fold(RatFunc::one(), |acc, d| &acc * d)
    }
}

/// Doolittle LU of a tridiagonal matrix without pivoting.
///
/// For tridiagonal input the factors are bidiagonal:
/// `U[j][j+1] = M[j][j+1]`, `L[j+1][j] = M[j+1][j] / U[j][j]` and
/// `U[j+1][j+1] = M[j+1][j+1] - L[j+1][j] U[j][j+1]`.
pub fn lu_generic(m: &TriMatrix) -> Result<BandedFactors, LinalgError> {
    let n = m.n();
    let mut u_diag = Vec::with_capacity(n);
    let mut l_sub = Vec::with_capacity(n - 1);
    let u_super = m.superdiag().to_vec();

    let mut pivot = RatFunc::from(m.diag()[0].clone());
    for (j, sup) in u_super.iter().enumerate() {
        if pivot.is_zero() {
            return Err(LinalgError::ZeroPivot(j));
        }
        let l = RatFunc::from(m.subdiag()[j].clone())
            .checked_div(&pivot)
            .map_err(|_| LinalgError::ZeroPivot(j))?;
        let next = &RatFunc::from(m.diag()[j + 1].clone()) - &(&l * &RatFunc::from(sup.clone()));
        u_diag.push(pivot);
        l_sub.push(l);
        pivot = next;
    }
    if pivot.is_zero() {
        return Err(LinalgError::ZeroPivot(n - 1));
    }
    u_diag.push(pivot);
    Ok(BandedFactors {
        u_diag,
        u_super,
        l_sub,
    })
}

/// Why a factorization does not reproduce its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductMismatch {
    Dimension {
        factors: usize,
        matrix: usize,
    },
    /// First 0-based `(row, col)` where `(L U)[i][j] ≠ M[i][j]`.
    Entry {
        row: usize,
        col: usize,
    },
}

impl fmt::Display for ProductMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductMismatch::Dimension { factors, matrix } => {
                write!(
                    f,
                    "factors are {factors}x{factors} but matrix is {matrix}x{matrix}"
                )
            }
            ProductMismatch::Entry { row, col } => {
                write!(
                    f,
                    "(LU)[{},{}] differs from M[{},{}]",
                    row + 1,
                    col + 1,
                    row + 1,
                    col + 1
                )
            }
        }
    }
}

/// Multiplies the factors out densely and compares every entry with `m`,
/// off-band zeros included.
pub fn product_check(f: &BandedFactors, m: &TriMatrix) -> Result<(), ProductMismatch> {
    if f.n() != m.n() {
        return Err(ProductMismatch::Dimension {
            factors: f.n(),
            matrix: m.n(),
        });
    }
    let lu = f
        .l_dense()
        .mul(&f.u_dense())
        .expect("L and U share a dimension");
    for i in 0..m.n() {
        for j in 0..m.n() {
            if *lu.get(i, j) != RatFunc::from(m.get(i, j)) {
                return Err(ProductMismatch::Entry { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Determinant of a tridiagonal matrix by the continuant recurrence
/// `D_k = d_k D_{k-1} - sub_{k-1} super_{k-1} D_{k-2}`.
pub fn det_cofactor(m: &TriMatrix) -> Poly2 {
    let mut prev = Poly2::one();
    let mut cur = m.diag()[0].clone();
    for k in 1..m.n() {
        let off = &m.subdiag()[k - 1] * &m.superdiag()[k - 1];
        let next = &(&m.diag()[k] * &cur) - &(&off * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Each update `(a_kk a_ij - a_ik a_kj) / a_{k-1,k-1}` is an exact division.
/// Zero pivots are handled by a row swap with a sign flip; a column with no
/// usable pivot makes the determinant zero.
pub fn det_bareiss(m: &DenseMatrix<Poly2>) -> Result<Poly2, LinalgError> {
    let n = m.n();
    if n == 0 {
        return Ok(Poly2::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = Poly2::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly2::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(a.get(i, j) * a.get(k, k)) - &(a.get(i, k) * a.get(k, j));
                let reduced = cross
                    .exact_div(&prev)
                    .map_err(|source| LinalgError::InexactDivision { step: k, source })?;
                a.set(i, j, reduced);
            }
            a.set(i, k, Poly2::zero());
        }
        prev = a.get(k, k).clone();
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { -det } else { det })
}
