//! Tridiagonal matrices and bidiagonal LU factors.

use alloc::vec::Vec;
use core::fmt;

use crate::poly::{Poly2, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BandError {
    /// A matrix must have at least one row.
    EmptyMatrix,
    /// Band lengths do not fit an `n × n` tridiagonal matrix.
    BandLength {
        n: usize,
        superdiag: usize,
        subdiag: usize,
    },
}

impl fmt::Display for BandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BandError::EmptyMatrix => f.write_str("matrix dimension must be at least 1"),
            BandError::BandLength { n, superdiag, subdiag } => write!(
                f,
                "tridiagonal {n}x{n} matrix needs off-diagonal bands of length {}, got {superdiag} and {subdiag}",
                n - 1
            ),
        }
    }
}

/// Square tridiagonal matrix with polynomial entries.
///
/// With 0-based storage, `superdiag[i]` is `M[i][i+1]` and `subdiag[i]` is
/// `M[i+1][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriMatrix {
    diag: Vec<Poly2>,
    superdiag: Vec<Poly2>,
    subdiag: Vec<Poly2>,
}

impl TriMatrix {
    pub fn new(
        diag: Vec<Poly2>,
        superdiag: Vec<Poly2>,
        subdiag: Vec<Poly2>,
    ) -> Result<Self, BandError> {
        let n = diag.len();
        if n == 0 {
            return Err(BandError::EmptyMatrix);
        }
        if superdiag.len() != n - 1 || subdiag.len() != n - 1 {
            return Err(BandError::BandLength {
                n,
                superdiag: superdiag.len(),
                subdiag: subdiag.len(),
            });
        }
        Ok(TriMatrix {
            diag,
            superdiag,
            subdiag,
        })
    }

    pub fn identity(n: usize) -> Result<Self, BandError> {
        let off = n.saturating_sub(1);
        TriMatrix::new(
            alloc::vec![Poly2::one(); n],
            alloc::vec![Poly2::zero(); off],
            alloc::vec![Poly2::zero(); off],
        )
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Poly2] {
        &self.diag
    }

    pub fn superdiag(&self) -> &[Poly2] {
        &self.superdiag
    }

    pub fn subdiag(&self) -> &[Poly2] {
        &self.subdiag
    }

    /// Entry `(i, j)`, 0-based; zero off the three bands.
    pub fn get(&self, i: usize, j: usize) -> Poly2 {
        if i == j {
            self.diag[i].clone()
        } else if i + 1 == j {
            self.superdiag[i].clone()
        } else if j + 1 == i {
            self.subdiag[j].clone()
        } else {
            Poly2::zero()
        }
    }
}

/// `L` (unit lower bidiagonal) and `U` (upper bidiagonal) of a tridiagonal LU.
///
/// 0-based: `u_diag[j] = U[j][j]`, `u_super[j] = U[j][j+1]`,
/// `l_sub[j] = L[j+1][j]`. `L[j][j] = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandedFactors {
    pub u_diag: Vec<RatFunc>,
    pub u_super: Vec<Poly2>,
    pub l_sub: Vec<RatFunc>,
}

impl BandedFactors {
    pub fn n(&self) -> usize {
        self.u_diag.len()
    }

    /// Entry `L[i][j]`, 0-based.
    pub fn l(&self, i: usize, j: usize) -> RatFunc {
        if i == j {
            RatFunc::one()
        } else if j + 1 == i {
            self.l_sub[j].clone()
        } else {
            RatFunc::zero()
        }
    }

    /// Entry `U[i][j]`, 0-based.
    pub fn u(&self, i: usize, j: usize) -> RatFunc {
        if i == j {
            self.u_diag[i].clone()
        } else if i + 1 == j {
            RatFunc::from(self.u_super[i].clone())
        } else {
            RatFunc::zero()
        }
    }

    /// First band position where `self` and `other` differ, as
    /// `(band, 0-based index)`; `None` when they agree everywhere.
    pub fn first_difference(&self, other: &BandedFactors) -> Option<(&'static str, usize)> {
        if self.n() != other.n() {
            return Some(("dimension", 0));
        }
        if let Some(i) = (0..self.n()).find(|&i| self.u_diag[i] != other.u_diag[i]) {
            return Some(("u_diag", i));
        }
        if let Some(i) = (0..self.u_super.len()).find(|&i| self.u_super[i] != other.u_super[i]) {
            return Some(("u_super", i));
        }
        (0..self.l_sub.len())
            .find(|&i| self.l_sub[i] != other.l_sub[i])
            .map(|i| ("l_sub", i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_lengths_are_validated() {
        assert_eq!(
            TriMatrix::new(alloc::vec![], alloc::vec![], alloc::vec![]),
            Err(BandError::EmptyMatrix)
        );
        let bad = TriMatrix::new(
            alloc::vec![Poly2::one(); 3],
            alloc::vec![Poly2::one(); 2],
            alloc::vec![],
        );
        assert!(matches!(bad, Err(BandError::BandLength { n: 3, .. })));
    }

    #[test]
    fn entry_access() {
        let m = TriMatrix::new(
            alloc::vec![Poly2::constant(1), Poly2::constant(2), Poly2::constant(3)],
            alloc::vec![Poly2::constant(4), Poly2::constant(5)],
            alloc::vec![Poly2::constant(6), Poly2::constant(7)],
        )
        .unwrap();
        assert_eq!(m.get(1, 1), Poly2::constant(2));
        assert_eq!(m.get(0, 1), Poly2::constant(4));
        assert_eq!(m.get(2, 1), Poly2::constant(7));
        assert!(m.get(0, 2).is_zero());
        assert!(m.get(2, 0).is_zero());
    }
}
