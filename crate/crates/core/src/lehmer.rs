//! Lehmer's tridiagonal matrix `M(n)`, the polynomials λ(j), and the
//! closed-form LU factors and determinant built from them.
//!
//! Entries use `u = q^(1/2)` and `v = z^(1/2)`. In 1-based indices
//! `M[i][i] = 1`, `M[i][i+1] = v u^(i-1)` and `M[i+1][i] = v u^(i-1)`.
//!
//! λ(j) = Σ_{0 ≤ k ≤ j/2} [j-k k]_q (-1)^k q^(k(k-1)) z^k, which satisfies
//! λ(j) = λ(j-1) - z q^(j-2) λ(j-2) with λ(0) = λ(1) = 1. The diagonal of `U`
//! is λ(j)/λ(j-1), so det M(n) telescopes to λ(n).

use alloc::vec::Vec;

use crate::banded::{BandError, BandedFactors, TriMatrix};
use crate::poly::{Poly2, RatFunc};
use crate::qcomb::gauss_product;

/// λ(j) from its defining sum, each binomial taken in product form.
pub fn lambda_sum(j: u32) -> Poly2 {
    let mut out = Poly2::zero();
    for k in 0..=j / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let term = gauss_product(j - k, i64::from(k)).shift(2 * k * k.saturating_sub(1), 2 * k);
        out += &term.scale(&sign.into());
    }
    out
}

/// λ(0), …, λ(j_max).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaFamily {
    values: Vec<Poly2>,
}

impl LambdaFamily {
    pub fn get(&self, j: usize) -> &Poly2 {
        &self.values[j]
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Poly2] {
        &self.values
    }
}

/// Builds λ(0..=j_max) with the three-term recursion.
pub fn lambda_rec(j_max: u32) -> LambdaFamily {
    let mut values = alloc::vec![Poly2::one(), Poly2::one()];
    for j in 2..=j_max {
        let j = j as usize;
        // z q^(j-2) λ(j-2)
        let tail = values[j - 2].shift(2 * (j as u32 - 2), 2);
        values.push(&values[j - 1] - &tail);
    }
    values.truncate(j_max as usize + 1);
    LambdaFamily { values }
}

/// `v u^t`
fn band_entry(t: usize) -> Poly2 {
    Poly2::monomial(1, t as u32, 1)
}

/// Lehmer's `n × n` matrix.
pub fn lehmer_matrix(n: usize) -> Result<TriMatrix, BandError> {
    if n == 0 {
        return Err(BandError::EmptyMatrix);
    }
    let band: Vec<Poly2> = (0..n - 1).map(band_entry).collect();
    TriMatrix::new(alloc::vec![Poly2::one(); n], band.clone(), band)
}

/// The LU factors of `M(n)` written down directly from λ.
pub fn closed_factors(n: usize) -> Result<BandedFactors, BandError> {
    if n == 0 {
        return Err(BandError::EmptyMatrix);
    }
    let lambda = lambda_rec(n as u32);
    let ratio = |a: usize, b: usize| {
        RatFunc::new(lambda.get(a).clone(), lambda.get(b).clone())
            .expect("λ(j) has constant term 1")
    };
    let u_diag = (1..=n).map(|j| ratio(j, j - 1)).collect();
    let u_super = (1..n).map(|j| band_entry(j - 1)).collect();
    let l_sub = (1..n)
        .map(|j| &RatFunc::from(band_entry(j - 1)) * &ratio(j - 1, j))
        .collect();
    Ok(BandedFactors {
        u_diag,
        u_super,
        l_sub,
    })
}

/// det M(n) = λ(n).
pub fn det_closed(n: usize) -> Result<Poly2, BandError> {
    if n == 0 {
        return Err(BandError::EmptyMatrix);
    }
    Ok(lambda_rec(n as u32).get(n).clone())
}
