//! Truncated power series in `z` with truncated `q`-polynomial coefficients,
//! the `n → ∞` determinant, and bounded-height Dyck paths at `q = 1`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::lehmer::{det_closed, lambda_rec};
use crate::poly::{Poly2, PolyError};
use crate::qcomb::poch_qq;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The constant term of the `z⁰` coefficient is not ±1.
    NotInvertible,
    TruncationMismatch,
    /// `z^k` does not occur in det M(n) when `2k > n`.
    MissingCoefficient {
        n: usize,
        k: u32,
    },
    Poly(PolyError),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NotInvertible => {
                f.write_str("series is not invertible (constant term is not a unit)")
            }
            SeriesError::TruncationMismatch => {
                f.write_str("series have different truncation orders")
            }
            SeriesError::MissingCoefficient { n, k } => {
                write!(f, "det M({n}) has no z^{k} term (need 2k <= n)")
            }
            SeriesError::Poly(e) => e.fmt(f),
        }
    }
}

impl From<PolyError> for SeriesError {
    fn from(e: PolyError) -> Self {
        SeriesError::Poly(e)
    }
}

/// Dense `q`-coefficients `0..=max_deg` of a polynomial in `q` alone.
fn q_coeffs(p: &Poly2, max_deg: u32) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); max_deg as usize + 1];
    for (m, c) in p.terms() {
        debug_assert!(m.ev == 0 && m.eu % 2 == 0, "expected a polynomial in q");
        let d = m.eu / 2;
        if d <= max_deg {
            out[d as usize] = c.clone();
        }
    }
    out
}

/// Inverse of a `q`-power series modulo `q^(max_deg+1)`.
fn invert_q(p: &Poly2, max_deg: u32) -> Result<Poly2, SeriesError> {
    let a = q_coeffs(p, max_deg);
    let a0 = &a[0];
    if !a0.abs().is_one() {
        return Err(SeriesError::NotInvertible);
    }
    // b_0 = 1/a_0, b_m = -(1/a_0) Σ_{i=1..m} a_i b_{m-i}; 1/a_0 = a_0 for a unit.
    let mut b: Vec<BigInt> = Vec::with_capacity(a.len());
    b.push(a0.clone());
    for m in 1..a.len() {
        let s = (1..=m).fold(BigInt::zero(), |acc, i| acc + &a[i] * &b[m - i]);
        b.push(-(s * a0));
    }
    Ok(Poly2::from_q_coeffs(b))
}

/// Power series `Σ_{i ≤ K} c_i(q) z^i`, each `c_i` cut off above `q^D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    z_trunc: usize,
    q_trunc: u32,
    coeffs: Vec<Poly2>,
}

impl Series2 {
    pub fn zero(z_trunc: usize, q_trunc: u32) -> Self {
        Series2 {
            z_trunc,
            q_trunc,
            coeffs: alloc::vec![Poly2::zero(); z_trunc + 1],
        }
    }

    pub fn one(z_trunc: usize, q_trunc: u32) -> Self {
        let mut s = Series2::zero(z_trunc, q_trunc);
        s.coeffs[0] = Poly2::one();
        s
    }

    /// Truncation of a polynomial in `(q, z)`.
    pub fn from_poly(p: &Poly2, z_trunc: usize, q_trunc: u32) -> Result<Self, SeriesError> {
        let qz = p.as_qz()?;
        let coeffs = (0..=z_trunc)
            .map(|k| qz.z_coeff(k as u32).truncate_u(2 * q_trunc))
            .collect();
        Ok(Series2 {
            z_trunc,
            q_trunc,
            coeffs,
        })
    }

    /// Builds a series from `z`-coefficients given as `q`-polynomials; missing
    /// slots are zero and everything is truncated.
    pub fn from_coeffs(coeffs: Vec<Poly2>, z_trunc: usize, q_trunc: u32) -> Self {
        let mut s = Series2::zero(z_trunc, q_trunc);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.truncate_u(2 * q_trunc);
        }
        s
    }

    pub fn z_trunc(&self) -> usize {
        self.z_trunc
    }

    pub fn q_trunc(&self) -> u32 {
        self.q_trunc
    }

    /// Coefficient of `z^k` as a polynomial in `q`.
    pub fn coeff(&self, k: usize) -> &Poly2 {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly2] {
        &self.coeffs
    }

    fn check_same(&self, other: &Series2) -> Result<(), SeriesError> {
        if self.z_trunc != other.z_trunc || self.q_trunc != other.q_trunc {
            return Err(SeriesError::TruncationMismatch);
        }
        Ok(())
    }

    fn cut(&self, p: Poly2) -> Poly2 {
        p.truncate_u(2 * self.q_trunc)
    }

    pub fn add(&self, other: &Series2) -> Result<Series2, SeriesError> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series2 { coeffs, ..*self })
    }

    pub fn neg(&self) -> Series2 {
        Series2 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..*self
        }
    }

    pub fn mul(&self, other: &Series2) -> Result<Series2, SeriesError> {
        self.check_same(other)?;
        let coeffs = (0..=self.z_trunc)
            .map(|k| {
                let sum = (0..=k).fold(Poly2::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &other.coeffs[k - i]
                });
                self.cut(sum)
            })
            .collect();
        Ok(Series2 { coeffs, ..*self })
    }

    /// Multiplicative inverse. The `z⁰` coefficient must have constant term ±1.
    pub fn inverse(&self) -> Result<Series2, SeriesError> {
        let t0 = invert_q(&self.coeffs[0], self.q_trunc)?;
        let mut out: Vec<Poly2> = Vec::with_capacity(self.z_trunc + 1);
        out.push(t0.clone());
        for m in 1..=self.z_trunc {
            let s = (1..=m).fold(Poly2::zero(), |acc, i| acc + &self.coeffs[i] * &out[m - i]);
            let s = self.cut(s);
            out.push(-self.cut(&t0 * &s));
        }
        Ok(Series2 {
            coeffs: out,
            ..*self
        })
    }

    pub fn div(&self, other: &Series2) -> Result<Series2, SeriesError> {
        self.mul(&other.inverse()?)
    }
}

/// One line per power of `z`: `z^k: <q-polynomial>`.
impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "z^{k}: {c}")?;
        }
        Ok(())
    }
}

/// `1 / (q;q)_k` modulo `q^(max_deg+1)`.
pub fn invert_poch(k: u32, max_deg: u32) -> Poly2 {
    invert_q(&poch_qq(k).truncate_u(2 * max_deg), max_deg).expect("(q;q)_k has constant term 1")
}

/// `Σ_{k ≤ K} (-1)^k q^(k(k-1)) z^k / (q;q)_k`, truncated at `(K, D)`.
pub fn limit_det(z_trunc: usize, q_trunc: u32) -> Series2 {
    let coeffs = (0..=z_trunc as u32)
        .map(|k| {
            let shift = k * k.saturating_sub(1);
            if shift > q_trunc {
                return Poly2::zero();
            }
            let c = invert_poch(k, q_trunc - shift).shift(2 * shift, 0);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Series2::from_coeffs(coeffs, z_trunc, q_trunc)
}

/// How far the `z^k` coefficient of det M(n) agrees with the limit series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    /// The coefficients are identical (only for `k = 0`).
    Exact,
    /// Equal modulo `q^(d+1)`, different at `q^(d+1)`.
    Through(u32),
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Agreement::Exact => f.write_str("all"),
            Agreement::Through(d) => write!(f, "{d}"),
        }
    }
}

/// Compares the `z^k` coefficient of det M(n), `(-1)^k q^(k(k-1)) [n-k k]_q`,
/// with `(-1)^k q^(k(k-1)) / (q;q)_k`.
///
/// Measured for n ≤ 20 and k ≤ 4 (and fixed by the tests) the answer is
/// `Through(n - 2k + k(k-1))` for every k ≥ 1.
pub fn stabilization_check(n: usize, k: u32) -> Result<Agreement, SeriesError> {
    if 2 * k as usize > n {
        return Err(SeriesError::MissingCoefficient { n, k });
    }
    let det = det_closed(n).expect("n >= 2k > 0 or n >= 1");
    let finite = det.as_qz()?.z_coeff(k);
    let top = finite.degree_u().unwrap_or(0) / 2 + 1;
    let limit = limit_det(k as usize, top);
    let limit = limit.coeff(k as usize);
    let diff = &finite - limit;
    let first = diff.terms().next().map(|(m, _)| m.eu / 2);
    match first {
        None => Ok(Agreement::Exact),
        Some(e) if e > 0 => Ok(Agreement::Through(e - 1)),
        Some(_) => unreachable!("both coefficients start with (-1)^k q^(k(k-1))"),
    }
}

/// Smallest `n` for which det M(n) truncated at `(K, D)` equals
/// [`limit_det`]`(K, D)`.
///
/// Uses the measured agreement degree `n - 2k + k(k-1)`: each `z^k` with
/// `k(k-1) ≤ D` needs `2k ≤ n` and that degree to reach `D`.
pub fn stabilization_threshold(z_trunc: usize, q_trunc: u32) -> usize {
    let d = q_trunc as usize;
    (1..=z_trunc)
        .filter(|&k| k * (k - 1) <= d)
        .map(|k| (2 * k).max((d + 2 * k).saturating_sub(k * (k - 1))))
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Dyck paths with `m` up-steps whose height never exceeds `h`.
///
/// Dynamic programming over (step, height).
pub fn dyck_count(m: usize, h: usize) -> BigUint {
    let mut ways = alloc::vec![BigUint::zero(); h + 1];
    ways[0] = BigUint::one();
    for _ in 0..2 * m {
        let mut next = alloc::vec![BigUint::zero(); h + 1];
        for (level, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if level < h {
                next[level + 1] += w;
            }
            if level > 0 {
                next[level - 1] += w;
            }
        }
        ways = next;
    }
    core::mem::take(&mut ways[0])
}

/// `λ(h) / λ(h+1)` at `q = 1` as a power series in `z` up to `z^M`.
///
/// The coefficient of `z^m` counts Dyck paths of half-length `m` and height
/// at most `h`.
pub fn dyck_series(h: usize, max_m: usize) -> Series2 {
    let lambda = lambda_rec(h as u32 + 1);
    let num = Series2::from_poly(&lambda.get(h).eval_u1(), max_m, 0).expect("λ has even exponents");
    let den =
        Series2::from_poly(&lambda.get(h + 1).eval_u1(), max_m, 0).expect("λ has even exponents");
    num.div(&den).expect("λ(h+1) has constant term 1")
}

/// True iff the `z^m` coefficient of [`dyck_series`] equals [`dyck_count`]
/// for every `m ≤ M`.
pub fn dyck_gf_check(h: usize, max_m: usize) -> bool {
    let s = dyck_series(h, max_m);
    (0..=max_m).all(|m| s.coeff(m).constant_term() == BigInt::from(dyck_count(m, h)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_poch_examples() {
        assert_eq!(invert_poch(0, 5), Poly2::one());
        assert_eq!(invert_poch(1, 4), Poly2::from_q_coeffs([1, 1, 1, 1, 1]));
        assert_eq!(invert_poch(2, 3), Poly2::from_q_coeffs([1, 1, 2, 2]));
    }

    #[test]
    fn invert_poch_certified_by_product() {
        for k in 0..=10 {
            for d in 0..=30 {
                let prod = (&invert_poch(k, d) * &poch_qq(k)).truncate_u(2 * d);
                assert_eq!(prod, Poly2::one(), "k={k} D={d}");
            }
        }
    }

    #[test]
    fn limit_det_examples() {
        let s = limit_det(2, 5);
        assert_eq!(s.coeff(0), &Poly2::one());
        assert_eq!(s.coeff(1), &Poly2::from_q_coeffs([-1, -1, -1, -1, -1, -1]));
        assert_eq!(
            limit_det(2, 4).coeff(2),
            &Poly2::from_q_coeffs([0, 0, 1, 1, 2])
        );
        assert_eq!(limit_det(2, 2).coeff(2), &Poly2::q().pow(2));
        assert!(limit_det(3, 5).coeff(3).is_zero());
    }

    #[test]
    fn stabilization_examples() {
        assert_eq!(stabilization_check(5, 0), Ok(Agreement::Exact));
        assert_eq!(stabilization_check(6, 1), Ok(Agreement::Through(4)));
        let Agreement::Through(d) = stabilization_check(8, 2).unwrap() else {
            panic!()
        };
        assert!(d >= 4);
        assert_eq!(
            stabilization_check(5, 3),
            Err(SeriesError::MissingCoefficient { n: 5, k: 3 })
        );
    }

    #[test]
    fn threshold_for_standard_window() {
        assert_eq!(stabilization_threshold(4, 10), 12);
        assert_eq!(stabilization_threshold(0, 10), 1);
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(dyck_count(0, 0), BigUint::one());
        assert_eq!(dyck_count(0, 3), BigUint::one());
        assert_eq!(dyck_count(3, 1), BigUint::one());
        assert_eq!(dyck_count(3, 2), BigUint::from(4u32));
        assert_eq!(dyck_count(3, 0), BigUint::zero());
    }

    #[test]
    fn dyck_series_examples() {
        let s1 = dyck_series(1, 6);
        assert!((0..=6).all(|m| s1.coeff(m) == &Poly2::one()));
        let s2 = dyck_series(2, 5);
        let expect = [1, 1, 2, 4, 8, 16];
        for (m, e) in expect.iter().enumerate() {
            assert_eq!(s2.coeff(m), &Poly2::constant(*e));
        }
        let s0 = dyck_series(0, 3);
        assert_eq!(s0, Series2::one(3, 0));
        assert!(dyck_gf_check(0, 3));
        assert!(dyck_gf_check(1, 6));
        assert!(dyck_gf_check(2, 5));
    }

    #[test]
    fn series_inverse_roundtrip() {
        let s = Series2::from_poly(&lambda_rec(6).get(6).clone(), 4, 8).unwrap();
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(prod, Series2::one(4, 8));
        let two = Series2::from_coeffs(alloc::vec![Poly2::constant(2)], 2, 2);
        assert_eq!(two.inverse(), Err(SeriesError::NotInvertible));
        assert_eq!(s.add(&two), Err(SeriesError::TruncationMismatch));
    }

    #[test]
    fn display_lines() {
        let text = alloc::format!("{}", limit_det(1, 2));
        assert_eq!(text, "z^0: 1\nz^1: -1 - q - q^2\n");
    }
}
