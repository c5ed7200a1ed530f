//! q-Pochhammer symbols `(q;q)_k` and Gaussian binomial coefficients.
//!
//! The binomials are available two ways: the quotient of Pochhammer symbols
//! ([`gauss_product`]) and the q-Pascal recurrence ([`gauss_pascal`], backed
//! by [`GaussTable`]). The quotient form is the reference; the recurrence is
//! the one used for bulk tables.

use alloc::vec::Vec;

use crate::poly::Poly2;

/// `1 - q^i`
fn one_minus_q_pow(i: u32) -> Poly2 {
    Poly2::one() - Poly2::qz_monomial(1, i, 0)
}

/// `(q;q)_k = (1 - q)(1 - q²)⋯(1 - q^k)`, with `(q;q)_0 = 1`.
pub fn poch_qq(k: u32) -> Poly2 {
    (1..=k).fold(Poly2::one(), |acc, i| &acc * &one_minus_q_pow(i))
}

/// `[n k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})`, zero outside `0 ≤ k ≤ n`.
///
/// # Panics
///
/// If the polynomial division is not exact, which would mean the polynomial
/// arithmetic itself is broken.
pub fn gauss_product(n: u32, k: i64) -> Poly2 {
    if k < 0 || k > i64::from(n) {
        return Poly2::zero();
    }
    let k = k as u32;
    let den = &poch_qq(k) * &poch_qq(n - k);
    poch_qq(n)
        .exact_div(&den)
        .unwrap_or_else(|e| panic!("(q;q)_{n} / ((q;q)_{k} (q;q)_{}) is not exact: {e}", n - k))
}

/// Gaussian binomial via the q-Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]`, `[n 0] = [n n] = 1`.
pub fn gauss_pascal(n: u32, k: i64) -> Poly2 {
    GaussTable::new().get(n, k).clone()
}

/// Memoized rows of Gaussian binomials, grown on demand.
///
/// Row `n` is filled all at once from row `n - 1`, so each `(n, k)` entry is
/// computed exactly once per table.
#[derive(Clone, Debug)]
pub struct GaussTable {
    rows: Vec<Vec<Poly2>>,
    zero: Poly2,
}

impl Default for GaussTable {
    fn default() -> Self {
        GaussTable::new()
    }
}

impl GaussTable {
    pub fn new() -> Self {
        GaussTable {
            rows: alloc::vec![alloc::vec![Poly2::one()]],
            zero: Poly2::zero(),
        }
    }

    /// Number of rows currently stored.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    fn grow_to(&mut self, n: u32) {
        while self.rows.len() <= n as usize {
            let prev = self.rows.last().expect("table starts with row 0");
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(Poly2::one());
            for k in 1..m {
                let shifted = prev[k].shift(2 * k as u32, 0);
                row.push(&prev[k - 1] + &shifted);
            }
            row.push(Poly2::one());
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: u32, k: i64) -> &Poly2 {
        if k < 0 || k > i64::from(n) {
            return &self.zero;
        }
        self.grow_to(n);
        &self.rows[n as usize][k as usize]
    }
}
