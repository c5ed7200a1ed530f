//! Exact arithmetic for Lehmer's tridiagonal determinant.
//!
//! * [`poly`]: sparse ℤ[u, v] polynomials with `u = q^(1/2)`, `v = z^(1/2)`,
//!   and unreduced rational functions over them.
//! * [`qcomb`]: `(q;q)_k` and Gaussian binomials.
//! * [`lehmer`]: λ(j), the matrix `M(n)`, its closed-form LU factors and
//!   determinant.
//! * [`linalg`]: generic LU, product checks and two determinant algorithms
//!   that know nothing about λ.
//! * [`series`]: the `n → ∞` limit as a truncated power series, and Dyck
//!   paths of bounded height at `q = 1`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod banded;
pub mod lehmer;
pub mod linalg;
pub mod poly;
pub mod qcomb;
pub mod series;

pub use banded::{BandError, BandedFactors, TriMatrix};
pub use lehmer::{closed_factors, det_closed, lambda_rec, lambda_sum, lehmer_matrix, LambdaFamily};
pub use linalg::{
    det_bareiss, det_cofactor, lu_generic, product_check, DenseMatrix, LinalgError, ProductMismatch,
};
pub use poly::{ratfunc_eq, Monomial, Poly2, PolyError, QzPoly, RatFunc};
pub use qcomb::{gauss_pascal, gauss_product, poch_qq, GaussTable};
pub use series::{
    dyck_count, dyck_gf_check, dyck_series, invert_poch, limit_det, stabilization_check,
    stabilization_threshold, Agreement, Series2, SeriesError,
};

pub use num_bigint::{BigInt, BigUint};
