//! Sparse bivariate polynomials over ℤ in `u = q^(1/2)` and `v = z^(1/2)`.
//!
//! Every entry of Lehmer's matrix carries half-integer powers of `q` and `z`.
//! Working in the square roots keeps all of them inside an honest polynomial
//! ring; the determinant and the λ family only ever use even exponents, and
//! [`Poly2::as_qz`] recovers the `(q, z)` reading for those.
//!
//! Terms are ordered graded-lexicographically by `(eu + ev, eu, ev)`. That
//! order drives printing (ascending) and [`Poly2::exact_div`] (leading term is
//! the largest).

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `u^eu v^ev`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub eu: u32,
    pub ev: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { eu: 0, ev: 0 };

    pub const fn new(eu: u32, ev: u32) -> Self {
        Monomial { eu, ev }
    }

    pub fn degree(self) -> u32 {
        self.eu + self.ev
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.eu <= other.eu && self.ev <= other.ev
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.eu + other.eu, self.ev + other.ev)
    }

    fn div(self, other: Monomial) -> Monomial {
        Monomial::new(self.eu - other.eu, self.ev - other.ev)
    }

    fn is_even(self) -> bool {
        self.eu.is_multiple_of(2) && self.ev.is_multiple_of(2)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.eu.cmp(&other.eu))
            .then(self.ev.cmp(&other.ev))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// The divisor does not divide the dividend; carries the leading monomial
    /// of the remainder at the point the division algorithm got stuck.
    NotDivisible {
        remainder_lead: Monomial,
    },
    DivisionByZero,
    /// A `u` or `v` exponent is odd, so there is no `(q, z)` reading.
    OddExponent(Monomial),
    ZeroDenominator,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotDivisible { remainder_lead: m } => write!(
                f,
                "polynomial division is not exact (remainder has leading monomial u^{} v^{})",
                m.eu, m.ev
            ),
            PolyError::DivisionByZero => f.write_str("division by the zero polynomial"),
            PolyError::OddExponent(m) => write!(
                f,
                "odd exponent in u^{} v^{}: no (q, z) form exists",
                m.eu, m.ev
            ),
            PolyError::ZeroDenominator => f.write_str("rational function with zero denominator"),
        }
    }
}

/// Exact polynomial in ℤ[u, v], stored sparsely with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly2::monomial(c, 0, 0)
    }

    /// `c · u^eu · v^ev`.
    pub fn monomial(c: impl Into<BigInt>, eu: u32, ev: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(eu, ev), c);
        }
        Poly2 { terms }
    }

    /// `c · q^q_exp · z^z_exp`, i.e. `c · u^(2 q_exp) · v^(2 z_exp)`.
    pub fn qz_monomial(c: impl Into<BigInt>, q_exp: u32, z_exp: u32) -> Self {
        Poly2::monomial(c, 2 * q_exp, 2 * z_exp)
    }

    pub fn u() -> Self {
        Poly2::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Poly2::monomial(1, 0, 1)
    }

    pub fn q() -> Self {
        Poly2::monomial(1, 2, 0)
    }

    pub fn z() -> Self {
        Poly2::monomial(1, 0, 2)
    }

    /// Builds a polynomial from arbitrary `(monomial, coefficient)` pairs,
    /// merging repeats and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Poly2::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    /// Dense univariate polynomial in `q`: `Σ coeffs[i] q^i`.
    pub fn from_q_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Poly2::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(2 * i as u32, 0), c)),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, eu: u32, ev: u32) -> BigInt {
        self.terms
            .get(&Monomial::new(eu, ev))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// Largest term under the graded order.
    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn degree_u(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.eu).max()
    }

    pub fn degree_v(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.ev).max()
    }

    /// True when every exponent is even, i.e. the polynomial lives in ℤ[q, z].
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.is_even())
    }

    /// Multiplies by `u^eu v^ev`.
    pub fn shift(&self, eu: u32, ev: u32) -> Poly2 {
        let s = Monomial::new(eu, ev);
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(s), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Specialization `u := 1` (so `q = 1`). The result only involves `v`.
    pub fn eval_u1(&self) -> Poly2 {
        Poly2::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(0, m.ev), c.clone())),
        )
    }

    /// Drops every term whose `u`-exponent exceeds `max_eu`.
    pub fn truncate_u(&self, max_eu: u32) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.eu <= max_eu)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Reads the polynomial in `(q, z) = (u², v²)`.
    pub fn as_qz(&self) -> Result<QzPoly, PolyError> {
        if let Some(m) = self.terms.keys().find(|m| !m.is_even()) {
            return Err(PolyError::OddExponent(*m));
        }
        Ok(QzPoly(self.clone()))
    }

    /// Evaluates at integer `q` and `z`. Requires even exponents.
    pub fn eval_qz(&self, q: &BigInt, z: &BigInt) -> Result<BigInt, PolyError> {
        let qz = self.as_qz()?;
        Ok(qz
            .terms()
            .map(|(qe, ze, c)| c * q.pow(qe) * z.pow(ze))
            .fold(BigInt::zero(), |acc, t| acc + t))
    }

    /// Exact quotient `self / divisor` in ℤ[u, v].
    ///
    /// Runs the multivariate division algorithm against the graded leading
    /// term. Because the divisor generates a principal ideal, a nonzero
    /// remainder at any step means the division is not exact.
    pub fn exact_div(&self, divisor: &Poly2) -> Result<Poly2, PolyError> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        if divisor.is_one() {
            return Ok(self.clone());
        }
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lead_m.divides(m) {
                return Err(PolyError::NotDivisible { remainder_lead: m });
            }
            let (qc, r) = (c / lead_c, c % lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible { remainder_lead: m });
            }
            let qm = m.div(lead_m);
            for (dm, dc) in divisor.terms.iter() {
                rem.add_term(dm.mul(qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Poly2 {
        let mut base = self.clone();
        let mut acc = Poly2::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn fmt_terms<F>(&self, f: &mut fmt::Formatter<'_>, monomial: F) -> fmt::Result
    where
        F: Fn(Monomial) -> String,
    {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial(*m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }

    /// Formats in `(u, v)` variables regardless of parity, e.g. `v*u^2`.
    pub fn display_uv(&self) -> impl fmt::Display + '_ {
        UvDisplay(self)
    }
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => String::from(var),
        _ => alloc::format!("{var}^{e}"),
    }
}

fn join_vars(a: String, b: String) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ => alloc::format!("{a}*{b}"),
    }
}

struct UvDisplay<'a>(&'a Poly2);

impl fmt::Display for UvDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0
            .fmt_terms(f, |m| join_vars(power("v", m.ev), power("u", m.eu)))
    }
}

/// Prints the `(q, z)` form when all exponents are even, otherwise `(u, v)`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_even() {
            self.fmt_terms(f, |m| join_vars(power("q", m.eu / 2), power("z", m.ev / 2)))
        } else {
            UvDisplay(self).fmt(f)
        }
    }
}

/// A [`Poly2`] known to have only even exponents, viewed in `q = u²`, `z = v²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QzPoly(Poly2);

impl QzPoly {
    /// `(q_exp, z_exp, coeff)` in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigInt)> + '_ {
        self.0.terms().map(|(m, c)| (m.eu / 2, m.ev / 2, c))
    }

    pub fn from_qz_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        QzPoly(Poly2::from_terms(
            terms
                .into_iter()
                .map(|(qe, ze, c)| (Monomial::new(2 * qe, 2 * ze), c)),
        ))
    }

    pub fn z_degree(&self) -> Option<u32> {
        self.0.degree_v().map(|d| d / 2)
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.0.degree_u().map(|d| d / 2)
    }

    /// Coefficient of `z^k` as a polynomial in `q` (stored with `v`-exponent 0).
    pub fn z_coeff(&self, k: u32) -> Poly2 {
        Poly2::from_terms(
            self.0
                .terms()
                .filter(|(m, _)| m.ev == 2 * k)
                .map(|(m, c)| (Monomial::new(m.eu, 0), c.clone())),
        )
    }

    pub fn as_poly(&self) -> &Poly2 {
        &self.0
    }

    pub fn into_poly(self) -> Poly2 {
        self.0
    }
}

impl fmt::Display for QzPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<BigInt> for Poly2 {
    fn from(c: BigInt) -> Self {
        Poly2::constant(c)
    }
}

impl From<i64> for Poly2 {
    fn from(c: i64) -> Self {
        Poly2::constant(c)
    }
}

impl<'a> Add<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &'a Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(mut self, rhs: Poly2) -> Poly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (m, c) in rhs.terms.iter() {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> Sub<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &'a Poly2) -> Poly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(mut self, rhs: Poly2) -> Poly2 {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: &Poly2) {
        for (m, c) in rhs.terms.iter() {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(mut self) -> Poly2 {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -self.clone()
    }
}

impl<'a> Mul<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &'a Poly2) -> Poly2 {
        if self.is_zero() || rhs.is_zero() {
            return Poly2::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut products = alloc::vec::Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                products.push((ma.mul(*mb), ca * cb));
            }
        }
        products.sort_unstable_by_key(|t| t.0);
        let mut merged: alloc::vec::Vec<(Monomial, BigInt)> = alloc::vec::Vec::new();
        for (m, c) in products {
            match merged.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => merged.push((m, c)),
            }
        }
        Poly2 {
            terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

/// Quotient `num / den` of two polynomials with `den ≠ 0`.
///
/// No common factors are cancelled. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly2,
    den: Poly2,
}

impl RatFunc {
    pub fn new(num: Poly2, den: Poly2) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero() -> Self {
        RatFunc::from(Poly2::zero())
    }

    pub fn one() -> Self {
        RatFunc::from(Poly2::one())
    }

    pub fn num(&self) -> &Poly2 {
        &self.num
    }

    pub fn den(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `1 / self`; fails when `self` is zero.
    pub fn recip(&self) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, PolyError> {
        Ok(self * &rhs.recip()?)
    }

    /// Polynomial value when the denominator divides the numerator exactly.
    pub fn to_poly(&self) -> Result<Poly2, PolyError> {
        self.num.exact_div(&self.den)
    }
}

impl From<Poly2> for RatFunc {
    fn from(num: Poly2) -> Self {
        RatFunc {
            num,
            den: Poly2::one(),
        }
    }
}

/// Cross-multiplication equality `a/b = c/d ⇔ a·d = c·b`.
pub fn ratfunc_eq(a: &RatFunc, b: &RatFunc) -> bool {
    &a.num * &b.den == &b.num * &a.den
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        ratfunc_eq(self, other)
    }
}

impl Eq for RatFunc {}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatFunc {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
