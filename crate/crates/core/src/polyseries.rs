//! Exact integer polynomials and truncated power series.
//!
//! Every arithmetic step is checked; overflow is an [`Error::Overflow`],
//! never a wrapped value. Operations mixing truncated operands work to the
//! smallest available order and the result carries that order.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Anything with integer coefficients indexed by exponent.
pub trait Coefficients {
    /// Coefficient of `t^k`; zero past the end of the stored data.
    fn coeff(&self, k: usize) -> i64;

    /// Highest exponent known exactly, or `None` for a polynomial (every
    /// coefficient is known).
    fn known_order(&self) -> Option<usize>;
}

fn limit(order: usize, bound: Option<usize>) -> usize {
    bound.map_or(order, |b| b.min(order))
}

#[inline]
fn mul_add(acc: i64, a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .and_then(|p| acc.checked_add(p))
        .ok_or(Error::Overflow)
}

/// Integer polynomial with trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial(Vec<i64>);

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({:?})", self.0)
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn one() -> Self {
        Self(alloc::vec![1])
    }

    /// `c · t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = alloc::vec![0; k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `1 + t + … + t^{n-1}`, i.e. `(t^n − 1)/(t − 1)`.
    pub fn geometric(n: usize) -> Self {
        Self::new(alloc::vec![1; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.0.len().max(other.0.len());
        (0..n)
            .map(|k| self.coeff(k).checked_add(other.coeff(k)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Full (untruncated) product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = alloc::vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = mul_add(out[i + j], a, b)?;
            }
        }
        Ok(Self::new(out))
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        factors.into_iter().try_fold(Self::one(), |acc, f| acc.mul(f))
    }

    pub fn evaluate(&self, t: i64) -> Result<i64> {
        self.0
            .iter()
            .rev()
            .try_fold(0i64, |acc, &c| mul_add(c, acc, t))
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// The polynomial viewed as a series truncated at `order`.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coefficients(self, order)
    }
}

impl Coefficients for IntPolynomial {
    fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    fn known_order(&self) -> Option<usize> {
        None
    }
}

/// Power series known through `t^order`; always exactly `order + 1`
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries(Vec<i64>);

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({:?} + O(t^{}))", self.0, self.0.len())
    }
}

impl TruncatedSeries {
    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        Self(coeffs)
    }

    /// Copies `src` up to `order` (lowered to what `src` actually knows),
    /// padding polynomials with zeros.
    pub fn from_coefficients(src: &impl Coefficients, order: usize) -> Self {
        let order = limit(order, src.known_order());
        Self((0..=order).map(|k| src.coeff(k)).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut v = alloc::vec![0; order + 1];
        v[0] = 1;
        Self(v)
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    /// Drops everything above `order` (no-op if already lower).
    pub fn truncate(&self, order: usize) -> Self {
        Self(self.0[..=order.min(self.order())].to_vec())
    }

    /// The stored coefficients as a polynomial (meaningful when the
    /// underlying series is known to stop).
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.0.clone())
    }
}

impl Coefficients for TruncatedSeries {
    fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    fn known_order(&self) -> Option<usize> {
        Some(self.order())
    }
}

/// Cauchy product through `order`, lowered to the smallest known order of
/// the operands.
pub fn mul(a: &impl Coefficients, b: &impl Coefficients, order: usize) -> Result<TruncatedSeries> {
    let order = limit(limit(order, a.known_order()), b.known_order());
    let mut out = alloc::vec![0i64; order + 1];
    for (m, slot) in out.iter_mut().enumerate() {
        let mut acc = 0i64;
        for s in 0..=m {
            let u = a.coeff(s);
            if u != 0 {
                acc = mul_add(acc, u, b.coeff(m - s))?;
            }
        }
        *slot = acc;
    }
    Ok(TruncatedSeries(out))
}

/// Multiplicative inverse through `order`. The constant term must be `±1`
/// so that the inverse stays integral.
pub fn inverse(a: &impl Coefficients, order: usize) -> Result<TruncatedSeries> {
    let order = limit(order, a.known_order());
    let c0 = a.coeff(0);
    if c0 != 1 && c0 != -1 {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut inv = alloc::vec![0i64; order + 1];
    inv[0] = c0;
    for m in 1..=order {
        let mut acc = 0i64;
        for s in 1..=m {
            let u = a.coeff(s);
            if u != 0 {
                acc = mul_add(acc, u, inv[m - s])?;
            }
        }
        // c0 = ±1 is its own inverse
        inv[m] = acc.checked_neg().and_then(|v| v.checked_mul(c0)).ok_or(Error::Overflow)?;
    }
    Ok(TruncatedSeries(inv))
}

/// Exact polynomial quotient `num / den`; fails unless `den` divides `num`
/// over the integers.
pub fn divide_exact(num: &IntPolynomial, den: &IntPolynomial) -> Result<IntPolynomial> {
    let Some(dd) = den.degree() else {
        return Err(Error::DivisionByZero);
    };
    let Some(nd) = num.degree() else {
        return Ok(IntPolynomial::zero());
    };
    if nd < dd {
        return Err(Error::InexactDivision);
    }
    let lead = den.0[dd];
    let mut rem = num.0.clone();
    let mut quot = alloc::vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let top = rem[k + dd];
        if top % lead != 0 {
            return Err(Error::InexactDivision);
        }
        let c = top / lead;
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.0.iter().enumerate() {
                rem[k + j] = d
                    .checked_mul(c)
                    .and_then(|p| rem[k + j].checked_sub(p))
                    .ok_or(Error::Overflow)?;
            }
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(Error::InexactDivision);
    }
    Ok(IntPolynomial::new(quot))
}

/// Order-by-order comparison of `w` against `u ⊛ v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionReport {
    /// `checks[m]` is true when `w_m = Σ_s u_s v_{m−s}`.
    pub checks: Vec<bool>,
    pub first_failure: Option<usize>,
}

impl ConvolutionReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    /// Highest order compared.
    pub fn order(&self) -> usize {
        self.checks.len() - 1
    }
}

/// Checks `w_M = Σ_{s=0}^{M} u_s v_{M−s}` for every order all three operands
/// know.
pub fn convolution_check(
    w: &impl Coefficients,
    u: &impl Coefficients,
    v: &impl Coefficients,
) -> Result<ConvolutionReport> {
    let order = [w.known_order(), u.known_order(), v.known_order()]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or(0);
    let product = mul(u, v, order)?;
    let checks: Vec<bool> = (0..=order).map(|m| w.coeff(m) == product.coeff(m)).collect();
    let first_failure = checks.iter().position(|&ok| !ok);
    Ok(ConvolutionReport {
        checks,
        first_failure,
    })
}
