//! Exact rational reconstruction of truncated integer series.
//!
//! Both routines build the convolution system `s · q ≡ p (mod t^{N+1})` and
//! hand it to the fraction-free solver, so a returned fit is certified by
//! exact arithmetic rather than by a tolerance.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, LinearSolution};
use crate::polyseries::{self, Coefficients, IntPolynomial, TruncatedSeries};

/// `numerator / denominator` matching a series through `verified_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFit {
    pub numerator: IntPolynomial,
    /// Constant term is always 1.
    pub denominator: IntPolynomial,
    pub verified_to: usize,
    /// Equations beyond the number of unknowns that the fit also satisfies.
    pub slack: usize,
}

impl RationalFit {
    /// Recomputes `s · q` and compares it with `p` through `verified_to`,
    /// independently of the solver.
    pub fn satisfies(&self, s: &TruncatedSeries) -> Result<bool> {
        if s.order() < self.verified_to {
            return Ok(false);
        }
        let lhs = polyseries::mul(s, &self.denominator, self.verified_to)?;
        Ok(lhs == self.numerator.to_series(self.verified_to))
    }

    /// Expands the fit as a series through `order`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let inv = polyseries::inverse(&self.denominator, order)?;
        polyseries::mul(&self.numerator, &inv, order)
    }
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow)
}

/// Finds the integer denominator `q` (`deg q ≤ dmax`, `q_0 = 1`) with
/// `s · q ≡ p` through the order of `s`, for a fixed numerator `p`.
pub fn recover_denominator(
    s: &TruncatedSeries,
    p: &IntPolynomial,
    dmax: usize,
) -> Result<RationalFit> {
    let c0 = s.coeff(0);
    if c0 != 1 && c0 != -1 {
        return Err(Error::NonUnitConstantTerm);
    }
    let order = s.order();
    let unknowns = dmax + 1;
    if order < dmax {
        return Err(Error::Underdetermined {
            equations: order + 1,
            unknowns,
        });
    }
    let matrix: Vec<Vec<BigInt>> = (0..=order)
        .map(|k| {
            (0..unknowns)
                .map(|j| if j <= k { BigInt::from(s.coeff(k - j)) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let rhs: Vec<BigInt> = (0..=order).map(|k| BigInt::from(p.coeff(k))).collect();
    let q = match linalg::solve_exact(&matrix, &rhs) {
        LinearSolution::Unique(q) => q,
        LinearSolution::Inconsistent => return Err(Error::Inconsistent),
        LinearSolution::RankDeficient { .. } => {
            return Err(Error::Underdetermined {
                equations: order + 1,
                unknowns,
            })
        }
    };
    let q = linalg::integral(&q).ok_or(Error::NonIntegerSolution)?;
    let q0 = q[0].clone();
    if q0.is_zero() {
        return Err(Error::Inconsistent);
    }
    // gauge q_0 = 1; the numerator follows the same rescaling
    let mut den = Vec::with_capacity(q.len());
    for c in &q {
        let (quot, rem) = c.div_rem(&q0);
        if !rem.is_zero() {
            return Err(Error::NonIntegerSolution);
        }
        den.push(to_i64(&quot)?);
    }
    let mut num = Vec::with_capacity(p.coeffs().len());
    for &c in p.coeffs() {
        let (quot, rem) = BigInt::from(c).div_rem(&q0);
        if !rem.is_zero() {
            return Err(Error::NonIntegerSolution);
        }
        num.push(to_i64(&quot)?);
    }
    Ok(RationalFit {
        numerator: IntPolynomial::new(num),
        denominator: IntPolynomial::new(den),
        verified_to: order,
        slack: order + 1 - unknowns,
    })
}

/// Padé-style recovery: the pair `(p, q)` with `q_0 = 1`, `deg p ≤ dnum_max`,
/// `deg q ≤ dden_max` and `s · q ≡ p` through the order of `s`, taking the
/// smallest denominator degree first and then the smallest numerator degree.
///
/// Requires one more coefficient than there are unknowns at the bounds, so
/// that any two fits within the bounds describe the same rational function.
pub fn recover_rational(
    s: &TruncatedSeries,
    dnum_max: usize,
    dden_max: usize,
) -> Result<RationalFit> {
    let order = s.order();
    if order < dnum_max + dden_max + 1 {
        return Err(Error::Underdetermined {
            equations: order + 1,
            unknowns: dnum_max + dden_max + 2,
        });
    }
    for dden in 0..=dden_max {
        for dnum in 0..=dnum_max {
            if let Some(fit) = try_degrees(s, dnum, dden)? {
                return Ok(fit);
            }
        }
    }
    Err(Error::Inconsistent)
}

fn try_degrees(s: &TruncatedSeries, dnum: usize, dden: usize) -> Result<Option<RationalFit>> {
    let order = s.order();
    // q_1..q_dden from the equations above the numerator degree
    let rows: Vec<usize> = (dnum + 1..=order).collect();
    let q_tail: Vec<BigInt> = if dden == 0 {
        if rows.iter().any(|&k| s.coeff(k) != 0) {
            return Ok(None);
        }
        Vec::new()
    } else {
        let matrix: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&k| {
                (1..=dden)
                    .map(|j| if j <= k { BigInt::from(s.coeff(k - j)) } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let rhs: Vec<BigInt> = rows.iter().map(|&k| BigInt::from(-s.coeff(k))).collect();
        match linalg::solve_exact(&matrix, &rhs) {
            LinearSolution::Unique(q) => linalg::integral(&q).ok_or(Error::NonIntegerSolution)?,
            LinearSolution::Inconsistent | LinearSolution::RankDeficient { .. } => return Ok(None),
        }
    };
    let mut den = Vec::with_capacity(dden + 1);
    den.push(1i64);
    for c in &q_tail {
        den.push(to_i64(c)?);
    }
    let denominator = IntPolynomial::new(den);
    let numerator = polyseries::mul(s, &denominator, dnum)?.to_polynomial();
    Ok(Some(RationalFit {
        numerator,
        denominator,
        verified_to: order,
        slack: order - dnum - dden,
    }))
}
