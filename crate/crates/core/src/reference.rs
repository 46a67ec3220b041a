//! Reference values for the rank-6 hyperbolic algebra
//! [`hyperbolic_h`](crate::catalog::hyperbolic_h), used as golden data.

use alloc::vec::Vec;

use crate::polyseries::IntPolynomial;

/// `|W^k|` for `k = 0..=25`.
pub const HYPERBOLIC_SERIES: [i64; 26] = [
    1, 6, 20, 52, 117, 237, 445, 791, 1347, 2216, 3550, 5568, 8582, 13044, 19604, 29189, 43129,
    63332, 92518, 134572, 195052, 281882, 406361, 584620, 839655, 1204232,
];

/// `Q(B_5)` with `P(H) = P(B_5) / Q(B_5)`, coefficients of `t^0..=t^24`.
pub const Q_B5: [i64; 25] = [
    1, -1, 0, -2, 1, 0, 1, -1, 2, -1, 1, 0, 1, 1, -1, -1, 0, 0, -1, 0, -1, 0, 0, 0, 1,
];

/// Common denominator of `R_1` and `R_2`, coefficients of `t^0..=t^20`.
pub const R12_DENOMINATOR: [i64; 21] = [
    1, 0, -1, -2, -1, 0, 1, 1, 3, 2, 0, 0, 0, -1, -2, -2, -1, 0, 0, 1, 1,
];

/// Denominator of `R_3`, coefficients of `t^0..=t^15`.
pub const R3_DENOMINATOR: [i64; 16] = [1, 0, -1, -2, -1, 1, 1, 0, 1, 1, 1, 1, 0, 0, -1, -1];

/// Number of minimal coset representatives for `J = {1,2,3,4}` through
/// length 6.
pub const R1_COUNTS: [i64; 7] = [1, 2, 3, 7, 12, 19, 32];

/// Reference list of minimal right-coset representatives `Σ(i_1,…,i_k)` of
/// `W(A_4)` in `W(H)` through length 6.
pub const R1_ELEMENTS: &[&[usize]] = &[
    &[],
    &[5], &[6],
    &[5, 3], &[5, 6], &[6, 3],
    &[5, 3, 2], &[5, 3, 4], &[5, 3, 6], &[5, 6, 3], &[6, 3, 2], &[6, 3, 4], &[6, 3, 5],
    &[5, 3, 2, 1], &[5, 3, 2, 4], &[5, 3, 2, 6], &[5, 3, 4, 6], &[5, 3, 6, 3], &[5, 6, 3, 2],
    &[5, 6, 3, 4], &[5, 6, 3, 5], &[6, 3, 2, 1], &[6, 3, 2, 4], &[6, 3, 2, 5], &[6, 3, 4, 5],
    &[5, 3, 2, 1, 4], &[5, 3, 2, 1, 6], &[5, 3, 2, 4, 3], &[5, 3, 2, 4, 6],
    &[5, 3, 2, 6, 3], &[5, 3, 4, 6, 3], &[5, 3, 6, 3, 2], &[5, 3, 6, 3, 4], &[5, 3, 6, 3, 5],
    &[5, 6, 3, 2, 1], &[5, 6, 3, 2, 4], &[5, 6, 3, 2, 5], &[5, 6, 3, 4, 5], &[6, 3, 2, 1, 4],
    &[6, 3, 2, 1, 5], &[6, 3, 2, 4, 3], &[6, 3, 2, 4, 5], &[6, 3, 2, 5, 3], &[6, 3, 4, 5, 3],
    &[5, 3, 2, 1, 4, 3], &[5, 3, 2, 1, 4, 6], &[5, 3, 2, 1, 6, 3], &[5, 3, 2, 4, 3, 5],
    &[5, 3, 2, 4, 3, 6], &[5, 3, 2, 4, 6, 3], &[5, 3, 2, 6, 3, 2], &[5, 3, 2, 6, 3, 4],
    &[5, 3, 2, 6, 3, 5], &[5, 3, 4, 6, 3, 2], &[5, 3, 4, 6, 3, 4], &[5, 3, 4, 6, 3, 5],
    &[5, 3, 6, 3, 2, 1], &[5, 3, 6, 3, 2, 4], &[5, 3, 6, 3, 2, 5], &[5, 3, 6, 3, 4, 5],
    &[5, 6, 3, 2, 1, 4], &[5, 6, 3, 2, 1, 5], &[5, 6, 3, 2, 4, 3], &[5, 6, 3, 2, 4, 5],
    &[5, 6, 3, 2, 5, 3], &[5, 6, 3, 4, 5, 3], &[6, 3, 2, 1, 4, 3], &[6, 3, 2, 1, 4, 5],
    &[6, 3, 2, 1, 5, 3], &[6, 3, 2, 4, 3, 5], &[6, 3, 2, 4, 3, 6], &[6, 3, 2, 4, 5, 3],
    &[6, 3, 2, 5, 3, 4], &[6, 3, 2, 5, 3, 6], &[6, 3, 4, 5, 3, 2], &[6, 3, 4, 5, 3, 6],
];

/// Reference list of the length-2 class `W^2` of `W(H)`.
pub const W2_ELEMENTS: [[usize; 2]; 20] = [
    [1, 2], [1, 3], [1, 4], [1, 5], [1, 6],
    [2, 1], [2, 3], [2, 4], [2, 5], [2, 6],
    [3, 2], [3, 4], [3, 5], [3, 6], [4, 3],
    [4, 5], [4, 6], [5, 3], [5, 6], [6, 3],
];

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::new(c.to_vec())
}

fn product(factors: &[(&[i64], u32)]) -> IntPolynomial {
    let powers: Vec<IntPolynomial> = factors
        .iter()
        .map(|&(f, e)| poly(f).pow(e).expect("small factors"))
        .collect();
    IntPolynomial::product(&powers).expect("small factors")
}

/// `(1+t)^3 (1+t^2) (1−t+t^2) (1+t^4)`.
pub fn r1_numerator() -> IntPolynomial {
    product(&[(&[1, 1], 3), (&[1, 0, 1], 1), (&[1, -1, 1], 1), (&[1, 0, 0, 0, 1], 1)])
}

/// `1 + t`.
pub fn r2_numerator() -> IntPolynomial {
    poly(&[1, 1])
}

/// `(1−t)^3 (1+t) (1+t+t^2)^2 (1+t^4) (1+t+t^2+t^3+t^4)`.
pub fn r3_numerator() -> IntPolynomial {
    product(&[
        (&[1, -1], 3),
        (&[1, 1], 1),
        (&[1, 1, 1], 2),
        (&[1, 0, 0, 0, 1], 1),
        (&[1, 1, 1, 1, 1], 1),
    ])
}

pub fn q_b5() -> IntPolynomial {
    poly(&Q_B5)
}

pub fn r12_denominator() -> IntPolynomial {
    poly(&R12_DENOMINATOR)
}

pub fn r3_denominator() -> IntPolynomial {
    poly(&R3_DENOMINATOR)
}
