//! Truncated power series with rational coefficients and their Schur determinants.
//!
//! `Δ_λ(f) = det(f_{λ_j - j + i})` over an `ℓ(λ) x ℓ(λ)` matrix. For the
//! exponential series this gives the degree formula `f^λ = |λ|! · Δ_λ(exp t)`.
//!
//! Note on `λ = (3,2,2)`: the determinant evaluates to `1/240`, matching the
//! hook product `240` and `f^(3,2,2) = 7!/240 = 21`. A value of 15 sometimes
//! quoted for this example does not follow from the matrix and is not used.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{det_q, factorial, factorial_q, to_natural, Q};
use crate::partitions::Partition;

/// `Σ f_n t^n` for `0 <= n <= order`; every other coefficient reads as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Q>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least f_0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `f_n`, with `f_n = 0` for negative `n` and past the cutoff.
    pub fn coeff(&self, n: i64) -> Q {
        if n < 0 {
            return Q::zero();
        }
        self.coeffs.get(n as usize).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }
}

pub fn exp_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order as u32)
        .map(|n| Q::new(BigInt::one(), BigInt::from(factorial(n))))
        .collect();
    TruncatedSeries { coeffs }
}

/// Largest series index touched by `Δ_λ`: `λ₁ + ℓ(λ) - 1`.
pub fn required_order(lambda: &Partition) -> usize {
    if lambda.is_empty() {
        0
    } else {
        lambda.largest() as usize + lambda.len() - 1
    }
}

/// The Schur matrix `(f_{λ_j - j + i})` of size `rows`, with `λ` zero-padded.
pub fn schur_matrix(f: &TruncatedSeries, lambda: &Partition, rows: usize) -> Vec<Vec<Q>> {
    let padded = lambda.padded(rows);
    (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| f.coeff(padded[j] as i64 - j as i64 + i as i64))
                .collect()
        })
        .collect()
}

pub fn schur_determinant(f: &TruncatedSeries, lambda: &Partition) -> Result<Q> {
    let need = required_order(lambda);
    if f.order() < need {
        return Err(Error::InsufficientOrder {
            need,
            have: f.order(),
        });
    }
    Ok(det_q(schur_matrix(f, lambda, lambda.len())))
}

/// `f^λ = |λ|! · Δ_λ(exp t)`.
pub fn degree_determinant(lambda: &Partition) -> Result<BigUint> {
    let delta = schur_determinant(&exp_series(required_order(lambda)), lambda)?;
    let value = factorial_q(lambda.weight()) * delta;
    let degree = to_natural(&value, "|λ|!·Δ_λ(exp t)")?;
    if degree.is_zero() {
        return Err(Error::Invariant(format!("degree of {lambda} is zero")));
    }
    Ok(degree)
}
