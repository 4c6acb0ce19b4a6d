//! The ring `B = Q[x_1, x_2, ...]` with its Schur basis.
//!
//! `S_n(x)` are the coefficients of `exp(Σ x_i t^i)` and
//! `S_λ(x) = det(S_{λ_j - j + i})`. A computation of weighted degree `d` only
//! ever touches `x_1..x_d`, so every polynomial here carries exactly that
//! many variables and nothing is lost by truncating.

mod basis;
mod operator;
mod poly;

pub use basis::{expand_in_schur, SchurBasis, SchurExpansion, SchurTable};
pub use operator::{s_tilde_operator, DiffOperator};
pub use poly::{Monomial, WeightedPolynomial};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::det::det_dp;
use crate::error::{Error, Result};
use crate::num::{factorial, factorial_q, to_natural, Q};
use crate::partitions::{partitions_of, pieri_up, Partition};

/// `S_n(x)`: the coefficient of `t^n` in `exp(Σ_{i≥1} x_i t^i)`.
///
/// Each partition `ν ⊢ n` with multiplicities `m_k` contributes `Π x_k^{m_k} / m_k!`.
pub fn complete_generator(n: u32, nvars: usize) -> Result<WeightedPolynomial> {
    if nvars < n as usize {
        return Err(Error::TooFewVariables {
            need: n as usize,
            have: nvars,
        });
    }
    let mut out = WeightedPolynomial::zero(nvars);
    for nu in partitions_of(n) {
        let mult = nu.multiplicities();
        let c = mult
            .iter()
            .fold(Q::one(), |acc, &m| acc / factorial_q(m));
        out.add_term(Monomial::new(mult), c);
    }
    Ok(out)
}

/// `S_0..=S_n` in `n` variables.
pub fn complete_generators(n: u32) -> Vec<WeightedPolynomial> {
    (0..=n)
        .map(|k| complete_generator(k, n as usize).expect("enough variables"))
        .collect()
}

/// Jacobi-Trudi determinant over precomputed generators; `gens` must reach
/// index `λ₁ + ℓ(λ) - 1`.
pub(crate) fn schur_from_generators(gens: &[WeightedPolynomial], lambda: &Partition) -> WeightedPolynomial {
    let nvars = gens.last().map(WeightedPolynomial::nvars).unwrap_or(0);
    let parts = lambda.parts();
    det_dp(parts.len(), |i, j| {
        let index = parts[j] as i64 - j as i64 + i as i64;
        if index < 0 {
            None
        } else {
            Some(gens[index as usize].clone())
        }
    })
    .with_nvars(nvars)
}

/// `S_λ(x) = det(S_{λ_j - j + i}(x))`.
pub fn schur_polynomial(lambda: &Partition, nvars: usize) -> Result<WeightedPolynomial> {
    let weight = lambda.weight() as usize;
    if nvars < weight {
        return Err(Error::TooFewVariables {
            need: weight,
            have: nvars,
        });
    }
    let top = lambda.largest() as usize + lambda.len().max(1) - 1;
    let gens: Vec<WeightedPolynomial> = (0..=top as u32)
        .map(|k| complete_generator(k, nvars.max(top)).expect("enough variables"))
        .collect();
    Ok(schur_from_generators(&gens, lambda).with_nvars(nvars))
}

pub fn partial_derivative(poly: &WeightedPolynomial, var: usize, order: u32) -> WeightedPolynomial {
    poly.partial_derivative(var, order)
}

/// `f^λ = ∂^{|λ|} S_λ / ∂x_1^{|λ|}`.
pub fn degree_derivative(lambda: &Partition) -> Result<BigUint> {
    let d = lambda.weight();
    let s = schur_polynomial(lambda, d as usize)?;
    let derivative = s.partial_derivative(1, d);
    let value = derivative.as_constant().ok_or_else(|| {
        Error::Invariant(format!("d-th x1-derivative of S_{lambda} is not constant"))
    })?;
    let degree = to_natural(&value, "∂^d S_λ / ∂x1^d")?;
    if degree.is_zero() {
        return Err(Error::Invariant(format!("degree of {lambda} is zero")));
    }
    Ok(degree)
}

/// `S_i · e` by Pieri's rule, optionally dropping terms outside an `r x c` rectangle.
pub fn pieri_multiply(i: u32, e: &SchurExpansion, cap: Option<(u32, u32)>) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (lambda, c) in e.terms() {
        for mu in pieri_up(lambda, i, cap) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// `|μ|! / Π_k (k!)^{m_k}`, where `m_k` is the multiplicity of `k` in `μ`.
pub fn integral_closed_form(mu: &Partition) -> Q {
    let mut value = factorial_q(mu.weight());
    for (k, &m) in mu.multiplicities().iter().enumerate() {
        let f = factorial_q(k as u32 + 1);
        for _ in 0..m {
            value /= &f;
        }
    }
    value
}

/// `(∂/∂x_1)^{|μ|} h_μ` with `h_μ = Π S_{μ_j}(x)`, checked against
/// [`integral_closed_form`].
pub fn integral_h_mu(mu: &Partition, cutoff: u32) -> Result<Q> {
    let d = mu.weight();
    if d > cutoff {
        return Err(Error::CutoffExceeded { weight: d, cutoff });
    }
    let nvars = d as usize;
    let mut h = WeightedPolynomial::constant(Q::one(), nvars);
    for &part in mu.parts() {
        h = &h * &complete_generator(part, nvars)?;
    }
    let value = h.partial_derivative(1, d).as_constant().ok_or_else(|| {
        Error::Invariant(format!("|μ|-th x1-derivative of h_{mu} is not constant"))
    })?;
    let expected = integral_closed_form(mu);
    if value != expected {
        return Err(Error::Invariant(format!(
            "∂^{d} h_{mu} = {value}, closed form gives {expected}"
        )));
    }
    Ok(value)
}

/// Coefficient of `Π u_k^{m_k} · t^{|μ|}` in `exp(Σ_k u_k t^k / k!)`, read off a
/// truncated expansion in the variables `u_1..u_{μ₁}, t`.
pub fn generating_function_coefficient(mu: &Partition) -> Q {
    let d = mu.weight();
    let r = mu.largest() as usize;
    let t = r + 1;
    let truncate = |p: &WeightedPolynomial| p.truncate_var(t, d);
    // A = Σ u_k t^k / k!
    let mut a = WeightedPolynomial::zero(t);
    for k in 1..=r {
        let m = Monomial::var(k, 1).mul(&Monomial::var(t, k as u32));
        a.add_term(m, Q::one() / factorial_q(k as u32));
    }
    let mut total = WeightedPolynomial::constant(Q::one(), t);
    let mut power = total.clone();
    for m in 1..=d {
        power = truncate(&(&power * &a));
        total = &total + &power.scale(&(Q::one() / factorial_q(m)));
    }
    let mut exps = mu.multiplicities();
    exps.resize(r, 0);
    exps.push(d);
    total.coeff(&Monomial::new(exps))
}

/// `(∂/∂x_1)^{|μ|} h_μ` recovered from the generating function
/// `exp(Σ u_k S_k) = Σ_μ h_μ Π u_k^{m_k}/m_k!`: the plain monomial coefficient
/// is scaled by `|μ|! · Π m_k!`.
pub fn integral_via_generating_function(mu: &Partition) -> Q {
    let divided_powers: BigUint = mu
        .multiplicities()
        .iter()
        .fold(BigUint::one(), |acc, &m| acc * factorial(m));
    generating_function_coefficient(mu)
        * factorial_q(mu.weight())
        * Q::from_integer(divided_powers.into())
}
