use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{render_terms, Monomial, WeightedPolynomial};
use crate::num::{factorial_q, q, Q};
use crate::partitions::partitions_of;

/// A constant-coefficient differential operator `Σ c_β ∂^β`, where `∂^β` is
/// `Π (∂/∂x_k)^{β_k}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    terms: BTreeMap<Monomial, Q>,
}

impl DiffOperator {
    pub fn identity() -> Self {
        let mut op = DiffOperator::default();
        op.add_term(Monomial::one(), Q::one());
        op
    }

    pub fn add_term(&mut self, orders: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(orders.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&orders);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, orders: &Monomial) -> Q {
        self.terms.get(orders).cloned().unwrap_or_else(Q::zero)
    }

    pub fn apply(&self, poly: &WeightedPolynomial) -> WeightedPolynomial {
        let mut out = WeightedPolynomial::zero(poly.nvars());
        for (orders, c) in &self.terms {
            for (m, v) in poly.terms() {
                let Some(lowered) = m.div(orders) else { continue };
                // Π e_k! / (e_k - β_k)!
                let mut factor = Q::one();
                for (k, &beta) in orders.exps().iter().enumerate() {
                    let e = m.exps()[k];
                    for j in 0..beta {
                        factor *= q((e - j) as i64);
                    }
                }
                out.add_term(lowered, c * v * factor);
            }
        }
        out
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.len() == 1 && self.terms.contains_key(&Monomial::one()) {
            return write!(f, "{}", self.terms[&Monomial::one()]);
        }
        render_terms(f, self.terms.iter(), "d")
    }
}

/// `S_i(∂̃)`: the coefficient of `t^i` in `exp(Σ_{k≥1} (t^k/k) ∂/∂x_k)`.
///
/// Expanding the exponential, the term indexed by the multiplicities `m_k`
/// of a partition of `i` is `Π (1/k)^{m_k} / m_k! · ∂_k^{m_k}`.
pub fn s_tilde_operator(i: u32) -> DiffOperator {
    let mut op = DiffOperator::default();
    for nu in partitions_of(i) {
        let mult = nu.multiplicities();
        let mut c = Q::one();
        for (k, &m) in mult.iter().enumerate() {
            let weight = q(k as i64 + 1);
            for _ in 0..m {
                c /= &weight;
            }
            c /= factorial_q(m);
        }
        op.add_term(Monomial::new(mult), c);
    }
    op
}
