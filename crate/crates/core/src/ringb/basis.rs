use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{Monomial, WeightedPolynomial};
use super::{complete_generators, schur_from_generators};
use crate::error::{Error, Result};
use crate::num::{format_q, inverse_q, parse_q, Q};
use crate::partitions::{partitions_of, Partition};

/// An element of `B` written in the Schur basis: `Σ c_λ S_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, Q>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(lambda, Q::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Q)>>(terms: I) -> Self {
        let mut e = Self::new();
        for (lambda, c) in terms {
            e.add_term(lambda, c);
        }
        e
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Q)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_weight(&self) -> u32 {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    /// `Σ c_λ S_λ(x)` as an explicit polynomial.
    pub fn to_polynomial(&self) -> WeightedPolynomial {
        let n = self.max_weight() as usize;
        let gens = complete_generators(n as u32);
        let mut out = WeightedPolynomial::zero(n);
        for (lambda, c) in &self.coeffs {
            out = &out + &schur_from_generators(&gens, lambda).scale(c);
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.coeffs.iter().rev().enumerate() {
            let magnitude = if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                c.abs()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if !magnitude.is_one() {
                write!(f, "{}·", format_q(&magnitude))?;
            }
            write!(f, "S[{}]", lambda)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    coef: String,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .coeffs
            .iter()
            .map(|(p, c)| JsonTerm {
                partition: p.clone(),
                coef: format_q(c),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        let mut e = SchurExpansion::new();
        for t in terms {
            e.add_term(t.partition, parse_q(&t.coef).map_err(serde::de::Error::custom)?);
        }
        Ok(e)
    }
}

/// The weight-`d` Schur polynomials together with the inverse of their
/// coefficient matrix against the weight-`d` monomials.
///
/// Weight-`d` monomials `Π x_k^{m_k}` are indexed by the partition with
/// multiplicities `m_k`, so both sides of the change of basis have `p(d)`
/// elements.
#[derive(Clone, Debug)]
pub struct SchurBasis {
    weight: u32,
    partitions: Vec<Partition>,
    polynomials: Vec<WeightedPolynomial>,
    monomial_index: BTreeMap<Monomial, usize>,
    // inverse[monomial][partition]
    inverse: Vec<Vec<Q>>,
}

impl SchurBasis {
    pub fn new(weight: u32) -> Result<Self> {
        let partitions = partitions_of(weight);
        let gens = complete_generators(weight);
        let polynomials: Vec<WeightedPolynomial> = partitions
            .iter()
            .map(|lambda| schur_from_generators(&gens, lambda))
            .collect();
        let monomial_index: BTreeMap<Monomial, usize> = partitions
            .iter()
            .enumerate()
            .map(|(k, nu)| (Monomial::new(nu.multiplicities()), k))
            .collect();
        let n = partitions.len();
        let mut matrix = vec![vec![Q::zero(); n]; n];
        for (row, poly) in polynomials.iter().enumerate() {
            for (m, c) in poly.terms() {
                let col = *monomial_index.get(m).ok_or_else(|| {
                    Error::Invariant(format!("S_{} has a term off weight {weight}", partitions[row]))
                })?;
                matrix[row][col] = c.clone();
            }
        }
        let inverse = inverse_q(matrix)?;
        Ok(SchurBasis {
            weight,
            partitions,
            polynomials,
            monomial_index,
            inverse,
        })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn polynomial(&self, lambda: &Partition) -> Option<&WeightedPolynomial> {
        let k = self.partitions.iter().position(|p| p == lambda)?;
        Some(&self.polynomials[k])
    }

    /// Expands a homogeneous polynomial of this basis' weight.
    pub fn expand_homogeneous(&self, poly: &WeightedPolynomial) -> Result<SchurExpansion> {
        let n = self.partitions.len();
        let mut coords = vec![Q::zero(); n];
        for (m, c) in poly.terms() {
            let k = *self.monomial_index.get(m).ok_or_else(|| {
                Error::Invariant(format!(
                    "term of weight {} passed to the weight-{} basis",
                    m.weighted_degree(),
                    self.weight
                ))
            })?;
            coords[k] = c.clone();
        }
        let mut out = SchurExpansion::new();
        for (col, lambda) in self.partitions.iter().enumerate() {
            let c: Q = (0..n)
                .filter(|&k| !coords[k].is_zero())
                .map(|k| &coords[k] * &self.inverse[k][col])
                .sum();
            out.add_term(lambda.clone(), c);
        }
        // exact round trip
        let mut rebuilt = WeightedPolynomial::zero(poly.nvars());
        for (lambda, c) in out.terms() {
            rebuilt = &rebuilt + &self.polynomial(lambda).expect("basis element").scale(c);
        }
        if &rebuilt != poly {
            return Err(Error::Invariant(format!(
                "Schur expansion of weight-{} polynomial does not reproduce it",
                self.weight
            )));
        }
        Ok(out)
    }
}

/// Schur bases for every weight up to a bound, built once and shared by sweeps.
#[derive(Clone, Debug)]
pub struct SchurTable {
    bases: Vec<SchurBasis>,
}

impl SchurTable {
    pub fn new(max_weight: u32) -> Result<Self> {
        use rayon::prelude::*;
        let bases = (0..=max_weight)
            .into_par_iter()
            .map(SchurBasis::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(SchurTable { bases })
    }

    pub fn max_weight(&self) -> u32 {
        self.bases.len() as u32 - 1
    }

    pub fn basis(&self, weight: u32) -> Option<&SchurBasis> {
        self.bases.get(weight as usize)
    }

    pub fn expand(&self, poly: &WeightedPolynomial) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::new();
        for (d, component) in poly.components() {
            let basis = self.basis(d).ok_or_else(|| {
                Error::Invariant(format!(
                    "weight {d} exceeds the table bound {}",
                    self.max_weight()
                ))
            })?;
            for (lambda, c) in basis.expand_homogeneous(&component)?.terms() {
                out.add_term(lambda.clone(), c.clone());
            }
        }
        Ok(out)
    }
}

/// The unique `c_λ` with `P = Σ c_λ S_λ(x)`.
pub fn expand_in_schur(poly: &WeightedPolynomial) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new();
    for (d, component) in poly.components() {
        let basis = SchurBasis::new(d)?;
        for (lambda, c) in basis.expand_homogeneous(&component)?.terms() {
            out.add_term(lambda.clone(), c.clone());
        }
    }
    Ok(out)
}
