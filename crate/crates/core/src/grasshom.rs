//! Homology of the Grassmannian `G(r, n)` in the Schubert basis `Ω^λ`,
//! `λ ⊆ r x (n-r)`, with cap products by the special classes `σ_i = c_i(Q_r)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{format_q, parse_q, to_natural, Q};
use crate::partitions::{complement, partitions_in_rectangle, pieri_down, Partition};
use crate::ringb::{s_tilde_operator, SchurExpansion, SchurTable};

/// `Σ a_λ Ω^λ` in `H_*(G(r, n), Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyClass {
    r: u32,
    n: u32,
    coeffs: BTreeMap<Partition, Q>,
}

impl HomologyClass {
    pub fn zero(r: u32, n: u32) -> Self {
        assert!(n >= r, "G({r}, {n}) needs n >= r");
        HomologyClass {
            r,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The Schubert class `Ω^λ`.
    pub fn schubert(lambda: Partition, r: u32, n: u32) -> Result<Self> {
        let mut c = Self::zero(r, n);
        c.add_term(lambda, Q::one())?;
        Ok(c)
    }

    /// `[G(r, n)] = Ω^{((n-r)^r)}`.
    pub fn fundamental(r: u32, n: u32) -> Self {
        let full = Partition::new(vec![n - r; r as usize]).expect("rectangle");
        Self::schubert(full, r, n).expect("rectangle fits itself")
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cols(&self) -> u32 {
        self.n - self.r
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) -> Result<()> {
        if !lambda.fits(self.r, self.cols()) {
            return Err(Error::NotInRectangle {
                partition: lambda,
                rows: self.r,
                cols: self.cols(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (lambda, v) in &self.coeffs {
            out.add_term(lambda.clone(), v * c).expect("same ambient");
        }
        out
    }

    pub fn add(&self, other: &HomologyClass) -> Self {
        assert_eq!((self.r, self.n), (other.r, other.n), "ambient mismatch");
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), c.clone()).expect("same ambient");
        }
        out
    }

    /// Terms whose coefficients differ between `self` and `other`:
    /// `(λ, self coefficient, other coefficient)`.
    pub fn diff(&self, other: &HomologyClass) -> Vec<(Partition, String, String)> {
        let mut keys: Vec<&Partition> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter(|k| self.coeff(k) != other.coeff(k))
            .map(|k| (k.clone(), format_q(&self.coeff(k)), format_q(&other.coeff(k))))
            .collect()
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.coeffs.iter().rev().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{}·", format_q(&magnitude))?;
            }
            let inner = if lambda.is_empty() { String::new() } else { lambda.to_string() };
            write!(f, "Ω[{inner}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct JsonClass {
    r: u32,
    n: u32,
    terms: Vec<JsonTerm>,
}

/// `{"r": 2, "n": 4, "terms": [{"partition": "2,1", "coef": "1"}]}`
impl Serialize for HomologyClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonClass {
            r: self.r,
            n: self.n,
            terms: self
                .coeffs
                .iter()
                .map(|(p, c)| JsonTerm {
                    partition: p.clone(),
                    coef: format_q(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonClass::deserialize(d)?;
        if raw.n < raw.r {
            return Err(D::Error::custom("n must be at least r"));
        }
        let mut class = HomologyClass::zero(raw.r, raw.n);
        for t in raw.terms {
            let c = parse_q(&t.coef).map_err(D::Error::custom)?;
            class.add_term(t.partition, c).map_err(D::Error::custom)?;
        }
        Ok(class)
    }
}

/// `σ_i ∩ c` by the dual Pieri rule `Ω^λ ↦ Σ_{μ ∈ PF_{-i}(λ)} Ω^μ`.
pub fn cap_sigma(i: u32, class: &HomologyClass) -> HomologyClass {
    let mut out = HomologyClass::zero(class.r, class.n);
    for (lambda, c) in class.terms() {
        for mu in pieri_down(lambda, i) {
            out.add_term(mu, c.clone())
                .expect("removing a strip stays in the rectangle");
        }
    }
    out
}

/// `π_{r,n}`: `S_λ ↦ Ω^λ`, extended by zero outside the rectangle.
pub fn projection_pi(e: &SchurExpansion, r: u32, n: u32) -> HomologyClass {
    let mut out = HomologyClass::zero(r, n);
    for (lambda, c) in e.terms() {
        if lambda.fits(r, n - r) {
            out.add_term(lambda.clone(), c.clone()).expect("fits");
        }
    }
    out
}

/// The part of `e` that [`projection_pi`] discards.
pub fn projection_leak(e: &SchurExpansion, r: u32, n: u32) -> SchurExpansion {
    SchurExpansion::from_terms(
        e.terms()
            .filter(|(lambda, _)| !lambda.fits(r, n - r))
            .map(|(l, c)| (l.clone(), c.clone())),
    )
}

/// `f^λ = σ_1^{|λ|} ∩ Ω^λ`, read off as the coefficient of `Ω^()`.
pub fn degree_cap(lambda: &Partition, r: u32, n: u32) -> Result<BigUint> {
    let mut class = HomologyClass::schubert(lambda.clone(), r, n)?;
    for _ in 0..lambda.weight() {
        class = cap_sigma(1, &class);
    }
    to_natural(&class.coeff(&Partition::empty()), "σ_1^d ∩ Ω^λ")
}

/// Smallest Grassmannian containing `λ`: `r = max(ℓ(λ), 1)`, `n = r + λ₁`.
pub fn minimal_ambient(lambda: &Partition) -> (u32, u32) {
    let r = (lambda.len() as u32).max(1);
    (r, r + lambda.largest())
}

/// One signed monomial `± σ_{a_1} ⋯ σ_{a_k}` of a Giambelli determinant.
#[derive(Clone, Debug, Serialize)]
pub struct SigmaProduct {
    pub sign: i8,
    pub indices: Vec<u32>,
}

/// Expands `det(σ_{ν_j - j + i})` into signed products, dropping vanishing ones
/// and `σ_0 = 1` factors.
pub fn giambelli_expansion(nu: &Partition) -> Vec<SigmaProduct> {
    fn rec(nu: &[u32], row: usize, used: &mut Vec<bool>, indices: &mut Vec<u32>, sign: i8, out: &mut Vec<SigmaProduct>) {
        let k = nu.len();
        if row == k {
            let mut factors: Vec<u32> = indices.iter().copied().filter(|&a| a > 0).collect();
            factors.sort_unstable();
            out.push(SigmaProduct { sign, indices: factors });
            return;
        }
        for col in 0..k {
            if used[col] {
                continue;
            }
            let index = nu[col] as i64 - col as i64 + row as i64;
            if index < 0 {
                continue;
            }
            // inversions with earlier rows: used columns to the right
            let flips = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if flips % 2 == 0 { sign } else { -sign };
            used[col] = true;
            indices.push(index as u32);
            rec(nu, row + 1, used, indices, s, out);
            indices.pop();
            used[col] = false;
        }
    }
    let mut out = Vec::new();
    rec(nu.parts(), 0, &mut vec![false; nu.len()], &mut Vec::new(), 1, &mut out);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GiambelliReport {
    pub partition: Partition,
    pub r: u32,
    pub n: u32,
    pub complement: Partition,
    pub products: Vec<SigmaProduct>,
    pub result: HomologyClass,
    pub pass: bool,
    pub diff: Vec<(Partition, String, String)>,
}

/// Checks `Δ_{λᶜ}(c_t(Q_r)) ∩ [G(r, n)] = Ω^λ`; products of `σ`'s are applied
/// right to left.
pub fn giambelli_check(lambda: &Partition, r: u32, n: u32) -> Result<GiambelliReport> {
    let comp = complement(lambda, r, n - r)?;
    let products = giambelli_expansion(&comp);
    let fundamental = HomologyClass::fundamental(r, n);
    let mut result = HomologyClass::zero(r, n);
    for product in &products {
        let mut class = fundamental.clone();
        for &a in product.indices.iter().rev() {
            class = cap_sigma(a, &class);
        }
        result = result.add(&class.scale(&Q::from_integer(product.sign.into())));
    }
    let expected = HomologyClass::schubert(lambda.clone(), r, n)?;
    let diff = result.diff(&expected);
    Ok(GiambelliReport {
        partition: lambda.clone(),
        r,
        n,
        complement: comp,
        products,
        pass: diff.is_empty(),
        result,
        diff,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaCheck {
    pub i: u32,
    pub cap: HomologyClass,
    pub operator: HomologyClass,
    /// Schur terms of `S_i(∂̃) S_λ` outside the rectangle (always expected empty).
    pub leaked: SchurExpansion,
    pub pass: bool,
    pub diff: Vec<(Partition, String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem13Report {
    pub partition: Partition,
    pub r: u32,
    pub n: u32,
    pub checks: Vec<SigmaCheck>,
    pub pass: bool,
}

/// For `1 <= i <= max_i`, compares `σ_i ∩ Ω^λ` with `π_{r,n}(S_i(∂̃) S_λ(x))`.
///
/// `table` must cover weight `|λ|`.
pub fn theorem13_check_with(
    table: &SchurTable,
    lambda: &Partition,
    r: u32,
    n: u32,
    max_i: u32,
) -> Result<Theorem13Report> {
    let omega = HomologyClass::schubert(lambda.clone(), r, n)?;
    let d = lambda.weight();
    if max_i > d {
        return Err(Error::Invariant(format!("max_i = {max_i} exceeds |λ| = {d}")));
    }
    let s_lambda = table
        .basis(d)
        .and_then(|b| b.polynomial(lambda))
        .ok_or_else(|| Error::Invariant(format!("Schur table does not reach weight {d}")))?;
    let mut checks = Vec::with_capacity(max_i as usize);
    for i in 1..=max_i {
        let cap = cap_sigma(i, &omega);
        let expanded = table.expand(&s_tilde_operator(i).apply(s_lambda))?;
        let operator = projection_pi(&expanded, r, n);
        let leaked = projection_leak(&expanded, r, n);
        let diff = cap.diff(&operator);
        checks.push(SigmaCheck {
            i,
            pass: diff.is_empty() && leaked.is_zero(),
            cap,
            operator,
            leaked,
            diff,
        });
    }
    Ok(Theorem13Report {
        partition: lambda.clone(),
        r,
        n,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

pub fn theorem13_check(lambda: &Partition, r: u32, n: u32, max_i: u32) -> Result<Theorem13Report> {
    let table = SchurTable::new(lambda.weight())?;
    theorem13_check_with(&table, lambda, r, n, max_i)
}

/// Runs [`theorem13_check_with`] for every `λ ∈ P_{r,n}` with `max_i = |λ|`,
/// in canonical partition order.
pub fn theorem13_sweep(r: u32, n: u32) -> Result<Vec<Theorem13Report>> {
    let table = SchurTable::new(r * (n - r))?;
    partitions_in_rectangle(r, n - r)
        .into_par_iter()
        .map(|lambda| {
            let d = lambda.weight();
            theorem13_check_with(&table, &lambda, r, n, d)
        })
        .collect()
}

pub fn giambelli_sweep(r: u32, n: u32) -> Result<Vec<GiambelliReport>> {
    partitions_in_rectangle(r, n - r)
        .into_par_iter()
        .map(|lambda| giambelli_check(&lambda, r, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::q;
    use crate::partitions::{degree_hook, p, partitions_of};
    use crate::ringb::degree_derivative;
    use crate::schurdet::degree_determinant;

    fn omega(parts: &[u32], r: u32, n: u32) -> HomologyClass {
        HomologyClass::schubert(p(parts), r, n).unwrap()
    }

    #[test]
    fn cap_examples() {
        let c = omega(&[2, 2], 2, 4);
        assert_eq!(cap_sigma(0, &c), c);
        assert_eq!(cap_sigma(1, &c), omega(&[2, 1], 2, 4));
        assert_eq!(cap_sigma(2, &c), omega(&[2], 2, 4));
        assert!(cap_sigma(1, &omega(&[], 2, 4)).is_zero());
    }

    #[test]
    fn classes_respect_the_rectangle() {
        assert!(HomologyClass::schubert(p(&[3]), 2, 4).is_err());
        assert!(HomologyClass::schubert(p(&[1, 1, 1]), 2, 4).is_err());
        assert_eq!(HomologyClass::fundamental(2, 4), omega(&[2, 2], 2, 4));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            projection_pi(&SchurExpansion::basis(p(&[2, 1])), 2, 4),
            omega(&[2, 1], 2, 4)
        );
        let e = SchurExpansion::from_terms([(p(&[3]), q(1)), (p(&[2, 1]), q(2))]);
        assert_eq!(projection_pi(&e, 2, 4), omega(&[2, 1], 2, 4).scale(&q(2)));
        assert_eq!(projection_leak(&e, 2, 4), SchurExpansion::basis(p(&[3])));
        assert!(projection_pi(&SchurExpansion::new(), 2, 4).is_zero());
    }

    #[test]
    fn degrees_by_caps() {
        assert_eq!(degree_cap(&p(&[2, 2]), 2, 4).unwrap(), BigUint::from(2u32));
        assert_eq!(degree_cap(&p(&[3, 2, 1]), 3, 6).unwrap(), BigUint::from(16u32));
        assert_eq!(degree_cap(&p(&[]), 3, 5).unwrap(), BigUint::one());
        assert!(degree_cap(&p(&[3]), 2, 4).is_err());
    }

    #[test]
    fn degree_does_not_depend_on_n() {
        for d in 0..=6 {
            for lambda in partitions_of(d) {
                let (r, n0) = minimal_ambient(&lambda);
                let base = degree_cap(&lambda, r, n0).unwrap();
                for extra in 1..=2 {
                    assert_eq!(degree_cap(&lambda, r, n0 + extra).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn cap_degree_agrees_on_g37() {
        for lambda in partitions_in_rectangle(3, 4) {
            let cap = degree_cap(&lambda, 3, 7).unwrap();
            assert_eq!(cap, degree_hook(&lambda));
            assert_eq!(cap, degree_determinant(&lambda).unwrap());
            assert_eq!(cap, degree_derivative(&lambda).unwrap());
        }
    }

    #[test]
    fn caps_commute_and_lower_dimension() {
        for lambda in partitions_in_rectangle(3, 4) {
            let c = omega(lambda.parts(), 3, 7);
            for i in 0..=3 {
                let once = cap_sigma(i, &c);
                assert!(once.terms().all(|(mu, _)| mu.weight() + i == lambda.weight()));
                for j in 0..=3 {
                    assert_eq!(cap_sigma(i, &cap_sigma(j, &c)), cap_sigma(j, &once));
                }
            }
        }
    }

    #[test]
    fn giambelli_examples() {
        let full = giambelli_check(&p(&[2, 2]), 2, 4).unwrap();
        assert_eq!(full.complement, p(&[]));
        assert!(full.pass);
        let r21 = giambelli_check(&p(&[2, 1]), 2, 4).unwrap();
        assert_eq!(r21.complement, p(&[1]));
        assert!(r21.pass);
        let r11 = giambelli_check(&p(&[1, 1]), 2, 4).unwrap();
        assert_eq!(r11.complement, p(&[1, 1]));
        // σ1² - σ2
        assert_eq!(r11.products.len(), 2);
        assert!(r11.pass, "{:?}", r11.diff);
        assert_eq!(r11.result.to_string(), "Ω[1,1]");
    }

    #[test]
    fn giambelli_sweeps() {
        for (r, n) in [(2, 4), (2, 5), (3, 6)] {
            assert!(giambelli_sweep(r, n).unwrap().iter().all(|g| g.pass));
        }
    }

    #[test]
    fn theorem13_examples() {
        let report = theorem13_check(&p(&[2, 2]), 2, 4, 1).unwrap();
        assert!(report.pass);
        assert_eq!(report.checks[0].cap, omega(&[2, 1], 2, 4));
        assert_eq!(report.checks[0].operator, omega(&[2, 1], 2, 4));
        assert!(theorem13_check(&p(&[2, 2]), 2, 4, 5).is_err());
        assert!(theorem13_sweep(2, 5).unwrap().iter().all(|t| t.pass));
    }

    #[test]
    fn rendering_and_json() {
        let c = omega(&[2, 1], 2, 4).add(&omega(&[1, 1], 2, 4).scale(&q(2)));
        assert_eq!(c.to_string(), "Ω[2,1] + 2·Ω[1,1]");
        assert_eq!(omega(&[], 2, 4).to_string(), "Ω[]");
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"r":2,"n":4,"terms":[{"partition":"1,1","coef":"2"},{"partition":"2,1","coef":"1"}]}"#
        );
        assert_eq!(serde_json::from_str::<HomologyClass>(&json).unwrap(), c);
        let outside = r#"{"r":2,"n":4,"terms":[{"partition":"3","coef":"1"}]}"#;
        assert!(serde_json::from_str::<HomologyClass>(outside).is_err());
    }
}
