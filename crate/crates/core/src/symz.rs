//! Schur polynomials `s_λ(z_1..z_r)` in finitely many variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::det::{det_dp, Ring};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::schurdet::degree_determinant;

/// Integer polynomial in `z_1..z_r`; every exponent vector has length `r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigInt, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// `z_var` with a 1-based index.
    pub fn var(var: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(BigInt::one(), self.nvars), |acc, _| acc.mul(self))
    }

    /// Value at `z_1 = ... = z_r = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Swaps `z_a` and `z_b` (1-based).
    pub fn transpose(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(a - 1, b - 1);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Sets the last variable to zero and drops it.
    pub fn drop_last_var(&self) -> Self {
        let n = self.nvars - 1;
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            if e[n] == 0 {
                out.add_term(e[..n].to_vec(), c.clone());
            }
        }
        out
    }

    /// Exact quotient by `z_a - z_b` (1-based), or an error if it does not divide.
    pub fn div_difference(&self, a: usize, b: usize) -> Result<Self> {
        let (ia, ib) = (a - 1, b - 1);
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.nvars);
        while let Some((exps, c)) = rest
            .terms
            .iter()
            .max_by(|x, y| x.0[ia].cmp(&y.0[ia]).then_with(|| x.0.cmp(y.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if exps[ia] == 0 {
                return Err(Error::Invariant(format!(
                    "z{a} - z{b} does not divide the polynomial"
                )));
            }
            let mut q = exps.clone();
            q[ia] -= 1;
            // rest -= c z^q (z_a - z_b)
            rest.add_term(exps, -c.clone());
            let mut shifted = q.clone();
            shifted[ib] += 1;
            rest.add_term(shifted, c.clone());
            quotient.add_term(q, c);
        }
        Ok(quotient)
    }
}

impl Ring for SymPoly {
    fn zero() -> Self {
        SymPoly::zero(0)
    }
    fn one() -> Self {
        // dimension is fixed up on first multiplication
        SymPoly::constant(BigInt::one(), 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        if self.terms.is_empty() {
            return other.clone();
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }
    fn mul(&self, other: &Self) -> Self {
        if self.nvars == 0 && self.terms.len() == 1 {
            return other.scale(&self.terms.values().next().cloned().unwrap());
        }
        if other.nvars == 0 && other.terms.len() == 1 {
            return self.scale(&other.terms.values().next().cloned().unwrap());
        }
        let mut out = Self::zero(self.nvars.max(other.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let magnitude = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("z{}", i + 1) } else { format!("z{}^{x}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&vars.join(" "))?;
            } else {
                write!(f, "{magnitude} * {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: Vec<u32>,
    coef: String,
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| JsonTerm {
                exponents: e.clone(),
                coef: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

/// Complete homogeneous symmetric polynomial `h_k(z_1..z_r)`.
pub fn complete_homogeneous(k: u32, r: usize) -> SymPoly {
    fn rec(var: usize, left: u32, exps: &mut Vec<u32>, out: &mut SymPoly) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.add_term(exps.clone(), BigInt::one());
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    let mut out = SymPoly::zero(r);
    if r == 0 {
        if k == 0 {
            out.add_term(Vec::new(), BigInt::one());
        }
        return out;
    }
    rec(0, k, &mut vec![0; r], &mut out);
    out
}

/// `s_λ(z_1..z_r)` by the Jacobi-Trudi determinant `det(h_{λ_j - j + i})`.
///
/// Zero when `ℓ(λ) > r`.
pub fn schur_z(lambda: &Partition, r: usize) -> SymPoly {
    if lambda.len() > r {
        return SymPoly::zero(r);
    }
    let parts = lambda.parts();
    let top = if parts.is_empty() { 0 } else { parts[0] as usize + parts.len() - 1 };
    let h: Vec<SymPoly> = (0..=top as u32).map(|k| complete_homogeneous(k, r)).collect();
    let det = det_dp(parts.len(), |i, j| {
        let index = parts[j] as i64 - j as i64 + i as i64;
        (index >= 0).then(|| h[index as usize].clone())
    });
    if det.nvars() == 0 && !det.is_zero() {
        // empty determinant
        return SymPoly::constant(det.eval_ones(), r);
    }
    det
}

/// `s_λ` as the bialternant `det(z_j^{λ_i + r - i}) / Π_{i<j} (z_i - z_j)`.
pub fn schur_z_bialternant(lambda: &Partition, r: usize) -> Result<SymPoly> {
    if lambda.len() > r {
        return Ok(SymPoly::zero(r));
    }
    let padded = lambda.padded(r);
    let monomial = |var: usize, power: u32| {
        let mut exps = vec![0; r];
        exps[var] = power;
        let mut p = SymPoly::zero(r);
        p.add_term(exps, BigInt::one());
        p
    };
    let mut alternant = det_dp(r, |i, j| Some(monomial(j, padded[i] + (r - 1 - i) as u32)));
    if r == 0 {
        return Ok(SymPoly::constant(BigInt::one(), 0));
    }
    for a in 1..=r {
        for b in a + 1..=r {
            alternant = alternant.div_difference(a, b)?;
        }
    }
    Ok(alternant)
}

/// `s_λ(1, ..., 1)` with `r` ones: the number of tableaux of shape `λ` with
/// entries in `1..=r`, weakly increasing along rows and strictly down columns.
pub fn principal_specialization(lambda: &Partition, r: usize) -> BigUint {
    schur_z(lambda, r)
        .eval_ones()
        .to_biguint()
        .expect("Schur polynomials have nonnegative coefficients")
}

/// Outcome of comparing `(z_1 + ... + z_r)^d` with `Σ_{λ ⊢ d} f^λ s_λ(z)`.
#[derive(Clone, Debug, Serialize)]
pub struct PowerExpansionReport {
    pub d: u32,
    pub r: usize,
    pub pass: bool,
    pub lhs: SymPoly,
    pub rhs: SymPoly,
    /// `(exponents, lhs coefficient, rhs coefficient)` for every differing term.
    pub diff: Vec<(Vec<u32>, String, String)>,
}

pub fn power_expansion_check(d: u32, r: usize) -> Result<PowerExpansionReport> {
    let p1 = (1..=r).fold(SymPoly::zero(r), |acc, k| acc.add(&SymPoly::var(k, r)));
    let lhs = p1.pow(d);
    let mut rhs = SymPoly::zero(r);
    for lambda in partitions_of(d) {
        if lambda.len() > r {
            continue;
        }
        let f = BigInt::from(degree_determinant(&lambda)?);
        rhs = rhs.add(&schur_z(&lambda, r).scale(&f));
    }
    let mut keys: Vec<&Vec<u32>> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    let diff: Vec<(Vec<u32>, String, String)> = keys
        .into_iter()
        .filter(|e| lhs.coeff(e) != rhs.coeff(e))
        .map(|e| (e.clone(), lhs.coeff(e).to_string(), rhs.coeff(e).to_string()))
        .collect();
    Ok(PowerExpansionReport {
        d,
        r,
        pass: diff.is_empty(),
        lhs,
        rhs,
        diff,
    })
}

/// Outcome of `r^d = Σ_{λ ⊢ d} s_λ(1..1) f^λ`.
#[derive(Clone, Debug, Serialize)]
pub struct CountingReport {
    pub d: u32,
    pub r: usize,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    /// `(λ, s_λ(1..1), f^λ)` for the nonzero summands.
    pub terms: Vec<(Partition, String, String)>,
}

pub fn counting_check(d: u32, r: usize) -> Result<CountingReport> {
    let lhs = BigUint::from(r).pow(d);
    let mut rhs = BigUint::zero();
    let mut terms = Vec::new();
    for lambda in partitions_of(d) {
        let spec = principal_specialization(&lambda, r);
        if spec.is_zero() {
            continue;
        }
        let f = degree_determinant(&lambda)?;
        rhs += &spec * &f;
        terms.push((lambda, spec.to_string(), f.to_string()));
    }
    Ok(CountingReport {
        d,
        r,
        pass: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{hook_lengths, p};
    use proptest::prelude::*;

    fn z(text: &[(&[u32], i64)], r: usize) -> SymPoly {
        let mut out = SymPoly::zero(r);
        for (e, c) in text {
            out.add_term(e.to_vec(), BigInt::from(*c));
        }
        out
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur_z(&p(&[1]), 2), z(&[(&[1, 0], 1), (&[0, 1], 1)], 2));
        assert_eq!(schur_z(&p(&[1, 1]), 2), z(&[(&[1, 1], 1)], 2));
        assert_eq!(
            schur_z(&p(&[2]), 2),
            z(&[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)], 2)
        );
        assert_eq!(schur_z(&p(&[1, 1, 1]), 2), SymPoly::zero(2));
        assert_eq!(schur_z(&p(&[]), 3), SymPoly::constant(BigInt::one(), 3));
        assert_eq!(schur_z(&p(&[2, 1]), 2).to_string(), "z1^2 z2 + z1 z2^2");
    }

    #[test]
    fn bialternant_by_hand() {
        // λ = (1,1), r = 2: det [[z1^2, z2^2], [z1, z2]] = z1^2 z2 - z1 z2^2 = (z1 - z2) z1 z2
        assert_eq!(schur_z_bialternant(&p(&[1, 1]), 2).unwrap(), z(&[(&[1, 1], 1)], 2));
        let not_divisible = z(&[(&[1, 0], 1)], 2);
        assert!(not_divisible.div_difference(1, 2).is_err());
    }

    #[test]
    fn jacobi_trudi_matches_bialternant() {
        for r in 1..=4 {
            for d in 0..=6 {
                for lambda in partitions_of(d) {
                    assert_eq!(
                        schur_z(&lambda, r),
                        schur_z_bialternant(&lambda, r).unwrap(),
                        "{lambda}, r = {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn stability_under_dropping_a_variable() {
        for r in 1..=4 {
            for d in 0..=6 {
                for lambda in partitions_of(d) {
                    assert_eq!(schur_z(&lambda, r + 1).drop_last_var(), schur_z(&lambda, r));
                }
            }
        }
    }

    #[test]
    fn specializations() {
        assert_eq!(principal_specialization(&p(&[1]), 2), BigUint::from(2u32));
        assert_eq!(principal_specialization(&p(&[2, 1]), 2), BigUint::from(2u32));
        assert_eq!(principal_specialization(&p(&[1, 1, 1]), 2), BigUint::zero());
    }

    /// Brute-force count of column-strict tableaux with entries in `1..=r`.
    fn ssyt_count(lambda: &Partition, r: u32) -> u64 {
        let cells: Vec<(usize, usize)> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
            .collect();
        fn rec(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<u32>>, r: u32) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let mut low = 1;
            if j > 0 {
                low = low.max(grid[i][j - 1]);
            }
            if i > 0 {
                low = low.max(grid[i - 1][j] + 1);
            }
            let mut total = 0;
            for v in low..=r {
                grid[i][j] = v;
                total += rec(cells, k + 1, grid, r);
            }
            grid[i][j] = 0;
            total
        }
        let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l as usize]).collect();
        rec(&cells, 0, &mut grid, r)
    }

    #[test]
    fn specialization_counts_tableaux() {
        for r in 1..=4u32 {
            for d in 0..=6 {
                for lambda in partitions_of(d) {
                    let spec = principal_specialization(&lambda, r as usize);
                    assert_eq!(spec, BigUint::from(ssyt_count(&lambda, r)), "{lambda}, r = {r}");
                    // hook-content formula
                    let mut num = BigInt::one();
                    for (i, row) in hook_lengths(&lambda).rows.iter().enumerate() {
                        for j in 0..row.len() {
                            num *= r as i64 + j as i64 - i as i64;
                        }
                    }
                    let hooks = BigInt::from(hook_lengths(&lambda).product());
                    assert_eq!(BigInt::from(spec) * hooks, num);
                }
            }
        }
    }

    #[test]
    fn power_expansion_examples() {
        for r in 1..=3 {
            assert!(power_expansion_check(1, r).unwrap().pass);
        }
        let two = power_expansion_check(2, 2).unwrap();
        assert!(two.pass);
        assert_eq!(two.lhs, schur_z(&p(&[2]), 2).add(&schur_z(&p(&[1, 1]), 2)));
        let three = power_expansion_check(3, 2).unwrap();
        assert!(three.pass);
        assert_eq!(
            three.rhs,
            schur_z(&p(&[3]), 2).add(&schur_z(&p(&[2, 1]), 2).scale(&BigInt::from(2)))
        );
    }

    #[test]
    fn power_expansion_and_counting_sweeps() {
        for r in 1..=4 {
            for d in 0..=6 {
                assert!(power_expansion_check(d, r).unwrap().pass, "d = {d}, r = {r}");
            }
            for d in 0..=8 {
                assert!(counting_check(d, r).unwrap().pass, "d = {d}, r = {r}");
            }
        }
    }

    #[test]
    fn exponential_series_form_reduces_degree_by_degree() {
        // Σ_d t^d/d! Σ_λ f^λ s_λ = exp(t p1): the t^d/d! coefficient of exp(t p1) is p1^d
        for r in 1..=3usize {
            for d in 0..=6u32 {
                let report = power_expansion_check(d, r).unwrap();
                let p1 = (1..=r).fold(SymPoly::zero(r), |acc, k| acc.add(&SymPoly::var(k, r)));
                assert_eq!(report.lhs, p1.pow(d));
                assert!(report.pass);
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..4, 0..4).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn symmetric_under_transpositions(lambda in arb_partition(), a in 1usize..5, b in 1usize..5) {
            let s = schur_z(&lambda, 4);
            prop_assert_eq!(s.transpose(a, b), s);
        }
    }
}
