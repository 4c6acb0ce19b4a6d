//! Finite exterior algebras `⋀^r V_n`, `V_n = Q[X]/(X^n)`, and the Schubert
//! derivations acting on them.
//!
//! Basis words `X^r(λ) = X^{r-1+λ_1} ∧ ... ∧ X^{λ_r}` are indexed by
//! `λ ⊆ r x (n-r)`. Hasse-Schmidt derivations are built as plethystic
//! exponentials `exp(Σ_k z^k/k · δ(A^k))` of ordinary derivations `δ(A)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{factorial_q, format_q, parse_q, to_integer, Q};
use crate::partitions::{partitions_in_rectangle, pieri_down, pieri_up, Partition};
use crate::symz::{schur_z, SymPoly};

/// Strictly decreasing exponents `[i_1 > i_2 > ... > i_r]` of a wedge of powers of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeWord(Vec<u32>);

impl WedgeWord {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Parse(format!("wedge indices {indices:?} not strictly decreasing")));
        }
        Ok(WedgeWord(indices))
    }

    /// `X^r(λ)`: index `i` (0-based) is `λ_i + r - 1 - i`.
    pub fn from_partition(lambda: &Partition, r: usize) -> Result<Self> {
        if lambda.len() > r {
            return Err(Error::NotInRectangle {
                partition: lambda.clone(),
                rows: r as u32,
                cols: lambda.largest(),
            });
        }
        Ok(WedgeWord(
            (0..r).map(|i| lambda.part(i) + (r - 1 - i) as u32).collect(),
        ))
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.0.len();
        Partition::new(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &idx)| idx - (r - 1 - i) as u32)
                .collect(),
        )
        .expect("strictly decreasing indices give a partition")
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "X[{}]", inner.join(","))
    }
}

impl std::str::FromStr for WedgeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("X[")
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad wedge word {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(WedgeWord(Vec::new()));
        }
        let indices = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad index {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        WedgeWord::new(indices)
    }
}

/// Sorts a wedge of basis vectors into decreasing order.
///
/// Returns `None` when an index repeats (the wedge vanishes), otherwise the
/// permutation sign and the sorted word.
pub fn normalize_wedge(raw: &[i64], n: usize) -> Result<Option<(i8, WedgeWord)>> {
    if let Some(&bad) = raw.iter().find(|&&i| i < 0 || i >= n as i64) {
        return Err(Error::IndexOutOfRange { index: bad, bound: n });
    }
    let mut v: Vec<u32> = raw.iter().map(|&i| i as u32).collect();
    let mut sign = 1i8;
    // insertion sort, counting swaps
    for k in 1..v.len() {
        let mut j = k;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return Ok(None);
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    Ok(Some((sign, WedgeWord(v))))
}

/// `Σ a_w w` in `⋀^r V_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement {
    r: usize,
    n: usize,
    coeffs: BTreeMap<WedgeWord, Q>,
}

impl ExteriorElement {
    pub fn zero(r: usize, n: usize) -> Self {
        ExteriorElement {
            r,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn word(w: WedgeWord, n: usize) -> Result<Self> {
        if w.0.first().is_some_and(|&top| top as usize >= n) {
            return Err(Error::IndexOutOfRange {
                index: w.0[0] as i64,
                bound: n,
            });
        }
        let mut e = Self::zero(w.len(), n);
        e.coeffs.insert(w, Q::one());
        Ok(e)
    }

    /// The basis vector `X^r(λ)`.
    pub fn basis(lambda: &Partition, r: usize, n: usize) -> Result<Self> {
        if !lambda.fits(r as u32, (n - r.min(n)) as u32) {
            return Err(Error::NotInRectangle {
                partition: lambda.clone(),
                rows: r as u32,
                cols: (n - r.min(n)) as u32,
            });
        }
        Self::word(WedgeWord::from_partition(lambda, r)?, n)
    }

    /// All basis words of `⋀^r V_n`, in canonical partition order.
    pub fn basis_elements(r: usize, n: usize) -> Vec<ExteriorElement> {
        if r > n {
            return Vec::new();
        }
        partitions_in_rectangle(r as u32, (n - r) as u32)
            .iter()
            .map(|l| Self::basis(l, r, n).expect("rectangle"))
            .collect()
    }

    pub fn grade(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, w: WedgeWord, c: Q) {
        assert_eq!(w.len(), self.r, "grade mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(w.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    /// Adds `c · (X^{raw_1} ∧ ... ∧ X^{raw_r})`, reordering with sign.
    pub fn add_raw(&mut self, raw: &[i64], c: Q) -> Result<()> {
        if let Some((sign, w)) = normalize_wedge(raw, self.n)? {
            self.add_term(w, if sign < 0 { -c } else { c });
        }
        Ok(())
    }

    pub fn coeff(&self, w: &WedgeWord) -> Q {
        self.coeffs.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff_of(&self, lambda: &Partition) -> Q {
        match WedgeWord::from_partition(lambda, self.r) {
            Ok(w) => self.coeff(&w),
            Err(_) => Q::zero(),
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WedgeWord, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.r, self.n), (other.r, other.n), "ambient mismatch");
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (w, v) in &self.coeffs {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// The pairing making the basis words orthonormal.
    pub fn inner(&self, other: &Self) -> Q {
        self.coeffs
            .iter()
            .map(|(w, c)| c * other.coeff(w))
            .sum()
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient mismatch");
        let mut out = Self::zero(self.r + other.r, self.n);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let raw: Vec<i64> = a.0.iter().chain(&b.0).map(|&i| i as i64).collect();
                out.add_raw(&raw, ca * cb).expect("indices already in range");
            }
        }
        out
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.coeffs.iter().rev().enumerate() {
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
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: String,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    r: usize,
    n: usize,
    terms: Vec<JsonTerm>,
}

impl Serialize for ExteriorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonElement {
            r: self.r,
            n: self.n,
            terms: self
                .coeffs
                .iter()
                .map(|(w, c)| JsonTerm {
                    word: w.to_string(),
                    coef: format_q(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExteriorElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonElement::deserialize(d)?;
        let mut e = ExteriorElement::zero(raw.r, raw.n);
        for t in raw.terms {
            let w: WedgeWord = t.word.parse().map_err(D::Error::custom)?;
            if w.len() != raw.r || w.0.first().is_some_and(|&i| i as usize >= raw.n) {
                return Err(D::Error::custom(format!("{w} does not live in ⋀^{} V_{}", raw.r, raw.n)));
            }
            e.add_term(w, parse_q(&t.coef).map_err(D::Error::custom)?);
        }
        Ok(e)
    }
}

/// A linear endomorphism of `V_n` given on basis vectors: `X^j ↦ c_j X^{k_j}` or `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoSpec {
    images: Vec<Option<(u32, Q)>>,
}

impl EndoSpec {
    pub fn new(images: Vec<Option<(u32, Q)>>) -> Result<Self> {
        let n = images.len();
        if let Some(bad) = images.iter().flatten().find(|(k, _)| *k as usize >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad.0 as i64,
                bound: n,
            });
        }
        Ok(EndoSpec { images })
    }

    /// Multiplication by `X^k` on `V_n` (`k < 0` shifts down); indices
    /// leaving `0..n` are annihilated.
    pub fn shift(n: usize, k: i64) -> Self {
        let images = (0..n as i64)
            .map(|j| {
                let t = j + k;
                (0..n as i64).contains(&t).then(|| (t as u32, Q::one()))
            })
            .collect();
        EndoSpec { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, j: u32) -> Option<&(u32, Q)> {
        self.images.get(j as usize).and_then(Option::as_ref)
    }
}

/// `δ(A)`: the derivation of `⋀ V_n` extending `A` by the Leibniz rule.
pub fn derivation_apply(a: &EndoSpec, u: &ExteriorElement) -> ExteriorElement {
    assert_eq!(a.n(), u.n, "endomorphism and element live on different V_n");
    let mut out = ExteriorElement::zero(u.r, u.n);
    for (w, c) in u.terms() {
        for pos in 0..w.len() {
            let Some((target, factor)) = a.image(w.0[pos]) else { continue };
            let mut raw: Vec<i64> = w.0.iter().map(|&i| i as i64).collect();
            raw[pos] = *target as i64;
            out.add_raw(&raw, c * factor).expect("image in range");
        }
    }
    out
}

/// Coefficients `z^0..=z^order` of `exp(sign · Σ_{k≥1} z^k/k · δ(A_k))` applied to `u`,
/// where `A_k = X^{step·k}`.
fn plethystic_series(u: &ExteriorElement, order: usize, step: i64, sign: i64) -> Vec<ExteriorElement> {
    let n = u.n;
    let zero = || ExteriorElement::zero(u.r, n);
    let shifts: Vec<EndoSpec> = (0..=order).map(|k| EndoSpec::shift(n, step * k as i64)).collect();
    let mut total = vec![zero(); order + 1];
    total[0] = u.clone();
    let mut power = total.clone();
    for m in 1..=order {
        // power ← D · power, D = Σ_k (sign/k) z^k δ(A_k)
        let mut next = vec![zero(); order + 1];
        for j in 0..=order {
            if power[j].is_zero() {
                continue;
            }
            for k in 1..=order - j {
                let c = Q::new(BigInt::from(sign), BigInt::from(k));
                next[j + k] = next[j + k].add(&derivation_apply(&shifts[k], &power[j]).scale(&c));
            }
        }
        power = next;
        let inv = Q::one() / factorial_q(m as u32);
        for j in 0..=order {
            if !power[j].is_zero() {
                total[j] = total[j].add(&power[j].scale(&inv));
            }
        }
    }
    total
}

/// `σ_i` by Pieri's rule: `X^r(λ) ↦ Σ_{μ ∈ PF_i(λ), μ₁ ≤ n-r} X^r(μ)`.
pub fn sigma_plus(i: u32, u: &ExteriorElement) -> ExteriorElement {
    let (r, n) = (u.r, u.n);
    let mut out = ExteriorElement::zero(r, n);
    for (w, c) in u.terms() {
        for mu in pieri_up(&w.to_partition(), i, Some((r as u32, (n - r) as u32))) {
            out.add_term(WedgeWord::from_partition(&mu, r).expect("fits"), c.clone());
        }
    }
    out
}

/// `σ_i` as the `z^i` coefficient of the plethystic exponential `exp(Σ z^k/k δ(X^k))`.
pub fn sigma_plus_exp(i: u32, u: &ExteriorElement) -> ExteriorElement {
    plethystic_series(u, i as usize, 1, 1).pop().expect("order + 1 terms")
}

/// `σ_0 u, ..., σ_order u` from a single exponential expansion.
pub fn sigma_plus_series(u: &ExteriorElement, order: usize) -> Vec<ExteriorElement> {
    plethystic_series(u, order, 1, 1)
}

/// The `z^i` coefficient of `σ̄_+(z) = exp(-Σ z^k/k δ(X^k))`, the inverse series
/// of `σ_+(z)`. On `V_n` itself this is `u - Xu·z`.
pub fn sigma_bar_plus(i: u32, u: &ExteriorElement) -> ExteriorElement {
    plethystic_series(u, i as usize, 1, -1).pop().expect("order + 1 terms")
}

/// `σ_{-i}`: the `z^i` coefficient of `exp(Σ z^k/k δ(X^{-k}))`.
pub fn sigma_minus(i: u32, u: &ExteriorElement) -> ExteriorElement {
    plethystic_series(u, i as usize, -1, 1).pop().expect("order + 1 terms")
}

/// `σ_{-i}` by the dual Pieri rule `X^r(λ) ↦ Σ_{μ ∈ PF_{-i}(λ)} X^r(μ)`.
pub fn sigma_minus_pieri(i: u32, u: &ExteriorElement) -> ExteriorElement {
    let mut out = ExteriorElement::zero(u.r, u.n);
    for (w, c) in u.terms() {
        for mu in pieri_down(&w.to_partition(), i) {
            out.add_term(WedgeWord::from_partition(&mu, u.r).expect("fits"), c.clone());
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct BosonFermionMismatch {
    pub partition: Partition,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BosonFermionReport {
    pub r: usize,
    pub n: usize,
    pub cut: u32,
    /// Number of `λ ∈ P_{r,n}` with `|λ| ≤ cut` compared.
    pub compared: usize,
    pub pass: bool,
    pub mismatches: Vec<BosonFermionMismatch>,
}

/// Compares `σ_+(z_1) ⋯ σ_+(z_r) X^r(0)` with `Σ_λ s_λ(z_1..z_r) X^r(λ)` through
/// total degree `cut`; each `σ_+(z_j)` is expanded to order `cut` in `z_j`.
pub fn boson_fermion_check(r: usize, n: usize, cut: u32) -> Result<BosonFermionReport> {
    if r > n || cut as usize > r * (n - r) {
        return Err(Error::Invariant(format!(
            "cut {cut} outside 0..={} for ⋀^{r} V_{n}",
            r * n.saturating_sub(r)
        )));
    }
    let vacuum = ExteriorElement::basis(&Partition::empty(), r, n)?;
    let mut got: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    let mut exps = vec![0u32; r];
    loop {
        // σ_{a_1} ⋯ σ_{a_r} X^r(0), rightmost factor first
        let mut v = vacuum.clone();
        for &a in exps.iter().rev() {
            v = sigma_plus(a, &v);
        }
        for (w, c) in v.terms() {
            let lambda = w.to_partition();
            got.entry(lambda)
                .or_insert_with(|| SymPoly::zero(r))
                .add_term(exps.clone(), to_integer(c, "wedge coefficient")?);
        }
        // odometer over 0..=cut in each variable
        let mut k = 0;
        while k < r && exps[k] == cut {
            exps[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
        exps[k] += 1;
    }
    let mut mismatches = Vec::new();
    let mut compared = 0;
    for lambda in partitions_in_rectangle(r as u32, (n - r) as u32) {
        if lambda.weight() > cut {
            continue;
        }
        compared += 1;
        let expected = schur_z(&lambda, r);
        let observed = got.get(&lambda).cloned().unwrap_or_else(|| SymPoly::zero(r));
        if observed != expected {
            mismatches.push(BosonFermionMismatch {
                partition: lambda,
                got: observed.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    // λ of weight > cut only receive monomials of total degree > cut, which are
    // outside the compared range; anything lighter must match exactly
    Ok(BosonFermionReport {
        r,
        n,
        cut,
        compared,
        pass: mismatches.is_empty(),
        mismatches,
    })
}

/// Every check of the Schubert-derivation calculus on `⋀^r V_n` up to `order`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DerivationSuiteReport {
    pub r: usize,
    pub n: usize,
    pub order: u32,
    pub pieri_equals_exponential: bool,
    pub minus_equals_dual_pieri: bool,
    pub leibniz: bool,
    pub adjoint: bool,
    pub inverse_series: bool,
    pub failures: Vec<String>,
}

impl DerivationSuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive checks on basis words of `⋀^r V_n` for orders `0..=order`.
///
/// The Leibniz rule is checked on `u ∧ v` for basis words `u ∈ ⋀^a`, `v ∈ ⋀^{r-a}`.
pub fn derivation_suite(r: usize, n: usize, order: u32) -> DerivationSuiteReport {
    let mut failures = Vec::new();
    let basis = ExteriorElement::basis_elements(r, n);

    let mut pieri_ok = true;
    let mut minus_ok = true;
    let mut inverse_ok = true;
    for u in &basis {
        let plus = sigma_plus_series(u, order as usize);
        for i in 0..=order {
            if sigma_plus(i, u) != plus[i as usize] {
                pieri_ok = false;
                failures.push(format!("σ_{i} Pieri vs exponential on {u}"));
            }
            if sigma_minus(i, u) != sigma_minus_pieri(i, u) {
                minus_ok = false;
                failures.push(format!("σ_-{i} exponential vs dual Pieri on {u}"));
            }
            // Σ_k [z^k] σ̄_+ · σ_{i-k} = δ_{i0}
            let mut sum = ExteriorElement::zero(r, n);
            for k in 0..=i {
                let inner = sigma_plus(i - k, u);
                let coeff = plethystic_series(&inner, k as usize, 1, -1).pop().unwrap();
                sum = sum.add(&coeff);
            }
            let expected = if i == 0 { u.clone() } else { ExteriorElement::zero(r, n) };
            if sum != expected {
                inverse_ok = false;
                failures.push(format!("σ_+ σ̄_+ ≠ id at order {i} on {u}"));
            }
        }
    }

    let mut adjoint_ok = true;
    for i in 0..=order {
        for u in &basis {
            let lowered = sigma_minus(i, u);
            for v in &basis {
                if lowered.inner(v) != u.inner(&sigma_plus(i, v)) {
                    adjoint_ok = false;
                    failures.push(format!("<σ_-{i} {u}, {v}> ≠ <{u}, σ_{i} {v}>"));
                }
            }
        }
    }

    let mut leibniz_ok = true;
    for a in 1..r {
        let left = ExteriorElement::basis_elements(a, n);
        let right = ExteriorElement::basis_elements(r - a, n);
        for u in &left {
            for v in &right {
                let uv = u.wedge(v);
                for i in 0..=order {
                    for (name, op) in [
                        ("σ_+", sigma_plus as fn(u32, &ExteriorElement) -> ExteriorElement),
                        ("σ_-", sigma_minus),
                    ] {
                        let lhs = op(i, &uv);
                        let mut rhs = ExteriorElement::zero(r, n);
                        for k in 0..=i {
                            rhs = rhs.add(&op(k, u).wedge(&op(i - k, v)));
                        }
                        if lhs != rhs {
                            leibniz_ok = false;
                            failures.push(format!("{name} Leibniz at order {i} on {u} ∧ {v}"));
                        }
                    }
                }
            }
        }
    }

    DerivationSuiteReport {
        r,
        n,
        order,
        pieri_equals_exponential: pieri_ok,
        minus_equals_dual_pieri: minus_ok,
        leibniz: leibniz_ok,
        adjoint: adjoint_ok,
        inverse_series: inverse_ok,
        failures,
    }
}
