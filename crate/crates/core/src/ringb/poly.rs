use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::det::Ring;
use crate::error::{Error, Result};
use crate::num::{format_q, parse_q, Q};

/// Exponent vector over `x_1, x_2, ...`, kept without trailing zeros.
///
/// Ordered by weighted degree `Σ i·e_i`, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `x_var^power` with a 1-based variable index.
    pub fn var(var: usize, power: u32) -> Self {
        assert!(var >= 1, "variables are 1-based");
        let mut exps = vec![0; var];
        exps[var - 1] = power;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of the 1-based variable `var`.
    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var - 1).copied().unwrap_or(0)
    }

    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut exps = self.0.clone();
        for (e, &d) in exps.iter_mut().zip(&other.0) {
            *e = e.checked_sub(d)?;
        }
        Some(Monomial::new(exps))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree()
            .cmp(&other.weighted_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn render_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, symbol: &str) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        write!(f, "{symbol}{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes `Σ coef * monomial` from the largest monomial down.
pub(crate) fn render_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, symbol: &str) -> fmt::Result
where
    I: DoubleEndedIterator<Item = (&'a Monomial, &'a Q)>,
{
    let mut first = true;
    for (m, c) in terms.rev() {
        let magnitude = if first {
            format_q(c)
        } else if c.is_negative() {
            f.write_str(" - ")?;
            format_q(&-c)
        } else {
            f.write_str(" + ")?;
            format_q(c)
        };
        first = false;
        f.write_str(&magnitude)?;
        if !m.is_one() {
            f.write_str(" * ")?;
            render_monomial(f, m, symbol)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Sparse polynomial in `x_1..x_N` with exact rational coefficients; `x_i` has weight `i`.
///
/// Equality compares terms only; `N` is the declared variable count.
#[derive(Clone, Debug, Default)]
pub struct WeightedPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl PartialEq for WeightedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for WeightedPolynomial {}

impl WeightedPolynomial {
    pub fn zero(nvars: usize) -> Self {
        WeightedPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Q, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn monomial(m: Monomial, c: Q, nvars: usize) -> Self {
        let mut p = Self::zero(nvars.max(m.nvars()));
        p.add_term(m, c);
        p
    }

    /// `x_var` as a polynomial.
    pub fn var(var: usize, nvars: usize) -> Self {
        Self::monomial(Monomial::var(var, 1), Q::one(), nvars)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(terms: I, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = nvars.max(self.used_vars());
        self
    }

    /// Highest variable index that actually occurs.
    pub fn used_vars(&self) -> usize {
        self.terms.keys().map(Monomial::nvars).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.nvars());
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn max_weighted_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::weighted_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::weighted_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Weighted-homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<u32, WeightedPolynomial> {
        let mut out: BTreeMap<u32, WeightedPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree())
                .or_insert_with(|| Self::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        WeightedPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Q::one(), self.nvars), |acc, _| &acc * self)
    }

    /// Iterated partial derivative `∂^order / ∂x_var^order` (1-based `var`).
    pub fn partial_derivative(&self, var: usize, order: u32) -> Self {
        assert!(var >= 1, "variables are 1-based");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e < order {
                continue;
            }
            let falling: u64 = (0..order).map(|k| (e - k) as u64).product();
            let lowered = m.div(&Monomial::var(var, order)).expect("exponent checked");
            out.add_term(lowered, c * Q::from_integer(falling.into()));
        }
        out
    }

    /// Drops every term in which `var` has exponent above `max`.
    pub fn truncate_var(&self, var: usize, max: u32) -> Self {
        WeightedPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn add(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn sub(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn neg(self) -> WeightedPolynomial {
        WeightedPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &WeightedPolynomial {
    type Output = WeightedPolynomial;

    fn mul(self, rhs: &WeightedPolynomial) -> WeightedPolynomial {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Q::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        WeightedPolynomial {
            nvars: self.nvars.max(rhs.nvars),
            terms: acc,
        }
    }
}

impl Ring for WeightedPolynomial {
    fn zero() -> Self {
        WeightedPolynomial::zero(0)
    }
    fn one() -> Self {
        WeightedPolynomial::constant(Q::one(), 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, self.terms.iter(), "x")
    }
}

/// Parses the text rendering, e.g. `1/2 * x1^2 - x2 + 3`.
///
/// A term is an optional rational coefficient followed by variables `x<k>` or
/// `x<k>^<e>`, separated by whitespace or `*`.
impl FromStr for WeightedPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut pending_sign = false;
        for ch in s.chars() {
            if ch == '+' || ch == '-' {
                if !current.trim().is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = false;
                }
                current.clear();
                negative ^= ch == '-';
                pending_sign = true;
            } else {
                if !ch.is_whitespace() {
                    pending_sign = false;
                }
                current.push(ch);
            }
        }
        if !current.trim().is_empty() {
            terms.push((negative, current));
        } else if pending_sign {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        if terms.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = WeightedPolynomial::zero(0);
        for (negative, text) in terms {
            let (m, c) = parse_term(&text)?;
            poly.add_term(m, if negative { -c } else { c });
        }
        Ok(poly)
    }
}

fn parse_term(text: &str) -> Result<(Monomial, Q)> {
    let mut coeff = Q::one();
    let mut mono = Monomial::one();
    let mut seen = false;
    for token in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        seen = true;
        if let Some(rest) = token.strip_prefix('x') {
            let (index, power) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let index: usize = index
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {token:?}")))?;
            let power: u32 = power
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {token:?}")))?;
            if index == 0 {
                return Err(Error::Parse("variables start at x1".into()));
            }
            mono = mono.mul(&Monomial::var(index, power));
        } else {
            coeff *= parse_q(token)?;
        }
    }
    if !seen {
        return Err(Error::Parse(format!("empty term in {text:?}")));
    }
    Ok((mono, coeff))
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: Vec<u32>,
    coef: String,
}

/// JSON form: `[{"exponents": [2], "coef": "1/2"}, ...]`, largest monomial first.
impl Serialize for WeightedPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm {
                exponents: m.exps().to_vec(),
                coef: format_q(c),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        let mut poly = WeightedPolynomial::zero(0);
        for t in terms {
            let c = parse_q(&t.coef).map_err(serde::de::Error::custom)?;
            poly.add_term(Monomial::new(t.exponents), c);
        }
        Ok(poly)
    }
}
