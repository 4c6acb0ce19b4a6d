//! Integer partitions, Young-diagram combinatorics and the Pieri neighbour sets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::factorial;

/// Default weight cutoff for [`syt_count_bruteforce`].
pub const SYT_CUTOFF: u32 = 12;

/// A partition stored as its positive parts in weakly decreasing order.
///
/// The ordering is graded: lighter partitions come first and partitions of
/// equal weight are ordered lexicographically descending, so `(4)` precedes
/// `(3,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects increasing sequences.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part inside {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary nonnegative parts into canonical form.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` with 0-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    pub fn fits(&self, rows: u32, cols: u32) -> bool {
        self.len() <= rows as usize && self.largest() <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiplicity `m_k` of each part value `k = 1..=λ₁` (index 0 holds `m_1`).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.largest() as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Parts padded with zeros to length `r`.
    pub fn padded(&self, r: usize) -> Vec<u32> {
        (0..r.max(self.len())).map(|i| self.part(i)).collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let text: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Convenience constructor for tests and literals: `p(&[3, 2, 1])`.
///
/// Panics on a non-canonical sequence.
pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("canonical partition literal")
}

/// All partitions of `d`, lexicographically descending.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `r` parts, each at most `c`, in canonical order.
pub fn partitions_in_rectangle(r: u32, c: u32) -> Vec<Partition> {
    fn rec(rows_left: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: prefix.clone() });
        if rows_left == 0 {
            return;
        }
        for part in 1..=max {
            prefix.push(part);
            rec(rows_left - 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, c, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn require_fit(lambda: &Partition, r: u32, c: u32) -> Result<()> {
    if lambda.fits(r, c) {
        Ok(())
    } else {
        Err(Error::NotInRectangle {
            partition: lambda.clone(),
            rows: r,
            cols: c,
        })
    }
}

/// Complement of `λ` inside the `r x c` rectangle.
pub fn complement(lambda: &Partition, r: u32, c: u32) -> Result<Partition> {
    require_fit(lambda, r, c)?;
    let padded = lambda.padded(r as usize);
    let parts = (0..r as usize).map(|i| c - padded[r as usize - 1 - i]).collect();
    Ok(Partition::new(parts).expect("complement is canonical"))
}

/// Hook length of every box, row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookGrid {
    pub rows: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn product(&self) -> BigUint {
        self.rows
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * h)
    }
}

pub fn hook_lengths(lambda: &Partition) -> HookGrid {
    let conj = lambda.conjugate();
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row_len)| {
            (0..row_len)
                .map(|j| {
                    let arm = row_len - j - 1;
                    let leg = conj.part(j as usize) - i as u32 - 1;
                    arm + leg + 1
                })
                .collect()
        })
        .collect();
    HookGrid { rows }
}

/// `|λ|! / Π h(x)`.
pub fn degree_hook(lambda: &Partition) -> BigUint {
    let numerator = factorial(lambda.weight());
    let hooks = hook_lengths(lambda).product();
    let (quotient, remainder) = numerator.div_rem(&hooks);
    assert!(
        remainder.is_zero(),
        "hook product {hooks} does not divide {}!",
        lambda.weight()
    );
    quotient
}

/// Counts standard Young tableaux of shape `λ` by exhaustive backtracking.
///
/// Entries `1..=|λ|` are placed in increasing order; a box may receive the next
/// entry once the boxes to its left and above are filled, which is exactly the
/// row- and column-strictness condition.
pub fn syt_count_bruteforce(lambda: &Partition, cutoff: u32) -> Result<BigUint> {
    if lambda.weight() > cutoff {
        return Err(Error::CutoffExceeded {
            weight: lambda.weight(),
            cutoff,
        });
    }
    fn place(shape: &[u32], filled: &mut [u32], remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut count = 0;
        for row in 0..shape.len() {
            let col = filled[row];
            let room = col < shape[row];
            let supported = row == 0 || filled[row - 1] > col;
            if room && supported {
                filled[row] += 1;
                count += place(shape, filled, remaining - 1);
                filled[row] -= 1;
            }
        }
        count
    }
    let mut filled = vec![0u32; lambda.len()];
    Ok(BigUint::from(place(lambda.parts(), &mut filled, lambda.weight())))
}

/// `PF_i(λ)`: partitions obtained from `λ` by adding a horizontal strip of `i` boxes.
///
/// With `cap = Some((r, c))`, results outside the `r x c` rectangle are dropped.
pub fn pieri_up(lambda: &Partition, i: u32, cap: Option<(u32, u32)>) -> Vec<Partition> {
    // μ_1 >= λ_1, and λ_{k-1} >= μ_k >= λ_k for k >= 2 (one extra row allowed)
    fn rec(lambda: &Partition, row: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > lambda.len() {
            if budget == 0 {
                out.push(Partition::new(prefix.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let low = lambda.part(row);
        let high = if row == 0 {
            low + budget
        } else {
            lambda.part(row - 1).min(low + budget)
        };
        for value in (low..=high).rev() {
            prefix.push(value);
            rec(lambda, row + 1, budget - (value - low), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, i, &mut Vec::new(), &mut out);
    if let Some((r, c)) = cap {
        out.retain(|mu| mu.fits(r, c));
    }
    out.sort();
    out
}

/// `PF_{-i}(λ)`: partitions obtained from `λ` by removing a horizontal strip of `i` boxes.
pub fn pieri_down(lambda: &Partition, i: u32) -> Vec<Partition> {
    // λ_k >= μ_k >= λ_{k+1}
    fn rec(lambda: &Partition, row: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            if budget == 0 {
                out.push(Partition::new(prefix.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let high = lambda.part(row);
        let low = lambda.part(row + 1).max(high.saturating_sub(budget));
        for value in (low..=high).rev() {
            prefix.push(value);
            rec(lambda, row + 1, budget - (high - value), prefix, out);
            prefix.pop();
        }
    }
    if i > lambda.weight() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(lambda, 0, i, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Partition function by Euler's pentagonal recurrence, independent of enumeration.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                table[m] += sign * table[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    table[m] += sign * table[m - g2];
                }
                k += 1;
            }
        }
        table[n] as u64
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn enumerates_partitions_of_small_weights() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        for d in 0..=15 {
            assert_eq!(partitions_of(d).len() as u64, partition_count(d as usize), "p({d})");
        }
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn rectangle_enumeration() {
        assert_eq!(partitions_in_rectangle(1, 1), vec![p(&[]), p(&[1])]);
        assert_eq!(
            partitions_in_rectangle(2, 2),
            vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2])]
        );
        assert_eq!(partitions_in_rectangle(3, 0), vec![p(&[])]);
        for r in 1..=4 {
            for c in 0..=4 {
                assert_eq!(
                    partitions_in_rectangle(r, c).len() as u64,
                    binomial((r + c) as u64, r as u64)
                );
            }
        }
    }

    #[test]
    fn complements_from_the_text() {
        assert_eq!(complement(&p(&[3, 3, 2, 1]), 4, 3).unwrap(), p(&[2, 1]));
        assert_eq!(complement(&p(&[3, 3, 2, 1]), 5, 4).unwrap(), p(&[4, 3, 2, 1, 1]));
        assert_eq!(complement(&p(&[]), 1, 1).unwrap(), p(&[1]));
        assert!(matches!(
            complement(&p(&[3, 3, 2, 1]), 3, 3),
            Err(Error::NotInRectangle { .. })
        ));
        assert!(complement(&p(&[4]), 2, 3).is_err());
    }

    #[test]
    fn complement_is_a_weight_complementing_involution() {
        for r in 1..=4 {
            for c in 0..=4 {
                for lambda in partitions_in_rectangle(r, c) {
                    let comp = complement(&lambda, r, c).unwrap();
                    assert_eq!(lambda.weight() + comp.weight(), r * c);
                    assert_eq!(complement(&comp, r, c).unwrap(), lambda);
                }
            }
        }
    }

    #[test]
    fn hook_grids() {
        assert_eq!(hook_lengths(&p(&[1])).rows, vec![vec![1]]);
        assert_eq!(hook_lengths(&p(&[2, 2])).rows, vec![vec![3, 2], vec![2, 1]]);
        assert_eq!(
            hook_lengths(&p(&[3, 2, 1])).rows,
            vec![vec![5, 3, 1], vec![3, 1], vec![1]]
        );
    }

    #[test]
    fn hook_grid_matches_arm_leg_definition() {
        for d in 0..=9 {
            for lambda in partitions_of(d) {
                let grid = hook_lengths(&lambda);
                for (i, row) in grid.rows.iter().enumerate() {
                    assert_eq!(row.len() as u32, lambda.part(i));
                    for (j, &h) in row.iter().enumerate() {
                        let arm = lambda.part(i) - (j as u32 + 1);
                        let leg = (i + 1..lambda.len())
                            .filter(|&k| lambda.part(k) > j as u32)
                            .count() as u32;
                        assert_eq!(h, arm + leg + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_by_hooks() {
        assert_eq!(degree_hook(&p(&[2, 2])), big(2));
        assert_eq!(degree_hook(&p(&[3, 2, 1])), big(16));
        assert_eq!(degree_hook(&p(&[])), big(1));
        assert_eq!(degree_hook(&p(&[3, 2, 2])), big(21));
    }

    #[test]
    fn syt_bruteforce_counts() {
        assert_eq!(syt_count_bruteforce(&p(&[1, 1, 1]), SYT_CUTOFF).unwrap(), big(1));
        assert_eq!(syt_count_bruteforce(&p(&[2, 2]), SYT_CUTOFF).unwrap(), big(2));
        assert_eq!(syt_count_bruteforce(&p(&[2, 1]), SYT_CUTOFF).unwrap(), big(2));
        assert_eq!(syt_count_bruteforce(&p(&[]), SYT_CUTOFF).unwrap(), big(1));
        assert_eq!(
            syt_count_bruteforce(&p(&[7, 6]), SYT_CUTOFF),
            Err(Error::CutoffExceeded { weight: 13, cutoff: 12 })
        );
        assert!(syt_count_bruteforce(&p(&[7, 6]), 13).is_ok());
    }

    #[test]
    fn hook_formula_agrees_with_bruteforce() {
        for d in 0..=10 {
            for lambda in partitions_of(d) {
                assert_eq!(
                    degree_hook(&lambda),
                    syt_count_bruteforce(&lambda, SYT_CUTOFF).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_up(&p(&[1]), 0, None), vec![p(&[1])]);
        assert_eq!(pieri_up(&p(&[1]), 1, None), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(pieri_up(&p(&[1]), 2, None), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(pieri_up(&p(&[1]), 1, Some((1, 5))), vec![p(&[2])]);
        assert_eq!(pieri_up(&p(&[2, 2]), 1, Some((2, 2))), Vec::<Partition>::new());
        assert_eq!(pieri_down(&p(&[2, 2]), 1), vec![p(&[2, 1])]);
        assert_eq!(pieri_down(&p(&[1]), 1), vec![p(&[])]);
        assert_eq!(pieri_down(&p(&[2, 2]), 2), vec![p(&[2])]);
        assert_eq!(pieri_down(&p(&[1]), 2), Vec::<Partition>::new());
        for lambda in partitions_of(5) {
            assert_eq!(pieri_down(&lambda, 0), vec![lambda.clone()]);
            assert_eq!(pieri_up(&lambda, 0, None), vec![lambda.clone()]);
        }
    }

    fn is_horizontal_strip(big: &Partition, small: &Partition) -> bool {
        (0..big.len().max(small.len())).all(|k| big.part(k) >= small.part(k))
            && (1..big.len()).all(|k| small.part(k - 1) >= big.part(k))
    }

    #[test]
    fn pieri_up_matches_exhaustive_interlacing_filter() {
        for d in 0..=6 {
            for lambda in partitions_of(d) {
                for i in 0..=4 {
                    let expected: Vec<Partition> = partitions_of(d + i)
                        .into_iter()
                        .filter(|mu| is_horizontal_strip(mu, &lambda))
                        .collect();
                    assert_eq!(pieri_up(&lambda, i, None), expected, "{lambda} + {i}");
                }
            }
        }
    }

    #[test]
    fn pieri_duality() {
        for d in 0..=8 {
            for lambda in partitions_of(d) {
                for i in 0..=4 {
                    for mu in pieri_up(&lambda, i, None) {
                        assert!(pieri_down(&mu, i).contains(&lambda));
                    }
                    if i <= d {
                        for mu in partitions_of(d - i) {
                            let down = pieri_down(&lambda, i).contains(&mu);
                            let up = pieri_up(&mu, i, None).contains(&lambda);
                            assert_eq!(down, up, "{lambda} / {mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_box_additions_count_addable_corners() {
        for d in 0..=9 {
            for lambda in partitions_of(d) {
                let mut distinct = lambda.parts().to_vec();
                distinct.dedup();
                assert_eq!(pieri_up(&lambda, 1, None).len(), distinct.len() + 1);
            }
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "3,2,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2,2,0)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
    }

    #[test]
    fn canonical_order_is_graded_lex_descending() {
        let mut all: Vec<Partition> = (0..=4).rev().flat_map(partitions_of).collect();
        all.sort();
        let expected: Vec<Partition> = (0..=4).flat_map(partitions_of).collect();
        assert_eq!(all, expected);
    }

    fn arb_partition(max_weight: u32) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..=max_weight, 0..6).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn text_round_trip(lambda in arb_partition(9)) {
            prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
        }

        #[test]
        fn conjugation_is_an_involution(lambda in arb_partition(9)) {
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
            prop_assert_eq!(degree_hook(&lambda.conjugate()), degree_hook(&lambda));
        }
    }
}
