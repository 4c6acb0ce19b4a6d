//! Division-free determinants over commutative rings.
//!
//! The Laplace expansion is organised as a dynamic program over the set of
//! columns already consumed by the first rows, so shared minors are summed
//! once. Jacobi-Trudi matrices have a staircase of zeros in the upper right,
//! which keeps the number of reachable column sets far below `2^n`.

use std::collections::BTreeMap;

/// Minimal commutative ring interface needed by [`det_dp`].
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// Determinant of the `n x n` matrix whose entries are produced by `entry(row, col)`.
///
/// `entry` returns `None` for structural zeros. The empty matrix has determinant one.
pub fn det_dp<R, F>(n: usize, entry: F) -> R
where
    R: Ring,
    F: Fn(usize, usize) -> Option<R>,
{
    assert!(n <= 64, "determinant dimension {n} too large");
    let cells: Vec<Vec<Option<R>>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j).filter(|e| !e.is_zero())).collect())
        .collect();
    // state: bitmask of used columns -> signed partial sum
    let mut states: BTreeMap<u64, R> = BTreeMap::new();
    states.insert(0, R::one());
    for row_cells in &cells {
        let mut next: BTreeMap<u64, R> = BTreeMap::new();
        for (mask, partial) in &states {
            for (col, cell) in row_cells.iter().enumerate() {
                let Some(value) = cell else { continue };
                let bit = 1u64 << col;
                if mask & bit != 0 {
                    continue;
                }
                // inversions against earlier rows: used columns to the right of `col`
                let above = (mask >> col).count_ones();
                let mut term = partial.mul(value);
                if above % 2 == 1 {
                    term = term.neg();
                }
                let slot = next.entry(mask | bit).or_insert_with(R::zero);
                *slot = slot.add(&term);
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
        if states.is_empty() {
            return R::zero();
        }
    }
    states.into_values().next().unwrap_or_else(R::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq)]
    struct Int(i64);

    impl Ring for Int {
        fn zero() -> Self {
            Int(0)
        }
        fn one() -> Self {
            Int(1)
        }
        fn is_zero(&self) -> bool {
            self.0 == 0
        }
        fn add(&self, o: &Self) -> Self {
            Int(self.0 + o.0)
        }
        fn neg(&self) -> Self {
            Int(-self.0)
        }
        fn mul(&self, o: &Self) -> Self {
            Int(self.0 * o.0)
        }
    }

    fn permutation_det(m: &[Vec<i64>]) -> i64 {
        fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>) -> i64 {
            let n = m.len();
            if row == n {
                let inversions = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| perm[a] > perm[b])
                    .count();
                let prod: i64 = (0..n).map(|i| m[i][perm[i]]).product();
                return if inversions % 2 == 0 { prod } else { -prod };
            }
            let mut total = 0;
            for c in 0..n {
                if !used[c] {
                    used[c] = true;
                    perm.push(c);
                    total += rec(m, row + 1, used, perm);
                    perm.pop();
                    used[c] = false;
                }
            }
            total
        }
        rec(m, 0, &mut vec![false; m.len()], &mut Vec::new())
    }

    #[test]
    fn empty_matrix_is_one() {
        assert_eq!(det_dp::<Int, _>(0, |_, _| None), Int(1));
    }

    #[test]
    fn matches_permutation_expansion() {
        let mats = vec![
            vec![vec![2, -1], vec![3, 4]],
            vec![vec![0, 2, 1], vec![1, 1, 0], vec![3, 0, 1]],
            vec![
                vec![1, 2, 0, 4],
                vec![-1, 0, 3, 1],
                vec![2, 5, 1, 0],
                vec![0, 1, -2, 3],
            ],
            vec![vec![0, 1], vec![1, 0]],
        ];
        for m in mats {
            let n = m.len();
            let got = det_dp(n, |i, j| Some(Int(m[i][j])));
            assert_eq!(got.0, permutation_det(&m), "{m:?}");
        }
    }
}
