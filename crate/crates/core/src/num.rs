//! Exact rational helpers shared by every module.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn factorial_q(n: u32) -> Q {
    Q::from_integer(BigInt::from(factorial(n)))
}

/// Renders a rational as `p/q`, or `n` when integral.
pub fn format_q(value: &Q) -> String {
    value.to_string()
}

pub fn parse_q(text: &str) -> Result<Q> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Converts an integral rational to an unsigned integer, failing otherwise.
pub fn to_natural(value: &Q, what: &str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Invariant(format!(
            "{what} should be a nonnegative integer, got {value}"
        )));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

pub fn to_integer(value: &Q, what: &str) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::Invariant(format!(
            "{what} should be an integer, got {value}"
        )));
    }
    Ok(value.to_integer())
}

pub fn small(value: &BigUint) -> Option<u64> {
    value.to_u64()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det_q(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &p;
            let (upper, lower) = m.split_at_mut(row);
            for (target, pivot_entry) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * pivot_entry;
            }
        }
    }
    det
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn inverse_q(mut m: Vec<Vec<Q>>) -> Result<Vec<Vec<Q>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Invariant("singular matrix".into()))?;
        m.swap(pivot, col);
        inv.swap(pivot, col);
        let p = m[col][col].clone();
        for k in 0..n {
            m[col][k] /= &p;
            inv[col][k] /= &p;
        }
        for row in 0..n {
            if row == col || m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone();
            for k in 0..n {
                let a = &factor * &m[col][k];
                m[row][k] -= a;
                let b = &factor * &inv[col][k];
                inv[row][k] -= b;
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for text in ["0", "7", "-3", "1/240", "-5/6"] {
            assert_eq!(format_q(&parse_q(text).unwrap()), text);
        }
        assert_eq!(parse_q("4/2").unwrap(), q(2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn factorials_are_exact() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(20).to_string(), "2432902008176640000");
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn gauss_determinant_and_inverse() {
        let m = vec![
            vec![q(0), q(2), q(1)],
            vec![q(1), q(1), q(0)],
            vec![q(3), q(0), q(1)],
        ];
        // 0*(1) - 2*(1) + 1*(-3) = -5
        assert_eq!(det_q(m.clone()), q(-5));
        let inv = inverse_q(m.clone()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: Q = (0..3).map(|k| &m[i][k] * &inv[k][j]).sum();
                assert_eq!(s, if i == j { q(1) } else { q(0) });
            }
        }
        assert!(inverse_q(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).is_err());
    }
}
