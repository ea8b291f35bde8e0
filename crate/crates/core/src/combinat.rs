//! Stirling numbers, Bernoulli numbers, power sums, binomials and factorials.
//!
//! Tables are filled on demand and shared process-wide. Readers take a shared
//! lock; a miss upgrades to the exclusive lock and grows the table to at
//! least twice its size. Rows, once written, never change.
//!
//! **Bernoulli convention:** [`bernoulli`] returns `B₁ = +1/2`, so that
//! `Σ_{j=0}^{N} jⁱ = (1/(i+1)) Σ_j C(i+1, j) B_j N^{i+1-j}`. The other
//! common convention `B₁ = -1/2` is available as [`bernoulli_minus`]; it is the
//! one that makes `Σ_{j=0}^{N-1} jⁱ = (1/(i+1)) Σ_j C(i+1, j) B⁻_j N^{i+1-j}`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{q, Q};

/// Triangular table `rows[n][k]`, `0 ≤ k ≤ n`, grown by a row recurrence.
struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    next_row: fn(usize, &[BigInt]) -> Vec<BigInt>,
}

impl Triangle {
    const fn new(next_row: fn(usize, &[BigInt]) -> Vec<BigInt>) -> Self {
        Triangle { rows: RwLock::new(Vec::new()), next_row }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        {
            let rows = self.rows.read().unwrap();
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().unwrap();
        let target = (n + 1).max(2 * rows.len()).max(16);
        while rows.len() < target {
            let row = match rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => (self.next_row)(rows.len() - 1, prev),
            };
            rows.push(row);
        }
        rows[n][k].clone()
    }
}

// s(n+1, k) = s(n, k-1) - n s(n, k)
fn stirling_first_row(n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    let nn = BigInt::from(n);
    (0..=n + 1)
        .map(|k| {
            let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
            let here = prev.get(k).map(|v| &nn * v).unwrap_or_default();
            left - here
        })
        .collect()
}

// S(n+1, k) = S(n, k-1) + k S(n, k)
fn stirling_second_row(_n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    (0..=prev.len())
        .map(|k| {
            let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
            let here = prev.get(k).map(|v| BigInt::from(k) * v).unwrap_or_default();
            left + here
        })
        .collect()
}

// row n of Pascal's triangle from row n-1
fn pascal_row(_n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    (0..=prev.len())
        .map(|k| {
            let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
            left + prev.get(k).cloned().unwrap_or_default()
        })
        .collect()
}

static STIRLING_FIRST: Triangle = Triangle::new(stirling_first_row);
static STIRLING_SECOND: Triangle = Triangle::new(stirling_second_row);
static PASCAL: Triangle = Triangle::new(pascal_row);
static BERNOULLI: RwLock<Vec<Q>> = RwLock::new(Vec::new());
static FACTORIAL: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// Signed Stirling number of the first kind: `Σ_k s(n,k) xᵏ = x(x-1)⋯(x-n+1)`.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    STIRLING_FIRST.get(n, k)
}

/// `|s(n, k)|`
pub fn stirling_first_unsigned(n: usize, k: usize) -> BigInt {
    stirling_first(n, k).abs()
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    STIRLING_SECOND.get(n, k)
}

/// `C(n, k)` for nonnegative `n`.
pub fn binomial_usize(n: usize, k: usize) -> BigInt {
    PASCAL.get(n, k)
}

pub fn factorial(n: usize) -> BigInt {
    {
        let t = FACTORIAL.read().unwrap();
        if let Some(v) = t.get(n) {
            return v.clone();
        }
    }
    let mut t = FACTORIAL.write().unwrap();
    if t.is_empty() {
        t.push(BigInt::one());
    }
    let target = (n + 1).max(2 * t.len());
    while t.len() < target {
        let next = t.last().unwrap() * BigInt::from(t.len());
        t.push(next);
    }
    t[n].clone()
}

/// `n!` as a rational.
pub fn factorial_q(n: usize) -> Q {
    Q::from_integer(factorial(n))
}

/// Bernoulli number with `B₁ = +1/2`.
///
/// Filled from `Σ_{i=0}^{j} C(j+1, i) Bᵢ = j + 1`.
pub fn bernoulli(j: usize) -> Q {
    {
        let t = BERNOULLI.read().unwrap();
        if let Some(v) = t.get(j) {
            return v.clone();
        }
    }
    let mut t = BERNOULLI.write().unwrap();
    let target = (j + 1).max(2 * t.len()).max(8);
    while t.len() < target {
        let m = t.len();
        let mut acc = q(m as i64 + 1);
        for (i, b) in t.iter().enumerate() {
            acc -= Q::from_integer(binomial_usize(m + 1, i)) * b;
        }
        t.push(acc / q(m as i64 + 1));
    }
    t[j].clone()
}

/// Bernoulli number with `B₁ = -1/2`, i.e. `(-1)ʲ B_j`.
pub fn bernoulli_minus(j: usize) -> Q {
    let b = bernoulli(j);
    if j % 2 == 1 {
        -b
    } else {
        b
    }
}

/// `Σ_{j=0}^{N} jⁱ` by direct summation.
pub fn power_sum_direct(n: u64, i: u32) -> BigInt {
    (1..=n).map(|j| num_traits::pow(BigInt::from(j), i as usize)).sum()
}

/// `Σ_{j=0}^{N} jⁱ` by Faulhaber's formula.
pub fn power_sum_faulhaber(n: &BigInt, i: u32) -> BigInt {
    let i = i as usize;
    let nq = Q::from_integer(n.clone());
    let mut acc = Q::zero();
    for j in 0..=i {
        acc += Q::from_integer(binomial_usize(i + 1, j)) * bernoulli(j) * num_traits::pow(nq.clone(), i + 1 - j);
    }
    let v = acc / q(i as i64 + 1);
    assert!(v.is_integer(), "Faulhaber sum not integral");
    v.to_integer()
}

/// `Σ_{j=0}^{N} jⁱ`, computed both directly and through Faulhaber's formula;
/// the two must agree.
pub fn faulhaber_sum(n: u64, i: u32) -> BigInt {
    assert!(i >= 1, "faulhaber_sum needs i >= 1");
    let direct = power_sum_direct(n, i);
    let closed = power_sum_faulhaber(&BigInt::from(n), i);
    assert_eq!(direct, closed, "Faulhaber mismatch at N={n}, i={i}");
    direct
}

/// Generalized binomial `a(a-1)⋯(a-b+1) / b!` for any integer `a`.
pub fn binomial(a: &BigInt, b: usize) -> BigInt {
    let num = falling_factorial(a, b);
    let (quot, rem) = num.div_rem(&factorial(b));
    debug_assert!(rem.is_zero());
    quot
}

/// `a(a-1)⋯(a-b+1)`, empty product 1.
pub fn falling_factorial(a: &BigInt, b: usize) -> BigInt {
    (0..b).fold(BigInt::one(), |acc, i| acc * (a - BigInt::from(i)))
}

/// Rational generalized binomial `a(a-1)⋯(a-b+1)/b!` for rational `a`.
pub fn binomial_q(a: &Q, b: usize) -> Q {
    let mut acc = Q::one();
    for i in 0..b {
        acc *= a - q(i as i64);
    }
    acc / factorial_q(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_first(4, 2), BigInt::from(11));
        assert_eq!(stirling_first(6, 5), BigInt::from(-15));
        assert_eq!(stirling_first(9, 6), BigInt::from(-4536));
        assert_eq!(stirling_first(11, 10), BigInt::from(-55));
        assert_eq!(stirling_first(0, 0), BigInt::one());
        assert_eq!(stirling_first(5, 0), BigInt::zero());
        assert_eq!(stirling_first(3, 7), BigInt::zero());
        assert_eq!(stirling_first_unsigned(6, 5), BigInt::from(15));
        for n in 0..30 {
            assert_eq!(stirling_first(n, n), BigInt::one());
            assert_eq!(stirling_second(n, n), BigInt::one());
            assert_eq!(stirling_second(n, n + 1), BigInt::zero());
        }
        assert_eq!(stirling_second(7, 4), BigInt::from(350));
        assert_eq!(stirling_second(12, 4), BigInt::from(611501));
        assert_eq!(stirling_second(11, 3), BigInt::from(28501));
        assert_eq!(stirling_second(10, 3), BigInt::from(9330));
        assert_eq!(stirling_second(0, 0), BigInt::one());
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), q(1));
        assert_eq!(bernoulli(1), qf(1, 2));
        assert_eq!(bernoulli(2), qf(1, 6));
        assert_eq!(bernoulli(4), qf(-1, 30));
        assert_eq!(bernoulli(12), qf(-691, 2730));
        assert_eq!(bernoulli_minus(1), qf(-1, 2));
        for j in (3..60).step_by(2) {
            assert!(bernoulli(j).is_zero());
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(faulhaber_sum(3, 2), BigInt::from(14));
        assert_eq!(faulhaber_sum(0, 5), BigInt::zero());
        for n in 0..50u64 {
            assert_eq!(faulhaber_sum(n, 1), BigInt::from(n * (n + 1) / 2));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial(&BigInt::from(-1), 3), BigInt::from(-1));
        assert_eq!(binomial(&BigInt::from(6), 2), BigInt::from(15));
        assert_eq!(binomial(&BigInt::from(3), 5), BigInt::zero());
        assert_eq!(binomial(&BigInt::from(7), 0), BigInt::one());
        assert_eq!(binomial_usize(10, 3), BigInt::from(120));
        assert_eq!(binomial_q(&qf(1, 2), 2), qf(-1, 8));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }
}
