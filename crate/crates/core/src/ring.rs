//! Coefficient rings.
//!
//! Everything in this crate is exact. The scalar is [`Q`] (an arbitrary
//! precision rational); polynomials and truncated series over any [`Ring`]
//! are themselves rings, so they nest: a series in `z` whose coefficients are
//! polynomials in `L`, a polynomial in `z` whose coefficients are polynomials
//! in `ℓ`, and so on.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

static SCALAR_MULS: AtomicU64 = AtomicU64::new(0);

/// Number of scalar (rational) multiplications performed through the [`Ring`]
/// interface since the process started. Used by the benchmark table.
pub fn scalar_mul_count() -> u64 {
    SCALAR_MULS.load(Ordering::Relaxed)
}

/// A commutative ring with unit that is also a `Q`-algebra.
///
/// `zero()` and `one()` are context free. Truncated series implement them as
/// exact (untruncated) constants, which act neutrally under the min-order rule.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn radd(&self, rhs: &Self) -> Self;
    fn rsub(&self, rhs: &Self) -> Self;
    fn rmul(&self, rhs: &Self) -> Self;
    fn rneg(&self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Q) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    fn from_q(q: &Q) -> Self {
        Self::one().scale(q)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_q(&q(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn radd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn rsub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn rmul(&self, rhs: &Self) -> Self {
        SCALAR_MULS.fetch_add(1, Ordering::Relaxed);
        self * rhs
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Q) -> Self {
        SCALAR_MULS.fetch_add(1, Ordering::Relaxed);
        self * q
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_q(q: &Q) -> Self {
        q.clone()
    }
}

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Integer value of `x`, if it is one.
pub fn as_integer(x: &Q) -> Option<BigInt> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

/// `x` written as `"p"` or `"p/q"`.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn q_pow(base: &Q, exp: i64) -> Q {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        assert!(!Zero::is_zero(base), "zero to a negative power");
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

pub fn q_abs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_roundtrip() {
        for s in ["0", "-7", "3/4", "-97330536888617758406393/2248001455555215360000"] {
            assert_eq!(q_to_string(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("6/4").unwrap(), qf(3, 2));
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(q_pow(&q(2), -3), qf(1, 8));
        assert_eq!(q_pow(&qf(2, 3), 2), qf(4, 9));
        assert_eq!(q_pow(&q(5), 0), q(1));
    }
}
