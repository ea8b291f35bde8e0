//! Dense univariate polynomials over a [`Ring`].
//!
//! The same type houses polynomials in `L` (Grothendieck classes), in `z`
//! (the `p` polynomials), in `ℓ` (Γ, Δ, β, σ, aₙ) and, nested, in two
//! variables. The aliases below only document intent.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::ring::{q, q_to_string, Ring, Q};

/// Dense polynomial; the coefficient vector never has trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial in the Lefschetz class `L`.
pub type LPoly = Poly<Q>;
/// Polynomial in `z`.
pub type ZPoly = Poly<Q>;
/// Polynomial in `ℓ` (also used for `k` and `x` families).
pub type EllPoly = Poly<Q>;
/// Polynomial in two variables: outer variable first (τ for `Fₘ(z, τ)`),
/// coefficients are polynomials in the inner variable.
pub type BiPoly = Poly<Poly<Q>>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `a + b·x`
    pub fn linear(a: R, b: R) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff_ref(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Drops every term of degree greater than `max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Self::new(self.coeffs.iter().take(max_deg + 1).cloned().collect())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.rmul(c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Product with every term above `max_deg` discarded.
    pub fn mul_trunc(&self, rhs: &Self, max_deg: usize) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(max_deg + 1);
        let mut out = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].radd(&a.rmul(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.rmul(x).radd(c))
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&q(i as i64)))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Q> {
    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&a| q(a)).collect())
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        Self::new(v.iter().map(|a| Q::from_integer(a.clone())).collect())
    }

    /// Value at an integer point.
    pub fn eval_int(&self, x: i64) -> Q {
        self.eval(&q(x))
    }

    /// Coefficients as integers, if all of them are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn all_coeffs_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[d].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * b;
                }
            }
            quot[i] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Division that must be exact; panics otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (quot, rem) = self.div_rem(divisor);
        assert!(rem.is_zero(), "inexact polynomial division");
        quot
    }

    /// Lagrange interpolation through `(xᵢ, yᵢ)` with distinct `xᵢ`.
    pub fn interpolate(points: &[(Q, Q)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::one();
            let mut denom = Q::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Self::linear(-xj, Q::one());
                    denom *= xi - xj;
                }
            }
            acc = &acc + &basis.scale(&(yi / denom));
        }
        acc
    }

    /// Renders with the given variable name, lowest degree first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mag.is_one() && i > 0 {
                out.push_str(&mono);
            } else if i == 0 {
                out.push_str(&q_to_string(&mag));
            } else if mag.is_integer() {
                out.push_str(&format!("{}{}", mag.numer(), mono));
            } else {
                out.push_str(&format!("({}){}", q_to_string(&mag), mono));
            }
        }
        out
    }

    /// Coefficient list as exact strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(q_to_string).collect()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn radd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn rsub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn rmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Q) -> Self {
        Poly::scale(self, c)
    }
    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.len() {
            1 => self.coeffs[0].try_inv().map(Poly::constant),
            _ => None,
        }
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a = a.radd(b);
        }
        Poly::new(v)
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).rsub(&rhs.coeff(i))).collect())
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        self.mul_trunc(rhs, self.coeffs.len() + rhs.coeffs.len() - 2)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::rneg).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
        impl<R: Ring> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl fmt::Display for Poly<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

/// `(a + b·x)` with rational `a`, `b`.
pub fn lin(a: Q, b: Q) -> Poly<Q> {
    Poly::linear(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qf;

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::<Q>::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[1, -1]);
        assert_eq!(&a * &b, Poly::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &b, Poly::from_ints(&[2]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), Poly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(a.pow(3).mul_trunc(&a, 1), Poly::from_ints(&[1, 4]));
    }

    #[test]
    fn division_and_composition() {
        let p = Poly::from_ints(&[-1, 0, 0, 1]);
        let (quot, rem) = p.div_rem(&Poly::from_ints(&[-1, 1]));
        assert_eq!(quot, Poly::from_ints(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (_, rem) = p.div_rem(&Poly::from_ints(&[1, 0, 1]));
        assert_eq!(rem, Poly::from_ints(&[-1, -1]));
        // (1 + x)^2 at x -> 1 - y
        let sq = Poly::from_ints(&[1, 2, 1]).compose(&Poly::from_ints(&[1, -1]));
        assert_eq!(sq, Poly::from_ints(&[4, -4, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::new(vec![qf(1, 3), q(-2), qf(5, 7), q(1)]);
        let pts: Vec<_> = (0..4).map(|i| (q(i), p.eval_int(i))).collect();
        assert_eq!(Poly::interpolate(&pts), p);
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![q(1), q(16), qf(-1, 2), q(1)]);
        assert_eq!(p.display("L"), "1 + 16L - (1/2)L^2 + L^3");
        assert!(Poly::from_ints(&[1, 16, 16, 1]).is_palindromic());
    }
}
